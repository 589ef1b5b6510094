import io
import json

import numpy as np
import pytest

from steering_analysis.cli import main
from steering_analysis.cli.serialization import assemblage_json, parse_assemblage
from steering_analysis.config import SUITE_CONFIG
from steering_analysis.models import Assemblage
from steering_analysis.pipeline import werner_assemblage


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _write(tmp_path, name, assemblage):
    path = tmp_path / name
    path.write_text(assemblage_json(assemblage), encoding='utf-8')
    return str(path)


def test_gen_is_deterministic(tmp_path, capsys):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["gen", "--kind", "random", "--params", "2,3,2", "--seed", "9", "--out", str(first)]) == 0
    assert main(["gen", "--kind", "random", "--params", "2,3,2", "--seed", "9", "--out", str(second)]) == 0

    text = first.read_text(encoding='utf-8')
    assert text == second.read_text(encoding='utf-8')
    assemblage = parse_assemblage(text)
    assert assemblage.shape == (2, 3, 2)
    assert assemblage_json(assemblage) + "\n" == text

    code, out, _ = _run(capsys, ["gen", "--kind", "werner", "--params", "0.75"])
    assert code == 0
    assert np.allclose(parse_assemblage(out).elements, werner_assemblage(0.75).elements)


@pytest.mark.parametrize("argv", [
    ["gen", "--kind", "werner", "--params", "1.5"],
    ["gen", "--kind", "random", "--params", "2,2"],
    ["gen", "--kind", "random", "--params", "13,2,2"],
    ["gen", "--kind", "bogus"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_one(capsys, argv):
    code, out, err = _run(capsys, argv)
    assert code == 1
    assert out == ""
    assert err


def test_check_lhs_exit_codes(tmp_path, capsys):
    feasible = _write(tmp_path, "low.json", werner_assemblage(0.5))
    code, out, _ = _run(capsys, ["check-lhs", feasible])
    payload = json.loads(out)
    assert code == 0
    assert payload["status"] == "feasible"
    assert len(payload["model"]["strategies"]) == 4

    steerable = _write(tmp_path, "high.json", werner_assemblage(0.9))
    code, out, _ = _run(capsys, ["check-lhs", steerable])
    assert code == 2
    assert json.loads(out)["status"] == "infeasible"
    assert "model" not in json.loads(out)


def test_malformed_documents(tmp_path, capsys):
    text = assemblage_json(werner_assemblage(1.0))
    truncated = tmp_path / "truncated.json"
    truncated.write_text(text[: len(text) // 3], encoding='utf-8')
    code, out, err = _run(capsys, ["check-lhs", str(truncated)])
    assert code == 1
    assert out == ""

    document = json.loads(text)
    document["elements"][1][0] = [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]
    document["elements"][1][1] = [[[0.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]
    signaling = tmp_path / "signaling.json"
    signaling.write_text(json.dumps(document), encoding='utf-8')
    code, _, err = _run(capsys, ["bounds", str(signaling)])
    assert code == 1
    assert "no_signaling" in err

    code, _, _ = _run(capsys, ["bounds", str(tmp_path / "missing.json")])
    assert code == 1


def test_rres_rejects_zero_outer_iterations(tmp_path, capsys):
    path = _write(tmp_path, "singlet.json", werner_assemblage(1.0))
    code, out, err = _run(capsys, ["rres", path, "--outer-iters", "0"])
    assert code == 1
    assert out == ""
    assert "ConfigError" in err


def test_distance_command(tmp_path, capsys):
    singlet = _write(tmp_path, "singlet.json", werner_assemblage(1.0))
    noise = _write(tmp_path, "noise.json", werner_assemblage(0.0))

    code, out, _ = _run(capsys, ["distance", singlet, singlet, "--restricted"])
    assert code == 0
    assert json.loads(out) == {"value": 0.0}

    code, out, _ = _run(capsys, ["distance", singlet, noise])
    assert code == 0
    restricted = json.loads(out)["value"]
    assert 0.0 < restricted <= 1.0

    code, first, _ = _run(capsys, ["distance", singlet, noise, "--seesaw", "4", "--seed", "2"])
    _, second, _ = _run(capsys, ["distance", singlet, noise, "--seesaw", "4", "--seed", "2"])
    payload = json.loads(first)
    assert code == 0
    assert first == second
    assert payload["lower_bound"] >= restricted - 1e-12
    assert payload["restricted_value"] == restricted

    code, _, _ = _run(capsys, ["distance", singlet, noise, "--seesaw", "-1"])
    assert code == 1


def test_bounds_command(tmp_path, capsys):
    path = _write(tmp_path, "singlet.json", werner_assemblage(1.0))
    code, out, _ = _run(capsys, ["bounds", path])
    payload = json.loads(out)

    assert code == 0
    assert payload["full"]["layers"][-1] == {"label": "log2|A|", "value": 1.0}
    assert payload["restricted"]["layers"][-1]["value"] == 1.0
    assert payload["restricted"]["value"] == pytest.approx(1.0, abs=1e-9)


def test_bounds_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(assemblage_json(werner_assemblage(0.3))))
    code, out, _ = _run(capsys, ["bounds", "-"])
    assert code == 0
    assert "restricted" in json.loads(out)


def test_suite_command_with_zero_trials(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, out, _ = _run(capsys, ["suite", "--seed", "4", "--trials", "0", "--out", str(out_path),
                                 "--log-dir", str(tmp_path / "logs")])
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert report["properties"] == []
    assert out_path.read_text(encoding='utf-8') == out
    assert list((tmp_path / "logs").glob("suite_report_*.json"))

    code, _, _ = _run(capsys, ["suite", "--trials", "-2"])
    assert code == 1


def test_suite_command_is_byte_identical(capsys, monkeypatch, tiny_suite_config):
    for key in ('light_trial_factor', 'solver_overrides', 'lhs_overrides'):
        monkeypatch.setitem(SUITE_CONFIG, key, tiny_suite_config[key])

    code, first, _ = _run(capsys, ["suite", "--seed", "6", "--trials", "1", "--threads", "1"])
    _, second, _ = _run(capsys, ["suite", "--seed", "6", "--trials", "1", "--threads", "2"])
    assert code == 0
    assert first == second
    report = json.loads(first)
    assert report["trials"] == 1
    assert report["properties"]


def test_unwritable_output_exits_one(tmp_path, capsys):
    blocker = tmp_path / "file.txt"
    blocker.write_text("x", encoding='utf-8')

    code, out, err = _run(capsys, ["gen", "--kind", "werner", "--params", "0.5",
                                   "--out", str(blocker / "out.json")])
    assert code == 1
    assert out == ""
    assert err

    code, _, err = _run(capsys, ["suite", "--trials", "0", "--log-dir", str(blocker / "logs")])
    assert code == 1
    assert err


def test_lhs_generated_document_is_feasible(tmp_path, capsys):
    path = tmp_path / "lhs.json"
    assert main(["gen", "--kind", "lhs", "--params", "2,2,2", "--seed", "1", "--out", str(path)]) == 0
    assemblage = parse_assemblage(path.read_text(encoding='utf-8'))
    assert isinstance(assemblage, Assemblage)

    code, out, _ = _run(capsys, ["check-lhs", str(path)])
    assert code == 0
    assert json.loads(out)["residual"] <= 1e-6
