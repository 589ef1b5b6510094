import json

import numpy as np
import pytest

from steering_analysis.cli.serialization import (
    DocumentError,
    assemblage_json,
    dumps,
    lhs_model_payload,
    parse_assemblage,
    parse_lhs_model,
)
from steering_analysis.config import CLI_CONFIG
from steering_analysis.core.assemblage import (
    apply_measurement_strategy,
    apply_restricted_1wlocc,
    assemblage_from_state,
    compose_restricted,
    depolarize,
    embed_cq,
    lhs_assemblage,
    lhs_shadow,
    mix_assemblages,
    relabel_outcomes,
)
from steering_analysis.core.errors import DimensionMismatchError, InvariantViolationError
from steering_analysis.models import Assemblage, Instrument, MeasurementStrategy, Povm, RestrictedOneWayLocc
from steering_analysis.pipeline import (
    random_assemblage,
    random_density,
    random_desk_shape,
    random_instrument,
    random_lhs_model,
    random_povm,
    random_restricted_op,
    werner_assemblage,
)


def test_werner_elements():
    singlet = werner_assemblage(1.0)
    assert singlet.shape == (2, 2, 2)
    assert np.allclose(singlet.elements[0, 0], np.diag([0.5, 0.0]))
    assert np.allclose(singlet.elements[0, 1], np.diag([0.0, 0.5]))
    assert np.allclose(singlet.elements[1, 0], 0.25 * np.array([[1.0, -1.0], [-1.0, 1.0]]))

    noise = werner_assemblage(0.0)
    assert np.allclose(noise.elements, np.eye(2) / 4.0)

    with pytest.raises(ValueError):
        werner_assemblage(1.5)


def test_invariant_names():
    good = np.diag([0.5, 0.0]), np.diag([0.0, 0.5])
    signaling = np.array([
        [good[0], good[1]],
        [np.diag([1.0, 0.0]), np.zeros((2, 2))],
    ])
    with pytest.raises(InvariantViolationError) as excinfo:
        Assemblage(signaling)
    assert excinfo.value.invariant == "no_signaling"

    negative = np.array([[np.diag([1.5, 0.0]), np.diag([-0.5, 0.0])]])
    with pytest.raises(InvariantViolationError) as excinfo:
        Assemblage(negative)
    assert excinfo.value.invariant == "psd"

    unnormalized = np.array([[np.diag([0.5, 0.0]), np.diag([0.0, 0.25])]])
    with pytest.raises(InvariantViolationError) as excinfo:
        Assemblage(unnormalized)
    assert excinfo.value.invariant == "normalization"

    with pytest.raises(DimensionMismatchError):
        Assemblage(np.zeros((2, 2, 2)))


def test_state_assemblage_no_signaling(rng):
    for shape in ((2, 2, 2), (3, 2, 2), (2, 3, 3)):
        a = random_assemblage(*shape, rng)
        assert a.shape == shape
        assert a.no_signaling_residual() <= 1e-12
        assert np.allclose(a.conditional_probs().sum(axis=1), 1.0)


def test_assemblage_from_state_dimension_checks(rng):
    rho = random_density(4, None, rng)
    with pytest.raises(DimensionMismatchError):
        assemblage_from_state(rho, (2, 2), [random_povm(2, 2, rng), random_povm(2, 3, rng)])
    with pytest.raises(DimensionMismatchError):
        assemblage_from_state(rho, (3, 2), [random_povm(3, 2, rng)])


def test_povm_and_instrument_validation(rng):
    with pytest.raises(InvariantViolationError):
        Povm(np.array([np.eye(2), np.eye(2)]))

    with pytest.raises(InvariantViolationError):
        Instrument.from_kraus_lists([[0.5 * np.eye(2)]])

    composed = Instrument.identity(2).compose(random_instrument(2, 2, 2, rng))
    assert composed.n_branches == 2
    assert np.allclose(sum(composed.branch_effect(z) for z in range(2)), np.eye(2))

    traced = Instrument.trace_out(3)
    assert traced.output_dim == 1
    assert np.allclose(traced.apply_sum(np.eye(3) / 3.0), [[1.0]])


def test_identity_strategy_matches_embedding(rng):
    a = random_assemblage(3, 2, 2, rng)
    p = np.array([0.2, 0.3, 0.5])
    embedded = embed_cq(a, p)
    measured = apply_measurement_strategy(a, MeasurementStrategy.trivial(a.dim_b, p))

    assert measured.register_names == ("X", "A", "Y")
    assert np.allclose(measured.blocks[..., 0, :, :], embedded.blocks, atol=1e-12)
    assert embedded.trace() == pytest.approx(1.0)
    assert np.allclose(embedded.marginal(["X"], keep_quantum=False).classical_distribution(), p)


def test_cq_state_matrix_consistency(rng):
    a = random_assemblage(2, 2, 2, rng)
    p = np.array([0.5, 0.5])
    rho = embed_cq(a, p)
    sigma = embed_cq(lhs_shadow(a), p)

    big_rho, big_sigma = rho.to_matrix(), sigma.to_matrix()
    w = np.linalg.eigvalsh(big_rho)
    w = w[w > 1e-14]
    assert rho.entropy() == pytest.approx(float(-np.sum(w * np.log2(w))), abs=1e-10)
    assert rho.trace_distance(sigma) == pytest.approx(
        0.5 * np.sum(np.abs(np.linalg.eigvalsh(big_rho - big_sigma))), abs=1e-12)


def test_identity_restricted_op(rng):
    a = random_assemblage(2, 3, 2, rng)
    op = RestrictedOneWayLocc.identity(2, 3, 2)
    assert np.allclose(apply_restricted_1wlocc(a, op).elements, a.elements, atol=1e-14)


def test_restricted_op_output_is_assemblage(rng):
    a = random_assemblage(2, 2, 3, rng)
    op = random_restricted_op(a.shape, rng, n_final_inputs=3, n_final_outcomes=2)
    out = apply_restricted_1wlocc(a, op)

    assert out.shape == (3, 2, 3)
    assert out.no_signaling_residual() <= 1e-10

    with pytest.raises(DimensionMismatchError):
        apply_restricted_1wlocc(a, op, n_final_inputs=2)


def test_restricted_composition(rng):
    a = random_assemblage(2, 2, 2, rng)
    first = random_restricted_op(a.shape, rng, n_final_inputs=3)
    second = random_restricted_op((3, 2, 2), rng, n_final_outcomes=3)

    sequential = apply_restricted_1wlocc(apply_restricted_1wlocc(a, first), second)
    composed = apply_restricted_1wlocc(a, compose_restricted(first, second))
    assert np.allclose(sequential.elements, composed.elements, atol=1e-10)


def test_mixing_and_relabeling(rng):
    a = random_assemblage(2, 3, 2, rng)
    shadow = lhs_shadow(a)

    assert np.allclose(depolarize(a, 1.0).elements, shadow.elements)
    assert np.allclose(depolarize(a, 0.0).elements, a.elements)
    half = mix_assemblages(a, shadow, 0.5)
    assert np.allclose(half.elements, 0.5 * (a.elements + shadow.elements))

    relabeled = relabel_outcomes(a, [2, 0, 1])
    assert np.allclose(relabeled.elements[:, 0], a.elements[:, 2])
    with pytest.raises(DimensionMismatchError):
        relabel_outcomes(a, [0, 0, 1])
    with pytest.raises(ValueError):
        mix_assemblages(a, shadow, 1.2)


def test_lhs_model_assemblage(rng):
    model = random_lhs_model(2, 2, 2, rng)
    a = lhs_assemblage(model)
    assert model.n_strategies == 4
    assert a.no_signaling_residual() <= 1e-12
    # 策略 (0, 1) 只贡献到 (x=0, a=0) 与 (x=1, a=1)
    assert model.strategies()[1].response == (0, 1)


def test_assemblage_document_round_trip(rng):
    a = random_assemblage(2, 3, 2, rng)
    text = assemblage_json(a)
    restored = parse_assemblage(text)

    assert np.array_equal(restored.elements, a.elements)
    assert assemblage_json(restored) == text


def test_random_documents_round_trip_bit_exact(rng):
    for i in range(1000):
        rank = None if i % 2 else int(rng.integers(1, 3))
        a = random_assemblage(*random_desk_shape(rng), rng, rank=rank)
        text = assemblage_json(a)
        restored = parse_assemblage(text)
        assert np.array_equal(restored.elements, a.elements)
        assert assemblage_json(restored) == text


def test_document_version_comes_from_config():
    document = werner_assemblage(1.0).to_dict()
    assert json.loads(assemblage_json(werner_assemblage(1.0)))["version"] == CLI_CONFIG['document_version']
    assert np.array_equal(parse_assemblage(dumps(document)).elements, werner_assemblage(1.0).elements)

    with pytest.raises(DocumentError):
        parse_assemblage(dumps({**document, "version": int(CLI_CONFIG['document_version'])}))


def test_assemblage_document_errors():
    text = assemblage_json(werner_assemblage(1.0))
    with pytest.raises(DocumentError):
        parse_assemblage(text[: len(text) // 2])

    with pytest.raises(DocumentError):
        parse_assemblage(dumps({"version": "1", "n_inputs": 2, "n_outcomes": 2, "dim_b": 2, "elements": []}))

    document = werner_assemblage(1.0).to_dict()
    with pytest.raises(DocumentError):
        parse_assemblage(dumps({**document, "version": "2"}))


def test_lhs_model_document_round_trip(rng):
    model = random_lhs_model(2, 2, 2, rng)
    payload = lhs_model_payload(model)
    assert payload["strategies"] == [[0, 0], [0, 1], [1, 0], [1, 1]]

    restored = parse_lhs_model(dumps(payload))
    assert np.array_equal(restored.sigmas, model.sigmas)

    shuffled = {**payload, "strategies": [[0, 1], [0, 0], [1, 0], [1, 1]]}
    with pytest.raises(DocumentError):
        parse_lhs_model(dumps(shuffled))
