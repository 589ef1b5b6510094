"""
性质测试管道

逐条执行各模块的不变量与定理检查，输出带符号余量的汇总报告。
每个试验的随机流由 (seed, 任务名, 试验序号) 决定，合并时按固定顺序排序，
因此报告与线程调度无关。
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from ..config import LHS_CONFIG, QUANTIFIER_CONFIG, SUITE_CONFIG
from ..core.assemblage import (
    apply_measurement_strategy,
    apply_restricted_1wlocc,
    assemblage_from_state,
    compose_restricted,
    depolarize,
    embed_cq,
    lhs_assemblage,
    mix_assemblages,
    relabel_outcomes,
)
from ..core.errors import SteeringError
from ..core.lhs import LinearScalarization, SteeringObjective, inner_inf_relative_entropy, lhs_feasibility
from ..core.linalg import (
    LN2,
    apply_kraus,
    eig_hermitian,
    log_frechet_apply,
    matrix_function,
    partial_trace,
    relative_entropy,
)
from ..core.quantifiers import (
    RestrictedResSolver,
    continuity_bound_check,
    faithfulness_check,
    g_eps,
    res_lower_bound_full,
    restricted_trace_distance,
    restricted_upper_bound,
    trace_distance_lower_bound,
    upper_bound_full,
)
from ..models.assemblage_models import Assemblage, CqState, MeasurementStrategy
from ..models.results import Interval, PropertyResult, SuiteReport
from .instance_generator import (
    random_assemblage,
    random_density,
    random_desk_shape,
    random_hermitian,
    random_instrument,
    random_lhs_model,
    random_measurement_strategy,
    random_povm,
    random_restricted_op,
    trial_rng,
    werner_assemblage,
)

logger = logging.getLogger(__name__)

# (性质名, 带符号余量, 是否通过)
Record = Tuple[str, float, bool]


@dataclass(frozen=True)
class SuiteTask:
    """一类试验：run(pipeline, rng, trial) 返回若干条记录"""
    name: str
    run: Callable[['SuitePipeline', np.random.Generator, int], List[Record]]
    emits: Tuple[str, ...]
    weight: str  # 'light' / 'heavy' / 'single'


def _record(name: str, margin: float, passed: Optional[bool] = None) -> Record:
    margin = float(margin)
    return name, margin, bool(margin >= 0.0) if passed is None else bool(passed)


def _max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if np.size(a) else 0.0


class SuitePipeline:
    """性质测试管道"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        初始化性质测试管道

        参数:
            config: 覆盖 SUITE_CONFIG 的键；solver_overrides / lhs_overrides
                    分别合并到 QUANTIFIER_CONFIG / LHS_CONFIG
        """
        self.config = {**SUITE_CONFIG, **(config or {})}
        self.solver_config = {**QUANTIFIER_CONFIG, **self.config.get('solver_overrides', {})}
        self.lhs_config = {**LHS_CONFIG, **self.config.get('lhs_overrides', {})}
        self.tasks = _build_tasks()

    # ---- 共用求解 ----
    def solve_interval(self, assemblage: Assemblage, records: List[Record], exchanged: bool = False) -> Interval:
        """求 R_S^R 区间，并为该实例追加一条上界链记录"""
        solver = RestrictedResSolver(self.solver_config, self.lhs_config)
        interval = solver.solve_exchanged(assemblage) if exchanged else solver.solve(assemblage)
        records.extend(self.bound_chain_records(assemblage, interval))
        return interval

    def bound_chain_records(self, assemblage: Assemblage, interval: Interval) -> List[Record]:
        try:
            chain = restricted_upper_bound(assemblage, self.solver_config)
        except SteeringError as e:
            logger.warning(f"上界链检查失败: {e}")
            return [_record("bound_chain", -1.0, False)]
        return [_record("bound_chain", chain.value + self.config['bound_chain_slack'] - interval.hi)]

    def random_pair(self, rng: np.random.Generator) -> Tuple[Assemblage, Assemblage]:
        shape = random_desk_shape(rng)
        return random_assemblage(*shape, rng), random_assemblage(*shape, rng)

    def trial_count(self, task: SuiteTask, trials: int) -> int:
        if task.weight == 'light':
            return trials * int(self.config['light_trial_factor'])
        if task.weight == 'single':
            return min(trials, 1)
        return trials

    # ---- 主流程 ----
    def run_task(self, task: SuiteTask, seed: int, trial: int) -> Tuple[List[Record], float, Optional[str]]:
        start = time.perf_counter()
        rng = trial_rng(seed, task.name, trial)
        try:
            records = task.run(self, rng, trial)
            note = None
        except (SteeringError, ValueError, np.linalg.LinAlgError) as e:
            logger.warning(f"任务 {task.name} 第 {trial} 次试验异常: {e}")
            records = [_record(name, -1.0, False) for name in task.emits[:1]]
            note = f"trial {trial}: {type(e).__name__}: {e}"
        return records, time.perf_counter() - start, note

    def run(self, seed: int, trials: Optional[int] = None) -> SuiteReport:
        """
        执行全部性质

        参数:
            seed: 套件种子
            trials: 求解类性质的试验次数，缺省取配置；0 时得到空的通过报告

        返回:
            SuiteReport
        """
        trials = int(self.config['trials'] if trials is None else trials)
        if trials < 0:
            raise ValueError(f"试验次数不能为负: {trials}")
        jobs = [(index, task, trial)
                for index, task in enumerate(self.tasks)
                for trial in range(self.trial_count(task, trials))]
        logger.info(f"性质测试开始: seed={seed}, 试验 {len(jobs)} 个, 线程 {self.config['max_workers']}")

        workers = max(1, int(self.config['max_workers']))
        if workers == 1:
            outcomes = [self.run_task(task, seed, trial) for _, task, trial in jobs]
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(self.run_task, task, seed, trial) for _, task, trial in jobs]
                outcomes = [f.result() for f in futures]

        results: Dict[str, PropertyResult] = {}
        order: List[str] = []
        for task in self.tasks:
            if self.trial_count(task, trials) == 0:
                continue
            for name in task.emits:
                if name not in results:
                    results[name] = PropertyResult(name)
                    order.append(name)
        for (_, task, trial), (records, runtime, note) in zip(jobs, outcomes):
            touched = set()
            for name, margin, passed in records:
                results[name].record(margin, passed)
                touched.add(name)
            for name in touched:
                results[name].runtime += runtime
            if note is not None:
                results[task.emits[0]].notes.append(note)

        report = SuiteReport(seed=int(seed), trials=trials, properties=[results[name] for name in order])
        for prop in report.properties:
            log = logger.info if prop.passed else logger.warning
            log(f"{prop.name}: {prop.trials} 次, 失败 {prop.failures}, 最差余量 {prop.worst_margin}, "
                f"{prop.runtime:.2f}s")
        return report


def run_suite(config: Optional[Dict[str, Any]] = None, seed: int = 0) -> SuiteReport:
    """性质测试入口；config 中的 'trials' 决定试验次数"""
    return SuitePipeline(config).run(seed)


# ======================
# 线性代数
# ======================

def _eig_reconstruction(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    dim = int(rng.integers(1, pipe.config['max_eig_dim'] + 1))
    m = random_hermitian(dim, rng)
    method = "jacobi" if trial % 2 else "numpy"
    dec = eig_hermitian(m, method=method)
    v, w = dec.eigenvectors, dec.eigenvalues
    scale = max(1.0, _max_abs(m))
    recon = _max_abs((v * w) @ v.conj().T - m) / scale
    unitarity = _max_abs(v.conj().T @ v - np.eye(dim))
    ordered = bool(np.all(np.diff(w) >= 0.0))
    margin = min(1e-9 - recon, 1e-10 - unitarity)
    return [_record("eig_reconstruction", margin, margin >= 0.0 and ordered)]


def _klein(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    dim = int(rng.integers(2, 5))
    rho = random_density(dim, None, rng)
    sigma = random_density(dim, None, rng)
    d = float(relative_entropy(rho, sigma))
    self_d = float(relative_entropy(rho, rho))
    return [
        _record("klein_inequality", d),
        _record("klein_inequality", pipe.config['metric_tol'] - abs(self_d)),
    ]


def _partial_trace_monotonicity(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    dims = (2, int(rng.integers(2, 4)))
    n = dims[0] * dims[1]
    rho = random_density(n, None, rng)
    sigma = random_density(n, None, rng)
    full = float(relative_entropy(rho, sigma))
    reduced = float(relative_entropy(partial_trace(rho.matrix, dims, (1,)), partial_trace(sigma.matrix, dims, (1,))))
    return [_record("partial_trace_monotonicity", full - reduced + pipe.config['data_processing_slack'])]


def _cq_block_decomposition(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    n, dim = int(rng.integers(2, 4)), int(rng.integers(2, 4))
    r, s = rng.dirichlet(np.ones(n)), rng.dirichlet(np.ones(n))
    lam = [random_density(dim, None, rng).matrix for _ in range(n)]
    mu = [random_density(dim, None, rng).matrix for _ in range(n)]
    rho = CqState((("X", n),), np.stack([r[x] * lam[x] for x in range(n)]))
    sigma = CqState((("X", n),), np.stack([s[x] * mu[x] for x in range(n)]))
    direct = float(relative_entropy(rho.to_matrix(), sigma.to_matrix()))
    decomposed = sum(r[x] * float(relative_entropy(lam[x], mu[x])) for x in range(n))
    decomposed += float(np.sum(r * np.log2(r / s)))
    return [_record("cq_block_decomposition", pipe.config['block_tol'] - abs(direct - decomposed))]


def _log_frechet(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    dim = int(rng.integers(2, 5))
    sigma = 0.8 * random_density(dim, None, rng).matrix + 0.2 * np.eye(dim) / dim
    h = random_hermitian(dim, rng)
    h /= max(1.0, _max_abs(h))
    t = float(pipe.config['frechet_step'])
    plus = matrix_function(sigma + t * h, np.log2).matrix
    minus = matrix_function(sigma - t * h, np.log2).matrix
    finite_difference = (plus - minus) / (2.0 * t)
    derivative = log_frechet_apply(sigma, h).matrix
    error = np.linalg.norm(derivative - finite_difference) / max(np.linalg.norm(derivative), 1e-300)
    return [_record("log_frechet_finite_difference", pipe.config['frechet_rel_tol'] - error)]


def _channel_monotonicity(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    dim = int(rng.integers(2, 4))
    d_out = int(rng.integers(1, dim + 1))
    instrument = random_instrument(dim, d_out, int(rng.integers(1, 4)), rng)
    rho = random_density(dim, None, rng).matrix
    sigma = random_density(dim, None, rng).matrix
    before = float(relative_entropy(rho, sigma))
    # 丢弃分支标签后的整体信道
    kraus = [k for branch in instrument.branches for k in branch]
    after = float(relative_entropy(apply_kraus(rho, kraus), apply_kraus(sigma, kraus)))
    return [_record("channel_monotonicity", before - after + pipe.config['data_processing_slack'])]


# ======================
# 集合与变换
# ======================

def _generated_objects(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    n_x, n_a, d = random_desk_shape(rng)
    assemblage = random_assemblage(n_x, n_a, d, rng)
    povm = random_povm(d, n_a, rng)
    instrument = random_instrument(d, d, int(rng.integers(1, 4)), rng)
    random_lhs_model(n_x, n_a, d, rng)
    random_restricted_op((n_x, n_a, d), rng)
    random_measurement_strategy(n_x, d, rng)
    completeness = _max_abs(povm.outcomes.sum(axis=0) - np.eye(d))
    trace_preserving = _max_abs(sum(instrument.branch_effect(z) for z in range(instrument.n_branches)) - np.eye(d))
    margin = min(1e-9 - assemblage.no_signaling_residual(), 1e-10 - completeness, 1e-9 - trace_preserving)
    return [_record("generated_objects_valid", margin)]


def _restricted_op_invariants(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    shape = random_desk_shape(rng)
    assemblage = random_assemblage(*shape, rng)
    op = random_restricted_op(shape, rng,
                              n_final_inputs=int(rng.integers(2, 4)),
                              n_final_outcomes=int(rng.integers(2, 4)))
    image = apply_restricted_1wlocc(assemblage, op)
    return [_record("restricted_op_invariants", 1e-9 - image.no_signaling_residual())]


def _identity_strategy(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    shape = random_desk_shape(rng)
    assemblage = random_assemblage(*shape, rng)
    p = rng.dirichlet(np.ones(shape[0]))
    via_strategy = apply_measurement_strategy(assemblage, MeasurementStrategy.trivial(shape[2], p))
    direct = embed_cq(assemblage, p)
    diff = _max_abs(via_strategy.blocks[:, :, 0] - direct.blocks)
    return [_record("identity_strategy_embedding", pipe.config['exact_tol'] - diff)]


def _state_no_signaling(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    n_x, n_a, d_b = random_desk_shape(rng)
    d_a = int(rng.integers(2, 4))
    rho = random_density(d_a * d_b, int(rng.integers(1, d_a * d_b + 1)), rng)
    povms = [random_povm(d_a, n_a, rng) for _ in range(n_x)]
    assemblage = assemblage_from_state(rho, (d_a, d_b), povms)
    return [_record("state_assemblage_no_signaling", pipe.config['exact_tol'] - assemblage.no_signaling_residual())]


def _composition(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    n_x, n_a, d = random_desk_shape(rng)
    assemblage = random_assemblage(n_x, n_a, d, rng)
    n_x1, n_a1 = int(rng.integers(2, 4)), int(rng.integers(2, 4))
    first = random_restricted_op((n_x, n_a, d), rng, n_final_inputs=n_x1, n_final_outcomes=n_a1)
    second = random_restricted_op((n_x1, n_a1, d), rng)
    sequential = apply_restricted_1wlocc(apply_restricted_1wlocc(assemblage, first), second)
    composite = apply_restricted_1wlocc(assemblage, compose_restricted(first, second))
    diff = _max_abs(sequential.elements - composite.elements)
    return [_record("restricted_composition", pipe.config['composition_tol'] - diff)]


# ======================
# 距离与 g(ε)
# ======================

def _restricted_metric(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    shape = random_desk_shape(rng)
    a, b, c = (random_assemblage(*shape, rng) for _ in range(3))
    tol = pipe.config['metric_tol']
    ab, ba = restricted_trace_distance(a, b), restricted_trace_distance(b, a)
    bc, ac = restricted_trace_distance(b, c), restricted_trace_distance(a, c)
    return [
        _record("restricted_distance_metric", ab),
        _record("restricted_distance_metric", tol - restricted_trace_distance(a, a)),
        _record("restricted_distance_metric", pipe.config['exact_tol'] - abs(ab - ba)),
        _record("restricted_distance_metric", ab + bc - ac + tol),
    ]


def _lower_bound_metric(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    n_x, n_a, d = random_desk_shape(rng)
    a, b, c = (random_assemblage(n_x, n_a, d, rng) for _ in range(3))
    strategies = [random_measurement_strategy(n_x, d, rng) for _ in range(2)]
    tol = pipe.config['metric_tol']

    def dist(u: Assemblage, v: Assemblage) -> float:
        return trace_distance_lower_bound(u, v, strategies)

    ab = dist(a, b)
    return [
        _record("lower_bound_distance_metric", tol - abs(ab - dist(b, a))),
        _record("lower_bound_distance_metric", ab + dist(b, c) - dist(a, c) + tol),
    ]


def _g_eps_monotone(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    values = np.array([g_eps(k / 100.0) for k in range(101)])
    return [_record("g_eps_monotone", float(np.min(np.diff(values))) + 1e-15)]


# ======================
# 内层求解与 LHS
# ======================

def _inner_solve(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    shape = random_desk_shape(rng)
    assemblage = random_assemblage(*shape, rng)
    p = rng.dirichlet(np.ones(shape[0]))
    iterates: List[np.ndarray] = []
    result = inner_inf_relative_entropy(assemblage, p, pipe.lhs_config,
                                        callback=lambda it, s, f: iterates.append(np.array(s)))
    records: List[Record] = []

    history = np.asarray(result.history)
    drop = float(np.min(history[:-1] - history[1:])) if history.size > 1 else 0.0
    records.append(_record("monotone_descent", drop + pipe.lhs_config['descent_slack']))

    objective = SteeringObjective.restricted(assemblage, pipe.lhs_config)
    scalarization = LinearScalarization(p[:, None])
    for _ in range(int(pipe.config['certificate_samples'])):
        model = random_lhs_model(*shape, rng)
        value = scalarization.value(objective.group_values(model.sigmas))
        records.append(_record("certificate_soundness", value - result.lower_bound + 1e-12))

    rho_cq = embed_cq(assemblage, p)
    samples = int(pipe.config['pinsker_samples_per_solve'])
    if iterates:
        picks = sorted(set(np.linspace(0, len(iterates) - 1, samples).astype(int).tolist()))
        for index in picks:
            sigma_cq = embed_cq(Assemblage(objective.sigma_hat(iterates[index]), validate=False), p)
            divergence = float(rho_cq.relative_entropy(sigma_cq))
            norm = 2.0 * rho_cq.trace_distance(sigma_cq)
            records.append(_record("pinsker_at_iterates",
                                   divergence - norm ** 2 / (2.0 * LN2) + QUANTIFIER_CONFIG['pinsker_slack']))
    return records


def _relabel_symmetry(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    shape = random_desk_shape(rng)
    assemblage = random_assemblage(*shape, rng)
    p = rng.dirichlet(np.ones(shape[0]))
    permuted = relabel_outcomes(assemblage, rng.permutation(shape[1]).tolist())
    r1 = inner_inf_relative_entropy(assemblage, p, pipe.lhs_config)
    r2 = inner_inf_relative_entropy(permuted, p, pipe.lhs_config)
    allowance = max(2.0 * pipe.lhs_config['inner_tol'], r1.gap, r2.gap)
    return [_record("outcome_relabel_symmetry", allowance - abs(r1.value - r2.value))]


def _lhs_soundness(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    shape = random_desk_shape(rng)
    assemblage = lhs_assemblage(random_lhs_model(*shape, rng))
    records: List[Record] = []
    feasibility = lhs_feasibility(assemblage, pipe.lhs_config)
    records.append(_record("lhs_feasible", pipe.lhs_config['feas_tol'] - feasibility.residual,
                           feasibility.feasible))
    if feasibility.feasible and feasibility.residual <= 1e-8:
        p = np.full(shape[0], 1.0 / shape[0])
        inner = inner_inf_relative_entropy(assemblage, p, pipe.lhs_config)
        records.append(_record("zero_on_lhs", pipe.config['zero_value_tol'] - inner.value))
    interval = pipe.solve_interval(assemblage, records)
    records.append(_record("lhs_bracket_near_zero", pipe.config['lhs_hi_tol'] - interval.hi))
    report = faithfulness_check(assemblage, pipe.solver_config, pipe.lhs_config, interval=interval)
    records.append(_record("faithfulness", report.margin, report.passed))
    return records


def _werner_detection(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    low = lhs_feasibility(werner_assemblage(pipe.config['werner_feasible']), pipe.lhs_config)
    high = lhs_feasibility(werner_assemblage(pipe.config['werner_infeasible']), pipe.lhs_config)
    return [
        _record("werner_detection", pipe.lhs_config['feas_tol'] - low.residual, low.status == "feasible"),
        _record("werner_detection", high.witness_value, high.status == "infeasible"),
    ]


# ======================
# 量化器定理
# ======================

def _minimax(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    shape = random_desk_shape(rng)
    assemblage = random_assemblage(*shape, rng)
    records: List[Record] = []
    sup_inf = pipe.solve_interval(assemblage, records)
    inf_sup = pipe.solve_interval(assemblage, records, exchanged=True)
    slack = pipe.config['minimax_slack']
    records.append(_record("minimax_exchange", min(inf_sup.hi + slack - sup_inf.lo, sup_inf.hi + slack - inf_sup.lo)))
    return records


def _convexity(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    a1, a2 = pipe.random_pair(rng)
    records: List[Record] = []
    i1 = pipe.solve_interval(a1, records)
    i2 = pipe.solve_interval(a2, records)
    for weight in pipe.config['mixing_weights']:
        mixed = pipe.solve_interval(mix_assemblages(a1, a2, weight), records)
        bound = weight * i1.hi + (1.0 - weight) * i2.hi + pipe.config['convexity_slack']
        records.append(_record("convexity", bound - mixed.lo))

    weight = pipe.config['mixing_weights'][trial % len(pipe.config['mixing_weights'])]
    strategies = [random_measurement_strategy(a1.n_inputs, a1.dim_b, rng)]
    lower = res_lower_bound_full(mix_assemblages(a1, a2, weight), strategies, pipe.solver_config, pipe.lhs_config)
    u1 = upper_bound_full(a1, config=pipe.solver_config).sup_entropy_a
    u2 = upper_bound_full(a2, config=pipe.solver_config).sup_entropy_a
    records.append(_record("full_convexity", weight * u1 + (1.0 - weight) * u2 - lower))
    return records


def _monotonicity(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    shape = random_desk_shape(rng)
    assemblage = random_assemblage(*shape, rng)
    op = random_restricted_op(shape, rng)
    records: List[Record] = []
    before = pipe.solve_interval(assemblage, records)
    after = pipe.solve_interval(apply_restricted_1wlocc(assemblage, op), records)
    records.append(_record("restricted_monotonicity", before.hi + pipe.config['monotonicity_slack'] - after.lo))
    return records


def _continuity(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    a1, a3 = pipe.random_pair(rng)
    a2 = mix_assemblages(a1, a3, 1.0 - pipe.config['continuity_mix'])
    records: List[Record] = []
    intervals = (pipe.solve_interval(a1, records), pipe.solve_interval(a2, records))
    report = continuity_bound_check(a1, a2, pipe.solver_config, pipe.lhs_config, intervals=intervals)
    records.append(_record("continuity", report.margin, report.passed))
    return records


def _faithfulness(pipe: SuitePipeline, rng: np.random.Generator, trial: int) -> List[Record]:
    shape = random_desk_shape(rng)
    assemblage = depolarize(random_assemblage(*shape, rng), float(rng.uniform(0.0, 1.0)))
    records: List[Record] = []
    interval = pipe.solve_interval(assemblage, records)
    report = faithfulness_check(assemblage, pipe.solver_config, pipe.lhs_config, interval=interval)
    records.append(_record("faithfulness", report.margin, report.passed))
    return records


def _build_tasks() -> List[SuiteTask]:
    return [
        SuiteTask("eig_reconstruction", _eig_reconstruction, ("eig_reconstruction",), 'light'),
        SuiteTask("klein_inequality", _klein, ("klein_inequality",), 'light'),
        SuiteTask("partial_trace_monotonicity", _partial_trace_monotonicity, ("partial_trace_monotonicity",), 'light'),
        SuiteTask("cq_block_decomposition", _cq_block_decomposition, ("cq_block_decomposition",), 'light'),
        SuiteTask("log_frechet_finite_difference", _log_frechet, ("log_frechet_finite_difference",), 'light'),
        SuiteTask("channel_monotonicity", _channel_monotonicity, ("channel_monotonicity",), 'light'),
        SuiteTask("generated_objects_valid", _generated_objects, ("generated_objects_valid",), 'light'),
        SuiteTask("restricted_op_invariants", _restricted_op_invariants, ("restricted_op_invariants",), 'light'),
        SuiteTask("identity_strategy_embedding", _identity_strategy, ("identity_strategy_embedding",), 'light'),
        SuiteTask("state_assemblage_no_signaling", _state_no_signaling, ("state_assemblage_no_signaling",), 'light'),
        SuiteTask("restricted_composition", _composition, ("restricted_composition",), 'light'),
        SuiteTask("restricted_distance_metric", _restricted_metric, ("restricted_distance_metric",), 'light'),
        SuiteTask("lower_bound_distance_metric", _lower_bound_metric, ("lower_bound_distance_metric",), 'light'),
        SuiteTask("g_eps_monotone", _g_eps_monotone, ("g_eps_monotone",), 'single'),
        SuiteTask("inner_solve", _inner_solve,
                  ("monotone_descent", "certificate_soundness", "pinsker_at_iterates"), 'heavy'),
        SuiteTask("outcome_relabel_symmetry", _relabel_symmetry, ("outcome_relabel_symmetry",), 'heavy'),
        SuiteTask("lhs_soundness", _lhs_soundness,
                  ("lhs_feasible", "zero_on_lhs", "lhs_bracket_near_zero", "faithfulness", "bound_chain"), 'heavy'),
        SuiteTask("werner_detection", _werner_detection, ("werner_detection",), 'single'),
        SuiteTask("minimax_exchange", _minimax, ("minimax_exchange", "bound_chain"), 'heavy'),
        SuiteTask("convexity", _convexity, ("convexity", "full_convexity", "bound_chain"), 'heavy'),
        SuiteTask("restricted_monotonicity", _monotonicity, ("restricted_monotonicity", "bound_chain"), 'heavy'),
        SuiteTask("continuity", _continuity, ("continuity", "bound_chain"), 'heavy'),
        SuiteTask("faithfulness", _faithfulness, ("faithfulness", "bound_chain"), 'heavy'),
    ]
