"""Seeded Monte Carlo experiments.

Trial t of an experiment with master seed s samples its graph with seed
``rng.derive_seed(s, t)``.  Trials share nothing but the immutable config,
run in any order on any number of worker processes, and are reassembled by
trial id, so every output is independent of ``workers``.
"""

from __future__ import annotations

import csv
import io
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import rng
from .blocks import validate_decomposition
from .builders import sparse_cover_decomposition
from .extremal.budget import BudgetExceeded
from .extremal.cliques import alpha, beta
from .extremal.sparse import gamma_max, structural_condition
from .extremal.tau import exact_tau
from .graph import GnpParams, gnp_sample
from .problab import EventProbs, regime_classify

EVENTS = ("E11", "E10", "E01", "E00")
MAX_DENSE_N = 120


@dataclass(frozen=True)
class ExperimentConfig:
    n: int = 50
    p: float = 0.5
    trials: int = 2000
    seed: int = 42
    workers: int = 1
    budget: int | None = 5_000_000
    T: float = 10.0
    exact_max_n: int = 10       # mc_sparse: cross-check against exact tau up to this n

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def wilson_interval(successes: int, total: int, z: float = 1.959963984540054) -> tuple[float, float]:
    if total == 0:
        return 0.0, 1.0
    phat = successes / total
    denom = 1 + z * z / total
    centre = (phat + z * z / (2 * total)) / denom
    half = z * math.sqrt(phat * (1 - phat) / total + z * z / (4 * total * total)) / denom
    return max(0.0, centre - half), min(1.0, centre + half)


def event_label(x_positive: bool, y_positive: bool) -> str:
    return f"E{int(x_positive)}{int(y_positive)}"


def _map(fn, tasks, workers: int):
    if workers == 1 or len(tasks) == 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * workers))))


# dense G(n, 1/2): alpha, beta and the four events

@dataclass(frozen=True)
class AlphaBetaRow:
    trial: int
    seed: int
    alpha: int | None
    beta: int | None
    event: str | None


def _alpha_beta_trial(task) -> AlphaBetaRow:
    trial, seed, n, p, k, budget = task
    g = gnp_sample(GnpParams(n, p, seed))
    try:
        a, _ = alpha(g, budget)
        b, _ = beta(g, budget)
    except BudgetExceeded:
        return AlphaBetaRow(trial, seed, None, None, None)
    return AlphaBetaRow(trial, seed, a, b, event_label(a >= k, b >= k + 2))


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    k0: int
    k: int
    regime: str
    lam: float
    mu: float
    predicted: EventProbs
    rows: list[AlphaBetaRow]
    partial: bool = False
    frequencies: dict[str, float] = field(default_factory=dict)
    intervals: dict[str, tuple[float, float]] = field(default_factory=dict)

    def __post_init__(self):
        done = [r for r in self.rows if r.event is not None]
        self.partial = len(done) < len(self.rows)
        for e in EVENTS:
            hits = sum(r.event == e for r in done)
            self.frequencies[e] = hits / len(done) if done else 0.0
            self.intervals[e] = wilson_interval(hits, len(done))

    @property
    def completed(self) -> list[AlphaBetaRow]:
        return [r for r in self.rows if r.event is not None]

    def fraction(self, pred) -> float:
        done = self.completed
        return sum(bool(pred(r)) for r in done) / len(done) if done else 0.0

    @property
    def tv_distance(self) -> float:
        pred = self.predicted.as_dict()
        return 0.5 * sum(abs(self.frequencies[e] - pred[e]) for e in EVENTS)

    def rows_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["trial", "seed", "alpha", "beta", "event"])
        for r in self.rows:
            w.writerow([r.trial, r.seed, "" if r.alpha is None else r.alpha,
                        "" if r.beta is None else r.beta, r.event or ""])
        return buf.getvalue()

    def summary(self) -> dict:
        pred = self.predicted.as_dict()
        k0 = self.k0
        return {
            "config": asdict(self.config),
            "k0": k0, "k": self.k, "regime": self.regime, "lambda": self.lam, "mu": self.mu,
            "trials_completed": len(self.completed), "partial": self.partial,
            "events": {e: {"empirical": self.frequencies[e], "wilson95": list(self.intervals[e]),
                           "predicted": pred[e]} for e in EVENTS},
            "tv_distance": self.tv_distance,
            "p_alpha_in_k0m1_k0": self.fraction(lambda r: r.alpha in (k0 - 1, k0)),
            "p_beta_in_k0p1_k0p2": self.fraction(lambda r: r.beta in (k0 + 1, k0 + 2)),
            "p_joint": self.fraction(lambda r: r.alpha in (k0 - 1, k0) and r.beta in (k0 + 1, k0 + 2)),
        }


def mc_alpha_beta(config: ExperimentConfig) -> ExperimentResult:
    """Exact alpha and beta on seeded G(n, p) samples (the predictions assume
    p = 1/2), with trials labeled by the events X > 0 (alpha >= k) and
    Y > 0 (beta >= k + 2), k being k0, or k0 + 1 in regime III."""
    if config.n > MAX_DENSE_N:
        raise ValueError(f"n={config.n} exceeds the exact-solver guard n <= {MAX_DENSE_N}")
    if config.p != 0.5:
        warnings.warn("the event predictions assume p = 1/2", stacklevel=2)
    report = regime_classify(config.n, config.T)
    tasks = [(t, rng.derive_seed(config.seed, t), config.n, config.p, report.k, config.budget)
             for t in range(config.trials)]
    rows = sorted(_map(_alpha_beta_trial, tasks, config.workers), key=lambda r: r.trial)
    return ExperimentResult(config, report.k0, report.k, report.regime, report.lam, report.mu,
                            report.event_probs, rows)


# very sparse G(n, p): gamma_max and the structural condition

@dataclass(frozen=True)
class SparseRow:
    trial: int
    seed: int
    edges: int
    structural: bool
    gamma: int | None
    blocks: int | None
    valid: bool
    tau: int | None          # exact tau, only for n <= exact_max_n
    budget_exceeded: bool = False

    @property
    def agrees(self) -> bool | None:
        if self.tau is None or self.gamma is None:
            return None
        return self.tau == self.blocks


def _sparse_trial(task) -> SparseRow:
    trial, seed, n, p, exact_max_n, budget = task
    g = gnp_sample(GnpParams(n, p, seed))
    ok = structural_condition(g)
    try:
        gam, cover = gamma_max(g, budget)
        dec = sparse_cover_decomposition(g, cover)
        tau = exact_tau(g, budget)[0] if n <= exact_max_n else None
    except BudgetExceeded:
        return SparseRow(trial, seed, g.edge_count, ok, None, None, False, None, True)
    valid = bool(validate_decomposition(g, dec)) and len(dec) == n - gam
    return SparseRow(trial, seed, g.edge_count, ok, gam, len(dec), valid, tau)


@dataclass
class SparseResult:
    config: ExperimentConfig
    rows: list[SparseRow]

    @property
    def partial(self) -> bool:
        return any(r.budget_exceeded for r in self.rows)

    def rows_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["trial", "seed", "edges", "structural", "gamma", "blocks", "valid", "tau"])
        for r in self.rows:
            w.writerow([r.trial, r.seed, r.edges, int(r.structural),
                        "" if r.gamma is None else r.gamma, "" if r.blocks is None else r.blocks,
                        int(r.valid), "" if r.tau is None else r.tau])
        return buf.getvalue()

    def summary(self) -> dict:
        n, p = self.config.n, self.config.p
        rows = self.rows
        structural = sum(r.structural for r in rows)
        checked = [r for r in rows if r.structural and r.agrees is not None]
        gammas = [r.gamma for r in rows if r.gamma is not None]
        mean_gamma = sum(gammas) / len(gammas) if gammas else None
        log_np = math.log2(n * p) if n * p > 0 else None
        return {
            "config": asdict(self.config),
            "structural_fraction": structural / len(rows),
            "structural_wilson95": list(wilson_interval(structural, len(rows))),
            "all_certificates_valid": all(r.valid for r in rows if not r.budget_exceeded),
            "exact_checked": len(checked),
            "exact_mismatches": sum(not r.agrees for r in checked),
            "mean_gamma_max": mean_gamma,   # n minus the certified upper bound on tau
            "log2_np_over_p": log_np / p if log_np is not None and p > 0 else None,
            "partial": self.partial,
        }


def mc_sparse(config: ExperimentConfig, force: bool = False) -> SparseResult:
    """Very sparse samples: structural-condition frequency, the certified
    decomposition with n - gamma_max blocks, and exact cross-checks on tiny n."""
    if not force and config.p > config.n ** (-7 / 8):
        raise ValueError(f"p={config.p} exceeds n^(-7/8)={config.n ** (-7 / 8):.4g}; pass force to run anyway")
    tasks = [(t, rng.derive_seed(config.seed, t), config.n, config.p, config.exact_max_n, config.budget)
             for t in range(config.trials)]
    rows = sorted(_map(_sparse_trial, tasks, config.workers), key=lambda r: r.trial)
    return SparseResult(config, rows)
