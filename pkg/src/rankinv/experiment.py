"""Seeded batch experiments over random systematic codes.

Each trial draws a code with seed XOR trial-index, measures the requested
invariants, and the summary reports the modal measured sequence, the
h_{q+1} histogram, and the theoretical frequency bound 1 - r/q^(m-1).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import PreconditionError
from .gfcore import get_field
from .geometry import linear_set, system_of
from .hilbert import _PowerCache, hilbert_sequence, schur_product_dim
from .rankcodes import delta_rank, qsum_dim, random_systematic

RECORDABLE = ("delta", "hq1", "qsum", "hseq")


@dataclass
class ExperimentConfig:
    field: str
    n: int
    k: int
    trials: int
    seed: int = 0
    record: tuple = ("delta", "hq1", "qsum")
    max_enum: int = 2 ** 20

    def __post_init__(self):
        if self.trials < 1:
            raise PreconditionError("trials must be at least 1")
        bad = [r for r in self.record if r not in RECORDABLE]
        if bad:
            raise PreconditionError(f"unknown record keys: {bad}")


@dataclass
class TrialRecord:
    trial: int
    seed: int
    degenerate: bool = False
    delta_rank: int | None = None
    qsum1: int | None = None
    h_qplus1: int | None = None
    sequence: tuple | None = None


@dataclass
class ExperimentSummary:
    trials: int
    q: int
    m: int
    n: int
    k: int
    theoretical_bound: float
    modal_sequence: tuple | None = None
    modal_fraction: float | None = None
    hq1_histogram: dict = field(default_factory=dict)
    delta_histogram: dict = field(default_factory=dict)
    qsum1_histogram: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "trials": self.trials,
            "q": self.q, "m": self.m, "n": self.n, "k": self.k,
            "theoretical_bound": self.theoretical_bound,
            "modal_sequence": list(self.modal_sequence) if self.modal_sequence else None,
            "modal_fraction": self.modal_fraction,
            "hq1_histogram": {str(k): v for k, v in sorted(self.hq1_histogram.items())},
            "delta_histogram": {str(k): v for k, v in sorted(self.delta_histogram.items())},
            "qsum1_histogram": {str(k): v for k, v in sorted(self.qsum1_histogram.items())},
        }


def run_trial(ctx, cfg: ExperimentConfig, trial: int) -> TrialRecord:
    seed = cfg.seed ^ trial
    code = random_systematic(ctx, cfg.n, cfg.k, seed)
    rec = TrialRecord(trial=trial, seed=seed)
    if "delta" in cfg.record:
        rec.delta_rank = delta_rank(code, 1)
    if "qsum" in cfg.record:
        rec.qsum1 = qsum_dim(code, 1)
    if "hseq" in cfg.record or "hq1" in cfg.record:
        if not code.nondegenerate:
            rec.degenerate = True
            return rec
        if "hseq" in cfg.record:
            rep = hilbert_sequence(code, cfg.max_enum)
            rec.sequence = tuple(rep.values)
            rec.h_qplus1 = rep.value_at(ctx.q + 1)
        else:
            # measured prefix h_0 .. h_{q+1} only
            ls = linear_set(system_of(code), cfg.max_enum)
            cache = _PowerCache(ctx, ls.points)
            prefix = tuple(schur_product_dim(ls, i, cache)
                           for i in range(ctx.q + 2))
            rec.sequence = prefix
            rec.h_qplus1 = prefix[-1]
    return rec


def run_experiment(cfg: ExperimentConfig):
    """Returns (summary, records); deterministic in (config, seed)."""
    ctx = get_field(cfg.field)
    records = [run_trial(ctx, cfg, t) for t in range(cfg.trials)]
    r_generic = min(cfg.k, cfg.n - cfg.k)
    bound = 1.0 - r_generic / ctx.q ** (ctx.m - 1)
    summary = ExperimentSummary(trials=cfg.trials, q=ctx.q, m=ctx.m,
                                n=cfg.n, k=cfg.k, theoretical_bound=bound)
    seq_counter: Counter = Counter()
    for rec in records:
        if rec.delta_rank is not None:
            summary.delta_histogram[rec.delta_rank] = \
                summary.delta_histogram.get(rec.delta_rank, 0) + 1
        if rec.qsum1 is not None:
            summary.qsum1_histogram[rec.qsum1] = \
                summary.qsum1_histogram.get(rec.qsum1, 0) + 1
        if rec.h_qplus1 is not None:
            summary.hq1_histogram[rec.h_qplus1] = \
                summary.hq1_histogram.get(rec.h_qplus1, 0) + 1
        key = rec.sequence if rec.sequence is not None else (
            ("degenerate",) if rec.degenerate else None)
        if key is not None:
            seq_counter[key] += 1
    if seq_counter:
        modal, cnt = seq_counter.most_common(1)[0]
        summary.modal_sequence = modal
        summary.modal_fraction = cnt / cfg.trials
    return summary, records
