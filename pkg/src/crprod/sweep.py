"""Exhaustive desk-scale verification of the twisted associativity theorem."""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from itertools import product
from multiprocessing import get_context
from pathlib import Path
from typing import List, Optional, Tuple

from .oracle import oracle_witness_search
from .twisted import main_theorem, verify_witness
from .words import Word, format_word

SAMPLE_CAP = 100


def alphabet_generators(alphabet_size: int) -> List[int]:
    """Generators used for a sweep alphabet: ``x, y, z`` up to three letters
    (matching the usual names in examples), ``a, b, c, ...`` beyond."""
    if alphabet_size < 1:
        raise ValueError("alphabet_size must be >= 1")
    if alphabet_size <= 3:
        return list(range(24, 24 + alphabet_size))
    return list(range(1, alphabet_size + 1))


def enumerate_reduced_words(alphabet_size: int, length: int) -> List[Word]:
    """All reduced words of exactly ``length`` letters, in lexicographic order
    for the letter order x < X < y < Y < ..."""
    if length < 0:
        raise ValueError("length must be >= 0")
    letters = [x for g in alphabet_generators(alphabet_size) for x in (g, -g)]
    layer: List[Word] = [()]
    for _ in range(length):
        layer = [w + (x,) for w in layer for x in letters if not w or w[-1] != -x]
    return layer


def words_up_to(alphabet_size: int, max_len: int) -> List[Word]:
    out: List[Word] = []
    for n in range(max_len + 1):
        out.extend(enumerate_reduced_words(alphabet_size, n))
    return out


@dataclass(frozen=True)
class SweepConfig:
    alphabet_size: int = 2
    max_len_u: int = 4
    max_len_w: int = 6
    parallelism: int = 1
    output_path: Optional[str] = None
    oracle_bound: int = 5

    def __post_init__(self):
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be >= 1")
        if self.max_len_u < 0 or self.max_len_w < 0:
            raise ValueError("lengths must be >= 0")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")


@dataclass
class SweepReport:
    pairs_checked: int = 0
    case_a_count: int = 0
    case_b_count: int = 0
    failures: int = 0
    oracle_checked: int = 0
    failure_samples: List[Tuple[str, str, str]] = field(default_factory=list)
    wall_time: float = 0.0

    def merge(self, other: "SweepReport") -> None:
        self.pairs_checked += other.pairs_checked
        self.case_a_count += other.case_a_count
        self.case_b_count += other.case_b_count
        self.failures += other.failures
        self.oracle_checked += other.oracle_checked
        self.failure_samples.extend(other.failure_samples)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["failure_samples"] = [list(s) for s in self.failure_samples]
        return d


def check_pair(u: Word, w: Word, oracle_bound: int) -> Tuple[Optional[str], Optional[str], bool]:
    """``(case, failure_reason, oracle_ran)`` for one pair."""
    try:
        mw = main_theorem(u, w)
    except Exception as exc:  # a crash is a failure to record, not to propagate
        return None, f"{type(exc).__name__}: {exc}", False
    report = verify_witness(u, w, mw)
    if not report.passed:
        return mw.case, "verify: " + ",".join(report.failures()), False
    if max(len(u), len(w)) <= oracle_bound:
        if not oracle_witness_search(u, w, bound=oracle_bound).contains(mw):
            return mw.case, "oracle: witness not among brute-force witnesses", True
        return mw.case, None, True
    return mw.case, None, False


def _run_stride(args) -> Tuple[SweepReport, List[Tuple[int, Tuple[str, str, str]]]]:
    cfg, start, step = args
    us = words_up_to(cfg.alphabet_size, cfg.max_len_u)
    ws = words_up_to(cfg.alphabet_size, cfg.max_len_w)
    rep = SweepReport()
    samples = []
    for idx, (u, w) in enumerate(product(us, ws)):
        if idx % step != start:
            continue
        case, reason, oracle_ran = check_pair(u, w, cfg.oracle_bound)
        rep.pairs_checked += 1
        rep.oracle_checked += oracle_ran
        if reason is not None:
            rep.failures += 1
            if len(samples) < SAMPLE_CAP:
                samples.append((idx, (format_word(u), format_word(w), reason)))
        elif case == "A":
            rep.case_a_count += 1
        else:
            rep.case_b_count += 1
    return rep, samples


def cmd_verify_sweep(cfg: SweepConfig) -> SweepReport:
    """Run the theorem, the verifier and (within the oracle bound) the
    brute-force oracle on every pair; ``u`` is the outer loop."""
    out_path = Path(cfg.output_path) if cfg.output_path else None
    if out_path is not None:
        # fail before the long run, not after it
        with open(out_path, "w"):
            pass
    t0 = time.perf_counter()
    jobs = [(cfg, j, cfg.parallelism) for j in range(cfg.parallelism)]
    if cfg.parallelism == 1:
        parts = [_run_stride(jobs[0])]
    else:
        with get_context("spawn").Pool(cfg.parallelism) as pool:
            parts = pool.map(_run_stride, jobs)
    report = SweepReport()
    samples = []
    for rep, smp in parts:
        report.merge(rep)
        samples.extend(smp)
    samples.sort()
    report.failure_samples = [s for _, s in samples[:SAMPLE_CAP]]
    report.wall_time = time.perf_counter() - t0
    if out_path is not None:
        out_path.write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    return report
