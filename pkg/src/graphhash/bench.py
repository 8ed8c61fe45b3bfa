"""Benchmark: hashing against Ullmann on scrambled isomorphic pairs.

Absolute timings depend on the machine; only the protocol (random directed
unlabeled graphs, an isomorphic clone with scrambled orderings, averaged
per-pair times) and the growth trends are meant to be comparable.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .coder import graph_hash, hash_graph
from .graph import complete_digraph, random_graph, scramble
from .iso import ullmann_isomorphic

REPORT_HEADER = "vertices,edges,trials,ullmann_avg_ms,hash_avg_ms,hash_eq_avg_ms,cmp_avg_ms"

TIPPING_MAX = 2**40


@dataclass(frozen=True)
class BenchSetting:
    vertices: int
    edges: int
    trials: int = 100
    seed: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")

    @classmethod
    def parse(cls, text: str, trials: int = 100, seed: int = 0) -> "BenchSetting":
        v, _, e = text.partition("/")
        return cls(int(v), int(e), trials, seed)


@dataclass
class BenchRow:
    setting: BenchSetting
    ullmann_avg_ms: float = math.nan
    # time to hash one graph
    hash_avg_ms: float = math.nan
    # hash both graphs of the pair and compare digests
    hash_eq_avg_ms: float = math.nan
    cmp_avg_ms: float = math.nan
    hash_mismatches: int = 0
    ullmann_failures: int = 0
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.hash_mismatches == 0 and self.ullmann_failures == 0

    def csv(self) -> str:
        s = self.setting
        vals = [self.ullmann_avg_ms, self.hash_avg_ms, self.hash_eq_avg_ms, self.cmp_avg_ms]
        return ",".join([str(s.vertices), str(s.edges), str(s.trials)] + [f"{x:.3f}" for x in vals])


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_table(self) -> str:
        lines = [REPORT_HEADER]
        for r in self.rows:
            lines.append(r.csv())
            if r.error:
                lines.append(f"# {r.setting.vertices}/{r.setting.edges}: {r.error}")
            elif r.hash_mismatches or r.ullmann_failures:
                lines.append(
                    f"# {r.setting.vertices}/{r.setting.edges}: {r.hash_mismatches} hash mismatches, "
                    f"{r.ullmann_failures} ullmann failures"
                )
        return "\n".join(lines) + "\n"


def _ms(ns: int) -> float:
    return ns / 1e6


def _measure_pair(nv: int, ne: int, seed: int):
    g1 = random_graph(nv, ne, directed=True, label_range=None, seed=seed)
    g2 = scramble(g1, seed ^ 0x5DEECE66D)
    clock = time.perf_counter_ns

    t0 = clock()
    found = ullmann_isomorphic(g1, g2).found
    t1 = clock()
    h1 = graph_hash(g1, False)
    t2 = clock()
    h2 = graph_hash(g2, False)
    t3 = clock()
    equal = h1 == h2
    t4 = clock()
    ullmann, hash1, hash2, cmp = t1 - t0, t2 - t1, t3 - t2, t4 - t3
    return found, equal, ullmann, (hash1 + hash2) / 2, hash1 + hash2 + cmp, cmp


def run_setting(setting: BenchSetting) -> BenchRow:
    row = BenchRow(setting)
    try:
        # warm-up pair, not recorded
        _measure_pair(setting.vertices, setting.edges, setting.seed - 1)
        totals = [0.0, 0.0, 0.0, 0.0]
        for k in range(setting.trials):
            found, equal, *times = _measure_pair(setting.vertices, setting.edges, setting.seed + k)
            row.ullmann_failures += not found
            row.hash_mismatches += not equal
            for i, t in enumerate(times):
                totals[i] += t
        avg = [_ms(t) / setting.trials for t in totals]
        row.ullmann_avg_ms, row.hash_avg_ms, row.hash_eq_avg_ms, row.cmp_avg_ms = avg
    except (MemoryError, RecursionError) as exc:
        row.ullmann_avg_ms = row.hash_avg_ms = row.hash_eq_avg_ms = row.cmp_avg_ms = math.nan
        row.error = f"{type(exc).__name__}: {exc}"
    return row


def run_benchmark(settings: Iterable[BenchSetting]) -> BenchReport:
    return BenchReport([run_setting(s) for s in settings])


def tipping_point(ullmann_ms: float, hash_ms: float, cmp_ms: float) -> Optional[int]:
    """Smallest exemplar count N >= 1 for which hashing wins, or None for never.

    Hashing wins when ``ullmann * N / 2 > log2(N) * cmp + hash``: a linear
    scan needs N/2 pairwise tests on average, while the hashed lookup costs
    one hash plus a binary search over N sorted digests.
    """
    if min(ullmann_ms, hash_ms, cmp_ms) < 0:
        raise ValueError("durations must be non-negative")

    def wins(n: int) -> bool:
        return ullmann_ms * n / 2 > math.log2(n) * cmp_ms + hash_ms

    if wins(1):
        return 1
    # the margin is convex in N and not positive at N = 1, so it stays
    # positive once it turns positive
    if not wins(TIPPING_MAX):
        return None
    lo, hi = 1, TIPPING_MAX
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if wins(mid):
            hi = mid
        else:
            lo = mid
    return hi


@dataclass
class StressRow:
    n: int
    hash_ms: float
    codes_equal: bool
    timed_out: bool = False


def _time_hash(n: int, min_total_s: float = 0.05, max_repeats: int = 50):
    g = complete_digraph(n)
    best = math.inf
    total = 0.0
    root = None
    for _ in range(max_repeats):
        t0 = time.perf_counter()
        root = hash_graph(g, hash_labels=False)
        dt = time.perf_counter() - t0
        best = min(best, dt)
        total += dt
        if total >= min_total_s:
            break
    return best, root


def symmetric_stress(n_values: Iterable[int], budget_s: float = 60.0) -> list[StressRow]:
    """Hash complete digraphs K_n and record the best-of-repeats time.

    Once one size overruns ``budget_s``, the remaining sizes are reported as
    timed out without being run.
    """
    rows = []
    over = False
    for n in n_values:
        if over:
            rows.append(StressRow(n, math.nan, False, timed_out=True))
            continue
        secs, root = _time_hash(n)
        codes = {c.code for c in root.children}
        rows.append(StressRow(n, secs * 1e3, len(codes) <= 1, timed_out=secs > budget_s))
        over = secs > budget_s
    return rows
