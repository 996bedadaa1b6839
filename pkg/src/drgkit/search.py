"""Bounded exhaustive search over intersection arrays.

Generation enforces the monotonicity constraints (k = b0 > b1 >= ... and
1 = c1 <= ... <= c_D with b_i >= c_j for i + j <= D) for free; cheap integer
feasibility runs before any spectral work; the window test on theta_1 is two
Sturm counts on the characteristic polynomial; the full condition chain runs
only for window survivors.

Every pruning rule mirrors conditions of the chain it is used with: firing
implies the unpruned path rejects.  Rules declare the condition names they
rely on and are only enabled when the active condition set contains them.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .checks import CONDITION_SETS, FeasibilityReport, full_report
from .core import IntersectionArray, format_array, is_bipartite_pattern
from .corpus import table1_entries
from .exact import count_roots
from .spectral import full_matrix


class NodeBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchWindow:
    """Half-open interval (lo, hi] for theta_1; None means unbounded."""

    lo: Fraction | None = None
    hi: Fraction | None = None

    @staticmethod
    def of(lo, hi) -> "SearchWindow":
        return SearchWindow(None if lo is None else Fraction(lo),
                            None if hi is None else Fraction(hi))


@dataclass(frozen=True)
class SearchSpec:
    k_min: int
    k_max: int
    d_min: int
    d_max: int
    window: SearchWindow = SearchWindow()
    conditions: str = "paper"
    prunes: tuple = ("d4-window", "a3-vs-window", "b2-equals-a3", "b2-above-a3")
    bipartite: bool | None = None
    strict_paper: bool = False
    parallelism: int = 1
    node_budget: int | None = None

    def __post_init__(self):
        if self.k_min < 3 or self.k_max < self.k_min:
            raise ValueError("need 3 <= k_min <= k_max")
        if self.d_min < 2 or self.d_max < self.d_min:
            raise ValueError("need 2 <= d_min <= d_max")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")

    def condition_names(self) -> tuple:
        return CONDITION_SETS[self.conditions]

    def active_prunes(self) -> tuple:
        names = set(self.condition_names())
        return tuple(r for r in self.prunes
                     if PRUNE_RULES[r].requires <= names)


@dataclass(frozen=True)
class AcceptedArray:
    array: IntersectionArray
    report: FeasibilityReport

    def to_json(self) -> dict:
        return self.report.to_json()


@dataclass
class SearchResult:
    spec: SearchSpec
    accepted: list = field(default_factory=list)
    pruned: dict = field(default_factory=dict)
    rejected: dict = field(default_factory=dict)
    nodes: int = 0
    wall_seconds: float = 0.0

    def accepted_arrays(self) -> list:
        return [a.array for a in self.accepted]

    def summary_json(self) -> dict:
        return {
            "k": [self.spec.k_min, self.spec.k_max],
            "d": [self.spec.d_min, self.spec.d_max],
            "window": [None if self.spec.window.lo is None else str(self.spec.window.lo),
                       None if self.spec.window.hi is None else str(self.spec.window.hi)],
            "conditions": self.spec.conditions,
            "accepted": [format_array(a.array) for a in self.accepted],
            "nodes": self.nodes,
            "pruned": dict(sorted(self.pruned.items())),
            "rejected": dict(sorted(self.rejected.items())),
            "wall_seconds": self.wall_seconds,
        }


# ---------------------------------------------------------------------------
# pruning rules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PruneRule:
    """`fires(arr, window)` may only return True when the unpruned path
    (conditions in `requires`, or the window test itself) rejects."""

    name: str
    requires: frozenset
    fires: object  # callable(IntersectionArray, SearchWindow) -> bool


def _hi_below_sqrt_k(arr, window) -> bool:
    return window.hi is not None and window.hi * window.hi < arr.k


def _prune_d4(arr, window):
    # theta_1 <= hi < sqrt(k) contradicts the D >= 4 lower bound on theta_1
    return arr.diameter >= 4 and _hi_below_sqrt_k(arr, window)


def _prune_a3(arr, window):
    # a_3 >= hi forces either min(quad-root, a_3) > theta_1 or the
    # inconsistent boundary case theta_1 = a_3 < quad-root
    return (arr.diameter == 3 and _hi_below_sqrt_k(arr, window)
            and arr.a_at(3) >= window.hi)


def _small_window_gate(arr, window) -> bool:
    return (arr.diameter == 3 and arr.k >= 5
            and window.lo is not None and window.hi is not None
            and window.lo >= 1 and window.hi <= 2
            and _hi_below_sqrt_k(arr, window)
            and arr.a_at(3) < window.hi)


def _prune_b2_eq_a3(arr, window):
    if not _small_window_gate(arr, window):
        return False
    k, a3, b1, b2, c2 = arr.k, arr.a_at(3), arr.b[1], arr.b[2], arr.c[1]
    if b2 != a3:
        return False
    if b1 != k - 1:
        return True
    if 3 * c2 < k - 4:
        return True
    k3 = Fraction(k, c2)  # k_3 = k/c_2 once b_1 = k-1, b_2 = a_3 = 1
    if k3.denominator == 1 and k > k3 * (k3 - 1):
        return True
    return k > 12


def _prune_b2_above_a3(arr, window):
    if not _small_window_gate(arr, window):
        return False
    k, a3, b2 = arr.k, arr.a_at(3), arr.b[2]
    if b2 == a3:
        return False
    if is_bipartite_pattern(arr):
        if not 2 <= b2 <= 4 or k > 16:
            return True
        lo2, hi2 = window.lo ** 2, window.hi ** 2
        return b2 <= lo2 or b2 > hi2
    return k > 25


PRUNE_RULES = {
    "d4-window": PruneRule("d4-window",
                           frozenset({"bound.theta1-d4"}), _prune_d4),
    "a3-vs-window": PruneRule("a3-vs-window",
                              frozenset({"bound.theta1-vs-a3", "equiv.shilla"}),
                              _prune_a3),
    "b2-equals-a3": PruneRule("b2-equals-a3",
                              frozenset({"window.b2-equals-a3", "basic.k-integral",
                                         "bound.main-product"}),
                              _prune_b2_eq_a3),
    "b2-above-a3": PruneRule("b2-above-a3",
                             frozenset({"window.b2-above-a3",
                                        "bipartite.theta1-sqrt-b2",
                                        "bipartite.divisibility"}),
                             _prune_b2_above_a3),
}


# ---------------------------------------------------------------------------
# generation and the staged per-array pipeline
# ---------------------------------------------------------------------------

def generate_candidates(D: int, k: int, b1: int):
    """All (b, c) with b = (k, b1, >= ... >= b_{D-1} >= 1) and
    1 = c_1 <= ... <= c_D <= k, with b_i >= c_j whenever i + j <= D."""
    bs: list = []
    bs_cur: list = []

    def rec_b(i: int, last: int):
        if i == D:
            bs.append(tuple([k, b1] + bs_cur))
            return
        for x in range(1, last + 1):
            bs_cur.append(x)
            rec_b(i + 1, x)
            bs_cur.pop()

    if D == 2:
        bs.append((k, b1))
    else:
        rec_b(2, b1)

    for b in bs:
        cs_cur = [1]

        def rec_c(j: int):
            if j == D + 1:
                yield tuple(cs_cur)
                return
            upper = k if j == D else min(b[D - j], k)
            for x in range(cs_cur[-1], upper + 1):
                cs_cur.append(x)
                yield from rec_c(j + 1)
                cs_cur.pop()

        yield from ((b, c) for c in rec_c(2))


def cheap_integer_failure(b: tuple, c: tuple, need_parity: bool) -> str | None:
    """First failing integer-arithmetic condition name, or None."""
    D, k = len(b), b[0]
    a = [k - (b[i] if i < D else 0) - (c[i - 1] if i >= 1 else 0)
         for i in range(D + 1)]
    if any(x < 0 for x in a):
        return "basic.a-nonnegative"
    ki, ks = 1, [1]
    for i in range(1, D + 1):
        ki *= b[i - 1]
        if ki % c[i - 1]:
            return "basic.k-integral"
        ki //= c[i - 1]
        ks.append(ki)
    if need_parity:
        v = sum(ks)
        if any((v * ks[i] * a[i]) % 2 for i in range(D + 1)):
            return "basic.parity"
    return None


def theta1_in_window(arr: IntersectionArray, window: SearchWindow) -> bool:
    """Exact test via Sturm counts: theta_1 > lo iff more than one root
    exceeds lo, and theta_1 <= hi iff at most one root exceeds hi."""
    if window.lo is None and window.hi is None:
        return True
    p = full_matrix(arr).charpoly()
    if window.lo is not None and count_roots(p, window.lo, None) < 2:
        return False
    if window.hi is not None and count_roots(p, window.hi, None) > 1:
        return False
    return True


def _bump(stats: dict, key: str) -> None:
    stats[key] = stats.get(key, 0) + 1


def run_task(spec: SearchSpec, task: tuple) -> dict:
    """Exhaust one (D, k, b1) subtree; self-contained for process pools."""
    D, k, b1 = task
    prune_rules = [PRUNE_RULES[n] for n in spec.active_prunes()]
    names = spec.condition_names()
    need_parity = "basic.parity" in names and not spec.strict_paper
    accepted, pruned, rejected = [], {}, {}
    nodes = 0
    for b, c in generate_candidates(D, k, b1):
        nodes += 1
        fail = cheap_integer_failure(b, c, need_parity)
        if fail:
            _bump(rejected, fail)
            continue
        arr = IntersectionArray(b, c)
        hit = next((r.name for r in prune_rules if r.fires(arr, spec.window)), None)
        if hit:
            _bump(pruned, hit)
            continue
        if spec.bipartite is not None and is_bipartite_pattern(arr) != spec.bipartite:
            _bump(rejected, "filter.bipartite")
            continue
        if not theta1_in_window(arr, spec.window):
            _bump(rejected, "window.theta1")
            continue
        report = full_report(arr, spec.conditions, spec.strict_paper)
        if report.passed:
            accepted.append(AcceptedArray(arr, report))
        else:
            _bump(rejected, report.failures[0].name)
    return {"accepted": accepted, "pruned": pruned, "rejected": rejected,
            "nodes": nodes}


def _tasks(spec: SearchSpec) -> list:
    return [(D, k, b1)
            for D in range(spec.d_min, spec.d_max + 1)
            for k in range(spec.k_min, spec.k_max + 1)
            for b1 in range(1, k)]


def enumerate_arrays(spec: SearchSpec, on_accept=None) -> SearchResult:
    """Run the search; deterministic output order regardless of parallelism.

    `on_accept`, when given, is called with each AcceptedArray in the
    deterministic (D, k, b, c) task order as results are merged.
    """
    start = time.perf_counter()
    result = SearchResult(spec=spec)
    tasks = _tasks(spec)

    def consume(part: dict) -> None:
        result.nodes += part["nodes"]
        if spec.node_budget is not None and result.nodes > spec.node_budget:
            raise NodeBudgetExceeded(
                f"visited {result.nodes} nodes, budget {spec.node_budget}")
        for name, n in part["pruned"].items():
            result.pruned[name] = result.pruned.get(name, 0) + n
        for name, n in part["rejected"].items():
            result.rejected[name] = result.rejected.get(name, 0) + n
        for acc in part["accepted"]:
            result.accepted.append(acc)
            if on_accept is not None:
                on_accept(acc)

    if spec.parallelism == 1:
        for task in tasks:
            consume(run_task(spec, task))
    else:
        with ProcessPoolExecutor(max_workers=spec.parallelism) as pool:
            for part in pool.map(run_task, [spec] * len(tasks), tasks,
                                 chunksize=4):
                consume(part)

    result.accepted.sort(key=lambda a: a.array.key())
    result.wall_seconds = time.perf_counter() - start
    return result


# ---------------------------------------------------------------------------
# reproduction of the builtin table
# ---------------------------------------------------------------------------

@dataclass
class ReproductionResult:
    strata: dict
    missing: list
    extra: list
    wall_seconds: float

    @property
    def ok(self) -> bool:
        return not self.missing

    def to_json(self) -> dict:
        return {
            "strata": {name: res.summary_json() for name, res in self.strata.items()},
            "found": sorted({format_array(a) for res in self.strata.values()
                             for a in res.accepted_arrays()}),
            "missing": [format_array(a) for a in self.missing],
            "extra": [format_array(a) for a in self.extra],
            "ok": self.ok,
            "wall_seconds": self.wall_seconds,
        }


def reproduce_table1(parallelism: int = 1, small_k_d_max: int = 10,
                     strict_paper: bool = False) -> ReproductionResult:
    """Re-run the three-part search behind the builtin 23-row table and diff.

    Strata: valency 3-4 up to diameter `small_k_d_max`; diameter-3
    non-bipartite with 5 <= k <= 25; diameter-3 bipartite with k <= 16.
    The window is theta_1 in (1, 2] throughout.
    """
    start = time.perf_counter()
    window = SearchWindow.of(1, 2)
    common = dict(window=window, conditions="paper",
                  strict_paper=strict_paper, parallelism=parallelism)
    strata = {
        "small-valency": SearchSpec(k_min=3, k_max=4, d_min=3,
                                    d_max=small_k_d_max, **common),
        "d3-non-bipartite": SearchSpec(k_min=5, k_max=25, d_min=3, d_max=3,
                                       bipartite=False, **common),
        "d3-bipartite": SearchSpec(k_min=5, k_max=16, d_min=3, d_max=3,
                                   bipartite=True, **common),
    }
    results = {name: enumerate_arrays(s) for name, s in strata.items()}
    found = {format_array(a): a for res in results.values()
             for a in res.accepted_arrays()}
    table = {format_array(e.array): e.array for e in table1_entries()}
    missing = [arr for text, arr in sorted(table.items()) if text not in found]
    extra = [arr for text, arr in sorted(found.items()) if text not in table]
    return ReproductionResult(strata=results, missing=missing, extra=extra,
                              wall_seconds=time.perf_counter() - start)
