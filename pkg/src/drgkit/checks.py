"""Feasibility conditions as named, machine-checkable predicates.

Every condition yields a verdict pass / fail / not-applicable plus a witness
string; boundary cases (equalities such as theta_2 = -1 or theta_1 = a_3) are
decided in exact arithmetic, never by tolerance.  Conditions marked
``extra_paper`` are standard feasibility folklore rather than part of the
inequality framework being reproduced and can be switched off.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .core import (
    IntersectionArray,
    derive_parameters,
    format_array,
    is_antipodal_pattern,
    is_bipartite_pattern,
    is_monotone,
)
from .exact import ExactValue, compare_product
from .spectral import Spectrum, spectrum, weighted_moment

PASS = "pass"
FAIL = "fail"
NA = "not-applicable"


@dataclass(frozen=True)
class ConditionResult:
    name: str
    verdict: str
    witness: str = ""
    extra_paper: bool = False

    def to_json(self) -> dict:
        return {"name": self.name, "verdict": self.verdict,
                "witness": self.witness, "extra_paper": self.extra_paper}


@dataclass(frozen=True)
class TerwilligerBounds:
    """Bounds sandwiching every local-graph eigenvalue other than a_1:
    upper2 = -1 - b1/(theta_D + 1) and lowerK = -1 - b1/(theta_1 + 1)."""

    upper2: ExactValue
    lowerK: ExactValue


@dataclass
class FeasibilityReport:
    array: IntersectionArray
    flags: dict
    conditions: list = field(default_factory=list)

    def add(self, results) -> None:
        self.conditions.extend(results)

    @property
    def failures(self) -> list:
        return [c for c in self.conditions if c.verdict == FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    def condition(self, name: str) -> ConditionResult:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "array": format_array(self.array),
            "flags": dict(self.flags),
            "passed": self.passed,
            "conditions": [c.to_json() for c in self.conditions],
        }

    def to_text(self) -> str:
        lines = [f"array {format_array(self.array)}"]
        lines.append("flags: " + ", ".join(
            f"{k}={str(v).lower()}" for k, v in self.flags.items()))
        width = max(len(c.name) for c in self.conditions) if self.conditions else 0
        for c in self.conditions:
            tag = " [extra]" if c.extra_paper else ""
            lines.append(f"  {c.name:<{width}}  {c.verdict:<14} {c.witness}{tag}")
        lines.append("overall: " + ("pass" if self.passed else "fail"))
        return "\n".join(lines)


class ArrayAnalysis:
    """Caches the derived data shared by the condition predicates."""

    def __init__(self, arr: IntersectionArray):
        self.arr = arr

    @cached_property
    def derived(self):
        return derive_parameters(self.arr)

    @cached_property
    def structure_ok(self) -> bool:
        return (is_monotone(self.arr)
                and all(a >= 0 for a in self.derived.a)
                and all(k.denominator == 1 for k in self.derived.kseq))

    @cached_property
    def spectrum(self) -> Spectrum:
        return spectrum(self.arr)

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite_pattern(self.arr)

    @cached_property
    def antipodal(self) -> bool:
        return is_antipodal_pattern(self.arr)

    @cached_property
    def shilla(self) -> bool:
        # array-level form of the Shilla condition for D = 3
        arr = self.arr
        if arr.diameter != 3:
            return False
        a1, a3 = arr.a_at(1), arr.a_at(3)
        return a3 > 0 and arr.k == a3 * (a3 - a1)

    @cached_property
    def local_quad_roots(self):
        """Roots of x^2 - a1 x - k (negative root first)."""
        a1, k = self.arr.a_at(1), self.arr.k
        roots = ExactValue.roots_of((-k, -a1, 1))
        return roots[0], roots[1]

    def theta(self, i: int) -> ExactValue:
        return self.spectrum.eigenvalues[i]

    @property
    def theta_min(self) -> ExactValue:
        return self.spectrum.eigenvalues[-1]

    def flags(self) -> dict:
        return {"bipartite": self.bipartite, "antipodal": self.antipodal,
                "shilla": self.shilla}


def _fmt(x) -> str:
    if isinstance(x, ExactValue):
        if x.rational is not None:
            return str(x.rational)
        return f"~{float(x):.12g}"
    return str(x)


# ---------------------------------------------------------------------------
# basic feasibility
# ---------------------------------------------------------------------------

def check_basic(an: ArrayAnalysis) -> list:
    arr, der = an.arr, an.derived
    b, c, D = arr.b, arr.c, arr.diameter
    out = []

    ok = D < 2 or (b[0] > b[1] and all(b[i] >= b[i + 1] for i in range(1, D - 1)))
    out.append(ConditionResult(
        "basic.b-monotone", PASS if ok else FAIL,
        "" if ok else f"b = {b} is not strictly-then-weakly decreasing"))

    ok = c[0] == 1 and all(c[i] <= c[i + 1] for i in range(D - 1))
    out.append(ConditionResult(
        "basic.c-monotone", PASS if ok else FAIL,
        "" if ok else f"c = {c} must start at 1 and be non-decreasing"))

    bad = [(i, j) for i in range(D) for j in range(1, D + 1)
           if i + j <= D and arr.b[i] < arr.c[j - 1]]
    out.append(ConditionResult(
        "basic.b-ge-c", PASS if not bad else FAIL,
        "" if not bad else f"b_i < c_j at (i,j) = {bad[0]}"))

    neg = [i for i, a in enumerate(der.a) if a < 0]
    out.append(ConditionResult(
        "basic.a-nonnegative", PASS if not neg else FAIL,
        "" if not neg else f"a_{neg[0]} = {der.a[neg[0]]} < 0"))

    frac = [i for i, kv in enumerate(der.kseq) if kv.denominator != 1]
    out.append(ConditionResult(
        "basic.k-integral", PASS if not frac else FAIL,
        "" if not frac else f"k_{frac[0]} = {der.kseq[frac[0]]} not an integer"))

    structural = all(r.verdict == PASS for r in out)
    if not structural:
        skipped = "skipped: structural failure"
        out.append(ConditionResult("basic.parity", NA, skipped, extra_paper=True))
        out.append(ConditionResult("basic.multiplicity-integral", NA, skipped))
        out.append(ConditionResult("basic.moments", NA, skipped))
        return out

    odd = [i for i in range(D + 1)
           if (der.v * der.kseq[i] * der.a[i]) % 2 != 0]
    out.append(ConditionResult(
        "basic.parity", PASS if not odd else FAIL,
        "" if not odd else f"v*k_i*a_i odd at i = {odd[0]}",
        extra_paper=True))

    mults = an.spectrum.multiplicities
    bad_m = [i for i, m in enumerate(mults) if not m.integral]
    out.append(ConditionResult(
        "basic.multiplicity-integral", PASS if not bad_m else FAIL,
        ("m = " + ",".join(str(m.candidate) for m in mults)) if not bad_m
        else f"m(theta_{bad_m[0]}) = {mults[bad_m[0]].value:.9g} not a positive integer"))

    k, a1, v = arr.k, arr.a_at(1), der.v
    expect = [v, Fraction(0), v * k, v * k * a1]
    got = [weighted_moment(arr, t) for t in range(4)]
    ok = got == expect
    out.append(ConditionResult(
        "basic.moments", PASS if ok else FAIL,
        f"sum m*theta^t = {[str(g) for g in got]}" if ok
        else f"moments {[str(g) for g in got]} != {[str(e) for e in expect]}"))
    return out


# ---------------------------------------------------------------------------
# eigenvalue bounds from the closed neighbourhood quotient
# ---------------------------------------------------------------------------

def check_eigenvalue_bounds(an: ArrayAnalysis) -> list:
    """theta_D strictly below the negative root of x^2 - a1 x - k; theta_1 at
    least min(positive root, a_3); for D >= 4, theta_1 at least the positive
    root itself."""
    arr = an.arr
    if arr.diameter < 3 or arr.k < 3:
        na = "needs k >= 3 and D >= 3"
        return [ConditionResult(f"bound.{n}", NA, na)
                for n in ("theta-min", "theta1-vs-a3", "theta1-d4")]
    rho_neg, rho_pos = an.local_quad_roots
    out = []

    ok = an.theta_min.cmp(rho_neg) < 0
    out.append(ConditionResult(
        "bound.theta-min", PASS if ok else FAIL,
        f"theta_D = {_fmt(an.theta_min)} vs {_fmt(rho_neg)}"))

    a3 = arr.a_at(3)
    floor = rho_pos if rho_pos.cmp_rational(a3) <= 0 else ExactValue.from_rational(a3)
    ok = an.theta(1).cmp(floor) >= 0
    out.append(ConditionResult(
        "bound.theta1-vs-a3", PASS if ok else FAIL,
        f"theta_1 = {_fmt(an.theta(1))} vs min(quad-root, a_3) = {_fmt(floor)}"))

    if arr.diameter < 4:
        out.append(ConditionResult("bound.theta1-d4", NA, "needs D >= 4"))
    else:
        ok = an.theta(1).cmp(rho_pos) >= 0
        out.append(ConditionResult(
            "bound.theta1-d4", PASS if ok else FAIL,
            f"theta_1 = {_fmt(an.theta(1))} vs {_fmt(rho_pos)}"))
    return out


# ---------------------------------------------------------------------------
# diameter-three location results and the theta_2 = -1 equivalence
# ---------------------------------------------------------------------------

def check_d3_bounds(an: ArrayAnalysis) -> list:
    arr = an.arr
    names = ("bound.theta2-window", "bound.sep-a3-b2", "bound.sep-a1-c2",
             "equiv.theta2-minus-one")
    if arr.diameter != 3:
        return [ConditionResult(n, NA, "needs D = 3") for n in names]
    k, a1, a3 = arr.k, arr.a_at(1), arr.a_at(3)
    b2, c2, c3 = arr.b[2], arr.c[1], arr.c[2]
    t1, t2, t3 = an.theta(1), an.theta(2), an.theta_min
    out = []

    lo, hi = sorted((-1, a3 - b2))
    ok = t2.cmp_rational(lo) >= 0 and t2.cmp_rational(hi) <= 0
    out.append(ConditionResult(
        names[0], PASS if ok else FAIL,
        f"theta_2 = {_fmt(t2)} in [{lo}, {hi}]"))

    ok = t1.cmp_rational(a3 - b2) > 0 and t3.cmp_rational(a3 - b2) < 0
    out.append(ConditionResult(
        names[1], PASS if ok else FAIL,
        f"a_3 - b_2 = {a3 - b2} strictly between theta_3 and theta_1"))

    m = a1 - c2 + 1
    ok = t1.cmp_rational(m) > 0 and t3.cmp_rational(m) < 0
    out.append(ConditionResult(
        names[2], PASS if ok else FAIL,
        f"a_1 - c_2 + 1 = {m} strictly between theta_3 and theta_1"))

    triple = (t2.cmp_rational(-1) == 0,
              t2.cmp_rational(a3 - b2) == 0,
              k + 1 == c3 + b2)
    consistent = len(set(triple)) == 1
    state = "all true (distance-3 graph strongly regular)" if all(triple) else \
            "all false" if not any(triple) else f"mixed {triple}"
    out.append(ConditionResult(
        names[3], PASS if consistent else FAIL,
        f"theta2=-1 / theta2=a3-b2 / k+1=c3+b2: {state}"))
    return out


# ---------------------------------------------------------------------------
# Shilla characterization and the second-eigenvalue classification
# ---------------------------------------------------------------------------

def check_shilla(an: ArrayAnalysis, strict_paper: bool = False) -> list:
    arr = an.arr
    out = []
    if arr.diameter != 3:
        out.append(ConditionResult("equiv.shilla", NA, "needs D = 3"))
    else:
        a1, a3, k = arr.a_at(1), arr.a_at(3), arr.k
        _, rho_pos = an.local_quad_roots
        triple = (an.theta(1).cmp(rho_pos) == 0,
                  k == a3 * (a3 - a1),
                  an.theta(1).cmp_rational(a3) == 0)
        consistent = len(set(triple)) == 1
        out.append(ConditionResult(
            "equiv.shilla", PASS if consistent else FAIL,
            f"theta1=quad-root / k=a3(a3-a1) / theta1=a3: "
            f"{'all true' if all(triple) else 'all false' if not any(triple) else triple}"))

    if arr.diameter < 3:
        out.append(ConditionResult("class.quad-root-theta1", NA, "needs D >= 3"))
        return out
    _, rho_pos = an.local_quad_roots
    if an.theta(1).cmp(rho_pos) != 0:
        out.append(ConditionResult(
            "class.quad-root-theta1", PASS,
            "theta_1 below the local quadratic root; nothing to classify"))
        return out
    if arr.diameter == 3:
        ok, why = True, "D = 3, Shilla by definition"
    elif arr.diameter == 4:
        if strict_paper:
            ok, why = True, "D = 4 (antipodality test disabled)"
        else:
            ok = an.antipodal
            why = f"D = 4, antipodal = {ok}"
    else:
        ok, why = False, f"theta_1 equals the quadratic root but D = {arr.diameter}"
    out.append(ConditionResult(
        "class.quad-root-theta1", PASS if ok else FAIL, why))
    return out


# ---------------------------------------------------------------------------
# product bounds: the main inequality, the fundamental bound, cover identity
# ---------------------------------------------------------------------------

def check_main_inequality(an: ArrayAnalysis, strict_paper: bool = False) -> list:
    arr = an.arr
    names = ("bound.main-product", "bound.fundamental", "ident.antipodal-cover")
    if arr.diameter < 2:
        return [ConditionResult(n, NA, "needs D >= 2") for n in names]
    k, a1, b1 = arr.k, arr.a_at(1), arr.b[1]
    t1, tD = an.theta(1), an.theta_min
    out = []

    sign = compare_product(t1.shift(1), tD.shift(1), -b1)
    if arr.diameter == 2:
        ok = sign == 0
        state = "equality" if sign == 0 else "no equality"
    else:
        ok = sign < 0
        state = "strict" if sign < 0 else ("equality" if sign == 0 else "violated")
    out.append(ConditionResult(
        names[0], PASS if ok else FAIL,
        f"(theta_1+1)(theta_D+1) vs -b_1 = {-b1}: {state} (D = {arr.diameter})"))

    s = Fraction(k, a1 + 1)
    rhs = -Fraction(k * a1 * b1, (a1 + 1) ** 2)
    sign = compare_product(t1.shift(s), tD.shift(s), rhs)
    out.append(ConditionResult(
        names[1], PASS if sign >= 0 else FAIL,
        f"(theta_1 + {s})(theta_D + {s}) vs {rhs}: "
        f"{'equality' if sign == 0 else 'strict' if sign > 0 else 'violated'}"))

    if strict_paper:
        out.append(ConditionResult(names[2], NA,
                                   "antipodality test disabled", extra_paper=True))
    elif arr.diameter == 3 and an.antipodal and an.structure_ok:
        k3 = an.derived.kseq[3]
        r = k3 + 1
        target = Fraction(-b1) * r / (r - 1)
        sign = compare_product(t1.shift(1), tD.shift(1), target)
        out.append(ConditionResult(
            names[2], PASS if sign == 0 else FAIL,
            f"r = {r}: (theta_1+1)(theta_3+1) vs -b_1*r/(r-1) = {target}: "
            f"{'equal' if sign == 0 else 'different'}",
            extra_paper=True))
    else:
        out.append(ConditionResult(
            names[2], NA, "needs D = 3 antipodal", extra_paper=True))
    return out


def terwilliger_bounds(an: ArrayAnalysis):
    """Local-eigenvalue bounds -1 - b1/(theta_D+1) and -1 - b1/(theta_1+1),
    and their consequence: both lie strictly inside (theta_D, theta_1)."""
    arr = an.arr
    names = ("bound.local-upper2", "bound.local-lowerK")
    if arr.diameter < 3:
        return None, [ConditionResult(n, NA, "needs D >= 3") for n in names]
    b1 = arr.b[1]
    t1, tD = an.theta(1), an.theta_min
    upper2 = tD.shift(1).reciprocal().scale(-b1).shift(-1)
    lowerK = t1.shift(1).reciprocal().scale(-b1).shift(-1)
    bounds = TerwilligerBounds(upper2=upper2, lowerK=lowerK)
    out = [
        ConditionResult(names[0], PASS if upper2.cmp(t1) < 0 else FAIL,
                        f"-1 - b_1/(theta_D+1) = {_fmt(upper2)} < theta_1 = {_fmt(t1)}"),
        ConditionResult(names[1], PASS if lowerK.cmp(tD) > 0 else FAIL,
                        f"-1 - b_1/(theta_1+1) = {_fmt(lowerK)} > theta_D = {_fmt(tD)}"),
    ]
    return bounds, out


# ---------------------------------------------------------------------------
# constraints backing the finiteness and small-window classification
# ---------------------------------------------------------------------------

WINDOW_LO = Fraction(1)
WINDOW_HI = Fraction(2)


def check_window_constraints(an: ArrayAnalysis) -> list:
    """Proof-derived constraints for D = 3 arrays, each gated on its
    hypothesis; the window-gated ones apply when 1 < theta_1 <= 2 and k >= 5."""
    arr = an.arr
    names = ("cap.b1-lower", "cap.cube-moment", "bipartite.theta1-sqrt-b2",
             "bipartite.divisibility", "window.a3-at-most-one",
             "window.b2-equals-a3", "window.b2-above-a3")
    if arr.diameter != 3:
        return [ConditionResult(n, NA, "needs D = 3") for n in names]
    k, a1, a3 = arr.k, arr.a_at(1), arr.a_at(3)
    b1, b2, c2 = arr.b[1], arr.b[2], arr.c[1]
    out = []

    if an.bipartite:
        out.append(ConditionResult(names[0], NA, "non-bipartite only"))
    else:
        ok = 3 * b1 >= k + 1
        out.append(ConditionResult(
            names[0], PASS if ok else FAIL, f"b_1 = {b1} vs (k+1)/3 = {Fraction(k + 1, 3)}"))

    cube = weighted_moment(arr, 3)
    out.append(ConditionResult(
        names[1], PASS if cube >= 0 else FAIL, f"sum m*theta^3 = {cube}"))

    if an.bipartite:
        ok = an.theta(1).is_root_of((-b2, 0, 1))
        out.append(ConditionResult(
            names[2], PASS if ok else FAIL,
            f"theta_1 = {_fmt(an.theta(1))} vs sqrt({b2})"))
        ok = (b2 * (b2 - 1)) % (k - b2) == 0 if k != b2 else False
        out.append(ConditionResult(
            names[3], PASS if ok else FAIL,
            f"k - b_2 = {k - b2} divides b_2(b_2-1) = {b2 * (b2 - 1)}: {ok}"))
    else:
        out.append(ConditionResult(names[2], NA, "bipartite only"))
        out.append(ConditionResult(names[3], NA, "bipartite only"))

    in_window = (k >= 5
                 and an.theta(1).cmp_rational(WINDOW_LO) > 0
                 and an.theta(1).cmp_rational(WINDOW_HI) <= 0)
    gate = "needs k >= 5 and theta_1 in (1, 2]"
    if not in_window:
        out.append(ConditionResult(names[4], NA, gate))
        out.append(ConditionResult(names[5], NA, gate))
        out.append(ConditionResult(names[6], NA, gate))
        return out

    out.append(ConditionResult(
        names[4], PASS if a3 <= 1 else FAIL, f"a_3 = {a3}"))

    if b2 == a3:
        k3 = an.derived.kseq[3]
        reasons = []
        if b1 != k - 1:
            reasons.append(f"b_1 = {b1} != k-1")
        if 3 * c2 < k - 4:
            reasons.append(f"c_2 = {c2} < (k-4)/3")
        if k3.denominator == 1 and k > k3 * (k3 - 1):
            reasons.append(f"k > k_3(k_3-1) = {k3 * (k3 - 1)}")
        if k > 12:
            reasons.append(f"k = {k} > 12")
        out.append(ConditionResult(
            names[5], PASS if not reasons else FAIL,
            "; ".join(reasons) if reasons else f"b_2 = a_3 = {a3}, k_3 = {k3}"))
        out.append(ConditionResult(names[6], NA, "b_2 = a_3 branch"))
    else:
        reasons = []
        if an.theta_min.cmp_rational(Fraction(-k, 2)) > 0:
            reasons.append(f"theta_3 = {_fmt(an.theta_min)} > -k/2")
        m3 = an.spectrum.multiplicities[-1]
        if not an.bipartite and m3.integral and 2 * m3.candidate < k:
            reasons.append(f"m_3 = {m3.candidate} < k/2 and not bipartite")
        if an.bipartite:
            if not 2 <= b2 <= 4:
                reasons.append(f"bipartite with b_2 = {b2} outside {{2,3,4}}")
            if k > 16:
                reasons.append(f"bipartite with k = {k} > 16")
        elif k > 25:
            reasons.append(f"non-bipartite with k = {k} > 25")
        out.append(ConditionResult(names[5], NA, "b_2 != a_3 branch"))
        out.append(ConditionResult(
            names[6], PASS if not reasons else FAIL,
            "; ".join(reasons) if reasons else f"b_2 = {b2} > a_3 = {a3}"))
    return out


# ---------------------------------------------------------------------------
# registry and report assembly
# ---------------------------------------------------------------------------

BASIC_CONDITIONS = (
    "basic.b-monotone", "basic.c-monotone", "basic.b-ge-c",
    "basic.a-nonnegative", "basic.k-integral", "basic.parity",
    "basic.multiplicity-integral", "basic.moments",
)

PAPER_CONDITIONS = BASIC_CONDITIONS + (
    "bound.theta-min", "bound.theta1-vs-a3", "bound.theta1-d4",
    "bound.theta2-window", "bound.sep-a3-b2", "bound.sep-a1-c2",
    "equiv.theta2-minus-one", "equiv.shilla", "class.quad-root-theta1",
    "bound.main-product", "bound.fundamental", "ident.antipodal-cover",
    "bound.local-upper2", "bound.local-lowerK",
    "cap.b1-lower", "cap.cube-moment", "bipartite.theta1-sqrt-b2",
    "bipartite.divisibility", "window.a3-at-most-one",
    "window.b2-equals-a3", "window.b2-above-a3",
)

CONDITION_SETS = {"basic": BASIC_CONDITIONS, "paper": PAPER_CONDITIONS}


def full_report(arr: IntersectionArray, conditions: str = "paper",
                strict_paper: bool = False) -> FeasibilityReport:
    """Evaluate a named condition set; spectral conditions are reported as
    not-applicable when the array fails structurally (no usable spectrum)."""
    an = ArrayAnalysis(arr)
    wanted = CONDITION_SETS[conditions] if isinstance(conditions, str) else tuple(conditions)
    report = FeasibilityReport(array=arr, flags=an.flags())

    basic = check_basic(an)
    report.add(basic)
    if any(n not in BASIC_CONDITIONS for n in wanted):
        if an.structure_ok:
            report.add(check_eigenvalue_bounds(an))
            report.add(check_d3_bounds(an))
            report.add(check_shilla(an, strict_paper))
            report.add(check_main_inequality(an, strict_paper))
            report.add(terwilliger_bounds(an)[1])
            report.add(check_window_constraints(an))
        else:
            skipped = "skipped: structural failure"
            for name in PAPER_CONDITIONS:
                if name not in BASIC_CONDITIONS:
                    report.add([ConditionResult(name, NA, skipped)])

    keep = set(wanted)
    report.conditions = [c for c in report.conditions if c.name in keep
                         and not (strict_paper and c.extra_paper)]
    return report
