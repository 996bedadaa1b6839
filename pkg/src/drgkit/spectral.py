"""Tridiagonal intersection matrices and exact spectra.

The full (D+1)x(D+1) matrix has rows (c_i, a_i, b_i); its eigenvalues are the
D+1 distinct eigenvalues k = theta_0 > ... > theta_D of the array.  The
reduced DxD matrix drops the valency row/column; its eigenvalues are
theta_1..theta_D.  Both have positive off-diagonals, hence are similar to
symmetric tridiagonal matrices and have simple real eigenvalues, which is
what makes Sturm isolation exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import IntersectionArray, derive_parameters
from .exact import (
    ExactValue,
    IsolationError,
    interval_product,
    poly_add,
    poly_divmod,
    poly_eval,
    poly_ext_inverse,
    poly_mul,
    poly_scale,
    poly_trim,
    power_sums,
)


class SubmatrixError(ValueError):
    """Raised when an interlacing query is not about a principal submatrix."""


@dataclass(frozen=True)
class TridiagonalMatrix:
    """Integer tridiagonal matrix with strictly positive off-diagonals."""

    diag: tuple
    sub: tuple
    sup: tuple

    def __post_init__(self):
        n = len(self.diag)
        if len(self.sub) != n - 1 or len(self.sup) != n - 1:
            raise ValueError("off-diagonals must have length n-1")
        if any(x <= 0 for x in self.sub) or any(x <= 0 for x in self.sup):
            raise ValueError("off-diagonal entries must be strictly positive")

    @property
    def order(self) -> int:
        return len(self.diag)

    def entry(self, i: int, j: int) -> int:
        if i == j:
            return self.diag[i]
        if j == i + 1:
            return self.sup[i]
        if j == i - 1:
            return self.sub[j]
        return 0

    def charpoly(self) -> tuple:
        """det(xI - M) by the three-term recurrence, exact integers."""
        prev: tuple = (1,)
        cur: tuple = (-self.diag[0], 1)
        for i in range(1, self.order):
            nxt = poly_add(poly_mul((-self.diag[i], 1), cur),
                           poly_scale(prev, -self.sub[i - 1] * self.sup[i - 1]))
            prev, cur = cur, nxt
        return poly_trim(tuple(int(c) for c in cur))

    def eigenvalues(self) -> list:
        """Exact eigenvalues, descending."""
        return list(reversed(ExactValue.roots_of(self.charpoly())))

    def to_dense(self) -> np.ndarray:
        n = self.order
        m = np.zeros((n, n))
        for i in range(n):
            m[i, i] = self.diag[i]
            if i + 1 < n:
                m[i, i + 1] = self.sup[i]
                m[i + 1, i] = self.sub[i]
        return m


def full_matrix(arr: IntersectionArray) -> TridiagonalMatrix:
    """(D+1)x(D+1) tridiagonal matrix with diagonal (a_0..a_D),
    superdiagonal (b_0..b_{D-1}) and subdiagonal (c_1..c_D)."""
    D = arr.diameter
    return TridiagonalMatrix(
        diag=tuple(arr.a_at(i) for i in range(D + 1)),
        sub=arr.c,
        sup=arr.b,
    )


def reduced_matrix(arr: IntersectionArray) -> TridiagonalMatrix:
    """DxD tridiagonal matrix with diagonal (-c_1, k-b_1-c_2, ..., k-b_{D-1}-c_D),
    whose eigenvalues are theta_1..theta_D."""
    D = arr.diameter
    k = arr.k
    diag = [-arr.c[0]] + [k - arr.b[i] - arr.c[i] for i in range(1, D)]
    return TridiagonalMatrix(
        diag=tuple(diag),
        sub=arr.c[: D - 1],
        sup=arr.b[1:],
    )


# ---------------------------------------------------------------------------
# standard sequences
# ---------------------------------------------------------------------------

def sequence_polynomials(arr: IntersectionArray) -> list:
    """u_i as polynomials in the eigenvalue: u_0 = 1, u_1 = x/k and
    c_i u_{i-1} + a_i u_i + b_i u_{i+1} = x u_i for i = 1..D-1."""
    D, k = arr.diameter, arr.k
    polys = [(Fraction(1),), (Fraction(0), Fraction(1, k))]
    for i in range(1, D):
        rhs = poly_add(poly_mul((0, 1), polys[i]),
                       poly_add(poly_scale(polys[i], -arr.a_at(i)),
                                poly_scale(polys[i - 1], -arr.c_at(i))))
        polys.append(poly_scale(rhs, Fraction(1, arr.b[i])))
    return polys


def count_sign_changes(signs) -> int:
    """Pairs (i, j), i < j, with opposite signs and only zeros between."""
    seq = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


@dataclass(frozen=True)
class StandardSequence:
    theta: ExactValue
    u: tuple
    signs: tuple
    sign_changes: int


def standard_sequence(arr: IntersectionArray, theta) -> StandardSequence:
    """Standard sequence at any real test value.

    `theta` may be an ExactValue, int or Fraction.  Entries are exact
    Fractions when theta is rational, interval-backed floats otherwise;
    the sign data is exact in both cases.
    """
    if not isinstance(theta, ExactValue):
        theta = ExactValue.from_rational(theta)
    polys = sequence_polynomials(arr)
    if theta.rational is not None:
        q = theta.rational
        u = tuple(poly_eval(p, q) for p in polys)
        signs = tuple((x > 0) - (x < 0) for x in u)
    else:
        u = tuple(_float_at(p, theta) for p in polys)
        signs = tuple(theta.sign_of(p) for p in polys)
    return StandardSequence(theta=theta, u=u, signs=signs,
                            sign_changes=count_sign_changes(signs))


def _float_at(poly, theta: ExactValue) -> float:
    return float(poly_eval(tuple(map(float, poly)), float(theta)))


# ---------------------------------------------------------------------------
# multiplicities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiplicityValue:
    """Eigenvalue multiplicity v / sum_i k_i u_i(theta)^2.

    `exact` is set when theta is rational.  For irrational theta the value is
    reported as a float with a rigorous interval half-width `error` and the
    nearest-integer `candidate`; `integral` is decided exactly either way
    (for the irrational case by checking that theta is a root of
    sum_i k_i u_i(x)^2 - v/candidate).
    """

    value: float
    error: float
    candidate: int
    exact: Fraction | None
    integral: bool

    def to_json(self) -> dict:
        return {
            "float": self.value,
            "error": self.error,
            "candidate": self.candidate,
            "exact": str(self.exact) if self.exact is not None else None,
            "integral": self.integral,
        }


def _norm_polynomial(arr: IntersectionArray) -> tuple:
    """sum_i k_i u_i(x)^2 as a rational polynomial."""
    der = derive_parameters(arr)
    polys = sequence_polynomials(arr)
    acc: tuple = ()
    for ki, p in zip(der.kseq, polys):
        acc = poly_add(acc, poly_scale(poly_mul(p, p), ki))
    return acc


def _eval_interval(poly, lo: Fraction, hi: Fraction) -> tuple:
    """Rigorous enclosure of poly([lo, hi]) by interval Horner."""
    alo = ahi = Fraction(0)
    for c in reversed(poly):
        plo, phi = interval_product(alo, ahi, lo, hi)
        alo, ahi = plo + c, phi + c
    return alo, ahi


def multiplicity_of(arr: IntersectionArray, theta: ExactValue,
                    norm_poly=None, v: Fraction | None = None) -> MultiplicityValue:
    if norm_poly is None:
        norm_poly = _norm_polynomial(arr)
    if v is None:
        v = derive_parameters(arr).v
    if theta.rational is not None:
        s = poly_eval(norm_poly, theta.rational)
        m = v / s
        integral = m.denominator == 1 and m > 0
        return MultiplicityValue(value=float(m), error=0.0,
                                 candidate=int(round(m)), exact=m,
                                 integral=integral)
    tol = Fraction(1, 10 ** 6)
    while True:
        slo, shi = _eval_interval(norm_poly, theta.lo, theta.hi)
        if slo > 0:
            mlo, mhi = v / shi, v / slo
            if mhi - mlo <= tol:
                mid = (mlo + mhi) / 2
                cand = int(mid + Fraction(1, 2))  # floor(mid + 1/2)
                # near-half-integer escalation: tighten before trusting cand
                if abs(mid - cand) > Fraction(499, 1000) and tol > Fraction(1, 10 ** 9):
                    tol = Fraction(1, 10 ** 9)
                    continue
                break
        theta.refine_step()
    shifted = poly_add(norm_poly, (-v / cand,)) if cand > 0 else None
    integral = cand > 0 and theta.sign_of(shifted) == 0
    return MultiplicityValue(value=float(mid), error=float((mhi - mlo) / 2),
                             candidate=cand, exact=None, integral=integral)


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Spectrum:
    """Exact eigenvalues (descending), their multiplicities and the integer
    characteristic polynomial of the full intersection matrix."""

    eigenvalues: tuple
    multiplicities: tuple
    charpoly: tuple

    @property
    def theta0(self) -> ExactValue:
        return self.eigenvalues[0]

    def theta(self, i: int) -> ExactValue:
        return self.eigenvalues[i]

    def to_json(self) -> dict:
        return {
            "eigenvalues": [ev.to_json() for ev in self.eigenvalues],
            "multiplicities": [m.to_json() for m in self.multiplicities],
            "charpoly": list(self.charpoly),
        }


def spectrum(arr: IntersectionArray) -> Spectrum:
    """Exact spectrum of the full intersection matrix, multiplicities attached."""
    p = full_matrix(arr).charpoly()
    roots = list(reversed(ExactValue.roots_of(p)))
    if len(roots) != arr.diameter + 1:
        raise IsolationError(
            f"expected {arr.diameter + 1} simple real eigenvalues, found {len(roots)}")
    if roots[0].rational != arr.k:
        raise IsolationError("largest eigenvalue must equal the valency exactly")
    for ev in roots:
        ev.refine_to(Fraction(1, 10 ** 12))
    norm_poly = _norm_polynomial(arr)
    v = derive_parameters(arr).v
    mults = tuple(multiplicity_of(arr, ev, norm_poly, v) for ev in roots)
    return Spectrum(eigenvalues=tuple(roots), multiplicities=mults,
                    charpoly=p)


def weighted_moment(arr: IntersectionArray, power: int) -> Fraction:
    """Exact spectral moment sum_i m_i theta_i^power.

    Equals v * trace(x^power / S(x) mod P) where S is the squared-norm
    polynomial and P the characteristic polynomial; exact for irrational
    eigenvalues too, since the trace is a symmetric function of the roots.
    """
    p = full_matrix(arr).charpoly()
    der = derive_parameters(arr)
    s_inv = poly_ext_inverse(_norm_polynomial(arr), p)
    f = poly_divmod(poly_mul(_monomial(power), s_inv), p)[1]
    sums = power_sums(p, len(p) - 1)
    return der.v * sum((c * sums[i] for i, c in enumerate(f)), Fraction(0))


def _monomial(power: int) -> tuple:
    return tuple([0] * power + [1])


# ---------------------------------------------------------------------------
# interlacing and float cross-checks
# ---------------------------------------------------------------------------

def find_principal_offset(a: TridiagonalMatrix, b: TridiagonalMatrix) -> int:
    """Offset of b as a contiguous principal block of a, else SubmatrixError."""
    n, m = a.order, b.order
    if m > n:
        raise SubmatrixError("submatrix larger than matrix")
    for off in range(n - m + 1):
        if all(b.entry(i, j) == a.entry(off + i, off + j)
               for i in range(m) for j in range(max(0, i - 1), min(m, i + 2))):
            return off
    raise SubmatrixError("not a contiguous principal submatrix")


def eigenvalue_interlacing(ea: list, eb: list) -> bool:
    """Exact interlacing inequalities for descending eigenvalue lists:
    lambda_{n-m+i}(A) <= lambda_i(B) <= lambda_i(A) for i = 1..m."""
    n, m = len(ea), len(eb)
    if m > n:
        return False
    for i in range(1, m + 1):
        if not (eb[i - 1].cmp(ea[i - 1]) <= 0 and
                ea[n - m + i - 1].cmp(eb[i - 1]) <= 0):
            return False
    return True


def interlaces(a: TridiagonalMatrix, b: TridiagonalMatrix) -> bool:
    """Exact eigenvalue interlacing of a principal submatrix b inside a."""
    find_principal_offset(a, b)
    return eigenvalue_interlacing(a.eigenvalues(), b.eigenvalues())


def float_spectrum(arr: IntersectionArray) -> np.ndarray:
    """Floating cross-check path: eigenvalues of the symmetrized full matrix,
    descending.  Never used for exact decisions."""
    full = full_matrix(arr)
    n = full.order
    m = np.zeros((n, n))
    for i in range(n):
        m[i, i] = full.diag[i]
        if i + 1 < n:
            off = (full.sup[i] * full.sub[i]) ** 0.5
            m[i, i + 1] = m[i + 1, i] = off
    return np.sort(np.linalg.eigvalsh(m))[::-1]
