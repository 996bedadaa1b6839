"""Exact real-root machinery: integer/rational polynomials, Sturm chains,
root isolation, and comparable algebraic numbers.

Polynomials are tuples of coefficients, lowest degree first.  Root isolation
works on squarefree integer polynomials (every polynomial produced by the
spectral layer has simple real roots), so an isolating interval can always be
narrowed by bisection on the sign of the polynomial at the endpoints.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


class IsolationError(RuntimeError):
    """Root isolation failed; indicates a bug, not bad input."""


# ---------------------------------------------------------------------------
# polynomial helpers (coefficients lowest degree first)
# ---------------------------------------------------------------------------

def poly_trim(cs: Sequence[Rational]) -> tuple:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_degree(cs: Sequence[Rational]) -> int:
    return len(cs) - 1


def poly_eval(cs: Sequence[Rational], x: Rational) -> Rational:
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def poly_add(f: Sequence[Rational], g: Sequence[Rational]) -> tuple:
    n = max(len(f), len(g))
    return poly_trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)
                      for i in range(n)])


def poly_neg(f: Sequence[Rational]) -> tuple:
    return tuple(-c for c in f)


def poly_sub(f: Sequence[Rational], g: Sequence[Rational]) -> tuple:
    return poly_add(f, poly_neg(g))


def poly_mul(f: Sequence[Rational], g: Sequence[Rational]) -> tuple:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return poly_trim(out)


def poly_scale(f: Sequence[Rational], s: Rational) -> tuple:
    return poly_trim([c * s for c in f])


def poly_derivative(f: Sequence[Rational]) -> tuple:
    return poly_trim([i * c for i, c in enumerate(f)][1:])


def poly_divmod(f: Sequence[Rational], g: Sequence[Rational]) -> tuple:
    """Quotient and remainder over the rationals."""
    g = poly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in f]
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 1)
    lead = Fraction(g[-1])
    while len(poly_trim(r)) >= len(g):
        r = list(poly_trim(r))
        shift = len(r) - len(g)
        coef = r[-1] / lead
        q[shift] = coef
        for i, c in enumerate(g):
            r[shift + i] -= coef * c
        r[-1] = Fraction(0)
    return poly_trim(q), poly_trim(r)


def poly_gcd(f: Sequence[Rational], g: Sequence[Rational]) -> tuple:
    """Monic gcd over the rationals (constant 1 when coprime)."""
    a, b = poly_trim(f), poly_trim(g)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return ()
    return poly_scale(a, Fraction(1, 1) / a[-1])


def poly_shift(f: Sequence[Rational], q: Rational) -> tuple:
    """Coefficients of f(x + q)."""
    out: tuple = ()
    for c in reversed(poly_trim(f)):
        out = poly_add(poly_mul(out, (q, 1)), (c,))
    return out


def poly_int_primitive(f: Sequence[Rational]) -> tuple:
    """Scale by a positive rational to a primitive integer polynomial."""
    f = poly_trim(f)
    if not f:
        return ()
    fr = [Fraction(c) for c in f]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return tuple(c // g for c in ints)


def poly_ext_inverse(f: Sequence[Rational], mod: Sequence[Rational]) -> tuple:
    """Inverse of f in Q[x]/(mod); requires gcd(f, mod) = 1."""
    # extended Euclid keeping only the cofactor of f
    r0, r1 = poly_trim(mod), poly_divmod(f, mod)[1]
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if poly_degree(r0) != 0:
        raise ZeroDivisionError("polynomial not invertible modulo given modulus")
    inv = poly_scale(t0, Fraction(1, 1) / r0[0])
    return poly_divmod(inv, mod)[1]


def power_sums(f: Sequence[int], count: int) -> list:
    """Power sums p_0..p_{count-1} of the roots of monic f (Newton's identities)."""
    f = poly_trim(f)
    n = poly_degree(f)
    lead = f[-1]
    # e_i with signs from coefficients: f = sum c_j x^j, e_i = (-1)^i c_{n-i}/lead
    e = [Fraction((-1) ** i * f[n - i], lead) if i <= n else Fraction(0)
         for i in range(count)]
    p = [Fraction(n)]
    for t in range(1, count):
        s = Fraction((-1) ** (t - 1) * t) * e[t] if t < len(e) else Fraction(0)
        for i in range(1, t):
            s += Fraction((-1) ** (i - 1)) * e[i] * p[t - i]
        p.append(s)
    return p


# ---------------------------------------------------------------------------
# Sturm chains and root counting
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=4096)
def sturm_chain(f: tuple) -> tuple:
    """Sturm chain of a squarefree integer polynomial, as primitive integer
    polynomials (positive rescaling preserves sign variations)."""
    f = poly_int_primitive(f)
    chain = [f, poly_int_primitive(poly_derivative(f))]
    while chain[-1] and poly_degree(chain[-1]) > 0:
        rem = poly_divmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(poly_int_primitive(poly_neg(rem)))
    return tuple(chain)


def _sign(x: Rational) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Iterable[int]) -> int:
    seq = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def variations_at(chain: Sequence[tuple], x: Rational) -> int:
    return _variations(_sign(poly_eval(p, x)) for p in chain)


def variations_at_posinf(chain: Sequence[tuple]) -> int:
    return _variations(_sign(p[-1]) if p else 0 for p in chain)


def variations_at_neginf(chain: Sequence[tuple]) -> int:
    return _variations(_sign(p[-1]) * (-1) ** poly_degree(p) if p else 0
                       for p in chain)


def count_roots(f: Sequence[int], lo: Rational | None, hi: Rational | None) -> int:
    """Number of real roots of squarefree f in the half-open interval (lo, hi];
    None means -inf / +inf respectively."""
    chain = sturm_chain(poly_trim(tuple(f)))
    va = variations_at_neginf(chain) if lo is None else variations_at(chain, lo)
    vb = variations_at_posinf(chain) if hi is None else variations_at(chain, hi)
    return va - vb


def root_bound(f: Sequence[int]) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    f = poly_trim(f)
    lead = abs(f[-1])
    m = max((abs(c) for c in f[:-1]), default=0)
    return Fraction(m, lead) + 1


def rational_roots(f: Sequence[int]) -> list:
    """All rational roots of the integer polynomial f (each is simple when f
    is squarefree)."""
    f = poly_trim(f)
    roots = []
    while f and f[0] == 0:
        roots.append(Fraction(0))
        f = f[1:]
        break  # squarefree: at most one root at 0
    if poly_degree(f) < 1:
        return roots
    const, lead = abs(f[0]), abs(f[-1])

    def divisors(n: int) -> list:
        ds = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
        return sorted(set(ds + [n // d for d in ds]))

    for q in divisors(lead):
        for p in divisors(const):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if poly_eval(f, cand) == 0:
                    roots.append(cand)
    return sorted(set(roots))


def deflate(f: Sequence[Rational], root: Rational) -> tuple:
    """Divide f by (x - root); the division must be exact."""
    q, r = poly_divmod(f, (-root, 1))
    if r:
        raise ValueError("not a root, cannot deflate")
    return q


def isolate_real_roots(f: Sequence[int]) -> tuple:
    """Isolating data for every real root of a squarefree integer polynomial.

    Returns (items, g) where g is f with all rational roots deflated and
    items is sorted in increasing order: either a Fraction (an exact rational
    root) or a pair (lo, hi) of rationals with g(lo)*g(hi) < 0 bracketing
    exactly one (irrational) root.
    """
    f = poly_int_primitive(f)
    if poly_degree(f) < 1:
        return [], ()
    found: list = list(rational_roots(f))
    g = f
    for r in found:
        g = poly_int_primitive(deflate(g, r))
    out: list = list(found)
    if poly_degree(g) >= 1:
        bound = root_bound(g)
        stack = [(-bound, bound, count_roots(g, -bound, bound))]
        for _ in range(10_000):
            if not stack:
                break
            lo, hi, n = stack.pop()
            if n == 0:
                continue
            if n == 1:
                # shrink until the endpoints see a sign change (g has no
                # rational roots left, so midpoints are never roots)
                while _sign(poly_eval(g, lo)) * _sign(poly_eval(g, hi)) >= 0:
                    mid = (lo + hi) / 2
                    if count_roots(g, lo, mid) == 1:
                        hi = mid
                    else:
                        lo = mid
                out.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            stack.append((lo, mid, count_roots(g, lo, mid)))
            stack.append((mid, hi, count_roots(g, mid, hi)))
        else:
            raise IsolationError("bisection failed to separate roots")

    # narrow each interval until it excludes every rational root, so that
    # sorting by midpoint reproduces the true root order
    for idx, item in enumerate(out):
        if isinstance(item, Fraction):
            continue
        lo, hi = item
        for r in found:
            while lo < r < hi:
                mid = (lo + hi) / 2
                if _sign(poly_eval(g, lo)) * _sign(poly_eval(g, mid)) < 0:
                    hi = mid
                else:
                    lo = mid
        out[idx] = (lo, hi)

    def key(item):
        return item if isinstance(item, Fraction) else (item[0] + item[1]) / 2

    out.sort(key=key)
    return out, g


# ---------------------------------------------------------------------------
# algebraic numbers
# ---------------------------------------------------------------------------

class ExactValue:
    """A real algebraic number: an isolating rational interval for one root of
    an integer polynomial, plus a float refinement.

    Rational values carry a degenerate interval.  Refinement narrows the
    interval in place (monotone, idempotent); all comparisons are exact.
    """

    __slots__ = ("poly", "_lo", "_hi", "rational")

    def __init__(self, poly: tuple, lo: Fraction, hi: Fraction,
                 rational: Fraction | None = None):
        self.poly = poly_trim(poly)
        self.rational = rational
        if rational is not None:
            self._lo = self._hi = Fraction(rational)
        else:
            self._lo, self._hi = Fraction(lo), Fraction(hi)
            if not (_sign(poly_eval(self.poly, self._lo))
                    * _sign(poly_eval(self.poly, self._hi)) < 0):
                raise IsolationError("endpoints do not bracket a root")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, q: Rational) -> "ExactValue":
        q = Fraction(q)
        return cls((-q.numerator, q.denominator), q, q, rational=q)

    @classmethod
    def roots_of(cls, poly: Sequence[int]) -> list:
        """All real roots of a squarefree integer polynomial, ascending."""
        items, g = isolate_real_roots(poly)
        return [cls.from_rational(item) if isinstance(item, Fraction)
                else cls(g, item[0], item[1]) for item in items]

    # -- interval plumbing --------------------------------------------------

    @property
    def lo(self) -> Fraction:
        return self._lo

    @property
    def hi(self) -> Fraction:
        return self._hi

    @property
    def width(self) -> Fraction:
        return self._hi - self._lo

    def refine_step(self) -> None:
        if self.rational is not None:
            return
        mid = (self._lo + self._hi) / 2
        s = _sign(poly_eval(self.poly, mid))
        if s == 0:
            self.rational = mid
            self._lo = self._hi = mid
            return
        if s * _sign(poly_eval(self.poly, self._lo)) < 0:
            self._hi = mid
        else:
            self._lo = mid

    def refine_to(self, width: Rational) -> "ExactValue":
        while self.width > width:
            self.refine_step()
        return self

    def __float__(self) -> float:
        self.refine_to(Fraction(1, 10 ** 15))
        return float((self._lo + self._hi) / 2)

    @property
    def approx(self) -> float:
        return float(self)

    # -- exact comparisons --------------------------------------------------

    def sign_of(self, q_poly: Sequence[Rational]) -> int:
        """Exact sign of Q(self) for a rational-coefficient polynomial Q."""
        q_poly = poly_trim(q_poly)
        if not q_poly:
            return 0
        if self.rational is not None:
            return _sign(poly_eval(q_poly, self.rational))
        qi = poly_int_primitive(q_poly)
        g = poly_gcd(self.poly, qi)
        if poly_degree(g) >= 1:
            gi = poly_int_primitive(g)
            if count_roots(gi, self._lo, self._hi) >= 1:
                return 0  # the shared root inside the interval is this value
        while count_roots(qi, self._lo, self._hi) > 0:
            self.refine_step()
            if self.rational is not None:
                return _sign(poly_eval(q_poly, self.rational))
        return _sign(poly_eval(q_poly, self._hi))

    def cmp_rational(self, q: Rational) -> int:
        q = Fraction(q)
        if self.rational is not None:
            return _sign(self.rational - q)
        if q <= self._lo:
            return 1   # value lies in the open interval (lo, hi)
        if q >= self._hi:
            return -1
        s = self.sign_of((-q, 1))
        return s

    def sign(self) -> int:
        return self.cmp_rational(0)

    def cmp(self, other: "ExactValue") -> int:
        if self.rational is not None:
            return -other.cmp_rational(self.rational)
        if other.rational is not None:
            return self.cmp_rational(other.rational)
        g = poly_gcd(self.poly, other.poly)
        if poly_degree(g) >= 1:
            gi = poly_int_primitive(g)
            lo, hi = max(self._lo, other._lo), min(self._hi, other._hi)
            if lo < hi and count_roots(gi, lo, hi) >= 1:
                root_in_self = count_roots(gi, self._lo, self._hi) >= 1
                root_in_other = count_roots(gi, other._lo, other._hi) >= 1
                if root_in_self and root_in_other:
                    return 0
        while True:
            if self._hi <= other._lo:
                return -1
            if other._hi <= self._lo:
                return 1
            if self.width >= other.width:
                self.refine_step()
            else:
                other.refine_step()
            if self.rational is not None or other.rational is not None:
                return self.cmp(other)

    # -- arithmetic with rationals ------------------------------------------

    def shift(self, q: Rational) -> "ExactValue":
        """self + q."""
        q = Fraction(q)
        if self.rational is not None:
            return ExactValue.from_rational(self.rational + q)
        newpoly = poly_int_primitive(poly_shift(self.poly, -q))
        return ExactValue(newpoly, self._lo + q, self._hi + q)

    def scale(self, q: Rational) -> "ExactValue":
        """self * q, q != 0."""
        q = Fraction(q)
        if q == 0:
            raise ZeroDivisionError("scale by zero")
        if self.rational is not None:
            return ExactValue.from_rational(self.rational * q)
        n = poly_degree(self.poly)
        newpoly = poly_int_primitive(
            [c * q.numerator ** (n - i) * q.denominator ** i
             for i, c in enumerate(self.poly)])
        a, b = self._lo * q, self._hi * q
        return ExactValue(newpoly, min(a, b), max(a, b))

    def neg(self) -> "ExactValue":
        return self.scale(-1)

    def reciprocal(self) -> "ExactValue":
        """1 / self, self != 0."""
        if self.rational is not None:
            return ExactValue.from_rational(Fraction(1) / self.rational)
        while self._lo <= 0 <= self._hi:
            self.refine_step()
        p = self.poly
        if p[0] == 0:
            p = poly_trim(p[1:])  # drop the root at zero; value is nonzero
        newpoly = poly_int_primitive(tuple(reversed(p)))
        a, b = 1 / self._hi, 1 / self._lo
        return ExactValue(newpoly, min(a, b), max(a, b))

    # -- misc ----------------------------------------------------------------

    def is_root_of(self, q_poly: Sequence[Rational]) -> bool:
        return self.sign_of(q_poly) == 0

    def to_json(self) -> dict:
        self.refine_to(Fraction(1, 10 ** 12))
        return {
            "interval": [str(self._lo), str(self._hi)],
            "float": float(self),
            "exact": str(self.rational) if self.rational is not None else None,
        }

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactValue):
            return self.cmp(other) == 0
        if isinstance(other, (int, Fraction)):
            return self.cmp_rational(other) == 0
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, ExactValue):
            return self.cmp(other) < 0
        if isinstance(other, (int, Fraction)):
            return self.cmp_rational(other) < 0
        return NotImplemented

    def __le__(self, other) -> bool:
        return self == other or self < other

    def __gt__(self, other) -> bool:
        return not self <= other

    def __ge__(self, other) -> bool:
        return not self < other

    def __hash__(self):
        raise TypeError("ExactValue is not hashable")

    def __repr__(self) -> str:
        if self.rational is not None:
            return f"ExactValue({self.rational})"
        return f"ExactValue(~{float(self):.6g})"


def surd_string(val: ExactValue) -> str | None:
    """Exact display form: rationals as-is, quadratic irrationals as
    `sqrt(d)` / `(p+m*sqrt(d))/r`; None for higher degree."""
    if val.rational is not None:
        return str(val.rational)
    if poly_degree(val.poly) != 2:
        return None
    c0, c1, c2 = val.poly
    if c2 < 0:
        c0, c1, c2 = -c0, -c1, -c2
    disc = c1 * c1 - 4 * c2 * c0
    m = next(i for i in range(isqrt(disc), 0, -1) if disc % (i * i) == 0)
    d = disc // (m * m)
    sigma = 1 if val.cmp_rational(Fraction(-c1, 2 * c2)) > 0 else -1
    p, q, r = -c1, sigma * m, 2 * c2
    g = gcd(gcd(abs(p), abs(q)), r)
    p, q, r = p // g, q // g, r // g
    root = f"sqrt({d})" if abs(q) == 1 else f"{abs(q)}*sqrt({d})"
    if p == 0 and r == 1:
        return root if q > 0 else f"-{root}"
    inner = f"({p}+{root})" if q > 0 else f"({p}-{root})"
    return inner if r == 1 else f"{inner}/{r}"


def interval_product(alo, ahi, blo, bhi) -> tuple:
    prods = (alo * blo, alo * bhi, ahi * blo, ahi * bhi)
    return min(prods), max(prods)


def compare_product(x: ExactValue, y: ExactValue, target: Rational) -> int:
    """Exact sign of x*y - target."""
    target = Fraction(target)
    if x.rational is not None:
        if x.rational == 0:
            return _sign(-target)
        return y.cmp_rational(target / x.rational) * _sign(x.rational)
    if y.rational is not None:
        return compare_product(y, x, target)
    if target == 0:
        return x.sign() * y.sign()
    ysign = y.sign()  # refines y away from zero; y irrational so nonzero
    if x.cmp(y.reciprocal().scale(target)) == 0:
        return 0
    while True:
        plo, phi = interval_product(x.lo, x.hi, y.lo, y.hi)
        if plo > target:
            return 1
        if phi < target:
            return -1
        x.refine_step()
        y.refine_step()
        if x.rational is not None or y.rational is not None:
            return compare_product(x, y, target)
