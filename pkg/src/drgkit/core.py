"""Intersection arrays and their derived parameters.

An intersection array {b0,...,b_{D-1}; c1,...,c_D} is stored as two tuples of
positive integers.  Monotonicity and the other feasibility constraints are
deliberately *not* enforced at construction: a malformed array is
representable (so the search layer can count rejection reasons), only
positivity and matching lengths are structural.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction


class ArrayFormatError(ValueError):
    """Raised when text or JSON input cannot be read as an intersection array."""


@dataclass(frozen=True)
class IntersectionArray:
    b: tuple
    c: tuple

    def __post_init__(self):
        b, c = tuple(self.b), tuple(self.c)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if len(b) != len(c):
            raise ArrayFormatError(
                f"b has {len(b)} entries but c has {len(c)}; lengths must match")
        if not b:
            raise ArrayFormatError("intersection array must have diameter >= 1")
        for name, seq in (("b", b), ("c", c)):
            for x in seq:
                if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                    raise ArrayFormatError(
                        f"{name} entries must be positive integers, got {x!r}")

    @property
    def diameter(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def b_at(self, i: int) -> int:
        """b_i with the convention b_D = 0."""
        return self.b[i] if i < self.diameter else 0

    def c_at(self, i: int) -> int:
        """c_i with the convention c_0 = 0."""
        return self.c[i - 1] if i >= 1 else 0

    def a_at(self, i: int) -> int:
        return self.k - self.b_at(i) - self.c_at(i)

    def __str__(self) -> str:
        return format_array(self)

    def key(self) -> tuple:
        """Deterministic sort key: (D, k, b, c)."""
        return (self.diameter, self.k, self.b, self.c)


@dataclass(frozen=True)
class DerivedParameters:
    """a_i = k - b_i - c_i, the distance-sphere sizes k_i and the vertex count
    v = sum k_i, all in exact rational arithmetic."""

    a: tuple
    kseq: tuple
    v: Fraction

    @property
    def k(self):
        return self.kseq[1]


_ARRAY_RE = re.compile(r"^\{(?P<b>[^;{}]*);(?P<c>[^;{}]*)\}$")


def parse_array(text: str) -> IntersectionArray:
    """Parse `{b0,...,b_{D-1};c1,...,c_D}` or the JSON form {"b":[...],"c":[...]}."""
    s = text.strip()
    if s.startswith("{") and '"' in s:
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as e:
            raise ArrayFormatError(f"invalid JSON array form: {e}") from None
        return array_from_json(obj)
    compact = re.sub(r"\s+", "", s)
    m = _ARRAY_RE.match(compact)
    if not m:
        raise ArrayFormatError(
            f"expected '{{b0,...;c1,...}}' or a JSON object, got {text!r}")

    def ints(part: str, name: str) -> tuple:
        if not part:
            raise ArrayFormatError(f"empty {name} list in {text!r}")
        out = []
        for tok in part.split(","):
            if not re.fullmatch(r"-?\d+", tok):
                raise ArrayFormatError(f"bad {name} entry {tok!r} in {text!r}")
            out.append(int(tok))
        return tuple(out)

    return IntersectionArray(ints(m.group("b"), "b"), ints(m.group("c"), "c"))


def format_array(arr: IntersectionArray) -> str:
    return "{%s;%s}" % (",".join(map(str, arr.b)), ",".join(map(str, arr.c)))


def array_to_json(arr: IntersectionArray) -> dict:
    return {"b": list(arr.b), "c": list(arr.c)}


def array_from_json(obj) -> IntersectionArray:
    if not isinstance(obj, dict) or set(obj) != {"b", "c"}:
        raise ArrayFormatError(f"JSON array form needs exactly keys 'b' and 'c', got {obj!r}")
    b, c = obj["b"], obj["c"]
    if not isinstance(b, list) or not isinstance(c, list):
        raise ArrayFormatError("'b' and 'c' must be lists")
    return IntersectionArray(tuple(b), tuple(c))


def derive_parameters(arr: IntersectionArray) -> DerivedParameters:
    """Exact a_i, k_i and v.  Never raises: negative a_i and non-integral k_i
    are recorded as-is and failed by the feasibility checks downstream."""
    D = arr.diameter
    a = tuple(arr.a_at(i) for i in range(D + 1))
    kseq = [Fraction(1)]
    for i in range(1, D + 1):
        kseq.append(kseq[-1] * arr.b[i - 1] / arr.c[i - 1])
    v = sum(kseq, Fraction(0))
    return DerivedParameters(a=a, kseq=tuple(kseq), v=v)


def is_monotone(arr: IntersectionArray) -> bool:
    """Intersection-number monotonicity: k = b0 > b1 >= ... >= b_{D-1},
    1 = c1 <= ... <= c_D, and b_i >= c_j whenever i + j <= D."""
    b, c, D = arr.b, arr.c, arr.diameter
    if D >= 2 and not (b[0] > b[1]):
        return False
    if any(b[i] < b[i + 1] for i in range(1, D - 1)):
        return False
    if c[0] != 1 or any(c[i] > c[i + 1] for i in range(D - 1)):
        return False
    for i in range(D):
        for j in range(1, D + 1):
            if i + j <= D and b[i] < c[j - 1]:
                return False
    return True


def is_bipartite_pattern(arr: IntersectionArray) -> bool:
    """All a_i zero (the array-level bipartite criterion)."""
    return all(arr.a_at(i) == 0 for i in range(arr.diameter + 1))


def is_antipodal_pattern(arr: IntersectionArray) -> bool:
    """b_i = c_{D-i} for every i except possibly the middle index."""
    D = arr.diameter
    if D < 2:
        return False
    return all(arr.b_at(i) == arr.c_at(D - i)
               for i in range(D) if i != D // 2)
