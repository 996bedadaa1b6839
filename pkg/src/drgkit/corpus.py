"""Builtin catalog of known intersection arrays and JSON corpus persistence.

The builtin table holds the 23 arrays of diameter >= 3 whose second largest
eigenvalue lies in (1, 2], with their spectra, plus a few classical sanity
arrays.  Expected eigenvalues are exact expression strings limited to the
shapes ``n``, ``sqrt(n)``, ``-sqrt(n)`` and ``(p+-sqrt(q))/r``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .core import (
    IntersectionArray,
    array_to_json,
    is_antipodal_pattern,
    is_bipartite_pattern,
    parse_array,
)
from .exact import ExactValue

_SQRT_RE = re.compile(r"^(?P<sign>-?)sqrt\((?P<q>\d+)\)$")
_COMBO_RE = re.compile(
    r"^\((?P<p>-?\d+)(?P<op>[+-])sqrt\((?P<q>\d+)\)\)(?:/(?P<r>\d+))?$")


class CorpusSchemaError(ValueError):
    """Raised when a corpus file violates the entry schema."""


def parse_eigenvalue_expr(text: str) -> ExactValue:
    """Exact value of an eigenvalue expression string."""
    s = text.strip().replace(" ", "")
    if re.fullmatch(r"-?\d+", s):
        return ExactValue.from_rational(int(s))
    m = _SQRT_RE.match(s)
    if m:
        q = int(m.group("q"))
        root = _sqrt_value(q)
        return root.neg() if m.group("sign") == "-" else root
    m = _COMBO_RE.match(s)
    if m:
        p, q = int(m.group("p")), int(m.group("q"))
        r = int(m.group("r") or 1)
        root = _sqrt_value(q)
        if m.group("op") == "-":
            root = root.neg()
        return root.shift(p).scale(Fraction(1, r))
    raise CorpusSchemaError(f"unsupported eigenvalue expression {text!r}")


def _sqrt_value(q: int) -> ExactValue:
    roots = ExactValue.roots_of((-q, 0, 1))
    return roots[-1]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    array: IntersectionArray
    spectrum: tuple | None  # ((expression, multiplicity), ...) descending
    tags: frozenset
    extras: tuple = ()  # unknown JSON fields, preserved on round-trip

    def __post_init__(self):
        if self.spectrum is not None:
            D = self.array.diameter
            if len(self.spectrum) != D + 1:
                raise CorpusSchemaError(
                    f"entry {self.name!r}: spectrum needs {D + 1} eigenvalues")
            from .core import derive_parameters
            v = derive_parameters(self.array).v
            total = sum(m for _, m in self.spectrum)
            if total != v:
                raise CorpusSchemaError(
                    f"entry {self.name!r}: multiplicities sum to {total}, not v = {v}")

    def expected_eigenvalues(self) -> list:
        return [parse_eigenvalue_expr(expr) for expr, _ in self.spectrum or ()]

    def to_json(self) -> dict:
        obj = {"name": self.name}
        obj.update(array_to_json(self.array))
        if self.spectrum is not None:
            obj["spectrum"] = [[expr, m] for expr, m in self.spectrum]
        obj["tags"] = sorted(self.tags)
        obj.update(dict(self.extras))
        return obj


def _structure_tags(arr: IntersectionArray) -> set:
    tags = set()
    if is_bipartite_pattern(arr):
        tags.add("bipartite")
    if is_antipodal_pattern(arr):
        tags.add("antipodal")
    if arr.diameter == 3 and arr.a_at(3) > 0 and \
            arr.k == arr.a_at(3) * (arr.a_at(3) - arr.a_at(1)):
        tags.add("shilla")
    if arr.diameter == 2:
        tags.add("D2")
    return tags


# (row, array text, spectrum, number of non-isomorphic graphs)
_TABLE1 = (
    (1, "{3,2,2;1,1,3}", (("3", 1), ("sqrt(2)", 6), ("-sqrt(2)", 6), ("-3", 1)), 1),
    (2, "{4,3,2;1,2,4}", (("4", 1), ("sqrt(2)", 6), ("-sqrt(2)", 6), ("-4", 1)), 1),
    (3, "{4,3,3;1,1,4}", (("4", 1), ("sqrt(3)", 12), ("-sqrt(3)", 12), ("-4", 1)), 1),
    (4, "{5,4,3;1,2,5}", (("5", 1), ("sqrt(3)", 10), ("-sqrt(3)", 10), ("-5", 1)), 1),
    (5, "{5,4,4;1,1,5}", (("5", 1), ("2", 20), ("-2", 20), ("-5", 1)), 1),
    (6, "{6,5,3;1,3,6}", (("6", 1), ("sqrt(3)", 10), ("-sqrt(3)", 10), ("-6", 1)), 1),
    (7, "{6,5,4;1,2,6}", (("6", 1), ("2", 15), ("-2", 15), ("-6", 1)), 3),
    (8, "{7,6,4;1,3,7}", (("7", 1), ("2", 14), ("-2", 14), ("-7", 1)), 5),
    (9, "{8,7,4;1,4,8}", (("8", 1), ("2", 14), ("-2", 14), ("-8", 1)), 5),
    (10, "{9,8,3;1,6,9}", (("9", 1), ("sqrt(3)", 12), ("-sqrt(3)", 12), ("-9", 1)), 1),
    (11, "{10,9,4;1,6,10}", (("10", 1), ("2", 15), ("-2", 15), ("-10", 1)), 3),
    (12, "{16,15,4;1,12,16}", (("16", 1), ("2", 20), ("-2", 20), ("-16", 1)), 1),
    (13, "{3,2,2,1;1,1,2,3}",
     (("3", 1), ("sqrt(3)", 6), ("0", 4), ("-sqrt(3)", 6), ("-3", 1)), 1),
    (14, "{3,2,2,2;1,1,1,3}",
     (("3", 1), ("2", 9), ("0", 10), ("-2", 9), ("-3", 1)), 1),
    (15, "{4,3,2,1;1,2,3,4}",
     (("4", 1), ("2", 4), ("0", 6), ("-2", 4), ("-4", 1)), 1),
    (16, "{4,3,3,1;1,1,3,4}",
     (("4", 1), ("2", 12), ("0", 6), ("-2", 12), ("-4", 1)), 1),
    (17, "{3,2,2,1,1;1,1,2,2,3}",
     (("3", 1), ("2", 4), ("1", 5), ("-1", 5), ("-2", 4), ("-3", 1)), 1),
    (18, "{4,2,1;1,1,4}", (("4", 1), ("2", 5), ("-1", 4), ("-2", 5)), 1),
    (19, "{4,3,3;1,1,2}", (("4", 1), ("2", 14), ("-1", 14), ("-3", 6)), 1),
    (20, "{5,4,2;1,1,4}", (("5", 1), ("2", 16), ("-1", 10), ("-3", 9)), 1),
    (21, "{6,5,1;1,1,6}", (("6", 1), ("2", 21), ("-1", 6), ("-3", 14)), 1),
    (22, "{8,6,1;1,3,8}", (("8", 1), ("2", 12), ("-1", 8), ("-4", 6)), 2),
    (23, "{3,2,2,1;1,1,1,2}",
     (("3", 1), ("2", 8), ("(-1+sqrt(2))", 6), ("-1", 7), ("(-1-sqrt(2))", 6)), 1),
)

_EXTRAS = (
    ("petersen", "{3,2;1,1}", (("3", 1), ("1", 5), ("-2", 4))),
    ("3-cube", "{3,2,1;1,2,3}", (("3", 1), ("1", 3), ("-1", 3), ("-3", 1))),
    ("hamming-3-3", "{6,4,2;1,2,3}", (("6", 1), ("3", 6), ("0", 12), ("-3", 8))),
    ("dcmm-t2", "{15,14,1;1,2,15}", (("15", 1), ("3", 70), ("-1", 15), ("-5", 42))),
)


def _build_entry(name, text, spec, extra_tags=()) -> CorpusEntry:
    arr = parse_array(text)
    return CorpusEntry(name=name, array=arr, spectrum=spec,
                       tags=frozenset(_structure_tags(arr)) | frozenset(extra_tags))


def builtin_corpus() -> list:
    entries = [
        _build_entry(f"row {row}", text, spec,
                     (f"table1-row-{row}", f"graphs-{count}"))
        for row, text, spec, count in _TABLE1
    ]
    entries += [_build_entry(name, text, spec) for name, text, spec in _EXTRAS]
    return entries


def table1_entries() -> list:
    return [e for e in builtin_corpus() if any(t.startswith("table1-row-") for t in e.tags)]


def entry_from_json(obj, where: str = "?") -> CorpusEntry:
    if not isinstance(obj, dict):
        raise CorpusSchemaError(f"{where}: entry must be an object, got {type(obj).__name__}")
    missing = {"name", "b", "c"} - set(obj)
    if missing:
        raise CorpusSchemaError(f"{where}: missing fields {sorted(missing)}")
    try:
        arr = IntersectionArray(tuple(obj["b"]), tuple(obj["c"]))
    except ValueError as e:
        raise CorpusSchemaError(f"{where} ({obj.get('name')}): {e}") from None
    spec = None
    if obj.get("spectrum") is not None:
        raw = obj["spectrum"]
        if not isinstance(raw, list) or not all(
                isinstance(it, (list, tuple)) and len(it) == 2 for it in raw):
            raise CorpusSchemaError(
                f"{where} ({obj['name']}): spectrum must be a list of [expr, mult] pairs")
        spec = tuple((str(expr), int(m)) for expr, m in raw)
    known = {"name", "b", "c", "spectrum", "tags"}
    extras = tuple((k, obj[k]) for k in obj if k not in known)
    try:
        return CorpusEntry(name=str(obj["name"]), array=arr, spectrum=spec,
                           tags=frozenset(map(str, obj.get("tags", []))),
                           extras=extras)
    except CorpusSchemaError:
        raise
    except ValueError as e:
        raise CorpusSchemaError(f"{where} ({obj['name']}): {e}") from None


def load_corpus(path) -> list:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise CorpusSchemaError(f"{path}: invalid JSON ({e})") from None
    if not isinstance(data, list):
        raise CorpusSchemaError(f"{path}: top level must be a JSON array")
    return [entry_from_json(obj, f"{path}[{i}]") for i, obj in enumerate(data)]


def save_corpus(entries, path) -> None:
    payload = [e.to_json() for e in entries]
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def verify_entry(entry: CorpusEntry) -> list:
    """Compare the spectral engine against the entry's expected spectrum.

    Returns a list of mismatch strings (empty = verified): each eigenvalue
    must match its exact expression exactly and its float within 1e-9, and
    multiplicities must match exactly.
    """
    from .spectral import spectrum  # deferred: keeps corpus importable alone

    problems = []
    if entry.spectrum is None:
        return problems
    sp = spectrum(entry.array)
    expected = entry.expected_eigenvalues()
    for i, ((expr, mult), exp_val) in enumerate(zip(entry.spectrum, expected)):
        got = sp.eigenvalues[i]
        if got.cmp(exp_val) != 0:
            problems.append(f"{entry.name}: eigenvalue {i} is {float(got):.12g}, "
                            f"expected {expr}")
        if abs(float(got) - float(exp_val)) > 1e-9:
            problems.append(f"{entry.name}: eigenvalue {i} float drift")
        m = sp.multiplicities[i]
        if not m.integral or m.candidate != mult:
            problems.append(f"{entry.name}: multiplicity {i} is "
                            f"{m.candidate if m.integral else m.value}, expected {mult}")
    return problems
