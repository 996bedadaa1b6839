from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drgkit.core import (
    ArrayFormatError,
    IntersectionArray,
    array_from_json,
    array_to_json,
    derive_parameters,
    format_array,
    is_antipodal_pattern,
    is_bipartite_pattern,
    is_monotone,
    parse_array,
)


def test_parse_brace_form():
    arr = parse_array("{3,2,2;1,1,3}")
    assert arr.diameter == 3 and arr.b == (3, 2, 2) and arr.c == (1, 1, 3)


def test_parse_whitespace_tolerant():
    arr = parse_array(" { 3 , 2 ; 1 , 1 } ")
    assert arr.b == (3, 2) and arr.c == (1, 1)


def test_parse_json_form():
    arr = parse_array('{"b": [3, 2, 2], "c": [1, 1, 3]}')
    assert arr == parse_array("{3,2,2;1,1,3}")


@pytest.mark.parametrize("bad", [
    "{3,2,2;1,1}",        # unequal lengths
    "{3,0,2;1,1,3}",      # non-positive entry
    "{3,2,2:1,1,3}",      # malformed
    "{;1}",               # empty side
    "{3,x;1,1}",          # non-integer token
    "3,2;1,1",            # missing braces
])
def test_parse_errors(bad):
    with pytest.raises(ArrayFormatError):
        parse_array(bad)


def test_derived_examples():
    d = derive_parameters(parse_array("{3,2,2;1,1,3}"))
    assert d.a == (0, 0, 0, 0)
    assert d.kseq == (1, 3, 6, 4) and d.v == 14

    d = derive_parameters(parse_array("{3,2;1,1}"))
    assert d.a == (0, 0, 2) and d.kseq == (1, 3, 6) and d.v == 10

    d = derive_parameters(parse_array("{5,4,4;1,1,5}"))
    assert d.kseq == (1, 5, 20, 16) and d.v == 42


def test_derived_non_integral_recorded():
    d = derive_parameters(parse_array("{4,2,2;1,1,3}"))
    assert d.kseq[3] == F(16, 3)
    assert d.v == F(1 + 4 + 8) + F(16, 3)


def test_negative_a_recorded_not_raised():
    arr = parse_array("{3,2,2;1,2,3}")  # a_1 = 3-2-2 < 0
    d = derive_parameters(arr)
    assert min(d.a) < 0


def test_structure_predicates():
    assert is_monotone(parse_array("{3,2,2;1,1,3}"))
    assert not is_monotone(parse_array("{3,1,2;1,1,3}"))
    assert not is_monotone(parse_array("{3,3,2;1,1,3}"))  # b0 > b1 strict
    assert not is_monotone(parse_array("{3,2,2;2,2,3}"))  # c1 must be 1
    assert not is_monotone(parse_array("{4,2,2;1,3,3}"))  # b_1 < c_2 with 1+2 <= D
    assert is_bipartite_pattern(parse_array("{3,2,2;1,1,3}"))
    assert not is_bipartite_pattern(parse_array("{4,2,1;1,1,4}"))
    assert is_antipodal_pattern(parse_array("{3,2,1;1,2,3}"))
    assert is_antipodal_pattern(parse_array("{4,3,2,1;1,2,3,4}"))
    assert not is_antipodal_pattern(parse_array("{3,2,2;1,1,3}"))


arrays = st.builds(
    lambda b_tail, c_tail, k: _normalized(k, b_tail, c_tail),
    b_tail=st.lists(st.integers(1, 9), min_size=0, max_size=4),
    c_tail=st.lists(st.integers(1, 9), min_size=0, max_size=4),
    k=st.integers(2, 12),
)


def _normalized(k, b_tail, c_tail):
    D = 1 + min(len(b_tail), len(c_tail))
    b = (k,) + tuple(min(x, k) for x in b_tail[:D - 1])
    c = (1,) + tuple(min(x, k) for x in c_tail[:D - 1])
    return IntersectionArray(b, c)


@given(arrays)
@settings(max_examples=200, deadline=None)
def test_roundtrip_text_and_json(arr):
    assert parse_array(format_array(arr)) == arr
    assert array_from_json(array_to_json(arr)) == arr


@given(arrays)
@settings(max_examples=200, deadline=None)
def test_derived_invariants(arr):
    d = derive_parameters(arr)
    assert d.kseq[0] == 1
    assert d.kseq[1] == arr.k
    assert d.a[0] == 0
    assert d.v == sum(d.kseq)
    assert all(isinstance(x, F) for x in d.kseq)
