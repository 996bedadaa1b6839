import random

import pytest

from drgkit.checks import (
    FAIL,
    NA,
    PASS,
    ArrayAnalysis,
    CONDITION_SETS,
    full_report,
    terwilliger_bounds,
)
from drgkit.core import parse_array
from conftest import random_structural

KNOWN_GOOD = [
    "{3,2,2;1,1,3}", "{4,3,2;1,2,4}", "{5,4,4;1,1,5}", "{8,6,1;1,3,8}",
    "{4,2,1;1,1,4}", "{3,2;1,1}", "{3,2,1;1,2,3}", "{6,4,2;1,2,3}",
    "{15,14,1;1,2,15}", "{4,3,2,1;1,2,3,4}", "{3,2,2,1;1,1,1,2}",
]


def cond(text, name, **kw):
    return full_report(parse_array(text), **kw).condition(name)


@pytest.mark.parametrize("text", KNOWN_GOOD)
def test_known_arrays_pass_everything(text):
    rep = full_report(parse_array(text))
    assert rep.passed, rep.to_text()


def test_whole_corpus_passes_paper_chain():
    # in particular the fundamental product bound holds corpus-wide
    from drgkit.corpus import builtin_corpus
    for entry in builtin_corpus():
        rep = full_report(entry.array)
        assert rep.passed, f"{entry.name}\n{rep.to_text()}"


def test_registry_unique_and_ordered():
    rep = full_report(parse_array("{3,2,2;1,1,3}"))
    names = [c.name for c in rep.conditions]
    assert names == list(CONDITION_SETS["paper"])
    assert len(names) == len(set(names))


def test_failures_carry_witnesses():
    rep = full_report(parse_array("{4,2,2;1,1,3}"))
    for c in rep.failures:
        assert c.witness


def test_basic_verdicts():
    assert cond("{4,2,2;1,1,3}", "basic.k-integral").verdict == FAIL
    assert cond("{3,1,2;1,1,3}", "basic.b-monotone").verdict == FAIL
    assert cond("{3,2,2;1,2,3}", "basic.a-nonnegative").verdict == FAIL
    assert cond("{3,2,2;1,1,3}", "basic.moments").verdict == PASS


def test_eigenvalue_bound_gates():
    assert cond("{3,2;1,1}", "bound.theta-min").verdict == NA
    assert cond("{3,2,2;1,1,3}", "bound.theta-min").verdict == PASS
    # equality allowed in the D >= 4 bound: theta_1 = sqrt(3) on this row
    assert cond("{3,2,2,1;1,1,2,3}", "bound.theta1-d4").verdict == PASS


def test_theta2_equivalence_cases():
    c = cond("{4,2,1;1,1,4}", "equiv.theta2-minus-one")
    assert c.verdict == PASS and "all true" in c.witness
    c = cond("{5,4,4;1,1,5}", "equiv.theta2-minus-one")
    assert c.verdict == PASS and "all false" in c.witness


def test_theta2_window():
    # H(3,3): theta_2 = 0 inside [-1, a3-b2] = [-1, 1]
    assert cond("{6,4,2;1,2,3}", "bound.theta2-window").verdict == PASS


def test_shilla_cases():
    c = cond("{6,4,2;1,2,3}", "equiv.shilla")
    assert c.verdict == PASS and "all true" in c.witness
    c = cond("{3,2,2;1,1,3}", "equiv.shilla")
    assert c.verdict == PASS and "all false" in c.witness
    assert ArrayAnalysis(parse_array("{6,4,2;1,2,3}")).shilla
    # 4-cube: classification passes through the D = 4 antipodal branch
    c = cond("{4,3,2,1;1,2,3,4}", "class.quad-root-theta1")
    assert c.verdict == PASS and "antipodal" in c.witness


def test_main_inequality_equality_iff_d2():
    c = cond("{3,2;1,1}", "bound.main-product")
    assert c.verdict == PASS and "equality" in c.witness
    c = cond("{3,2,2;1,1,3}", "bound.main-product")
    assert c.verdict == PASS and "strict" in c.witness


def test_fundamental_bound_equality_for_bipartite():
    # bipartite: a_1 = 0 and theta_D = -k give exact equality
    c = cond("{3,2,2;1,1,3}", "bound.fundamental")
    assert c.verdict == PASS and "equality" in c.witness
    c = cond("{8,6,1;1,3,8}", "bound.fundamental")
    assert c.verdict == PASS and "strict" in c.witness


def test_cover_identity_r_values():
    c = cond("{3,2,1;1,2,3}", "ident.antipodal-cover")
    assert c.verdict == PASS and "r = 2" in c.witness
    c = cond("{15,14,1;1,2,15}", "ident.antipodal-cover")
    assert c.verdict == PASS and "r = 8" in c.witness
    assert cond("{4,2,1;1,1,4}", "ident.antipodal-cover").verdict == PASS  # r = 3


def test_terwilliger_bound_values():
    an = ArrayAnalysis(parse_array("{3,2,2;1,1,3}"))
    bounds, frag = terwilliger_bounds(an)
    assert bounds.upper2.rational == 0
    assert all(c.verdict == PASS for c in frag)
    an = ArrayAnalysis(parse_array("{8,6,1;1,3,8}"))
    bounds, frag = terwilliger_bounds(an)
    assert bounds.lowerK.rational == -3
    assert all(c.verdict == PASS for c in frag)
    none_bounds, frag = terwilliger_bounds(ArrayAnalysis(parse_array("{3,2;1,1}")))
    assert none_bounds is None and all(c.verdict == NA for c in frag)


def test_window_constraint_gates_and_verdicts():
    assert cond("{5,4,4;1,1,5}", "bipartite.theta1-sqrt-b2").verdict == PASS
    assert cond("{5,4,4;1,1,5}", "bipartite.divisibility").verdict == PASS
    assert cond("{8,6,1;1,3,8}", "cap.b1-lower").verdict == PASS
    # k = 4 < 5: window constraints not applicable
    assert cond("{4,2,1;1,1,4}", "window.a3-at-most-one").verdict == NA
    # k >= 5 with theta_1 in (1,2]: active
    assert cond("{8,6,1;1,3,8}", "window.a3-at-most-one").verdict == PASS
    assert cond("{8,6,1;1,3,8}", "window.b2-equals-a3").verdict == NA
    assert cond("{8,6,1;1,3,8}", "window.b2-above-a3").verdict == PASS
    # matched branch active on this near-miss array
    assert cond("{6,5,1;1,2,5}", "window.b2-equals-a3").verdict == PASS
    assert cond("{6,5,1;1,2,5}", "basic.multiplicity-integral").verdict == FAIL


def test_strict_paper_removes_extra_conditions():
    rep = full_report(parse_array("{3,2,1;1,2,3}"), strict_paper=True)
    names = {c.name for c in rep.conditions}
    assert "basic.parity" not in names
    assert "ident.antipodal-cover" not in names
    assert rep.passed


def test_basic_chain_only():
    rep = full_report(parse_array("{3,2,2;1,1,3}"), conditions="basic")
    assert [c.name for c in rep.conditions] == list(CONDITION_SETS["basic"])


def test_report_json_shape():
    rep = full_report(parse_array("{3,2,2;1,1,3}"))
    obj = rep.to_json()
    assert obj["array"] == "{3,2,2;1,1,3}"
    assert set(obj["flags"]) == {"bipartite", "antipodal", "shilla"}
    assert obj["passed"] is True
    assert all(set(c) == {"name", "verdict", "witness", "extra_paper"}
               for c in obj["conditions"])


def test_theta2_location_on_random_d3_arrays():
    rng = random.Random(99)
    for arr in random_structural(rng, 40, d_choices=(3,), k_max=14):
        rep = full_report(arr)
        assert rep.condition("bound.theta2-window").verdict == PASS
        assert rep.condition("equiv.theta2-minus-one").verdict == PASS
        assert rep.condition("equiv.shilla").verdict == PASS
        assert rep.condition("bound.main-product").verdict == PASS
        for name in ("bound.local-upper2", "bound.local-lowerK"):
            assert rep.condition(name).verdict == PASS
