"""Shared fixtures: deterministic random array pools and an independent
floating-point oracle (numpy roots + the norm formula) used to cross-check
the exact engine."""

from __future__ import annotations

import random

import numpy as np
import pytest

from drgkit.checks import full_report
from drgkit.core import IntersectionArray, derive_parameters
from drgkit.search import cheap_integer_failure, theta1_in_window
from drgkit.spectral import full_matrix


def random_candidate(rng: random.Random, d_choices=(2, 3), k_max=24) -> IntersectionArray:
    """Random array satisfying the monotonicity constraints by construction."""
    while True:
        D = rng.choice(d_choices)
        k = rng.randint(3, k_max)
        b = [k, rng.randint(1, k - 1)]
        for _ in range(D - 2):
            b.append(rng.randint(1, b[-1]))
        b = b[:D]
        c = [1]
        ok = True
        for j in range(2, D + 1):
            upper = k if j == D else min(b[D - j], k)
            if c[-1] > upper:
                ok = False
                break
            c.append(rng.randint(c[-1], upper))
        if ok:
            return IntersectionArray(tuple(b), tuple(c))


def random_structural(rng: random.Random, count: int,
                      d_choices=(2, 3), k_max=24) -> list:
    """Arrays additionally passing a_i >= 0 and integral k_i."""
    out = []
    while len(out) < count:
        arr = random_candidate(rng, d_choices, k_max)
        if cheap_integer_failure(arr.b, arr.c, need_parity=False) is None:
            out.append(arr)
    return out


def oracle_spectrum(arr: IntersectionArray):
    """Independent float path: numpy roots of the characteristic polynomial
    plus the norm formula for multiplicities."""
    p = full_matrix(arr).charpoly()
    roots = np.roots(list(map(float, reversed(p))))
    roots = sorted((r.real for r in roots if abs(r.imag) < 1e-9), reverse=True)
    der = derive_parameters(arr)
    v = float(der.v)
    mults = []
    for theta in roots:
        u, prev = 1.0, None
        s = 1.0  # k_0 * u_0^2
        for i in range(1, arr.diameter + 1):
            if i == 1:
                nxt = theta / arr.k
            else:
                ai, ci, bi = arr.a_at(i - 1), arr.c_at(i - 1), arr.b[i - 1]
                nxt = ((theta - ai) * u - ci * prev) / bi
            prev, u = u, nxt
            s += float(der.kseq[i]) * u * u
        mults.append(v / s)
    return roots, mults


def accepted_unpruned(arr: IntersectionArray, spec) -> bool:
    """The unpruned acceptance path: cheap integer conditions, the window
    test, then the full condition chain."""
    if cheap_integer_failure(arr.b, arr.c, need_parity=True):
        return False
    if not theta1_in_window(arr, spec.window):
        return False
    return full_report(arr, spec.conditions, spec.strict_paper).passed


@pytest.fixture(scope="session")
def pool_1000():
    """1000 random structurally feasible arrays (mixed D = 2 and D = 3)."""
    rng = random.Random(20230817)
    return random_structural(rng, 1000)


@pytest.fixture(scope="session")
def pool_small():
    rng = random.Random(4242)
    return random_structural(rng, 60, d_choices=(2, 3, 4), k_max=12)
