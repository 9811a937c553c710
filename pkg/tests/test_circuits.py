import random
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

import pytest

from latticebox.arith import PrimeSet
from latticebox.circuits import Circuit, circuits, prime_set
from latticebox.errors import ResourceLimitError


def brute_circuits(vectors):
    """Oracle: every subset of every size, via rational kernels."""
    vecs = [[Fraction(x) for x in v] for v in vectors]
    m = len(vecs)
    out = {}
    for size in range(1, m + 1):
        for subset in combinations(range(m), size):
            kern = _kernel(vecs, subset)
            if kern is None or any(x == 0 for x in kern):
                continue
            mult = lcm(*(x.denominator for x in kern))
            ints = [int(x * mult) for x in kern]
            g = 0
            for x in ints:
                g = gcd(g, x)
            ints = [x // g for x in ints]
            if ints[0] < 0:
                ints = [-x for x in ints]
            out[subset] = tuple(ints)
    return out


def _kernel(vecs, subset):
    n = len(vecs[0]) if vecs else 0
    k = len(subset)
    mat = [[vecs[i][j] for i in subset] for j in range(n)]
    pivots = []
    rank = 0
    for col in range(k):
        pivot = next((r for r in range(rank, n) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(n):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    if k - rank != 1:
        return None
    free = next(c for c in range(k) if c not in pivots)
    vec = [Fraction(0)] * k
    vec[free] = Fraction(1)
    for r, col in enumerate(pivots):
        vec[col] = -mat[r][free]
    return vec


def test_circuits_examples():
    found = circuits([(2, 0), (3, 0), (0, 1)])
    assert [(c.support, c.coeffs) for c in found] == [((0, 1), (3, -2))]

    assert circuits([(1, 0), (0, 1)]) == []

    found = circuits([(1, 0), (0, 1), (1, 1)])
    assert [(c.support, c.coeffs) for c in found] == [((0, 1, 2), (1, 1, -1))]


def test_circuit_exactness_and_minimality():
    rng = random.Random(113)
    for _ in range(120):
        m = rng.randint(1, 5)
        n = rng.randint(1, 3)
        vecs = [
            [Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(m)
        ]
        for c in circuits(vecs):
            total = [Fraction(0)] * n
            for idx, coef in zip(c.support, c.coeffs):
                total = [t + coef * x for t, x in zip(total, vecs[idx])]
            assert not any(total)
            g = 0
            for x in c.coeffs:
                assert x != 0
                g = gcd(g, x)
            assert g == 1
            assert c.coeffs[0] > 0
            # removing any support element leaves an independent family
            for drop in range(len(c.support)):
                rest = tuple(
                    i for k, i in enumerate(c.support) if k != drop
                )
                if rest:
                    assert _kernel(vecs, rest) is None or any(
                        x == 0 for x in _kernel(vecs, rest)
                    ) or len(rest) - _rank_of(vecs, rest) == 0


def _rank_of(vecs, subset):
    n = len(vecs[0])
    mat = [[vecs[i][j] for i in subset] for j in range(n)]
    rank = 0
    for col in range(len(subset)):
        pivot = next((r for r in range(rank, n) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(n):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def test_circuits_match_brute_force():
    rng = random.Random(127)
    for _ in range(150):
        m = rng.randint(1, 7)
        n = rng.randint(1, 4)
        vecs = [
            tuple(rng.randint(-6, 6) for _ in range(n)) for _ in range(m)
        ]
        got = {c.support: c.coeffs for c in circuits(vecs)}
        assert got == brute_circuits(vecs)


def test_zero_vector_singleton():
    found = circuits([(0, 0), (1, 2)])
    assert [(c.support, c.coeffs) for c in found] == [((0,), (1,))]
    assert list(prime_set([(0, 0), (1, 2)])) == []


def test_rational_vectors():
    # relations are taken on the original rational vectors
    found = circuits([(Fraction(1, 2),), (Fraction(1, 3),)])
    assert [(c.support, c.coeffs) for c in found] == [((0, 1), (2, -3))]
    assert list(prime_set([(Fraction(1, 2),), (Fraction(1, 3),)])) == [2, 3]


def test_scaling_behavior():
    # supports never change under positive scaling of one vector; the
    # primitive coefficients transform covariantly with the scale.
    base = [(2, 0), (3, 0), (0, 1)]
    scaled = [(1, 0), (3, 0), (0, 1)]  # first vector halved
    c0 = circuits(base)
    c1 = circuits(scaled)
    assert [c.support for c in c0] == [c.support for c in c1]
    assert c0[0].coeffs == (3, -2)
    assert c1[0].coeffs == (3, -1)


def test_prime_set_examples():
    assert list(prime_set([(2, 0), (3, 0), (0, 1)])) == [2, 3]
    assert list(prime_set([(1, 0), (0, 1)])) == []
    assert list(prime_set([(1, 0), (0, 1), (1, 1)])) == []


def test_prime_set_reorder_invariant():
    rng = random.Random(131)
    for _ in range(60):
        m = rng.randint(2, 5)
        n = rng.randint(1, 3)
        vecs = [
            tuple(rng.randint(-6, 6) for _ in range(n)) for _ in range(m)
        ]
        perm = list(range(m))
        rng.shuffle(perm)
        assert prime_set(vecs) == prime_set([vecs[i] for i in perm])


def test_prime_set_monotone_in_circuits():
    from latticebox.circuits import circuits as circuits_of
    from latticebox.circuits import prime_set_of_circuits

    rng = random.Random(167)
    for _ in range(40):
        m = rng.randint(2, 6)
        n = rng.randint(1, 3)
        vecs = [
            tuple(rng.randint(-6, 6) for _ in range(n)) for _ in range(m)
        ]
        found = circuits_of(vecs)
        full = set(prime_set_of_circuits(found))
        for cut in range(len(found) + 1):
            partial = set(prime_set_of_circuits(found[:cut]))
            assert partial <= full


def test_family_limits():
    with pytest.raises(ResourceLimitError):
        circuits([(1,)] * 21)


def test_circuit_is_frozen_value():
    c = Circuit((0, 1), (3, -2))
    assert c == Circuit((0, 1), (3, -2))
    assert hash(c) == hash(Circuit((0, 1), (3, -2)))
