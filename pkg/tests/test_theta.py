import random

import pytest

from siegelmodp.qexp import QExpansion
from siegelmodp.rep import Weight, sym2_of_index
from siegelmodp.theta import (ThetaError, big_theta, big_theta_composite,
                              theta2_iterate_closed, theta_j,
                              theta_j_coefficient, theta_scalar)


def mk(p, N, weight, support, **kw):
    return QExpansion(p=p, N=N, weight=Weight(*weight), support=support, **kw)


def rand_support(rng, p, n, count=4):
    support = {}
    for _ in range(count):
        a, c = rng.randrange(4), rng.randrange(4)
        bmax = int((4 * a * c) ** 0.5)
        b = rng.randrange(-bmax, bmax + 1) if bmax else 0
        support[(a, b, c)] = tuple(rng.randrange(p) for _ in range(n + 1))
    return support


def test_theta_scalar_shapes_and_values():
    p, N = 7, 3
    F = mk(p, N, (4, 4), {(1, 2, 1): (3,)})
    G = theta_scalar(F)
    assert G.weight == Weight(4 + p + 1, 4 + p - 1)
    ninv = pow(N, p - 2, p)
    assert G.support[(1, 2, 1)] == tuple(3 * ninv * x % p for x in (1, 2, 1))
    with pytest.raises(ThetaError, match="scalar"):
        theta_scalar(mk(p, N, (5, 3), {}))


def test_big_theta_multiplier():
    p, N = 5, 3
    F = mk(p, N, (4, 4), {(1, 1, 1): (2,), (1, 0, 1): (1,), (0, 0, 1): (3,)})
    G = big_theta(F, 1)
    assert G.weight == Weight(4 + 6, 4 + 6)
    inv4 = pow(4, p - 2, p)
    for T, (A,) in F.support.items():
        a, b, c = T
        det = (4 * a * c - b * b) * inv4 % p
        mult = 2 * pow(3, p - 2, p) * pow(N, 2 * (p - 2), p) * det % p
        if mult * A % p:
            assert G.support[T] == (mult * A % p,)
        else:
            assert T not in G.support
    # rank-deficient indices are killed (weak p-singular direction)
    assert (1, 0, 1) in G.support and (0, 0, 1) not in G.support


def test_theta_j_domains():
    p, N = 5, 3
    F1 = mk(p, N, (4, 3), {})  # n = 1
    with pytest.raises(ThetaError, match="theta_1"):
        theta_j(F1, 1)
    theta_j(F1, 2)
    theta_j(F1, 3)
    F3 = mk(p, N, (6, 3), {})  # n = 3 = p - 2: only theta_1 is defined
    theta_j(F3, 1)
    with pytest.raises(ThetaError, match="theta_2"):
        theta_j(F3, 2)
    with pytest.raises(ThetaError, match="theta_3"):
        theta_j(F3, 3)
    with pytest.raises(ThetaError, match="j must be"):
        theta_j(F1, 4)


def test_theta_j_weights():
    p, N = 7, 3
    F = mk(p, N, (6, 4), rand_support(random.Random(0), p, 2))
    assert theta_j(F, 1).weight == Weight(6 + p - 1, 4 + p + 1)
    assert theta_j(F, 2).weight == Weight(6 + p, 4 + p)
    assert theta_j(F, 3).weight == Weight(6 + p + 1, 4 + p - 1)


def test_theta_kernel_scaled_indices():
    # coefficients supported on p-divisible indices die under theta_scalar
    p, N = 5, 3
    F = mk(p, N, (5, 5), {(5, 0, 5): (2,), (0, 0, 5): (1,)})
    assert theta_scalar(F).support == {}
    assert big_theta(F).support == {}


def test_big_theta_composite_identity():
    rng = random.Random(9)
    for p, N in ((5, 3), (7, 3)):
        for _ in range(10):
            F = mk(p, N, (4, 4), rand_support(rng, p, 0))
            assert big_theta(F, 1).support == big_theta_composite(F).support


def test_theta2_iterate_closed_constant():
    for p in (5, 7, 11):
        # unit-determinant indices so the closed form is nonzero
        F = mk(p, 3, (4, 3), {(1, 0, 1): (1, 2), (1, 0, 2): (3, 1)})
        for m in (1, 2):
            G, report = theta2_iterate_closed(F, m)
            assert G.weight == Weight(4 + 4 * m * p, 3 + 4 * m * p)
            assert report["proportional"]
            assert report["mu"] == pow(64, m, p)
    # zero form: proportional with arbitrary constant
    Z = mk(5, 3, (4, 3), {})
    G, report = theta2_iterate_closed(Z)
    assert report["proportional"] and report["mu"] is None
    assert "arbitrary" in report.get("note", "")


def test_theta2_iterate_closed_requires_n1():
    with pytest.raises(ThetaError, match="\\(k\\+1, k\\)"):
        theta2_iterate_closed(mk(5, 3, (4, 4), {}))


def test_theta_j_coefficient_matches_operator():
    p, N = 7, 3
    rng = random.Random(5)
    F = mk(p, N, (6, 4), rand_support(rng, p, 2))
    for j in (1, 2, 3):
        G = theta_j(F, j)
        for T, vec in F.support.items():
            comp = theta_j_coefficient(vec, T, 2, p, N, j)
            if any(comp.coords):
                assert G.support[T] == comp.coords
            else:
                assert T not in G.support
