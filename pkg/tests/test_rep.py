import random

import pytest

from siegelmodp.rep import (PieriSplit, RepVector, Weight, pieri_reassemble,
                            pieri_split, rep_apply, sym2_of_index,
                            tensor_action)


def rand_gl2(rng, p):
    while True:
        g = ((rng.randrange(p), rng.randrange(p)),
             (rng.randrange(p), rng.randrange(p)))
        if (g[0][0] * g[1][1] - g[0][1] * g[1][0]) % p:
            return g


def rand_tensor(rng, n, p):
    return {(i, j): rng.randrange(p) for i in range(n + 1) for j in range(3)}


def test_weight():
    w = Weight(5, 2)
    assert w.n == 3
    with pytest.raises(ValueError):
        Weight(1, 2)


def test_rep_apply_identity_and_composition():
    p = 7
    rng = random.Random(0)
    w = Weight(4, 1)
    v = RepVector(3, 1, (1, 2, 3, 4))
    ident = ((1, 0), (0, 1))
    assert rep_apply(w, ident, v, p) == v
    g = rand_gl2(rng, p)
    h = rand_gl2(rng, p)
    gh = tuple(tuple(sum(g[i][k] * h[k][j] for k in range(2)) % p
                     for j in range(2)) for i in range(2))
    assert rep_apply(w, g, rep_apply(w, h, v, p), p) == rep_apply(w, gh, v, p)
    with pytest.raises(ValueError, match="singular"):
        rep_apply(w, ((1, 1), (1, 1)), v, p)


def test_sym2_of_index():
    v = sym2_of_index((2, 3, 4), 7)
    assert v.coords == (2, 3, 4)
    # transforms like the quadratic form a x^2 + b xy + c y^2 under U T tU
    p = 11
    rng = random.Random(1)
    for _ in range(20):
        a, b, c = rng.randrange(p), rng.randrange(p), rng.randrange(p)
        g = rand_gl2(rng, p)
        (u1, u2), (x, y) = g
        aU = (a * u1 * u1 + b * u1 * u2 + c * u2 * u2) % p
        cU = (a * x * x + b * x * y + c * y * y) % p
        bU = (2 * (a * u1 * x + c * u2 * y) + b * (u1 * y + u2 * x)) % p
        got = rep_apply(Weight(2, 0), g, sym2_of_index((a, b, c), p), p)
        assert got.coords == (aU, bU, cU)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_pieri_roundtrip_and_dimensions(p):
    rng = random.Random(p)
    for n in range(0, p - 2):
        x = rand_tensor(rng, n, p)
        split = pieri_split(n, p, x)
        sizes = [len(c.coords) for c in (split.x0, split.x1, split.x2)
                 if c is not None]
        assert sum(sizes) == 3 * (n + 1)
        back = pieri_reassemble(split, n, p)
        assert back == {k: v % p for k, v in x.items() if v % p}


@pytest.mark.parametrize("p", [5, 7])
def test_pieri_equivariance(p):
    rng = random.Random(p + 1)
    for n in range(0, p):
        comp_weights = {"x0": (n + 2, 0), "x1": (n, 1), "x2": (n - 2, 2)}
        for _ in range(10):
            x = rand_tensor(rng, n, p)
            g = rand_gl2(rng, p)
            sx = pieri_split(n, p, x)
            sgx = pieri_split(n, p, tensor_action(n, 0, g, x, p))
            for name in ("x0", "x1", "x2"):
                cx, cgx = getattr(sx, name), getattr(sgx, name)
                assert (cx is None) == (cgx is None)
                if cx is None:
                    continue
                nc, mc = comp_weights[name]
                moved = rep_apply(Weight(nc + mc, mc), g, cx, p)
                assert moved == cgx, (p, n, name)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_degenerate_split_only_x2(p):
    rng = random.Random(3)
    for n in (p - 2, p - 1):
        x = rand_tensor(rng, n, p)
        split = pieri_split(n, p, x)
        assert split.x0 is None and split.x1 is None
        assert split.present == (False, False, True)
        assert split.x2.n == n - 2 and split.x2.m == 2


def test_pieri_small_degrees():
    # n = 0: only the x0 component; n = 1: x0 and x1
    s = pieri_split(0, 7, {(0, 0): 1, (0, 1): 2, (0, 2): 3})
    assert s.x1 is None and s.x2 is None and s.x0 is not None
    s = pieri_split(1, 7, {(0, 0): 1, (1, 2): 3})
    assert s.x2 is None and s.x0 is not None and s.x1 is not None


def test_pieri_errors():
    with pytest.raises(ValueError):
        pieri_split(-1, 5, {})
    with pytest.raises(ValueError):
        pieri_split(5, 5, {})
