"""Hecke operators acting on Fourier coefficients of degree-2 forms.

The operator T(ell^i), for a prime ell coprime to p*N, acts on an expansion F
of weight (k1, k2) through

    A_{T(ell^i)F}(T) =
      sum_{alpha+beta+gamma=i} chi1(ell^beta) chi2(ell^gamma)
        * ell^(beta(k1-2) + gamma(k1+k2-3))
        * sum_{U in R(ell^beta), divisibility filter}
            rho_n((diag(1, ell^beta) U)^(-1)) . A_F(T')

where n = k1 - k2, the filter keeps U with ell^(beta+gamma) | a_U and
ell^gamma | b_U, c_U for U T tU = [[a_U, b_U/2], [b_U/2, c_U]], and
T' = ell^alpha * (a_U ell^(-beta-gamma), b_U ell^(-gamma), c_U ell^(beta-gamma)).

R(ell^beta) is a set of determinant-1 integer matrices, congruent to the
identity mod N, whose first rows enumerate P^1(Z/ell^beta).

An optional tensor normalization replaces the ell-exponents by
beta(k1+p-1) + gamma(k1+k2+2p-3) computed from a pre-image weight (the
weight before a theta operator was applied) and multiplies by ell^(-j*beta)
for the component index j; this is provably identical to the plain
normalization at the expansion's own weight.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .qexp import QExpansion, QExpError, check_index
from .rep import RepVector, Weight, rep_apply


class HeckeError(ValueError):
    pass


@dataclass(frozen=True)
class P1Rep:
    matrix: tuple  # ((a, b), (c, d)) over the integers
    beta: int


# ---------------------------------------------------------------------------
# representatives of P^1(Z / ell^beta) lifted into the level-N congruence group
# ---------------------------------------------------------------------------

def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _crt(r1, m1, r2, m2):
    g, x, _ = _xgcd(m1, m2)
    assert g == 1
    return (r1 + (r2 - r1) * x % m2 * m1) % (m1 * m2)


def p1_classes(ell: int, beta: int):
    """Canonical representatives of P^1(Z/ell^beta): (1, y) and (ell*z, 1)."""
    if beta == 0:
        return [(1, 0)]
    q = ell ** beta
    classes = [(1, y) for y in range(q)]
    classes += [((ell * z) % q, 1) for z in range(ell ** (beta - 1))]
    return classes


def _complete_matrix(u1: int, u2: int, N: int, randomize: bool, rng) -> tuple:
    """Complete a coprime first row ==(1,0) mod N to an SL2 matrix == 1 mod N."""
    g, d, c = _xgcd(u1, u2)
    assert g == 1
    # current second row (x, y) with u1*y - u2*x = 1
    x, y = -c, d
    # shift second row by k*(u1, u2) so that it becomes == (0, 1) mod N;
    # since (u1, u2) == (1, 0) mod N we need k == -x mod N
    k = (-x) % N
    if randomize:
        k += N * rng.randrange(0, 5)
    x, y = x + k * u1, y + k * u2
    assert u1 * y - u2 * x == 1
    assert x % N == 0 and y % N == 1
    return ((u1, u2), (x, y))


def p1_representatives(ell: int, beta: int, N: int,
                       scheme: str = "crt", seed: int = 0) -> list[P1Rep]:
    """Determinant-1 lifts of P^1(Z/ell^beta), congruent to 1 mod N.

    ``scheme`` selects the lifting strategy: "crt" (minimal CRT lift) or
    "random" (randomized lifts, for representative-independence tests).
    """
    if gcd(ell, N) != 1:
        raise HeckeError("ell must be coprime to the level")
    rng = random.Random(seed)
    randomize = scheme == "random"
    q = ell ** beta
    out = []
    for (v1, v2) in p1_classes(ell, beta):
        if beta == 0:
            u1, u2 = 1, 0
        else:
            u1 = _crt(v1, q, 1, N)
            u2 = _crt(v2, q, 0, N)
            if randomize:
                u1 += q * N * rng.randrange(0, 3)
                u2 += q * N * rng.randrange(0, 3)
            # ensure the row is coprime (adjust by multiples of q*N, which
            # changes neither the P^1 class nor the mod-N congruence)
            while gcd(u1, u2) != 1:
                u2 += q * N
        out.append(P1Rep(_complete_matrix(u1, u2, N, randomize, rng), beta))
    return out


# ---------------------------------------------------------------------------
# index transforms
# ---------------------------------------------------------------------------

def index_transform(U, T):
    """a_U, b_U, c_U with U T tU = [[a_U, b_U/2], [b_U/2, c_U]], integrally."""
    (u1, u2), (x, y) = U
    a, b, c = T
    a_U = a * u1 * u1 + b * u1 * u2 + c * u2 * u2
    c_U = a * x * x + b * x * y + c * y * y
    b_U = 2 * (a * u1 * x + c * u2 * y) + b * (u1 * y + u2 * x)
    return a_U, b_U, c_U


def _branches(ell: int, i: int, T, reps_by_beta):
    """Yield (alpha, beta, gamma, U, T') over all contributing branches."""
    a, b, c = T
    for beta in range(i + 1):
        for gamma in range(i - beta + 1):
            alpha = i - beta - gamma
            lbg = ell ** (beta + gamma)
            lg = ell ** gamma
            for rep in reps_by_beta[beta]:
                a_U, b_U, c_U = index_transform(rep.matrix, T)
                if a_U % lbg or b_U % lg or c_U % lg:
                    continue
                la = ell ** alpha
                T2 = (la * (a_U // lbg),
                      la * (b_U // lg),
                      la * ((c_U // lg) * ell ** beta))
                yield alpha, beta, gamma, rep, T2


def required_indices(ell: int, i: int, T, N: int = 3) -> set:
    """The set of input indices read by :func:`hecke_coefficient` at T."""
    reps = {beta: p1_representatives(ell, beta, N) for beta in range(i + 1)}
    return {T2 for *_, T2 in _branches(ell, i, check_index(T), reps)}


# ---------------------------------------------------------------------------
# the operator
# ---------------------------------------------------------------------------

def hecke_coefficient(F: QExpansion, ell: int, i: int, T,
                      assume_complete: bool = False,
                      scheme: str = "crt", seed: int = 0,
                      tensor: tuple | None = None) -> RepVector:
    """Coefficient of T(ell^i)F at index T.

    ``tensor``, if given, is a triple ``(pre_k1, pre_k2, j)`` selecting the
    tensor-weight normalization for the image of a theta operator with
    pre-image weight (pre_k1, pre_k2) and component index j (0 for the
    largest symmetric degree, 2 for the smallest); it is equivalent to the
    plain normalization at F's own weight.
    """
    p = F.p
    T = check_index(T)
    if ell % p == 0 or gcd(ell, F.N) != 1:
        raise HeckeError("ell must be coprime to p and the level")
    k1, k2 = F.weight.k1, F.weight.k2
    n = F.weight.n
    linv = pow(ell % p, p - 2, p)

    if not assume_complete:
        missing = sorted(required_indices(ell, i, T, F.N) - set(F.support))
        if missing:
            raise HeckeError(f"missing required indices: {missing}")

    reps = {beta: p1_representatives(ell, beta, F.N, scheme=scheme, seed=seed)
            for beta in range(i + 1)}
    out = [0] * (n + 1)
    for alpha, beta, gamma, rep, T2 in _branches(ell, i, T, reps):
        coeff_vec = F.support.get(T2)
        if coeff_vec is None:
            continue
        if tensor is None:
            exp = beta * (k1 - 2) + gamma * (k1 + k2 - 3)
            extra = 1
        else:
            pk1, pk2, j = tensor
            exp = beta * (pk1 + p - 1) + gamma * (pk1 + pk2 + 2 * p - 3)
            extra = pow(linv, j * beta, p)
        mult = (F.chi1_at(ell ** beta) * F.chi2_at(ell ** gamma)
                * pow(ell % p, exp, p) * extra) % p
        if mult == 0:
            continue
        # rho_n((diag(1, ell^beta) U)^(-1)) = ell^(-n beta) * Sym^n(adj D)
        (u1, u2), (x, y) = rep.matrix
        lb = ell ** beta
        D = ((u1, u2), (lb * x, lb * y))
        adj = ((D[1][1], -D[0][1]), (-D[1][0], D[0][0]))
        v = RepVector(n, 0, coeff_vec)
        v = rep_apply(Weight(n, 0), adj, v, p)
        scale = mult * pow(linv, n * beta, p) % p
        for t, cv in enumerate(v.coords):
            out[t] = (out[t] + scale * cv) % p
    return RepVector(n, k2, tuple(out))


def eigenvalue(F: QExpansion, ell: int, i: int,
               assume_complete: bool = False) -> tuple:
    """Eigenvalue of T(ell^i) on F, with a per-index consistency report.

    Returns ``(lam, report)`` where report is a list of
    ``(T, matches: bool)`` over every supported index with computable
    Hecke coefficient.
    """
    if not F.support:
        raise HeckeError("zero expansion has no eigenvalue")
    p = F.p
    lam = None
    report = []
    for T in sorted(F.support):
        try:
            img = hecke_coefficient(F, ell, i, T, assume_complete=assume_complete)
        except HeckeError:
            continue
        vec = F.support[T]
        lead = next((t for t, c in enumerate(vec) if c % p), None)
        if lam is None and lead is not None:
            lam = img.coords[lead] * pow(vec[lead], p - 2, p) % p
        matches = all((img.coords[t] - (lam or 0) * vec[t]) % p == 0
                      for t in range(len(vec)))
        report.append((T, matches))
    if lam is None:
        raise HeckeError("no checkable index")
    return lam, report


def gauss_reduce(T) -> tuple:
    """Canonical representative of the proper (SL2(Z)) equivalence class of T.

    T = (a, b, c) stands for the positive semi-definite integral binary
    quadratic form a x^2 + b xy + c y^2.  Definite forms are reduced to
    -a < b <= a <= c (with b >= 0 when a == c); rank-1 forms reduce to
    (d, 0, 0) with d = gcd(a, b, c); the zero form to (0, 0, 0).

    Coefficient data that factors through this reduction is invariant under
    every choice of representative lift in the Hecke sum.
    """
    a, b, c = check_index(T)
    if 4 * a * c - b * b == 0:
        return (gcd(gcd(a, b), c), 0, 0)
    while True:
        if c < a or (c == a and b < 0):
            a, b, c = c, -b, a
            continue
        if b > a or b <= -a:
            # shift b into (-a, a] via (x, y) -> (x + t y, y)
            t = (a - b) // (2 * a)
            a, b, c = a, b + 2 * t * a, c + t * b + t * t * a
            continue
        return (a, b, c)


def constant_term_multiplier(ell: int, k: int, p: int) -> int:
    """Closed form 1 + (ell+1) ell^(k-2) + ell^(2k-3) mod p for scalar weight k."""
    return (1 + (ell + 1) * pow(ell, k - 2, p) + pow(ell, 2 * k - 3, p)) % p
