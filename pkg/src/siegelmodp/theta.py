"""Theta operators on Fourier expansions.

All operators act coefficientwise on the expansion: the coefficient at index
T = (a, b, c) is tensored with the symmetric-square vector
a e1^2 + b e1 e2 + c e2^2 (scaled by 1/N) and, for the vector-valued
operators, projected onto one irreducible component of the tensor product.
Weight shifts:

=============  =====================================
scalar theta   (k, k)      -> (k + p + 1, k + p - 1)
big theta      (k, k)      -> (k + p + 1, k + p + 1)
theta_1        (k1, k2)    -> (k1 + p - 1, k2 + p + 1)
theta_2        (k1, k2)    -> (k1 + p, k2 + p)
theta_3        (k1, k2)    -> (k1 + p + 1, k2 + p - 1)
=============  =====================================

Characters are unchanged.  Constant prefactors (2/3 for the big operator,
1/18 in the four-fold closed form) are used exactly as given; the measured
proportionality constant between the four-fold iterate and its closed form
is reported, not repaired.
"""

from __future__ import annotations

from dataclasses import replace

from .qexp import QExpansion, QExpError
from .rep import RepVector, Weight, pieri_split, sym2_of_index


class ThetaError(ValueError):
    pass


def _det_index(T, p: int) -> int:
    """det of the half-integral matrix for T = (a, b, c): (4ac - b^2)/4 mod p."""
    a, b, c = T
    return (4 * a * c - b * b) * pow(4, p - 2, p) % p


def _require_scalar(F: QExpansion, name: str):
    if F.weight.n != 0:
        raise ThetaError(f"{name} requires scalar weight, got "
                         f"({F.weight.k1},{F.weight.k2})")


def theta_scalar(F: QExpansion) -> QExpansion:
    """Scalar theta: coefficient at T becomes (1/N) A_F(T) (a, b, c) in V(2)."""
    _require_scalar(F, "theta_scalar")
    p = F.p
    ninv = pow(F.N % p, p - 2, p)
    k = F.weight.k1
    support = {}
    for T, (A,) in F.support.items():
        s = sym2_of_index(T, p)
        vec = tuple(A * ninv * x % p for x in s.coords)
        if any(vec):
            support[T] = vec
    return replace(F, weight=Weight(k + p + 1, k + p - 1), support=support)


def big_theta(F: QExpansion, m: int = 1) -> QExpansion:
    """Scalar-to-scalar operator: multiplier ((2/3) det(T) / N^2)^m at T."""
    _require_scalar(F, "big_theta")
    if m < 1:
        raise ThetaError("iterate count must be >= 1")
    p = F.p
    k = F.weight.k1
    base = 2 * pow(3, p - 2, p) * pow(F.N % p, 2 * (p - 2), p) % p
    support = {}
    for T, (A,) in F.support.items():
        mult = pow(base * _det_index(T, p) % p, m, p)
        if mult * A % p:
            support[T] = (mult * A % p,)
    return replace(F, weight=Weight(k + m * (p + 1), k + m * (p + 1)),
                   support=support)


_WEIGHT_SHIFT = {1: (-1, +1), 2: (0, 0), 3: (+1, -1)}
# theta_j selects the Pieri component with symmetric degree n - 2(3 - j) + ...
# concretely: j=1 -> lowest (n-2), j=2 -> middle (n), j=3 -> highest (n+2)
_COMPONENT = {1: "x2", 2: "x1", 3: "x0"}


def _check_domain(n: int, p: int, j: int):
    if j == 1:
        if n < 2:
            raise ThetaError("theta_1 requires weight difference k1-k2 >= 2")
        if not (p > n + 2 or n in (p - 2, p - 1)):
            raise ThetaError("theta_1 requires p > k1-k2+2 or "
                             "k1-k2 in {p-2, p-1}")
    elif j == 2:
        if n < 1:
            raise ThetaError("theta_2 requires weight difference k1-k2 >= 1")
        if not p > n + 2:
            raise ThetaError("theta_2 requires p > k1-k2+2")
    elif j == 3:
        if not p > n + 2:
            raise ThetaError("theta_3 requires p > k1-k2+2")
    else:
        raise ThetaError("j must be 1, 2 or 3")


def theta_j_coefficient(vec, T, n: int, p: int, N: int, j: int) -> RepVector:
    """The coefficient of theta_j(F) at T, given A_F(T) = vec."""
    ninv = pow(N % p, p - 2, p)
    a, b, c = T
    sym = (a % p, b % p, c % p)
    x = {}
    for i, Ai in enumerate(vec):
        for t, st in enumerate(sym):
            v = Ai * st * ninv % p
            if v:
                x[(i, t)] = v
    split = pieri_split(n, p, x)
    comp = getattr(split, _COMPONENT[j])
    if comp is None:
        raise ThetaError(f"component {j} absent at this weight")
    return comp


def theta_j(F: QExpansion, j: int) -> QExpansion:
    """Vector-valued theta operator: tensor with the index, Pieri-project."""
    p = F.p
    n = F.weight.n
    _check_domain(n, p, j)
    d1, d2 = _WEIGHT_SHIFT[j]
    new_weight = Weight(F.weight.k1 + p + d1, F.weight.k2 + p + d2)
    support = {}
    for T, vec in F.support.items():
        comp = theta_j_coefficient(vec, T, n, p, F.N, j)
        if not comp.is_zero():
            support[T] = comp.coords
    return replace(F, weight=new_weight, support=support)


def theta2_iterate_closed(F: QExpansion, m: int = 1):
    """Closed form for the 4m-fold theta_2 iterate on weight (k+1, k).

    Returns ``(G, report)``: G has coefficient multiplier
    (det(T) / (18 N^2))^(2m) at T and weight shifted by 4m p on both
    entries.  The report compares G against the literal 4m-fold iteration
    of theta_2: ``report["proportional"]`` and ``report["mu"]`` give the
    constant mu_m with iterate = mu_m * G when it exists.
    """
    if F.weight.n != 1:
        raise ThetaError("theta2_iterate_closed requires weight (k+1, k)")
    if m < 1:
        raise ThetaError("iterate count must be >= 1")
    p = F.p
    base = pow(18 * pow(F.N, 2, p) % p, p - 2, p)
    support = {}
    for T, vec in F.support.items():
        mult = pow(_det_index(T, p) * base % p, 2 * m, p)
        nv = tuple(mult * v % p for v in vec)
        if any(nv):
            support[T] = nv
    G = replace(F, weight=Weight(F.weight.k1 + 4 * m * p,
                                 F.weight.k2 + 4 * m * p), support=support)

    H = F
    for _ in range(4 * m):
        H = theta_j(H, 2)
    report = {"proportional": True, "mu": None}
    for T in sorted(set(G.support) | set(H.support)):
        gv = G.support.get(T, (0, 0))
        hv = H.support.get(T, (0, 0))
        for gc, hc in zip(gv, hv):
            if gc == 0 and hc == 0:
                continue
            if gc == 0 or hc == 0:
                report["proportional"] = False
                continue
            mu = hc * pow(gc, p - 2, p) % p
            if report["mu"] is None:
                report["mu"] = mu
            elif report["mu"] != mu:
                report["proportional"] = False
    if not F.support:
        report["note"] = "proportional, mu arbitrary"
    return G, report


def big_theta_composite(F: QExpansion) -> QExpansion:
    """big_theta(F, 1) computed by the two-step path: scalar theta, then the
    lowest Pieri component of a second tensor with the index (scaled 1/N)."""
    G = theta_scalar(F)
    p = F.p
    support = {}
    for T, vec in G.support.items():
        comp = theta_j_coefficient(vec, T, 2, p, F.N, 1)
        if not comp.is_zero():
            support[T] = comp.coords
    k = F.weight.k1
    return replace(F, weight=Weight(k + p + 1, k + p + 1),
                   support={T: v for T, v in support.items()})
