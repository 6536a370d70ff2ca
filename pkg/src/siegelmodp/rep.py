"""Symmetric-power representations of GL2 over F_p and the Pieri split.

Conventions
-----------

A weight is a pair ``(k1, k2)`` with ``k1 >= k2``; it labels the
representation Sym^(k1-k2) tensor det^(k2).  A vector of ``V(n, m)``
(Sym^n tensor det^m) is stored in the monomial basis

    ``u_i = e1^(n-i) * e2^i``,  coordinate index i = 0..n.

The Pieri split decomposes V(n, m) tensor V(2, 0) into (up to) three
components V(n+2, m), V(n, m+1), V(n-2, m+2).  It is computed through
highest-weight vectors lowered by a raising/lowering-operator basis with
falling-factorial normalization; the choice of normalization is pinned down
by the equivariance tests.

For n in {p-2, p-1} the modular splitting degenerates; only the V(n-2, m+2)
component is defined.  It is computed by solving the split over the rationals
and reducing that component mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import pochhammer, pochhammer_exact


@dataclass(frozen=True)
class Weight:
    k1: int
    k2: int

    def __post_init__(self):
        if self.k1 < self.k2:
            raise ValueError(f"weight must have k1 >= k2, got ({self.k1},{self.k2})")

    @property
    def n(self) -> int:
        return self.k1 - self.k2


@dataclass(frozen=True)
class RepVector:
    """Element of V(n, m) = Sym^n tensor det^m with coords on u_i = e1^(n-i) e2^i."""
    n: int
    m: int
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.n + 1:
            raise ValueError(
                f"coordinate vector has length {len(self.coords)}, expected {self.n + 1}")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


@dataclass(frozen=True)
class PieriSplit:
    """Result of splitting V(n, m) tensor V(2, 0).

    ``x0`` lies in V(n+2, m), ``x1`` in V(n, m+1), ``x2`` in V(n-2, m+2).
    Components that do not exist for the given (n, p) are None with the
    matching present flag False.
    """
    x0: RepVector | None
    x1: RepVector | None
    x2: RepVector | None
    present: tuple  # (bool, bool, bool)


# ---------------------------------------------------------------------------
# basic operations
# ---------------------------------------------------------------------------

def rep_apply(weight: Weight, g, v: RepVector, p: int) -> RepVector:
    """Apply the weight-(k1,k2) action of a 2x2 integer matrix g to v.

    The action substitutes e1 -> a*e1 + c*e2, e2 -> b*e1 + d*e2 for
    g = [[a, b], [c, d]] and multiplies by det(g)^k2.
    """
    (a, b), (c, d) = g
    det = (a * d - b * c) % p
    if det == 0:
        raise ValueError("matrix is singular mod p")
    n = weight.n
    if v.n != n:
        raise ValueError("vector degree does not match weight")
    if weight.k2 >= 0:
        detk2 = pow(det, weight.k2, p)
    else:
        detk2 = pow(pow(det, p - 2, p), -weight.k2, p)
    out = [0] * (n + 1)
    for i, ci in enumerate(v.coords):
        if ci % p == 0:
            continue
        # expand (a e1 + c e2)^(n-i) (b e1 + d e2)^i
        poly = _binomial_expand(a, c, n - i, b, d, i, p)
        for j, cj in enumerate(poly):
            out[j] = (out[j] + ci * detk2 * cj) % p
    return RepVector(n, v.m, tuple(x % p for x in out))


def _binomial_expand(a, c, e1, b, d, e2, p):
    """Coefficients on u_j of (a e1 + c e2)^e1exp * (b e1 + d e2)^e2exp."""
    # first factor: sum_k C(e1,k) a^(e1-k) c^k  e1^(e1-k) e2^k
    from math import comb
    out = [0] * (e1 + e2 + 1)
    for k in range(e1 + 1):
        f1 = comb(e1, k) * pow(a % p, e1 - k, p) * pow(c % p, k, p) % p
        if f1 == 0:
            continue
        for l in range(e2 + 1):
            f2 = comb(e2, l) * pow(b % p, e2 - l, p) * pow(d % p, l, p) % p
            if f2 == 0:
                continue
            # e2-power index = k + l
            out[k + l] = (out[k + l] + f1 * f2) % p
    return out


def clebsch_weights(w: Weight, w2: Weight) -> list[Weight]:
    """Weights of the components of the tensor product of two weights."""
    mu = min(w.n, w2.n)
    return [Weight(w.k1 + w2.k1 - j, w.k2 + w2.k2 + j) for j in range(mu + 1)]


def sym2_of_index(T, p: int) -> RepVector:
    """The V(2, 0) vector a*e1^2 + b*e1*e2 + c*e2^2 attached to T = (a, b, c)."""
    a, b, c = T
    return RepVector(2, 0, (a % p, b % p, c % p))


# ---------------------------------------------------------------------------
# the Pieri split
# ---------------------------------------------------------------------------
#
# Internally we use the reversed monomial basis ub_i = e1^i e2^(n-i)
# (ub_i = u_{n-i}) on both tensor factors, with operators
#   E ub_i = i ub_{i-1},    F ub_i = (n-i) ub_{i+1}
# extended to tensors by the Leibniz rule.  The highest-weight vectors
# (annihilated by F) are
#   w0 = ub_n (x) vb_2
#   w1 = ub_n (x) vb_1 - ub_{n-1} (x) vb_2
#   w2 = ub_n (x) vb_0 - 2 ub_{n-1} (x) vb_1 + ub_{n-2} (x) vb_2
# and the component bases are f^(j)_i = E^i w_j / poch(n_j, i) with
# n_0 = n+2, n_1 = n, n_2 = n-2.

def _tensor_E(vec, n, ring):
    """Apply the lowering operator E to a tensor given as {(i,j): coeff}."""
    out = {}
    for (i, j), c in vec.items():
        if c == 0:
            continue
        if i > 0:
            key = (i - 1, j)
            out[key] = ring(out.get(key, 0) + i * c)
        if j > 0:
            key = (i, j - 1)
            out[key] = ring(out.get(key, 0) + j * c)
    return {k: v for k, v in out.items() if v != 0}


def _tensor_F(vec, n, ring):
    """Apply the raising operator F to a tensor given as {(i,j): coeff}."""
    out = {}
    for (i, j), c in vec.items():
        if c == 0:
            continue
        if i < n:
            key = (i + 1, j)
            out[key] = ring(out.get(key, 0) + (n - i) * c)
        if j < 2:
            key = (i, j + 1)
            out[key] = ring(out.get(key, 0) + (2 - j) * c)
    return {k: v for k, v in out.items() if v != 0}


def highest_weight_vectors(n: int):
    """The (up to three) highest-weight tensors in internal coordinates."""
    ws = {}
    ws[0] = {(n, 2): 1}
    if n >= 1:
        ws[1] = {(n, 1): 1, (n - 1, 2): -1}
    if n >= 2:
        ws[2] = {(n, 0): 1, (n - 1, 1): -2, (n - 2, 2): 1}
    return ws


def _component_basis(n: int, j: int, p: int | None):
    """Vectors f^(j)_i (internal coords) for i = 0..n_j; exact if p is None."""
    nj = n + 2 - 2 * j
    if nj < 0:
        return []
    w = highest_weight_vectors(n)[j]
    if p is None:
        ring = lambda x: x
        poch = lambda m, i: Fraction(pochhammer_exact(m, i))
        vec = {k: Fraction(v) for k, v in w.items()}
    else:
        ring = lambda x: x % p
        poch = lambda m, i: pochhammer(m, i, p)
        vec = {k: v % p for k, v in w.items()}
    basis = []
    cur = vec
    for i in range(nj + 1):
        if p is None:
            scale = Fraction(1) / poch(nj, i)
            basis.append({k: v * scale for k, v in cur.items()})
        else:
            scale = pow(poch(nj, i), p - 2, p)
            basis.append({k: (v * scale) % p for k, v in cur.items()})
        cur = _tensor_E(cur, n, ring)
    return basis


@lru_cache(maxsize=None)
def _split_matrix(n: int, p: int | None):
    """Columns f^(j)_i (flattened internal coords) and their (j, i) labels."""
    cols = []
    labels = []
    if p is None:
        js = [0, 1, 2] if n >= 2 else ([0, 1] if n == 1 else [0])
    else:
        if n > p - 1:
            raise ValueError("split undefined at this degree")
        js = [0, 1, 2] if n >= 2 else ([0, 1] if n == 1 else [0])
    for j in js:
        for i, vec in enumerate(_component_basis(n, j, p)):
            cols.append(vec)
            labels.append((j, i))
    return cols, labels


def _solve_mod_p(columns, target, dim_keys, p):
    """Solve sum x_k col_k = target over F_p; raise if inconsistent."""
    key_index = {k: r for r, k in enumerate(dim_keys)}
    nrows = len(dim_keys)
    ncols = len(columns)
    M = [[0] * (ncols + 1) for _ in range(nrows)]
    for cidx, col in enumerate(columns):
        for k, v in col.items():
            M[key_index[k]][cidx] = v % p
    for k, v in target.items():
        M[key_index[k]][ncols] = v % p
    # Gaussian elimination
    row = 0
    pivots = []
    for col in range(ncols):
        sel = None
        for r in range(row, nrows):
            if M[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        M[row], M[sel] = M[sel], M[row]
        inv = pow(M[row][col], p - 2, p)
        M[row] = [(x * inv) % p for x in M[row]]
        for r in range(nrows):
            if r != row and M[r][col]:
                f = M[r][col]
                M[r] = [(a - f * b) % p for a, b in zip(M[r], M[row])]
        pivots.append(col)
        row += 1
    sol = [0] * ncols
    for r, c in enumerate(pivots):
        sol[c] = M[r][ncols]
    for r in range(row, nrows):
        if M[r][ncols] % p:
            raise ValueError("inconsistent split system")
    return sol


def _solve_exact(columns, target, dim_keys):
    """Solve over the rationals with Fractions."""
    key_index = {k: r for r, k in enumerate(dim_keys)}
    nrows = len(dim_keys)
    ncols = len(columns)
    M = [[Fraction(0)] * (ncols + 1) for _ in range(nrows)]
    for cidx, col in enumerate(columns):
        for k, v in col.items():
            M[key_index[k]][cidx] = Fraction(v)
    for k, v in target.items():
        M[key_index[k]][ncols] = Fraction(v)
    row = 0
    pivots = []
    for col in range(ncols):
        sel = None
        for r in range(row, nrows):
            if M[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        M[row], M[sel] = M[sel], M[row]
        inv = 1 / M[row][col]
        M[row] = [x * inv for x in M[row]]
        for r in range(nrows):
            if r != row and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[row])]
        pivots.append(col)
        row += 1
    sol = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        sol[c] = M[r][ncols]
    for r in range(row, nrows):
        if M[r][ncols] != 0:
            raise ValueError("inconsistent split system")
    return sol


@lru_cache(maxsize=None)
def _degenerate_x2_matrix(n: int, p: int) -> dict:
    """Mod-p matrix of the equivariant map onto the lowest Pieri component
    for n in {p-2, p-1}.

    The characteristic-0 projection matrix onto the third component is
    computed exactly; its entries are rescaled by the smallest power of p
    clearing every denominator and then reduced mod p.  For n = p-2 no
    rescaling is needed and this is the genuine projection; for n = p-1 the
    rescaled map is the unique (up to scalar) equivariant map onto the
    target, which factors through the quotient.

    Returns ``{internal_key: {target_row: value}}``.
    """
    cols, labels = _split_matrix(n, None)
    dim_keys = [(i, j) for i in range(n + 1) for j in range(3)]
    raw = {}
    max_val = 0
    for key in dim_keys:
        sol = _solve_exact(cols, {key: 1}, dim_keys)
        entries = {}
        for (j, i), val in zip(labels, sol):
            if j != 2 or val == 0:
                continue
            den = val.denominator
            v = 0
            while den % p == 0:
                den //= p
                v += 1
            max_val = max(max_val, v)
            entries[i] = val
        raw[key] = entries
    scale = Fraction(p) ** max_val
    out = {}
    for key, entries in raw.items():
        red = {}
        for i, val in entries.items():
            sv = val * scale
            assert sv.denominator % p != 0
            c = (sv.numerator % p) * pow(sv.denominator % p, p - 2, p) % p
            if c:
                red[i] = c
        if red:
            out[key] = red
    return out


def _to_internal(x: dict, n: int) -> dict:
    """Convert external {(i, j): c} on u_i (x) v_j to internal ub/vb coords."""
    return {(n - i, 2 - j): c for (i, j), c in x.items()}


def pieri_split(n: int, p: int, x: dict, m: int = 0) -> PieriSplit:
    """Split x in V(n, m) tensor V(2, 0) into its (up to three) components.

    ``x`` maps external tensor-basis pairs ``(i, j)`` (for u_i tensor v_j,
    v_j = e1^(2-j) e2^j) to integers.  Components are returned in external
    coordinates.  For n in {p-2, p-1} only the V(n-2, m+2) component exists;
    it is computed over the rationals and reduced mod p.
    """
    if n < 0:
        raise ValueError("negative symmetric degree")
    if n > p - 1:
        raise ValueError("split undefined at this degree")
    target = _to_internal({k: v for k, v in x.items() if v % p}, n)

    dim_keys = [(i, j) for i in range(n + 1) for j in range(3)]
    degenerate = n in (p - 2, p - 1) and n >= 2

    if degenerate:
        P = _degenerate_x2_matrix(n, p)
        comp = [0] * (n - 1)
        for (key, r_entries) in P.items():
            c = target.get(key)
            if c is None or c % p == 0:
                continue
            for r, val in r_entries.items():
                comp[r] = (comp[r] + c * val) % p
        x2 = RepVector(n - 2, m + 2, tuple(c % p for c in comp))
        return PieriSplit(None, None, x2, (False, False, True))

    cols, labels = _split_matrix(n, p)
    sol = _solve_mod_p(cols, target, dim_keys, p)
    out = {0: [0] * (n + 3), 1: [0] * (n + 1) if n >= 1 else None,
           2: [0] * (n - 1) if n >= 2 else None}
    for (j, i), val in zip(labels, sol):
        out[j][i] = val % p
    x0 = RepVector(n + 2, m, tuple(out[0]))
    x1 = RepVector(n, m + 1, tuple(out[1])) if n >= 1 else None
    x2 = RepVector(n - 2, m + 2, tuple(out[2])) if n >= 2 else None
    return PieriSplit(x0, x1, x2, (True, n >= 1, n >= 2))


def pieri_reassemble(split: PieriSplit, n: int, p: int) -> dict:
    """Inverse of :func:`pieri_split` (on present components); external coords."""
    cols, labels = _split_matrix(n, p)
    acc = {}
    comp_vectors = {0: split.x0, 1: split.x1, 2: split.x2}
    for (j, i), col in zip(labels, cols):
        v = comp_vectors[j]
        if v is None:
            continue
        c = v.coords[i]
        if c % p == 0:
            continue
        for key, val in col.items():
            acc[key] = (acc.get(key, 0) + c * val) % p
    # back to external coords
    out = {}
    for (ib, jb), c in acc.items():
        if c % p:
            out[(n - ib, 2 - jb)] = c % p
    return out


def tensor_action(n: int, m: int, g, x: dict, p: int) -> dict:
    """Apply g to x in V(n, m) tensor V(2, 0), factorwise (external coords)."""
    out = {}
    wn = Weight(n + m, m)
    w2 = Weight(2, 0)
    for (i, j), c in x.items():
        if c % p == 0:
            continue
        vi = RepVector(n, m, tuple(1 if t == i else 0 for t in range(n + 1)))
        vj = RepVector(2, 0, tuple(1 if t == j else 0 for t in range(3)))
        gi = rep_apply(wn, g, vi, p)
        gj = rep_apply(w2, g, vj, p)
        for a, ca in enumerate(gi.coords):
            if ca == 0:
                continue
            for b, cb in enumerate(gj.coords):
                if cb == 0:
                    continue
                key = (a, b)
                out[key] = (out.get(key, 0) + c * ca * cb) % p
    return {k: v for k, v in out.items() if v % p}
