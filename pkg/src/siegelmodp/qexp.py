"""Finite-support Fourier expansions of mod p Siegel modular forms.

An expansion records a prime p, a level N (coprime to p, N >= 3), a weight
(k1, k2), two characters on (Z/NZ)^x, and a finite support mapping index
triples T = (a, b, c) — standing for the half-integral matrix
[[a, b/2], [b/2, c]] — to coefficient vectors of length k1 - k2 + 1 in the
monomial basis u_i = e1^(k1-k2-i) e2^i.

The artifact models a single cusp component of the full expansion tuple.

Text format SMF1 (UTF-8, line oriented)::

    %SMF v1
    p 7
    N 3
    weight 4 2
    chi1 trivial
    chi2 table:1 6 1
    # comment
    coeff 1 1 1 : 3 2 5

Canonical serialization sorts indices by (a, c, b); b may be negative.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .arith import is_prime
from .rep import Weight


class QExpError(ValueError):
    """Raised for malformed expansions or format violations."""


def check_index(T) -> tuple:
    a, b, c = T
    if a < 0 or c < 0 or 4 * a * c - b * b < 0:
        raise QExpError(f"index {T} violates semi-positivity")
    return (int(a), int(b), int(c))


@dataclass(frozen=True)
class QExpansion:
    p: int
    N: int
    weight: Weight
    support: dict = field(default_factory=dict)
    chi1: tuple | None = None  # None = trivial; else tuple of N values mod p
    chi2: tuple | None = None

    def __post_init__(self):
        if not is_prime(self.p) or self.p < 5:
            raise QExpError(f"p must be a prime >= 5, got {self.p}")
        if self.N < 3:
            raise QExpError("level N must be >= 3")
        from math import gcd
        if gcd(self.N, self.p) != 1:
            raise QExpError("level must be coprime to p")
        n = self.weight.n
        clean = {}
        for T, vec in self.support.items():
            T = check_index(T)
            vec = tuple(v % self.p for v in vec)
            if len(vec) != n + 1:
                raise QExpError(
                    f"coefficient at {T} has length {len(vec)}, expected {n + 1}")
            if any(vec):
                clean[T] = vec
        object.__setattr__(self, "support", clean)
        for name in ("chi1", "chi2"):
            tab = getattr(self, name)
            if tab is not None:
                if len(tab) != self.N:
                    raise QExpError(f"{name} table must have N={self.N} entries")
                object.__setattr__(self, name, tuple(v % self.p for v in tab))
        self._check_parity()

    def _check_parity(self):
        """chi2(-1) must equal (-1)^(k1+k2); only checkable for explicit tables."""
        if self.chi2 is None:
            return
        val = self.chi2[(-1) % self.N]
        want = pow(-1, self.weight.k1 + self.weight.k2, self.p)
        if val != want:
            raise QExpError(
                f"parity violation: chi2(-1)={val}, expected {want}")

    # -- character evaluation ----------------------------------------------
    def chi1_at(self, n: int) -> int:
        if self.chi1 is None:
            return 1
        return self.chi1[n % self.N]

    def chi2_at(self, n: int) -> int:
        if self.chi2 is None:
            return 1
        return self.chi2[n % self.N]

    def coefficient(self, T) -> tuple:
        """Coefficient vector at T (zero vector if absent)."""
        return self.support.get(tuple(T), tuple([0] * (self.weight.n + 1)))

    def metadata_like(self, other) -> bool:
        return (self.p == other.p and self.N == other.N
                and self.weight == other.weight
                and self.chi1 == other.chi1 and self.chi2 == other.chi2)


# ---------------------------------------------------------------------------
# codec
# ---------------------------------------------------------------------------

def serialize(F: QExpansion) -> str:
    lines = ["%SMF v1", f"p {F.p}", f"N {F.N}",
             f"weight {F.weight.k1} {F.weight.k2}"]
    for name, tab in (("chi1", F.chi1), ("chi2", F.chi2)):
        if tab is None:
            lines.append(f"{name} trivial")
        else:
            lines.append(f"{name} table:" + " ".join(str(v) for v in tab))
    for (a, b, c) in sorted(F.support, key=lambda t: (t[0], t[2], t[1])):
        vec = F.support[(a, b, c)]
        lines.append(f"coeff {a} {b} {c} : " + " ".join(str(v) for v in vec))
    return "\n".join(lines) + "\n"


def parse(text: str) -> QExpansion:
    lines = text.splitlines()
    if not lines or lines[0].strip() != "%SMF v1":
        raise QExpError("line 1: missing %SMF v1 magic")
    headers = {}
    support = {}
    weight = None
    for ln, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            if line.startswith("coeff "):
                head, _, tail = line.partition(":")
                parts = head.split()
                if len(parts) != 4:
                    raise QExpError("malformed coeff index")
                T = (int(parts[1]), int(parts[2]), int(parts[3]))
                vec = tuple(int(v) for v in tail.split())
                if T in support:
                    raise QExpError(f"duplicate index {T}")
                support[T] = vec
            else:
                key, _, rest = line.partition(" ")
                if key in ("p", "N"):
                    headers[key] = int(rest)
                elif key == "weight":
                    k1, k2 = rest.split()
                    weight = Weight(int(k1), int(k2))
                elif key in ("chi1", "chi2"):
                    rest = rest.strip()
                    if rest == "trivial":
                        headers[key] = None
                    elif rest.startswith("table:"):
                        headers[key] = tuple(int(v) for v in rest[6:].split())
                    else:
                        raise QExpError(f"bad character spec {rest!r}")
                else:
                    raise QExpError(f"unknown header {key!r}")
        except QExpError as e:
            raise QExpError(f"line {ln}: {e}") from None
        except Exception as e:
            raise QExpError(f"line {ln}: {e}") from None
    if "p" not in headers or "N" not in headers or weight is None:
        raise QExpError("missing required header (p, N or weight)")
    try:
        return QExpansion(p=headers["p"], N=headers["N"], weight=weight,
                          support=support,
                          chi1=headers.get("chi1"), chi2=headers.get("chi2"))
    except QExpError as e:
        raise QExpError(str(e)) from None


def codec(direction: str, payload):
    """Round-trip codec front end: direction is 'parse' or 'serialize'."""
    if direction == "parse":
        return parse(payload)
    if direction == "serialize":
        return serialize(payload)
    raise ValueError("direction must be 'parse' or 'serialize'")


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------

def is_p_singular(F: QExpansion) -> bool:
    """True when every supported index (a, b, c) has p | a, p | b, p | c."""
    p = F.p
    return all(a % p == 0 and b % p == 0 and c % p == 0 for (a, b, c) in F.support)


def is_weak_p_singular(F: QExpansion) -> bool:
    """True when every supported index has 4ac - b^2 divisible by p."""
    p = F.p
    return all((4 * a * c - b * b) % p == 0 for (a, b, c) in F.support)


def pth_root(F: QExpansion) -> QExpansion | None:
    """For scalar F of weight (k, k) with p | k: the G with F = G^p, if any.

    Returns None when some supported index is not divisible by p.
    """
    if F.weight.n != 0:
        raise QExpError("pth root only defined for scalar-valued expansions")
    k = F.weight.k1
    if k % F.p != 0:
        raise QExpError("weight not p-divisible")
    if not is_p_singular(F):
        return None
    new_support = {(a // F.p, b // F.p, c // F.p): vec
                   for (a, b, c), vec in F.support.items()}
    return replace(F, weight=Weight(k // F.p, k // F.p), support=new_support)


def index_scale_up(F: QExpansion) -> QExpansion:
    """Multiply every index by p and the weight by p (inverse of pth_root)."""
    if F.weight.n != 0:
        raise QExpError("index scaling only defined for scalar-valued expansions")
    new_support = {(a * F.p, b * F.p, c * F.p): vec
                   for (a, b, c), vec in F.support.items()}
    return replace(F, weight=Weight(F.weight.k1 * F.p, F.weight.k2 * F.p),
                   support=new_support)


def hasse_scale(F: QExpansion, m: int) -> QExpansion:
    """Multiply by the m-th power of the weight-(p-1) form with expansion 1."""
    if m < 0:
        raise QExpError("nonnegative powers only")
    shift = m * (F.p - 1)
    return replace(F, weight=Weight(F.weight.k1 + shift, F.weight.k2 + shift))


def linear_combine(pairs) -> QExpansion:
    """F_p-linear combination of expansions sharing all metadata."""
    pairs = list(pairs)
    if not pairs:
        raise QExpError("empty combination")
    _, first = pairs[0]
    p = first.p
    n = first.weight.n
    acc: dict = {}
    for scalar, F in pairs:
        if not F.metadata_like(first):
            raise QExpError("metadata mismatch in linear combination")
        for T, vec in F.support.items():
            cur = acc.get(T, (0,) * (n + 1))
            acc[T] = tuple((x + scalar * y) % p for x, y in zip(cur, vec))
    return replace(first, support={T: v for T, v in acc.items() if any(v)})
