"""Direct constructions: the two classical dihedral families, their explicit
equivalence, and the blowup-sequence SEDF pairs in Z_{a^2+1}."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .groups import CyclicGroup, DihedralGroup, cyclic, dihedral
from .nearfact import EquivalenceMap, NearFactorization, verify


def trivial_nf(group) -> NearFactorization:
    return NearFactorization(group, (0,), tuple(range(1, group.order)))


def decaen_nf(n: int, k: int) -> NearFactorization:
    """The (k, l)-pair with multiplier k:
    A = {b^i : 1<=i<=(k-1)/2} u {a b^i : 0<=i<=(k-1)/2},
    B = {e} u {b^{jk}, a b^{jk} : 1<=j<=(l-1)/2}.

    Only extrapolated beyond the power-of-two instances, so the result is
    accepted only if it verifies.
    """
    if n <= 2 or k < 1 or (2 * n - 1) % k != 0:
        raise DomainError(f"need n > 2 and k | 2n-1; got n={n}, k={k}")
    ell = (2 * n - 1) // k
    g = dihedral(n)
    a0 = (k - 1) // 2
    b0 = (ell - 1) // 2
    A = [g.join(0, i) for i in range(1, a0 + 1)] + [g.join(1, i) for i in range(a0 + 1)]
    B = [0]
    for j in range(1, b0 + 1):
        B.append(g.join(0, j * k))
        B.append(g.join(1, j * k))
    nf = NearFactorization(g, tuple(A), tuple(B))
    if nf.k != k or nf.ell != ell or not verify(nf).is_nf:
        raise DomainError(f"construction did not verify for n={n}, k={k}")
    return nf


@dataclass(frozen=True)
class BacsoParams:
    r: int

    def __post_init__(self):
        if self.r < 2:
            raise DomainError("bacso construction needs r >= 2")

    @property
    def n(self) -> int:
        return 2 ** (2 * self.r - 1)

    @property
    def alpha(self) -> int:
        return 2**self.r - 1

    @property
    def d1(self) -> int:
        return 2**self.r + 3

    @property
    def d2(self) -> int:
        return 2 ** (self.r + 1) - 3

    @property
    def a0(self) -> int:
        return 2 ** (self.r - 1) - 1

    @property
    def b0(self) -> int:
        return 2 ** (self.r - 1)

    @property
    def s(self) -> int:
        return 2 ** (self.r - 1) - 3


def bacso_nf(r: int) -> NearFactorization:
    """A' = {b^(-s+t*d1), a b^(-s+t*d1) : 0<=t<a0} u {a},
    B' = {b^(-s+t*d2), a b^(-s+t*d2) : 1<=t<=b0} u {e} over D_{2^(2r-1)}."""
    p = BacsoParams(r)
    g = dihedral(p.n)
    A = [g.join(1, 0)]
    for t in range(p.a0):
        A.append(g.join(0, -p.s + t * p.d1))
        A.append(g.join(1, -p.s + t * p.d1))
    B = [0]
    for t in range(1, p.b0 + 1):
        B.append(g.join(0, -p.s + t * p.d2))
        B.append(g.join(1, -p.s + t * p.d2))
    nf = NearFactorization(g, tuple(A), tuple(B))
    if not verify(nf).is_nf:
        raise DomainError(f"construction did not verify for r={r}")
    return nf


def decaen_bacso_witness(r: int) -> EquivalenceMap:
    """Phi_{f_{-d1, 0}, e} carries decaen_nf(2^(2r-1), 2^r - 1) onto bacso_nf(r)."""
    p = BacsoParams(r)
    g = dihedral(p.n)
    return EquivalenceMap(g.aut(-p.d1, 0), g.identity)


def blowup_sedf(seq: tuple[int, ...]) -> NearFactorization:
    """The SEDF pair (A, B) in Z_{a^2+1} from blowup sequence (a, a) or
    (j, j, k, k) with a = j*k.  Returned as a raw set pair; the associated
    near-factorization is (-A, B).
    """
    seq = tuple(int(x) for x in seq)
    if len(seq) == 2 and seq[0] == seq[1] and seq[0] >= 1:
        a = seq[0]
        g = cyclic(a * a + 1)
        A = tuple(range(a))
        B = tuple(i * a for i in range(1, a + 1))
    elif len(seq) == 4 and seq[0] == seq[1] and seq[2] == seq[3]:
        j, k = seq[0], seq[2]
        if j <= 1 or k <= 1 or j % 2 == 0 or k % 2 == 0:
            raise DomainError("(j,j,k,k) blowup needs odd j, k > 1")
        a = j * k
        g = cyclic(a * a + 1)
        A = tuple(i * k * k + h for i in range(j) for h in range(k))
        B = tuple(((j - 1 + j * i) * k * k + h * k) % g.order for i in range(j) for h in range(1, k + 1))
    else:
        raise DomainError(f"unsupported blowup sequence {seq}")
    return NearFactorization(g, A, B)


def blowup_nf(seq: tuple[int, ...]) -> NearFactorization:
    """The near-factorization (-A, B) associated with the blowup SEDF."""
    pair = blowup_sedf(seq)
    inv = pair.group.inv_table
    nf = NearFactorization(pair.group, tuple(inv[x] for x in pair.A), pair.B)
    if not verify(nf).is_nf:
        raise DomainError(f"blowup sequence {seq} did not yield a near-factorization")
    return nf


def has_wraparound_ap(group: CyclicGroup, X, length: int) -> bool:
    """Does X contain an arithmetic progression of `length` distinct terms
    modulo m (wrap-around allowed, any nonzero common difference)?"""
    if not isinstance(group, CyclicGroup):
        raise DomainError("arithmetic progressions are defined in cyclic groups")
    xs = set(X)
    if length <= 1:
        return len(xs) >= length
    if len(xs) < length:
        return False
    m = group.order
    for d in range(1, m):
        if m // math.gcd(m, d) < length:
            continue  # terms would repeat
        for start in xs:
            t = start
            for _ in range(length - 1):
                t = (t + d) % m
                if t not in xs:
                    break
            else:
                return True
    return False
