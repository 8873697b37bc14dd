"""The cyclic-to-dihedral relabeling for odd n (the Pecher transform).

phi : Z_2n -> Z_2 x Z_n,  x |-> (x mod 2, x mod n)   (a group isomorphism)
psi : Z_2 x Z_n -> D_n,   (i, j) |-> a^i b^j         (a set bijection only)

Forward carries symmetric near-factorizations of Z_2n to strongly symmetric
near-factorizations of D_n; the inverse goes back the other way.  The module
also transports equivalence witnesses across the transform, with the gcd side
conditions that make the inverse direction a theorem rather than an
observation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InvariantViolation
from .groups import CyclicGroup, DihedralGroup, cyclic, dihedral
from .nearfact import (
    EquivalenceMap,
    NearFactorization,
    is_strongly_symmetric,
    is_symmetric,
    verify,
)


@dataclass(frozen=True)
class PecherContext:
    """Element-level maps between Z_2n and D_n for odd n."""

    n: int

    def __post_init__(self):
        if self.n < 3 or self.n % 2 == 0:
            raise DomainError(f"transform needs odd n > 2, got n={self.n}")

    @property
    def cyclic_group(self) -> CyclicGroup:
        return cyclic(2 * self.n)

    @property
    def dihedral_group(self) -> DihedralGroup:
        return dihedral(self.n)

    @property
    def crt_coefficients(self) -> tuple[int, int]:
        """(d1, d2) with 2*d1 + n*d2 = 1: d1 = (n+1)/2, d2 = -1."""
        return (self.n + 1) // 2, -1

    def forward_code(self, x: int) -> int:
        """x in Z_2n -> psi(phi(x)) = a^(x mod 2) b^(x mod n)."""
        return (x % 2) * self.n + x % self.n

    def inverse_code(self, c: int) -> int:
        """a^i b^j -> phi^-1(i, j) = n*d2*i + 2*d1*j mod 2n."""
        i, j = divmod(c, self.n)
        d1, d2 = self.crt_coefficients
        return (self.n * d2 * i + 2 * d1 * j) % (2 * self.n)


def _context_for_cyclic(group) -> PecherContext:
    if not isinstance(group, CyclicGroup) or group.order % 2 != 0:
        raise DomainError("forward transform starts from Z_2n")
    n = group.order // 2
    return PecherContext(n)


def _context_for_dihedral(group) -> PecherContext:
    if not isinstance(group, DihedralGroup):
        raise DomainError("inverse transform starts from D_n")
    return PecherContext(group.n)


def pecher_forward(nf: NearFactorization) -> NearFactorization:
    """Symmetric NF of Z_2n (n odd) -> strongly symmetric NF of D_n."""
    ctx = _context_for_cyclic(nf.group)
    if not verify(nf).is_nf:
        raise DomainError("input is not a near-factorization")
    if not (is_symmetric(nf.group, nf.A) and is_symmetric(nf.group, nf.B)):
        raise DomainError("forward transform needs a symmetric near-factorization")
    g = ctx.dihedral_group
    out = NearFactorization(
        g,
        tuple(ctx.forward_code(x) for x in nf.A),
        tuple(ctx.forward_code(x) for x in nf.B),
    )
    if not verify(out).is_nf or not (
        is_strongly_symmetric(g, out.A) and is_strongly_symmetric(g, out.B)
    ):
        raise InvariantViolation("forward image is not a strongly symmetric NF")
    return out


def pecher_inverse(nf: NearFactorization) -> NearFactorization:
    """Strongly symmetric NF of D_n (n odd) -> symmetric NF of Z_2n."""
    ctx = _context_for_dihedral(nf.group)
    if not verify(nf).is_nf:
        raise DomainError("input is not a near-factorization")
    if not (is_strongly_symmetric(nf.group, nf.A) and is_strongly_symmetric(nf.group, nf.B)):
        raise DomainError("inverse transform needs a strongly symmetric near-factorization")
    g = ctx.cyclic_group
    out = NearFactorization(
        g,
        tuple(ctx.inverse_code(c) for c in nf.A),
        tuple(ctx.inverse_code(c) for c in nf.B),
    )
    if not verify(out).is_nf or not (is_symmetric(g, out.A) and is_symmetric(g, out.B)):
        raise InvariantViolation("inverse image is not a symmetric NF")
    return out


@dataclass(frozen=True)
class GcdConditions:
    ok: bool
    gcds: tuple[int, int]


def check_gcd_conditions(n: int, k: int, ell: int) -> GcdConditions:
    """gcd(n, (k+1)/2) and gcd(n, (l+1)/2); both 1 enables witness pullback."""
    if k * ell != 2 * n - 1:
        raise DomainError(f"need k*l = 2n-1; got n={n}, k={k}, l={ell}")
    g1 = math.gcd(n, (k + 1) // 2)
    g2 = math.gcd(n, (ell + 1) // 2)
    return GcdConditions(g1 == 1 and g2 == 1, (g1, g2))


def equivalence_transport_forward(witness: EquivalenceMap) -> EquivalenceMap:
    """Cyclic witness (x -> rx + h, h in {0, n}) -> dihedral witness
    (f_{r mod n, 0}, h') with h' = e for h = 0 and h' = a for h = n."""
    ctx = _context_for_cyclic(witness.group)
    n = ctx.n
    r = witness.f.table[1]
    if witness.h not in (0, n):
        raise InvariantViolation(
            f"witness shift {witness.h} outside {{0, {n}}}; symmetric inputs forbid this"
        )
    g = ctx.dihedral_group
    h_prime = g.identity if witness.h == 0 else g.join(1, 0)
    return EquivalenceMap(g.aut(r % n, 0), h_prime)


@dataclass(frozen=True)
class TransportedWitness:
    map: EquivalenceMap
    proven: bool
    tag: str | None = None


def equivalence_transport_inverse(
    witness: EquivalenceMap, k: int, ell: int
) -> TransportedWitness:
    """Dihedral witness (f_{i,0}, h in {e, a}) -> cyclic witness over Z_2n.

    When the gcd conditions hold, every witness between strongly symmetric
    pairs has this shape and the pullback is proven; otherwise the result is
    tagged "unproven-equivalence-transport" and nonequivalence claims must
    come from a full search.
    """
    g = witness.group
    if not isinstance(g, DihedralGroup):
        raise DomainError("inverse transport starts from a dihedral witness")
    ctx = _context_for_dihedral(g)
    n = ctx.n
    conds = check_gcd_conditions(n, k, ell)
    i, j = g.aut_params(witness.f)
    if j != 0 or witness.h not in (0, n):
        if conds.ok:
            raise InvariantViolation(
                f"witness (f_{{{i},{j}}}, h={witness.h}) contradicts the gcd-condition theorem"
            )
        raise DomainError(
            "witness shape does not transport (j != 0 or h not in {e, a})"
        )
    r = i if i % 2 == 1 else i + n  # r = i mod n, r odd: the unit mod 2n
    zg = ctx.cyclic_group
    shift = 0 if witness.h == 0 else n
    cyc = EquivalenceMap(zg.aut(r), shift)
    return TransportedWitness(
        cyc, conds.ok, None if conds.ok else "unproven-equivalence-transport"
    )
