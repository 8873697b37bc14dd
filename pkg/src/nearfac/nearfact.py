"""Near-factorizations: representation, verification, equivalence, canonical forms.

A pair (A, B) of subsets of a finite group G is a near-factorization when
|A| * |B| = |G| - 1 and every non-identity element has exactly one
representation a*b with a in A, b in B (the identity has none).  Equivalence
is generated by the maps Phi_{f,h}: (A, B) -> (f(A)h, h^-1 f(B)) for an
automorphism f and a group element h; ordered pairs are never swapped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import CapabilityError, DomainError, InvariantViolation
from .groups import Automorphism, Group, DihedralGroup, aut_inverse, compose


@dataclass(frozen=True)
class NearFactorization:
    """A candidate pair of element-code sets; verify() checks the defining
    property, construction only normalizes (sort, dedupe, range-check)."""

    group: Group
    A: tuple[int, ...]
    B: tuple[int, ...]

    def __post_init__(self):
        for side in ("A", "B"):
            codes = getattr(self, side)
            for c in codes:
                self.group.check_code(c)
            object.__setattr__(self, side, tuple(sorted(set(codes))))

    @property
    def k(self) -> int:
        return len(self.A)

    @property
    def ell(self) -> int:
        return len(self.B)

    def key(self) -> tuple:
        return (self.group.name, self.A, self.B)

    def pretty(self) -> str:
        g = self.group
        fmt = lambda xs: "{" + ", ".join(g.element_name(x) for x in xs) + "}"
        return f"{g.name}: A={fmt(self.A)} B={fmt(self.B)}"


@dataclass(frozen=True)
class EquivalenceMap:
    """Phi_{f,h}: (A,B) -> (f(A)h, h^-1 f(B))."""

    f: Automorphism
    h: int

    def __post_init__(self):
        self.f.group.check_code(self.h)

    @property
    def group(self) -> Group:
        return self.f.group

    @property
    def label(self) -> str:
        return f"Phi({self.f.label}, {self.group.element_name(self.h)})"


@dataclass(frozen=True)
class EquivalenceWitness:
    map: EquivalenceMap
    verified: bool


@dataclass(frozen=True)
class VerificationReport:
    is_nf: bool
    uncovered: frozenset[int] = frozenset()
    multiply_covered: tuple[tuple[int, int], ...] = ()
    reason: str | None = None

    def describe(self, group: Group) -> str:
        if self.is_nf:
            return "near-factorization"
        parts = [self.reason or "not a near-factorization"]
        if self.uncovered:
            parts.append(
                "uncovered: " + ", ".join(group.element_name(x) for x in sorted(self.uncovered))
            )
        if self.multiply_covered:
            parts.append(
                "overcovered: "
                + ", ".join(f"{group.element_name(x)} (x{c})" for x, c in self.multiply_covered)
            )
        return "; ".join(parts)


def identity_map(group: Group) -> EquivalenceMap:
    return EquivalenceMap(group.identity_aut, group.identity)


def verify(nf: NearFactorization) -> VerificationReport:
    """Check the defining property; failures are reported, never raised."""
    g = nf.group
    order = g.order
    if nf.k * nf.ell != order - 1:
        return VerificationReport(
            False, reason=f"size mismatch: {nf.k} * {nf.ell} != {order} - 1"
        )
    counts = [0] * order
    mt = g.mul_table
    for a in nf.A:
        row = mt[a]
        for b in nf.B:
            counts[row[b]] += 1
    uncovered = frozenset(x for x in range(1, order) if counts[x] == 0)
    multi = tuple((x, c) for x, c in enumerate(counts) if c >= 2 or (x == 0 and c >= 1))
    ok = not uncovered and not multi
    return VerificationReport(ok, uncovered, multi, None if ok else "coverage failure")


def is_symmetric(group: Group, X) -> bool:
    """True iff X is closed under group inversion."""
    xs = set(X)
    inv = group.inv_table
    return all(inv[x] in xs for x in xs)


def strong_involution(group: DihedralGroup, code: int) -> int:
    """a^i b^j -> a^i b^-j (the reflection-exponent negation)."""
    e, h = group.split(code)
    return group.join(e, -h)


def is_strongly_symmetric(group: Group, X) -> bool:
    """Dihedral only: X contains a^i b^-j whenever it contains a^i b^j."""
    if not isinstance(group, DihedralGroup):
        raise CapabilityError("strong symmetry is defined for dihedral groups only")
    xs = set(X)
    return all(strong_involution(group, x) in xs for x in xs)


@dataclass(frozen=True)
class RotationProfile:
    rots_A: int
    rots_B: int
    case: str  # "i" -> ((k-1)/2, (l+1)/2); "ii" -> ((k+1)/2, (l-1)/2)


def rotation_profile(nf: NearFactorization) -> RotationProfile:
    """Rotation counts of a verified dihedral NF and which of the two
    admissible splits holds; anything else is an invariant violation."""
    g = nf.group
    if not isinstance(g, DihedralGroup):
        raise CapabilityError("rotation profile is defined for dihedral groups only")
    k, ell = nf.k, nf.ell
    ra = sum(1 for x in nf.A if g.is_rotation(x))
    rb = sum(1 for x in nf.B if g.is_rotation(x))
    if (ra, rb) == ((k - 1) // 2, (ell + 1) // 2) and k % 2 == 1 and ell % 2 == 1:
        return RotationProfile(ra, rb, "i")
    if (ra, rb) == ((k + 1) // 2, (ell - 1) // 2) and k % 2 == 1 and ell % 2 == 1:
        return RotationProfile(ra, rb, "ii")
    raise InvariantViolation(
        f"rotation counts ({ra}, {rb}) fit neither admissible case for ({k},{ell})"
    )


def apply_map(m: EquivalenceMap, nf: NearFactorization) -> NearFactorization:
    g = nf.group
    if m.group != g:
        raise DomainError("equivalence map and near-factorization live in different groups")
    mt = g.mul_table
    t = m.f.table
    hinv = g.inv_table[m.h]
    A2 = tuple(sorted(mt[t[a]][m.h] for a in nf.A))
    B2 = tuple(sorted(mt[hinv][t[b]] for b in nf.B))
    return NearFactorization(g, A2, B2)


def invert_map(m: EquivalenceMap) -> EquivalenceMap:
    """Phi_{f,h}^-1 = Phi_{f^-1, f^-1(h^-1)}."""
    finv = aut_inverse(m.f)
    return EquivalenceMap(finv, finv.table[m.group.inv_table[m.h]])


def compose_maps(m1: EquivalenceMap, m2: EquivalenceMap) -> EquivalenceMap:
    """The map 'apply m1 first, then m2' = Phi_{m2.f o m1.f, m2.f(m1.h) * m2.h}."""
    if m1.group != m2.group:
        raise DomainError("cannot compose maps over different groups")
    g = m1.group
    return EquivalenceMap(compose(m1.f, m2.f), g.mul_table[m2.f.table[m1.h]][m2.h])


_canon_cache: dict[tuple, tuple[NearFactorization, EquivalenceMap]] = {}


def _canonical_with_map(nf: NearFactorization) -> tuple[NearFactorization, EquivalenceMap]:
    """Lexicographically least equivalent pair, plus one map reaching it.

    Pairs are compared as the sorted code sequence of A' followed by that of
    B'.  Since some f(A)h always contains the identity, the minimum does, so
    only h in f(A)^-1 needs to be scanned.
    """
    key = nf.key()
    hit = _canon_cache.get(key)
    if hit is not None:
        return hit
    g = nf.group
    mt = g.mul_table
    inv = g.inv_table
    bestA = None
    bestB = None
    best = None
    for f in g.aut_list:
        t = f.table
        fA = [t[a] for a in nf.A]
        fB = None
        for x in fA:
            h = inv[x]
            A2 = tuple(sorted(mt[y][h] for y in fA))
            if bestA is not None and A2 > bestA:
                continue
            if fB is None:
                fB = [t[b] for b in nf.B]
            hi = inv[h]
            B2 = tuple(sorted(mt[hi][y] for y in fB))
            if bestA is None or (A2, B2) < (bestA, bestB):
                bestA, bestB = A2, B2
                best = EquivalenceMap(f, h)
    result = (NearFactorization(g, bestA, bestB), best)
    _canon_cache[key] = result
    return result


def canonical_form(nf: NearFactorization) -> NearFactorization:
    return _canonical_with_map(nf)[0]


def are_equivalent(nf1: NearFactorization, nf2: NearFactorization) -> Optional[EquivalenceWitness]:
    """Witness mapping nf1 onto nf2, or None.  Ordered pairs: A maps to A', B
    to B'; no (A,B) <-> (B,A) identification."""
    if nf1.group != nf2.group:
        raise DomainError("near-factorizations live in different groups")
    if (nf1.k, nf1.ell) != (nf2.k, nf2.ell):
        return None
    c1, m1 = _canonical_with_map(nf1)
    c2, m2 = _canonical_with_map(nf2)
    if c1 != c2:
        return None
    witness = compose_maps(m1, invert_map(m2))
    if apply_map(witness, nf1) != nf2:
        raise InvariantViolation("composed canonical maps failed to produce a witness")
    return EquivalenceWitness(witness, True)


def symmetrizing_translate(nf: NearFactorization) -> int:
    """Smallest g with (A+g, B-g) symmetric; guaranteed for abelian groups."""
    g = nf.group
    if not g.abelian:
        raise CapabilityError("symmetrizing translate applies to abelian groups only")
    mt = g.mul_table
    inv = g.inv_table
    for t in g.elements():
        ti = inv[t]
        A2 = [mt[a][t] for a in nf.A]
        if not is_symmetric(g, A2):
            continue
        B2 = [mt[ti][b] for b in nf.B]
        if is_symmetric(g, B2):
            return t
    raise InvariantViolation("no symmetrizing translate exists; verifier or theorem broken")


def translate(nf: NearFactorization, t: int) -> NearFactorization:
    """The equivalent pair (A t, t^-1 B)."""
    return apply_map(EquivalenceMap(nf.group.identity_aut, t), nf)


def invert_pair(nf: NearFactorization) -> NearFactorization:
    """(A, B) -> (B^-1, A^-1): an involution carrying (k,l)-NFs to (l,k)-NFs
    and equivalent pairs to equivalent pairs."""
    inv = nf.group.inv_table
    return NearFactorization(
        nf.group, tuple(inv[b] for b in nf.B), tuple(inv[a] for a in nf.A)
    )
