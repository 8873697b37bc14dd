"""External-difference multisets and (generalized) strong external difference
families, plus the two-set GSEDF <-> near-factorization conversion."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import DomainError
from .groups import Group
from .nearfact import NearFactorization


@dataclass(frozen=True)
class GsedfInstance:
    """Candidate family A_1..A_m over an abelian group with target
    multiplicities lambda_1..lambda_m.  Pairwise disjointness is part of what
    verify_gsedf checks, so overlapping candidates are representable."""

    group: Group
    sets: tuple[tuple[int, ...], ...]
    lambdas: tuple[int, ...]

    def __post_init__(self):
        if not self.group.abelian:
            raise DomainError("GSEDF instances are defined over abelian groups")
        norm = tuple(
            tuple(sorted(set(self.group.check_code(c) for c in s))) for s in self.sets
        )
        object.__setattr__(self, "sets", norm)
        object.__setattr__(self, "lambdas", tuple(int(x) for x in self.lambdas))
        if len(self.lambdas) != len(self.sets):
            raise DomainError("one lambda per set required")

    @property
    def ells(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.sets)

    @property
    def disjoint(self) -> bool:
        seen: set[int] = set()
        for s in self.sets:
            if seen.intersection(s):
                return False
            seen.update(s)
        return True


def external_differences(group: Group, B, A) -> Counter:
    """The multiset D(B, A) = {y - x : y in B, x in A}."""
    if not group.abelian:
        raise DomainError("external differences are defined over abelian groups")
    mt = group.mul_table
    inv = group.inv_table
    return Counter(mt[y][inv[x]] for y in B for x in A)


def verify_gsedf(inst: GsedfInstance) -> bool:
    """For each i the pooled differences D(A_i, A_j), j != i, must cover every
    nonzero element exactly lambda_i times and never hit zero."""
    if not inst.disjoint:
        return False
    g = inst.group
    for i, lam in enumerate(inst.lambdas):
        pooled: Counter = Counter()
        for j, other in enumerate(inst.sets):
            if j != i:
                pooled += external_differences(g, inst.sets[i], other)
        if pooled[g.identity] != 0:
            return False
        if any(pooled[x] != lam for x in range(1, g.order)):
            return False
    return True


def nf_to_gsedf(nf: NearFactorization) -> GsedfInstance:
    """(A, B) -> the two-set instance (-A, B) with lambdas (1, 1)."""
    g = nf.group
    if not g.abelian:
        raise DomainError("conversion is defined over abelian groups")
    inv = g.inv_table
    neg_a = tuple(inv[a] for a in nf.A)
    return GsedfInstance(g, (neg_a, nf.B), (1, 1))


def gsedf_to_nf(inst: GsedfInstance) -> NearFactorization:
    """Two-set lambda=1 instance (A1, A2) -> the near-factorization (-A1, A2)."""
    if len(inst.sets) != 2 or inst.lambdas != (1, 1):
        raise DomainError("only two-set instances with lambdas (1, 1) convert")
    inv = inst.group.inv_table
    return NearFactorization(
        inst.group, tuple(inv[x] for x in inst.sets[0]), inst.sets[1]
    )


def trivial_sedf(group: Group) -> GsedfInstance:
    """All singletons: the (n, n, 1, 1)-SEDF."""
    n = group.order
    return GsedfInstance(group, tuple((x,) for x in range(n)), (1,) * n)
