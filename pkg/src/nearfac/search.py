"""Exhaustive enumeration of (k, l)-near-factorizations up to equivalence.

The search fixes the identity inside A (any pair translates to such a pair),
runs over candidate A sets in ascending code order, and extends B by exact
cover: every candidate b must place A*b inside the uncovered part of
G \\ {e}, tracked as bitmasks.  Solutions are deduplicated by canonical form.

Restrictions search over involution-closed "atoms" instead of single
elements: inversion orbits for `symmetric`, exponent-negation orbits for
`strongly-symmetric` (dihedral only); for even cyclic groups with k, l odd
the two self-paired elements are forced (0 into A, n into B), which every
class allows after translating by n.

When k > l the search runs on the mirrored shape and maps the classes back
through the involution (A, B) -> (B^-1, A^-1), which carries equivalent pairs
to equivalent pairs.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, replace

from .errors import CapabilityError, DomainError
from .groups import CyclicGroup, DihedralGroup, Group
from .nearfact import (
    NearFactorization,
    canonical_form,
    invert_pair,
    strong_involution,
    verify,
)
from .records import nf_from_record, nf_to_record

RESTRICTS = ("all", "symmetric", "strongly-symmetric")


@dataclass(frozen=True)
class SearchSpec:
    group: Group
    k: int
    ell: int
    restrict: str = "all"
    node_budget: int = 10**8
    time_budget: float = 600.0

    def __post_init__(self):
        if self.k < 1 or self.ell < 1 or self.k * self.ell != self.group.order - 1:
            raise DomainError(
                f"need k*l = |G|-1; got {self.k}*{self.ell} for {self.group.name}"
            )
        if self.restrict not in RESTRICTS:
            raise DomainError(f"unknown restriction {self.restrict!r}")
        if self.restrict == "strongly-symmetric" and not isinstance(
            self.group, DihedralGroup
        ):
            raise DomainError("strongly-symmetric search needs a dihedral group")


@dataclass(frozen=True)
class EnumerationResult:
    spec: SearchSpec
    classes: tuple[NearFactorization, ...]
    samples: tuple[NearFactorization, ...]  # first found member per class
    nodes_explored: int
    wall_time: float
    complete: bool


def _atoms_for(group: Group, restrict: str) -> list[tuple[int, ...]]:
    if restrict == "all":
        return [(c,) for c in range(group.order)]
    if restrict == "symmetric":
        invol = group.inv_table
    else:
        invol = tuple(strong_involution(group, c) for c in range(group.order))
    atoms = {tuple(sorted({c, invol[c]})) for c in range(group.order)}
    return sorted(atoms)


class _Budget:
    __slots__ = ("nodes", "node_limit", "deadline", "blown")

    def __init__(self, node_limit: int, seconds: float):
        self.nodes = 0
        self.node_limit = node_limit
        self.deadline = time.monotonic() + seconds
        self.blown = False

    def tick(self) -> bool:
        self.nodes += 1
        if self.nodes >= self.node_limit:
            self.blown = True
        elif self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            self.blown = True
        return self.blown


class _Searcher:
    def __init__(self, spec: SearchSpec):
        self.spec = spec
        g = spec.group
        self.g = g
        self.mt = g.mul_table
        self.inv = g.inv_table
        self.full = (1 << g.order) - 1
        self.atoms = _atoms_for(g, spec.restrict)
        self.atom_of = {}
        for idx, at in enumerate(self.atoms):
            for c in at:
                self.atom_of[c] = idx

        # forced self-paired atoms for even cyclic groups with odd sizes
        self.forced_a: tuple[int, ...] = ()
        self.precovered_b: tuple[int, ...] = ()
        if spec.restrict == "all":
            self.forced_a = (0,)
        elif (
            spec.restrict == "symmetric"
            and isinstance(g, CyclicGroup)
            and g.order % 2 == 0
            and spec.k % 2 == 1
            and spec.ell % 2 == 1
        ):
            self.forced_a = (0,)
            self.precovered_b = (g.order // 2,)

        # Aut-orbit minima: the first free atom of A may be pinned to codes
        # that are minimal in their orbit (automorphisms fix e, map atoms to
        # atoms, and preserve the restriction for these two cases)
        self.first_free_minima: set[int] | None = None
        if spec.restrict in ("all", "symmetric"):
            try:
                om = g.aut_orbit_min
                self.first_free_minima = {c for c in range(g.order) if om[c] == c}
            except CapabilityError:
                self.first_free_minima = None

        self.classes: dict[tuple, NearFactorization] = {}
        self.samples: dict[tuple, NearFactorization] = {}

    # -- A side -------------------------------------------------------------

    def _free_atom_indices(self) -> list[int]:
        used = set(self.forced_a) | set(self.precovered_b)
        return [
            i for i, at in enumerate(self.atoms) if not used.intersection(at)
        ]

    def first_branches(self) -> list[int]:
        """Top-level branch keys: the index of the first non-forced atom of A
        (-1 when the forced part already fills A)."""
        need = self.spec.k - len(self.forced_a)
        if need == 0:
            return [-1]
        out = []
        for i in self._free_atom_indices():
            if len(self.atoms[i]) <= need:
                if (
                    self.first_free_minima is not None
                    and min(self.atoms[i]) not in self.first_free_minima
                ):
                    continue
                out.append(i)
        return out

    def run_branch(self, branch: int, budget: _Budget):
        need = self.spec.k - len(self.forced_a)
        if branch == -1:
            if need == 0:
                self._finish_a(list(self.forced_a), budget)
            return
        at = self.atoms[branch]
        free = [i for i in self._free_atom_indices() if i > branch]
        self._extend_a(list(self.forced_a) + list(at), free, need - len(at), budget)

    def _extend_a(self, acc: list[int], free: list[int], need: int, budget: _Budget):
        if budget.tick():
            return
        if need == 0:
            self._finish_a(acc, budget)
            return
        for pos, i in enumerate(free):
            at = self.atoms[i]
            if len(at) <= need:
                self._extend_a(acc + list(at), free[pos + 1 :], need - len(at), budget)
            if budget.blown:
                return

    # -- B side (exact cover) -------------------------------------------------

    def _atom_mask(self, A: list[int], atom: tuple[int, ...]) -> int | None:
        """Bitmask of A*atom, or None if the products collide internally."""
        mask = 0
        size = 0
        mt = self.mt
        for b in atom:
            for a in A:
                mask |= 1 << mt[a][b]
                size += 1
        return mask if mask.bit_count() == size else None

    def _atom_masks_cyclic(self, A: list[int]) -> list[int | None]:
        """All atom masks at once: in Z_m the product set A+b is the bitmask
        of A rotated by b."""
        m = self.g.order
        full = self.full
        amask = 0
        for a in A:
            amask |= 1 << a
        rot = [0] * m
        for b in range(m):
            rot[b] = ((amask << b) | (amask >> (m - b))) & full
        out: list[int | None] = []
        expect = len(A)
        for atom in self.atoms:
            mask = 0
            for b in atom:
                mask |= rot[b]
            out.append(mask if mask.bit_count() == expect * len(atom) else None)
        return out

    def _finish_a(self, A: list[int], budget: _Budget):
        covered = 1  # identity may never be covered
        parts: list[tuple[int, ...]] = []
        if isinstance(self.g, CyclicGroup):
            masks = self._atom_masks_cyclic(A)
        else:
            masks = [False] * len(self.atoms)  # False = not yet computed
        for b in self.precovered_b:
            idx = self.atom_of[b]
            if masks[idx] is False:
                masks[idx] = self._atom_mask(A, self.atoms[idx])
            m = masks[idx]
            if m is None or m & covered:
                return
            covered |= m
            masks[idx] = None  # never reusable
            parts.append(self.atoms[idx])
        if isinstance(self.g, CyclicGroup):
            # exact cover is hopeless unless the usable atoms jointly reach
            # every uncovered element
            union = 0
            for m in masks:
                if m is not None and not m & covered:
                    union |= m
            if union | covered != self.full:
                return
        self._cover(A, covered, parts, masks, budget)

    def _cover(self, A: list[int], covered: int, parts: list, masks: list, budget: _Budget):
        if budget.tick():
            return
        if covered == self.full:
            self._emit(A, parts)
            return
        unc = ~covered & self.full
        target = (unc & -unc).bit_length() - 1  # lowest uncovered code
        inv = self.inv
        mt = self.mt
        tried = 0
        for a in A:
            b = mt[inv[a]][target]
            idx = self.atom_of[b]
            bit = 1 << idx
            if tried & bit:
                continue
            tried |= bit
            m = masks[idx]
            if m is False:
                m = masks[idx] = self._atom_mask(A, self.atoms[idx])
            if m is None or m & covered:
                continue
            parts.append(self.atoms[idx])
            self._cover(A, covered | m, parts, masks, budget)
            parts.pop()
            if budget.blown:
                return

    def _emit(self, A: list[int], parts: list):
        B = tuple(sorted(c for at in parts for c in at))
        if len(B) != self.spec.ell:
            return
        nf = NearFactorization(self.g, tuple(A), B)
        cf = canonical_form(nf)
        key = cf.key()
        if key not in self.classes:
            self.classes[key] = cf
            self.samples[key] = nf


def _merge(
    spec: SearchSpec,
    pieces: list[tuple[int, dict, dict]],
) -> tuple[tuple[NearFactorization, ...], tuple[NearFactorization, ...]]:
    classes: dict[tuple, NearFactorization] = {}
    samples: dict[tuple, NearFactorization] = {}
    for _, cls, smp in sorted(pieces, key=lambda p: p[0]):
        for key, cf in cls.items():
            if key not in classes:
                classes[key] = cf
                samples[key] = smp[key]
    order = sorted(classes)
    return (
        tuple(classes[k] for k in order),
        tuple(samples[k] for k in order),
    )


def _run_branch(spec: SearchSpec, branch: int, budget: _Budget) -> tuple[dict, dict]:
    searcher = _Searcher(spec)
    searcher.run_branch(branch, budget)
    return searcher.classes, searcher.samples


def _branch_worker(args) -> tuple[int, list, list, int, bool]:
    """Pool entry point: per-branch node/time budgets (approximate split)."""
    gname, k, ell, restrict, node_budget, time_budget, branch = args
    from .groups import group_from_name

    spec = SearchSpec(group_from_name(gname), k, ell, restrict, node_budget, time_budget)
    budget = _Budget(node_budget, time_budget)
    cls, smp = _run_branch(spec, branch, budget)
    return (
        branch,
        [nf_to_record(v) for v in cls.values()],
        [nf_to_record(v) for v in smp.values()],
        budget.nodes,
        budget.blown,
    )


def _load_checkpoint(path: str) -> tuple[dict, int]:
    done: dict[int, tuple[dict, dict]] = {}
    nodes = 0
    try:
        with open(path) as fh:
            for line in fh:
                rec = json.loads(line)
                cls = {}
                smp = {}
                for cr, sr in zip(rec["classes"], rec["samples"]):
                    cf = nf_from_record(cr)
                    cls[cf.key()] = cf
                    smp[cf.key()] = nf_from_record(sr)
                done[rec["branch"]] = (cls, smp)
                nodes += rec["nodes"]
    except FileNotFoundError:
        pass
    return done, nodes


def enumerate_nfs(
    spec: SearchSpec, workers: int = 1, checkpoint: str | None = None
) -> EnumerationResult:
    """All equivalence classes of (k, l)-near-factorizations matching the
    restriction.  Deterministic: classes are sorted canonical forms."""
    t0 = time.monotonic()
    if spec.k > spec.ell:
        mirrored = replace(spec, k=spec.ell, ell=spec.k)
        res = enumerate_nfs(mirrored, workers=workers, checkpoint=checkpoint)
        pairs = sorted(
            ((canonical_form(invert_pair(c)), invert_pair(s)) for c, s in zip(res.classes, res.samples)),
            key=lambda p: p[0].key(),
        )
        return EnumerationResult(
            spec,
            tuple(p[0] for p in pairs),
            tuple(p[1] for p in pairs),
            res.nodes_explored,
            time.monotonic() - t0,
            res.complete,
        )

    branches = _Searcher(spec).first_branches()
    done: dict[int, tuple[dict, dict]] = {}
    nodes_total = 0
    if checkpoint:
        done, nodes_total = _load_checkpoint(checkpoint)

    todo = [b for b in branches if b not in done]
    complete = True
    results: list[tuple[int, dict, dict]] = []
    ck = open(checkpoint, "a") if checkpoint else None
    try:
        if workers > 1 and len(todo) > 1:
            jobs = [
                (
                    spec.group.name,
                    spec.k,
                    spec.ell,
                    spec.restrict,
                    spec.node_budget,
                    spec.time_budget,
                    b,
                )
                for b in todo
            ]
            with multiprocessing.get_context("fork").Pool(workers) as pool:
                for branch, cls_recs, smp_recs, nodes, blown in pool.map(
                    _branch_worker, jobs
                ):
                    nodes_total += nodes
                    complete = complete and not blown
                    cls = {}
                    smp = {}
                    for cr, sr in zip(cls_recs, smp_recs):
                        cf = nf_from_record(cr)
                        cls[cf.key()] = cf
                        smp[cf.key()] = nf_from_record(sr)
                    results.append((branch, cls, smp))
                    if ck and not blown:
                        ck.write(
                            json.dumps(
                                {
                                    "branch": branch,
                                    "classes": cls_recs,
                                    "samples": smp_recs,
                                    "nodes": nodes,
                                }
                            )
                            + "\n"
                        )
        else:
            budget = _Budget(spec.node_budget, spec.time_budget)
            for branch in todo:
                before = budget.nodes
                cls, smp = _run_branch(spec, branch, budget)
                nodes_total += budget.nodes - before
                if budget.blown:
                    complete = False
                    break
                results.append((branch, cls, smp))
                if ck:
                    ck.write(
                        json.dumps(
                            {
                                "branch": branch,
                                "classes": [nf_to_record(v) for v in cls.values()],
                                "samples": [nf_to_record(v) for v in smp.values()],
                                "nodes": budget.nodes - before,
                            }
                        )
                        + "\n"
                    )
    finally:
        if ck:
            ck.close()
    for branch, (cls, smp) in done.items():
        results.append((branch, cls, smp))

    classes, samples = _merge(spec, results)
    for cf in classes:
        if not verify(cf).is_nf:
            raise DomainError("enumeration produced a non-verifying class")
    return EnumerationResult(
        spec, classes, samples, nodes_total, time.monotonic() - t0, complete
    )


@dataclass(frozen=True)
class EquivClass:
    canonical: NearFactorization
    members: tuple[int, ...]


def classify_given(nfs) -> tuple[EquivClass, ...]:
    """Partition verified near-factorizations (same group, same shape) into
    equivalence classes keyed by canonical form."""
    nfs = list(nfs)
    if not nfs:
        return ()
    g = nfs[0].group
    shape = (nfs[0].k, nfs[0].ell)
    buckets: dict[tuple, list[int]] = {}
    reps: dict[tuple, NearFactorization] = {}
    for i, nf in enumerate(nfs):
        if nf.group != g:
            raise DomainError("classification needs a single group")
        if (nf.k, nf.ell) != shape:
            raise DomainError("classification needs a single (k, l) shape")
        if not verify(nf).is_nf:
            raise DomainError(f"input {i} is not a near-factorization")
        cf = canonical_form(nf)
        buckets.setdefault(cf.key(), []).append(i)
        reps[cf.key()] = cf
    return tuple(
        EquivClass(reps[key], tuple(buckets[key])) for key in sorted(buckets)
    )
