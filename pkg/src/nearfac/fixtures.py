"""Published near-factorization instances used as test fixtures and emitted
by the CLI seed-corpus flag.

The order-50 "pecher" pair for D5xC5 circulates with two transcription
defects: one element printed twice ("(ab, c^4)") and a stray symbol "r^4".
The copy here restores the intended elements "(b, c^4)" and "(b^4, c^4)";
the classification witness Phi_(identity, c->c^2) maps the restored pair
exactly onto D5XC5_PAIR_1, which is how the restoration was derived and how
the tests pin it down.
"""

from __future__ import annotations

from .groups import group_from_name
from .nearfact import EquivalenceMap, NearFactorization


def _nf(group_name: str, A, B) -> NearFactorization:
    g = group_from_name(group_name)
    conv = lambda xs: tuple(x if isinstance(x, int) else g.parse_element(x) for x in xs)
    return NearFactorization(g, conv(A), conv(B))


Z16_SYMMETRIC = _nf("Z:16", [0, 1, 15], [2, 5, 8, 11, 14])
Z16_IMAGE = _nf("Z:16", [2, 9, 11], [0, 1, 6, 11, 12])  # 7*A+2, 7*B-2

D8_PAIR = _nf("D:8", ["e", "b", "a"], ["b^2", "b^5", "ab", "ab^4", "ab^7"])

D32_DECAEN = _nf(
    "D:32",
    ["b", "b^2", "b^3", "a", "ab", "ab^2", "ab^3"],
    ["e", "b^7", "b^14", "b^21", "b^28", "ab^7", "ab^14", "ab^21", "ab^28"],
)
D32_BACSO = _nf(
    "D:32",
    ["a", "ab^31", "b^31", "ab^10", "b^10", "b^21", "ab^21"],
    ["e", "b^6", "ab^25", "ab^6", "b^25", "b^12", "ab^19", "ab^12", "b^19"],
)
D32_CANONICAL = _nf(
    "D:32",
    ["e", "b", "b^2", "b^3", "a", "ab", "ab^2"],
    ["b^4", "b^11", "b^18", "b^25", "ab^3", "ab^10", "ab^17", "ab^24", "ab^31"],
)

Z10_SYMMETRIC = _nf("Z:10", [0, 1, 9], [2, 5, 8])
D5_STRONGLY_SYMMETRIC = _nf("D:5", ["e", "ab", "ab^4"], ["b^2", "a", "b^3"])

D41_PAIR_1 = _nf(
    "D:41",
    ["e", "b^2", "b^4", "b^37", "b^39", "ab", "ab^3", "ab^38", "ab^40"],
    ["b^9", "b^14", "b^27", "b^32", "a", "ab^5", "ab^18", "ab^23", "ab^36"],
)
D41_PAIR_2 = _nf(
    "D:41",
    ["e", "b^8", "b^10", "b^31", "b^33", "ab", "ab^9", "ab^32", "ab^40"],
    ["b^3", "b^14", "b^27", "b^38", "a", "ab^11", "ab^17", "ab^24", "ab^30"],
)

# Z_190 pairs are printed as half-sets; the full sets are X' u (-X')
_Z190_HALVES = {
    1: ([0, 1, 2, 3, 4], [5, 14, 23, 32, 41, 50, 59, 68, 77, 86, 95]),
    2: ([0, 1, 8, 9, 10], [11, 14, 17, 38, 41, 44, 65, 68, 71, 92, 95]),
}


def _expand_half(half, m: int):
    return sorted({x % m for x in half} | {(-x) % m for x in half})


def z190_pair(i: int) -> NearFactorization:
    a_half, b_half = _Z190_HALVES[i]
    return _nf("Z:190", _expand_half(a_half, 190), _expand_half(b_half, 190))


Z190_PAIR_1 = z190_pair(1)
Z190_PAIR_2 = z190_pair(2)

D5XC5_PAIR_1 = _nf(
    "D5xC5",
    ["(e, e)", "(e, c)", "(b, c^3)", "(b^2, c^3)", "(a, e)", "(a, c)", "(ab, c^3)"],
    ["(b, c^2)", "(b^4, c)", "(b^4, c^3)", "(a, c^2)", "(ab^2, c^2)", "(ab^3, c)", "(ab^3, c^3)"],
)
D5XC5_PAIR_2 = _nf(
    "D5xC5",
    ["(e, e)", "(e, c)", "(b, c^3)", "(b^2, c^3)", "(a, e)", "(a, c)", "(ab^4, c^3)"],
    ["(b, c^2)", "(b^4, c)", "(b^4, c^3)", "(a, c^2)", "(ab^2, c)", "(ab^2, c^3)", "(ab^3, c^2)"],
)
# restored transcription; see module docstring
D5XC5_PECHER = _nf(
    "D5xC5",
    ["(e, e)", "(a, e)", "(e, c^3)", "(a, c^3)", "(ab, c^4)", "(b, c^4)", "(b^2, c^4)"],
    ["(a, c)", "(b, c)", "(ab^2, c)", "(ab^3, c^3)", "(b^4, c^3)", "(ab^3, c^4)", "(b^4, c^4)"],
)

C5SQC2_PAIR_1 = _nf(
    "C5sqC2",
    ["e", "c", "b", "b^2c^2", "a", "ac", "ab"],
    ["bc^4", "b^4c", "b^4c^4", "ac^3", "ab^2c^2", "ab^3", "ab^3c^3"],
)
C5SQC2_PAIR_2 = _nf(
    "C5sqC2",
    ["e", "c", "b", "b^2c^2", "a", "ac", "ab^4c"],
    ["bc^4", "b^4c", "b^4c^4", "ac^3", "ab^2c", "ab^2c^3", "ab^3c^4"],
)
C5SQC2_PECHER = _nf(
    "C5sqC2",
    ["e", "a", "b", "c", "ab^4", "ac^4", "b^2c^2"],
    ["ab^2", "ac^2", "ab^3c^3", "b^4c", "bc^4", "ab^2c^2", "b^4c^4"],
)


def d5xc5_pecher_witness() -> EquivalenceMap:
    """Phi_(g, e) with g = (identity, x -> x^2) maps the restored pecher pair
    onto D5XC5_PAIR_1."""
    g = group_from_name("D5xC5")
    return EquivalenceMap(g.aut(1, 0, 2), g.identity)


def c5sqc2_pecher_witness() -> EquivalenceMap:
    """Phi_(z, e) with z: a -> ac maps the pecher pair onto C5SQC2_PAIR_2."""
    g = group_from_name("C5sqC2")
    return EquivalenceMap(g.aut_generators["z"], g.identity)


CORPUS: dict[str, NearFactorization] = {
    "z16_symmetric": Z16_SYMMETRIC,
    "z16_image": Z16_IMAGE,
    "d8_pair": D8_PAIR,
    "d32_decaen": D32_DECAEN,
    "d32_bacso": D32_BACSO,
    "d32_canonical": D32_CANONICAL,
    "z10_symmetric": Z10_SYMMETRIC,
    "d5_strongly_symmetric": D5_STRONGLY_SYMMETRIC,
    "d41_pair_1": D41_PAIR_1,
    "d41_pair_2": D41_PAIR_2,
    "z190_pair_1": Z190_PAIR_1,
    "z190_pair_2": Z190_PAIR_2,
    "d5xc5_pair_1": D5XC5_PAIR_1,
    "d5xc5_pair_2": D5XC5_PAIR_2,
    "d5xc5_pecher": D5XC5_PECHER,
    "c5sqc2_pair_1": C5SQC2_PAIR_1,
    "c5sqc2_pair_2": C5SQC2_PAIR_2,
    "c5sqc2_pecher": C5SQC2_PECHER,
}
