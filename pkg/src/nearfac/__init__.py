"""Near-factorizations of finite groups: verification, constructions,
canonical forms, the cyclic-to-dihedral transform, and exhaustive
enumeration."""

from .errors import (
    BudgetExhausted,
    CapabilityError,
    DomainError,
    InvariantViolation,
    NearfacError,
)
from .groups import (
    Automorphism,
    CyclicGroup,
    DihedralGroup,
    DirectD5C5,
    DirectZ2Z,
    Group,
    SemidirectC5sqC2,
    aut_inverse,
    compose,
    cyclic,
    dihedral,
    group_from_name,
)
from .nearfact import (
    EquivalenceMap,
    EquivalenceWitness,
    NearFactorization,
    RotationProfile,
    VerificationReport,
    apply_map,
    are_equivalent,
    canonical_form,
    compose_maps,
    identity_map,
    invert_map,
    invert_pair,
    is_strongly_symmetric,
    is_symmetric,
    rotation_profile,
    symmetrizing_translate,
    translate,
    verify,
)
from .constructions import (
    bacso_nf,
    blowup_nf,
    blowup_sedf,
    decaen_bacso_witness,
    decaen_nf,
    has_wraparound_ap,
    trivial_nf,
)
from .sedf import (
    GsedfInstance,
    external_differences,
    gsedf_to_nf,
    nf_to_gsedf,
    trivial_sedf,
    verify_gsedf,
)
from .pecher import (
    GcdConditions,
    PecherContext,
    TransportedWitness,
    check_gcd_conditions,
    equivalence_transport_forward,
    equivalence_transport_inverse,
    pecher_forward,
    pecher_inverse,
)
from .graphs import (
    CriticalReport,
    NfGraph,
    build_p_graph,
    clique_number,
    critical_report,
    graphs_isomorphic,
    independence_number,
    is_alternating,
    verify_vertex_map,
)
from .search import (
    EnumerationResult,
    EquivClass,
    SearchSpec,
    classify_given,
    enumerate_nfs,
)
from .records import nf_from_json, nf_from_record, nf_to_json, nf_to_record

__version__ = "0.1.0"
