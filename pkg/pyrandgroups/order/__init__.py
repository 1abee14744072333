from .sign_vector import SignVector, all_sign_vectors, all_sign_pairs
from .positive import (
    uses_only_positive_letters,
    is_positive_witness,
    find_positive_relator,
    positive_witness_mask,
)
from .certificate import ObstructionCertificate, CERTIFIED_VERDICT, NO_CERTIFICATE_VERDICT
from .certifier import (
    CertificationOutcome,
    RouteComparison,
    DEFAULT_CERTIFY_MAX_N,
    find_accepted_relator,
    certify_obstruction,
    certify_via_languages,
    compare_routes,
)
from .associated import certify_associated

__all__ = [
    "SignVector",
    "all_sign_vectors",
    "all_sign_pairs",
    "uses_only_positive_letters",
    "is_positive_witness",
    "find_positive_relator",
    "positive_witness_mask",
    "ObstructionCertificate",
    "CERTIFIED_VERDICT",
    "NO_CERTIFICATE_VERDICT",
    "CertificationOutcome",
    "RouteComparison",
    "DEFAULT_CERTIFY_MAX_N",
    "find_accepted_relator",
    "certify_obstruction",
    "certify_via_languages",
    "compare_routes",
    "certify_associated",
]
