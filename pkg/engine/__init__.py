from engine.config import ENGINE
from engine.certificate import (
    Certificate, Verdict, GOOD, NOT_GOOD, UNKNOWN,
    R_THEOREM0, R_THEOREM1, R_EX3, R_EX6, R_BETA, SCHEMA_VERSION,
)
from engine.relation import fundamental_relation_holds, triangle_inequality_filter, theta_from_distances
from engine.witness import (
    WitnessPoint, WitnessError, Candidate, construction_scalars,
    lemma2_witness, lemma2_witnesses, vertex_witness,
    lemma4_point, lemma4_candidates, placement_residual,
)
from engine.classify import classify, biquadratic_filters, kappa_target, match_triangle
from engine.verify import VerifyResult, verify_certificate
from engine.codec import CertificateFormatError, to_json, from_json, to_dict, from_dict

__all__ = [
    "ENGINE", "Certificate", "Verdict", "GOOD", "NOT_GOOD", "UNKNOWN",
    "R_THEOREM0", "R_THEOREM1", "R_EX3", "R_EX6", "R_BETA", "SCHEMA_VERSION",
    "fundamental_relation_holds", "triangle_inequality_filter", "theta_from_distances",
    "WitnessPoint", "WitnessError", "Candidate", "construction_scalars",
    "lemma2_witness", "lemma2_witnesses", "vertex_witness",
    "lemma4_point", "lemma4_candidates", "placement_residual",
    "classify", "biquadratic_filters", "kappa_target", "match_triangle",
    "VerifyResult", "verify_certificate",
    "CertificateFormatError", "to_json", "from_json", "to_dict", "from_dict",
]
