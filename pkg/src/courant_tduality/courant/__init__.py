"""
The H-twisted standard Courant algebroid, B-field transformations and
classical Courant algebroid isomorphisms.
"""

from .algebroid import TwistedCourant, derivation_D, dorfman, exactness_witness
from .axioms import AXIOMS, courant_axioms_check, sample_triples
from .bfield import (
    BFieldMap,
    bfield_apply,
    bfield_bracket_defect,
    bfield_defect_check,
    expected_defect,
    is_bracket_homomorphism,
)
from .isomorphism import CourantIso, iso_apply, iso_check, pushed_anchor
from .sections import GeneralizedSection, anchor, pairing, random_section, random_sections

__all__ = [
    "AXIOMS",
    "BFieldMap",
    "CourantIso",
    "GeneralizedSection",
    "TwistedCourant",
    "anchor",
    "bfield_apply",
    "bfield_bracket_defect",
    "bfield_defect_check",
    "courant_axioms_check",
    "derivation_D",
    "dorfman",
    "exactness_witness",
    "expected_defect",
    "is_bracket_homomorphism",
    "iso_apply",
    "iso_check",
    "pairing",
    "pushed_anchor",
    "random_section",
    "random_sections",
    "sample_triples",
]
