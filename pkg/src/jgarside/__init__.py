"""Garside-structure toolkit for circular braid monoid presentations.

The package certifies Garside structures on the braid monoids attached to
the rank-two complex reflection groups G(e,e,2) and their relatives: it
builds the classical and dual presentations for a coprime parameter pair,
decides word problems by brute closure and by the syntactic complement,
verifies the Garside axioms, computes greedy normal forms and group
fractions, and checks the isomorphisms tying the families together.
"""

from .words import Presentation, validate_presentation
from .complement import (build_theta, check_C1, check_C2, check_cube_sharp,
                         theta_extend)
from .families import (BraidParams, PRESET_NAMES, SpecialWords, bezout,
                       build_presentation, inv_mod, preset_table,
                       special_words)
from .monoid import (BudgetExceeded, Budgets, CancellativityReport,
                     DivisorSet, ElementClass, Evidence, GarsideCertificate,
                     MonoidContext, cancellative_oracle,
                     check_C2_presentation, certify_family, family_context,
                     verify_garside)
from .groups import (Fraction, G33, G33Form, GroupContext, HomSpec,
                     SignedWord, apply_hom, check_hom, concat_signed,
                     fraction_of, g33_form, group_context, group_equal,
                     invert_signed, parse_signed, signed_of_word,
                     signed_power, signed_text)
from .isosuite import (SCENARIOS, NamedCheck, VerificationReport,
                       verify_dihedral_iso, verify_dual_iso, verify_g33_iso,
                       verify_swap_automorphism, verify_word_identities)
from .cli import RunConfig, export_dot, main

__all__ = [
    "Presentation", "validate_presentation",
    "build_theta", "theta_extend", "check_C1", "check_C2",
    "check_cube_sharp",
    "BraidParams", "SpecialWords", "PRESET_NAMES", "bezout", "inv_mod",
    "build_presentation", "special_words", "preset_table",
    "Budgets", "BudgetExceeded", "MonoidContext", "ElementClass",
    "DivisorSet", "Evidence", "GarsideCertificate", "CancellativityReport",
    "cancellative_oracle", "verify_garside", "family_context",
    "certify_family", "check_C2_presentation",
    "SignedWord", "Fraction", "GroupContext", "group_context",
    "fraction_of", "group_equal", "parse_signed", "signed_text",
    "signed_of_word", "invert_signed", "concat_signed", "signed_power",
    "G33", "G33Form", "g33_form", "HomSpec", "apply_hom", "check_hom",
    "NamedCheck", "VerificationReport", "SCENARIOS", "verify_g33_iso",
    "verify_dihedral_iso", "verify_dual_iso", "verify_word_identities",
    "verify_swap_automorphism",
    "RunConfig", "export_dot", "main",
]

__version__ = "0.1.0"
