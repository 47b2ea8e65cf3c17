"""freeconj: conjugacy normal forms in split extensions of free groups.

The extension twists the free group by an automorphism some power of which
is conjugation by a witness word (or, in the countably generated mode, by
the index shift).  Each conjugacy class gets a unique computable
representative; comparing representatives decides conjugacy, and every
positive answer ships a replayable conjugator.
"""

from .automorphisms import (
    Automorphism,
    ContextError,
    VIContext,
    context_from_dict,
    context_to_dict,
    find_inner_witness,
    generator,
    identity_context,
    inner_context,
    load_context,
    make_context,
    power_apply,
    verify_vi,
)
from .backend import backend_name, use_backend
from .delta import (
    delta_length_profile,
    delta_orbit,
    delta_reduce,
    delta_scan,
    greedy_delta_reduce,
    is_delta_reduced,
)
from .extension import (
    ConjugacyCertificate,
    ExtElement,
    element,
    ext_conjugate,
    ext_inv,
    ext_mul,
    format_element,
    parse_element,
    verify_certificate,
)
from .finite_action import (
    FiniteActionContext,
    FMElement,
    fm_are_conjugate,
    fm_conjugate,
    fm_inv,
    fm_mul,
    normal_form_finite_M,
)
from .normal_form import (
    are_conjugate,
    build_D,
    build_D0,
    build_Dbar,
    cyclic_psi_shift,
    cyclically_psi_reduce,
    dbar_certificates,
    is_cyclically_psi_reduced,
    normal_form,
    normal_form_details,
)
from .oracle import (
    brute_force_conjugacy,
    brute_force_conjugacy_finite,
    reduced_words,
)
from .presets import artin, artin_even, artin_odd
from .shift import (
    ShiftElement,
    cyclically_shift_reduce,
    format_shift_element,
    parse_shift_element,
    shift,
    shift_are_conjugate,
    shift_conjugate,
    shift_inv,
    shift_mul,
    shift_normal_form,
    tau,
    verify_shift_certificate,
)
from .words import (
    EMPTY,
    Letter,
    ParseError,
    Word,
    cyclically_reduce,
    format_word,
    free_reduce,
    parse_word,
    shortlex_compare,
    word,
)

__version__ = "0.1.0"
