"""Exact intersection theory of the toric degeneration of Bott-Samelson-Demazure-Hansen varieties.

Everything is driven by a Cartan matrix and a word of simple reflections::

    >>> from bsdhtoric import named_root_system, make_word, mori_rays
    >>> w = make_word(named_root_system("A", 3), [1, 2, 3, 1, 2, 1])
    >>> mori_rays(w)
    [3, 5, 6]
"""

from .chow import CurveClass, expand, expand_coroot, expand_oracle, expand_repeated, schubert_line
from .enumeration import all_fixed_points, all_invariant_curves, curve_class_of, verify_report
from .errors import ArithmeticOverflow, BsdhError, ConsistencyError, ValidationError
from .extremal import ExtremalBasis, basis_subsequence, express_in_basis, extremal_basis
from .intersect import (
    DivisorClass,
    boundary_dot_schubert,
    bsdh_ample,
    canonical_class,
    canonical_dot_schubert,
    divisor_dot_curve,
    is_fano,
    is_mori_ray,
    lt_dot_schubert,
    lt_to_boundary,
    mori_rays,
    toric_ample,
)
from .rootsys import (
    Coroot,
    RootSystem,
    coroot_height,
    coroot_pairing,
    dual_reflect,
    iterated_coroot,
    named_root_system,
    pairing,
    validate_cartan,
)
from .word import Word, make_word, pos_pairing, truncate

__version__ = "0.1.0"
