"""Bistellar moves, f-vector calculus and f-vector local formulas.

The top-level namespace re-exports the pieces most scripts need; the
submodules hold the rest.
"""

from .complex import (
    Simplex,
    SimplicialComplex,
    barycentric_subdivision,
    boundary,
    euler_characteristic,
    f_vector,
    from_facets,
    is_isomorphic,
    join,
    link,
    star,
)
from .corpus import builtin_complex
from .errors import PachnerError
from .fvector import (
    HSpectrum,
    LocalFormula,
    beta,
    c_matrix,
    derive_psi,
    ds_complete,
    ds_relations,
    euler_psi,
    f_delta,
    globalize,
    h_values,
    move_counts,
    proportionality,
    r_coeff,
    r_column,
)
from .gadget import GadgetCell, a_vector, gadget_2, implant_gadget, verify_gadget
from .harness import balance_check, evaluate_invariant, find_witness, invariance_report
from .moves import (
    BistellarMove,
    MoveLog,
    WalkConfig,
    apply_move,
    enumerate_moves,
    induced_link_moves,
    inverse_move,
    random_walk,
    replay,
)
from .recognition import Verdict, sphere_recognize, verify_closed_manifold

__version__ = "0.1.0"
