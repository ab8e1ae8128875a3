"""Braids, grid diagrams and petal permutations for torus knots T(r, r+2)."""

from .braid import (
    BraidWord,
    CanonicalBraid,
    PermutationBraid,
    alexander_from_braid,
    beta,
    braid_to_pd,
    braids_equal,
    burau_reduced,
    concat,
    conjugate,
    conjugator_c,
    free_reduce,
    half_twist_word,
    inverse,
    is_knot_closure,
    tau_shift,
    tau_word,
    to_canonical,
    underlying_permutation,
    verify_lemma,
)
from .errors import CrossingCapExceeded, InexactDivisionError, NotAKnotError, PetalKitError
from .grid import (
    GridDiagram,
    alexander_from_grid,
    cyclic_col_shift,
    cyclic_row_shift,
    grid_to_pd,
    grid_valid,
    is_petal_form,
    minimal_torus_grid,
)
from .invariants import (
    alexander_from_pd,
    jones,
    kauffman_bracket,
    normalize_alexander,
    torus_alexander,
    torus_jones,
)
from .laurent import LaurentPoly
from .pd import PDCode
from .petal import (
    PetalPermutation,
    arc_index_torus,
    petal_lower_bound,
    petal_to_grid,
    read_petal_permutation,
    theorem_check,
    torus_petal_permutation,
)

__version__ = "0.1.0"
