"""Transversal polymatroids of a cyclic family: cones, Hilbert series, Gorensteinness."""

__version__ = "0.1.0"

from .cone import (
    ConeDescription,
    Halfspace,
    dd_hull,
    det_certificate,
    export_normaliz,
    membership,
    predicted_extremal_rays,
    predicted_facets,
    sigma_normal,
    verify_irreducible,
)
from .ehrhart import binom, count_points_bruteforce, hilbert_closed_form, lattice_of
from .errors import (
    DomainError,
    ParameterError,
    PreconditionError,
    ResourceLimitError,
    TranspolyError,
)
from .gorenstein import (
    gorenstein_certificate,
    interior_points,
    monoid_points,
    verify_shift_identity,
)
from .hilbert import HilbertReport, a_invariant, difference_transform, h_vector, series_eval_check
from .presentation import (
    BaseSet,
    Presentation,
    build_presentation,
    cycle_apply,
    enumerate_base,
    is_polymatroid_base,
)
