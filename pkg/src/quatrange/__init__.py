"""Complex and quaternionic numerical ranges of matrices."""

from .complex_nr import (
    Certificate,
    NRApprox,
    boundary,
    certify_convexity,
    chi_boundary,
    convex_by_real_entries,
    nr_of_chi,
    transpose_invariance_check,
)
from .matrix import FieldError, NormalizationError, QMatrix, chi, hermitian_eigs, quadratic_form
from .quat_nr import SampleCloud, bild_real, member_real, sample, upper_bild_points
from .quaternion import Quaternion, canonical_rep, parse_quaternion, project, similar
from .region import ConvexRegion, Kind, contains, hausdorff, hull
from .shapes import classify, classify_2x2_real, certify_block, disk_3x3

__version__ = "0.1.0"
