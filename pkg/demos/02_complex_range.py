"""
The complex numerical range by a support sweep
==============================================

For each direction t the largest eigenvalue of (e^{-it}A + e^{it}A*)/2 is
how far W_C(A) reaches in that direction, and its eigenvector gives a
boundary point.  The support lines of neighbouring directions bound the
error of the inscribed polygon.
"""

import numpy as np

from quatrange.complex_nr import boundary, chi_boundary, nr_of_chi
from quatrange.region import hausdorff

# %% The Jordan block has a disk of radius 1/2 as its range.
jordan = np.array([[0.0, 1.0], [0.0, 0.0]])
plain = boundary(jordan, 720, max_error=0)
print("720 directions:", plain.region, "error bound", plain.max_support_error)

# %% By default arcs are bisected until the bound is tiny.
refined = boundary(jordan, 720)
print("refined:", refined.region, "error bound", refined.max_support_error)
print("vertex radii between", np.abs(refined.region.vertices).min(), "and", np.abs(refined.region.vertices).max())

# %% The 2n x 2n complex form chi(A) of a complex A has the hull of W_C(A) and its mirror as range.
rng = np.random.default_rng(1)
a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
via_hull = nr_of_chi(a)
direct = chi_boundary(a)
print("Hausdorff(hull of mirror images, sweep of chi(A)) =", hausdorff(via_hull.region, direct.region))
