"""
Closed-form shapes
==================

Real 2x2 matrices give a segment, a disk of pure quaternions, a quaternion
ball or a four-dimensional ellipsoid.  Upper triangular 3x3 matrices with a
constant real diagonal and x y z = 0 give a ball.  Two-block matrices get a
numerically computed ellipse with a convexity certificate.
"""

import numpy as np

from quatrange.complex_nr import boundary
from quatrange.quat_nr import sample
from quatrange.region import hausdorff
from quatrange.shapes import classify

cases = {
    "diag(1, 3)": np.diag([1.0, 3.0]),
    "rotation": np.array([[0.0, -1.0], [1.0, 0.0]]),
    "Jordan block": np.array([[0.0, 1.0], [0.0, 0.0]]),
    "[[0, 1], [-2, 0]]": np.array([[0.0, 1.0], [-2.0, 0.0]]),
    "3x3 with (2, 0, 3, 4)": np.array([[2.0, 0.0, 3.0], [0.0, 2.0, 4.0], [0.0, 0.0, 2.0]]),
}
for name, a in cases.items():
    shape = classify(a)
    # the predicted slice with C agrees with the sweep, and samples obey the predicted inequality
    gap = hausdorff(shape.complex_region(), boundary(a).region)
    inside = shape.contains_array(sample(a, 20_000, seed=0).points, 1e-6).mean()
    print(f"{name:24s} {shape}\n{'':24s} slice vs sweep {gap:.1e}, samples inside {inside:.0%}")

# %% Block matrices: the certificate is reported with the computed region.
for a in (np.array([[1j, 1], [1, -1j]]), np.array([[1 + 1j, 1], [0, 1 + 1j]])):
    shape = classify(a)
    print(shape.tag, shape.region, shape.certificate.value)
