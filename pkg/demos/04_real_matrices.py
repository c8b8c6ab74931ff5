"""
Real matrices: W_H(A) from W_C(A)
=================================

For a real matrix every value x*Ax over quaternionic unit vectors is similar
to a point of W_C(A), and every point of W_C(A) is attained.  Membership of a
quaternion is therefore a planar test on its class representative.
"""

import numpy as np

from quatrange.quat_nr import bild_real, member_real, sample, upper_bild_points
from quatrange.quaternion import Quaternion

rot = np.array([[0.0, -1.0], [1.0, 0.0]])
print("W_C of the rotation:", bild_real(rot).region.vertices)

# %% (i + j)/sqrt(2) has class representative i, on the segment [-i, i].
s = 1 / np.sqrt(2)
print("(i+j)/sqrt2 member:", member_real(rot, Quaternion(0, s, s)))
print("1/2 member:", member_real(rot, 0.5), "  2i member:", member_real(rot, Quaternion(0, 2)))

# %% Samples of a random real 4x4 matrix land inside W_C(A) after folding to the upper half-plane.
rng = np.random.default_rng(2)
a = rng.standard_normal((4, 4))
cloud = sample(a, 100_000, seed=2, workers=4)
reps = upper_bild_points(cloud)
region = bild_real(a).region
print("largest distance of a sampled class to W_C(A):", region.distance(reps).max())
