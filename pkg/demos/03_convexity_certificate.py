"""
Certifying convexity of the quaternionic range
==============================================

For complex A, if the shadow of W_C(A) on the real line equals its
intersection with the real line, the quaternionic range W_H(A) is convex.
The converse fails, and the underlying planar statement about a convex set
and its mirror image also fails; both are shown below.
"""

import numpy as np

from quatrange.complex_nr import boundary, certify_convexity
from quatrange.oracle import check_certificate_soundness, check_remark_disk
from quatrange.region import conjugate, contains, real_axis_section, real_projection, union_hull

# %% diag(i, 2i): W_C is the segment [i, 2i], far from the real axis.
diag = np.diag([1j, 2j])
R = boundary(diag).region
print("projection", real_projection(R), "section", real_axis_section(R, 1e-7))
print("certificate:", certify_convexity(diag).value)

# %% Yet W_H(diag(i, 2i)) is the ball of pure quaternions of radius 2, which is convex.
report = check_remark_disk(count=50_000, seed=0)
for check in report.checks:
    print(f"  {check.name:20s} {check.value:.3g} <= {check.bound:g}")

# %% A parallelogram range: projection [-1, 0] equals the section, so it is certified.
para = np.diag([-1 - 1j, 0, 1j, -1])
P = boundary(para).region
print("certificate:", certify_convexity(para).value)

# %% The union with the mirror image is not convex: -0.5+0.9i sits in the hull only.
z = -0.5 + 0.9j
print("in P:", bool(contains(P, z, 1e-9)), " in mirror:", bool(contains(conjugate(P), z, 1e-9)),
      " in hull of both:", bool(contains(union_hull(P, conjugate(P)), z, 1e-9)))

# %% The certified conclusion still holds: sampled classes fill the hull of P and its mirror.
report = check_certificate_soundness([para], count=50_000, seed=0)
print("sampled check passed:", report.passed, [(c.name, f"{c.value:.2g}") for c in report.checks])
