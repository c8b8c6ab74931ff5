"""
The sampling oracle
===================

Every identity is re-checked by brute force: values x*Ax at random unit
vectors must land in the predicted region, and the region's boundary must be
reached.  Uniform draws seldom come near the boundary of a high-dimensional
sphere, so the best draws seed a local search over the sphere.
"""

from quatrange.oracle import run_suite

for report in run_suite("all", seed=42, count=20_000):
    status = "PASS" if report.passed else "FAIL"
    print(f"{status} {report.claim:22s} {report.matrix[:50]}")
    for check in report.checks:
        print(f"     {check.name:20s} {check.value:.3g} <= {check.bound:g}")
    if report.notes:
        print("    ", report.notes)
