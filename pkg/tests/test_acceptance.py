"""Acceptance criteria.  Each test prints one PASS/FAIL line; run with ``-s`` to see them."""

import time

import numpy as np

from quatrange.complex_nr import Certificate, boundary, certify_convexity, chi_boundary, nr_of_chi, transpose_invariance_check
from quatrange.matrix import hermitian_eigs
from quatrange.oracle import check_real_bild, check_remark_disk
from quatrange.quat_nr import sample
from quatrange.quaternion import qabs
from quatrange.region import disk_polygon, hausdorff
from quatrange.shapes import PureDisk, QuaternionDisk, Segment, classify, classify_2x2_real


def verdict(number: int, title: str, ok: bool, detail: str, runtime: float, limit: float) -> bool:
    ok = ok and runtime < limit
    status = "PASS" if ok else "FAIL"
    print(f"\n[{status}] criterion {number}: {title}: {detail}; runtime {runtime:.1f} s (limit {limit:g} s)")
    return ok


def random_complex(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def test_criterion_1_remark_disk():
    t0 = time.perf_counter()
    r = check_remark_disk(count=100_000, seed=1)
    checks = {c.name: c for c in r.checks}
    cert = certify_convexity(np.diag([1j, 2j]))
    ok = r.passed and cert is Certificate.NOT_CERTIFIED
    detail = (
        f"max|Re w| {checks['real_part'].value:.2e}, max|w|-2 {checks['modulus_excess'].value:.2e}, "
        f"2 - best|w| {checks['modulus_attainment'].value:.2e}, witnesses {checks['witnesses'].value:.1e}, "
        f"certificate {cert.value}"
    )
    assert verdict(1, "diag(i, 2i) range is the pure ball of radius 2", ok, detail, time.perf_counter() - t0, 10)


def test_criterion_2_chi_identity():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2)
    worst = 0.0
    for k in range(50):
        a = random_complex(rng, (2, 3, 4)[k % 3])
        direct = chi_boundary(a, 720).region
        via_hull = nr_of_chi(a, 720).region
        ratio = hausdorff(direct, via_hull) / (1e-5 * (1.0 + via_hull.diameter()))
        worst = max(worst, ratio)
    ok = worst <= 1.0
    detail = f"worst Hausdorff / (1e-5 (1 + diameter)) = {worst:.3g} over 50 matrices"
    assert verdict(2, "W_C(chi(A)) is the hull of W_C(A) and its mirror", ok, detail, time.perf_counter() - t0, 60)


def test_criterion_3_real_bild():
    t0 = time.perf_counter()
    rng = np.random.default_rng(3)
    worst_in, worst_gap, fails = 0.0, 0.0, 0
    for k in range(50):
        a = rng.standard_normal((2 + k % 4, 2 + k % 4))
        r = check_real_bild(a, m=720, count=10_000, seed=300 + k, tol=1e-6, coverage=1e-2)
        worst_in = max(worst_in, r.checks[0].value)
        worst_gap = max(worst_gap, r.checks[1].value)
        fails += not r.passed
    ok = fails == 0
    detail = f"max containment distance {worst_in:.2e} (<= 1e-6), max vertex gap {worst_gap:.2e} (<= 1e-2), {fails} failures"
    assert verdict(3, "classes of W_H(A) are those of W_C(A), real A", ok, detail, time.perf_counter() - t0, 120)


def test_criterion_4_two_by_two():
    t0 = time.perf_counter()
    rng = np.random.default_rng(4)
    worst = 0.0
    for _ in range(200):
        a = rng.standard_normal((2, 2))
        worst = max(worst, hausdorff(classify_2x2_real(a).complex_region(720), boundary(a, 720).region))
    s = classify_2x2_real(np.diag([1.0, 3.0]))
    d = classify_2x2_real(np.array([[0.0, -1.0], [1.0, 0.0]]))
    q = classify_2x2_real(np.array([[0.0, 1.0], [0.0, 0.0]]))
    golden = (
        isinstance(s, Segment) and abs(s.lo - 1) <= 1e-9 and abs(s.hi - 3) <= 1e-9
        and isinstance(d, PureDisk) and abs(d.center) <= 1e-9 and abs(d.radius - 1) <= 1e-9
        and isinstance(q, QuaternionDisk) and abs(q.center) <= 1e-9 and abs(q.radius - 0.5) <= 1e-9
    )
    ok = worst <= 1e-4 and golden
    detail = f"worst Hausdorff {worst:.2e} over 200 matrices (<= 1e-4); goldens {'match' if golden else 'differ'}"
    assert verdict(4, "real 2x2 classification", ok, detail, time.perf_counter() - t0, 30)


def test_criterion_5_three_by_three_disk():
    t0 = time.perf_counter()
    a = np.array([[2.0, 0.0, 3.0], [0.0, 2.0, 4.0], [0.0, 0.0, 2.0]])
    shape = classify(a)
    exact = shape == QuaternionDisk(2.0, 2.5)
    region = boundary(a, 720).region
    radial = float(np.max(np.abs(np.abs(region.vertices - 2.0) - 2.5)))
    centre = abs(complex(np.mean(region.vertices)) - 2.0)
    dist = hausdorff(region, disk_polygon(2.0, 2.5, 1 << 16))
    pts = sample(a, 100_000, 5).points
    shifted = pts.copy()
    shifted[:, 0] -= 2.0
    excess = float(np.max(qabs(shifted))) - 2.5
    ok = exact and max(radial, centre, dist) <= 1e-5 and excess <= 1e-6
    detail = (
        f"classify -> {shape}; vertex radius error {radial:.1e}, centre error {centre:.1e}, "
        f"Hausdorff to circle {dist:.1e}; max |w-2| - 2.5 = {excess:.2e}"
    )
    assert verdict(5, "3x3 disk (p, x, y, z) = (2, 0, 3, 4)", ok, detail, time.perf_counter() - t0, 10)


def test_criterion_6_transpose_invariance():
    t0 = time.perf_counter()
    rng = np.random.default_rng(6)
    results = [transpose_invariance_check(random_complex(rng, 2 + k % 4), 720, 1e-5) for k in range(50)]
    ok = all(results)
    detail = f"{sum(results)}/50 matrices pass"
    assert verdict(6, "W_C(A) equals W_C(A^t)", ok, detail, time.perf_counter() - t0, 30)


def test_criterion_7_eigensolver():
    t0 = time.perf_counter()
    rng = np.random.default_rng(7)
    worst_res = worst_tr = worst_det = 0.0
    for k in range(500):
        n = 1 + k % 8
        g = random_complex(rng, n)
        h = (g + g.conj().T) / 2
        w, V = hermitian_eigs(h)
        norm = np.linalg.norm(h, 2)
        res = np.max(np.linalg.norm(h @ V - V * w, axis=0)) / norm
        worst_res = max(worst_res, res)
        worst_tr = max(worst_tr, abs(np.sum(w) - np.trace(h).real))
        worst_det = max(worst_det, abs(np.prod(w) - np.linalg.det(h).real))
    ok = worst_res <= 1e-10 and worst_tr <= 1e-8 and worst_det <= 1e-8
    detail = f"max residual/||H|| {worst_res:.1e}, trace error {worst_tr:.1e}, determinant error {worst_det:.1e}"
    assert verdict(7, "Jacobi eigensolver", ok, detail, time.perf_counter() - t0, 10)
