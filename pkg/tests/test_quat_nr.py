import numpy as np
import pytest

from quatrange.complex_nr import nr_of_chi
from quatrange.matrix import FieldError, QMatrix
from quatrange.quat_nr import bild_real, member_real, sample, sampled_distance, upper_bild_points
from quatrange.quaternion import Quaternion, canonical_reps
from quatrange.region import Kind, contains, hull

ROT = np.array([[0.0, -1.0], [1.0, 0.0]])
JORDAN = np.array([[0.0, 1.0], [0.0, 0.0]])


def test_bild_real_examples():
    seg = bild_real(np.diag([1.0, 3.0])).region
    assert seg.kind is Kind.SEGMENT and np.allclose(sorted(seg.vertices.real), [1, 3])
    rot = bild_real(ROT).region
    assert rot.kind is Kind.SEGMENT and np.allclose(sorted(rot.vertices.imag), [-1, 1])
    disk = bild_real(JORDAN).region
    assert np.allclose(np.abs(disk.vertices), 0.5, atol=1e-6)


def test_bild_real_rejects_complex():
    with pytest.raises(FieldError, match="sampled containment"):
        bild_real(np.diag([1j, 2j]))


def test_member_real_examples():
    s = 1 / np.sqrt(2)
    assert member_real(ROT, Quaternion(0, s, s))
    assert not member_real(ROT, 0.5)
    assert not member_real(ROT, Quaternion(0, 2))
    with pytest.raises(FieldError):
        member_real(QMatrix([["j", 0], [0, 1]]), 0)


def test_upper_bild_examples():
    cloud = sample(np.diag([1j, 2j]), 5000, 3)
    pts = upper_bild_points(cloud)
    assert np.all(pts.imag >= 0)
    assert np.all(contains(hull([0, 2j]), pts, 1e-9))
    assert np.allclose(upper_bild_points(sample(np.eye(3), 100, 0)), 1)


def test_sample_deterministic_and_workers():
    A = np.array([[1.0, 2.0], [0.5, -1.0]])
    a, b = sample(A, 1000, 9), sample(A, 1000, 9)
    assert np.array_equal(a.points, b.points)
    par = sample(A, 1000, 9, workers=3)
    assert par.count == 1000 and par.workers == 3
    assert np.array_equal(par.points, sample(A, 1000, 9, workers=3).points)
    # worker w draws from seed + w
    first = sample(A, 334, 9)
    assert np.array_equal(par.points[:334], first.points)
    with pytest.raises(ValueError):
        sample(A, 0, 1)


def test_real_samples_inside_bild(rng):
    for n in (2, 3, 4):
        A = rng.standard_normal((n, n))
        R = bild_real(A).region
        reps = upper_bild_points(sample(A, 5000, n))
        assert np.max(R.distance(reps)) <= 1e-6
        assert member_real(A, Quaternion.from_array(sample(A, 1, 0).points[0]), tol=1e-6)


def test_complex_samples_inside_chi_region(rng):
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    R = nr_of_chi(a).region
    pts = sample(a, 5000, 1).points
    assert np.max(R.distance(canonical_reps(pts))) <= 1e-6
    assert np.max(R.distance(pts[:, 0] + 1j * pts[:, 1])) <= 1e-6


def test_upper_bild_hull_is_convex_fill(rng):
    # the hull of the sampled upper bild adds little area over the cloud itself
    A = rng.standard_normal((3, 3))
    reps = upper_bild_points(sample(A, 100_000, 5))
    H = hull(reps)
    R = bild_real(A).region
    upper = hull(np.concatenate([R.vertices[R.vertices.imag >= 0], R.vertices.real + 0j]))
    assert H.area() <= upper.area() * 1.01


def test_sampled_distance():
    cloud = sample(JORDAN, 2000, 0)
    assert sampled_distance(cloud, Quaternion(0.1, 0, 0.1)) < 0.05
    assert sampled_distance(cloud, 3) > 2.4
