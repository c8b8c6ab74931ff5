import json

import numpy as np
import pytest

from quatrange.complex_nr import Certificate, boundary
from quatrange.quat_nr import sample
from quatrange.quaternion import Quaternion
from quatrange.region import Kind, hausdorff
from quatrange.shapes import (
    Ellipse,
    Ellipsoid4D,
    PureDisk,
    QuaternionDisk,
    Segment,
    ShapeError,
    Unclassified,
    block_structure,
    certify_block,
    classify,
    classify_2x2_real,
    disk_3x3,
    eigenvalues_2x2,
    shape_from_dict,
)


def upper3(p, x, y, z):
    return np.array([[p, x, y], [0, p, z], [0, 0, p]])


def test_2x2_examples():
    s = classify_2x2_real(np.diag([1.0, 3.0]))
    assert isinstance(s, Segment) and (s.lo, s.hi) == (1, 3)
    d = classify_2x2_real(np.array([[0.0, -1.0], [1.0, 0.0]]))
    assert isinstance(d, PureDisk) and d.center == 0 and d.radius == pytest.approx(1, abs=1e-12)
    q = classify_2x2_real(np.array([[0.0, 1.0], [0.0, 0.0]]))
    assert isinstance(q, QuaternionDisk) and q.center == 0 and q.radius == pytest.approx(0.5, abs=1e-12)
    e = classify_2x2_real(np.array([[0.0, 1.0], [-2.0, 0.0]]))
    assert isinstance(e, Ellipsoid4D)
    assert (e.c, e.a, e.b) == pytest.approx((0, 0.5, 1.5), abs=1e-12)


def test_2x2_real_foci_have_focal_axis_along_real_line():
    e = classify_2x2_real(np.array([[1.0, 2.0], [0.0, 3.0]]))
    # foci 1 and 3, |omega| = 2
    assert isinstance(e, Ellipsoid4D)
    assert (e.c, e.a, e.b) == pytest.approx((2, np.sqrt(2), 1), abs=1e-12)


def test_2x2_rejects_wrong_input():
    with pytest.raises(ShapeError):
        classify_2x2_real(np.eye(3))
    with pytest.raises(ShapeError):
        classify_2x2_real(np.diag([1j, 1]))


def test_eigenvalues_2x2_stable():
    l1, l2 = eigenvalues_2x2(np.array([[1e8, 1.0], [0.0, 1e-8]]))
    assert sorted([l1.real, l2.real]) == pytest.approx([1e-8, 1e8], rel=1e-12)
    l1, l2 = eigenvalues_2x2(np.array([[0.0, -2.0], [1.0, 0.0]]))
    assert {round(l1.imag, 12), round(l2.imag, 12)} == {round(np.sqrt(2), 12), -round(np.sqrt(2), 12)}


def test_2x2_frobenius_identity(rng):
    for _ in range(100):
        a = rng.standard_normal((2, 2))
        l1, l2 = np.linalg.eigvals(a)
        assert np.sum(a * a) >= abs(l1) ** 2 + abs(l2) ** 2 - 1e-9


def test_2x2_region_matches_sweep(rng):
    for _ in range(20):
        a = rng.standard_normal((2, 2))
        shape = classify_2x2_real(a)
        assert hausdorff(shape.complex_region(), boundary(a).region) <= 1e-4


def test_2x2_samples_satisfy_shape(rng):
    for _ in range(10):
        a = rng.standard_normal((2, 2))
        shape = classify_2x2_real(a)
        pts = sample(a, 5000, 1).points
        assert shape.contains_array(pts, 1e-6).all()


def test_3x3_examples():
    assert disk_3x3(upper3(0, 1, 0, 0)) == QuaternionDisk(0, 0.5)
    assert disk_3x3(upper3(2, 0, 3, 4)) == QuaternionDisk(2, 2.5)
    assert disk_3x3(np.eye(3)) == QuaternionDisk(1, 0)
    assert disk_3x3(np.eye(3)).complex_region().kind is Kind.POINT


def test_3x3_complex_entries():
    s = disk_3x3(upper3(1, 1j, 0, 2))
    assert isinstance(s, Ellipse) and s.certificate is Certificate.CERTIFIED
    assert np.allclose(np.abs(s.region.vertices - 1), np.sqrt(5) / 2)


@pytest.mark.parametrize(
    "a",
    [upper3(0, 1, 1, 1), np.ones((3, 3)), upper3(1j, 1, 0, 0), np.diag([1, 2, 3.0]), np.eye(2)],
)
def test_3x3_rejects(a):
    with pytest.raises(ShapeError):
        disk_3x3(a)


def test_block_examples():
    r = certify_block(np.array([[0.0, 1.0], [1.0, 1.0]]))
    assert r.certificate is Certificate.CERTIFIED and r.approx.region.kind is Kind.SEGMENT
    assert certify_block(np.array([[1j, 1], [1, -1j]])).certificate is Certificate.CERTIFIED
    assert certify_block(np.array([[1 + 1j, 1], [0, 1 + 1j]])).certificate is Certificate.NOT_CERTIFIED


def test_block_structure_detection(rng):
    X = rng.standard_normal((2, 3)) + 1j * rng.standard_normal((2, 3))
    a = np.block([[2j * np.eye(2), X], [(0.5 - 1j) * X.conj().T, -1 * np.eye(3)]])
    n1, a1, a2, k = block_structure(a)
    assert (n1, a1, a2) == (2, 2j, -1) and k == pytest.approx(0.5 - 1j)
    assert block_structure(rng.standard_normal((4, 4))) is None
    with pytest.raises(ShapeError):
        certify_block(rng.standard_normal((4, 4)))


def test_classify_dispatch():
    assert classify(np.diag([1.0, 3.0])) == Segment(1, 3)
    assert classify(upper3(2, 0, 3, 4)) == QuaternionDisk(2, 2.5)
    assert isinstance(classify(np.array([[1j, 1], [1, -1j]])), Ellipse)
    assert isinstance(classify(np.arange(16.0).reshape(4, 4) ** 2), Unclassified)


def test_ellipse_membership_uses_hull_of_mirror_images():
    e = Ellipse(boundary(np.diag([-1 - 1j, 0, 1j, -1])).region, Certificate.CERTIFIED)
    assert e.contains(Quaternion(-0.5, 0.0, 0.9))
    assert not e.contains(Quaternion(-0.5, 0.0, 1.1))
    with pytest.raises(ValueError):
        Ellipse(e.region, Certificate.NOT_CERTIFIED).contains(0)


@pytest.mark.parametrize(
    "shape",
    [Segment(1, 3), PureDisk(0, 1), QuaternionDisk(2, 2.5), Ellipsoid4D(0, 0.5, 1.5), Unclassified("x")],
)
def test_dict_round_trip(shape):
    assert shape_from_dict(json.loads(json.dumps(shape.to_dict()))) == shape


def test_shape_membership_boundaries():
    assert PureDisk(0, 1).contains(Quaternion(0, 0, 0.6, 0.8))
    assert not PureDisk(0, 1).contains(Quaternion(0.1))
    assert QuaternionDisk(2, 2.5).contains(Quaternion(2, 1.5, 2))
    assert not QuaternionDisk(2, 2.5).contains(Quaternion(2, 1.5, 2.1))
    assert Ellipsoid4D(0, 0.5, 1.5).contains(Quaternion(0, 0, 0, 1.5))
    assert not Ellipsoid4D(0, 0.5, 1.5).contains(Quaternion(0.5, 0, 0, 0.1))
    assert Segment(1, 3).contains(2) and not Segment(1, 3).contains(Quaternion(2, 0, 0.1))
