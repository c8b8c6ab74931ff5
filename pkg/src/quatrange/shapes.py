"""Closed-form shapes of quaternionic numerical ranges.

Covers real 2x2 matrices (segment, pure-quaternion disk, quaternion ball or
4-dimensional ellipsoid), 3x3 upper-triangular matrices with a constant
real diagonal and ``x*y*z = 0`` (a ball), and the two-block matrices
``[[a1 I, X], [k X^*, a2 I]]`` whose complex range is an ellipse (convexity
certificate only).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .complex_nr import DEFAULT_ANGLES, Certificate, NRApprox, boundary, certify_convexity
from .matrix import as_qmatrix
from .quaternion import Quaternion, canonical_rep, format_quaternion
from .region import (
    INTERVAL_TOL,
    ConvexRegion,
    Kind,
    conjugate,
    disk_polygon,
    ellipse_polygon,
    hull,
    union_hull,
)

DEFAULT_TOL = 1e-9


class ShapeError(ValueError):
    """Matrix does not have the structure a classifier expects."""


def _cstr(z: complex) -> str:
    return format_quaternion(Quaternion(z.real, z.imag))


class Shape:
    """Base of the shape tags.  ``complex_region`` is the slice W_H(A) with C."""

    tag = "Shape"

    def contains(self, q, tol: float = 1e-9) -> bool:
        raise NotImplementedError

    def complex_region(self, m: int = DEFAULT_ANGLES) -> ConvexRegion:
        raise NotImplementedError

    def to_dict(self) -> dict:
        raise NotImplementedError

    def contains_array(self, points: np.ndarray, tol: float = 1e-9) -> np.ndarray:
        """Vectorised :meth:`contains` over an (N, 4) array of quaternions."""
        return np.array([self.contains(Quaternion.from_array(p), tol) for p in points], dtype=bool)


@dataclass(frozen=True)
class Segment(Shape):
    lo: complex
    hi: complex
    tag = "Segment"

    def complex_region(self, m: int = DEFAULT_ANGLES) -> ConvexRegion:
        return hull([self.lo, self.hi])

    def contains(self, q, tol: float = 1e-9) -> bool:
        c = canonical_rep(q)
        R = self.complex_region()
        return bool(min(R.distance(c), conjugate(R).distance(c)) <= tol)

    def contains_array(self, points, tol=1e-9):
        reps = points[:, 0] + 1j * np.linalg.norm(points[:, 1:], axis=1)
        R = self.complex_region()
        return np.minimum(R.distance(reps), conjugate(R).distance(reps)) <= tol

    def to_dict(self) -> dict:
        return {"tag": self.tag, "endpoints": [_cstr(self.lo), _cstr(self.hi)]}


@dataclass(frozen=True)
class PureDisk(Shape):
    """``{q : Re q = center, |Im q| <= radius}``."""

    center: float
    radius: float
    tag = "PureDisk"

    def complex_region(self, m: int = DEFAULT_ANGLES) -> ConvexRegion:
        return hull([complex(self.center, -self.radius), complex(self.center, self.radius)])

    def contains_array(self, points, tol=1e-9):
        return (np.abs(points[:, 0] - self.center) <= tol) & (
            np.linalg.norm(points[:, 1:], axis=1) <= self.radius + tol
        )

    def contains(self, q, tol: float = 1e-9) -> bool:
        return bool(self.contains_array(Quaternion.coerce(q).to_array()[None], tol)[0])

    def to_dict(self) -> dict:
        return {"tag": self.tag, "center": self.center, "radius": self.radius}


@dataclass(frozen=True)
class QuaternionDisk(Shape):
    """``{q : |q - center| <= radius}`` with a real centre."""

    center: float
    radius: float
    tag = "QuaternionDisk"

    def complex_region(self, m: int = DEFAULT_ANGLES) -> ConvexRegion:
        return disk_polygon(self.center, self.radius, m)

    def contains_array(self, points, tol=1e-9):
        shifted = points.copy()
        shifted[:, 0] -= self.center
        return np.linalg.norm(shifted, axis=1) <= self.radius + tol

    def contains(self, q, tol: float = 1e-9) -> bool:
        return bool(self.contains_array(Quaternion.coerce(q).to_array()[None], tol)[0])

    def to_dict(self) -> dict:
        return {"tag": self.tag, "center": self.center, "radius": self.radius}


@dataclass(frozen=True)
class Ellipsoid4D(Shape):
    """``{q : (Re q - c)^2 / a^2 + |Im q|^2 / b^2 <= 1}``."""

    c: float
    a: float
    b: float
    tag = "Ellipsoid4D"

    def complex_region(self, m: int = DEFAULT_ANGLES) -> ConvexRegion:
        return ellipse_polygon(self.c, self.a, self.b, m)

    def contains_array(self, points, tol=1e-9):
        u = (points[:, 0] - self.c) / self.a
        v = np.linalg.norm(points[:, 1:], axis=1) / self.b
        # radial distance in the scaled frame, converted back by the smaller semi-axis
        return np.hypot(u, v) <= 1.0 + tol / min(self.a, self.b)

    def contains(self, q, tol: float = 1e-9) -> bool:
        return bool(self.contains_array(Quaternion.coerce(q).to_array()[None], tol)[0])

    def to_dict(self) -> dict:
        return {"tag": self.tag, "c": self.c, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class Ellipse(Shape):
    """Numerically computed complex range, plus the convexity certificate.

    When certified, the complex slice of W_H(A) is the convex hull of the
    region and its mirror image, which makes :meth:`contains` exact up to
    sweep error.
    """

    region: ConvexRegion
    certificate: Certificate
    tag = "Ellipse"

    def complex_region(self, m: int = DEFAULT_ANGLES) -> ConvexRegion:
        return self.region

    def contains_array(self, points, tol=1e-9):
        if self.certificate is not Certificate.CERTIFIED:
            raise ValueError("membership is only decided for certified regions")
        reps = points[:, 0] + 1j * np.linalg.norm(points[:, 1:], axis=1)
        return union_hull(self.region, conjugate(self.region)).distance(reps) <= tol

    def contains(self, q, tol: float = 1e-9) -> bool:
        return bool(self.contains_array(Quaternion.coerce(q).to_array()[None], tol)[0])

    def to_dict(self) -> dict:
        v = self.region.vertices
        return {
            "tag": self.tag,
            "certificate": self.certificate.value,
            "kind": self.region.kind.value,
            "vertices": [[float(z.real), float(z.imag)] for z in v],
        }


@dataclass(frozen=True)
class Unclassified(Shape):
    reason: str = ""
    tag = "Unclassified"

    def to_dict(self) -> dict:
        return {"tag": self.tag, "reason": self.reason}


# ---------------------------------------------------------------------------


def eigenvalues_2x2(a: np.ndarray) -> tuple[complex, complex]:
    """Eigenvalues of a real 2x2 matrix from the characteristic polynomial.

    The discriminant is formed as ``((a - d)/2)^2 + b c`` to avoid
    cancellation; real roots use the larger-magnitude branch first and
    recover the other from the determinant.
    """
    (p, q), (r, s) = a
    half_tr = 0.5 * (p + s)
    disc = (0.5 * (p - s)) ** 2 + q * r
    if disc >= 0.0:
        root = math.sqrt(disc)
        big = half_tr + math.copysign(root, half_tr)
        det = p * s - q * r
        small = det / big if big != 0.0 else half_tr - root
        return tuple(sorted((complex(big), complex(small)), key=lambda z: z.real))
    root = math.sqrt(-disc)
    return complex(half_tr, -root), complex(half_tr, root)


def classify_2x2_real(A, tol: float = DEFAULT_TOL) -> Shape:
    """Shape of W_H(A) for a real 2x2 matrix.

    Normal matrices give a segment between real eigenvalues or a disk of
    pure quaternions around the real part of a conjugate pair.  Otherwise
    W_C(A) is an elliptical disk with foci at the eigenvalues and minor
    semi-axis ``|omega|/2``, where ``|omega|^2 = ||A||_F^2 - |l1|^2 - |l2|^2``,
    and W_H(A) is its rotation about the real axis: a ball when the
    eigenvalues coincide, a 4-dimensional ellipsoid otherwise.
    """
    A = as_qmatrix(A)
    if A.n != 2 or A.field != "R":
        raise ShapeError(f"expected a real 2x2 matrix, got {A.n}x{A.n} over {A.field}")
    a = A.data[..., 0]
    fro2 = float(np.sum(a * a))
    l1, l2 = eigenvalues_2x2(a)
    comm = a @ a.T - a.T @ a
    if np.linalg.norm(comm) <= tol * fro2:
        if l1.imag == 0.0:
            return Segment(complex(l1.real), complex(l2.real))
        return PureDisk(l1.real, abs(l1.imag))
    omega2 = fro2 - abs(l1) ** 2 - abs(l2) ** 2
    if omega2 < -tol * fro2:
        raise ArithmeticError(f"Frobenius identity violated: |omega|^2 = {omega2}")
    half_w = 0.5 * math.sqrt(max(omega2, 0.0))
    gap = abs(l1 - l2)
    if gap <= tol * math.sqrt(fro2):
        return QuaternionDisk(0.5 * (l1 + l2).real, half_w)
    focal = math.hypot(half_w, 0.5 * gap)
    centre = 0.5 * (l1 + l2).real
    if l1.imag == 0.0:
        return Ellipsoid4D(centre, focal, half_w)
    return Ellipsoid4D(centre, half_w, focal)


def disk_3x3(A, tol: float = DEFAULT_TOL, m: int = DEFAULT_ANGLES) -> Shape:
    """Shape for ``[[p, x, y], [0, p, z], [0, 0, p]]`` with real ``p`` and ``x*y*z = 0``.

    W_C(A) is the disk about ``p`` of radius ``sqrt(|x|^2+|y|^2+|z|^2)/2``.
    Real entries give the quaternion ball with the same centre and radius;
    complex entries give only the complex disk with its certificate.
    """
    A = as_qmatrix(A)
    if A.n != 3:
        raise ShapeError(f"expected a 3x3 matrix, got {A.n}x{A.n}")
    if A.field == "H":
        raise ShapeError("quaternionic entries are outside this family")
    a = A.to_complex()
    if np.max(np.abs(np.tril(a, -1))) > tol:
        raise ShapeError("matrix is not upper triangular")
    p = a[0, 0]
    if np.max(np.abs(np.diag(a) - p)) > tol or abs(p.imag) > tol:
        raise ShapeError("diagonal must be a constant real number")
    x, y, z = a[0, 1], a[0, 2], a[1, 2]
    if abs(x * y * z) > tol:
        raise ShapeError("entries above the diagonal must satisfy x*y*z = 0")
    r = 0.5 * math.sqrt(abs(x) ** 2 + abs(y) ** 2 + abs(z) ** 2)
    if A.field == "R":
        return QuaternionDisk(float(p.real), r)
    return Ellipse(disk_polygon(float(p.real), r, m), certify_convexity(A, m))


class BlockReport(NamedTuple):
    certificate: Certificate
    n1: int
    a1: complex
    a2: complex
    k: complex
    approx: NRApprox


def block_structure(A, tol: float = DEFAULT_TOL):
    """Find ``(n1, a1, a2, k)`` with ``A = [[a1 I, X], [k X^*, a2 I]]``, or ``None``."""
    A = as_qmatrix(A)
    if A.field == "H" or A.n < 2:
        return None
    a = A.to_complex()
    n = A.n
    scale = max(1.0, float(np.linalg.norm(a)))
    for n1 in range(1, n):
        a1, a2 = a[0, 0], a[n1, n1]
        if np.max(np.abs(a[:n1, :n1] - a1 * np.eye(n1))) > tol * scale:
            continue
        if np.max(np.abs(a[n1:, n1:] - a2 * np.eye(n - n1))) > tol * scale:
            continue
        X, L = a[:n1, n1:], a[n1:, :n1]
        xnorm2 = float(np.sum(np.abs(X) ** 2))
        if xnorm2 <= (tol * scale) ** 2:
            if np.max(np.abs(L)) <= tol * scale:
                return n1, complex(a1), complex(a2), 0j
            continue
        k = complex(np.sum(X.T * L) / xnorm2)
        if np.max(np.abs(L - k * X.conj().T)) <= tol * scale:
            return n1, complex(a1), complex(a2), k
    return None


def certify_block(A, m: int = DEFAULT_ANGLES, tol: float = INTERVAL_TOL) -> BlockReport:
    """Convexity certificate for the two-block family with an elliptical complex range."""
    found = block_structure(A)
    if found is None:
        raise ShapeError("matrix is not of the form [[a1 I, X], [k X^*, a2 I]]")
    n1, a1, a2, k = found
    approx = boundary(A, m)
    return BlockReport(certify_convexity(A, m, tol), n1, a1, a2, k, approx)


def classify(A, tol: float = DEFAULT_TOL, m: int = DEFAULT_ANGLES) -> Shape:
    """Dispatch to the first closed-form family that matches ``A``."""
    A = as_qmatrix(A)
    if A.n == 2 and A.field == "R":
        return classify_2x2_real(A, tol)
    if A.n == 3 and A.field != "H":
        try:
            return disk_3x3(A, tol, m)
        except ShapeError:
            pass
    if block_structure(A, tol) is not None:
        report = certify_block(A, m)
        return Ellipse(report.approx.region, report.certificate)
    return Unclassified(f"no closed form for this {A.n}x{A.n} matrix over {A.field}")


def shape_from_dict(d: dict) -> Shape:
    from .quaternion import parse_quaternion

    tag = d["tag"]
    if tag == "Segment":
        lo, hi = (complex(*parse_quaternion(s).to_array()[:2]) for s in d["endpoints"])
        return Segment(lo, hi)
    if tag == "PureDisk":
        return PureDisk(float(d["center"]), float(d["radius"]))
    if tag == "QuaternionDisk":
        return QuaternionDisk(float(d["center"]), float(d["radius"]))
    if tag == "Ellipsoid4D":
        return Ellipsoid4D(float(d["c"]), float(d["a"]), float(d["b"]))
    if tag == "Ellipse":
        v = [complex(re, im) for re, im in d["vertices"]]
        kind = Kind(d.get("kind", "Polygon"))
        return Ellipse(ConvexRegion(kind, v), Certificate(d["certificate"]))
    if tag == "Unclassified":
        return Unclassified(d.get("reason", ""))
    raise ValueError(f"unknown shape tag {tag!r}")

