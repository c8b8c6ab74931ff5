"""Complex numerical range by support-function sweep.

For each direction ``theta`` the largest eigenvalue of the Hermitian part
``H_theta`` is the support value of W_C(A) in that direction and the
Rayleigh quotient of a top eigenvector is a boundary point.  The hull of
those boundary points is an inscribed polygon; the support lines at
neighbouring angles bound the true set from outside, which gives a rigorous
Hausdorff error for the approximation.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

import numpy as np

from .matrix import FieldError, QMatrix, as_qmatrix, chi, complex_array, hermitian_eigs, hermitian_part
from .region import (
    INTERVAL_TOL,
    ConvexRegion,
    conjugate,
    hausdorff,
    hull,
    union_conjugate_convex,
    union_hull,
)

log = logging.getLogger(__name__)

DEFAULT_ANGLES = 720
MIN_ANGLES = 16
REL_ERROR = 1e-7
MAX_REFINE_ROUNDS = 12


class Certificate(str, enum.Enum):
    CERTIFIED = "Certified"
    NOT_CERTIFIED = "NotCertified"

    def __bool__(self) -> bool:
        return self is Certificate.CERTIFIED


@dataclass(frozen=True)
class NRApprox:
    """Inscribed approximation of a complex numerical range.

    ``max_support_error`` bounds the Hausdorff distance between ``region``
    and the true numerical range.
    """

    region: ConvexRegion
    angles: int
    max_support_error: float


def _require_complex(A) -> np.ndarray:
    if isinstance(A, QMatrix) and A.field == "H":
        raise FieldError("complex numerical range needs a real or complex matrix")
    return complex_array(A)


def _hull_tol(a: np.ndarray) -> float:
    return 1e-12 * max(1.0, float(np.linalg.norm(a)))


def default_max_error(A) -> float:
    """Default refinement target: ``REL_ERROR * max(1, ||A||_F)``."""
    return REL_ERROR * max(1.0, float(np.linalg.norm(complex_array(A))))


def _eig_at(a: np.ndarray, theta: np.ndarray, basis: np.ndarray | None = None):
    h = hermitian_part(a, theta)
    if basis is not None:
        # warm start: nearby angles share almost the same eigenbasis
        h = np.conj(np.swapaxes(basis, -1, -2)) @ h @ basis
        h = 0.5 * (h + np.conj(np.swapaxes(h, -1, -2)))
    w, V = hermitian_eigs(h)
    if basis is not None:
        V = basis @ V
    return w[:, -1], V


def _support_gaps(theta: np.ndarray, lam: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Distance from each circumscribed corner to its inscribed chord.

    Entry k covers the arc between angle k and angle k+1 (cyclically).  The
    true boundary on that arc lies in the triangle spanned by the chord and
    the intersection of the two support lines.
    """
    t0, t1 = theta, np.roll(theta, -1)
    h0, h1 = lam, np.roll(lam, -1)
    z0, z1 = z, np.roll(z, -1)
    # support line: x cos t + y sin t = h
    s = np.sin(t1 - t0)
    x = (h0 * np.sin(t1) - h1 * np.sin(t0)) / s
    y = (h1 * np.cos(t0) - h0 * np.cos(t1)) / s
    corner = x + 1j * y
    d = z1 - z0
    len2 = (d * d.conj()).real
    safe = np.where(len2 > 0, len2, 1.0)
    t = np.clip(((corner - z0) * d.conj()).real / safe, 0.0, 1.0)
    return np.abs(corner - (z0 + np.where(len2 > 0, t, 0.0) * d))


def sweep(A, m: int = DEFAULT_ANGLES, max_error: float | None = None):
    """Angles, support values and boundary points of W_C(A).

    Starts from ``m`` equally spaced directions and bisects every arc whose
    support-line gap exceeds ``max_error`` (``0`` disables refinement).
    """
    a = _require_complex(A)
    if m < MIN_ANGLES:
        raise ValueError(f"need at least {MIN_ANGLES} sweep angles, got {m}")
    if max_error is None:
        max_error = default_max_error(a)
    theta = 2.0 * np.pi * np.arange(m) / m
    lam, V = _eig_at(a, theta)
    for _ in range(MAX_REFINE_ROUNDS if max_error > 0 else 0):
        z = _rayleigh(a, V[..., -1])
        bad = np.flatnonzero(_support_gaps(theta, lam, z) > max_error)
        if bad.size == 0:
            break
        nxt = np.roll(theta, -1)[bad]
        nxt = np.where(nxt <= theta[bad], nxt + 2.0 * np.pi, nxt)
        mid = 0.5 * (theta[bad] + nxt)
        lam_new, V_new = _eig_at(a, mid, V[bad])
        theta = np.concatenate([theta, mid])
        lam = np.concatenate([lam, lam_new])
        V = np.concatenate([V, V_new])
        order = np.argsort(theta, kind="stable")
        theta, lam, V = theta[order], lam[order], V[order]
    return theta, lam, _rayleigh(a, V[..., -1])


def _rayleigh(a: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.einsum("ti,ij,tj->t", v.conj(), a, v)


def boundary(A, m: int = DEFAULT_ANGLES, max_error: float | None = None) -> NRApprox:
    """Inscribed polygon of W_C(A) from a support sweep of at least ``m`` directions.

    Arcs are refined until the rigorous Hausdorff bound drops below
    ``max_error`` (default :func:`default_max_error`; ``0`` keeps exactly ``m``
    directions).  Hermitian matrices give a Segment, scalar matrices a Point.
    """
    a = _require_complex(A)
    theta, lam, z = sweep(a, m, max_error)
    region = hull(z, _hull_tol(a))
    return NRApprox(region, m, float(np.max(_support_gaps(theta, lam, z))))


def nr_of_chi(A, m: int = DEFAULT_ANGLES, max_error: float | None = None) -> NRApprox:
    """W_C(chi(A)) for complex ``A`` as the hull of W_C(A) and its mirror image."""
    base = boundary(A, m, max_error)
    region = union_hull(base.region, conjugate(base.region))
    return NRApprox(region, m, base.max_support_error)


def certify_convexity(
    A, m: int = DEFAULT_ANGLES, tol: float = INTERVAL_TOL, max_error: float | None = None
) -> Certificate:
    """Sufficient test for convexity of W_H(A) with complex ``A``.

    Certified when the real projection of W_C(A) equals its real-axis
    section.  NotCertified only says the test failed, not that W_H(A) is
    non-convex.
    """
    region = boundary(A, m, max_error).region
    if union_conjugate_convex(region, tol):
        return Certificate.CERTIFIED
    return Certificate.NOT_CERTIFIED


def convex_by_real_entries(A) -> bool:
    """W_H(A) is convex whenever every entry of ``A`` is real."""
    return as_qmatrix(A).field == "R"


def transpose_invariance_check(
    A, m: int = DEFAULT_ANGLES, tol: float = 1e-5, max_error: float | None = None
) -> bool:
    """W_C(A) and W_C(A^t) agree within ``tol`` plus both sweep error bounds."""
    a = _require_complex(A)
    left = boundary(a, m, max_error)
    right = boundary(a.T, m, max_error)
    dist = hausdorff(left.region, right.region)
    return dist <= tol + left.max_support_error + right.max_support_error


def chi_boundary(A, m: int = DEFAULT_ANGLES, max_error: float | None = None) -> NRApprox:
    """Sweep of the 2n x 2n matrix chi(A) itself."""
    return boundary(chi(A), m, max_error)
