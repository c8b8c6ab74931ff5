"""Quaternionic numerical range: sampling, and exact reconstruction for real matrices.

For a real matrix the complex slice of W_H(A) is W_C(A) itself, and W_H(A)
is the union of the similarity classes of its points.  Membership of a
quaternion is therefore decided by its canonical representative.  For
other matrices only sampled evidence is offered.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .complex_nr import NRApprox, boundary
from .matrix import FieldError, QMatrix, as_qmatrix, quadratic_forms
from .quaternion import Quaternion, canonical_rep, canonical_reps, sample_unit_spheres, worker_seed
from .region import INTERVAL_TOL, contains

CHUNK = 50_000


@dataclass(frozen=True, eq=False)
class SampleCloud:
    """Values ``x^* A x`` at ``count`` uniform unit vectors drawn from ``seed``."""

    points: np.ndarray
    n: int
    seed: int
    workers: int = 1

    @property
    def count(self) -> int:
        return len(self.points)

    def quaternions(self) -> list[Quaternion]:
        return [Quaternion.from_array(p) for p in self.points]


def _evaluate(A: QMatrix, count: int, rng: np.random.Generator) -> np.ndarray:
    out = np.empty((count, 4))
    for start in range(0, count, CHUNK):
        size = min(CHUNK, count - start)
        out[start : start + size] = quadratic_forms(A, sample_unit_spheres(A.n, size, rng))
    return out


def sample(A, count: int, seed: int, workers: int = 1) -> SampleCloud:
    """Sample W_H(A) at ``count`` independent uniform unit vectors.

    With ``workers > 1`` the draws are split evenly and worker ``w`` uses
    seed ``seed + w``; results are concatenated in worker order.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    A = as_qmatrix(A)
    if workers <= 1:
        pts = _evaluate(A, count, np.random.default_rng(seed))
    else:
        sizes = [count // workers + (w < count % workers) for w in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                lambda w: _evaluate(A, sizes[w], np.random.default_rng(worker_seed(seed, w))),
                range(workers),
            )
            pts = np.concatenate(list(parts))
    return SampleCloud(pts, A.n, seed, max(1, workers))


def _require_real(A) -> QMatrix:
    A = as_qmatrix(A)
    if A.field != "R":
        raise FieldError(
            f"exact reconstruction needs a real matrix, got field {A.field}; "
            "only sampled containment is available"
        )
    return A


def bild_real(A, m: int = 720, max_error: float | None = None) -> NRApprox:
    """W_H(A) intersected with C for real ``A``; it coincides with W_C(A)."""
    A = _require_real(A)
    return boundary(A, m, max_error)


def member_real(A, q, m: int = 720, tol: float = INTERVAL_TOL, max_error: float | None = None) -> bool:
    """Whether ``q`` lies in W_H(A) for real ``A``, within ``tol``."""
    approx = bild_real(A, m, max_error)
    return bool(contains(approx.region, canonical_rep(q), tol))


def upper_bild_points(cloud: SampleCloud) -> np.ndarray:
    """Canonical representatives of the sampled values, all with Im >= 0."""
    return canonical_reps(cloud.points)


def sampled_distance(cloud: SampleCloud, q) -> float:
    """Distance from the class of ``q`` to the nearest sampled class.

    Sampled evidence only, for matrices where no exact test exists.
    """
    reps = upper_bild_points(cloud)
    return float(np.min(np.abs(reps - canonical_rep(q))))
