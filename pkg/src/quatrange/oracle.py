"""Brute-force verification of the numerical-range identities by sampling.

Every check evaluates quadratic forms directly at unit vectors and compares
the values with regions computed by the support sweep.  Two directions are
tested:

* containment: every sampled value lies in the predicted region within
  ``tol``;
* attainment: selected boundary points of the region are approached within
  a coverage radius.  Uniform draws rarely land near the boundary of a
  high-dimensional sphere, so the best uniform draws seed a stochastic local
  search over the unit sphere that only ever evaluates quadratic forms.

The module deliberately avoids the closed-form classifiers in
:mod:`quatrange.shapes`.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .complex_nr import Certificate, boundary, certify_convexity, nr_of_chi
from .matrix import QMatrix, as_qmatrix, chi, complex_array, quadratic_form, quadratic_forms
from .quat_nr import CHUNK
from .quaternion import Quaternion, canonical_reps, format_quaternion, qabs, sample_unit_spheres
from .region import ConvexRegion, Kind

DEFAULT_COUNT = 100_000
DEFAULT_TOL = 1e-6
CHI_DIRECTIONS = 360
BILD_VERTICES = 72
BILD_COVERAGE = 1e-2
SOUNDNESS_COVERAGE = 5e-2
REMARK_ATTAIN = 1e-3
WITNESS_TOL = 1e-12
SEARCH_STEPS = 400
SEARCH_BRANCH = 8


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    bound: float

    @property
    def passed(self) -> bool:
        return bool(self.value <= self.bound)


@dataclass(frozen=True)
class OracleReport:
    """Outcome of one verified claim.

    ``max_violation`` and ``tolerance`` are those of the containment check;
    ``checks`` lists every sub-check and ``passed`` requires all of them.
    """

    claim: str
    matrix: str
    count: int
    seed: int
    max_violation: float
    tolerance: float
    checks: tuple[Check, ...]
    runtime: float = field(default=0.0, compare=False)
    notes: str = ""

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "claim": self.claim,
            "matrix": self.matrix,
            "count": self.count,
            "seed": self.seed,
            "max_violation": self.max_violation,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "checks": [dict(asdict(c), passed=c.passed) for c in self.checks],
        }
        if self.notes:
            out["notes"] = self.notes
        if timings:
            out["runtime"] = self.runtime
        return out


def describe(A) -> str:
    """Compact row-wise text form of a matrix, e.g. ``[[i, 0], [0, 2i]]``."""
    A = as_qmatrix(A)
    rows = (", ".join(format_quaternion(A[r, c]) for c in range(A.n)) for r in range(A.n))
    return "[" + ", ".join(f"[{row}]" for row in rows) + "]"


# ---------------------------------------------------------------------------
# unit vectors as flat real arrays


def _normalize(x: np.ndarray) -> np.ndarray:
    return x / np.linalg.norm(x, axis=-1, keepdims=True)


def _quat_values(A: QMatrix, x: np.ndarray) -> np.ndarray:
    """``x^* A x`` for flat real vectors of length 4n; shape (..., 4)."""
    lead = x.shape[:-1]
    X = x.reshape(-1, A.n, 4)
    return quadratic_forms(A, X).reshape(lead + (4,))


def _complex_values(c: np.ndarray, x: np.ndarray) -> np.ndarray:
    """``y^* C y`` with ``y`` packed as (real parts, imaginary parts)."""
    d = c.shape[0]
    y = x[..., :d] + 1j * x[..., d:]
    return np.einsum("...i,ij,...j->...", y.conj(), c, y)


def local_search(loss, x0: np.ndarray, rng, goal: np.ndarray | float = -np.inf,
                 steps: int = SEARCH_STEPS, branch: int = SEARCH_BRANCH):
    """Minimise ``loss(idx, X)`` over unit vectors, independently per target.

    ``x0`` has shape (T, d).  ``loss(idx, X)`` receives target indices and
    candidates of shape (len(idx), B, d) and returns losses (len(idx), B).
    Each round proposes ``branch`` Gaussian perturbations per target, keeps
    the best improvement and adapts the step size.  Targets stop once their
    loss reaches ``goal``.  Returns the final vectors and losses.
    """
    x = _normalize(np.array(x0, dtype=float))
    T, d = x.shape
    goal = np.broadcast_to(np.asarray(goal, dtype=float), (T,))
    best = loss(np.arange(T), x[:, None, :])[:, 0]
    step = np.full(T, 0.5)
    for _ in range(steps):
        idx = np.flatnonzero((best > goal) & (step > 1e-9))
        if idx.size == 0:
            break
        noise = rng.standard_normal((idx.size, branch, d))
        cand = _normalize(x[idx, None, :] + step[idx, None, None] * noise / np.sqrt(d))
        val = loss(idx, cand)
        k = np.argmin(val, axis=1)
        low = val[np.arange(idx.size), k]
        up = low < best[idx]
        x[idx[up]] = cand[up, k[up]]
        best[idx[up]] = low[up]
        step[idx] = np.where(up, np.minimum(step[idx] * 1.5, 2.0), step[idx] * 0.6)
    return x, best


def _nearest_starts(values: np.ndarray, targets: np.ndarray, x: np.ndarray, sub: int = 20_000) -> np.ndarray:
    """For each target, the sample vector whose value lies closest to it."""
    values, x = values[:sub], x[:sub]
    k = np.argmin(np.abs(values[None, :] - targets[:, None]), axis=1)
    return x[k]


def _direction_starts(values: np.ndarray, theta: np.ndarray, x: np.ndarray) -> np.ndarray:
    k = np.argmax((np.exp(-1j * theta)[:, None] * values[None, :]).real, axis=1)
    return x[k]


def _vertex_normals(R: ConvexRegion, idx: np.ndarray) -> np.ndarray:
    """An outward normal angle strictly inside each selected vertex's normal cone."""
    v = R.vertices
    if R.kind is Kind.POINT:
        return np.zeros(len(idx))
    if R.kind is Kind.SEGMENT:
        d = v[1] - v[0]
        return np.angle(np.where(idx == 1, d, -d))
    prev = v[idx] - v[idx - 1]
    nxt = v[(idx + 1) % len(v)] - v[idx]
    n1 = -1j * prev / np.abs(prev)
    n2 = -1j * nxt / np.abs(nxt)
    return np.angle(n1 + n2)


def _spread(k: int, total: int) -> np.ndarray:
    """``k`` evenly spaced indices out of ``total`` (all of them if fewer)."""
    if total <= k:
        return np.arange(total)
    return np.unique(np.floor(np.arange(k) * total / k).astype(int))


def _attain_classes(A: QMatrix, targets: np.ndarray, normals: np.ndarray, cloud_x: np.ndarray,
                    reps: np.ndarray, radius: float, rng) -> np.ndarray:
    """Distance from each target (upper half-plane) to the closest class found.

    First climbs the support ``cos t Re w + sin t |Im w|`` in the target's
    normal direction, which drives the value onto the boundary near the
    target, then minimises the distance to the target from the better of
    that point and the nearest uniform draw.
    """
    c, s = np.cos(normals), np.sin(normals)

    def support_loss(idx, X):
        w = _quat_values(A, X)
        return -(c[idx, None] * w[..., 0] + s[idx, None] * np.sqrt(np.sum(w[..., 1:] ** 2, axis=-1)))

    def dist_loss(idx, X):
        return np.abs(canonical_reps(_quat_values(A, X)) - targets[idx, None])

    start = _direction_starts(reps, normals, cloud_x)
    x, _ = local_search(support_loss, start, rng)
    near = _nearest_starts(reps, targets, cloud_x)
    d_climb = dist_loss(np.arange(len(targets)), x[:, None])[:, 0]
    d_near = dist_loss(np.arange(len(targets)), near[:, None])[:, 0]
    x = np.where((d_climb <= d_near)[:, None], x, near)
    _, best = local_search(dist_loss, x, rng, goal=radius / 10.0)
    return best


def _quat_cloud(A: QMatrix, count: int, seed: int):
    """Uniform unit vectors of H^n (flattened) and their values ``x^* A x``."""
    x = sample_unit_spheres(A.n, count, np.random.default_rng(seed)).reshape(count, -1)
    points = np.concatenate([_quat_values(A, x[s : s + CHUNK]) for s in range(0, count, CHUNK)])
    return points, x


# ---------------------------------------------------------------------------
# checks


def check_prop_chi(A, m: int = 720, count: int = DEFAULT_COUNT, seed: int = 0,
                   tol: float = DEFAULT_TOL, coverage: float = BILD_COVERAGE,
                   name: str | None = None) -> OracleReport:
    """Sampled check that W_C(chi(A)) is the hull of W_C(A) and its mirror image.

    Draws uniform unit vectors of C^{2n}, evaluates the quadratic form of
    ``chi(A)`` directly, and checks containment in :func:`nr_of_chi` plus
    attainment of its support value in 360 directions.
    """
    t0 = time.perf_counter()
    A = as_qmatrix(A)
    c = complex_array(chi(A))
    rng = np.random.default_rng(seed)
    d = 4 * A.n
    x = _normalize(rng.standard_normal((count, d)))
    w = _complex_values(c, x)
    region = nr_of_chi(A, m).region
    worst = float(np.max(region.distance(w)))

    theta = 2.0 * np.pi * np.arange(CHI_DIRECTIONS) / CHI_DIRECTIONS
    h = region.support(theta)
    phase = np.exp(-1j * theta)
    uniform_gap = float(np.max(h - np.max((phase[:, None] * w[None, :]).real, axis=1)))

    def loss(idx, X):
        return -(phase[idx, None] * _complex_values(c, X)).real

    _, best = local_search(loss, _direction_starts(w, theta, x), np.random.default_rng([seed, 1]),
                           goal=-(h - coverage / 10.0))
    reached = -best
    gap = float(np.max(h - reached))
    overshoot = float(np.max(reached - h))
    checks = (
        Check("containment", worst, tol),
        Check("support_overshoot", overshoot, tol),
        Check("support_attainment", gap, coverage),
    )
    return OracleReport("prop_chi", name or describe(A), count, seed, worst, tol, checks,
                        time.perf_counter() - t0, f"uniform-only support gap {uniform_gap:.3g}")


def check_real_bild(A, m: int = 720, count: int = DEFAULT_COUNT, seed: int = 0,
                    tol: float = DEFAULT_TOL, coverage: float = BILD_COVERAGE,
                    name: str | None = None) -> OracleReport:
    """Sampled check that the classes of W_H(A) are exactly those of W_C(A), real ``A``."""
    t0 = time.perf_counter()
    A = as_qmatrix(A)
    if A.field != "R":
        raise ValueError("check_real_bild needs a real matrix")
    points, x = _quat_cloud(A, count, seed)
    reps = canonical_reps(points)
    region = boundary(A, m).region
    worst = float(np.max(region.distance(reps)))

    idx = _spread(BILD_VERTICES, len(region.vertices))
    targets = region.vertices[idx]
    normals = _vertex_normals(region, idx)
    # classes live in the upper half-plane; fold the lower vertices up
    flip = targets.imag < 0
    targets = np.where(flip, targets.conj(), targets)
    normals = np.where(flip, -normals, normals)
    uniform_gap = float(np.max(np.min(np.abs(reps[None, :20_000] - targets[:, None]), axis=1)))
    best = _attain_classes(A, targets, normals, x, reps, coverage, np.random.default_rng([seed, 2]))
    gap = float(np.max(best))
    checks = (Check("containment", worst, tol), Check("vertex_attainment", gap, coverage))
    return OracleReport("real_bild", name or describe(A), count, seed, worst, tol, checks,
                        time.perf_counter() - t0,
                        f"{len(targets)} vertices; uniform-only gap {uniform_gap:.3g}")


def remark_witnesses() -> tuple[Quaternion, Quaternion]:
    """Values of ``x^* diag(i, 2i) x`` at the two unit vectors (0, 1) and (sqrt(2/3), sqrt(1/3) j)."""
    A = QMatrix([[1j, 0], [0, 2j]])
    w1 = quadratic_form(A, [Quaternion(0.0), Quaternion(1.0)])
    w2 = quadratic_form(A, [Quaternion(np.sqrt(2.0 / 3.0)), Quaternion(0.0, 0.0, np.sqrt(1.0 / 3.0))])
    return w1, w2


def check_remark_disk(count: int = DEFAULT_COUNT, seed: int = 0, m: int = 720) -> OracleReport:
    """W_H(diag(i, 2i)) is the pure-quaternion ball of radius 2, yet the certificate fails."""
    t0 = time.perf_counter()
    A = QMatrix([[1j, 0], [0, 2j]])
    points, x = _quat_cloud(A, count, seed)
    re = float(np.max(np.abs(points[:, 0])))
    mod = qabs(points)
    excess = float(np.max(mod)) - 2.0
    w1, w2 = remark_witnesses()
    witness = max(abs(w1 - Quaternion(0.0, 2.0)), abs(w2))

    def loss(idx, X):
        return -qabs(_quat_values(A, X))

    k = np.argsort(mod)[-4:]
    _, best = local_search(loss, x[k], np.random.default_rng([seed, 3]), goal=-(2.0 - REMARK_ATTAIN / 10.0))
    reached = float(np.max(-best))
    cert = certify_convexity(A, m)
    checks = (
        Check("real_part", re, 1e-9),
        Check("modulus_excess", excess, 1e-9),
        Check("witnesses", witness, WITNESS_TOL),
        Check("modulus_attainment", 2.0 - max(reached, float(np.max(mod))), REMARK_ATTAIN),
        Check("not_certified", float(cert is Certificate.CERTIFIED), 0.0),
    )
    return OracleReport("remark_disk", describe(A), count, seed, max(re, excess), 1e-9, checks,
                        time.perf_counter() - t0,
                        f"uniform-only max |w| {float(np.max(mod)):.6f}; certificate {cert.value}")


def check_certificate_soundness(batch, m: int = 720, count: int = DEFAULT_COUNT, seed: int = 0,
                                tol: float = DEFAULT_TOL, coverage: float = SOUNDNESS_COVERAGE,
                                names: list[str] | None = None) -> OracleReport:
    """For every Certified matrix, W_H(A) meets C in exactly the hull of W_C(A) and its mirror.

    NotCertified matrices are skipped; they carry no claim.
    """
    t0 = time.perf_counter()
    batch = [as_qmatrix(A) for A in batch]
    names = names or [describe(A) for A in batch]
    worst, gap, skipped = 0.0, 0.0, []
    for i, A in enumerate(batch):
        if certify_convexity(A, m) is not Certificate.CERTIFIED:
            skipped.append(names[i])
            continue
        s = seed + i
        points, x = _quat_cloud(A, count, s)
        region = nr_of_chi(A, m).region
        reps = canonical_reps(points)
        proj = points[:, 0] + 1j * points[:, 1]
        worst = max(worst, float(np.max(region.distance(reps))), float(np.max(region.distance(proj))))
        upper = np.flatnonzero(region.vertices.imag >= -region.tol)
        idx = upper[_spread(BILD_VERTICES, len(upper))]
        targets = region.vertices[idx]
        normals = _vertex_normals(region, idx)
        best = _attain_classes(A, targets, normals, x, reps, coverage, np.random.default_rng([s, 4]))
        gap = max(gap, float(np.max(best)))
    checks = (Check("containment", worst, tol), Check("vertex_attainment", gap, coverage))
    notes = f"skipped NotCertified: {'; '.join(skipped)}" if skipped else ""
    return OracleReport("certificate_soundness", " | ".join(names), count, seed, worst, tol, checks,
                        time.perf_counter() - t0, notes)


# ---------------------------------------------------------------------------

SUITES = ("all", "remark", "chi", "bild", "soundness")


def _random_complex(rng, n: int) -> np.ndarray:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def run_suite(suite: str = "all", seed: int = 42, count: int = DEFAULT_COUNT, m: int = 720) -> list[OracleReport]:
    """The standard known-answer and random cases, in a fixed order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    rng = np.random.default_rng(seed)
    rand_c3 = _random_complex(rng, 3)
    rand_r4 = rng.standard_normal((4, 4))
    rand_r3 = [rng.standard_normal((3, 3)) for _ in range(3)]
    diag = np.diag([1j, 2j])
    jordan = np.array([[0.0, 1.0], [0.0, 0.0]])
    reports = []
    if suite in ("all", "remark"):
        reports.append(check_remark_disk(count, seed, m))
    if suite in ("all", "chi"):
        reports.append(check_prop_chi(diag, m, count, seed))
        reports.append(check_prop_chi(np.eye(2), m, count, seed))
        reports.append(check_prop_chi(rand_c3, m, count, seed, name=f"random complex 3x3, seed {seed}"))
    if suite in ("all", "bild"):
        reports.append(check_real_bild(np.diag([1.0, 3.0]), m, count, seed))
        reports.append(check_real_bild(jordan, m, count, seed))
        reports.append(check_real_bild(rand_r4, m, count, seed, name=f"random real 4x4, seed {seed}"))
    if suite in ("all", "soundness"):
        # the parallelogram range of the normal matrix passes the certificate although
        # its union with its mirror image is not convex
        parallelogram = np.diag([-1 - 1j, 0, 1j, -1])
        batch = [jordan, *rand_r3, parallelogram, diag]
        names = (["[[0, 1], [0, 0]]"] + [f"random real 3x3 #{k}, seed {seed}" for k in range(3)]
                 + ["diag(-1-i, 0, i, -1)", "[[i, 0], [0, 2i]]"])
        reports.append(check_certificate_soundness(batch, m, count, seed, names=names))
    return reports
