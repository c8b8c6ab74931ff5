"""Matrices over R, C and H, the complex adjoint map, quadratic forms and a
Jacobi eigensolver for Hermitian matrices.

Vectors in H^n are columns over a right H-module: scalars multiply vector
components from the right and matrix entries act from the left, so the
quadratic form is ``sum_m conj(x_m) * (A x)_m``.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .quaternion import (
    Quaternion,
    qabs,
    qconj,
    qmul,
    to_quaternion_array,
)

FIELDS = ("R", "C", "H")


class NormalizationError(ValueError):
    """A vector handed to a quadratic form is not a unit vector."""


class FieldError(ValueError):
    """An operation received a matrix over a field it does not support."""


class QMatrix:
    """Square matrix with quaternion entries stored as an (n, n, 4) float array.

    ``field`` is the finest of R, C, H containing every entry.
    """

    __slots__ = ("data",)

    def __init__(self, entries):
        if isinstance(entries, QMatrix):
            data = entries.data.copy()
        elif isinstance(entries, np.ndarray) and entries.ndim == 3 and entries.dtype.kind in "iuf":
            data = entries.astype(float)
        else:
            data = to_quaternion_array(entries)
        if data.ndim != 3 or data.shape[0] != data.shape[1] or data.shape[2] != 4:
            raise ValueError(f"expected a square matrix of quaternions, got array of shape {data.shape}")
        data.setflags(write=False)
        self.data = data

    @classmethod
    def from_complex(cls, arr) -> QMatrix:
        return cls(np.asarray(arr, dtype=complex))

    @classmethod
    def from_parts(cls, a1, a2) -> QMatrix:
        """The quaternion matrix ``A1 + A2 j`` for complex ``A1``, ``A2``."""
        a1 = np.asarray(a1, dtype=complex)
        a2 = np.asarray(a2, dtype=complex)
        data = np.stack([a1.real, a1.imag, a2.real, a2.imag], axis=-1)
        return cls(data)

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n, self.n)

    @property
    def field(self) -> str:
        d = self.data
        if np.any(d[..., 2:] != 0.0):
            return "H"
        if np.any(d[..., 1] != 0.0):
            return "C"
        return "R"

    def __getitem__(self, idx) -> Quaternion:
        r, c = idx
        return Quaternion.from_array(self.data[r, c])

    def parts(self) -> tuple[np.ndarray, np.ndarray]:
        """Complex ``(A1, A2)`` with ``A = A1 + A2 j``."""
        d = self.data
        return d[..., 0] + 1j * d[..., 1], d[..., 2] + 1j * d[..., 3]

    def to_complex(self) -> np.ndarray:
        if self.field == "H":
            raise FieldError("matrix has quaternionic entries; no complex form")
        return self.data[..., 0] + 1j * self.data[..., 1]

    def conjugate_transpose(self) -> QMatrix:
        return QMatrix(qconj(np.swapaxes(self.data, 0, 1)))

    @property
    def H(self) -> QMatrix:
        return self.conjugate_transpose()

    def transpose(self) -> QMatrix:
        return QMatrix(np.swapaxes(self.data, 0, 1).copy())

    @property
    def T(self) -> QMatrix:
        return self.transpose()

    def conjugate(self) -> QMatrix:
        return QMatrix(qconj(self.data))

    def frobenius_norm(self) -> float:
        return float(np.sqrt(np.sum(self.data**2)))

    def __matmul__(self, other: QMatrix) -> QMatrix:
        prod = qmul(self.data[:, :, None, :], other.data[None, :, :, :])
        return QMatrix(prod.sum(axis=1))

    def __add__(self, other: QMatrix) -> QMatrix:
        return QMatrix(self.data + other.data)

    def __sub__(self, other: QMatrix) -> QMatrix:
        return QMatrix(self.data - other.data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.data.shape == other.data.shape and np.array_equal(self.data, other.data)

    __hash__ = None

    def allclose(self, other: QMatrix, tol: float = 1e-12) -> bool:
        return self.data.shape == other.data.shape and bool(np.all(np.abs(self.data - other.data) <= tol))

    def __repr__(self) -> str:
        rows = ["[" + ", ".join(str(self[r, c]) for c in range(self.n)) + "]" for r in range(self.n)]
        return f"QMatrix({self.field}, [{', '.join(rows)}])"


def as_qmatrix(A) -> QMatrix:
    return A if isinstance(A, QMatrix) else QMatrix(A)


def complex_array(A) -> np.ndarray:
    """Complex ndarray view of a real or complex matrix; quaternionic input is rejected."""
    if isinstance(A, QMatrix):
        return A.to_complex()
    arr = np.asarray(A) if not isinstance(A, list) else None
    if arr is None or arr.dtype == object or arr.ndim == 3:
        return QMatrix(A).to_complex()
    return arr.astype(complex)


def chi(A) -> QMatrix:
    """The 2n x 2n complex matrix ``[[A1, A2], [-conj(A2), conj(A1)]]``."""
    a1, a2 = as_qmatrix(A).parts()
    top = np.hstack([a1, a2])
    bottom = np.hstack([-a2.conj(), a1.conj()])
    return QMatrix.from_complex(np.vstack([top, bottom]))


def _vector_array(x) -> np.ndarray:
    if isinstance(x, np.ndarray) and x.ndim == 2 and x.shape[-1] == 4 and x.dtype.kind in "iuf":
        return x.astype(float)
    return to_quaternion_array(list(x) if not isinstance(x, np.ndarray) else x)


def quadratic_forms(A, X: np.ndarray) -> np.ndarray:
    """Batched ``x^* A x`` for unit vectors stacked in ``X`` of shape (count, n, 4).

    No normalisation check; callers supply unit vectors.
    """
    data = as_qmatrix(A).data
    X = np.asarray(X, dtype=float)
    # (Ax)_m = sum_l A[m, l] x_l
    ax = qmul(data[None, :, :, :], X[:, None, :, :]).sum(axis=2)
    return qmul(qconj(X), ax).sum(axis=1)


def quadratic_form(A, x, tol: float = 1e-9) -> Quaternion:
    """``x^* A x`` for a unit vector ``x`` of quaternions (or reals/complexes)."""
    A = as_qmatrix(A)
    xv = _vector_array(x)
    if xv.shape != (A.n, 4):
        raise ValueError(f"vector has shape {xv.shape[:-1]}, matrix is {A.n}x{A.n}")
    norm = float(np.sqrt(np.sum(xv**2)))
    if abs(norm - 1.0) > tol:
        raise NormalizationError(f"vector norm is {norm!r}, expected 1 within {tol}")
    return Quaternion.from_array(quadratic_forms(A, xv[None])[0])


def hermitian_part(A, theta: float) -> np.ndarray:
    """``(e^{-i theta} A + e^{i theta} A^*) / 2`` for real or complex ``A``.

    Accepts an array of angles, returning a stack of matrices.
    """
    a = complex_array(A)
    w = np.exp(-1j * np.asarray(theta, dtype=float))[..., None, None]
    h = 0.5 * (w * a + np.conj(w) * a.conj().T)
    return 0.5 * (h + np.conj(np.swapaxes(h, -1, -2)))


def _jacobi_sweeps(H: np.ndarray, rel_tol: float, max_sweeps: int):
    """Cyclic complex Jacobi on a stack (B, n, n); returns diagonal and rotations."""
    A = H.copy()
    B, n, _ = A.shape
    V = np.broadcast_to(np.eye(n, dtype=complex), A.shape).copy()
    scale = np.maximum(1.0, np.sqrt(np.sum(np.abs(A) ** 2, axis=(1, 2))))
    thresh = rel_tol * scale
    offmask = ~np.eye(n, dtype=bool)
    pairs = list(combinations(range(n), 2))
    for _ in range(max_sweeps):
        off = np.max(np.abs(A[:, offmask]), axis=1) if n > 1 else np.zeros(B)
        if np.all(off < thresh):
            break
        for p, q in pairs:
            apq = A[:, p, q]
            mag = np.abs(apq)
            live = mag > 0.0
            if not live.any():
                continue
            safe = np.where(live, mag, 1.0)
            phase = np.where(live, apq / safe, 1.0)
            tau = (A[:, q, q].real - A[:, p, p].real) / (2.0 * safe)
            sgn = np.where(tau >= 0.0, 1.0, -1.0)
            t = sgn / (np.abs(tau) + np.hypot(1.0, tau))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = np.where(live, t * c, 0.0)
            c = np.where(live, c, 1.0)
            # J = diag(1, conj(phase)) @ [[c, s], [-s, c]]
            J = np.empty((B, 2, 2), dtype=complex)
            J[:, 0, 0] = c
            J[:, 0, 1] = s
            J[:, 1, 0] = -s * phase.conj()
            J[:, 1, 1] = c * phase.conj()
            idx = [p, q]
            A[:, :, idx] = A[:, :, idx] @ J
            A[:, idx, :] = np.conj(np.swapaxes(J, 1, 2)) @ A[:, idx, :]
            A[:, p, q] = 0.0
            A[:, q, p] = 0.0
            A[:, p, p] = A[:, p, p].real
            A[:, q, q] = A[:, q, q].real
            V[:, :, idx] = V[:, :, idx] @ J
    else:
        off = np.max(np.abs(A[:, offmask]), axis=1) if n > 1 else np.zeros(B)
        if not np.all(off < thresh):
            raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    return np.real(np.diagonal(A, axis1=1, axis2=2)).copy(), V


def _normalize_phase(V: np.ndarray) -> np.ndarray:
    # make the first largest-magnitude component of each eigenvector real positive
    idx = np.argmax(np.abs(V) > (1.0 - 1e-9) * np.max(np.abs(V), axis=-2, keepdims=True), axis=-2)
    lead = np.take_along_axis(V, idx[..., None, :], axis=-2)
    return V * (np.abs(lead) / lead)


def hermitian_eigs(H, tol: float = 1e-12, max_sweeps: int = 100):
    """Eigen-decomposition of a Hermitian matrix (or a stack of them) by cyclic Jacobi.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues ascending and
    unit eigenvectors in the columns.  Rotations continue until every
    off-diagonal magnitude is below ``tol * max(1, ||H||_F)``.  Equal
    eigenvalues are ordered by the lexicographic order of their (phase
    normalised) eigenvectors.
    """
    if isinstance(H, QMatrix):
        H = H.to_complex()
    H = np.asarray(H, dtype=complex)
    if H.ndim < 2 or H.shape[-1] != H.shape[-2]:
        raise ValueError("expected a square matrix or a stack of square matrices")
    asym = np.max(np.abs(H - np.conj(np.swapaxes(H, -1, -2)))) if H.size else 0.0
    if asym > 1e-12 * max(1.0, float(np.max(np.abs(H), initial=0.0))):
        raise ValueError(f"matrix is not Hermitian (asymmetry {asym:.3g})")
    single = H.ndim == 2
    stack = H.reshape((-1,) + H.shape[-2:])
    stack = 0.5 * (stack + np.conj(np.swapaxes(stack, -1, -2)))
    w, V = _jacobi_sweeps(stack, tol, max_sweeps)
    V = _normalize_phase(V)
    order = np.argsort(w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    V = np.take_along_axis(V, order[:, None, :], axis=2)
    if single:
        w, V = _break_ties(w[0], V[0], tol * max(1.0, float(np.linalg.norm(stack[0]))))
        return w, V
    return w.reshape(H.shape[:-1]), V.reshape(H.shape)


def _break_ties(w: np.ndarray, V: np.ndarray, tol: float):
    n = len(w)
    order = list(range(n))
    i = 0
    while i < n:
        j = i + 1
        while j < n and w[j] - w[j - 1] <= tol:
            j += 1
        if j - i > 1:
            block = order[i:j]
            block.sort(key=lambda c: tuple(np.column_stack([V[:, c].real, V[:, c].imag]).ravel()))
            order[i:j] = block
        i = j
    return w[order], V[:, order]


def top_eigenpairs(H: np.ndarray, tol: float = 1e-12):
    """Largest eigenvalue and a matching unit eigenvector for each matrix of a stack."""
    w, V = hermitian_eigs(H, tol)
    return w[..., -1], V[..., :, -1]


def is_normal(A, tol: float = 1e-9) -> bool:
    """``||A A^* - A^* A||_F <= tol * ||A||_F^2``."""
    a = complex_array(A)
    comm = a @ a.conj().T - a.conj().T @ a
    return float(np.linalg.norm(comm)) <= tol * float(np.linalg.norm(a)) ** 2


def vector_norms(X: np.ndarray) -> np.ndarray:
    return np.sqrt(np.sum(qabs(X) ** 2, axis=-1))
