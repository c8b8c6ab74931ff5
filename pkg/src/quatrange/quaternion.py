"""Quaternion arithmetic, similarity classes, projections and sphere sampling.

Scalar values use the immutable :class:`Quaternion`.  Bulk work (sampling
numerical ranges) uses plain ``float`` arrays whose last axis holds the four
components ``(a0, a1, a2, a3)`` of ``a0 + a1 i + a2 j + a3 k``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Quaternion:
    a0: float = 0.0
    a1: float = 0.0
    a2: float = 0.0
    a3: float = 0.0

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "a3"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @classmethod
    def coerce(cls, value) -> Quaternion:
        """Build a quaternion from a Quaternion, real, complex, string or 4-sequence."""
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, str):
            return parse_quaternion(value)
        if isinstance(value, (int, float, np.integer, np.floating)):
            return cls(float(value))
        if isinstance(value, (complex, np.complexfloating)):
            return cls(value.real, value.imag)
        arr = np.asarray(value, dtype=float)
        if arr.shape != (4,):
            raise TypeError(f"cannot interpret {value!r} as a quaternion")
        return cls(*arr)

    @classmethod
    def from_array(cls, arr) -> Quaternion:
        return cls(*np.asarray(arr, dtype=float)[:4])

    def to_array(self) -> np.ndarray:
        return np.array([self.a0, self.a1, self.a2, self.a3])

    @property
    def real(self) -> float:
        return self.a0

    @property
    def imag(self) -> Quaternion:
        return Quaternion(0.0, self.a1, self.a2, self.a3)

    def imag_norm(self) -> float:
        return math.sqrt(self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3)

    def norm2(self) -> float:
        return self.a0 * self.a0 + self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3

    def __abs__(self) -> float:
        return math.sqrt(self.norm2())

    def conj(self) -> Quaternion:
        return Quaternion(self.a0, -self.a1, -self.a2, -self.a3)

    def inverse(self) -> Quaternion:
        n2 = self.norm2()
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        c = self.conj()
        return Quaternion(c.a0 / n2, c.a1 / n2, c.a2 / n2, c.a3 / n2)

    def is_complex(self, tol: float = 0.0) -> bool:
        return abs(self.a2) <= tol and abs(self.a3) <= tol

    def is_real(self, tol: float = 0.0) -> bool:
        return self.is_complex(tol) and abs(self.a1) <= tol

    def __add__(self, other):
        o = _as_quaternion(other)
        if o is None:
            return NotImplemented
        return Quaternion(self.a0 + o.a0, self.a1 + o.a1, self.a2 + o.a2, self.a3 + o.a3)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.a0, -self.a1, -self.a2, -self.a3)

    def __sub__(self, other):
        o = _as_quaternion(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_quaternion(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _as_quaternion(other)
        if o is None:
            return NotImplemented
        return multiply(self, o)

    def __rmul__(self, other):
        o = _as_quaternion(other)
        if o is None:
            return NotImplemented
        return multiply(o, self)

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.integer, np.floating)):
            return Quaternion(self.a0 / other, self.a1 / other, self.a2 / other, self.a3 / other)
        o = _as_quaternion(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        return abs(self - _as_quaternion(other)) <= tol

    def __str__(self) -> str:
        return format_quaternion(self)


def _as_quaternion(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float, complex, np.integer, np.floating, np.complexfloating)):
        return Quaternion.coerce(value)
    return None


ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def multiply(p: Quaternion, q: Quaternion) -> Quaternion:
    return Quaternion(
        p.a0 * q.a0 - p.a1 * q.a1 - p.a2 * q.a2 - p.a3 * q.a3,
        p.a0 * q.a1 + p.a1 * q.a0 + p.a2 * q.a3 - p.a3 * q.a2,
        p.a0 * q.a2 - p.a1 * q.a3 + p.a2 * q.a0 + p.a3 * q.a1,
        p.a0 * q.a3 + p.a1 * q.a2 - p.a2 * q.a1 + p.a3 * q.a0,
    )


def similar(p, q, tol: float = DEFAULT_TOL) -> bool:
    """True when ``p`` and ``q`` share real part and imaginary-part norm."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    p, q = Quaternion.coerce(p), Quaternion.coerce(q)
    return abs(p.a0 - q.a0) <= tol and abs(p.imag_norm() - q.imag_norm()) <= tol


def canonical_rep(q) -> complex:
    """The element of the similarity class of ``q`` in the closed upper half-plane."""
    q = Quaternion.coerce(q)
    return complex(q.a0, q.imag_norm())


def project(q, field: str):
    """Coordinate projection onto R (``a0``) or C (``a0 + a1 i``)."""
    q = Quaternion.coerce(q)
    field = field.upper()
    if field == "R":
        return q.a0
    if field == "C":
        return complex(q.a0, q.a1)
    raise ValueError(f"unknown projection target {field!r}; expected 'R' or 'C'")


# ---------------------------------------------------------------------------
# array kernels, last axis = (a0, a1, a2, a3)


def qmul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Broadcasting Hamilton product of quaternion arrays."""
    p0, p1, p2, p3 = np.moveaxis(np.asarray(p, dtype=float), -1, 0)
    q0, q1, q2, q3 = np.moveaxis(np.asarray(q, dtype=float), -1, 0)
    return np.stack(
        [
            p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
            p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
            p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
            p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0,
        ],
        axis=-1,
    )


def qconj(q: np.ndarray) -> np.ndarray:
    out = np.array(q, dtype=float, copy=True)
    out[..., 1:] *= -1.0
    return out


def qabs(q: np.ndarray) -> np.ndarray:
    return np.sqrt(np.sum(np.asarray(q, dtype=float) ** 2, axis=-1))


def canonical_reps(q: np.ndarray) -> np.ndarray:
    """Vectorised :func:`canonical_rep`."""
    q = np.asarray(q, dtype=float)
    return q[..., 0] + 1j * np.sqrt(np.sum(q[..., 1:] ** 2, axis=-1))


def to_quaternion_array(values) -> np.ndarray:
    """Convert real/complex arrays or nested lists of quaternion-like values.

    Numeric arrays are read entrywise as real or complex scalars; the result
    gains a trailing axis of length 4.
    """
    if not isinstance(values, np.ndarray):
        try:
            values = np.asarray(values)
        except ValueError:
            values = np.asarray(values, dtype=object)
    if values.dtype != object and values.dtype.kind in "biufc":
        out = np.zeros(values.shape + (4,))
        out[..., 0] = values.real
        out[..., 1] = values.imag
        return out
    arr = np.asarray(values, dtype=object)
    flat = [Quaternion.coerce(v).to_array() for v in arr.reshape(-1)]
    return np.array(flat, dtype=float).reshape(arr.shape + (4,))


# ---------------------------------------------------------------------------
# sampling


def sample_unit_spheres(n: int, count: int, rng) -> np.ndarray:
    """``count`` uniform unit vectors of H^n as an array of shape (count, n, 4).

    Normalises standard Gaussian draws in R^{4n}.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(rng)
    x = rng.standard_normal((count, n, 4))
    norms = np.sqrt(np.sum(x * x, axis=(1, 2)))
    return x / norms[:, None, None]


def sample_unit_sphere(n: int, seed: int) -> list[Quaternion]:
    """One uniform unit vector of H^n, deterministic in ``seed``."""
    x = sample_unit_spheres(n, 1, seed)[0]
    return [Quaternion.from_array(row) for row in x]


def worker_seed(seed: int, worker: int) -> int:
    """Seed used by parallel worker ``worker`` for base seed ``seed``."""
    return seed + worker


# ---------------------------------------------------------------------------
# text form


_NUMBER = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_TERM = re.compile(rf"([+-])?({_NUMBER})?\*?([ijk])?")
_GAP = re.compile(r"[\w.]\s+[\w.]")


def parse_quaternion(text: str) -> Quaternion:
    """Parse ``"a0+a1i+a2j+a3k"``; terms are optional and may repeat.

    >>> parse_quaternion("2+3j-4k")
    Quaternion(a0=2.0, a1=0.0, a2=3.0, a3=-4.0)
    >>> parse_quaternion("-i")
    Quaternion(a0=0.0, a1=-1.0, a2=0.0, a3=0.0)
    """
    if _GAP.search(text):
        raise ValueError(f"whitespace inside a term in {text!r}")
    s = "".join(text.split())
    if not s:
        raise ValueError("empty quaternion literal")
    coeffs = [0.0, 0.0, 0.0, 0.0]
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, number, unit = m.groups() if m else (None, None, None)
        if not m or m.end() == pos or (number is None and unit is None):
            raise ValueError(f"cannot parse quaternion {text!r} at position {pos}")
        if sign is None and not first:
            raise ValueError(f"missing sign before term at position {pos} in {text!r}")
        value = float(number) if number is not None else 1.0
        if sign == "-":
            value = -value
        coeffs["_ijk".index(unit) if unit else 0] += value
        pos = m.end()
        first = False
    return Quaternion(*coeffs)


def format_real(x: float) -> str:
    """Shortest round-trip decimal for ``x``, without a redundant ``.0``."""
    x = float(x)
    if x == 0.0:
        return "0"
    s = repr(x)
    if s.endswith(".0"):
        s = s[:-2]
    return s


def format_quaternion(q: Quaternion) -> str:
    parts = []
    for value, unit in zip((q.a0, q.a1, q.a2, q.a3), ("", "i", "j", "k")):
        if value == 0.0:
            continue
        text = format_real(abs(value))
        if unit and text == "1":
            text = ""
        sign = "-" if value < 0 else "+"
        parts.append((sign, text + unit))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, term in parts[1:]:
        out += sign + term
    return out
