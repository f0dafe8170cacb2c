"""Simplices and barycentric coordinates.

General-dimension coordinates are obtained by solving the augmented
``(d+1) x (d+1)`` system ``[v_0 ... v_d; 1 ... 1] t = [p; 1]`` with Gaussian
elimination.  One-dimensional intervals have a closed form.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

INSIDE_TOL = 1e-12
SINGULAR_RTOL = 1e-10


class SingularSimplex(ValueError):
    """Vertices are not affinely independent (numerically)."""


def _solve_augmented(vertices: np.ndarray, rhs: np.ndarray) -> tuple[np.ndarray, float]:
    """Gaussian elimination with partial pivoting.

    Returns the solution and the determinant of the augmented matrix.  The
    system is shifted so the first vertex sits at the origin; solution and
    determinant are unchanged, cancellation far from the origin is not.
    """
    d = vertices.shape[1]
    origin = vertices[0]
    m = np.empty((d + 1, d + 2))
    m[:d, : d + 1] = (vertices - origin).T
    m[d, : d + 1] = 1.0
    m[:d, d + 1] = rhs[:d] - origin
    m[d, d + 1] = rhs[d]
    det = 1.0
    for col in range(d + 1):
        piv = col + int(np.argmax(np.abs(m[col:, col])))
        if m[piv, col] == 0.0:
            return np.full(d + 1, np.nan), 0.0
        if piv != col:
            m[[col, piv]] = m[[piv, col]]
            det = -det
        det *= m[col, col]
        m[col + 1 :] -= np.outer(m[col + 1 :, col] / m[col, col], m[col])
    t = np.empty(d + 1)
    for row in range(d, -1, -1):
        t[row] = (m[row, d + 1] - m[row, row + 1 : d + 1] @ t[row + 1 :]) / m[row, row]
    return t, det


@dataclass(frozen=True, eq=False)
class Simplex:
    """A d-simplex in R^d given by its d+1 vertices (one per row)."""

    vertices: np.ndarray

    def __init__(self, vertices):
        v = np.array(vertices, dtype=float)
        if v.ndim == 1:
            v = v.reshape(-1, 1)
        if v.ndim != 2 or v.shape[0] != v.shape[1] + 1:
            raise ValueError(f"a d-simplex needs d+1 points in R^d, got shape {v.shape}")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        _, det = _solve_augmented(v, np.zeros(v.shape[1] + 1))
        scale = float(np.max(np.abs(v)))
        if scale == 0.0 or abs(det) < SINGULAR_RTOL * scale ** self.dim:
            raise SingularSimplex(f"augmented matrix is singular (det={det:.3g})")

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]


@dataclass(frozen=True)
class Interval:
    a: float
    b: float

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"interval needs a < b, got [{self.a}, {self.b}]")

    def as_simplex(self) -> Simplex:
        return Simplex([[self.a], [self.b]])


@dataclass(frozen=True, eq=False)
class BarycentricCoordinates:
    t: np.ndarray

    @property
    def inside(self) -> bool:
        return bool(np.all(self.t >= -INSIDE_TOL))

    def __len__(self):
        return len(self.t)

    def __iter__(self):
        return iter(self.t)


def barycentric_coords(simplex: Simplex, p: Sequence[float] | float) -> BarycentricCoordinates:
    """Barycentric coordinates of ``p`` with respect to ``simplex``.

    >>> barycentric_coords(Simplex([[0, 0], [1, 0], [0, 1]]), [0.25, 0.25]).t
    array([0.5 , 0.25, 0.25])
    """
    p = np.atleast_1d(np.asarray(p, dtype=float))
    if p.shape != (simplex.dim,):
        raise ValueError(f"point has shape {p.shape}, simplex lives in R^{simplex.dim}")
    t, det = _solve_augmented(simplex.vertices, np.append(p, 1.0))
    if det == 0.0:
        raise SingularSimplex("zero pivot during elimination")
    t.setflags(write=False)
    return BarycentricCoordinates(t)


def interval_coords(iv: Interval, x: float) -> BarycentricCoordinates:
    """Closed-form coordinates ``((b - x) / w, (x - a) / w)`` with ``w = b - a``.

    Each weight is measured from its own vertex, so a point just past an
    endpoint always gets a negative weight instead of rounding to 0 or 1.
    """
    w = iv.b - iv.a
    out = np.array([(iv.b - x) / w, (x - iv.a) / w])
    out.setflags(write=False)
    return BarycentricCoordinates(out)
