"""Barycentric neural networks.

A local network ``BNN_sigma`` evaluates barycentric interpolation of vertex
values inside its simplex and 0 outside, using only ReLU and the strict step
``step*``.  The global network averages every local network whose gate is
open at the query point.  In one dimension a :class:`BaseConfiguration`
(sorted abscissas and their values) fully determines the global network.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .geometry import (
    INSIDE_TOL,
    BarycentricCoordinates,
    Interval,
    Simplex,
    barycentric_coords,
    interval_coords,
)


def relu(t):
    return np.maximum(0.0, t)


def step_star(t):
    # strict at 0: step*(0) == 0
    return np.where(np.asarray(t) > 0, 1.0, 0.0)


def activations(t: float) -> tuple[float, float]:
    """``(ReLU(t), step*(t))`` for a scalar."""
    return float(relu(t)), float(step_star(t))


def _gate(t: np.ndarray) -> np.ndarray:
    """Sum of ``step*(-t_j) + step*(t_j - 1)`` over the last axis; 0 iff inside."""
    return np.sum(step_star(-t) + step_star(t - 1.0), axis=-1)


@dataclass(frozen=True, eq=False)
class LocalBNN:
    simplex: Simplex
    values: np.ndarray

    def __init__(self, simplex: Simplex, values):
        g = np.array(values, dtype=float).ravel()
        if len(g) != simplex.vertices.shape[0]:
            raise ValueError(
                f"{len(g)} values for a simplex with {simplex.vertices.shape[0]} vertices"
            )
        g.setflags(write=False)
        object.__setattr__(self, "simplex", simplex)
        object.__setattr__(self, "values", g)

    def coords(self, p) -> BarycentricCoordinates:
        if self.simplex.dim == 1:
            v = self.simplex.vertices[:, 0]
            x = float(np.asarray(p, dtype=float).ravel()[0])
            if v[0] < v[1]:
                return interval_coords(Interval(v[0], v[1]), x)
            rev = interval_coords(Interval(v[1], v[0]), x)
            return BarycentricCoordinates(rev.t[::-1].copy())
        c = barycentric_coords(self.simplex, p)
        t = np.array(c.t)
        # elimination round-off would otherwise close the gate on shared faces
        t[np.abs(t) <= INSIDE_TOL] = 0.0
        t[np.abs(t - 1.0) <= INSIDE_TOL] = 1.0
        return BarycentricCoordinates(t)


def eval_local(net: LocalBNN, coords: BarycentricCoordinates | Sequence[float]) -> float:
    """Evaluate the activation composition of a local network.

    ``sum_i ReLU(1 - ReLU(1 - t_i) - sum_j (step*(-t_j) + step*(t_j - 1))) * g_i``
    """
    t = np.asarray(coords.t if isinstance(coords, BarycentricCoordinates) else coords, dtype=float)
    if t.shape != net.values.shape:
        raise ValueError(f"{t.shape[0]} coordinates for a local network with {len(net.values)} vertices")
    hidden = relu(1.0 - relu(1.0 - t) - _gate(t))
    return float(np.sum(hidden * net.values))


def eval_local_branch(net: LocalBNN, coords: BarycentricCoordinates | Sequence[float]) -> float:
    """Reference evaluation: plain interpolation inside, 0 outside."""
    t = np.asarray(coords.t if isinstance(coords, BarycentricCoordinates) else coords, dtype=float)
    if np.all((t >= 0.0) & (t <= 1.0)):
        return float(t @ net.values)
    return 0.0


@dataclass(frozen=True, eq=False)
class BaseConfiguration:
    """Sorted base points ``(xs, ys)`` of a 1-D CPLF on ``[xs[0], xs[-1]]``."""

    xs: np.ndarray
    ys: np.ndarray

    def __init__(self, xs, ys):
        xs = np.array(xs, dtype=float).ravel()
        ys = np.array(ys, dtype=float).ravel()
        if len(xs) != len(ys):
            raise ValueError(f"xs has {len(xs)} entries, ys has {len(ys)}")
        if len(xs) < 2:
            raise ValueError("a base configuration needs at least 2 points")
        if not np.all(np.diff(xs) > 0):
            raise ValueError("base abscissas must be strictly increasing")
        if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
            raise ValueError("base points must be finite")
        xs.setflags(write=False)
        ys.setflags(write=False)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    @property
    def domain(self) -> tuple[float, float]:
        return float(self.xs[0]), float(self.xs[-1])

    def __len__(self):
        return len(self.xs)

    def to_json(self) -> str:
        return json.dumps({"xs": [float(v) for v in self.xs], "ys": [float(v) for v in self.ys]})

    @classmethod
    def from_json(cls, text: str) -> "BaseConfiguration":
        obj = json.loads(text)
        return cls(obj["xs"], obj["ys"])

    def save(self, path) -> None:
        Path(path).write_text(self.to_json() + "\n")

    @classmethod
    def load(cls, path) -> "BaseConfiguration":
        return cls.from_json(Path(path).read_text())


@dataclass(frozen=True, eq=False)
class GlobalBNN:
    locals: tuple
    base: BaseConfiguration | None = None

    def __post_init__(self):
        if not self.locals:
            raise ValueError("a global network needs at least one local network")
        object.__setattr__(self, "locals", tuple(self.locals))


def from_base_config(cfg: BaseConfiguration) -> GlobalBNN:
    nets = [
        LocalBNN(Simplex([[cfg.xs[k]], [cfg.xs[k + 1]]]), [cfg.ys[k], cfg.ys[k + 1]])
        for k in range(len(cfg) - 1)
    ]
    return GlobalBNN(tuple(nets), base=cfg)


def locate(cfg: BaseConfiguration, x) -> tuple[np.ndarray, np.ndarray]:
    """Segment index and local parameter ``t`` for each abscissa in ``x``.

    Points on an interior base point go to the segment on their right; the
    right endpoint goes to the last segment.
    """
    x = np.asarray(x, dtype=float)
    k = np.clip(np.searchsorted(cfg.xs, x, side="right") - 1, 0, len(cfg.xs) - 2)
    t = (x - cfg.xs[k]) / (cfg.xs[k + 1] - cfg.xs[k])
    return k, t


def evaluate(cfg: BaseConfiguration, x) -> np.ndarray:
    """Vectorised global network on a 1-D base configuration.

    Only the local network found by binary search is evaluated, through the
    same activation composition as :func:`eval_local`.  Any other open local
    shares a base point and returns the identical value, so the average is
    unchanged.
    """
    x = np.asarray(x, dtype=float)
    k, t = locate(cfg, x)
    left = (cfg.xs[k + 1] - x) / (cfg.xs[k + 1] - cfg.xs[k])
    coords = np.stack([left, t], axis=-1)
    hidden = relu(1.0 - relu(1.0 - coords) - _gate(coords)[..., None])
    return hidden[..., 0] * cfg.ys[k] + hidden[..., 1] * cfg.ys[k + 1]


def eval_global(net: GlobalBNN, p, verbatim: bool = False) -> float:
    """Average of the open local networks at ``p``; 0 outside the complex.

    A local counts toward the average when its gate is open, i.e. every
    barycentric coordinate lies in ``[0, 1]``.  This matches counting strictly
    positive outputs whenever all vertex values are positive and stays correct
    for zero or negative values.
    """
    if net.base is not None and not verbatim:
        return float(evaluate(net.base, float(np.asarray(p, dtype=float).ravel()[0])))
    total, count = 0.0, 0
    for loc in net.locals:
        c = loc.coords(p)
        if _gate(c.t) == 0:
            count += 1
            total += eval_local(loc, c)
    return total / count if count else 0.0


@dataclass(frozen=True, eq=False)
class CplfSegment:
    interval: Interval
    slope: np.ndarray
    intercept: float

    def __call__(self, x):
        return self.slope[0] * np.asarray(x, dtype=float) + self.intercept


def to_segments(cfg: BaseConfiguration) -> list[CplfSegment]:
    out = []
    for k in range(len(cfg) - 1):
        a0, a1 = cfg.xs[k], cfg.xs[k + 1]
        m = (cfg.ys[k + 1] - cfg.ys[k]) / (a1 - a0)
        out.append(CplfSegment(Interval(a0, a1), np.array([m]), float(cfg.ys[k] - m * a0)))
    return out


def approximation_error(cfg: BaseConfiguration, x, y) -> float:
    """Max-norm error ``max |f(p) - (m_k p + c_k)|`` over samples in each segment.

    Samples on a shared base point are checked against both adjacent pieces.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    err = 0.0
    for seg in to_segments(cfg):
        mask = (x >= seg.interval.a) & (x <= seg.interval.b)
        if mask.any():
            err = max(err, float(np.max(np.abs(y[mask] - seg(x[mask])))))
    return err
