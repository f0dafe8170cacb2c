"""0-dimensional lower-star persistence of sampled 1-D functions.

The samples, sorted by abscissa, are the vertices of a path complex.  Vertices
enter the filtration in increasing ``(value, index)`` order; a vertex whose
neighbours are both absent starts a component, and a vertex joining two
components kills the younger one (elder rule).  The surviving component is
reported as the essential bar ``[min f, max f)``.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class EmptyInput(ValueError):
    pass


class DegenerateBarcode(ArithmeticError):
    """Total bar length is zero, so bar probabilities are undefined."""


class FunctionConsistencyViolation(ValueError):
    """Two samples share an abscissa but not an ordinate."""


@dataclass(frozen=True, eq=False)
class PointCloudFunction:
    """Samples ``(x_i, y_i)`` of a function, kept sorted by ``x`` without duplicates."""

    x: np.ndarray
    y: np.ndarray

    def __init__(self, x, y):
        x = np.array(x, dtype=float).ravel()
        y = np.array(y, dtype=float).ravel()
        if len(x) != len(y):
            raise ValueError(f"{len(x)} abscissas but {len(y)} ordinates")
        if len(x) == 0:
            raise EmptyInput("point cloud is empty")
        order = np.lexsort((y, x))
        x, y = x[order], y[order]
        same_x = x[1:] == x[:-1]
        clash = same_x & (y[1:] != y[:-1])
        if clash.any():
            i = int(np.argmax(clash))
            raise FunctionConsistencyViolation(
                f"x={x[i]!r} has values {y[i]!r} and {y[i + 1]!r}"
            )
        keep = np.concatenate([[True], ~same_x])
        x, y = x[keep], y[keep]
        x.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_points(cls, points: Iterable[tuple[float, float]]) -> "PointCloudFunction":
        pts = list(points)
        if not pts:
            raise EmptyInput("point cloud is empty")
        x, y = zip(*pts)
        return cls(x, y)

    def __len__(self):
        return len(self.x)

    @property
    def domain(self) -> tuple[float, float]:
        return float(self.x[0]), float(self.x[-1])


@dataclass(frozen=True)
class PersistenceBar:
    birth: float
    death: float
    birth_index: int
    death_index: int
    essential: bool = False

    @property
    def length(self) -> float:
        return self.death - self.birth


@dataclass(frozen=True)
class Barcode:
    bars: tuple[PersistenceBar, ...]

    def __len__(self):
        return len(self.bars)

    def __iter__(self):
        return iter(self.bars)

    @property
    def lengths(self) -> np.ndarray:
        return np.array([b.length for b in self.bars], dtype=float)

    @property
    def essential(self) -> PersistenceBar:
        return next(b for b in self.bars if b.essential)

    def pairs(self) -> list[tuple[float, float]]:
        return sorted((b.birth, b.death) for b in self.bars)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["birth", "death", "essential"])
        for b in self.bars:
            w.writerow([repr(float(b.birth)), repr(float(b.death)), int(b.essential)])
        return buf.getvalue()

    @staticmethod
    def read_csv(text: str) -> list[tuple[float, float, bool]]:
        rows = csv.DictReader(io.StringIO(text))
        return [(float(r["birth"]), float(r["death"]), r["essential"] == "1") for r in rows]


def _values(data) -> np.ndarray:
    if isinstance(data, PointCloudFunction):
        return np.asarray(data.y)
    return np.asarray(data, dtype=float).ravel()


def lower_star_barcode(data: PointCloudFunction | Sequence[float]) -> Barcode:
    """Barcode of the lower-star filtration on the path through the samples.

    ``data`` is a point cloud or the vertex values along the path.  Ties are
    broken by vertex index.  Zero-length finite pairs, which only arise from
    tie-breaking inside plateaus, are dropped.  Bars are returned sorted by
    birth index.
    """
    y = _values(data)
    m = len(y)
    if m == 0:
        raise EmptyInput("cannot compute a barcode of an empty cloud")
    order = np.lexsort((np.arange(m), y))
    rank = np.empty(m, dtype=np.int64)
    rank[order] = np.arange(m)

    parent = np.full(m, -1, dtype=np.int64)  # -1 means not yet in the filtration

    def find(i):
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return int(root)

    bars = []
    for v in order:
        v = int(v)
        parent[v] = v
        for u in (v - 1, v + 1):
            if 0 <= u < m and parent[u] != -1:
                ru, rv = find(u), find(v)
                if ru == rv:
                    continue
                # roots are always the component's first vertex, i.e. its minimum
                old, young = (ru, rv) if rank[ru] < rank[rv] else (rv, ru)
                if y[v] > y[young]:
                    bars.append(PersistenceBar(float(y[young]), float(y[v]), young, v))
                parent[young] = old
    root = find(int(order[0]))
    top = int(order[-1])
    bars.append(PersistenceBar(float(y[root]), float(y[top]), root, top, essential=True))
    bars.sort(key=lambda b: b.birth_index)
    return Barcode(tuple(bars))


def filter_top_k(bc: Barcode, k: int) -> Barcode:
    """The ``k`` longest bars; the essential bar is always kept."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k >= len(bc):
        return bc
    ranked = sorted(bc.bars, key=lambda b: (not b.essential, -b.length, b.birth_index))
    keep = sorted(ranked[:k], key=lambda b: b.birth_index)
    return Barcode(tuple(keep))


def _lengths(bc) -> np.ndarray:
    lengths = bc.lengths if isinstance(bc, Barcode) else np.asarray(bc, dtype=float)
    if np.any(lengths < 0):
        raise ValueError("bar lengths must be nonnegative")
    total = float(np.sum(lengths))
    if not total > 0:
        raise DegenerateBarcode("total bar length is zero")
    return lengths


def persistent_entropy(bc: Barcode | Sequence[float]) -> float:
    """Shannon entropy of the normalised bar lengths (accepts a barcode or lengths)."""
    lengths = _lengths(bc)
    pos = lengths[lengths > 0]
    p = pos / pos.sum()
    return float(-np.sum(p * np.log(p)))


def lwpe(bc: Barcode | Sequence[float]) -> float:
    """Length-weighted persistent entropy ``-sum l_i ln(l_i / L)``."""
    lengths = _lengths(bc)
    pos = lengths[lengths > 0]
    return float(-np.sum(pos * np.log(pos / pos.sum())))


def entropy_length_gradient(lengths: Sequence[float], kind: str) -> np.ndarray:
    """Derivative of PE (``kind="pe"``) or LWPE (``kind="lwpe"``) w.r.t. each bar length.

    Zero-length bars get a zero derivative.
    """
    lengths = _lengths(lengths)
    total = lengths.sum()
    grad = np.zeros_like(lengths)
    pos = lengths > 0
    log_p = np.log(lengths[pos] / total)
    if kind == "lwpe":
        grad[pos] = -log_p
    elif kind == "pe":
        pe = -float(np.sum(np.exp(log_p) * log_p))
        grad[pos] = -(log_p + pe) / total
    else:
        raise ValueError(f"unknown entropy kind {kind!r}")
    return grad


def count_local_minima(y: Sequence[float]) -> int:
    """Maximal constant runs strictly below all existing neighbours."""
    y = np.asarray(y, dtype=float)
    if len(y) == 0:
        return 0
    starts = np.flatnonzero(np.concatenate([[True], y[1:] != y[:-1]]))
    ends = np.append(starts[1:], len(y)) - 1
    count = 0
    for s, e in zip(starts, ends):
        left = s == 0 or y[s - 1] > y[s]
        right = e == len(y) - 1 or y[e + 1] > y[e]
        count += left and right
    return count


def max_bar_count(m: int) -> int:
    return math.ceil(m / 2)
