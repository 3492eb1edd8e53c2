"""Simplex domains, step-sets and exact walk counts.

A domain of dimension ``d`` and side ``L`` is the set of points of
``Z^(d+1)`` with non-negative coordinates summing to ``L``.  Every step adds
one to a single coordinate and removes one from another.  For ``d = 2`` the
six steps split into two directed sublattices, tagged ``A`` (weight alpha) and
``B`` (weight beta):

    A: (1,0,-1), (-1,1,0), (0,-1,1)
    B: (1,-1,0), (-1,0,1), (0,1,-1)

Other dimensions have no such split and every step is tagged ``A``.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import DomainError, PreconditionError, ResourceGuardError

TAG_A = "A"
TAG_B = "B"

SUBLATTICE_A = frozenset({(1, 0, -1), (-1, 1, 0), (0, -1, 1)})
SUBLATTICE_B = frozenset({(1, -1, 0), (-1, 0, 1), (0, 1, -1)})

DEFAULT_GUARD = 10**7

SimplexPoint = tuple  # d+1 non-negative ints summing to L


def guard_limit(explicit: int | None = None) -> int:
    """Enumeration guard: explicit value, else ``TRILAT_GUARD_LIMIT``, else 10**7."""
    if explicit is not None:
        return explicit
    env = os.environ.get("TRILAT_GUARD_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"TRILAT_GUARD_LIMIT must be an integer, got {env!r}") from None
    return DEFAULT_GUARD


@dataclass(frozen=True)
class DomainSpec:
    d: int
    L: int

    def __post_init__(self):
        if self.d < 1:
            raise DomainError(f"dimension must be >= 1, got {self.d}")
        if self.L < 0:
            raise DomainError(f"side length must be >= 0, got {self.L}")

    @cached_property
    def points(self) -> tuple[SimplexPoint, ...]:
        """All domain points, in descending lexicographic order (corner ``(L,0,...)`` first)."""
        pts = [c for c in itertools.product(range(self.L, -1, -1), repeat=self.d + 1) if sum(c) == self.L]
        return tuple(pts)

    @cached_property
    def index(self) -> dict:
        return {pt: i for i, pt in enumerate(self.points)}

    def __len__(self):
        return comb(self.L + self.d, self.d)

    def contains(self, point) -> bool:
        return (len(point) == self.d + 1 and all(isinstance(c, (int, np.integer)) and c >= 0 for c in point)
                and sum(point) == self.L)

    def check_point(self, point) -> SimplexPoint:
        pt = tuple(int(c) for c in point)
        if not self.contains(pt):
            raise DomainError(f"{pt} is not a point of the d={self.d}, L={self.L} domain")
        return pt

    def corner(self, axis: int = 0) -> SimplexPoint:
        pt = [0] * (self.d + 1)
        pt[axis] = self.L
        return tuple(pt)


@dataclass(frozen=True)
class StepSet:
    d: int
    steps: tuple  # ((vector, tag), ...)

    @classmethod
    def standard(cls, d: int) -> "StepSet":
        """All steps of dimension ``d`` in descending lexicographic order of their vectors."""
        if d < 1:
            raise DomainError(f"dimension must be >= 1, got {d}")
        vecs = []
        for i in range(d + 1):
            for j in range(d + 1):
                if i != j:
                    v = [0] * (d + 1)
                    v[i], v[j] = 1, -1
                    vecs.append(tuple(v))
        vecs.sort(reverse=True)
        if d == 2:
            steps = tuple((v, TAG_A if v in SUBLATTICE_A else TAG_B) for v in vecs)
        else:
            steps = tuple((v, TAG_A) for v in vecs)
        return cls(d, steps)

    def swapped(self) -> "StepSet":
        """Same steps with the A/B tags exchanged."""
        flip = {TAG_A: TAG_B, TAG_B: TAG_A}
        return StepSet(self.d, tuple((v, flip[t]) for v, t in self.steps))

    def restricted(self, which: str) -> "StepSet":
        """Keep only tag-A steps (``"A"``), tag-B steps (``"B"``) or all (``"both"``)."""
        if which == "both":
            return self
        if which not in (TAG_A, TAG_B):
            raise ValueError(f"sublattice filter must be 'A', 'B' or 'both', got {which!r}")
        return StepSet(self.d, tuple(s for s in self.steps if s[1] == which))

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def _apply(point, vec):
    return tuple(a + b for a, b in zip(point, vec))


def neighbors(point, stepset: StepSet) -> list[tuple[SimplexPoint, str]]:
    """In-domain images of ``point`` under each step, in step-set order, with the step's tag."""
    point = tuple(point)
    if len(point) != stepset.d + 1 or any(c < 0 for c in point):
        raise DomainError(f"{point} is not a valid point for a d={stepset.d} step-set")
    out = []
    for vec, tag in stepset.steps:
        q = _apply(point, vec)
        if min(q) >= 0:
            out.append((q, tag))
    return out


@dataclass(frozen=True)
class LatticeWalk:
    """Walk given by its start and a sequence of indices into ``stepset``.

    Construction replays the walk and rejects any position outside the
    non-negative orthant.
    """

    start: SimplexPoint
    steps: tuple
    stepset: StepSet = field(repr=False)

    def __post_init__(self):
        start = tuple(int(c) for c in self.start)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "steps", tuple(int(k) for k in self.steps))
        if len(start) != self.stepset.d + 1 or min(start) < 0:
            raise DomainError(f"bad start point {start} for dimension {self.stepset.d}")
        pos = start
        for k in self.steps:
            if not 0 <= k < len(self.stepset):
                raise DomainError(f"step index {k} out of range")
            pos = _apply(pos, self.stepset.steps[k][0])
            if min(pos) < 0:
                raise DomainError(f"walk leaves the domain at {pos}")

    @property
    def L(self) -> int:
        return sum(self.start)

    def __len__(self):
        return len(self.steps)

    @property
    def positions(self) -> list[SimplexPoint]:
        pos = [self.start]
        for k in self.steps:
            pos.append(_apply(pos[-1], self.stepset.steps[k][0]))
        return pos

    @property
    def vectors(self) -> list[tuple]:
        return [self.stepset.steps[k][0] for k in self.steps]

    @property
    def tags(self) -> list[str]:
        return [self.stepset.steps[k][1] for k in self.steps]

    @property
    def end(self) -> SimplexPoint:
        return self.positions[-1]

    def tag_count(self, tag: str = TAG_A) -> int:
        return sum(1 for t in self.tags if t == tag)


class CountTable:
    """Exact walk counts ``C[n, endpoint, p]`` from a fixed start, ``p`` = number of tag-A steps.

    Backed by a dense ``(n_max+1, #points, n_max+1)`` array; entries come back
    as Python ints.
    """

    def __init__(self, domain: DomainSpec, start, n_max: int, counts: np.ndarray):
        self.domain = domain
        self.start = domain.check_point(start)
        self.n_max = n_max
        self._counts = counts

    @property
    def d(self) -> int:
        return self.domain.d

    @property
    def L(self) -> int:
        return self.domain.L

    def count(self, n: int, end, p: int) -> int:
        if not 0 <= p <= n:
            return 0
        j = self.domain.index.get(tuple(end))
        if j is None:
            return 0
        return int(self._counts[n, j, p])

    def __getitem__(self, key) -> int:
        n, end, p = key
        return self.count(n, end, p)

    def entries(self) -> Iterator[tuple[int, SimplexPoint, int, int]]:
        """Nonzero ``(n, endpoint, p, count)`` in order of n, point, p."""
        pts = self.domain.points
        for n in range(self.n_max + 1):
            for j, pt in enumerate(pts):
                for p in range(n + 1):
                    c = int(self._counts[n, j, p])
                    if c:
                        yield n, pt, p, c

    def by_p(self, n: int, where=None) -> list[int]:
        """Counts at length ``n`` summed over endpoints (optionally filtered), indexed by p."""
        pts = self.domain.points
        row = [0] * (n + 1)
        for j, pt in enumerate(pts):
            if where is not None and not where(pt):
                continue
            for p in range(n + 1):
                row[p] += int(self._counts[n, j, p])
        return row

    def total(self, n: int, p: int | None = None, where=None) -> int:
        row = self.by_p(n, where)
        return sum(row) if p is None else (row[p] if 0 <= p <= n else 0)

    def totals(self, where=None) -> list[int]:
        return [self.total(n, where=where) for n in range(self.n_max + 1)]

    def endpoint_counts(self, n: int) -> dict:
        """``{endpoint: count}`` at length ``n``, summed over p, nonzero only."""
        out = {}
        for j, pt in enumerate(self.domain.points):
            c = sum(int(x) for x in self._counts[n, j, : n + 1])
            if c:
                out[pt] = c
        return out

    def endpoint_by_p(self, n: int) -> dict:
        out = {}
        for j, pt in enumerate(self.domain.points):
            row = [int(x) for x in self._counts[n, j, : n + 1]]
            if any(row):
                out[pt] = row
        return out

    def weighted_total(self, n: int, where=None):
        """``sum_p total(n, p) alpha^p beta^(n-p)`` as a BivarPoly."""
        from .series import BivarPoly
        return BivarPoly({(p, n - p): c for p, c in enumerate(self.by_p(n, where))})

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "L": self.L,
            "start": list(self.start),
            "n_max": self.n_max,
            "entries": [{"n": n, "end": list(e), "p": p, "count": str(c)} for n, e, p, c in self.entries()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CountTable":
        domain = DomainSpec(int(data["d"]), int(data["L"]))
        n_max = int(data["n_max"])
        counts = np.zeros((n_max + 1, len(domain.points), n_max + 1), dtype=object)
        for e in data["entries"]:
            counts[int(e["n"]), domain.index[domain.check_point(e["end"])], int(e["p"])] = int(e["count"])
        return cls(domain, data["start"], n_max, counts)

    def csv_rows(self) -> list[tuple[int, int, int, int]]:
        """``(n, p, q, count)`` rows of endpoint-summed totals."""
        rows = []
        for n in range(self.n_max + 1):
            for p, c in enumerate(self.by_p(n)):
                if c:
                    rows.append((n, p, n - p, c))
        return rows

    def __eq__(self, other):
        if not isinstance(other, CountTable):
            return NotImplemented
        return (self.domain == other.domain and self.start == other.start and self.n_max == other.n_max
                and list(self.entries()) == list(other.entries()))


def _adjacency(domain: DomainSpec, stepset: StepSet) -> tuple[np.ndarray, np.ndarray]:
    pts = domain.points
    idx = domain.index
    nbr = np.full((len(pts), len(stepset)), -1, dtype=np.int64)
    tag = np.zeros((len(pts), len(stepset)), dtype=np.int64)
    for i, pt in enumerate(pts):
        for k, (vec, t) in enumerate(stepset.steps):
            q = _apply(pt, vec)
            if min(q) >= 0:
                nbr[i, k] = idx[q]
                tag[i, k] = 1 if t == TAG_A else 0
    return nbr, tag


def count_walks(domain: DomainSpec, start, n_max: int, stepset: StepSet | None = None,
                backend: str | None = None) -> CountTable:
    """Count every walk of length ``<= n_max`` from ``start``, resolved by endpoint and tag-A count."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    start = domain.check_point(start)
    if stepset is None:
        stepset = StepSet.standard(domain.d)
    elif stepset.d != domain.d:
        raise DomainError(f"step-set dimension {stepset.d} does not match domain dimension {domain.d}")
    nbr, tag = _adjacency(domain, stepset)
    counts = _kernels.propagate(nbr, tag, domain.index[start], n_max, backend=backend)
    return CountTable(domain, start, n_max, counts)


def enumerate_walks(domain: DomainSpec, start, n: int, sublattice: str = "both",
                    guard: int | None = None) -> list[LatticeWalk]:
    """Every ``n``-step walk from ``start`` using the selected sublattice, in step-set order.

    Raises ResourceGuardError if the walk count exceeds the guard.
    """
    if sublattice not in ("both", TAG_A, TAG_B):
        raise ValueError(f"sublattice filter must be 'A', 'B' or 'both', got {sublattice!r}")
    start = domain.check_point(start)
    full = StepSet.standard(domain.d)
    allowed = {k for k, (_, t) in enumerate(full.steps) if sublattice == "both" or t == sublattice}
    limit = guard_limit(guard)
    expected = count_walks(domain, start, n, stepset=full.restricted(sublattice)).total(n)
    if expected > limit:
        raise ResourceGuardError(f"{expected} walks exceed the enumeration guard {limit}")

    vecs = [v for v, _ in full.steps]
    out: list[LatticeWalk] = []
    path: list[int] = []

    def extend(pos, remaining):
        if remaining == 0:
            out.append(LatticeWalk(start, tuple(path), full))
            return
        for k in range(len(vecs)):
            if k not in allowed:
                continue
            q = _apply(pos, vecs[k])
            if min(q) >= 0:
                path.append(k)
                extend(q, remaining - 1)
                path.pop()

    extend(start, n)
    return out


def map_to_strip_pair(walk: LatticeWalk) -> tuple[list[int], list[int]]:
    """Lower and upper heights ``(n_x, n_x + n_y)`` of each position of a triangle walk."""
    if walk.stepset.d != 2:
        raise DomainError(f"strip mapping is defined for triangle walks only (got d={walk.stepset.d})")
    pos = walk.positions
    return [x for x, _, _ in pos], [x + y for x, y, _ in pos]


def walk_from_positions(positions: Sequence, stepset: StepSet | None = None) -> LatticeWalk:
    """Build a walk from its list of visited points."""
    positions = [tuple(p) for p in positions]
    if not positions:
        raise PreconditionError("a walk needs at least its start point")
    d = len(positions[0]) - 1
    stepset = stepset or StepSet.standard(d)
    lookup = {v: k for k, (v, _) in enumerate(stepset.steps)}
    steps = []
    for a, b in zip(positions, positions[1:]):
        vec = tuple(y - x for x, y in zip(a, b))
        if vec not in lookup:
            raise DomainError(f"{a} -> {b} is not a step")
        steps.append(lookup[vec])
    return LatticeWalk(positions[0], tuple(steps), stepset)
