"""Motzkin paths in a strip, three-candidate Ballot paths, and the corner-walk/Ballot bijection."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import PreconditionError
from .lattice import TAG_A, DomainSpec, LatticeWalk, StepSet

UP, DOWN, HORIZONTAL = "U", "D", "H"
_HEIGHT_CHANGE = {UP: 1, DOWN: -1, HORIZONTAL: 0}

BALLOT_STEPS = ((1, 1), (1, -1), (1, 0))
_BALLOT_SYMBOL = {(1, 1): "+", (1, -1): "-", (1, 0): "0"}

# Tag-A steps of the triangle and their Ballot images: moving a unit from
# x to y, y to z, z to x.
WALK_TO_BALLOT = {(-1, 1, 0): (1, 1), (0, -1, 1): (1, -1), (1, 0, -1): (1, 0)}
BALLOT_TO_WALK = {b: v for v, b in WALK_TO_BALLOT.items()}


@dataclass(frozen=True)
class MotzkinStripSpec:
    H: int
    forbid_top_horizontal: bool = False
    two_coloured: bool = False

    def __post_init__(self):
        if self.H < 0:
            raise PreconditionError(f"strip height must be non-negative, got {self.H}")


@dataclass(frozen=True)
class MotzkinPath:
    """Steps over U/D/H; ``colours`` is empty for uncoloured paths, else one of A/B per step."""

    steps: tuple
    colours: tuple = ()

    def heights(self) -> list[int]:
        h = [0]
        for s in self.steps:
            h.append(h[-1] + _HEIGHT_CHANGE[s])
        return h

    def valid_in(self, spec: MotzkinStripSpec) -> bool:
        hs = self.heights()
        if min(hs) < 0 or max(hs) > spec.H or hs[-1] != 0:
            return False
        if spec.forbid_top_horizontal:
            if any(s == HORIZONTAL and h == spec.H for s, h in zip(self.steps, hs)):
                return False
        return not self.colours or len(self.colours) == len(self.steps)

    def to_strings(self) -> list[str]:
        if self.colours:
            return [s + c for s, c in zip(self.steps, self.colours)]
        return list(self.steps)


def motzkin_strip_uncoloured(spec: MotzkinStripSpec, n: int) -> int:
    """Length-``n`` Motzkin paths from height 0 back to height 0 inside ``[0, H]``."""
    if n < 0:
        raise ValueError("length must be non-negative")
    H = spec.H
    row = [1] + [0] * H
    for _ in range(n):
        new = [0] * (H + 1)
        for h, c in enumerate(row):
            if not c:
                continue
            if h < H:
                new[h + 1] += c
            if h > 0:
                new[h - 1] += c
            if not (spec.forbid_top_horizontal and h == H):
                new[h] += c
        row = new
    return row[0]


def motzkin_strip_count(spec: MotzkinStripSpec, n: int):
    """Strip Motzkin count of length ``n``.

    Uncoloured specs give a plain int.  Two-coloured specs give a list indexed
    by the number ``p`` of A-coloured steps: every step is coloured
    independently, so entry ``p`` is ``binomial(n, p)`` times the uncoloured count.
    """
    m = motzkin_strip_uncoloured(spec, n)
    if not spec.two_coloured:
        return m
    return [comb(n, p) * m for p in range(n + 1)]


def enumerate_motzkin_paths(spec: MotzkinStripSpec, n: int) -> list[MotzkinPath]:
    """Exhaustive list (all 3^n words filtered, with colourings when two-coloured)."""
    out = []
    for word in itertools.product((UP, DOWN, HORIZONTAL), repeat=n):
        path = MotzkinPath(tuple(word))
        if not path.valid_in(spec):
            continue
        if spec.two_coloured:
            for colours in itertools.product("AB", repeat=n):
                out.append(MotzkinPath(tuple(word), colours))
        else:
            out.append(path)
    return out


def motzkin_number(n: int) -> int:
    """Unrestricted Motzkin count via ``M_n = M_(n-1) + sum_k M_k M_(n-2-k)``."""
    m = [1]
    for k in range(1, n + 1):
        m.append(m[k - 1] + sum(m[i] * m[k - 2 - i] for i in range(k - 1)))
    return m[n]


@dataclass(frozen=True)
class BallotPath:
    steps: tuple  # of (1,1), (1,-1), (1,0)

    def counts(self) -> list[tuple[int, int, int]]:
        """Prefix counts ``(#(1,1), #(1,-1), #(1,0))`` after each step, starting from zeros."""
        a = b = c = 0
        out = [(0, 0, 0)]
        for s in self.steps:
            if s == (1, 1):
                a += 1
            elif s == (1, -1):
                b += 1
            elif s == (1, 0):
                c += 1
            else:
                raise PreconditionError(f"{s} is not a Ballot step")
            out.append((a, b, c))
        return out

    def excess(self) -> int:
        return max(a - c for a, _, c in self.counts())

    def is_valid(self, L: int | None = None) -> bool:
        for a, b, c in self.counts():
            if not a >= b >= c:
                return False
            if L is not None and a - c > L:
                return False
        return True

    def to_strings(self) -> list[str]:
        return [_BALLOT_SYMBOL[s] for s in self.steps]

    def __len__(self):
        return len(self.steps)


def ballot3_count(L: int, n: int) -> int:
    """n-step three-candidate Ballot paths with excess at most ``L``.

    DP over ``(i, j) = (#(1,1) - #(1,-1), #(1,-1) - #(1,0))`` with ``i, j >= 0`` and ``i + j <= L``.
    """
    if L < 0 or n < 0:
        raise ValueError("L and n must be non-negative")
    state = {(0, 0): 1}
    for _ in range(n):
        new: dict = {}
        for (i, j), c in state.items():
            for ni, nj in ((i + 1, j), (i - 1, j + 1), (i, j - 1)):
                if ni >= 0 and nj >= 0 and ni + nj <= L:
                    new[(ni, nj)] = new.get((ni, nj), 0) + c
        state = new
    return sum(state.values())


def enumerate_ballot_paths(L: int, n: int) -> list[BallotPath]:
    """Exhaustive list of excess-``L`` Ballot paths of length ``n``.

    Words are generated letter by letter on the raw step counts, abandoning a
    prefix as soon as it breaks the order or excess constraint.
    """
    out = []
    word: list = []

    def extend(a, b, c):
        if len(word) == n:
            out.append(BallotPath(tuple(word)))
            return
        for step, (na, nb, nc) in (((1, 1), (a + 1, b, c)), ((1, -1), (a, b + 1, c)), ((1, 0), (a, b, c + 1))):
            if na >= nb >= nc and na - nc <= L:
                word.append(step)
                extend(na, nb, nc)
                word.pop()

    extend(0, 0, 0)
    return out


def dyck_count(k: int) -> int:
    """Paths of ``2k`` steps +1/-1 from 0 to 0 never going below 0, by ballot DP."""
    row = {0: 1}
    for _ in range(2 * k):
        new: dict = {}
        for h, c in row.items():
            for nh in (h + 1, h - 1):
                if nh >= 0:
                    new[nh] = new.get(nh, 0) + c
        row = new
    return row.get(0, 0)


def walk_to_ballot(walk: LatticeWalk) -> BallotPath:
    """Map a tag-A walk from the corner ``(L,0,0)`` onto a Ballot path of excess ``L``.

    Steps ``(-1,1,0)``, ``(0,-1,1)``, ``(1,0,-1)`` become ``(1,1)``, ``(1,-1)``, ``(1,0)``.
    """
    if walk.stepset.d != 2:
        raise PreconditionError("only triangle walks map to Ballot paths")
    L = walk.L
    if walk.start != (L, 0, 0):
        raise PreconditionError(f"walk must start at the corner ({L}, 0, 0), not {walk.start}")
    pos = walk.start
    out = []
    for vec in walk.vectors:
        if vec not in WALK_TO_BALLOT:
            raise PreconditionError(f"step {vec} is not on the A sublattice")
        pos = tuple(a + b for a, b in zip(pos, vec))
        if min(pos) < 0:
            raise PreconditionError(f"walk leaves the triangle at {pos}")
        out.append(WALK_TO_BALLOT[vec])
    return BallotPath(tuple(out))


def ballot_to_walk(path: BallotPath, L: int) -> LatticeWalk:
    """Inverse of :func:`walk_to_ballot` on the triangle of side ``L``."""
    if not path.is_valid():
        raise PreconditionError("path violates the Ballot prefix order")
    if path.excess() > L:
        raise PreconditionError(f"path excess {path.excess()} exceeds L = {L}")
    stepset = StepSet.standard(2)
    lookup = {v: k for k, (v, _) in enumerate(stepset.steps)}
    steps = tuple(lookup[BALLOT_TO_WALK[s]] for s in path.steps)
    walk = LatticeWalk(DomainSpec(2, L).corner(), steps, stepset)
    assert all(t == TAG_A for t in walk.tags)
    return walk
