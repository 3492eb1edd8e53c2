"""Finite continued fractions for walks from a corner of the triangle.

With ``s = (alpha + beta) t`` the corner series of side ``L`` equals the
convergent obtained by iterating ``F -> 1 / (1 - s - s^2 F)`` ``H = L // 2``
times, starting from ``F = 1`` when ``L`` is even and ``F = 1/(1 - s)`` when
``L`` is odd.
"""
from __future__ import annotations

from dataclasses import dataclass

from .formulas import weights_ring, compare_series, corner_gf
from .report import Report
from .series import BivarPoly, TruncSeries


@dataclass(frozen=True)
class CFSpec:
    L: int

    def __post_init__(self):
        if self.L < 0:
            raise ValueError(f"side length must be non-negative, got {self.L}")

    @property
    def H(self) -> int:
        return self.L // 2

    @property
    def odd(self) -> bool:
        return self.L % 2 == 1

    @property
    def depth(self) -> int:
        """Number of fraction bars: ``H`` for even ``L``, ``H + 1`` for odd ``L``."""
        return self.H + 1 if self.odd else self.H


def _s_series(order: int, weights) -> TruncSeries:
    ring, w = weights_ring(weights)
    c = BivarPoly.alpha() + BivarPoly.beta() if w is None else w[0] + w[1]
    return TruncSeries(ring, [0, c], order)


def convergent_series(spec: CFSpec, order: int, weights=None) -> TruncSeries:
    s = _s_series(order, weights)
    one = TruncSeries.constant(s.ring, 1, order)
    F = (1 - s).inverse() if spec.odd else one
    s2 = s * s
    for _ in range(spec.H):
        F = (1 - s - s2 * F).inverse()
    return F


def verify_cf_identity(L: int, order: int, weights=None) -> Report:
    rep = Report("cf-identity", {"L": L, "order": order})
    spec = CFSpec(L)
    rep.details.update(depth=spec.depth, H=spec.H)
    return compare_series(rep, convergent_series(spec, order, weights), corner_gf(L, order, weights),
                          "convergent", "closed_form")


def verify_induction_step(L: int, order: int, weights=None) -> Report:
    """``corner(L + 2) == 1 / (1 - s - s^2 corner(L))`` as truncated series."""
    rep = Report("cf-induction", {"L": L, "order": order})
    s = _s_series(order, weights)
    rhs = (1 - s - s * s * corner_gf(L, order, weights)).inverse()
    return compare_series(rep, corner_gf(L + 2, order, weights), rhs, "lhs", "rhs")
