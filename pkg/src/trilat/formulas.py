"""Closed-form generating functions for the line and triangle models.

Every closed form is a rational expression in the kernel root ``p``; it is
evaluated here as a truncated power series in ``t`` and compared against the
dynamic-programming counts of :mod:`trilat.lattice`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, InversionError, PreconditionError
from .lattice import CountTable, DomainSpec, count_walks
from .report import Report
from .series import BIVAR, INT, RAT, BivarPoly, Ring, TruncSeries, parse_rational, solve_kernel_root

ALPHA = BivarPoly.alpha()
BETA = BivarPoly.beta()

# Kernel monomials (coefficient, exponent of x, y, z) of
# 1 - t(beta x/y + alpha y/x + alpha x/z + beta z/x + beta y/z + alpha z/y).
TRIANGLE_KERNEL_TERMS = (
    (BETA, (1, -1, 0)),
    (ALPHA, (-1, 1, 0)),
    (ALPHA, (1, 0, -1)),
    (BETA, (-1, 0, 1)),
    (BETA, (0, 1, -1)),
    (ALPHA, (0, -1, 1)),
)
# 1 - t(x/y + y/x)
LINE_KERNEL_TERMS = (
    (1, (1, -1)),
    (1, (-1, 1)),
)


def _nonneg(**kw):
    for k, v in kw.items():
        if v < 0:
            raise DomainError(f"{k} must be non-negative, got {v}")


def weights_ring(weights) -> tuple[Ring, tuple | None]:
    if weights is None:
        return BIVAR, None
    a, b = (parse_rational(w) for w in weights)
    ring = INT if a.denominator == 1 and b.denominator == 1 else RAT
    return ring, (a, b)


class _Powers:
    """Lazily cached powers of a series."""

    def __init__(self, p: TruncSeries):
        self._pw = [TruncSeries.constant(p.ring, 1, p.order), p]

    def __getitem__(self, k: int) -> TruncSeries:
        while len(self._pw) <= k:
            self._pw.append(self._pw[-1] * self._pw[1])
        return self._pw[k]

    def one_minus(self, k: int) -> TruncSeries:
        return 1 - self[k]


def triangle_root(order: int, weights=None) -> TruncSeries:
    return _triangle_powers(order, _weights_key(weights))[1]


def _weights_key(weights):
    return None if weights is None else tuple(parse_rational(w) for w in weights)


@lru_cache(maxsize=64)
def _triangle_powers(order: int, weights) -> _Powers:
    # series are immutable, so cached powers can be shared between callers
    ring, w = weights_ring(weights)
    return _Powers(solve_kernel_root("triangle", order, ring, w))


def line_total_gf(u: int, v: int, order: int) -> TruncSeries:
    """``(1+p^2)(1-p^(u+1))(1-p^(v+1)) / ((1-p)^2 (1+p^(u+v+2)))`` with ``p = t(1+p^2)``."""
    _nonneg(u=u, v=v)
    P = _Powers(solve_kernel_root("line", order, INT))
    num = (1 + P[2]) * P.one_minus(u + 1) * P.one_minus(v + 1)
    den = P.one_minus(1) ** 2 * (1 + P[u + v + 2])
    return num / den


@dataclass(frozen=True)
class BoundaryGFs:
    """Walks of the line model ending on the boundary: ``G(1,0)`` ends at ``(L,0)``, ``G(0,1)`` at ``(0,L)``."""

    g10: TruncSeries
    g01: TruncSeries


def line_boundary_gfs(u: int, v: int, order: int) -> BoundaryGFs:
    """``G(1,0) = p^(v+1)(p^(2u+2)-1) / (t(p^(2u+2v+4)-1))`` and its mirror image."""
    _nonneg(u=u, v=v)
    # one extra order: the division by t consumes it
    P = _Powers(solve_kernel_root("line", order + 1, INT))
    den = P[2 * u + 2 * v + 4] - 1
    g10 = (P[v + 1] * (P[2 * u + 2] - 1) / den).div_t()
    g01 = (P[u + 1] * (P[2 * v + 2] - 1) / den).div_t()
    return BoundaryGFs(g10, g01)


def line_full_gf_at(u: int, v: int, xi, order: int) -> TruncSeries:
    """The full line-model generating function evaluated at ``x = xi``, ``y = 1``.

    The prefactor ``1/(1 - (x/y + y/x)/(p + 1/p))`` is multiplied through by
    ``p`` to give ``(1+p^2) / (1 + p^2 - p(x/y + y/x))``, whose denominator has
    unit constant term.
    """
    _nonneg(u=u, v=v)
    xi = parse_rational(xi)
    if xi == 0:
        raise PreconditionError("evaluation point must be nonzero")
    L = u + v
    P = _Powers(solve_kernel_root("line", order, RAT))
    one_p2 = 1 + P[2]
    prefactor_den = one_p2 - P[1] * (xi + 1 / xi)
    if prefactor_den[0] == 0:
        raise InversionError(f"x = {xi} makes the prefactor singular")
    den = P.one_minus(2 * L + 4)
    bracket = (TruncSeries.constant(RAT, xi ** u, order)
               - P[v + 1] * P.one_minus(2 * u + 2) * xi ** (L + 1) / den
               - P[u + 1] * P.one_minus(2 * v + 2) * (1 / xi) / den)
    return one_p2 / prefactor_den * bracket


def _fallback_points():
    """2, 3, 5, 7, 11, ... (primes), the deterministic evaluation sequence."""
    n = 2
    while True:
        if all(n % k for k in range(2, int(n ** 0.5) + 1)):
            yield Fraction(n)
        n += 1


def line_full_gf_check(u: int, v: int, order: int, points: Sequence | None = None) -> Report:
    """Compare the full line-model formula with DP endpoint counts at ``L+1`` points ``(xi, 1)``.

    Each t-coefficient is homogeneous of degree ``L`` in ``x, y``, so agreement
    at ``L+1`` distinct values of ``x/y`` pins it down completely.
    """
    _nonneg(u=u, v=v)
    L = u + v
    rep = Report("line-full", {"u": u, "v": v, "order": order})
    table = count_walks(DomainSpec(1, L), (u, v), order)
    chosen = []
    source = iter(points) if points is not None else _fallback_points()
    backup = _fallback_points()
    while len(chosen) < L + 1:
        xi = next(source, None)
        if xi is None:
            xi = next(backup)
        xi = parse_rational(xi)
        if xi == 0 or xi in chosen:
            continue
        try:
            series = line_full_gf_at(u, v, xi, order)
        except InversionError:
            continue
        chosen.append(xi)
        for n in range(order + 1):
            dp = sum((c * xi ** e[0] for e, c in table.endpoint_counts(n).items()), Fraction(0))
            if series[n] != dp:
                rep.fail(xi=xi, n=n, formula=series[n], dp=dp)
    rep.details["points"] = chosen
    return rep


def triangle_total_gf(u: int, v: int, w: int, order: int, weights=None) -> TruncSeries:
    """``(1-p^3)(1-p^(u+1))(1-p^(v+1))(1-p^(w+1)) / ((1-p)^3 (1-p^(u+v+w+3)))``.

    ``weights=None`` keeps alpha, beta symbolic (bivariate ring); otherwise
    ``(alpha, beta)`` are exact rationals and the series is over int or rat.
    """
    _nonneg(u=u, v=v, w=w)
    P = _triangle_powers(order, _weights_key(weights))
    num = P.one_minus(3) * P.one_minus(u + 1) * P.one_minus(v + 1) * P.one_minus(w + 1)
    den = P.one_minus(1) ** 3 * P.one_minus(u + v + w + 3)
    return num / den


def corner_gf(L: int, order: int, weights=None) -> TruncSeries:
    """``(1-p^3)(1-p^(1+L)) / ((1-p)(1-p^(3+L)))`` for walks from a corner."""
    _nonneg(L=L)
    P = _triangle_powers(order, _weights_key(weights))
    return P.one_minus(3) * P.one_minus(1 + L) / (P.one_minus(1) * P.one_minus(3 + L))


def centre_side_gf(u: int, order: int, weights=None) -> TruncSeries:
    """``p^u (1-p^3)(1-p^(u+1)) / ((1-p)(1-p^(3u+3)))``: centre start, end on one side."""
    _nonneg(u=u)
    P = _triangle_powers(order, _weights_key(weights))
    return P[u] * P.one_minus(3) * P.one_minus(u + 1) / (P.one_minus(1) * P.one_minus(3 * u + 3))


def table_series(table: CountTable, where=None, weights=None) -> TruncSeries:
    """Endpoint-summed DP counts as a series, each length weighted by ``alpha^p beta^(n-p)``."""
    if weights is None:
        return TruncSeries(BIVAR, [table.weighted_total(n, where) for n in range(table.n_max + 1)])
    ring, (a, b) = weights_ring(weights)
    coeffs = [sum((c * a ** p * b ** (n - p) for p, c in enumerate(table.by_p(n, where))), Fraction(0))
              for n in range(table.n_max + 1)]
    return TruncSeries(ring, coeffs)


def compare_series(rep: Report, got: TruncSeries, want: TruncSeries, label_got="formula", label_want="dp") -> Report:
    for n in range(min(got.order, want.order) + 1):
        if got[n] != want[n]:
            return rep.fail(n=n, **{label_got: got[n], label_want: want[n]})
    return rep


# ---------------------------------------------------------------- Laurent algebra

def _lp_add(acc: dict, mono: tuple, coeff):
    v = acc.get(mono, 0) + coeff
    if v:
        acc[mono] = v
    else:
        acc.pop(mono, None)


def _lp_times_terms(poly: dict, terms) -> dict:
    """Multiply a Laurent polynomial ``{exponents: coeff}`` by a sum of weighted monomials."""
    out: dict = {}
    for mono, c in poly.items():
        for w, shift in terms:
            _lp_add(out, tuple(a + b for a, b in zip(mono, shift)), c * w)
    return out


def _section(poly: dict, axis: int) -> dict:
    """Terms whose exponent in the given variable is zero (the variable set to 0)."""
    return {m: c for m, c in poly.items() if m[axis] == 0}


def check_functional_equation(domain: DomainSpec, start, order: int) -> Report:
    """Residual of the step-appending functional equation, order by order in ``t``.

    The triangle equation
        G = x^u y^v z^w + t K' G - t G(0,y,z)(alpha y/x + beta z/x)
            - t G(x,0,z)(beta x/y + alpha z/y) - t G(x,y,0)(alpha x/z + beta y/z)
    (and its line analogue) is assembled in the Laurent polynomial algebra over
    the endpoint marks with symbolic alpha, beta, from DP endpoint counts.
    """
    if domain.d not in (1, 2):
        raise DomainError("functional equations are available for d = 1 and d = 2 only")
    start = domain.check_point(start)
    rep = Report("funceq", {"d": domain.d, "L": domain.L, "start": list(start), "order": order})
    table = count_walks(domain, start, order)
    if domain.d == 2:
        full = TRIANGLE_KERNEL_TERMS
        boundary = {
            0: ((ALPHA, (-1, 1, 0)), (BETA, (-1, 0, 1))),
            1: ((BETA, (1, -1, 0)), (ALPHA, (0, -1, 1))),
            2: ((ALPHA, (1, 0, -1)), (BETA, (0, 1, -1))),
        }

        def gf_coeff(n):
            return {e: BivarPoly({(p, n - p): c for p, c in enumerate(row)})
                    for e, row in table.endpoint_by_p(n).items()}
    else:
        full = LINE_KERNEL_TERMS
        boundary = {0: ((1, (-1, 1)),), 1: ((1, (1, -1)),)}

        def gf_coeff(n):
            return dict(table.endpoint_counts(n))

    prev: dict = {}
    for n in range(order + 1):
        current = gf_coeff(n)
        rhs: dict = {}
        if n == 0:
            _lp_add(rhs, start, 1)
        else:
            for m, c in _lp_times_terms(prev, full).items():
                _lp_add(rhs, m, c)
            for axis, terms in boundary.items():
                for m, c in _lp_times_terms(_section(prev, axis), terms).items():
                    _lp_add(rhs, m, -c)
        residual = dict(current)
        for m, c in rhs.items():
            _lp_add(residual, m, -c)
        if residual:
            mono = min(residual)
            return rep.fail(n=n, monomial=list(mono), residual=residual[mono])
        prev = current
    return rep


@dataclass(frozen=True)
class EvalPoint:
    """Nonzero exact rational values for the endpoint marks ``(x, y)`` or ``(x, y, z)``."""

    coords: tuple

    def __post_init__(self):
        cs = tuple(parse_rational(c) for c in self.coords)
        if any(c == 0 for c in cs):
            raise PreconditionError(f"evaluation point {cs} has a zero coordinate")
        object.__setattr__(self, "coords", cs)

    @property
    def distinct(self) -> bool:
        return len(set(self.coords)) == len(self.coords)


def kernel_weight(terms, point: Sequence) -> BivarPoly:
    """Coefficient of ``-t`` in the kernel at a rational point, as a polynomial in alpha, beta."""
    total = BivarPoly()
    for w, exps in terms:
        m = Fraction(1)
        for x, e in zip(point, exps):
            m *= Fraction(x) ** e
        total = total + w * m
    return total


def kernel_weight_on_line(terms, pattern: str) -> dict:
    """Kernel weight after substituting ``1`` or ``p`` per coordinate (e.g. ``"11p"``).

    Returns a Laurent polynomial in ``p``: ``{exponent: BivarPoly}``.
    """
    out: dict = {}
    for w, exps in terms:
        e = sum(x for x, c in zip(exps, pattern) if c == "p")
        out[e] = out.get(e, BivarPoly()) + w
    return {e: c for e, c in out.items() if c}


def _rotate(pt):
    return tuple(pt[1:]) + (pt[0],)


def _invert(pt):
    return tuple(1 / Fraction(c) for c in pt)


def check_kernel_invariance(model: str, samples: Sequence) -> Report:
    """Check the kernel symmetries exactly at sample points and along the 1-parameter lines.

    Triangle: rotation ``(y,z,x)`` must fix the kernel; inversion
    ``(1/x,1/y,1/z)`` fixes it up to exchanging alpha and beta (exactly when
    alpha = beta), and the inversion composed with ``y <-> z`` fixes it
    outright.  Line: the swap ``(y,x)``.  Then each 1-parameter substitution
    must give ``(alpha+beta)(p + 1 + 1/p)`` (triangle) or ``p + 1/p`` (line).
    """
    points = [s if isinstance(s, EvalPoint) else EvalPoint(tuple(s)) for s in samples]
    rep = Report("kernel", {"model": model, "samples": [list(pt.coords) for pt in points]})
    checked = 0
    if model == "triangle":
        terms = TRIANGLE_KERNEL_TERMS
        for pt in points:
            e = pt.coords
            if len(e) != 3:
                raise PreconditionError(f"triangle samples need three coordinates, got {e}")
            base = kernel_weight(terms, e)
            for name, image, fix in (
                ("rotation (y,z,x)", _rotate(e), lambda k: k),
                ("inversion (1/x,1/y,1/z) with alpha<->beta", _invert(e), BivarPoly.swap),
                ("inversion with y<->z (1/x,1/z,1/y)", _invert((e[0], e[2], e[1])), lambda k: k),
            ):
                checked += 1
                got = fix(kernel_weight(terms, image))
                if got != base:
                    rep.fail(generator=name, point=e, at_point=base, at_image=got)
        target = {1: ALPHA + BETA, 0: ALPHA + BETA, -1: ALPHA + BETA}
        patterns = ("11p", "1p1", "p11", "1pp", "p1p", "pp1")
    elif model == "line":
        terms = LINE_KERNEL_TERMS
        for pt in points:
            e = pt.coords
            if len(e) != 2:
                raise PreconditionError(f"line samples need two coordinates, got {e}")
            checked += 1
            base = kernel_weight(terms, e)
            got = kernel_weight(terms, (e[1], e[0]))
            if got != base:
                rep.fail(generator="swap (y,x)", point=e, at_point=base, at_image=got)
        one = BivarPoly.const(1)
        target = {1: one, -1: one}
        patterns = ("p1", "1p")
    else:
        raise ValueError(f"unknown model {model!r}")
    for pat in patterns:
        checked += 1
        got = kernel_weight_on_line(terms, pat)
        if got != target:
            rep.fail(substitution=pat, got={e: str(c) for e, c in got.items()},
                     want={e: str(c) for e, c in target.items()})
    rep.details["checks"] = checked
    return rep


def check_boundary_sum_identity(u: int, v: int, w: int, order: int) -> Report:
    """Two steps of the derivation of the triangle total, checked against DP data.

    With ``B = G(0,1,1) + G(1,0,1) + G(1,1,0)`` read off from DP counts:
        (alpha+beta) t B = (p^(u+1) + p^(v+1) + p^(w+1) - p^(L+2-u) - p^(L+2-v) - p^(L+2-w)) / (1 - p^(L+3))
        (1 - 3 (alpha+beta) t) G(1,1,1) = 1 - (alpha+beta) t B
    """
    _nonneg(u=u, v=v, w=w)
    L = u + v + w
    rep = Report("boundary-sum", {"start": [u, v, w], "order": order})
    table = count_walks(DomainSpec(2, L), (u, v, w), order)
    sides = [table_series(table, where=lambda e, a=a: e[a] == 0) for a in range(3)]
    B = sides[0] + sides[1] + sides[2]
    s = TruncSeries(BIVAR, [0, ALPHA + BETA], order)
    P = _triangle_powers(order, None)
    rhs = (P[u + 1] + P[v + 1] + P[w + 1] - P[L + 2 - u] - P[L + 2 - v] - P[L + 2 - w]) / P.one_minus(L + 3)
    compare_series(rep, s * B, rhs, "dp", "formula")
    G = table_series(table)
    compare_series(rep, (1 - 3 * s) * G, 1 - s * B, "lhs", "rhs")
    return rep
