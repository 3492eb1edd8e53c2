"""Truncated power series in ``t`` over exact coefficient rings.

Three rings are supported: arbitrary-precision integers (``INT``), exact
rationals (``RAT``) and polynomials in the two step weights alpha, beta
(``BIVAR``).  Nothing in this module touches floating point.

The kernel roots needed by the closed forms are expanded directly from their
algebraic equations (``p = t(1 + p^2)`` and ``p = s(1 + p + p^2)``), so no
square roots appear anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InversionError, ReconstructionError, RingMismatchError

__all__ = [
    "BivarPoly", "Ring", "INT", "RAT", "BIVAR", "ring_by_name",
    "TruncSeries", "RationalFn",
    "trunc_mul", "trunc_inv", "scale_substitute", "solve_kernel_root",
    "pade_reconstruct", "parse_rational",
]


def parse_rational(text) -> Fraction:
    """Parse an exact rational given as int, Fraction or ``"a"`` / ``"a/b"`` string.

    Floats and decimal strings are rejected on purpose.
    """
    if isinstance(text, bool):
        raise TypeError("booleans are not weights")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, str):
        s = text.strip()
        num, _, den = s.partition("/")
        try:
            return Fraction(int(num), int(den) if den else 1)
        except ValueError:
            raise ValueError(f"not an exact rational: {text!r}") from None
    raise TypeError(f"not an exact rational: {text!r}")


def _exact(c):
    """Demote integral Fractions to int so equality and printing stay canonical."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class BivarPoly:
    """Polynomial in alpha, beta with exact coefficients.

    Stored as a dict ``{(e_alpha, e_beta): coeff}`` without zero entries.
    Coefficients are ints in normal use; rationals are accepted so that the
    kernel can be evaluated at rational sample points.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[(int(k[0]), int(k[1]))] = _exact(c)
        self.terms = clean

    @classmethod
    def const(cls, c) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def alpha(cls) -> "BivarPoly":
        return cls({(1, 0): 1})

    @classmethod
    def beta(cls) -> "BivarPoly":
        return cls({(0, 1): 1})

    @staticmethod
    def _lift(other):
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BivarPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        r = BivarPoly()
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = BivarPoly()
        r.terms = {k: -c for k, c in self.terms.items()}
        return r

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            r = BivarPoly()
            if other:
                r.terms = {k: _exact(c * other) for k, c in self.terms.items()}
            return r
        if not isinstance(other, BivarPoly):
            return NotImplemented
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        r = BivarPoly()
        r.terms = {k: (c if type(c) is int else _exact(c)) for k, c in out.items() if c}
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = BivarPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"BivarPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            mono = "*".join(
                s for s in (
                    "" if a == 0 else ("alpha" if a == 1 else f"alpha^{a}"),
                    "" if b == 0 else ("beta" if b == 1 else f"beta^{b}"),
                ) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def coeff(self, a: int, b: int):
        return self.terms.get((a, b), 0)

    def constant(self):
        return self.terms.get((0, 0), 0)

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    def total_degree(self) -> int:
        return max((a + b for a, b in self.terms), default=-1)

    def truncate(self, max_degree: int) -> "BivarPoly":
        r = BivarPoly()
        r.terms = {k: c for k, c in self.terms.items() if k[0] + k[1] <= max_degree}
        return r

    def swap(self) -> "BivarPoly":
        """Exchange the roles of alpha and beta."""
        r = BivarPoly()
        r.terms = {(b, a): c for (a, b), c in self.terms.items()}
        return r

    def evaluate(self, alpha, beta):
        total = 0
        for (a, b), c in self.terms.items():
            total += c * Fraction(alpha) ** a * Fraction(beta) ** b
        return _exact(total)


class Ring:
    """Coefficient ring contract: zero, one, add, subtract, multiply, unit test."""

    name = "abstract"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def unit_inverse(self, a):
        raise NotImplementedError

    def normalize(self, a, order: int):
        """Hook for eager truncation of coefficients carrying extra structure."""
        return a

    def __repr__(self):
        return f"<ring {self.name}>"


class IntegerRing(Ring):
    name = "int"

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        if isinstance(x, BivarPoly) and x.is_constant():
            return self.coerce(x.constant())
        raise RingMismatchError(f"{x!r} is not an integer")

    def is_unit(self, a) -> bool:
        return a in (1, -1)

    def unit_inverse(self, a):
        if a not in (1, -1):
            raise InversionError(f"{a} is not a unit in the integers")
        return a


class RationalRing(Ring):
    name = "rat"

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return _exact(Fraction(x))
        if isinstance(x, BivarPoly) and x.is_constant():
            return self.coerce(x.constant())
        raise RingMismatchError(f"{x!r} is not a rational")

    def mul(self, a, b):
        return _exact(Fraction(a) * b)

    def is_unit(self, a) -> bool:
        return a != 0

    def unit_inverse(self, a):
        if a == 0:
            raise InversionError("zero is not invertible")
        return _exact(1 / Fraction(a))


class BivarRing(Ring):
    name = "bivar"

    def zero(self):
        return BivarPoly()

    def one(self):
        return BivarPoly.const(1)

    def coerce(self, x):
        if isinstance(x, BivarPoly):
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return BivarPoly.const(x)
        raise RingMismatchError(f"{x!r} is not a polynomial in alpha, beta")

    def is_unit(self, a) -> bool:
        return a.is_constant() and a.constant() in (1, -1)

    def unit_inverse(self, a):
        if not self.is_unit(a):
            raise InversionError(f"{a} is not a unit of Z[alpha, beta]")
        return a

    def normalize(self, a, order: int):
        return a.truncate(order)


INT = IntegerRing()
RAT = RationalRing()
BIVAR = BivarRing()
_RINGS = {r.name: r for r in (INT, RAT, BIVAR)}


def ring_by_name(name: str) -> Ring:
    try:
        return _RINGS[name]
    except KeyError:
        raise ValueError(f"unknown ring {name!r}; expected one of {sorted(_RINGS)}") from None


class TruncSeries:
    """``c_0 + c_1 t + ... + c_N t^N + O(t^(N+1))`` over one of the rings above.

    Binary operations truncate to the smaller of the two orders.
    """

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring: Ring, coeffs: Iterable, order: int | None = None):
        cs = [ring.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be non-negative")
        cs = cs[: order + 1]
        cs.extend(ring.zero() for _ in range(order + 1 - len(cs)))
        self.ring = ring
        self.order = order
        self.coeffs = tuple(ring.normalize(c, order) for c in cs)

    @classmethod
    def _raw(cls, ring, coeffs, order):
        s = cls.__new__(cls)
        s.ring, s.order, s.coeffs = ring, order, tuple(coeffs)
        return s

    @classmethod
    def constant(cls, ring: Ring, c, order: int) -> "TruncSeries":
        return cls(ring, [c], order)

    @classmethod
    def gen(cls, ring: Ring, order: int) -> "TruncSeries":
        """The series ``t`` itself."""
        return cls(ring, [0, 1], order)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.ring is other.ring and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.name, self.coeffs))

    def __repr__(self):
        return f"TruncSeries({self.ring.name}, order={self.order}, {list(map(str, self.coeffs))})"

    def _check(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            if other.ring is not self.ring:
                raise RingMismatchError(f"cannot combine {self.ring.name} and {other.ring.name} series")
            return other
        return TruncSeries.constant(self.ring, other, self.order)

    def __add__(self, other):
        other = self._check(other)
        n = min(self.order, other.order)
        return TruncSeries._raw(self.ring, [a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw(self.ring, [-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return trunc_mul(self, other)
        c = self.ring.coerce(other)
        return TruncSeries._raw(self.ring, [self.ring.mul(a, c) for a in self.coeffs], self.order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return trunc_mul(self, trunc_inv(self._check(other)))
        return self * self.ring.unit_inverse(self.ring.coerce(other))

    def __pow__(self, k: int):
        if k < 0:
            return trunc_inv(self) ** (-k)
        result = TruncSeries.constant(self.ring, 1, self.order)
        base = self
        while k:
            if k & 1:
                result = trunc_mul(result, base)
            k >>= 1
            if k:
                base = trunc_mul(base, base)
        return result

    def inverse(self) -> "TruncSeries":
        return trunc_inv(self)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("truncation cannot raise the order of a series")
        return TruncSeries._raw(self.ring, self.coeffs[: order + 1], order)

    def div_t(self) -> "TruncSeries":
        """Divide by ``t``; the constant term must vanish.  The order drops by one."""
        if self.coeffs[0]:
            raise ValueError("constant term is nonzero; series is not divisible by t")
        if self.order == 0:
            raise ValueError("cannot divide an order-0 series by t")
        return TruncSeries._raw(self.ring, self.coeffs[1:], self.order - 1)

    def mul_t(self, k: int = 1) -> "TruncSeries":
        """Multiply by ``t^k`` keeping the order."""
        zeros = [self.ring.zero()] * k
        return TruncSeries._raw(self.ring, (zeros + list(self.coeffs))[: self.order + 1], self.order)

    def map(self, fn, ring: Ring) -> "TruncSeries":
        """Apply a coefficient map into another ring (e.g. evaluating alpha, beta)."""
        return TruncSeries(ring, [fn(c) for c in self.coeffs], self.order)

    def evaluate_weights(self, alpha, beta) -> "TruncSeries":
        """Substitute exact rational values for alpha and beta in a bivariate series."""
        if self.ring is not BIVAR:
            raise RingMismatchError("only bivariate series carry alpha, beta")
        a, b = parse_rational(alpha), parse_rational(beta)
        vals = [c.evaluate(a, b) for c in self.coeffs]
        ring = INT if all(isinstance(v, int) for v in vals) else RAT
        return TruncSeries(ring, vals, self.order)

    def to_ring(self, ring: Ring) -> "TruncSeries":
        return TruncSeries(ring, self.coeffs, self.order)

    def to_dict(self) -> dict:
        return {"order": self.order, "ring": self.ring.name,
                "coeffs": [_coeff_to_json(self.ring, c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data: dict) -> "TruncSeries":
        ring = ring_by_name(data["ring"])
        return cls(ring, [_coeff_from_json(ring, c) for c in data["coeffs"]], data["order"])


def _coeff_to_json(ring: Ring, c):
    if ring is BIVAR:
        return [[a, b, _scalar_to_json(v)] for (a, b), v in sorted(c.terms.items())]
    return _scalar_to_json(c)


def _scalar_to_json(c) -> str:
    c = _exact(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _coeff_from_json(ring: Ring, c):
    if ring is BIVAR:
        return BivarPoly({(a, b): parse_rational(v) for a, b, v in c})
    return _exact(parse_rational(c))


def trunc_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated to the smaller order."""
    if a.ring is not b.ring:
        raise RingMismatchError(f"cannot multiply {a.ring.name} by {b.ring.name} series")
    ring = a.ring
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    # skip zero terms: kernel-root powers are very sparse at low order
    nz_a = [(i, c) for i, c in enumerate(ac[: n + 1]) if c]
    nz_b = [(j, c) for j, c in enumerate(bc[: n + 1]) if c]
    out = [ring.zero() for _ in range(n + 1)]
    for i, x in nz_a:
        for j, y in nz_b:
            if i + j > n:
                break
            out[i + j] = out[i + j] + x * y
    return TruncSeries._raw(ring, [ring.normalize(_norm(ring, c), n) for c in out], n)


def _norm(ring, c):
    return _exact(c) if ring is not BIVAR else c


def trunc_inv(a: TruncSeries) -> TruncSeries:
    """Multiplicative inverse to the order of ``a``; needs a unit constant term."""
    ring = a.ring
    if not ring.is_unit(a.coeffs[0]):
        raise InversionError(f"constant term {a.coeffs[0]} is not a unit of the {ring.name} ring")
    c0inv = ring.unit_inverse(a.coeffs[0])
    ac = a.coeffs
    nz = [(k, c) for k, c in enumerate(ac) if k and c]
    out = [c0inv]
    for n in range(1, a.order + 1):
        acc = ring.zero()
        for k, c in nz:
            if k > n:
                break
            acc = acc + c * out[n - k]
        out.append(ring.normalize(_norm(ring, -(acc * c0inv)), a.order))
    return TruncSeries._raw(ring, out, a.order)


def scale_substitute(a: TruncSeries, c) -> TruncSeries:
    """Return ``a(c t)``: the coefficient of ``t^n`` is multiplied by ``c^n``."""
    ring = a.ring
    c = ring.coerce(c)
    out = []
    power = ring.one()
    for n, x in enumerate(a.coeffs):
        out.append(ring.normalize(_norm(ring, x * power), a.order))
        power = power * c
    return TruncSeries._raw(ring, out, a.order)


def solve_kernel_root(model: str, order: int, ring: Ring = INT, weights=None) -> TruncSeries:
    """Power series root ``p`` (with ``p(0) = 0``) of the model's kernel equation.

    ``line``:      ``p = t (1 + p^2)``,  i.e. ``p = t D(t)`` with D the Dyck series.
    ``triangle``:  ``p = s (1 + p + p^2)`` with ``s = (alpha + beta) t``.

    The fixed-point map gains one order per application, so coefficient ``n``
    is final after ``n`` iterations; the loop below runs that iteration
    coefficient by coefficient.  For the triangle, ``weights`` is ``(alpha,
    beta)``; it defaults to symbolic alpha, beta on the bivariate ring and to
    ``(1, 1)`` otherwise.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if model == "line":
        scale = ring.one()
        linear = False
    elif model == "triangle":
        if weights is None:
            weights = (BivarPoly.alpha(), BivarPoly.beta()) if ring is BIVAR else (1, 1)
        alpha, beta = (w if isinstance(w, BivarPoly) else parse_rational(w) for w in weights)
        scale = ring.coerce(alpha + beta)
        linear = True
    else:
        raise ValueError(f"unknown model {model!r}; expected 'line' or 'triangle'")

    p = [ring.zero()]
    for n in range(1, order + 1):
        # coefficient of t^(n-1) in 1 (+ p) + p^2
        acc = ring.one() if n == 1 else ring.zero()
        if linear:
            acc = acc + p[n - 1]
        for i in range(1, n - 1):
            acc = acc + p[i] * p[n - 1 - i]
        p.append(ring.normalize(_norm(ring, scale * acc), order))
    return TruncSeries._raw(ring, p, order)


# ---------------------------------------------------------------- rational functions

def _ptrim(a: list) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(x) for x in _ptrim(a)]
    b = _ptrim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        f = a[-1] / lead
        q[k] = f
        for i, bc in enumerate(b):
            a[k + i] -= f * bc
        a = _ptrim(a)
    return q, a


def _pgcd(a: list, b: list) -> list:
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return [Fraction(1)]
    lead = Fraction(a[-1])
    return [Fraction(x) / lead for x in a]


class RationalFn:
    """``numerator / denominator`` in ``t`` over the rationals, coprime, ``denominator(0) = 1``."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Sequence, denominator: Sequence):
        num = _ptrim(Fraction(x) for x in numerator)
        den = _ptrim(Fraction(x) for x in denominator)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if den[0] == 0:
            raise ValueError("denominator must not vanish at t = 0")
        g = _pgcd(num, den) if num else [Fraction(1)]
        if len(g) > 1:
            num, r1 = _pdivmod(num, g)
            den, r2 = _pdivmod(den, g)
            assert not r1 and not r2
        c = den[0]
        self.numerator = tuple(_exact(x / c) for x in _ptrim(num))
        self.denominator = tuple(_exact(x / c) for x in _ptrim(den))

    @property
    def degrees(self) -> tuple[int, int]:
        return (max(len(self.numerator) - 1, 0), len(self.denominator) - 1)

    def expand(self, order: int) -> TruncSeries:
        num = TruncSeries(RAT, self.numerator or [0], order)
        den = TruncSeries(RAT, self.denominator, order)
        return num / den

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __repr__(self):
        return f"RationalFn({self})"

    def __str__(self):
        def wrap(cs):
            text = _poly_str(cs)
            return f"({text})" if len(cs) > 1 else text

        if self.degrees[1] == 0:
            return _poly_str(self.numerator)
        return f"{wrap(self.numerator)}/{wrap(self.denominator)}"

    def to_dict(self) -> dict:
        dn, dd = self.degrees
        return {"numerator": [_scalar_to_json(c) for c in self.numerator],
                "denominator": [_scalar_to_json(c) for c in self.denominator],
                "deg_num": dn, "deg_den": dd}


def _poly_str(cs) -> str:
    terms = []
    for i, c in enumerate(cs):
        if not c:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction], nvars: int) -> list[Fraction] | None:
    """Gaussian elimination over Q, pivoting on the first nonzero entry.

    Free variables are set to zero.  Returns None for an inconsistent system.
    """
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(nvars):
        piv = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    for i in range(row, len(m)):
        if m[i][-1] != 0:
            return None
    sol = [Fraction(0)] * nvars
    for i, col in enumerate(pivots):
        sol[col] = m[i][-1]
    return sol


def pade_reconstruct(a: TruncSeries, deg_num: int, deg_den: int) -> RationalFn:
    """Exact rational function with the given degree bounds matching every coefficient of ``a``.

    Raises ReconstructionError when ``a`` is too short for the bounds or when no
    rational function within the bounds reproduces all supplied coefficients.
    The result is reduced, so its degrees are the minimal ones.
    """
    if deg_num < 0 or deg_den < 0:
        raise ValueError("degree bounds must be non-negative")
    if a.ring is BIVAR:
        raise RingMismatchError("reconstruction needs integer or rational coefficients")
    N = a.order
    if N < deg_num + deg_den + 1:
        raise ReconstructionError(
            f"order {N} too small for degrees ({deg_num}, {deg_den}); need at least {deg_num + deg_den + 1}")
    c = [Fraction(x) for x in a.coeffs]

    def coef(i):
        return c[i] if i >= 0 else Fraction(0)

    # unknowns q_1..q_k with q_0 = 1; (a * q)_i = 0 for deg_num < i <= N
    rows, rhs = [], []
    for i in range(deg_num + 1, N + 1):
        rows.append([coef(i - j) for j in range(1, deg_den + 1)])
        rhs.append(-c[i])
    if deg_den:
        sol = _solve_exact(rows, rhs, deg_den)
        if sol is None:
            raise ReconstructionError(f"no rational function with degrees <= ({deg_num}, {deg_den}) fits")
    else:
        if any(rhs):
            raise ReconstructionError(f"no polynomial of degree <= {deg_num} fits")
        sol = []
    q = [Fraction(1)] + sol
    p = [sum((q[j] * coef(i - j) for j in range(min(i, deg_den) + 1)), Fraction(0))
         for i in range(deg_num + 1)]
    result = RationalFn(p, q)
    if result.expand(N).coeffs != TruncSeries(RAT, c, N).coeffs:
        raise ReconstructionError("candidate rational function does not reproduce the input")
    return result
