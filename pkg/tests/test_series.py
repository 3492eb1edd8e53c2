from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trilat.errors import InversionError, ReconstructionError, RingMismatchError
from trilat.series import (
    BIVAR, INT, RAT, BivarPoly, RationalFn, TruncSeries, pade_reconstruct, scale_substitute,
    solve_kernel_root, trunc_inv, trunc_mul,
)

A, B = BivarPoly.alpha(), BivarPoly.beta()


def S(coeffs, order=None, ring=INT):
    return TruncSeries(ring, coeffs, order)


# ---------------------------------------------------------------- examples

def test_trunc_mul_examples():
    assert trunc_mul(S([1, 1], 2), S([1, -1], 2)) == S([1, 0, -1])
    a = S([3, -1, 4, 1, 5])
    assert trunc_mul(S([1], 4), a) == a
    assert trunc_mul(S([1, 1, 1]), S([1, 1, 1])) == S([1, 2, 3])


def test_trunc_mul_takes_min_order():
    assert trunc_mul(S([1, 1], 5), S([1, 1], 2)).order == 2


def test_trunc_mul_ring_mismatch():
    with pytest.raises(RingMismatchError):
        trunc_mul(S([1, 1]), S([1, 1], ring=RAT))


def test_trunc_inv_examples():
    assert trunc_inv(S([1, -1], 3)) == S([1, 1, 1, 1])
    assert trunc_inv(S([1], 0)) == S([1])
    # oracle: a_n = 2 a_(n-1) + 4 a_(n-2)
    a = [1, 2]
    for _ in range(10):
        a.append(2 * a[-1] + 4 * a[-2])
    assert trunc_inv(S([1, -2, -4], 3)) == S([1, 2, 8, 24])
    assert trunc_inv(S([1, -2, -4], 11)) == S(a)


def test_trunc_inv_non_unit():
    with pytest.raises(InversionError):
        trunc_inv(S([2, 1], 3))
    with pytest.raises(InversionError):
        trunc_inv(S([A + 1, 1], 3, BIVAR))
    with pytest.raises(InversionError):
        trunc_inv(S([0, 1], 3, RAT))
    assert trunc_inv(S([2, 1], 2, RAT)) == S([Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8)], ring=RAT)


def test_scale_substitute():
    m = [1, 1, 2, 4, 9, 21]
    assert scale_substitute(S(m), 2) == S([c * 2**n for n, c in enumerate(m)])
    assert scale_substitute(S(m), 0) == S([1], 5)
    tm = S([0] + m[:5], ring=BIVAR)
    # t M(t) rescaled by alpha + beta is the triangle kernel root
    assert scale_substitute(tm, A + B) == solve_kernel_root("triangle", 5, BIVAR)


def test_kernel_root_examples():
    assert solve_kernel_root("line", 7) == S([0, 1, 0, 1, 0, 2, 0, 5])
    assert solve_kernel_root("triangle", 5, INT, (1, 0)) == S([0, 1, 1, 2, 4, 9])
    assert solve_kernel_root("triangle", 0, BIVAR) == S([0], ring=BIVAR)


def test_kernel_root_matches_plain_fixed_point_iteration():
    N = 12
    t = TruncSeries.gen(INT, N)
    p = S([0], N)
    for _ in range(N):
        p = t * (1 + p * p)
    assert p == solve_kernel_root("line", N)

    tb = TruncSeries.gen(BIVAR, N)
    s = tb * (A + B)
    q = S([0], N, BIVAR)
    for _ in range(N):
        q = s * (1 + q + q * q)
    assert q == solve_kernel_root("triangle", N, BIVAR)


@pytest.mark.parametrize("model", ["line", "triangle"])
def test_kernel_root_satisfies_kernel_equation(model):
    N = 20
    if model == "line":
        p = solve_kernel_root("line", N)
        t = TruncSeries.gen(INT, N)
        residual = p - t * (1 + p * p)
    else:
        p = solve_kernel_root("triangle", N, BIVAR)
        s = TruncSeries.gen(BIVAR, N) * (A + B)
        residual = p - s * (1 + p + p * p)
    assert all(not c for c in residual)


def test_kernel_root_rejects_unknown_model():
    with pytest.raises(ValueError):
        solve_kernel_root("square", 3)


# ---------------------------------------------------------------- rings

small = st.integers(-5, 5)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
bivars = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), small, max_size=4).map(BivarPoly)


@pytest.mark.parametrize("ring,elems", [(INT, small), (RAT, rationals), (BIVAR, bivars)])
def test_ring_axioms(ring, elems):
    @settings(max_examples=80, deadline=None)
    @given(elems, elems, elems)
    def check(a, b, c):
        a, b, c = ring.coerce(a), ring.coerce(b), ring.coerce(c)
        assert ring.add(a, b) == ring.add(b, a)
        assert ring.mul(a, b) == ring.mul(b, a)
        assert ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))
        assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
        assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
        assert ring.add(a, ring.zero()) == a
        assert ring.mul(a, ring.one()) == a
        assert ring.sub(a, a) == ring.zero()

    check()


def _unit_series(ring, elems):
    units = {INT: st.sampled_from([1, -1]), RAT: rationals.filter(bool),
             BIVAR: st.sampled_from([1, -1]).map(BivarPoly.const)}[ring]
    return st.tuples(units, st.lists(elems, min_size=6, max_size=6)).map(
        lambda x: TruncSeries(ring, [x[0]] + x[1]))


@pytest.mark.parametrize("ring,elems", [(INT, small), (RAT, rationals), (BIVAR, bivars)])
def test_trunc_inv_two_sided(ring, elems):
    @settings(max_examples=200, deadline=None)
    @given(_unit_series(ring, elems))
    def check(a):
        one = TruncSeries.constant(ring, 1, a.order)
        inv = trunc_inv(a)
        assert trunc_mul(a, inv) == one
        assert trunc_mul(inv, a) == one

    check()


def test_bivar_poly_basics():
    p = (A + B) ** 2
    assert p == BivarPoly({(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert (p - p) == 0 and not (p - p)
    assert p.evaluate(1, 1) == 4
    assert p.truncate(1) == BivarPoly()
    assert (A * 2 + B).swap() == B * 2 + A
    assert str(A - B) == "alpha - beta"


# ---------------------------------------------------------------- rational reconstruction

def test_pade_geometric():
    rf = pade_reconstruct(S([2**n for n in range(12)], ring=RAT), 3, 3)
    assert rf == RationalFn([1], [1, -2])
    assert rf.degrees == (0, 1)


def test_pade_two_term_recurrence():
    a = [1, 2]
    for _ in range(12):
        a.append(2 * a[-1] + 4 * a[-2])
    assert a[:5] == [1, 2, 8, 24, 80]
    rf = pade_reconstruct(S(a, ring=RAT), 4, 4)
    assert rf == RationalFn([1], [1, -2, -4])


def test_pade_degree_one_over_one():
    # (1 - 2t)/(1 - 4t) = 1 + 2t + 8t^2 + 32t^3 + ...
    series = S([1] + [2 * 4 ** (n - 1) for n in range(1, 14)], ring=RAT)
    rf = pade_reconstruct(series, 5, 5)
    assert rf == RationalFn([1, -2], [1, -4])
    assert rf.degrees == (1, 1)


def test_pade_failure_and_short_input():
    from math import comb
    catalan = [comb(2 * n, n) // (n + 1) for n in range(12)]
    with pytest.raises(ReconstructionError):
        pade_reconstruct(S(catalan, ring=RAT), 4, 4)
    with pytest.raises(ReconstructionError):
        pade_reconstruct(S([1, 2, 3], ring=RAT), 2, 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=1, max_size=3), st.lists(small, min_size=0, max_size=3))
def test_pade_roundtrip_random_rational(num, den_tail):
    N = 16
    series = S(num, N, RAT) / S([1] + den_tail, N, RAT)
    rf = pade_reconstruct(series, 3, 3)
    assert rf.expand(N) == series
    assert rf.denominator[0] == 1


def test_series_json_roundtrip():
    for s in (S([1, -2, 3]), S([Fraction(1, 2), 0, Fraction(-3, 4)], ring=RAT), S([1, A + B, A * B * 3], ring=BIVAR)):
        assert TruncSeries.from_dict(s.to_dict()) == s
    assert S([Fraction(1, 2)], ring=RAT).to_dict() == {"order": 0, "ring": "rat", "coeffs": ["1/2"]}
    assert S([0, A * 2], ring=BIVAR).to_dict()["coeffs"] == [[], [[1, 0, "2"]]]


def test_bivar_terms_above_the_order_are_dropped():
    # weights only enter with a power of t, so alpha^a beta^b with a + b > N never
    # reaches order N; dropping them keeps a quotient ring
    assert S([A * 2], ring=BIVAR) == S([0], ring=BIVAR)
    assert S([A * 2, A * B], 2, BIVAR) * S([1, A], 2, BIVAR) == S([A * 2, A * B + A * A * 2, 0], ring=BIVAR)


def test_div_t_requires_zero_constant():
    assert S([0, 1, 2]).div_t() == S([1, 2])
    with pytest.raises(ValueError):
        S([1, 1]).div_t()
