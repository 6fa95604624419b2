from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cube_lab.errors import InputError
from cube_lab.ring import LaurentRing, RewriteRelation


@pytest.fixture
def ring():
    return LaurentRing(["x", "y", "a"], invertible=["a"])


def test_difference_of_squares(ring):
    x, y = ring.var("x"), ring.var("y")
    assert (x + y) * (x - y) == x ** 2 - y ** 2


def test_additive_identity(ring):
    p = ring.var("x") * 3 + ring.var("y") ** 2
    assert p + ring.zero == p
    assert p + 0 == p


def test_alpha_square_difference():
    # (alpha + 1/alpha)^2 - (alpha - 1/alpha)^2 = 4
    ring = LaurentRing(["al"], invertible=["al"])
    al = ring.var("al")
    ai = al.monomial_inverse()
    assert (al + ai) ** 2 - (al - ai) ** 2 == ring.const(4)


def test_substitute_numeric(ring):
    x, y = ring.var("x"), ring.var("y")
    p = x ** 2 + y ** 2
    assert p.substitute({"x": 1, "y": 2}) == ring.const(5)
    assert p.evaluate({"x": 1, "y": 2, "a": 0}) == 5


def test_substitute_inverse_monomial():
    ring = LaurentRing(["a1", "a2", "a3"], invertible=["a1", "a2", "a3"])
    a1, a2, a3 = (ring.var(n) for n in ("a1", "a2", "a3"))
    product = a1 * a2 * a3
    constrained = product.substitute({"a3": (a1 * a2).monomial_inverse()})
    assert constrained == ring.one


def test_substitute_into_hyperdet_polynomial():
    # the degree-4 invariant, evaluated by substitution at the two-corner cube
    from cube_lab.cubes import ENTRY_NAMES, hyperdet_entries

    ring8 = LaurentRing(ENTRY_NAMES)
    hd = hyperdet_entries([ring8.var(n) for n in ENTRY_NAMES])
    values = {n: 0 for n in ENTRY_NAMES}
    values.update({"a": 1, "c": 1})
    assert hd.substitute(values) == ring8.one
    assert hd.evaluate(values) == 1


def test_substitute_rejects_noninvertible_binding():
    ring = LaurentRing(["a", "x"], invertible=["a"])
    p = ring.var("a", -1)
    with pytest.raises(InputError):
        p.substitute({"a": ring.var("x") + 1})


def test_negative_exponent_requires_invertible(ring):
    with pytest.raises(InputError):
        ring.var("x", -1)
    assert ring.var("a", -2).degree("a") == -2


def test_variable_universe_mismatch(ring):
    other = LaurentRing(["x", "y"])
    with pytest.raises(InputError):
        ring.var("x") + other.var("x")


def test_coeffs_divisible_by(ring):
    x, y = ring.var("x"), ring.var("y")
    assert (4 * x + 8 * y).coeffs_divisible_by(4)
    assert not (2 * x).coeffs_divisible_by(4)
    with pytest.raises(InputError):
        (x / 2).coeffs_divisible_by(2)


def test_reduce_mod_single_step():
    ring = LaurentRing(["x", "y", "a"])
    x, y, a = ring.var("x"), ring.var("y"), ring.var("a")
    rel = RewriteRelation(ring, "x", 1 + a ** 2 * y ** 2)
    assert rel.reduce(x ** 2) == 1 + a ** 2 * y ** 2
    # two rewrite steps
    assert rel.reduce(x ** 3) == x + a ** 2 * x * y ** 2
    # already reduced: fixed point
    p = x * y + a
    assert rel.reduce(p) == p


def test_reduce_mod_idempotent():
    ring = LaurentRing(["x", "y", "a"])
    x, y, a = ring.var("x"), ring.var("y"), ring.var("a")
    rel = RewriteRelation(ring, "x", 1 + a ** 2 * y ** 2)
    p = (x + y) ** 5 - a * x ** 4 + 3
    once = rel.reduce(p)
    assert rel.reduce(once) == once
    assert once.degree("x") <= 1


def test_rewrite_relation_validation():
    ring = LaurentRing(["x", "a"], invertible=["a"])
    with pytest.raises(InputError):
        RewriteRelation(ring, "a", ring.one)  # invertible rewrite variable
    with pytest.raises(InputError):
        RewriteRelation(ring, "x", ring.var("x") ** 2)  # degree-2 replacement


def test_monomial_inverse_errors(ring):
    with pytest.raises(InputError):
        (ring.var("x") + 1).monomial_inverse()
    a = ring.var("a")
    assert a.monomial_inverse() * a == ring.one


def test_power_negative_exponent():
    ring = LaurentRing(["a"], invertible=["a"])
    a = ring.var("a")
    assert (2 * a) ** -1 == ring.monomial(Fraction(1, 2), {"a": -1})
    assert (2 * a) ** -2 == ring.monomial(Fraction(1, 4), {"a": -2})


def test_repr_round_readable(ring):
    p = ring.var("x") ** 2 - 3 * ring.var("y") + ring.const(Fraction(1, 2))
    text = repr(p)
    assert "x^2" in text and "1/2" in text


# -- property tests -------------------------------------------------------------

_ring = LaurentRing(["x", "y", "a"], invertible=["a"])


@st.composite
def polys(draw, max_terms=4):
    terms = draw(st.lists(
        st.tuples(
            st.integers(min_value=0, max_value=3),
            st.integers(min_value=0, max_value=3),
            st.integers(min_value=-2, max_value=3),
            st.integers(min_value=-5, max_value=5),
        ),
        max_size=max_terms,
    ))
    p = _ring.zero
    for ex, ey, ea, coeff in terms:
        p = p + _ring.monomial(coeff, {"x": ex, "y": ey, "a": ea})
    return p


@given(polys(), polys(), polys())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@given(polys(), polys())
@settings(max_examples=40, deadline=None)
def test_substitution_is_a_homomorphism(p, q):
    bindings = {"x": _ring.var("y") + 2, "y": _ring.const(3)}
    assert (p * q).substitute(bindings) == p.substitute(bindings) * q.substitute(bindings)
    assert (p + q).substitute(bindings) == p.substitute(bindings) + q.substitute(bindings)


@given(polys())
@settings(max_examples=40, deadline=None)
def test_reduce_mod_idempotent_property(p):
    rel = RewriteRelation(_ring, "x", 1 + _ring.var("a") ** 2 * _ring.var("y") ** 2)
    once = rel.reduce(p)
    assert rel.reduce(once) == once
