"""Exact scalar arithmetic: canonical form, ring laws, differentiation."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lvf.errors import DimensionMismatch, LvfError, UnassignedParameter
from lvf.expr import ExpPoly, format_scalar
from lvf.parsing import parse_scalar

from _rand import rand_exppoly


def S(text, params=()):
    return parse_scalar(text, 3, params)


class TestCanonicalForm:
    def test_additive_inverse_is_empty(self):
        x = ExpPoly.coord(3, 0)
        assert (x + (-x)).is_zero()

    def test_like_terms_merge(self):
        assert S("exp(x)*y + exp(x)*y") == S("2*y*exp(x)")

    def test_parameter_cancellation(self):
        f = S("z^2/2 + l", params=("l",)) + S("z^2/2 - l", params=("l",))
        assert f == S("z^2")

    def test_zero_iff_empty(self):
        assert ExpPoly.zero(3).is_zero()
        assert not ExpPoly.coord(3, 1).is_zero()

    def test_double_normalization_is_identity(self):
        rng = random.Random(5)
        for _ in range(50):
            f = rand_exppoly(rng, with_params=True)
            assert f + ExpPoly.zero(3) == f


class TestMul:
    def test_exponent_cancellation(self):
        assert S("exp(x)") * S("exp(-x)") == S("1")

    def test_half_exponent_addition(self):
        e = S("exp((-x+y)/2)")
        assert e * e == S("exp(-x + y)")

    def test_monomials(self):
        assert S("y") * S("y/2") == S("y^2/2")

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            ExpPoly.coord(2, 0) * ExpPoly.coord(3, 0)


class TestDerive:
    def test_product_rule_with_exponential(self):
        assert S("exp(2*x)*y").diff(0) == S("2*exp(2*x)*y")

    def test_polynomial(self):
        assert S("z^2/2 + l", params=("l",)).diff(2) == S("z")

    def test_half_exponent(self):
        f = S("exp((-x+y)/2)*z")
        assert f.diff(1) == S("1/2*exp((-x+y)/2)*z")

    def test_mixed_partials_commute(self):
        rng = random.Random(17)
        for _ in range(50):
            f = rand_exppoly(rng, with_params=True)
            for i in range(3):
                for j in range(i, 3):
                    assert f.diff(i).diff(j) == f.diff(j).diff(i)


class TestSubstParams:
    def test_constraint_vanishes(self):
        f = S("a^2 + 2*b", params=("a", "b"))
        assert f.subst_params({"a": 2, "b": -2}).is_zero()

    def test_scaling_to_zero(self):
        f = S("lambda*y", params=("lambda",))
        assert f.subst_params({"lambda": 0}).is_zero()

    def test_binomial(self):
        f = S("(z + l)^2", params=("l",))
        assert f.subst_params({"l": 1}) == S("z^2 + 2*z + 1")

    def test_unassigned(self):
        with pytest.raises(UnassignedParameter):
            S("a*y", params=("a",)).subst_params({})


class TestEval:
    def test_examples(self):
        assert S("exp(x)*y").eval_numeric((0, 3, 0)) == pytest.approx(3.0)
        assert ExpPoly.zero(3).eval_numeric((1, 2, 3)) == 0.0
        assert S("z^2").eval_numeric((0, 0, 2)) == pytest.approx(4.0)

    def test_add_consistency(self):
        rng = random.Random(3)
        for _ in range(100):
            f = rand_exppoly(rng)
            g = rand_exppoly(rng)
            pt = [rng.uniform(-1, 1) for _ in range(3)]
            lhs = (f + g).eval_numeric(pt)
            rhs = f.eval_numeric(pt) + g.eval_numeric(pt)
            assert abs(lhs - rhs) <= 1e-9


small = st.integers(min_value=-3, max_value=3)


@st.composite
def exppolys(draw):
    rng = random.Random(draw(st.integers(min_value=0, max_value=10 ** 6)))
    return rand_exppoly(rng, with_params=True)


@settings(max_examples=200, deadline=None, derandomize=True)
@given(exppolys(), exppolys(), exppolys())
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=200, deadline=None, derandomize=True)
@given(exppolys(), exppolys(), st.integers(min_value=0, max_value=2))
def test_leibniz(f, g, i):
    assert (f * g).diff(i) == f.diff(i) * g + f * g.diff(i)


class TestAffineSubst:
    def test_shift_kills_constant(self):
        # z -> z + 1/2 applied to  -((z - 1/2)^2 + d - 1/4)
        f = S("-((z - 1/2)^2 + d - 1/4)", params=("d",))
        m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        g = f.subst_affine(m, [0, 0, Fraction(1, 2)])
        assert g == S("-(z^2 + d - 1/4)", params=("d",))

    def test_exponential_shift_rejected(self):
        f = S("exp(x)")
        m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        with pytest.raises(LvfError):
            f.subst_affine(m, [1, 0, 0])

    def test_linear_exponent_transform(self):
        f = S("exp(x)")
        m = [[2, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert f.subst_affine(m, [0, 0, 0]) == S("exp(2*x)")


def test_format_examples():
    assert format_scalar(S("2*y + y")) == "3*y"
    assert format_scalar(ExpPoly.zero(3)) == "0"
    # canonical term order sorts by (exponent, monomial)
    assert format_scalar(S("-x + y")) == "y - x"
