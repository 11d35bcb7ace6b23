"""Bracket-constraint solver: examples, soundness, completeness."""

import random
from fractions import Fraction

import pytest

from lvf.errors import AnsatzExplosion, ParameterizedInput
from lvf.fields import VectorField
from lvf.parsing import parse_field
from lvf.solve import (
    AnsatzSpace,
    BracketConstraint,
    centralizer,
    centralizer_rank,
    solve,
)

from _rand import rand_field, rand_invertible


def F(text, params=()):
    return parse_field(text, 3, params)


class TestExamples:
    def test_eigenfields(self):
        ansatz = AnsatzSpace(3, exponents=[(1, 0, 0)], max_degree=0)
        res = solve([BracketConstraint.eigen(F("Dx"), 1)], ansatz)
        assert [str(b) for b in res.basis] == ["exp(x)*Dx", "exp(x)*Dy", "exp(x)*Dz"]

    def test_centralizer_form2(self):
        algebra = [F("Dx"), F("Dy"), F("y*Dx")]
        res = centralizer(algebra, AnsatzSpace(3, max_degree=2))
        assert res.dimension == 6
        # solutions are A(z) Dx + B(z) Dz
        for b in res.basis:
            assert b.components[1].is_zero()

    def test_centralizer_form3(self):
        algebra = [F("Dx"), F("Dy"), F("y*Dx + z*Dy")]
        res = centralizer(algebra, AnsatzSpace(3, max_degree=2))
        assert res.dimension == 3
        for b in res.basis:
            assert b.components[1].is_zero() and b.components[2].is_zero()

    def test_centralizer_ranks(self):
        assert centralizer_rank(
            [F("Dx"), F("Dy"), F("y*Dx")], AnsatzSpace(3, max_degree=4)
        ) == 2
        assert centralizer_rank(
            [F("Dx"), F("Dy"), F("y*Dx + z*Dy")], AnsatzSpace(3, max_degree=4)
        ) == 1
        assert centralizer_rank(
            [F("Dx"), F("Dy"), F("Dz")], AnsatzSpace(3, max_degree=0)
        ) == 3


class TestContracts:
    def test_parameterized_known_rejected(self):
        with pytest.raises(ParameterizedInput):
            solve(
                [BracketConstraint.commutes(F("lambda*Dx", params=("lambda",)))],
                AnsatzSpace(3, max_degree=1),
            )

    def test_explosion_bound(self):
        with pytest.raises(AnsatzExplosion):
            solve(
                [BracketConstraint.commutes(F("x*y*z*Dx"))],
                AnsatzSpace(3, max_degree=4),
                target_bound=10,
            )

    def test_inconsistent_equals_reports_witness(self):
        res = solve(
            [BracketConstraint.equals(F("Dx"), F("exp(x)*Dx"))],
            AnsatzSpace(3, max_degree=2),
        )
        assert res.inconsistency is not None
        assert res.basis == [] and res.particular is None

    def test_equals_particular(self):
        res = solve(
            [BracketConstraint.equals(F("Dx"), F("Dz"))],
            AnsatzSpace(3, max_degree=1),
        )
        assert res.particular == F("x*Dz")
        for b in res.basis:
            assert F("Dx").bracket(b).is_zero()


class TestProperties:
    def test_soundness_and_rank_nullity_random(self):
        rng = random.Random(41)
        for _ in range(60):
            known = rand_field(rng, dim=2, max_terms=1, with_exp=False)
            kind = rng.choice(("zero", "eigen"))
            if kind == "zero":
                cons = [BracketConstraint.commutes(known)]
            else:
                cons = [BracketConstraint.eigen(known, Fraction(rng.randint(-2, 2)))]
            ansatz = AnsatzSpace(2, max_degree=rng.randint(0, 2))
            res = solve(cons, ansatz)
            assert res.matrix_rank + res.dimension == res.ansatz_dim
            for b in res.basis:
                assert cons[0].residual(b).is_zero()

    def test_monotonicity_in_degree(self):
        algebra = [F("Dx"), F("Dy"), F("y*Dx")]
        small = centralizer(algebra, AnsatzSpace(3, max_degree=2))
        large = centralizer(algebra, AnsatzSpace(3, max_degree=4))
        assert large.dimension >= small.dimension
        # old solutions still solve the larger problem (they are the same
        # constraints); check they lie in the span of the new basis
        from lvf.algebra import express_in_basis

        for b in small.basis:
            express_in_basis(b, large.basis)

    def test_monotonicity_in_exponents(self):
        cons = [BracketConstraint.eigen(F("Dx"), 1)]
        small = solve(cons, AnsatzSpace(3, exponents=[(1, 0, 0)], max_degree=0))
        large = solve(
            cons, AnsatzSpace(3, exponents=[(1, 0, 0), (2, 0, 0)], max_degree=0)
        )
        assert large.dimension >= small.dimension

    def test_rank_invariant_under_recombination(self):
        rng = random.Random(43)
        algebra = [F("Dx"), F("Dy"), F("y*Dx")]
        base = centralizer_rank(algebra, AnsatzSpace(3, max_degree=3))
        for _ in range(10):
            m = rand_invertible(rng, 3)
            mixed = []
            for j in range(3):
                acc = VectorField.zero(3)
                for k in range(3):
                    acc = acc + algebra[k] * m[j][k]
                mixed.append(acc)
            assert centralizer_rank(mixed, AnsatzSpace(3, max_degree=3)) == base
