"""Acceptance suite: one test and one printed pass/fail line per criterion.

Every check is exact (rational arithmetic, structural equality); the
only floating-point comparison in the package is the advisory numeric
evaluator, which is not part of these criteria.  Randomized suites run
at least 1000 cases each from fixed seeds.
"""

import functools
import io
import random
import contextlib
from fractions import Fraction

from lvf import catalog, verify
from lvf.cli import main as cli_main
from lvf.fields import affine_pullback, bracket, generic_rank
from lvf.obstruction import b2_sanity_control, g2_obstruction
from lvf.parsing import parse_field, parse_scalar
from lvf.roots import b2_sl4_model, build_chevalley, get_root_system
from lvf.solve import AnsatzSpace, BracketConstraint, centralizer_rank, solve

from _rand import rand_affine, rand_exppoly, rand_field


def criterion(number, label):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"criterion {number} ({label}): FAIL")
                raise
            print(f"criterion {number} ({label}): PASS")

        return run

    return wrap


@criterion(1, "catalog verification, 16/16 exact")
def test_criterion_1_catalog():
    summary = verify.verify_all()
    assert summary.counts == (16, 16)
    for report in summary.reports:
        assert report.passed
        for check in report.relations:
            assert check.ok and check.residual == "0"


@criterion(2, "Heisenberg separation by rank and centralizer rank")
def test_criterion_2_heisenberg_separation():
    ranks = []
    for i in (1, 2, 3):
        entry = catalog.get(f"heisenberg.{i}")
        gens = entry.generators_at(entry.default_assignment())
        ranks.append(generic_rank(list(gens.values())))
    assert ranks == [3, 2, 2]

    ansatz = AnsatzSpace(3, max_degree=4)
    form2 = catalog.get("heisenberg.2").generators_at({"lambda": Fraction(0)})
    assert centralizer_rank(list(form2.values()), ansatz) == 2
    form3 = catalog.get("heisenberg.3").generators_at({})
    assert centralizer_rank(list(form3.values()), ansatz) == 1


@criterion(3, "Killing-form semisimplicity with expected closure dimensions")
def test_criterion_3_semisimplicity():
    summary = verify.verify_all()
    expected_dim = {"heisenberg": 3, "sl2": 3, "sl2xsl2": 6, "a2": 8, "b2": 10}
    for report in summary.reports:
        family = report.entry_id.split(".")[0]
        assert report.closure_dim == expected_dim[family]
        if family == "heisenberg":
            assert report.semisimple is False
        else:
            assert report.semisimple is True


@criterion(4, "inductive root-vector construction against the sl4 model")
def test_criterion_4_chevalley():
    b2 = get_root_system("B2")
    model = build_chevalley(b2, b2_sl4_model())  # raises on any violated relation
    gens = catalog.get("b2.1").generator_map()
    simple = {
        (1, 0): gens["X_alpha"],
        (-1, 0): gens["X_malpha"],
        (0, 1): gens["X_beta"],
        (0, -1): gens["X_mbeta"],
    }
    realized = build_chevalley(b2, simple)
    # identical structure-constant tables: the N table of the model
    # verifies every bracket of the realization (and conversely)
    assert realized.constants == model.constants
    for (r, s), n in model.constants.items():
        total = (r[0] + s[0], r[1] + s[1])
        lhs = realized.vector(r).bracket(realized.vector(s))
        assert lhs == realized.vector(total) * n


@criterion(5, "rank-2 obstruction on all three planar forms, with B2 control")
def test_criterion_5_obstruction():
    allowed = {"X_{alpha+2beta}", "X_{2alpha+3beta}"}
    for form in (1, 2, 3):
        for degree in (2, 4, 6):
            report = g2_obstruction(form, AnsatzSpace(3, max_degree=degree))
            assert report.verdict == "obstructed"
            assert report.vanished_vectors
            assert set(report.vanished_vectors) <= allowed
    control = b2_sanity_control()
    assert control.validated and not control.obstructed


def _suite_bracket(cases):
    rng = random.Random(1001)
    for _ in range(cases):
        x = rand_field(rng, max_terms=1)
        y = rand_field(rng, max_terms=1)
        z = rand_field(rng, max_terms=1)
        c = Fraction(rng.randint(-3, 3), rng.choice((1, 2)))
        assert bracket(x, y) == -(bracket(y, x))
        assert bracket(x + y * c, z) == bracket(x, z) + bracket(y, z) * c
        jac = (
            bracket(x, bracket(y, z))
            + bracket(y, bracket(z, x))
            + bracket(z, bracket(x, y))
        )
        assert jac.is_zero()


def _suite_leibniz(cases):
    rng = random.Random(1002)
    for _ in range(cases):
        f = rand_exppoly(rng, with_params=True)
        g = rand_exppoly(rng, with_params=True)
        i = rng.randrange(3)
        assert (f * g).diff(i) == f.diff(i) * g + f * g.diff(i)


def _suite_naturality(cases):
    rng = random.Random(1003)
    for _ in range(cases):
        with_exp = rng.random() < 0.5
        x = rand_field(rng, dim=2, max_terms=1, with_exp=with_exp)
        y = rand_field(rng, dim=2, max_terms=1, with_exp=with_exp)
        t = rand_affine(rng, 2, allow_shift=not with_exp)
        assert affine_pullback(bracket(x, y), t) == bracket(
            affine_pullback(x, t), affine_pullback(y, t)
        )


def _suite_ring_laws(cases):
    rng = random.Random(1004)
    for _ in range(cases):
        f = rand_exppoly(rng, with_params=True)
        g = rand_exppoly(rng, with_params=True)
        h = rand_exppoly(rng, with_params=True)
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def _suite_solver(cases):
    rng = random.Random(1005)
    for _ in range(cases):
        known = rand_field(rng, dim=2, max_terms=1, with_exp=False)
        if rng.random() < 0.5:
            cons = BracketConstraint.commutes(known)
        else:
            cons = BracketConstraint.eigen(known, Fraction(rng.randint(-2, 2)))
        ansatz = AnsatzSpace(2, max_degree=rng.randint(0, 1))
        res = solve([cons], ansatz)
        assert res.matrix_rank + res.dimension == res.ansatz_dim
        for b in res.basis:
            assert cons.residual(b).is_zero()


def _suite_parser(cases):
    from lvf.expr import format_scalar
    from lvf.fields import format_field

    rng = random.Random(1006)
    params = ("a", "b", "lam")
    for _ in range(cases):
        f = rand_exppoly(rng, with_params=True)
        text = format_scalar(f)
        assert parse_scalar(text, 3, params) == f
        assert format_scalar(parse_scalar(text, 3, params)) == text
        x = rand_field(rng, max_terms=1, with_params=True)
        ftext = format_field(x)
        assert parse_field(ftext, 3, params) == x


@criterion(6, "property suites, 1000 exact cases each")
def test_criterion_6_property_suites():
    cases = 1000
    _suite_bracket(cases)
    _suite_leibniz(cases)
    _suite_naturality(cases)
    _suite_ring_laws(cases)
    _suite_solver(cases)
    _suite_parser(cases)


@criterion(7, "constraint handling in the third sl2 x sl2 form")
def test_criterion_7_constraints():
    entry = catalog.get("sl2xsl2.3")
    good = verify.verify_realization(entry, params={"a": 2, "b": -2})
    assert good.passed
    bad = verify.verify_realization(entry, params={"a": 2, "b": 0})
    assert not bad.constraint_ok
    assert any(not check.ok for check in bad.relations)


@criterion(8, "byte-identical machine-readable verification output")
def test_criterion_8_determinism():
    def run_once():
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli_main(["verify", "--all", "--format", "records"])
        return code, buf.getvalue().encode("utf-8")

    code1, out1 = run_once()
    code2, out2 = run_once()
    assert code1 == code2 == 0
    assert out1 == out2
