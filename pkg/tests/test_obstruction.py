"""Short-root extension obstruction and its B2 sanity control."""

from fractions import Fraction

import pytest

from lvf import catalog
from lvf.fields import bracket
from lvf.obstruction import (
    FORM_TO_ENTRY,
    b2_sanity_control,
    g2_obstruction,
)
from lvf.solve import AnsatzSpace


def test_form_mapping():
    assert FORM_TO_ENTRY == {1: "a2.3", 2: "a2.1", 3: "a2.2"}


class TestObstruction:
    def test_form2_obstructed(self):
        report = g2_obstruction(2, AnsatzSpace(3, max_degree=4))
        assert report.verdict == "obstructed"
        assert set(report.vanished_vectors) <= {
            "X_{alpha+2beta}", "X_{2alpha+3beta}",
        }

    def test_form3_nontrivial_branch(self):
        report = g2_obstruction(3, AnsatzSpace(3, max_degree=4))
        assert report.verdict == "obstructed"
        dims = {r.solution_dim for r in report.runs}
        assert dims == {1}  # the exponential family survives the solve
        for run in report.runs:
            assert run.z_only
            for branch in run.branches:
                assert not branch.x_beta_zero
                assert branch.x_a2b_zero

    def test_form1_zero_space(self):
        report = g2_obstruction(1, AnsatzSpace(3, max_degree=4))
        assert report.verdict == "obstructed"
        assert all(r.solution_dim == 0 for r in report.runs)

    def test_degree_sweep_stable(self):
        for form in (1, 2, 3):
            verdicts = set()
            for degree in (2, 4):
                report = g2_obstruction(form, AnsatzSpace(3, max_degree=degree))
                verdicts.add(report.verdict)
            assert verdicts == {"obstructed"}

    def test_flips_and_orientations_agree(self):
        report = g2_obstruction(3, AnsatzSpace(3, max_degree=2))
        assert len(report.runs) == 8  # 2 orientations x 4 sign flips
        assert {r.verdict for r in report.runs} == {"obstructed"}

    def test_report_brackets_reverify(self):
        # every intermediate identity claimed in a report re-verifies
        report = g2_obstruction(3, AnsatzSpace(3, max_degree=2))
        entry = catalog.get(report.entry_id)
        gens = entry.generators_at({})
        from lvf.parsing import parse_field

        for run in report.runs:
            if run.orientation == "alpha=X_alpha":
                xma = gens["X_malpha"] * Fraction(run.flips[0])
            else:
                xma = gens["X_mbeta"] * Fraction(run.flips[0])
            for branch in run.branches:
                x_ab = parse_field(branch.x_ab)
                x_beta = bracket(xma, x_ab)
                assert x_beta.is_zero() == branch.x_beta_zero
                x_a2b = bracket(x_beta, x_ab)
                assert x_a2b.is_zero() == branch.x_a2b_zero

    def test_scale_invariance_of_verdict(self):
        # scaling the solution by a nonzero rational never toggles
        # zero/nonzero anywhere in the chain
        report = g2_obstruction(3, AnsatzSpace(3, max_degree=2))
        from lvf.parsing import parse_field

        entry = catalog.get(report.entry_id)
        gens = entry.generators_at({})
        run = report.runs[0]
        branch = run.branches[0]
        x_ab = parse_field(branch.x_ab)
        for scale in (Fraction(3), Fraction(-1, 2)):
            scaled = x_ab * scale
            x_beta = bracket(gens["X_malpha"], scaled)
            assert x_beta.is_zero() == branch.x_beta_zero
            assert bracket(x_beta, scaled).is_zero() == branch.x_a2b_zero

    def test_bad_form_rejected(self):
        with pytest.raises(Exception):
            g2_obstruction(4)


class TestControl:
    def test_control_validates(self):
        control = b2_sanity_control()
        assert control.validated
        assert control.solution_dim == 2
        assert control.catalog_in_space
        assert control.x_beta_matches
        assert not control.obstructed

    def test_control_at_higher_degree(self):
        control = b2_sanity_control(degree=4)
        assert control.validated
