"""Obstruction pipeline: no rank-2 system of the largest type extends
the planar A2 realizations on C^3.

Starting from one of the three catalog A2 forms placed on the long
roots alpha, alpha+3beta, 2alpha+3beta, the pipeline solves exactly for
a short-root vector X_{alpha+beta} inside a finite ansatz:

* eigen constraints against both Cartan elements, with the Cartan
  integers <alpha+beta, alpha> = 1 and <alpha+beta, alpha+3beta> = 0;
* vanishing brackets against the four root vectors r of the A2 copy for
  which (alpha+beta) + r is neither zero nor a root, namely
  X_alpha, X_{alpha+3beta}, X_{2alpha+3beta} and X_{-alpha-3beta}.

The general solution is kept symbolic (fresh parameters u1..uk), so the
derived chain

    X_beta        = [X_{-alpha}, X_{alpha+beta}]
    X_{alpha+2b}  = [X_beta, X_{alpha+beta}]
    X_{alpha+3b}' = [X_beta, X_{alpha+2beta}]
    X_{2alpha+3b}'= [X_alpha, X_{alpha+3beta}']

covers every linear combination at once; the coefficient ring is an
integral domain, so "every branch hits zero" is equivalent to one of
the chain vectors vanishing identically, which is decided exactly.

Both assignments of the A2 simple roots to the long roots are checked,
as are all sign flips of the simple pairs; the verdict must agree.  A
nonzero solution family whose chain never vanishes would be reported as
a counterexample candidate (full data) or raise InconclusiveAtDegree;
it is never silently folded into an obstruction.

The identical pipeline run inside the first B2 form (extending the
orthogonal long-root pair by the known short roots) must validate: it
reproduces the catalog's X_{alpha+beta} and X_beta and finds no
obstruction.  That control guards against constraints that are
accidentally too strong.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from lvf import catalog as _catalog
from lvf.algebra import express_in_basis
from lvf.errors import InconclusiveAtDegree, LvfError, NotInSpan
from lvf.expr import ExpPoly
from lvf.fields import VectorField, format_field
from lvf.roots import get_root_system, normalize_simple_pair
from lvf.solve import AnsatzSpace, BracketConstraint, solve

# scan order of the short-root extension check over the catalog A2 forms
FORM_TO_ENTRY = {1: "a2.3", 2: "a2.1", 3: "a2.2"}

DEFAULT_PROBE_EXPONENTS = (-2, -1, 1, 2)  # z-exponents probed besides 0


@dataclass(frozen=True)
class BranchResult:
    """Concrete chain along one basis solution."""

    index: int
    x_ab: str
    x_beta_zero: bool
    x_a2b_zero: bool
    x_2a3b_zero: bool
    vanished: str


@dataclass
class RunResult:
    """One orientation/sign-flip configuration at one ansatz."""

    orientation: str
    flips: Tuple[int, int]
    degree: int
    exponents: Tuple[Tuple[Fraction, ...], ...]
    solution_dim: int
    z_only: bool
    branches: List[BranchResult]
    x_a2b_identically_zero: bool
    x_2a3b_identically_zero: bool
    vanished: Optional[str]
    verdict: str  # "obstructed" | "candidate"
    candidate_witness: str = ""


@dataclass
class ObstructionReport:
    form: int
    entry_id: str
    degree: int
    runs: List[RunResult]
    verdict: str  # "obstructed" | "counterexample-candidate"

    @property
    def vanished_vectors(self) -> Tuple[str, ...]:
        return tuple(sorted({r.vanished for r in self.runs if r.vanished}))

    def to_text(self) -> str:
        lines = [
            f"g2-check form {self.form} ({self.entry_id}), degree {self.degree}"
        ]
        for run in self.runs:
            exps = ",".join(
                "(" + ",".join(str(q) for q in e) + ")" for e in run.exponents
            )
            lines.append(
                f"  run orientation={run.orientation} flips={run.flips} "
                f"exponents=[{exps}]"
            )
            lines.append(
                f"    solution dimension {run.solution_dim}; components depend "
                f"on z only: {'yes' if run.z_only else 'NO'}"
            )
            for br in run.branches:
                lines.append(
                    f"    branch {br.index}: X_alpha+beta = {br.x_ab}; "
                    f"vanished {br.vanished}"
                )
            if run.vanished:
                lines.append(f"    verdict: obstructed ({run.vanished} = 0)")
            else:
                lines.append(f"    verdict: {run.verdict} {run.candidate_witness}")
        if self.verdict == "obstructed":
            lines.append(f"OBSTRUCTED: {' or '.join(self.vanished_vectors)} = 0")
        else:
            lines.append("COUNTEREXAMPLE-CANDIDATE: see run data")
        return "\n".join(lines)

    def to_records(self) -> List[str]:
        recs = []
        for run in self.runs:
            exps = ",".join(
                "(" + ",".join(str(q) for q in e) + ")" for e in run.exponents
            )
            recs.append(
                f"record kind=obstruction-run form={self.form} "
                f"orientation={run.orientation} flips={run.flips[0]},{run.flips[1]} "
                f"degree={run.degree} exponents=[{exps}] dim={run.solution_dim} "
                f"zonly={'true' if run.z_only else 'false'} "
                f"vanished={run.vanished or 'none'} verdict={run.verdict}"
            )
        recs.append(
            f"record kind=obstruction form={self.form} entry={self.entry_id} "
            f"degree={self.degree} verdict={self.verdict} "
            f"vanished={','.join(self.vanished_vectors) or 'none'}"
        )
        return recs


def _single_exponent(exp) -> bool:
    return len(exp) <= 1


def _solve_by_blocks(constraints, dim, exponents, degree, components=None):
    """Solve one exponent block at a time and join the bases.

    Valid whenever every known field carries a single exponent vector:
    distinct source blocks then land in distinct target blocks, so the
    joint solution space is the direct sum of the per-block spaces.
    """
    for c in constraints:
        for comp in c.known.components:
            if not _single_exponent(comp.exponents()):
                # fall back to one joint solve
                ansatz = AnsatzSpace(dim, exponents, degree, components)
                return solve(constraints, ansatz).basis
    basis: List[VectorField] = []
    for exp in sorted(set(exponents)):
        ansatz = AnsatzSpace(dim, [exp], degree, components)
        basis.extend(solve(constraints, ansatz).basis)
    return basis


def _symbolic_combination(basis: Sequence[VectorField], dim: int) -> VectorField:
    """sum of u_i * basis_i with fresh formal parameters u1..uk."""
    total = VectorField.zero(dim)
    for i, b in enumerate(basis):
        total = total + b * ExpPoly.param(dim, f"u{i + 1}")
    return total


def _z_only(fields: Sequence[VectorField]) -> bool:
    for f in fields:
        for comp in f.components:
            for exp, mono, _ in comp.terms():
                if any(exp[:2]) or any(mono[:2]):
                    return False
    return True


def _chain(x_alpha, x_malpha, x_ab):
    """Derived root vectors along the inductive definitions."""
    x_beta = x_malpha.bracket(x_ab)
    x_a2b = x_beta.bracket(x_ab)
    x_a3b = x_beta.bracket(x_a2b)
    x_2a3b = x_alpha.bracket(x_a3b)
    return x_beta, x_a2b, x_a3b, x_2a3b


def _witness_assignment(general: VectorField, names, a2_long: VectorField):
    """Search small rationals making the whole chain nonzero."""
    candidates = [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(3)]
    if len(names) == 0:
        return None
    # vary one parameter at a time around the all-ones point
    base = {n: Fraction(1) for n in names}
    trial_points = [base]
    for n in names:
        for v in candidates:
            pt = dict(base)
            pt[n] = v
            trial_points.append(pt)
    for pt in trial_points:
        x = general.subst_params(pt)
        if x.is_zero():
            continue
        yield pt, x


def g2_obstruction(
    form: int,
    ansatz: Optional[AnsatzSpace] = None,
    probe_exponents: Sequence[int] = DEFAULT_PROBE_EXPONENTS,
) -> ObstructionReport:
    """Run the short-root extension check for one A2 form.

    The default ansatz has no exponentials, maximal degree 6 and all
    components; exponent vectors (0,0,q) for q in ``probe_exponents``
    are probed in addition, since eigen constraints with a constant
    d/dz part admit exponential solutions in z.
    """
    if form not in FORM_TO_ENTRY:
        raise LvfError(f"a2 form must be 1, 2 or 3, not {form!r}")
    entry = _catalog.get(FORM_TO_ENTRY[form])
    gens = entry.generators_at(entry.default_assignment())
    degree = ansatz.max_degree if ansatz is not None else 6
    base_exponents = (
        list(ansatz.exponents) if ansatz is not None else [(Fraction(0),) * 3]
    )
    components = ansatz.components if ansatz is not None else None
    exponents = list(base_exponents)
    for q in probe_exponents:
        vec = (Fraction(0), Fraction(0), Fraction(q))
        if vec not in exponents:
            exponents.append(vec)
    exponents = sorted(exponents)

    g2 = get_root_system("G2")
    eig_alpha = g2.cartan_integer((1, 1), (1, 0))  # <alpha+beta, alpha> = 1
    # the second Cartan element realizes the coroot of alpha+3beta; on the
    # weight alpha+beta it acts by 2(a+b, a+3b)/(a+3b, a+3b) = 0
    ip = g2.inner((1, 1), (1, 3))
    eig_a3b = 2 * ip / g2.inner((1, 3), (1, 3))
    if eig_a3b.denominator != 1:
        raise LvfError("non-integral eigenvalue")
    eig_a3b = Fraction(eig_a3b)

    runs: List[RunResult] = []
    verdicts = []
    for orientation in ("alpha=X_alpha", "alpha=X_beta"):
        if orientation == "alpha=X_alpha":
            xa, xma = gens["X_alpha"], gens["X_malpha"]
            xb, xmb = gens["X_beta"], gens["X_mbeta"]
        else:
            xa, xma = gens["X_beta"], gens["X_mbeta"]
            xb, xmb = gens["X_alpha"], gens["X_malpha"]
        # normalize both long-root pairs (a no-op for the catalog forms,
        # but the eigenvalue checks are meaningless otherwise)
        xa, xma, _ = normalize_simple_pair(xa, xma)
        xb, xmb, _ = normalize_simple_pair(xb, xmb)
        h_alpha = xa.bracket(xma)
        h_a3b = xb.bracket(xmb)
        x_2a3b_a2 = xa.bracket(xb)
        constraints = [
            BracketConstraint.eigen(h_alpha, eig_alpha),
            BracketConstraint.eigen(h_a3b, eig_a3b),
            BracketConstraint.commutes(xa),
            BracketConstraint.commutes(xb),
            BracketConstraint.commutes(x_2a3b_a2),
            BracketConstraint.commutes(xmb),
        ]
        basis = _solve_by_blocks(constraints, 3, exponents, degree, components)
        z_only = _z_only(basis)
        names = tuple(f"u{i + 1}" for i in range(len(basis)))
        general = _symbolic_combination(basis, 3)
        for s1 in (1, -1):
            for s2 in (1, -1):
                fxa, fxma = xa * Fraction(s1), xma * Fraction(s1)
                fxb, fxmb = xb * Fraction(s2), xmb * Fraction(s2)
                x_beta_g, x_a2b_g, x_a3b_g, x_2a3b_g = _chain(fxa, fxma, general)
                branches = []
                for i, b in enumerate(basis):
                    xb_i, xa2b_i, _, x2a3b_i = _chain(fxa, fxma, b)
                    if xa2b_i.is_zero():
                        vanished_i = "X_{alpha+2beta}"
                    elif x2a3b_i.is_zero():
                        vanished_i = "X_{2alpha+3beta}"
                    else:
                        vanished_i = "none"
                    branches.append(
                        BranchResult(
                            index=i + 1,
                            x_ab=format_field(b),
                            x_beta_zero=xb_i.is_zero(),
                            x_a2b_zero=xa2b_i.is_zero(),
                            x_2a3b_zero=x2a3b_i.is_zero(),
                            vanished=vanished_i,
                        )
                    )
                a2b_zero = x_a2b_g.is_zero()
                t2a3b_zero = x_2a3b_g.is_zero()
                if not basis:
                    vanished = "X_{alpha+2beta}"
                    verdict = "obstructed"
                    witness = "(solution space is zero)"
                elif a2b_zero:
                    vanished = "X_{alpha+2beta}"
                    verdict = "obstructed"
                    witness = ""
                elif t2a3b_zero:
                    vanished = "X_{2alpha+3beta}"
                    verdict = "obstructed"
                    witness = ""
                else:
                    vanished = None
                    verdict, witness = _examine_candidate(
                        general, names, fxa, fxma, x_2a3b_a2 * Fraction(s1 * s2), degree
                    )
                runs.append(
                    RunResult(
                        orientation=orientation,
                        flips=(s1, s2),
                        degree=degree,
                        exponents=tuple(exponents),
                        solution_dim=len(basis),
                        z_only=z_only,
                        branches=branches,
                        x_a2b_identically_zero=a2b_zero,
                        x_2a3b_identically_zero=t2a3b_zero,
                        vanished=vanished,
                        verdict=verdict,
                        candidate_witness=witness,
                    )
                )
                verdicts.append(verdict)
    overall = "obstructed" if all(v == "obstructed" for v in verdicts) else (
        "counterexample-candidate"
    )
    return ObstructionReport(
        form=form,
        entry_id=entry.id,
        degree=degree,
        runs=runs,
        verdict=overall,
    )


def _examine_candidate(general, names, xa, xma, x_2a3b_a2, degree):
    """A run where neither chain vector vanishes identically.

    Certify a concrete counterexample candidate (all derived vectors
    nonzero and the derived long-root vector a nonzero multiple of the
    A2 one) or refuse to conclude.
    """
    for pt, x in _witness_assignment(general, names, x_2a3b_a2):
        x_beta, x_a2b, x_a3b, x_2a3b = _chain(xa, xma, x)
        if x_beta.is_zero() or x_a2b.is_zero() or x_2a3b.is_zero():
            continue
        scale = x_2a3b.constant_multiple_of(x_2a3b_a2)
        if scale:
            assign = ", ".join(f"{n}={pt[n]}" for n in names)
            return "candidate", f"(witness {assign})"
    raise InconclusiveAtDegree(
        degree,
        "nonzero solution family, but no branch matches the long-root vector "
        "and no chain vector vanishes identically",
    )


# -- sanity control inside the first B2 form ---------------------------------


@dataclass
class ControlReport:
    entry_id: str
    degree: int
    solution_dim: int
    catalog_in_space: bool
    x_beta_matches: bool
    obstructed: bool
    validated: bool

    def to_text(self) -> str:
        return (
            f"control {self.entry_id} degree {self.degree}: solution dim "
            f"{self.solution_dim}, catalog vector in space: "
            f"{'yes' if self.catalog_in_space else 'NO'}, derived X_beta "
            f"matches: {'yes' if self.x_beta_matches else 'NO'}, obstruction "
            f"reported: {'yes' if self.obstructed else 'no'} -> "
            f"{'VALIDATED' if self.validated else 'FAILED'}"
        )


def b2_sanity_control(degree: int = 2) -> ControlReport:
    """Run the identical pipeline inside the first B2 form.

    The long roots alpha and alpha+2beta of that realization span an
    orthogonal pair; solving for X_{alpha+beta} with the same recipe
    must reproduce the catalog short-root data and report no
    obstruction.
    """
    entry = _catalog.get("b2.1")
    gens = entry.generators_at({})
    xa, xma = gens["X_alpha"], gens["X_malpha"]
    x_ab_cat = gens["X_ab"]
    x_beta_cat = gens["X_beta"]
    x_a2b = gens["X_a2b"]
    x_ma2b = gens["X_ma2b"]
    xa, xma, _ = normalize_simple_pair(xa, xma)
    x_a2b_n, x_ma2b_n, _ = normalize_simple_pair(x_a2b, x_ma2b)
    h_alpha = xa.bracket(xma)
    h_a2b = x_a2b_n.bracket(x_ma2b_n)

    b2 = get_root_system("B2")
    eig_alpha = b2.cartan_integer((1, 1), (1, 0))  # 1
    eig_a2b = 2 * b2.inner((1, 1), (1, 2)) / b2.inner((1, 2), (1, 2))
    constraints = [
        BracketConstraint.eigen(h_alpha, eig_alpha),
        BracketConstraint.eigen(h_a2b, Fraction(eig_a2b)),
        BracketConstraint.commutes(xa),
        BracketConstraint.commutes(x_a2b_n),
    ]
    # exponent blocks: none, and the block of the catalog short root
    exps = sorted({(Fraction(0),) * 3, next(iter(x_ab_cat.components[0].exponents()))})
    basis = _solve_by_blocks(constraints, 3, exps, degree)
    names = tuple(f"u{i + 1}" for i in range(len(basis)))
    general = _symbolic_combination(basis, 3)
    x_beta_g, x_a2b_g, _, _ = _chain(xa, xma, general)
    obstructed = x_a2b_g.is_zero() or not basis

    catalog_in_space = False
    x_beta_matches = False
    try:
        coeffs = express_in_basis(x_ab_cat, basis)
        catalog_in_space = True
        assign = {n: c for n, c in zip(names, coeffs)}
        x_beta_derived = x_beta_g.subst_params(assign)
        scale = x_beta_derived.constant_multiple_of(x_beta_cat)
        x_beta_matches = bool(scale)
    except (NotInSpan, LvfError):
        pass
    validated = catalog_in_space and x_beta_matches and not obstructed
    return ControlReport(
        entry_id=entry.id,
        degree=degree,
        solution_dim=len(basis),
        catalog_in_space=catalog_in_space,
        x_beta_matches=x_beta_matches,
        obstructed=obstructed,
        validated=validated,
    )
