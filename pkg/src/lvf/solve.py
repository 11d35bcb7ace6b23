"""Exact linear solver for bracket constraints on an unknown field.

The unknown is confined to a finite :class:`AnsatzSpace`: a choice of
allowed exponent vectors, a maximal total polynomial degree and a set
of allowed components.  Constraints are of three kinds against a known
parameter-free field K: ``[K, X] = c X`` (eigen), ``[K, X] = 0`` (zero)
and ``[K, X] = T`` (equals).  Each constraint maps the ansatz linearly
into a finite-dimensional target space whose basis is derived from the
images, so the solution set comes out of one exact elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from lvf import _linalg
from lvf.errors import AnsatzExplosion, LvfError, ParameterizedInput
from lvf.expr import ExpPoly, as_fraction, encode_exponents
from lvf.fields import VectorField, generic_rank

DEFAULT_TARGET_BOUND = 20000


def _monomials(dim: int, max_degree: int):
    """All coordinate multi-indices of total degree <= max_degree."""
    out = []
    for total in range(max_degree + 1):
        for cuts in itertools.combinations_with_replacement(range(dim), total):
            mono = [0] * dim
            for i in cuts:
                mono[i] += 1
            out.append(tuple(mono))
    return sorted(out)


@dataclass(frozen=True)
class AnsatzSpace:
    """Finite search space: exponents x degrees x components."""

    dim: int
    exponents: Tuple[Tuple[Fraction, ...], ...]
    max_degree: int
    components: Tuple[int, ...]

    def __init__(self, dim, exponents=((),), max_degree=2, components=None):
        exps = []
        for e in exponents:
            vec = tuple(as_fraction(v) for v in e) if e else (Fraction(0),) * dim
            if len(vec) != dim:
                raise LvfError(f"exponent vector {e} in dimension {dim}")
            exps.append(vec)
        if not exps:
            exps.append((Fraction(0),) * dim)
        comps = tuple(components) if components is not None else tuple(range(dim))
        if any(not 0 <= c < dim for c in comps):
            raise LvfError("component index out of range")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "exponents", tuple(sorted(set(exps))))
        object.__setattr__(self, "max_degree", int(max_degree))
        object.__setattr__(self, "components", tuple(sorted(set(comps))))

    def basis_keys(self) -> List[Tuple[int, tuple, tuple]]:
        """Canonical ordered basis of one-term fields.

        Exponent vectors appear in their canonical integer encoding, as
        used by the term maps themselves.
        """
        monos = _monomials(self.dim, self.max_degree)
        encoded = [encode_exponents(e) for e in self.exponents]
        return [
            (c, exp, mono)
            for c in self.components
            for exp in encoded
            for mono in monos
        ]

    def basis_field(self, key) -> VectorField:
        c, exp, mono = key
        comps = [ExpPoly.zero(self.dim) for _ in range(self.dim)]
        comps[c] = ExpPoly(self.dim, {(exp, mono): {(): Fraction(1)}})
        return VectorField(comps)

    def dimension(self) -> int:
        return len(self.basis_keys())

    def describe(self) -> str:
        exps = ", ".join(
            "(" + ",".join(str(q) for q in e) + ")" for e in self.exponents
        )
        comps = ",".join(str(c + 1) for c in self.components)
        return (
            f"dim={self.dim} exponents=[{exps}] degree<={self.max_degree} "
            f"components=[{comps}]"
        )


@dataclass(frozen=True)
class BracketConstraint:
    """[known, X] = eigenvalue*X | 0 | target."""

    known: VectorField
    kind: str  # "eigen" | "zero" | "equals"
    eigenvalue: Fraction = Fraction(0)
    target: Optional[VectorField] = None

    @classmethod
    def eigen(cls, known: VectorField, value) -> "BracketConstraint":
        return cls(known, "eigen", as_fraction(value))

    @classmethod
    def commutes(cls, known: VectorField) -> "BracketConstraint":
        return cls(known, "zero")

    @classmethod
    def equals(cls, known: VectorField, target: VectorField) -> "BracketConstraint":
        return cls(known, "equals", Fraction(0), target)

    def residual(self, x: VectorField) -> VectorField:
        out = self.known.bracket(x)
        if self.kind == "eigen":
            out = out - x * self.eigenvalue
        elif self.kind == "equals":
            out = out - self.target
        return out


@dataclass
class SolveResult:
    basis: List[VectorField]
    particular: Optional[VectorField]
    matrix_rank: int
    ansatz_dim: int
    inconsistency: Optional[str] = None

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _field_keys(field: VectorField):
    for i, comp in enumerate(field.components):
        for (exp, mono), pp in comp.term_map().items():
            yield (i, exp, mono), pp[()]


def solve(
    constraints: Sequence[BracketConstraint],
    ansatz: AnsatzSpace,
    target_bound: int = DEFAULT_TARGET_BOUND,
) -> SolveResult:
    """Exact basis of the solution set of the constraints in the ansatz.

    The homogeneous part is always a linear-space basis; with an
    ``equals`` constraint the result also carries a particular solution
    (or an inconsistency witness and an empty basis).
    """
    for c in constraints:
        if not c.known.is_parameter_free():
            raise ParameterizedInput("constraint fields must be parameter-free")
        if c.target is not None and not c.target.is_parameter_free():
            raise ParameterizedInput("constraint targets must be parameter-free")
        if c.known.dim != ansatz.dim:
            raise LvfError("constraint dimension does not match the ansatz")

    keys = ansatz.basis_keys()
    ncols = len(keys)
    col_index = {key: m for m, key in enumerate(keys)}
    dim = ansatz.dim
    target_index: Dict[Tuple[int, int, tuple, tuple], int] = {}
    rows_map: Dict[int, Dict[int, Fraction]] = {}

    def index_of(ci, fkey):
        full = (ci, *fkey)
        idx = target_index.get(full)
        if idx is None:
            idx = len(target_index)
            target_index[full] = idx
            if idx >= target_bound:
                raise AnsatzExplosion(idx + 1, target_bound)
            rows_map[idx] = {}
        return idx

    def add_entries(ci, col, image: ExpPoly, target_comp: int):
        for (exp, mono), pp in image.term_map().items():
            row = rows_map[index_of(ci, (target_comp, exp, mono))]
            value = row.get(col, Fraction(0)) + pp[()]
            if value:
                row[col] = value
            elif col in row:
                del row[col]

    # One-term basis fields make the constraint images cheap:
    #   [K, f d_c] = K(f) d_c - f * sum_j (dK^j/dx_c) d_j
    # so per constraint only the derivatives of K are needed, and the
    # products K(f), f*dK are shared across the ansatz components.
    term_keys = sorted({(exp, mono) for _, exp, mono in keys})
    for ci, cons in enumerate(constraints):
        kc = cons.known.components
        dk = [[kc[j].diff(c) for c in range(dim)] for j in range(dim)]
        for exp, mono in term_keys:
            f = ExpPoly(dim, {(exp, mono): {(): Fraction(1)}})
            fd = [f.diff(j) for j in range(dim)]
            kf = ExpPoly.zero(dim)
            for j in range(dim):
                if not kc[j].is_zero() and not fd[j].is_zero():
                    kf = kf + kc[j] * fd[j]
            for c in ansatz.components:
                col = col_index[(c, exp, mono)]
                diag = kf
                if cons.kind == "eigen" and cons.eigenvalue:
                    diag = diag - f * cons.eigenvalue
                if not diag.is_zero():
                    add_entries(ci, col, diag, c)
                for j in range(dim):
                    if not dk[j][c].is_zero():
                        add_entries(ci, col, -(f * dk[j][c]), j)

    rhs_entries: Dict[int, Fraction] = {}
    has_equals = any(c.kind == "equals" for c in constraints)
    if has_equals:
        for ci, cons in enumerate(constraints):
            if cons.kind != "equals":
                continue
            for fkey, value in _field_keys(cons.target):
                idx = index_of(ci, fkey)
                rhs_entries[idx] = rhs_entries.get(idx, Fraction(0)) + value

    nrows = len(target_index)
    rows: List[Dict[int, Fraction]] = [rows_map[i] for i in range(nrows)]

    def to_field(vec: Dict[int, Fraction]) -> VectorField:
        terms: Dict[int, dict] = {c: {} for c in range(ansatz.dim)}
        for m, v in vec.items():
            comp, exp, mono = keys[m]
            terms[comp][(exp, mono)] = {(): v}
        return VectorField(
            [ExpPoly(ansatz.dim, terms[c]) for c in range(ansatz.dim)]
        )

    if has_equals:
        rhs = [rhs_entries.get(i, Fraction(0)) for i in range(nrows)]
        particular_vec, hom, mrank, witness = _linalg.solve_affine(rows, rhs, ncols)
        if witness is not None:
            inv = sorted(target_index, key=target_index.get)[witness] if nrows else None
            detail = (
                f"constraint {inv[0]} has no solution at component {inv[1] + 1}"
                if inv
                else "inconsistent system"
            )
            return SolveResult([], None, mrank, ncols, detail)
        basis = [to_field(v) for v in hom]
        particular = to_field(particular_vec)
        result = SolveResult(basis, particular, mrank, ncols)
    else:
        pivots, rrows = _linalg.rref(rows, ncols)
        hom = _linalg.nullspace_from_rref(pivots, rrows, ncols)
        result = SolveResult([to_field(v) for v in hom], None, len(pivots), ncols)

    # soundness: every reported solution satisfies every constraint exactly
    for x in result.basis:
        for cons in constraints:
            check = cons.residual(x) if cons.kind != "equals" else (
                cons.known.bracket(x)
            )
            if not check.is_zero():
                raise LvfError("internal error: solution fails a constraint")
    if result.particular is not None:
        for cons in constraints:
            if not cons.residual(result.particular).is_zero():
                raise LvfError("internal error: particular solution fails a constraint")
    return result


def centralizer(
    algebra: Sequence[VectorField],
    ansatz: AnsatzSpace,
    target_bound: int = DEFAULT_TARGET_BOUND,
) -> SolveResult:
    """Solution space of [g, X] = 0 for every g in the algebra."""
    constraints = [BracketConstraint.commutes(g) for g in algebra]
    return solve(constraints, ansatz, target_bound)


def centralizer_rank(
    algebra: Sequence[VectorField],
    ansatz: AnsatzSpace,
    target_bound: int = DEFAULT_TARGET_BOUND,
) -> int:
    """Generic rank of the centralizer inside the ansatz."""
    result = centralizer(algebra, ansatz, target_bound)
    if not result.basis:
        return 0
    return generic_rank(result.basis)
