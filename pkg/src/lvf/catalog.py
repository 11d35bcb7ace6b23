"""Built-in library of canonical realizations.

Sixteen entries: three Heisenberg forms, four sl2 forms, four sl2 x sl2
forms, three A2 forms and two B2 forms.  Each entry carries generators
(as expression text), the bracket relations that pin the presentation,
parameter defaults and polynomial constraints, the expected generic
rank, and whether the span must be semisimple.

Stored forms are corrected where the classical listing does not close
under the stated brackets; every correction is recorded in the entry's
``notes`` and machine-checked on load (the verifier is the arbiter).
Derived generators (Cartan elements, root vectors for non-simple roots)
are computed from the primary ones by exact brackets at build time.

The serialization is a UTF-8 structured text, one ``realization`` record
per entry; writing is canonical, so a given catalog always produces the
same bytes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from lvf.errors import CatalogError, LvfError
from lvf.expr import ExpPoly, as_fraction
from lvf.fields import VectorField, format_field, generic_rank
from lvf.parsing import parse_field, parse_scalar

Coef = Tuple[Fraction, str]


@dataclass(frozen=True)
class Relation:
    """[a, b] = sum of coef*generator (empty rhs means zero)."""

    a: str
    b: str
    rhs: Tuple[Coef, ...] = ()

    def label(self) -> str:
        return f"[{self.a}, {self.b}] = {format_rhs(self.rhs)}"


def format_rhs(rhs: Sequence[Coef]) -> str:
    if not rhs:
        return "0"
    chunks = []
    for c, name in rhs:
        mag = abs(c)
        body = name if mag == 1 else f"{mag}*{name}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(("+ " if c > 0 else "- ") + body)
    return " ".join(chunks)


@dataclass(frozen=True)
class Realization:
    """One catalog entry; immutable after construction."""

    id: str
    dim: int
    params: Tuple[Tuple[str, Fraction], ...]
    constraints: Tuple[str, ...]  # scalar expressions that must vanish
    generators: Tuple[Tuple[str, VectorField], ...]
    relations: Tuple[Relation, ...]
    expected_rank: int
    expect_semisimple: bool
    source: str
    notes: str = ""

    @property
    def family(self) -> str:
        return self.id.split(".")[0]

    def param_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.params)

    def default_assignment(self) -> Dict[str, Fraction]:
        return {name: value for name, value in self.params}

    def generator_map(self) -> Dict[str, VectorField]:
        return dict(self.generators)

    def constraint_polys(self) -> List[ExpPoly]:
        return [
            parse_scalar(text, self.dim, self.param_names())
            for text in self.constraints
        ]

    def constraints_satisfied(self, assignment: Dict[str, Fraction]) -> bool:
        return all(
            poly.subst_params(assignment).is_zero()
            for poly in self.constraint_polys()
        )

    def generators_at(self, assignment: Dict[str, Fraction]) -> Dict[str, VectorField]:
        return {
            name: gen.subst_params(assignment) if not gen.is_parameter_free() else gen
            for name, gen in self.generators
        }


# -- entry construction -------------------------------------------------------


def _entry(
    id: str,
    gens: Sequence[Tuple[str, str]],
    derived: Sequence[Tuple[str, str, str, Fraction]],
    rels: Sequence[str],
    expected_rank: int,
    expect_semisimple: bool,
    source: str,
    params: Sequence[Tuple[str, str]] = (),
    constraints: Sequence[str] = (),
    notes: str = "",
    dim: int = 3,
) -> Realization:
    """Build an entry from expression text.

    ``derived`` rows are (name, a, b, scale): generator = scale*[a, b]
    computed from already-present generators.
    """
    pnames = tuple(name for name, _ in params)
    gen_map: Dict[str, VectorField] = {}
    order: List[str] = []
    for name, text in gens:
        gen_map[name] = parse_field(text, dim, pnames)
        order.append(name)
    for name, a, b, scale in derived:
        gen_map[name] = gen_map[a].bracket(gen_map[b]) * scale
        order.append(name)
    relations = tuple(_parse_relation(r) for r in rels)
    return Realization(
        id=id,
        dim=dim,
        params=tuple((n, as_fraction(v)) for n, v in params),
        constraints=tuple(constraints),
        generators=tuple((n, gen_map[n]) for n in order),
        relations=relations,
        expected_rank=expected_rank,
        expect_semisimple=expect_semisimple,
        source=source,
        notes=notes,
    )


_REL_RE = re.compile(r"^\[\s*(\w+)\s*,\s*(\w+)\s*\]\s*=\s*(.+)$")


def _parse_relation(text: str) -> Relation:
    m = _REL_RE.match(text.strip())
    if not m:
        raise CatalogError(f"bad relation syntax: {text!r}")
    return Relation(m.group(1), m.group(2), parse_rhs(m.group(3)))


def parse_rhs(text: str) -> Tuple[Coef, ...]:
    """Parse '0' or a signed sum like '2*X - 1/2*H'."""
    text = text.strip()
    if text == "0":
        return ()
    out: List[Coef] = []
    token = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?([A-Za-z_]\w*)")
    pos = 0
    first = True
    while pos < len(text):
        m = token.match(text, pos)
        if not m or (not first and m.group(1) is None):
            raise CatalogError(f"bad linear combination: {text!r} at {pos}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        out.append((sign * coef, m.group(3)))
        pos = m.end()
        first = False
    return tuple(out)


_SL2_RELS = ["[H, X] = X", "[H, Y] = -Y", "[X, Y] = H"]

_SL2X2_RELS = [
    "[X, Xm] = H",
    "[Y, Ym] = Ht",
    "[H, X] = X",
    "[H, Xm] = -Xm",
    "[Ht, Y] = Y",
    "[Ht, Ym] = -Ym",
    "[H, Y] = 0",
    "[H, Ym] = 0",
    "[Ht, X] = 0",
    "[Ht, Xm] = 0",
    "[X, Y] = 0",
    "[X, Ym] = 0",
    "[Xm, Y] = 0",
    "[Xm, Ym] = 0",
]

_A2_RELS = [
    "[X_alpha, X_malpha] = H_alpha",
    "[X_beta, X_mbeta] = H_beta",
    "[H_alpha, X_alpha] = 2*X_alpha",
    "[H_alpha, X_beta] = -X_beta",
    "[H_alpha, X_malpha] = -2*X_malpha",
    "[H_alpha, X_mbeta] = X_mbeta",
    "[H_beta, X_alpha] = -X_alpha",
    "[H_beta, X_beta] = 2*X_beta",
    "[H_beta, X_malpha] = X_malpha",
    "[H_beta, X_mbeta] = -2*X_mbeta",
    "[X_alpha, X_beta] = X_ab",
    "[X_malpha, X_mbeta] = X_mab",
    "[X_alpha, X_mbeta] = 0",
    "[X_beta, X_malpha] = 0",
    "[X_alpha, X_ab] = 0",
    "[X_beta, X_ab] = 0",
    "[X_malpha, X_ab] = X_beta",
    "[X_mbeta, X_ab] = -X_alpha",
    "[X_ab, X_mab] = -H_alpha - H_beta",
]

_A2_DERIVED = [
    ("H_alpha", "X_alpha", "X_malpha", Fraction(1)),
    ("H_beta", "X_beta", "X_mbeta", Fraction(1)),
    ("X_ab", "X_alpha", "X_beta", Fraction(1)),
    ("X_mab", "X_malpha", "X_mbeta", Fraction(1)),
]

_B2_RELS = [
    "[X_alpha, X_malpha] = H_alpha",
    "[X_beta, X_mbeta] = H_beta",
    "[H_alpha, X_alpha] = 2*X_alpha",
    "[H_alpha, X_beta] = -X_beta",
    "[H_alpha, X_malpha] = -2*X_malpha",
    "[H_alpha, X_mbeta] = X_mbeta",
    "[H_beta, X_alpha] = -1/2*X_alpha",
    "[H_beta, X_beta] = 1/2*X_beta",
    "[H_beta, X_malpha] = 1/2*X_malpha",
    "[H_beta, X_mbeta] = -1/2*X_mbeta",
    "[X_alpha, X_mbeta] = 0",
    "[X_beta, X_malpha] = 0",
    "[X_alpha, X_beta] = X_ab",
    "[X_beta, X_ab] = X_a2b",
    "[X_malpha, X_mbeta] = X_mab",
    "[X_mbeta, X_mab] = X_ma2b",
    "[X_alpha, X_ab] = 0",
    "[X_beta, X_a2b] = 0",
    "[X_mbeta, X_ma2b] = 0",
    "[H_alpha, X_ab] = X_ab",
    "[H_alpha, X_a2b] = 0",
    "[X_malpha, X_ab] = X_beta",
]

_B2_DERIVED = [
    ("H_alpha", "X_alpha", "X_malpha", Fraction(1)),
    ("H_beta", "X_beta", "X_mbeta", Fraction(1)),
    ("X_ab", "X_alpha", "X_beta", Fraction(1)),
    ("X_a2b", "X_beta", "X_ab", Fraction(1)),
    ("X_mab", "X_malpha", "X_mbeta", Fraction(1)),
    ("X_ma2b", "X_mbeta", "X_mab", Fraction(1)),
]

_HEIS_RELS = ["[X, Y] = Z", "[Z, X] = 0", "[Z, Y] = 0"]

_builtin_cache: Optional[List[Realization]] = None


def load_builtin() -> List[Realization]:
    """The sixteen canonical realizations, in catalog order."""
    global _builtin_cache
    if _builtin_cache is not None:
        return list(_builtin_cache)
    entries = [
        _entry(
            "heisenberg.1",
            gens=[("Z", "Dx"), ("X", "Dy"), ("Y", "y*Dx + Dz")],
            derived=[],
            rels=_HEIS_RELS,
            expected_rank=3,
            expect_semisimple=False,
            source="Heisenberg family, canonical form 1",
        ),
        _entry(
            "heisenberg.2",
            gens=[("Z", "Dx"), ("X", "Dy"), ("Y", "y*Dx + lambda*Dy")],
            derived=[],
            rels=_HEIS_RELS,
            expected_rank=2,
            expect_semisimple=False,
            source="Heisenberg family, canonical form 2",
            params=[("lambda", "0")],
            notes="free constant lambda; any rational value is admissible",
        ),
        _entry(
            "heisenberg.3",
            gens=[("Z", "Dx"), ("X", "Dy"), ("Y", "y*Dx + z*Dy")],
            derived=[],
            rels=_HEIS_RELS,
            expected_rank=2,
            expect_semisimple=False,
            source="Heisenberg family, canonical form 3",
        ),
        _entry(
            "sl2.1",
            gens=[("H", "Dx"), ("X", "exp(x)*Dx"), ("Y", "-1/2*exp(-x)*Dx")],
            derived=[],
            rels=_SL2_RELS,
            expected_rank=1,
            expect_semisimple=True,
            source="sl2 family, canonical form 1",
            notes=(
                "classical listing gives the generator pair exp(x)*Dx, "
                "exp(-x)*Dx; Y is rescaled by -1/2 and H = Dx is added so the "
                "stated relations close (same 3-dimensional span)"
            ),
        ),
        _entry(
            "sl2.2",
            gens=[
                ("H", "Dx"),
                ("X", "exp(x)*Dy"),
                ("Y", "exp(-x)*(y*Dx + (y^2/2 + l)*Dy)"),
            ],
            derived=[],
            rels=_SL2_RELS,
            expected_rank=2,
            expect_semisimple=True,
            source="sl2 family, canonical form 2",
            params=[("l", "0")],
            notes=(
                "classical listing prints (y^2/2 + l)*Dz; bracket closure "
                "forces Dy, stored corrected"
            ),
        ),
        _entry(
            "sl2.3",
            gens=[
                ("H", "Dx"),
                ("X", "exp(x)*Dy"),
                ("Y", "exp(-x)*(y*Dx + (y^2/2 + z)*Dy)"),
            ],
            derived=[],
            rels=_SL2_RELS,
            expected_rank=2,
            expect_semisimple=True,
            source="sl2 family, canonical form 3",
            notes=(
                "classical listing prints (y^2/2 + z)*Dz; bracket closure "
                "forces Dy, stored corrected"
            ),
        ),
        _entry(
            "sl2.4",
            gens=[
                ("H", "Dx"),
                ("X", "exp(x)*Dy"),
                ("Y", "exp(-x)*(y*Dx + y^2/2*Dy + Dz)"),
            ],
            derived=[],
            rels=_SL2_RELS,
            expected_rank=3,
            expect_semisimple=True,
            source="sl2 family, canonical form 4",
        ),
        _entry(
            "sl2xsl2.1",
            gens=[
                ("H", "Dx"),
                ("Ht", "Dy"),
                ("X", "exp(x)*Dz"),
                ("Xm", "exp(-x)*(z*Dx + (z^2/2 + beta)*Dz)"),
                ("Y", "exp(y)*Dy"),
                ("Ym", "-1/2*exp(-y)*Dy"),
            ],
            derived=[],
            rels=_SL2X2_RELS,
            expected_rank=3,
            expect_semisimple=True,
            source="sl2 x sl2 family, canonical form 1",
            params=[("beta", "0")],
            notes="Ym rescaled by -1/2 so [Y, Ym] = Ht holds exactly",
        ),
        _entry(
            "sl2xsl2.2",
            gens=[
                ("H", "Dx"),
                ("Ht", "Dy"),
                ("X", "exp(x)*Dz"),
                ("Xm", "exp(-x)*(z*Dx + z^2/2*Dz)"),
                ("Y", "exp(y)*(Dx - Dy + z*Dz)"),
                ("Ym", "1/2*exp(-y)*(Dx + Dy + z*Dz)"),
            ],
            derived=[],
            rels=_SL2X2_RELS,
            expected_rank=3,
            expect_semisimple=True,
            source="sl2 x sl2 family, canonical form 2",
            notes="Ym rescaled by 1/2 so [Y, Ym] = Ht holds exactly",
        ),
        _entry(
            "sl2xsl2.3",
            gens=[
                ("H", "Dx"),
                ("Ht", "Dy"),
                ("X", "exp(x)*Dz"),
                ("Xm", "exp(-x)*(z*Dx + a*Dy + (z^2/2 + b)*Dz)"),
                ("Y", "exp(y)*(Dx - Dy + (z + a)*Dz)"),
                ("Ym", "1/2*exp(-y)*(Dx + Dy + (z - a)*Dz)"),
            ],
            derived=[],
            rels=_SL2X2_RELS,
            expected_rank=3,
            expect_semisimple=True,
            source="sl2 x sl2 family, canonical form 3",
            params=[("a", "2"), ("b", "-2")],
            constraints=["a^2 + 2*b"],
            notes=(
                "constraint a^2 + 2*b = 0 makes [Xm, Y] and [Xm, Ym] vanish; "
                "Ym rescaled by 1/2"
            ),
        ),
        _entry(
            "sl2xsl2.4",
            gens=[
                ("H", "Dx"),
                ("Ht", "Dy"),
                ("X", "exp(x)*Dx"),
                ("Xm", "-1/2*exp(-x)*Dx"),
                ("Y", "exp(y)*Dy"),
                ("Ym", "-1/2*exp(-y)*Dy"),
            ],
            derived=[],
            rels=_SL2X2_RELS,
            expected_rank=2,
            expect_semisimple=True,
            source="sl2 x sl2 family, canonical form 4 (rank 2)",
            notes="Xm and Ym rescaled by -1/2 so the stated relations close",
        ),
        _entry(
            "a2.1",
            gens=[
                ("X_alpha", "Dy"),
                ("X_beta", "y*Dx"),
                ("X_malpha", "-x*y*Dx - y^2*Dy"),
                ("X_mbeta", "x*Dy"),
            ],
            derived=_A2_DERIVED,
            rels=_A2_RELS,
            expected_rank=2,
            expect_semisimple=True,
            source="A2 family, canonical form 1",
            notes="planar form; g2-check scan order lists it as form 2",
        ),
        _entry(
            "a2.2",
            gens=[
                ("X_alpha", "Dy"),
                ("X_beta", "y*Dx"),
                ("X_malpha", "-x*y*Dx - y^2*Dy + y*Dz"),
                ("X_mbeta", "x*Dy"),
            ],
            derived=_A2_DERIVED,
            rels=_A2_RELS,
            expected_rank=3,
            expect_semisimple=True,
            source="A2 family, canonical form 2",
            notes="g2-check scan order lists it as form 3",
        ),
        _entry(
            "a2.3",
            gens=[
                ("X_alpha", "Dy"),
                ("X_beta", "y*Dx + Dz"),
                ("X_malpha", "-x*y*Dx - y^2*Dy + (y*z - x)*Dz"),
                ("X_mbeta", "x*Dy - z^2*Dz"),
            ],
            derived=_A2_DERIVED,
            rels=_A2_RELS,
            expected_rank=3,
            expect_semisimple=True,
            source="A2 family, canonical form 3",
            notes="rank-3 form; g2-check scan order lists it as form 1",
        ),
        _entry(
            "b2.1",
            gens=[
                ("X_alpha", "exp(x)*(Dx + Dy + z*Dz)"),
                ("X_malpha", "exp(-x)*(-Dx + Dy + z*Dz)"),
                ("X_beta", "exp((-x+y)/2)*(Dx - Dy - (z + 1/4)*Dz)"),
                ("X_mbeta", "exp((x-y)/2)*(z*Dx + (z + 1/2)*Dy + (z^2 + z/4)*Dz)"),
            ],
            derived=_B2_DERIVED,
            rels=_B2_RELS,
            expected_rank=3,
            expect_semisimple=True,
            source="B2 family, canonical form 1",
            notes=(
                "H_beta = [X_beta, X_mbeta] is 1/4 of the coroot "
                "normalization; rescaling X_mbeta by 4 gives the standard "
                "rank-2 structure constants of the sl(4) model"
            ),
        ),
        _entry(
            "b2.2",
            gens=[
                ("X_alpha", "exp(x)*(-Dx + Dy + (z + 1)*Dz)"),
                ("X_malpha", "exp(-x)*(Dx + Dy + (z - 1)*Dz)"),
                ("X_beta", "exp((-x+y)/2)*(Dy + (z - 1)*Dz)"),
                (
                    "X_mbeta",
                    "exp((x-y)/2)*(Dx + ((z + 1)/2 - 1)*Dy"
                    " + ((z + 1)^2/2 - (z + 1))*Dz)",
                ),
            ],
            derived=_B2_DERIVED,
            rels=_B2_RELS,
            expected_rank=3,
            expect_semisimple=True,
            source="B2 family, canonical form 2",
            notes=(
                "the classical listing keeps a free nonzero constant a; the "
                "family is equivalent to a = 1 under z -> z/a (up to "
                "generator rescaling), stored at a = 1"
            ),
        ),
    ]
    _builtin_cache = entries
    return list(entries)


def get(entry_id: str) -> Realization:
    for entry in load_builtin():
        if entry.id == entry_id:
            return entry
    raise CatalogError(f"unknown catalog id '{entry_id}'")


# -- verification of entry invariants ----------------------------------------


def check_entry(entry: Realization, assignment: Optional[Dict[str, Fraction]] = None):
    """Raise CatalogError if a relation or the rank invariant fails."""
    if assignment is None:
        assignment = entry.default_assignment()
    if not entry.constraints_satisfied(assignment):
        raise CatalogError(
            f"{entry.id}: parameter assignment violates a constraint"
        )
    gens = entry.generators_at(assignment)
    for rel in entry.relations:
        residual = _relation_residual(rel, gens)
        if not residual.is_zero():
            raise CatalogError(
                f"{entry.id}: relation {rel.label()} fails; residual {residual}"
            )
    actual = generic_rank(list(gens.values()))
    if actual != entry.expected_rank:
        raise CatalogError(
            f"{entry.id}: generic rank {actual} != expected {entry.expected_rank}"
        )


def _relation_residual(rel: Relation, gens: Dict[str, VectorField]) -> VectorField:
    try:
        lhs = gens[rel.a].bracket(gens[rel.b])
    except KeyError as missing:
        raise CatalogError(f"relation references unknown generator {missing}")
    for c, name in rel.rhs:
        if name not in gens:
            raise CatalogError(f"relation references unknown generator '{name}'")
        lhs = lhs - gens[name] * c
    return lhs


# -- serialization ------------------------------------------------------------


def write(path: str, entries: Sequence[Realization]):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(entries))


def dumps(entries: Sequence[Realization]) -> str:
    lines: List[str] = []
    for entry in entries:
        lines.append(f"realization {entry.id} {{")
        lines.append(f"  dim {entry.dim};")
        params = " ".join(f"{n} = {v};" for n, v in entry.params)
        lines.append(f"  params {{ {params} }};" if params else "  params { };")
        cons = " ".join(f'"{c}";' for c in entry.constraints)
        lines.append(f"  constraints {{ {cons} }};" if cons else "  constraints { };")
        for name, gen in entry.generators:
            lines.append(f'  gen {name} = "{format_field(gen)}";')
        for rel in entry.relations:
            lines.append(f"  rel [{rel.a}, {rel.b}] = {format_rhs(rel.rhs)};")
        lines.append(f"  expected_rank {entry.expected_rank};")
        flag = "true" if entry.expect_semisimple else "false"
        lines.append(f"  expect_semisimple {flag};")
        lines.append(f'  source "{entry.source}";')
        if entry.notes:
            lines.append(f'  notes "{entry.notes}";')
        lines.append("}")
    return "\n".join(lines) + "\n"


_CAT_TOKEN = re.compile(
    r'\s*(?:"(?P<str>[^"]*)"|(?P<name>[A-Za-z_][A-Za-z0-9_.]*)'
    r"|(?P<num>-?\d+(?:/\d+)?)|(?P<punct>[{}\[\];=,*+-]))"
)


class _CatTokens:
    def __init__(self, text: str):
        self.items = []
        pos = 0
        while pos < len(text):
            m = _CAT_TOKEN.match(text, pos)
            if not m or m.end() == pos:
                rest = text[pos:].lstrip()
                if not rest:
                    break
                at = len(text) - len(rest)
                raise CatalogError(f"bad catalog syntax at offset {at}: {rest[:20]!r}")
            for kind in ("str", "name", "num", "punct"):
                if m.group(kind) is not None:
                    self.items.append((kind, m.group(kind), m.start()))
                    break
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.items[self.i] if self.i < len(self.items) else (None, "", -1)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, kind, value=None):
        k, v, pos = self.next()
        if k != kind or (value is not None and v != value):
            raise CatalogError(
                f"expected {value or kind}, found {v!r} at offset {pos}"
            )
        return v


def read(path: str, verify: bool = True) -> List[Realization]:
    with open(path, "r", encoding="utf-8") as handle:
        return loads(handle.read(), verify=verify)


def loads(text: str, verify: bool = True) -> List[Realization]:
    toks = _CatTokens(text)
    entries = []
    while toks.peek()[0] is not None:
        entries.append(_read_entry(toks))
    if verify:
        for entry in entries:
            check_entry(entry)
    return entries


def _read_entry(toks: _CatTokens) -> Realization:
    toks.expect("name", "realization")
    entry_id = toks.expect("name")
    toks.expect("punct", "{")
    dim = 3
    params: List[Tuple[str, Fraction]] = []
    constraints: List[str] = []
    gen_texts: List[Tuple[str, str]] = []
    relations: List[Relation] = []
    expected_rank = 0
    expect_semisimple = False
    source = ""
    notes = ""
    while True:
        kind, value, pos = toks.next()
        if kind == "punct" and value == "}":
            break
        if kind != "name":
            raise CatalogError(f"unexpected token {value!r} at offset {pos}")
        if value == "dim":
            dim = int(toks.expect("num"))
            toks.expect("punct", ";")
        elif value == "params":
            toks.expect("punct", "{")
            while toks.peek()[1] != "}":
                pname = toks.expect("name")
                toks.expect("punct", "=")
                k, v, _ = toks.next()
                if k == "punct" and v == "-":
                    v = "-" + toks.expect("num")
                elif k != "num":
                    raise CatalogError(f"bad parameter value for {pname}")
                params.append((pname, Fraction(v)))
                toks.expect("punct", ";")
            toks.expect("punct", "}")
            toks.expect("punct", ";")
        elif value == "constraints":
            toks.expect("punct", "{")
            while toks.peek()[1] != "}":
                constraints.append(toks.expect("str"))
                toks.expect("punct", ";")
            toks.expect("punct", "}")
            toks.expect("punct", ";")
        elif value == "gen":
            name = toks.expect("name")
            toks.expect("punct", "=")
            gen_texts.append((name, toks.expect("str")))
            toks.expect("punct", ";")
        elif value == "rel":
            toks.expect("punct", "[")
            a = toks.expect("name")
            toks.expect("punct", ",")
            b = toks.expect("name")
            toks.expect("punct", "]")
            toks.expect("punct", "=")
            rhs_parts = []
            while toks.peek()[1] != ";":
                rhs_parts.append(toks.next()[1])
            toks.expect("punct", ";")
            relations.append(Relation(a, b, parse_rhs(" ".join(rhs_parts))))
        elif value == "expected_rank":
            expected_rank = int(toks.expect("num"))
            toks.expect("punct", ";")
        elif value == "expect_semisimple":
            expect_semisimple = toks.expect("name") == "true"
            toks.expect("punct", ";")
        elif value == "source":
            source = toks.expect("str")
            toks.expect("punct", ";")
        elif value == "notes":
            notes = toks.expect("str")
            toks.expect("punct", ";")
        else:
            raise CatalogError(f"unknown field '{value}' at offset {pos}")
    pnames = tuple(n for n, _ in params)
    try:
        generators = tuple(
            (name, parse_field(text, dim, pnames)) for name, text in gen_texts
        )
    except LvfError as exc:
        raise CatalogError(f"{entry_id}: bad generator expression: {exc}") from exc
    return Realization(
        id=entry_id,
        dim=dim,
        params=tuple(params),
        constraints=tuple(constraints),
        generators=generators,
        relations=tuple(relations),
        expected_rank=expected_rank,
        expect_semisimple=expect_semisimple,
        source=source,
        notes=notes,
    )
