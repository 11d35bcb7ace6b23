"""Exact exponential-polynomial scalars.

An :class:`ExpPoly` is a finite sum of terms

    (polynomial in formal parameters over Q) * x^m * exp(q . x)

with ``m`` a coordinate multi-index and ``q`` a rational covector.  The
functions ``x^m exp(q . x)`` for distinct ``(m, q)`` are linearly
independent, so a value is the zero function exactly when its term map
is empty; equality is a structural check on canonical term maps.

Values are immutable and safe to share between threads.  All arithmetic
is exact; :meth:`ExpPoly.eval_numeric` is the only floating-point door
and is meant for randomized cross-checks, never equality decisions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from lvf import _kernels as K
from lvf.errors import DimensionMismatch, LvfError, UnassignedParameter

Rat = Fraction
PMono = Tuple[Tuple[str, int], ...]
TermKey = Tuple[Tuple[Fraction, ...], Tuple[int, ...]]

_AXIS_NAMES = ("x", "y", "z", "w")


def coord_names(dim: int) -> Tuple[str, ...]:
    """Printable coordinate names: x,y,z,w for dim <= 4, else x1..xn."""
    if dim <= 4:
        return _AXIS_NAMES[:dim]
    return tuple(f"x{i + 1}" for i in range(dim))


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def encode_exponents(qvec) -> Tuple[int, ...]:
    """Integer encoding (den, n_1, .., n_k) of a rational covector.

    Canonical: den >= 1 and gcd(den, n_1, .., n_k) = 1.  All-integer
    keys keep term-map hashing cheap.
    """
    fracs = [as_fraction(v) for v in qvec]
    den = 1
    for v in fracs:
        den = den // math.gcd(den, v.denominator) * v.denominator
    nums = [int(v * den) for v in fracs]
    g = den
    for n in nums:
        g = math.gcd(g, n)
        if g == 1:
            break
    if g > 1:
        den //= g
        nums = [n // g for n in nums]
    return (den, *nums)


def decode_exponents(key) -> Tuple[Fraction, ...]:
    den = key[0]
    return tuple(Fraction(n, den) for n in key[1:])


def zero_exponents(dim: int) -> Tuple[int, ...]:
    return (1,) + (0,) * dim


class ExpPoly:
    """Canonical exponential-polynomial scalar in ``dim`` coordinates."""

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Dict[TermKey, dict] | None = None):
        self.dim = dim
        self._terms = terms or {}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "ExpPoly":
        return cls(dim)

    @classmethod
    def const(cls, dim: int, value) -> "ExpPoly":
        q = as_fraction(value)
        if not q:
            return cls(dim)
        key = (zero_exponents(dim), (0,) * dim)
        return cls(dim, {key: {(): q}})

    @classmethod
    def coord(cls, dim: int, i: int) -> "ExpPoly":
        if not 0 <= i < dim:
            raise IndexError(f"coordinate {i} out of range for dimension {dim}")
        mono = tuple(1 if j == i else 0 for j in range(dim))
        key = (zero_exponents(dim), mono)
        return cls(dim, {key: {(): Fraction(1)}})

    @classmethod
    def param(cls, dim: int, name: str) -> "ExpPoly":
        key = (zero_exponents(dim), (0,) * dim)
        return cls(dim, {key: {((name, 1),): Fraction(1)}})

    @classmethod
    def exponential(cls, dim: int, qvec) -> "ExpPoly":
        """exp(q . x) for a rational covector q."""
        q = tuple(as_fraction(c) for c in qvec)
        if len(q) != dim:
            raise DimensionMismatch(f"exponent vector of length {len(q)} in dimension {dim}")
        key = (encode_exponents(q), (0,) * dim)
        return cls(dim, {key: {(): Fraction(1)}})

    @classmethod
    def monomial(cls, dim: int, mono, coeff=1) -> "ExpPoly":
        m = tuple(int(e) for e in mono)
        if len(m) != dim or any(e < 0 for e in m):
            raise ValueError(f"bad monomial {mono} in dimension {dim}")
        q = as_fraction(coeff)
        if not q:
            return cls(dim)
        key = (zero_exponents(dim), m)
        return cls(dim, {key: {(): q}})

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Iterable[Tuple[Tuple[Fraction, ...], Tuple[int, ...], dict]]:
        """Terms in the canonical (exponent, monomial) order."""
        for exp, mono in sorted(self._terms):
            yield decode_exponents(exp), mono, self._terms[(exp, mono)]

    def term_map(self) -> Dict[TermKey, dict]:
        """The raw term map (treat as read-only)."""
        return self._terms

    def params(self) -> Tuple[str, ...]:
        names = set()
        for pp in self._terms.values():
            for pmono in pp:
                for name, _ in pmono:
                    names.add(name)
        return tuple(sorted(names))

    def is_parameter_free(self) -> bool:
        return all(pmono == () for pp in self._terms.values() for pmono in pp)

    def rational_value(self) -> Fraction:
        """The value of a constant, or raise ``LvfError``."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1:
            (key, pp), = self._terms.items()
            exp, mono = key
            if not any(exp[1:]) and not any(mono) and list(pp) == [()]:
                return pp[()]
        raise LvfError(f"not a rational constant: {self}")

    def constant_multiple_of(self, other: "ExpPoly"):
        """Return rational c with self == c*other, or None."""
        if other.is_zero():
            return Fraction(0) if self.is_zero() else None
        if self.is_zero():
            return Fraction(0)
        if set(self._terms) != set(other._terms):
            return None
        ratio = None
        for key, pp in self._terms.items():
            opp = other._terms[key]
            if set(pp) != set(opp):
                return None
            for pm, v in pp.items():
                r = v / opp[pm]
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return None
        return ratio

    def max_poly_degree(self) -> int:
        return max((sum(mono) for _, mono in self._terms), default=0)

    def exponents(self) -> set:
        return {decode_exponents(exp) for exp, _ in self._terms}

    def _check_dim(self, other: "ExpPoly"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim}")

    def _coerce(self, other) -> "ExpPoly":
        if isinstance(other, ExpPoly):
            return other
        return ExpPoly.const(self.dim, other)

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "ExpPoly":
        other = self._coerce(other)
        self._check_dim(other)
        return ExpPoly(self.dim, K.ep_add(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self) -> "ExpPoly":
        return ExpPoly(self.dim, K.ep_scale(self._terms, Fraction(-1)))

    def __sub__(self, other) -> "ExpPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ExpPoly":
        return (-self) + other

    def __mul__(self, other) -> "ExpPoly":
        if isinstance(other, (int, Fraction)):
            return ExpPoly(self.dim, K.ep_scale(self._terms, as_fraction(other)))
        other = self._coerce(other)
        self._check_dim(other)
        return ExpPoly(self.dim, K.ep_mul(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ExpPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers must be natural numbers")
        out = ExpPoly.const(self.dim, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def diff(self, i: int) -> "ExpPoly":
        """Exact partial derivative along coordinate i."""
        if not 0 <= i < self.dim:
            raise IndexError(f"coordinate {i} out of range")
        return ExpPoly(self.dim, K.ep_diff(self._terms, i))

    # -- parameters ----------------------------------------------------

    def subst_params(self, assignment: Mapping[str, object]) -> "ExpPoly":
        """Substitute rationals for every parameter occurring here."""
        values = {name: as_fraction(v) for name, v in assignment.items()}
        out: Dict[TermKey, dict] = {}
        for key, pp in self._terms.items():
            total = Fraction(0)
            for pmono, c in pp.items():
                v = c
                for name, e in pmono:
                    if name not in values:
                        raise UnassignedParameter(f"parameter '{name}' not assigned")
                    v *= values[name] ** e
                total += v
            if total:
                out[key] = {(): total}
        return ExpPoly(self.dim, out)

    # -- coordinates ----------------------------------------------------

    def subst_affine(self, matrix, shift) -> "ExpPoly":
        """Substitute x_i -> sum_j M[i][j]*x_j + c_i.

        Exponentials transform by q.x -> (q^T M).x + q.c; a nonzero q.c
        would introduce a transcendental constant e^(q.c), which leaves
        the coefficient ring, so that case is an error.
        """
        dim = self.dim
        rows = [tuple(as_fraction(v) for v in row) for row in matrix]
        cvec = tuple(as_fraction(v) for v in shift)
        if len(rows) != dim or any(len(r) != dim for r in rows) or len(cvec) != dim:
            raise DimensionMismatch("affine data does not match dimension")
        images = []
        for i in range(dim):
            img = ExpPoly.const(dim, cvec[i])
            for j in range(dim):
                if rows[i][j]:
                    img = img + ExpPoly.coord(dim, j) * rows[i][j]
            images.append(img)
        out = ExpPoly.zero(dim)
        for (exp_key, mono), pp in self._terms.items():
            exp = decode_exponents(exp_key)
            drift = sum((q * c for q, c in zip(exp, cvec)), Fraction(0))
            if drift:
                raise LvfError(
                    "affine substitution would create the non-rational factor "
                    f"exp({drift}); shift the non-exponential directions only"
                )
            new_exp = encode_exponents(
                sum((exp[i] * rows[i][j] for i in range(dim)), Fraction(0))
                for j in range(dim)
            )
            piece = ExpPoly(dim, {(new_exp, (0,) * dim): dict(pp)})
            for i, m in enumerate(mono):
                for _ in range(m):
                    piece = piece * images[i]
            out = out + piece
        return out

    # -- numerics --------------------------------------------------------

    def eval_numeric(self, point, params: Mapping[str, float] | None = None) -> float:
        """Double-precision evaluation; advisory only."""
        pt = tuple(float(v) for v in point)
        if len(pt) != self.dim:
            raise DimensionMismatch(f"point of length {len(pt)} in dimension {self.dim}")
        pvals = {k: float(v) for k, v in (params or {}).items()}
        total = 0.0
        for (exp, mono), pp in self._terms.items():
            c = 0.0
            for pmono, v in pp.items():
                t = float(v)
                for name, e in pmono:
                    if name not in pvals:
                        raise UnassignedParameter(f"parameter '{name}' not assigned")
                    t *= pvals[name] ** e
                c += t
            for i, m in enumerate(mono):
                if m:
                    c *= pt[i] ** m
            arg = sum(n * pt[i] for i, n in enumerate(exp[1:]) if n) / exp[0]
            if arg:
                c *= math.exp(arg)
            total += c
        return total

    # -- equality and display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExpPoly.const(self.dim, other)
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    def __hash__(self):
        frozen = tuple(
            (key, tuple(sorted(pp.items())))
            for key, pp in sorted(self._terms.items())
        )
        return hash((self.dim, frozen))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"ExpPoly({self.dim}, {format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


# -- canonical text form ---------------------------------------------------


def _format_pmono(pmono: PMono) -> str:
    parts = []
    for name, e in pmono:
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _format_pp(pp: dict) -> str:
    """Parameter polynomial as a sum, canonical monomial order."""
    chunks = []
    for pmono in sorted(pp):
        c = pp[pmono]
        body = _format_pmono(pmono)
        mag = abs(c)
        if body:
            text = body if mag == 1 else f"{mag}*{body}"
        else:
            text = str(mag)
        if not chunks:
            chunks.append(text if c > 0 else f"-{text}")
        else:
            chunks.append(("+ " if c > 0 else "- ") + text)
    return " ".join(chunks)


def _format_linear_form(exp, names) -> str:
    chunks = []
    for q, name in zip(exp, names):
        if not q:
            continue
        mag = abs(q)
        body = name if mag == 1 else f"{mag}*{name}"
        if not chunks:
            chunks.append(body if q > 0 else f"-{body}")
        else:
            chunks.append(("+ " if q > 0 else "- ") + body)
    return " ".join(chunks)


def format_scalar(f: ExpPoly) -> str:
    """Canonical text for an ExpPoly; parses back to an equal value."""
    if f.is_zero():
        return "0"
    names = coord_names(f.dim)
    chunks = []
    for exp, mono, pp in f.terms():
        factors = []
        for i, m in enumerate(mono):
            if m == 1:
                factors.append(names[i])
            elif m:
                factors.append(f"{names[i]}^{m}")
        if any(exp):
            factors.append(f"exp({_format_linear_form(exp, names)})")
        sign = ""
        if len(pp) == 1:
            (pmono, c), = pp.items()
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = _format_pmono(pmono)
            if body and mag != 1:
                factors.insert(0, f"{mag}*{body}")
            elif body:
                factors.insert(0, body)
            elif mag != 1 or not factors:
                factors.insert(0, str(mag))
        else:
            sign = "+"
            factors.insert(0, f"({_format_pp(pp)})")
        text = "*".join(factors)
        if not chunks:
            chunks.append(text if sign == "+" else f"-{text}")
        else:
            chunks.append(("+ " if sign == "+" else "- ") + text)
    return " ".join(chunks)
