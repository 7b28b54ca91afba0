"""Coefficient rings, dream weights and Schubert-basis expansions.

Weights use the row-minus-column convention: an equivariant tile at (i, j)
has cohomology weight y_i - y_j and K-theory weight 1 - exp(y_i - y_j); a
fusor at (i, j) has K-theory weight exp(y_i - y_j).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional, Union

from .core import BoundedAffinePermutation, PartialPermutation, Partition, fits_box, restrict_to_triangle
from .dreams import Kind, Mode, PipeDream, enumerate_dreams


class _Sparse:
    """Integer polynomial in variables indexed 1..; monomials are sorted tuples of (var, exp)."""

    allow_negative = False
    symbol = "x"

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def const(cls, c: int):
        return cls({(): c})

    @classmethod
    def monomial(cls, exps: dict, c: int = 1):
        mono = tuple(sorted((i, e) for i, e in exps.items() if e))
        if not cls.allow_negative and any(e < 0 for _, e in mono):
            raise ValueError("negative exponent")
        return cls({mono: c})

    @classmethod
    def var(cls, i: int):
        return cls.monomial({i: 1})

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self).const(other)
        if type(other) is not type(self):
            return NotImplemented
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self.terms) == 1 and self.allow_negative:
                (m, c), = self.terms.items()
                if c in (1, -1):
                    return type(self)({tuple((i, -x * -e) for i, x in m): c ** (-e)})
            raise ValueError("not invertible")
        out = type(self).const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self).const(other)
        return type(other) is type(self) and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order, largest first."""
        def key(item):
            m, _ = item
            d = dict(m)
            top = max((i for i, _ in m), default=0)
            vec = tuple(d.get(i, 0) for i in range(1, top + 1))
            return (sum(d.values()), vec + (0,) * (64 - len(vec)))
        return sorted(self.terms.items(), key=key, reverse=True)

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            body = "*".join(f"{self.symbol}{i}" + (f"^{e}" if e != 1 else "") for i, e in m)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def _mono_mul(m1, m2):
    d = dict(m1)
    for i, e in m2:
        d[i] = d.get(i, 0) + e
    return tuple(sorted((i, e) for i, e in d.items() if e))


class YPolynomial(_Sparse):
    """Polynomial in y_1..y_n."""

    symbol = "y"

    def homogeneous_part(self, d: int) -> "YPolynomial":
        return YPolynomial({m: c for m, c in self.terms.items() if sum(e for _, e in m) == d})

    def truncate(self, d: int) -> "YPolynomial":
        return YPolynomial({m: c for m, c in self.terms.items() if sum(e for _, e in m) <= d})

    def to_json(self) -> dict:
        return {"poly": [{"c": c, "exp": {str(i): e for i, e in m}} for m, c in self.sorted_terms()],
                "text": str(self)}


class ExpLaurent(_Sparse):
    """Laurent polynomial in E_i = exp(y_i)."""

    allow_negative = True
    symbol = "E"

    def at_one(self) -> int:
        return sum(self.terms.values())

    def to_json(self) -> dict:
        return {"laurent": [{"c": c, "exp": {str(i): e for i, e in m}} for m, c in self.sorted_terms()],
                "text": str(self)}


def y(i: int) -> YPolynomial:
    return YPolynomial.var(i)


def e_diff(i: int, j: int) -> ExpLaurent:
    """exp(y_i - y_j)."""
    return ExpLaurent.monomial({i: 1, j: -1}) if i != j else ExpLaurent.const(1)


# ---------------------------------------------------------------- weights


def wt_H(P: PipeDream) -> YPolynomial:
    if P.fusing:
        raise ValueError("wt_H is only defined for dreams without fusing")
    out = YPolynomial.const(1)
    for i, j in P.equivariant_positions:
        out = out * (y(i) - y(j))
    return out


def wt_K(P: PipeDream) -> ExpLaurent:
    out = ExpLaurent.const(1)
    for (i, j), t in P.tiles:
        if t.kind is Kind.EQUIVARIANT:
            out = out * (1 - e_diff(i, j))
        elif t.kind is Kind.FUSOR:
            out = out * e_diff(i, j)
    return out


def lowest_degree_part(w: ExpLaurent, d: int) -> YPolynomial:
    """Degree-d part of w under exp(y_i) = 1 - y_i + ..., truncated past d.

    The substitution E_i -> 1 - y_i (rather than 1 + y_i) matches the
    cohomology weights y_i - y_j to the K-theory weights 1 - exp(y_i - y_j).
    """
    total = YPolynomial()
    for m, c in w.terms.items():
        term = YPolynomial.const(c)
        for i, e in m:
            term = (term * _series_power(i, e, d)).truncate(d)
        total = total + term
    return total.homogeneous_part(d)


def _series_power(i: int, e: int, d: int) -> YPolynomial:
    # (1 - y_i)^e as a power series truncated at degree d
    if e >= 0:
        return YPolynomial({((i, m),) if m else (): comb(e, m) * (-1) ** m for m in range(min(e, d) + 1)})
    a = -e
    return YPolynomial({((i, m),) if m else (): comb(a + m - 1, m) for m in range(d + 1)})


# ---------------------------------------------------------------- expansions


Coeff = Union[int, YPolynomial, ExpLaurent]


@dataclass(frozen=True)
class DreamRecord:
    index: int
    lam: Partition
    sign: int
    fusing: int
    equivariant: tuple
    weight: Coeff


@dataclass
class SchubertExpansion:
    mode: Mode
    k: int
    n: int
    terms: dict = field(default_factory=dict)
    records: list = field(default_factory=list)

    def __post_init__(self):
        self.mode = Mode(self.mode)
        self.terms = {lam: c for lam, c in self.terms.items() if not _is_zero(c)}
        for lam in self.terms:
            if not fits_box(lam, self.k, self.n - self.k):
                raise ValueError(f"{lam} does not fit the {self.k}x{self.n - self.k} box")

    def coefficient(self, lam) -> Coeff:
        return self.terms.get(tuple(lam), _zero(self.mode))

    def same_terms(self, other: "SchubertExpansion") -> bool:
        return (self.mode, self.k, self.n) == (other.mode, other.k, other.n) and self.terms == other.terms

    def sorted_partitions(self) -> list:
        return sorted(self.terms, key=lambda lam: (-sum(lam), tuple(-p for p in lam)))

    def to_json(self) -> dict:
        out = []
        for lam in self.sorted_partitions():
            c = self.terms[lam]
            coeff = c if isinstance(c, int) else c.to_json()
            out.append({"partition": list(lam), "coeff": coeff})
        return {"mode": self.mode.value, "k": self.k, "n": self.n, "terms": out}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for lam in self.sorted_partitions():
            c = self.terms[lam]
            shape = "(" + ",".join(map(str, lam)) + ")"
            parts.append(f"({c})[X^{shape}]")
        return " + ".join(parts)


def _zero(mode: Mode) -> Coeff:
    return {Mode.H: 0, Mode.K: 0, Mode.HT: YPolynomial(), Mode.KT: ExpLaurent()}[Mode(mode)]


def _is_zero(c) -> bool:
    return c == 0 if isinstance(c, int) else c.is_zero()


def _as_partial(f) -> PartialPermutation:
    if isinstance(f, BoundedAffinePermutation):
        g = restrict_to_triangle(f)
        from .core import extend_to_juggling
        if extend_to_juggling(g) != f:
            raise ValueError(f"{f} is not an interval pattern")
        return g
    return f


def expand(f, mode: Mode | str, dreams: Optional[list] = None) -> SchubertExpansion:
    """Expansion of the class of Π_f in the opposite Schubert basis."""
    f = _as_partial(f)
    mode = Mode(mode)
    if dreams is None:
        dreams = enumerate_dreams(f, mode)
    terms: dict = {}
    records = []
    for idx, P in enumerate(dreams):
        sign = (-1) ** P.fusing if mode.ktheory else 1
        if mode is Mode.HT:
            w = wt_H(P)
        elif mode is Mode.KT:
            w = wt_K(P)
        else:
            w = 1
        c = sign * w
        lam = P.lam
        terms[lam] = terms[lam] + c if lam in terms else c
        records.append(DreamRecord(idx, lam, sign, P.fusing, P.equivariant_positions, w))
    return SchubertExpansion(mode, f.k, f.n, terms, records)


def specialize_KT_to_K(e: SchubertExpansion) -> SchubertExpansion:
    if e.mode is not Mode.KT:
        raise ValueError("expected a KT expansion")
    terms = {lam: c.at_one() for lam, c in e.terms.items()}
    records = [DreamRecord(r.index, r.lam, r.sign, r.fusing, r.equivariant, r.weight.at_one())
               for r in e.records]
    return SchubertExpansion(Mode.K, e.k, e.n, terms, records)


def specialize_KT_to_HT(e: SchubertExpansion) -> SchubertExpansion:
    if e.mode is not Mode.KT:
        raise ValueError("expected a KT expansion")
    terms: dict = {}
    records = []
    for r in e.records:
        if r.fusing:
            continue
        w = lowest_degree_part(r.weight, len(r.equivariant))
        terms[r.lam] = terms.get(r.lam, YPolynomial()) + w
        records.append(DreamRecord(r.index, r.lam, 1, 0, r.equivariant, w))
    return SchubertExpansion(Mode.HT, e.k, e.n, terms, records)


@dataclass
class PositivityReport:
    ok: bool
    violations: list

    def __bool__(self):
        return self.ok


def check_graham_positive(e: SchubertExpansion) -> PositivityReport:
    """Each HT coefficient must be a sum of products of distinct positive roots."""
    if e.mode is not Mode.HT:
        raise ValueError("expected an HT expansion")
    bad = []
    sums: dict = {}
    for r in e.records:
        factors = list(r.equivariant)
        if r.sign != 1:
            bad.append((r.index, "negative sign"))
        if any(i >= j for i, j in factors):
            bad.append((r.index, "non-positive root"))
        if len(set(factors)) != len(factors):
            bad.append((r.index, "repeated factor"))
        prod = YPolynomial.const(1)
        for i, j in factors:
            prod = prod * (y(i) - y(j))
        if prod != r.weight:
            bad.append((r.index, "weight is not the product of its roots"))
        sums[r.lam] = sums.get(r.lam, YPolynomial()) + prod
    if {lam: c for lam, c in sums.items() if not c.is_zero()} != e.terms:
        bad.append((None, "records do not sum to the coefficients"))
    return PositivityReport(not bad, bad)
