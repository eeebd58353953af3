"""Exact rational linear algebra: linear combinations, rank, complements.

Everything is exact: coefficients are ``fractions.Fraction`` (or ints),
elimination is fraction-free (integer cross-multiplication with per-row
gcd reduction after clearing denominators), pivoting is deterministic.
No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Hashable, Iterable, Mapping

Rational = Fraction


# =====================================================================
# linear combinations
# =====================================================================


class LinComb:
    """Immutable linear combination of hashable basis elements.

    Supports +, -, unary -, scalar multiplication, and iteration over
    (basis, coefficient) pairs.  Zero coefficients are dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: "Mapping | Iterable[tuple] | None" = None):
        d: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for basis, coeff in items:
                c = d.get(basis, 0) + Fraction(coeff)
                if c:
                    d[basis] = c
                elif basis in d:
                    del d[basis]
        self._terms = d

    @classmethod
    def single(cls, basis: Hashable, coeff=1) -> "LinComb":
        return cls([(basis, coeff)])

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    def items(self):
        return self._terms.items()

    def coeff(self, basis: Hashable) -> Fraction:
        return self._terms.get(basis, Fraction(0))

    def support(self):
        return self._terms.keys()

    def is_zero(self) -> bool:
        return not self._terms

    def map_basis(self, fn) -> "LinComb":
        """Apply fn to every basis element (collecting collisions)."""
        return LinComb((fn(b), c) for b, c in self._terms.items())

    def __add__(self, other: "LinComb") -> "LinComb":
        d = dict(self._terms)
        for b, c in other._terms.items():
            s = d.get(b, 0) + c
            if s:
                d[b] = s
            elif b in d:
                del d[b]
        out = LinComb()
        out._terms = d
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __neg__(self) -> "LinComb":
        out = LinComb()
        out._terms = {b: -c for b, c in self._terms.items()}
        return out

    def __rmul__(self, scalar) -> "LinComb":
        s = Fraction(scalar)
        if not s:
            return LinComb()
        out = LinComb()
        out._terms = {b: s * c for b, c in self._terms.items()}
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinComb) and self._terms == other._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for b, c in sorted(self._terms.items(), key=lambda bc: str(bc[0])):
            if c == 1:
                parts.append(f"+ {b}")
            elif c == -1:
                parts.append(f"- {b}")
            elif c > 0:
                parts.append(f"+ {c}*{b}")
            else:
                parts.append(f"- {-c}*{b}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    __repr__ = __str__


def as_lincomb(x) -> LinComb:
    """Coerce a bare basis element to the corresponding LinComb."""
    return x if isinstance(x, LinComb) else LinComb.single(x)


# =====================================================================
# rank via sparse fraction-free elimination
# =====================================================================


def _integer_row(row) -> dict[int, int]:
    """Clear denominators and divide by the content; row scaling keeps rank."""
    if isinstance(row, Mapping):
        items = [(int(c), v) for c, v in row.items() if v]
    else:
        items = [(c, v) for c, v in enumerate(row) if v]
    if not items:
        return {}
    denom = 1
    for _, v in items:
        if isinstance(v, Fraction):
            denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = {c: int(v * denom) for c, v in items}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    return ints


def rank(rows: Iterable) -> int:
    """Rank over the rationals of a matrix given as rows.

    Rows may be dense sequences or sparse {column: coefficient} mappings
    with int or Fraction entries.  Fraction-free: rows are cleared to
    integers, elimination uses cross-multiplication, and every updated row
    is reduced by its gcd to control growth.  Pivot choice is deterministic
    (sparsest row first, then lowest column).
    """
    active = [r for r in (_integer_row(row) for row in rows) if r]
    col_count: dict[int, int] = {}
    for r in active:
        for c in r:
            col_count[c] = col_count.get(c, 0) + 1
    rk = 0
    while active:
        # deterministic Markowitz-flavored pivot: fewest entries, then col
        pi = min(range(len(active)), key=lambda i: (len(active[i]), min(active[i])))
        pivot_row = active.pop(pi)
        pc = min(pivot_row, key=lambda c: (col_count[c], c))
        pv = pivot_row[pc]
        rk += 1
        for c in pivot_row:
            col_count[c] -= 1
        for i, r in enumerate(active):
            if pc not in r:
                continue
            rv = r[pc]
            for c in r:
                col_count[c] -= 1
            new = {}
            # union of supports: fill-in appears where only the pivot row
            # has an entry
            for c in r.keys() | pivot_row.keys():
                w = r.get(c, 0) * pv - pivot_row.get(c, 0) * rv
                if w:
                    new[c] = w
            g = 0
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                new = {c: v // g for c, v in new.items()}
            for c in new:
                col_count[c] = col_count.get(c, 0) + 1
            active[i] = new
        active = [r for r in active if r]
    return rk


# =====================================================================
# dense reduced row echelon form, kernels, complements
# =====================================================================


@dataclass
class RatMatrix:
    """Dense matrix of Fractions; small exact workhorse."""

    rows: list[list[Fraction]]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RatMatrix":
        return cls([[Fraction(v) for v in row] for row in rows])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def rank(self) -> int:
        return rank(self.rows)

    def rref(self) -> tuple["RatMatrix", list[int]]:
        """Reduced row echelon form and the pivot columns."""
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            sel = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if sel is None:
                continue
            rows[r], rows[sel] = rows[sel], rows[r]
            pv = rows[r][c]
            rows[r] = [v / pv for v in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return RatMatrix(rows), pivots


def kernel_basis(mat: RatMatrix) -> list[list[Fraction]]:
    """Basis of {x : M x = 0}, one vector per free column of the RREF."""
    if not mat.rows:
        return []
    red, pivots = mat.rref()
    ncols = mat.ncols
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red.rows[r][free]
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class Complement:
    basis: tuple[tuple[Fraction, ...], ...]
    pairing_nondegenerate: bool


def orthogonal_complement(vectors: list[list], gram: list[list]) -> Complement:
    """Everything pairing to zero against span(vectors).

    ``gram[i][j]`` is the pairing of the i-th basis vector of the left
    space against the j-th of the right space; the complement lives in the
    right space.  A degenerate pairing is reported in the result, not an
    error.
    """
    g = RatMatrix.from_rows(gram)
    nondeg = g.nrows == g.ncols and g.rank() == g.nrows
    if not vectors:
        dim = g.ncols
        eye = [[Fraction(i == j) for j in range(dim)] for i in range(dim)]
        return Complement(tuple(tuple(r) for r in eye), nondeg)
    constraints = []
    for v in vectors:
        row = [
            sum(Fraction(v[i]) * Fraction(gram[i][j]) for i in range(len(v)))
            for j in range(g.ncols)
        ]
        constraints.append(row)
    basis = kernel_basis(RatMatrix.from_rows(constraints))
    return Complement(tuple(tuple(b) for b in basis), nondeg)
