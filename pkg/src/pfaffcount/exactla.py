"""Exact rational linear algebra on sparse matrices.

Elimination is fraction-free: every row is scaled to a primitive integer
vector and updated by integer cross-multiplication, so no rational arithmetic
happens until back substitution produces kernel vectors.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

Entry = Tuple[int, int]

# Largest prime below 2**31; fits comfortably in Python word-size fast paths.
DEFAULT_PRIME = 2147483629


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: Mapping[Entry, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
            v = Fraction(v)
            if v:
                clean[(i, j)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "RationalMatrix":
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v}
        return cls(len(rows), ncols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Mapping[int, Fraction]], rows: int) -> "RationalMatrix":
        entries = {(i, j): v for j, col in enumerate(columns) for i, v in col.items()}
        return cls(rows, len(columns), entries)

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        return cls(size, size, {(i, i): Fraction(1) for i in range(size)})

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def apply(self, vector: Sequence) -> List[Fraction]:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        out = [Fraction(0)] * self.rows
        for (i, j), v in self.entries.items():
            out[i] += v * vector[j]
        return out

    def sparse_rows(self) -> List[Dict[int, Fraction]]:
        out: List[Dict[int, Fraction]] = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def _integer_rows(M: RationalMatrix) -> List[Dict[int, int]]:
    out = []
    for row in M.sparse_rows():
        if not row:
            continue
        den = lcm(*(v.denominator for v in row.values()))
        out.append(_primitive({j: int(v * den) for j, v in row.items()}))
    return out


def _echelon(rows: List[Dict[int, int]], ncols: int) -> List[Tuple[int, Dict[int, int]]]:
    """Fraction-free forward elimination with leftmost-column pivoting.

    Returns (pivot column, row) pairs in increasing pivot order; each row is
    a primitive integer vector whose entries left of the pivot are zero.
    """
    by_col: Dict[int, List[int]] = {}
    live: Dict[int, Dict[int, int]] = {}
    for k, row in enumerate(rows):
        live[k] = row
        by_col.setdefault(min(row), []).append(k)
    pivots = []
    for c in range(ncols):
        bucket = by_col.pop(c, None)
        if not bucket:
            continue
        # shortest row as pivot keeps fill-in low
        bucket.sort(key=lambda k: (len(live[k]), k))
        pk = bucket[0]
        prow = live.pop(pk)
        pval = prow[c]
        for k in bucket[1:]:
            row = live.pop(k)
            a = row[c]
            g = gcd(a, pval)
            sa, sp = pval // g, a // g
            new = {j: v * sa for j, v in row.items()}
            for j, v in prow.items():
                nv = new.get(j, 0) - sp * v
                if nv:
                    new[j] = nv
                else:
                    new.pop(j, None)
            if not new:
                continue
            new = _primitive(new)
            live[k] = new
            by_col.setdefault(min(new), []).append(k)
        pivots.append((c, prow))
    return pivots


def rank(M: RationalMatrix, prefilter: bool = False, prime: int = DEFAULT_PRIME) -> int:
    """Exact rank over the rationals.

    With ``prefilter`` a modular rank is tried first; it is only trusted when
    it already reaches min(rows, cols), since the modular rank can never
    exceed the rational one.
    """
    if prefilter:
        r = rank_mod_p(M, prime)
        if r == min(M.rows, M.cols):
            return r
    return len(_echelon(_integer_rows(M), M.cols))


def rank_mod_p(M: RationalMatrix, p: int = DEFAULT_PRIME) -> int:
    """Rank of M reduced modulo the prime p (a lower bound for the exact rank).

    Rows whose denominators vanish mod p are dropped, which can only lower
    the result further.
    """
    rows = []
    for row in M.sparse_rows():
        red = {}
        for j, v in row.items():
            if v.denominator % p == 0:
                red = None
                break
            x = v.numerator * pow(v.denominator, -1, p) % p
            if x:
                red[j] = x
        if red:
            rows.append(red)
    r = 0
    by_col: Dict[int, List[Dict[int, int]]] = {}
    for row in rows:
        by_col.setdefault(min(row), []).append(row)
    for c in range(M.cols):
        bucket = by_col.pop(c, None)
        if not bucket:
            continue
        prow = bucket[0]
        inv = pow(prow[c], -1, p)
        for row in bucket[1:]:
            f = row[c] * inv % p
            new = dict(row)
            for j, v in prow.items():
                nv = (new.get(j, 0) - f * v) % p
                if nv:
                    new[j] = nv
                else:
                    new.pop(j, None)
            if new:
                by_col.setdefault(min(new), []).append(new)
        r += 1
    return r


def kernel_basis(M: RationalMatrix) -> List[List[Fraction]]:
    """Basis of the right null space, one vector per free column.

    The basis is the canonical one attached to the reduced row echelon form:
    vector f has a 1 in free column f, zeros in the other free columns.
    """
    pivots = _echelon(_integer_rows(M), M.cols)
    # back-reduce to RREF, bottom-up
    reduced: List[Tuple[int, Dict[int, int]]] = []
    for c, row in reversed(pivots):
        row = dict(row)
        for c2, r2 in reduced:
            a = row.get(c2)
            if not a:
                continue
            b = r2[c2]
            g = gcd(a, b)
            sa, sb = b // g, a // g
            new = {j: v * sa for j, v in row.items()}
            for j, v in r2.items():
                nv = new.get(j, 0) - sb * v
                if nv:
                    new[j] = nv
                else:
                    new.pop(j, None)
            row = _primitive(new)
        reduced.append((c, row))
    pivot_cols = {c for c, _ in reduced}
    free = [j for j in range(M.cols) if j not in pivot_cols]
    basis = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for c, row in reduced:
            a = row.get(f)
            if a:
                v[c] = Fraction(-a, row[c])
        basis.append(v)
    return basis


def nullity(M: RationalMatrix) -> int:
    return M.cols - rank(M, prefilter=True)


def random_sparse_matrix(rows: int, cols: int, density: float, rng: random.Random,
                         values: Iterable[int] = range(-3, 4)) -> RationalMatrix:
    vals = [v for v in values if v]
    entries = {}
    for i in range(rows):
        for j in range(cols):
            if rng.random() < density:
                entries[(i, j)] = Fraction(rng.choice(vals), rng.randint(1, 3))
    return RationalMatrix(rows, cols, entries)
