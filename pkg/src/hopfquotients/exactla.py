"""Exact rank computations for sparse integer matrices.

Rows live in dicts column -> coefficient.  The main path is a
fraction-free elimination in big integers: a pivot step replaces row_j
by (p * row_j - v * row_i) / gcd, so no rationals ever appear.  Pivots
are chosen Markowitz style, cheapest column first and shortest row
within it, with deterministic tie breaks, so a given matrix always
eliminates the same way.

rank_dense is an independent textbook elimination over Fraction kept
as a cross check; the two must agree on everything.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

# strip common content from a row once coefficients pass this many bits
_STRIP_BITS = 63


def _normalize_row(row: dict) -> dict:
    """Clear denominators, divide out the content, make the leading
    (lowest column) coefficient positive."""
    items = [(c, v) for c, v in row.items() if v]
    if not items:
        return {}
    if any(isinstance(v, Fraction) for _, v in items):
        denom_lcm = 1
        for _, v in items:
            d = v.denominator if isinstance(v, Fraction) else 1
            denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
        items = [(c, int(v * denom_lcm)) for c, v in items]
    g = 0
    for _, v in items:
        g = gcd(g, v)
    lead = min(items)[1]
    if lead < 0:
        g = -g
    return {c: v // g for c, v in items}


class SparseMatrix:
    """A bag of relation rows over a fixed column range."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[dict] = []
        self._seen: set = set()

    def add_row(self, row: dict) -> None:
        norm = _normalize_row(row)
        if not norm:
            return
        key = tuple(sorted(norm.items()))
        if key in self._seen:
            return
        self._seen.add(key)
        self.rows.append(norm)

    def extend(self, rows) -> None:
        for row in rows:
            self.add_row(row)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def rank(self) -> int:
        return rank_sparse(self.rows)


def _maybe_strip(row: dict) -> dict:
    if max(v.bit_length() for v in row.values()) <= _STRIP_BITS:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def rank_sparse(rows) -> int:
    """Rank of the span of the given rows, fraction-free."""
    live = [dict(r) for r in rows if r]
    cols: dict[int, set] = {}
    for i, row in enumerate(live):
        for c in row:
            cols.setdefault(c, set()).add(i)
    heap = [(len(members), c) for c, members in cols.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        count, c = heapq.heappop(heap)
        members = cols.get(c)
        if not members:
            continue
        if count != len(members):
            heapq.heappush(heap, (len(members), c))
            continue
        pivot = min(members, key=lambda i: (len(live[i]), i))
        prow = live[pivot]
        pval = prow[c]
        rank += 1
        # retire the pivot row from every column it touches
        for col in prow:
            group = cols[col]
            group.discard(pivot)
            if not group and col != c:
                cols.pop(col)
        for j in list(members):
            jrow = live[j]
            v = jrow[c]
            g = gcd(pval, v)
            mj, mi = pval // g, v // g
            new = {}
            for col, val in jrow.items():
                new[col] = mj * val
            for col, val in prow.items():
                cur = new.get(col, 0) - mi * val
                if cur:
                    new[col] = cur
                elif col in new:
                    del new[col]
            if new:
                new = _maybe_strip(new)
            for col in jrow:
                if col not in new:
                    grp = cols.get(col)
                    if grp is not None:
                        grp.discard(j)
            for col in new:
                if col not in jrow:
                    cols.setdefault(col, set()).add(j)
                    heapq.heappush(heap, (len(cols[col]), col))
            live[j] = new
        cols.pop(c, None)
    return rank


def rank_dense(rows, ncols: int) -> int:
    """Reference rank over Fraction, row reduction with no cleverness."""
    mat = []
    for row in rows:
        dense = [Fraction(0)] * ncols
        for c, v in row.items():
            dense[c] = Fraction(v)
        mat.append(dense)
    rank = 0
    col = 0
    nrows = len(mat)
    while col < ncols and rank < nrows:
        pivot = next((i for i in range(rank, nrows) if mat[i][col]), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [x / pv for x in mat[rank]]
        for i in range(nrows):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank


def quotient_dim(ambient: int, matrix: SparseMatrix) -> int:
    """Dimension of the quotient of an ambient space by the row span."""
    r = matrix.rank()
    if r > ambient:
        raise ValueError("rank exceeded ambient dimension")
    return ambient - r
