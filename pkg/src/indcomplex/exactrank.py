"""Exact integer matrix rank for sparse boundary matrices.

Sparse path: Gaussian elimination preferring unit pivots with a Markowitz
style fill estimate; when only non-unit entries remain the update switches
to fraction-free cross-multiplication with per-row content stripping, so
all arithmetic stays in (arbitrary precision) integers and the reported
rank is exact over the rationals.

Dense path (small matrices): Bareiss fraction-free elimination.

rank_mod_p implements the same elimination over a prime field; it is used
as an independent cross-check in the tests, never as the reported rank.
"""

from __future__ import annotations

from math import gcd

DENSE_COLUMN_LIMIT = 512


def rank_dense(rows) -> int:
    """Bareiss elimination on a list of integer lists (consumed)."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    rank = 0
    prev = 1
    ncols = len(m[0])
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        for r in range(row + 1, len(m)):
            f = m[r][col]
            if f or True:
                mr = m[r]
                pr = m[row]
                for c in range(col + 1, ncols):
                    mr[c] = (pv * mr[c] - f * pr[c]) // prev
                mr[col] = 0
        prev = pv
        rank += 1
        row += 1
        if row == len(m):
            break
    return rank


def _strip_content(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for c in row:
            row[c] //= g


def rank_sparse(rows) -> int:
    """Exact rank of a sparse integer matrix given as dicts col -> value.

    Minimum-fill flavoured pivoting: shortest active row first (lazy heap),
    unit entry with least column degree within it.  With the near-unimodular
    boundary matrices this keeps both fill and coefficient growth tame.
    """
    import heapq

    rows = [dict(r) for r in rows if r]
    cols = {}
    for i, r in enumerate(rows):
        for c in r:
            cols.setdefault(c, set()).add(i)
    active = set(range(len(rows)))
    heap = [(len(r), i) for i, r in enumerate(rows)]
    heapq.heapify(heap)
    rank = 0
    while heap:
        rlen, pi = heapq.heappop(heap)
        if pi not in active or len(rows[pi]) != rlen:
            continue  # stale entry
        prow = rows[pi]
        pc = None
        key = None
        for c, v in prow.items():
            k = (abs(v) != 1, abs(v), len(cols[c]))
            if key is None or k < key:
                key, pc = k, c
        pval = prow[pc]
        rank += 1
        active.discard(pi)
        for c in prow:
            cols[c].discard(pi)
        for j in list(cols[pc]):
            jrow = rows[j]
            f = jrow[pc]
            if pval == 1:
                mult_j, mult_p = 1, f
            elif pval == -1:
                mult_j, mult_p = 1, -f
            else:
                g = gcd(pval, f)
                mult_j, mult_p = pval // g, f // g
            if mult_j != 1:
                for c in jrow:
                    jrow[c] *= mult_j
            for c, v in prow.items():
                cur = jrow.get(c, 0) - v * mult_p
                if cur:
                    if c not in jrow:
                        cols.setdefault(c, set()).add(j)
                    jrow[c] = cur
                elif c in jrow:
                    del jrow[c]
                    cols[c].discard(j)
            if mult_j != 1:
                _strip_content(jrow)
            if jrow:
                heapq.heappush(heap, (len(jrow), j))
            else:
                active.discard(j)
    return rank


def rank_exact(rows, ncols=None) -> int:
    """Dispatch on size: dense Bareiss below DENSE_COLUMN_LIMIT columns."""
    rows = [r for r in rows if r]
    if not rows:
        return 0
    if ncols is None:
        ncols = max(max(r) for r in rows) + 1
    if ncols < DENSE_COLUMN_LIMIT and len(rows) < DENSE_COLUMN_LIMIT:
        dense = [[r.get(c, 0) for c in range(ncols)] for r in rows]
        return rank_dense(dense)
    return rank_sparse(rows)


def rank_mod_p(rows, p) -> int:
    """Rank over GF(p); always <= the rational rank."""
    rows = [{c: v % p for c, v in r.items() if v % p} for r in rows]
    rows = [r for r in rows if r]
    cols = {}
    for i, r in enumerate(rows):
        for c in r:
            cols.setdefault(c, set()).add(i)
    active = set(range(len(rows)))
    rank = 0
    while active:
        pi = min(active, key=lambda i: len(rows[i]))
        prow = rows[pi]
        pc = min(prow, key=lambda c: len(cols[c]))
        pinv = pow(prow[pc], -1, p)
        rank += 1
        active.discard(pi)
        for c in prow:
            cols[c].discard(pi)
        for j in [j for j in cols[pc] if j in active]:
            jrow = rows[j]
            f = (jrow[pc] * pinv) % p
            for c, v in prow.items():
                cur = (jrow.get(c, 0) - f * v) % p
                if cur:
                    if c not in jrow:
                        cols.setdefault(c, set()).add(j)
                    jrow[c] = cur
                elif c in jrow:
                    del jrow[c]
                    cols[c].discard(j)
            if not jrow:
                active.discard(j)
    return rank
