"""Vectorized numpy implementations of the multiplication-table kernels.

Fallback lane used when the compiled extension is unavailable (or when
``BOCKSTEIN_PURE=1``).  Every function here must return exactly what the
compiled lane returns: plain ints, sorted lists of ints, or None.
"""

from __future__ import annotations

import numpy as np

# Rows of (lhs, rhs) products per associativity chunk, sized to keep the
# temporaries around 32 MB for order-512 tables.
_ASSOC_CHUNK_CELLS = 1 << 22


def assoc_violation(table: np.ndarray):
    """First (a, b, c) with (ab)c != a(bc) in row-major scan order, or None."""
    n = table.shape[0]
    if n == 0:
        return None
    chunk = max(1, _ASSOC_CHUNK_CELLS // (n * n))
    for a0 in range(0, n, chunk):
        rows = table[a0 : a0 + chunk]
        lhs = table[rows, :]          # lhs[i, b, c] = t[t[a, b], c]
        rhs = rows[:, table]          # rhs[i, b, c] = t[a, t[b, c]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            i, b, c = bad[0]
            return (int(a0 + i), int(b), int(c))
    return None


def closure(table: np.ndarray, seed):
    """Multiplicative closure of the (nonempty) seed, sorted ascending."""
    n = table.shape[0]
    known = np.zeros(n, dtype=bool)
    members = np.unique(np.asarray(list(seed), dtype=table.dtype))
    known[members] = True
    frontier = members
    while frontier.size:
        members = np.flatnonzero(known)
        prods = np.concatenate(
            [
                table[np.ix_(frontier, members)].ravel(),
                table[np.ix_(members, frontier)].ravel(),
            ]
        )
        fresh = np.unique(prods)
        fresh = fresh[~known[fresh]]
        known[fresh] = True
        frontier = fresh
    return [int(x) for x in np.flatnonzero(known)]


def power_map_image(table: np.ndarray, p: int):
    """The list x -> x**p over all elements."""
    n = table.shape[0]
    idx = np.arange(n)
    acc = idx.copy()
    for _ in range(p - 1):
        acc = table[acc, idx]
    return [int(x) for x in acc]


def element_orders(table: np.ndarray, identity: int):
    """Multiplicative order of every element."""
    n = table.shape[0]
    idx = np.arange(n)
    acc = idx.copy()
    orders = np.ones(n, dtype=np.int64)
    live = acc != identity
    while live.any():
        sel = np.flatnonzero(live)
        acc[sel] = table[acc[sel], sel]
        orders[sel] += 1
        live[sel] = acc[sel] != identity
    return [int(x) for x in orders]


def center_elements(table: np.ndarray):
    """Elements commuting with the whole group, sorted ascending."""
    mask = (table == table.T).all(axis=1)
    return [int(x) for x in np.flatnonzero(mask)]


def commutator_values(table: np.ndarray, inv: np.ndarray, a_elems, b_elems):
    """Distinct values a^-1 b^-1 a b over a in A, b in B, sorted."""
    a = np.asarray(list(a_elems), dtype=table.dtype)
    b = np.asarray(list(b_elems), dtype=table.dtype)
    if a.size == 0 or b.size == 0:
        return []
    u = table[inv[a][:, None], inv[b][None, :]]
    v = table[u, a[:, None]]
    w = table[v, b[None, :]]
    return [int(x) for x in np.unique(w)]


def conjugate_values(table: np.ndarray, inv: np.ndarray, elems):
    """Distinct values g^-1 x g over all g and x in elems, sorted."""
    xs = np.asarray(list(elems), dtype=table.dtype)
    if xs.size == 0:
        return []
    left = table[inv[:, None], xs[None, :]]        # left[g, i] = g^-1 * x_i
    n = table.shape[0]
    out = table[left, np.arange(n)[:, None]]       # out[g, i] = (g^-1 x_i) g
    return [int(x) for x in np.unique(out)]
