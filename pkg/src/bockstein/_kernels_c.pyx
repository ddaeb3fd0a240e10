# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled multiplication-table kernels.

Mirrors bockstein._kernels_py exactly: same signatures, same return
values (ints, sorted lists of ints, or None), so the two lanes are
interchangeable.  Tables arrive as C-contiguous int32 arrays.
"""


def assoc_violation(int[:, ::1] table):
    """First (a, b, c) with (ab)c != a(bc) in row-major scan order, or None."""
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t a, b, c
    cdef int ab
    for a in range(n):
        for b in range(n):
            ab = table[a, b]
            for c in range(n):
                if table[ab, c] != table[a, table[b, c]]:
                    return (a, b, c)
    return None


def closure(int[:, ::1] table, seed):
    """Multiplicative closure of the (nonempty) seed, sorted ascending."""
    cdef Py_ssize_t n = table.shape[0]
    cdef bytearray seen = bytearray(n)
    cdef list members = []
    cdef Py_ssize_t head = 0, j, count
    cdef int x, y, z
    for v in seed:
        x = v
        if not seen[x]:
            seen[x] = 1
            members.append(x)
    while head < len(members):
        x = members[head]
        head += 1
        count = len(members)
        for j in range(count):
            y = members[j]
            z = table[x, y]
            if not seen[z]:
                seen[z] = 1
                members.append(z)
            z = table[y, x]
            if not seen[z]:
                seen[z] = 1
                members.append(z)
    members.sort()
    return members


def power_map_image(int[:, ::1] table, p):
    """The list x -> x**p over all elements."""
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t e = p
    cdef list out = [0] * n
    cdef Py_ssize_t x, i
    cdef int acc
    for x in range(n):
        acc = <int> x
        for i in range(e - 1):
            acc = table[acc, x]
        out[x] = acc
    return out


def element_orders(int[:, ::1] table, identity):
    """Multiplicative order of every element."""
    cdef Py_ssize_t n = table.shape[0]
    cdef int e = identity
    cdef list out = [0] * n
    cdef Py_ssize_t x
    cdef int acc
    cdef long k
    for x in range(n):
        acc = <int> x
        k = 1
        while acc != e:
            acc = table[acc, x]
            k += 1
        out[x] = k
    return out


def center_elements(int[:, ::1] table):
    """Elements commuting with the whole group, sorted ascending."""
    cdef Py_ssize_t n = table.shape[0]
    cdef list out = []
    cdef Py_ssize_t x, y
    cdef bint ok
    for x in range(n):
        ok = True
        for y in range(n):
            if table[x, y] != table[y, x]:
                ok = False
                break
        if ok:
            out.append(x)
    return out


def commutator_values(int[:, ::1] table, int[::1] inv, a_elems, b_elems):
    """Distinct values a^-1 b^-1 a b over a in A, b in B, sorted."""
    cdef Py_ssize_t n = table.shape[0]
    cdef bytearray seen = bytearray(n)
    cdef list out = []
    cdef int a, b, c
    for va in a_elems:
        a = va
        for vb in b_elems:
            b = vb
            c = table[table[table[inv[a], inv[b]], a], b]
            if not seen[c]:
                seen[c] = 1
                out.append(c)
    out.sort()
    return out


def conjugate_values(int[:, ::1] table, int[::1] inv, elems):
    """Distinct values g^-1 x g over all g and x in elems, sorted."""
    cdef Py_ssize_t n = table.shape[0]
    cdef bytearray seen = bytearray(n)
    cdef list out = []
    cdef Py_ssize_t g
    cdef int x, c
    for v in elems:
        x = v
        for g in range(n):
            c = table[table[inv[g], x], g]
            if not seen[c]:
                seen[c] = 1
                out.append(c)
    out.sort()
    return out
