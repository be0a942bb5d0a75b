"""Echelon forms for submodules of Z/p^m_1 + ... + Z/p^m_r.

A submodule is identified with its preimage lattice M in Z^r.  M always
contains the relation lattice L = diag(p^m_1, ..., p^m_r), so it has full
rank and a unique Hermite normal form: upper triangular rows, pivots p^v with
0 <= v <= m_j, and every entry to the right of a pivot column reduced into
[0, pivot of that column).  Two generating sets span the same submodule iff
their forms are equal, which is what makes subgroups hashable.

All arithmetic is on Python ints; sizes here are tiny (a few dozen columns).
"""

from itertools import product


def valuation(x, p):
    """p-adic valuation of a nonzero integer."""
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def hermite(gens, mods, p, reduce=True):
    """Hermite form of the submodule generated by ``gens``.

    ``mods`` are the exponents m_j of the ambient module.  Returns a tuple of
    r rows (tuples), row j having its pivot in column j.  With
    ``reduce=False`` the entries right of the pivots are left unreduced; the
    pivots (hence the order) are still correct.
    """
    n = len(mods)
    qs = [p ** m for m in mods]
    top = p ** max(mods, default=0)
    work = []
    for g in gens:
        row = [g[k] % qs[k] for k in range(n)]
        if any(row):
            work.append(row)
    basis = []
    for j in range(n):
        best, bv = None, mods[j]
        for idx, row in enumerate(work):
            c = row[j]
            if c:
                v = valuation(c, p)
                if v < bv:
                    best, bv = idx, v
                    if v == 0:
                        break
        if best is None:
            piv = [0] * n
            piv[j] = qs[j]
            basis.append(piv)
            continue
        prow = work.pop(best)
        pv = p ** bv
        unit = prow[j] // pv
        if unit != 1:
            inv = pow(unit, -1, top)
            prow = [(x * inv) % qs[k] for k, x in enumerate(prow)]
        rest = []
        for row in work:
            c = row[j]
            if c:
                f = c // pv
                row = [(x - f * y) % qs[k] for k, (x, y) in enumerate(zip(row, prow))]
            if any(row):
                rest.append(row)
        # p^(m_j - v) * prow vanishes in column j but not necessarily elsewhere
        s = qs[j] // pv
        sat = [0] * n
        for k in range(j + 1, n):
            sat[k] = (s * prow[k]) % qs[k]
        if any(sat):
            rest.append(sat)
        work = rest
        prow[j] = pv
        basis.append(prow)
    if reduce:
        for i in range(n):
            row = basis[i]
            for k in range(i + 1, n):
                d = basis[k][k]
                f = row[k] // d
                if f:
                    other = basis[k]
                    for t in range(k, n):
                        row[t] -= f * other[t]
    return tuple(tuple(row) for row in basis)


def residual(vec, rows, start=0):
    """Reduce ``vec`` by the echelon ``rows`` from column ``start`` on.

    Returns the list of remainders; ``vec`` lies in the lattice iff every
    remainder from ``start`` on is zero.
    """
    vec = list(vec)
    n = len(vec)
    for k in range(start, n):
        c = vec[k]
        if c:
            row = rows[k]
            f = c // row[k]
            if f:
                for t in range(k, n):
                    vec[t] -= f * row[t]
    return vec


def in_lattice(vec, rows, start=0):
    n = len(vec)
    vec = list(vec)
    for k in range(start, n):
        c = vec[k]
        if c:
            row = rows[k]
            d = row[k]
            if c % d:
                return False
            f = c // d
            for t in range(k, n):
                vec[t] -= f * row[t]
    return True


def log_index(rows, mods, p):
    """log_p of |M / L|, the order of the submodule."""
    return sum(m - valuation(rows[j][j], p) for j, m in enumerate(mods))


def lattice_elements(rows, mods, p):
    """Iterate the elements of the submodule, each reduced mod p^m_j."""
    n = len(mods)
    qs = [p ** m for m in mods]
    gens = [(rows[j], qs[j] // rows[j][j]) for j in range(n) if rows[j][j] != qs[j]]
    for coeffs in product(*(range(c) for _, c in gens)):
        x = [0] * n
        for (row, _), c in zip(gens, coeffs):
            if c:
                for t in range(n):
                    x[t] += c * row[t]
        yield tuple(x[t] % qs[t] for t in range(n))


def enumerate_lattices(mods, p):
    """Yield every Hermite form of a lattice between L and Z^r exactly once.

    Rows are chosen bottom-up.  A candidate row i with pivot p^v and reduced
    tail is admissible iff p^(m_i - v) times its tail lies in the lattice of
    the rows below, i.e. iff the enlarged lattice still contains p^m_i e_i.
    """
    n = len(mods)

    def extend(i, below):
        if i < 0:
            yield tuple(tuple(r) for r in below)
            return
        m = mods[i]
        full = [None] * (i + 1) + below
        for v in range(m + 1):
            d = p ** v
            c = p ** (m - v)
            if c == 1:
                row = [0] * n
                row[i] = d
                yield from extend(i - 1, [row] + below)
                continue
            ranges = [range(below[k - i - 1][k]) for k in range(i + 1, n)]
            for tail in product(*ranges):
                test = [0] * (i + 1) + [c * t for t in tail]
                if in_lattice(test, full, i + 1):
                    row = [0] * i + [d] + list(tail)
                    yield from extend(i - 1, [row] + below)

    yield from extend(n - 1, [])
