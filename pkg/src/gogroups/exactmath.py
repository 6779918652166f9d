"""Exact integer and rational linear algebra.

Everything here is over Python ints and fractions.Fraction; no floating
point is used anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product


class SingularMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class IMat:
    """Immutable integer matrix, row-major tuples."""

    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))
        if self.rows:
            n = len(self.rows[0])
            if any(len(r) != n for r in self.rows):
                raise ValueError("ragged matrix")

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        if isinstance(other, IMat):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            ot = tuple(zip(*other.rows))
            return IMat(tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
                              for row in self.rows))
        return NotImplemented

    def apply(self, vec):
        """Matrix times integer column vector (tuple)."""
        if len(vec) != self.ncols:
            raise ValueError("shape mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)

    def transpose(self):
        return IMat(tuple(zip(*self.rows)))

    def det(self):
        """Determinant by fraction-free Bareiss elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("det of non-square matrix")
        if n == 0:
            return 1
        m = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def __str__(self):
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in self.rows) + "]"


def identity(n):
    return IMat(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def diag(*entries):
    n = len(entries)
    return IMat(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class SnfResult:
    """A = U * D * V with U, V unimodular and D = diag(d1 | d2 | ...)."""

    U: IMat
    D: IMat
    V: IMat

    @property
    def diagonal(self):
        return tuple(self.D[i, i] for i in range(self.D.nrows))


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, dst, src, k):
    # row[dst] += k * row[src]
    m[dst] = [a + k * b for a, b in zip(m[dst], m[src])]


def _add_col(m, dst, src, k):
    for row in m:
        row[dst] += k * row[src]


def _negate_row(m, i):
    m[i] = [-a for a in m[i]]


def snf(a: IMat) -> SnfResult:
    """Smith normal form with transforms, A = U*D*V exactly.

    Pivot rule: smallest nonzero absolute value, ties broken by row then
    column index, so the output is deterministic.
    """
    n = a.nrows
    if n != a.ncols:
        raise ValueError("snf requires a square matrix")
    m = [list(r) for r in a.rows]
    # Maintain a == U*m*V throughout.  A row op E on m (m <- E m) updates
    # U <- U E^-1; a column op F (m <- m F) updates V <- F^-1 V.
    u = [list(r) for r in identity(n).rows]
    v = [list(r) for r in identity(n).rows]

    def pivot(t):
        best = None
        for i in range(t, n):
            for j in range(t, n):
                x = m[i][j]
                if x != 0 and (best is None or abs(x) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        return best

    for t in range(n):
        while True:
            p = pivot(t)
            if p is None:
                break
            i, j = p
            if i != t:
                _swap_rows(m, t, i)
                _swap_cols(u, t, i)  # E^-1 for a row swap is the same swap on U's columns
            if j != t:
                _swap_cols(m, t, j)
                _swap_rows(v, t, j)
            if m[t][t] < 0:
                _negate_row(m, t)
                _negate_col_of(u, t)
            done = True
            for i in range(t + 1, n):
                q = m[i][t] // m[t][t]
                if q != 0:
                    _add_row(m, i, t, -q)
                    _add_col(u, t, i, q)
                if m[i][t] != 0:
                    done = False
            for j in range(t + 1, n):
                q = m[t][j] // m[t][t]
                if q != 0:
                    _add_col(m, j, t, -q)
                    _add_row(v, t, j, q)
                if m[t][j] != 0:
                    done = False
            if done:
                break

    # Enforce the divisibility chain d_t | d_{t+1}.
    changed = True
    while changed:
        changed = False
        for t in range(n - 1):
            dt, dn = m[t][t], m[t + 1][t + 1]
            if dt != 0 and dn % dt != 0:
                # fold d_{t+1} into column t and rediagonalize the 2x2 block
                _add_col(m, t, t + 1, 1)
                _add_row(v, t + 1, t, -1)
                _two_by_two(m, u, v, t)
                changed = True
    return SnfResult(IMat(tuple(map(tuple, u))), IMat(tuple(map(tuple, m))),
                     IMat(tuple(map(tuple, v))))


def _negate_col_of(u, t):
    for row in u:
        row[t] = -row[t]


def _two_by_two(m, u, v, t):
    """Clear the off-diagonal entries created in rows/cols t, t+1 by gcd folding."""
    n = len(m)
    while True:
        # column t now has entries at (t,t) and (t+1,t); gcd them out
        if m[t][t] == 0 or (m[t + 1][t] != 0 and abs(m[t + 1][t]) < abs(m[t][t])):
            _swap_rows(m, t, t + 1)
            _swap_cols(u, t, t + 1)
        if m[t][t] < 0:
            _negate_row(m, t)
            _negate_col_of(u, t)
        if m[t + 1][t] != 0:
            q = m[t + 1][t] // m[t][t]
            _add_row(m, t + 1, t, -q)
            _add_col(u, t, t + 1, q)
            continue
        if m[t][t + 1] != 0:
            q = m[t][t + 1] // m[t][t]
            _add_col(m, t + 1, t, -q)
            _add_row(v, t, t + 1, q)
            continue
        break
    if m[t + 1][t + 1] < 0:
        _negate_row(m, t + 1)
        _negate_col_of(u, t + 1)


def solve_rational(a: IMat, b):
    """Unique rational solution x of A x = b; raises if det == 0."""
    n = a.nrows
    if n != a.ncols:
        raise ValueError("solve requires a square matrix")
    m = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a.rows, b)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return tuple(row[n] for row in m)


def solve_integral(a: IMat, b):
    """x with A x = b if the unique rational solution is integral, else None."""
    x = solve_rational(a, b)
    if all(xi.denominator == 1 for xi in x):
        return tuple(int(xi) for xi in x)
    return None


class LatticeTransversal:
    """Canonical coset representatives of Z^n / A Z^n, via SNF residues.

    With A = U D V the lattice A Z^n equals U (D Z^n), so the residue of g
    is U * ((U^-1 g) mod D).  Representatives enumerate with the zero
    vector first.
    """

    def __init__(self, a: IMat):
        d = a.det()
        if d == 0:
            raise SingularMatrixError("transversal needs det != 0")
        self.matrix = a
        self.index = abs(d)
        n = a.nrows
        self._diagonal_fast = all(a[i, j] == 0 for i in range(n) for j in range(n) if i != j)
        if self._diagonal_fast:
            self._u = identity(n)
            self._uinv = identity(n)
            self._diag = tuple(abs(a[i, i]) for i in range(n))
        else:
            res = snf(a)
            self._u = res.U
            self._uinv = _unimodular_inverse(res.U)
            self._diag = tuple(abs(x) for x in res.diagonal)

    def decompose(self, g):
        """g = sigma + A*h with sigma the canonical representative.

        Diagonal matrices reduce componentwise; general matrices lift the
        SNF residues back through U.
        """
        w = self._uinv.apply(g)
        rho = tuple(x % d for x, d in zip(w, self._diag))
        sigma = self._u.apply(rho)
        h = solve_integral(self.matrix, tuple(x - y for x, y in zip(g, sigma)))
        assert h is not None
        return sigma, h

    def reps(self):
        """All |det A| representatives, zero first, mixed-radix order."""
        for rho in product(*(range(d) for d in self._diag)):
            yield self._u.apply(rho)

    def is_member(self, g):
        w = self._uinv.apply(g)
        return all(x % d == 0 for x, d in zip(w, self._diag))


def _unimodular_inverse(a: IMat):
    n = a.nrows
    d = a.det()
    if abs(d) != 1:
        raise ValueError("not unimodular")
    cols = [solve_integral(a, tuple(1 if i == j else 0 for i in range(n))) for j in range(n)]
    return IMat(tuple(zip(*cols)))


# ---------------------------------------------------------------------------
# Rational matrices (for modular values and GBS_n power iterations)

def qmat(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def qmat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def qmat_apply(a, vec):
    return tuple(sum(x * Fraction(y) for x, y in zip(row, vec)) for row in a)


def qmat_inverse(a):
    n = len(a)
    m = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return tuple(tuple(row[n:]) for row in m)
