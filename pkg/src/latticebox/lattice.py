"""Subgroups of Z^n in canonical echelon form, with exact integer solving.

A lattice is stored as a row basis in Hermite-style echelon form: pivots
are positive, strictly right-moving, zero below, and reduced (into
[0, pivot)) above. That form is unique per subgroup, so equal subgroups
compare equal. Smith normal form with tracked unimodular transforms backs
general integer linear solving and direct-sum complements.
"""

from __future__ import annotations

from math import gcd

from .errors import (
    DimensionError,
    MembershipError,
    TorsionError,
)

Matrix = list[list[int]]


def _identity(k: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0]) if b else 0
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)]
        for i in range(len(a))
    ]


def mat_vec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


def _echelon_rows(n: int, gens) -> list[list[int]]:
    """Canonical row echelon basis of the span of gens (rows of length n)."""
    mat = []
    for g in gens:
        row = [int(x) for x in g]
        if len(row) != n:
            raise DimensionError(f"generator of length {len(row)}, expected {n}")
        if any(row):
            mat.append(row)
    r = 0
    for col in range(n):
        while True:
            nz = [i for i in range(r, len(mat)) if mat[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(mat[i][col]), i))
            if i0 != r:
                mat[r], mat[i0] = mat[i0], mat[r]
            p = mat[r][col]
            clean = True
            for i in range(r + 1, len(mat)):
                if mat[i][col] != 0:
                    q = mat[i][col] // p
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[r])]
                    if mat[i][col] != 0:
                        clean = False
            if clean:
                break
        if r < len(mat) and mat[r][col] != 0:
            if mat[r][col] < 0:
                mat[r] = [-x for x in mat[r]]
            p = mat[r][col]
            for i in range(r):
                q = mat[i][col] // p
                if q:
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[r])]
            r += 1
            if r == len(mat):
                break
    return mat[:r]


class Lattice:
    """A subgroup of Z^n held as its canonical echelon row basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, generators=()):
        if ambient_dim < 0:
            raise DimensionError("ambient dimension must be nonnegative")
        rows = _echelon_rows(ambient_dim, generators)
        self.ambient_dim = ambient_dim
        self.basis: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rows)
        self.pivots: tuple[int, ...] = tuple(
            next(j for j, x in enumerate(row) if x != 0) for row in self.basis
        )

    @classmethod
    def from_generators(cls, ambient_dim: int, generators) -> "Lattice":
        return cls(ambient_dim, generators)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Lattice)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Lattice({self.ambient_dim}, {[list(r) for r in self.basis]})"

    def _check_dim(self, w) -> list[int]:
        vec = [int(x) for x in w]
        if len(vec) != self.ambient_dim:
            raise DimensionError(
                f"vector of length {len(vec)}, expected {self.ambient_dim}"
            )
        return vec

    def member(self, w) -> bool:
        """Whether w is an integral combination of the basis rows."""
        t = self._check_dim(w)
        for row, p in zip(self.basis, self.pivots):
            if t[p] % row[p] != 0:
                return False
            q = t[p] // row[p]
            if q:
                t = [x - q * y for x, y in zip(t, row)]
        return not any(t)

    def solve_integral(self, w):
        """Coefficients expressing w in the basis, or None when w is outside."""
        t = self._check_dim(w)
        coeffs = []
        for row, p in zip(self.basis, self.pivots):
            if t[p] % row[p] != 0:
                return None
            q = t[p] // row[p]
            coeffs.append(q)
            if q:
                t = [x - q * y for x, y in zip(t, row)]
        if any(t):
            return None
        return tuple(coeffs)

    def projection_gcds(self) -> tuple[int, ...]:
        """Per-coordinate gcd of the basis (0 where every member vanishes)."""
        out = []
        for j in range(self.ambient_dim):
            g = 0
            for row in self.basis:
                g = gcd(g, row[j])
            out.append(g)
        return tuple(out)

    def complement_of(self, v) -> "Lattice":
        """A subgroup B with B + Zv equal to this lattice and B ∩ Zv = 0.

        Requires v to be a nonzero member whose quotient is torsion-free
        (equivalently: v's coefficient vector in the basis is primitive).
        """
        vec = self._check_dim(v)
        if not any(vec):
            raise ValueError("complement_of: v must be nonzero")
        coeffs = self.solve_integral(vec)
        if coeffs is None:
            raise MembershipError("complement_of: v is not a member")
        g = 0
        for c in coeffs:
            g = gcd(g, c)
        if g != 1:
            raise TorsionError(
                "complement_of: quotient by v has torsion (coefficients share "
                f"factor {g})"
            )
        u = unimodular_completion(list(coeffs))
        rows = []
        for urow in u[1:]:
            rows.append(
                [
                    sum(urow[k] * self.basis[k][j] for k in range(self.rank))
                    for j in range(self.ambient_dim)
                ]
            )
        return Lattice(self.ambient_dim, rows)


def smith_transforms(mat: Matrix):
    """Reduce mat to Smith form D, tracking all four unimodular transforms.

    Returns (p, p_inv, d, q, q_inv) with p·mat·q == d, p·p_inv == I and
    q·q_inv == I; d is (rectangular) diagonal with nonnegative entries and
    each diagonal entry dividing the next.
    """
    a = [list(map(int, row)) for row in mat]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    p = _identity(nrows)
    p_inv = _identity(nrows)
    q = _identity(ncols)
    q_inv = _identity(ncols)

    def row_swap(i, j):
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        p[i], p[j] = p[j], p[i]
        for row in p_inv:
            row[i], row[j] = row[j], row[i]

    def row_addmul(i, j, c):
        # row_i += c * row_j
        if c == 0:
            return
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        p[i] = [x + c * y for x, y in zip(p[i], p[j])]
        for row in p_inv:
            row[j] -= c * row[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        p[i] = [-x for x in p[i]]
        for row in p_inv:
            row[i] = -row[i]

    def col_swap(i, j):
        if i == j:
            return
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in q:
            row[i], row[j] = row[j], row[i]
        q_inv[i], q_inv[j] = q_inv[j], q_inv[i]

    def col_addmul(j, i, c):
        # col_j += c * col_i
        if c == 0:
            return
        for row in a:
            row[j] += c * row[i]
        for row in q:
            row[j] += c * row[i]
        q_inv[i] = [x - c * y for x, y in zip(q_inv[i], q_inv[j])]

    def col_negate(j):
        for row in a:
            row[j] = -row[j]
        for row in q:
            row[j] = -row[j]
        q_inv[j] = [-x for x in q_inv[j]]

    t = 0
    while t < min(nrows, ncols):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])
        while True:
            # clear column t below the pivot
            restart = False
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    row_addmul(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t] != 0:
                        row_swap(t, i)
                        restart = True
                        break
            if restart:
                continue
            # clear row t right of the pivot
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    col_addmul(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j] != 0:
                        col_swap(t, j)
                        restart = True
                        break
            if restart:
                continue
            # pivot must divide the remaining submatrix
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_addmul(t, offender, 1)
        if a[t][t] < 0:
            row_negate(t)
        t += 1
    return p, p_inv, a, q, q_inv


def smith_decompose(mat: Matrix):
    """Return (u, d, w) with mat == u·d·w, u and w unimodular, d diagonal
    with each entry dividing the next."""
    _, p_inv, d, _, q_inv = smith_transforms(mat)
    return p_inv, d, q_inv


def solve_integer_system(mat: Matrix, rhs: list[int]):
    """One integer solution x of mat·x == rhs, or None if none exists."""
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    if len(rhs) != nrows:
        raise DimensionError("solve_integer_system: rhs length mismatch")
    if ncols == 0:
        return [] if not any(rhs) else None
    p, _, d, q, _ = smith_transforms(mat)
    y = mat_vec(p, list(map(int, rhs)))
    u = [0] * ncols
    for i in range(nrows):
        di = d[i][i] if i < min(nrows, ncols) else 0
        if di == 0:
            if y[i] != 0:
                return None
        else:
            if y[i] % di != 0:
                return None
            u[i] = y[i] // di
    return mat_vec(q, u)


def integer_kernel(mat: Matrix) -> list[list[int]]:
    """Basis of the integer kernel {x : mat·x == 0}."""
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    if ncols == 0:
        return []
    _, _, d, q, _ = smith_transforms(mat)
    out = []
    for j in range(ncols):
        dj = d[j][j] if j < min(nrows, ncols) else 0
        if dj == 0:
            out.append([q[i][j] for i in range(ncols)])
    return out


def unimodular_completion(coeffs: list[int]) -> Matrix:
    """A unimodular matrix whose first row is the given primitive vector."""
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g != 1:
        raise ValueError("unimodular_completion: vector is not primitive")
    _, _, d, _, q_inv = smith_transforms([list(coeffs)])
    assert d[0][0] == 1
    # coeffs == ±(first row of q_inv); flip that row if the sign differs.
    first = q_inv[0]
    if first != list(coeffs):
        first = [-x for x in first]
    if first != list(coeffs):
        raise AssertionError("unimodular completion failed")
    return [first] + [row[:] for row in q_inv[1:]]
