"""Exact integer matrices: Smith normal form, kernels, and column lattices.

Everything works with Python's arbitrary-precision integers; there is no
floating point anywhere.  Pivoting in the Smith reduction always picks a
nonzero entry of smallest absolute value (ties broken by position), which
keeps intermediate entries small on the desk-scale matrices this package
handles and makes every transform deterministic.
"""

from __future__ import annotations

from .errors import InputError


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: return (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0.

    >>> xgcd(12, 18)
    (6, -1, 1)
    >>> xgcd(0, 0)
    (0, 1, 0)
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples.

    Zero-row and zero-column matrices are legal; pass ``shape`` to build
    them since the dimensions cannot be inferred from empty data.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, shape=None):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if shape is None:
            rows = len(data)
            cols = len(data[0]) if rows else 0
        else:
            rows, cols = shape
        if len(data) != rows:
            raise InputError(f"expected {rows} rows, got {len(data)}")
        for i, row in enumerate(data):
            if len(row) != cols:
                raise InputError(f"row {i} has {len(row)} entries, expected {cols}")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(tuple((0,) * cols for _ in range(rows)), shape=(rows, cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), shape=(n, n))

    @classmethod
    def from_columns(cls, columns, rows: int) -> "IntMatrix":
        columns = [tuple(int(x) for x in c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise InputError(f"column of length {len(c)}, expected {rows}")
        data = tuple(tuple(c[i] for c in columns) for i in range(rows))
        return cls(data, shape=(rows, len(columns)))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def entry(self, i: int, j: int) -> int:
        return self.data[i][j]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.data)

    def columns(self):
        for j in range(self.cols):
            yield self.column(j)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.data)) if self.rows and self.cols else (),
                         shape=(self.cols, self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.cols
        out = []
        for row in self.data:
            out.append(tuple(
                sum(row[k] * other.data[k][j] for k in range(self.cols))
                for j in range(cols)))
        return IntMatrix(tuple(out), shape=(self.rows, cols))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise InputError(f"shape mismatch {self.shape} vs {other.shape}")
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r1, r2))
                               for r1, r2 in zip(self.data, other.data)),
                         shape=self.shape)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in row) for row in self.data), shape=self.shape)

    def apply(self, vec) -> tuple:
        """Matrix-vector product."""
        vec = tuple(vec)
        if len(vec) != self.cols:
            raise InputError(f"vector of length {len(vec)}, expected {self.cols}")
        return tuple(sum(row[k] * vec[k] for k in range(self.cols)) for row in self.data)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"IntMatrix({list(map(list, self.data))!r}, shape={self.shape})"


def hstack(*mats: IntMatrix) -> IntMatrix:
    mats = [m for m in mats]
    if not mats:
        raise InputError("hstack of no matrices")
    rows = mats[0].rows
    for m in mats:
        if m.rows != rows:
            raise InputError("hstack row mismatch")
    data = tuple(tuple(x for m in mats for x in m.data[i]) for i in range(rows))
    return IntMatrix(data, shape=(rows, sum(m.cols for m in mats)))


def vstack(*mats: IntMatrix) -> IntMatrix:
    mats = [m for m in mats]
    if not mats:
        raise InputError("vstack of no matrices")
    cols = mats[0].cols
    for m in mats:
        if m.cols != cols:
            raise InputError("vstack column mismatch")
    data = tuple(row for m in mats for row in m.data)
    return IntMatrix(data, shape=(sum(m.rows for m in mats), cols))


def block_diagonal(mats) -> IntMatrix:
    mats = list(mats)
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            row = m.data[i]
            for j in range(m.cols):
                out[r0 + i][c0 + j] = row[j]
        r0 += m.rows
        c0 += m.cols
    return IntMatrix(tuple(tuple(r) for r in out), shape=(rows, cols))


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise InputError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


class SmithNormalForm:
    """Decomposition U @ M @ V == S with U, V unimodular and S diagonal.

    The diagonal entries are nonnegative and each divides the next.
    Inverses of the transforms are tracked alongside, so change of basis
    both ways is a matrix multiplication.
    """

    __slots__ = ("s", "u", "v", "u_inv", "v_inv")

    def __init__(self, s, u, v, u_inv, v_inv):
        self.s = s
        self.u = u
        self.v = v
        self.u_inv = u_inv
        self.v_inv = v_inv

    @property
    def diagonal(self) -> tuple:
        return tuple(self.s.data[i][i] for i in range(min(self.s.rows, self.s.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _smith_work(m: IntMatrix, track: bool):
    a = [list(row) for row in m.data]
    nr, nc = m.rows, m.cols
    if track:
        u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
        ui = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
        v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]
        vi = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_sub(i, t, q):
        ai, at = a[i], a[t]
        a[i] = [x - q * y for x, y in zip(ai, at)]
        if track:
            u[i] = [x - q * y for x, y in zip(u[i], u[t])]
            for r in range(nr):
                ui[r][t] += q * ui[r][i]

    def row_swap(i, t):
        a[i], a[t] = a[t], a[i]
        if track:
            u[i], u[t] = u[t], u[i]
            for r in range(nr):
                ui[r][i], ui[r][t] = ui[r][t], ui[r][i]

    def row_neg(t):
        a[t] = [-x for x in a[t]]
        if track:
            u[t] = [-x for x in u[t]]
            for r in range(nr):
                ui[r][t] = -ui[r][t]

    def col_sub(j, t, q):
        for r in range(nr):
            a[r][j] -= q * a[r][t]
        if track:
            for r in range(nc):
                v[r][j] -= q * v[r][t]
            vi[t] = [x + q * y for x, y in zip(vi[t], vi[j])]

    def col_swap(j, t):
        for r in range(nr):
            a[r][j], a[r][t] = a[r][t], a[r][j]
        if track:
            for r in range(nc):
                v[r][j], v[r][t] = v[r][t], v[r][j]
            vi[j], vi[t] = vi[t], vi[j]

    t = 0
    limit = min(nr, nc)
    while t < limit:
        best = None
        for i in range(t, nr):
            row = a[i]
            for j in range(t, nc):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            row_swap(bi, t)
        if bj != t:
            col_swap(bj, t)
        while True:
            if a[t][t] < 0:
                row_neg(t)
            p = a[t][t]
            restart = False
            for i in range(nr):
                if i == t or a[i][t] == 0:
                    continue
                q = a[i][t] // p
                if q:
                    row_sub(i, t, q)
                if a[i][t]:
                    row_swap(i, t)
                    restart = True
                    break
            if restart:
                continue
            for j in range(nc):
                if j == t or a[t][j] == 0:
                    continue
                q = a[t][j] // p
                if q:
                    col_sub(j, t, q)
                if a[t][j]:
                    col_swap(j, t)
                    restart = True
                    break
            if restart:
                continue
            p = a[t][t]
            bad = None
            for i in range(t + 1, nr):
                row = a[i]
                for j in range(t + 1, nc):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_sub(t, bad, -1)
        t += 1
    if track:
        return a, u, v, ui, vi
    return a


def smith(m: IntMatrix) -> SmithNormalForm:
    """Full Smith decomposition with transforms and their inverses."""
    a, u, v, ui, vi = _smith_work(m, track=True)
    return SmithNormalForm(
        IntMatrix(a, shape=m.shape),
        IntMatrix(u, shape=(m.rows, m.rows)),
        IntMatrix(v, shape=(m.cols, m.cols)),
        IntMatrix(ui, shape=(m.rows, m.rows)),
        IntMatrix(vi, shape=(m.cols, m.cols)),
    )


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (S, U, V) with U @ M @ V == S.

    >>> s, u, v = smith_normal_form(IntMatrix([[2, 4], [6, 8]]))
    >>> s.data
    ((2, 0), (0, 4))
    >>> (u @ IntMatrix([[2, 4], [6, 8]]) @ v) == s
    True
    """
    d = smith(m)
    return d.s, d.u, d.v


def smith_diagonal(m: IntMatrix) -> tuple:
    """Diagonal of the Smith form, without tracking transforms."""
    a = _smith_work(m, track=False)
    return tuple(a[i][i] for i in range(min(m.rows, m.cols)))


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel {x : M x == 0}, as columns."""
    d = smith(m)
    r = d.rank
    cols = [d.v.column(j) for j in range(r, m.cols)]
    return IntMatrix.from_columns(cols, m.cols)


def solve(m: IntMatrix, b) -> tuple | None:
    """One integer solution x of M x == b, or None if none exists."""
    d = smith(m)
    return _solve_with(d, m, b)


def _solve_with(d: SmithNormalForm, m: IntMatrix, b):
    b = tuple(b)
    if len(b) != m.rows:
        raise InputError(f"vector of length {len(b)}, expected {m.rows}")
    w = d.u.apply(b)
    y = [0] * m.cols
    limit = min(m.rows, m.cols)
    for i in range(m.rows):
        di = d.s.data[i][i] if i < limit else 0
        if di:
            if w[i] % di:
                return None
            y[i] = w[i] // di
        elif w[i]:
            return None
    return d.v.apply(y)


def solve_many(m: IntMatrix, columns) -> IntMatrix | None:
    """Solve M X == B columnwise; None if any column has no solution."""
    d = smith(m)
    sols = []
    for c in columns:
        x = _solve_with(d, m, c)
        if x is None:
            return None
        sols.append(x)
    return IntMatrix.from_columns(sols, m.cols)


class ColumnLattice:
    """Integer column lattice kept as a column echelon basis.

    Supports membership tests and extraction of an independent basis.
    The pivot row of every stored column is its first nonzero row, and
    pivot rows are pairwise distinct.
    """

    __slots__ = ("dim", "_cols", "_pivot_of")

    def __init__(self, dim: int, columns=()):
        self.dim = dim
        self._cols = []
        self._pivot_of = {}
        for c in columns:
            self.add(c)

    @staticmethod
    def _first_nonzero(v):
        for i, x in enumerate(v):
            if x:
                return i
        return None

    def add(self, col) -> None:
        v = [int(x) for x in col]
        if len(v) != self.dim:
            raise InputError(f"column of length {len(v)}, expected {self.dim}")
        while True:
            p = self._first_nonzero(v)
            if p is None:
                return
            idx = self._pivot_of.get(p)
            if idx is None:
                if v[p] < 0:
                    v = [-x for x in v]
                self._cols.append(v)
                self._pivot_of[p] = len(self._cols) - 1
                return
            b = self._cols[idx]
            a, c = b[p], v[p]
            if c % a == 0:
                q = c // a
                v = [x - q * y for x, y in zip(v, b)]
            else:
                g, s, t = xgcd(a, c)
                self._cols[idx] = [s * x + t * y for x, y in zip(b, v)]
                v = [(a // g) * y - (c // g) * x for x, y in zip(b, v)]

    def contains(self, col) -> bool:
        v = [int(x) for x in col]
        if len(v) != self.dim:
            raise InputError(f"column of length {len(v)}, expected {self.dim}")
        while True:
            p = self._first_nonzero(v)
            if p is None:
                return True
            idx = self._pivot_of.get(p)
            if idx is None:
                return False
            b = self._cols[idx]
            if v[p] % b[p]:
                return False
            q = v[p] // b[p]
            v = [x - q * y for x, y in zip(v, b)]

    @property
    def rank(self) -> int:
        return len(self._cols)

    def basis_matrix(self) -> IntMatrix:
        ordered = sorted(self._cols, key=self._first_nonzero)
        return IntMatrix.from_columns(ordered, self.dim)


def preimage_basis(m: IntMatrix, lattice: IntMatrix) -> IntMatrix:
    """Basis of {x : M x lies in the column lattice of `lattice`}.

    Both matrices must have the same number of rows.  The result has
    m.cols rows, with independent columns.
    """
    if m.rows != lattice.rows:
        raise InputError("row mismatch between map and lattice")
    combined = hstack(m, lattice) if lattice.cols else m
    kb = kernel_basis(combined)
    lat = ColumnLattice(m.cols)
    for j in range(kb.cols):
        lat.add(kb.column(j)[: m.cols])
    return lat.basis_matrix()


def lattice_invariants(relations: IntMatrix) -> tuple[int, tuple]:
    """Canonical form (free rank, invariant factors >= 2) of Z^n / columns.

    Equivalent to reading the Smith diagonal of `relations`, but columns
    that merely identify two coordinates up to sign (the bulk of colimit
    presentations) are eliminated by a signed union-find sweep before any
    dense elimination happens.
    """
    n = relations.rows
    parent = list(range(n))
    rel_sign = [1] * n
    alive = [True] * n

    def find(i):
        path = []
        while parent[i] != i:
            path.append(i)
            i = parent[i]
        run = 1
        for j in reversed(path):
            run *= rel_sign[j]
            parent[j] = i
            rel_sign[j] = run
        return i, run

    pending = []
    for j in range(relations.cols):
        col = [(i, relations.data[i][j]) for i in range(n) if relations.data[i][j]]
        if col:
            pending.append(col)

    residual = []
    while True:
        changed = False
        nxt = []
        for col in pending:
            acc = {}
            for i, val in col:
                r, s = find(i)
                if not alive[r]:
                    continue
                acc[r] = acc.get(r, 0) + s * val
            entries = sorted((r, w) for r, w in acc.items() if w)
            if not entries:
                continue
            if len(entries) == 1 and abs(entries[0][1]) == 1:
                alive[entries[0][0]] = False
                changed = True
            elif len(entries) == 2 and abs(entries[0][1]) == 1 and abs(entries[1][1]) == 1:
                (r1, w1), (r2, w2) = entries
                parent[r2] = r1
                rel_sign[r2] = -w1 * w2
                changed = True
            else:
                nxt.append(entries)
        if not changed:
            residual = nxt
            break
        pending = nxt

    live = [i for i in range(n) if parent[i] == i and alive[i]]
    index = {r: k for k, r in enumerate(live)}
    cols = []
    for col in residual:
        dense = [0] * len(live)
        nontrivial = False
        for i, val in col:
            r, s = find(i)
            if not alive[r]:
                continue
            dense[index[r]] += s * val
            nontrivial = True
        if nontrivial and any(dense):
            cols.append(dense)
    if cols:
        mat = IntMatrix.from_columns(cols, len(live))
        diag = smith_diagonal(mat)
    else:
        diag = ()
    rank = sum(1 for d in diag if d != 0)
    factors = tuple(d for d in diag if d >= 2)
    return len(live) - rank, factors
