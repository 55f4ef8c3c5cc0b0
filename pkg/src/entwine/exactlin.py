"""Exact dense linear algebra over Q or a prime field GF(p).

Scalars are ``fractions.Fraction`` (rational mode) or plain ints in
``[0, p)`` (prime mode); a ``FieldSpec`` fixes the mode per session and
owns the arithmetic.  Matrices are immutable, row-major, and hashable so
downstream construction caches can key on them.

Index convention (normative for the whole package): the basis vector
``(i of X, j of Y)`` of ``X (x) Y`` has flat index ``i * dim(Y) + j``.
Hence ``kron(f, g)[i*rg + j, k*cg + l] = f[i, k] * g[j, l]``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, InvalidParameter


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FieldSpec:
    """Either the rationals or GF(p) for a prime p."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str = "rational", p: Optional[int] = None):
        if kind == "rational":
            if p is not None:
                raise InvalidParameter("rational field takes no modulus")
        elif kind == "prime":
            if p is None or not _is_prime(p):
                raise InvalidParameter(f"{p!r} is not a prime")
        else:
            raise InvalidParameter(f"unknown field kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        if self.kind == "rational":
            return "FieldSpec('rational')"
        return f"FieldSpec('prime', p={self.p})"

    # -- scalar arithmetic ------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.kind == "rational" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "rational" else 1

    def coerce(self, x):
        """Canonical scalar from an int, Fraction or string."""
        if self.kind == "rational":
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            if isinstance(x, str):
                return Fraction(x)
            raise InvalidParameter(f"cannot coerce {x!r} to a rational")
        if isinstance(x, Fraction):
            if x.denominator == 1:
                x = x.numerator
            else:
                den = pow(x.denominator % self.p, self.p - 2, self.p)
                return (x.numerator * den) % self.p
        if isinstance(x, str):
            if "/" in x:
                num, den = x.split("/")
                return self.coerce(Fraction(int(num), int(den)))
            x = int(x)
        if isinstance(x, int):
            return x % self.p
        raise InvalidParameter(f"cannot coerce {x!r} to GF({self.p})")

    def add(self, a, b):
        return a + b if self.kind == "rational" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "rational" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "rational" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "rational" else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "rational":
            return 1 / a
        return pow(a, self.p - 2, self.p)

    def fmt(self, a) -> str:
        return str(a)


QQ = FieldSpec("rational")


class Matrix:
    """Immutable dense matrix with exact entries over a fixed FieldSpec."""

    __slots__ = ("field", "rows", "cols", "entries", "_hash")

    def __init__(self, field: FieldSpec, entries: Sequence[Sequence], *,
                 cols: Optional[int] = None, _raw: bool = False):
        rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if rows else 0
        if _raw:
            ent = entries
        else:
            ent = []
            for row in entries:
                if len(row) != cols:
                    raise DimensionMismatch("ragged rows")
                ent.append(tuple(field.coerce(x) for x in row))
            ent = tuple(ent)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ent)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, tuple(tuple(z for _ in range(cols))
                                for _ in range(rows)), cols=cols, _raw=True)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, tuple(tuple(o if i == j else z for j in range(n))
                                for i in range(n)), _raw=True)

    @classmethod
    def build(cls, field: FieldSpec, rows: int, cols: int, fn) -> "Matrix":
        """Entry-wise construction from fn(i, j)."""
        return cls(field, [[fn(i, j) for j in range(cols)]
                           for i in range(rows)])

    # -- basics -----------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field, self.rows, self.cols, self.entries))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        body = "; ".join(
            " ".join(self.field.fmt(x) for x in row) for row in self.entries
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        add = self.field.add
        return Matrix(self.field, tuple(
            tuple(add(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)), _raw=True)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        sub = self.field.sub
        return Matrix(self.field, tuple(
            tuple(sub(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)), _raw=True)

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, tuple(tuple(neg(a) for a in row)
                                        for row in self.entries), _raw=True)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return compose(self, other)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        mul = self.field.mul
        return Matrix(self.field, tuple(tuple(mul(c, a) for a in row)
                                        for row in self.entries), _raw=True)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.entries)) if self.rows
                      else (), _raw=True)

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def first_difference(self, other: "Matrix"):
        """Coordinates of the first differing entry, or None if equal."""
        self._same_shape(other)
        for i in range(self.rows):
            ra, rb = self.entries[i], other.entries[i]
            if ra != rb:
                for j in range(self.cols):
                    if ra[j] != rb[j]:
                        return (i, j)
        return None

    def column(self, j: int) -> "Matrix":
        return Matrix(self.field, tuple((row[j],) for row in self.entries),
                      _raw=True)

    def _same_shape(self, other: "Matrix"):
        if self.shape != other.shape or self.field != other.field:
            raise DimensionMismatch(
                f"shape {self.shape} vs {other.shape}")


def hstack(mats: Iterable[Matrix]) -> Matrix:
    mats = list(mats)
    field = mats[0].field
    rows = mats[0].rows
    if any(m.rows != rows or m.field != field for m in mats):
        raise DimensionMismatch("hstack: row counts differ")
    ent = tuple(tuple(x for m in mats for x in m.entries[i])
                for i in range(rows))
    return Matrix(field, ent, _raw=True)


def compose(f: Matrix, g: Matrix) -> Matrix:
    """Matrix product f.g, i.e. the map f after the map g."""
    if f.field != g.field:
        raise DimensionMismatch("fields differ")
    if f.cols != g.rows:
        raise DimensionMismatch(
            f"compose: {f.shape} after {g.shape}")
    field = f.field
    zero = field.zero
    add, mul = field.add, field.mul
    out = [[zero] * g.cols for _ in range(f.rows)]
    for i in range(f.rows):
        frow = f.entries[i]
        orow = out[i]
        for k in range(f.cols):
            a = frow[k]
            if not a:
                continue
            grow = g.entries[k]
            for j in range(g.cols):
                b = grow[j]
                if b:
                    orow[j] = add(orow[j], mul(a, b))
    return Matrix(field, tuple(tuple(r) for r in out), cols=g.cols,
                  _raw=True)


def kron(f: Matrix, g: Matrix) -> Matrix:
    """Kronecker product under the row-major index convention."""
    if f.field != g.field:
        raise DimensionMismatch("fields differ")
    field = f.field
    zero = field.zero
    mul = field.mul
    rg, cg = g.rows, g.cols
    out = [[zero] * (f.cols * cg) for _ in range(f.rows * rg)]
    for i in range(f.rows):
        for k in range(f.cols):
            a = f.entries[i][k]
            if not a:
                continue
            for j in range(rg):
                orow = out[i * rg + j]
                grow = g.entries[j]
                for l in range(cg):
                    b = grow[l]
                    if b:
                        orow[k * cg + l] = mul(a, b)
    return Matrix(field, tuple(tuple(r) for r in out), cols=f.cols * cg,
                  _raw=True)


def _rref_rows(rows: list, ncols: int, field: FieldSpec):
    """In-place reduced row echelon form; returns the pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != field.one:
            inv = field.inv(piv)
            mul = field.mul
            rows[r] = [mul(inv, x) for x in rows[r]]
        rowr = rows[r]
        sub, mul = field.sub, field.mul
        for i in range(nrows):
            if i == r:
                continue
            fac = rows[i][c]
            if not fac:
                continue
            rowi = rows[i]
            for j in range(c, ncols):
                x = rowr[j]
                if x:
                    rowi[j] = sub(rowi[j], mul(fac, x))
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix):
    """Reduced row echelon form; returns (reduced, pivots, rank)."""
    rows = [list(r) for r in m.entries]
    pivots = _rref_rows(rows, m.cols, m.field)
    red = Matrix(m.field, tuple(tuple(r) for r in rows), _raw=True)
    return red, tuple(pivots), len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form a basis of the right kernel of m."""
    red, pivots, rk = rref(m)
    field = m.field
    free = [c for c in range(m.cols) if c not in set(pivots)]
    zero, one = field.zero, field.one
    neg = field.neg
    cols = []
    for fc in free:
        v = [zero] * m.cols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = neg(red.entries[i][fc])
        cols.append(v)
    ent = tuple(tuple(col[i] for col in cols) for i in range(m.cols))
    return Matrix(field, ent, cols=len(cols), _raw=True)


def solve(m: Matrix, b: Matrix) -> Optional[Matrix]:
    """Some x with m.x = b, free variables zeroed; None if inconsistent."""
    if m.field != b.field:
        raise DimensionMismatch("fields differ")
    if m.rows != b.rows:
        raise DimensionMismatch(f"solve: {m.shape} vs {b.shape}")
    field = m.field
    aug = hstack([m, b])
    rows = [list(r) for r in aug.entries]
    pivots = _rref_rows(rows, aug.cols, field)
    # a pivot in the b-block means the system is inconsistent
    if any(p >= m.cols for p in pivots):
        return None
    zero = field.zero
    ent = [[zero] * b.cols for _ in range(m.cols)]
    for i, pc in enumerate(pivots):
        for j in range(b.cols):
            ent[pc][j] = rows[i][m.cols + j]
    return Matrix(field, tuple(tuple(r) for r in ent), _raw=True)


def inverse(m: Matrix) -> Optional[Matrix]:
    """Two-sided inverse when square and full-rank, else None."""
    if m.rows != m.cols:
        return None
    n = m.rows
    field = m.field
    aug = hstack([m, Matrix.identity(field, n)])
    rows = [list(r) for r in aug.entries]
    pivots = _rref_rows(rows, aug.cols, field)
    if list(pivots) != list(range(n)):
        return None
    ent = tuple(tuple(rows[i][n:]) for i in range(n))
    return Matrix(field, ent, _raw=True)


def flip(field: FieldSpec, dim_x: int, dim_y: int) -> Matrix:
    """The symmetry X (x) Y -> Y (x) X on basis vectors."""
    out = Matrix.zeros(field, dim_x * dim_y, dim_x * dim_y).entries
    out = [list(r) for r in out]
    one = field.one
    for i in range(dim_x):
        for j in range(dim_y):
            out[j * dim_x + i][i * dim_y + j] = one
    return Matrix(field, tuple(tuple(r) for r in out), _raw=True)
