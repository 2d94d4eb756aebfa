"""Exact rational and integer linear algebra.

Conventions, fixed once and relied on throughout the package:

* Vectors are column vectors and matrices act from the left: the kernel of M
  is {v : M v = 0} and the image is the span of the columns.
* A subspace of Q^n is stored canonically as its reduced row-echelon basis
  (every pivot is 1, zeros above and below each pivot, pivot columns strictly
  increasing).  Two subspaces are equal iff their stored bases are identical
  entry by entry, so equality of spans is literal object equality.
* Integer lattices are canonicalized as row-style Hermite normal forms:
  upper triangular, positive diagonal, and every entry above a pivot reduced
  into [0, pivot).

Matrices keep integer numerators over a single positive denominator; the
public face is `fractions.Fraction`.  Elimination is fraction-free inside.
No floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import PreconditionError
from .numtheory import divisors

__all__ = [
    "MatQ",
    "MatZ",
    "SubspaceQ",
    "PolyQ",
    "kernel_space",
    "image_space",
    "intersect_spaces",
    "sum_spaces",
    "hnf",
    "det_int",
    "snf_invariants",
    "smith_with_transforms",
    "char_poly",
    "cyclotomic",
    "companion_matrix",
    "inverse",
    "restrict_operator",
    "fraction_to_jsonable",
    "fraction_from_jsonable",
]


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"expected an integer, Fraction, or 'p/q' string, got {v!r}")


def fraction_to_jsonable(q: Fraction):
    """A rational as wire data: a plain integer, or `\"p/q\"` in lowest terms."""
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fraction_from_jsonable(v) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise TypeError(f"expected an integer or 'p/q' string, got {v!r}")
    return Fraction(v)


def _content(rows, start: int) -> int:
    """gcd of `start` and every entry; 0 entries ignored; always >= 0."""
    g = abs(start)
    for row in rows:
        for v in row:
            if v:
                g = gcd(g, v)
                if g == 1:
                    return 1
    return g


class MatQ:
    """Immutable dense rational matrix.

    Stored as integer numerators over one positive denominator, normalized so
    gcd(denominator, all numerators) = 1.  Construct from any nesting of
    integers, Fractions, or "p/q" strings.
    """

    __slots__ = ("rows", "cols", "num", "den")

    def __init__(self, entries, _den=None):
        if _den is not None:
            num, den = _normalize_int_rows(entries, _den)
            ncols = len(num[0]) if num else 0
        else:
            frac = [[_as_fraction(v) for v in row] for row in entries]
            if frac and any(len(r) != len(frac[0]) for r in frac):
                raise ValueError("ragged matrix")
            den = 1
            for row in frac:
                for v in row:
                    den = lcm(den, v.denominator)
            num, den = _normalize_int_rows(
                [[int(v * den) for v in row] for row in frac], den
            )
            ncols = len(frac[0]) if frac else 0
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "rows", len(num))
        object.__setattr__(self, "cols", ncols)

    def __setattr__(self, *a):  # immutable
        raise AttributeError("MatQ is immutable")

    @classmethod
    def _raw(cls, num_rows, den: int, ncols: int | None = None) -> "MatQ":
        m = object.__new__(cls)
        num, den = _normalize_int_rows(num_rows, den)
        object.__setattr__(m, "num", num)
        object.__setattr__(m, "den", den)
        object.__setattr__(m, "rows", len(num))
        object.__setattr__(
            m, "cols", len(num[0]) if num else (0 if ncols is None else ncols)
        )
        return m

    @classmethod
    def identity(cls, n: int) -> "MatQ":
        return cls._raw([[int(i == j) for j in range(n)] for i in range(n)], 1)

    @classmethod
    def zeros(cls, r: int, c: int) -> "MatQ":
        return cls._raw([[0] * c for _ in range(r)], 1, ncols=c)

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self.num[i][j], self.den)

    def fraction_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        d = self.den
        return tuple(tuple(Fraction(v, d) for v in row) for row in self.num)

    def transpose(self) -> "MatQ":
        return MatQ._raw(
            [list(col) for col in zip(*self.num)] if self.num else [],
            self.den,
            ncols=self.rows,
        )

    def __matmul__(self, other: "MatQ") -> "MatQ":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        bt = list(zip(*other.num))
        num = [
            [sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.num
        ]
        return MatQ._raw(num, self.den * other.den, ncols=other.cols)

    def mul_vector(self, vec) -> tuple[Fraction, ...]:
        """M v for a column vector v (any sequence of rationals)."""
        v = [_as_fraction(x) for x in vec]
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        d = self.den
        return tuple(
            sum((Fraction(a, d) * b for a, b in zip(row, v)), Fraction(0))
            for row in self.num
        )

    def __add__(self, other: "MatQ") -> "MatQ":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} + {other.shape}")
        l = lcm(self.den, other.den)
        sa, sb = l // self.den, l // other.den
        num = [
            [a * sa + b * sb for a, b in zip(ra, rb)]
            for ra, rb in zip(self.num, other.num)
        ]
        return MatQ._raw(num, l, ncols=self.cols)

    def __sub__(self, other: "MatQ") -> "MatQ":
        return self + (-other)

    def __neg__(self) -> "MatQ":
        return MatQ._raw([[-v for v in row] for row in self.num], self.den, ncols=self.cols)

    def __mul__(self, scalar) -> "MatQ":
        q = _as_fraction(scalar)
        num = [[v * q.numerator for v in row] for row in self.num]
        return MatQ._raw(num, self.den * q.denominator, ncols=self.cols)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MatQ":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if n < 0:
            raise ValueError("negative matrix powers are not supported")
        acc = MatQ.identity(self.rows)
        base = self
        while n:
            if n & 1:
                acc = acc @ base
            base = base @ base if n > 1 else base
            n >>= 1
        return acc

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return Fraction(sum(self.num[i][i] for i in range(self.rows)), self.den)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_identity(self) -> bool:
        return (
            self.rows == self.cols
            and self.den == 1
            and all(
                v == (1 if i == j else 0)
                for i, row in enumerate(self.num)
                for j, v in enumerate(row)
            )
        )

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.num for v in row)

    def to_jsonable(self) -> list:
        d = self.den
        return [[fraction_to_jsonable(Fraction(v, d)) for v in row] for row in self.num]

    @classmethod
    def from_jsonable(cls, obj) -> "MatQ":
        return cls([[fraction_from_jsonable(v) for v in row] for row in obj])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatQ)
            and self.shape == other.shape
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self):
        return hash((self.num, self.den, self.cols))

    def __repr__(self):
        rows = ", ".join(
            "[" + ", ".join(str(self.entry(i, j)) for j in range(self.cols)) + "]"
            for i in range(self.rows)
        )
        return f"MatQ([{rows}])"


def _normalize_int_rows(rows, den: int):
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    rows = [list(r) for r in rows]
    if den < 0:
        den = -den
        rows = [[-v for v in row] for row in rows]
    g = _content(rows, den)
    if g > 1:
        den //= g
        rows = [[v // g for v in row] for row in rows]
    return tuple(tuple(row) for row in rows), den


@dataclass(frozen=True)
class MatZ:
    """Immutable dense integer matrix (at least one row)."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("MatZ requires a non-empty rectangular entry grid")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, n: int) -> "MatZ":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, diag) -> "MatZ":
        diag = list(diag)
        n = len(diag)
        return cls(
            tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n))
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def to_matq(self) -> MatQ:
        return MatQ._raw([list(r) for r in self.entries], 1, ncols=self.cols)

    def to_jsonable(self) -> list:
        return [list(row) for row in self.entries]

    @classmethod
    def from_jsonable(cls, obj) -> "MatZ":
        return cls(tuple(tuple(row) for row in obj))

    def __repr__(self):
        return f"MatZ({[list(r) for r in self.entries]})"


def _reduce_row_content(row):
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def _row_reduce(int_rows, ncols: int):
    """Canonical RREF of the row space of integer rows.

    Returns (pivot_cols, rows) where rows are tuples of Fractions with pivot
    entries 1 and zero rows dropped.  Row scaling is irrelevant to the row
    space, so callers may clear denominators per row before calling.
    """
    rows = [list(r) for r in int_rows if any(r)]
    piv: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                v = rows[i][c]
                rows[i] = _reduce_row_content(
                    [a * p - b * v for a, b in zip(rows[i], prow)]
                )
        piv.append(c)
        r += 1
    out = []
    for row, c in zip(rows[:r], piv):
        p = row[c]
        out.append(tuple(Fraction(a, p) for a in row))
    return piv, out


def _fraction_rows_to_int(rows):
    """Clear denominators row by row (row spaces are scale-invariant)."""
    out = []
    for row in rows:
        frac = [_as_fraction(v) for v in row]
        d = 1
        for v in frac:
            d = lcm(d, v.denominator)
        out.append([int(v * d) for v in frac])
    return out


class SubspaceQ:
    """A linear subspace of Q^n, canonicalized as a reduced row-echelon basis.

    The basis rows span the subspace; `contains_vector` and equality are exact.
    Any spanning set passed to the constructor yields the same object.
    """

    __slots__ = ("ambient_dim", "basis", "pivot_cols")

    def __init__(self, ambient_dim: int, rows=()):
        if ambient_dim < 0:
            raise ValueError("negative ambient dimension")
        int_rows = _fraction_rows_to_int(rows)
        if any(len(r) != ambient_dim for r in int_rows):
            raise PreconditionError(
                f"ambient dimension mismatch: expected vectors of length {ambient_dim}"
            )
        piv, frac_rows = _row_reduce(int_rows, ambient_dim)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", MatQ(frac_rows) if frac_rows else MatQ.zeros(0, ambient_dim))
        object.__setattr__(self, "pivot_cols", tuple(piv))

    def __setattr__(self, *a):
        raise AttributeError("SubspaceQ is immutable")

    @classmethod
    def zero(cls, n: int) -> "SubspaceQ":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "SubspaceQ":
        return cls(n, MatQ.identity(n).fraction_rows())

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.basis.fraction_rows()

    def coordinates_of(self, vec):
        """Coordinates of vec in the canonical basis, or None if not contained."""
        v = [_as_fraction(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise PreconditionError("ambient dimension mismatch")
        coords = []
        rows = self.basis.fraction_rows()
        for row, c in zip(rows, self.pivot_cols):
            q = v[c]
            coords.append(q)
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        if any(v):
            return None
        return tuple(coords)

    def contains_vector(self, vec) -> bool:
        return self.coordinates_of(vec) is not None

    def contains_subspace(self, other: "SubspaceQ") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise PreconditionError("ambient dimension mismatch")
        return all(self.contains_vector(r) for r in other.basis_rows())

    def to_jsonable(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "basis": self.basis.to_jsonable()}

    @classmethod
    def from_jsonable(cls, obj) -> "SubspaceQ":
        return cls(obj["ambient_dim"], MatQ.from_jsonable(obj["basis"]).fraction_rows())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubspaceQ)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"SubspaceQ(dim {self.dim} of Q^{self.ambient_dim})"


def kernel_space(M: MatQ) -> SubspaceQ:
    """{v : M v = 0} as a canonical subspace of Q^cols."""
    n = M.cols
    piv, rows = _row_reduce([list(r) for r in M.num], n)
    pivset = set(piv)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, c in zip(rows, piv):
            v[c] = -row[f]
        basis.append(v)
    return SubspaceQ(n, basis)


def image_space(M: MatQ) -> SubspaceQ:
    """The column space of M as a canonical subspace of Q^rows."""
    cols = [list(col) for col in zip(*M.num)] if M.num else []
    return SubspaceQ(M.rows, cols)


def sum_spaces(u: SubspaceQ, v: SubspaceQ) -> SubspaceQ:
    if u.ambient_dim != v.ambient_dim:
        raise PreconditionError("ambient dimension mismatch")
    return SubspaceQ(u.ambient_dim, u.basis_rows() + v.basis_rows())


def intersect_spaces(u: SubspaceQ, v: SubspaceQ) -> SubspaceQ:
    """U ∩ V via the kernel of [U^T | -V^T]: a = coefficients on U's basis."""
    if u.ambient_dim != v.ambient_dim:
        raise PreconditionError("ambient dimension mismatch")
    n = u.ambient_dim
    p, q = u.dim, v.dim
    if p == 0 or q == 0:
        return SubspaceQ.zero(n)
    urows = u.basis.num
    vrows = v.basis.num
    # columns: u_1..u_p, -v_1..-v_q; scaling by the dens is irrelevant to the kernel
    stacked = [
        [urows[j][i] * v.basis.den for j in range(p)]
        + [-vrows[j][i] * u.basis.den for j in range(q)]
        for i in range(n)
    ]
    ker = kernel_space(MatQ._raw(stacked, 1, ncols=p + q))
    ub = u.basis_rows()
    vecs = []
    for row in ker.basis_rows():
        a = row[:p]
        vec = [Fraction(0)] * n
        for coef, brow in zip(a, ub):
            if coef:
                vec = [x + coef * y for x, y in zip(vec, brow)]
        vecs.append(vec)
    return SubspaceQ(n, vecs)


# ---------------------------------------------------------------------------
# Integer lattices: Hermite and Smith normal forms


def _hermite(rows_in, ncols: int, with_transform: bool = False):
    """Row-style HNF of the lattice spanned by integer rows.

    Returns (hnf_rows, pivot_cols, U) where hnf_rows are the nonzero canonical
    rows and, if requested, U is unimodular with U @ rows_in = hnf_rows
    followed by zero rows (so U's trailing rows span the left kernel).
    """
    rows = [list(r) for r in rows_in]
    n = len(rows)
    U = [[int(i == j) for j in range(n)] for i in range(n)] if with_transform else None

    def addmul(dst, src, q):
        rows[dst] = [a - q * b for a, b in zip(rows[dst], rows[src])]
        if U is not None:
            U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def swap(i, j):
        rows[i], rows[j] = rows[j], rows[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def negate(i):
        rows[i] = [-v for v in rows[i]]
        if U is not None:
            U[i] = [-v for v in U[i]]

    r = 0
    piv: list[int] = []
    for c in range(ncols):
        if r == n:
            break
        if not any(rows[i][c] for i in range(r, n)):
            continue
        while True:
            i0 = min(
                (i for i in range(r, n) if rows[i][c]),
                key=lambda i: (abs(rows[i][c]), i),
            )
            if i0 != r:
                swap(r, i0)
            if rows[r][c] < 0:
                negate(r)
            p = rows[r][c]
            done = True
            for i in range(r + 1, n):
                v = rows[i][c]
                if v:
                    addmul(i, r, v // p)
                    if rows[i][c]:
                        done = False
            if done:
                break
        piv.append(c)
        r += 1
    for k, c in enumerate(piv):
        p = rows[k][c]
        for j in range(k):
            q = rows[j][c] // p
            if q:
                addmul(j, k, q)
    return rows[:r], piv, U


def hnf(M: MatZ) -> MatZ:
    """Row-style Hermite normal form of a full-rank lattice in Z^cols.

    Upper triangular with positive diagonal; entries above each pivot lie in
    [0, pivot).  Canonical: depends only on the row lattice.
    """
    rows, piv, _ = _hermite(M.entries, M.cols)
    if len(rows) != M.cols:
        raise PreconditionError(
            f"rank-deficient input: lattice rank {len(rows)} < ambient {M.cols}"
        )
    return MatZ(tuple(tuple(r) for r in rows))


def det_int(M: MatZ) -> int:
    """Determinant of a square integer matrix (Bareiss fraction-free)."""
    if M.rows != M.cols:
        raise PreconditionError("determinant of a non-square matrix")
    a = [list(r) for r in M.entries]
    n = M.rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pr = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pr is None:
                return 0
            a[k], a[pr] = a[pr], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_with_transforms(M: MatZ):
    """Smith normal form with transforms: returns (D, U, V, Vinv).

    U @ M @ V = D with U, V unimodular; D diagonal with nonnegative entries
    in divisibility order d1 | d2 | ...  Vinv is V's exact inverse, so row t
    of Vinv is the preimage of the t-th coordinate vector.
    """
    a = [list(r) for r in M.entries]
    nr, nc = M.rows, M.cols
    U = [[int(i == j) for j in range(nr)] for i in range(nr)]
    V = [[int(i == j) for j in range(nc)] for i in range(nc)]
    Vi = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def row_addmul(dst, src, q):  # row_dst -= q * row_src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        U[i] = [-x for x in U[i]]

    def col_addmul(dst, src, q):  # col_dst -= q * col_src
        for row in a:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]
        Vi[src] = [x + q * y for x, y in zip(Vi[src], Vi[dst])]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def col_neg(i):
        for row in a:
            row[i] = -row[i]
        for row in V:
            row[i] = -row[i]
        Vi[i] = [-x for x in Vi[i]]

    def diagonalize():
        for t in range(min(nr, nc)):
            cand = [
                (abs(a[i][j]), i, j)
                for i in range(t, nr)
                for j in range(t, nc)
                if a[i][j]
            ]
            if not cand:
                return
            _, pi, pj = min(cand)
            if pi != t:
                row_swap(t, pi)
            if pj != t:
                col_swap(t, pj)
            while True:
                if a[t][t] < 0:
                    row_neg(t)
                p = a[t][t]
                dirty = False
                for i in range(t + 1, nr):
                    if a[i][t]:
                        row_addmul(i, t, a[i][t] // p)
                        if a[i][t]:
                            dirty = True
                for j in range(t + 1, nc):
                    if a[t][j]:
                        col_addmul(j, t, a[t][j] // p)
                        if a[t][j]:
                            dirty = True
                if not dirty:
                    break
                cand = [
                    (abs(a[i][j]), i, j)
                    for i in range(t, nr)
                    for j in range(t, nc)
                    if a[i][j]
                ]
                _, pi, pj = min(cand)
                if pi != t:
                    row_swap(t, pi)
                if pj != t:
                    col_swap(t, pj)

    diagonalize()
    # enforce the divisibility chain d1 | d2 | ...
    k = min(nr, nc)
    while True:
        bad = None
        for i in range(k - 1):
            if a[i][i] and a[i + 1][i + 1] % a[i][i]:
                bad = i
                break
            if a[i][i] == 0 and a[i + 1][i + 1]:
                bad = i
                break
        if bad is None:
            break
        row_addmul(bad, bad + 1, -1)  # row_bad += row_{bad+1}
        diagonalize()
    for t in range(k):
        if a[t][t] < 0:
            row_neg(t)
    D = MatZ(tuple(tuple(row) for row in a))
    return D, MatZ(tuple(map(tuple, U))), MatZ(tuple(map(tuple, V))), MatZ(
        tuple(map(tuple, Vi))
    )


def snf_invariants(M: MatZ) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of a square nonsingular integer matrix."""
    if M.rows != M.cols:
        raise PreconditionError("Smith invariants of a non-square matrix")
    D, _, _, _ = smith_with_transforms(M)
    diag = tuple(D.entries[i][i] for i in range(M.rows))
    if any(d == 0 for d in diag):
        raise PreconditionError("singular input: zero invariant factor")
    return diag


# ---------------------------------------------------------------------------
# Polynomials over Q


@dataclass(frozen=True)
class PolyQ:
    """Dense univariate polynomial over Q; coefficients ascending, trimmed."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [_as_fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> "PolyQ":
        return cls(())

    @classmethod
    def one(cls) -> "PolyQ":
        return cls((Fraction(1),))

    @classmethod
    def x(cls) -> "PolyQ":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def from_ints(cls, coeffs) -> "PolyQ":
        return cls(tuple(Fraction(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (Fraction(1),)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "PolyQ") -> "PolyQ":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return PolyQ(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def __neg__(self) -> "PolyQ":
        return PolyQ(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __mul__(self, other: "PolyQ") -> "PolyQ":
        if self.is_zero() or other.is_zero():
            return PolyQ.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return PolyQ(tuple(out))

    def __divmod__(self, other: "PolyQ"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        q = [Fraction(0)] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                f = c / lead
                q[i - d] = f
                for j, b in enumerate(other.coeffs):
                    rem[i - d + j] -= f * b
        return PolyQ(tuple(q)), PolyQ(tuple(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int) -> "PolyQ":
        if n < 0:
            raise ValueError("negative polynomial power")
        acc = PolyQ.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def evaluate(self, x) -> Fraction:
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mon = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mon
            else:
                body = f"{abs(c)}*{mon}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> PolyQ:
    """The n-th cyclotomic polynomial, by exact division of x^n - 1.

    >>> str(cyclotomic(6))
    'x^2 - x + 1'
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    num = PolyQ(tuple([Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]))
    for d in divisors(n):
        if d == n:
            continue
        num, rem = divmod(num, cyclotomic(d))
        if not rem.is_zero():
            raise AssertionError("cyclotomic division must be exact")
    return num


def companion_matrix(p: PolyQ) -> MatQ:
    """Companion matrix of a monic polynomial of degree >= 1.

    Subdiagonal ones; last column holds the negated low-order coefficients,
    so companion_matrix(cyclotomic(6)) == MatQ([[0, -1], [1, 1]]).
    """
    if not p.is_monic() or p.degree < 1:
        raise PreconditionError("companion matrix requires a monic polynomial of degree >= 1")
    d = p.degree
    rows = [
        [Fraction(1) if i == j + 1 else Fraction(0) for j in range(d - 1)]
        + [-p.coeffs[i]]
        for i in range(d)
    ]
    return MatQ(rows)


def _charpoly_int(num_rows) -> list[int]:
    """Monic characteristic polynomial of an integer matrix, ascending coefficients.

    Faddeev–LeVerrier: every division by k is exact over Z.
    """
    n = len(num_rows)
    A = [list(r) for r in num_rows]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        At = list(zip(*Mk))
        AM = [[sum(a * b for a, b in zip(row, col)) for col in At] for row in A]
        tr = sum(AM[i][i] for i in range(n))
        c, rem = divmod(-tr, k)
        if rem:
            raise AssertionError("Faddeev-LeVerrier division must be exact")
        coeffs[n - k] = c
        if k < n:
            Mk = [
                [AM[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)
            ]
    return coeffs


def char_poly(M: MatQ) -> PolyQ:
    """Exact monic characteristic polynomial det(x*I - M)."""
    if M.rows != M.cols:
        raise PreconditionError("characteristic polynomial of a non-square matrix")
    n = M.rows
    if n == 0:
        return PolyQ.one()
    ints = _charpoly_int(M.num)
    d = M.den
    return PolyQ(tuple(Fraction(ints[i], d ** (n - i)) for i in range(n + 1)))


def inverse(M: MatQ) -> MatQ:
    """Exact inverse of a square nonsingular matrix."""
    if M.rows != M.cols:
        raise PreconditionError("inverse of a non-square matrix")
    n = M.rows
    aug = [list(M.num[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    piv, rows = _row_reduce(aug, 2 * n)
    if piv != list(range(n)):
        raise PreconditionError("singular matrix has no inverse")
    right = [row[n:] for row in rows]
    return MatQ(right) * M.den


def restrict_operator(M: MatQ, s: SubspaceQ) -> MatQ:
    """The matrix of M acting on an M-invariant subspace, in its RREF basis.

    Coordinates in an RREF basis are read off at the pivot columns.  Raises
    PreconditionError if the subspace is not invariant under M.
    """
    if M.rows != M.cols or M.cols != s.ambient_dim:
        raise PreconditionError("operator and subspace dimensions do not match")
    d = s.dim
    if d == 0:
        return MatQ.zeros(0, 0)
    images = [M.mul_vector(row) for row in s.basis_rows()]  # images[j] = M b_j
    out = [[Fraction(0)] * d for _ in range(d)]
    for j, img in enumerate(images):
        coords = s.coordinates_of(img)
        if coords is None:
            raise PreconditionError("subspace is not invariant under the operator")
        for i, c in enumerate(coords):
            out[i][j] = c
    return MatQ(out)
