"""Exact linear algebra over a finite field.

Matrices are immutable row-major grids of element indices tied to a
Field.  Rank, determinant and null space use plain Gaussian elimination
with exact field inverses; nothing here ever rounds.

Also hosts the polynomial-flavoured determinant identities used by the
code analyzers: elementary symmetric polynomials via the standard
one-pass recurrence, Vandermonde determinants in product form, and the
closed form for a Vandermonde matrix with one power row deleted.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import HookOutOfRangeError, NotSquareError, ParseError
from .gf import ElementLike, Field, FieldElement, field_create


class Matrix:
    """Immutable matrix over a field; entries stored as element indices."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: Iterable[Iterable[ElementLike]], ncols: int | None = None):
        grid = tuple(tuple(field.to_index(x) for x in row) for row in rows)
        if grid:
            ncols = len(grid[0])
            if any(len(r) != ncols for r in grid):
                raise ValueError("rows have unequal lengths")
        elif ncols is None:
            raise ValueError("empty matrix needs an explicit column count")
        if ncols < 1:
            raise ValueError("matrix must have at least one column")
        self.field = field
        self.rows = grid
        self.nrows = len(grid)
        self.ncols = ncols

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.rows[i][j])

    def row(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, zip(*self.rows)) if self.nrows else Matrix(
            self.field, [], ncols=1
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field._key(), self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.nrows}x{self.ncols})"


# ---------------------------------------------------------------------------
# Elimination engines on mutable row lists of indices.


def _rank_rows(field: Field, rows: list[list[int]]) -> int:
    if not rows:
        return 0
    mul = field.mul
    sub = field.sub
    inv = field.inv
    nrows = len(rows)
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        pinv = inv(prow[col])
        for i in range(r + 1, nrows):
            lead = rows[i][col]
            if lead:
                f = mul(lead, pinv)
                ri = rows[i]
                for j in range(col, ncols):
                    if prow[j]:
                        ri[j] = sub(ri[j], mul(f, prow[j]))
        r += 1
        if r == nrows:
            break
    return r


def _det_rows(field: Field, rows: list[list[int]]) -> int:
    n = len(rows)
    mul = field.mul
    sub = field.sub
    inv = field.inv
    detval = 1
    negate = False
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            negate = not negate
        prow = rows[col]
        pval = prow[col]
        detval = mul(detval, pval)
        pinv = inv(pval)
        for i in range(col + 1, n):
            lead = rows[i][col]
            if lead:
                f = mul(lead, pinv)
                ri = rows[i]
                for j in range(col + 1, n):
                    if prow[j]:
                        ri[j] = sub(ri[j], mul(f, prow[j]))
    return field.neg(detval) if negate else detval


def _rref_rows(field: Field, rows: list[list[int]]) -> list[int]:
    """Reduce in place to reduced row echelon form; returns pivot columns."""
    if not rows:
        return []
    mul = field.mul
    sub = field.sub
    inv = field.inv
    nrows = len(rows)
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        pinv = inv(prow[col])
        if prow[col] != 1:
            for j in range(col, ncols):
                if prow[j]:
                    prow[j] = mul(prow[j], pinv)
        for i in range(nrows):
            if i != r and rows[i][col]:
                f = rows[i][col]
                ri = rows[i]
                for j in range(col, ncols):
                    if prow[j]:
                        ri[j] = sub(ri[j], mul(f, prow[j]))
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return pivots


def _mutable(m: Matrix) -> list[list[int]]:
    return [list(r) for r in m.rows]


def rank(m: Matrix) -> int:
    return _rank_rows(m.field, _mutable(m))


def det(m: Matrix) -> FieldElement:
    if m.nrows != m.ncols:
        raise NotSquareError(f"determinant of a {m.nrows}x{m.ncols} matrix")
    return FieldElement(m.field, _det_rows(m.field, _mutable(m)))


def rref(m: Matrix) -> Matrix:
    rows = _mutable(m)
    _rref_rows(m.field, rows)
    return Matrix(m.field, rows, ncols=m.ncols)


def null_space(m: Matrix) -> Matrix:
    """Basis of the right kernel, one vector per row; 0 rows if trivial."""
    f = m.field
    rows = _mutable(m)
    pivots = _rref_rows(f, rows)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [0] * m.ncols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = f.neg(rows[r][fc])
        basis.append(vec)
    return Matrix(f, basis, ncols=m.ncols)


def row_space_equal(a: Matrix, b: Matrix) -> bool:
    """Whether two matrices span the same row space (RREF is canonical)."""
    if a.field != b.field or a.ncols != b.ncols:
        return False

    def reduced(m: Matrix) -> list[tuple[int, ...]]:
        rows = _mutable(m)
        _rref_rows(m.field, rows)
        return [tuple(r) for r in rows if any(r)]

    return reduced(a) == reduced(b)


# ---------------------------------------------------------------------------
# Symmetric functions and Vandermonde identities.


def elementary_symmetric(field: Field, values: Sequence[ElementLike], r: int) -> FieldElement:
    """Degree-r elementary symmetric polynomial of the values.

    One pass over the values updating the running table of all degrees
    up to r, so the cost is len(values) * r field operations.
    """
    if r < 0:
        raise ValueError("degree must be nonnegative")
    vals = [field.to_index(v) for v in values]
    if r > len(vals):
        return FieldElement(field, 0)
    add = field.add
    mul = field.mul
    table = [1] + [0] * r
    for v in vals:
        for j in range(r, 0, -1):
            if table[j - 1]:
                table[j] = add(table[j], mul(v, table[j - 1]))
    return FieldElement(field, table[r])


def vandermonde_matrix(field: Field, points: Sequence[ElementLike], nrows: int | None = None) -> Matrix:
    """Rows are powers 0..nrows-1 of the points, one column per point."""
    pts = [field.to_index(x) for x in points]
    if nrows is None:
        nrows = len(pts)
    mul = field.mul
    rows = [[1] * len(pts)]
    for _ in range(nrows - 1):
        rows.append([mul(a, x) for a, x in zip(rows[-1], pts)])
    return Matrix(field, rows[:nrows])


def vandermonde_det(field: Field, points: Sequence[ElementLike]) -> FieldElement:
    """Product of (x_j - x_i) over i < j."""
    pts = [field.to_index(x) for x in points]
    mul = field.mul
    sub = field.sub
    out = 1
    for j in range(1, len(pts)):
        pj = pts[j]
        for i in range(j):
            out = mul(out, sub(pj, pts[i]))
            if not out:
                return FieldElement(field, 0)
    return FieldElement(field, out)


def deleted_row_vandermonde_matrix(
    field: Field, points: Sequence[ElementLike], skip_power: int
) -> Matrix:
    """Square matrix with power rows 0..n except skip_power, n = #points."""
    n = len(points)
    if not 1 <= skip_power <= n - 1:
        raise HookOutOfRangeError(f"skipped power {skip_power} outside [1, {n - 1}]")
    full = vandermonde_matrix(field, points, nrows=n + 1)
    return Matrix(field, [full.rows[e] for e in range(n + 1) if e != skip_power])


def deleted_row_vandermonde_det(
    field: Field, points: Sequence[ElementLike], skip_power: int
) -> FieldElement:
    """Closed form: sigma_(n-skip_power)(points) times the Vandermonde det."""
    n = len(points)
    if not 1 <= skip_power <= n - 1:
        raise HookOutOfRangeError(f"skipped power {skip_power} outside [1, {n - 1}]")
    sigma = elementary_symmetric(field, points, n - skip_power)
    return FieldElement(field, field.mul(sigma.index, vandermonde_det(field, points).index))


# ---------------------------------------------------------------------------
# Plain text serialization: header "p m rows cols", then index rows.


def matrix_to_text(m: Matrix) -> str:
    lines = [f"{m.field.p} {m.field.m} {m.nrows} {m.ncols}"]
    lines.extend(" ".join(str(x) for x in row) for row in m.rows)
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str, field: Field | None = None) -> Matrix:
    """Parse matrix text; reconstructs the default field unless one is given."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty matrix text")
    try:
        p, m, nrows, ncols = (int(tok) for tok in lines[0].split())
    except ValueError as exc:
        raise ParseError(f"bad matrix header {lines[0]!r}") from exc
    if field is None:
        field = field_create(p, m)
    elif field.p != p or field.m != m:
        raise ParseError(f"matrix header names GF({p}^{m}), got field {field!r}")
    if len(lines) - 1 != nrows:
        raise ParseError(f"expected {nrows} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError as exc:
            raise ParseError(f"bad matrix row {ln!r}") from exc
        if len(row) != ncols:
            raise ParseError(f"expected {ncols} columns, found {len(row)}")
        rows.append(row)
    try:
        return Matrix(field, rows, ncols=ncols)
    except IndexError as exc:
        raise ParseError(str(exc)) from exc
