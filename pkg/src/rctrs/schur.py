"""Schur-square analysis and code equivalence helpers.

The Schur square of a code is spanned by the componentwise products of
codeword pairs; for a k-row generator matrix the k(k+1)/2 products of
row pairs already span it.  Its dimension separates code families:
generalized Reed-Solomon codes of dimension k sit at 2k-1, while the
twisted constructions here reach 2k or 2k+1.

Both distinguishers are one-sided and only meaningful on MDS codes in a
dimension range, so they return True, False or None (undetermined when
the preconditions fail):

* is_non_rs: dimension different from 2k-1 proves the code is not GRS,
  requires k <= N/2.
* ctrs_distinguisher: dimension 2k+1 rules out one-twist CTRS codes,
  which stay at or below 2k; requires k <= (N-1)/2.

Hamming isometries (column permutations composed with nonzero column
scalings) preserve distance, MDS-ness and the Schur-square dimension,
which the test suite uses as an invariance oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .codes import GeneratorMatrix
from .errors import LengthMismatchError, SizeMismatchError
from .gf import ElementLike, Field, FieldElement
from .linalg import Matrix, _rank_rows
from .mds import MatrixLike, MdsVerdict, _unwrap


def schur_vec(
    x: Sequence[ElementLike], y: Sequence[ElementLike], field: Field | None = None
) -> tuple[FieldElement, ...]:
    """Componentwise product of two vectors."""
    if field is None:
        for entry in (*x, *y):
            if isinstance(entry, FieldElement):
                field = entry.field
                break
        else:
            raise ValueError("cannot infer the field from plain indices")
    if len(x) != len(y):
        raise LengthMismatchError(f"vector lengths differ: {len(x)} vs {len(y)}")
    mul = field.mul
    return tuple(
        FieldElement(field, mul(field.to_index(a), field.to_index(b)))
        for a, b in zip(x, y)
    )


def schur_square_rows(g: MatrixLike) -> Matrix:
    """All row products g_i * g_j with i <= j, as a matrix."""
    m = _unwrap(g)
    mul = m.field.mul
    rows = []
    for i in range(m.nrows):
        ri = m.rows[i]
        for j in range(i, m.nrows):
            rj = m.rows[j]
            rows.append([mul(a, b) for a, b in zip(ri, rj)])
    return Matrix(m.field, rows, ncols=m.ncols)


def schur_square_dim(g: MatrixLike) -> int:
    """Dimension of the Schur square of the row space."""
    m = schur_square_rows(g)
    return _rank_rows(m.field, [list(r) for r in m.rows])


def is_non_rs(g: MatrixLike, mds: MdsVerdict, dim: int | None = None) -> Optional[bool]:
    """True when the Schur square certifies the code is not GRS."""
    m = _unwrap(g)
    if not mds.is_mds or 2 * m.nrows > m.ncols:
        return None
    if dim is None:
        dim = schur_square_dim(m)
    return dim != 2 * m.nrows - 1


def ctrs_distinguisher(g: MatrixLike, mds: MdsVerdict, dim: int | None = None) -> Optional[bool]:
    """True when the Schur square rules out any one-twist CTRS structure."""
    m = _unwrap(g)
    if not mds.is_mds or 2 * m.nrows > m.ncols - 1:
        return None
    if dim is None:
        dim = schur_square_dim(m)
    return dim == 2 * m.nrows + 1


@dataclass(frozen=True)
class SchurReport:
    dim: int
    dimension_k: int
    length: int
    non_rs: Optional[bool]
    ctrs_incompatible: Optional[bool]

    def render(self) -> str:
        def tri(v: Optional[bool]) -> str:
            return "undetermined" if v is None else ("true" if v else "false")

        return (
            f"schur_dim={self.dim} non_rs={tri(self.non_rs)} "
            f"ctrs_incompatible={tri(self.ctrs_incompatible)}"
        )


def schur_report(g: MatrixLike, mds: MdsVerdict) -> SchurReport:
    m = _unwrap(g)
    dim = schur_square_dim(m)
    return SchurReport(
        dim=dim,
        dimension_k=m.nrows,
        length=m.ncols,
        non_rs=is_non_rs(m, mds, dim),
        ctrs_incompatible=ctrs_distinguisher(m, mds, dim),
    )


@dataclass(frozen=True)
class Isometry:
    """Hamming isometry x -> (scale_i * x[perm_i]); both parts length N."""

    perm: tuple[int, ...]
    scale: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if len(self.scale) != n:
            raise SizeMismatchError("permutation and scaling lengths differ")
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"not a permutation of range({n}): {self.perm}")
        if any(s == 0 for s in self.scale):
            raise ValueError("column scalings must be nonzero")


def apply_isometry(g: MatrixLike, iso: Isometry) -> MatrixLike:
    """Image of the generator matrix; rows keep their message meaning but
    no longer follow the basis-evaluation layout of the original spec."""
    m = _unwrap(g)
    if len(iso.perm) != m.ncols:
        raise SizeMismatchError(
            f"isometry on {len(iso.perm)} coordinates applied to length {m.ncols}"
        )
    mul = m.field.mul
    rows = [
        [mul(s, row[p]) for p, s in zip(iso.perm, iso.scale)]
        for row in m.rows
    ]
    out = Matrix(m.field, rows, ncols=m.ncols)
    if isinstance(g, GeneratorMatrix):
        return GeneratorMatrix(g.spec, out)
    return out


def random_isometry(field: Field, n: int, rng: random.Random) -> Isometry:
    perm = list(range(n))
    rng.shuffle(perm)
    scale = [rng.randrange(1, field.q) for _ in range(n)]
    return Isometry(tuple(perm), tuple(scale))
