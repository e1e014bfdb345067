"""Evaluation code families and their generator matrices.

Four families share one builder.  A spec fixes a polynomial space and a
list of columns:

* GRS: scaled evaluations of polynomials of degree < k at n points.
* TRS: evaluations of the twisted space V(k, t, h, eta) at n points,
  where V replaces the monomial x^h by x^h + eta*x^(k-1+t).
* CTRS: degree < k polynomials on n-1 points plus one twist column
  f(b) - lambda*f(c).
* RCTRS: the twisted space on n-1 points plus the same twist column,
  combining both deformations.

The extended variant appends a column holding the coefficient of
x^(k-1) of each basis polynomial.  Rows follow the basis order 1, x,
..., x^(k-1) (with the hook monomial replaced for twisted families), so
a spec always produces the same matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import HookOutOfRangeError, InvalidSpecError, LengthMismatchError
from .gf import ElementLike, Field, FieldElement
from .linalg import Matrix


class CodeFamily(str, Enum):
    GRS = "GRS"
    TRS = "TRS"
    CTRS = "CTRS"
    RCTRS = "RCTRS"

    @classmethod
    def coerce(cls, value) -> "CodeFamily":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise InvalidSpecError(f"unknown code family {value!r}") from None


_TWISTED = (CodeFamily.TRS, CodeFamily.RCTRS)
_POINTED = (CodeFamily.CTRS, CodeFamily.RCTRS)


@dataclass(frozen=True)
class CodeSpec:
    """Validated description of one code; immutable once constructed.

    n is the unextended code length.  For GRS and TRS the evaluation
    points fill all n columns; for CTRS and RCTRS there are n-1 points
    and the twist column.  Scalars are stored as element indices.
    """

    family: CodeFamily
    field: Field
    n: int
    k: int
    alphas: tuple[int, ...]
    v: tuple[int, ...] | None = None
    h: int = 0
    t: int = 1
    b: int | None = None
    c: int | None = None
    lam: int | None = None
    eta: int | None = None
    extended: bool = False

    def __post_init__(self):
        fam = CodeFamily.coerce(self.family)
        object.__setattr__(self, "family", fam)
        f = self.field
        object.__setattr__(self, "alphas", tuple(f.to_index(a) for a in self.alphas))
        for name in ("b", "c", "lam", "eta"):
            val = getattr(self, name)
            if val is not None:
                object.__setattr__(self, name, f.to_index(val))
        if self.v is not None:
            object.__setattr__(self, "v", tuple(f.to_index(x) for x in self.v))
        object.__setattr__(self, "extended", bool(self.extended))
        self._validate()

    def _validate(self):
        fam = self.family
        f = self.field
        n, k = self.n, self.k
        if not 1 <= k <= n:
            raise InvalidSpecError(f"dimension k={k} outside [1, n={n}]")
        max_n = f.q if fam in (CodeFamily.GRS, CodeFamily.TRS) else f.q + 1
        if n > max_n:
            raise InvalidSpecError(f"length n={n} exceeds {max_n} for {fam.value} over {f!r}")
        want_pts = n if fam in (CodeFamily.GRS, CodeFamily.TRS) else n - 1
        if len(self.alphas) != want_pts:
            raise InvalidSpecError(
                f"{fam.value} with n={n} needs {want_pts} evaluation points, got {len(self.alphas)}"
            )
        if len(set(self.alphas)) != len(self.alphas):
            raise InvalidSpecError("evaluation points must be pairwise distinct")
        if fam in _TWISTED:
            if self.t < 1:
                raise InvalidSpecError(f"twist amount t={self.t} must be at least 1")
            if not 0 <= self.h < k:
                raise InvalidSpecError(f"hook h={self.h} outside [0, k={k})")
            if self.eta is None:
                raise InvalidSpecError(f"{fam.value} spec needs eta")
        else:
            if self.h != 0 or self.t != 1:
                raise InvalidSpecError(f"{fam.value} spec does not take hook or twist")
            if self.eta is not None:
                raise InvalidSpecError(f"{fam.value} spec does not take eta")
        if fam in _POINTED:
            for name in ("b", "c", "lam"):
                if getattr(self, name) is None:
                    raise InvalidSpecError(f"{fam.value} spec needs {name}")
        else:
            for name in ("b", "c", "lam"):
                if getattr(self, name) is not None:
                    raise InvalidSpecError(f"{fam.value} spec does not take {name}")
        if self.v is not None:
            if fam is not CodeFamily.GRS:
                raise InvalidSpecError("column multipliers apply to GRS only")
            if len(self.v) != n:
                raise InvalidSpecError(f"need {n} column multipliers, got {len(self.v)}")
            if any(x == 0 for x in self.v):
                raise InvalidSpecError("column multipliers must be nonzero")

    @property
    def num_columns(self) -> int:
        return self.n + 1 if self.extended else self.n

    def multipliers(self) -> tuple[int, ...]:
        return self.v if self.v is not None else (1,) * self.n


def twist_space_basis(
    field: Field, k: int, t: int, h: int, eta: ElementLike
) -> list[list[int]]:
    """Coefficient vectors (length k+t, little-endian) of the basis
    1, x, ..., x^h + eta*x^(k-1+t), ..., x^(k-1)."""
    if k < 1:
        raise InvalidSpecError(f"dimension k={k} must be positive")
    if t < 1:
        raise InvalidSpecError(f"twist amount t={t} must be at least 1")
    if not 0 <= h < k:
        raise HookOutOfRangeError(f"hook h={h} outside [0, k={k})")
    eta_idx = field.to_index(eta)
    deg = k - 1 + t
    basis = []
    for i in range(k):
        coeffs = [0] * (deg + 1)
        coeffs[i] = 1
        if i == h:
            coeffs[deg] = eta_idx
        basis.append(coeffs)
    return basis


def _monomial_basis(k: int) -> list[list[int]]:
    return [[1 if j == i else 0 for j in range(k)] for i in range(k)]


def eval_poly(field: Field, coeffs: Sequence[ElementLike], x: ElementLike) -> FieldElement:
    """Horner evaluation of a little-endian coefficient vector."""
    xi = field.to_index(x)
    add = field.add
    mul = field.mul
    acc = 0
    for c in reversed([field.to_index(c) for c in coeffs]):
        acc = add(mul(acc, xi), c)
    return FieldElement(field, acc)


class GeneratorMatrix:
    """A generator matrix together with the spec that produced it."""

    __slots__ = ("spec", "matrix")

    def __init__(self, spec: CodeSpec, matrix: Matrix):
        self.spec = spec
        self.matrix = matrix

    @property
    def field(self) -> Field:
        return self.matrix.field

    @property
    def nrows(self) -> int:
        return self.matrix.nrows

    @property
    def ncols(self) -> int:
        return self.matrix.ncols

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.matrix.rows

    def __repr__(self) -> str:
        return f"GeneratorMatrix({self.spec.family.value} [{self.ncols},{self.nrows}] over {self.field!r})"


def generator_matrix(spec: CodeSpec) -> GeneratorMatrix:
    """Build the canonical generator matrix for a spec."""
    f = spec.field
    k = spec.k
    if spec.family in _TWISTED:
        basis = twist_space_basis(f, k, spec.t, spec.h, spec.eta)
    else:
        basis = _monomial_basis(k)

    add = f.add
    sub = f.sub
    mul = f.mul
    rows = []
    for coeffs in basis:
        row = []
        # Horner once per point; degrees stay below k + t so this is cheap.
        for a in spec.alphas:
            acc = 0
            for c in reversed(coeffs):
                acc = add(mul(acc, a), c)
            row.append(acc)
        rows.append(row)

    if spec.family is CodeFamily.GRS:
        mults = spec.multipliers()
        rows = [[mul(vj, x) for vj, x in zip(mults, row)] for row in rows]
    elif spec.family in _POINTED:
        for coeffs, row in zip(basis, rows):
            fb = eval_poly(f, coeffs, spec.b).index
            fc = eval_poly(f, coeffs, spec.c).index
            row.append(sub(fb, mul(spec.lam, fc)))

    if spec.extended:
        for coeffs, row in zip(basis, rows):
            row.append(coeffs[k - 1])

    return GeneratorMatrix(spec, Matrix(f, rows))


def encode(gen: GeneratorMatrix, message: Sequence[ElementLike]) -> tuple[FieldElement, ...]:
    """Message times generator matrix."""
    f = gen.field
    msg = [f.to_index(x) for x in message]
    if len(msg) != gen.nrows:
        raise LengthMismatchError(f"message length {len(msg)} != dimension {gen.nrows}")
    add = f.add
    mul = f.mul
    out = [0] * gen.ncols
    for mi, row in zip(msg, gen.rows):
        if mi:
            out = [add(acc, mul(mi, x)) for acc, x in zip(out, row)]
    return tuple(FieldElement(f, x) for x in out)
