"""Exact arithmetic in finite fields GF(p^m).

A field is GF(p)[x]/(f) for a monic irreducible f of degree m.  Elements
are residue classes represented by their coefficient vector
(c_0, ..., c_{m-1}) with c_i in [0, p), constant term first.  Every
element also has a canonical integer index

    index = c_0 + c_1*p + ... + c_{m-1}*p^(m-1)

in [0, q) with q = p^m, which is the form used for serialization and for
all internal arithmetic.  Index 0 is the zero element and index 1 is the
multiplicative identity.

When no modulus is supplied the constructor picks the first irreducible
monic polynomial of degree m, scanning coefficient vectors with the
constant term varying fastest, so a (p, m) pair always names the same
field.  Irreducibility is decided by trial division against every monic
polynomial of degree at most m/2.

For extension fields of moderate size the constructor locates the
smallest-index generator of the multiplicative group and builds exp/log
tables from it, which makes multiplication and inversion table lookups.
Larger extensions fall back to direct polynomial arithmetic.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    DegreeMismatchError,
    FieldMismatchError,
    NotADivisorError,
    NotPrimeError,
    OrderDoesNotDivideError,
    ReducibleError,
)

ElementLike = Union[int, "FieldElement"]

# Extension fields up to this order get exp/log tables.
_TABLE_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomials over GF(p): little-endian coefficient lists, used only for
# modulus handling and for fields too large for lookup tables.


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    # mod must be monic
    a = list(a)
    dm = len(mod) - 1
    while len(a) > dm:
        lead = a.pop()
        if lead:
            off = len(a) - dm
            for i in range(dm):
                a[off + i] = (a[off + i] - lead * mod[i]) % p
    return _poly_trim(a)


def _poly_mulmod(a, b, mod, p):
    return _poly_mod(_poly_mul(a, b, p), mod, p)


def _poly_powmod(a: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, mod, p)
    while e > 0:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _monic_polys(degree: int, p: int) -> Iterator[list[int]]:
    """All monic polynomials of the given degree, constant term fastest."""
    for idx in range(p**degree):
        coeffs = []
        v = idx
        for _ in range(degree):
            coeffs.append(v % p)
            v //= p
        coeffs.append(1)
        yield coeffs


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for g in _monic_polys(d, p):
            if not _poly_mod(f, g, p):
                return False
    return True


def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    for f in _monic_polys(m, p):
        if _is_irreducible(f, p):
            return tuple(f)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


class Field:
    """GF(p^m) with index-based arithmetic.

    The scalar methods (add, sub, mul, ...) operate on integer element
    indices and are the workhorse API for the linear algebra layer.
    Use element() / elements() for the wrapped FieldElement view.
    """

    __slots__ = (
        "p",
        "m",
        "q",
        "modulus",
        "add",
        "sub",
        "neg",
        "mul",
        "inv",
        "_exp",
        "_log",
        "_gen",
        "_factors_qm1",
    )

    def __init__(self, p: int, m: int = 1, modulus: Iterable[int] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrimeError(f"characteristic {p!r} is not prime")
        if not isinstance(m, int) or m < 1:
            raise DegreeMismatchError(f"extension degree must be a positive integer, got {m!r}")
        self.p = p
        self.m = m
        self.q = p**m
        if modulus is None:
            self.modulus = _default_modulus(p, m)
        else:
            coeffs = [int(c) % p for c in modulus]
            if len(coeffs) != m + 1 or coeffs[-1] != 1:
                raise DegreeMismatchError(
                    f"modulus must be monic of degree {m}, got coefficients {list(modulus)!r}"
                )
            if m > 1 and not _is_irreducible(coeffs, p):
                raise ReducibleError(f"modulus {coeffs!r} is reducible over GF({p})")
            self.modulus = tuple(coeffs)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._gen: int | None = None
        self._factors_qm1: list[int] | None = None
        self._bind_ops()
        if m > 1 and self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _bind_ops(self) -> None:
        p = self.p
        if self.m == 1:
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: -a % p
            self.mul = lambda a, b: a * b % p
            self.inv = self._inv_prime
        elif self.m == 2:
            self.add = lambda a, b: (a + b) % p + p * ((a // p + b // p) % p)
            self.sub = lambda a, b: (a - b) % p + p * ((a // p - b // p) % p)
            self.neg = lambda a: -a % p + p * (-(a // p) % p)
            self.mul = self._mul_poly
            self.inv = self._inv_poly
        else:
            self.add = self._add_digits
            self.sub = self._sub_digits
            self.neg = self._neg_digits
            self.mul = self._mul_poly
            self.inv = self._inv_poly

    def _build_tables(self) -> None:
        q = self.q
        gen = self._find_generator()
        exp = [0] * (2 * (q - 1) - 1)
        log = [0] * q
        cur = 1
        gpoly = self._idx_to_poly(gen)
        for i in range(q - 1):
            exp[i] = cur
            log[cur] = i
            cur = self._poly_to_idx(
                _poly_mulmod(self._idx_to_poly(cur), gpoly, self.modulus, self.p)
            )
        for i in range(q - 1, len(exp)):
            exp[i] = exp[i - (q - 1)]
        self._exp = exp
        self._log = log
        self._gen = gen
        qm1 = q - 1
        log_ = log
        exp_ = exp

        def mul(a: int, b: int) -> int:
            if a == 0 or b == 0:
                return 0
            return exp_[log_[a] + log_[b]]

        def inv(a: int) -> int:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return exp_[qm1 - log_[a]]

        self.mul = mul
        self.inv = inv

    def _find_generator(self) -> int:
        """Smallest-index element of multiplicative order q - 1."""
        qm1 = self.q - 1
        if qm1 == 1:
            return 1
        factors = self.factors_of_group_order()
        cofactors = [qm1 // r for r in factors]
        mod = self.modulus
        p = self.p
        for idx in range(2, self.q):
            cand = self._idx_to_poly(idx)
            if all(_poly_powmod(cand, e, mod, p) != [1] for e in cofactors):
                return idx
        raise RuntimeError("no generator found")  # unreachable

    def factors_of_group_order(self) -> list[int]:
        if self._factors_qm1 is None:
            self._factors_qm1 = prime_factors(self.q - 1)
        return self._factors_qm1

    # -- digit / polynomial plumbing ------------------------------------------

    def _idx_to_poly(self, idx: int) -> list[int]:
        p = self.p
        out = []
        while idx:
            out.append(idx % p)
            idx //= p
        return out

    def _poly_to_idx(self, poly: Sequence[int]) -> int:
        idx = 0
        for c in reversed(poly):
            idx = idx * self.p + c
        return idx

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _sub_digits(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += (a % p - b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _neg_digits(self, a: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += (-(a % p)) % p * mult
            a //= p
            mult *= p
        return out

    def _inv_prime(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def _mul_poly(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._poly_to_idx(
            _poly_mulmod(self._idx_to_poly(a), self._idx_to_poly(b), self.modulus, self.p)
        )

    def _inv_poly(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.q - 2)

    # -- scalar API ------------------------------------------------------------

    def pow(self, a: int, e: int) -> int:
        """a raised to an arbitrary integer exponent, on indices."""
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        if self._log is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        if self.m == 1:
            return pow(a, e, self.p)
        if e < 0:
            a = self.inv(a)
            e = -e
        return self._poly_to_idx(_poly_powmod(self._idx_to_poly(a), e, self.modulus, self.p))

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero element index."""
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        if self._log is not None:
            return (self.q - 1) // gcd(self._log[a], self.q - 1)
        order = self.q - 1
        for r in self.factors_of_group_order():
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    def coeffs_of(self, idx: int) -> tuple[int, ...]:
        """Little-endian coefficient vector of length m."""
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(idx % p)
            idx //= p
        return tuple(out)

    def index_from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m:
            raise DegreeMismatchError(
                f"coefficient vector longer than extension degree {self.m}"
            )
        idx = 0
        for c in reversed([int(c) % self.p for c in coeffs]):
            idx = idx * self.p + c
        return idx

    def to_index(self, x: ElementLike) -> int:
        """Coerce an element or raw index into a validated index."""
        if isinstance(x, FieldElement):
            if x.field is not self and x.field != self:
                raise FieldMismatchError(f"element of {x.field} used in {self}")
            return x.index
        idx = int(x)
        if not 0 <= idx < self.q:
            raise IndexError(f"element index {idx} outside [0, {self.q})")
        return idx

    def element(self, x: ElementLike | Sequence[int]) -> "FieldElement":
        if isinstance(x, FieldElement):
            self.to_index(x)
            return x
        if isinstance(x, (list, tuple)):
            return FieldElement(self, self.index_from_coeffs(x))
        return FieldElement(self, self.to_index(x))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        for idx in range(self.q):
            yield FieldElement(self, idx)

    def primitive_element(self) -> "FieldElement":
        """Smallest-index element whose multiplicative order is q - 1."""
        if self._gen is None:
            if self.q == 2:
                self._gen = 1
            elif self.m == 1:
                p = self.p
                cofactors = [(p - 1) // r for r in self.factors_of_group_order()]
                for g in range(2, p):
                    if all(pow(g, e, p) != 1 for e in cofactors):
                        self._gen = g
                        break
            else:
                self._gen = self._find_generator()
        return FieldElement(self, self._gen)

    def frobenius(self, x: ElementLike) -> "FieldElement":
        return FieldElement(self, self.pow(self.to_index(x), self.p))

    def subfield(self, degree: int) -> "SubfieldView":
        if not isinstance(degree, int) or degree < 1 or self.m % degree != 0:
            raise NotADivisorError(
                f"subfield degree {degree!r} does not divide extension degree {self.m}"
            )
        return SubfieldView(self, degree)

    # -- descriptors and dunders -----------------------------------------------

    def descriptor(self) -> str:
        """Text form p^m/c_m,...,c_0 with modulus coefficients leading first."""
        coeffs = ",".join(str(c) for c in reversed(self.modulus))
        return f"{self.p}^{self.m}/{coeffs}"

    @classmethod
    def from_descriptor(cls, text: str) -> "Field":
        from .errors import ParseError

        body = text.strip()
        mod_part = None
        if "/" in body:
            body, mod_part = body.split("/", 1)
        try:
            if "^" in body:
                p_s, m_s = body.split("^", 1)
                p, m = int(p_s), int(m_s)
            else:
                p, m = int(body), 1
        except ValueError as exc:
            raise ParseError(f"bad field descriptor {text!r}") from exc
        modulus = None
        if mod_part is not None:
            try:
                big_endian = [int(c) for c in mod_part.split(",")]
            except ValueError as exc:
                raise ParseError(f"bad modulus in field descriptor {text!r}") from exc
            modulus = list(reversed(big_endian))
        return cls(p, m, modulus)

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


_field_cache: dict[tuple, Field] = {}


def field_create(p: int, m: int = 1, modulus: Iterable[int] | None = None) -> Field:
    """Shared-instance Field factory; fields are immutable so reuse is safe."""
    key = (p, m, tuple(modulus) if modulus is not None else None)
    f = _field_cache.get(key)
    if f is None:
        f = Field(p, m, modulus)
        _field_cache[key] = f
    return f


class FieldElement:
    """A single field element, identified by its index.

    Arithmetic accepts either another element of the same field or a raw
    integer index.  Note that in extension fields an integer operand is
    interpreted as an index, not as a repeated sum of ones.
    """

    __slots__ = ("field", "index")

    def __init__(self, field: Field, index: int):
        if not 0 <= index < field.q:
            raise IndexError(f"element index {index} outside [0, {field.q})")
        self.field = field
        self.index = index

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs_of(self.index)

    def is_zero(self) -> bool:
        return self.index == 0

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.index))

    def multiplicative_order(self) -> int:
        return self.field.order_of(self.index)

    def _coerce(self, other: ElementLike) -> int:
        return self.field.to_index(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.index, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.index, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.index))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.index, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(
            self.field, self.field.mul(self.index, self.field.inv(self._coerce(other)))
        )

    def __rtruediv__(self, other):
        return FieldElement(
            self.field, self.field.mul(self._coerce(other), self.field.inv(self.index))
        )

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.index == other.index
        if isinstance(other, int):
            return self.index == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field._key(), self.index))

    def __int__(self) -> int:
        return self.index

    def __repr__(self) -> str:
        return f"{self.field!r}({self.index})"


class SubfieldView:
    """The subfield GF(p^d) sitting inside GF(p^m), d dividing m.

    Membership is the Frobenius fixed-point test x^(p^d) = x.  The view
    does not re-represent elements; it exposes the ambient indices that
    happen to lie in the subfield.
    """

    __slots__ = ("field", "degree", "order", "_step")

    def __init__(self, field: Field, degree: int):
        if field.m % degree != 0:
            raise NotADivisorError(
                f"subfield degree {degree} does not divide extension degree {field.m}"
            )
        self.field = field
        self.degree = degree
        self.order = field.p**degree
        self._step = (field.q - 1) // (self.order - 1)

    def contains(self, x: ElementLike) -> bool:
        idx = self.field.to_index(x)
        if idx == 0 or self.order == self.field.q:
            return True
        log = self.field._log
        if log is not None:
            return log[idx] % self._step == 0
        return self.field.pow(idx, self.order) == idx

    __contains__ = contains

    def primitive_element(self) -> FieldElement:
        """Generator of the subfield's multiplicative group."""
        g = self.field.primitive_element()
        return g ** self._step

    def element_indices(self) -> list[int]:
        if self.order == self.field.q:
            return list(range(self.field.q))
        f = self.field
        out = {0, 1}
        g = f.to_index(self.primitive_element())
        cur = g
        while cur != 1:
            out.add(cur)
            cur = f.mul(cur, g)
        assert len(out) == self.order
        return sorted(out)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self.field, i) for i in self.element_indices()]

    def subgroup_of_order(self, n: int) -> "MultiplicativeSubgroup":
        return subgroup_of_order(self, n)

    def __repr__(self) -> str:
        return f"GF({self.field.p}^{self.degree}) in {self.field!r}"


class MultiplicativeSubgroup:
    """Cyclic subgroup of a subfield's multiplicative group.

    Elements are listed as consecutive powers of the generator starting
    at the identity, as ambient field indices.
    """

    __slots__ = ("field", "indices", "generator_index")

    def __init__(self, field: Field, indices: Sequence[int], generator_index: int):
        self.field = field
        self.indices = tuple(indices)
        self.generator_index = generator_index

    @property
    def order(self) -> int:
        return len(self.indices)

    @property
    def elements(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, i) for i in self.indices)

    def __contains__(self, x: ElementLike) -> bool:
        return self.field.to_index(x) in set(self.indices)

    def __repr__(self) -> str:
        return f"subgroup of order {self.order} in {self.field!r}"


def subgroup_of_order(view: SubfieldView, n: int) -> MultiplicativeSubgroup:
    """The unique subgroup of the given order; n must divide p^d - 1."""
    group_order = view.order - 1
    if not isinstance(n, int) or n < 1 or group_order % n != 0:
        raise OrderDoesNotDivideError(
            f"subgroup order {n!r} does not divide group order {group_order}"
        )
    f = view.field
    gen = f.to_index(view.primitive_element() ** (group_order // n))
    indices = [1]
    cur = gen
    while cur != 1:
        indices.append(cur)
        cur = f.mul(cur, gen)
    assert len(indices) == n
    return MultiplicativeSubgroup(f, indices, gen)
