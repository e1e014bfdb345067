"""Plain-text code specs.

One key/value pair per line, key and value separated by whitespace.  The
field line comes first so every later element index has a home:

    field 17^1/1,0
    family RCTRS
    n 8
    k 4
    h 0
    t 1
    extended 0
    alphas 0,3,7,8,10,12,13
    b 1
    c 2
    lambda 10
    eta 4

The field descriptor is p^m followed by the modulus coefficients from
the leading term down to the constant.  All element values are integer
indices.  Blank lines and lines starting with # are ignored; unknown or
repeated keys are rejected.  Keys that do not apply to the named family
are also rejected, so a GRS spec cannot smuggle in a twist.
"""

from __future__ import annotations

from pathlib import Path
from typing import TextIO, Union

from .codes import CodeFamily, CodeSpec
from .errors import ParseError
from .gf import Field

_KEYS = ("family", "n", "k", "h", "t", "extended", "alphas", "v", "b", "c", "lambda", "eta")
_FAMILY_KEYS = {
    CodeFamily.GRS: {"family", "n", "k", "extended", "alphas", "v"},
    CodeFamily.TRS: {"family", "n", "k", "h", "t", "extended", "alphas", "eta"},
    CodeFamily.CTRS: {"family", "n", "k", "extended", "alphas", "b", "c", "lambda"},
    CodeFamily.RCTRS: {
        "family", "n", "k", "h", "t", "extended", "alphas", "b", "c", "lambda", "eta",
    },
}

Source = Union[str, Path, TextIO]


def _read_text(source: Source) -> str:
    if isinstance(source, Path):
        return source.read_text()
    if isinstance(source, str):
        return source
    return source.read()


def _parse_int(value: str, key: str, lineno: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"line {lineno}: key {key!r} needs an integer, got {value!r}") from None


def _parse_int_list(value: str, key: str, lineno: int) -> tuple[int, ...]:
    value = value.strip()
    if not value:
        return ()
    try:
        return tuple(int(tok) for tok in value.split(","))
    except ValueError:
        raise ParseError(
            f"line {lineno}: key {key!r} needs comma-separated integers, got {value!r}"
        ) from None


def codespec_from_text(text: str) -> CodeSpec:
    field: Field | None = None
    pairs: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 1)
        key = parts[0]
        value = parts[1].strip() if len(parts) > 1 else ""
        if key == "field":
            if field is not None:
                raise ParseError(f"line {lineno}: duplicate field line")
            field = Field.from_descriptor(value)
            continue
        if field is None:
            raise ParseError(f"line {lineno}: the field line must come first")
        if key not in _KEYS:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
        if key in pairs:
            raise ParseError(f"line {lineno}: duplicate key {key!r}")
        pairs[key] = (value, lineno)
    if field is None:
        raise ParseError("missing field line")
    if "family" not in pairs:
        raise ParseError("missing family line")
    family = CodeFamily.coerce(pairs["family"][0])
    allowed = _FAMILY_KEYS[family]
    for key, (_, lineno) in pairs.items():
        if key not in allowed:
            raise ParseError(
                f"line {lineno}: key {key!r} does not apply to family {family.value}"
            )
    for key in ("n", "k"):
        if key not in pairs:
            raise ParseError(f"missing {key} line")

    def take_int(key: str, default: int | None = None) -> int | None:
        if key not in pairs:
            return default
        value, lineno = pairs[key]
        return _parse_int(value, key, lineno)

    alphas: tuple[int, ...] = ()
    if "alphas" in pairs:
        value, lineno = pairs["alphas"]
        alphas = _parse_int_list(value, "alphas", lineno)
    v = None
    if "v" in pairs:
        value, lineno = pairs["v"]
        v = _parse_int_list(value, "v", lineno)
    extended = take_int("extended", 0)
    if extended not in (0, 1):
        raise ParseError("extended must be 0 or 1")

    return CodeSpec(
        family=family,
        field=field,
        n=take_int("n"),
        k=take_int("k"),
        alphas=alphas,
        v=v,
        h=take_int("h", 0),
        t=take_int("t", 1),
        b=take_int("b"),
        c=take_int("c"),
        lam=take_int("lambda"),
        eta=take_int("eta"),
        extended=bool(extended),
    )


def codespec_to_text(spec: CodeSpec) -> str:
    lines = [
        f"field {spec.field.descriptor()}",
        f"family {spec.family.value}",
        f"n {spec.n}",
        f"k {spec.k}",
    ]
    if spec.family in (CodeFamily.TRS, CodeFamily.RCTRS):
        lines.append(f"h {spec.h}")
        lines.append(f"t {spec.t}")
    lines.append(f"extended {1 if spec.extended else 0}")
    if spec.alphas:
        lines.append("alphas " + ",".join(str(a) for a in spec.alphas))
    if spec.v is not None:
        lines.append("v " + ",".join(str(x) for x in spec.v))
    if spec.family in (CodeFamily.CTRS, CodeFamily.RCTRS):
        lines.append(f"b {spec.b}")
        lines.append(f"c {spec.c}")
        lines.append(f"lambda {spec.lam}")
    if spec.family in (CodeFamily.TRS, CodeFamily.RCTRS):
        lines.append(f"eta {spec.eta}")
    return "\n".join(lines) + "\n"


def codespec_read(source: Source) -> CodeSpec:
    """Read and validate a spec from a path, text or stream."""
    if isinstance(source, str) and "\n" not in source and Path(source).exists():
        source = Path(source)
    return codespec_from_text(_read_text(source))


def codespec_write(spec: CodeSpec, target: Union[str, Path, TextIO, None] = None) -> str:
    """Serialize a spec; writes to the target when one is given."""
    text = codespec_to_text(spec)
    if target is None:
        return text
    if isinstance(target, (str, Path)):
        Path(target).write_text(text)
    else:
        target.write(text)
    return text
