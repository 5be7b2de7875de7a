"""Ring-spec JSON: parse into rings, hash canonically.

Accepted forms::

    {"kind": "zn", "n": 6}
    {"kind": "product", "factors": [spec, ...]}
    {"kind": "upper_triangular", "base": spec, "size": k}
    {"kind": "matrix", "base": spec, "size": k}
    {"kind": "quotient", "base": spec, "ideal_generators": [literal, ...]}
    {"kind": "tables", "order": n, "zero": z, "one": o, "add": [[...]], "mul": [[...]]}
    {"kind": "zlocal", "primes": [2, 3]}
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Union

from .ideals import TWO_SIDED, closure
from .ring import (
    DEFAULT_MAX_ORDER,
    FiniteRing,
    direct_product,
    from_tables,
    matrix_ring,
    quotient,
    upper_triangular,
    zn,
)
from .zlocal import ZLocalRing

AnyRing = Union[FiniteRing, ZLocalRing]


class SpecError(ValueError):
    pass


def canonical(spec: Any) -> str:
    return json.dumps(spec, sort_keys=True, separators=(",", ":"))


def spec_hash(spec: Any) -> str:
    """SHA-256 of the key-sorted compact JSON encoding."""
    return hashlib.sha256(canonical(spec).encode()).hexdigest()


def _get(spec: dict, key: str) -> Any:
    try:
        return spec[key]
    except KeyError:
        raise SpecError(f"{spec.get('kind')!r} spec is missing {key!r}") from None


def _int(spec: dict, key: str) -> int:
    v = _get(spec, key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecError(f"{key!r} must be an integer, got {v!r}")
    return v


def build(spec: Any, max_order: int | None = DEFAULT_MAX_ORDER) -> AnyRing:
    """Build a ring from a parsed spec; ring-axiom failures propagate as ValueError."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError(f"ring spec must be an object with a 'kind': {spec!r}")
    kind = spec["kind"]
    if kind == "zn":
        return zn(_int(spec, "n"), max_order=max_order)
    if kind == "product":
        factors = _get(spec, "factors")
        if not isinstance(factors, list):
            raise SpecError("'factors' must be a list")
        return direct_product([build_finite(f, max_order) for f in factors], max_order=max_order)
    if kind == "upper_triangular":
        return upper_triangular(build_finite(_get(spec, "base"), max_order), _int(spec, "size"),
                                max_order=max_order)
    if kind == "matrix":
        return matrix_ring(build_finite(_get(spec, "base"), max_order), _int(spec, "size"),
                           max_order=max_order)
    if kind == "quotient":
        base = build_finite(_get(spec, "base"), max_order)
        gens = [base.parse(g) for g in _get(spec, "ideal_generators")]
        Q, _ = quotient(base, closure(base, gens, TWO_SIDED))
        return Q
    if kind == "tables":
        add, mul = _get(spec, "add"), _get(spec, "mul")
        n = _int(spec, "order")
        if len(add) != n or len(mul) != n:
            raise SpecError(f"tables do not match declared order {n}")
        return from_tables(add, mul, _int(spec, "zero"), _int(spec, "one"), max_order=max_order)
    if kind == "zlocal":
        return ZLocalRing(_get(spec, "primes"))
    raise SpecError(f"unknown ring kind {kind!r}")


def build_finite(spec: Any, max_order: int | None = DEFAULT_MAX_ORDER) -> FiniteRing:
    R = build(spec, max_order)
    if not isinstance(R, FiniteRing):
        raise SpecError("a finite ring is required here")
    return R


def load_spec(source: str | Path) -> Any:
    """Read a spec from a path, or parse it directly if it looks like inline JSON."""
    text = str(source)
    try:
        if text.lstrip().startswith(("{", "[")):
            return json.loads(text)
        return json.loads(Path(text).read_text())
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON in {text[:60]!r}: {exc}") from exc
    except OSError as exc:
        raise SpecError(f"cannot read spec {text!r}: {exc}") from exc


def default_corpus() -> list[dict]:
    path = Path(__file__).with_name("data") / "corpus.json"
    return json.loads(path.read_text())
