"""Finite unital rings given by Cayley tables.

A :class:`FiniteRing` stores its addition and multiplication as ``n x n``
integer tables over element indices ``0..n-1``.  Tables are validated once
at construction and frozen afterwards, so rings can be shared freely.

Structured constructors (``zn``, ``direct_product``, ``upper_triangular``,
``matrix_ring``, ``quotient``) attach a codec that converts between element
indices and human-readable literals such as ``"(1,2)"`` or ``"[[1,0],[0,3]]"``.
"""

from __future__ import annotations

import ast
import functools
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence, Union

import numpy as np

DEFAULT_MAX_ORDER = 4096


class RingAxiomError(ValueError):
    """Tables violate a ring axiom; ``witness`` holds the offending indices."""

    def __init__(self, law: str, witness: tuple[int, ...]) -> None:
        self.law = law
        self.witness = witness
        super().__init__(f"{law} fails at {witness}")


class OrderCapError(ValueError):
    pass


class RingMismatchError(TypeError):
    pass


# ---------------------------------------------------------------------------
# literal codecs


def render(value: Any) -> str:
    """Render a nested int/tuple/list value without spaces."""
    if isinstance(value, tuple):
        return "(" + ",".join(render(v) for v in value) + ")"
    if isinstance(value, list):
        return "[" + ",".join(render(v) for v in value) + "]"
    return str(value)


class Codec:
    """Maps element indices to literal values and back."""

    def to_value(self, i: int) -> Any:
        return i

    def from_value(self, v: Any) -> int:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValueError(f"expected an integer index, got {v!r}")
        return v


class ZnCodec(Codec):
    def __init__(self, n: int) -> None:
        self.n = n

    def from_value(self, v: Any) -> int:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValueError(f"expected an integer residue, got {v!r}")
        return v % self.n


class MixedRadixCodec(Codec):
    """Tuples of component indices; the first component is most significant."""

    def __init__(self, radices: Sequence[int]) -> None:
        self.radices = tuple(radices)
        w = [1] * len(self.radices)
        for t in range(len(self.radices) - 2, -1, -1):
            w[t] = w[t + 1] * self.radices[t + 1]
        self.weights = tuple(w)

    def encode(self, digits: Sequence[int]) -> int:
        if len(digits) != len(self.radices):
            raise ValueError(f"expected {len(self.radices)} components, got {len(digits)}")
        for d, r in zip(digits, self.radices):
            if not 0 <= d < r:
                raise ValueError(f"component {d} out of range [0, {r})")
        return sum(d * w for d, w in zip(digits, self.weights))

    def decode(self, i: int) -> tuple[int, ...]:
        return tuple((i // w) % r for w, r in zip(self.weights, self.radices))


class ProductCodec(MixedRadixCodec):
    def __init__(self, factors: Sequence[FiniteRing]) -> None:
        super().__init__([f.order for f in factors])
        self.factors = tuple(factors)

    def to_value(self, i: int) -> Any:
        return tuple(f.codec.to_value(d) for f, d in zip(self.factors, self.decode(i)))

    def from_value(self, v: Any) -> int:
        if not isinstance(v, (tuple, list)) or len(v) != len(self.factors):
            raise ValueError(f"expected a {len(self.factors)}-tuple, got {v!r}")
        return self.encode([f.codec.from_value(c) for f, c in zip(self.factors, v)])


class MatrixCodec(MixedRadixCodec):
    def __init__(self, base: FiniteRing, k: int, positions: Sequence[tuple[int, int]]) -> None:
        super().__init__([base.order] * len(positions))
        self.base = base
        self.k = k
        self.positions = tuple(positions)

    def to_value(self, i: int) -> Any:
        rows = [[self.base.codec.to_value(self.base.zero)] * self.k for _ in range(self.k)]
        for (r, c), d in zip(self.positions, self.decode(i)):
            rows[r][c] = self.base.codec.to_value(d)
        return rows

    def from_value(self, v: Any) -> int:
        k = self.k
        if not isinstance(v, (list, tuple)) or len(v) != k or any(
            not isinstance(row, (list, tuple)) or len(row) != k for row in v
        ):
            raise ValueError(f"expected a {k}x{k} matrix, got {v!r}")
        allowed = set(self.positions)
        for r in range(k):
            for c in range(k):
                if (r, c) not in allowed and self.base.codec.from_value(v[r][c]) != self.base.zero:
                    raise ValueError(f"entry ({r},{c}) must be zero")
        return self.encode([self.base.codec.from_value(v[r][c]) for r, c in self.positions])


class QuotientCodec(Codec):
    """Cosets are written as any base literal; shown by their least representative."""

    def __init__(self, base: FiniteRing, reps: Sequence[int], projection: np.ndarray) -> None:
        self.base = base
        self.reps = tuple(reps)
        self.projection = projection

    def to_value(self, i: int) -> Any:
        return self.base.codec.to_value(self.reps[i])

    def from_value(self, v: Any) -> int:
        return int(self.projection[self.base.codec.from_value(v)])


# ---------------------------------------------------------------------------
# the ring


def _frozen(table: Any) -> np.ndarray:
    arr = np.array(table, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def _check_tables(add: np.ndarray, mul: np.ndarray, zero: int, one: int) -> np.ndarray:
    """Validate the ring axioms and return the negation table."""
    n = add.shape[0] if add.ndim == 2 else 0
    if n == 0 or add.shape != (n, n) or mul.shape != (n, n):
        raise RingAxiomError("tables must be square n x n with n >= 1", (n,))
    for name, t in (("add", add), ("mul", mul)):
        bad = np.argwhere((t < 0) | (t >= n))
        if len(bad):
            raise RingAxiomError(f"{name} entry out of range", tuple(int(x) for x in bad[0]))
    if not (0 <= zero < n and 0 <= one < n):
        raise RingAxiomError("zero/one index out of range", (zero, one))
    idx = np.arange(n)

    def first(mask: np.ndarray) -> tuple[int, ...]:
        return tuple(int(x) for x in np.argwhere(mask)[0])

    bad = add[zero] != idx
    if bad.any():
        raise RingAxiomError("additive identity", (zero, *first(bad)))
    bad = add != add.T
    if bad.any():
        raise RingAxiomError("additive commutativity", first(bad))
    has_neg = add == zero
    if not has_neg.any(axis=1).all():
        raise RingAxiomError("additive inverse", (int(np.argmin(has_neg.any(axis=1))),))
    neg = np.argmax(has_neg, axis=1)
    bad = (mul[one] != idx) | (mul[:, one] != idx)
    if bad.any():
        raise RingAxiomError("multiplicative identity", (one, *first(bad)))
    for a in range(n):
        # (a+b)+c vs a+(b+c) over all b, c
        bad = add[add[a]] != add[a][add]
        if bad.any():
            raise RingAxiomError("additive associativity", (a, *first(bad)))
        bad = mul[mul[a]] != mul[a][mul]
        if bad.any():
            raise RingAxiomError("multiplicative associativity", (a, *first(bad)))
        # a(b+c) = ab + ac
        bad = mul[a][add] != add[mul[a][:, None], mul[a][None, :]]
        if bad.any():
            raise RingAxiomError("left distributivity", (a, *first(bad)))
        # (b+c)a = ba + ca
        bad = mul[:, a][add] != add[mul[:, a][:, None], mul[:, a][None, :]]
        if bad.any():
            raise RingAxiomError("right distributivity", (*first(bad), a))
    return neg


class FiniteRing:
    """A validated finite unital associative ring.

    ``tag`` records how the ring was built (it mirrors the ring-spec JSON)
    and ``name`` is a short display label.  Instances compare by identity.
    """

    def __init__(
        self,
        add: Any,
        mul: Any,
        zero: int,
        one: int,
        *,
        tag: dict | None = None,
        name: str | None = None,
        codec: Codec | None = None,
        max_order: int | None = DEFAULT_MAX_ORDER,
    ) -> None:
        add_t, mul_t = _frozen(add), _frozen(mul)
        n = add_t.shape[0] if add_t.ndim == 2 else 0
        if max_order is not None and n > max_order:
            raise OrderCapError(f"ring order {n} exceeds cap {max_order}")
        self.neg = _frozen(_check_tables(add_t, mul_t, int(zero), int(one)))
        self.add = add_t
        self.mul = mul_t
        self.zero = int(zero)
        self.one = int(one)
        self.order = n
        self.tag = tag if tag is not None else {"kind": "tables", "order": n}
        self.name = name or f"tables[{n}]"
        self.codec = codec or Codec()
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"<FiniteRing {self.name} order={self.order}>"

    # element helpers -------------------------------------------------------

    def index(self, a: int | Element) -> int:
        """Coerce an index or :class:`Element` of this ring to an index."""
        if isinstance(a, Element):
            if a.ring is not self:
                raise RingMismatchError(f"element of {a.ring.name} used in {self.name}")
            return a.index
        a = int(a)
        if not 0 <= a < self.order:
            raise IndexError(f"element index {a} out of range for order {self.order}")
        return a

    def __getitem__(self, i: int) -> Element:
        return Element(self, self.index(i))

    def elements(self) -> list[Element]:
        return [Element(self, i) for i in range(self.order)]

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def power(self, a: int, k: int) -> int:
        r = self.one
        for _ in range(k):
            r = int(self.mul[r, a])
        return r

    def to_value(self, i: int) -> Any:
        return self.codec.to_value(i)

    def format(self, i: int) -> str:
        return render(self.codec.to_value(i))

    def parse(self, literal: str | int) -> int:
        if isinstance(literal, str):
            try:
                value = ast.literal_eval(literal.strip())
            except (ValueError, SyntaxError) as exc:
                raise ValueError(f"cannot parse element literal {literal!r}") from exc
        else:
            value = literal
        i = self.codec.from_value(value)
        if not 0 <= i < self.order:
            raise ValueError(f"element {literal!r} out of range")
        return i

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_commutative(self) -> bool:
        return cached(self, "commutative", lambda: bool((self.mul == self.mul.T).all()))


def cached(R: FiniteRing, key: Any, compute: Callable[[], Any]) -> Any:
    """Memoise a derived quantity on the (immutable) ring."""
    try:
        return R._cache[key]
    except KeyError:
        value = R._cache[key] = compute()
        return value


def ring_cached(fn: Callable) -> Callable:
    """Decorator form of :func:`cached` for ``fn(R, *hashable_args)``."""

    @functools.wraps(fn)
    def wrapper(R: FiniteRing, *args: Any) -> Any:
        return cached(R, (fn.__qualname__, *args), lambda: fn(R, *args))

    return wrapper


@dataclass(frozen=True, eq=True)
class Element:
    """An element of a specific ring; arithmetic refuses to mix rings."""

    ring: FiniteRing
    index: int

    def _other(self, other: Any) -> int:
        if isinstance(other, Element):
            if other.ring is not self.ring:
                raise RingMismatchError(
                    f"cannot combine elements of {self.ring.name} and {other.ring.name}"
                )
            return other.index
        return self.ring.index(other)

    def __add__(self, other: Any) -> Element:
        return Element(self.ring, int(self.ring.add[self.index, self._other(other)]))

    def __sub__(self, other: Any) -> Element:
        return Element(self.ring, self.ring.sub(self.index, self._other(other)))

    def __mul__(self, other: Any) -> Element:
        return Element(self.ring, int(self.ring.mul[self.index, self._other(other)]))

    def __neg__(self) -> Element:
        return Element(self.ring, int(self.ring.neg[self.index]))

    def __pow__(self, k: int) -> Element:
        return Element(self.ring, self.ring.power(self.index, k))

    def __int__(self) -> int:
        return self.index

    def __index__(self) -> int:
        return self.index

    def __str__(self) -> str:
        return self.ring.format(self.index)

    def __repr__(self) -> str:
        return f"{self.ring.name}[{self}]"


# ---------------------------------------------------------------------------
# constructors


def _cap(order: int, max_order: int | None) -> None:
    if max_order is not None and order > max_order:
        raise OrderCapError(f"ring order {order} exceeds cap {max_order}")


def from_tables(
    add: Any, mul: Any, zero: int, one: int, *, max_order: int | None = DEFAULT_MAX_ORDER
) -> FiniteRing:
    """Validate raw tables; raises :class:`RingAxiomError` naming the first broken law."""
    n = len(add)
    tag = {"kind": "tables", "order": n, "zero": int(zero), "one": int(one),
           "add": [list(map(int, row)) for row in add],
           "mul": [list(map(int, row)) for row in mul]}
    return FiniteRing(add, mul, zero, one, tag=tag, max_order=max_order)


def zn(n: int, *, max_order: int | None = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Integers modulo ``n``; ``zn(1)`` is the zero ring."""
    if n < 1:
        raise ValueError("zn requires n >= 1")
    _cap(n, max_order)
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FiniteRing(add, mul, 0, 1 % n, tag={"kind": "zn", "n": n}, name=f"Z{n}",
                      codec=ZnCodec(n), max_order=max_order)


def direct_product(
    factors: Sequence[FiniteRing], *, max_order: int | None = DEFAULT_MAX_ORDER
) -> FiniteRing:
    """Componentwise ring; index = mixed-radix code of the component tuple."""
    factors = list(factors)
    if not factors:
        raise ValueError("direct_product needs at least one factor")
    codec = ProductCodec(factors)
    order = int(np.prod([f.order for f in factors]))
    _cap(order, max_order)
    digits = np.array([codec.decode(i) for i in range(order)], dtype=np.int64).reshape(order, len(factors))
    w = np.array(codec.weights, dtype=np.int64)
    add = np.zeros((order, order), dtype=np.int64)
    mul = np.zeros((order, order), dtype=np.int64)
    for t, f in enumerate(factors):
        col = digits[:, t]
        add += f.add[col[:, None], col[None, :]] * w[t]
        mul += f.mul[col[:, None], col[None, :]] * w[t]
    zero = codec.encode([f.zero for f in factors])
    one = codec.encode([f.one for f in factors])
    tag = {"kind": "product", "factors": [f.tag for f in factors],
           "encoding": "mixed radix, first factor most significant"}
    name = " x ".join(f.name for f in factors)
    return FiniteRing(add, mul, zero, one, tag=tag, name=name, codec=codec, max_order=max_order)


def _matrix_like(
    base: FiniteRing, k: int, positions: list[tuple[int, int]], tag: dict, name: str,
    max_order: int | None,
) -> FiniteRing:
    if k < 1:
        raise ValueError("matrix size must be >= 1")
    q, m = base.order, len(positions)
    order = q**m
    _cap(order, max_order)
    codec = MatrixCodec(base, k, positions)
    digits = np.array([codec.decode(i) for i in range(order)], dtype=np.int64).reshape(order, m)
    w = np.array(codec.weights, dtype=np.int64)
    pos = {p: t for t, p in enumerate(positions)}
    # products contributing to entry (i, j): pairs of slots (i, l), (l, j)
    terms = {
        (i, j): [(pos[(i, l)], pos[(l, j)]) for l in range(k) if (i, l) in pos and (l, j) in pos]
        for (i, j) in positions
    }
    add = np.empty((order, order), dtype=np.int64)
    mul = np.empty((order, order), dtype=np.int64)
    for a in range(order):
        da = digits[a]
        add[a] = base.add[da[None, :], digits] @ w
        row = np.zeros(order, dtype=np.int64)
        for t, (i, j) in enumerate(positions):
            acc = np.full(order, base.zero, dtype=np.int64)
            for sa, sb in terms[(i, j)]:
                acc = base.add[acc, base.mul[da[sa], digits[:, sb]]]
            row += acc * w[t]
        mul[a] = row
    zero = codec.encode([base.zero] * m)
    one = codec.encode([base.one if i == j else base.zero for i, j in positions])
    return FiniteRing(add, mul, zero, one, tag=tag, name=name, codec=codec, max_order=max_order)


def upper_triangular(
    base: FiniteRing, k: int, *, max_order: int | None = DEFAULT_MAX_ORDER
) -> FiniteRing:
    """``k x k`` upper-triangular matrices over ``base``; entries row-major."""
    positions = [(i, j) for i in range(k) for j in range(k) if i <= j]
    tag = {"kind": "upper_triangular", "base": base.tag, "size": k}
    return _matrix_like(base, k, positions, tag, f"T{k}({base.name})", max_order)


def matrix_ring(base: FiniteRing, k: int, *, max_order: int | None = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Full ``k x k`` matrix ring over ``base``; entries row-major."""
    positions = [(i, j) for i in range(k) for j in range(k)]
    tag = {"kind": "matrix", "base": base.tag, "size": k}
    return _matrix_like(base, k, positions, tag, f"M{k}({base.name})", max_order)


def quotient(R: FiniteRing, ideal: Any) -> tuple[FiniteRing, np.ndarray]:
    """Quotient by a two-sided ideal.

    Cosets are represented by their least element index and numbered in
    increasing order of that representative.  Returns the quotient ring and
    the projection as an index array; the projection is checked to be a
    surjective homomorphism on all pairs.
    """
    from .ideals import Ideal, TWO_SIDED, is_ideal

    members = ideal.members if isinstance(ideal, Ideal) else tuple(sorted(set(map(int, ideal))))
    if isinstance(ideal, Ideal) and ideal.ring is not R:
        raise RingMismatchError("ideal belongs to a different ring")
    if not is_ideal(R, members, TWO_SIDED):
        raise ValueError("quotient requires a two-sided ideal")
    mem = np.array(members, dtype=np.int64)
    rep_of = R.add[:, mem].min(axis=1)
    reps = np.unique(rep_of)
    new_index = np.full(R.order, -1, dtype=np.int64)
    new_index[reps] = np.arange(len(reps))
    proj = new_index[rep_of]
    add = proj[R.add[reps[:, None], reps[None, :]]]
    mul = proj[R.mul[reps[:, None], reps[None, :]]]
    if not ((proj[R.add] == add[proj[:, None], proj[None, :]]).all()
            and (proj[R.mul] == mul[proj[:, None], proj[None, :]]).all()):
        raise ValueError("projection is not a ring homomorphism")
    proj.setflags(write=False)
    gens = [R.format(i) for i in members]
    tag = {"kind": "quotient", "base": R.tag, "ideal_generators": gens}
    Q = FiniteRing(add, mul, int(proj[R.zero]), int(proj[R.one]), tag=tag,
                   name=f"{R.name}/I{len(members)}",
                   codec=QuotientCodec(R, [int(r) for r in reps], proj), max_order=None)
    return Q, proj


# ---------------------------------------------------------------------------
# element-level primitives

Index = Union[int, Element]


@ring_cached
def unit_inverses(R: FiniteRing) -> dict[int, int]:
    """Map each unit to its two-sided inverse."""
    eq = R.mul == R.one
    both = eq & eq.T
    return {int(a): int(np.argmax(both[a])) for a in np.flatnonzero(both.any(axis=1))}


def units(R: FiniteRing) -> frozenset[int]:
    return cached(R, "units", lambda: frozenset(unit_inverses(R)))


def unit_mask(R: FiniteRing) -> np.ndarray:
    def compute() -> np.ndarray:
        m = np.zeros(R.order, dtype=bool)
        m[list(units(R))] = True
        m.setflags(write=False)
        return m

    return cached(R, "unit_mask", compute)


def inverse(R: FiniteRing, a: Index) -> int:
    a = R.index(a)
    try:
        return unit_inverses(R)[a]
    except KeyError:
        raise ValueError(f"{R.format(a)} is not a unit in {R.name}") from None


def full_mask(R: FiniteRing) -> np.ndarray:
    """Boolean mask of full elements (those generating R as a two-sided ideal)."""
    from .ideals import TWO_SIDED, principal

    def compute() -> np.ndarray:
        m = np.array([len(principal(R, a, TWO_SIDED)) == R.order for a in range(R.order)])
        m.setflags(write=False)
        return m

    return cached(R, "full_mask", compute)


def is_full(R: FiniteRing, u: Index) -> bool:
    return bool(full_mask(R)[R.index(u)])


def idempotents(R: FiniteRing) -> frozenset[int]:
    return cached(
        R, "idempotents",
        lambda: frozenset(int(e) for e in np.flatnonzero(np.diag(R.mul) == np.arange(R.order))),
    )


def is_central(R: FiniteRing, a: Index) -> bool:
    a = R.index(a)
    return bool((R.mul[a] == R.mul[:, a]).all())


def is_abelian(R: FiniteRing) -> bool:
    """Every idempotent commutes with every element."""
    return cached(R, "abelian", lambda: all(is_central(R, e) for e in sorted(idempotents(R))))


def element_set(R: FiniteRing, items: Iterable[int]) -> frozenset[int]:
    return frozenset(R.index(i) for i in items)
