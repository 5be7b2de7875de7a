"""Ideals of finite rings as bitmask-backed sets.

Every ideal is the additive span of a set of products, so all closures here
reduce to :func:`additive_span`.  Whole lattices are enumerated as the
join-closure of principal ideals.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .ring import FiniteRing, Index, RingMismatchError, cached, ring_cached, unit_mask

TWO_SIDED = "two-sided"
RIGHT = "right"
LEFT = "left"
SIDES = (TWO_SIDED, RIGHT, LEFT)

DEFAULT_LATTICE_CAP = 100_000


class LatticeCapError(RuntimeError):
    pass


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def bool_to_mask(b: np.ndarray) -> int:
    return int.from_bytes(np.packbits(b, bitorder="little").tobytes(), "little")


def mask_to_bool(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


@dataclass(frozen=True)
class Ideal:
    """An ideal of ``ring`` stored as a bitmask over element indices."""

    ring: FiniteRing = field(repr=False, compare=False)
    mask: int
    side: str = TWO_SIDED

    def __post_init__(self) -> None:
        if self.side not in SIDES:
            raise ValueError(f"unknown sidedness {self.side!r}")

    @property
    def members(self) -> tuple[int, ...]:
        m, out, i = self.mask, [], 0
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return tuple(out)

    @property
    def array(self) -> np.ndarray:
        return mask_to_bool(self.mask, self.ring.order)

    def __contains__(self, a: Index) -> bool:
        return bool(self.mask >> self.ring.index(a) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __le__(self, other: Ideal) -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: Ideal) -> bool:
        return self <= other and self.mask != other.mask

    @property
    def is_proper(self) -> bool:
        return len(self) < self.ring.order

    def sort_key(self) -> tuple:
        return (len(self), self.members)

    def literals(self) -> list[str]:
        return [self.ring.format(i) for i in self.members]


def additive_span(R: FiniteRing, gens: Iterable[int]) -> np.ndarray:
    """Boolean mask of the additive subgroup generated by ``gens``."""
    H = np.zeros(R.order, dtype=bool)
    H[R.zero] = True
    members = np.array([R.zero], dtype=np.int64)
    for g in sorted(set(int(x) for x in gens)):
        if H[g]:
            continue
        cyc, x = [R.zero], g
        while x != R.zero:
            cyc.append(x)
            x = int(R.add[x, g])
        H[R.add[np.ix_(members, np.array(cyc))].ravel()] = True
        members = np.flatnonzero(H)
    return H


def _products(R: FiniteRing, seed: np.ndarray, side: str) -> np.ndarray:
    if side == RIGHT:
        return R.mul[seed].ravel()
    if side == LEFT:
        return R.mul[:, seed].ravel()
    left = np.unique(R.mul[:, seed].ravel())
    return R.mul[left].ravel()


def closure(R: FiniteRing, seed: Iterable[int], side: str = TWO_SIDED) -> Ideal:
    """Smallest ideal of the given sidedness containing ``seed``."""
    seed = np.array(sorted({R.index(s) for s in seed}) or [R.zero], dtype=np.int64)
    return Ideal(R, bool_to_mask(additive_span(R, np.unique(_products(R, seed, side)))), side)


@ring_cached
def _principal(R: FiniteRing, a: int, side: str) -> Ideal:
    return closure(R, [a], side)


def principal(R: FiniteRing, a: Index, side: str = TWO_SIDED) -> Ideal:
    """``RaR``, ``aR`` or ``Ra`` depending on ``side``."""
    return _principal(R, R.index(a), side)


def _same(I: Ideal, J: Ideal) -> None:
    if I.ring is not J.ring:
        raise RingMismatchError("ideals belong to different rings")
    if I.side != J.side:
        raise ValueError(f"sidedness mismatch: {I.side} vs {J.side}")


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same(I, J)
    R = I.ring
    s = R.add[np.ix_(np.array(I.members), np.array(J.members))].ravel()
    return Ideal(R, mask_of(np.unique(s)), I.side)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    """Additive span of all products ``i*j``; two-sided ideals only."""
    _same(I, J)
    if I.side != TWO_SIDED:
        raise ValueError("ideal product is defined here for two-sided ideals only")
    R = I.ring
    prods = R.mul[np.ix_(np.array(I.members), np.array(J.members))].ravel()
    return Ideal(R, bool_to_mask(additive_span(R, np.unique(prods))), TWO_SIDED)


def is_ideal(R: FiniteRing, members: Sequence[int], side: str = TWO_SIDED) -> bool:
    """Check the ideal axioms for an arbitrary subset."""
    inside = np.zeros(R.order, dtype=bool)
    inside[list(members)] = True
    mem = np.flatnonzero(inside)
    if not inside[R.zero] or not inside[R.add[np.ix_(mem, mem)]].all():
        return False
    if not inside[R.neg[mem]].all():
        return False
    if side in (TWO_SIDED, RIGHT) and not inside[R.mul[mem]].all():
        return False
    if side in (TWO_SIDED, LEFT) and not inside[R.mul[:, mem]].all():
        return False
    return True


def make_ideal(R: FiniteRing, members: Iterable[int], side: str = TWO_SIDED) -> Ideal:
    members = sorted({R.index(m) for m in members})
    if not is_ideal(R, members, side):
        raise ValueError(f"{members} is not a {side} ideal of {R.name}")
    return Ideal(R, mask_of(members), side)


def zero_ideal(R: FiniteRing, side: str = TWO_SIDED) -> Ideal:
    return Ideal(R, 1 << R.zero, side)


def whole(R: FiniteRing, side: str = TWO_SIDED) -> Ideal:
    return Ideal(R, (1 << R.order) - 1, side)


@dataclass(frozen=True)
class IdealLattice:
    """All ideals of one sidedness, sorted by (size, members)."""

    ring: FiniteRing = field(repr=False)
    side: str
    ideals: tuple[Ideal, ...]

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(i, j)``: ideal i is maximal below ideal j."""
        out = []
        for j, J in enumerate(self.ideals):
            below = [i for i, I in enumerate(self.ideals) if I < J]
            for i in below:
                if not any(self.ideals[i] < self.ideals[k] for k in below if k != i):
                    out.append((i, j))
        return out


def all_ideals(R: FiniteRing, side: str = TWO_SIDED, cap: int = DEFAULT_LATTICE_CAP) -> IdealLattice:
    """Enumerate every ideal as a join of principal ideals (worklist closure)."""
    key = ("all_ideals", side)
    if key in R._cache:
        return R._cache[key]
    principals = sorted({principal(R, a, side).mask for a in range(R.order)})
    arrays = {p: np.array(Ideal(R, p, side).members) for p in principals}
    start = 1 << R.zero
    seen = {start}
    stack = [start]
    while stack:
        m = stack.pop()
        I = np.array(Ideal(R, m, side).members)
        for p in principals:
            if p & ~m == 0:
                continue
            s = mask_of(np.unique(R.add[np.ix_(I, arrays[p])]))
            if s not in seen:
                seen.add(s)
                if len(seen) > cap:
                    raise LatticeCapError(f"{side} ideal lattice of {R.name} exceeds {cap} ideals")
                stack.append(s)
    ideals = sorted((Ideal(R, m, side) for m in seen), key=Ideal.sort_key)
    return cached(R, key, lambda: IdealLattice(R, side, tuple(ideals)))


def _maximal(R: FiniteRing, side: str) -> list[Ideal]:
    proper = [I for I in all_ideals(R, side) if I.is_proper]
    return [I for I in proper if not any(I < K for K in proper)]


def maximal_ideals(R: FiniteRing) -> list[Ideal]:
    """Maximal two-sided ideals; the zero ring has none (a warning is issued)."""
    if R.is_trivial:
        warnings.warn(f"{R.name} is the zero ring and has no maximal ideals", stacklevel=2)
        return []
    return cached(R, "max", lambda: _maximal(R, TWO_SIDED))


def maximal_right_ideals(R: FiniteRing) -> list[Ideal]:
    if R.is_trivial:
        warnings.warn(f"{R.name} is the zero ring and has no maximal right ideals", stacklevel=2)
        return []
    return cached(R, "max_right", lambda: _maximal(R, RIGHT))


def maximal_left_ideals(R: FiniteRing) -> list[Ideal]:
    if R.is_trivial:
        warnings.warn(f"{R.name} is the zero ring and has no maximal left ideals", stacklevel=2)
        return []
    return cached(R, "max_left", lambda: _maximal(R, LEFT))


def jacobson_mask(R: FiniteRing) -> np.ndarray:
    """x is in J(R) iff 1 - r*x is a (two-sided) unit for every r."""

    def compute() -> np.ndarray:
        U = unit_mask(R)
        one_minus = R.add[R.one, R.neg]  # 1 - y for every y
        m = U[one_minus[R.mul]].all(axis=0)  # column x: all r of 1 - r*x
        m.setflags(write=False)
        return m

    return cached(R, "jacobson_mask", compute)


def jacobson_radical(R: FiniteRing) -> Ideal:
    return Ideal(R, bool_to_mask(jacobson_mask(R)), TWO_SIDED)


def is_prime(R: FiniteRing, P: Ideal) -> bool:
    """For all a, b outside P some a*r*b lies outside P."""
    if P.ring is not R:
        raise RingMismatchError("ideal belongs to a different ring")
    if P.side != TWO_SIDED:
        raise ValueError("primeness is checked for two-sided ideals only")
    if not P.is_proper:
        raise ValueError("the whole ring is not a prime ideal")
    inside = P.array
    out = np.flatnonzero(~inside)
    for a in out:
        arb = R.mul[np.ix_(R.mul[a], out)]  # [r, b] = (a r) b
        if (inside[arb]).all(axis=0).any():
            return False
    return True


def prime_ideals(R: FiniteRing) -> list[Ideal]:
    return cached(
        R, "primes", lambda: [P for P in all_ideals(R) if P.is_proper and is_prime(R, P)]
    )


def j_spec_points(R: FiniteRing) -> list[Ideal]:
    """Prime ideals containing the Jacobson radical."""
    J = jacobson_radical(R)
    return cached(R, "jspec", lambda: [P for P in prime_ideals(R) if J <= P])


def intersection(R: FiniteRing, ideals: Sequence[Ideal], side: str = TWO_SIDED) -> Ideal:
    m = (1 << R.order) - 1
    for I in ideals:
        m &= I.mask
    return Ideal(R, m, side)
