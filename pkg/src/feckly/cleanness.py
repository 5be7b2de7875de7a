"""Clean and feckly clean decompositions, related ring predicates, and the
explicit conversions used for commutative rings.

A *feckly* decomposition of ``a`` is ``a = e + u`` with ``u`` full and
``e*r*(1-e)`` in J(R) for every ``r``; ``e`` need not be idempotent.  Elements
``e`` with that radical condition are called *admissible* below.

All searches scan candidates in ascending index order and return the first
hit, so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .ideals import (
    LEFT,
    RIGHT,
    TWO_SIDED,
    is_ideal,
    jacobson_mask,
    maximal_ideals,
    maximal_left_ideals,
    maximal_right_ideals,
    prime_ideals,
)
from .ring import (
    FiniteRing,
    Index,
    cached,
    full_mask,
    idempotents,
    inverse,
    is_central,
    ring_cached,
    unit_mask,
)
from .spectra import e_set, ring_space


class PreconditionError(ValueError):
    """An input does not have the form an operation requires."""


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class CleanWitness:
    ring: FiniteRing = field(repr=False, compare=False)
    a: int
    e: int
    u: int

    def to_json(self) -> dict:
        f = self.ring.format
        return {"a": f(self.a), "e": f(self.e), "u": f(self.u)}


@dataclass(frozen=True)
class FecklyWitness:
    ring: FiniteRing = field(repr=False, compare=False)
    a: int
    e: int
    u: int

    def to_json(self) -> dict:
        f = self.ring.format
        return {"a": f(self.a), "e": f(self.e), "u": f(self.u)}


def admissible_mask(R: FiniteRing) -> np.ndarray:
    """Mask of e with e*R*(1-e) contained in J(R)."""

    def compute() -> np.ndarray:
        J = jacobson_mask(R)
        one_minus = R.add[R.one, R.neg]
        m = J[R.mul[R.mul, one_minus[:, None]]].all(axis=1)  # [e, r] -> (e r)(1 - e)
        m.setflags(write=False)
        return m

    return cached(R, "admissible", compute)


def offending_multiplier(R: FiniteRing, e: Index) -> Optional[int]:
    """Least r with e*r*(1-e) outside J(R), or None."""
    e = R.index(e)
    J = jacobson_mask(R)
    vals = R.mul[R.mul[e], R.sub(R.one, e)]
    bad = np.flatnonzero(~J[vals])
    return int(bad[0]) if len(bad) else None


def is_admissible(R: FiniteRing, e: Index) -> bool:
    return bool(admissible_mask(R)[R.index(e)])


def clean_witness(R: FiniteRing, a: Index) -> Optional[CleanWitness]:
    a = R.index(a)
    U = unit_mask(R)
    for e in sorted(idempotents(R)):
        u = R.sub(a, e)
        if U[u]:
            return CleanWitness(R, a, e, u)
    return None


def feckly_witness(R: FiniteRing, a: Index) -> Optional[FecklyWitness]:
    a = R.index(a)
    full = full_mask(R)
    for e in np.flatnonzero(admissible_mask(R)):
        u = R.sub(a, int(e))
        if full[u]:
            return FecklyWitness(R, a, int(e), u)
    return None


def is_clean_element(R: FiniteRing, a: Index) -> bool:
    return clean_witness(R, a) is not None


def is_feckly_clean_element(R: FiniteRing, a: Index) -> bool:
    return feckly_witness(R, a) is not None


def is_clean_ring(R: FiniteRing) -> bool:
    return cached(R, "clean", lambda: all(is_clean_element(R, a) for a in range(R.order)))


def is_feckly_clean_ring(R: FiniteRing) -> bool:
    return cached(R, "feckly", lambda: all(is_feckly_clean_element(R, a) for a in range(R.order)))


# ---------------------------------------------------------------------------
# independent re-validation (plain loops over the tables, no cached masks)


class IndependentChecker:
    """Recomputes units, J(R) and fullness from the raw tables with plain loops."""

    def __init__(self, R: FiniteRing) -> None:
        n, one, zero = R.order, R.one, R.zero
        self.R = R
        self.add = add = R.add.tolist()
        self.mul = mul = R.mul.tolist()
        self.neg = neg = [next(y for y in range(n) if add[x][y] == zero) for x in range(n)]
        self.units = {
            x for x in range(n) if any(mul[x][y] == one and mul[y][x] == one for y in range(n))
        }
        self.radical = {
            x for x in range(n) if all(add[one][neg[mul[r][x]]] in self.units for r in range(n))
        }

    def is_full(self, u: int) -> bool:
        n, add, mul = self.R.order, self.add, self.mul
        gens = {mul[mul[r][u]][s] for r in range(n) for s in range(n)}
        span, frontier = {self.R.zero}, [self.R.zero]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = add[x][g]
                if y not in span:
                    span.add(y)
                    frontier.append(y)
        return self.R.one in span

    def check_clean(self, w: CleanWitness) -> None:
        if self.add[w.e][w.u] != w.a:
            raise AssertionError(f"{w}: a != e + u")
        if self.mul[w.e][w.e] != w.e:
            raise AssertionError(f"{w}: e is not idempotent")
        if w.u not in self.units:
            raise AssertionError(f"{w}: u is not a unit")

    def check_feckly(self, w: FecklyWitness) -> None:
        add, mul, neg = self.add, self.mul, self.neg
        if add[w.e][w.u] != w.a:
            raise AssertionError(f"{w}: a != e + u")
        if not self.is_full(w.u):
            raise AssertionError(f"{w}: u is not full")
        ome = add[self.R.one][neg[w.e]]
        for r in range(self.R.order):
            if mul[mul[w.e][r]][ome] not in self.radical:
                raise AssertionError(f"{w}: e*r*(1-e) outside J(R) for r={r}")
        if add[mul[w.e][w.e]][neg[w.e]] not in self.radical:
            raise AssertionError(f"{w}: e^2 - e outside J(R)")


def checker(R: FiniteRing) -> IndependentChecker:
    return cached(R, "independent_checker", lambda: IndependentChecker(R))


def validate_clean(R: FiniteRing, w: CleanWitness) -> None:
    checker(R).check_clean(w)


def validate_feckly(R: FiniteRing, w: FecklyWitness) -> None:
    checker(R).check_feckly(w)


# ---------------------------------------------------------------------------
# joining admissible elements


def join_admissible(R: FiniteRing, e: Index, f: Index) -> int:
    """Return ``g = e + f - e*f``.

    With e, f admissible, g is admissible and E(e) u E(f) = E(g) on Max(R);
    both facts are checked before returning.
    """
    e, f = R.index(e), R.index(f)
    for name, x in (("e", e), ("f", f)):
        r = offending_multiplier(R, x)
        if r is not None:
            raise PreconditionError(f"{name}={R.format(x)} not admissible: offending r={R.format(r)}")
    g = R.sub(int(R.add[e, f]), int(R.mul[e, f]))
    space = ring_space(R, "max")
    if e_set(space, e) | e_set(space, f) != e_set(space, g):
        raise AssertionError(f"E(e) u E(f) != E(g) for e={e}, f={f}")
    if not is_admissible(R, g):
        raise AssertionError(f"g={g} not admissible")
    return g


# ---------------------------------------------------------------------------
# ring predicates


def is_pm(R: FiniteRing) -> bool:
    """Each prime ideal lies in exactly one maximal ideal."""
    mx = maximal_ideals(R) if not R.is_trivial else []
    return all(sum(P <= M for M in mx) == 1 for P in prime_ideals(R))


def is_quasi_duo(R: FiniteRing, side: str = RIGHT) -> bool:
    """Every maximal one-sided ideal of the given side is two-sided."""
    if side == RIGHT:
        mx = maximal_right_ideals(R) if not R.is_trivial else []
    elif side == LEFT:
        mx = maximal_left_ideals(R) if not R.is_trivial else []
    else:
        raise ValueError("side must be 'right' or 'left'")
    return all(is_ideal(R, M.members, TWO_SIDED) for M in mx)


def right_multiples(R: FiniteRing, a: int) -> np.ndarray:
    """Mask of aR."""
    m = np.zeros(R.order, dtype=bool)
    m[R.mul[a]] = True
    return m


def exchange_idempotent(R: FiniteRing, a: Index) -> Optional[int]:
    """Least idempotent e with e in aR and 1 - e in (1 - a)R."""
    a = R.index(a)
    aR = right_multiples(R, a)
    baR = right_multiples(R, R.sub(R.one, a))
    for e in sorted(idempotents(R)):
        if aR[e] and baR[R.sub(R.one, e)]:
            return e
    return None


def is_exchange(R: FiniteRing) -> bool:
    return cached(R, "exchange", lambda: all(exchange_idempotent(R, a) is not None for a in range(R.order)))


def sandwich(R: FiniteRing, x: int) -> frozenset[int]:
    """The set xRx."""
    return frozenset(int(v) for v in R.mul[R.mul[x], x])


def pi_regular_index(R: FiniteRing, a: Index) -> Optional[int]:
    """Least n <= |R| with a^n in a^n R a^n."""
    a = R.index(a)
    p = a
    for n in range(1, R.order + 1):
        if p in sandwich(R, p):
            return n
        p = int(R.mul[p, a])
    return None


def is_pi_regular(R: FiniteRing) -> bool:
    return cached(R, "pi_regular", lambda: all(pi_regular_index(R, a) is not None for a in range(R.order)))


def gsr_exponent(R: FiniteRing, x: Index) -> Optional[int]:
    """Least n in [2, |R|+1] with xRx == x^n R x^n."""
    x = R.index(x)
    target = sandwich(R, x)
    p = int(R.mul[x, x])
    for n in range(2, R.order + 2):
        if sandwich(R, p) == target:
            return n
        p = int(R.mul[p, x])
    return None


def is_gsr(R: FiniteRing) -> bool:
    return cached(R, "gsr", lambda: all(gsr_exponent(R, x) is not None for x in range(R.order)))


def abelian_clean_implies_feckly(R: FiniteRing, a: Index) -> Optional[bool]:
    """None when a's clean witness has a non-central idempotent (no claim)."""
    w = clean_witness(R, a)
    if w is None or not is_central(R, w.e):
        return None
    return is_feckly_clean_element(R, a)


# ---------------------------------------------------------------------------
# commutative conversions


def _require_commutative(R: FiniteRing) -> None:
    if not R.is_commutative:
        raise PreconditionError(f"{R.name} is not commutative")


def _in_radical(R: FiniteRing, x: int) -> bool:
    return bool(jacobson_mask(R)[x])


def _e_minus_e2(R: FiniteRing, e: int) -> int:
    return R.sub(e, int(R.mul[e, e]))


@dataclass(frozen=True)
class ChainStep:
    form: int
    data: dict
    exact: bool = True


def form2_to_form3(R: FiniteRing, a: Index, f: Index, u: Index) -> tuple[int, int]:
    """From a = f + u (u a unit, f - f^2 in J) build e, s with a - e = (a - a^2) s.

    ``e = (1 - f) + (f - f^2) u^-1`` and ``s = -u^-1``.
    """
    _require_commutative(R)
    a, f, u = R.index(a), R.index(f), R.index(u)
    if R.add[f, u] != a:
        raise PreconditionError("form 2 check failed: a != f + u")
    if not unit_mask(R)[u]:
        raise PreconditionError("form 2 check failed: u is not a unit")
    if not _in_radical(R, _e_minus_e2(R, f)):
        raise PreconditionError("form 2 check failed: f - f^2 not in J(R)")
    uinv = inverse(R, u)
    e = int(R.add[R.sub(R.one, f), R.mul[_e_minus_e2(R, f), uinv]])
    s = int(R.neg[uinv])
    a_minus_a2 = R.sub(a, int(R.mul[a, a]))
    if R.sub(a, e) != R.mul[a_minus_a2, s]:
        raise AssertionError("a - e != (a - a^2)(-u^-1)")
    if not _in_radical(R, _e_minus_e2(R, e)):
        raise AssertionError("e - e^2 not in J(R)")
    return e, s


def form3_to_form4(R: FiniteRing, a: Index, e: Index, s: Index) -> tuple[int, int]:
    """From a - e = (a - a^2) s return (s4, x4) with e = a s4 and 1 - e = (1 - a) x4."""
    _require_commutative(R)
    a, e, s = R.index(a), R.index(e), R.index(s)
    one_a = R.sub(R.one, a)
    if R.sub(a, e) != R.mul[R.mul[a, one_a], s]:
        raise PreconditionError("form 3 check failed: a - e != (a - a^2) s")
    if not _in_radical(R, _e_minus_e2(R, e)):
        raise PreconditionError("form 3 check failed: e - e^2 not in J(R)")
    s4 = R.sub(R.one, int(R.mul[one_a, s]))
    x4 = int(R.add[R.one, R.mul[a, s]])
    if R.mul[a, s4] != e or R.mul[one_a, x4] != R.sub(R.one, e):
        raise AssertionError("form 4 identities fail")
    return s4, x4


def form4_to_form1(R: FiniteRing, a: Index, e: Index, s: Index, x: Index) -> tuple[int, int, bool]:
    """From e = a s, 1 - e = (1 - a) x return (f, v, exact) with a = f + v, v a unit.

    ``f = 1 - e`` and ``v = a - f``; with s <- s e and x <- x (1 - e) the
    product (a - f)(s - x) equals 1 when e is idempotent and lies in 1 + J(R)
    in general, which still makes v a unit.  ``exact`` reports which case held.
    """
    _require_commutative(R)
    a, e, s, x = R.index(a), R.index(e), R.index(s), R.index(x)
    if R.mul[a, s] != e or R.mul[R.sub(R.one, a), x] != R.sub(R.one, e):
        raise PreconditionError("form 4 check failed: e != a s or 1 - e != (1 - a) x")
    if not _in_radical(R, _e_minus_e2(R, e)):
        raise PreconditionError("form 4 check failed: e - e^2 not in J(R)")
    f = R.sub(R.one, e)
    s2 = int(R.mul[s, e])
    x2 = int(R.mul[x, f])
    v = R.sub(a, f)
    prod = int(R.mul[v, R.sub(s2, x2)])
    if not _in_radical(R, R.sub(prod, R.one)):
        raise AssertionError("(a - f)(s - x) not in 1 + J(R)")
    if not unit_mask(R)[v]:
        raise AssertionError("a - f is not a unit")
    return f, v, prod == R.one


def unit_form_chain(R: FiniteRing, a: Index) -> list[ChainStep]:
    """Run form 2 -> 3 -> 4 -> 1 starting from the first feckly witness of ``a``."""
    _require_commutative(R)
    a = R.index(a)
    w = feckly_witness(R, a)
    if w is None:
        raise PreconditionError(f"no feckly witness for {R.format(a)}")
    e3, s3 = form2_to_form3(R, a, w.e, w.u)
    s4, x4 = form3_to_form4(R, a, e3, s3)
    f1, v1, exact = form4_to_form1(R, a, e3, s4, x4)
    return [
        ChainStep(2, {"f": w.e, "u": w.u}),
        ChainStep(3, {"e": e3, "s": s3}),
        ChainStep(4, {"e": e3, "s": s4, "x": x4}),
        ChainStep(1, {"f": f1, "u": v1}, exact),
    ]


def complement_multipliers(R: FiniteRing, a: Index, b: Index) -> tuple[int, int]:
    """For a + b = 1 return r, s with (1 + a r)(1 + b s) in J(R).

    From the feckly witness a = e + u: r = (e - a)^-1, s = -(e - a)^-1.
    """
    _require_commutative(R)
    a, b = R.index(a), R.index(b)
    if R.add[a, b] != R.one:
        raise PreconditionError("a + b != 1")
    w = feckly_witness(R, a)
    if w is None:
        raise PreconditionError(f"no feckly witness for {R.format(a)}")
    r = inverse(R, R.sub(w.e, a))
    s = int(R.neg[r])
    prod = int(R.mul[R.add[R.one, R.mul[a, r]], R.add[R.one, R.mul[b, s]]])
    if not _in_radical(R, prod):
        raise AssertionError("(1 + a r)(1 + b s) not in J(R)")
    return r, s


def unit_inverse_forms_hold(R: FiniteRing, a: int, e: int, u: int) -> bool:
    """e = a u e,  1 - e = (1 - a)(-u)(1 - e),  e - e^2 in J(R)."""
    ome = R.sub(R.one, e)
    return (
        R.mul[R.mul[a, u], e] == e
        and R.mul[R.mul[R.sub(R.one, a), R.neg[u]], ome] == ome
        and _in_radical(R, _e_minus_e2(R, e))
    )


def unit_inverse_forms(R: FiniteRing, a: Index) -> tuple[int, int]:
    """Return (e, u) with e = a u e, 1 - e = (1 - a)(-u)(1 - e), e - e^2 in J.

    Built from a feckly decomposition a = f + v as e = 1 - f, u = v^-1.  The
    identities are exact only when f(1 - f) = 0, so decompositions are
    scanned in ascending f until one qualifies.
    """
    _require_commutative(R)
    a = R.index(a)
    U = unit_mask(R)
    for f in np.flatnonzero(admissible_mask(R)):
        f = int(f)
        v = R.sub(a, f)
        if not U[v]:
            continue
        e, u = R.sub(R.one, f), inverse(R, v)
        if unit_inverse_forms_hold(R, a, e, u):
            return e, u
    raise PreconditionError(f"no decomposition of {R.format(a)} gives exact forms")


@ring_cached
def radical_pair_table(R: FiniteRing) -> np.ndarray:
    """[x, y] true iff x R y is contained in J(R)."""
    J = jacobson_mask(R)
    # (x r) y over all x, r, y
    return J[R.mul[R.mul[:, :, None], np.arange(R.order)[None, None, :]]].all(axis=1)


def affine_multiples(R: FiniteRing, a: int) -> np.ndarray:
    """Element array of {1 + a r : r in R}."""
    return np.unique(R.add[R.one, R.mul[a]])

