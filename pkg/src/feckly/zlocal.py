"""Semilocal subrings Z_S of the rationals.

``Z_S = {m/n : gcd(n, p) = 1 for every p in S}`` for a finite set S of
primes.  Its maximal ideals are the ``pZ_S``, its Jacobson radical is their
intersection, and ``Z_S / J`` is the product of the prime fields ``Z_p``.
For ``|S| >= 2`` these rings are feckly clean without being clean.

Elements are :class:`fractions.Fraction` values (always reduced, positive
denominator).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from sympy import isprime
from sympy.ntheory.modular import crt

from .ring import FiniteRing, direct_product, zn

MAX_PRIMES = 16
MAX_PRIME = 2**64

Rational = Union[Fraction, int, str]


class ZLocalError(ValueError):
    pass


def parse_rational(q: Rational) -> Fraction:
    """Accept ``Fraction``, ``int`` or a ``"num/den"`` / integer string."""
    if isinstance(q, Fraction):
        return q
    if isinstance(q, bool):
        raise ZLocalError(f"not a rational: {q!r}")
    if isinstance(q, int):
        return Fraction(q)
    try:
        return Fraction(str(q).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ZLocalError(f"cannot parse rational {q!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_primes(text: str | Iterable[int]) -> tuple[int, ...]:
    if isinstance(text, str):
        try:
            items = [int(t) for t in text.replace(" ", "").split(",") if t]
        except ValueError as exc:
            raise ZLocalError(f"bad prime list {text!r}") from exc
    else:
        items = [int(t) for t in text]
    return tuple(items)


@dataclass(frozen=True)
class FecklyDecomposition:
    x: Fraction
    e: int
    u: Fraction

    def to_json(self) -> dict:
        return {"a": format_rational(self.x), "e": str(self.e), "u": format_rational(self.u)}


class ZLocalRing:
    """The ring Z_S for a finite nonempty prime set S."""

    def __init__(self, primes: Iterable[int]) -> None:
        primes = tuple(int(p) for p in primes)
        if not primes:
            raise ZLocalError("prime set must be nonempty")
        if len(set(primes)) != len(primes):
            raise ZLocalError(f"primes must be distinct: {primes}")
        if len(primes) > MAX_PRIMES:
            raise ZLocalError(f"at most {MAX_PRIMES} primes supported")
        for p in primes:
            if p >= MAX_PRIME or not isprime(p):
                raise ZLocalError(f"{p} is not a prime below 2^64")
        self.primes = tuple(sorted(primes))

    def __repr__(self) -> str:
        return f"ZLocalRing({list(self.primes)})"

    @property
    def name(self) -> str:
        return "Z_{" + ",".join(map(str, self.primes)) + "}"

    # membership and arithmetic ------------------------------------------

    def contains(self, q: Rational) -> bool:
        q = parse_rational(q)
        return all(q.denominator % p for p in self.primes)

    def element(self, q: Rational) -> Fraction:
        q = parse_rational(q)
        if not self.contains(q):
            raise ZLocalError(f"{format_rational(q)} is not in {self.name}")
        return q

    def residue(self, q: Rational, p: int) -> int:
        """Image of q in Z_p, computed as num * den^-1 mod p."""
        q = self.element(q)
        return q.numerator * pow(q.denominator, -1, p) % p

    def is_unit(self, x: Rational) -> bool:
        x = self.element(x)
        return all(x.numerator % p for p in self.primes)

    def in_jacobson(self, x: Rational) -> bool:
        x = self.element(x)
        return all(x.numerator % p == 0 for p in self.primes)

    def is_clean_element(self, x: Rational) -> bool:
        # a domain has only the idempotents 0 and 1
        x = self.element(x)
        return self.is_unit(x) or self.is_unit(x - 1)

    def is_idempotent(self, x: Rational) -> bool:
        x = self.element(x)
        return x * x == x

    # feckly decompositions ----------------------------------------------

    def feckly_witness(self, x: Rational) -> FecklyDecomposition:
        """Least e >= 0 with e = 1 mod p where p | x and e = 0 mod p otherwise."""
        x = self.element(x)
        targets = [1 if self.residue(x, p) == 0 else 0 for p in self.primes]
        e, _ = crt(list(self.primes), targets)
        e = int(e)
        u = x - e
        if not self.is_unit(u):
            raise AssertionError(f"x - e = {format_rational(u)} is not a unit")
        if not self.in_jacobson(Fraction(e - e * e)):
            raise AssertionError(f"e - e^2 = {e - e * e} is not in J")
        return FecklyDecomposition(x, e, u)

    def non_clean_element(self) -> Fraction | None:
        """For |S| >= 2: x = 0 mod the first prime and 1 mod the others."""
        if len(self.primes) < 2:
            return None
        targets = [0] + [1] * (len(self.primes) - 1)
        x, _ = crt(list(self.primes), targets)
        return Fraction(int(x))

    # global structure ---------------------------------------------------

    def max_ideal_labels(self) -> list[str]:
        return [f"{p}R" for p in self.primes]

    def quotient_mod_J(self, samples: int = 200, seed: int = 0) -> FiniteRing:
        """R/J(R) as the product of Z_p, checked on sampled elements.

        The reduction map sends x to the tuple of residues ``x mod p``.
        """
        Q = direct_product([zn(p) for p in self.primes]) if len(self.primes) > 1 else zn(self.primes[0])
        rng = random.Random(seed)
        for _ in range(samples):
            x, y = self.random_element(rng), self.random_element(rng)
            rx, ry = self.reduce(Q, x), self.reduce(Q, y)
            if self.reduce(Q, x + y) != Q.add[rx, ry] or self.reduce(Q, x * y) != Q.mul[rx, ry]:
                raise AssertionError(f"reduction is not a homomorphism at {x}, {y}")
        return Q

    def reduce(self, Q: FiniteRing, x: Rational) -> int:
        res = [self.residue(x, p) for p in self.primes]
        return Q.parse(tuple(res) if len(res) > 1 else res[0])

    def random_element(self, rng: random.Random, bound: int = 10**6) -> Fraction:
        num = rng.randint(-bound, bound)
        den = 1
        while True:
            den = rng.randint(1, bound)
            if all(den % p for p in self.primes):
                return Fraction(num, den)

    def classify(self) -> dict:
        local = len(self.primes) == 1
        witness = self.non_clean_element()
        clean = witness is None or self.is_clean_element(witness)
        # the feckly witness construction is total
        feckly = True
        # {0} is prime and lies in every pR
        pm = local
        return {
            "ring": self.name,
            "primes": list(self.primes),
            "is_local": local,
            "is_clean": clean,
            "is_feckly_clean": feckly,
            "is_pm": pm,
            "max_ideals": self.max_ideal_labels(),
            "non_clean_element": None if witness is None else format_rational(witness),
            "clean_iff_feckly_and_pm": clean == (feckly and pm),
        }


def contains(S: Iterable[int], q: Rational) -> bool:
    return ZLocalRing(S).contains(q)
