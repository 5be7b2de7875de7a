"""Mechanical check of every characterization of feckly clean rings on one
finite ring.

Each entry records whether its hypothesis is met and whether its conclusion
holds.  Equivalences are evaluated by computing every side independently
and requiring agreement.  Since every entry is a proved statement, a failed
entry means a bug in this package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from .cleanness import (
    PreconditionError,
    abelian_clean_implies_feckly,
    admissible_mask,
    affine_multiples,
    clean_witness,
    complement_multipliers,
    feckly_witness,
    is_clean_ring,
    is_exchange,
    is_feckly_clean_ring,
    is_gsr,
    is_pi_regular,
    is_pm,
    is_quasi_duo,
    join_admissible,
    radical_pair_table,
    right_multiples,
    unit_form_chain,
    unit_inverse_forms,
    validate_clean,
    validate_feckly,
)
from .ideals import (
    LEFT,
    RIGHT,
    intersection,
    jacobson_mask,
    jacobson_radical,
    maximal_ideals,
    prime_ideals,
)
from .ring import FiniteRing, full_mask, is_abelian, quotient, unit_mask
from .spectra import (
    SpectrumSpace,
    clopen_sets,
    is_hausdorff,
    is_normal,
    is_strongly_zero_dimensional,
    ring_space,
    v_set,
)

IFF = "iff"
IMPLIES = "implies"
FACT = "fact"


@dataclass
class Entry:
    name: str
    hypothesis: bool
    holds: bool
    detail: str = ""
    kind: str = FACT

    @property
    def ok(self) -> bool:
        return self.holds or not self.hypothesis

    def to_json(self) -> dict:
        return {"name": self.name, "hypothesis": self.hypothesis, "holds": self.holds,
                "detail": self.detail}


@dataclass
class TheoremReport:
    ring: str
    entries: list[Entry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[Entry]:
        return [e for e in self.entries if not e.ok]

    def entry(self, name: str) -> Entry:
        return next(e for e in self.entries if e.name == name)

    def to_json(self) -> dict:
        return {"ring": self.ring, "entries": [e.to_json() for e in self.entries],
                "pass": self.passed}


def _first(pred: Callable[[int], bool], items: Iterable[int]) -> Optional[int]:
    return next((x for x in items if not pred(x)), None)


def _sides(**sides: bool) -> str:
    return ", ".join(f"{k}={v}" for k, v in sides.items())


class _Harness:
    """Shared precomputation for one ring."""

    def __init__(self, R: FiniteRing) -> None:
        self.R = R
        self.report = TheoremReport(R.name)
        n = R.order
        self.n = n
        self.J = jacobson_mask(R)
        self.U = unit_mask(R)
        self.full = full_mask(R)
        self.adm = admissible_mask(R)
        self.adm_list = [int(e) for e in np.flatnonzero(self.adm)]
        self.one_minus = [R.sub(R.one, x) for x in range(n)]
        self.witnesses = [feckly_witness(R, a) for a in range(n)]
        self.feckly_el = [w is not None for w in self.witnesses]
        self.FC = is_feckly_clean_ring(R)
        self.max = ring_space(R, "max")
        self.jsp = ring_space(R, "jspec")
        self.V = [v_set(self.max, x) for x in range(n)]
        self.W = [v_set(self.jsp, x) for x in range(n)]
        self.szd_max = is_strongly_zero_dimensional(self.max)
        self.szd_jsp = is_strongly_zero_dimensional(self.jsp)
        self.right = [right_multiples(R, x) for x in range(n)]
        self.affine = [affine_multiples(R, x) for x in range(n)]
        self.maxes = maximal_ideals(R) if not R.is_trivial else []

    def add(self, name: str, hypothesis: bool, holds: bool, detail: str = "", kind: str = FACT) -> None:
        self.report.entries.append(Entry(name, bool(hypothesis), bool(holds), detail, kind))

    def iff(self, name: str, hypothesis: bool = True, note: str = "", **sides: bool) -> None:
        holds = len(set(sides.values())) == 1
        detail = _sides(**sides) + (f"; {note}" if note else "")
        self.add(name, hypothesis, holds, detail, IFF)

    def implies(self, name: str, hypothesis: bool, conclusion: bool, note: str = "") -> None:
        detail = f"conclusion={conclusion}" if hypothesis else "hypothesis unsatisfied"
        self.add(name, hypothesis, conclusion, detail + (f"; {note}" if note else ""), IMPLIES)

    def per_element_iff(self, name: str, other: Callable[[int], bool]) -> None:
        bad = _first(lambda a: other(a) == self.feckly_el[a], range(self.n))
        detail = "agrees on every element" if bad is None else (
            f"disagreement at a={self.R.format(bad)}: feckly={self.feckly_el[bad]}, other={other(bad)}")
        self.add(name, True, bad is None, detail, IFF)

    # -- separation by admissible elements --------------------------------

    def separated(self, space_V: list, A: frozenset, B: frozenset) -> bool:
        return any(A <= space_V[e] and B <= space_V[self.one_minus[e]] for e in self.adm_list)


def _sandwich_form(space: SpectrumSpace, sets: list, h: _Harness, a: int) -> bool:
    everything = space.everything
    lo, hi = sets[h.one_minus[a]], everything - sets[a]
    return any(lo <= sets[e] <= hi for e in h.adm_list)


def _subsets(k: int) -> list[frozenset]:
    return [frozenset(c) for r in range(k + 1) for c in itertools.combinations(range(k), r)]


def _section_one(h: _Harness) -> None:
    R = h.R
    bad = None
    for w in h.witnesses:
        if w is None:
            continue
        try:
            validate_feckly(R, w)
        except AssertionError as exc:
            bad = str(exc)
            break
    if bad is None:
        for a in range(h.n):
            cw = clean_witness(R, a)
            if cw is not None:
                try:
                    validate_clean(R, cw)
                except AssertionError as exc:
                    bad = str(exc)
                    break
    h.add("witnesses", True, bad is None, bad or "all witnesses re-validated independently")

    Q, _ = quotient(R, jacobson_radical(R))
    h.iff("S1.quotient", R=h.FC, R_mod_J=is_feckly_clean_ring(Q))

    claims = [(a, abelian_clean_implies_feckly(R, a)) for a in range(h.n)]
    relevant = [(a, c) for a, c in claims if c is not None]
    bad_a = next((a for a, c in relevant if not c), None)
    h.implies("S1.abelian-clean", bool(relevant), bad_a is None,
              f"{len(relevant)} elements with central clean idempotent"
              + ("" if bad_a is None else f"; counterexample a={R.format(bad_a)}"))


def _section_two(h: _Harness) -> None:
    R, space, V = h.R, h.max, h.V
    J = jacobson_radical(R)
    bad = next((M for M in h.maxes if not J <= M), None)
    h.add("L2.1", True, bad is None,
          "J(R) inside every maximal ideal" if bad is None else f"J not inside {bad.literals()}")

    h.per_element_iff("L2.2", lambda a: _sandwich_form(space, V, h, a))

    closed_pairs = [(A, B) for A in space.closed_family for B in space.closed_family if not A & B]
    side2 = all(h.separated(V, A, B) for A, B in closed_pairs)
    side3 = all(
        any(V[a] <= V[e] and V[h.one_minus[a]] <= V[h.one_minus[e]] for e in h.adm_list)
        for a in range(h.n)
    )
    h.iff("T2.3", feckly=h.FC, closed_pairs_separated=side2, elementwise=side3)

    subs = _subsets(len(space.points))
    compact = all(h.separated(V, A, B) for A in subs for B in subs if not A & B)
    h.iff("C2.4", feckly=h.FC, disjoint_subsets_separated=compact,
          note="finite space: every subset compact")

    bad_pair = None
    checked = 0
    for e in h.adm_list:
        for f in h.adm_list:
            checked += 1
            try:
                join_admissible(R, e, f)
            except (AssertionError, PreconditionError) as exc:
                bad_pair = f"e={R.format(e)}, f={R.format(f)}: {exc}"
                break
        if bad_pair:
            break
    h.add("L2.5", True, bad_pair is None,
          bad_pair or f"{checked} admissible pairs joined")

    k = len(space.points)
    t26 = all(
        any(m in V[e] and l in V[h.one_minus[e]] for e in h.adm_list)
        for m in range(k) for l in range(k) if m != l
    )
    h.iff("T2.6", feckly=h.FC, distinct_maximals_split=t26)

    def c27(a: int) -> bool:
        b = h.one_minus[a]
        X, Y = h.affine[a], h.affine[b]
        return any(h.right[e][X].any() and h.right[h.one_minus[e]][Y].any() for e in h.adm_list)

    h.implies("C2.7", all(c27(a) for a in range(h.n)), h.FC)


def _section_three(h: _Harness) -> None:
    R, space, W = h.R, h.jsp, h.W
    h.per_element_iff("L3.1", lambda a: _sandwich_form(space, W, h, a))

    clopen = clopen_sets(space)
    bad = next((A for A in clopen if not any(W[e] == A for e in h.adm_list)), None)
    h.add("L3.2", True, bad is None,
          f"{len(clopen)} clopen sets, each W(e) for admissible e" if bad is None
          else f"clopen {space.labels(bad)} is no W(e)")

    h.iff("T3.3", feckly=h.FC, jspec_strongly_zero_dim=h.szd_jsp)

    primes = prime_ideals(R)
    hilbert = all(intersection(R, [M for M in h.maxes if P <= M]).mask == P.mask for P in primes)
    h.iff("C3.4", hypothesis=hilbert, feckly=h.FC, max_strongly_zero_dim=h.szd_max,
          note="hypothesis: each prime is an intersection of maximal ideals")

    unique = all(sum(P <= M for M in h.maxes) == 1 for P in space.ideals)
    h.iff("T3.5", feckly=h.FC, max_szd_and_unique_maximal=h.szd_max and unique)

    table = radical_pair_table(R)
    k = len(h.maxes)
    outside = [np.flatnonzero(~M.array) for M in h.maxes]
    split = all(
        table[np.ix_(outside[m], outside[l])].any()
        for m in range(k) for l in range(k) if m != l
    )
    h.iff("C3.6", feckly=h.FC, max_szd_and_annihilating_pairs=h.szd_max and split)

    hyp = all(table[np.ix_(h.affine[a], h.affine[h.one_minus[a]])].any() for a in range(h.n))
    h.iff("C3.7", hypothesis=hyp, feckly=h.FC, max_strongly_zero_dim=h.szd_max)


def _section_four(h: _Harness) -> None:
    R = h.R
    Q, _ = quotient(R, jacobson_radical(R))
    h.implies("T4.1", is_abelian(Q) and is_pi_regular(Q), h.FC,
              "hypothesis: R/J abelian and pi-regular")
    h.implies("C4.2", is_gsr(R), h.FC, "hypothesis: gsr")

    def potent(a: int) -> bool:
        p = int(R.mul[a, a])
        for _ in range(2, h.n + 2):
            if h.J[R.sub(p, a)]:
                return True
            p = int(R.mul[p, a])
        return False

    h.implies("C4.3", all(potent(a) for a in range(h.n)), h.FC, "hypothesis: a^n - a in J")
    h.implies("C4.4", Q.is_commutative, h.FC, "hypothesis: R/J finite commutative")
    qd = is_quasi_duo(R, RIGHT) or is_quasi_duo(R, LEFT)
    h.implies("T4.5", qd and is_exchange(R), h.FC,
              f"quasi_duo={qd}, exchange={is_exchange(R)}")


def _section_five(h: _Harness) -> None:
    R, n = h.R, h.n
    names = ["T5.1", "T5.1.chain", "C5.2", "C5.3", "C5.3.forms", "T5.4",
             "T5.4.multipliers", "C5.5", "T5.6", "C5.8"]
    if not R.is_commutative:
        for name in names:
            h.add(name, False, True, "skipped: ring not commutative", IFF)
        return
    J, U = h.J, h.U
    radical_e = [e for e in range(n) if J[R.sub(e, int(R.mul[e, e]))]]

    def form2(x: int) -> bool:
        return any(U[R.sub(x, e)] for e in radical_e)

    def form3(a: int) -> bool:
        target = h.right[R.sub(a, int(R.mul[a, a]))]
        return any(target[R.sub(a, e)] for e in radical_e)

    def form4(a: int) -> bool:
        return any(h.right[a][e] and h.right[h.one_minus[a]][h.one_minus[e]] for e in radical_e)

    h.iff("T5.1", feckly=h.FC, unit_form=all(map(form2, range(n))),
          multiple_form=all(map(form3, range(n))), exchange_form=all(map(form4, range(n))))

    bad, inexact = None, 0
    for a in range(n):
        try:
            steps = unit_form_chain(R, a)
        except (AssertionError, PreconditionError) as exc:
            bad = f"a={R.format(a)}: {exc}"
            break
        inexact += not steps[-1].exact
    h.add("T5.1.chain", True, bad is None,
          bad or f"chain verified on {n} elements; {inexact} ended in 1+J rather than exactly 1")

    def power_form(a: int) -> bool:
        p = a
        for _ in range(n):
            if form2(p):
                return True
            p = int(R.mul[p, a])
        return False

    h.iff("C5.2", feckly=h.FC, power_form=all(map(power_form, range(n))))

    units = np.flatnonzero(U)

    def c53(a: int) -> bool:
        ome_a = h.one_minus[a]
        for e in radical_e:
            ome = h.one_minus[e]
            lhs1 = R.mul[R.mul[a, units], e]
            lhs2 = R.mul[R.mul[ome_a, R.neg[units]], ome]
            if ((lhs1 == e) & (lhs2 == ome)).any():
                return True
        return False

    h.iff("C5.3", feckly=h.FC, inverse_unit_form=all(map(c53, range(n))))

    bad = None
    for a in range(n):
        try:
            unit_inverse_forms(R, a)
        except PreconditionError as exc:
            bad = str(exc)
            break
    h.add("C5.3.forms", True, bad is None, bad or f"forms constructed for {n} elements")

    def product_in(a: int, target: np.ndarray) -> bool:
        X, Y = h.affine[a], h.affine[h.one_minus[a]]
        return bool(target[R.mul[np.ix_(X, Y)]].any())

    zero_only = np.zeros(n, dtype=bool)
    zero_only[R.zero] = True
    in_J = all(product_in(a, J) for a in range(n))
    to_zero = all(product_in(a, zero_only) for a in range(n))

    def t54_4(a: int) -> bool:
        X, Y = h.affine[a], h.affine[h.one_minus[a]]
        return any(h.right[e][X].any() and h.right[h.one_minus[e]][Y].any() for e in radical_e)

    haus = is_hausdorff(h.max)
    h.iff("T5.4", feckly=h.FC, max_szd_hausdorff=h.szd_max and haus,
          max_szd_and_product_in_J=h.szd_max and in_J,
          idempotent_mod_J_split=all(map(t54_4, range(n))))

    bad = None
    for a in range(n):
        try:
            complement_multipliers(R, a, h.one_minus[a])
        except (AssertionError, PreconditionError) as exc:
            bad = f"a={R.format(a)}: {exc}"
            break
    h.add("T5.4.multipliers", True, bad is None, bad or f"{n} complementary pairs")

    h.iff("C5.5", feckly=h.FC, max_szd_and_jspec_normal=h.szd_max and is_normal(h.jsp))

    pm = is_pm(R)
    clean = is_clean_ring(R)
    h.iff("T5.6", clean=clean, feckly_and_pm=h.FC and pm, feckly_and_product_zero=h.FC and to_zero,
          note=f"pm={pm}")

    primes = prime_ideals(R)
    all_max = all(any(P.mask == M.mask for M in h.maxes) for P in primes)
    h.iff("C5.8", pi_regular=is_pi_regular(R), feckly_and_primes_maximal=h.FC and all_max)


def check_all_theorems(R: FiniteRing) -> TheoremReport:
    """Evaluate every characterization on ``R`` and return the report."""
    h = _Harness(R)
    _section_one(h)
    _section_two(h)
    _section_three(h)
    _section_four(h)
    _section_five(h)
    return h.report
