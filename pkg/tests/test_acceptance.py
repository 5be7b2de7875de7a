"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import tempfile
import time
from fractions import Fraction
from pathlib import Path
from typing import Callable

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles as O  # noqa: E402
from feckly.cleanness import (  # noqa: E402
    admissible_mask,
    complement_multipliers,
    is_clean_ring,
    is_exchange,
    is_feckly_clean_ring,
    is_gsr,
    is_quasi_duo,
    join_admissible,
    unit_form_chain,
)
from feckly.cli import main  # noqa: E402
from feckly.ideals import (  # noqa: E402
    RIGHT,
    intersection,
    jacobson_mask,
    jacobson_radical,
    maximal_ideals,
    maximal_right_ideals,
    prime_ideals,
)
from feckly.ring import direct_product, is_abelian, unit_mask, upper_triangular, zn  # noqa: E402
from feckly.spectra import (  # noqa: E402
    e_set,
    is_discrete,
    is_hausdorff,
    is_normal,
    is_strongly_zero_dimensional,
    j_spectrum,
    load_space,
    max_spectrum,
)
from feckly.specs import build, default_corpus  # noqa: E402
from feckly.theorems import check_all_theorems  # noqa: E402
from feckly.zlocal import ZLocalRing  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "src" / "feckly" / "data"


def corpus_rings():
    return [build(s) for s in default_corpus()]


def criterion_1() -> str:
    Z = ZLocalRing([2, 3])
    assert not Z.is_clean_element(4)
    d = Z.feckly_witness(4)
    assert (d.e, d.u) == (3, 1)
    assert O.zs_is_unit([2, 3], d.u) and O.zs_in_jacobson([2, 3], Fraction(d.e - d.e**2))
    c = Z.classify()
    assert c["max_ideals"] == ["2R", "3R"]
    Q = Z.quotient_mod_J()
    assert Q.order == 6 and is_clean_ring(Q)
    return "4 not clean; 4 = 3 + 1; Max = {2R, 3R}; R/J of order 6 is clean"


def criterion_2() -> str:
    S = [5, 7]
    Z = ZLocalRing(S)
    x = Fraction(5 * 8, 12)
    assert x == Fraction(10, 3) and not Z.is_clean_element(x)
    d = Z.feckly_witness(x)
    assert d.e + d.u == x and O.zs_is_unit(S, d.u)
    assert O.zs_in_jacobson(S, Fraction(d.e - d.e**2))
    c = Z.classify()
    assert (c["is_clean"], c["is_feckly_clean"], c["is_pm"]) == (False, True, False)
    assert c["is_clean"] == (c["is_feckly_clean"] and c["is_pm"])
    return f"10/3 not clean; 10/3 = {d.e} + ({d.u}); clean=F feckly=T pm=F"


def criterion_3() -> str:
    R = upper_triangular(zn(4), 2)
    assert not is_abelian(R)
    assert is_quasi_duo(R, RIGHT)
    assert is_exchange(R)
    assert is_feckly_clean_ring(R)
    report = check_all_theorems(R)
    assert report.passed, [e.to_json() for e in report.failures()]
    assert report.entry("T4.5").hypothesis
    return f"T2(Z4): non-abelian quasi-duo exchange, feckly clean, {len(report.entries)} entries pass"


def criterion_4() -> str:
    total = 0
    for R in corpus_rings():
        report = check_all_theorems(R)
        assert report.passed, (R.name, [e.to_json() for e in report.failures()])
        total += len(report.entries)
    return f"{total} entries over {len(default_corpus())} rings"


def criterion_5() -> str:
    for R in corpus_rings():
        J = jacobson_radical(R)
        mx = maximal_ideals(R)
        assert J.mask == intersection(R, maximal_right_ideals(R), RIGHT).mask, R.name
        assert J.mask == intersection(R, mx).mask, R.name
        assert all(J <= M for M in mx), R.name
    return "J = meet of maximal right ideals = meet of maximal ideals; J inside each M"


def criterion_6() -> str:
    for R in corpus_rings():
        assert prime_ideals(R) == maximal_ideals(R), R.name
        for S in (max_spectrum(R), j_spectrum(R)):
            assert is_discrete(S), R.name
            assert is_hausdorff(S) and is_normal(S) and is_strongly_zero_dimensional(S), R.name
    T = load_space((DATA / "abstract_three_point.json").read_text())
    assert not is_hausdorff(T) and not is_normal(T) and not is_strongly_zero_dimensional(T)
    return "corpus spectra discrete and separated; 3-point space fails all three"


def criterion_7() -> str:
    chains = 0
    for R in corpus_rings():
        if not R.is_commutative:
            continue
        U, J = unit_mask(R), jacobson_mask(R)
        for a in range(R.order):
            last = unit_form_chain(R, a)[-1]
            f, u = last.data["f"], last.data["u"]
            assert R.add[f, u] == a and U[u] and J[R.sub(f, int(R.mul[f, f]))]
            chains += 1
            b = R.sub(R.one, a)
            r, s = complement_multipliers(R, a, b)
            assert J[R.mul[R.add[R.one, R.mul[a, r]], R.add[R.one, R.mul[b, s]]]]
    pairs = 0
    cases = [(zn(6), O.zn_model(6)), (zn(12), O.zn_model(12)),
             (direct_product([zn(2), zn(2)]), O.product_model(O.zn_model(2), O.zn_model(2)))]
    for R, M in cases:
        J_oracle = O.jacobson(M)
        value = {R.parse(x): x for x in M.elements}
        adm = [e for e in range(R.order) if admissible_mask(R)[e]]
        S = max_spectrum(R)
        for e in adm:
            for f in adm:
                g = join_admissible(R, e, f)
                assert g == R.sub(int(R.add[e, f]), int(R.mul[e, f]))
                assert e_set(S, e) | e_set(S, f) == e_set(S, g)
                assert O.admissible(M, value[g], J_oracle)
                pairs += 1
    return f"{chains} chains and complement pairs; {pairs} joined pairs"


def criterion_8() -> str:
    assert is_gsr(zn(4)) and not is_gsr(zn(8))
    gsr = [R for R in corpus_rings() if is_gsr(R)]
    assert all(is_feckly_clean_ring(R) for R in gsr)
    return f"Z4 gsr, Z8 not; {len(gsr)} gsr corpus rings all feckly clean"


def criterion_9() -> str:
    with tempfile.TemporaryDirectory() as tmp:
        outs = []
        for jobs in (1, 4):
            path = Path(tmp) / f"atlas-{jobs}.json"
            assert main(["atlas", "--jobs", str(jobs), "--out", str(path)]) == 0
            csv_path = Path(tmp) / f"atlas-{jobs}.csv"
            assert main(["atlas", "--jobs", str(jobs), "--format", "csv", "--out", str(csv_path)]) == 0
            outs.append((path.read_bytes(), csv_path.read_bytes()))
    assert outs[0] == outs[1]
    return f"jobs 1 and 4 byte-identical ({len(outs[0][0])} B json, {len(outs[0][1])} B csv)"


CRITERIA: list[tuple[int, Callable[[], str], float | None]] = [
    (1, criterion_1, 1.0),
    (2, criterion_2, 1.0),
    (3, criterion_3, 60.0),
    (4, criterion_4, 300.0),
    (5, criterion_5, None),
    (6, criterion_6, None),
    (7, criterion_7, None),
    (8, criterion_8, None),
    (9, criterion_9, None),
]


def evaluate(number: int, check: Callable[[], str], limit: float | None) -> tuple[bool, str]:
    t0 = time.perf_counter()
    try:
        detail = check()
        ok = True
    except AssertionError as exc:
        detail, ok = f"assertion failed: {exc}", False
    seconds = time.perf_counter() - t0
    if ok and limit is not None and seconds >= limit:
        ok, detail = False, f"{detail}; took {seconds:.2f} s, limit {limit:.0f} s"
    status = "PASS" if ok else "FAIL"
    budget = f" / {limit:.0f} s" if limit is not None else ""
    return ok, f"criterion {number}: {status} ({seconds:.2f} s{budget}) {detail}"


@pytest.mark.parametrize("number,check,limit", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, check, limit, capsys):
    ok, line = evaluate(number, check, limit)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
