"""Per-ring classification records and batch runs over a corpus."""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Optional

from . import __version__
from .cleanness import (
    is_clean_ring,
    is_exchange,
    is_feckly_clean_ring,
    is_gsr,
    is_pi_regular,
    is_pm,
    is_quasi_duo,
)
from .ideals import LEFT, RIGHT, jacobson_radical, maximal_ideals
from .ring import DEFAULT_MAX_ORDER, FiniteRing, idempotents, is_abelian, units
from .specs import build, spec_hash
from .theorems import check_all_theorems
from .zlocal import ZLocalRing

SCHEMA_VERSION = 1
CACHE_ENV = "FECK_CACHE_DIR"


@dataclass
class ClassificationRecord:
    name: str
    hash: str
    order: Optional[int] = None
    commutative: Optional[bool] = None
    abelian: Optional[bool] = None
    clean: Optional[bool] = None
    feckly_clean: Optional[bool] = None
    exchange: Optional[bool] = None
    quasi_duo_left: Optional[bool] = None
    quasi_duo_right: Optional[bool] = None
    pi_regular: Optional[bool] = None
    gsr: Optional[bool] = None
    pm: Optional[bool] = None
    n_max: Optional[int] = None
    n_jacobson: Optional[int] = None
    n_idempotents: Optional[int] = None
    n_units: Optional[int] = None
    theorems_pass: Optional[bool] = None
    error: Optional[str] = None
    schema_version: int = SCHEMA_VERSION

    @property
    def ok(self) -> bool:
        return self.error is None and bool(self.theorems_pass)

    def to_json(self) -> dict[str, Any]:
        return asdict(self)


FIELD_TYPES = {f.name: f.type for f in fields(ClassificationRecord)}


def classify_finite(R: FiniteRing, h: str) -> ClassificationRecord:
    trivial = R.is_trivial
    return ClassificationRecord(
        name=R.name,
        hash=h,
        order=R.order,
        commutative=R.is_commutative,
        abelian=is_abelian(R),
        clean=is_clean_ring(R),
        feckly_clean=is_feckly_clean_ring(R),
        exchange=is_exchange(R),
        quasi_duo_left=is_quasi_duo(R, LEFT),
        quasi_duo_right=is_quasi_duo(R, RIGHT),
        pi_regular=is_pi_regular(R),
        gsr=is_gsr(R),
        pm=is_pm(R),
        n_max=0 if trivial else len(maximal_ideals(R)),
        n_jacobson=len(jacobson_radical(R)),
        n_idempotents=len(idempotents(R)),
        n_units=len(units(R)),
        theorems_pass=check_all_theorems(R).passed,
    )


def classify_zlocal(Z: ZLocalRing, h: str) -> ClassificationRecord:
    c = Z.classify()
    return ClassificationRecord(
        name=Z.name,
        hash=h,
        commutative=True,
        abelian=True,
        clean=c["is_clean"],
        feckly_clean=c["is_feckly_clean"],
        quasi_duo_left=True,
        quasi_duo_right=True,
        pm=c["is_pm"],
        n_max=len(c["max_ideals"]),
        theorems_pass=c["clean_iff_feckly_and_pm"],
    )


def classify_spec(spec: Any, max_order: int | None = DEFAULT_MAX_ORDER) -> ClassificationRecord:
    """Classify one spec; raises on invalid input."""
    h = spec_hash(spec)
    R = build(spec, max_order)
    if isinstance(R, ZLocalRing):
        return classify_zlocal(R, h)
    return classify_finite(R, h)


def _cache_path(cache_dir: Path, h: str) -> Path:
    return cache_dir / f"{h}-{__version__}.json"


def classify_cached(
    spec: Any, max_order: int | None = DEFAULT_MAX_ORDER, cache_dir: str | None = None
) -> ClassificationRecord:
    if cache_dir:
        path = _cache_path(Path(cache_dir), spec_hash(spec))
        if path.exists():
            return ClassificationRecord(**json.loads(path.read_text()))
    rec = classify_spec(spec, max_order)
    if cache_dir:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".{os.getpid()}.tmp")
        tmp.write_text(json.dumps(rec.to_json(), indent=2))
        tmp.replace(path)
    return rec


def _row(args: tuple) -> tuple[dict, float]:
    spec, max_order, cache_dir = args
    t0 = time.perf_counter()
    try:
        rec = classify_cached(spec, max_order, cache_dir)
    except Exception as exc:  # noqa: BLE001 - recorded in-row, batch continues
        name = spec.get("kind", "?") if isinstance(spec, dict) else "?"
        rec = ClassificationRecord(name=f"<invalid {name}>", hash=spec_hash(spec),
                                   error=f"{type(exc).__name__}: {exc}")
    return rec.to_json(), time.perf_counter() - t0


def run_atlas(
    specs: list[Any],
    jobs: int = 1,
    max_order: int | None = DEFAULT_MAX_ORDER,
    cache_dir: str | None = None,
    timings: bool = False,
) -> list[dict]:
    """One record per spec, in spec order regardless of ``jobs``."""
    work = [(s, max_order, cache_dir) for s in specs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_row, work))
    else:
        results = [_row(w) for w in work]
    rows = []
    for rec, seconds in results:
        if timings:
            rec = {**rec, "seconds": round(seconds, 4)}
        rows.append(rec)
    return rows


def summarize(rows: list[dict]) -> dict[str, int]:
    errors = sum(r["error"] is not None for r in rows)
    failed = sum(r["error"] is None and not r["theorems_pass"] for r in rows)
    return {"total": len(rows), "passed": len(rows) - errors - failed, "failed": failed,
            "errors": errors}


def to_json_report(rows: list[dict]) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "tool_version": __version__, "records": rows,
           "summary": summarize(rows)}
    return json.dumps(doc, indent=2) + "\n"


def _csv_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def to_csv(rows: list[dict]) -> str:
    names = [f.name for f in fields(ClassificationRecord)]
    if any("seconds" in r for r in rows):
        names.append("seconds")
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: _csv_cell(r.get(k)) for k in names})
    return buf.getvalue()


def from_csv(text: str) -> list[dict]:
    """Parse :func:`to_csv` output back into typed records."""
    out = []
    for raw in csv.DictReader(io.StringIO(text)):
        rec: dict[str, Any] = {}
        for k, v in raw.items():
            t = FIELD_TYPES.get(k, "float")
            if v == "":
                rec[k] = None
            elif "bool" in t:
                rec[k] = v == "true"
            elif "int" in t:
                rec[k] = int(v)
            elif "float" in t:
                rec[k] = float(v)
            else:
                rec[k] = v
        out.append(rec)
    return out
