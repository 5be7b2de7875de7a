"""Exact decision procedures for clean and feckly clean rings.

Finite rings are handled through Cayley tables (:mod:`feckly.ring`), their
ideal lattices (:mod:`feckly.ideals`) and spectra (:mod:`feckly.spectra`);
the semilocal rings Z_S live in :mod:`feckly.zlocal`.
"""

__version__ = "0.1.0"

from .cleanness import (  # noqa: E402
    clean_witness,
    feckly_witness,
    is_clean_ring,
    is_exchange,
    is_feckly_clean_ring,
    is_gsr,
    is_pi_regular,
    is_pm,
    is_quasi_duo,
)
from .ideals import (  # noqa: E402
    LEFT,
    RIGHT,
    TWO_SIDED,
    all_ideals,
    jacobson_radical,
    maximal_ideals,
    maximal_right_ideals,
    principal,
)
from .ring import (  # noqa: E402
    FiniteRing,
    direct_product,
    from_tables,
    idempotents,
    is_abelian,
    is_full,
    matrix_ring,
    quotient,
    units,
    upper_triangular,
    zn,
)
from .spectra import j_spectrum, max_spectrum  # noqa: E402
from .theorems import check_all_theorems  # noqa: E402
from .zlocal import ZLocalRing  # noqa: E402

__all__ = [
    "FiniteRing", "ZLocalRing", "zn", "direct_product", "upper_triangular", "matrix_ring",
    "quotient", "from_tables", "units", "idempotents", "is_full", "is_abelian",
    "principal", "all_ideals", "jacobson_radical", "maximal_ideals", "maximal_right_ideals",
    "TWO_SIDED", "RIGHT", "LEFT", "max_spectrum", "j_spectrum", "clean_witness",
    "feckly_witness", "is_clean_ring", "is_feckly_clean_ring", "is_exchange", "is_gsr",
    "is_pi_regular", "is_pm", "is_quasi_duo", "check_all_theorems",
]
