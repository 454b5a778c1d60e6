"""End-to-end path: cycles and Mobius values -> Betti tables -> phi -> P_w(Z) -> A_w^(r)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .codes import LinearCode, SpectrumTable, build_rm22
from .errors import OutOfRange
from .exactalg import prime_power
from .gwp import WeightPolynomial, gwp_assemble, gwp_invert
from .matroid import BettiTable, Matroid, PhiProfile, all_betti_tables, phi_profile
from .resolution import bs_solve, rm22_family_data, rm22_shape

METHODS = ("auto", "full", "bs")


@dataclass
class PipelineResult:
    q: int
    k: int
    n: int
    method: str
    tables: dict[int, BettiTable]
    phi: PhiProfile
    polys: dict[int, WeightPolynomial]
    spectra: SpectrumTable


def code_tables(code: LinearCode, method: str = "auto") -> dict[int, BettiTable]:
    """Full-lattice Betti tables of every elongation l = 0..k-1 of the code's matroid."""
    return all_betti_tables(Matroid(code), method)


def run_code(code: LinearCode, method: str = "auto") -> PipelineResult:
    tables = code_tables(code, method)
    return _finish(code.q, code.k, code.n, "full", tables)


def _finish(q: int, k: int, n: int, method: str, tables: dict[int, BettiTable]) -> PipelineResult:
    phi = phi_profile(tables, k)
    polys = gwp_assemble(phi, k)
    spectra = gwp_invert(polys, q, k, n)
    spectra.method = f"pipeline-{method}"
    return PipelineResult(q, k, n, method, tables, phi, polys, spectra)


def rm22_tables(q: int, method: str = "auto") -> dict[int, BettiTable]:
    """Betti tables of C_q and its elongations.

    'full' runs the whole cycle lattice; 'bs' fills a resolution shape from
    the conic families, a few local Mobius values and the Boij-Soderberg
    identities. 'auto' uses 'full' for q <= 4 and 'bs' otherwise.
    """
    prime_power(q)
    if method not in METHODS:
        raise OutOfRange(f"unknown method {method!r}")
    if method == "auto":
        method = "full" if q <= 4 else "bs"
    k = 4 if q == 2 else 6
    if method == "full":
        return code_tables(build_rm22(q))
    data = None if q == 2 else rm22_family_data(q)
    return {lv: bs_solve(rm22_shape(q, lv, data)) for lv in range(k)}


@lru_cache(maxsize=None)
def run_rm22(q: int, method: str = "auto") -> PipelineResult:
    if method == "auto":
        method = "full" if q <= 4 else "bs"
    tables = rm22_tables(q, method)
    k = 4 if q == 2 else 6
    return _finish(q, k, q * q, method, tables)
