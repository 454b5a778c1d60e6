"""Cross-check suites shared by the CLI `verify` command and the tests."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from . import formulas
from .codes import SUBSPACE_BUDGET, brute_force_spectra, build_rm22
from .exactalg import gaussian_binomial, prime_power
from .geometry import MAX_Q, census, maximal_zero_sets, nullity_families
from .gwp import extension_check
from .matroid import local_mobius
from .pipeline import run_rm22


@dataclass
class Check:
    name: str
    status: str
    expected: Any
    actual: Any

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "expected": self.expected,
                "actual": self.actual}


def _check(name: str, expected, actual) -> Check:
    return Check(name, "pass" if expected == actual else "fail", expected, actual)


def _table_diffs(expected: dict, actual: dict) -> list[list[int]]:
    keys = sorted(set(expected) | set(actual))
    return [[*k, expected.get(k, 0), actual.get(k, 0)] for k in keys
            if expected.get(k, 0) != actual.get(k, 0)]


def census_checks(q: int) -> list[Check]:
    out = []
    c = census(q)
    out.append(_check(f"q={q} conic classes", formulas.class_counts(q), dict(c.by_class)))
    out.append(_check(f"q={q} conic categories", formulas.category_counts(q),
                      dict(c.by_category)))
    out.append(_check(f"q={q} affine zeros per category",
                      {k: [v] for k, v in formulas.category_affine_zeros(q).items()},
                      {k: sorted(v) for k, v in c.affine_zeros_by_category.items()}))
    if q >= 3:
        out.append(_check(f"q={q} maximal zero sets", sorted(formulas.maximal_categories(q)),
                          sorted(maximal_zero_sets(q))))
        out.append(_check(f"q={q} first spectrum from conics", formulas.first_spectrum(q),
                          dict(c.first_spectrum)))
    return out


def pipeline_checks(q: int, method: str = "auto") -> list[Check]:
    out = []
    res = run_rm22(q, method)
    sp = res.spectra
    out.append(_check(f"q={q} row sums = Gaussian binomials",
                      [gaussian_binomial(sp.k, r, q) for r in range(sp.k + 1)],
                      [sum(sp.A.get(r, {}).values()) for r in range(sp.k + 1)]))
    closed = formulas.closed_spectra(q)
    out.append(Check(f"q={q} spectra vs closed forms",
                     "pass" if not closed.differences(sp) else "fail", [],
                     [list(d) for d in closed.differences(sp)]))
    printed = formulas.closed_spectra(q, "printed")
    errata = sorted([r, w] for (qq, r, w) in formulas.SPECTRUM_ERRATA if qq == q)
    out.append(_check(f"q={q} printed spectra differ only at listed errata", errata,
                      sorted([r, w] for r, w, _, _ in printed.differences(sp))))
    out.append(_check(f"q={q} generalized Hamming weights", list(formulas.hamming_weights(q)),
                      [sp.d(r) for r in range(1, sp.k + 1)]))
    if q in (2, 3, 4, 5):
        fx = formulas.fixtures(q)
        for lv, beta in fx.betti.items():
            n = fx.table_numbers[("betti", lv)]
            errs = {(e.i, e.j): e for e in fx.errata if e.level == lv}
            diffs = _table_diffs(beta, res.tables[lv].beta)
            ok = all((i, j) in errs and a == errs[(i, j)].consistent for i, j, _, a in diffs)
            out.append(Check(f"q={q} Betti l={lv} vs table {n}", "pass" if ok else "fail",
                             sorted([e.i, e.j, e.printed] for e in errs.values()), diffs))
        if fx.phi:
            n = fx.table_numbers[("phi",)]
            got = {lv: res.phi.phi[lv] for lv in fx.phi}
            out.append(_check(f"q={q} phi vs table {n}",
                              {str(lv): v for lv, v in fx.phi.items()},
                              {str(lv): v for lv, v in got.items()}))
    elif q >= 7:
        closed_p = {w: list(p.coeffs) for w, p in formulas.closed_gwp(q).items()}
        out.append(_check(f"q={q} P_w(Z) vs closed forms", closed_p,
                          {w: list(p.coeffs) for w, p in res.polys.items()}))
        for lv in range(6):
            cb = formulas.closed_betti(q, lv, "alternative")
            out.append(Check(f"q={q} Betti l={lv} vs closed forms",
                             "pass" if cb.table.same_values(res.tables[lv]) else "fail", [],
                             _table_diffs(cb.table.beta, res.tables[lv].beta)))
        for t in formulas.typo_slots(q):
            if t.level < 0:
                got = sp.get(t.i, t.j)
                out.append(_check(f"q={q} {t.name}: printed reading", str(t.printed), str(got)))
                continue
            got = res.tables[t.level].get(t.i, t.j)
            out.append(Check(f"q={q} {t.name}: alternative reading confirmed",
                             "pass" if t.alternative == got != t.printed else "fail",
                             {"printed": str(t.printed), "alternative": str(t.alternative)},
                             got))
    return out


def lattice_checks(q: int) -> list[Check]:
    """Full cycle lattice against the Boij-Soderberg route."""
    full = run_rm22(q, "full")
    bs = run_rm22(q, "bs")
    return [Check(f"q={q} full lattice = BS route, l={lv}",
                  "pass" if full.tables[lv].same_values(bs.tables[lv]) else "fail", [],
                  _table_diffs(full.tables[lv].beta, bs.tables[lv].beta))
            for lv in sorted(full.tables)]


def brute_checks(q: int, r_max: int | None = None, threads: int = 1,
                 budget: int = SUBSPACE_BUDGET) -> list[Check]:
    bf = brute_force_spectra(build_rm22(q), r_max, budget=budget, threads=threads)
    rows = list(range(bf.complete_through + 1))
    sp = run_rm22(q).spectra
    diffs = [[r, w, a, b] for r, w, a, b in bf.differences(sp) if r in rows]
    return [Check(f"q={q} brute force = pipeline for r <= {bf.complete_through}",
                  "pass" if not diffs else "fail", [], diffs)]


def local_checks(q: int) -> list[Check]:
    """Local Mobius values of family representatives against the printed local values."""
    code = build_rm22(q)
    reps = {f.name: f.representative for f in nullity_families(q)}
    out = []
    for (name, lv), v in formulas.local_betti(q).items():
        if name == "E":
            continue
        got = abs(local_mobius(code, reps[name], lv))
        out.append(_check(f"q={q} local |mu| {name}, l={lv}", str(v), str(got)))
    return out


def extension_checks(q: int) -> list[Check]:
    res = run_rm22(q)
    code = build_rm22(q)
    out = []
    for m in range(1, {2: 4, 3: 3}.get(q, 2)):
        rep = extension_check(code, m, res.polys)
        out.append(Check(f"q={q} P_j(q^{m}) = weights of the extension",
                         "pass" if rep.ok else "fail", [], [list(t) for t in rep.mismatches]))
    return out


def verify(q: int, level: str = "fast", threads: int = 1,
           budget: int = SUBSPACE_BUDGET) -> list[Check]:
    """fast: everything cheap for this q; full: adds brute force and local values."""
    prime_power(q)
    out: list[Check] = []
    if q <= MAX_Q:
        out += census_checks(q)
    out += pipeline_checks(q)
    if 3 <= q <= 5 and (q <= 3 or level == "full"):
        out += lattice_checks(q)
    if q <= 3:
        out += brute_checks(q, threads=threads, budget=budget)
        out += extension_checks(q)
    elif level == "full":
        out += brute_checks(q, None if q <= 5 else 3, threads=threads, budget=budget)
        if q >= 7:
            out += local_checks(q)
    return out
