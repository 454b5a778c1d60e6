from __future__ import annotations

from fractions import Fraction

import pytest

from hws import formulas
from hws.codes import brute_force_spectra, build_rm1m, build_rm22
from hws.errors import NoFixtures, UnsupportedQ
from hws.exactalg import gaussian_binomial
from hws.geometry import nullity_families
from hws.matroid import local_mobius
from hws.pipeline import run_code, run_rm22
from hws.resolution import herzog_kuhl


def test_hamming_weights():
    assert formulas.hamming_weights(5) == (15, 19, 20, 23, 24, 25)
    assert formulas.hamming_weights(3) == (3, 5, 6, 7, 8, 9)
    assert formulas.hamming_weights(4)[0] == 8
    assert formulas.hamming_weights(2) == (1, 2, 3, 4)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_hamming_weights_from_pipeline(q):
    sp = run_rm22(q).spectra
    assert tuple(sp.d(r) for r in range(1, sp.k + 1)) == formulas.hamming_weights(q)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_spectra_closed_vs_pipeline(q):
    assert formulas.closed_spectra(q).same_values(run_rm22(q).spectra)


def test_q3_printed_spectrum_erratum():
    brute = brute_force_spectra(build_rm22(3))
    printed = formulas.closed_spectra(3, "printed")
    assert printed.get(4, 7) == 0
    assert brute.get(4, 7) == 36 == formulas.closed_spectra(3).get(4, 7)
    assert [(r, w) for r, w, _, _ in printed.differences(brute)] == [(4, 7)]
    assert printed.row_sum(4) != gaussian_binomial(6, 4, 3)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_fixture_tables(q):
    fx = formulas.fixtures(q)
    res = run_rm22(q, "full")
    errata = {(e.level, e.i, e.j): e for e in fx.errata}
    for lv, beta in fx.betti.items():
        got = res.tables[lv].beta
        for key in set(beta) | set(got):
            if (lv, *key) in errata:
                e = errata[(lv, *key)]
                assert beta[key] == e.printed and got[key] == e.consistent
            else:
                assert beta.get(key, 0) == got.get(key, 0), (lv, key)
    for lv, row in fx.phi.items():
        assert res.phi.phi[lv] == row


def test_fixture_table_numbers():
    assert formulas.fixtures(5).table_numbers[("phi",)] == 1
    assert formulas.fixtures(5).table_numbers[("betti", 0)] == 2
    assert formulas.fixtures(4).table_numbers[("betti", 0)] == 9
    assert formulas.fixtures(3).table_numbers[("betti", 0)] == 16
    assert formulas.fixtures(2).table_numbers[("betti", 3)] == 25
    with pytest.raises(NoFixtures):
        formulas.fixtures(7)


def test_q4_erratum_forced_by_phi():
    """Column 12 of the printed q=4 table holds only beta_2,12 and beta_3,12."""
    fx = formulas.fixtures(4)
    col = {i: v for (i, j), v in fx.betti[0].items() if j == 12}
    assert set(col) == {2, 3}
    assert fx.phi[0][12] == 2520 and col[3] == 600
    assert fx.phi[0][12] + col[3] == 3120 != col[2]


@pytest.mark.parametrize("q", [7, 8, 9])
def test_closed_gwp(q):
    got = run_rm22(q).polys
    want = formulas.closed_gwp(q)
    assert {w: p.coeffs for w, p in got.items()} == {w: p.coeffs for w, p in want.items()}


@pytest.mark.parametrize("q", [7, 8, 9])
def test_closed_betti_alternative_reading(q):
    res = run_rm22(q)
    for lv in range(6):
        assert formulas.closed_betti(q, lv).table.same_values(res.tables[lv])


@pytest.mark.parametrize("q", [7, 8, 9])
def test_closed_phi(q):
    assert formulas.closed_phi(q) == run_rm22(q).phi.phi[0]


@pytest.mark.parametrize("q", [7, 8, 9])
def test_typo_slots_resolved(q):
    res = run_rm22(q)
    slots = {t.name: t for t in formulas.typo_slots(q)}
    b4 = slots["beta_4_q2-2"]
    assert res.tables[0].get(4, q * q - 2) == b4.alternative != b4.printed
    b5 = slots["beta1_5_E"]
    assert res.tables[1].get(5, q * q) == b5.alternative != b5.printed
    a3 = slots["A3_q2-1"]
    assert res.spectra.get(3, q * q - 1) == a3.printed


def test_typo_printed_readings_nonintegral_or_wrong():
    assert formulas.typo_slots(7)[1].printed.denominator != 1
    assert formulas.typo_slots(8)[1].printed.denominator != 1
    assert formulas.typo_slots(8)[0].printed < 0
    with pytest.raises(UnsupportedQ):
        formulas.typo_slots(5)


def test_a3_slot_against_brute_force_q7():
    bf = brute_force_spectra(build_rm22(7), 3, threads=4)
    assert bf.get(3, 48) == formulas.typo_slots(7)[2].printed
    assert bf.same_values(run_rm22(7).spectra, rows=[0, 1, 2, 3])


@pytest.mark.parametrize("q", [7, 8])
def test_local_values_times_counts(q):
    res = run_rm22(q)
    counts = formulas.family_counts(q)
    assert {f.name: f.count for f in nullity_families(q) if not f.name.startswith("conic")} \
        == counts
    loc = formulas.local_betti(q)
    sizes = formulas.FAMILY_SIZES
    nul = formulas.FAMILY_NULLITIES
    for (name, lv), v in loc.items():
        i, j = nul[name] - lv, sizes[name](q)
        assert v * counts[name] == res.tables[lv].get(i, j), (name, lv)


def test_local_values_q7_representatives():
    q = 7
    code = build_rm22(q)
    reps = {f.name: f.representative for f in nullity_families(q)}
    for (name, lv), v in formulas.local_betti(q).items():
        if name == "E":
            continue
        assert abs(local_mobius(code, reps[name], lv)) == v, (name, lv)


def test_local_e_printed_reading():
    alt = formulas.local_betti(7)[("E", 1)]
    printed = formulas.local_betti(7, "printed")[("E", 1)]
    assert alt == run_rm22(7).tables[1].get(5, 49) and printed != alt


def test_mds_betti_is_herzog_kuhl():
    for lv in range(4):
        t = formulas.mds_betti(lv)
        hk = herzog_kuhl([0] + list(range(lv + 1, 5)), n=4)
        assert t.same_values(hk)


@pytest.mark.parametrize("q,m", [(2, 2), (3, 2), (2, 3), (4, 2), (3, 3)])
def test_rm1m_closed_forms(q, m):
    res = run_code(build_rm1m(q, m))
    assert formulas.rm1m_spectra(q, m).same_values(res.spectra)
    for lv in range(m + 1):
        assert formulas.rm1m_betti(q, m, lv).same_values(res.tables[lv])


def test_rm1m_weights():
    assert formulas.rm1m_weights(2, 3) == [0, 4, 6, 7, 8]
