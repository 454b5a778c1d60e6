from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from hws.codes import SpectrumTable, build_rm22, weight_distribution
from hws.errors import MissingColumn, NegativeSpectrum
from hws.exactalg import gaussian_binomial
from hws.gwp import (WeightPolynomial, extension_check, falling_product, forward_evaluate,
                     gwp_assemble, gwp_invert, polys_from_spectra, row_sums_match)
from hws.matroid import PhiProfile
from hws.pipeline import run_rm22


def test_weight_polynomial_basics():
    p = WeightPolynomial(3, (-2, 1, 1, 0, 0))
    assert p.coeffs == (-2, 1, 1) and p.degree == 2
    assert p(1) == 0 and p(2) == 4
    assert str(p) == "Z^2 + Z - 2"
    assert WeightPolynomial(0, (0,)).is_zero()


def test_falling_product():
    assert falling_product(2, 3, 0) == 1
    assert falling_product(2, 3, 2) == 7 * 6
    assert falling_product(3, 2, 2) == 8 * 6


def test_assemble_q5_column_15():
    phi = run_rm22(5).phi
    assert phi.get(0, 15) == -60
    polys = gwp_assemble(phi, columns=[0, 15])
    assert polys[15].coeffs == (-60, 60)
    assert polys[0].coeffs == (1,)
    assert gwp_invert({15: polys[15]}, 5, 6).get(1, 15) == 60


def test_assemble_missing_column():
    with pytest.raises(MissingColumn):
        gwp_assemble(run_rm22(3).phi, columns=[2])


def test_assemble_telescopes():
    # P_j(1) = phi^(k)_j - phi^(-1)_j = [j = 0] for any profile
    prof = PhiProfile(2, {0: {0: 1, 3: -2, 5: 7}, 1: {0: 1, 3: 4}})
    polys = gwp_assemble(prof)
    assert polys[0](1) == 1 and polys[3](1) == 0 and polys[5](1) == 0


def test_integer_polynomials_invert_integrally():
    # Z^m expands in the falling basis with Gaussian binomial coefficients
    for m in range(5):
        t = gwp_invert([WeightPolynomial(1, (0,) * m + (1,))], 3, 4)
        assert [t.get(r, 1) for r in range(5)] == [gaussian_binomial(m, r, 3) if r <= m else 0 for r in range(5)]


def test_invert_negative():
    with pytest.raises(NegativeSpectrum):
        gwp_invert([WeightPolynomial(2, (2, -1))], 2, 1)


def test_invert_w0():
    t = gwp_invert({0: WeightPolynomial(0, (1,))}, 3, 4)
    assert t.get(0, 0) == 1 and all(t.get(r, 0) == 0 for r in range(1, 5))


def test_c3_p5():
    polys = run_rm22(3).polys
    assert polys[5](3) == 108 == weight_distribution(build_rm22(3))[5]


def test_c2_extensions():
    polys = run_rm22(2).polys
    assert [polys[j](2) for j in range(5)] == [1, 4, 6, 4, 1]
    assert [polys[j](4) for j in range(5)] == [3 ** j * comb(4, j) for j in range(5)]


@pytest.mark.parametrize("q,m", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_extension_check(q, m):
    rep = extension_check(build_rm22(q), m, run_rm22(q).polys)
    assert rep.ok, rep.mismatches


@st.composite
def spectra(draw):
    q = draw(st.sampled_from((2, 3, 4, 5, 7, 8, 9)))
    k = draw(st.integers(1, 6))
    n = draw(st.integers(1, 12))
    A = {0: {0: 1}}
    for r in range(1, k + 1):
        A[r] = {w: draw(st.integers(0, 10 ** 6)) for w in range(1, n + 1)}
    return SpectrumTable(q, k, n, A)


@settings(max_examples=100, deadline=None)
@given(spectra())
def test_round_trip(t):
    polys = polys_from_spectra(t)
    for w, p in polys.items():
        for e in range(t.k + 1):
            assert p(t.q ** e) == forward_evaluate(t, w, e)
    back = gwp_invert(polys, t.q, t.k, t.n)
    assert back.same_values(t)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_row_sums(q):
    assert row_sums_match(run_rm22(q).spectra) == []
