from __future__ import annotations

import pytest

from hws.codes import brute_force_spectra, build_rm22
from hws.errors import OutOfRange
from hws.pipeline import rm22_tables, run_code, run_rm22


@pytest.mark.parametrize("q", [3, 4, 5])
def test_full_and_bs_agree(q):
    full, bs = rm22_tables(q, "full"), rm22_tables(q, "bs")
    assert all(full[lv].same_values(bs[lv]) for lv in full)


@pytest.mark.parametrize("q", [2, 3])
def test_pipeline_equals_brute_force(q):
    assert run_rm22(q).spectra.same_values(brute_force_spectra(build_rm22(q)))


def test_run_code_generic():
    res = run_code(build_rm22(3))
    assert res.spectra.same_values(run_rm22(3).spectra)


def test_unknown_method():
    with pytest.raises(OutOfRange):
        rm22_tables(3, "fast")


def test_q3_values():
    sp = run_rm22(3).spectra
    assert (sp.get(1, 5), sp.get(2, 7), sp.get(3, 7)) == (54, 2160, 1188)
    assert run_rm22(3).tables[0].get(2, 5) == 324
