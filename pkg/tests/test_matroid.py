from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hws.codes import build_rm1m, build_rm22
from hws.errors import MissingElongation, OutOfRange
from hws.formulas import mds_betti
from hws.geometry import nullity_families
from hws.matroid import (BettiTable, Matroid, all_betti_tables, betti_table, cycle_inventory,
                         euler_characteristic, local_mobius, mobius, phi_profile, popcount)
from hws.pipeline import rm22_tables

from conftest import codewords, support_mask


@pytest.fixture(scope="module")
def m3(c3):
    return Matroid(c3)


@pytest.fixture(scope="module")
def m4():
    return Matroid(build_rm22(4))


def test_nullity_against_codeword_oracle(m3, c3_words):
    supports = [support_mask(w) for w in c3_words]
    for sigma in range(1 << 9):
        inside = sum(1 for s in supports if s & ~sigma == 0)
        assert 3 ** m3.nullity(sigma) == inside
        assert m3.nullity_table()[sigma] == m3.nullity(sigma)


def test_nullity_examples(m3, c2):
    assert m3.nullity(m3.ground) == 6
    assert m3.nullity(0) == 0
    m2 = Matroid(c2)
    assert all(m2.nullity(s) == popcount(s) for s in range(16))  # rank 0 everywhere
    assert all(m2.elongate(4).nullity(s) == 0 for s in range(16))
    line = sum(1 << (0 * 3 + y) for y in range(3))  # x = 0
    comp = m3.ground & ~line
    assert m3.nullity(comp) == 3
    assert m3.elongate(2).nullity(comp) == 1
    for p in range(9):
        assert m3.nullity(m3.ground & ~(1 << p)) == 5


def test_line_complements_minimal(m3):
    line = sum(1 << (0 * 3 + y) for y in range(3))
    comp = m3.ground & ~line
    assert all(m3.nullity(comp & ~(1 << b)) < 3 for b in range(9) if comp >> b & 1)


def test_elongation_zero_identity(m3):
    rng = random.Random(1)
    e0 = m3.elongate(0)
    for _ in range(1000):
        s = rng.getrandbits(9)
        assert e0.nullity(s) == m3.nullity(s)


def test_elongation_range(m3):
    with pytest.raises(OutOfRange):
        m3.elongate(7)


def test_top_elongation_single_cycle(m3):
    cyc = cycle_inventory(m3.elongate(5))
    assert [(c.mask, c.nullity) for c in cyc] == [(m3.ground, 1)]


def test_semimodularity_random_pairs(m4):
    """n(A u B) + n(A n B) >= n(A) + n(B) on 10^4 random pairs."""
    rng = random.Random(7)
    tbl = m4.nullity_table()
    for _ in range(10_000):
        a, b = rng.getrandbits(16), rng.getrandbits(16)
        assert int(tbl[a | b]) + int(tbl[a & b]) >= int(tbl[a]) + int(tbl[b])
    for _ in range(200):  # direct rank oracle, also elongated
        a, b = rng.getrandbits(16), rng.getrandbits(16)
        m = m4.elongate(rng.randrange(6))
        assert m.nullity(a | b) + m.nullity(a & b) >= m.nullity(a) + m.nullity(b)


def test_inventory_methods_agree(m3):
    a = [(c.mask, c.nullity) for c in cycle_inventory(m3, "subset-scan")]
    b = [(c.mask, c.nullity) for c in cycle_inventory(m3, "subcode-supports")]
    assert sorted(a) == sorted(b)


def test_circuits_have_mu_minus_one(m3):
    inv = cycle_inventory(m3)
    memo: dict[int, int] = {}
    for c in [c for c in inv if c.nullity == 1][:30]:
        assert mobius(m3, c, inv, memo) == -1


def test_mobius_matches_euler_characteristic(m3):
    inv = cycle_inventory(m3)
    memo: dict[int, int] = {}
    rng = random.Random(3)
    for c in rng.sample(inv, 60):
        assert abs(mobius(m3, c, inv, memo)) == abs(euler_characteristic(m3, c.mask))


@pytest.mark.parametrize("q", [3, 4, 5])
def test_theta_local_mu_is_q(q):
    fam = {f.name: f for f in nullity_families(q)}
    assert abs(local_mobius(build_rm22(q), fam["theta"].representative)) == q


def test_alpha_local_mu_q7():
    q = 7
    fam = {f.name: f for f in nullity_families(q)}
    assert abs(local_mobius(build_rm22(q), fam["alpha"].representative)) == q ** 3 - 2 * q ** 2 - q + 2


def test_betti_q3():
    t = rm22_tables(3, "full")[0]
    assert t.get(2, 5) == 324 and t.get(3, 6) == 600


def test_betti_q2_row():
    t = rm22_tables(2, "full")[0]
    assert [t.get(i, i) for i in range(5)] == [1, 4, 6, 4, 1]


def test_betti_q5_elongation2():
    t = rm22_tables(5, "full")[2]
    assert t.get(1, 20) == 30 and t.get(1, 22) == 2000


def test_uniform_matroid_tables():
    """RM_2(1,2) has matroid U(1,4), the first elongation of U(0,4)."""
    tabs = all_betti_tables(Matroid(build_rm1m(2, 2)))
    assert tabs[0].get(1, 2) == math.comb(4, 2)
    for lv, t in tabs.items():
        assert t.same_values(mds_betti(lv + 1))


def test_phi_profile_missing_elongation():
    tabs = rm22_tables(3, "full")
    with pytest.raises(MissingElongation):
        phi_profile({0: tabs[0]}, 6)


def test_betti_table_helpers():
    t = BettiTable(0, 2, 3, {(0, 0): 1, (1, 2): 3, (2, 3): 2})
    assert t.phi() == {0: 1, 2: -3, 3: 2}
    assert t.row_form() == {0: {0: 1}, 1: {1: 3, 2: 2}}
    assert t.as_dict() == {"0": {"0": 1}, "1": {"2": 3}, "2": {"3": 2}}
