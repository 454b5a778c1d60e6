from __future__ import annotations

import itertools
from collections import Counter

import numpy as np
import pytest

from hws import formulas
from hws.codes import build_rm22
from hws.exactalg import field_of_order
from hws.geometry import (affine_lines, census, classify, maximal_zero_sets, nullity_families)
from hws.matroid import Matroid, cycle_inventory

QS = (2, 3, 4, 5, 7, 8, 9)


def test_classify_examples():
    z2 = (0, 0, 0, 0, 0, 1)
    xy = (0, 1, 0, 0, 0, 0)
    for q in (2, 3, 5):
        assert classify(z2, q) == ("double-line", "a")
    assert classify(xy, 3) == ("line-pair", "d")
    # oracle: zeros of xy in A^2_3
    assert sum(1 for x, y in itertools.product(range(3), repeat=2) if x * y % 3 == 0) == 5
    # y^2 - xz: parabola y^2 = x, tangent to z = 0 at (1:0:0)
    for q in (3, 5, 7):
        F = field_of_order(q)
        par = (0, 0, F.neg(1), 1, 0, 0)
        assert classify(par, q) == ("irreducible", "g")
        assert sum(1 for x, y in itertools.product(range(q), repeat=2)
                   if F.sub(F.mul(y, y), x) == 0) == q


@pytest.mark.parametrize("q", QS)
def test_census_matches_counting_formulas(q):
    c = census(q)
    assert c.by_class == formulas.class_counts(q)
    assert c.by_category == formulas.category_counts(q)
    assert {k: sorted(v) for k, v in c.affine_zeros_by_category.items()} == \
        {k: [v] for k, v in formulas.category_affine_zeros(q).items()}
    assert sum(c.by_class.values()) == formulas.conic_total(q)
    if q >= 3:
        assert c.first_spectrum == formulas.first_spectrum(q)


def test_census_small_values():
    c = census(2)
    assert c.by_class == {"double-line": 7, "line-pair": 21, "irreducible": 28,
                          "conjugate-pair": 7}
    assert sum(c.by_class.values()) == 63
    assert census(3).by_class["double-line"] == 13
    assert census(4).by_category["e"] == 30


@pytest.mark.parametrize("q,expected", [(3, "de"), (4, "deh"), (5, "degh"), (7, "defgh"),
                                        (8, "defgh"), (9, "defgh")])
def test_maximal_zero_sets(q, expected):
    assert maximal_zero_sets(q) == frozenset(expected)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_maximality_grouped_equals_naive(q):
    assert maximal_zero_sets(q) == maximal_zero_sets(q, naive=True)


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_affine_lines(q):
    lines = affine_lines(q)
    assert lines.shape == (q * q + q, q * q)
    assert (lines.sum(axis=1) == q).all()
    # every pair of points lies on exactly one line
    inc = lines.astype(int)
    assert ((inc.T @ inc)[~np.eye(q * q, dtype=bool)] == 1).all()


def _four_arcs(q: int) -> int:
    """Oracle: 4-subsets of A^2_q with no three points collinear."""
    lines = [frozenset(map(int, row.nonzero()[0])) for row in affine_lines(q)]
    def col(a, b, c):
        return any(a in l and b in l and c in l for l in lines)
    return sum(1 for s in itertools.combinations(range(q * q), 4)
               if not any(col(*t) for t in itertools.combinations(s, 3)))


@pytest.mark.parametrize("q", [3, 4])
def test_families_exhaust_cycles(q):
    """Grouping the full cycle inventory by (nullity, size) recovers the families."""
    inv = Counter((c.nullity, c.size) for c in cycle_inventory(Matroid(build_rm22(q))))
    fam = Counter()
    for f in nullity_families(q):
        fam[(f.nullity, f.size)] += f.count
    assert inv == fam
    gamma = next(f for f in nullity_families(q) if f.name == "gamma")
    assert gamma.count == _four_arcs(q)


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_family_representatives(q):
    m = Matroid(build_rm22(q))
    for f in nullity_families(q):
        assert m.nullity(f.representative) == f.nullity
        assert bin(f.representative).count("1") == f.size
        bits = [b for b in range(m.n) if f.representative >> b & 1]
        assert all(m.nullity(f.representative & ~(1 << b)) < f.nullity for b in bits)
