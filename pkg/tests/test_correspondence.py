from __future__ import annotations

import pytest

from hws.codes import build_prm, build_rm
from hws.correspondence import line_at_infinity_check, verify_correspondence
from hws.errors import DegreeTooLarge, TooLarge
from hws.matroid import Matroid, cycle_inventory


@pytest.mark.parametrize("q,d,m", [(3, 2, 2), (3, 1, 2), (2, 1, 2), (3, 1, 1), (2, 1, 3)])
def test_correspondence_holds(q, d, m):
    rep = verify_correspondence(q, d, m)
    assert rep.ok, rep.counterexamples[:5]
    assert rep.n_affine == q ** m
    assert rep.n_projective == (q ** (m + 1) - 1) // (q - 1)


@pytest.mark.parametrize("q,d,m", [(3, 2, 2), (3, 1, 2)])
def test_minimal_sets_match_subcode_supports(q, d, m):
    rep = verify_correspondence(q, d, m)
    for code, found in ((build_rm(q, d, m), rep.affine_minimal),
                        (build_prm(q, d, m), rep.projective_minimal)):
        inv = cycle_inventory(Matroid(code), "subcode-supports")
        by_level: dict[int, list[int]] = {}
        for c in inv:
            by_level.setdefault(c.nullity, []).append(c.mask)
        assert {i: sorted(v) for i, v in by_level.items()} == found


def test_degree_too_large():
    with pytest.raises(DegreeTooLarge):
        verify_correspondence(2, 2, 2)


def test_ground_set_limit():
    with pytest.raises(TooLarge):
        verify_correspondence(4, 1, 2)


def test_line_at_infinity():
    assert line_at_infinity_check(3)
    assert line_at_infinity_check(4)
