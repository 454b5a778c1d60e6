"""Cycles of PRM_q(d, m) versus RM_q(d, m): exhaustive check of the affine/projective transfer.

The affine points are the first q^m projective points (last coordinate 1),
so E2 is the low-bit block of E1 and intersecting with E2 is a mask.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

from .codes import build_prm, build_rm
from .errors import DegreeTooLarge, TooLarge
from .exactalg import prime_power
from .matroid import SUBSET_SCAN_MAX, Matroid, _scan_minimal

MAX_GROUND = 20


@dataclass
class CorrespondenceReport:
    q: int
    d: int
    m: int
    n_affine: int
    n_projective: int
    rank_affine: int
    rank_projective: int
    affine_minimal: dict[int, list[int]]
    projective_minimal: dict[int, list[int]]
    direction_a: bool
    direction_b: bool
    witness_levels: dict[int, list[int]] = dc_field(default_factory=dict)
    counterexamples: list[tuple[str, int, int]] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.direction_a and self.direction_b and not self.counterexamples
                and self.rank_affine == self.rank_projective == comb(self.m + self.d, self.d))


def _by_level(pairs: list[tuple[int, int]]) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for mask, i in pairs:
        out.setdefault(i, []).append(mask)
    return {i: sorted(v) for i, v in sorted(out.items())}


def verify_correspondence(q: int, d: int, m: int) -> CorrespondenceReport:
    """Check both set relations between minimal nullity sets of the two matroids.

    (a) every minimal set of affine nullity i is the affine part of a minimal
        projective set of nullity i;
    (b) the affine part of every minimal projective set of nullity i is a
        minimal affine set of some nullity j >= i.
    """
    prime_power(q)
    if d >= q:
        raise DegreeTooLarge(f"d={d} must be < q={q}")
    n1 = (q ** (m + 1) - 1) // (q - 1)
    n2 = q ** m
    if n1 > min(MAX_GROUND, SUBSET_SCAN_MAX):
        raise TooLarge(f"projective ground set of size {n1} exceeds {MAX_GROUND}")
    aff, proj = Matroid(build_rm(q, d, m)), Matroid(build_prm(q, d, m))
    A = _by_level(_scan_minimal(aff))
    P = _by_level(_scan_minimal(proj))
    low = (1 << n2) - 1
    aff_level = {s: i for i, ss in A.items() for s in ss}
    bad: list[tuple[str, int, int]] = []

    proj_parts = {i: {s & low for s in ss} for i, ss in P.items()}
    for i, ss in A.items():
        for s in ss:
            if s not in proj_parts.get(i, ()):
                bad.append(("a", i, s))

    witnesses: dict[int, list[int]] = {}
    for i, ss in P.items():
        levels = set()
        for s in ss:
            part = s & low
            j = aff_level.get(part)
            if j is None or j < i:
                bad.append(("b", i, s))
            else:
                levels.add(j)
        witnesses[i] = sorted(levels)

    return CorrespondenceReport(
        q, d, m, n2, n1, aff.code.k, proj.code.k, A, P,
        direction_a=not any(t == "a" for t, _, _ in bad),
        direction_b=not any(t == "b" for t, _, _ in bad),
        witness_levels=witnesses, counterexamples=bad)


def line_at_infinity_check(q: int) -> bool:
    """Each affine line (L u M minus L) is the complement of a minimal set of nullity 3."""
    from .geometry import affine_lines
    m = Matroid(build_rm(q, 2, 2))
    if m.n > SUBSET_SCAN_MAX:
        raise TooLarge("ground set too large for a subset scan")
    levels = dict(_scan_minimal(m))
    full = (1 << m.n) - 1
    for row in affine_lines(q):
        line = sum(1 << int(p) for p in row.nonzero()[0])
        if levels.get(full ^ line) != 3:
            return False
    return True
