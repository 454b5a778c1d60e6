"""Boij-Soderberg identities, the phi-coordinate solver, Herzog-Kuhl, and RM_q(2,2) shapes."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from .errors import (NegativeBetti, NonIntegralSolution, OutOfRange, Underdetermined,
                     UnsupportedQ)
from .exactalg import prime_power, solve_exact
from .matroid import BettiTable, local_mobius


def bs_residuals(t: BettiTable, k: int | None = None) -> list[int]:
    k = t.length if k is None else k
    res = []
    for s in range(k):
        res.append(sum((-1) ** i * j ** s * v for (i, j), v in t.beta.items()))
    return res


def bs_verify(t: BettiTable, k: int | None = None) -> tuple[bool, list[int]]:
    """True iff sum_{i,j} (-1)^i j^s beta_{i,j} = 0 for s = 0..k-1."""
    res = bs_residuals(t, k)
    return not any(res), res


@dataclass
class Slot:
    i: int
    j: int
    value: int | None
    tag: str


@dataclass
class ResolutionShape:
    level: int
    length: int
    n: int
    slots: list[Slot] = dc_field(default_factory=list)

    def unknowns(self) -> list[Slot]:
        return [s for s in self.slots if s.value is None]

    def known(self) -> list[Slot]:
        return [s for s in self.slots if s.value is not None]

    def columns(self) -> list[int]:
        return sorted({s.j for s in self.slots})


def bs_solve(shape: ResolutionShape, known: dict[tuple[int, int], int] | None = None) -> BettiTable:
    """Fill the unknown slots of a shape from the Boij-Soderberg identities.

    Works in phi-coordinates: one unknown phi_j per column containing an
    unknown slot; the known slots of that column are subtracted afterwards.
    """
    known = dict(known or {})
    slots = []
    for s in shape.slots:
        v = known.get((s.i, s.j), s.value)
        slots.append(Slot(s.i, s.j, v, s.tag))
    unknown_cols: dict[int, Slot] = {}
    for s in slots:
        if s.value is None:
            if s.j in unknown_cols:
                raise Underdetermined(f"two unknown slots in column {s.j}")
            unknown_cols[s.j] = s
    known_phi: dict[int, int] = {}
    for s in slots:
        if s.value is not None:
            known_phi[s.j] = known_phi.get(s.j, 0) + (-1) ** s.i * s.value
    cols = sorted(unknown_cols)
    L = shape.length
    if len(cols) > L:
        raise Underdetermined(f"{len(cols)} unknown columns, {L} identities")
    beta = {(s.i, s.j): s.value for s in slots if s.value is not None}
    if cols:
        A = [[Fraction(j) ** s for j in cols] for s in range(L)]
        b = [-sum(Fraction(j) ** s * v for j, v in known_phi.items() if j not in unknown_cols)
             for s in range(L)]
        sol = solve_exact(A, b)
        for j, x in zip(cols, sol.x):
            if x.denominator != 1:
                raise NonIntegralSolution(f"phi_{j} = {x}")
            s = unknown_cols[j]
            v = (-1) ** s.i * (int(x) - known_phi.get(j, 0))
            if v < 0:
                raise NegativeBetti(f"beta_{s.i},{j} = {v}")
            beta[(s.i, j)] = v
    t = BettiTable(shape.level, L, shape.n, {ij: v for ij, v in beta.items() if v})
    ok, res = bs_verify(t)
    if not ok:
        from .errors import BSViolation
        raise BSViolation(f"solved table violates identities: {res}")
    return t


def herzog_kuhl(pt: Sequence[int], beta00: int = 1, n: int | None = None) -> BettiTable:
    """Pure resolution of type (d_0 < ... < d_L): beta_i = beta_0 prod_{j != i} |d_j - d_0|/|d_j - d_i|."""
    d = list(pt)
    if any(b <= a for a, b in zip(d, d[1:])):
        raise OutOfRange("pure type must be strictly increasing")
    L = len(d) - 1
    beta = {(0, d[0]): beta00}
    for i in range(1, L + 1):
        v = Fraction(beta00)
        for j in range(1, L + 1):
            if j != i:
                v *= Fraction(d[j] - d[0], abs(d[j] - d[i]))
        assert v.denominator == 1, v
        beta[(i, d[i])] = abs(int(v))
    return BettiTable(0, L, n if n is not None else d[-1], beta)


# -- RM_q(2,2) shapes -----------------------------------------------------------

@dataclass
class FamilyData:
    """Inputs used to build a shape: families and locally computed |mu| values."""
    q: int
    families: list
    local_mu: dict[tuple[str, int], int]


def rm22_family_data(q: int) -> FamilyData:
    from .codes import build_rm22
    from .geometry import nullity_families
    fams = nullity_families(q)
    code = build_rm22(q)
    local: dict[tuple[str, int], int] = {}
    by = {f.name: f for f in fams}
    # The theta aggregate (and, for q=4, the alpha summand of the merged
    # column 12) are computed from representatives; everything else is solved.
    if q >= 4:
        local[("theta", 0)] = abs(local_mobius(code, by["theta"].representative, 0))
    if q == 4:
        local[("alpha", 0)] = abs(local_mobius(code, by["alpha"].representative, 0))
    return FamilyData(q, fams, local)


def rm22_shape(q: int, level: int, data: FamilyData | None = None) -> ResolutionShape:
    """Slots of the resolution of the l-th elongation of the matroid of C_q."""
    p, _ = prime_power(q)
    if q == 2:
        k = 4
        if not 0 <= level <= k:
            raise OutOfRange("elongation out of range")
        slots = [Slot(0, 0, 1, "unit")]
        slots += [Slot(i, i + level, None, f"U-{i}") for i in range(1, k - level + 1)]
        return ResolutionShape(level, k - level, 4, slots)
    if q == 6:  # pragma: no cover - rejected by prime_power
        raise UnsupportedQ(q)
    k = 6
    if not 0 <= level <= k:
        raise OutOfRange("elongation out of range")
    data = data or rm22_family_data(q)
    n = q * q
    grouped: dict[tuple[int, int], list] = {}
    for f in data.families:
        if f.nullity <= level:
            continue
        grouped.setdefault((f.nullity - level, f.size), []).append(f)
    slots = [Slot(0, 0, 1, "unit")]
    for (i, j), fams in sorted(grouped.items()):
        tag = "+".join(f.name for f in fams)
        value = 0
        for f in fams:
            if i == 1:
                value += f.count
            elif (f.name, level) in data.local_mu:
                value += f.count * data.local_mu[(f.name, level)]
            else:
                value = None
                break
        slots.append(Slot(i, j, value, tag))
    return ResolutionShape(level, k - level, n, slots)
