"""Conics of the projective plane over GF(q): enumeration, classification, census.

Points of P^2 are ordered as in `codes.projective_points(q, 2)`: the q^2
affine points (x:y:1) first (index x*q + y), then the q+1 points of the line
L: z = 0.  Conic coefficients follow the monomial order x^2, xy, xz, y^2, yz, z^2.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

import numpy as np

from .codes import pack_rows, projective_points
from .errors import TooLarge, ZeroForm
from .exactalg import field_of_order

CLASSES = ("double-line", "line-pair", "irreducible", "conjugate-pair")
CATEGORIES = tuple("abcdefghij")
MONOMIALS = ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
MAX_Q = 16


def _monomial_values(q: int) -> np.ndarray:
    F = field_of_order(q)
    pts = projective_points(q, 2)
    out = np.zeros((6, len(pts)), dtype=np.intp)
    for m, mono in enumerate(MONOMIALS):
        for j, pt in enumerate(pts):
            v = 1
            for x, a in zip(pt, mono):
                if a:
                    v = F.mul(v, F.pow(x, a))
            out[m, j] = v
    return out


def _normalized_coefficients(q: int) -> np.ndarray:
    blocks = []
    for lead in range(6):
        free = 5 - lead
        N = q ** free
        blk = np.zeros((N, 6), dtype=np.intp)
        blk[:, lead] = 1
        idx = np.arange(N)
        for t in range(free):
            blk[:, lead + 1 + t] = (idx // q ** (free - 1 - t)) % q
        blocks.append(blk)
    return np.concatenate(blocks)


def _evaluate(q: int, coeffs: np.ndarray) -> np.ndarray:
    """Values of each conic at every projective point, shape (N, q^2+q+1)."""
    F = field_of_order(q)
    add, mul, _ = F.np_tables()
    mono = _monomial_values(q)
    vals = np.zeros((coeffs.shape[0], mono.shape[1]), dtype=np.uint16)
    for m in range(6):
        vals = add[vals, mul[coeffs[:, m][:, None], mono[m][None, :]]]
    return vals


def projective_lines(q: int) -> np.ndarray:
    """Boolean incidence (q^2+q+1, q^2+q+1): row = line, column = point."""
    F = field_of_order(q)
    add, mul, _ = F.np_tables()
    pts = np.array(projective_points(q, 2), dtype=np.intp)
    lines = pts  # dual plane uses the same normalized representatives
    val = np.zeros((len(lines), len(pts)), dtype=np.uint16)
    for t in range(3):
        val = add[val, mul[lines[:, t][:, None], pts[:, t][None, :]]]
    return val == 0


def affine_lines(q: int) -> np.ndarray:
    """Boolean (q^2+q, q^2): the affine parts of all lines other than L."""
    inc = projective_lines(q)
    n = q * q
    keep = inc[:, :n].any(axis=1)
    return inc[keep][:, :n]


@dataclass(frozen=True)
class ConicRecord:
    coeffs: tuple[int, ...]
    klass: str
    category: str
    projective_points: int
    affine_points: int
    zero_mask: int  # affine zero set, bit x*q+y


class ConicTable:
    """All (q^6-1)/(q-1) normalized conics, classified; a lazy sequence of ConicRecord."""

    def __init__(self, q: int):
        if q > MAX_Q:
            raise TooLarge(f"conic enumeration limited to q <= {MAX_Q}")
        self.q = q
        n = q * q
        self.coeffs = _normalized_coefficients(q)
        zero = _evaluate(q, self.coeffs) == 0
        self.n_proj = zero.sum(axis=1)
        self.n_inf = zero[:, n:].sum(axis=1)
        self.n_aff = self.n_proj - self.n_inf
        self.affine_zero = zero[:, :n]
        self.klass = self._classify(zero)
        self.category = self._categorize()

    def _classify(self, zero: np.ndarray) -> np.ndarray:
        q = self.q
        out = np.full(len(zero), -1, dtype=np.int8)
        out[self.n_proj == 2 * q + 1] = 1
        out[self.n_proj == 1] = 3
        cand = np.nonzero(self.n_proj == q + 1)[0]
        if len(cand):
            inc = projective_lines(q)
            z = zero[cand]
            first = np.argmax(z, axis=1)
            z2 = z.copy()
            z2[np.arange(len(cand)), first] = False
            second = np.argmax(z2, axis=1)
            # the unique line through the first two zeros
            through = inc[:, first].T & inc[:, second].T
            line = np.argmax(through, axis=1)
            collinear = ~(z & ~inc[line]).any(axis=1)
            out[cand[collinear]] = 0
            out[cand[~collinear]] = 2
        if (out < 0).any():
            raise AssertionError("conic with unexpected point count")
        return out

    def _categorize(self) -> np.ndarray:
        q = self.q
        k, inf = self.klass, self.n_inf
        cat = np.full(len(k), "?", dtype="<U1")
        rules = [
            (0, q + 1, "a"), (0, 1, "b"),
            (1, q + 1, "c"), (1, 2, "d"), (1, 1, "e"),
            (2, 2, "f"), (2, 1, "g"), (2, 0, "h"),
            (3, 0, "i"), (3, 1, "j"),
        ]
        for kl, ni, c in rules:
            cat[(k == kl) & (inf == ni)] = c
        if (cat == "?").any():
            raise AssertionError("unclassified conic")
        return cat

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> ConicRecord:
        n = self.q * self.q
        zm = 0
        for j in np.nonzero(self.affine_zero[i])[0]:
            zm |= 1 << int(j)
        return ConicRecord(tuple(int(c) for c in self.coeffs[i]), CLASSES[self.klass[i]],
                           str(self.category[i]), int(self.n_proj[i]), int(self.n_aff[i]), zm)

    def __iter__(self) -> Iterator[ConicRecord]:
        for i in range(len(self)):
            yield self[i]

    def index_of(self, coeffs) -> int:
        hit = np.nonzero((self.coeffs == np.asarray(coeffs)).all(axis=1))[0]
        if not len(hit):
            raise KeyError(coeffs)
        return int(hit[0])


_TABLES: dict[int, ConicTable] = {}


def enumerate_conics(q: int) -> ConicTable:
    if q not in _TABLES:
        _TABLES[q] = ConicTable(q)
    return _TABLES[q]


def normalize(coeffs, q: int) -> tuple[int, ...]:
    F = field_of_order(q)
    cs = [int(c) for c in coeffs]
    lead = next((c for c in cs if c), None)
    if lead is None:
        raise ZeroForm("all six coefficients are zero")
    inv = F.inv(lead)
    return tuple(F.mul(inv, c) for c in cs)


def classify(coeffs, q: int) -> tuple[str, str]:
    """(projective class, affine category) of one conic, by point counting."""
    F = field_of_order(q)
    cs = normalize(coeffs, q)
    pts = projective_points(q, 2)
    zeros = []
    for pt in pts:
        v = 0
        for c, mono in zip(cs, MONOMIALS):
            t = c
            for x, a in zip(pt, mono):
                if a:
                    t = F.mul(t, F.pow(x, a))
            v = F.add(v, t)
        if v == 0:
            zeros.append(pt)
    inf = sum(1 for p in zeros if p[2] == 0)
    N = len(zeros)

    def collinear(a, b, c) -> bool:
        # determinant of the 3x3 matrix of coordinates
        m = [a, b, c]
        det = 0
        for perm, sgn in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                          ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)):
            t = 1
            for r, col in enumerate(perm):
                t = F.mul(t, m[r][col])
            det = F.add(det, t) if sgn > 0 else F.sub(det, t)
        return det == 0

    if N == 2 * q + 1:
        klass = "line-pair"
        cat = {q + 1: "c", 2: "d", 1: "e"}[inf]
    elif N == 1:
        klass = "conjugate-pair"
        cat = {0: "i", 1: "j"}[inf]
    elif N == q + 1:
        if all(collinear(zeros[0], zeros[1], z) for z in zeros[2:]):
            klass = "double-line"
            cat = "a" if inf == q + 1 else "b"
        elif not any(collinear(*t) for t in combinations(zeros, 3)):
            klass = "irreducible"
            cat = {2: "f", 1: "g", 0: "h"}[inf]
        else:  # pragma: no cover
            raise AssertionError("q+1 zeros neither collinear nor an arc")
    else:  # pragma: no cover
        raise AssertionError(f"unexpected point count {N}")
    return klass, cat


@dataclass
class Census:
    q: int
    by_class: dict[str, int]
    by_category: dict[str, int]
    affine_zeros_by_category: dict[str, set[int]]
    first_spectrum: dict[int, int]


def census(q: int) -> Census:
    t = enumerate_conics(q)
    by_class = Counter(CLASSES[k] for k in t.klass.tolist())
    cats = Counter(t.category.tolist())
    zeros: dict[str, set[int]] = {}
    for c in CATEGORIES:
        sel = t.category == c
        zeros[c] = set(np.unique(t.n_aff[sel]).tolist())
    n = q * q
    spec = Counter((n - t.n_aff).tolist())
    return Census(q, {c: by_class.get(c, 0) for c in CLASSES},
                  {c: cats.get(c, 0) for c in CATEGORIES}, zeros,
                  dict(sorted((int(w), v) for w, v in spec.items())))


# -- inclusion-maximal affine zero sets -----------------------------------------

def _strictly_contained(Zs: np.ndarray, cands: np.ndarray) -> np.ndarray:
    """For each packed row of Zs: is it a proper subset of some row of cands?"""
    out = np.zeros(len(Zs), dtype=bool)
    step = max(1, (1 << 21) // max(1, len(cands)))
    for s in range(0, len(Zs), step):
        z = Zs[s:s + step]
        sub = np.ones((len(z), len(cands)), dtype=bool)
        eq = np.ones((len(z), len(cands)), dtype=bool)
        for w in range(Zs.shape[1]):
            sub &= (z[:, None, w] & ~cands[None, :, w]) == 0
            eq &= z[:, None, w] == cands[None, :, w]
        out[s:s + step] = (sub & ~eq).any(axis=1)
    return out


def maximal_flags(q: int) -> np.ndarray:
    """Per conic: is its affine zero set contained in no other conic's zero set?

    Every candidate superset of a zero set with two or more points contains
    its two lowest-indexed points, so each zero set is tested literally
    against the conics through that pair only.
    """
    t = enumerate_conics(q)
    Z = t.affine_zero
    P = pack_rows(Z)
    size = t.n_aff
    flags = np.zeros(len(t), dtype=bool)
    small = np.nonzero(size < 2)[0]
    for i in small:
        if size[i] == 0:
            flags[i] = not (size > 0).any()
        else:
            p = int(np.argmax(Z[i]))
            flags[i] = not (Z[:, p] & (size > 1)).any()
    big = np.nonzero(size >= 2)[0]
    zb = Z[big]
    first = np.argmax(zb, axis=1)
    tmp = zb.copy()
    tmp[np.arange(len(big)), first] = False
    second = np.argmax(tmp, axis=1)
    n = q * q
    owner = first * n + second
    order = np.argsort(owner, kind="stable")
    owner_sorted = owner[order]
    bounds = np.flatnonzero(np.diff(owner_sorted)) + 1
    for grp in np.split(order, bounds):
        a, b = divmod(int(owner[grp[0]]), n)
        cands = np.nonzero(Z[:, a] & Z[:, b])[0]
        rows = big[grp]
        flags[rows] = ~_strictly_contained(P[rows], P[cands])
    return flags


def maximal_flags_naive(q: int) -> np.ndarray:
    """All-pairs containment test (for small q cross-checks)."""
    t = enumerate_conics(q)
    P = pack_rows(t.affine_zero)
    return ~_strictly_contained(P, P)


def maximality_by_category(q: int, naive: bool = False) -> dict[str, tuple[int, int]]:
    t = enumerate_conics(q)
    flags = maximal_flags_naive(q) if naive else maximal_flags(q)
    out = {}
    for c in CATEGORIES:
        sel = t.category == c
        out[c] = (int(flags[sel].sum()), int(sel.sum()))
    return out


def maximal_zero_sets(q: int, naive: bool = False) -> frozenset[str]:
    """Categories all of whose members have inclusion-maximal affine zero sets."""
    stats = maximality_by_category(q, naive)
    return frozenset(c for c, (m, tot) in stats.items() if tot and m == tot)


# -- configuration families of minimal nullity sets -------------------------------

@dataclass(frozen=True)
class Family:
    """A family of subsets of A^2 (complements of a point configuration)."""
    name: str
    nullity: int
    size: int
    count: int
    representative: int
    homogeneous: bool


def _complement(q: int, pts) -> int:
    full = (1 << (q * q)) - 1
    m = 0
    for x, y in pts:
        m |= 1 << (x * q + y)
    return full & ~m


def nullity_families(q: int) -> list[Family]:
    """Candidate minimal nullity sets for C_q (q >= 3), grouped by configuration.

    Circuits come from the conic census restricted to maximal categories;
    the other families are complements of point configurations, counted by
    enumerating affine lines.  Each representative is the complement of a
    configuration built from the points (0,0), (1,0), (0,1), (1,1).
    """
    if q < 3:
        raise ValueError("families are defined for q >= 3")
    n = q * q
    t = enumerate_conics(q)
    lines = affine_lines(q)
    L = len(lines)
    out = []
    for c in sorted(maximal_zero_sets(q)):
        idx = np.nonzero(t.category == c)[0]
        zeros = int(t.n_aff[idx[0]])
        rep = ((1 << n) - 1) & ~t[int(idx[0])].zero_mask
        out.append(Family(f"conic-{c}", 1, n - zeros, len(idx), rep, False))
    line0 = [(x, 0) for x in range(q)]
    out += [
        Family("theta", 2, n - q - 1, L * (n - q), _complement(q, line0 + [(0, 1)]), True),
        Family("gamma", 2, n - 4, comb(n, 4) - L * (comb(q, 3) * (n - q) + comb(q, 4)),
               _complement(q, [(0, 0), (1, 0), (0, 1), (1, 1)]), False),
        Family("alpha", 3, n - q, L, _complement(q, line0), True),
        Family("delta", 3, n - 3, comb(n, 3) - L * comb(q, 3),
               _complement(q, [(0, 0), (1, 0), (0, 1)]), True),
        Family("epsilon", 4, n - 2, comb(n, 2), _complement(q, [(0, 0), (1, 0)]), True),
        Family("omega", 5, n - 1, n, _complement(q, [(0, 0)]), True),
        Family("E", 6, n, 1, (1 << n) - 1, True),
    ]
    return out
