"""Parity-check matroids of codes: nullity, elongation, cycles, Mobius values, Betti tables.

A subset of the ground set is an int bitmask (bit j = coordinate j).  The
nullity of sigma is dim C(sigma), the dimension of the subcode supported
inside sigma; for the l-th elongation it is max(n(sigma) - l, 0).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .codes import (LinearCode, int_to_mask, mask_to_int, message_supports, n_words,
                    subspace_support_chunks, SUBSPACE_BUDGET)
from .errors import (BSViolation, IncompleteInventory, MissingElongation, OutOfRange,
                     TooLarge)
from .exactalg import FFMatrix, gaussian_binomial

SUBSET_SCAN_MAX = 25


def as_mask(sigma) -> int:
    if isinstance(sigma, (int, np.integer)):
        return int(sigma)
    m = 0
    for j in sigma:
        m |= 1 << j
    return m


def bits(mask: int) -> list[int]:
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Matroid:
    """Parity-check matroid of a linear code, possibly elongated."""

    def __init__(self, code: LinearCode, level: int = 0):
        self.code = code
        self.n = code.n
        self.k = code.k
        self.level = level
        self.field = code.field
        self._cols = [tuple(r[j] for r in code.generator.rows) for j in range(code.n)]
        self._table: np.ndarray | None = None

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    def _rank_cols(self, cols: Iterable[int]) -> int:
        f = self.field
        basis: dict[int, list[int]] = {}
        k = self.k
        for j in cols:
            v = list(self._cols[j])
            for p, b in basis.items():
                if v[p]:
                    c = f.neg(v[p])
                    v = [f.add(x, f.mul(c, y)) for x, y in zip(v, b)]
            piv = next((i for i, x in enumerate(v) if x), None)
            if piv is None:
                continue
            inv = f.inv(v[piv])
            v = [f.mul(inv, x) for x in v]
            for p, b in basis.items():
                if b[piv]:
                    c = f.neg(b[piv])
                    basis[p] = [f.add(x, f.mul(c, y)) for x, y in zip(b, v)]
            basis[piv] = v
            if len(basis) == k:
                break
        return len(basis)

    def base_nullity(self, sigma) -> int:
        s = as_mask(sigma)
        comp = self.ground & ~s
        return self.k - self._rank_cols(bits(comp))

    def nullity(self, sigma) -> int:
        return max(self.base_nullity(sigma) - self.level, 0)

    def rank(self, sigma) -> int:
        """Matroid rank |sigma| - n(sigma)."""
        s = as_mask(sigma)
        return popcount(s) - self.nullity(s)

    def elongate(self, level: int) -> "Matroid":
        if not 0 <= level <= self.k:
            raise OutOfRange(f"elongation {level} outside 0..{self.k}")
        m = Matroid(self.code, level)
        m._table = self._table
        return m

    @property
    def top_nullity(self) -> int:
        return max(self.k - self.level, 0)

    # -- exhaustive nullity table ---------------------------------------------
    def nullity_table(self) -> np.ndarray:
        """Base nullity of every subset (int8 array of length 2^n), n <= 25.

        Built independently of the rank oracle: count codewords by exact
        support, then sum over subsets (zeta transform); |C(sigma)| = q^n(sigma).
        """
        if self._table is None:
            n = self.n
            if n > SUBSET_SCAN_MAX:
                raise TooLarge(f"subset scan needs n <= {SUBSET_SCAN_MAX}, got {n}")
            sup = message_supports(self.code)[:, 0].astype(np.int64)
            cnt = np.bincount(sup, minlength=1 << n).astype(np.int32)
            for b in range(n):
                v = cnt.reshape(-1, 2, 1 << b)
                v[:, 1, :] += v[:, 0, :]
            q = self.code.q
            nul = np.zeros(1 << n, dtype=np.int8)
            pw = 1
            for i in range(1, self.k + 1):
                pw *= q
                nul[cnt >= pw] = i
            self._table = nul
        return self._table


# -- cycles ---------------------------------------------------------------------

@dataclass
class Cycle:
    mask: int
    nullity: int
    mu: int | None = None
    tag: str | None = None

    @property
    def size(self) -> int:
        return popcount(self.mask)


def from_code(c: LinearCode) -> Matroid:
    return Matroid(c)


def elongate(m: Matroid, level: int) -> Matroid:
    return m.elongate(level)


def nullity(m: Matroid, sigma) -> int:
    return m.nullity(sigma)


def _scan_minimal(m: Matroid) -> list[tuple[int, int]]:
    nul = m.nullity_table()
    n = m.n
    minimal = nul > 0
    for b in range(n):
        mv = minimal.reshape(-1, 2, 1 << b)
        nv = nul.reshape(-1, 2, 1 << b)
        mv[:, 1, :] &= nv[:, 1, :] > nv[:, 0, :]
    idx = np.nonzero(minimal)[0]
    return [(int(s), int(nul[s])) for s in idx]


def _unique_rows(a: np.ndarray) -> np.ndarray:
    if a.shape[1] == 1:
        return np.unique(a[:, 0])[:, None]
    return np.unique(a, axis=0)


def support_cycles(code: LinearCode, budget: int = SUBSPACE_BUDGET,
                   max_dim: int | None = None) -> list[tuple[int, int]]:
    """(support, nullity) for every cycle, read off subcode supports.

    The nullity of a support is the largest dimension of a subcode having it.
    """
    k, q = code.k, code.q
    max_dim = k if max_dim is None else max_dim
    total = sum(gaussian_binomial(k, r, q) for r in range(1, max_dim + 1))
    if total > budget:
        raise TooLarge(f"{total} subcodes exceed budget {budget}")
    masks = message_supports(code)
    best: dict[int, int] = {}
    for r in range(1, max_dim + 1):
        seen = []
        for blk in subspace_support_chunks(masks, k, q, r):
            seen.append(_unique_rows(blk))
        u = _unique_rows(np.concatenate(seen))
        for row in u:
            best[mask_to_int(row)] = r
    best.pop(0, None)
    return sorted(best.items(), key=lambda t: (t[1], popcount(t[0]), t[0]))


def cycle_inventory(m: Matroid, method: str = "auto", *, budget: int = SUBSPACE_BUDGET) -> list[Cycle]:
    """All cycles of the (elongated) matroid, i.e. minimal sets of every N_i, i >= 1."""
    if method == "auto":
        method = "subset-scan" if m.n <= 20 else "subcode-supports"
    if method == "subset-scan":
        base = _scan_minimal(m)
    elif method == "subcode-supports":
        base = support_cycles(m.code, budget)
    else:
        raise ValueError(f"unknown inventory method {method!r}")
    out = [Cycle(s, i - m.level) for s, i in base if i > m.level]
    out.sort(key=lambda c: (c.nullity, c.size, c.mask))
    return out


# -- Mobius ---------------------------------------------------------------------

def _mask_matrix(cycles: Sequence[Cycle], W: int) -> np.ndarray:
    if not cycles:
        return np.zeros((0, W), dtype=np.uint64)
    return np.stack([int_to_mask(c.mask, W) for c in cycles])


def mobius_all(cycles: list[Cycle], n: int, block: int = 512) -> list[Cycle]:
    """Fill in mu for every cycle of a lattice given as its full cycle list.

    mu(empty) = 1 and mu(sigma) = -sum over cycles strictly inside sigma.
    Cycles strictly inside sigma have strictly smaller nullity.
    """
    W = n_words(n)
    cycles = sorted(cycles, key=lambda c: (c.nullity, c.size, c.mask))
    M = _mask_matrix(cycles, W)
    mu = np.zeros(len(cycles), dtype=np.int64)
    levels = sorted({c.nullity for c in cycles})
    start = 0
    for lev in levels:
        stop = start
        while stop < len(cycles) and cycles[stop].nullity == lev:
            stop += 1
        lower = M[:start]
        step = max(1, min(block, (1 << 22) // max(start, 1)))
        for s in range(start, stop, step):
            e = min(stop, s + step)
            if start == 0:
                mu[s:e] = -1
                continue
            blk = M[s:e]
            inside = np.ones((e - s, start), dtype=bool)
            for w in range(W):
                inside &= (lower[None, :, w] & ~blk[:, None, w]) == 0
            mu[s:e] = -1 - inside.astype(np.int64) @ mu[:start]
        start = stop
    for c, v in zip(cycles, mu):
        c.mu = int(v)
    return cycles


def mobius(m: Matroid, sigma: Cycle, inventory: Sequence[Cycle],
           memo: dict[int, int] | None = None) -> int:
    """Recursive mu(sigma) over an inventory containing all cycles below sigma."""
    memo = {} if memo is None else memo
    if sigma.mask in memo:
        return memo[sigma.mask]
    below = [t for t in inventory if t.mask != sigma.mask and t.mask & ~sigma.mask == 0]
    present = {t.nullity for t in below}
    missing = [i for i in range(1, sigma.nullity) if i not in present]
    if missing:
        raise IncompleteInventory(f"no cycles of nullity {missing} below {sigma.mask:#x}")
    total = 1
    for t in sorted(below, key=lambda c: c.nullity):
        total += mobius(m, t, inventory, memo)
    memo[sigma.mask] = -total
    return -total


def _submasks(mask: int) -> np.ndarray:
    bs = bits(mask)
    out = np.zeros(1 << len(bs), dtype=np.int64)
    ar = np.arange(1 << len(bs), dtype=np.int64)
    for i, b in enumerate(bs):
        out |= ((ar >> i) & 1) << b
    return out


def euler_characteristic(m: Matroid, sigma) -> int:
    """Alternating count sum_{tau subset sigma dependent} (-1)^|tau| (brute force).

    Up to sign this is the reduced Euler characteristic of the independence
    complex of the restriction to sigma, so |result| = |mu(sigma)|.
    """
    s = as_mask(sigma)
    if popcount(s) > 20:
        raise TooLarge("Euler characteristic brute force limited to |sigma| <= 20")
    subs = _submasks(s)
    if m.n <= SUBSET_SCAN_MAX:
        nul = m.nullity_table()[subs].astype(np.int64) - m.level
    else:
        nul = np.array([m.nullity(int(t)) for t in subs])
    sizes = np.bitwise_count(subs.astype(np.uint64)).astype(np.int64)
    sign = 1 - 2 * (sizes & 1)
    return int(sign[nul > 0].sum())


# -- Betti tables ---------------------------------------------------------------

@dataclass
class BettiTable:
    """Graded Betti numbers beta_{i,j} of one elongation (zeros omitted)."""
    level: int
    length: int
    n: int
    beta: dict[tuple[int, int], int] = dc_field(default_factory=dict)

    def get(self, i: int, j: int) -> int:
        return self.beta.get((i, j), 0)

    def items(self):
        return sorted((ij, v) for ij, v in self.beta.items() if v)

    def phi(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, j), v in self.beta.items():
            out[j] = out.get(j, 0) + (-1) ** i * v
        return {j: v for j, v in sorted(out.items()) if v}

    def row_form(self) -> dict[int, dict[int, int]]:
        """Row layout: row r holds beta_{i, i+r}."""
        rows: dict[int, dict[int, int]] = {}
        for (i, j), v in self.items():
            rows.setdefault(j - i, {})[i] = v
        return dict(sorted(rows.items()))

    def same_values(self, other: "BettiTable") -> bool:
        return dict(self.items()) == dict(other.items())

    def as_dict(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for (i, j), v in self.items():
            out.setdefault(str(i), {})[str(j)] = v
        return out


def table_from_cycles(cycles: Sequence[Cycle], level: int, length: int, n: int) -> BettiTable:
    t = BettiTable(level, length, n, {(0, 0): 1})
    for c in cycles:
        key = (c.nullity, c.size)
        t.beta[key] = t.beta.get(key, 0) + abs(c.mu)
    return t


def check_bs(t: BettiTable) -> None:
    from .resolution import bs_verify
    ok, res = bs_verify(t, t.length)
    if not ok:
        raise BSViolation(f"Boij-Soderberg residuals {res} at elongation {t.level}")


def betti_table(m: Matroid, level: int | None = None, *, method: str = "auto",
                inventory: Sequence[tuple[int, int]] | None = None) -> BettiTable:
    """Full-lattice Betti table of the elongation (default: the matroid's own level).

    `inventory` may pass precomputed base (mask, nullity) pairs to avoid
    recomputing them for each elongation.
    """
    level = m.level if level is None else level
    mm = m.elongate(level) if level != m.level else m
    if inventory is None:
        cycles = cycle_inventory(mm, method)
    else:
        cycles = [Cycle(s, i - level) for s, i in inventory if i > level]
    mobius_all(cycles, m.n)
    t = table_from_cycles(cycles, level, mm.top_nullity, m.n)
    check_bs(t)
    return t


def base_inventory(m: Matroid, method: str = "auto", budget: int = SUBSPACE_BUDGET) -> list[tuple[int, int]]:
    base = m.elongate(0)
    return [(c.mask, c.nullity) for c in cycle_inventory(base, method, budget=budget)]


def all_betti_tables(m: Matroid, method: str = "auto") -> dict[int, BettiTable]:
    inv = base_inventory(m, method)
    return {lv: betti_table(m, lv, inventory=inv) for lv in range(m.k)}


# -- phi profile ----------------------------------------------------------------

@dataclass
class PhiProfile:
    k: int
    phi: dict[int, dict[int, int]]

    def get(self, level: int, j: int) -> int:
        if level < 0:
            return 0
        if level >= self.k:
            return int(j == 0)
        return self.phi[level].get(j, 0)

    def columns(self) -> list[int]:
        return sorted({j for row in self.phi.values() for j, v in row.items() if v})

    def bs_residuals(self, level: int) -> list[int]:
        row = self.phi[level]
        return [sum(j ** s * v for j, v in row.items()) for s in range(self.k - level)]


def phi_profile(tables: dict[int, BettiTable], k: int) -> PhiProfile:
    missing = [lv for lv in range(k) if lv not in tables]
    if missing:
        raise MissingElongation(f"missing elongations {missing}")
    prof = PhiProfile(k, {lv: tables[lv].phi() for lv in range(k)})
    for lv in range(k):
        if any(prof.bs_residuals(lv)):
            raise BSViolation(f"phi identities fail at elongation {lv}")
    return prof


# -- local (representative) Mobius ----------------------------------------------

def restricted_code(code: LinearCode, sigma: int) -> LinearCode:
    """C(sigma): codewords supported inside sigma, as a code on the full ground set."""
    comp = [j for j in range(code.n) if not (sigma >> j) & 1]
    G = code.generator
    if comp:
        msgs = G.columns(comp).left_kernel()
    else:
        msgs = [[int(i == j) for j in range(code.k)] for i in range(code.k)]
    if not msgs:
        raise ValueError("sigma supports no nonzero codeword")
    rows = [G.vecmul(v) for v in msgs]
    return LinearCode(code.field, FFMatrix(code.field, rows, code.n), f"{code.label}|sigma")


def local_mobius(code: LinearCode, sigma: int, level: int = 0,
                 budget: int = SUBSPACE_BUDGET) -> int:
    """mu(sigma) in the lattice of the l-th elongation, using only cycles inside sigma.

    The cycles inside sigma are the supports of subcodes of C(sigma).
    """
    sub = restricted_code(code, sigma)
    local = support_cycles(sub, budget)
    cycles = [Cycle(s, i - level) for s, i in local if i > level]
    top = [c for c in cycles if c.mask == sigma]
    if not top:
        raise ValueError("sigma is not a cycle at this elongation")
    mobius_all(cycles, code.n)
    return top[0].mu
