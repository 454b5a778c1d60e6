"""Evaluation codes, canonical subcode enumeration and brute-force higher weight spectra.

Supports of codewords and subcodes are bitmasks over the coordinate set.
Vectorized paths keep them as rows of little-endian uint64 words (bit j of
word j // 64 is coordinate j); scalar paths use Python ints.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .errors import DegreeTooLarge, MissingRow, TooLarge
from .exactalg import (FFMatrix, FiniteField, field_of_order, gaussian_binomial, make_field,
                       subfield_embedding)

CODEWORD_BUDGET = 1 << 24
SUBSPACE_BUDGET = 10 ** 8
CHUNK = 1 << 21


@dataclass
class LinearCode:
    field: FiniteField
    generator: FFMatrix
    label: str = ""
    points: list[tuple[int, ...]] | None = None

    def __post_init__(self):
        if self.generator.rank() != self.generator.nrows:
            raise ValueError("generator matrix must have full row rank")
        if self.points is not None:
            if len(self.points) != self.n or len(set(self.points)) != self.n:
                raise ValueError("evaluation points must be n distinct points")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return self.generator.ncols

    @property
    def k(self) -> int:
        return self.generator.nrows

    def __repr__(self) -> str:
        return f"LinearCode({self.label or '?'}, q={self.q}, n={self.n}, k={self.k})"


# -- constructions --------------------------------------------------------------

def _monomials(nvars: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of degree exactly d, lexicographically descending."""
    out = [e for e in itertools.product(range(d, -1, -1), repeat=nvars) if sum(e) == d]
    return out


def _evaluate(field: FiniteField, monos, pts) -> list[list[int]]:
    rows = []
    for mono in monos:
        row = []
        for pt in pts:
            v = 1
            for x, a in zip(pt, mono):
                if a:
                    v = field.mul(v, field.pow(x, a))
            row.append(v)
        rows.append(row)
    return rows


def affine_points(q: int, m: int) -> list[tuple[int, ...]]:
    """All points of A^m in lexicographic order of encodings."""
    return list(itertools.product(range(q), repeat=m))


def projective_points(q: int, m: int) -> list[tuple[int, ...]]:
    """Representatives of P^m: affine chart (last coordinate 1) first, then infinity."""
    pts = [p + (1,) for p in affine_points(q, m)]
    if m >= 1:
        pts += [p + (0,) for p in projective_points(q, m - 1)] if m > 1 else [(1, 0)]
    return pts


def build_rm(q: int, d: int, m: int) -> LinearCode:
    """Affine Reed-Muller code RM_q(d, m) for d < q (degree <= d polynomials)."""
    if d >= q:
        raise DegreeTooLarge(f"d={d} must be < q={q}")
    if q ** m > 1 << 16:
        raise TooLarge("q^m too large")
    F = field_of_order(q)
    pts = affine_points(q, m)
    monos = _monomials(m + 1, d)
    G = _evaluate(F, monos, [p + (1,) for p in pts])
    return LinearCode(F, FFMatrix(F, G), f"RM_{q}({d},{m})", pts)


def build_rm22(q: int) -> LinearCode:
    """The code C_q: evaluations of x^2, xy, xz, y^2, yz, z^2 at (x:y:1)."""
    F = field_of_order(q)
    pts = affine_points(q, 2)
    monos = _monomials(3, 2)
    if q == 2:
        monos = [mo for mo in monos if mo not in ((1, 0, 1), (0, 1, 1))]
    G = _evaluate(F, monos, [p + (1,) for p in pts])
    return LinearCode(F, FFMatrix(F, G), f"RM_{q}(2,2)", pts)


def build_rm1m(q: int, m: int) -> LinearCode:
    if q ** m > 1 << 16:
        raise TooLarge("q^m too large")
    F = field_of_order(q)
    pts = affine_points(q, m)
    monos = [(0,) * m] + [tuple(int(i == j) for j in range(m)) for i in range(m)]
    G = _evaluate(F, monos, pts)
    return LinearCode(F, FFMatrix(F, G), f"RM_{q}(1,{m})", pts)


def build_prm(q: int, d: int, m: int) -> LinearCode:
    if d >= q:
        raise DegreeTooLarge(f"d={d} must be < q={q}")
    if (q ** (m + 1) - 1) // (q - 1) > 1 << 16:
        raise TooLarge("too many projective points")
    F = field_of_order(q)
    pts = projective_points(q, m)
    G = _evaluate(F, _monomials(m + 1, d), pts)
    return LinearCode(F, FFMatrix(F, G), f"PRM_{q}({d},{m})", pts)


def extend_code(c: LinearCode, m: int) -> LinearCode:
    """Same generator, read over GF(q^m) through the canonical embedding."""
    if m == 1:
        return c
    big = make_field(c.field.p, c.field.e * m)
    emb = subfield_embedding(c.field, big)
    G = FFMatrix(big, [[emb[x] for x in row] for row in c.generator.rows], c.n)
    return LinearCode(big, G, f"{c.label} (x) GF({big.q})", c.points)


# -- codeword enumeration -------------------------------------------------------

def n_words(n: int) -> int:
    return max(1, (n + 63) // 64)


def _digits(idx: np.ndarray, q: int, i: int) -> np.ndarray:
    return (idx // (q ** i)) % q


def codeword_array(c: LinearCode, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Codewords of messages start..stop-1 (message index = sum v_i q^i)."""
    q, k = c.q, c.k
    stop = q ** k if stop is None else stop
    add, mul, _ = c.field.np_tables()
    G = np.array(c.generator.rows, dtype=np.intp).reshape(k, c.n)
    idx = np.arange(start, stop, dtype=np.int64)
    cw = np.zeros((len(idx), c.n), dtype=np.uint16)
    for i in range(k):
        d = _digits(idx, q, i).astype(np.intp)
        cw = add[cw, mul[d[:, None], G[i][None, :]]]
    return cw


def pack_rows(nonzero: np.ndarray) -> np.ndarray:
    """Boolean (N, n) -> (N, W) uint64 bitmasks."""
    N, n = nonzero.shape
    W = n_words(n)
    b = np.packbits(nonzero, axis=1, bitorder="little")
    pad = W * 8 - b.shape[1]
    if pad:
        b = np.concatenate([b, np.zeros((N, pad), dtype=np.uint8)], axis=1)
    return np.ascontiguousarray(b).view("<u8").reshape(N, W)


def mask_to_int(row: np.ndarray) -> int:
    return int.from_bytes(np.asarray(row, dtype="<u8").tobytes(), "little")


def int_to_mask(x: int, W: int) -> np.ndarray:
    return np.frombuffer(x.to_bytes(8 * W, "little"), dtype="<u8").copy()


def message_supports(c: LinearCode) -> np.ndarray:
    """Support bitmask of every codeword, indexed by message."""
    total = c.q ** c.k
    if total > CODEWORD_BUDGET:
        raise TooLarge(f"{total} codewords exceed budget {CODEWORD_BUDGET}")
    step = max(1, CHUNK // max(1, c.n))
    parts = [pack_rows(codeword_array(c, s, min(total, s + step)) != 0)
             for s in range(0, total, step)]
    return np.concatenate(parts) if parts else np.zeros((0, n_words(c.n)), dtype=np.uint64)


def popcount_rows(masks: np.ndarray) -> np.ndarray:
    return np.bitwise_count(masks).sum(axis=1, dtype=np.int64)


def weight_distribution(c: LinearCode) -> dict[int, int]:
    if c.k == 0:
        return {0: 1}
    w = popcount_rows(message_supports(c))
    counts = np.bincount(w, minlength=c.n + 1)
    return {i: int(v) for i, v in enumerate(counts) if v}


# -- canonical subspace enumeration --------------------------------------------

def pivot_patterns(k: int, r: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(k), r))


def row_choices(k: int, q: int, pivots: Sequence[int], i: int) -> np.ndarray:
    """Message indices of all admissible RREF rows i for the pivot pattern."""
    p = pivots[i]
    arr = np.array([q ** p], dtype=np.int64)
    for col in range(p + 1, k):
        if col in pivots:
            continue
        arr = (arr[:, None] + np.arange(q, dtype=np.int64)[None, :] * q ** col).ravel()
    return arr


def message_vector(idx: int, k: int, q: int) -> tuple[int, ...]:
    return tuple((idx // q ** j) % q for j in range(k))


class SubcodeIterator:
    """Yields every r-dimensional subspace of GF(q)^k once, as its RREF basis.

    Bases are tuples of message indices (row vectors packed base q).
    Iteration is sharded by pivot pattern; `shard` selects a subset of them.
    """

    def __init__(self, k: int, r: int, q: int, patterns: Sequence[tuple[int, ...]] | None = None):
        self.k, self.r, self.q = k, r, q
        self.patterns = list(patterns) if patterns is not None else pivot_patterns(k, r)

    def __len__(self) -> int:
        if len(self.patterns) == comb(self.k, self.r):
            return gaussian_binomial(self.k, self.r, self.q)
        return sum(int(np.prod([len(row_choices(self.k, self.q, pv, i)) for i in range(self.r)]))
                   for pv in self.patterns)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        if self.r == 0:
            yield ()
            return
        for pv in self.patterns:
            rows = [row_choices(self.k, self.q, pv, i).tolist() for i in range(self.r)]
            yield from itertools.product(*rows)

    def matrices(self) -> Iterator[tuple[tuple[int, ...], ...]]:
        for basis in self:
            yield tuple(message_vector(b, self.k, self.q) for b in basis)


def _or_product(arrays: list[np.ndarray], chunk: int = CHUNK) -> Iterator[np.ndarray]:
    """OR over the Cartesian product of row-choice mask arrays, in chunks."""
    W = arrays[0].shape[1]
    if len(arrays) == 1:
        for s in range(0, len(arrays[0]), chunk):
            yield arrays[0][s:s + chunk]
        return
    rest_size = int(np.prod([len(a) for a in arrays[1:]]))
    if rest_size <= chunk:
        rest = arrays[-1]
        for a in reversed(arrays[1:-1]):
            rest = (a[:, None, :] | rest[None, :, :]).reshape(-1, W)
        per = max(1, chunk // len(rest))
        first = arrays[0]
        for s in range(0, len(first), per):
            blk = first[s:s + per]
            yield (blk[:, None, :] | rest[None, :, :]).reshape(-1, W)
        return
    for row in arrays[0]:
        for sub in _or_product(arrays[1:], chunk):
            yield sub | row[None, :]


def subspace_support_chunks(masks: np.ndarray, k: int, q: int, r: int,
                            patterns: Sequence[tuple[int, ...]] | None = None) -> Iterator[np.ndarray]:
    """Support masks of all r-dim subcodes, given per-message support masks."""
    if r == 0:
        yield np.zeros((1, masks.shape[1]), dtype=np.uint64)
        return
    for pv in (patterns if patterns is not None else pivot_patterns(k, r)):
        arrays = [masks[row_choices(k, q, pv, i)] for i in range(r)]
        yield from _or_product(arrays)


# -- spectra --------------------------------------------------------------------

@dataclass
class SpectrumTable:
    """A[r][w] = number of r-dim subcodes of support weight w (zeros omitted)."""
    q: int
    k: int
    n: int
    A: dict[int, dict[int, int]] = dc_field(default_factory=dict)
    complete_through: int | None = None
    method: str = ""

    def get(self, r: int, w: int) -> int:
        return self.A.get(r, {}).get(w, 0)

    def row(self, r: int) -> dict[int, int]:
        if r not in self.A:
            raise MissingRow(f"row r={r} not present")
        return self.A[r]

    def row_sum(self, r: int) -> int:
        return sum(self.row(r).values())

    def rows(self) -> list[int]:
        return sorted(self.A)

    def d(self, r: int) -> int:
        """Generalized Hamming weight d_r."""
        return min(w for w, v in self.row(r).items() if v)

    def as_dict(self) -> dict[str, dict[str, int]]:
        return {str(r): {str(w): v for w, v in sorted(self.A[r].items()) if v}
                for r in sorted(self.A)}

    def same_values(self, other: "SpectrumTable", rows: Sequence[int] | None = None) -> bool:
        rows = rows if rows is not None else sorted(set(self.A) | set(other.A))
        return all({w: v for w, v in self.A.get(r, {}).items() if v}
                   == {w: v for w, v in other.A.get(r, {}).items() if v} for r in rows)

    def differences(self, other: "SpectrumTable") -> list[tuple[int, int, int, int]]:
        out = []
        for r in sorted(set(self.A) | set(other.A)):
            for w in sorted(set(self.A.get(r, {})) | set(other.A.get(r, {}))):
                a, b = self.get(r, w), other.get(r, w)
                if a != b:
                    out.append((r, w, a, b))
        return out


def _count_pattern(args) -> np.ndarray:
    masks, k, q, r, pv, n = args
    counts = np.zeros(n + 1, dtype=np.int64)
    for blk in subspace_support_chunks(masks, k, q, r, [pv]):
        counts += np.bincount(popcount_rows(blk), minlength=n + 1)
    return counts


def brute_force_spectra(c: LinearCode, r_max: int | None = None, *,
                        budget: int = SUBSPACE_BUDGET, threads: int = 1) -> SpectrumTable:
    """Exhaustive A_w^(r) for r <= r_max by enumerating canonical RREF bases.

    Rows whose subspace count exceeds `budget` are skipped; the table then
    records `complete_through` as the last computed r.
    """
    k, q, n = c.k, c.q, c.n
    r_max = k if r_max is None else min(r_max, k)
    masks = message_supports(c)
    table = SpectrumTable(q, k, n, method="brute")
    table.A[0] = {0: 1}
    table.complete_through = 0
    for r in range(1, r_max + 1):
        if gaussian_binomial(k, r, q) > budget:
            break
        jobs = [(masks, k, q, r, pv, n) for pv in pivot_patterns(k, r)]
        if threads > 1:
            with ProcessPoolExecutor(max_workers=threads) as ex:
                parts = list(ex.map(_count_pattern, jobs))
        else:
            parts = [_count_pattern(j) for j in jobs]
        counts = np.sum(parts, axis=0)
        table.A[r] = {w: int(v) for w, v in enumerate(counts) if v}
        table.complete_through = r
    return table


def spectrum_polynomial(t: SpectrumTable, r: int, n: int | None = None) -> list[int]:
    """Coefficients of sum_w A_w^(r) X^(n-w) Y^w, indexed by w."""
    n = t.n if n is None else n
    row = t.row(r)
    return [row.get(w, 0) for w in range(n + 1)]
