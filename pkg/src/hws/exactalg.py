"""Finite fields GF(p^e), exact linear algebra over them, and exact rational solving.

Field elements are plain ints in [0, q): the coefficient vector of the
polynomial representative packed base p, constant term in the lowest digit.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
import sympy

from .errors import (Inconsistent, NotPrime, NotPrimePower, OutOfRange, TooLarge,
                     Underdetermined)

MAX_FIELD_ORDER = 1 << 20
TABLE_LIMIT = 512


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p**e, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    f = sympy.factorint(q)
    if len(f) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    (p, e), = f.items()
    return int(p), int(e)


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except NotPrimePower:
        return False
    return True


# -- polynomials over GF(p) as coefficient lists, lowest degree first ----------

def _poly_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    a = a[:dm] if len(a) > dm else a + [0] * (dm - len(a))
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    x = sympy.symbols("x")
    poly = sympy.Poly(list(reversed(m)), x, modulus=p)
    return poly.is_irreducible


def _least_irreducible(p: int, e: int) -> tuple[int, ...]:
    if e == 1:
        return (0, 1)
    # lexicographic on (c_0, c_1, ..., c_{e-1}), constant term most significant
    for lower in itertools.product(range(p), repeat=e):
        if lower[0] == 0:
            continue
        m = tuple(lower) + (1,)
        if _is_irreducible(m, p):
            return m
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """GF(p^e) with a deterministic modulus."""

    def __init__(self, p: int, e: int = 1):
        if not sympy.isprime(p):
            raise NotPrime(f"{p} is not prime")
        if e < 1:
            raise OutOfRange("extension degree must be >= 1")
        if p ** e > MAX_FIELD_ORDER:
            raise TooLarge(f"field order {p}^{e} exceeds {MAX_FIELD_ORDER}")
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = _least_irreducible(p, e)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._np_tables = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- encoding ---------------------------------------------------------------
    def to_coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_coeffs(self, cs: Sequence[int]) -> int:
        v = 0
        for c in reversed(list(cs)):
            v = v * self.p + (c % self.p)
        return v

    # -- slow path arithmetic (no tables) ---------------------------------------
    def _add_slow(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.from_coeffs([(x + y) for x, y in zip(self.to_coeffs(a), self.to_coeffs(b))])

    def _mul_slow(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        prod = _poly_mul(self.to_coeffs(a), self.to_coeffs(b), self.p)
        return self.from_coeffs(_poly_mod(prod, self.modulus, self.p))

    def _build_tables(self) -> None:
        q = self.q
        for g in (range(2, q) if q > 2 else [1]):
            exp = [1]
            x = 1
            for _ in range(q - 2):
                x = self._mul_slow(x, g)
                if x == 1:
                    break
                exp.append(x)
            if len(exp) == q - 1:
                break
        else:  # pragma: no cover
            raise AssertionError("no primitive element")
        self.generator = g if q > 2 else 1
        self._exp = exp + exp
        self._log = [0] * q
        for i, v in enumerate(exp):
            self._log[v] = i
        self.add_table = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        self.mul_table = [[0] * q for _ in range(q)]
        for a in range(1, q):
            la = self._log[a]
            row = self.mul_table[a]
            for b in range(1, q):
                row[b] = self._exp[la + self._log[b]]
        self.neg_table = [self.add_table[a].index(0) for a in range(q)]
        self.inv_table = [0] + [self._exp[(q - 1 - self._log[a]) % (q - 1)] for a in range(1, q)]

    @property
    def has_tables(self) -> bool:
        return self._exp is not None

    def np_tables(self):
        """(add, mul, neg) as uint16 numpy arrays, for vectorized work."""
        if self._np_tables is None:
            if not self.has_tables:
                raise TooLarge("numpy tables only for q <= %d" % TABLE_LIMIT)
            self._np_tables = (np.array(self.add_table, dtype=np.uint16),
                               np.array(self.mul_table, dtype=np.uint16),
                               np.array(self.neg_table, dtype=np.uint16))
        return self._np_tables

    # -- public scalar arithmetic -----------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self._exp is not None:
            return self.add_table[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self._exp is not None:
            return self.neg_table[a]
        return self.from_coeffs([-c for c in self.to_coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._exp is not None:
            return self.mul_table[a][b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self._exp is not None:
            return self.inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        n = self.q - 1
        o = n
        for r in sympy.factorint(n):
            while o % r == 0 and self.pow(a, o // r) == 1:
                o //= r
        return o

    def elements(self) -> range:
        return range(self.q)

    def __call__(self, v: int) -> "FieldElement":
        if not 0 <= v < self.q:
            v = v % self.p if self.e == 1 else v
        if not 0 <= v < self.q:
            raise ValueError(f"{v} is not an element encoding of {self}")
        return FieldElement(self, v)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.e))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FiniteField:
    return FiniteField(p, e)


def field_of_order(q: int) -> FiniteField:
    p, e = prime_power(q)
    return make_field(p, e)


def subfield_embedding(small: FiniteField, big: FiniteField) -> list[int]:
    """Canonical embedding GF(q) -> GF(q^m) as a lookup list.

    The generator x of the small field is sent to the least-encoded root of
    its modulus in the big field; prime-field elements map to themselves.
    """
    if small.p != big.p or big.e % small.e:
        raise OutOfRange(f"{small} is not a subfield of {big}")
    if small.e == 1:
        return list(range(small.q))
    mod = small.modulus
    root = None
    for b in range(big.q):
        acc = 0
        pw = 1
        for c in mod:
            acc = big.add(acc, big.mul(c, pw))
            pw = big.mul(pw, b)
        if acc == 0:
            root = b
            break
    assert root is not None
    out = []
    for a in range(small.q):
        acc = 0
        pw = 1
        for c in small.to_coeffs(a):
            acc = big.add(acc, big.mul(c, pw))
            pw = big.mul(pw, root)
        out.append(acc)
    return out


@dataclass(frozen=True)
class FieldElement:
    """Thin operator wrapper over an int encoding; convenient in tests."""
    field: FiniteField
    value: int

    def _v(self, other) -> int:
        if isinstance(other, FieldElement):
            return other.value
        return self.field(other).value

    def __add__(self, o):
        return FieldElement(self.field, self.field.add(self.value, self._v(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return FieldElement(self.field, self.field.sub(self.value, self._v(o)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, o):
        return FieldElement(self.field, self.field.mul(self.value, self._v(o)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return FieldElement(self.field, self.field.div(self.value, self._v(o)))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __int__(self) -> int:
        return self.value

    def __eq__(self, o) -> bool:
        if isinstance(o, FieldElement):
            return self.field == o.field and self.value == o.value
        if isinstance(o, int):
            return self.value == o
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.q, self.value))


# -- matrices -----------------------------------------------------------------

def _rref_rows(field: FiniteField, rows: list[list[int]], ncols: int):
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        if inv != 1:
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        pr = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = field.neg(rows[i][c])
                rows[i] = [field.add(x, field.mul(f, y)) for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return rows, r, pivots


class FFMatrix:
    """Dense matrix over a finite field, entries stored as int encodings."""

    def __init__(self, field: FiniteField, rows: Iterable[Sequence[int]], ncols: int | None = None):
        self.field = field
        self.rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            for x in r:
                if not 0 <= x < field.q:
                    raise ValueError(f"entry {x} out of range for {field}")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return (isinstance(other, FFMatrix) and self.field == other.field
                and self.shape == other.shape and self.rows == other.rows)

    def __repr__(self) -> str:
        return f"FFMatrix({self.field}, {self.nrows}x{self.ncols})"

    def transpose(self) -> "FFMatrix":
        return FFMatrix(self.field, [list(c) for c in zip(*self.rows)] if self.rows else [],
                        ncols=self.nrows)

    def columns(self, cols: Sequence[int]) -> "FFMatrix":
        return FFMatrix(self.field, [[r[c] for c in cols] for r in self.rows], ncols=len(cols))

    def rref(self) -> tuple["FFMatrix", int, list[int]]:
        rows, rank, piv = _rref_rows(self.field, self.rows, self.ncols)
        return FFMatrix(self.field, rows, self.ncols), rank, piv

    def rank(self) -> int:
        return _rref_rows(self.field, self.rows, self.ncols)[1]

    def row_space_basis(self) -> list[list[int]]:
        rows, rank, _ = _rref_rows(self.field, self.rows, self.ncols)
        return rows[:rank]

    def left_kernel(self) -> list[list[int]]:
        """Basis of {x : x * self = 0}."""
        return self.transpose().kernel()

    def kernel(self) -> list[list[int]]:
        """Basis of {x : self * x = 0}."""
        f = self.field
        rows, rank, piv = _rref_rows(f, self.rows, self.ncols)
        free = [c for c in range(self.ncols) if c not in piv]
        basis = []
        for fc in free:
            v = [0] * self.ncols
            v[fc] = 1
            for i, pc in enumerate(piv):
                v[pc] = f.neg(rows[i][fc])
            basis.append(v)
        return basis

    def vecmul(self, x: Sequence[int]) -> list[int]:
        """Row vector x times self."""
        f = self.field
        out = [0] * self.ncols
        for a, row in zip(x, self.rows):
            if a:
                out = [f.add(o, f.mul(a, y)) for o, y in zip(out, row)]
        return out


def rref(m: FFMatrix) -> tuple[FFMatrix, int, list[int]]:
    return m.rref()


# -- exact rational solving -----------------------------------------------------

@dataclass(frozen=True)
class ExactSolution:
    x: tuple[Fraction, ...]
    rank: int
    n_equations: int

    @property
    def unique(self) -> bool:
        return self.rank == len(self.x)

    @property
    def overdetermined(self) -> bool:
        return self.n_equations > self.rank


def solve_exact(A: Sequence[Sequence], b: Sequence) -> ExactSolution:
    """Solve A x = b over Q exactly; A may be tall (consistent overdetermined)."""
    m = len(A)
    n = len(A[0]) if m else 0
    aug = [[Fraction(v) for v in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    r = 0
    piv = []
    for c in range(n):
        p = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
    for i in range(r, m):
        if aug[i][n] != 0:
            raise Inconsistent(f"equation {i} inconsistent (residual {aug[i][n]})")
    if r < n:
        raise Underdetermined(f"rank {r} < {n} unknowns")
    x = [Fraction(0)] * n
    for i, c in enumerate(piv):
        x[c] = aug[i][n]
    return ExactSolution(tuple(x), r, m)


# -- counting -------------------------------------------------------------------

def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if q < 2 or n < 0 or not 0 <= k <= n:
        raise OutOfRange(f"gaussian_binomial({n}, {k}, {q})")
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den
