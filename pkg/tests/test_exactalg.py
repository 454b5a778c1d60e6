from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hws.errors import NotPrimePower, TooLarge
from hws.exactalg import (FFMatrix, field_of_order, gaussian_binomial, is_prime_power,
                          make_field, prime_power, rref, solve_exact, subfield_embedding)

ORDERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(16) == (2, 4)
    assert not is_prime_power(6)
    with pytest.raises(NotPrimePower):
        prime_power(12)


def test_small_fields():
    f3 = make_field(3, 1)
    assert f3.mul(2, 2) == 1
    f7 = make_field(7, 1)
    assert max(f7.order(a) for a in range(1, 7)) == 6


def _gf4_mul(a: int, b: int) -> int:
    # polynomials over GF(2) as bit pairs, reduced by x^2 + x + 1
    prod = 0
    for i in range(2):
        if (b >> i) & 1:
            prod ^= a << i
    if prod & 4:
        prod ^= 0b111
    return prod


def test_gf4_against_hand_multiplication():
    f = make_field(2, 2)
    assert f.q == 4
    x = 2  # the class of x
    assert f.mul(x, x) == 3  # x + 1
    for a, b in itertools.product(range(4), repeat=2):
        assert f.mul(a, b) == _gf4_mul(a, b)


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms_exhaustive(q):
    f = field_of_order(q)
    E = range(q)
    for a in E:
        assert f.add(a, 0) == a and f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    for a, b in itertools.product(E, E):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
    for a, b, c in itertools.product(E, E, E):
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    # cyclic multiplicative group
    assert any(f.order(a) == q - 1 for a in range(1, q))


def test_field_too_large():
    with pytest.raises(TooLarge):
        make_field(2, 40)


@pytest.mark.parametrize("small,big", [(2, 4), (2, 16), (3, 9), (4, 16)])
def test_subfield_embedding_is_homomorphism(small, big):
    fs, fb = field_of_order(small), field_of_order(big)
    emb = subfield_embedding(fs, fb)
    for a, b in itertools.product(range(small), repeat=2):
        assert emb[fs.add(a, b)] == fb.add(emb[a], emb[b])
        assert emb[fs.mul(a, b)] == fb.mul(emb[a], emb[b])


def test_rank_examples():
    f5 = make_field(5)
    assert FFMatrix(f5, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]).rank() == 3
    assert FFMatrix(f5, [[0] * 4, [0] * 4]).rank() == 0
    from hws.codes import build_rm22
    assert build_rm22(3).generator.rank() == 6


@settings(max_examples=60, deadline=None)
@given(st.sampled_from((2, 3, 4, 5, 7)), st.integers(1, 5), st.integers(1, 6), st.data())
def test_rref_idempotent_and_rank(q, r, c, data):
    f = field_of_order(q)
    rows = data.draw(st.lists(st.lists(st.integers(0, q - 1), min_size=c, max_size=c),
                              min_size=r, max_size=r))
    m = FFMatrix(f, rows, c)
    R, rank, piv = rref(m)
    R2, rank2, piv2 = rref(R)
    assert R2 == R and rank2 == rank and piv2 == piv
    assert rank == m.transpose().rank()
    ker = m.kernel()
    assert len(ker) == c - rank
    for v in ker:
        assert all(x == 0 for x in m.transpose().vecmul(v))


def test_solve_exact():
    s = solve_exact([[1, 0], [0, 1]], [1, 2])
    assert list(s.x) == [1, 2]
    s = solve_exact([[1], [2]], [3, 6])
    assert list(s.x) == [3] and s.overdetermined
    assert all(isinstance(x, Fraction) or isinstance(x, int) for x in s.x)


def _count_subspaces(n: int, k: int, q: int) -> int:
    """Oracle: distinct k-dim row spaces of k-tuples of vectors in GF(q)^n (q prime)."""
    f = field_of_order(q)
    spaces = set()
    vecs = list(itertools.product(range(q), repeat=n))
    for basis in itertools.combinations(vecs, k):
        m = FFMatrix(f, basis, n)
        if m.rank() == k:
            R, _, _ = rref(m)
            spaces.add(tuple(tuple(row) for row in R.rows[:k]))
    return len(spaces)


def test_gaussian_binomial():
    assert gaussian_binomial(5, 0, 3) == 1
    assert gaussian_binomial(6, 1, 2) == 63
    assert gaussian_binomial(6, 1, 2) == (2 ** 6 - 1) // (2 - 1)
    assert gaussian_binomial(4, 2, 2) == 35 == 6 + 16 + 13
    assert gaussian_binomial(4, 2, 2) == _count_subspaces(4, 2, 2)
    assert gaussian_binomial(3, 1, 3) == _count_subspaces(3, 1, 3)
