import random

import pytest
from hypothesis import given, strategies as st

from affine_cactus.perm import (
    AffinePermutation, Permutation, adjacent_decomposition, circular_interval_points, compose, from_adjacent,
    interval_reversal, wrap,
)


def reverse_by_list(n, k, l):
    """Oracle: reverse the list of strands of [k,l]_c by slicing."""
    pts = [(k - 1 + t) % n + 1 for t in range((l - k) % n + 1)]
    images = list(range(1, n + 1))
    for p, q in zip(pts, pts[::-1]):
        images[p - 1] = q
    return images


@pytest.mark.parametrize("n,k,l,expected", [(4, 1, 3, [3, 2, 1, 4]), (4, 3, 1, [3, 2, 1, 4]), (2, 1, 2, [2, 1])])
def test_interval_reversal_examples(n, k, l, expected):
    assert interval_reversal(n, k, l).to_list() == expected
    assert reverse_by_list(n, k, l) == expected


def test_interval_reversal_matches_list_oracle_exhaustively():
    for n in range(2, 9):
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                if k != l:
                    assert interval_reversal(n, k, l).to_list() == reverse_by_list(n, k, l)


@pytest.mark.parametrize("args", [(4, 0, 2), (4, 2, 2), (4, 1, 5), (1, 1, 1)])
def test_interval_reversal_rejects_bad_input(args):
    with pytest.raises(ValueError):
        interval_reversal(*args)


def test_compose_examples():
    n = 4
    s13 = interval_reversal(n, 1, 3)
    assert compose(Permutation.identity(n), s13) == s13
    assert compose(s13, s13).is_identity()
    s12, s31 = interval_reversal(n, 1, 2), interval_reversal(n, 3, 1)
    table = [s12.images[s31.images[p] - 1] for p in range(n)]
    assert compose(s12, s31).to_list() == table == [3, 1, 2, 4]


def test_compose_rejects_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_adjacent_decomposition_examples():
    assert adjacent_decomposition(Permutation.identity(5)) == []
    assert adjacent_decomposition(Permutation.transposition(3, 1, 2)) == [1]
    s = interval_reversal(4, 1, 3)
    assert from_adjacent(4, adjacent_decomposition(s)) == s


def test_adjacent_decomposition_recomposes():
    rng = random.Random(0)
    for _ in range(1000):
        n = rng.randint(1, 8)
        images = list(range(1, n + 1))
        rng.shuffle(images)
        s = Permutation(n, tuple(images))
        dec = adjacent_decomposition(s)
        assert all(1 <= m <= n - 1 for m in dec)
        assert from_adjacent(n, dec) == s


def three_case(n, i, j, k, l, p):
    """Closed form for s_{i,j} o s_{k,l} when [i,j]_c is inside [k,l]_c."""
    if p not in circular_interval_points(n, k, l):
        return p
    if p not in circular_interval_points(n, wrap(k + l - j, n), wrap(k + l - i, n)):
        return wrap(k + l - p, n)
    return wrap(i + j + p - k - l, n)


def test_nested_composite_formula():
    for n in range(3, 8):
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                if k == l:
                    continue
                outer = circular_interval_points(n, k, l)
                for a in range(len(outer)):
                    for b in range(a + 1, len(outer)):
                        i, j = outer[a], outer[b]
                        s = compose(interval_reversal(n, i, j), interval_reversal(n, k, l))
                        assert s.to_list() == [three_case(n, i, j, k, l, p) for p in range(1, n + 1)]


def test_disjoint_reversals_commute():
    for n in range(4, 8):
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                if k == l:
                    continue
                for i in range(1, n + 1):
                    for j in range(1, n + 1):
                        if i == j:
                            continue
                        a, b = interval_reversal(n, i, j), interval_reversal(n, k, l)
                        if not set(circular_interval_points(n, i, j)) & set(circular_interval_points(n, k, l)):
                            assert compose(a, b) == compose(b, a)


def test_permutation_validation_and_text():
    with pytest.raises(ValueError):
        Permutation(3, (1, 1, 2))
    assert str(interval_reversal(4, 1, 3)) == "[3,2,1,4]"


strand_triples = st.integers(2, 9).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(1, n), st.integers(1, n)).filter(lambda t: t[1] != t[2]))


@given(strand_triples)
def test_reversal_is_involution(t):
    s = interval_reversal(*t)
    assert compose(s, s).is_identity()


@given(strand_triples)
def test_affine_reversal_lifts_reversal(t):
    n, k, l = t
    f = AffinePermutation.interval_reversal(n, k, l)
    assert (f * f).is_identity()
    assert f.reduce() == interval_reversal(n, k, l)
    # the window k..k+L-1 is reversed in place
    top = k + (l - k) % n
    assert [f(x) for x in range(k, top + 1)] == list(range(top, k - 1, -1))


five_strands = st.tuples(st.just(5), st.integers(1, 5), st.integers(1, 5)).filter(lambda t: t[1] != t[2])


@given(st.lists(five_strands, max_size=6), st.lists(five_strands, max_size=6))
def test_affine_matrix_is_a_homomorphism(xs, ys):
    def prod(ts):
        f = AffinePermutation.identity(5)
        for t in ts:
            f = f * AffinePermutation.interval_reversal(*t)
        return f

    def matmul(a, b):
        return [[sum(a[r][k] * b[k][c] for k in range(len(b))) for c in range(len(b[0]))] for r in range(len(a))]

    f, g = prod(xs), prod(ys)
    assert matmul(f.affine_matrix(), g.affine_matrix()) == (f * g).affine_matrix()
    assert (f * f.inverse()).is_identity()
    assert (f.affine_matrix() == g.affine_matrix()) == (f == g)


def test_affine_permutation_validation():
    with pytest.raises(ValueError):
        AffinePermutation(3, (1, 2, 4))  # wrong sum, residues clash
    with pytest.raises(ValueError):
        AffinePermutation(2, (2, 3))  # residues fine, sum wrong
