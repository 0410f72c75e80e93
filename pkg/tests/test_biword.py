import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from kelpbed.biword import (Biword, DomainError, SubBed, biword_matrix, biword_to_matrix,
                            count_kelps, matrix_to_biword, total_kelps)

from conftest import X_EX

W_EX = Biword((2, 2, 3, 3, 3, 4), (1, 3, 3, 3, 3, 2))


def small_matrices(max_n=5, max_entry=4):
    return st.integers(1, max_n).flatmap(
        lambda n: arrays(np.int64, (n, n), elements=st.integers(0, max_entry)))


def test_biword_to_matrix_example():
    assert np.array_equal(biword_to_matrix(W_EX, 4), X_EX)
    assert total_kelps(biword_to_matrix(W_EX, 4)) == len(W_EX) == 6


def test_biword_to_matrix_trivial():
    assert np.array_equal(biword_to_matrix(Biword((), ()), 3), np.zeros((3, 3)))
    assert biword_to_matrix(Biword((1, 1), (2, 2)), 2).tolist() == [[0, 2], [0, 0]]


def test_biword_letter_out_of_range():
    with pytest.raises(DomainError):
        biword_to_matrix(Biword((1, 3), (1, 1)), 2)
    with pytest.raises(DomainError):
        biword_to_matrix(Biword((0,), (1,)), 2)


def test_biword_must_be_sorted():
    with pytest.raises(DomainError):
        Biword((2, 1), (1, 1))
    with pytest.raises(DomainError):
        Biword((1, 1), (2, 1))
    assert Biword.from_columns([(2, 1), (1, 2)]).columns == [(1, 2), (2, 1)]


def test_matrix_to_biword_example():
    assert matrix_to_biword(X_EX) == W_EX
    assert len(matrix_to_biword(np.zeros((3, 3), dtype=int))) == 0


def test_biword_matrix_validation():
    with pytest.raises(DomainError):
        biword_matrix([[1, -1], [0, 0]])
    with pytest.raises(DomainError):
        biword_matrix([[1, 2, 3]])
    with pytest.raises(DomainError):
        biword_matrix([[0.5]])
    with pytest.raises(DomainError):
        biword_matrix(np.zeros((2, 2)), n=3)
    X = biword_matrix([[1, 2], [3, 4]])
    assert not X.flags.writeable


@given(small_matrices())
def test_matrix_biword_round_trip(X):
    assert np.array_equal(biword_to_matrix(matrix_to_biword(X), X.shape[0]), X)


@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=15))))
def test_biword_round_trip_from_shuffled_columns(case):
    n, cols = case
    w = Biword.from_columns(cols)
    assert matrix_to_biword(biword_to_matrix(w, n)) == w


def test_count_kelps_examples():
    # rows 2..4, cols 1..2 of X_EX: entries 1, 0 / 0, 0 / 0, 1
    assert count_kelps(SubBed(X_EX, (2, 4), (1, 2))) == 2
    assert count_kelps(SubBed(X_EX)) == 6
    assert count_kelps(SubBed(X_EX, None, (1, 0))) == 0


def test_subbed_to_matrix():
    S = SubBed(X_EX, (3, 4), None)
    assert S.to_matrix().tolist() == [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 3, 0], [0, 1, 0, 0]]
    with pytest.raises(DomainError):
        SubBed(X_EX, (0, 2), None)
    with pytest.raises(DomainError):
        SubBed(X_EX, None, (3, 5))


@given(small_matrices(), st.data())
def test_count_kelps_additive(X, data):
    n = X.shape[0]
    lo, hi = sorted(data.draw(st.tuples(st.integers(1, n), st.integers(1, n))))
    cut = data.draw(st.integers(lo - 1, hi))
    cols = sorted(data.draw(st.tuples(st.integers(1, n), st.integers(1, n))))
    whole = count_kelps(SubBed(X, (lo, hi), cols))
    assert whole == count_kelps(SubBed(X, (lo, cut), cols)) + count_kelps(SubBed(X, (cut + 1, hi), cols))
