"""Projection generators, word closure and span saturation, with an
independent row-reduction rank oracle."""

import numpy as np
import pytest

from daggerlab.errors import UnsupportedFieldError
from daggerlab.matcat import Morphism, Obj, frobenius_distance, is_projection
from daggerlab.projspan import (
    projection_generators,
    real_span_rank,
    saturation_check,
    word_closure,
)
from daggerlab.scalars import Field


def row_reduction_rank(rows, pivot_eps=1e-6):
    """Gaussian elimination with partial pivoting; deliberately not SVD,
    so it cross-checks the implementation's rank."""
    m = np.array(rows, dtype=float)
    rank = 0
    for col in range(m.shape[1]):
        if rank == m.shape[0]:
            break
        pivot = rank + int(np.argmax(np.abs(m[rank:, col])))
        if abs(m[pivot, col]) <= pivot_eps:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        m[rank] = m[rank] / m[rank, col]
        for r in range(m.shape[0]):
            if r != rank:
                m[r] = m[r] - m[r, col] * m[rank]
        rank += 1
    return rank


def _vectorise(words):
    return [
        np.concatenate([w.entries[..., 0].ravel(), w.entries[..., 1].ravel()])
        for w in words
    ]


def test_generators_are_projections():
    gens = projection_generators(2, seed=0, count=2)
    assert len(gens) == 4  # 2 coordinate + 2 random rank-1
    for g in gens:
        assert is_projection(g)


def test_generators_dim_one():
    gens = projection_generators(1, seed=0, count=2)
    for g in gens:
        assert is_projection(g)
        # with one dimension every rank-1 projection collapses to 1
        assert abs(g.entries[0, 0, 0] - 1.0) < 1e-12


def test_word_closure_idempotent_generator():
    p = Morphism.from_real(Field.COMPLEX, [[1, 0], [0, 0]])
    words = word_closure([p], max_len=3)
    assert len(words) == 1
    assert frobenius_distance(words[0], p) == 0.0


def test_word_closure_orthogonal_pair_contains_zero():
    p = Morphism.from_real(Field.COMPLEX, [[1, 0], [0, 0]])
    q = Morphism.from_real(Field.COMPLEX, [[0, 0], [0, 1]])
    words = word_closure([p, q], max_len=2)
    zero = Morphism.zero(Field.COMPLEX, Obj(2), Obj(2))
    assert any(frobenius_distance(w, zero) < 1e-12 for w in words)


def test_word_closure_counts_reported():
    gens = projection_generators(2, seed=3, count=2)
    words = word_closure(gens, max_len=3)
    assert len(words) >= len(gens)
    # entries of projection products stay bounded by the dimension
    assert all(np.max(np.abs(w.entries)) <= 2 for w in words)


def test_word_basis_bundle():
    from daggerlab.projspan import build_word_basis

    gens = projection_generators(3, seed=1, count=2)
    basis = build_word_basis(gens, max_len=3)
    assert basis.real_span_rank <= 2 * 3 * 3
    assert all(is_projection(g) for g in basis.generators)
    assert len(basis.words) >= len(basis.generators)


def test_saturation_dim1_below_threshold():
    rep = saturation_check(1, seed=0)
    assert rep.rank == 1 and rep.target == 2
    assert rep.status == "below-threshold (expected)"
    assert rep.ok


@pytest.mark.parametrize("dim,expected", [(2, 8), (3, 18), (4, 32)])
def test_saturation_rank_with_row_reduction_oracle(dim, expected):
    gens = projection_generators(dim, seed=0, count=2)
    words = word_closure(gens, max_len=3)
    rank = real_span_rank(words)
    assert rank == expected == 2 * dim * dim
    assert row_reduction_rank(_vectorise(words)) == expected


def test_saturation_check_reports():
    rep = saturation_check(2, seed=1)
    assert rep.to_json() == {
        "dim": 2, "rank": 8, "target": 8, "words": rep.words, "seed": 1, "status": "pass",
    }


def test_saturation_rejects_other_fields():
    with pytest.raises(UnsupportedFieldError):
        saturation_check(2, seed=0, field=Field.REAL)


def test_rank_monotone_in_length_and_generators():
    for dim in (2, 3):
        by_len = [saturation_check(dim, seed=0, max_len=l).rank for l in (1, 2, 3)]
        assert by_len == sorted(by_len)
        by_count = [saturation_check(dim, seed=0, count=c).rank for c in (0, 1, 2)]
        assert by_count == sorted(by_count)
