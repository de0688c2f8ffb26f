"""The matrix dagger category: composition, dagger, morphism classes."""

import numpy as np
import pytest

from daggerlab.errors import FieldMismatchError, ShapeMismatchError
from daggerlab.matcat import (
    Morphism,
    Obj,
    UNIT,
    approx_eq,
    basis_column,
    compose,
    frobenius_distance,
    is_dagger_iso,
    is_dagger_mono,
    is_dagger_simple,
    is_projection,
)
from daggerlab.sampling import random_dagger_mono, random_morphism
from daggerlab.scalars import ALL_FIELDS, Field, Scalar

RT2 = 2.0 ** -0.5


def test_compose_examples():
    f = Morphism.from_real(Field.REAL, [[1, 2], [3, 4]])
    ident = Morphism.identity(Field.REAL, Obj(2))
    assert frobenius_distance(ident @ f, f) == 0.0

    swap = Morphism.from_real(Field.REAL, [[0, 1], [1, 0]])
    assert frobenius_distance(swap @ swap, ident) == 0.0

    i = Morphism.single(Scalar(Field.QUATERNION, 0, 1, 0, 0))
    j = Morphism.single(Scalar(Field.QUATERNION, 0, 0, 1, 0))
    k = Morphism.single(Scalar(Field.QUATERNION, 0, 0, 0, 1))
    assert frobenius_distance(i @ j, k) == 0.0


def test_compose_errors():
    f = Morphism.from_real(Field.REAL, [[1, 2]])
    with pytest.raises(ShapeMismatchError):
        compose(f, f)
    g = Morphism.from_complex([[1.0]])
    with pytest.raises(FieldMismatchError):
        compose(g, Morphism.from_real(Field.REAL, [[1.0]]))


def test_dagger_examples():
    m = Morphism.from_complex([[1j]])
    assert np.allclose(m.dagger().complex_view(), [[-1j]])

    f = Morphism.from_real(Field.REAL, [[1, 2], [3, 4]])
    assert np.allclose(f.dagger().entries[..., 0], [[1, 3], [2, 4]])

    z = Morphism.zero(Field.COMPLEX, Obj(3), Obj(2))
    zd = z.dagger()
    assert zd.dom.dim == 2 and zd.cod.dim == 3 and zd.norm() == 0.0


@pytest.mark.parametrize("field", ALL_FIELDS)
def test_dagger_functor_laws(field):
    rng = np.random.default_rng(21)
    for _ in range(500):
        a, b, c = (Obj(int(rng.integers(1, 6))) for _ in range(3))
        f = random_morphism(field, a, b, rng)
        g = random_morphism(field, b, c, rng)
        assert approx_eq((g @ f).dagger(), f.dagger() @ g.dagger())
        assert frobenius_distance(f.dagger().dagger(), f) == 0.0
    ident = Morphism.identity(field, Obj(4))
    assert frobenius_distance(ident.dagger(), ident) == 0.0


def test_dagger_mono_predicates():
    col = Morphism.from_real(Field.REAL, [[RT2], [RT2]])
    assert is_dagger_mono(col)
    assert not is_dagger_iso(col)
    assert not is_dagger_mono(Morphism.from_real(Field.REAL, [[1], [1]]))


def test_projection_predicate():
    assert is_projection(Morphism.from_real(Field.REAL, [[1, 0], [0, 0]]))
    assert not is_projection(Morphism.from_real(Field.REAL, [[1, 1], [0, 0]]))
    with pytest.raises(ShapeMismatchError):
        is_projection(Morphism.from_real(Field.REAL, [[1, 0]]))


@pytest.mark.parametrize("field", ALL_FIELDS)
def test_dagger_simple_is_dimension_one(field):
    rng = np.random.default_rng(33)
    assert is_dagger_simple(field, Obj(1), trials=6, rng=rng)
    assert not is_dagger_simple(field, Obj(0), trials=4, rng=rng)
    assert not is_dagger_simple(field, Obj(2), trials=6, rng=rng)
    # explicit witness: a unit column into dim 2 is an isometry, not unitary
    witness = basis_column(field, Obj(2), 0)
    assert is_dagger_mono(witness) and not is_dagger_iso(witness)


def test_frobenius_examples():
    f = Morphism.from_real(Field.REAL, [[1, 2], [3, 4]])
    assert frobenius_distance(f, f) == 0.0
    assert frobenius_distance(
        Morphism.identity(Field.REAL, UNIT), Morphism.zero(Field.REAL, UNIT, UNIT)
    ) == 1.0
    assert frobenius_distance(
        Morphism.from_real(Field.REAL, [[3.0]]), Morphism.from_real(Field.REAL, [[0.0]])
    ) == 3.0
    with pytest.raises(ShapeMismatchError):
        frobenius_distance(f, Morphism.from_real(Field.REAL, [[1.0]]))


@pytest.mark.parametrize("field", ALL_FIELDS)
def test_dagger_monos_are_monic(field):
    rng = np.random.default_rng(55)
    for _ in range(100):
        a = Obj(int(rng.integers(1, 5)))
        x = Obj(a.dim + int(rng.integers(0, 3)))
        f = random_dagger_mono(field, a, x, rng)
        s = random_morphism(field, Obj(2), a, rng)
        t = random_morphism(field, Obj(2), a, rng)
        if frobenius_distance(s, t) < 1e-6:
            continue
        # equal post-composites force equal factors
        assert not approx_eq(f @ s, f @ t)
        assert approx_eq(f.dagger() @ (f @ s), s)


def test_small_objects_pairwise_distinct():
    rng = np.random.default_rng(77)
    for field in ALL_FIELDS:
        for a, b in [(0, 1), (0, 2), (1, 2)]:
            f = random_morphism(field, Obj(a), Obj(b), rng)
            assert not is_dagger_iso(f)
            assert not is_dagger_iso(f.dagger())


def test_json_roundtrip():
    rng = np.random.default_rng(90)
    for field in ALL_FIELDS:
        for dom, cod in [(2, 3), (0, 2), (3, 0), (1, 1)]:
            f = random_morphism(field, Obj(dom), Obj(cod), rng)
            g = Morphism.from_json(f.to_json())
            assert frobenius_distance(f, g) == 0.0
    bad = {"field": "C", "dom": 2, "cod": 1, "entries": [[[1.0, 0.0]]]}
    with pytest.raises(ShapeMismatchError):
        Morphism.from_json(bad)


def test_entry_width_validation():
    e = np.zeros((1, 1, 4))
    e[0, 0, 2] = 1.0
    with pytest.raises(FieldMismatchError):
        Morphism(Field.COMPLEX, UNIT, UNIT, e)


def test_column_extraction():
    f = Morphism.from_real(Field.REAL, [[1, 2], [3, 4]])
    col = f.col(1)
    assert col.dom == UNIT and np.allclose(col.entries[..., 0].ravel(), [2, 4])


def test_morphism_is_immutable():
    f = Morphism.from_real(Field.REAL, [[1.0]])
    with pytest.raises(AttributeError):
        f.dom = Obj(2)
