"""Biproducts, the derived addition, and its entrywise oracle.

The sum of two 1x1 morphisms evaluated through the defining blocks:
diagonal [1; 1], direct sum diag(f, g), codiagonal [1, 1], so
[1, 1] . diag(2, 3) . [1; 1] = 2 + 3 = 5.  That hand computation is the
frozen oracle for the first example below.
"""

import numpy as np
import pytest

from daggerlab.biproduct import (
    Biproduct,
    copairing,
    derived_add,
    diagonal_pair,
    make_biproduct,
    nfold_biproduct,
    oplus_mor,
    orthonormal_columns,
    pairing,
    verify_biproduct,
)
from daggerlab.errors import ShapeMismatchError
from daggerlab.matcat import (
    Morphism,
    Obj,
    UNIT,
    approx_eq,
    frobenius_distance,
    is_dagger_iso,
    is_dagger_mono,
)
from daggerlab.sampling import random_morphism, random_unitary
from daggerlab.scalars import ALL_FIELDS, Field, Scalar


def test_make_biproduct_examples():
    bp = make_biproduct(Field.REAL, UNIT, UNIT)
    assert np.allclose(bp.inj_left.entries[..., 0], [[1], [0]])
    assert np.allclose(bp.inj_right.entries[..., 0], [[0], [1]])

    bp20 = make_biproduct(Field.REAL, Obj(2), Obj(0))
    assert frobenius_distance(bp20.inj_left, Morphism.identity(Field.REAL, Obj(2))) == 0.0
    assert bp20.inj_right.dom.dim == 0 and bp20.inj_right.cod.dim == 2

    assert make_biproduct(Field.REAL, Obj(0), Obj(0)).total.dim == 0


@pytest.mark.parametrize("field", ALL_FIELDS)
def test_canonical_biproducts_verify(field):
    for a in range(4):
        for b in range(4):
            ok, residual = verify_biproduct(make_biproduct(field, Obj(a), Obj(b)))
            assert ok and residual < 1e-12


def test_adversarial_injections_rejected():
    bad = Biproduct.from_injections(
        Morphism.from_real(Field.REAL, [[1], [1]]),
        Morphism.from_real(Field.REAL, [[0], [1]]),
    )
    ok, residual = verify_biproduct(bad)
    assert not ok and residual > 0.5


def test_oplus_examples():
    id1 = Morphism.identity(Field.REAL, UNIT)
    assert frobenius_distance(oplus_mor(id1, id1), Morphism.identity(Field.REAL, Obj(2))) == 0.0

    two = Morphism.from_real(Field.REAL, [[2.0]])
    three = Morphism.from_real(Field.REAL, [[3.0]])
    assert np.allclose(oplus_mor(two, three).entries[..., 0], [[2, 0], [0, 3]])

    f = Morphism.from_real(Field.REAL, [[1, 2], [3, 4]])
    zero00 = Morphism.zero(Field.REAL, Obj(0), Obj(0))
    assert frobenius_distance(oplus_mor(f, zero00), f) == 0.0


def test_oplus_commuting_squares():
    rng = np.random.default_rng(3)
    for field in ALL_FIELDS:
        f = random_morphism(field, Obj(2), Obj(3), rng)
        g = random_morphism(field, Obj(1), Obj(2), rng)
        bp_dom = make_biproduct(field, f.dom, g.dom)
        bp_cod = make_biproduct(field, f.cod, g.cod)
        fg = oplus_mor(f, g)
        assert approx_eq(fg @ bp_dom.inj_left, bp_cod.inj_left @ f)
        assert approx_eq(fg @ bp_dom.inj_right, bp_cod.inj_right @ g)
        # dagger distributes over the direct sum
        assert approx_eq(fg.dagger(), oplus_mor(f.dagger(), g.dagger()))


def test_copairing_pairing_examples():
    e1 = Morphism.from_real(Field.REAL, [[1], [0]])
    e2 = Morphism.from_real(Field.REAL, [[0], [1]])
    assert frobenius_distance(copairing([e1, e2]), Morphism.identity(Field.REAL, Obj(2))) == 0.0
    assert frobenius_distance(copairing([e1]), e1) == 0.0

    r1 = Morphism.from_real(Field.REAL, [[1, 0]])
    r2 = Morphism.from_real(Field.REAL, [[0, 1]])
    assert frobenius_distance(pairing([r1, r2]), Morphism.identity(Field.REAL, Obj(2))) == 0.0

    assert frobenius_distance(copairing([e1, e2]).dagger(), pairing([e1.dagger(), e2.dagger()])) == 0.0
    with pytest.raises(ShapeMismatchError):
        copairing([])
    with pytest.raises(ShapeMismatchError):
        copairing([e1, r1])


def test_diagonal_pair_laws():
    for field in ALL_FIELDS:
        dp = diagonal_pair(field, Obj(3))
        assert frobenius_distance(dp.diagonal.dagger(), dp.codiagonal) == 0.0
        bp = make_biproduct(field, Obj(3), Obj(3))
        ident = Morphism.identity(field, Obj(3))
        assert approx_eq(bp.inj_left.dagger() @ dp.diagonal, ident)
        assert approx_eq(bp.inj_right.dagger() @ dp.diagonal, ident)


def test_derived_add_examples():
    two = Morphism.from_real(Field.REAL, [[2.0]])
    three = Morphism.from_real(Field.REAL, [[3.0]])
    assert frobenius_distance(derived_add(two, three), Morphism.from_real(Field.REAL, [[5.0]])) == 0.0

    rng = np.random.default_rng(8)
    f = random_morphism(Field.COMPLEX, Obj(2), Obj(3), rng)
    zero = Morphism.zero(Field.COMPLEX, Obj(2), Obj(3))
    assert frobenius_distance(derived_add(f, zero), f) == 0.0

    g = random_morphism(Field.COMPLEX, Obj(2), Obj(3), rng)
    assert frobenius_distance(derived_add(f, g), derived_add(g, f)) == 0.0


@pytest.mark.parametrize("field", ALL_FIELDS)
def test_derived_add_matches_entrywise_oracle(field):
    rng = np.random.default_rng(13)
    for _ in range(200):
        x = Obj(int(rng.integers(0, 9)))
        y = Obj(int(rng.integers(0, 9)))
        f = random_morphism(field, x, y, rng)
        g = random_morphism(field, x, y, rng)
        oracle = Morphism(field, x, y, f.entries + g.entries)
        assert frobenius_distance(derived_add(f, g), oracle) <= 1e-9


@pytest.mark.parametrize("field", ALL_FIELDS)
def test_zero_left_leg_forces_unitary_right_leg(field):
    rng = np.random.default_rng(17)
    for _ in range(50):
        t = Obj(int(rng.integers(1, 6)))
        g = random_unitary(field, t, rng)
        bp = Biproduct.from_injections(Morphism.zero(field, Obj(0), t), g)
        ok, _ = verify_biproduct(bp)
        assert ok and is_dagger_iso(g)
        # replay of the argument: g . g-dagger fixes both legs
        assert approx_eq(g @ (g.dagger() @ g), g)


@pytest.mark.parametrize("field", ALL_FIELDS)
def test_range_projections_sum_to_identity(field):
    rng = np.random.default_rng(19)
    for _ in range(50):
        a, b = Obj(int(rng.integers(0, 4))), Obj(int(rng.integers(0, 4)))
        bp = make_biproduct(field, a, b)
        u = random_unitary(field, bp.total, rng)
        left, right = u @ bp.inj_left, u @ bp.inj_right
        total = derived_add(left @ left.dagger(), right @ right.dagger())
        assert approx_eq(total, Morphism.identity(field, bp.total))


@pytest.mark.parametrize("field", ALL_FIELDS)
def test_dagger_of_derived_sum(field):
    rng = np.random.default_rng(23)
    for _ in range(50):
        x, y = Obj(int(rng.integers(0, 5))), Obj(int(rng.integers(0, 5)))
        f = random_morphism(field, x, y, rng)
        g = random_morphism(field, x, y, rng)
        assert approx_eq(derived_add(f, g).dagger(), derived_add(f.dagger(), g.dagger()))


@pytest.mark.parametrize("field", ALL_FIELDS)
def test_semiadditive_laws(field):
    rng = np.random.default_rng(29)
    for _ in range(50):
        x, y, z = (Obj(int(rng.integers(1, 5))) for _ in range(3))
        f = random_morphism(field, x, y, rng)
        g = random_morphism(field, x, y, rng)
        h = random_morphism(field, x, y, rng)
        r = random_morphism(field, y, z, rng)
        s = random_morphism(field, z, x, rng)
        zero = Morphism.zero(field, x, y)
        assert approx_eq(derived_add(derived_add(f, g), h), derived_add(f, derived_add(g, h)))
        assert approx_eq(derived_add(f, g), derived_add(g, f))
        assert frobenius_distance(derived_add(f, zero), f) == 0.0
        assert approx_eq(r @ derived_add(f, g), derived_add(r @ f, r @ g))
        assert approx_eq(derived_add(f, g) @ s, derived_add(f @ s, g @ s))


def test_nfold_biproduct_examples():
    injections = nfold_biproduct(UNIT, 2, Field.REAL)
    assert np.allclose(injections[0].entries[..., 0], [[1], [0]])
    assert np.allclose(injections[1].entries[..., 0], [[0], [1]])

    assert nfold_biproduct(UNIT, 0, Field.REAL) == []

    injections = nfold_biproduct(Obj(2), 2, Field.COMPLEX)
    assert len(injections) == 2
    assert all(i.cod.dim == 4 and i.dom.dim == 2 for i in injections)
    acc = Morphism.zero(Field.COMPLEX, Obj(4), Obj(4))
    for inj in injections:
        assert is_dagger_mono(inj)
        acc = derived_add(acc, inj @ inj.dagger())
    assert approx_eq(acc, Morphism.identity(Field.COMPLEX, Obj(4)))
    assert (injections[1].dagger() @ injections[0]).norm() == 0.0


def test_orthonormal_columns_drops_dependents():
    v = Morphism.from_real(Field.REAL, [[1], [1]])
    cols = orthonormal_columns([v, v])
    assert len(cols) == 1
    assert abs(cols[0].norm() - 1.0) < 1e-12


def test_orthonormal_columns_quaternion_right_action():
    i = Scalar(Field.QUATERNION, 0, 1, 0, 0)
    j = Scalar(Field.QUATERNION, 0, 0, 1, 0)
    v = Morphism.column(Field.QUATERNION, [i, j])
    (e,) = orthonormal_columns([v])
    ip = (e.dagger() @ e).scalar()
    assert abs(ip.w - 1.0) < 1e-12 and abs(ip.x) + abs(ip.y) + abs(ip.z) < 1e-12
