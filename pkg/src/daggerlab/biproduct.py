"""Dagger biproducts and everything derived from them.

The addition of parallel morphisms is not an entrywise shortcut: it is
computed literally as codiagonal . (f (+) g) . diagonal, so the block
constructions are exercised by every additive step in the package.  The
entrywise sum appears only inside test oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ShapeMismatchError
from .matcat import Morphism, Obj, frobenius_distance
from .scalars import DEFAULT_TOL, Field, Scalar, TolerancePolicy, real_sqrt


def oplus_obj(a: Obj, b: Obj) -> Obj:
    return Obj(a.dim + b.dim)


@dataclass(frozen=True)
class Biproduct:
    """A pair of injections witnessing total = left (+) right."""

    left: Obj
    right: Obj
    total: Obj
    inj_left: Morphism
    inj_right: Morphism

    @classmethod
    def from_injections(cls, inj_left: Morphism, inj_right: Morphism) -> "Biproduct":
        if inj_left.cod != inj_right.cod:
            raise ShapeMismatchError("injections must share their codomain")
        return cls(inj_left.dom, inj_right.dom, inj_left.cod, inj_left, inj_right)


def make_biproduct(field: Field, a: Obj, b: Obj) -> Biproduct:
    """Canonical block injections [I; 0] and [0; I].  When one leg is the
    zero object the other injection degenerates to the identity, so the
    zero object is neutral by construction."""
    total = oplus_obj(a, b)
    el = np.zeros((total.dim, a.dim, 4))
    el[: a.dim, :, 0] = np.eye(a.dim)
    er = np.zeros((total.dim, b.dim, 4))
    er[a.dim:, :, 0] = np.eye(b.dim)
    return Biproduct(a, b, total, Morphism(field, a, total, el), Morphism(field, b, total, er))


def verify_biproduct(bp: Biproduct, tol: TolerancePolicy = DEFAULT_TOL) -> tuple[bool, float]:
    """Check the laws on an arbitrary injection pair: both legs are
    isometries, their ranges are orthogonal, and the range projections
    sum (derived addition) to the identity of the total object.

    Returns (ok, worst residual)."""
    f, g = bp.inj_left, bp.inj_right
    id_left = Morphism.identity(f.field, f.dom)
    id_right = Morphism.identity(g.field, g.dom)
    id_total = Morphism.identity(f.field, bp.total)
    residuals = [
        frobenius_distance(f.dagger() @ f, id_left),
        frobenius_distance(g.dagger() @ g, id_right),
        (g.dagger() @ f).norm(),
        frobenius_distance(
            derived_add(f @ f.dagger(), g @ g.dagger()), id_total
        ),
    ]
    worst = max(residuals)
    scale = max(1.0, id_total.norm())
    return worst <= tol.bound(scale, scale), worst


def oplus_mor(f: Morphism, g: Morphism) -> Morphism:
    """Block-diagonal direct sum, the unique morphism commuting with the
    canonical injections on both legs."""
    if f.field is not g.field:
        raise ShapeMismatchError("direct sum over mixed fields")
    dom = oplus_obj(f.dom, g.dom)
    cod = oplus_obj(f.cod, g.cod)
    e = np.zeros((cod.dim, dom.dim, 4))
    e[: f.cod.dim, : f.dom.dim] = f.entries
    e[f.cod.dim:, f.dom.dim:] = g.entries
    return Morphism(f.field, dom, cod, e)


def copairing(fs: Sequence[Morphism]) -> Morphism:
    """[f_1, ..., f_n]: A_1 (+) ... (+) A_n -> X for morphisms with a
    common codomain; block-concatenates the columns."""
    if not fs:
        raise ShapeMismatchError("copairing of an empty list")
    cod = fs[0].cod
    field = fs[0].field
    if any(f.cod != cod or f.field is not field for f in fs):
        raise ShapeMismatchError("copairing requires a common codomain")
    e = np.concatenate([f.entries for f in fs], axis=1)
    return Morphism(field, Obj(sum(f.dom.dim for f in fs)), cod, e)


def pairing(fs: Sequence[Morphism]) -> Morphism:
    """(f_1, ..., f_n): X -> A_1 (+) ... (+) A_n for morphisms with a
    common domain; block-stacks the rows."""
    if not fs:
        raise ShapeMismatchError("pairing of an empty list")
    dom = fs[0].dom
    field = fs[0].field
    if any(f.dom != dom or f.field is not field for f in fs):
        raise ShapeMismatchError("pairing requires a common domain")
    e = np.concatenate([f.entries for f in fs], axis=0)
    return Morphism(field, dom, Obj(sum(f.cod.dim for f in fs)), e)


@dataclass(frozen=True)
class DiagonalPair:
    """Diagonal X -> X (+) X and its dagger, the codiagonal."""

    object: Obj
    diagonal: Morphism
    codiagonal: Morphism


def diagonal_pair(field: Field, x: Obj) -> DiagonalPair:
    ident = Morphism.identity(field, x)
    diag = pairing([ident, ident])
    return DiagonalPair(x, diag, diag.dagger())


def derived_add(f: Morphism, g: Morphism) -> Morphism:
    """Sum of parallel morphisms, evaluated literally as
    codiagonal . (f (+) g) . diagonal."""
    if f.dom != g.dom or f.cod != g.cod or f.field is not g.field:
        raise ShapeMismatchError("derived addition needs parallel morphisms")
    dp_dom = diagonal_pair(f.field, f.dom)
    dp_cod = diagonal_pair(f.field, f.cod)
    return dp_cod.codiagonal @ oplus_mor(f, g) @ dp_dom.diagonal


def nfold_biproduct(x: Obj, n: int, field: Field) -> list[Morphism]:
    """The n injections of x into n.x (empty list for n = 0, whose
    biproduct is the zero object)."""
    if n < 0:
        raise ValueError("n must be a natural number")
    total = Obj(n * x.dim)
    out = []
    for i in range(n):
        e = np.zeros((total.dim, x.dim, 4))
        e[i * x.dim: (i + 1) * x.dim, :, 0] = np.eye(x.dim)
        out.append(Morphism(field, x, total, e))
    return out


def orthonormal_columns(
    vectors: Sequence[Morphism],
    against: Sequence[Morphism] = (),
    drop_eps: float = 1e-8,
    tol: TolerancePolicy = DEFAULT_TOL,
) -> list[Morphism]:
    """Right Gram-Schmidt over the ambient field.

    Extends the (assumed orthonormal) `against` prefix by unit columns
    spanning `vectors`; candidates whose residual norm falls below
    `drop_eps` are treated as dependent and dropped.  Coefficients are
    1x1 compositions, subtraction goes through the derived addition and
    normalisation divides on the right, so the quaternionic right-module
    structure is respected throughout.
    """
    accepted: list[Morphism] = []
    for v in vectors:
        u = v
        for _ in range(2):  # re-orthogonalise once against rounding
            for e in [*against, *accepted]:
                coef = (e.dagger() @ u).scalar()
                u = derived_add(u, e @ Morphism.single(-coef))
        n2 = (u.dagger() @ u).scalar().w
        length = real_sqrt(n2, tol)
        if length < drop_eps:
            continue
        unit = u @ Morphism.single(Scalar(u.field, 1.0 / length))
        accepted.append(unit)
    return accepted
