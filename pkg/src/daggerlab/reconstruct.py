"""Reconstruction of the scalar field and the Hermitian-space structure
from the category itself.

Scalars are recovered as endomorphisms of the unit object (with the
multiplication order reversed), vectors of an object X are the columns
from the unit object into X, and the inner product of two columns is the
1x1 composition v-dagger . u.  Everything here is computed by composing
morphisms, never by coordinate formulas, so the right-module conventions
for quaternions hold by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .axioms import complement_h3, construct_h4a, normalize_h4b
from .biproduct import (
    copairing,
    derived_add,
    diagonal_pair,
    make_biproduct,
    nfold_biproduct,
    orthonormal_columns,
)
from .errors import ResidualError, ShapeMismatchError
from .matcat import (
    Morphism,
    Obj,
    UNIT,
    approx_eq,
    basis_column,
    frobenius_distance,
)
from .reports import FAIL, INFEASIBLE, PASS, Report
from .sampling import random_morphism
from .scalars import DEFAULT_TOL, Field, Scalar, TolerancePolicy
from .scalars import inv as scalar_inv
from .scalars import mul as scalar_mul


def _require_vector(u: Morphism) -> None:
    if u.dom != UNIT:
        raise ShapeMismatchError("vectors are morphisms out of the unit object")


def inner_product(u: Morphism, v: Morphism) -> Scalar:
    """<u, v> = v-dagger . u, a 1x1 morphism lowered to a scalar."""
    _require_vector(u)
    _require_vector(v)
    if u.cod != v.cod:
        raise ShapeMismatchError("inner product needs a common ambient object")
    return (v.dagger() @ u).scalar()


def scale(u: Morphism, a: Scalar) -> Morphism:
    """Right scalar action on a vector: compose with the 1x1 morphism."""
    return u @ Morphism.single(a)


@dataclass(frozen=True)
class Subspace:
    """An orthoclosed subspace, given by an orthonormal spanning list."""

    field: Field
    ambient: Obj
    onb: tuple[Morphism, ...]

    @property
    def dim(self) -> int:
        return len(self.onb)

    def orthonormality_residual(self) -> float:
        worst = 0.0
        for i, e in enumerate(self.onb):
            for j, f in enumerate(self.onb):
                g = inner_product(e, f)
                target = 1.0 if i == j else 0.0
                worst = max(worst, abs(g.w - target), abs(g.x), abs(g.y), abs(g.z))
        return worst


def gram_schmidt(
    vectors: list[Morphism],
    field: Field | None = None,
    ambient: Obj | None = None,
    drop_eps: float = 1e-8,
    tol: TolerancePolicy = DEFAULT_TOL,
) -> Subspace:
    """Orthonormalise a list of vectors into a subspace, dropping
    near-dependent ones; quaternionic normalisation divides on the
    right."""
    if vectors:
        field, ambient = vectors[0].field, vectors[0].cod
    if field is None or ambient is None:
        raise ShapeMismatchError("empty vector list needs explicit field and ambient")
    for v in vectors:
        _require_vector(v)
    onb = orthonormal_columns(vectors, drop_eps=drop_eps, tol=tol)
    return Subspace(field, ambient, tuple(onb))


def onb_expand(
    u: Morphism, basis: Subspace, tol: TolerancePolicy = DEFAULT_TOL
) -> list[Scalar]:
    """Coefficients of u in an orthonormal basis: c_i = e_i-dagger . u,
    with the reconstruction sum e_1.c_1 + ... + e_n.c_n re-assembled via
    the derived addition and checked against u."""
    _require_vector(u)
    coeffs = [(e.dagger() @ u).scalar() for e in basis.onb]
    recon = Morphism.zero(u.field, UNIT, u.cod)
    for e, c in zip(basis.onb, coeffs):
        recon = derived_add(recon, scale(e, c))
    residual = frobenius_distance(u, recon)
    if residual > tol.bound(u.norm(), recon.norm()):
        raise ResidualError("basis does not span the expanded vector", residual)
    return coeffs


def coordinate_basis(field: Field, x: Obj) -> Subspace:
    return Subspace(field, x, tuple(basis_column(field, x, k) for k in range(x.dim)))


def subspace_to_dagger_mono(m: Subspace) -> Morphism:
    """The isometry whose image realises the subspace; the empty span
    yields the morphism out of the zero object."""
    if not m.onb:
        return Morphism.zero(m.field, Obj(0), m.ambient)
    return copairing(list(m.onb))


def projection_of_subspace(m: Subspace) -> Morphism:
    h = subspace_to_dagger_mono(m)
    return h @ h.dagger()


def orthocomplement(m: Subspace, tol: TolerancePolicy = DEFAULT_TOL) -> Subspace:
    comp = complement_h3(subspace_to_dagger_mono(m), tol)
    return Subspace(
        m.field, m.ambient, tuple(comp.col(j) for j in range(comp.dom.dim))
    )


def functor_v(
    f: Morphism,
    basis_dom: Subspace,
    basis_cod: Subspace,
    tol: TolerancePolicy = DEFAULT_TOL,
) -> Morphism:
    """Matrix of the column action u -> f . u in chosen orthonormal
    bases; entry (i, j) is the 1x1 composition e_i-dagger . f . e_j."""
    if basis_dom.ambient != f.dom or basis_cod.ambient != f.cod:
        raise ShapeMismatchError("bases do not match the morphism's endpoints")
    if basis_dom.dim != f.dom.dim or basis_cod.dim != f.cod.dim:
        raise ShapeMismatchError("bases must span the domain and codomain")
    rows = []
    for ei in basis_cod.onb:
        rows.append([(ei.dagger() @ f @ ej).scalar() for ej in basis_dom.onb])
    if not rows:
        return Morphism.zero(f.field, Obj(basis_dom.dim), Obj(0))
    return Morphism.from_scalars(f.field, rows)


def rank_object(field: Field, n: int) -> tuple[Obj, list[Morphism]]:
    """An object of any requested finite rank, with its orthonormal
    basis of unit-object columns (the n-fold biproduct injections)."""
    x = Obj(n)
    onb = nfold_biproduct(UNIT, n, field)
    return x, onb


def dagger_mono_between(field: Field, x: Obj, y: Obj) -> Morphism:
    """An isometry between any two objects, from the smaller into the
    larger: compare basis sizes and inject blockwise."""
    small, large = (x, y) if x.dim <= y.dim else (y, x)
    e = np.zeros((large.dim, small.dim, 4))
    e[: small.dim, :, 0] = np.eye(small.dim)
    return Morphism(field, small, large, e)


class EndoField:
    """The scalars reconstructed from endomorphisms of the unit object.

    Carrier elements are 1x1 morphisms; addition is the derived addition,
    multiplication is composition in reversed order, and the involution
    is the dagger.
    """

    def __init__(self, field: Field):
        self.field = field
        self.one = Morphism.identity(field, UNIT)
        self.zero = Morphism.zero(field, UNIT, UNIT)

    def lift(self, a: Scalar) -> Morphism:
        return Morphism.single(a)

    def lower(self, m: Morphism) -> Scalar:
        return m.scalar()

    def add(self, a: Morphism, b: Morphism) -> Morphism:
        return derived_add(a, b)

    def mul(self, a: Morphism, b: Morphism) -> Morphism:
        return b @ a

    def star(self, a: Morphism) -> Morphism:
        return a.dagger()

    def inv(self, a: Morphism, tol: TolerancePolicy = DEFAULT_TOL) -> Morphism:
        return Morphism.single(scalar_inv(a.scalar(), tol))


def scalar_field_witness(
    field: Field, tol: TolerancePolicy = DEFAULT_TOL
) -> tuple[Scalar, Scalar]:
    """Two nonzero unit-object endomorphisms summing to zero.

    Replays the construction that turns the endomorphism semiring into a
    ring: normalise the diagonal of the unit object to an isometry, take
    its biproduct complement J with injection f, pick a nonzero g into J,
    and read the two components of k = g-dagger . f-dagger off the
    canonical injections.
    """
    delta = diagonal_pair(field, UNIT).diagonal
    h = normalize_h4b(delta, tol)
    m = delta @ Morphism.single(h)
    f = complement_h3(m, tol)
    g = construct_h4a(field, f.dom)
    k = (f @ g).dagger()
    if (k @ m).norm() > tol.abs_eps or (k @ delta).norm() > tol.bound(k.norm(), delta.norm()):
        raise ResidualError("witness does not annihilate the diagonal", (k @ delta).norm())
    bp = make_biproduct(field, UNIT, UNIT)
    k1 = k @ bp.inj_left
    k2 = k @ bp.inj_right
    if k1.norm() <= tol.abs_eps or k2.norm() <= tol.abs_eps:
        raise ResidualError("witness components must both be nonzero", min(k1.norm(), k2.norm()))
    total = derived_add(k1, k2)
    if total.norm() > tol.bound(k1.norm(), k2.norm()):
        raise ResidualError("witness components do not cancel", total.norm())
    return k1.scalar(), k2.scalar()


def faithfulness_check(
    field: Field,
    trials: int = 200,
    dims: tuple[int, ...] = (1, 2, 3, 4, 5, 6),
    rng: np.random.Generator | None = None,
    tol: TolerancePolicy = DEFAULT_TOL,
) -> Report:
    """Distinct parallel morphisms are separated by some column from the
    unit object; reports the separating coordinate column per trial."""
    rng = np.random.default_rng(0) if rng is None else rng
    separating: list[int] = []
    for _ in range(trials):
        x = Obj(int(rng.choice(dims)))
        y = Obj(int(rng.choice(dims)))
        f = random_morphism(field, x, y, rng)
        g = random_morphism(field, x, y, rng)
        if frobenius_distance(f, g) <= 1e-6:
            continue
        found = None
        for j in range(x.dim):
            u = basis_column(field, x, j)
            if not approx_eq(f @ u, g @ u, tol):
                found = j
                break
        if found is None:
            return Report(
                "functor-faithful",
                field.value,
                FAIL,
                frobenius_distance(f, g),
                witness=f,
                details={"reason": "no separating column"},
            )
        separating.append(found)
    return Report(
        "functor-faithful",
        field.value,
        PASS,
        0.0,
        details={"trials": trials, "separated": len(separating)},
    )


def center_sqrt_minus_one_test(field: Field) -> Report:
    """Search the central unit scalars for a square root of -1.

    Over C the centre is the whole field and i works.  Over R and H the
    centre is the real line, where squares are nonnegative, so the
    search is infeasible; a sampled sign scan documents the argument.
    """
    if field is Field.COMPLEX:
        alpha = Scalar(field, 0.0, 1.0)
        sq = scalar_mul(alpha, alpha)
        assert sq.w == -1.0 and sq.x == 0.0
        return Report(
            "center-sqrt-minus-one",
            field.value,
            PASS,
            0.0,
            witness=Morphism.single(alpha),
        )
    scan = [float(t) for t in np.linspace(-2.0, 2.0, 41)]
    min_square = min(t * t for t in scan)
    return Report(
        "center-sqrt-minus-one",
        field.value,
        INFEASIBLE,
        0.0,
        details={
            "centre": "real line",
            "min_sampled_square": min_square,
            "obstruction": "real squares are nonnegative, so no central scalar squares to -1",
        },
    )
