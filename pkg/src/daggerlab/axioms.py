"""Constructors and verifiers for the five structural axioms of the
matrix model: biproducts (H1), directed colimits of isometries (H2),
biproduct complements of isometries (H3), the simple unit object and
normalisation (H4), and strict square roots of unitaries (H5).

Over the complex field a strict square root is synthesised spectrally;
over the reals and quaternions the scalar obstruction (no central square
root of -1) is turned into an explicit infeasibility witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

import numpy as np
import scipy.linalg

from .biproduct import (
    copairing,
    derived_add,
    make_biproduct,
    nfold_biproduct,
    orthonormal_columns,
    verify_biproduct,
)
from .errors import (
    DomainError,
    NoMorphismError,
    NotNormalizableError,
    ShapeMismatchError,
    UnsupportedFieldError,
)
from .matcat import (
    Morphism,
    Obj,
    UNIT,
    approx_eq,
    basis_column,
    compose,
    frobenius_distance,
    is_dagger_iso,
    is_dagger_mono,
)
from .reports import FAIL, INFEASIBLE, PASS, Report
from .sampling import random_morphism, random_rank1_projection
from .scalars import DEFAULT_TOL, Field, Scalar, TolerancePolicy, real_sqrt

EIGENVALUE_CLUSTER_EPS = 1e-7  # eigenvalues closer than this interpolate as one node
SVD_RANK_EPS = 1e-8


# ---------------------------------------------------------------------------
# (H1)  dagger biproducts
# ---------------------------------------------------------------------------


def check_h1(field: Field, dims: Sequence[int], tol: TolerancePolicy = DEFAULT_TOL) -> Report:
    """Re-derive the biproduct laws numerically for every pair of the
    given dimensions."""
    worst = 0.0
    for a, b in itertools.product(dims, dims):
        ok, residual = verify_biproduct(make_biproduct(field, Obj(a), Obj(b)), tol)
        worst = max(worst, residual)
        if not ok:
            return Report("H1", field.value, FAIL, residual, details={"pair": [a, b]})
    return Report("H1", field.value, PASS, worst, details={"pairs": len(dims) ** 2})


# ---------------------------------------------------------------------------
# (H3)  every isometry is one leg of a biproduct
# ---------------------------------------------------------------------------


def complement_h3(f: Morphism, tol: TolerancePolicy = DEFAULT_TOL) -> Morphism:
    """Complete an isometry f: A -> X to a biproduct (A -> X <- B).

    The complement is obtained by orthonormalising the canonical basis
    columns of X against the columns of f; its domain dimension is
    exactly X.dim - A.dim.
    """
    if not is_dagger_mono(f, tol):
        raise DomainError("complement requires a dagger monomorphism")
    x = f.cod
    against = [f.col(j) for j in range(f.dom.dim)]
    candidates = [basis_column(f.field, x, k) for k in range(x.dim)]
    completed = orthonormal_columns(candidates, against=against, tol=tol)
    want = x.dim - f.dom.dim
    if len(completed) != want:
        raise DomainError(
            f"complement has {len(completed)} columns, expected {want}"
        )
    if not completed:
        return Morphism.zero(f.field, Obj(0), x)
    return copairing(completed)


# ---------------------------------------------------------------------------
# (H4)  the simple unit object
# ---------------------------------------------------------------------------


def construct_h4a(field: Field, a: Obj) -> Morphism:
    """A nonzero column into any nonzero object: the first basis column."""
    if a.dim == 0:
        raise NoMorphismError("no nonzero morphism into the zero object")
    return basis_column(field, a, 0)


def normalize_h4b(u: Morphism, tol: TolerancePolicy = DEFAULT_TOL) -> Scalar:
    """The unit automorphism h with u . h an isometry.

    h = 1/sqrt(<u,u>); the squared length u-dagger . u is a positive real
    1x1 morphism, so h is real and in particular central.
    """
    if u.dom != UNIT:
        raise ShapeMismatchError("normalisation applies to columns from the unit object")
    n2 = (u.dagger() @ u).scalar()
    if abs(n2.x) > tol.abs_eps or abs(n2.y) > tol.abs_eps or abs(n2.z) > tol.abs_eps:
        raise DomainError("squared length is not real")
    if n2.w <= tol.abs_eps:
        raise NotNormalizableError("zero column cannot be normalised")
    return Scalar(u.field, 1.0 / real_sqrt(n2.w, tol))


# ---------------------------------------------------------------------------
# (H5)  strict square roots over the complex field
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StrictSqrtCertificate:
    """A unitary square root together with the spectral interpolation
    data proving it is a polynomial in the input."""

    root: Morphism
    interpolation_data: tuple[tuple[Scalar, Scalar], ...]
    residual: float


def _cluster_indices(eigs: np.ndarray, eps: float) -> list[list[int]]:
    """Group indices of unit-circle eigenvalues closer than eps, walking
    them in angle order.  No merge across the branch cut at -1: the
    principal square root is discontinuous there."""
    unit = eigs / np.abs(eigs)
    order = np.argsort(np.angle(unit))
    groups: list[list[int]] = [[int(order[0])]]
    for idx in order[1:]:
        if abs(unit[idx] - unit[groups[-1][-1]]) <= eps:
            groups[-1].append(int(idx))
        else:
            groups.append([int(idx)])
    return groups


def _cluster_unit_eigenvalues(eigs: np.ndarray, eps: float) -> list[complex]:
    """Representative (renormalised mean) per eigenvalue cluster."""
    unit = eigs / np.abs(eigs)
    reps = []
    for group in _cluster_indices(eigs, eps):
        mean = np.mean(unit[group])
        reps.append(complex(mean / abs(mean)))
    return reps


def _leja_order(nodes: list[complex]) -> list[complex]:
    """Greedy node ordering that keeps Newton interpolation stable."""
    remaining = list(nodes)
    ordered = [remaining.pop(0)]
    while remaining:
        best = max(
            range(len(remaining)),
            key=lambda i: np.prod([abs(remaining[i] - x) for x in ordered]),
        )
        ordered.append(remaining.pop(best))
    return ordered


def strict_sqrt_complex(
    u: Morphism,
    tol: TolerancePolicy = DEFAULT_TOL,
    cluster_eps: float = EIGENVALUE_CLUSTER_EPS,
) -> StrictSqrtCertificate:
    """Strict square root of a complex unitary.

    Eigenvalues are clustered, each representative gets its principal
    square root (argument in (-pi, pi] halved, so the root of -1 is +i),
    and the root matrix is the Newton interpolation polynomial through
    those nodes evaluated at the input.  Being a polynomial in the input,
    the root commutes with every morphism the input commutes with.
    """
    if u.field is not Field.COMPLEX:
        raise UnsupportedFieldError("spectral square root is implemented over C only")
    if u.dom != u.cod:
        raise ShapeMismatchError("square root of a non-endomorphism")
    if not is_dagger_iso(u, tol):
        raise DomainError("input is not unitary")
    if u.dom.dim == 0:
        ident = Morphism.identity(u.field, u.dom)
        return StrictSqrtCertificate(ident, (), 0.0)

    uc = u.complex_view()
    eigs = np.linalg.eigvals(uc)
    if np.max(np.abs(np.abs(eigs) - 1.0)) > 1e3 * tol.abs_eps:
        raise DomainError("spectrum is not on the unit circle")
    nodes = _leja_order(_cluster_unit_eigenvalues(eigs, cluster_eps))
    values = [complex(np.exp(0.5j * np.angle(lam))) for lam in nodes]

    # Newton divided differences, then a Horner evaluation at the matrix.
    coeffs = list(values)
    for k in range(1, len(nodes)):
        for i in range(len(nodes) - 1, k - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (nodes[i] - nodes[i - k])
    ident = np.eye(u.dom.dim, dtype=complex)
    poly = coeffs[-1] * ident
    for m in range(len(nodes) - 2, -1, -1):
        poly = poly @ (uc - nodes[m] * ident) + coeffs[m] * ident

    root = Morphism.from_complex(poly)
    residual = frobenius_distance(root @ root, u)
    data = tuple(
        (
            Scalar(Field.COMPLEX, lam.real, lam.imag),
            Scalar(Field.COMPLEX, val.real, val.imag),
        )
        for lam, val in zip(nodes, values)
    )
    return StrictSqrtCertificate(root, data, residual)


def spectral_projections(
    u: Morphism, cluster_eps: float = EIGENVALUE_CLUSTER_EPS
) -> list[Morphism]:
    """Orthogonal projections onto the clustered eigenspaces of a complex
    unitary; each commutes with u by construction."""
    if u.field is not Field.COMPLEX:
        raise UnsupportedFieldError("spectral projections are implemented over C only")
    if u.dom.dim == 0:
        return []
    t, q = scipy.linalg.schur(u.complex_view(), output="complex")
    out = []
    for idx in _cluster_indices(np.diag(t), cluster_eps):
        block = q[:, idx]
        out.append(Morphism.from_complex(block @ block.conj().T))
    return out


def is_strict_sqrt(
    u: Morphism,
    v: Morphism,
    projection_samples: int = 50,
    rng: np.random.Generator | None = None,
    tol: TolerancePolicy = DEFAULT_TOL,
) -> bool:
    """Check v^2 = u together with the commutation biconditional on three
    projection families: coordinate projections, random rank-1
    projections, and (over C) the spectral projections of u."""
    if u.dom != u.cod or v.dom != v.cod or u.dom != v.dom:
        raise ShapeMismatchError("strictness check needs endomorphisms of one object")
    rng = np.random.default_rng(0) if rng is None else rng
    if not (is_dagger_iso(u, tol) and is_dagger_iso(v, tol)):
        return False
    if not approx_eq(v @ v, u, tol):
        return False
    if u.dom.dim == 0:
        return True

    def commutes(p: Morphism, a: Morphism) -> bool:
        return approx_eq(p @ a, a @ p, tol)

    projections: list[Morphism] = [
        compose(basis_column(u.field, u.dom, k), basis_column(u.field, u.dom, k).dagger())
        for k in range(u.dom.dim)
    ]
    projections += [
        random_rank1_projection(u.field, u.dom, rng) for _ in range(projection_samples)
    ]
    if u.field is Field.COMPLEX:
        specs = spectral_projections(u)
        projections += specs
        for _ in range(4):  # random unions of spectral subspaces
            pick = [p for p in specs if rng.random() < 0.5]
            if pick:
                acc = pick[0]
                for p in pick[1:]:
                    acc = derived_add(acc, p)
                projections.append(acc)

    return all(commutes(p, u) == commutes(p, v) for p in projections)


def polynomial_fit_residual(u: Morphism, v: Morphism) -> float:
    """Least-squares residual of fitting v by powers u^0 .. u^(d-1).

    A residual at rounding level certifies that v is a polynomial in u,
    which makes 'p commutes with u implies p commutes with v' automatic.
    """
    if u.field is not Field.COMPLEX:
        raise UnsupportedFieldError("polynomial fit is implemented over C only")
    d = u.dom.dim
    uc = u.complex_view()
    power = np.eye(d, dtype=complex)
    cols = []
    for _ in range(max(d, 1)):
        cols.append(power.ravel())
        power = power @ uc
    a = np.array(cols).T
    b = v.complex_view().ravel()
    coef, *_ = np.linalg.lstsq(a, b, rcond=None)
    return float(np.linalg.norm(a @ coef - b))


# ---------------------------------------------------------------------------
# (H5)  refutation over R and H
# ---------------------------------------------------------------------------


def _commutant_of_projections(
    field: Field,
    dim: int,
    projections: Sequence[Morphism],
) -> tuple[int, np.ndarray]:
    """Nullity and null-space basis of M -> (p M - M p) over all sampled
    projections, as a real-linear map on endomorphism space."""
    w = field.width
    size = dim * dim * w
    basis = []
    for i in range(dim):
        for j in range(dim):
            for c in range(w):
                e = np.zeros((dim, dim, 4))
                e[i, j, c] = 1.0
                basis.append(Morphism(field, Obj(dim), Obj(dim), e))
    blocks = []
    for p in projections:
        cols = [
            ((p @ m).entries - (m @ p).entries)[..., :w].ravel() for m in basis
        ]
        blocks.append(np.array(cols).T)
    big = np.concatenate(blocks, axis=0)
    _, s, vh = np.linalg.svd(big, full_matrices=False)
    smax = s[0] if s.size else 0.0
    rank = int(np.count_nonzero(s > SVD_RANK_EPS * max(smax, 1.0)))
    null_basis = vh[rank:].conj().T
    return size - rank, null_basis


def refute_h5_scalar_case(
    field: Field,
    dim: int,
    rng: np.random.Generator | None = None,
    tol: TolerancePolicy = DEFAULT_TOL,
) -> Report:
    """Infeasibility of a strict square root of -id over R or H.

    -id commutes with every projection, so a strict root must commute
    with all of them too; a rank computation on sampled rank-1
    projections shows that commutant is exactly the real multiples of
    the identity, and no real scalar squares to -1.
    """
    if field is Field.COMPLEX:
        raise UnsupportedFieldError("over C the root i*id exists; nothing to refute")
    if dim < 2:
        raise DomainError("the scalar-forcing argument needs dimension >= 2")
    rng = np.random.default_rng(0) if rng is None else rng
    x = Obj(dim)
    projections = [
        compose(basis_column(field, x, k), basis_column(field, x, k).dagger())
        for k in range(dim)
    ]
    projections += [random_rank1_projection(field, x, rng) for _ in range(dim + 3)]
    nullity, null_basis = _commutant_of_projections(field, dim, projections)
    if nullity != 1:
        return Report(
            "H5",
            field.value,
            FAIL,
            float(nullity),
            details={"reason": "commutant is larger than the central scalars"},
        )
    # The 1-dimensional commutant: confirm it is spanned by the identity.
    w = field.width
    vec = null_basis[:, 0]
    mat = vec.reshape(dim, dim, w)
    ident = np.zeros((dim, dim, w))
    ident[..., 0] = np.eye(dim)
    scale = mat.ravel() @ ident.ravel() / dim
    residual = float(np.linalg.norm(mat - scale * ident))
    witness_entries = np.zeros((dim, dim, 4))
    witness_entries[..., :w] = mat / np.linalg.norm(mat)
    witness = Morphism(field, x, x, witness_entries)
    # alpha real with alpha^2 = -1 is impossible: real squares are >= 0.
    return Report(
        "H5",
        field.value,
        INFEASIBLE,
        residual,
        witness=witness,
        details={
            "commutant_nullity": 1,
            "sampled_projections": len(projections),
            "obstruction": "any strict root of -id must be alpha*id with alpha real, but real squares are nonnegative",
        },
    )


# ---------------------------------------------------------------------------
# (H2)  finite directed colimits of isometries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DirectedDiagram:
    """Finite directed poset of objects with isometry arrows.

    `leq` holds the strict comparable pairs (a, b) with a < b; arrows
    must be present for exactly those pairs.
    """

    field: Field
    nodes: tuple[Hashable, ...]
    leq: frozenset
    objects: Mapping[Hashable, Obj]
    arrows: Mapping[tuple[Hashable, Hashable], Morphism]

    def is_leq(self, a: Hashable, b: Hashable) -> bool:
        return a == b or (a, b) in self.leq

    def upper_bound(self, a: Hashable, b: Hashable) -> Hashable:
        for c in self.nodes:
            if self.is_leq(a, c) and self.is_leq(b, c):
                return c
        raise DomainError(f"poset is not directed: {a!r}, {b!r} have no upper bound")

    def greatest(self) -> Hashable:
        """Greatest element, located by folding upper bounds."""
        top = self.nodes[0]
        for n in self.nodes[1:]:
            top = self.upper_bound(top, n)
        for n in self.nodes:
            if not self.is_leq(n, top):
                raise DomainError("poset has no greatest element")
        return top

    def arrow(self, a: Hashable, b: Hashable) -> Morphism:
        if a == b:
            return Morphism.identity(self.field, self.objects[a])
        return self.arrows[(a, b)]

    def validate(self, tol: TolerancePolicy = DEFAULT_TOL) -> float:
        """Isometry and functoriality residual; raises on structural
        problems (missing arrows, non-directedness)."""
        worst = 0.0
        for a, b in self.leq:
            k = self.arrows.get((a, b))
            if k is None:
                raise DomainError(f"missing arrow for {a!r} <= {b!r}")
            if k.dom != self.objects[a] or k.cod != self.objects[b]:
                raise ShapeMismatchError("arrow endpoints disagree with objects")
            ident = Morphism.identity(self.field, k.dom)
            worst = max(worst, frobenius_distance(k.dagger() @ k, ident))
        for a, b in self.leq:
            for c in self.nodes:
                if (b, c) in self.leq and (a, c) in self.leq:
                    worst = max(
                        worst,
                        frobenius_distance(
                            self.arrow(b, c) @ self.arrow(a, b), self.arrow(a, c)
                        ),
                    )
        for a, b in itertools.combinations(self.nodes, 2):
            self.upper_bound(a, b)
        return worst


@dataclass(frozen=True)
class ColimitCocone:
    field: Field
    apex: Obj
    legs: Mapping[Hashable, Morphism]
    top: Hashable

    def commutation_residual(self, diagram: DirectedDiagram) -> float:
        worst = 0.0
        for a, b in diagram.leq:
            worst = max(
                worst,
                frobenius_distance(self.legs[b] @ diagram.arrow(a, b), self.legs[a]),
            )
        return worst


def finite_directed_colimit(
    d: DirectedDiagram, tol: TolerancePolicy = DEFAULT_TOL
) -> ColimitCocone:
    """Colimit of a finite directed diagram of isometries: the object at
    the greatest node, with the composite arrows as legs."""
    d.validate(tol)
    top = d.greatest()
    legs = {n: d.arrow(n, top) for n in d.nodes}
    return ColimitCocone(d.field, d.objects[top], legs, top)


def mediating_dagger_mono(
    colimit: ColimitCocone,
    competing_legs: Mapping[Hashable, Morphism],
    tol: TolerancePolicy = DEFAULT_TOL,
) -> Morphism:
    """The unique isometry u with u . leg_i = competing_leg_i for all i.

    The colimit leg at the top node is the identity, which pins u to the
    competing leg there; the remaining equations are verified.
    """
    u = competing_legs[colimit.top]
    if not is_dagger_mono(u, tol):
        raise DomainError("competing cocone leg at the top is not an isometry")
    for n, leg in colimit.legs.items():
        if not approx_eq(u @ leg, competing_legs[n], tol):
            raise DomainError(f"mediating candidate fails at node {n!r}")
    return u


def jointly_epic_check(
    cocone: ColimitCocone,
    trials: int = 20,
    rng: np.random.Generator | None = None,
    tol: TolerancePolicy = DEFAULT_TOL,
) -> bool:
    """Legs are jointly epic iff their columns span the apex.

    Checked two ways: the real span rank of the leg columns (counting
    each column together with its imaginary-unit right-multiples), and
    random morphism pairs built to agree on every leg, which must then
    agree outright.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    field = cocone.field
    apex = cocone.apex
    w = field.width
    columns = [
        leg.col(j) for leg in cocone.legs.values() for j in range(leg.dom.dim)
    ]
    if not columns:
        return apex.dim == 0

    units = [Scalar(field, 1.0)]
    if w >= 2:
        units.append(Scalar(field, 0.0, 1.0))
    if w == 4:
        units += [Scalar(field, 0, 0, 1.0), Scalar(field, 0, 0, 0, 1.0)]
    real_vectors = []
    for c in columns:
        for q in units:
            real_vectors.append((c @ Morphism.single(q)).entries[..., :w].ravel())
    rank = int(np.linalg.matrix_rank(np.array(real_vectors).T, tol=SVD_RANK_EPS))
    spans = rank == apex.dim * w

    ortho = orthonormal_columns(columns, tol=tol)
    span_mono = (
        copairing(ortho) if ortho else Morphism.zero(field, Obj(0), apex)
    )
    comp = complement_h3(span_mono, tol)
    p_perp = comp @ comp.dagger()
    agree = True
    y = Obj(apex.dim)
    for _ in range(trials):
        f = random_morphism(field, apex, y, rng)
        d = random_morphism(field, apex, y, rng) @ p_perp
        g = derived_add(f, d)
        # g agrees with f on every leg by construction
        if not approx_eq(f, g, tol):
            agree = False
    if spans != agree:
        raise AssertionError("span rank and random-pair probe disagree")
    return spans


def _selection_arrow(field: Field, small: frozenset, large: frozenset) -> Morphism:
    """Block injection of the sub-biproduct indexed by `small` into the
    biproduct indexed by `large`: the copairing of the canonical
    injections at the positions of small's labels."""
    order = sorted(large)
    injections = nfold_biproduct(UNIT, len(large), field)
    return copairing([injections[order.index(k)] for k in sorted(small)])


def subset_diagram(labels: Sequence[Hashable], field: Field) -> DirectedDiagram:
    """The directed diagram of all nonempty finite subsets of `labels`
    under inclusion, with block-injection arrows; its colimit legs at
    singletons form an orthonormal family in the apex."""
    labels = sorted(labels)
    if not labels:
        raise DomainError("subset diagram needs a nonempty label set")
    nodes = []
    for r in range(1, len(labels) + 1):
        nodes += [frozenset(c) for c in itertools.combinations(labels, r)]
    objects = {n: Obj(len(n)) for n in nodes}
    leq = frozenset(
        (a, b) for a in nodes for b in nodes if a != b and a.issubset(b)
    )
    arrows = {(a, b): _selection_arrow(field, a, b) for a, b in leq}
    return DirectedDiagram(field, tuple(nodes), leq, objects, arrows)


def random_directed_diagram(
    field: Field,
    rng: np.random.Generator,
    max_nodes: int = 6,
    max_base: int = 6,
) -> DirectedDiagram:
    """Random finite directed diagram: a union-closed family of subsets
    (hence directed, with the full union on top), realised by selection
    injections and disguised by a random unitary change of basis at
    every node."""
    from .sampling import random_unitary

    while True:
        base = int(rng.integers(1, max_base + 1))
        seeds = []
        for _ in range(int(rng.integers(1, 4))):
            mask = rng.random(base) < 0.6
            if mask.any():
                seeds.append(frozenset(np.flatnonzero(mask).tolist()))
        if not seeds:
            continue
        family = set(seeds)
        grew = True
        while grew:
            grew = False
            for a, b in itertools.combinations(list(family), 2):
                u = a | b
                if u not in family:
                    family.add(u)
                    grew = True
        if len(family) <= max_nodes:
            break
    nodes = tuple(sorted(family, key=lambda s: (len(s), sorted(s))))
    objects = {n: Obj(len(n)) for n in nodes}
    rotations = {n: random_unitary(field, objects[n], rng) for n in nodes}
    leq = frozenset(
        (a, b) for a in nodes for b in nodes if a != b and a.issubset(b)
    )
    arrows = {
        (a, b): rotations[b] @ _selection_arrow(field, a, b) @ rotations[a].dagger()
        for (a, b) in leq
    }
    return DirectedDiagram(field, nodes, leq, objects, arrows)
