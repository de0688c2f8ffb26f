"""The concrete dagger category: objects are finite dimensions, morphisms
are matrices over R, C or H, and the dagger is the conjugate transpose.

Matrices act on column vectors.  Entries are stored as raw quaternion
components in a (cod, dom, 4) float64 array for every field; the unused
trailing components of real/complex entries are kept exactly zero, so a
single representation serves all three fields.  Scalars act on columns
from the right (a 1x1 morphism composed after the column), which keeps
the quaternionic module structure free of left/right ambiguity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import FieldMismatchError, ShapeMismatchError
from .kernels import quat_matmul
from .scalars import DEFAULT_TOL, Field, Scalar, TolerancePolicy


@dataclass(frozen=True)
class Obj:
    """Object of the category: a dimension.  dim 0 is the zero object,
    dim 1 the dagger simple unit."""

    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("object dimension must be a natural number")


ZERO_OBJ = Obj(0)
UNIT = Obj(1)


class Morphism:
    """A matrix with explicit domain and codomain over a fixed field."""

    __slots__ = ("field", "dom", "cod", "entries")

    def __init__(self, field: Field, dom: Obj, cod: Obj, entries: np.ndarray):
        entries = np.ascontiguousarray(entries, dtype=np.float64)
        if entries.shape != (cod.dim, dom.dim, 4):
            raise ShapeMismatchError(
                f"entries shape {entries.shape} != {(cod.dim, dom.dim, 4)}"
            )
        if entries[..., field.width:].any():
            raise FieldMismatchError(
                f"nonzero components beyond the width of field {field.value}"
            )
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Morphism is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field: Field, dom: Obj, cod: Obj) -> "Morphism":
        return cls(field, dom, cod, np.zeros((cod.dim, dom.dim, 4)))

    @classmethod
    def identity(cls, field: Field, obj: Obj) -> "Morphism":
        e = np.zeros((obj.dim, obj.dim, 4))
        e[..., 0] = np.eye(obj.dim)
        return cls(field, obj, obj, e)

    @classmethod
    def from_real(cls, field: Field, mat: np.ndarray | Sequence[Sequence[float]]) -> "Morphism":
        """Real matrix embedded in any of the three fields."""
        mat = np.atleast_2d(np.asarray(mat, dtype=np.float64))
        e = np.zeros(mat.shape + (4,))
        e[..., 0] = mat
        return cls(field, Obj(mat.shape[1]), Obj(mat.shape[0]), e)

    @classmethod
    def from_complex(cls, mat: np.ndarray | Sequence[Sequence[complex]]) -> "Morphism":
        mat = np.atleast_2d(np.asarray(mat, dtype=np.complex128))
        e = np.zeros(mat.shape + (4,))
        e[..., 0] = mat.real
        e[..., 1] = mat.imag
        return cls(Field.COMPLEX, Obj(mat.shape[1]), Obj(mat.shape[0]), e)

    @classmethod
    def from_scalars(cls, field: Field, rows: Sequence[Sequence[Scalar]]) -> "Morphism":
        cod = len(rows)
        dom = len(rows[0]) if rows else 0
        e = np.zeros((cod, dom, 4))
        for i, row in enumerate(rows):
            if len(row) != dom:
                raise ShapeMismatchError("ragged rows")
            for j, s in enumerate(row):
                if s.field is not field:
                    raise FieldMismatchError("entry field differs from matrix field")
                e[i, j] = s.components()
        return cls(field, Obj(dom), Obj(cod), e)

    @classmethod
    def single(cls, s: Scalar) -> "Morphism":
        """1x1 morphism carrying one scalar."""
        return cls.from_scalars(s.field, [[s]])

    @classmethod
    def column(cls, field: Field, scalars: Iterable[Scalar]) -> "Morphism":
        return cls.from_scalars(field, [[s] for s in scalars])

    # -- views ----------------------------------------------------------

    def complex_view(self) -> np.ndarray:
        """(cod, dom) complex matrix; valid for R and C entries."""
        if self.field is Field.QUATERNION:
            raise FieldMismatchError("quaternion matrix has no complex view")
        return self.entries[..., 0] + 1j * self.entries[..., 1]

    def scalar(self) -> Scalar:
        """The single entry of a 1x1 morphism."""
        if self.entries.shape[:2] != (1, 1):
            raise ShapeMismatchError("not a 1x1 morphism")
        return Scalar(self.field, *self.entries[0, 0])

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, *self.entries[i, j])

    def col(self, j: int) -> "Morphism":
        """j-th column as a morphism from the unit object."""
        return Morphism(self.field, UNIT, self.cod, self.entries[:, j: j + 1, :])

    # -- algebra ----------------------------------------------------------

    def dagger(self) -> "Morphism":
        e = np.swapaxes(self.entries, 0, 1).copy()
        e[..., 1:] = -e[..., 1:]
        return Morphism(self.field, self.cod, self.dom, e)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.entries * self.entries)))

    def __repr__(self) -> str:
        return (
            f"Morphism({self.field.value}, {self.dom.dim}->{self.cod.dim})"
        )

    # -- JSON -------------------------------------------------------------

    def to_json(self) -> dict:
        w = self.field.width
        return {
            "field": self.field.value,
            "dom": self.dom.dim,
            "cod": self.cod.dim,
            "entries": [
                [[float(c) for c in self.entries[i, j, :w]] for j in range(self.dom.dim)]
                for i in range(self.cod.dim)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Morphism":
        field = Field.from_name(data["field"])
        dom, cod = Obj(int(data["dom"])), Obj(int(data["cod"]))
        e = np.zeros((cod.dim, dom.dim, 4))
        rows = data["entries"]
        if len(rows) != cod.dim:
            raise ShapeMismatchError("row count != cod")
        for i, row in enumerate(rows):
            if len(row) != dom.dim:
                raise ShapeMismatchError("column count != dom")
            for j, comps in enumerate(row):
                e[i, j] = Scalar.from_json(field, comps).components()
        return cls(field, dom, cod, e)


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f.  Real/complex products go through BLAS; quaternion
    products go through the selected kernel."""
    if g.field is not f.field:
        raise FieldMismatchError(f"{g.field.value} vs {f.field.value}")
    if f.cod != g.dom:
        raise ShapeMismatchError(
            f"cannot compose {g.dom.dim}->{g.cod.dim} after {f.dom.dim}->{f.cod.dim}"
        )
    if g.field is Field.REAL:
        e = np.zeros((g.cod.dim, f.dom.dim, 4))
        e[..., 0] = g.entries[..., 0] @ f.entries[..., 0]
    elif g.field is Field.COMPLEX:
        prod = g.complex_view() @ f.complex_view()
        e = np.zeros(prod.shape + (4,))
        e[..., 0] = prod.real
        e[..., 1] = prod.imag
    else:
        e = quat_matmul(g.entries, f.entries)
    return Morphism(g.field, f.dom, g.cod, e)


def frobenius_distance(f: Morphism, g: Morphism) -> float:
    """Metric backing all approximate morphism equality."""
    if f.field is not g.field:
        raise FieldMismatchError(f"{f.field.value} vs {g.field.value}")
    if f.dom != g.dom or f.cod != g.cod:
        raise ShapeMismatchError("morphisms of different shape")
    d = f.entries - g.entries
    return float(np.sqrt(np.sum(d * d)))


def approx_eq(f: Morphism, g: Morphism, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    return frobenius_distance(f, g) <= tol.bound(f.norm(), g.norm())


def is_dagger_mono(f: Morphism, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """Isometry test: f-dagger after f is the identity of the domain."""
    ident = Morphism.identity(f.field, f.dom)
    return approx_eq(f.dagger() @ f, ident, tol)


def is_dagger_iso(f: Morphism, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """Unitarity test: isometry in both directions."""
    if not is_dagger_mono(f, tol):
        return False
    ident = Morphism.identity(f.field, f.cod)
    return approx_eq(f @ f.dagger(), ident, tol)


def is_projection(p: Morphism, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """Selfadjoint idempotent endomorphism test."""
    if p.dom != p.cod:
        raise ShapeMismatchError("projection candidate must be an endomorphism")
    return approx_eq(p, p.dagger(), tol) and approx_eq(p, p @ p, tol)


def basis_column(field: Field, X: Obj, k: int) -> Morphism:
    """k-th canonical basis column as a morphism from the unit object."""
    e = np.zeros((X.dim, 1, 4))
    e[k, 0, 0] = 1.0
    return Morphism(field, UNIT, X, e)


def is_dagger_simple(
    field: Field,
    X: Obj,
    trials: int = 8,
    rng: np.random.Generator | None = None,
    tol: TolerancePolicy = DEFAULT_TOL,
) -> bool:
    """True iff every nonzero isometry into X is unitary; holds exactly
    for dimension 1.  The dimension verdict is cross-validated on random
    isometries with domain dimensions sweeping 1..X.dim."""
    if X.dim == 0:
        return False
    from .sampling import random_dagger_mono  # deferred: sampling imports this module

    rng = np.random.default_rng(0) if rng is None else rng
    all_unitary = True
    for t in range(trials):
        a = Obj(1 + t % X.dim)
        m = random_dagger_mono(field, a, X, rng)
        if m.norm() <= tol.abs_eps:
            continue
        if not (a.dim == X.dim and is_dagger_iso(m, tol)):
            all_unitary = False
    verdict = X.dim == 1
    if verdict != all_unitary:
        raise AssertionError(
            "sampled isometries contradict the dimension verdict"
        )
    return verdict
