"""Sublattices of an ambient lattice and isometry extension across them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import matrices
from .lattices import DiscriminantGroup, GramLattice, discriminant_group, lattice_from_json, lattice_to_json
from .matrices import smith_normal_form

__all__ = [
    "EmbeddedSublattice",
    "IsometryMap",
    "induced_gram",
    "is_primitive",
    "primitive_closure",
    "orthogonal_complement",
    "DiscriminantAction",
    "discriminant_action",
    "extend_by_identity",
    "sublattice_from_json",
    "sublattice_to_json",
]


@dataclass(frozen=True)
class EmbeddedSublattice:
    """A sublattice given by basis columns in ambient coordinates."""

    ambient: GramLattice
    columns: tuple[tuple[int, ...], ...]

    def __init__(self, ambient: GramLattice, columns) -> None:
        cols = tuple(tuple(int(x) for x in c) for c in columns)
        if not cols:
            raise ValueError("a sublattice needs at least one basis vector")
        if any(len(c) != ambient.rank for c in cols):
            raise ValueError("basis vector length does not match the ambient rank")
        snf = smith_normal_form(self.columns_matrix_static(cols))
        if len(snf.invariant_factors()) != len(cols):
            raise ValueError("basis columns are linearly dependent")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "columns", cols)

    @staticmethod
    def columns_matrix_static(cols) -> list[list[int]]:
        n = len(cols[0]) if cols else 0
        return [[c[i] for c in cols] for i in range(n)]

    def basis_matrix(self) -> list[list[int]]:
        """ambient.rank x k matrix whose columns are the basis vectors."""
        return [[c[i] for c in self.columns] for i in range(self.ambient.rank)]

    @property
    def rank(self) -> int:
        return len(self.columns)


@dataclass(frozen=True)
class IsometryMap:
    """A pairing-preserving automorphism of a lattice, as a matrix on columns."""

    domain: GramLattice
    matrix: tuple[tuple[int, ...], ...]

    def __init__(self, domain: GramLattice, matrix) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in matrix)
        if len(rows) != domain.rank or any(len(r) != domain.rank for r in rows):
            raise ValueError("isometry matrix shape does not match the lattice rank")
        m = [list(r) for r in rows]
        g = domain.gram_rows()
        if matrices.mat_mul(matrices.mat_mul(matrices.transpose(m), g), m) != g:
            raise ValueError("matrix does not preserve the pairing")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "matrix", rows)

    def matrix_rows(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]

    def apply(self, v) -> list[int]:
        return matrices.mat_vec(self.matrix_rows(), list(v))


def induced_gram(sub: EmbeddedSublattice) -> GramLattice:
    """The pairing restricted to the sublattice basis: B^T G B."""
    b = sub.basis_matrix()
    g = sub.ambient.gram_rows()
    ind = matrices.mat_mul(matrices.mat_mul(matrices.transpose(b), g), b)
    return GramLattice(sub.rank, ind)


def is_primitive(sub: EmbeddedSublattice) -> bool:
    """True iff the sublattice equals its rational saturation."""
    snf = smith_normal_form(sub.basis_matrix())
    return all(f == 1 for f in snf.invariant_factors())


def primitive_closure(sub: EmbeddedSublattice) -> EmbeddedSublattice:
    """The saturation (span tensor Q) intersected with the ambient lattice."""
    snf = smith_normal_form(sub.basis_matrix())
    u_inv = matrices.unimodular_inverse(snf.u)
    cols = [tuple(u_inv[i][j] for i in range(sub.ambient.rank)) for j in range(sub.rank)]
    return EmbeddedSublattice(sub.ambient, cols)


def orthogonal_complement(sub: EmbeddedSublattice) -> EmbeddedSublattice:
    """All ambient vectors pairing to zero with the sublattice; always primitive."""
    ambient = sub.ambient
    if matrices.det(ambient.gram_rows()) == 0:
        raise ValueError("orthogonal complement requires a nondegenerate ambient lattice")
    if sub.rank == 0:
        eye = matrices.identity(ambient.rank)
        return EmbeddedSublattice(ambient, [tuple(row[j] for row in eye) for j in range(ambient.rank)])
    b = sub.basis_matrix()
    pair = matrices.mat_mul(matrices.transpose(b), ambient.gram_rows())
    snf = smith_normal_form(pair)
    r = len(snf.invariant_factors())
    n = ambient.rank
    cols = [tuple(snf.v[i][j] for i in range(n)) for j in range(r, n)]
    return EmbeddedSublattice(ambient, cols)


@dataclass(frozen=True)
class DiscriminantAction:
    """Action of an isometry on the generators of L*/L."""

    group: DiscriminantGroup
    images: tuple[tuple[Fraction, ...], ...]
    moved: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return not self.moved


def discriminant_action(g: IsometryMap, lattice: GramLattice) -> DiscriminantAction:
    """How g permutes the discriminant-group generator cosets.

    A generator coset [v] is fixed exactly when g v - v is integral.
    """
    if g.domain.gram != lattice.gram:
        raise ValueError("isometry domain does not match the lattice")
    group = discriminant_group(lattice)
    m = g.matrix_rows()
    images = []
    moved = []
    for idx, lift in enumerate(group.generator_lifts):
        img = [sum(Fraction(m[i][k]) * lift[k] for k in range(lattice.rank)) for i in range(lattice.rank)]
        images.append(tuple(x % 1 for x in img))
        if any((x - y).denominator != 1 for x, y in zip(img, lift)):
            moved.append(idx)
    return DiscriminantAction(group, tuple(images), tuple(moved))


def extend_by_identity(g: IsometryMap, sub: EmbeddedSublattice) -> IsometryMap:
    """Extend an isometry of a primitive sublattice to the ambient lattice,
    acting as the identity on the orthogonal complement.

    Requires the induced action on the sublattice discriminant group to be
    trivial; the construction solves over Q on sublattice + complement and
    then checks integrality and the pairing on a full ambient basis.
    """
    ind = induced_gram(sub)
    if g.domain.gram != ind.gram:
        raise ValueError("isometry domain does not match the induced pairing")
    if not is_primitive(sub):
        raise ValueError("sublattice is not primitive")
    action = discriminant_action(g, ind)
    if not action.trivial:
        raise ValueError(
            "extension blocked: generator cosets moved by the isometry: "
            + ", ".join(str(i) for i in action.moved)
        )
    comp = orthogonal_complement(sub)
    n = sub.ambient.rank
    if sub.rank + comp.rank != n:
        raise ValueError("sublattice is degenerate inside the ambient lattice")
    b = sub.basis_matrix()
    c = comp.basis_matrix()
    bg = matrices.mat_mul(b, g.matrix_rows())
    full = [[b[i][j] for j in range(sub.rank)] + [c[i][j] for j in range(comp.rank)] for i in range(n)]
    mapped = [[bg[i][j] for j in range(sub.rank)] + [c[i][j] for j in range(comp.rank)] for i in range(n)]
    inv = matrices.rational_inverse(full)
    ext = matrices.mat_mul(mapped, inv)
    out = []
    for row in ext:
        ints = []
        for x in row:
            fx = Fraction(x)
            if fx.denominator != 1:
                raise ValueError("extension is not integral on the ambient lattice")
            ints.append(int(fx))
        out.append(ints)
    result = IsometryMap(sub.ambient, out)
    if matrices.mat_mul(result.matrix_rows(), b) != bg:
        raise ValueError("extension does not restrict to the given isometry")
    if matrices.mat_mul(result.matrix_rows(), c) != c:
        raise ValueError("extension moves the orthogonal complement")
    return result


def sublattice_from_json(obj) -> EmbeddedSublattice:
    """Accepts {"ambient": <lattice>, "basis": [[...], ...]} with basis columns
    in ambient coordinates."""
    if not isinstance(obj, dict) or "ambient" not in obj or "basis" not in obj:
        raise ValueError('sublattice JSON needs "ambient" and "basis"')
    ambient = lattice_from_json(obj["ambient"])
    return EmbeddedSublattice(ambient, obj["basis"])


def sublattice_to_json(sub: EmbeddedSublattice) -> dict:
    return {
        "ambient": lattice_to_json(sub.ambient),
        "basis": [list(c) for c in sub.columns],
    }
