import random

import pytest

from k3lattice.embeddings import (
    EmbeddedSublattice,
    IsometryMap,
    discriminant_action,
    extend_by_identity,
    induced_gram,
    is_primitive,
    orthogonal_complement,
    primitive_closure,
    sublattice_from_json,
    sublattice_to_json,
)
from k3lattice.lattices import GramLattice, direct_sum, standard_lattice


def _e(n, i, value=1):
    v = [0] * n
    v[i] = value
    return v


def test_induced_gram_families():
    k3 = standard_lattice("K3")
    sub = EmbeddedSublattice(k3, [_e(22, 0), _e(22, 1)])
    assert induced_gram(sub).gram == ((0, 1), (1, 0))

    cols = [_e(22, 0), _e(22, 6), _e(22, 14)]
    cols[0][1] = 3
    assert induced_gram(EmbeddedSublattice(k3, cols)).gram == (
        (6, 0, 0),
        (0, -2, 0),
        (0, 0, -2),
    )


def test_embedded_sublattice_validation():
    u = standard_lattice("U")
    with pytest.raises(ValueError):
        EmbeddedSublattice(u, [[1, 0, 0]])  # wrong length
    with pytest.raises(ValueError):
        EmbeddedSublattice(u, [])  # no columns
    with pytest.raises(ValueError):
        EmbeddedSublattice(u, [[1, 0], [2, 0]])  # dependent columns


def test_is_primitive_and_closure():
    u = standard_lattice("U")
    prim = EmbeddedSublattice(u, [[1, 0]])
    assert is_primitive(prim)
    doubled = EmbeddedSublattice(u, [[2, 0]])
    assert not is_primitive(doubled)
    closed = primitive_closure(doubled)
    assert is_primitive(closed)
    assert [list(c) for c in closed.columns] == [[1, 0]]

    k3 = standard_lattice("K3")
    v = _e(22, 0, 2)
    v[1] = 2
    sub = EmbeddedSublattice(k3, [v])
    closed = primitive_closure(sub)
    assert induced_gram(closed).gram == ((2,),)  # (e+f)/1 has square 2 after saturation


def test_primitive_closure_keeps_rational_span():
    rng = random.Random(41)
    amb = direct_sum(standard_lattice("U"), standard_lattice("A1_neg"))
    for _ in range(40):
        cols = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(2)]
        try:
            sub = EmbeddedSublattice(amb, cols)
        except ValueError:
            continue
        closed = primitive_closure(sub)
        assert is_primitive(closed)
        assert closed.rank == sub.rank
        # every original column is an integer combination of the closure
        from k3lattice import matrices

        b = closed.basis_matrix()
        for col in sub.columns:
            sol = matrices.rational_solve(
                [[sum(b[i][k] * b[i][j] for i in range(3)) for j in range(closed.rank)] for k in range(closed.rank)],
                [sum(b[i][k] * col[i] for i in range(3)) for k in range(closed.rank)],
            )
            assert all(x.denominator == 1 for x in sol)


def test_orthogonal_complement():
    amb = direct_sum(standard_lattice("U"), standard_lattice("A1_neg"))
    sub = EmbeddedSublattice(amb, [[0, 0, 1]])
    comp = orthogonal_complement(sub)
    assert induced_gram(comp).gram == ((0, 1), (1, 0))

    u = standard_lattice("U")
    iso = EmbeddedSublattice(u, [[1, 0]])
    comp = orthogonal_complement(iso)
    assert comp.rank == 1
    assert induced_gram(comp).gram == ((0,),)


def test_isometry_validation_and_apply():
    u = standard_lattice("U")
    swap = IsometryMap(u, [[0, 1], [1, 0]])
    assert swap.apply((1, 2)) == [2, 1]
    minus = IsometryMap(u, [[-1, 0], [0, -1]])
    assert minus.apply((1, 2)) == [-1, -2]
    with pytest.raises(ValueError):
        IsometryMap(u, [[1, 1], [0, 1]])  # does not preserve the pairing


def test_discriminant_action_trivial_cases():
    a1 = standard_lattice("A1_neg")
    act = discriminant_action(IsometryMap(a1, [[-1]]), a1)
    assert act.trivial  # -x = x on Z/2

    u8 = direct_sum(standard_lattice("U"), GramLattice(1, ((-8,),)))
    neg = IsometryMap(u8, [[-1, 0, 0], [0, -1, 0], [0, 0, -1]])
    act = discriminant_action(neg, u8)
    assert not act.trivial  # -1 is nontrivial on Z/8


def test_extend_by_identity_across_k3():
    k3 = standard_lattice("K3")
    u = standard_lattice("U")
    sub = EmbeddedSublattice(k3, [_e(22, 0), _e(22, 1)])
    g = IsometryMap(u, [[0, 1], [1, 0]])
    ext = extend_by_identity(g, sub)
    rows = ext.matrix_rows()
    # swaps the first two coordinates, fixes the remaining twenty
    assert ext.apply(_e(22, 0)) == _e(22, 1)
    assert ext.apply(_e(22, 1)) == _e(22, 0)
    for i in range(2, 22):
        assert ext.apply(_e(22, i)) == _e(22, i)
    from k3lattice import matrices

    gm = [list(r) for r in k3.gram]
    assert matrices.mat_mul(matrices.mat_mul(matrices.transpose(rows), gm), rows) == gm


def test_extend_blocked_by_discriminant_action():
    amb = direct_sum(standard_lattice("U"), GramLattice(1, ((-8,),)))
    sub = EmbeddedSublattice(amb, [[0, 0, 1]])
    g = IsometryMap(GramLattice(1, ((-8,),)), [[-1]])
    with pytest.raises(ValueError):
        extend_by_identity(g, sub)  # -1 moves the Z/8 generator coset


def test_sublattice_json_roundtrip():
    k3 = standard_lattice("K3")
    sub = EmbeddedSublattice(k3, [_e(22, 0), _e(22, 1)])
    obj = sublattice_to_json(sub)
    again = sublattice_from_json(obj)
    assert again.columns == sub.columns
    assert again.ambient.gram == k3.gram
    with pytest.raises(ValueError):
        sublattice_from_json({"ambient": {"name": "U"}})
