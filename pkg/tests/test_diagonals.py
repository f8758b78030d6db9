from permcomplex.chains import FormalChain, tensor
from permcomplex.cubes import all_cells, cube_boundary
from permcomplex.diagonals import (
    cai_diagonal,
    chain_map_defect,
    counit_defect,
    cup_su,
    su_diagonal,
    su_top_diagonal,
)
from permcomplex.permutohedron import (
    all_faces,
    boundary,
    build_perm_complex,
    face,
    full_permutohedron,
    top_face,
)
from permcomplex.simplicial import polygon_boundary


def F(*blocks):
    m = sum(len(b) for b in blocks)
    return face(m, *blocks)


def test_su_edge_expansion():
    d = su_diagonal(face(2, [1, 2]))
    assert dict(d) == {
        (F([1, 2]), F([2], [1])): 1,
        (F([1], [2]), F([1, 2])): 1,
    }


def test_su_hexagon_expansion():
    d = su_diagonal(face(3, [1, 2, 3]))
    assert dict(d) == {
        (F([1], [2], [3]), F([1, 2, 3])): 1,
        (F([1, 2, 3]), F([3], [2], [1])): 1,
        (F([1], [2, 3]), F([1, 3], [2])): -1,
        (F([2], [1, 3]), F([2, 3], [1])): 1,
        (F([1, 3], [2]), F([3], [1, 2])): -1,
        (F([1, 2], [3]), F([2], [1, 3])): 1,
        (F([1], [2, 3]), F([3], [1, 2])): -1,
        (F([1, 2], [3]), F([2, 3], [1])): 1,
    }


def test_su_term_counts():
    assert len(su_top_diagonal(2)) == 2
    assert len(su_top_diagonal(3)) == 8
    assert len(su_top_diagonal(4)) == 50
    assert len(su_top_diagonal(5)) == 432


def test_su_respects_total_dimension():
    for left_right, _ in su_top_diagonal(4):
        left, right = left_right
        assert left.dim + right.dim == 3


def test_su_diagonal_on_lower_face_relabels():
    # comultiplicative extension: blocks act as independent permutohedra
    d = su_diagonal(face(3, [1, 3], [2]))
    assert dict(d) == {
        (F([1, 3], [2]), F([3], [1], [2])): 1,
        (F([1], [3], [2]), F([1, 3], [2])): 1,
    }


def test_su_chain_map_small():
    for m in (2, 3, 4):
        for G in all_faces(m):
            assert not chain_map_defect(G, su_diagonal, boundary)


def test_su_counit():
    for m in (2, 3, 4):
        assert not counit_defect(top_face(m), su_diagonal)


def test_cai_vertex_and_interval():
    from permcomplex.cubes import cell
    v = cell(1, [], [1])
    assert dict(cai_diagonal(v)) == {(v, v): 1}
    u = cell(1, [1], [])
    lo = cell(1, [], [])
    hi = cell(1, [], [1])
    assert dict(cai_diagonal(u)) == {(u, hi): 1, (lo, u): 1}


def test_cai_chain_map():
    for m in (1, 2, 3):
        for c in all_cells(m):
            assert not chain_map_defect(c, cai_diagonal, cube_boundary)


def test_cup_su_square_on_hexagon_vanishes():
    # Perm(boundary of a triangle) is a hexagon: H^2 = 0, so any product
    # of degree-1 cochains is a coboundary; on the top degree it must
    # evaluate consistently with no 2-cells present
    K = polygon_boundary([1, 2, 3])
    X = build_perm_complex(K)
    a = FormalChain({f: 1 for f in X.faces(1)})
    assert not cup_su(a, a, X, 1, 1)


def test_tensor_sign():
    a = FormalChain.basis("x")
    b = FormalChain.basis("y", -2)
    t = tensor(a, b)
    assert t[("x", "y")] == -2
