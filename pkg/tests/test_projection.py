from permcomplex.chains import FormalChain
from permcomplex.cubes import cell, cube_boundary
from permcomplex.permutohedron import all_faces, boundary, face
from permcomplex.projection import (
    L_of_K,
    blocks_are_intervals,
    detect_snake,
    preserves_dimension,
    rho_chain,
    rho_face,
    rho_sign,
    verify_image,
    verify_su_cai,
)
from permcomplex.simplicial import (
    full_simplex,
    polygon_boundary,
    random_suite,
    skeleton,
)
from permcomplex.sumatrix import enumerate_configurations, matrix


def test_rho_face_vertices():
    # a vertex goes to the corner recording which coordinates sit above
    # their right neighbour in the natural interleaving
    c = rho_face(face(3, [1], [2], [3]))
    assert c.sigma == ()
    assert c.dim == 0


def test_rho_face_dimension_preserved_on_interval_blocks():
    F = face(4, [1, 2], [3, 4])
    assert blocks_are_intervals(F)
    assert preserves_dimension(F)
    assert rho_face(F).dim == F.dim


def test_rho_face_drops_dimension_on_non_intervals():
    F = face(3, [1, 3], [2])
    assert not preserves_dimension(F)
    assert rho_face(F).dim < F.dim


def test_rho_sign_is_one_on_vertices_and_top():
    for m in (2, 3, 4):
        for F in all_faces(m):
            if F.dim == 0 or len(F.blocks) == 1:
                assert rho_sign(F) == 1


def test_rho_sign_known_negative():
    # the only face of Perm^3 with a nontrivial orientation twist
    assert rho_sign(face(4, [3, 4], [1, 2])) == -1
    assert rho_sign(face(4, [1, 2], [3, 4])) == 1


def test_rho_chain_commutes_with_boundaries():
    for m in (2, 3, 4, 5):
        for F in all_faces(m):
            lhs = rho_chain(boundary(F))
            rhs = FormalChain()
            G = rho_face(F)
            if preserves_dimension(F):
                rhs = rho_sign(F) * cube_boundary(G)
            assert lhs == rhs, F


def test_verify_su_cai_small():
    for m in (2, 3, 4):
        report = verify_su_cai(m)
        assert report["passed"], report["mismatches"][:3]


def test_L_of_quadrilaterals_and_complete_graph():
    expected = {(), (1,), (2,), (3,), (1, 3)}
    assert set(L_of_K(skeleton(4, 1)).simplices) == expected
    assert set(L_of_K(polygon_boundary([1, 2, 3, 4])).simplices) == expected
    # the crossed quadrilateral leaves only an isolated middle vertex
    assert set(L_of_K(polygon_boundary([1, 3, 2, 4])).simplices) == {(), (2,)}


def test_L_of_full_simplex_is_full():
    L = L_of_K(full_simplex(4))
    assert (1, 2, 3) in L


def test_verify_image_fixtures():
    for K in (skeleton(4, 1), polygon_boundary([1, 2, 3, 4]),
              polygon_boundary([1, 3, 2, 4]), full_simplex(4), full_simplex(3)):
        report = verify_image(K)
        assert report["passed"], report


def test_verify_image_flags_known_example_note():
    report = verify_image(skeleton(4, 1))
    assert report["notes"]  # the documented vertex-image swap


def test_verify_image_random():
    for K in random_suite(seed=3, count=10, max_m=5):
        assert verify_image(K)["passed"]


def test_snake_dimension_preserved_configurations():
    # configuration matrices whose both projections preserve dimension
    # carry exactly one continuous snake; there are 2^(m-1) of them
    from permcomplex.sumatrix import columns_partition, rows_partition

    for m in (2, 3, 4, 5):
        count = 0
        for q in range(1, m + 1):
            p = m + 1 - q
            for rec in enumerate_configurations(q, p):
                A = rec.matrix
                if (preserves_dimension(columns_partition(A))
                        and preserves_dimension(rows_partition(A))):
                    count += 1
                    assert detect_snake(A) is not None, A
        assert count == 2 ** (m - 1)


def test_detect_snake_rejects_disconnected():
    # 1 at (2,1) and 2 at (1,2) share no row or column: not a snake
    assert detect_snake(matrix([[0, 2], [1, 0]])) is None
