import pytest

from grclib.fields import field_create
from grclib.matrices import Matrix, vec_mat_mul
from grclib.perms import Permutation

GF2 = field_create(2)
GF3 = field_create(3)

# the 4x11 generator from the worked [(11,4),4] construction
G_11_4 = [
    [1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1],
    [0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1],
]


def test_rank_of_printed_generator():
    assert Matrix.from_rows(GF2, G_11_4).rank() == 4


def test_identity_inverse():
    eye = Matrix.identity(GF3, 4)
    assert eye.inverse() == eye


def test_all_ones_rank():
    ones = Matrix.from_rows(GF2, [[1, 1, 1]] * 3)
    assert ones.rank() == 1


def test_inverse_roundtrip():
    m = Matrix.from_rows(GF3, [[1, 2, 0], [0, 1, 1], [2, 0, 1]])
    assert m.is_invertible()
    assert m @ m.inverse() == Matrix.identity(GF3, 3)
    assert m.inverse() @ m == Matrix.identity(GF3, 3)


def test_singular_inverse_raises():
    m = Matrix.from_rows(GF2, [[1, 1], [1, 1]])
    with pytest.raises(ValueError, match="singular"):
        m.inverse()


def test_matmul_shape_mismatch():
    a = Matrix.from_rows(GF2, [[1, 0]])
    with pytest.raises(ValueError, match="mismatch"):
        a @ a


def test_rref_and_nullspace():
    m = Matrix.from_rows(GF3, [[1, 2, 1], [2, 4, 2]])
    red, pivots = m.rref()
    assert pivots == (0,)
    for v in m.nullspace():
        prod = [sum(m[i, j] * v[j] for j in range(3)) % 3 for i in range(2)]
        assert prod == [0, 0]
    assert len(m.nullspace()) == 2


def test_hjoin():
    a = Matrix.from_rows(GF2, [[1, 0], [0, 1]])
    b = Matrix.from_rows(GF2, [[1, 1], [0, 0]])
    j = Matrix.hjoin([a, b])
    assert j.rows() == [(1, 0, 1, 1), (0, 1, 0, 0)]


def test_matrix_power():
    m = Matrix.from_rows(GF3, [[0, 1], [2, 0]])
    assert m ** 2 == m @ m
    assert m ** 0 == Matrix.identity(GF3, 2)
    assert m ** -1 == m.inverse()


# ---------------------------------------------------------------------------
# permutations


def test_cycle_structure_example():
    # (1,3)(2)(4,5)
    sigma = Permutation.from_cycles(5, [(1, 3), (4, 5)])
    assert sigma.images == (3, 2, 1, 5, 4)
    assert sigma.cycle_type() == ((1, 1), (2, 2))
    assert sigma.max_cycle_length() == 2
    assert sigma.order() == 2


def test_identity_order():
    assert Permutation.identity(6).order() == 1


def test_full_cycle():
    pi = Permutation.cyclic_shift(23)
    assert pi.order() == 23
    assert pi.max_cycle_length() == 23
    assert pi.cycle_type() == ((23, 1),)


def test_vector_action_convention():
    # sigma(v)_j = v_sigma(j)
    sigma = Permutation.from_cycles(3, [(1, 2, 3)])  # 1->2->3->1
    v = (10, 20, 30)
    assert sigma.apply(v) == (20, 30, 10)


def test_as_matrix_matches_action():
    sigma = Permutation.from_cycles(4, [(1, 3), (2, 4)])
    mat = sigma.as_matrix(GF3)
    v = (1, 2, 0, 1)
    assert vec_mat_mul(v, mat) == sigma.apply(v)


def test_as_matrix_homomorphism_orientation():
    # direct 3-element test pins the orientation under sigma(v)_j = v_sigma(j):
    # as_matrix(compose(s, t)) = as_matrix(s) @ as_matrix(t), while the
    # *action* composes contravariantly: s(t(v)) = (t o s)(v).
    s = Permutation.from_cycles(3, [(1, 2)])
    t = Permutation.from_cycles(3, [(2, 3)])
    st = s.compose(t)
    assert st.as_matrix(GF2) == s.as_matrix(GF2) @ t.as_matrix(GF2)
    v = (1, 0, 1)
    assert s.apply(t.apply(v)) == t.compose(s).apply(v)
    assert vec_mat_mul(vec_mat_mul(v, t.as_matrix(GF2)), s.as_matrix(GF2)) == s.apply(
        t.apply(v)
    )


def test_inverse_and_power():
    sigma = Permutation.from_cycles(5, [(1, 2, 3, 4, 5)])
    assert sigma.compose(sigma.inverse()).is_identity()
    assert (sigma ** 5).is_identity()
    assert sigma ** -1 == sigma.inverse()
    assert (sigma ** 3) == sigma.compose(sigma).compose(sigma)


def test_invalid_images():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_extended_shift_fixes_last():
    pi = Permutation.extended_shift(4)
    assert pi.images == (2, 3, 4, 1, 5)
    assert pi.cycle_type() == ((1, 1), (4, 1))


def test_cyclic_shift_is_polynomial_shift():
    # left cyclic shift: multiplying the coefficient vector by the shift
    # matrix moves coefficients toward lower positions
    pi = Permutation.cyclic_shift(4)
    assert pi.apply((7, 8, 9, 10)) == (8, 9, 10, 7)
