import doctest
import itertools
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

import isodec.ratlinalg as ratlinalg
from isodec import (
    MatQ,
    MatZ,
    PolyQ,
    PreconditionError,
    SubspaceQ,
    char_poly,
    companion_matrix,
    cyclotomic,
    det_int,
    hnf,
    image_space,
    intersect_spaces,
    inverse,
    kernel_space,
    restrict_operator,
    smith_with_transforms,
    snf_invariants,
    sum_spaces,
)

import pytest

fractions = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
)


def square_matq(n):
    return st.lists(
        st.lists(fractions, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(MatQ)


def int_matrix(rows, cols, bound=6):
    return st.lists(
        st.lists(
            st.integers(min_value=-bound, max_value=bound),
            min_size=cols,
            max_size=cols,
        ),
        min_size=rows,
        max_size=rows,
    )


def test_module_doctests():
    assert doctest.testmod(ratlinalg).failed == 0


# ------------------------------------------------------------------- MatQ


@given(square_matq(3), square_matq(3), square_matq(3))
def test_matq_ring_identities(a, b, c):
    assert (a + b) @ c == a @ c + b @ c
    assert (a @ b) @ c == a @ (b @ c)
    assert a @ MatQ.identity(3) == a
    assert MatQ.identity(3) @ a == a
    assert a - a == MatQ.zeros(3, 3)


@given(square_matq(3))
def test_matq_scaling_normalizes(a):
    assert a * Fraction(2, 3) * Fraction(3, 2) == a
    assert (-a) + a == MatQ.zeros(3, 3)
    assert a.transpose().transpose() == a


def test_matq_equality_ignores_representation():
    a = MatQ([[Fraction(1, 2), Fraction(0)], [Fraction(0), Fraction(1, 2)]])
    b = MatQ.identity(2) * Fraction(1, 2)
    assert a == b
    assert hash(a) == hash(b)


@given(square_matq(3))
def test_matq_inverse(a):
    if det_int_of(a) == 0:
        return
    inv = inverse(a)
    assert (a @ inv).is_identity()
    assert (inv @ a).is_identity()


def det_int_of(a: MatQ) -> Fraction:
    n = a.rows
    total = Fraction(0)
    rows = a.fraction_rows()
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = Fraction(sign)
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def test_inverse_of_singular_raises():
    with pytest.raises(PreconditionError):
        inverse(MatQ([[1, 1], [1, 1]]))


@given(square_matq(2), st.integers(min_value=0, max_value=6))
def test_matq_powers(a, k):
    expected = MatQ.identity(2)
    for _ in range(k):
        expected = expected @ a
    assert a**k == expected


def test_matq_jsonable_round_trip():
    a = MatQ([[Fraction(1, 3), Fraction(-2)], [Fraction(0), Fraction(5, 7)]])
    assert MatQ.from_jsonable(a.to_jsonable()) == a


# --------------------------------------------------------------- subspaces


@given(int_matrix(3, 4))
def test_rank_nullity(rows):
    m = MatQ(rows)
    assert kernel_space(m).dim + image_space(m).dim == m.cols


@given(int_matrix(2, 4), int_matrix(2, 4))
def test_grassmann_dimension_formula(rows_u, rows_v):
    u = SubspaceQ(4, rows_u)
    v = SubspaceQ(4, rows_v)
    meet = intersect_spaces(u, v)
    join = sum_spaces(u, v)
    assert meet.dim + join.dim == u.dim + v.dim
    assert u.contains_subspace(meet)
    assert v.contains_subspace(meet)
    assert join.contains_subspace(u)
    assert join.contains_subspace(v)


@given(int_matrix(2, 4))
def test_subspace_canonical_under_row_mixing(rows):
    u = SubspaceQ(4, rows)
    mixed = [
        [2 * a + 3 * b for a, b in zip(rows[0], rows[1])],
        [a - b for a, b in zip(rows[0], rows[1])],
    ]
    v = SubspaceQ(4, rows + mixed)
    if u.dim == 2:
        # mixing is invertible, so the span is unchanged
        assert SubspaceQ(4, mixed + rows) == u
    assert v == u


@given(int_matrix(3, 5))
def test_coordinates_reconstruct_vectors(rows):
    s = SubspaceQ(5, rows)
    for r in rows:
        coords = s.coordinates_of(r)
        assert coords is not None
        rebuilt = [Fraction(0)] * 5
        for c, b in zip(coords, s.basis_rows()):
            rebuilt = [x + c * y for x, y in zip(rebuilt, b)]
        assert rebuilt == [Fraction(v) for v in r]


def test_kernel_image_on_known_matrix():
    m = MatQ([[1, 1, 0], [0, 0, 0], [1, 1, 0]])
    assert kernel_space(m).dim == 2
    assert image_space(m).dim == 1
    assert image_space(m).contains_vector([1, 0, 1])


def test_subspace_jsonable_round_trip():
    s = SubspaceQ(3, [[1, 2, 3], [0, 1, Fraction(1, 2)]])
    assert SubspaceQ.from_jsonable(s.to_jsonable()) == s


# ----------------------------------------------------------- integer forms


def test_hnf_known_example():
    assert hnf(MatZ(((2, 0), (1, 3)))).entries == ((1, 3), (0, 6))


def test_hnf_shape_and_rank_requirement():
    h = hnf(MatZ(((4, 2), (2, 4), (0, 6))))
    assert h.entries == ((2, 4), (0, 6))
    with pytest.raises(PreconditionError):
        hnf(MatZ(((1, 2), (2, 4))))


@given(int_matrix(3, 3))
def test_hnf_invariant_under_unimodular_row_ops(rows):
    m = MatZ(tuple(tuple(r) for r in rows))
    if det_int(m) == 0:
        return
    mixed = [
        rows[0],
        [a + 2 * b for a, b in zip(rows[1], rows[0])],
        [a - b for a, b in zip(rows[2], rows[1])],
    ]
    assert hnf(m) == hnf(MatZ(tuple(tuple(r) for r in mixed)))


@given(int_matrix(3, 3))
def test_det_matches_permanent_expansion(rows):
    m = MatZ(tuple(tuple(r) for r in rows))
    assert det_int(m) == det_int_of(m.to_matq())


def test_snf_known_example():
    assert snf_invariants(MatZ(((2, 2), (0, 4)))) == (2, 4)
    assert snf_invariants(MatZ.diagonal((8, 9))) == (1, 72)
    assert snf_invariants(MatZ.diagonal((2, 2))) == (2, 2)


@given(int_matrix(3, 3))
@settings(max_examples=60)
def test_smith_transforms_are_unimodular_and_exact(rows):
    m = MatZ(tuple(tuple(r) for r in rows))
    if det_int(m) == 0:
        return
    d, u, v, vinv = smith_with_transforms(m)
    assert abs(det_int(u)) == 1
    assert abs(det_int(v)) == 1
    prod = u.to_matq() @ m.to_matq() @ v.to_matq()
    assert prod == d.to_matq()
    assert (v.to_matq() @ vinv.to_matq()).is_identity()
    diag = [d.entries[i][i] for i in range(3)]
    assert all(x > 0 for x in diag)
    assert all(diag[i + 1] % diag[i] == 0 for i in range(2))


def test_snf_requires_nonsingular():
    with pytest.raises(PreconditionError):
        snf_invariants(MatZ(((1, 2), (2, 4))))


# -------------------------------------------------------------- polynomials


small_polys = st.lists(
    st.integers(min_value=-6, max_value=6), min_size=1, max_size=5
).map(PolyQ.from_ints)


@given(small_polys, small_polys)
def test_poly_divmod_identity(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


def test_cyclotomic_table():
    # coefficient tuples, ascending degree
    table = {
        1: (-1, 1),
        2: (1, 1),
        3: (1, 1, 1),
        4: (1, 0, 1),
        5: (1, 1, 1, 1, 1),
        6: (1, -1, 1),
        8: (1, 0, 0, 0, 1),
        9: (1, 0, 0, 1, 0, 0, 1),
        10: (1, -1, 1, -1, 1),
        12: (1, 0, -1, 0, 1),
        15: (1, -1, 0, 1, -1, 1, 0, -1, 1),
    }
    for n, coeffs in table.items():
        assert cyclotomic(n).coeffs == tuple(Fraction(c) for c in coeffs), n


def test_cyclotomic_product_recovers_x_n_minus_1():
    from isodec.numtheory import divisors

    for n in range(1, 31):
        prod = PolyQ.one()
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        expected = PolyQ.from_ints([-1] + [0] * (n - 1) + [1])
        assert prod == expected, n


def test_companion_matrix_of_known_polynomial():
    c = companion_matrix(cyclotomic(6))
    assert c.fraction_rows() == (
        (Fraction(0), Fraction(-1)),
        (Fraction(1), Fraction(1)),
    )
    assert (c**6).is_identity()
    assert not (c**3).is_identity()


@given(st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=4))
def test_companion_charpoly_round_trip(lower):
    p = PolyQ(tuple(Fraction(c) for c in lower) + (Fraction(1),))
    assert char_poly(companion_matrix(p)) == p


@given(square_matq(3))
@settings(max_examples=60)
def test_charpoly_matches_cofactor_expansion(a):
    p = char_poly(a)
    # evaluate det(xI - A) at a few points and compare
    for x in (Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 2)):
        xi = MatQ.identity(3) * x
        assert p.evaluate(x) == det_int_of(xi - a)


def test_charpoly_trace_and_det_coefficients():
    a = MatQ([[1, 2], [3, 4]])
    p = char_poly(a)
    assert p.coeffs[-2] == -5  # -trace
    assert p.coeffs[0] == -2  # det for even dim


# ------------------------------------------------------- restrict_operator


def test_restrict_operator_on_invariant_subspace():
    rot = MatQ([[0, -1, 0], [1, 0, 0], [0, 0, 1]])
    s = SubspaceQ(3, [[1, 0, 0], [0, 1, 0]])
    r = restrict_operator(rot, s)
    assert r.fraction_rows() == ((Fraction(0), Fraction(-1)), (Fraction(1), Fraction(0)))


def test_restrict_operator_rejects_noninvariant_subspace():
    shear = MatQ([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    s = SubspaceQ(3, [[0, 0, 1]])
    with pytest.raises(PreconditionError):
        restrict_operator(shear, s)
