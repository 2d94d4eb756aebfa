import random

import pytest

from conftest import perm_matrix
from isodec import (
    FinAbGroup,
    MatQ,
    PreconditionError,
    Subgroup,
    ValidationError,
    action_matrix,
    algebra_matrix,
    complementary_subvariety,
    fixed_subvariety,
    intersect_spaces,
    isotypical_component,
    isotypical_decomposition,
    make_fixture,
    rational_irreps,
    subgroup_from_generators,
    validate_action,
)
from isodec.fixtures import FixtureSpec
from isodec.numtheory import totient
from isodec.qalgebra import from_terms, identity
import isodec.action


# --------------------------------------------------------------- validation


def test_validate_accepts_involution():
    a = validate_action(FinAbGroup((2,)), [MatQ([[1, 0], [0, -1]])])
    assert a.dim == 2
    assert a.faithful
    assert a.warnings == ()


def test_validate_rejects_wrong_count():
    with pytest.raises(ValidationError, match="expected 2 generator matrices, got 1"):
        validate_action(FinAbGroup((2, 2)), [MatQ([[1]])])


def test_validate_rejects_wrong_order():
    with pytest.raises(ValidationError, match=r"generator 1: M\^2 != I"):
        validate_action(FinAbGroup((2,)), [MatQ([[0, -1], [1, 0]])])


def test_validate_rejects_non_square_and_size_mismatch():
    with pytest.raises(ValidationError, match="not square"):
        validate_action(FinAbGroup((2,)), [MatQ([[1, 0]])])
    with pytest.raises(ValidationError, match="differs from generator 1 size"):
        validate_action(
            FinAbGroup((2, 2)), [MatQ([[1]]), MatQ([[1, 0], [0, 1]])]
        )


def test_validate_rejects_noncommuting():
    with pytest.raises(ValidationError, match="generators 1 and 2 do not commute"):
        validate_action(
            FinAbGroup((2, 2)),
            [MatQ([[0, 1], [1, 0]]), MatQ([[1, 0], [0, -1]])],
        )


def test_non_faithful_action_warns():
    a = validate_action(FinAbGroup((4,)), [MatQ([[-1]])])
    assert not a.faithful
    assert a.action_kernel.order == 2
    assert "not faithful" in a.warnings[0]


# ------------------------------------------------------------------ symbols


def test_action_matrix_is_a_homomorphism():
    group = FinAbGroup((4, 3))
    af = make_fixture(FixtureSpec("semisimple", moduli=(4, 3)))
    rng = random.Random(1)
    for _ in range(20):
        g = group.element(tuple(rng.randrange(n) for n in group.moduli))
        h = group.element(tuple(rng.randrange(n) for n in group.moduli))
        assert action_matrix(af.action, g + h) == action_matrix(
            af.action, g
        ) @ action_matrix(af.action, h)


def test_action_matrix_without_cached_table(monkeypatch):
    monkeypatch.setattr(isodec.action, "_TABLE_BUDGET", 0)
    group = FinAbGroup((4, 3))
    af = make_fixture(FixtureSpec("semisimple", moduli=(4, 3)))
    action = validate_action(group, af.action.gen_matrices)
    assert action._cache.get("table") is None
    table = list(isodec.action._matrix_iter(group, action.gen_matrices))
    for g in group.elements():
        assert action_matrix(action, g) == table[g.index()]
    rep = isotypical_decomposition(action)
    assert sum(c.dim for c in rep.components) == action.dim


def test_algebra_matrix_is_linear_and_multiplicative():
    group = FinAbGroup((6,))
    af = make_fixture(FixtureSpec("semisimple", moduli=(6,)))
    rng = random.Random(3)
    for _ in range(10):
        x = from_terms(
            group,
            {
                group.element((rng.randrange(6),)): rng.randrange(-3, 4)
                for _ in range(3)
            },
        )
        y = from_terms(
            group,
            {
                group.element((rng.randrange(6),)): rng.randrange(-3, 4)
                for _ in range(3)
            },
        )
        mx = algebra_matrix(af.action, x)
        my = algebra_matrix(af.action, y)
        assert algebra_matrix(af.action, x + y) == mx + my
        assert algebra_matrix(af.action, x * y) == mx @ my
    assert algebra_matrix(af.action, identity(group)).is_identity()


# ------------------------------------------------------------ fixed spaces


def test_fixed_subvariety_dimensions_in_regular_representation():
    # in the regular representation, dim A^H = [G : H]
    group = FinAbGroup((12,))
    action = validate_action(group, [perm_matrix(12)])
    for exps in [(0,), (6,), (4,), (3,), (2,), (1,)]:
        h = subgroup_from_generators(group, [exps])
        assert fixed_subvariety(action, h).dim == h.index


def test_fixed_subvariety_dimension_oracle_on_semisimple_fixture():
    # dim A^H = sum over classes fixed by H of multiplicity * degree
    moduli = (2, 4)
    af = make_fixture(
        FixtureSpec("semisimple", moduli=moduli, multiplicities=(1, 2, 0, 1, 3, 1))
    )
    group = af.action.group
    irreps = rational_irreps(group)
    mult = {w.kernel: m for w, (_, m) in zip(irreps, af.ground_truth)}
    from isodec import all_subgroups

    for h in all_subgroups(group):
        expected = sum(
            mult[w.kernel] * w.degree
            for w in irreps
            if h.is_contained_in(w.kernel)
        )
        assert fixed_subvariety(af.action, h).dim == expected


def test_complementary_subvariety_dimension_and_containment():
    group = FinAbGroup((12,))
    action = validate_action(group, [perm_matrix(12)])
    k = subgroup_from_generators(group, [(6,)])
    h = subgroup_from_generators(group, [(3,)])
    assert k.is_contained_in(h)
    a_k = fixed_subvariety(action, k)
    a_h = fixed_subvariety(action, h)
    comp = complementary_subvariety(action, k, h)
    assert comp.dim == a_k.dim - a_h.dim
    assert a_k.contains_subspace(comp)
    assert intersect_spaces(comp, a_h).dim == 0


def test_complementary_requires_containment():
    group = FinAbGroup((12,))
    action = validate_action(group, [perm_matrix(12)])
    k = subgroup_from_generators(group, [(6,)])
    h = subgroup_from_generators(group, [(4,)])
    with pytest.raises(PreconditionError):
        complementary_subvariety(action, h, k)


# ---------------------------------------------------------- decomposition


def test_regular_representation_has_multiplicity_one_everywhere():
    group = FinAbGroup((6,))
    action = validate_action(group, [perm_matrix(6)])
    rep = isotypical_decomposition(action)
    assert [(c.irrep.order, c.dim) for c in rep.components] == [
        (1, 1),
        (2, 1),
        (3, 2),
        (6, 2),
    ]
    assert all(c.multiplicity == 1 for c in rep.components)


def test_isotypical_component_of_single_class():
    group = FinAbGroup((6,))
    af = make_fixture(
        FixtureSpec("semisimple", moduli=(6,), multiplicities=(0, 0, 0, 2))
    )
    w = rational_irreps(group)[3]
    assert w.order == 6
    comp = isotypical_component(af.action, w)
    assert comp.dim == af.action.dim == 4
    trivial = isotypical_component(af.action, rational_irreps(group)[0])
    assert trivial.dim == 0


def test_decomposition_recovers_ground_truth_of_conjugated_fixtures():
    for seed in range(5):
        af = make_fixture(
            FixtureSpec("random-conjugated", moduli=(2, 4), seed=seed, max_dim=12)
        )
        rep = isotypical_decomposition(af.action)
        got = {
            c.irrep.kernel.hnf_basis.entries: c.multiplicity
            for c in rep.components
        }
        expected = {k.entries: m for k, m in af.ground_truth}
        assert got == expected


def test_components_are_independent_and_spanning():
    af = make_fixture(FixtureSpec("random-conjugated", moduli=(6,), seed=9))
    rep = isotypical_decomposition(af.action)
    nonzero = [c.subspace for c in rep.components if c.dim]
    assert sum(s.dim for s in nonzero) == af.action.dim
    for i in range(len(nonzero)):
        for j in range(i + 1, len(nonzero)):
            assert intersect_spaces(nonzero[i], nonzero[j]).dim == 0


def test_multiplicity_times_degree_is_dimension():
    af = make_fixture(FixtureSpec("random-conjugated", moduli=(8,), seed=2))
    rep = isotypical_decomposition(af.action)
    for c in rep.components:
        assert c.dim == c.multiplicity * c.irrep.degree


def test_non_faithful_components_vanish_off_the_kernel():
    # an action through G/K has zero component for every W whose kernel
    # does not contain the action kernel
    group = FinAbGroup((8, 9))
    af = make_fixture(
        FixtureSpec(
            "semisimple",
            moduli=(8, 9),
            multiplicities=tuple(
                2 if w.kernel.hnf_basis.entries == ((2, 0), (0, 3)) else 0
                for w in rational_irreps(group)
            ),
        )
    )
    rep = isotypical_decomposition(af.action)
    kernel = af.action.action_kernel
    assert kernel.hnf_basis.entries == ((2, 0), (0, 3))
    for c in rep.components:
        if not kernel.is_contained_in(c.irrep.kernel):
            assert c.multiplicity == 0


def test_plausibility_warnings():
    # odd total dimension and an odd-multiplicity totally real class
    group = FinAbGroup((2,))
    action = validate_action(group, [MatQ([[1, 0, 0], [0, -1, 0], [0, 0, -1]])])
    rep = isotypical_decomposition(action)
    assert any("odd" in w and "dimension 3" in w for w in rep.warnings)
    assert any("odd multiplicity" in w for w in rep.warnings)

    ok = make_fixture(
        FixtureSpec("semisimple", moduli=(2,), multiplicities=(2, 2))
    )
    assert isotypical_decomposition(ok.action).warnings == ()


def test_report_jsonable_shape():
    af = make_fixture(FixtureSpec("regular", n=4))
    obj = isotypical_decomposition(af.action).to_jsonable()
    assert obj["group"] == [4]
    assert obj["dim"] == 4
    assert obj["faithful"] is True
    assert [c["order"] for c in obj["components"]] == [1, 2, 4]
    assert all(
        set(c) == {"kernel_hnf", "order", "degree", "representative",
                   "multiplicity", "dim", "basis"}
        for c in obj["components"]
    )
