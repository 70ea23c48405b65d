from itertools import product

import pytest

from binact import (
    action_from_json,
    action_to_json,
    all_biequivariant_maps,
    biequivariance_implies_equivariance_check,
    builtin_group,
    conjugation_coset_action,
    from_ordinary,
    induced_action,
    is_biequivariant,
    is_distributive,
    is_equivariant,
    identity_op,
    make_ordinary_action,
    morphism_to_monoid,
    ordinary_from_json,
    ordinary_to_json,
    star,
    trivial_action,
    validate_action,
)
from binact.errors import (
    AxiomOneViolated,
    AxiomTwoViolated,
    NotASubgroup,
    NotBiequivariant,
    ShapeMismatch,
)


def test_validate_reports_axiom_two_first(z2):
    bad_identity = (((0, 0), (0, 1)), ((0, 1), (0, 1)))
    with pytest.raises(AxiomTwoViolated) as exc:
        validate_action(z2, bad_identity)
    assert exc.value.witness == (0, 1)  # e(0,0)=0 happens to be right


def test_validate_axiom_one_witness_is_lex_first(z2):
    # identity slice fine, a-slice is first projection f(x, x') = x
    table = (((0, 1), (0, 1)), ((0, 0), (1, 1)))
    with pytest.raises(AxiomOneViolated) as exc:
        validate_action(z2, table)
    assert exc.value.witness == (1, 1, 0, 1)


def test_validate_rejects_bad_shape(z2):
    with pytest.raises(ShapeMismatch):
        validate_action(z2, (((0, 1), (0, 1)),))
    with pytest.raises(ShapeMismatch):
        validate_action(z2, (((0, 1), (0, 1)), ((0, 2), (0, 1))))


def test_xor_embed_is_distributive(xor_action):
    assert is_distributive(xor_action) is True


def test_mixed_action_distributivity_witness(mixed_action):
    w = is_distributive(mixed_action)
    assert w == (1, 1, 1, 0, 0)
    g, h, x, xp, xpp = w
    a = mixed_action
    left = a(g, a(h, x, xp), a(h, x, xpp))
    right = a(h, x, a(g, xp, xpp))
    assert left != right


def test_trivial_action_distributive(s3):
    a = trivial_action(s3, 3)
    assert is_distributive(a) is True
    assert all(a(g, x, xp) == xp for g in s3.elements()
               for x in range(3) for xp in range(3))


def test_induced_action_freezes_first_argument(xor_action):
    for t in range(2):
        o = induced_action(xor_action, t)
        assert o.table == ((0, 1), (1, 0))


def test_from_ordinary_ignores_first_argument(z3):
    a = from_ordinary(make_ordinary_action(z3, ((0, 1, 2), (1, 2, 0), (2, 0, 1))))
    assert all(a(g, x, xp) == a(g, 0, xp)
               for g in range(3) for x in range(3) for xp in range(3))
    assert is_distributive(a) is True


def test_morphism_to_monoid_satisfies_star_law(s3):
    a = conjugation_coset_action(s3, [0, 3, 4])
    ops = morphism_to_monoid(a)
    h = a.group
    assert ops[h.identity] == identity_op(a.carrier_size)
    for g1 in h.elements():
        for g2 in h.elements():
            assert star(ops[g1], ops[g2]) == ops[h.mul(g1, g2)]


def test_conjugation_coset_action_s3_a3(s3):
    a = conjugation_coset_action(s3, [0, 3, 4])
    assert a.carrier_size == 6
    assert a.group.order == 3
    assert a.group_embedding == (0, 3, 4)
    assert is_distributive(a) is True
    # at x = identity the action is left translation by the subgroup element
    for i, g in enumerate(a.group_embedding):
        for y in range(6):
            assert a(i, 0, y) == s3.mul(g, y)


def test_conjugation_requires_subgroup(s3):
    with pytest.raises(NotASubgroup):
        conjugation_coset_action(s3, [0, 1, 3])


def test_biequivariant_maps_xor_to_xor(xor_action):
    maps = all_biequivariant_maps(xor_action, xor_action)
    assert maps == [(0, 1), (1, 0)]
    for f in maps:
        assert is_biequivariant(xor_action, xor_action, f) is True


def test_biequivariant_witness(z2, xor_action):
    tr = trivial_action(z2, 2)
    w = is_biequivariant(xor_action, tr, (0, 1))
    assert w is not True
    g, x, xp = w
    f = (0, 1)
    assert f[xor_action(g, x, xp)] != tr(g, f[x], f[xp])


def test_constant_maps_into_trivial_are_biequivariant(z2, xor_action):
    tr = trivial_action(z2, 2)
    assert all_biequivariant_maps(xor_action, tr) == [(0, 0), (1, 1)]


def test_biequivariance_implies_equivariance(xor_action):
    assert biequivariance_implies_equivariance_check(
        xor_action, xor_action, (1, 0)) is True
    tr = trivial_action(xor_action.group, 2)
    with pytest.raises(NotBiequivariant):
        biequivariance_implies_equivariance_check(xor_action, tr, (0, 1))


def test_equivariant_maps_between_ordinary_actions(z2):
    swap = make_ordinary_action(z2, ((0, 1), (1, 0)))
    ident = make_ordinary_action(z2, ((0, 1), (0, 1)))
    assert is_equivariant(swap, swap, (1, 0)) is True
    w = is_equivariant(swap, ident, (0, 1))
    assert w == (1, 0)


def test_action_json_round_trip(s3):
    a = conjugation_coset_action(s3, [0, 2])
    data = action_to_json(a)
    b = action_from_json(data)
    assert b.table == a.table
    assert b.group_embedding == a.group_embedding
    assert b.group.cayley == a.group.cayley


def test_action_json_group_by_name(z2):
    data = {"group": "z2", "carrier": 2,
            "table": [[[0, 1], [0, 1]], [[1, 0], [1, 0]]]}
    a = action_from_json(data)
    assert a.group.cayley == z2.cayley
    assert is_distributive(a) is True


def test_action_json_carrier_mismatch():
    data = {"group": "z2", "carrier": 3,
            "table": [[[0, 1], [0, 1]], [[1, 0], [1, 0]]]}
    with pytest.raises(ShapeMismatch):
        action_from_json(data)


def test_ordinary_json_round_trip(s3):
    o = make_ordinary_action(s3, tuple(
        tuple(s3.mul(g, x) for x in range(6)) for g in s3.elements()))
    assert ordinary_from_json(ordinary_to_json(o)).table == o.table


def test_every_slice_pair_satisfies_axiom_one(k4):
    """Spot check the axiom directly on a handwritten k4 action: the two
    generators act by swap, so their product falls back to the identity."""
    full = (
        tuple((0, 1) for _ in range(2)),
        tuple((1, 0) for _ in range(2)),
        tuple((1, 0) for _ in range(2)),
        tuple((0, 1) for _ in range(2)),
    )
    a = validate_action(k4, full)
    for g, h in product(k4.elements(), repeat=2):
        gh = k4.mul(g, h)
        for x, xp in product(range(2), repeat=2):
            assert a(gh, x, xp) == a(g, x, a(h, x, xp))
