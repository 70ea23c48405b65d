import pytest

from binact import (
    EnumerationTask,
    builtin_group,
    canonicalize,
    enumerate_actions,
    greedy_generators,
    is_distributive,
    mine_counterexamples,
    permutation_homomorphisms,
    subgroup_closure,
    validate_action,
)
from binact.errors import BudgetExceeded, MalformedTable
from binact.search import all_ordinary_actions, relabel_action, with_witnesses

from oracles import oracle_hom_count, oracle_is_distributive, oracle_valid_action_tables

# raw / canonical / distributive counts, frozen after cross-checking against
# the brute-force oracles below
EXPECTED_COUNTS = {
    ("z2", 2): (4, 3, 2),
    ("z2", 3): (64, 16, 11),
    ("z3", 2): (1, 1, 1),
    ("z3", 3): (27, 7, 3),
    ("k4", 2): (16, 10, 4),
    ("k4", 3): (1000, 190, 49),
    ("s3", 2): (4, 3, 2),
    ("s3", 3): (1000, 180, 11),
}


def test_greedy_generators(s3, z3):
    assert greedy_generators(s3) == (1, 2)
    assert subgroup_closure(s3, greedy_generators(s3)) == frozenset(range(6))
    assert greedy_generators(z3) == (1,)
    assert greedy_generators(builtin_group("z1")) == ()


def test_permutation_homomorphism_counts_match_oracle():
    for name in ("z2", "z3", "z4", "k4", "z6", "s3"):
        g = builtin_group(name)
        for degree in (1, 2, 3):
            homs = permutation_homomorphisms(g, degree)
            assert len(homs) == oracle_hom_count(g.cayley, g.identity, degree), (
                name, degree)


def test_enumeration_counts():
    for (name, m), (raw, canon, dist) in EXPECTED_COUNTS.items():
        g = builtin_group(name)
        result = enumerate_actions(EnumerationTask(group=g, carrier_size=m))
        assert result.raw_count == raw, (name, m)
        assert result.canonical_count == canon, (name, m)
        assert result.distributive_count == dist, (name, m)
        assert result.exhaustive
        assert len(result.actions) == raw


def test_raw_count_is_hom_count_to_the_carrier_power():
    """Each carrier point independently carries an ordinary action, so the
    raw total is |Hom(G, S_m)| ** m."""
    for name in ("z2", "z3", "k4", "s3"):
        g = builtin_group(name)
        for m in (1, 2, 3):
            result = enumerate_actions(EnumerationTask(group=g, carrier_size=m))
            homs = permutation_homomorphisms(g, m)
            assert result.raw_count == len(homs) ** m


def test_enumeration_matches_brute_force_z2_m2(z2):
    result = enumerate_actions(EnumerationTask(group=z2, carrier_size=2))
    expect = oracle_valid_action_tables(z2.cayley, z2.identity, 2)
    assert {a.table for a in result.actions} == expect
    dist = {a.table for a in result.actions if is_distributive(a) is True}
    assert dist == {t for t in expect if oracle_is_distributive(z2.cayley, t, 2)}


def test_enumeration_matches_brute_force_z3_m2(z3):
    result = enumerate_actions(EnumerationTask(group=z3, carrier_size=2))
    expect = oracle_valid_action_tables(z3.cayley, z3.identity, 2)
    assert {a.table for a in result.actions} == expect == {
        tuple(tuple((0, 1) for _ in range(2)) for _ in range(3))}


def test_require_distributive_matches_filter(z2, s3):
    for g, m in [(z2, 3), (s3, 3)]:
        full = enumerate_actions(EnumerationTask(group=g, carrier_size=m))
        filt = enumerate_actions(
            EnumerationTask(group=g, carrier_size=m, require_distributive=True))
        assert filt.raw_count == full.distributive_count
        assert {a.table for a in filt.actions} == {
            a.table for a in full.actions if is_distributive(a) is True}


def test_canonicalize_idempotent_and_relabel_invariant(z2):
    result = enumerate_actions(EnumerationTask(group=z2, carrier_size=3))
    sigma = (2, 0, 1)
    for a in result.actions[:20]:
        c = canonicalize(a)
        assert canonicalize(c).table == c.table
        assert canonicalize(relabel_action(a, sigma)).table == c.table


def test_relabel_action_preserves_validity(s3):
    result = enumerate_actions(EnumerationTask(group=s3, carrier_size=2))
    for a in result.actions:
        b = relabel_action(a, (1, 0))
        validate_action(b.group, b.table)  # must not raise


def test_dedupe_keeps_one_per_class(z2):
    result = enumerate_actions(
        EnumerationTask(group=z2, carrier_size=2, dedupe=True))
    assert result.raw_count == 4
    assert result.canonical_count == 3
    assert len(result.actions) == 3
    assert len({canonicalize(a).table for a in result.actions}) == 3


def test_node_budget_exhaustion_carries_partial(s3):
    with pytest.raises(BudgetExceeded) as exc:
        enumerate_actions(EnumerationTask(group=s3, carrier_size=3, node_budget=5))
    partial = exc.value.partial
    assert partial is not None
    assert not partial.exhaustive
    assert partial.raw_count < 1000


def test_task_validation(z2):
    with pytest.raises(MalformedTable):
        EnumerationTask(group=z2, carrier_size=0)
    with pytest.raises(MalformedTable):
        EnumerationTask(group=z2, carrier_size=2, node_budget=0)
    with pytest.raises(MalformedTable):
        EnumerationTask(group=z2, carrier_size=2, time_budget_s=0.0)


def test_witness_mining_z2_m2(z2):
    result = with_witnesses(enumerate_actions(EnumerationTask(group=z2, carrier_size=2)))
    report = result.witnesses
    w = report.intersecting_orbits
    assert w.action.table == (((0, 1), (0, 1)), ((0, 1), (1, 0)))
    assert (w.x, w.xp) == (0, 1)
    assert w.set_x == frozenset({0})
    assert w.set_xp == frozenset({0, 1})
    assert report.non_bi_invariant_union is None
    assert report.actions_scanned == 4


def test_witness_mining_z2_m3(z2):
    report = mine_counterexamples(
        enumerate_actions(EnumerationTask(group=z2, carrier_size=3)))
    w = report.intersecting_orbits
    assert w.action.table[1] == ((0, 1, 2), (0, 1, 2), (0, 2, 1))
    assert (w.x, w.xp) == (1, 2)
    u = report.non_bi_invariant_union
    assert u.action.table[1] == ((0, 1, 2), (0, 1, 2), (1, 0, 2))
    assert u.set_a == frozenset({0})
    assert u.set_b == frozenset({2})
    assert u.union_image == frozenset({0, 1, 2})
    assert report.to_json()["actions_scanned"] == 64


def test_all_ordinary_actions_count(s3):
    assert len(list(all_ordinary_actions(s3, 3))) == 10


def test_permutation_homomorphisms_rejects_bad_degree(s3):
    with pytest.raises(MalformedTable):
        permutation_homomorphisms(s3, 0)
