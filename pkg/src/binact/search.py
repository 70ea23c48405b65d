"""Exhaustive enumeration of binary actions, canonical forms, and witness mining.

The search backtracks over whole rows rather than single cells. Because
star composition works row by row, fixing a carrier point t and letting g
vary gives an ordinary permutation action of G (a homomorphism G -> S_X),
and a binary action is exactly one such row homomorphism per carrier
point. The search therefore precomputes every homomorphism G -> S_X from
images of a greedily chosen generating set (rows must be permutations,
relations must hold), then assigns one homomorphism per row, pruning on
the distributivity law over the cells assigned so far when asked to.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, replace

from .actions import BinaryAction, is_distributive, validate_action
from .binops import compose_perm, identity_perm
from .errors import BudgetExceeded, InternalInconsistency, MalformedTable
from .groups import FiniteGroup, subgroup_closure
from .orbits import is_bi_invariant, k_set, minimal_bi_invariant


def greedy_generators(g: FiniteGroup) -> tuple[int, ...]:
    """Generating set built greedily: repeatedly adjoin the smallest element
    not yet generated. Small in practice, deterministic always."""
    gens: list[int] = []
    closed = subgroup_closure(g, gens)
    while len(closed) < g.order:
        gens.append(min(x for x in g.elements() if x not in closed))
        closed = subgroup_closure(g, gens)
    return tuple(gens)


def _element_words(g: FiniteGroup, gens: tuple[int, ...]) -> list[tuple[int, ...]]:
    """For every element, a word in generator indices multiplying out to it."""
    words: dict[int, tuple[int, ...]] = {g.identity: ()}
    queue = [g.identity]
    for x in queue:
        for j, gen in enumerate(gens):
            y = g.mul(x, gen)
            if y not in words:
                words[y] = words[x] + (j,)
                queue.append(y)
    if len(words) != g.order:
        raise InternalInconsistency("generating set does not generate the group")
    return [words[x] for x in g.elements()]


def permutation_homomorphisms(g: FiniteGroup, degree: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All homomorphisms G -> S_degree, each as a tuple of permutations
    indexed by group element, in a fixed deterministic order.

    Built by assigning permutations to a generating set, deriving the rest
    through generator words, and keeping assignments that respect the whole
    multiplication table.
    """
    if degree < 1:
        raise MalformedTable("degree must be >= 1")
    gens = greedy_generators(g)
    words = _element_words(g, gens)
    perms = sorted(itertools.permutations(range(degree)))
    ident = identity_perm(degree)
    out = []
    for images in itertools.product(perms, repeat=len(gens)):
        rho = []
        for word in words:
            acc = ident
            for j in word:
                acc = compose_perm(acc, images[j])
            rho.append(acc)
        ok = all(
            rho[g.cayley[a][b]] == compose_perm(rho[a], rho[b])
            for a in g.elements()
            for b in g.elements()
        )
        if ok:
            out.append(tuple(rho))
    return tuple(out)


@dataclass(frozen=True)
class EnumerationTask:
    """What to enumerate and under which budgets."""

    group: FiniteGroup
    carrier_size: int
    require_distributive: bool = False
    dedupe: bool = False
    node_budget: int = 2_000_000
    time_budget_s: float = 120.0

    def __post_init__(self):
        if self.carrier_size < 1:
            raise MalformedTable("carrier size must be >= 1")
        if self.node_budget < 1 or self.time_budget_s <= 0:
            raise MalformedTable("budgets must be positive")


@dataclass(frozen=True)
class IntersectingOrbitsWitness:
    """Two points whose minimal bi-invariant sets intersect without coinciding."""

    action: BinaryAction
    x: int
    xp: int
    set_x: frozenset[int]
    set_xp: frozenset[int]

    def to_json(self) -> dict:
        return {
            "kind": "intersecting_orbits",
            "action_table": [[list(r) for r in sl] for sl in self.action.table],
            "x": self.x,
            "x_prime": self.xp,
            "minimal_set_x": sorted(self.set_x),
            "minimal_set_x_prime": sorted(self.set_xp),
        }


@dataclass(frozen=True)
class UnionWitness:
    """Two bi-invariant sets whose union is not bi-invariant."""

    action: BinaryAction
    set_a: frozenset[int]
    set_b: frozenset[int]
    union_image: frozenset[int]

    def to_json(self) -> dict:
        return {
            "kind": "non_bi_invariant_union",
            "action_table": [[list(r) for r in sl] for sl in self.action.table],
            "set_a": sorted(self.set_a),
            "set_b": sorted(self.set_b),
            "union_image": sorted(self.union_image),
        }


@dataclass(frozen=True)
class WitnessReport:
    intersecting_orbits: IntersectingOrbitsWitness | None
    non_bi_invariant_union: UnionWitness | None
    actions_scanned: int

    def to_json(self) -> dict:
        return {
            "intersecting_orbits": (
                None if self.intersecting_orbits is None
                else self.intersecting_orbits.to_json()),
            "non_bi_invariant_union": (
                None if self.non_bi_invariant_union is None
                else self.non_bi_invariant_union.to_json()),
            "actions_scanned": self.actions_scanned,
        }


@dataclass(frozen=True)
class EnumerationResult:
    """Outcome of one enumeration run.

    actions holds every emitted action in lexicographic table order (the
    canonical representatives instead when dedupe was on). raw_count counts
    emissions before dedupe; canonical_count counts biequimorphism classes
    among them; distributive_count counts distributive emissions. When a
    budget stopped the search, exhaustive is false and the counts describe
    the explored part only.
    """

    task: EnumerationTask
    actions: tuple[BinaryAction, ...]
    raw_count: int
    canonical_count: int
    distributive_count: int
    exhaustive: bool
    witnesses: WitnessReport | None = None


def relabel_action(a: BinaryAction, sigma) -> BinaryAction:
    """The action carried across the carrier bijection sigma, which makes
    sigma a biequimorphism from a to the result."""
    sg = tuple(int(v) for v in sigma)
    m = a.carrier_size
    if sorted(sg) != list(range(m)):
        raise MalformedTable("sigma is not a carrier bijection")
    out = [[[0] * m for _ in range(m)] for _ in a.group.elements()]
    for g in a.group.elements():
        sl = a.table[g]
        for x in range(m):
            for xp in range(m):
                out[g][sg[x]][sg[xp]] = sg[sl[x][xp]]
    table = tuple(tuple(tuple(row) for row in sl) for sl in out)
    return validate_action(a.group, table)


def canonicalize(a: BinaryAction) -> BinaryAction:
    """Lexicographically least relabelling of a; constant on biequimorphism
    classes and idempotent."""
    best = None
    for sigma in itertools.permutations(range(a.carrier_size)):
        cand = relabel_action(a, sigma).table
        if best is None or cand < best:
            best = cand
    return validate_action(a.group, best)


def enumerate_actions(task: EnumerationTask) -> EnumerationResult:
    """Enumerate every binary action of the task's group on its carrier.

    Emitted actions are sorted by table and re-validated; under
    require_distributive each one is re-checked with the exhaustive
    distributivity scan as well. Budgets exhausted mid-search raise
    BudgetExceeded carrying the partial result.
    """
    g = task.group
    m = task.carrier_size
    rowhoms = permutation_homomorphisms(g, m)
    deadline = time.monotonic() + task.time_budget_s
    nodes = 0
    tables: list[tuple] = []
    chosen: list[tuple[tuple[int, ...], ...]] = [()] * m
    order = list(g.elements())

    def distributivity_ok(depth: int) -> bool:
        # check every law instance whose three row indices are already assigned
        for gg in order:
            for hh in order:
                for x in range(depth):
                    hrow = chosen[x][hh]
                    for xp in range(depth):
                        a_idx = hrow[xp]
                        if a_idx >= depth:
                            continue
                        grow_a = chosen[a_idx][gg]
                        grow_xp = chosen[xp][gg]
                        for xpp in range(m):
                            if grow_a[hrow[xpp]] != hrow[grow_xp[xpp]]:
                                return False
        return True

    def emit_partial(reason: str):
        result = _assemble(task, g, m, tables, exhaustive=False)
        raise BudgetExceeded(reason, partial=result)

    def fill(t: int):
        nonlocal nodes
        if t == m:
            tables.append(tuple(
                tuple(chosen[x][gg] for x in range(m)) for gg in order
            ))
            return
        for rho in rowhoms:
            nodes += 1
            if nodes > task.node_budget:
                emit_partial(f"node budget {task.node_budget} reached")
            if nodes % 1024 == 0 and time.monotonic() > deadline:
                emit_partial(f"time budget {task.time_budget_s}s reached")
            chosen[t] = rho
            if task.require_distributive and not distributivity_ok(t + 1):
                continue
            fill(t + 1)

    fill(0)
    return _assemble(task, g, m, tables, exhaustive=True)


def _assemble(task, g, m, tables, exhaustive: bool) -> EnumerationResult:
    tables = sorted(tables)
    actions = [validate_action(g, tbl) for tbl in tables]
    distributive = 0
    for a in actions:
        w = is_distributive(a)
        if w is True:
            distributive += 1
        elif task.require_distributive:
            raise InternalInconsistency(
                f"search emitted a non-distributive action under the filter, witness {w}")
    canon: dict[tuple, BinaryAction] = {}
    for a in actions:
        c = canonicalize(a)
        canon.setdefault(c.table, c)
    out = tuple(canon[t] for t in sorted(canon)) if task.dedupe else tuple(actions)
    return EnumerationResult(
        task=task,
        actions=out,
        raw_count=len(actions),
        canonical_count=len(canon),
        distributive_count=distributive,
        exhaustive=exhaustive,
    )


def all_ordinary_actions(g: FiniteGroup, carrier_size: int):
    """Every ordinary action of g on the carrier, via row homomorphisms."""
    from .actions import make_ordinary_action

    return tuple(
        make_ordinary_action(g, rho)
        for rho in permutation_homomorphisms(g, carrier_size)
    )


def mine_counterexamples(result: EnumerationResult) -> WitnessReport:
    """Scan enumerated actions for the two classical failures of naive orbit
    intuition: minimal bi-invariant sets that intersect without being equal,
    and bi-invariant sets with a non-bi-invariant union.

    Actions are scanned in their deterministic result order and pairs in
    lexicographic order, so the reported witnesses are the smallest ones.
    Fields are None when the scale admits no witness.
    """
    intersecting = None
    union = None
    for a in result.actions:
        m = a.carrier_size
        if intersecting is None:
            sets = [minimal_bi_invariant(a, x) for x in range(m)]
            for x in range(m):
                for xp in range(x + 1, m):
                    if sets[x] & sets[xp] and sets[x] != sets[xp]:
                        intersecting = IntersectingOrbitsWitness(
                            action=a, x=x, xp=xp, set_x=sets[x], set_xp=sets[xp])
                        break
                if intersecting:
                    break
        if union is None:
            invariant_masks = [
                frozenset(pts)
                for pts in _subsets(m)
                if is_bi_invariant(a, pts)
            ]
            for i, sa in enumerate(invariant_masks):
                for sb in invariant_masks[i + 1:]:
                    u = sa | sb
                    if not is_bi_invariant(a, u):
                        union = UnionWitness(
                            action=a, set_a=sa, set_b=sb,
                            union_image=k_set(a, a.group.elements(), u, u))
                        break
                if union:
                    break
        if intersecting and union:
            break
    return WitnessReport(
        intersecting_orbits=intersecting,
        non_bi_invariant_union=union,
        actions_scanned=len(result.actions),
    )


def _subsets(m: int):
    for mask in range(1 << m):
        yield tuple(i for i in range(m) if mask >> i & 1)


def with_witnesses(result: EnumerationResult) -> EnumerationResult:
    return replace(result, witnesses=mine_counterexamples(result))
