"""Finite topologies as bitmask open-set families, plus theorem checks.

Open sets are ints: bit x set means carrier point x is in the set. On a
finite carrier every point has a minimal open neighborhood (the
intersection of all opens containing it), which makes continuity checks
exact: a map out of a product with a discrete factor is continuous iff
it maps minimal neighborhoods into minimal neighborhoods.

Check discipline: a finite Hausdorff space is discrete, so statements
whose hypotheses include Hausdorff are only asserted on discrete models
and recorded as probes elsewhere. Two conclusions hold for every
continuous distributive model regardless of separation, because each
diagonal map is a homeomorphism and finite unions of closed sets are
closed: images G(A) of closed sets are closed, and the orbit projection
is a closed (hence, with finite fibers, proper) map. The battery asserts
those two unconditionally. Compactness statements are degenerately true
on finite carriers and carry a caveat flag.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .actions import BinaryAction, is_distributive
from .errors import (
    CapExceeded,
    InternalInconsistency,
    MalformedTable,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotContinuous,
    NotDistributive,
    ShapeMismatch,
)
from .orbits import orbit_space

TOPOLOGY_ENUM_CAP = 5


@dataclass(frozen=True)
class FiniteTopology:
    """A topology on points 0..carrier_size-1; construct via validate_topology."""

    carrier_size: int
    opens: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.carrier_size) - 1


def mask_of(points: Iterable[int], carrier_size: int) -> int:
    mask = 0
    for p in points:
        if not 0 <= p < carrier_size:
            raise MalformedTable(f"point {p} out of range 0..{carrier_size - 1}")
        mask |= 1 << p
    return mask


def points_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _coerce_mask(item, carrier_size: int) -> int:
    if isinstance(item, int):
        if not 0 <= item < (1 << carrier_size):
            raise MalformedTable(f"bitmask {item} out of range for carrier {carrier_size}")
        return item
    return mask_of(item, carrier_size)


def validate_topology(carrier_size: int, opens) -> FiniteTopology:
    """Normalize (sort, deduplicate) and check the open-set family.

    Requires the empty set and full carrier, and closure under pairwise
    union and intersection; the first failing pair is reported.
    """
    if carrier_size < 1:
        raise MalformedTable("carrier size must be >= 1")
    masks = sorted({_coerce_mask(u, carrier_size) for u in opens})
    family = set(masks)
    full = (1 << carrier_size) - 1
    if 0 not in family or full not in family:
        raise MissingEmptyOrFull()
    for u, v in itertools.combinations(masks, 2):
        if (u | v) not in family:
            raise NotClosedUnderUnion(u, v)
        if (u & v) not in family:
            raise NotClosedUnderIntersection(u, v)
    return FiniteTopology(carrier_size=carrier_size, opens=tuple(masks))


def discrete_topology(n: int) -> FiniteTopology:
    return FiniteTopology(carrier_size=n, opens=tuple(range(1 << n)))


def indiscrete_topology(n: int) -> FiniteTopology:
    return FiniteTopology(carrier_size=n, opens=(0, (1 << n) - 1))


def is_open(t: FiniteTopology, mask: int) -> bool:
    return mask in set(t.opens)


def is_closed(t: FiniteTopology, mask: int) -> bool:
    return (t.full_mask & ~mask) in set(t.opens)


def closed_sets(t: FiniteTopology) -> tuple[int, ...]:
    full = t.full_mask
    return tuple(sorted(full & ~u for u in t.opens))


def interior(t: FiniteTopology, mask: int) -> int:
    out = 0
    for u in t.opens:
        if u & ~mask == 0:
            out |= u
    return out


def closure(t: FiniteTopology, mask: int) -> int:
    """Smallest closed superset: complement of the interior of the complement."""
    return t.full_mask & ~interior(t, t.full_mask & ~mask)


@lru_cache(maxsize=None)
def minimal_neighborhoods(t: FiniteTopology) -> tuple[int, ...]:
    """min_nbhd[x] = intersection of all opens containing x (itself open)."""
    out = []
    for x in range(t.carrier_size):
        acc = t.full_mask
        for u in t.opens:
            if u >> x & 1:
                acc &= u
        out.append(acc)
    return tuple(out)


def is_hausdorff(t: FiniteTopology) -> bool:
    """Points separated by disjoint opens; on finite carriers this forces
    the discrete topology (singleton minimal neighborhoods)."""
    nbhd = minimal_neighborhoods(t)
    for x in range(t.carrier_size):
        for y in range(x + 1, t.carrier_size):
            if nbhd[x] & nbhd[y]:
                return False
    return True


def is_discrete(t: FiniteTopology) -> bool:
    return len(t.opens) == 1 << t.carrier_size


def is_compact(t: FiniteTopology) -> bool:
    """Degenerate on finite carriers: any open cover is already finite, so
    the only content is that the family covers the space at all."""
    acc = 0
    for u in t.opens:
        acc |= u
    return acc == t.full_mask


def is_locally_compact(t: FiniteTopology) -> bool:
    """Degenerate on finite carriers: the whole space is a compact
    neighborhood of every point."""
    return is_compact(t)


def all_topologies(n: int, cap: int = TOPOLOGY_ENUM_CAP) -> list[FiniteTopology]:
    """Every topology on n labeled points, via minimal-neighborhood systems.

    A function N with x in N(x) and (y in N(x) implies N(y) <= N(x)) is
    exactly a system of minimal neighborhoods; the opens are the unions
    of N-values. Counts grow fast (6942 already at n = 5), hence the cap.
    """
    if n < 1:
        raise MalformedTable("carrier size must be >= 1")
    if n > cap:
        raise CapExceeded(n, cap)
    # candidate masks for N(x): all masks containing bit x, ascending
    candidates = [
        sorted(mask for mask in range(1 << n) if mask >> x & 1)
        for x in range(n)
    ]
    out: list[FiniteTopology] = []
    chosen = [0] * n

    def consistent(x: int) -> bool:
        nx = chosen[x]
        for y in range(x):
            ny = chosen[y]
            if nx >> y & 1 and ny & ~nx:
                return False
            if ny >> x & 1 and nx & ~ny:
                return False
        return True

    def fill(x: int):
        if x == n:
            opens = tuple(
                u for u in range(1 << n)
                if all(chosen[p] & ~u == 0 for p in points_of(u))
            )
            out.append(FiniteTopology(carrier_size=n, opens=opens))
            return
        for mask in candidates[x]:
            chosen[x] = mask
            if consistent(x):
                fill(x + 1)

    fill(0)
    return out


@dataclass(frozen=True)
class TopologicalBinaryGSpace:
    """A binary action paired with a topology on its carrier.

    The acting group always carries the discrete topology. Continuity is
    not forced at construction so that is_continuous can report witnesses;
    the theorem checks below refuse non-continuous models instead.
    """

    action: BinaryAction
    topology: FiniteTopology


def make_space(action: BinaryAction, topology: FiniteTopology) -> TopologicalBinaryGSpace:
    if action.carrier_size != topology.carrier_size:
        raise ShapeMismatch(
            f"action carrier {action.carrier_size} != topology carrier {topology.carrier_size}")
    return TopologicalBinaryGSpace(action=action, topology=topology)


def is_continuous(s: TopologicalBinaryGSpace):
    """True, or the first open V (ascending bitmask) whose preimage under
    the action is not open in discrete(G) x X x X.

    Openness of the preimage is checked through minimal neighborhoods:
    every (g, x, x') that lands in V must have g({x's nbhd}, {x''s nbhd})
    inside V. Compare the result with ``is True``.
    """
    a = s.action
    t = s.topology
    nbhd = minimal_neighborhoods(t)
    m = a.carrier_size
    for v in t.opens:
        for g in a.group.elements():
            tg = a.table[g]
            for x in range(m):
                for xp in range(m):
                    if not v >> tg[x][xp] & 1:
                        continue
                    ok = all(
                        v >> tg[u][w] & 1
                        for u in points_of(nbhd[x])
                        for w in points_of(nbhd[xp])
                    )
                    if not ok:
                        return v
    return True


def is_continuous_map(src: FiniteTopology, dst: FiniteTopology, f) -> bool:
    """Plain continuity of f: src -> dst (preimages of opens are open)."""
    mapping = tuple(int(v) for v in f)
    if len(mapping) != src.carrier_size:
        raise ShapeMismatch(f"map has length {len(mapping)}, expected {src.carrier_size}")
    src_opens = set(src.opens)
    for v in dst.opens:
        pre = 0
        for x, fx in enumerate(mapping):
            if v >> fx & 1:
                pre |= 1 << x
        if pre not in src_opens:
            return False
    return True


def _require_continuous(s: TopologicalBinaryGSpace):
    witness = is_continuous(s)
    if witness is not True:
        raise NotContinuous(witness)


def _require_distributive(a: BinaryAction):
    witness = is_distributive(a)
    if witness is not True:
        raise NotDistributive(witness)


def check_guu_open(s: TopologicalBinaryGSpace, u_mask: int) -> bool:
    """Is G(U, U) open for the open set U?"""
    if not is_open(s.topology, u_mask):
        raise MalformedTable(f"bitmask {u_mask} is not open in this topology")
    pts = points_of(u_mask)
    image = 0
    for g in s.action.group.elements():
        tg = s.action.table[g]
        for x in pts:
            for y in pts:
                image |= 1 << tg[x][y]
    return is_open(s.topology, image)


def check_gaa_closed(s: TopologicalBinaryGSpace, a_mask: int) -> bool:
    """Is G(A, A) closed for the closed set A?"""
    if not is_closed(s.topology, a_mask):
        raise MalformedTable(f"bitmask {a_mask} is not closed in this topology")
    pts = points_of(a_mask)
    image = 0
    for g in s.action.group.elements():
        tg = s.action.table[g]
        for x in pts:
            for y in pts:
                image |= 1 << tg[x][y]
    return is_closed(s.topology, image)


def check_ka_closed(s: TopologicalBinaryGSpace, K: Iterable[int], a_mask: int) -> bool:
    """Is K(A) = {g(x, x) : g in K, x in A} closed for the closed set A?

    Requires a distributive action; with K the whole group this is the
    saturation of A, the union of the orbits of its points.
    """
    _require_distributive(s.action)
    if not is_closed(s.topology, a_mask):
        raise MalformedTable(f"bitmask {a_mask} is not closed in this topology")
    image = 0
    for g in K:
        tg = s.action.table[g]
        for x in points_of(a_mask):
            image |= 1 << tg[x][x]
    return is_closed(s.topology, image)


def quotient_topology(s: TopologicalBinaryGSpace) -> FiniteTopology:
    """Finest topology on the orbit classes making the projection continuous:
    a class set is open iff its preimage is open."""
    _require_distributive(s.action)
    _require_continuous(s)
    space = orbit_space(s.action)
    k = len(space.classes)
    src_opens = set(s.topology.opens)
    opens = []
    for cmask in range(1 << k):
        pre = 0
        for x, cls in enumerate(space.projection):
            if cmask >> cls & 1:
                pre |= 1 << x
        if pre in src_opens:
            opens.append(cmask)
    qt = FiniteTopology(carrier_size=k, opens=tuple(sorted(opens)))
    try:
        validate_topology(k, qt.opens)
    except Exception as exc:  # preimage commutes with union/intersection
        raise InternalInconsistency(f"quotient opens do not form a topology: {exc}") from exc
    return qt


@dataclass(frozen=True)
class ProjectionChecks:
    closed: bool
    proper: bool


def check_projection_closed_proper(s: TopologicalBinaryGSpace) -> ProjectionChecks:
    """Does the orbit projection send closed sets to closed sets?

    Properness adds compact fibers, which is automatic here, so proper
    simply coincides with closed on finite carriers.
    """
    _require_distributive(s.action)
    _require_continuous(s)
    space = orbit_space(s.action)
    qt = quotient_topology(s)
    closed = True
    for amask in closed_sets(s.topology):
        img = 0
        for x in points_of(amask):
            img |= 1 << space.projection[x]
        if not is_closed(qt, img):
            closed = False
            break
    return ProjectionChecks(closed=closed, proper=closed)


@dataclass(frozen=True)
class QuotientChecks:
    hausdorff: bool
    compact: bool
    locally_compact: bool
    compactness_degenerate: bool = True


def check_quotient_hausdorff_compact(s: TopologicalBinaryGSpace) -> QuotientChecks:
    """Separation and compactness of the orbit space.

    compact and locally_compact are degenerately true for finite carriers;
    the flag says so explicitly so reports cannot oversell them.
    """
    qt = quotient_topology(s)
    return QuotientChecks(
        hausdorff=is_hausdorff(qt),
        compact=is_compact(qt),
        locally_compact=is_locally_compact(qt),
        compactness_degenerate=True,
    )


@dataclass(frozen=True)
class ProbeRecord:
    model: str
    check: str
    outcome: bool
    hypotheses_met: bool

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "check": self.check,
            "outcome": self.outcome,
            "hypotheses_met": self.hypotheses_met,
        }


def run_topology_battery(
    action: BinaryAction,
    topology: FiniteTopology,
    model_id: str | None = None,
    include_probes: bool = True,
) -> list[ProbeRecord]:
    """Run every applicable check on a continuous model and enforce the
    assertion discipline.

    Asserted on every model (distributive case): diagonal maps are
    homeomorphisms, saturations of closed sets are closed, the projection
    is closed and proper, and the degenerate compactness facts. Asserted
    only on Hausdorff (= discrete) models: G(U, U) open, G(A, A) closed,
    and Hausdorffness of the quotient; elsewhere those are recorded as
    probes (dropped entirely when include_probes is false). An asserted
    check that comes back false raises InternalInconsistency.
    """
    s = make_space(action, topology)
    _require_continuous(s)
    haus = is_hausdorff(topology)
    if model_id is None:
        flat = ",".join(str(v) for sl in action.table for row in sl for v in row)
        model_id = (f"group={action.group.name};carrier={action.carrier_size};"
                    f"table={flat};opens={list(topology.opens)}")
    records: list[ProbeRecord] = []

    def add(check: str, outcome: bool, asserted: bool, hypotheses_met: bool):
        if asserted and not outcome:
            raise InternalInconsistency(f"{model_id}: asserted check {check} came back false")
        if hypotheses_met or include_probes:
            records.append(ProbeRecord(model=model_id, check=check,
                                       outcome=outcome, hypotheses_met=hypotheses_met))

    add("guu_open",
        all(check_guu_open(s, u) for u in topology.opens),
        asserted=haus, hypotheses_met=haus)
    add("gaa_closed",
        all(check_gaa_closed(s, c) for c in closed_sets(topology)),
        asserted=haus, hypotheses_met=haus)

    if is_distributive(action) is True:
        from .orbits import delta  # local import avoids a cycle at module load

        homeo = True
        for g in action.group.elements():
            d = delta(action, g)
            dinv = delta(action, action.group.inv(g))
            if not (is_continuous_map(topology, topology, d)
                    and is_continuous_map(topology, topology, dinv)):
                homeo = False
                break
        add("delta_homeomorphism", homeo, asserted=True, hypotheses_met=True)

        everyone = list(action.group.elements())
        add("ka_closed",
            all(check_ka_closed(s, everyone, c) for c in closed_sets(topology)),
            asserted=True, hypotheses_met=True)

        proj = check_projection_closed_proper(s)
        add("projection_closed", proj.closed, asserted=True, hypotheses_met=True)
        add("projection_proper", proj.proper, asserted=True, hypotheses_met=True)

        quot = check_quotient_hausdorff_compact(s)
        add("quotient_hausdorff", quot.hausdorff, asserted=haus, hypotheses_met=haus)
        add("quotient_compact", quot.compact, asserted=True, hypotheses_met=True)
        add("quotient_locally_compact", quot.locally_compact, asserted=True, hypotheses_met=True)

    return records


# --- serialization -----------------------------------------------------------

def topology_to_json(t: FiniteTopology) -> dict:
    return {"size": t.carrier_size, "opens": [points_of(u) for u in t.opens]}


def topology_from_json(data: dict) -> FiniteTopology:
    if not isinstance(data, dict) or "size" not in data or "opens" not in data:
        raise MalformedTable("topology record must be an object with 'size' and 'opens'")
    return validate_topology(int(data["size"]), data["opens"])
