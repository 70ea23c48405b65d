"""Command-line front end.

Exit codes: 0 when the requested check passes, 1 when validation or an
asserted check fails (the witness is printed), 2 for usage or IO errors.
Output is deterministic byte for byte for a given input and flag set; no
subcommand uses randomness. The BINACT_THREADS environment variable caps
worker parallelism; evaluation is currently sequential, which respects
any cap, and the variable is still validated so misuse fails loudly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .actions import (
    action_from_json,
    action_to_json,
    conjugation_coset_action,
    from_ordinary,
    induced_action,
    is_distributive,
    ordinary_from_json,
    ordinary_to_json,
    validate_action,
)
from .binops import identity_op, invertible_group, op_from_json, op_to_json, star, try_invert
from .errors import (
    BinactError,
    BudgetExceeded,
    NotContinuous,
    NotInvertible,
    TheoremViolation,
)
from .groups import builtin_group, group_from_json, group_to_json, subgroup_closure
from .orbits import orbit_report_json, orbit_space
from .search import (
    EnumerationTask,
    enumerate_actions,
    mine_counterexamples,
)
from .topology import (
    is_continuous,
    make_space,
    points_of,
    quotient_topology,
    run_topology_battery,
    topology_from_json,
    topology_to_json,
)


class CliFailure(Exception):
    """Internal: carries an exit code and a message for main() to report."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class RunConfig:
    """Validated launch parameters shared by the subcommand handlers."""

    command: str
    threads: int
    out: Path | None


def _read_json(path: str):
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise CliFailure(2, f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliFailure(2, f"invalid JSON in {path}: {exc}") from exc


def _write_text(path: Path, text: str):
    try:
        path.write_text(text)
    except OSError as exc:
        raise CliFailure(2, f"cannot write {path}: {exc.strerror or exc}") from exc


def _resolve_group(ref: str):
    """A group argument is a path if such a file exists, else a catalog name."""
    if Path(ref).is_file():
        return group_from_json(_read_json(ref))
    try:
        return builtin_group(ref)
    except BinactError:
        raise CliFailure(2, f"group {ref!r} is neither a readable file nor a known name") from None


def _load_action(path: str):
    data = _read_json(path)

    def resolver(name: str):
        rel = Path(path).parent / name
        if rel.is_file():
            return group_from_json(_read_json(str(rel)))
        return builtin_group(name)

    return action_from_json(data, group_resolver=resolver)


def _load_ordinary(path: str):
    data = _read_json(path)

    def resolver(name: str):
        rel = Path(path).parent / name
        if rel.is_file():
            return group_from_json(_read_json(str(rel)))
        return builtin_group(name)

    return ordinary_from_json(data, group_resolver=resolver)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(cfg: RunConfig, obj) -> None:
    if cfg.out is not None:
        _write_text(cfg.out, _dump(obj))


def _parse_members(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise CliFailure(2, f"expected a list of integers, got {text!r}") from None


# --- subcommand handlers ------------------------------------------------------

def _cmd_validate(cfg: RunConfig, args) -> int:
    if args.action:
        _load_action(args.action)
        print("axioms (1),(2): OK")
    elif args.group:
        g = _resolve_group(args.group)
        print(f"group axioms: OK (name={g.name} order={g.order})")
    elif args.op:
        f = op_from_json(_read_json(args.op))
        print(f"binary operation: OK (size={f.size})")
    elif args.topology:
        t = topology_from_json(_read_json(args.topology))
        print(f"topology: OK (size={t.carrier_size} opens={len(t.opens)})")
    else:
        raise CliFailure(2, "validate needs one of --action/--group/--op/--topology")
    return 0


def _cmd_distributive(cfg: RunConfig, args) -> int:
    a = _load_action(args.action)
    witness = is_distributive(a)
    if witness is True:
        print("distributive: yes")
        return 0
    print(f"distributive: no; witness (g, h, x, x', x'') = {witness}")
    return 1


def _cmd_orbits(cfg: RunConfig, args) -> int:
    a = _load_action(args.action)
    witness = is_distributive(a)
    if witness is not True:
        print(f"action is not distributive; witness (g, h, x, x', x'') = {witness}")
        print("orbit spaces are only defined for distributive actions; "
              "use the witnesses subcommand to inspect nesting")
        return 1
    space = orbit_space(a)
    print(f"classes: {len(space.classes)}")
    for i, members in enumerate(space.classes):
        print(f"class {i} (size {len(members)}): " + " ".join(str(x) for x in members))
    print("projection: " + " ".join(str(c) for c in space.projection))
    _emit(cfg, orbit_report_json(space))
    return 0


def _cmd_quotient(cfg: RunConfig, args) -> int:
    a = _load_action(args.action)
    t = topology_from_json(_read_json(args.topology))
    s = make_space(a, t)
    w = is_continuous(s)
    if w is not True:
        raise NotContinuous(w)
    qt = quotient_topology(s)
    print(f"quotient classes: {qt.carrier_size}")
    print("quotient opens: " + "; ".join(
        "{" + ",".join(str(p) for p in points_of(u)) + "}" for u in qt.opens))
    for rec in run_topology_battery(a, t, model_id=f"action={args.action};topology={args.topology}"):
        print(f"check={rec.check} outcome={'true' if rec.outcome else 'false'} "
              f"hypotheses_met={'true' if rec.hypotheses_met else 'false'}")
    _emit(cfg, topology_to_json(qt))
    return 0


def _cmd_monoid(cfg: RunConfig, args) -> int:
    if args.size is not None:
        ops = invertible_group(args.size, cap=args.cap)
        print(f"carrier={args.size} invertible_operations={len(ops)}")
        return 0
    if not args.op:
        raise CliFailure(2, "monoid needs --size or --op")
    f = op_from_json(_read_json(args.op))
    if args.star:
        g = op_from_json(_read_json(args.star))
        result = star(f, g)
        print(f"star: size={result.size}")
        sys.stdout.write(_dump(op_to_json(result)))
        _emit(cfg, op_to_json(result))
        return 0
    if args.invert:
        try:
            inv = try_invert(f)
        except NotInvertible as exc:
            print(f"not invertible: row {exc.row} is not a bijection")
            return 1
        check = star(f, inv) == identity_op(f.size) and star(inv, f) == identity_op(f.size)
        print(f"invertible: yes (two-sided check {'passed' if check else 'failed'})")
        sys.stdout.write(_dump(op_to_json(inv)))
        _emit(cfg, op_to_json(inv))
        return 0 if check else 1
    raise CliFailure(2, "monoid --op needs --invert or --star")


def _cmd_enumerate(cfg: RunConfig, args) -> int:
    g = _resolve_group(args.group)
    task = EnumerationTask(
        group=g,
        carrier_size=args.carrier,
        require_distributive=args.require_distributive,
        dedupe=args.dedupe,
        node_budget=args.node_budget,
        time_budget_s=args.time_budget,
    )
    try:
        result = enumerate_actions(task)
    except BudgetExceeded as exc:
        partial = exc.partial
        print(f"non-exhaustive: {exc}")
        if partial is not None:
            print(f"raw_count={partial.raw_count} canonical_count={partial.canonical_count} "
                  f"distributive_count={partial.distributive_count} exhaustive=no")
        return 1
    print(f"raw_count={result.raw_count} canonical_count={result.canonical_count} "
          f"distributive_count={result.distributive_count} exhaustive=yes")
    if cfg.out is not None:
        lines = [json.dumps(action_to_json(a)) for a in result.actions]
        summary = {
            "raw_count": result.raw_count,
            "canonical_count": result.canonical_count,
            "distributive_count": result.distributive_count,
            "witnesses": None,
            "exhaustive": result.exhaustive,
        }
        lines.append(json.dumps(summary))
        _write_text(cfg.out, "\n".join(lines) + "\n")
    return 0


def _cmd_topology_check(cfg: RunConfig, args) -> int:
    a = _load_action(args.action)
    t = topology_from_json(_read_json(args.topology))
    model_id = f"action={args.action};topology={args.topology}"
    records = run_topology_battery(
        a, t, model_id=model_id, include_probes=args.probe_non_hausdorff)
    for rec in records:
        print(f"check={rec.check} outcome={'true' if rec.outcome else 'false'} "
              f"hypotheses_met={'true' if rec.hypotheses_met else 'false'}")
    if cfg.out is not None:
        _write_text(cfg.out, "\n".join(json.dumps(r.to_json()) for r in records) + "\n")
    return 0


def _cmd_witnesses(cfg: RunConfig, args) -> int:
    g = _resolve_group(args.group)
    task = EnumerationTask(group=g, carrier_size=args.carrier,
                           node_budget=args.node_budget, time_budget_s=args.time_budget)
    result = enumerate_actions(task)
    report = mine_counterexamples(result)
    w = report.intersecting_orbits
    if w is None:
        print("intersecting_orbits: none at this scale")
    else:
        print(f"intersecting_orbits: x={w.x} x'={w.xp} "
              f"sets {sorted(w.set_x)} vs {sorted(w.set_xp)} "
              f"action_table={[[list(r) for r in sl] for sl in w.action.table]}")
    u = report.non_bi_invariant_union
    if u is None:
        print("non_bi_invariant_union: none at this scale")
    else:
        print(f"non_bi_invariant_union: A={sorted(u.set_a)} B={sorted(u.set_b)} "
              f"G(AuB,AuB)={sorted(u.union_image)} "
              f"action_table={[[list(r) for r in sl] for sl in u.action.table]}")
    print(f"actions_scanned: {report.actions_scanned}")
    _emit(cfg, report.to_json())
    return 0


def _cmd_induce(cfg: RunConfig, args) -> int:
    a = _load_action(args.action)
    o = induced_action(a, args.point)
    print(f"induced ordinary action at t={args.point}: group={o.group.name} carrier={o.carrier_size}")
    sys.stdout.write(_dump(ordinary_to_json(o)))
    _emit(cfg, ordinary_to_json(o))
    return 0


def _cmd_embed(cfg: RunConfig, args) -> int:
    o = _load_ordinary(args.ordinary)
    a = from_ordinary(o)
    print(f"embedded binary action: group={a.group.name} carrier={a.carrier_size}")
    sys.stdout.write(_dump(action_to_json(a)))
    _emit(cfg, action_to_json(a))
    return 0


def _cmd_conjugation(cfg: RunConfig, args) -> int:
    g = _resolve_group(args.group)
    if args.subgroup:
        members = _parse_members(args.subgroup)
    elif args.generators:
        members = sorted(subgroup_closure(g, _parse_members(args.generators)))
    else:
        raise CliFailure(2, "conjugation needs --subgroup or --generators")
    a = conjugation_coset_action(g, members)
    print(f"conjugation-coset action: subgroup_size={a.group.order} carrier={a.carrier_size} "
          f"distributive=yes")
    sys.stdout.write(_dump(action_to_json(a)))
    _emit(cfg, action_to_json(a))
    return 0


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binact",
        description="Binary actions of finite groups: validation, orbits, "
                    "quotients, topology checks, enumeration.",
    )
    parser.add_argument("--version", action="version", version=f"binact {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a group/op/action/topology file")
    p.add_argument("--action")
    p.add_argument("--group")
    p.add_argument("--op")
    p.add_argument("--topology")

    p = sub.add_parser("distributive", help="check the distributivity law")
    p.add_argument("--action", required=True)

    p = sub.add_parser("orbits", help="orbit classes and projection of a distributive action")
    p.add_argument("--action", required=True)
    p.add_argument("--out")

    p = sub.add_parser("quotient", help="quotient topology of the orbit space")
    p.add_argument("--action", required=True)
    p.add_argument("--topology", required=True)
    p.add_argument("--out")

    p = sub.add_parser("monoid", help="star-monoid utilities")
    p.add_argument("--size", type=int)
    p.add_argument("--cap", type=int, default=4)
    p.add_argument("--op")
    p.add_argument("--invert", action="store_true")
    p.add_argument("--star")
    p.add_argument("--out")

    p = sub.add_parser("enumerate", help="enumerate all binary actions of a group")
    p.add_argument("--group", required=True)
    p.add_argument("--carrier", type=int, required=True)
    p.add_argument("--require-distributive", action="store_true")
    p.add_argument("--dedupe", action="store_true")
    p.add_argument("--node-budget", type=int, default=2_000_000)
    p.add_argument("--time-budget", type=float, default=120.0)
    p.add_argument("--out")

    p = sub.add_parser("topology-check", help="run the theorem battery on a model")
    p.add_argument("--action", required=True)
    p.add_argument("--topology", required=True)
    p.add_argument("--probe-non-hausdorff", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("witnesses", help="mine counterexamples from an enumeration")
    p.add_argument("--group", required=True)
    p.add_argument("--carrier", type=int, required=True)
    p.add_argument("--node-budget", type=int, default=2_000_000)
    p.add_argument("--time-budget", type=float, default=120.0)
    p.add_argument("--out")

    p = sub.add_parser("induce", help="ordinary action induced at a carrier point")
    p.add_argument("--action", required=True)
    p.add_argument("--point", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("embed", help="embed an ordinary action as a binary action")
    p.add_argument("--ordinary", required=True)
    p.add_argument("--out")

    p = sub.add_parser("conjugation", help="conjugation-coset action of a subgroup")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup")
    p.add_argument("--generators")
    p.add_argument("--out")

    return parser


_HANDLERS = {
    "validate": _cmd_validate,
    "distributive": _cmd_distributive,
    "orbits": _cmd_orbits,
    "quotient": _cmd_quotient,
    "monoid": _cmd_monoid,
    "enumerate": _cmd_enumerate,
    "topology-check": _cmd_topology_check,
    "witnesses": _cmd_witnesses,
    "induce": _cmd_induce,
    "embed": _cmd_embed,
    "conjugation": _cmd_conjugation,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse signals usage errors with code 2
        return int(exc.code or 0)

    threads_raw = os.environ.get("BINACT_THREADS")
    threads = 1
    if threads_raw is not None:
        try:
            threads = int(threads_raw)
        except ValueError:
            threads = 0
        if threads < 1:
            print(f"BINACT_THREADS must be a positive integer, got {threads_raw!r}",
                  file=sys.stderr)
            return 2

    cfg = RunConfig(
        command=args.command,
        threads=threads,
        out=Path(args.out) if getattr(args, "out", None) else None,
    )
    try:
        return _HANDLERS[args.command](cfg, args)
    except CliFailure as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except NotContinuous as exc:
        print(f"not continuous: witness open {{{','.join(str(p) for p in points_of(exc.witness_open))}}}")
        return 1
    except TheoremViolation as exc:
        print(f"theorem check failed (this is a bug): {exc}", file=sys.stderr)
        return 1
    except BinactError as exc:
        print(f"{type(exc).__name__}: {exc}")
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
