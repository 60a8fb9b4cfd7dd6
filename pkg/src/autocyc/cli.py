"""Command line interface: build, analyze, verify, catalog.

Human-readable summaries go to stdout; machine-readable payloads are only
written to --out files, so scripts never have to parse prose.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import catalog as cat
from . import verify as ver
from .actions import (
    DEFAULT_ACTION_CAP,
    AutAction,
    full_aut_brute,
    inner_generators,
    load_action,
    action_to_json,
    trivial_action,
)
from .delta import analyze, build_delta, graph_to_json, render
from .errors import AutocycError
from .perm import (
    DEFAULT_ORDER_BOUND,
    FiniteGroup,
    group_to_json,
    load_group,
)

ENV_ORDER_BOUND = "AUTOCYC_ORDER_BOUND"


@dataclass
class RunConfig:
    group_source: str
    action_source: str = "trivial"
    fmt: str = "json"
    out: str | None = None
    order_bound: int = DEFAULT_ORDER_BOUND
    action_cap: int = DEFAULT_ACTION_CAP
    lattice_cap: int = 512

    def __post_init__(self) -> None:
        if self.order_bound < 1 or self.action_cap < 1 or self.lattice_cap < 1:
            raise ValueError("caps must be positive")


def _order_bound(args: argparse.Namespace) -> int:
    if args.order_bound is not None:
        return args.order_bound
    env = os.environ.get(ENV_ORDER_BOUND)
    return int(env) if env else DEFAULT_ORDER_BOUND


def _resolve_group(config: RunConfig) -> tuple[FiniteGroup, cat.CatalogEntry | None]:
    src = config.group_source
    if src.startswith("catalog:"):
        entry = cat.get_entry(src.split(":", 1)[1])
        return entry.group, entry
    return load_group(src, bound=config.order_bound), None


def _resolve_action(
    config: RunConfig, group: FiniteGroup, entry: cat.CatalogEntry | None
) -> AutAction:
    src = config.action_source
    if src.startswith("file:"):
        return load_action(group, src.split(":", 1)[1], cap=config.action_cap)
    if entry is not None and src in entry.action_names():
        return entry.action(src)
    if src == "trivial":
        return trivial_action(group, cap=config.action_cap)
    if src == "inner":
        return inner_generators(group, cap=config.action_cap)
    if src == "full":
        return full_aut_brute(group, cap=config.action_cap)
    raise AutocycError(f"unknown action source {src!r} for this group")


def _write(out: str | None, payload: str) -> None:
    if out is not None:
        Path(out).write_text(payload, encoding="utf-8")


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        group_source=args.group,
        action_source=args.aut,
        fmt=getattr(args, "format", "json"),
        out=getattr(args, "out", None),
        order_bound=_order_bound(args),
        action_cap=args.action_cap,
        lattice_cap=args.lattice_cap,
    )


def cmd_build(args: argparse.Namespace) -> int:
    config = _config(args)
    group, entry = _resolve_group(config)
    action = _resolve_action(config, group, entry)
    graph = build_delta(group, action)
    payload = render(graph, config.fmt, analyze(graph) if config.fmt == "json" else None)
    _write(config.out, payload)
    print(
        f"{group.name} ({action.kind}): {graph.n} vertices, "
        f"{graph.edge_count()} edges"
        + (f" -> {config.out}" if config.out else "")
    )
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    config = _config(args)
    group, entry = _resolve_group(config)
    action = _resolve_action(config, group, entry)
    graph = build_delta(group, action)
    report = analyze(graph)
    payload = json.dumps(graph_to_json(graph, report), indent=2, sort_keys=True) + "\n"
    _write(config.out, payload)
    diam = max(report.diameters, default=0)
    print(
        f"{group.name} ({action.kind}): {graph.n} vertices, "
        f"{len(report.components)} component(s), diameter {diam}, "
        f"universal {len(report.universal)}, isolated {len(report.isolated)}, "
        f"complete={report.is_complete}, empty={report.is_empty}"
        + (f" -> {config.out}" if config.out else "")
    )
    return 0


_SELECTOR_RULES = {
    "A": ("A",),
    "B": ("B",),
    "C": ("C",),
    "D": ("D",),
    "E": ("E",),
    "F": ("F",),
    "G": ("G",),
    "H": ("H",),
    "lemmas": ("diam6", "dominating", "nilpotency"),
    "all": ver.RULE_IDS,
}


def cmd_verify(args: argparse.Namespace) -> int:
    selector = "all" if args.all else args.theorem
    if selector is None:
        print("verify: choose --all or --theorem SELECTOR", file=sys.stderr)
        return 2
    rules = _SELECTOR_RULES.get(selector)
    if rules is None:
        print(f"verify: unknown selector {selector!r}", file=sys.stderr)
        return 2

    strict = False
    if args.corpus == "catalog" and args.group is None:
        pairs = cat.corpus()
    else:
        if args.group is None:
            print("verify: need --corpus catalog or --group", file=sys.stderr)
            return 2
        config = _config(args)
        group, entry = _resolve_group(config)
        action = _resolve_action(config, group, entry)
        classification = entry.metadata if entry is not None else None
        pairs = [
            ver.CorpusPair(
                label=f"{group.name}:{action.kind}",
                group=group,
                action=action,
                classification=classification,
            )
        ]
        # explicitly requesting one gated rule on one pair fails loudly
        strict = selector in ("A", "B", "C", "D", "E", "F", "G", "H")

    results = ver.run_suite(pairs, rules, strict=strict)
    bad = ver.failures(results)
    payload = json.dumps([r.as_dict() for r in results], indent=2, sort_keys=True) + "\n"
    _write(args.out, payload)

    checked = sum(1 for r in results if r.verdict.hypotheses_hold)
    print(
        f"verify {selector}: {len(results)} verdicts over {len(pairs)} pair(s), "
        f"{checked} with hypotheses met, {len(bad)} failure(s)"
    )
    for r in bad:
        print(f"  FAIL {r.label} rule {r.verdict.theorem_id}: {r.verdict.witness}")
    return 1 if bad else 0


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "list":
        payload = json.dumps(cat.listing(), indent=2, sort_keys=True) + "\n"
        if args.out:
            _write(args.out, payload)
        for item in cat.listing():
            print(
                f"{item['key']}: order {item['order']}, degree {item['degree']}, "
                f"actions {', '.join(item['actions'])}"
            )
        return 0
    # dump
    entry = cat.get_entry(args.key)
    outdir = Path(args.dir)
    outdir.mkdir(parents=True, exist_ok=True)
    group_path = outdir / f"{entry.key}.group.json"
    group_path.write_text(
        json.dumps(group_to_json(entry.group), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    written = [str(group_path)]
    for name in entry.action_names():
        action = entry.action(name)
        path = outdir / f"{entry.key}.action.{name.replace('+', '_')}.json"
        path.write_text(
            json.dumps(action_to_json(action), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
        written.append(str(path))
    print(f"catalog dump {entry.key}: wrote {len(written)} files to {outdir}")
    return 0


def _add_common(p: argparse.ArgumentParser, with_format: bool = True) -> None:
    p.add_argument("--group", required=False, help="catalog:KEY or a group file path")
    p.add_argument(
        "--aut",
        default="trivial",
        help="trivial|inner|full|file:PATH or a catalog action name",
    )
    if with_format:
        p.add_argument("--format", choices=("json", "dot", "graphml"), default="json")
    p.add_argument("--out", default=None, help="write the machine payload here")
    p.add_argument("--order-bound", type=int, default=None)
    p.add_argument("--action-cap", type=int, default=DEFAULT_ACTION_CAP)
    p.add_argument("--lattice-cap", type=int, default=512)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autocyc",
        description=(
            "Build and analyze the orbit cyclic graph of a finite group under "
            "an automorphism action, and verify the suite of structural rules."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct a graph and export it")
    _add_common(p_build)
    p_build.set_defaults(func=cmd_build)

    p_analyze = sub.add_parser("analyze", help="construct and analyze a graph")
    _add_common(p_analyze, with_format=False)
    p_analyze.set_defaults(func=cmd_analyze)

    p_verify = sub.add_parser("verify", help="run rule verifiers")
    _add_common(p_verify, with_format=False)
    p_verify.add_argument("--theorem", default=None, help="A..H, lemmas")
    p_verify.add_argument("--all", action="store_true")
    p_verify.add_argument(
        "--corpus", default=None, choices=("catalog",), help="run over the whole catalog"
    )
    p_verify.set_defaults(func=cmd_verify)

    p_cat = sub.add_parser("catalog", help="list or dump catalog entries")
    cat_sub = p_cat.add_subparsers(dest="action", required=True)
    p_list = cat_sub.add_parser("list")
    p_list.add_argument("--out", default=None)
    p_list.set_defaults(func=cmd_catalog)
    p_dump = cat_sub.add_parser("dump")
    p_dump.add_argument("key")
    p_dump.add_argument("--dir", default=".")
    p_dump.set_defaults(func=cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AutocycError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
