"""Command-line front end: generate, compute, check, find, colour, trace, verify.

Every subcommand speaks the hypergraph JSON interchange format
({"n": ..., "edges": [[...]]}) on stdin/file and emits JSON on stdout.
Exit codes: 0 success/true, 1 found-false (failed check, nothing found,
procedure not applicable), 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import acceptance
from .colouring import (
    Colouring,
    FailingEdge,
    chi_link,
    chi_strong,
    colouring_from_dict,
    colouring_to_dict,
    is_c_strong,
    rainbow_forced,
)
from .generators import (
    complete_uniform,
    coordinate_pair_family,
    kernel_augmented,
    random_t_intersecting,
    sunflower_gen,
)
from .hypergraph import (
    Hypergraph,
    InvalidHypergraph,
    hypergraph_from_dict,
    hypergraph_to_dict,
    find_sunflower,
    max_matching_at_least,
)
from .procedures import (
    TraceParams,
    best_link_extension_colouring,
    prune_trace,
    sunflower_petal_colouring,
)
from .structures import find_bromeliad, is_k_split_degenerate, regions


class CliError(Exception):
    """Usage or validation problem; maps to exit code 2."""


def _read_hypergraph(path: str) -> Hypergraph:
    try:
        if path == "-":
            raw = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                raw = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON: {exc}") from exc
    try:
        return hypergraph_from_dict(data)
    except (ValueError, InvalidHypergraph) as exc:
        raise CliError(f"invalid hypergraph: {exc}") from exc


def _read_colouring(path: str) -> Colouring:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON: {exc}") from exc
    try:
        return colouring_from_dict(data)
    except ValueError as exc:
        raise CliError(f"invalid colouring: {exc}") from exc


def _emit(obj: object) -> None:
    print(json.dumps(obj))


def _parse_index_list(text: str, m: int) -> list[int]:
    if not text:
        return []
    try:
        indices = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise CliError(f"bad index list {text!r}") from exc
    for i in indices:
        if not (0 <= i < m):
            raise CliError(f"edge index {i} out of range 0..{m - 1}")
    return indices


def _cmd_gen(args) -> int:
    if args.family == "complete":
        h = complete_uniform(args.n, args.k)
    elif args.family == "c42":
        h, _ = coordinate_pair_family(args.t, args.l, args.K)
    elif args.family == "kernel-aug":
        h = kernel_augmented(_read_hypergraph(args.graph), args.t)
    elif args.family == "sunflower":
        h = sunflower_gen(args.p, args.kernel_size, args.petal_size)
    elif args.family == "random":
        h = random_t_intersecting(args.n, args.m, args.t, args.seed)
    else:  # pragma: no cover - argparse prevents this
        raise CliError(f"unknown generator {args.family}")
    _emit(hypergraph_to_dict(h))
    return 0


def _cmd_chi(args) -> int:
    h = _read_hypergraph(args.input)
    if args.method == "auto" and rainbow_forced(h, args.c):
        witness = Colouring(colours=tuple(range(h.n)), k=max(h.n, 1) if h.n else 0)
        value, method = h.n, "rainbow_forced"
    else:
        value, witness = chi_strong(h, args.c)
        method = "search"
    if args.format == "tsv":
        sys.stdout.write(f"chi\tmethod\n{value}\t{method}\n")
    else:
        _emit({"chi": value, "witness": colouring_to_dict(witness), "method": method})
    return 0


def _cmd_chi_link(args) -> int:
    h = _read_hypergraph(args.input)
    if args.t > h.n:
        raise CliError(f"t={args.t} exceeds the vertex count {h.n}")
    value, s = chi_link(h, args.t, args.l)
    _emit({"chi": value, "s": list(s)})
    return 0


def _cmd_check(args) -> int:
    h = _read_hypergraph(args.input)
    col = _read_colouring(args.colouring)
    if col.n != h.n:
        raise CliError(f"colouring covers {col.n} vertices, hypergraph has {h.n}")
    verdict = is_c_strong(h, col, args.c)
    if isinstance(verdict, FailingEdge):
        _emit(
            {
                "ok": False,
                "failing_edge": list(verdict.edge),
                "edge_index": verdict.index,
                "colours_seen": verdict.colours_seen,
                "colours_required": verdict.colours_required,
            }
        )
        return 1
    _emit({"ok": True, "edge_colour_counts": list(verdict.edge_colour_counts)})
    return 0


def _cmd_find(args) -> int:
    h = _read_hypergraph(args.input)
    if args.what == "sunflower":
        sf = find_sunflower(h, args.petals, args.max_kernel)
        if sf is None:
            _emit({"found": False})
            return 1
        _emit(
            {
                "found": True,
                "edge_indices": list(sf.edge_indices),
                "kernel": list(sf.kernel),
                "petals": [list(p) for p in sf.petals],
            }
        )
        return 0
    if args.what == "bromeliad":
        compatible = None
        if args.compatible is not None:
            idx = _parse_index_list(args.compatible, h.m)
            compatible = [h.edges[i] for i in idx]
            if args.k is None:
                raise CliError("--compatible requires --k")
        brom = find_bromeliad(h, h.edges, args.b, compatible_seq=compatible, k=args.k)
        if brom is None:
            _emit({"found": False})
            return 1
        _emit({"found": True, "bromeliad": brom.to_dict()})
        return 0
    if args.what == "matching":
        ok = max_matching_at_least(h, args.size)
        _emit({"found": ok, "size": args.size})
        return 0 if ok else 1
    raise CliError(f"unknown find target {args.what}")  # pragma: no cover


def _cmd_regions(args) -> int:
    h = _read_hypergraph(args.input)
    idx = _parse_index_list(args.edges, h.m)
    part = regions(h, [h.edges[i] for i in idx])
    _emit(part.to_dict())
    return 0


def _cmd_split_check(args) -> int:
    h = _read_hypergraph(args.input)
    idx = _parse_index_list(args.edges, h.m)
    result = is_k_split_degenerate(h, [h.edges[i] for i in idx], args.k)
    if result.ok:
        _emit({"ok": True})
        return 0
    _emit({"ok": False, "failing_index": result.failing_index, "reason": result.reason})
    return 1


def _cmd_colour(args) -> int:
    h = _read_hypergraph(args.input)
    if args.method == "thm41":
        if args.c is None:
            raise CliError("method thm41 requires --c")
        try:
            result = best_link_extension_colouring(h, args.c)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        if result is None:
            _emit({"applicable": False})
            return 1
        _emit(
            {
                "applicable": True,
                "colouring": colouring_to_dict(result.colouring),
                "certificate": {
                    "strength": args.c,
                    "s": list(result.s),
                    "link_chi": result.link_chi,
                    "colours": result.colouring.k,
                },
            }
        )
        return 0
    if args.method == "thm44":
        if args.t is None or args.l is None:
            raise CliError("method thm44 requires --t and --l")
        try:
            result = sunflower_petal_colouring(h, args.t, args.l)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        if result is None:
            _emit({"applicable": False})
            return 1
        _emit(
            {
                "applicable": True,
                "colouring": colouring_to_dict(result.colouring),
                "certificate": {
                    "strength": args.t + args.l,
                    "kernel": list(result.sunflower.kernel),
                    "sunflower_edges": list(result.sunflower.edge_indices),
                    "link_values": list(result.link_values),
                    "colours": result.colouring.k,
                },
            }
        )
        return 0
    raise CliError(f"unknown colouring method {args.method}")  # pragma: no cover


def _cmd_trace(args) -> int:
    h = _read_hypergraph(args.input)
    try:
        thresholds = tuple(int(part) for part in args.thresholds.split(","))
    except ValueError as exc:
        raise CliError(f"bad threshold list {args.thresholds!r}") from exc
    try:
        params = TraceParams(
            t=args.t, l=args.l, p=args.p, thresholds=thresholds, step_cap=args.step_cap
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    result = prune_trace(h, params)
    for step in result.steps:
        _emit(
            {
                "step": step.index,
                "bromeliad": step.bromeliad.to_dict(),
                "pruned_position": step.pruned_position,
                "pruned_edge": list(step.pruned_edge),
                "petal": list(step.petal),
                "sub_edge_indices": list(step.sub_edge_indices),
                "chi_sub": step.chi_sub,
                "threshold": step.threshold,
            }
        )
    summary: dict = {"initial_chi": result.initial_chi, "steps": len(result.steps)}
    if result.contradiction is not None:
        c = result.contradiction
        summary["result"] = "contradiction"
        summary["positions"] = list(c.positions)
        summary["base_step"] = c.base_step
        summary["diagonal"] = c.diagonal.to_dict()
        summary["reduced"] = c.reduced.to_dict()
        summary["comparison"] = c.comparison
    elif result.failure is not None:
        summary["result"] = "failure"
        summary["failure"] = {"kind": result.failure[0], "step": result.failure[1]}
        if result.certificate is not None:
            summary["certificate"] = colouring_to_dict(result.certificate)
            summary["certificate_edges"] = list(result.certificate_edge_indices or ())
    else:
        summary["result"] = "certificate"
        summary["certificate"] = colouring_to_dict(result.certificate)
    _emit(summary)
    return 0


def _cmd_verify(args) -> int:
    results = acceptance.run_all(fast=args.fast)
    sys.stdout.write(acceptance.render_table(results))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cstrong", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a generated hypergraph as JSON")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    g = gen_sub.add_parser("complete", help="complete k-uniform hypergraph")
    g.add_argument("n", type=int)
    g.add_argument("k", type=int)
    g = gen_sub.add_parser("c42", help="coordinate-pair family")
    g.add_argument("t", type=int)
    g.add_argument("l", type=int)
    g.add_argument("K", type=int)
    g = gen_sub.add_parser("kernel-aug", help="append a shared block to a graph's edges")
    g.add_argument("graph", help="2-uniform hypergraph JSON file, or - for stdin")
    g.add_argument("t", type=int)
    g = gen_sub.add_parser("sunflower", help="kernel plus disjoint petals")
    g.add_argument("p", type=int)
    g.add_argument("kernel_size", type=int)
    g.add_argument("petal_size", type=int)
    g = gen_sub.add_parser("random", help="seeded random t-intersecting family")
    g.add_argument("n", type=int)
    g.add_argument("m", type=int)
    g.add_argument("t", type=int)
    g.add_argument("seed", type=int)
    gen.set_defaults(func=_cmd_gen)

    chi = sub.add_parser("chi", help="exact strong chromatic number")
    chi.add_argument("input", nargs="?", default="-")
    chi.add_argument("--c", type=int, required=True)
    chi.add_argument("--method", choices=["search", "auto"], default="auto")
    chi.add_argument("--format", choices=["json", "tsv"], default="json")
    chi.add_argument("--jobs", type=int, default=1, help="accepted for compatibility")
    chi.set_defaults(func=_cmd_chi)

    cl = sub.add_parser("chi-link", help="max strong chromatic number over t-set links")
    cl.add_argument("input", nargs="?", default="-")
    cl.add_argument("--t", type=int, required=True)
    cl.add_argument("--l", type=int, required=True)
    cl.set_defaults(func=_cmd_chi_link)

    chk = sub.add_parser("check", help="validate a colouring against a strength")
    chk.add_argument("input", nargs="?", default="-")
    chk.add_argument("--c", type=int, required=True)
    chk.add_argument("--colouring", required=True)
    chk.set_defaults(func=_cmd_check)

    fnd = sub.add_parser("find", help="search for structure")
    fnd_sub = fnd.add_subparsers(dest="what", required=True)
    f = fnd_sub.add_parser("sunflower")
    f.add_argument("input", nargs="?", default="-")
    f.add_argument("--petals", type=int, required=True)
    f.add_argument("--max-kernel", type=int, required=True)
    f = fnd_sub.add_parser("bromeliad")
    f.add_argument("input", nargs="?", default="-")
    f.add_argument("--b", type=int, required=True)
    f.add_argument("--compatible", default=None, help="comma-separated edge indices")
    f.add_argument("--k", type=int, default=None)
    f = fnd_sub.add_parser("matching")
    f.add_argument("input", nargs="?", default="-")
    f.add_argument("--size", type=int, required=True)
    fnd.set_defaults(func=_cmd_find)

    reg = sub.add_parser("regions", help="region partition of an edge sequence")
    reg.add_argument("input", nargs="?", default="-")
    reg.add_argument("--edges", required=True, help="comma-separated edge indices")
    reg.set_defaults(func=_cmd_regions)

    spl = sub.add_parser("split-check", help="split-degeneracy check of an edge sequence")
    spl.add_argument("input", nargs="?", default="-")
    spl.add_argument("--k", type=int, required=True)
    spl.add_argument("--edges", required=True, help="comma-separated edge indices")
    spl.set_defaults(func=_cmd_split_check)

    col = sub.add_parser("colour", help="constructive colouring procedures")
    col.add_argument("input", nargs="?", default="-")
    col.add_argument("--method", choices=["thm41", "thm44"], required=True)
    col.add_argument("--c", type=int, default=None)
    col.add_argument("--t", type=int, default=None)
    col.add_argument("--l", type=int, default=None)
    col.set_defaults(func=_cmd_colour)

    trc = sub.add_parser("trace", help="iterated bromeliad-pruning trace")
    trc.add_argument("input", nargs="?", default="-")
    trc.add_argument("--t", type=int, required=True)
    trc.add_argument("--l", type=int, required=True)
    trc.add_argument("--p", type=int, required=True)
    trc.add_argument("--thresholds", required=True, help="comma-separated, strictly decreasing")
    trc.add_argument("--step-cap", type=int, default=None)
    trc.set_defaults(func=_cmd_trace)

    ver = sub.add_parser("verify", help="run the acceptance suite")
    ver.add_argument("--fast", action="store_true", help="reduced case counts (smoke run)")
    ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:  # pragma: no cover
        return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
