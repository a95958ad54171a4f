"""Command-line entry point: ``cpsep {mincut,enumerate,nmwcu,check}``.

JSON goes to stdout, diagnostics to stderr. Exit status is 0 on success
(an infeasible instance or an infinite connectivity still counts as success),
2 on bad input and 3 when an internal invariant fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict
from typing import Any, Mapping, Sequence

from . import flow, nmwcu
from .constraints import ConstraintSpec
from .enumeration import EnumContext, EnumStats, gen_seps
from .errors import ContractViolation, CpsepError
from .graph import Graph, load_graph, parse_graph
from .instances import NmwcuInstance
from .separators import certify

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONTRACT = 3

log = logging.getLogger("cpsep")


class InputError(Exception):
    """Unreadable or malformed command input."""


# ------------------------------------------------------------------ input

def _read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def _graph_arg(path: str) -> Graph:
    try:
        return load_graph(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _graph_field(value: Any, base_dir: str) -> Graph:
    """A graph given as a file path, inline text, or ``{"n", "edges", "weights"}``."""
    if isinstance(value, Mapping):
        try:
            edges = [tuple(e) for e in value.get("edges", [])]
            if any(len(e) != 2 for e in edges):
                raise InputError("edges must be pairs")
            return Graph(value["n"], edges, value.get("weights"))
        except KeyError:
            raise InputError("inline graph needs 'n'") from None
        except TypeError:
            raise InputError("inline graph fields have the wrong type") from None
    if not isinstance(value, str):
        raise InputError("'graph' must be a path, graph text or an object")
    if "\n" in value:
        return parse_graph(value)
    path = value if os.path.isabs(value) else os.path.join(base_dir, value)
    return _graph_arg(path)


def _require(data: Any, *keys: str) -> None:
    if not isinstance(data, Mapping):
        raise InputError("instance must be a JSON object")
    missing = [k for k in keys if k not in data]
    if missing:
        raise InputError(f"missing field(s): {', '.join(missing)}")


def _int(value: Any, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise InputError(f"'{name}' must be an integer")
    return value


def _ints(value: Any, name: str) -> list[int]:
    if not isinstance(value, list):
        raise InputError(f"'{name}' must be a list of integers")
    return [_int(v, name) for v in value]


def _emit(obj: Any) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


# ------------------------------------------------------------------ verbs

def run_mincut(args: argparse.Namespace) -> dict[str, Any]:
    g = _graph_arg(args.graph)
    res = flow.min_separator(g, args.A, args.B, weighted=args.weighted)
    if res.kappa_is_infinite:
        return {"kappa": "inf", "separator": [], "weight": None}
    # kappa is always the cardinality; --weighted only changes which separator is reported
    kappa = res.size if not args.weighted else flow.kappa(g, args.A, args.B)
    return {"kappa": kappa, "separator": list(res.separator), "weight": res.weight}


def run_enumerate(args: argparse.Namespace) -> dict[str, Any]:
    data = _read_json(args.instance)
    _require(data, "graph", "s", "t", "k")
    g = _graph_field(data["graph"], os.path.dirname(os.path.abspath(args.instance)))
    parts = data.get("parts", [])
    if not isinstance(parts, list):
        raise InputError("'parts' must be a list of lists")
    ctx = EnumContext(
        g,
        _int(data["s"], "s"),
        _int(data["t"], "t"),
        tuple(_ints(data.get("A", []), "A")),
        tuple(_ints(data.get("Q", []), "Q")),
        tuple(tuple(_ints(p, "parts")) for p in parts),
        _int(data["k"], "k"),
    )
    stats = EnumStats()
    seps = gen_seps(ctx, stats)
    out: dict[str, Any] = {"separators": [list(S) for S in seps]}
    if args.stats:
        d = asdict(stats)
        d.pop("potential_log")
        out["stats"] = d
    return out


def run_nmwcu(args: argparse.Namespace) -> dict[str, Any]:
    data = _read_json(args.instance)
    _require(data, "graph", "parts", "k")
    g = _graph_field(data["graph"], os.path.dirname(os.path.abspath(args.instance)))
    if not isinstance(data["parts"], list):
        raise InputError("'parts' must be a list of lists")
    parts = tuple(tuple(_ints(p, "parts")) for p in data["parts"])
    inst = NmwcuInstance(g, parts, _int(data["k"], "k"))
    sol = nmwcu.solve(inst, strategy=args.strategy)
    out = sol.to_json()
    if not args.stats:
        out.pop("pairs_processed", None)
    return out


def run_check(args: argparse.Namespace) -> dict[str, Any]:
    g = _graph_arg(args.graph)
    spec = None
    if args.spec is not None:
        spec = ConstraintSpec.from_json(_read_json(args.spec))
        spec.check_against(g)
    return certify(g, args.A, args.B, args.S, spec).to_json()


# ------------------------------------------------------------------ parser

def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cpsep", description="Connectivity-preserving vertex separators and node multiway cut-uncut.")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="verb", required=True)

    m = sub.add_parser("mincut", help="minimum A,B vertex separator")
    m.add_argument("graph")
    m.add_argument("-A", type=int, nargs="+", required=True)
    m.add_argument("-B", type=int, nargs="+", required=True)
    m.add_argument("--weighted", action="store_true", help="minimise total weight instead of size")
    m.set_defaults(func=run_mincut)

    e = sub.add_parser("enumerate", help="all CP important sA,t-separators of size <= k")
    e.add_argument("instance")
    e.add_argument("--stats", action="store_true")
    e.set_defaults(func=run_enumerate)

    n = sub.add_parser("nmwcu", help="minimum-weight node multiway cut-uncut")
    n.add_argument("instance")
    n.add_argument("--strategy", choices=nmwcu.STRATEGIES, default="exact")
    n.add_argument("--stats", action="store_true", help="include pairs_processed")
    n.set_defaults(func=run_nmwcu)

    c = sub.add_parser("check", help="certificate for a candidate separator")
    c.add_argument("graph")
    c.add_argument("-A", type=int, nargs="+", required=True)
    c.add_argument("-B", type=int, nargs="+", required=True)
    c.add_argument("-S", type=int, nargs="*", default=[])
    c.add_argument("--spec", help="constraint JSON file")
    c.set_defaults(func=run_check)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        out = args.func(args)
    except ContractViolation as exc:
        print(f"cpsep: internal error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except (InputError, CpsepError) as exc:
        print(f"cpsep: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
