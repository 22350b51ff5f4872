"""Command-line interface.

Every subcommand prints a short text answer, or with ``--json`` a single JSON
document whose fields always appear in the same order.  Exit status is 0 on
success, 1 on a usage error, 2 when a search ran out of budget and 3
when ``selftest`` or ``lemma-suite`` finds a failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Callable, Optional

from . import __version__
from .cycleset import CycleSet, CycleSetSyntaxError, format_cycle_set, gamma, parse_cycle_set
from .formulas import PairGammas, generalized_ramsey, in_C1, in_C2, in_class_C, little_m, r_blue, r_red
from .graph.core import BLUE, RED, cycle_from_set, is_bipartite
from .graph.graph6 import Graph6Error, graph6_encode, read_graph6_lines
from .search import (
    ABOVE_CAP,
    SearchConfig,
    SearchUndecided,
    compare_keys,
    enumerate_avoiding,
    enumerate_critical,
    exists_avoiding,
    ramsey_oracle,
)
from .search.lemmas import LEMMAS, UnknownLemma, verify_lemmas
from .search.star import SOURCES, star_critical_report
from .witnesses import FAMILIES, WitnessError, enumerate_family, spec_from_dict, SPEC_TYPES, verify_witness

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNDECIDED = 2
EXIT_FAILED = 3  # a self-check found a mismatch or counterexample

GRAMMAR = """\
cycle-set grammar (comma separated, braces optional):
  atom := INT | "<=" INT | ">=" INT [":" ("odd" | "even")] | "odd" | "even" | "all"
  examples: "{3}"  "3,5"  "<=5"  ">=7:odd"  "4,>=9"
"""


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    """Argument parser that raises instead of exiting, so :func:`run` owns the exit code."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def cycle_set_arg(text: str) -> CycleSet:
    try:
        return parse_cycle_set(text)
    except CycleSetSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


# --- output ------------------------------------------------------------------


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


class Cache:
    """One self-describing JSON file per (operation, arguments)."""

    def __init__(self, directory: Optional[str]):
        self.dir = Path(directory) if directory else None

    def _path(self, operation: str, args: dict) -> Path:
        blob = json.dumps({"operation": operation, "args": args}, sort_keys=True)
        return self.dir / f"{operation}-{hashlib.sha256(blob.encode()).hexdigest()[:32]}.json"

    def fetch(self, operation: str, args: dict, compute: Callable[[], dict]) -> dict:
        if self.dir is None:
            return compute()
        path = self._path(operation, args)
        if path.exists():
            entry = json.loads(path.read_text())
            if entry.get("operation") == operation and entry.get("args") == args:
                return entry["result"]
        result = compute()
        self.dir.mkdir(parents=True, exist_ok=True)
        entry = {"operation": operation, "args": args, "version": __version__, "result": result}
        path.write_text(dumps(entry) + "\n")
        return result


def _config(ns) -> SearchConfig:
    kwargs = {"threads": ns.threads}
    if ns.budget is not None:
        kwargs["node_budget"] = ns.budget
    return SearchConfig(**kwargs)


def _config_args(ns) -> dict:
    return {"budget": ns.budget}


def _pair_json(a: CycleSet, b: CycleSet) -> list[str]:
    return [format_cycle_set(a), format_cycle_set(b)]


def _enc(x):
    return None if x == float("inf") else int(x)


# --- commands ------------------------------------------------------------------


def cmd_compute(ns) -> tuple[dict, str]:
    a, b = ns.g1, ns.g2
    verdict = generalized_ramsey(a, b)
    g = PairGammas.of(a, b)
    payload = {
        "value": verdict.value,
        "status": verdict.status.value,
        "basis": verdict.basis,
        "pair": _pair_json(a, b),
        "gamma1": g.g1,
        "gamma_even1": _enc(g.ge1),
        "gamma2": g.g2,
        "gamma_even2": _enc(g.ge2),
        "r_red": r_red(g.g2, g.ge1),
        "r_blue": r_blue(g.g1, g.ge2),
        "m": little_m(g),
        "in_class_C": in_class_C(a, b),
        "in_C1": in_C1(a, b),
        "in_C2": in_C2(a, b),
    }
    rows = [
        ("pair", f"{payload['pair'][0]} | {payload['pair'][1]}"),
        ("R", f"{verdict.value} ({verdict.status.value}, {verdict.basis})"),
        ("gamma / gamma_e (red)", f"{g.g1} / {_fmt_len(g.ge1)}"),
        ("gamma / gamma_e (blue)", f"{g.g2} / {_fmt_len(g.ge2)}"),
        ("R_red / R_blue", f"{payload['r_red']} / {payload['r_blue']}"),
        ("m", str(payload["m"])),
        ("in C / C1 / C2", " / ".join("yes" if payload[k] else "no" for k in ("in_class_C", "in_C1", "in_C2"))),
    ]
    width = max(len(k) for k, _ in rows)
    return payload, "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _fmt_len(x) -> str:
    return "inf" if x == float("inf") else str(int(x))


def _parse_params(items: list[str]) -> dict:
    params = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"witness parameter {item!r} is not NAME=VALUE")
        try:
            params[name] = json.loads(value)
        except json.JSONDecodeError:
            params[name] = value
    return params


def cmd_witness(ns) -> tuple[dict, str]:
    try:
        spec = spec_from_dict(ns.spec, _parse_params(ns.params))
        report = verify_witness(spec)
    except WitnessError as exc:
        raise UsageError(str(exc)) from None
    g = spec.build()
    g6 = graph6_encode(g).decode()
    if ns.out:
        Path(ns.out).write_text(g6 + "\n")
    payload = {**report.as_json(), "graph6": g6}
    status = "avoiding" if report.avoiding else "NOT avoiding"
    text = f"{g6}\n{g.n} vertices, {status} {report.sets[0]} | {report.sets[1]}, claimed bound {spec.claimed_bound()}"
    return payload, text


def cmd_verify(ns) -> tuple[dict, str]:
    a, b = ns.g1, ns.g2
    data = sys.stdin.buffer.read() if ns.file == "-" else Path(ns.file).read_bytes()
    try:
        graphs = list(read_graph6_lines(data))
    except Graph6Error as exc:
        raise UsageError(f"bad graph6 input: {exc}") from None
    results = []
    lines = []
    for i, g in enumerate(graphs):
        red = cycle_from_set(g, RED, a)
        blue = cycle_from_set(g, BLUE, b)
        avoiding = red is None and blue is None
        results.append({
            "index": i,
            "n": g.n,
            "avoiding": avoiding,
            "red_cycle": red,
            "blue_cycle": blue,
            "blue_bipartite": is_bipartite(g, BLUE) is not None,
        })
        if avoiding:
            lines.append(f"{i}: n={g.n} avoiding")
        else:
            found = f"red C_{red}" if red is not None else f"blue C_{blue}"
            lines.append(f"{i}: n={g.n} contains {found}")
    payload = {"pair": _pair_json(a, b), "graphs": results, "all_avoiding": all(r["avoiding"] for r in results)}
    return payload, "\n".join(lines) or "no graphs"


def cmd_search(ns, cache: Cache) -> tuple[dict, str]:
    a, b = ns.g1, ns.g2
    args = {"pair": _pair_json(a, b), "n": ns.n, **_config_args(ns)}

    def compute():
        g = exists_avoiding(a, b, ns.n, _config(ns))
        return {"pair": args["pair"], "n": ns.n, "found": g is not None,
                "graph6": graph6_encode(g).decode() if g is not None else None}

    payload = cache.fetch("search", args, compute)
    text = payload["graph6"] if payload["found"] else f"no avoiding colouring of K_{ns.n}"
    return payload, text


def cmd_oracle(ns, cache: Cache) -> tuple[dict, str]:
    a, b = ns.g1, ns.g2
    args = {"pair": _pair_json(a, b), "cap": ns.cap, **_config_args(ns)}

    def compute():
        value = ramsey_oracle(a, b, ns.cap, _config(ns))
        above = value is ABOVE_CAP
        return {"pair": args["pair"], "cap": ns.cap, "value": None if above else value, "above_cap": above}

    payload = cache.fetch("oracle", args, compute)
    text = f"> {ns.cap}" if payload["above_cap"] else str(payload["value"])
    return payload, text


def _manifest(a, b, result) -> dict:
    return {
        "pair": _pair_json(a, b),
        "n": result.n,
        "exhaustive": result.exhaustive,
        "class_count": len(result),
        "explored_nodes": result.explored_nodes,
        "colour": "red",
    }


def cmd_enumerate(ns, cache: Cache) -> tuple[dict, str]:
    a, b = ns.g1, ns.g2
    args = {"pair": _pair_json(a, b), "n": ns.n, **_config_args(ns)}

    def compute():
        if ns.n is None:
            result = enumerate_critical(a, b, _config(ns), confirm=False)
        else:
            result = enumerate_avoiding(a, b, ns.n, _config(ns))
        return {**_manifest(a, b, result), "graph6": [graph6_encode(g).decode() for g in result.graphs]}

    entry = cache.fetch("enumerate", args, compute)
    manifest = {k: v for k, v in entry.items() if k != "graph6"}
    if ns.out:
        Path(f"{ns.out}.g6").write_text("".join(line + "\n" for line in entry["graph6"]))
        Path(f"{ns.out}.json").write_text(dumps(manifest) + "\n")
    word = "exhaustive" if manifest["exhaustive"] else "incomplete"
    text = f"{manifest['class_count']} classes on {manifest['n']} vertices ({word})"
    if not ns.out:
        text = "\n".join(entry["graph6"] + [text])
    return manifest, text


def default_family(a: CycleSet, b: CycleSet) -> Optional[tuple[str, int, Optional[int]]]:
    """Reference family for a pair of single cycles, when one is known."""
    if len(a.atoms) != 1 or len(b.atoms) != 1 or a.tails or b.tails:
        return None
    (n,), (k,) = a.atoms, b.atoms
    if k == 4 and n >= 6:
        return "g-families", n, None
    if k % 2 == 1 and k < n and n >= 5:
        return "complete-bip-critical", n, None
    return None


def cmd_check_critical(ns, cache: Cache) -> tuple[dict, str]:
    a, b = ns.g1, ns.g2
    if ns.family:
        choice = (ns.family, ns.family_n or gamma(a), ns.family_k)
    else:
        choice = default_family(a, b)
    args = {"pair": _pair_json(a, b), "family": list(choice) if choice else None, **_config_args(ns)}

    def compute():
        result = enumerate_critical(a, b, _config(ns), confirm=True)
        payload = {**_manifest(a, b, result), "ramsey": result.notes.get("ramsey"),
                   "confirmed": result.notes.get("confirmed"), "family": None, "characterization": None}
        if choice is not None:
            try:
                family = [g for _, g in enumerate_family(*choice)]
            except WitnessError as exc:
                raise UsageError(str(exc)) from None
            payload["family"] = {"name": choice[0], "n": choice[1], "k": choice[2]}
            payload["characterization"] = compare_keys(result, family).as_json()
        return payload

    payload = cache.fetch("check-critical", args, compute)
    char = payload["characterization"]
    verdict = "no reference family" if char is None else ("MATCH" if char["match"] else "MISMATCH")
    return payload, f"{payload['class_count']} classes, characterization: {verdict}"


def cmd_star_critical(ns, cache: Cache) -> tuple[dict, str]:
    args = {"n": ns.n, "k": ns.k, "source": ns.source, **_config_args(ns)}

    def compute():
        try:
            return star_critical_report(ns.n, ns.k, ns.source, _config(ns)).as_json()
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    payload = cache.fetch("star-critical", args, compute)
    holds = "holds" if payload["upper_bound_holds"] else "FAILS"
    text = (f"upper bound {holds}: {payload['critical_classes']} critical classes, "
            f"{payload['neighbour_sets']} neighbour sets, {payload['colourings']} colourings")
    return payload, text


def cmd_lemma_suite(ns, cache: Cache) -> tuple[dict, str]:
    ids = ns.ids or list(LEMMAS)
    args = {"ids": ids, "n": ns.n, "mode": ns.mode, "samples": ns.samples, "seed": ns.seed}

    def compute():
        try:
            reports = verify_lemmas(ids, ns.n, ns.mode, ns.samples, ns.seed)
        except (UnknownLemma, ValueError) as exc:
            raise UsageError(str(exc.args[0] if exc.args else exc)) from None
        return {"n": ns.n, "mode": ns.mode, "reports": [r.as_json() for r in reports],
                "all_hold": all(r.holds for r in reports)}

    payload = cache.fetch("lemma-suite", args, compute)
    lines = [
        f"{r['lemma']}: {'holds' if r['holds'] else 'COUNTEREXAMPLE'} "
        f"({r['hypothesis_hits']} of {r['colourings']} colourings meet the hypothesis)"
        for r in payload["reports"]
    ]
    return payload, "\n".join(lines)


def cmd_selftest(ns) -> tuple[dict, str]:
    from .acceptance import run

    echo = None if ns.json else (lambda line: print(line, file=ns.stream, flush=True))
    results = run(ns.only, echo=echo)
    payload = {"criteria": [r.as_json() for r in results], "passed": all(r.passed for r in results)}
    return payload, "all criteria pass" if payload["passed"] else "FAILED"


# --- parser ------------------------------------------------------------------


def build_parser() -> Parser:
    common = Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cache", metavar="DIR", help="reuse and store results in DIR")
    common.add_argument("--budget", type=positive_int, help="search node budget")
    common.add_argument("--threads", type=positive_int, default=1, help="search worker processes")

    parser = Parser(prog="cycleramsey", description=__doc__.splitlines()[0],
                    epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=Parser, metavar="COMMAND")

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text,
                              epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)

    def pair(p):
        p.add_argument("--g1", type=cycle_set_arg, required=True, help="forbidden red cycle lengths")
        p.add_argument("--g2", type=cycle_set_arg, required=True, help="forbidden blue cycle lengths")

    pair(add("compute", "closed-form value and the quantities it depends on"))

    p = add("witness", "build an explicit extremal colouring")
    p.add_argument("spec", choices=sorted(SPEC_TYPES))
    p.add_argument("params", nargs="*", metavar="NAME=VALUE")
    p.add_argument("--out", help="write graph6 of the red subgraph here")

    p = add("verify", "check graph6 colourings (red subgraph) for forbidden cycles")
    p.add_argument("file", nargs="?", default="-", help="graph6 file, '-' for standard input")
    pair(p)

    p = add("search", "find an avoiding colouring of K_n")
    pair(p)
    p.add_argument("--n", type=positive_int, required=True)

    p = add("oracle", "Ramsey number by exhaustive search, up to a cap")
    pair(p)
    p.add_argument("--cap", type=positive_int, required=True)

    p = add("enumerate", "all avoiding colourings of K_n up to isomorphism")
    pair(p)
    p.add_argument("--n", type=positive_int, help="vertex count (default: critical size)")
    p.add_argument("--out", metavar="PREFIX", help="write PREFIX.g6 and PREFIX.json")

    p = add("check-critical", "enumerate critical colourings and compare with a constructed family")
    pair(p)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--family-n", type=positive_int)
    p.add_argument("--family-k", type=positive_int)

    p = add("star-critical", "star-critical upper bound for C_n against C_3 or C_5")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--k", type=int, choices=(3, 5), required=True)
    p.add_argument("--source", choices=SOURCES, default="search")

    p = add("lemma-suite", "check structural lemmas on colourings of K_n")
    p.add_argument("--ids", nargs="*", choices=sorted(LEMMAS), metavar="ID")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--samples", type=positive_int, default=10**6)
    p.add_argument("--seed", type=int, default=0)

    p = add("selftest", "run the acceptance suite")
    p.add_argument("--only", type=int, nargs="*", metavar="ID", help="criterion numbers")
    return parser


CACHED = {
    "search": cmd_search,
    "oracle": cmd_oracle,
    "enumerate": cmd_enumerate,
    "check-critical": cmd_check_critical,
    "star-critical": cmd_star_critical,
    "lemma-suite": cmd_lemma_suite,
}
PLAIN = {
    "compute": cmd_compute,
    "witness": cmd_witness,
    "verify": cmd_verify,
    "selftest": cmd_selftest,
}


def _success(command: str, payload: dict) -> bool:
    if command == "selftest":
        return payload["passed"]
    if command == "lemma-suite":
        return payload["all_hold"]
    return True


def run(argv: Optional[list[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        ns.stream = out
        if ns.command is None:
            raise UsageError("cycleramsey: a command is required")
        if ns.command in CACHED:
            payload, text = CACHED[ns.command](ns, Cache(ns.cache))
        else:
            payload, text = PLAIN[ns.command](ns)
    except UsageError as exc:
        print(str(exc), file=err)
        print(parser.format_usage().rstrip(), file=err)
        print(GRAMMAR, file=err, end="")
        return EXIT_USAGE
    except SearchUndecided as exc:
        if getattr(ns, "json", False):
            print(dumps({"undecided": True, "reason": str(exc), "explored_nodes": exc.explored_nodes}), file=out)
        else:
            print(f"undecided: {exc} after {exc.explored_nodes} nodes", file=out)
        return EXIT_UNDECIDED
    print(dumps(payload) if ns.json else text, file=out)
    return EXIT_OK if _success(ns.command, payload) else EXIT_FAILED


def main() -> None:
    sys.exit(run())
