"""
Command-line front end: generation, classification, constructive
recolouring, path verification and exhaustive mixing checks.

Exit codes: 0 ok, 1 malformed input, 2 graph outside the required class,
3 state budget or exact-solver bound exceeded.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from prettytable import PrettyTable

from recoloureur.colouring.colouring_chromatic import chromatic_number_exact
from recoloureur.colouring.colouring_io import read_colouring, write_colouring
from recoloureur.config import Settings
from recoloureur.errors import (
    BlowupBaseTooLarge,
    BudgetExceeded,
    MalformedInput,
    NotInClass,
    RecoloureurError,
    TooLarge,
)
from recoloureur.families.families_basic import BASIC_FAMILIES, FAMILY_NAMES, RANDOM_FAMILIES, FamilySpec, gen_basic
from recoloureur.families.families_random import gen_random_in_class
from recoloureur.families.families_witness import gen_bp, gen_gp, pendant_extension
from recoloureur.graph.graph_io import read_graph, write_graph, write_text_atomic
from recoloureur.hfree.hfree_catalogue import FIVE_VERTEX_NAMES
from recoloureur.hfree.hfree_classify import Witness, classify, dichotomy_witness, five_vertex_witnesses
from recoloureur.oracle.oracle_mixing import mixing_report
from recoloureur.orchestrator import ALGORITHM_NAMES, Orchestrator
from recoloureur.recolour.recolour_path import apply_and_validate, read_path, write_path

logger = logging.getLogger("recoloureur")

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_NOT_IN_CLASS = 2
EXIT_BUDGET = 3


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _emit(args: argparse.Namespace, data: Dict[str, Any], table: Optional[PrettyTable] = None) -> None:
    if args.json or table is None:
        sys.stdout.write(_dump(data))
    else:
        print(table)


def _write_manifest(path: Path, manifest: Dict[str, Any]) -> None:
    write_text_atomic(path, _dump(manifest))


# ---------------------------------------------------------
# Commands
# ---------------------------------------------------------

def cmd_gen(args: argparse.Namespace, settings: Settings) -> int:
    spec = FamilySpec(args.family, p=args.p, q=args.q, n=args.n, i=args.i, seed=settings.seed).validate()
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    files: Dict[str, str] = {"graph": "graph.txt"}
    claims: Dict[str, Any] = {}

    if spec.family in BASIC_FAMILIES:
        graph = gen_basic(spec)
    elif spec.family in RANDOM_FAMILIES:
        graph = gen_random_in_class(spec, settings)
    elif spec.family == "pendant_extension":
        host = read_graph(args.graph) if args.graph else gen_bp(spec.p or 3).graph
        graph = pendant_extension(host, spec.i)
        claims["chromatic_number_unchanged"] = True
    else:
        bundle = gen_gp(spec.p) if spec.family == "gp" else gen_bp(spec.p)
        graph = bundle.graph
        write_colouring(out_dir / "base.col", bundle.base_colouring)
        write_colouring(out_dir / "frozen.col", bundle.frozen_colouring)
        files.update(base="base.col", frozen="frozen.col")
        claims = {"free_of": bundle.claimed_free_of, "frozen_palette": bundle.frozen_colouring.palette_size,
                  "checks": bundle.verify()}

    write_graph(out_dir / files["graph"], graph)
    manifest = {
        "command": "gen",
        "spec": spec.to_dict(),
        "seed": settings.seed,
        "algorithm": None,
        "vertices": graph.vertex_count,
        "edges": graph.edge_count,
        "files": files,
        "claims": claims,
    }
    _write_manifest(out_dir / "manifest.json", manifest)
    logger.info("generated %s: %d vertices, %d edges in %s",
                spec.family, graph.vertex_count, graph.edge_count, out_dir)
    _emit(args, manifest)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, settings: Settings) -> int:
    g = read_graph(args.graph)
    membership = classify(g)
    data = membership.to_dict(str(args.graph))
    table = PrettyTable(["Graph", "Free", "Witness"])
    for entry in membership.entries:
        table.add_row([entry.name, "yes" if entry.free else "no", "" if entry.witness is None else entry.witness])
    if args.chromatic:
        chi, _ = chromatic_number_exact(g, settings.exact_chromatic_bound)
        data["chromatic_number"] = chi
        table.add_row(["chi", chi, ""])
    _emit(args, data, table)
    return EXIT_OK


def cmd_recolour(args: argparse.Namespace, settings: Settings) -> int:
    g = read_graph(args.graph)
    a = read_colouring(getattr(args, "from"))
    b = read_colouring(args.to)
    palette = args.colours or max(a.palette_size, b.palette_size)
    a, b = a.with_palette(palette), b.with_palette(palette)
    report = Orchestrator(settings).get_detailed_report(g, palette, a, b, args.algorithm)
    path = report.pop("path")
    write_path(args.out, path)
    summary = dict(report["summary"], algorithm=report["algorithm"], palette=palette, vertices=g.vertex_count,
                   chromatic_number=report["chromatic_number"])
    manifest = {
        "command": "recolour",
        "seed": settings.seed,
        "algorithm": report["algorithm"],
        "requested_algorithm": args.algorithm,
        "files": {"graph": str(args.graph), "from": str(getattr(args, "from")), "to": str(args.to),
                  "path": str(args.out)},
        "summary": summary,
    }
    _write_manifest(Path(args.out).with_suffix(".manifest.json"), manifest)
    table = PrettyTable(["Algorithm", "Vertices", "Palette", "Steps", "Max per vertex", "Valid"])
    table.add_row([report["algorithm"], g.vertex_count, palette, summary["length"],
                   summary["max_per_vertex"], summary["valid"]])
    _emit(args, summary, table)
    return EXIT_OK if summary["valid"] else EXIT_MALFORMED


def cmd_verify_path(args: argparse.Namespace, settings: Settings) -> int:
    g = read_graph(args.graph)
    path = read_path(args.path)
    final, ok, failing = apply_and_validate(g, path)
    result = {"ok": ok, "failing_step": failing, "steps": len(path), "final": list(final.colours)}
    table = PrettyTable(["Valid", "Steps", "Failing step", "Final colouring"])
    table.add_row([ok, len(path), "" if failing is None else failing, " ".join(map(str, final.colours))])
    _emit(args, result, table)
    return EXIT_OK if ok else EXIT_MALFORMED


def cmd_check_mixing(args: argparse.Namespace, settings: Settings) -> int:
    g = read_graph(args.graph)
    report = mixing_report(g, args.colours, settings.state_budget, settings.exact_diameter_limit)
    data = report.to_dict()
    table = PrettyTable(["Field", "Value"])
    table.align = "l"
    for key, value in data.items():
        table.add_row([key, value])
    _emit(args, data, table)
    return EXIT_OK


def cmd_witness(args: argparse.Namespace, settings: Settings) -> int:
    kwargs = {"gp": args.p, "bp": args.p} if args.p else {}
    if args.name in FIVE_VERTEX_NAMES:
        result = five_vertex_witnesses(**kwargs)[args.name]
    else:
        result = dichotomy_witness(args.name, **kwargs)
    data: Dict[str, Any] = {"name": args.name, "kind": result.kind}
    if isinstance(result, Witness):
        data.update(family=result.bundle.name, checks=result.bundle.verify(), certified=result.certify(),
                    vertices=result.bundle.graph.vertex_count, edges=result.bundle.graph.edge_count)
    elif result.kind == "external":
        data["citation"] = result.citation
    else:
        data["reason"] = result.reason
    table = PrettyTable(["Field", "Value"])
    table.align = "l"
    for key, value in data.items():
        table.add_row([key, value])
    _emit(args, data, table)
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "classify": cmd_classify,
    "recolour": cmd_recolour,
    "verify-path": cmd_verify_path,
    "check-mixing": cmd_check_mixing,
    "witness": cmd_witness,
}


# ---------------------------------------------------------
# Parsing and dispatch
# ---------------------------------------------------------

class RecoloureurParser(argparse.ArgumentParser):
    """
    Usage errors exit with EXIT_MALFORMED; 2 is reserved for NotInClass.
    """

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = RecoloureurParser(prog="recoloureur", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--json", action="store_true", help="print one JSON object on standard output")
    parser.add_argument("--verbose", action="store_true")
    parser.add_argument("--quiet", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=RecoloureurParser)

    gen = sub.add_parser("gen", help="generate a family member")
    gen.add_argument("--family", required=True, choices=FAMILY_NAMES)
    gen.add_argument("--p", type=int)
    gen.add_argument("--q", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--i", type=int)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--graph", help="host graph for pendant_extension")
    gen.add_argument("--out-dir", required=True)

    cls = sub.add_parser("classify", help="freeness against the named catalogue")
    cls.add_argument("--graph", required=True)
    cls.add_argument("--chromatic", action="store_true", help="also report the exact chromatic number")

    rec = sub.add_parser("recolour", help="constructive recolouring path")
    rec.add_argument("--graph", required=True)
    rec.add_argument("--from", required=True)
    rec.add_argument("--to", required=True)
    rec.add_argument("--colours", type=int)
    rec.add_argument("--algorithm", default="auto", choices=ALGORITHM_NAMES)
    rec.add_argument("--out", required=True)

    ver = sub.add_parser("verify-path", help="replay and validate a path file")
    ver.add_argument("--graph", required=True)
    ver.add_argument("--path", required=True)

    mix = sub.add_parser("check-mixing", help="exhaustive report on R_l(G)")
    mix.add_argument("--graph", required=True)
    mix.add_argument("--colours", type=int, required=True)
    mix.add_argument("--budget", type=int)

    wit = sub.add_parser("witness", help="dichotomy witness for a named graph")
    wit.add_argument("--name", required=True)
    wit.add_argument("--p", type=int)
    return parser


def configure_logging(verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.ERROR if quiet else logging.WARNING
    logging.basicConfig(level=level, format="[%(levelname)s] %(name)s: %(message)s", stream=sys.stderr)


def _error_body(error: Exception) -> Dict[str, Any]:
    if isinstance(error, NotInClass):
        return error.to_dict()
    return {"error": type(error).__name__, "message": str(error)}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    settings = Settings.from_env().with_overrides(
        seed=getattr(args, "seed", None),
        state_budget=getattr(args, "budget", None),
    )
    try:
        if getattr(args, "colours", None) is not None and args.colours < 1:
            raise MalformedInput("--colours must be at least 1")
        if settings.state_budget < 1:
            raise MalformedInput("--budget must be at least 1")
        return COMMANDS[args.command](args, settings)
    except (RecoloureurError, OSError) as error:
        if isinstance(error, NotInClass):
            code = EXIT_NOT_IN_CLASS
        elif isinstance(error, (BudgetExceeded, BlowupBaseTooLarge, TooLarge)):
            code = EXIT_BUDGET
        else:
            code = EXIT_MALFORMED
        logger.error("%s: %s", type(error).__name__, error)
        if args.json:
            sys.stdout.write(_dump(_error_body(error)))
        return code


if __name__ == "__main__":
    sys.exit(main())
