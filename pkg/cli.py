import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

import networkx as nx

from analysis.decider import classify_boundary, theorem1_racg
from analysis.nerve_builder import nerve
from analysis.oracles import affine_suite, finite_suite, planarity_suite, racg_hyperbolicity_suite
from models.verdict import Mode
from utils.errors import CarpetError, RightAngledRequiredError
from utils.families import list_families, make_family
from utils.report import emit_report
from utils.system_format import parse_system, render_system

EXIT_CARPET = 0
EXIT_NOT_CARPET = 1
EXIT_ERROR = 2

SUITES = {
    "finite": finite_suite,
    "affine": affine_suite,
    "racg": racg_hyperbolicity_suite,
    "planarity": planarity_suite,
}


def read_input(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def check_text(text, mode, format):
    """Classify one document; returns (report, is_carpet)."""
    M = parse_system(text)
    verdict = classify_boundary(M, mode)
    return emit_report(verdict, format), verdict.is_carpet


def _check_job(job):
    text, mode, format = job
    try:
        return check_text(text, mode, format) + (None,)
    except CarpetError as error:
        return None, False, str(error)


def racg_graph(M):
    """Commuting graph of a right-angled system."""
    if not M.is_right_angled():
        raise RightAngledRequiredError("check-racg needs a right-angled system")
    G = nx.Graph()
    G.add_nodes_from(M.generators)
    G.add_edges_from((s, t) for s, t, m in M.finite_pairs())
    return G


def cmd_check(args):
    mode = Mode.CONJECTURAL if args.conjectural else Mode.THEOREM2
    jobs = [(read_input(path), mode, args.format) for path in args.files]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_check_job, jobs))
    else:
        results = [_check_job(job) for job in jobs]

    code = EXIT_CARPET
    for path, (report, carpet, error) in zip(args.files, results):
        if error is not None:
            print(f"{path}: {error}", file=sys.stderr)
            code = EXIT_ERROR
            continue
        if len(args.files) > 1 and args.format == "human":
            print(f"== {path}")
        sys.stdout.write(report)
        if not carpet and code == EXIT_CARPET:
            code = EXIT_NOT_CARPET
    return code


def cmd_check_racg(args):
    if args.edges:
        M = parse_system("racg: " + args.edges)
    elif args.file:
        M = parse_system(read_input(args.file))
    else:
        raise CarpetError("check-racg needs FILE or --edges")
    verdict = theorem1_racg(racg_graph(M))
    sys.stdout.write(emit_report(verdict, args.format))
    return EXIT_CARPET if verdict.is_carpet else EXIT_NOT_CARPET


def cmd_nerve(args):
    L = nerve(parse_system(read_input(args.file)))
    data = L.to_dict()
    print(json.dumps({"complex": data["complex"], "labels": data["labels"]}, indent=2))
    return EXIT_CARPET


def _override(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("override must look like s,t,m")
    return tuple(parts)


def cmd_family(args):
    M = make_family(args.name, args.n, args.override or ())
    name = args.name if args.n is None else f"{args.name}{args.n}"
    sys.stdout.write(render_system(M, name))
    return EXIT_CARPET


def cmd_oracle(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        suite = SUITES[name]
        reports.append(suite(args.max_vertices) if args.max_vertices else suite())
    print(json.dumps([r.to_dict() for r in reports], indent=2))
    return EXIT_CARPET if all(r.ok for r in reports) else EXIT_NOT_CARPET


def build_parser():
    parser = argparse.ArgumentParser(description="Decide whether the boundary of a Coxeter group is a Sierpinski carpet")
    parser.add_argument("--verbose", "-v", action="store_true", help="Log search progress")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="Classify the boundary of Coxeter systems")
    check.add_argument("files", nargs="+", help="System files ('-' for stdin)")
    check.add_argument("--conjectural", action="store_true", help="Continue past non-hyperbolic groups")
    check.add_argument("--format", "-f", default="human", choices=["human", "json"])
    check.add_argument("--jobs", "-j", type=int, default=1, help="Worker processes for several files")
    check.set_defaults(handler=cmd_check)

    racg = commands.add_parser("check-racg", help="Classify a right-angled Coxeter group")
    racg.add_argument("file", nargs="?", help="System file ('-' for stdin)")
    racg.add_argument("--edges", "-e", help="Edges as 'a-b b-c ...'")
    racg.add_argument("--format", "-f", default="human", choices=["human", "json"])
    racg.set_defaults(handler=cmd_check_racg)

    dump = commands.add_parser("nerve", help="Print the labelled nerve")
    dump.add_argument("file", help="System file ('-' for stdin)")
    dump.set_defaults(handler=cmd_nerve)

    family = commands.add_parser("family", help="Print a named system in the text format")
    family.add_argument("name", choices=list_families())
    family.add_argument("--n", "-n", type=int, help="Family size")
    family.add_argument("--override", "-o", type=_override, action="append", help="Label override s,t,m")
    family.set_defaults(handler=cmd_family)

    oracle = commands.add_parser("oracle", help="Run the cross-check suites")
    oracle.add_argument("--suite", "-s", default="all", choices=["all", *SUITES])
    oracle.add_argument("--max-vertices", "-m", type=int, help="Size of the exhaustive family")
    oracle.set_defaults(handler=cmd_oracle)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except (CarpetError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
