#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Command line interface.

Every subcommand reads JSON documents, runs one library operation and
prints JSON (or DOT with `--dot`) to standard output. Exit codes: 0 on
success, 2 on invalid input or a failed hypothesis, 1 on a failed
internal check.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Sequence, TextIO, Tuple

from treegrade.base import GradedSpace
from treegrade.covers.ball import DEFAULT_RADIUS, CoverBall, format_cover_vertex, lift_path
from treegrade.gen.spaces import (
    DEFAULT_SEED,
    random_space,
    shrinking_circles,
    triangle_chain,
    wedge_arc,
)
from treegrade.grading.pieces import DEFAULT_ENUMERATION_BOUND, canonical_grading, validate_grading
from treegrade.graph.algorithms import bridges
from treegrade.graph.weighted import EdgePath
from treegrade.homotopy.loops import oracle_is_essential, tree_efficient_reduce
from treegrade.homotopy.sampling import DEFAULT_LOOP_LENGTH
from treegrade.io.dot import cover_ball_to_dot, graph_to_dot, parameterization_to_dot
from treegrade.io.serialization import (
    dumps,
    filtration_from_json,
    graph_to_json,
    grading_to_json,
    load_json,
    loop_from_json,
    loop_to_json,
    map_from_json,
    space_from_json,
    space_to_json,
    vertex_map_to_json,
)
from treegrade.maps.graded import (
    check_grade_preserving,
    check_tree_portion_preserving,
    induced_tree_map,
)
from treegrade.maps.injectivity import DEFAULT_SAMPLES, check_piecewise_injectivity
from treegrade.maps.string_light import string_light_collapse
from treegrade.quotient.metric import bonding_map
from treegrade.quotient.retraction import retraction
from treegrade.selftest import DEFAULT_GRAPHS, DEFAULT_LOOPS, selftest
from treegrade.utils.misc import (
    TreeGradeError,
    TreeGradeInputError,
    TreeGradeInternalError,
    TreeGradeMissingParameterError,
)
from treegrade.utils.typing import PieceId, Vertex

logger = logging.getLogger(__name__)

SEED_VARIABLE: str = "TREEGRADE_SEED"

EXIT_OK: int = 0
EXIT_INTERNAL: int = 1
EXIT_INPUT: int = 2


class CommandFailed(Exception):
    """
    Raised by a subcommand whose result is a negative report; the report
    has already been printed.
    """


def default_seed() -> int:
    value = os.environ.get(SEED_VARIABLE)
    if value is None:
        return DEFAULT_SEED
    try:
        return int(value)
    except ValueError:
        raise TreeGradeInputError(f"{SEED_VARIABLE} must be an integer, got {value!r}")


def parse_ids(text: Optional[str]) -> List[int]:
    if text is None or text.strip() == "":
        return []
    try:
        return [int(item) for item in text.split(",")]
    except ValueError:
        raise TreeGradeInputError(f"expected comma separated integers, got {text!r}")


def read_space(path: str) -> GradedSpace:
    graph, grading = space_from_json(load_json(path))
    return GradedSpace(graph, grading)


def _first_vertex(space: GradedSpace, token: str) -> Vertex:
    text = token.strip()
    backward = text.startswith("~")
    try:
        edge = space.graph.edge(int(text.lstrip("~")))
    except ValueError:
        raise TreeGradeInputError(f"invalid edge token {token!r}")
    return edge.v if backward else edge.u


def read_loop(args: argparse.Namespace, space: GradedSpace) -> Tuple[EdgePath, Vertex]:
    """
    The loop given inline with `--loop` or as a JSON document with
    `--loop-file`, and its base point.

    An inline loop starts at `--base`; without it the loop starts at the
    tail of its first token. `--base` also overrides the base point of a
    loop document.
    """
    if args.loop is not None and args.loop_file is not None:
        raise TreeGradeInputError("give either --loop or --loop-file")
    if args.loop is None and args.loop_file is None:
        raise TreeGradeMissingParameterError(["--loop", "--loop-file"])
    base = None if args.base is None else _vertex_arg(space, args.base)
    if args.loop_file is not None:
        loop, document_base = loop_from_json(load_json(args.loop_file), space.graph)
        return loop, document_base if base is None else base

    tokens = [token.strip() for token in args.loop.split(",") if token.strip()]
    if base is None:
        if not tokens:
            raise TreeGradeMissingParameterError("--base")
        base = _first_vertex(space, tokens[0])
    return EdgePath.from_tokens(space.graph, base, tokens), base


def read_filtration(args: argparse.Namespace) -> List[FrozenSet[PieceId]]:
    """
    Levels separated by `;`, piece ids within a level by `,`.
    """
    if args.filtration is not None and args.filtration_file is not None:
        raise TreeGradeInputError("give either --filtration or --filtration-file")
    if args.filtration is None and args.filtration_file is None:
        raise TreeGradeMissingParameterError(["--filtration", "--filtration-file"])
    if args.filtration_file is not None:
        return filtration_from_json(load_json(args.filtration_file))
    return filtration_from_json([parse_ids(level) for level in args.filtration.split(";")])


def cmd_decompose(args: argparse.Namespace, out: TextIO) -> None:
    space = read_space(args.space)
    grading = canonical_grading(space.graph)
    if args.dot:
        print(graph_to_dot(space.graph, grading), file=out)
        return
    document = space_to_json(space.graph, grading)
    document["bridges"] = sorted(bridges(space.graph))
    print(dumps(document), file=out)


def cmd_validate(args: argparse.Namespace, out: TextIO) -> None:
    space = read_space(args.space)
    report = validate_grading(space.graph, space.grading, enumeration_bound=args.bound)
    print(dumps(report.to_dict()), file=out)
    if not report.ok:
        raise CommandFailed(report.message)


def cmd_parameterize(args: argparse.Namespace, out: TextIO) -> None:
    space = read_space(args.space)
    p = space.parameterization
    if args.dot:
        print(parameterization_to_dot(p), file=out)
        return
    document = {
        "tree": graph_to_json(p.tree),
        "piece_vertices": {str(k): v for k, v in sorted(p.piece_vertex_of.items())},
        "q": vertex_map_to_json(p.q),
    }
    print(dumps(document), file=out)


def cmd_quotient(args: argparse.Namespace, out: TextIO) -> None:
    space = read_space(args.space)
    q = space.quotient(parse_ids(args.keep))
    if args.bond is not None:
        q = bonding_map(q, parse_ids(args.bond))
    if args.dot:
        print(graph_to_dot(q.target, q.target_grading), file=out)
        return
    document = space_to_json(q.target, q.target_grading)
    document["gamma"] = vertex_map_to_json(q.gamma)
    document["keep"] = sorted(q.keep)
    print(dumps(document), file=out)


def cmd_retract(args: argparse.Namespace, out: TextIO) -> None:
    space = read_space(args.space)
    if args.piece is not None:
        r = space.retraction(args.piece)
    elif args.edges is not None or args.vertices is not None:
        vertices = [_vertex_arg(space, v) for v in (args.vertices or "").split(",") if v]
        sub = space.graph.subgraph(parse_ids(args.edges), vertices, connected=True)
        r = retraction(space.graph, space.grading, sub)
    else:
        raise TreeGradeMissingParameterError(["--piece", "--edges"])
    document = {
        "r": vertex_map_to_json(r.r),
        "components": [sorted(c, key=str) for c in r.components],
        "idempotent": r.is_idempotent(),
        "non_expansive": r.is_non_expansive(),
    }
    print(dumps(document), file=out)


def _vertex_arg(space: GradedSpace, text: str):
    for vertex in space.graph.vertices:
        if str(vertex) == text:
            return vertex
    raise TreeGradeInputError(f"unknown vertex {text!r}")


def cmd_reduce(args: argparse.Namespace, out: TextIO) -> None:
    space = read_space(args.space)
    loop, base = read_loop(args, space)
    reduced = tree_efficient_reduce(space.graph, space.grading, loop)
    word = space.is_essential(reduced, base).word
    document = {"loop": loop_to_json(reduced, base), "word": word.to_json()}
    print(dumps(document), file=out)


def cmd_essential(args: argparse.Namespace, out: TextIO) -> None:
    space = read_space(args.space)
    loop, base = read_loop(args, space)
    result = space.is_essential(loop, base)
    document = result.to_json()
    if args.oracle:
        oracle = oracle_is_essential(space.graph, loop, base)
        if oracle != result.essential:
            raise TreeGradeInternalError(
                f"oracle says essential={oracle}, decision says {result.essential}"
            )
        document["oracle"] = oracle
    print(dumps(document), file=out)


def cmd_phi(args: argparse.Namespace, out: TextIO) -> None:
    space = read_space(args.space)
    loop, base = read_loop(args, space)
    filtration = read_filtration(args)
    sequence = space.phi(loop, filtration, base)
    print(dumps({"levels": sequence.to_json(), "coherent": sequence.is_coherent()}), file=out)


def cmd_checkmap(args: argparse.Namespace, out: TextIO) -> None:
    f = map_from_json(load_json(args.map))
    grades = check_grade_preserving(f)
    document: Dict[str, Any] = {"grade_preserving": grades.to_json()}
    if grades.ok:
        document["tree_map"] = vertex_map_to_json(induced_tree_map(f))
        portion = check_tree_portion_preserving(f)
        document["tree_portion"] = {
            "injective": portion.injective,
            "tree_preserving": portion.tree_preserving,
            "witness": portion.witness,
        }
    if grades.ok and grades.injective:
        report = check_piecewise_injectivity(
            f, samples=args.samples, max_length=args.max_length, seed=args.seed
        )
        document["injectivity"] = report.to_json()
    print(dumps(document), file=out)
    if not grades.ok:
        raise CommandFailed(grades.message)


def cmd_collapse_wire(args: argparse.Namespace, out: TextIO) -> None:
    space = read_space(args.space)
    collapse = string_light_collapse(
        space.graph,
        space.grading,
        samples=args.samples,
        max_length=args.max_length,
        seed=args.seed,
    )
    if args.dot:
        print(graph_to_dot(collapse.wedge, collapse.map.target_grading, name="Y"), file=out)
        return
    document = collapse.report()
    document["wedge"] = space_to_json(collapse.wedge, collapse.map.target_grading)
    document["map"] = vertex_map_to_json(collapse.map.vertex_map)
    print(dumps(document), file=out)


def cmd_lift(args: argparse.Namespace, out: TextIO) -> None:
    space = read_space(args.space)
    loop, base = read_loop(args, space)
    ball = CoverBall(space.graph, space.structure, base, args.radius)
    if args.dot:
        print(cover_ball_to_dot(ball), file=out)
        return
    lift = lift_path(ball, loop)
    document = {
        "vertices": [format_cover_vertex(v) for v in lift.vertices],
        "base": base,
        "closes": lift.closes,
        "radius": args.radius,
    }
    print(dumps(document), file=out)


def cmd_gen(args: argparse.Namespace, out: TextIO) -> None:
    cover = None
    if args.name == "triangle-chain":
        graph, grading = triangle_chain(args.k, args.circumference, args.bridge, args.layout)
    elif args.name == "shrinking-circles":
        graph, grading = shrinking_circles(args.k, shrinking=args.shrinking)
    elif args.name == "wedge-arc":
        graph, grading, cover = wedge_arc()
    else:
        graph, grading = random_space(args.seed, args.n, args.m, args.length_bound)
    if args.dot:
        print(graph_to_dot(graph, grading), file=out)
        return
    document = space_to_json(graph, grading)
    if cover is not None:
        document["cover"] = {
            "graph": graph_to_json(cover.graph),
            "grading": grading_to_json(canonical_grading(cover.graph)),
            "degree": cover.degree,
            "voltages": {str(e): a for e, a in sorted(cover.voltages.items())},
            "projection": vertex_map_to_json(cover.vertex_projection),
        }
    print(dumps(document), file=out)


def cmd_selftest(args: argparse.Namespace, out: TextIO) -> None:
    summary = selftest(args.seed, args.graphs, args.loops, verbose=args.verbose)
    print(dumps(summary), file=out)
    if not summary["passed"]:
        raise TreeGradeInternalError("self test failed")


COMMANDS: Dict[str, Callable[[argparse.Namespace, TextIO], None]] = {
    "decompose": cmd_decompose,
    "validate": cmd_validate,
    "parameterize": cmd_parameterize,
    "quotient": cmd_quotient,
    "retract": cmd_retract,
    "reduce": cmd_reduce,
    "essential": cmd_essential,
    "phi": cmd_phi,
    "checkmap": cmd_checkmap,
    "collapse-wire": cmd_collapse_wire,
    "lift": cmd_lift,
    "gen": cmd_gen,
    "selftest": cmd_selftest,
}


def build_parser(seed: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treegrade",
        description="Computations on tree-graded finite graphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log to standard error")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    def space_command(name: str, help: str, dot: bool = False) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help)
        sub.add_argument("space", help="space (or graph) JSON file")
        if dot:
            sub.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
        return sub

    def sampling_options(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
        sub.add_argument("--max-length", type=int, default=DEFAULT_LOOP_LENGTH)
        sub.add_argument("--seed", type=int, default=seed)

    space_command("decompose", "canonical grading of a graph", dot=True)
    p = space_command("validate", "validate a grading")
    p.add_argument("--bound", type=int, default=DEFAULT_ENUMERATION_BOUND)
    space_command("parameterize", "collapse every piece", dot=True)
    p = space_command("quotient", "collapse the pieces outside --keep", dot=True)
    p.add_argument("--keep", default="", help="comma separated piece ids")
    p.add_argument("--bond", default=None, help="then collapse onto these piece ids")
    p = space_command("retract", "retraction onto a piece or a subgraph")
    p.add_argument("--piece", type=int, default=None)
    p.add_argument("--edges", default=None, help="comma separated edge ids")
    p.add_argument("--vertices", default=None, help="comma separated extra vertices")
    for name, help in (
        ("reduce", "tree-efficient reduction of a loop"),
        ("essential", "decide whether a loop is essential"),
        ("phi", "words of a loop along a filtration"),
        ("lift", "lift a loop to the universal cover"),
    ):
        p = space_command(name, help, dot=(name == "lift"))
        p.add_argument("--loop", default=None, help="comma separated edge tokens, ~id reversed")
        p.add_argument("--loop-file", default=None, help="loop JSON file")
        p.add_argument("--base", default=None, help="base vertex of the loop")
        if name == "phi":
            p.add_argument(
                "--filtration", default=None, help="levels separated by ;, e.g. \"1;1,2\""
            )
            p.add_argument("--filtration-file", default=None, help="filtration JSON file")
        if name == "essential":
            p.add_argument("--oracle", action="store_true", help="cross-check with the oracle")
        if name == "lift":
            p.add_argument("--radius", type=int, default=DEFAULT_RADIUS)

    p = subparsers.add_parser("checkmap", help="check a map of graded graphs")
    p.add_argument("map", help="map JSON file")
    sampling_options(p)
    p = space_command("collapse-wire", "collapse the wire of a string-light space", dot=True)
    sampling_options(p)

    p = subparsers.add_parser("gen", help="generate a space")
    p.add_argument(
        "name", choices=["triangle-chain", "shrinking-circles", "wedge-arc", "random"]
    )
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--circumference", default="3")
    p.add_argument("--bridge", default="1")
    p.add_argument("--layout", choices=["chain", "comb"], default="chain")
    p.add_argument("--shrinking", action="store_true")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--m", type=int, default=10)
    p.add_argument("--length-bound", type=int, default=1)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")

    p = subparsers.add_parser("selftest", help="run the oracle-equivalence suites")
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--graphs", type=int, default=DEFAULT_GRAPHS)
    p.add_argument("--loops", type=int, default=DEFAULT_LOOPS)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Run the command line.

    Parameters
    ----------
    argv : sequence of str, optional
        Arguments without the program name (defaults to `sys.argv[1:]`).
    out : file, optional
        Output stream (defaults to standard output).

    Returns
    -------
    code : int
        0 on success, 2 on invalid input, 1 on a failed internal check.
    """
    out = sys.stdout if out is None else out
    try:
        parser = build_parser(default_seed())
    except TreeGradeInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)

    try:
        COMMANDS[args.command](args, out)
    except CommandFailed as exc:
        logger.info("%s: %s", args.command, exc)
        return EXIT_INPUT
    except TreeGradeInternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except TreeGradeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
