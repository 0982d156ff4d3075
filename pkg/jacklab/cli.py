"""
Command-line front end: ``jack-lab <command> [options]``.

Table commands print json, csv or an aligned table. With json, ``jack``, ``g``
and ``ch`` print one nested object and the others one object per row;
``verify`` runs the verification suites and writes JSON-lines reports.
"""

import argparse
import json
import logging
import sys
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO

from pydantic import BaseModel

from jacklab import __version__
from jacklab.algebra.characters import a_top_ch, ch, g_degree_bound, structure_constants
from jacklab.algebra.coeffs import connection_c, connection_c_alpha, connection_h, h_as_beta
from jacklab.algebra.jack import jack
from jacklab.algebra.partitions import Partition, all_partitions
from jacklab.algebra.scalars import alpha_to_str, format_fraction
from jacklab.combinatorics.embeddings import count_embeddings, graph_of_partition, hat_p
from jacklab.combinatorics.handshake import decompose
from jacklab.combinatorics.maps import glue
from jacklab.combinatorics.matchings import Matching, component_type, enumerate_matchings, reference_matchings
from jacklab.combinatorics.nonorientability import (
    EtaPolicy,
    deletion_trace,
    eta,
    face_rooted_list,
    is_unhandled,
)
from jacklab.core.config import settings
from jacklab.core.exceptions import JackLabError, MatchingError, PartitionError, UnknownSuiteError
from jacklab.core.logs import configure_logging
from jacklab.models.schemas import (
    CharacterRow,
    CoefficientRow,
    EmbeddingRow,
    EtaRow,
    HandshakeRow,
    StructureConstantRow,
    JackRow,
    VerificationReport,
    laurent_json,
    partition_text,
    poly_json,
)
from jacklab.utils.tables import FORMATS, render
from jacklab.verify.runner import ALL, available_suites, exit_status, run_suite, write_reports
from jacklab.verify.suites import SUITES

logger = logging.getLogger(__name__)

EXIT_USAGE = 2


class UsageError(Exception):
    """Arguments are well formed but outside what the CLI will compute."""


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _check_limit(n: int, what: str = "n") -> None:
    limit = settings.JACKLAB_CLI_N_LIMIT
    if n > limit:
        raise UsageError(f"{what}={n} exceeds JACKLAB_CLI_N_LIMIT={limit}")


@contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8") as handle:
        yield handle


def _emit(rows: Sequence[BaseModel], args: argparse.Namespace, model) -> None:
    text = render(rows, args.format, model)
    with _output(args.out) as stream:
        if text:
            stream.write(text + "\n")


def _emit_object(payload: Dict[str, Any], args: argparse.Namespace) -> None:
    # nested JSON for the algebraic tables; csv and pretty stay row based
    with _output(args.out) as stream:
        stream.write(json.dumps(payload, ensure_ascii=False) + "\n")


# ============================================================================
# Table commands
# ============================================================================

def cmd_jack(args: argparse.Namespace) -> int:
    _check_limit(args.n)
    expansions = {lam: sorted(jack(lam).items()) for lam in all_partitions(args.n)}
    if args.format == "json":
        _emit_object(
            {
                partition_text(lam): {partition_text(mu): alpha_to_str(value) for mu, value in terms}
                for lam, terms in expansions.items()
            },
            args,
        )
        return 0
    rows = [
        JackRow(lam=partition_text(lam), mu=partition_text(mu), theta=alpha_to_str(value))
        for lam, terms in expansions.items()
        for mu, value in terms
    ]
    _emit(rows, args, JackRow)
    return 0


def cmd_ch(args: argparse.Namespace) -> int:
    if args.lam is not None:
        diagrams = [args.lam]
    else:
        _check_limit(args.n)
        diagrams = list(all_partitions(args.n))
    if args.format == "json":
        values = {partition_text(lam): laurent_json(ch(args.pi, lam)) for lam in diagrams}
        _emit_object(values[partition_text(args.lam)] if args.lam is not None else values, args)
        return 0
    rows = [
        CharacterRow(
            pi=partition_text(args.pi),
            lam=partition_text(lam),
            value=laurent_json(ch(args.pi, lam)),
            a_top=a_top_ch(args.pi, lam),
        )
        for lam in diagrams
    ]
    _emit(rows, args, CharacterRow)
    return 0


def cmd_g(args: argparse.Namespace) -> int:
    _check_limit(args.pi.size + args.sigma.size, "|pi|+|sigma|")
    table = structure_constants(args.pi, args.sigma)
    if args.format == "json":
        _emit_object({partition_text(mu): poly_json(value) for mu, value in table.items()}, args)
        return 0
    rows = [
        StructureConstantRow(
            pi=partition_text(args.pi),
            sigma=partition_text(args.sigma),
            mu=partition_text(mu),
            coefficients=poly_json(value),
            degree_bound=g_degree_bound(args.pi, args.sigma, mu),
        )
        for mu, value in table.items()
    ]
    _emit(rows, args, StructureConstantRow)
    return 0


def cmd_embed(args: argparse.Namespace) -> int:
    row = EmbeddingRow(
        pi=partition_text(args.pi),
        lam=partition_text(args.lam),
        embeddings=count_embeddings(graph_of_partition(args.pi), args.lam),
        negative_conjugate=count_embeddings(
            graph_of_partition(args.pi, conjugate=True), args.lam, negative=True
        ),
        hat_p=hat_p(args.pi, args.lam),
    )
    _emit([row], args, EmbeddingRow)
    return 0


def _unicellular_matchings(lam: Partition) -> List[Matching]:
    eps, delta_lam = reference_matchings(lam)
    return [d for d in enumerate_matchings(lam.size) if component_type(d, eps, delta_lam) == lam]


def cmd_eta(args: argparse.Namespace) -> int:
    lam = args.lam
    _check_limit(lam.size)
    policy = EtaPolicy(args.policy) if args.policy else EtaPolicy.default()
    if args.delta is not None and args.delta.n != lam.size:
        raise UsageError(f"matching on {args.delta.n} labels does not fit faces of size {lam.size}")
    matchings = [args.delta] if args.delta is not None else _unicellular_matchings(lam)

    rows = []
    for delta in matchings:
        maps = face_rooted_list(lam, delta)
        trace = " | ".join(",".join(c.value for c in deletion_trace(M)) for M in maps)
        rows.append(
            EtaRow(
                matching=str(delta),
                bipartite=delta.is_bipartite(),
                orientable=glue(lam, delta).is_orientable(),
                unhandled=is_unhandled(maps),
                eta=eta(maps, policy),
                trace=trace,
            )
        )
    _emit(rows, args, EtaRow)
    return 0


def cmd_handshake(args: argparse.Namespace) -> int:
    _check_limit(args.mu.size, "|mu|")
    split = decompose(args.pi, args.sigma, args.mu)
    row = HandshakeRow(
        pi=partition_text(args.pi),
        sigma=partition_text(args.sigma),
        mu=partition_text(args.mu),
        count=split.count,
        constant=split.constant,
        z_ratio=format_fraction(split.z_ratio),
        oriented_lists=split.oriented_lists,
        holds=split.holds,
    )
    _emit([row], args, HandshakeRow)
    return 0


def cmd_c(args: argparse.Namespace) -> int:
    _check_limit(args.n)
    rows = []
    if args.alpha:
        for (pi, sigma, lam), value in connection_c_alpha(args.n).items():
            rows.append(CoefficientRow(
                pi=partition_text(pi), sigma=partition_text(sigma), lam=partition_text(lam),
                alpha=alpha_to_str(value),
            ))
    else:
        for (pi, sigma, lam), value in connection_c(args.n).items():
            rows.append(CoefficientRow(
                pi=partition_text(pi), sigma=partition_text(sigma), lam=partition_text(lam),
                beta=poly_json(value),
            ))
    _emit(rows, args, CoefficientRow)
    return 0


def cmd_h(args: argparse.Namespace) -> int:
    _check_limit(args.n)
    table = connection_h(args.n)[args.n]
    converted = {} if args.alpha else h_as_beta(table)
    rows = []
    for (pi, sigma, lam), value in table.items():
        row = CoefficientRow(pi=partition_text(pi), sigma=partition_text(sigma), lam=partition_text(lam))
        as_beta = converted.get((pi, sigma, lam))
        if as_beta is not None:
            row.beta = poly_json(as_beta)
        else:
            # kept in α when asked for, or when β has a pole
            row.alpha = alpha_to_str(value)
        rows.append(row)
    _emit(rows, args, CoefficientRow)
    return 0


# ============================================================================
# verify
# ============================================================================

def cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        _emit(available_suites(), args, None)
        return 0
    if args.n is not None:
        _check_limit(args.n)

    reports = run_suite(args.suite, n_max=args.n, seed=args.seed)
    with _output(args.out) as stream:
        if args.format == "json":
            write_reports(reports, stream, timing=args.timing)
        elif reports:
            exclude = None if args.timing else {"wall_time"}
            stream.write(render(reports, args.format, VerificationReport, exclude=exclude) + "\n")

    failed = [r for r in reports if r.blocking_failure]
    for report in failed:
        logger.error(f"FAILED {report.suite}: {report.statement} {report.parameters}")
    logger.info(f"{len(reports) - len(failed)}/{len(reports)} reports without failure")
    return exit_status(reports)


# ============================================================================
# Parser
# ============================================================================

def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", "-f", choices=FORMATS, default="json", help="Output format (default: json)")
    parser.add_argument("--out", "-o", help="Write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jack-lab",
        description="Exact Jack characters, connection coefficients and their combinatorial models",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("jack", help="Power-sum coefficients θ_μ(λ) of every J_λ, λ ⊢ n")
    p.add_argument("--n", type=int, required=True)
    _add_output_options(p)
    p.set_defaults(handler=cmd_jack)

    p = commands.add_parser("ch", help="Normalized Jack character Ch_π(λ) as a Laurent polynomial in A")
    p.add_argument("--pi", type=_partition, required=True)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--lambda", dest="lam", type=_partition, help="One diagram, e.g. 4,3")
    target.add_argument("--n", type=int, help="Every diagram of size n")
    _add_output_options(p)
    p.set_defaults(handler=cmd_ch)

    p = commands.add_parser("g", help="Structure constants g^μ_{π,σ} as polynomials in δ")
    p.add_argument("--pi", type=_partition, required=True)
    p.add_argument("--sigma", type=_partition, required=True)
    _add_output_options(p)
    p.set_defaults(handler=cmd_g)

    p = commands.add_parser("embed", help="Embedding counts of G_π into the diagram of λ")
    p.add_argument("--pi", type=_partition, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    _add_output_options(p)
    p.set_defaults(handler=cmd_embed)

    p = commands.add_parser("eta", help="Deletion trace and η of matchings with unicellular components")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--delta", type=Matching.parse, help='Matching such as "[[1,2],[1^,2^]]" (default: all)')
    p.add_argument("--policy", choices=[policy.value for policy in EtaPolicy])
    _add_output_options(p)
    p.set_defaults(handler=cmd_eta)

    p = commands.add_parser("handshake", help="Hands-shaking count and its decomposition")
    p.add_argument("--pi", type=_partition, required=True)
    p.add_argument("--sigma", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    _add_output_options(p)
    p.set_defaults(handler=cmd_handshake)

    for name, handler, what in (("c", cmd_c, "Connection coefficients c^λ_{π,σ}"),
                                ("h", cmd_h, "Logarithmic coefficients h^λ_{π,σ}")):
        p = commands.add_parser(name, help=f"{what} for all partitions of n")
        p.add_argument("--n", type=int, required=True)
        ring = p.add_mutually_exclusive_group()
        ring.add_argument("--beta", dest="alpha", action="store_false", help="Coefficients in β (default)")
        ring.add_argument("--alpha", dest="alpha", action="store_true", help="Rational functions of α")
        _add_output_options(p)
        p.set_defaults(handler=handler, alpha=False)

    p = commands.add_parser("verify", help="Run verification suites and write JSON-lines reports")
    p.add_argument("--suite", default=ALL, choices=[*SUITES, ALL])
    p.add_argument("--n", type=int, help="Parameter bound (default: per suite)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--list", action="store_true", help="Print the suite catalogue and exit")
    p.add_argument("--timing", action="store_true", help="Include wall time in reports")
    _add_output_options(p)
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    level = {0: None, 1: "INFO"}.get(args.verbose, "DEBUG")
    configure_logging(level)

    try:
        return args.handler(args)
    except (UsageError, UnknownSuiteError, PartitionError, MatchingError) as exc:
        print(f"jack-lab {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except JackLabError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
