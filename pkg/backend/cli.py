"""Command-line interface for the hypergraph Euler tour toolkit.

Exit codes: 0 success / found / verified, 1 a well-formed negative answer,
2 an input, argument or cap error. Only file formats and JSON go to stdout;
diagnostics go to stderr.
"""

import argparse
import sys
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from limits import SolverLimits
from designs import comments_for, gen_boolean_sqs, gen_sqs8, gen_sts, scale
from errors import HypergraphError
from euler_tours import (
    EulerFamily,
    emit_ucycle,
    euler_family,
    euler_tour,
    line_graph_hamiltonian_cycle,
    parse_walks,
    run_spanning_pipeline,
    verify,
)
from hypergraph import (
    Hypergraph,
    format_hypergraph,
    incidence,
    parse,
    random_hypergraph,
)
from oracle import MODES, oracle_euler
from parity_factor import find_barrier_brute_force
from utils.batch import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, combined_exit_code, run_batch
from utils.formatters import format_cycle, format_report, format_ucycle, format_walks
from utils.thresholds import check_report

Result = Tuple[int, str]


def _read(path: str) -> str:
    if path == '-':
        return sys.stdin.read()
    with open(path, encoding='utf-8') as handle:
        return handle.read()


def _load(path: str) -> Hypergraph:
    hypergraph = parse(_read(path))
    print(f"[PARSE] {path}: n={hypergraph.n} m={hypergraph.m}", file=sys.stderr, flush=True)
    return hypergraph


# Per-file jobs: top-level so the process pool can pickle them.

def check_job(path: str, limits: SolverLimits) -> Result:
    return EXIT_OK, format_report(check_report(_load(path), limits))


def family_job(path: str, limits: SolverLimits) -> Result:
    hypergraph = _load(path)
    family = euler_family(hypergraph)
    if family is None:
        print(f"[TOUR] {path}: no Euler family", file=sys.stderr, flush=True)
        return EXIT_NEGATIVE, ''
    print(f"[TOUR] {path}: family of {len(family.walks)} walks", file=sys.stderr, flush=True)
    return EXIT_OK, format_walks(family.walks)


def tour_job(path: str, limits: SolverLimits, spanning: bool = False) -> Result:
    hypergraph = _load(path)
    if spanning:
        outcome = run_spanning_pipeline(hypergraph, limits)
        if outcome.walk is None:
            return (EXIT_ERROR if outcome.capped else EXIT_NEGATIVE), ''
        return EXIT_OK, format_walks([outcome.walk])

    walk = euler_tour(hypergraph, limits)
    if walk is None:
        print(f"[TOUR] {path}: no Euler tour found", file=sys.stderr, flush=True)
        return EXIT_NEGATIVE, ''
    return EXIT_OK, format_walks([walk])


def barrier_job(path: str, limits: SolverLimits) -> Result:
    hypergraph = _load(path)
    barrier = find_barrier_brute_force(incidence(hypergraph), limits)
    if barrier is None:
        return EXIT_OK, format_report({'barrier': None})
    print(f"[PARITY] {path}: barrier with delta={barrier.delta}", file=sys.stderr, flush=True)
    return EXIT_NEGATIVE, format_report({'barrier': barrier.to_dict()})


def oracle_job(path: str, limits: SolverLimits, mode: str = 'family') -> Result:
    hypergraph = _load(path)
    verdict = oracle_euler(hypergraph, mode, limits)
    answer = {
        'family': verdict.family_exists,
        'tour': verdict.tour_exists,
        'spanningTour': verdict.spanning_tour_exists,
    }[mode]
    return (EXIT_OK if answer else EXIT_NEGATIVE), format_report(verdict.to_dict())


def _tour_pair(path: str, tour_path: str) -> Tuple[Hypergraph, EulerFamily]:
    return _load(path), parse_walks(_read(tour_path))


def verify_command(args: argparse.Namespace, limits: SolverLimits) -> Result:
    hypergraph, family = _tour_pair(args.file, args.tourfile)
    report = verify(hypergraph, family, args.spanning, args.tour, provenance=args.tourfile)
    for violation in report.violations:
        print(f"[TOUR] {violation}", file=sys.stderr, flush=True)
    return (EXIT_OK if report.ok else EXIT_NEGATIVE), format_report(report.to_dict())


def _single_verified_tour(args: argparse.Namespace):
    hypergraph, family = _tour_pair(args.file, args.tourfile)
    report = verify(hypergraph, family, require_tour=True, provenance=args.tourfile)
    if not report.ok:
        for violation in report.violations:
            print(f"[TOUR] {violation}", file=sys.stderr, flush=True)
        return hypergraph, None
    return hypergraph, family.walks[0]


def bicg_command(args: argparse.Namespace, limits: SolverLimits) -> Result:
    hypergraph, walk = _single_verified_tour(args)
    if walk is None:
        return EXIT_NEGATIVE, ''
    return EXIT_OK, format_cycle(line_graph_hamiltonian_cycle(hypergraph, walk))


def ucycle_command(args: argparse.Namespace, limits: SolverLimits) -> Result:
    _, walk = _single_verified_tour(args)
    if walk is None:
        return EXIT_NEGATIVE, ''
    return EXIT_OK, format_ucycle(emit_ucycle(walk))


def gen_command(args: argparse.Namespace, limits: SolverLimits) -> Result:
    if args.kind == 'sts':
        hypergraph, name = gen_sts(args.n), f"STS({args.n})"
    elif args.kind == 'sqs8':
        hypergraph, name = gen_sqs8(), 'SQS(8)'
    elif args.kind == 'boolean-sqs':
        hypergraph, name = gen_boolean_sqs(args.m), f"SQS({2 ** args.m})"
    elif args.kind == 'scale':
        hypergraph, name = scale(_load(args.file), args.lam), f"{args.lam}-fold {args.file}"
    else:
        low, high = args.sizes
        hypergraph = random_hypergraph(args.n, args.m, (low, high), args.seed)
        name = f"random(n={args.n}, m={args.m}, seed={args.seed})"
    return EXIT_OK, format_hypergraph(hypergraph, comments_for(name, hypergraph))


FILE_JOBS: Dict[str, Callable[..., Result]] = {
    'check': check_job,
    'family': family_job,
    'tour': tour_job,
    'barrier': barrier_job,
    'oracle': oracle_job,
}

COMMANDS: Dict[str, Callable[[argparse.Namespace, SolverLimits], Result]] = {
    'gen': gen_command,
    'verify': verify_command,
    'bicg': bicg_command,
    'ucycle': ucycle_command,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='hyper-euler',
        description='Euler families and spanning Euler tours of hypergraphs.',
    )
    parser.add_argument('--cap', type=int, default=None,
                        help='state cap for the brute-force barrier and oracle searches')
    parser.add_argument('--flag-cap', type=int, default=None,
                        help='cap on flag subsets examined for flag-connectivity')
    parser.add_argument('--jobs', type=int, default=1,
                        help='worker processes when several files are given')
    verbs = parser.add_subparsers(dest='verb', required=True)

    gen = verbs.add_parser('gen', help='generate a design or random hypergraph')
    kinds = gen.add_subparsers(dest='kind', required=True)
    sts = kinds.add_parser('sts', help='Steiner triple system of order N')
    sts.add_argument('n', type=int)
    kinds.add_parser('sqs8', help='the Steiner quadruple system of order 8')
    boolean = kinds.add_parser('boolean-sqs', help='boolean SQS(2^M)')
    boolean.add_argument('m', type=int)
    scaled = kinds.add_parser('scale', help='repeat every edge of FILE lambda times')
    scaled.add_argument('file')
    scaled.add_argument('lam', type=int, metavar='LAMBDA')
    rand = kinds.add_parser('random', help='random hypergraph')
    rand.add_argument('n', type=int)
    rand.add_argument('m', type=int)
    rand.add_argument('--sizes', type=int, nargs=2, default=(2, 5), metavar=('LO', 'HI'))
    rand.add_argument('--seed', type=int, default=None)

    check = verbs.add_parser('check', help='profile, thresholds and theorem hypotheses')
    check.add_argument('files', nargs='+')

    family = verbs.add_parser('family', help='find an Euler family')
    family.add_argument('files', nargs='+')

    tour = verbs.add_parser('tour', help='find an Euler tour')
    tour.add_argument('files', nargs='+')
    tour.add_argument('--spanning', action='store_true', help='require a spanning tour')

    barrier = verbs.add_parser('barrier', help='brute-force barrier of the incidence graph')
    barrier.add_argument('files', nargs='+')

    oracle = verbs.add_parser('oracle', help='exhaustive existence check')
    oracle.add_argument('files', nargs='+')
    oracle.add_argument('--mode', choices=MODES, default='family')

    for name, help_text in (('verify', 'check walks against a hypergraph'),
                            ('bicg', 'Hamiltonian cycle of the block-intersection graph'),
                            ('ucycle', 'rank-two universal cycle of a tour')):
        sub = verbs.add_parser(name, help=help_text)
        sub.add_argument('file')
        sub.add_argument('tourfile')
        if name == 'verify':
            sub.add_argument('--spanning', action='store_true')
            sub.add_argument('--tour', action='store_true')

    return parser


def _limits(args: argparse.Namespace) -> SolverLimits:
    return SolverLimits().with_overrides(
        barrier_state_cap=args.cap,
        oracle_state_cap=args.cap,
        flag_subset_cap=args.flag_cap,
    )


def _file_job(args: argparse.Namespace, limits: SolverLimits) -> Callable[[str], Result]:
    job = partial(FILE_JOBS[args.verb], limits=limits)
    if args.verb == 'tour':
        return partial(job, spanning=args.spanning)
    if args.verb == 'oracle':
        return partial(job, mode=args.mode)
    return job


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    limits = _limits(args)

    if args.verb in FILE_JOBS:
        files: List[str] = args.files
        results = run_batch(files, _file_job(args, limits), args.jobs)
        for result in results:
            if len(files) > 1:
                sys.stdout.write(f"# {result.path}\n")
            sys.stdout.write(result.output)
        sys.stdout.flush()
        return combined_exit_code(results)

    try:
        code, output = COMMANDS[args.verb](args, limits)
    except HypergraphError as e:
        print(f"[CLI] {e.code}: {e.message}", file=sys.stderr, flush=True)
        return EXIT_ERROR
    except OSError as e:
        print(f"[CLI] cannot read file: {e}", file=sys.stderr, flush=True)
        return EXIT_ERROR
    except UnicodeDecodeError as e:
        print(f"[CLI] INVALID_INPUT: input is not UTF-8 text ({e.reason})", file=sys.stderr, flush=True)
        return EXIT_ERROR

    sys.stdout.write(output)
    sys.stdout.flush()
    return code


if __name__ == '__main__':
    sys.exit(main())
