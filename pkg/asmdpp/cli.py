import argparse
import csv
import io
import json
import logging
import sys
import time
from enum import Enum
from pathlib import Path
from typing import (Any, Callable, Dict, List, NamedTuple, Optional, Sequence,
                    Tuple)

from pydantic import model_validator

from asmdpp import VERSION, logger
from asmdpp.asm import Asm, asm_stats, enumerate_asms
from asmdpp.cache import GenFunCache
from asmdpp.dpp import Dpp, dpp_stats, enumerate_dpps
from asmdpp.genfun import ObjectKind, genfun_bruteforce
from asmdpp.identities import (BilinearForm, asm_count, refined_counts,
                               verify_boundary_relations, verify_ceq,
                               verify_det_k, verify_det_subset_identity,
                               verify_dj_suite, verify_dppwp,
                               verify_l_condensation, verify_ldet,
                               verify_lgv_suite, verify_perm, verify_refined,
                               verify_specializations,
                               verify_star_invariant_equality,
                               verify_symmetry_laws, verify_theorem1,
                               verify_theorem2)
from asmdpp.paths import (PathFamily, dpp_to_nilp, enumerate_nilps,
                          nilp_stats, nilp_to_dpp)
from asmdpp.sixvertex import (SvConfig, asm_to_sv, enumerate_svs, sv_stats,
                              sv_to_asm, verify_ik, verify_sv_bazin_random,
                              verify_zczasm_random)
from asmdpp.utils import (DEFAULT_CAPS, AsmDppError, AsmDppJsonDataclass,
                          Caps, CheckOutcome, canonical_json)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

#: the largest order `verify` uses when neither --n nor --max-n is given
DEFAULT_MAX_N = 4


class Verb(str, Enum):
    """
    This is an :class:`~enum.Enum` that contains the subcommands of the
    command-line front end.
    """
    COUNT = 'count'
    GENFUN = 'genfun'
    STATS = 'stats'
    BIJECT = 'biject'
    TABLE = 'table'
    VERIFY = 'verify'


class Verdict(str, Enum):
    """
    This is an :class:`~enum.Enum` that contains the outcomes of a check.
    """
    PASS = 'pass'
    FAIL = 'fail'


class Command(AsmDppJsonDataclass):
    """
    Dataclass containing a parsed invocation: the verb and the options it
    was given. Options a verb does not use stay at their defaults.
    """
    verb: Verb
    check: Optional[str] = None
    kind: Optional[str] = None
    source: Optional[str] = None
    target: Optional[str] = None
    what: Optional[str] = None
    n: Optional[int] = None
    max_n: Optional[int] = None
    seed: int = 0
    points: Optional[int] = None
    input: Optional[str] = None
    out: Optional[str] = None
    as_json: bool = False
    as_csv: bool = False
    timings: bool = False
    use_cache: bool = True

    @model_validator(mode='after')
    def _check_orders(self) -> 'Command':
        for name in ('n', 'max_n', 'points'):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise AsmDppError(f'--{_dash(name)} must be at least 1')
        if self.n is not None and self.max_n is not None:
            raise AsmDppError('give at most one of --n and --max-n')
        return self


class Report(AsmDppJsonDataclass):
    """
    Dataclass containing the result of one check at one order.
    """
    check: str
    n: int
    verdict: Verdict
    elapsed_ms: Optional[int] = None
    details: str = ''

    @model_validator(mode='after')
    def _check_details(self) -> 'Report':
        if self.verdict == Verdict.FAIL and not self.details:
            raise AsmDppError('a failed check must say what failed')
        return self

    def line(self) -> str:
        text = f'{self.verdict.value.upper()} {self.check} n={self.n}'
        if self.elapsed_ms is not None:
            text += f' [{self.elapsed_ms} ms]'
        if self.details:
            text += f': {self.details}'
        return text


def _dash(name: str) -> str:
    return name.replace('_', '-')


Runner = Callable[[int, Command, Caps], CheckOutcome]


class CheckSpec(NamedTuple):
    run: Runner
    #: smallest order the check makes sense for
    min_n: int
    #: the cap bounding the orders `verify all` tries, if any
    cap: Optional[str]
    odd_only: bool = False
    #: a hard upper limit on the order, independent of caps
    max_n: Optional[int] = None


def _chain(*outcomes: Callable[[], CheckOutcome]) -> CheckOutcome:
    details = []
    for thunk in outcomes:
        outcome = thunk()
        if not outcome:
            return outcome
        if outcome.details:
            details.append(outcome.details)
    return CheckOutcome.success('; '.join(details))


def _points(cmd: Command, default: int) -> int:
    return cmd.points if cmd.points is not None else default


def _theorem1(n: int, cmd: Command, caps: Caps) -> CheckOutcome:
    if n < 2:
        return verify_theorem1(n, caps)
    return _chain(lambda: verify_theorem1(n, caps),
                  lambda: verify_specializations(n, caps))


def _ik(n: int, cmd: Command, caps: Caps) -> CheckOutcome:
    outcome = verify_ik(n, _points(cmd, 20), cmd.seed, caps)
    if not outcome or n < 2:
        return outcome
    bazin = verify_sv_bazin_random(n, seed=cmd.seed, caps=caps)
    return outcome if bazin else bazin


def _zczasm(n: int, cmd: Command, caps: Caps) -> CheckOutcome:
    return verify_zczasm_random(n, _points(cmd, 10), cmd.seed, caps=caps)


def _det_l(n: int, cmd: Command, caps: Caps) -> CheckOutcome:
    return _chain(lambda: verify_ldet(n, caps),
                  lambda: verify_l_condensation(n, caps))


def _dj(n: int, cmd: Command, caps: Caps) -> CheckOutcome:
    return verify_dj_suite(n, _points(cmd, 500), cmd.seed)


def _det_subset(n: int, cmd: Command, caps: Caps) -> CheckOutcome:
    return verify_det_subset_identity(_points(cmd, 100), n, cmd.seed)


def _plain(verify: Callable[[int, Caps], CheckOutcome]) -> Runner:
    return lambda n, cmd, caps: verify(n, caps)


CHECKS: Dict[str, CheckSpec] = {
    'theorem1': CheckSpec(_theorem1, 1, 'genfun'),
    'theorem2-propeq1': CheckSpec(
        _plain(lambda n, caps: verify_theorem2(n, BilinearForm.PROPEQ1,
                                               caps)),
        2, 'genfun'
    ),
    'theorem2-propeq2': CheckSpec(
        _plain(lambda n, caps: verify_theorem2(n, BilinearForm.PROPEQ2,
                                               caps)),
        2, 'genfun'
    ),
    'det-k': CheckSpec(_plain(verify_det_k), 2, 'genfun'),
    'det-l': CheckSpec(_det_l, 2, 'formula'),
    'ceq': CheckSpec(_plain(verify_ceq), 2, 'formula'),
    'ik': CheckSpec(_ik, 1, 'six_vertex'),
    'zczasm': CheckSpec(_zczasm, 2, 'six_vertex'),
    'lgv': CheckSpec(_plain(verify_lgv_suite), 1, 'genfun'),
    'dppwp': CheckSpec(_plain(verify_dppwp), 1, 'formula'),
    'symmetry': CheckSpec(_plain(verify_symmetry_laws), 1, 'genfun'),
    'star-invariant': CheckSpec(_plain(verify_star_invariant_equality), 1,
                                'enumeration', odd_only=True),
    'boundary': CheckSpec(_plain(verify_boundary_relations), 2, 'genfun'),
    'refined': CheckSpec(_plain(verify_refined), 2, 'enumeration'),
    'perm': CheckSpec(_plain(verify_perm), 2, 'genfun'),
    'dj': CheckSpec(_dj, 2, None, max_n=6),
    'det-subset': CheckSpec(_det_subset, 1, None, max_n=6)
}


def _defined_at(spec: CheckSpec, n: int) -> bool:
    if n < spec.min_n or (spec.odd_only and n % 2 == 0):
        return False
    return spec.max_n is None or n <= spec.max_n


def _orders(spec: CheckSpec, top: int, caps: Caps) -> List[int]:
    if spec.cap is not None:
        top = min(top, getattr(caps, spec.cap))
    return [n for n in range(1, top + 1) if _defined_at(spec, n)]


def run_check(name: str, n: int, cmd: Command, caps: Caps) -> Report:
    """
    Runs one registered check at one order and times it.

    :param name: a key of :data:`CHECKS`
    :param n: the order
    :param cmd: the invocation, for seeds and point counts
    :param caps: brute-force limits

    :return: the report; elapsed time is included only with --timings
    """
    spec = CHECKS[name]
    if not _defined_at(spec, n):
        raise AsmDppError(f'check {name} is not defined for n = {n}')
    logger.info('running %s at n=%s', name, n)
    start = time.perf_counter()
    outcome = spec.run(n, cmd, caps)
    elapsed = round((time.perf_counter() - start) * 1000)
    logger.info('finished %s at n=%s in %s ms: %s', name, n, elapsed,
                'pass' if outcome else 'fail')
    return Report(
        check=name,
        n=n,
        verdict=Verdict.PASS if outcome else Verdict.FAIL,
        elapsed_ms=elapsed if cmd.timings else None,
        details=outcome.details
    )


def run_verify(cmd: Command, caps: Caps) -> List[Report]:
    """
    Runs the requested check, or every check, over the requested orders.
    With --n a single order is used; a named check must be defined there,
    while `all` skips the checks that are not. With --max-n (or neither)
    every suitable order up to the bound is used, clipped to the caps.
    """
    names = list(CHECKS) if cmd.check == 'all' else [cmd.check or '']
    if names[0] not in CHECKS:
        raise AsmDppError(f'unknown check {cmd.check!r}')
    reports = []
    for name in names:
        spec = CHECKS[name]
        if cmd.n is not None:
            orders = [cmd.n]
            if cmd.check == 'all' and not _defined_at(spec, cmd.n):
                orders = []
        else:
            orders = _orders(spec, cmd.max_n or DEFAULT_MAX_N, caps)
        for n in orders:
            reports.append(run_check(name, n, cmd, caps))
    return reports


def run_count(cmd: Command, caps: Caps) -> Dict[str, Any]:
    """
    Counts objects of one kind by enumeration and cross-checks the count
    against the other side of its bijection.

    :return: ``{"object": ..., "n": ..., "count": ...}``
    """
    n = cmd.n or 1
    caps.require('enumeration', n)
    kind = cmd.kind or 'asm'
    if kind in ('asm', 'sv'):
        asms = sum(1 for _ in enumerate_asms(n))
        svs = sum(1 for _ in enumerate_svs(n))
        if asms != asm_count(n):
            raise AsmDppError(f'{asms} ASMs enumerated, the product formula '
                              f'gives {asm_count(n)}')
        if asms != svs:
            raise AsmDppError(f'{asms} ASMs but {svs} configurations')
        count = asms
    else:
        dpps = sum(1 for _ in enumerate_dpps(n))
        nilps = sum(1 for _ in enumerate_nilps(n))
        if dpps != nilps:
            raise AsmDppError(f'{dpps} DPPs but {nilps} path families')
        count = dpps
    logger.debug('counted %s objects of kind %s, n=%s', count, kind, n)
    return {'object': kind, 'n': n, 'count': count}


def run_genfun(cmd: Command, caps: Caps) -> str:
    """
    Builds the canonical JSON of a generating function, through the cache
    unless --no-cache was given, and writes it to --out if requested.

    :return: the JSON text
    """
    kind = ObjectKind((cmd.kind or 'asm').upper())
    n = cmd.n or 1
    if cmd.use_cache:
        genfun = GenFunCache().get_or_compute(kind, n, caps)
    else:
        genfun = genfun_bruteforce(kind, n, caps)
    text = canonical_json(genfun.to_json())
    if cmd.out:
        Path(cmd.out).write_text(text)
        logger.debug('wrote %s', cmd.out)
    return text


def _map_objects(path: str, convert: Callable[[Dict[str, Any]], Any]) -> Any:
    # a file holding one object gives one result, a list gives a list
    data = json.loads(Path(path).read_text())
    items = data if isinstance(data, list) else [data]
    if not all(isinstance(item, dict) for item in items):
        raise AsmDppError(f'{path} must hold a JSON object or a list of them')
    results = [convert(item) for item in items]
    return results if isinstance(data, list) else results[0]


def _stats_of(kind: str, item: Dict[str, Any]) -> Dict[str, Any]:
    if kind == 'asm':
        return asm_stats(Asm.from_json(item)).model_dump(by_alias=True)
    if kind == 'dpp':
        return dpp_stats(Dpp.from_json(item)).model_dump(by_alias=True)
    if kind == 'sv':
        return sv_stats(SvConfig.from_json(item)).model_dump(by_alias=True)
    nu, mu, rho1, rho2 = nilp_stats(PathFamily.from_json(item))
    return {'nu': nu, 'mu': mu, 'rho1': rho1, 'rho2': rho2}


def run_stats(cmd: Command) -> Any:
    """
    Computes the statistics of every object in the input file.
    """
    kind = cmd.kind or 'asm'
    return _map_objects(cmd.input or '', lambda item: _stats_of(kind, item))


Converter = Callable[[Dict[str, Any]], Dict[str, Any]]

_BIJECTIONS: Dict[Tuple[str, str], Converter] = {
    ('asm', 'sv'): lambda d: asm_to_sv(Asm.from_json(d)).to_json(),
    ('sv', 'asm'): lambda d: sv_to_asm(SvConfig.from_json(d)).to_json(),
    ('dpp', 'nilp'): lambda d: dpp_to_nilp(Dpp.from_json(d)).to_json(),
    ('nilp', 'dpp'): lambda d: nilp_to_dpp(PathFamily.from_json(d)).to_json()
}


def run_biject(cmd: Command) -> Any:
    """
    Applies a bijection to every object in the input file.
    """
    pair = (cmd.source, cmd.target)
    if pair not in _BIJECTIONS:
        raise AsmDppError(f'no bijection from {cmd.source} to {cmd.target}')
    return _map_objects(cmd.input or '', _BIJECTIONS[pair])


def run_table(cmd: Command) -> str:
    """
    Formats the singly- (``ank``) or doubly-refined (``anij``) counts of
    order n as canonical JSON or as CSV sorted by index.
    """
    table = refined_counts(cmd.n or 2)
    if cmd.as_csv:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        if cmd.what == 'ank':
            writer.writerow(['n', 'k', 'count'])
            for k, count in enumerate(table.a_nk):
                writer.writerow([table.n, k, count])
        else:
            writer.writerow(['n', 'i', 'j', 'count'])
            for i, row in enumerate(table.a_nij):
                for j, count in enumerate(row):
                    writer.writerow([table.n, i, j, count])
        return buffer.getvalue()
    field = 'a_nk' if cmd.what == 'ank' else 'a_nij'
    return canonical_json(
        table.model_dump(by_alias=True, include={'n', 'a_n', field})
    )


def _parse_caps(overrides: Sequence[str]) -> Caps:
    values: Dict[str, int] = {}
    for item in overrides:
        name, _, value = item.partition('=')
        name = name.replace('-', '_')
        if name not in Caps.model_fields or not value.isdigit():
            raise AsmDppError(f'--cap expects NAME=N with NAME one of '
                              f'{", ".join(Caps.model_fields)}, not {item!r}')
        values[name] = int(value)
    return Caps(**values) if values else DEFAULT_CAPS


def build_parser() -> argparse.ArgumentParser:
    objects = ['asm', 'dpp', 'sv', 'nilp']
    parser = argparse.ArgumentParser(
        prog='asmdpp',
        description='Enumerate ASMs and DPPs, build their generating '
                    'functions and verify the identities relating them.'
    )
    parser.add_argument('--version', action='version', version=VERSION)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log to stderr; repeat for debug output')
    parser.add_argument('--cap', action='append', default=[],
                        metavar='NAME=N',
                        help='override a brute-force cap (enumeration, '
                             'genfun, six_vertex, formula)')
    verbs = parser.add_subparsers(dest='verb', required=True)

    count = verbs.add_parser('count', help='count objects of order n')
    count.add_argument('--object', dest='kind', choices=objects,
                       required=True)
    count.add_argument('--n', type=int, required=True)
    count.add_argument('--json', dest='as_json', action='store_true')

    genfun = verbs.add_parser('genfun', help='export a generating function')
    genfun.add_argument('--object', dest='kind', choices=['asm', 'dpp'],
                        required=True)
    genfun.add_argument('--n', type=int, required=True)
    genfun.add_argument('--out', help='write to this file, not stdout')
    genfun.add_argument('--no-cache', dest='use_cache', action='store_false')

    stats = verbs.add_parser('stats', help='statistics of objects in a file')
    stats.add_argument('--object', dest='kind', choices=objects,
                       required=True)
    stats.add_argument('--input', required=True)

    biject = verbs.add_parser('biject', help='apply a bijection')
    biject.add_argument('--from', dest='source', choices=objects,
                        required=True)
    biject.add_argument('--to', dest='target', choices=objects,
                        required=True)
    biject.add_argument('--input', required=True)

    table = verbs.add_parser('table', help='refined count tables')
    table.add_argument('--what', choices=['ank', 'anij'], required=True)
    table.add_argument('--n', type=int, required=True)
    table.add_argument('--csv', dest='as_csv', action='store_true')

    verify = verbs.add_parser('verify', help='run identity checks')
    verify.add_argument('check', choices=list(CHECKS) + ['all'])
    orders = verify.add_mutually_exclusive_group()
    orders.add_argument('--n', type=int)
    orders.add_argument('--max-n', type=int)
    verify.add_argument('--seed', type=int, default=0)
    verify.add_argument('--points', type=int,
                        help='random points or matrices per check')
    verify.add_argument('--json', dest='as_json', action='store_true')
    verify.add_argument('--timings', action='store_true',
                        help='include elapsed milliseconds in reports')
    return parser


def _command(args: argparse.Namespace) -> Command:
    options = {
        name: value for name, value in vars(args).items()
        if name in Command.model_fields and value is not None
    }
    return Command(**options)


def _attach_handler(verbosity: int) -> Optional[logging.Handler]:
    if not verbosity:
        return None
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(logging.DEBUG if verbosity > 1 else logging.INFO)
    handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
    logger.addHandler(handler)
    return handler


def _dispatch(cmd: Command, caps: Caps) -> int:
    if cmd.verb == Verb.VERIFY:
        reports = run_verify(cmd, caps)
        passed = all(r.verdict == Verdict.PASS for r in reports)
        if cmd.as_json:
            sys.stdout.write(canonical_json({
                'passed': passed,
                'reports': [
                    r.model_dump(by_alias=True, mode='json',
                                 exclude_none=True)
                    for r in reports
                ]
            }))
        else:
            for report in reports:
                print(report.line())
        return EXIT_PASS if passed else EXIT_FAIL
    if cmd.verb == Verb.COUNT:
        result = run_count(cmd, caps)
        if cmd.as_json:
            sys.stdout.write(canonical_json(result))
        else:
            print(result['count'])
    elif cmd.verb == Verb.GENFUN:
        text = run_genfun(cmd, caps)
        if not cmd.out:
            sys.stdout.write(text)
    elif cmd.verb == Verb.STATS:
        sys.stdout.write(canonical_json(run_stats(cmd)))
    elif cmd.verb == Verb.BIJECT:
        sys.stdout.write(canonical_json(run_biject(cmd)))
    else:
        sys.stdout.write(run_table(cmd))
    return EXIT_PASS


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    The ``asmdpp`` console entry point.

    :param argv: arguments without the program name, sys.argv when omitted

    :return: 0 when everything passed, 1 when a check failed, 2 on usage
        or input errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    handler = _attach_handler(args.verbose)
    try:
        caps = _parse_caps(args.cap)
        return _dispatch(_command(args), caps)
    except (AsmDppError, OSError, ValueError) as e:
        print(f'asmdpp: error: {e}', file=sys.stderr)
        return EXIT_USAGE
    finally:
        if handler is not None:
            logger.removeHandler(handler)
