"""
Command line interface.

Exit codes: 0 success or verified true, 1 verified false, 2 usage or
input error, 3 inconclusive because a search budget ran out.
"""
import argparse
import logging
import os
import sys

from . import __version__
from . import perm_core as pc
from . import group_algebra as ga
from . import codes
from . import permfile
from . import search
from . import star_graph
from .report import Report, digest_code, digest_file

LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _default_threads():
    value = os.environ.get('STARCODE_THREADS', '1')
    try:
        return max(1, int(value))
    except ValueError:
        LOG.warning("ignoring STARCODE_THREADS=%r", value)
        return 1


def _common():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (-vv for debug output)')
    parent.add_argument('--json', action='store_true',
                        help='write the report as a JSON object')
    parent.add_argument('-o', '--out', help='output file (default: stdout)')
    return parent


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(
        prog='starcode',
        description='Perfect codes and perfect bitrades in Star graphs.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    construct = commands.add_parser('construct', help='build a code and write it as a .perm file')
    kinds = construct.add_subparsers(dest='kind', metavar='kind')
    kinds.required = True
    p = kinds.add_parser('stab1', parents=[common], help='permutations fixing 1')
    p.add_argument('--n', type=int, required=True)
    p = kinds.add_parser('pgl', parents=[common], help='PGL(2,q) on the projective line')
    p.add_argument('--q', type=int, default=5)
    p.add_argument('--n', type=int, help='embed into this degree (default q+1)')
    p = kinds.add_parser('coset', parents=[common], help='left or right translate of a code')
    p.add_argument('-i', '--in', dest='input', required=True)
    p.add_argument('--by', required=True, help='translating permutation, e.g. "2 1 3 4 5 6"')
    p.add_argument('--side', choices=('left', 'right'), default='right')
    p = kinds.add_parser('lift', parents=[common],
                         help='extend a degree n-1 code by a fixed point and lift it')
    p.add_argument('-i', '--in', dest='input', required=True)
    p.add_argument('--n', type=int, help='target degree (default input degree + 1)')
    p = kinds.add_parser('conjugate', parents=[common], help='conjugate a code')
    p.add_argument('-i', '--in', dest='input', required=True)
    p.add_argument('--by', required=True)

    verify = commands.add_parser('verify', help='check a code or a bitrade')
    checks = verify.add_subparsers(dest='check', metavar='check')
    checks.required = True
    for name, text in (('mindist', 'minimum distance at least 3'),
                       ('perfect', 'perfect code')):
        p = checks.add_parser(name, parents=[common], help=text)
        p.add_argument('-i', '--in', dest='input', required=True)
    p = checks.add_parser('bitrade', parents=[common], help='perfect bitrade (T0, T1)')
    p.add_argument('-i', '--in', dest='input', required=True, help='T0')
    p.add_argument('-j', '--in2', dest='input2', required=True, help='T1')

    classify = commands.add_parser('classify', help='classify perfect codes')
    targets = classify.add_subparsers(dest='target', metavar='target')
    targets.required = True
    p = targets.add_parser('codes', parents=[common], help='perfect codes of S_n up to isomorphism')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--budget-seconds', type=float, default=search.CODE_BUDGET)
    p.add_argument('--threads', type=int, default=_default_threads())

    find = commands.add_parser('search', help='search for bitrades')
    targets = find.add_subparsers(dest='target', metavar='target')
    targets.required = True
    p = targets.add_parser('bitrades', parents=[common], help='volume spectrum of perfect bitrades')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--budget-seconds', type=float, default=search.BITRADE_BUDGET)
    p.add_argument('--limit', type=int, help='list at most this many bitrades in the report')
    p.add_argument('--threads', type=int, default=_default_threads(),
                   help='ignored; the bitrade search runs in one process')

    p = commands.add_parser('embed', parents=[common],
                            help='embed a bitrade into a perfect code; -o writes the code')
    p.add_argument('-i', '--in', dest='input', required=True, help='T0')
    p.add_argument('-j', '--in2', dest='input2', required=True, help='T1')
    p.add_argument('--budget-seconds', type=float, default=search.CODE_BUDGET)
    p.add_argument('--threads', type=int, default=_default_threads())

    p = commands.add_parser('distance', parents=[common],
                            help='distance between two words, or from the identity')
    p.add_argument('words', nargs='+', help='one or two quoted words')

    p = commands.add_parser('info', parents=[common], help='summary of a .perm file')
    p.add_argument('-i', '--in', dest='input', required=True)

    p = commands.add_parser('intersect', parents=[common], help='common codewords of two codes')
    p.add_argument('-i', '--in', dest='input', required=True)
    p.add_argument('-j', '--in2', dest='input2', required=True)
    return parser


def _emit(args, text):
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _read(path, report, key='input'):
    code = permfile.read(path)
    report[key] = path
    report[key + '_sha256'] = digest_file(path)
    return code


def _write_code(args, code, description):
    comments = ['starcode %s' % __version__, description,
                'size %i, sha256 %s' % (len(code), digest_code(code))]
    _emit(args, permfile.format_code(code, comments))
    return EXIT_OK


def _construct(args):
    if args.kind == 'stab1':
        return _write_code(args, codes.stab1_code(args.n), 'construct stab1 --n %i' % args.n)
    if args.kind == 'pgl':
        code = codes.pgl_code(args.q, args.n)
        return _write_code(args, code, 'construct pgl --q %i --n %i' % (args.q, code.degree))
    source = permfile.read(args.input)
    if args.kind == 'coset':
        by = permfile.parse_word(args.by)
        code = codes.coset_code(source, by, args.side)
        return _write_code(args, code, 'construct coset --side %s --by "%s" from %s'
                           % (args.side, ' '.join(map(str, by.word)), args.input))
    if args.kind == 'lift':
        target = source.degree + 1 if args.n is None else args.n
        if target <= source.degree:
            raise ValueError("lift target %i must exceed the input degree %i"
                             % (target, source.degree))
        code = codes.lift_to(source, target)
        return _write_code(args, code, 'construct lift --n %i from %s' % (target, args.input))
    by = permfile.parse_word(args.by)
    code = codes.Code.from_set(ga.conjugate_subgroup(source, by))
    return _write_code(args, code, 'construct conjugate --by "%s" from %s'
                       % (' '.join(map(str, by.word)), args.input))


def _verify(args):
    report = Report('verify ' + args.check)
    if args.check == 'bitrade':
        t0 = _read(args.input, report, 't0')
        t1 = _read(args.input2, report, 't1')
        report['degree'] = t0.degree
        if t0.degree != t1.degree or t0 == t1 or len(t0.intersection(t1)):
            report['bitrade'] = False
        else:
            t = codes.Bitrade(t0, t1)
            ok = codes.verify_bitrade(t)
            report['bitrade'] = ok
            if ok:
                report['volume'] = codes.volume(t)
        result = report['bitrade']
    else:
        code = _read(args.input, report)
        report['degree'] = code.degree
        report['size'] = len(code)
        if args.check == 'mindist':
            result = codes.min_distance_at_least_3(code)
            report['min_distance_at_least_3'] = result
        else:
            result = codes.is_perfect(code)
            report['perfect'] = result
            defect = codes.tiling_defect(code)
            report['uncovered'] = defect.uncovered
            report['overcovered'] = defect.overcovered
    _emit(args, report.render(args.json))
    return EXIT_OK if result else EXIT_FALSE


def _certificate(cert):
    if isinstance(cert, codes.InClass):
        return 'stab1 class, preimage of 1 is %i' % cert.point
    a, b = cert.witness
    return 'not stab1 class, witnesses %s and %s' % (list(a.word), list(b.word))


def _classify(args):
    result = search.classify_perfect_codes(args.n, budget=args.budget_seconds,
                                           threads=args.threads)
    report = Report('classify codes')
    report['n'] = args.n
    report['budget_seconds'] = args.budget_seconds
    report['complete'] = result.report.complete
    report['nodes'] = result.report.nodes
    report['solutions'] = len(result.report.solutions)
    report['classes'] = len(result.classes)
    for k, c in enumerate(result.classes, start=1):
        report['class_%i_count' % k] = c.count
        report['class_%i_certificate' % k] = _certificate(c.certificate)
        report['class_%i_sha256' % k] = digest_code(c.representative)
    _emit(args, report.render(args.json))
    return EXIT_OK if result.report.complete else EXIT_INCONCLUSIVE


def _search(args):
    if args.threads > 1:
        LOG.info("search bitrades runs sequentially, ignoring --threads %i", args.threads)
    spectrum = search.enumerate_bitrades(args.n, budget=args.budget_seconds)
    report = Report('search bitrades')
    report['n'] = args.n
    report['budget_seconds'] = args.budget_seconds
    report['complete'] = spectrum.complete
    report['spectrum_complete'] = spectrum.spectrum_complete
    report['nodes'] = spectrum.nodes
    report['bitrades'] = len(spectrum.bitrades)
    report['volumes'] = list(spectrum.volumes)
    report['searched_volumes'] = list(spectrum.searched)
    report['constructed_volumes'] = list(spectrum.witnessed)
    for v, t in sorted(spectrum.representatives.items()):
        report['volume_%i_t0_sha256' % v] = digest_code(t.t0)
        report['volume_%i_t1_sha256' % v] = digest_code(t.t1)
    if args.limit:
        report['listed'] = [[t.t0.ranks, t.t1.ranks] for t in spectrum.bitrades[:args.limit]]
    _emit(args, report.render(args.json))
    return EXIT_OK if spectrum.complete else EXIT_INCONCLUSIVE


def _embed(args):
    report = Report('embed')
    t0 = _read(args.input, report, 't0')
    t1 = _read(args.input2, report, 't1')
    t = codes.Bitrade(t0, t1)
    embedding = search.embed_bitrade(t, budget=args.budget_seconds, threads=args.threads)
    report['degree'] = t.degree
    report['volume'] = codes.volume(t)
    report['budget_seconds'] = args.budget_seconds
    report['embeddable'] = embedding.found
    report['complete'] = embedding.complete
    if embedding.found:
        report['code_sha256'] = digest_code(embedding.code)
        report['partner_sha256'] = digest_code(embedding.partner)
        if args.out:
            permfile.write(args.out, embedding.code,
                           ['starcode %s' % __version__, 'embedding of %s / %s'
                            % (args.input, args.input2)])
    sys.stdout.write(report.render(args.json))
    if embedding.found:
        return EXIT_OK
    return EXIT_FALSE if embedding.complete else EXIT_INCONCLUSIVE


def _distance(args):
    if len(args.words) > 2:
        raise ValueError("distance takes one or two words")
    words = [permfile.parse_word(w) for w in args.words]
    if len(words) == 1:
        words.insert(0, pc.identity(words[0].degree))
    g, h = words
    report = Report('distance')
    report['from'] = list(g.word)
    report['to'] = list(h.word)
    report['distance'] = star_graph.distance(g, h)
    _emit(args, report.render(args.json))
    return EXIT_OK


def _info(args):
    report = Report('info')
    code = _read(args.input, report)
    report['degree'] = code.degree
    report['size'] = len(code)
    report['sha256'] = digest_code(code)
    report['min_distance_at_least_3'] = codes.min_distance_at_least_3(code)
    report['perfect'] = codes.is_perfect(code)
    if len(code):
        report['certificate'] = _certificate(codes.stab1_class_certificate(code))
        if code.degree <= codes.CANONICAL_CAP:
            canonical = codes.Code(code.degree, codes.canonical_form(code))
            report['canonical_sha256'] = digest_code(canonical)
    report['subgroup'] = ga.is_subgroup(code)
    _emit(args, report.render(args.json))
    return EXIT_OK


def _intersect(args):
    report = Report('intersect')
    a = _read(args.input, report, 'a')
    b = _read(args.input2, report, 'b')
    stats = codes.intersection_stats(a, b)
    report['common'] = stats.common
    report['size_a'] = stats.size_a
    report['size_b'] = stats.size_b
    _emit(args, report.render(args.json))
    return EXIT_OK


def _configure_logging(verbose):
    level = (logging.WARNING, logging.INFO)[verbose] if verbose < 2 else logging.DEBUG
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')
    if verbose:
        logging.getLogger().setLevel(level)


_COMMANDS = {
    'construct': _construct,
    'verify': _verify,
    'classify': _classify,
    'search': _search,
    'embed': _embed,
    'distance': _distance,
    'info': _info,
    'intersect': _intersect,
}


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as e:
        sys.stderr.write('starcode: %s\n' % e)
        return EXIT_USAGE


def main():
    sys.exit(run())
