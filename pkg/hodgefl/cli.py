"""
Command line front end.

Every subcommand prints a report, as text or as JSON, and exits with 0 if
all checks pass, 1 if a verification failed and 2 on unusable input.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
from __future__ import print_function

import argparse
import logging
import os
import sys

from hodgefl import __version__
from hodgefl import gkz, micro, serialize
from hodgefl.config import ConfigError, read_config, make_config
from hodgefl.linalg import (IntMatrix, DimensionMismatchError, FiltrationError,
                            rational)
from hodgefl.log import configure_logging
from hodgefl.mono import (ModuleError, UnsupportedError, RmfError, validate, fl,
                          tate_twist, antipode, fourier_inversion_check,
                          hodge_transport_check, restrict_shriek, restrict_star,
                          check_fl_restriction, check_can_var, v_filtration, rmf,
                          check_rmf, czmodel, deltamodel, random_corpus)
from hodgefl.report import Report
from hodgefl.typecheck import TypeCheckError
from hodgefl.util import default
from hodgefl.weyl import ParseError, WeylError, format_element


log = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

INPUT_ERRORS = (TypeCheckError, ModuleError, UnsupportedError, RmfError, gkz.GkzError,
                micro.MicroError, ParseError, WeylError, ConfigError,
                DimensionMismatchError, FiltrationError, ValueError, IOError)

BUILTIN_MODULES = {'czmodel': czmodel, 'deltamodel': deltamodel}


class InputError(Exception):
    """
    Signals unusable command line input.
    """
    pass


def parse_rationals(text):
    """
    ``"0, 1/2"`` as a tuple of rationals.
    """
    if not text.strip():
        return ()
    return tuple(rational(x) for x in text.split(','))


def parse_matrix(text):
    """
    A matrix given as ``"1,1,1;0,1,2"`` or as the path of a JSON file
    holding a list of rows.
    """
    if os.path.isfile(text):
        rows = serialize.load(text)
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise InputError('{0} must contain a list of rows'.format(text))
        return IntMatrix(rows)
    return IntMatrix.parse(text)


def load_module(name):
    if name in BUILTIN_MODULES and not os.path.exists(name):
        return BUILTIN_MODULES[name]()
    return serialize.load_module(name)


def cmd_gkz(args, config):
    """
    Construct a GKZ system and run every check on it. With ``--strict`` the
    hypotheses on ``A`` are checks as well.
    """
    A = parse_matrix(args.matrix)
    beta = parse_rationals(args.beta) if args.beta is not None else (0,) * A.rows
    system = gkz.construct(A, beta, bound=config.lattice_bound)

    report = Report('gkz')
    report.info['system'] = system.to_json()
    report.info['torus'] = [format_element(e) for e in gkz.torus_operators(beta)]
    report.extend(gkz.euler_box_commutators(system), 'commutators')
    fourier = gkz.fourier_report(system)
    report.extend(fourier, 'fourier')
    report.info['fourier'] = fourier.info
    degrees = gkz.homogeneity_degree_check(system)
    report.extend(degrees, 'degrees')
    report.info['balanced'] = degrees.info['balanced']
    report.extend(gkz.toric_vanishing(system, config.torus_points, config.seed), 'toric')
    if args.strict:
        for flag in ('homogeneous', 'pointed', 'columns_span'):
            report.add('hypotheses.' + flag, system.flags[flag],
                       None if system.flags[flag] else str(system.A))
    return report


def _module_report(name, M):
    report = Report(name)
    report.extend(validate(M), 'valid')
    report.info['module'] = serialize.module_to_json(M)
    return report


def mono_validate(M, args, config):
    return validate(M)


def mono_fl(M, args, config):
    transformed = fl(M)
    report = _module_report('fl', transformed)
    report.extend(hodge_transport_check(M, transformed), 'transport')
    # a module vanishing above its window is supported at the origin
    report.info['supported-at-origin'] = {'input': not M.high_flag,
                                          'output': not transformed.high_flag}
    return report


def mono_twist(M, args, config):
    return _module_report('twist', tate_twist(M, args.by))


def mono_antipode(M, args, config):
    return _module_report('antipode', antipode(M))


def mono_inversion(M, args, config):
    return fourier_inversion_check(M)


def mono_restrict(M, args, config):
    report = Report('restrict')
    for name, complex_ in (('shriek', restrict_shriek(M)), ('star', restrict_star(M))):
        report.add(name + '.filtered', complex_.is_filtered())
        report.info[name] = complex_.to_json()
        report.info[name]['cohomology'] = complex_.cohomology_dims()
    return report


def mono_flrestrict(M, args, config):
    return check_fl_restriction(M)


def mono_canvar(M, args, config):
    return check_can_var(M)


def mono_vfilt(M, args, config):
    V, report = v_filtration(M)
    report.info['filtration'] = V.to_json()
    return report


MONO_COMMANDS = {
    'validate': mono_validate,
    'fl': mono_fl,
    'twist': mono_twist,
    'antipode': mono_antipode,
    'inversion': mono_inversion,
    'restrict': mono_restrict,
    'flrestrict': mono_flrestrict,
    'canvar': mono_canvar,
    'vfilt': mono_vfilt,
}


def corpus_report(seed, count):
    """
    The corpus suites: validity of ``FL(M)``, transport of Hodge jumps,
    Fourier inversion on unipotent modules, exchange of restrictions for
    ``r = 1`` and the V-filtration axioms.
    """
    report = Report('corpus', seed=seed, count=count)
    for name, M in random_corpus(seed, count):
        report.extend(validate(M), name + '.input')
        transformed = fl(M)
        report.extend(validate(transformed), name + '.fl')
        report.extend(hodge_transport_check(M, transformed), name)
        if M.is_unipotent():
            report.extend(fourier_inversion_check(M), name + '.inversion')
        if M.r == 1:
            report.extend(check_fl_restriction(M), name + '.restriction')
        report.extend(v_filtration(M)[1], name + '.vfilt')
    log.info('corpus suites: {0} checks, {1} failed'
             .format(len(report.checks), len(report.failures)))
    return report


def cmd_mono(args, config):
    if args.action == 'corpus':
        return corpus_report(config.seed, config.corpus_size)
    if args.module is None:
        raise InputError('mono {0} needs an input file'.format(args.action))
    if args.action == 'rmf':
        N, L, center = serialize.rmf_from_json(serialize.load(args.module))
        W = rmf(N, L, center)
        report = Report('rmf', center=center)
        report.add('exists', W is not None)
        if W is not None:
            report.extend(check_rmf(N, L, W, center))
            report.info['W'] = serialize.filtration_to_json(W)
        return report
    return MONO_COMMANDS[args.action](load_module(args.module), args, config)


def _context(args):
    f = [p.strip() for p in args.f.split(',')] if args.f is not None else list(micro.DEFAULT_F)
    return micro.MicroContext(default(args.n, micro.DEFAULT_N), default(args.r, len(f)), f)


def _micro_element(ctx, text):
    if text is None:
        raise InputError('an element is needed, pass --elem')
    e = micro.parse_element(ctx, text)
    if not isinstance(e, micro.MicroElement):
        raise InputError('{0!r} is not an element of the microlocal module'.format(text))
    return e


def cmd_micro(args, config):
    ctx = _context(args)
    if args.action == 'identities':
        return micro.verify_phi_identities(ctx, config.sample_count, config.seed)
    if args.action == 'shifts':
        return micro.verify_filtration_shift(ctx, config.degree_bound)

    e = _micro_element(ctx, args.elem)
    report = Report(args.action, context=ctx.to_json(), element=str(e))
    if args.action == 'phi':
        image = micro.phi(ctx, e)
        report.info['image'] = str(image)
        if not e.is_zero():
            report.info['levels'] = {
                'element': [micro.f_level(ctx, e), micro.w_level(ctx, e)],
                'image': [micro.f_level(ctx, image), micro.w_level(ctx, image)],
            }
    else:
        parts = micro.eigen_decompose(ctx, e)
        report.info['components'] = dict((l, str(part)) for l, part in sorted(parts.items()))
        for l, part in sorted(parts.items()):
            killed = (micro.theta_y(ctx, part) - micro.s_micro(ctx, part)
                      - part.scale(l))
            report.add('eigenvalue.{0}'.format(l), killed.is_zero())
    return report


def _add_common(parser):
    parser.add_argument('-c', '--config', help='configuration file (default ~/.hodgeflrc)')
    parser.add_argument('--logfile', help='log to this file, rotated on every run')
    parser.add_argument('-d', '--debug', action='store_true', help='log debug messages')
    parser.add_argument('-q', '--quiet', action='store_true', help='log warnings only')
    parser.add_argument('--seed', type=int, help='seed of randomized suites')
    parser.add_argument('--format', choices=('text', 'json'), help='report format')
    parser.add_argument('--output', help='write the report here instead of stdout')
    parser.add_argument('--strict', action='store_true',
                        help='exit with 1 on failed checks (verification commands always do)')


def make_parser():
    parser = argparse.ArgumentParser(
        prog='hodgefl',
        description='Exact checks for Fourier-Laplace transforms of monodromic modules')
    parser.add_argument('--version', action='version', version=__version__)
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    p = commands.add_parser('gkz', help='build and check a GKZ system')
    _add_common(p)
    p.add_argument('--matrix', required=True, help='"1,1,1;0,1,2" or a JSON file')
    p.add_argument('--beta', help='comma separated rationals (default 0)')
    p.add_argument('--bound', dest='lattice_bound', type=int,
                   help='also emit boxes for lattice vectors up to this 1-norm')
    p.add_argument('--points', dest='torus_points', type=int,
                   help='number of random torus points')
    p.set_defaults(run=cmd_gkz, verification=False)

    p = commands.add_parser('mono', help='operations on monodromic modules')
    _add_common(p)
    p.add_argument('action', choices=sorted(list(MONO_COMMANDS) + ['rmf', 'corpus']))
    p.add_argument('module', nargs='?',
                   help='module JSON file, "czmodel" or "deltamodel"; rmf instance for rmf')
    p.add_argument('--by', type=int, default=1, help='twist by this integer')
    p.add_argument('--count', dest='corpus_size', type=int, help='random modules in the corpus')
    p.set_defaults(run=cmd_mono, verification=True)

    p = commands.add_parser('micro', help='the microlocal module and the map phi')
    _add_common(p)
    p.add_argument('action', choices=('phi', 'identities', 'shifts', 'decompose'))
    p.add_argument('--n', type=int, help='dimension of X (default 2)')
    p.add_argument('--r', type=int, help='number of functions (default 2)')
    p.add_argument('--f', help='comma separated polynomials, e.g. "x1^2-x2^3,x1*x2"')
    p.add_argument('--elem', help='element such as "(x1^2 - 1)*y1*dxi^-1*delta_g"')
    p.add_argument('--samples', dest='sample_count', type=int, help='random samples')
    p.add_argument('--bound', dest='degree_bound', type=int, help='degree bound of shifts')
    p.set_defaults(run=cmd_micro, verification=True)
    return parser


def render(report, config):
    if config.format == 'json':
        return report.to_json()
    return report.to_text()


def write(text, output):
    if output is None:
        print(text)
    else:
        with open(output, 'w') as f:
            f.write(text + '\n')


def main(argv=None):
    """
    Run the command line interface.

    :param argv: arguments without the program name, defaults to
                 ``sys.argv[1:]``
    :returns: exit code
    """
    args = make_parser().parse_args(argv)
    level = logging.DEBUG if args.debug else logging.WARNING if args.quiet else logging.INFO
    try:
        config = make_config(read_config(args.config), args)
    except ConfigError as e:
        print('hodgefl: {0}'.format(e), file=sys.stderr)
        return EXIT_INPUT
    configure_logging(level, args.logfile or config.logfile)

    try:
        report = args.run(args, config)
    except InputError as e:
        print('hodgefl: {0}'.format(e), file=sys.stderr)
        return EXIT_INPUT
    except INPUT_ERRORS as e:
        log.debug('input error', exc_info=True)
        print('hodgefl: {0}: {1}'.format(type(e).__name__, e), file=sys.stderr)
        return EXIT_INPUT

    write(render(report, config), config.output)
    if report.passed or not (args.strict or args.verification):
        return EXIT_PASS
    failed = report.failures
    print('hodgefl: {0} of {1} checks failed: {2}'.format(
        len(failed), len(report.checks), ', '.join(c.name for c in failed)), file=sys.stderr)
    return EXIT_FAIL
