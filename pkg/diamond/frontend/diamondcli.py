#!/usr/bin/env python
# -*- coding: utf-8 -*-
# diamondcli.py - Oct 2026
# License: MIT - see the LICENSE file for the full text.

'''This is the command-line front end.

usage: diamond [-h] [-cf] [-m] [-sm] [-g] [-c] [-a]
               [--transform_pform | --transform_prio] [-all] [--version]
               instance

The instance is read from the given file, or from standard input if no file
is given. Options must come before the instance. A bare "-" is taken as an
option by the parser, so pass "-- -" to name standard input explicitly.

'''

#############
## LOGGING ##
#############

import logging
from diamond import log_sub, log_fmt, log_date_fmt

LOGGER = logging.getLogger(__name__)


#############
## IMPORTS ##
#############

import json
import os.path
import sys
from dataclasses import dataclass

from tornado.options import OptionParser, Error as OptionError

from diamond import __version__
from diamond.utils import ProcExecutor, ResultEncoder, setup_worker
from diamond.backend.core import (
    DomainError,
    InvariantError,
    ValidationError,
    T, F,
)
from diamond.backend.syntax import (
    ParseError,
    parse_facts,
    detect_dialect,
    functional_adf,
    formula_adf,
    padf_from_facts,
    serialize_functional,
)
from diamond.backend.transform import formula_to_table, padf_to_adf
from diamond.backend.operator import least_fixpoint_trace
from diamond.backend.semantics import (
    ORACLE_CAP,
    SemanticsKind,
    brute_force,
    compute,
)


##################
## CONFIG TYPES ##
##################

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

STDIN_MARKER = '-'

# (option name, long alias, semantics, help text) in usage-listing order
SEMANTICS_FLAGS = (
    ('cf', 'conflict_free', SemanticsKind.CONFLICT_FREE,
     'compute the conflict free sets'),
    ('m', 'model', SemanticsKind.MODEL,
     'compute the two-valued models'),
    ('sm', 'stablemodel', SemanticsKind.STABLE,
     'compute the stable models'),
    ('g', 'grounded', SemanticsKind.GROUNDED,
     'compute the grounded model'),
    ('c', 'complete', SemanticsKind.COMPLETE,
     'compute the complete models'),
    ('a', 'admissible', SemanticsKind.ADMISSIBLE,
     'compute the admissible models'),
)

# results are always printed in this order
OUTPUT_ORDER = tuple(SemanticsKind)

DEFAULTS_FILE = os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..', 'data',
                 'diamond-defaults.json')
)


@dataclass
class RunConfig:
    '''
    Everything one run of the front end needs.

    '''
    instance_source: str = STDIN_MARKER
    semantics: tuple = ()
    transform: str = 'none'
    output_mode: str = 'text'
    trace: bool = False
    workers: int = 1
    progress: bool = False
    crosscheck: bool = False
    oracle_cap: int = ORACLE_CAP


def load_defaults(path=DEFAULTS_FILE):
    '''
    This reads the site defaults for the options, if present.

    '''
    try:
        with open(path, 'r') as infd:
            return json.load(infd)
    except (OSError, ValueError):
        LOGGER.warning('could not read defaults from %s, using built-ins' %
                       path)
        return {}


def make_option_parser(defaults=None):
    '''This defines all command line options on a fresh OptionParser.

    Option names have their leading dashes stripped by tornado, so "-cf",
    "--cf" and "-all" are all accepted.

    '''

    if defaults is None:
        defaults = load_defaults()

    parser = OptionParser()

    def help_callback(value):
        if value:
            parser.print_help()
            sys.exit(EXIT_OK)

    parser.define('h', default=False, type=bool,
                  help='show this help message and exit',
                  callback=help_callback)

    for short, long_name, _, text in SEMANTICS_FLAGS:
        parser.define(short, default=False, type=bool, help=text)
        parser.define(long_name, default=False, type=bool,
                      help='same as -%s' % short)

    parser.define('transform_pform', default=False, type=bool,
                  help=('transform a propositional formula ADF '
                        'before the computation'))
    parser.define('transform_prio', default=False, type=bool,
                  help='transform a prioritized ADF before the computation')
    parser.define('all', default=False, type=bool,
                  help='compute all sets and models')
    parser.define('version', default=False, type=bool,
                  help='prints the current version')

    # options beyond the original usage listing
    parser.define('output',
                  default=defaults.get('output', 'text'),
                  help='output format: text or json',
                  type=str)
    parser.define('trace', default=False, type=bool,
                  help='also print the grounded iteration trace')
    parser.define('backgroundworkers',
                  default=int(defaults.get('backgroundworkers', 1)),
                  help=('number of worker processes for the search; '
                        '1 runs in-process'),
                  type=int)
    parser.define('crosscheck', default=False, type=bool,
                  help=('also check every result against the brute-force '
                        'oracle on small instances'))
    parser.define('oraclecap',
                  default=int(defaults.get('oraclecap', ORACLE_CAP)),
                  help='the largest instance the oracle cross-check runs on',
                  type=int)
    parser.define('progress', default=False, type=bool,
                  help='show a progress bar on stderr')
    parser.define('debugmode', default=0, type=int,
                  help='start up in debug mode if set to 1.')
    parser.define('conf', default=None, type=str,
                  help='path to a config file with option values')

    return parser


def config_from_options(options, remaining):
    '''This turns parsed options into a RunConfig.

    Raises ValueError on conflicting or missing flags.

    '''

    if options.transform_pform and options.transform_prio:
        raise ValueError('--transform_pform and --transform_prio are '
                         'mutually exclusive')

    if options.output not in ('text', 'json'):
        raise ValueError('unknown output format %r' % options.output)

    if options.backgroundworkers < 1:
        raise ValueError('--backgroundworkers must be at least 1')

    if len(remaining) > 1:
        raise ValueError('only one instance may be given, got %d' %
                         len(remaining))

    if options.all:
        semantics = OUTPUT_ORDER
    else:
        chosen = {kind for short, long_name, kind, _ in SEMANTICS_FLAGS
                  if getattr(options, short) or getattr(options, long_name)}
        semantics = tuple(k for k in OUTPUT_ORDER if k in chosen)

    if options.transform_pform:
        transform = 'pform'
    elif options.transform_prio:
        transform = 'prio'
    else:
        transform = 'none'

    if not semantics and transform == 'none':
        raise ValueError('nothing to do: give at least one semantics flag '
                         'or a transform flag')

    return RunConfig(
        instance_source=remaining[0] if remaining else STDIN_MARKER,
        semantics=semantics,
        transform=transform,
        output_mode=options.output,
        trace=options.trace,
        workers=options.backgroundworkers,
        progress=options.progress,
        crosscheck=options.crosscheck or options.debugmode == 1,
        oracle_cap=options.oraclecap,
    )


##########################
## READING THE INSTANCE ##
##########################

def _decode(data, source):
    '''This decodes instance bytes as UTF-8.

    A decoding failure is reported as a ParseError at the offending byte.

    '''
    if isinstance(data, str):
        return data
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as e:
        head = data[:e.start]
        line = head.count(b'\n') + 1
        column = e.start - (head.rfind(b'\n') + 1) + 1
        raise ParseError('%s is not valid UTF-8: %s' % (source, e.reason),
                         line, column)


def read_instance(source):
    if source == STDIN_MARKER:
        stream = getattr(sys.stdin, 'buffer', sys.stdin)
        return _decode(stream.read(), 'standard input')
    with open(source, 'rb') as infd:
        return _decode(infd.read(), source)


def load_adf(text, transform='none'):
    '''This parses an instance and turns it into a table ADF.

    The dialect is detected from the predicates used, unless a transform
    forces one. Facts outside the chosen dialect are rejected by its parser.

    '''

    facts = parse_facts(text)

    if transform == 'pform':
        dialect = 'formula'
    elif transform == 'prio':
        dialect = 'prio'
    else:
        dialect = detect_dialect(facts)

    LOGGER.debug('reading instance in the %s dialect' % dialect)

    if dialect == 'formula':
        return formula_to_table(formula_adf(facts))
    elif dialect == 'prio':
        return padf_to_adf(padf_from_facts(facts))
    return functional_adf(facts)


#######################
## FORMATTING OUTPUT ##
#######################

def format_interpretation(v):
    '''This prints an interpretation as a set of literals.

    Statements are sorted by name; T is printed bare, F with a "-" prefix and
    U is left out. The all-U interpretation gives an empty line.

    '''
    pairs = sorted(zip(v.statements, v.values))
    return ' '.join(
        name if value == T else '-%s' % name
        for name, value in pairs
        if value in (T, F)
    )


def format_set(members):
    '''
    This prints a conflict-free set as its sorted statement names.

    '''
    return ' '.join(sorted(s.name for s in members))


def _tokens(line):
    return line.split(' ') if line else []


def _literals(result, item):
    if result.semantics is SemanticsKind.CONFLICT_FREE:
        return sorted(s.name for s in item)
    return _tokens(format_interpretation(item))


def write_text(results, trace, out):
    for result in results:
        out.write('[%s] %d\n' % (result.semantics.value, len(result)))
        for item in result:
            if result.semantics is SemanticsKind.CONFLICT_FREE:
                out.write(format_set(item) + '\n')
            else:
                out.write(format_interpretation(item) + '\n')
    if trace is not None:
        out.write('[grounded-trace] %d\n' % len(trace))
        for step in trace:
            out.write(format_interpretation(step) + '\n')


def write_json(results, trace, out):

    document = {'version': __version__, 'results': []}

    for result in results:
        entry = {
            'semantics': result.semantics,
            'count': len(result),
            'interpretations': [_literals(result, x) for x in result],
        }
        if result.semantics is SemanticsKind.GROUNDED:
            entry['undecided'] = sorted(result.interpretations[0].undecided())
        document['results'].append(entry)

    if trace is not None:
        document['grounded_trace'] = [
            _tokens(format_interpretation(step)) for step in trace
        ]

    out.write(json.dumps(document, cls=ResultEncoder, indent=2) + '\n')


#############
## RUNNING ##
#############

def crosscheck_result(adf, result, cap=ORACLE_CAP, raiseonfail=False):
    '''This compares one engine result with the brute-force oracle.

    Parameters
    ----------

    adf : Adf
        The ADF the result was computed on.

    result : ResultSet
        The engine's result.

    cap : int
        Instances with more statements than this are not checked.

    raiseonfail : bool
        If True, re-raises any exception from the oracle.

    Returns
    -------

    bool or None
        True if the oracle agrees, None if the check was skipped or failed.

    Raises
    ------

    InvariantError
        If the oracle and the engine disagree.

    '''

    if len(adf) > cap:
        LOGGER.info('skipping the %s cross-check: %d statements > cap %d' %
                    (result.semantics.value, len(adf), cap))
        return None

    try:
        expected = brute_force(adf, result.semantics, cap=cap)
    except Exception:
        LOGGER.exception('oracle failed for %s' % result.semantics.value)
        if raiseonfail:
            raise
        return None

    if expected.interpretations != result.interpretations:
        raise InvariantError(
            '%s engine found %d results, the oracle %d' %
            (result.semantics.value, len(result), len(expected))
        )

    LOGGER.debug('%s agrees with the oracle' % result.semantics.value)
    return True


def run(cfg, out=None):
    '''This runs the front end for one RunConfig.

    Parameters
    ----------

    cfg : RunConfig
        What to read, transform and compute.

    out : file-like or None
        Where to print results. Defaults to stdout.

    Returns
    -------

    int
        The exit status: 0 on success, 2 on unreadable or ill-formed input,
        3 on an internal invariant failure.

    '''

    if out is None:
        out = sys.stdout

    try:
        text = read_instance(cfg.instance_source)
    except (OSError, ParseError) as e:
        LOGGER.error('could not read instance %s: %s' %
                     (cfg.instance_source, e))
        return EXIT_INPUT

    try:

        adf = load_adf(text, cfg.transform)
        LOGGER.info('loaded ADF with %d statements and %d links' %
                    (len(adf), len(adf.links)))

        if not cfg.semantics:
            out.write(serialize_functional(adf))
            return EXIT_OK

        if cfg.workers > 1:
            with ProcExecutor(max_workers=cfg.workers,
                              initializer=setup_worker) as executor:
                results = [compute(adf, kind, executor, cfg.progress)
                           for kind in cfg.semantics]
        else:
            results = [compute(adf, kind, None, cfg.progress)
                       for kind in cfg.semantics]

        if cfg.crosscheck:
            for result in results:
                crosscheck_result(adf, result, cap=cfg.oracle_cap)

        trace = least_fixpoint_trace(adf) if cfg.trace else None

    except (ValidationError, DomainError) as e:
        LOGGER.error('%s: %s' % (cfg.instance_source, e))
        return EXIT_INPUT

    except InvariantError:
        LOGGER.exception('internal invariant failure')
        return EXIT_INTERNAL

    if cfg.output_mode == 'json':
        write_json(results, trace, out)
    else:
        write_text(results, trace, out)

    return EXIT_OK


##########
## MAIN ##
##########

def main(argv=None, out=None):
    '''
    This is the console script entry point. Returns the exit status.

    '''

    if argv is None:
        argv = sys.argv

    parser = make_option_parser()

    try:
        remaining = parser.parse_command_line(argv, final=False)
        if parser.conf:
            parser.parse_config_file(parser.conf, final=False)
            remaining = parser.parse_command_line(argv, final=False)
        parser.run_parse_callbacks()
    except (OptionError, OSError) as e:
        sys.stderr.write('diamond: %s\n' % e)
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if parser.debugmode == 1 else logging.WARNING,
        style=log_sub,
        format=log_fmt,
        datefmt=log_date_fmt,
        stream=sys.stderr,
    )

    if parser.version:
        (out or sys.stdout).write('diamond %s\n' % __version__)
        return EXIT_OK

    try:
        cfg = config_from_options(parser, remaining)
    except ValueError as e:
        sys.stderr.write('diamond: %s\n' % e)
        parser.print_help()
        return EXIT_USAGE

    return run(cfg, out=out)


def console_main():
    sys.exit(main())


# run the CLI
if __name__ == '__main__':
    console_main()
