#!/usr/bin/env python
# -*- coding: utf-8 -*-
# generatecli.py - Oct 2026
# License: MIT - see the LICENSE file for the full text.

'''This writes random instances to stdout, for benchmarks and bug reports.

usage: diamond-generate --statements=8 --linkprob=0.3 --maxparents=4
                        --seed=42 --dialect=functional|formula|prio

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

import sys

import numpy as np
from tornado.options import OptionParser, Error as OptionError

from diamond.backend.core import ValidationError
from diamond.backend.syntax import serialize_functional
from diamond.backend.generate import (
    random_adf,
    random_formula_adf,
    random_padf,
    serialize_formula_adf,
    serialize_padf,
)

DIALECTS = ('functional', 'formula', 'prio')


def make_option_parser():

    parser = OptionParser()

    parser.define('statements', default=8, type=int,
                  help='the number of statements')
    parser.define('linkprob', default=0.3, type=float,
                  help=('the link probability; for prio instances this is '
                        'the attack probability'))
    parser.define('maxparents', default=4, type=int,
                  help='the maximum number of parents per statement')
    parser.define('maxdepth', default=3, type=int,
                  help='the maximum formula depth for formula instances')
    parser.define('seed', default=None, type=int,
                  help='the random seed; unseeded if not given')
    parser.define('dialect', default='functional', type=str,
                  help='one of functional, formula, prio')
    parser.define('debugmode', default=0, type=int,
                  help='start up in debug mode if set to 1.')

    return parser


def generate_instance(dialect, statements, linkprob, maxparents, maxdepth,
                      seed=None):
    '''This generates one instance and returns its text.

    Parameters
    ----------

    dialect : {'functional', 'formula', 'prio'}
        The dialect to write.

    statements : int
        How many statements the instance has.

    linkprob : float
        The link probability, or the attack probability for prio.

    maxparents : int
        The parent cap for functional instances.

    maxdepth : int
        The formula depth cap for formula instances.

    seed : int or None
        The seed for numpy's default_rng.

    Returns
    -------

    str

    '''

    if dialect not in DIALECTS:
        raise ValueError('unknown dialect %r, expected one of %s' %
                         (dialect, ', '.join(DIALECTS)))
    if statements < 0:
        raise ValueError('--statements must not be negative')

    rng = np.random.default_rng(seed)

    if dialect == 'formula':
        return serialize_formula_adf(
            random_formula_adf(statements, max_depth=maxdepth, rng=rng)
        )
    elif dialect == 'prio':
        return serialize_padf(
            random_padf(statements, attack_probability=linkprob, rng=rng)
        )
    return serialize_functional(
        random_adf(statements,
                   link_probability=linkprob,
                   max_parents=maxparents,
                   rng=rng)
    )


def main(argv=None, out=None):
    '''
    This is the console script entry point. Returns the exit status.

    '''

    if argv is None:
        argv = sys.argv
    if out is None:
        out = sys.stdout

    parser = make_option_parser()

    try:
        parser.parse_command_line(argv)
    except OptionError as e:
        sys.stderr.write('diamond-generate: %s\n' % e)
        return 1

    logging.basicConfig(
        level=logging.DEBUG if parser.debugmode == 1 else logging.WARNING,
        style=log_sub,
        format=log_fmt,
        datefmt=log_date_fmt,
        stream=sys.stderr,
    )

    try:
        text = generate_instance(parser.dialect,
                                 parser.statements,
                                 parser.linkprob,
                                 parser.maxparents,
                                 parser.maxdepth,
                                 seed=parser.seed)
    except (ValueError, ValidationError) as e:
        LOGGER.error(str(e))
        return 1

    out.write(text)
    return 0


def console_main():
    sys.exit(main())


if __name__ == '__main__':
    console_main()
