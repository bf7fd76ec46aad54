#!/usr/bin/env python
# -*- coding: utf-8 -*-
# generate.py - Oct 2026
# License: MIT - see the LICENSE file for the full text.

'''This generates random instances in all three dialects.

Used to benchmark the engines and to drive the randomised test suites.
Every function takes a numpy Generator so runs are reproducible from a seed.

'''

#############
## LOGGING ##
#############

import logging

# get a logger
LOGGER = logging.getLogger(__name__)


#############
## IMPORTS ##
#############

import numpy as np

from .core import Adf, AcceptanceTable, StatementId, validate_adf
from .syntax import (
    Atom, ConstTrue, ConstFalse, Neg, And, Or, Imp, Iff,
    FormulaAdf,
    Padf,
    transitive_closure,
)


def statement_names(n):
    '''
    Names s0, s1, ... for n statements.

    '''
    return ['s%d' % i for i in range(n)]


def random_adf(n_statements,
               link_probability=0.3,
               max_parents=4,
               rng=None):
    '''This makes a random ADF with uniformly random acceptance tables.

    Parameters
    ----------

    n_statements : int
        The number of statements.

    link_probability : float
        The probability of each possible link (self-links included).

    max_parents : int
        Parents are capped at this many per statement; extra candidate
        parents are dropped at random.

    rng : numpy.random.Generator or None
        The random source. A fresh unseeded one is used if None.

    Returns
    -------

    Adf

    '''

    if rng is None:
        rng = np.random.default_rng()

    names = statement_names(n_statements)
    links = []
    conditions = []

    for s in range(n_statements):

        candidates = np.flatnonzero(
            rng.random(n_statements) < link_probability
        )
        if candidates.size > max_parents:
            candidates = rng.choice(candidates, size=max_parents,
                                    replace=False)

        parents = sorted(int(x) for x in candidates)
        links.extend((p, s) for p in parents)

        entries = rng.random(1 << len(parents)) < 0.5
        conditions.append(AcceptanceTable(
            [StatementId(names[p], p) for p in parents], entries
        ))

    return validate_adf(Adf(names, links, conditions))


def random_formula(names, max_depth, rng):
    '''
    A random formula over `names` no deeper than max_depth.

    '''

    if max_depth <= 0 or rng.random() < 0.3:
        roll = rng.random()
        if roll < 0.08:
            return ConstTrue()
        elif roll < 0.16:
            return ConstFalse()
        return Atom(names[int(rng.integers(len(names)))])

    operator = int(rng.integers(5))
    if operator == 0:
        return Neg(random_formula(names, max_depth - 1, rng))

    node = (And, Or, Imp, Iff)[operator - 1]
    return node(random_formula(names, max_depth - 1, rng),
                random_formula(names, max_depth - 1, rng))


def random_formula_adf(n_statements, max_depth=3, rng=None):
    '''
    This makes a FormulaAdf with one random formula per statement.

    '''
    if rng is None:
        rng = np.random.default_rng()

    names = statement_names(n_statements)
    acs = {name: random_formula(names, max_depth, rng) for name in names}
    return FormulaAdf(tuple(names), acs)


def random_padf(n_statements,
                attack_probability=0.25,
                support_probability=0.15,
                preference_probability=0.2,
                rng=None):
    '''This makes a random prioritised ADF.

    Preferences are only drawn from a lower-index statement to a
    higher-index one, so their closure is always a strict partial order.

    '''

    if rng is None:
        rng = np.random.default_rng()

    n = n_statements
    attacks = list(zip(*np.nonzero(rng.random((n, n)) < attack_probability)))
    supports = list(zip(*np.nonzero(rng.random((n, n)) <
                                    support_probability)))
    preferred = np.triu(rng.random((n, n)) < preference_probability, k=1)

    reach = transitive_closure(n, list(zip(*np.nonzero(preferred))))

    def as_pairs(pairs):
        return [(int(a), int(b)) for a, b in pairs]

    return Padf(statement_names(n),
                as_pairs(supports),
                as_pairs(attacks),
                as_pairs(zip(*np.nonzero(reach))))


#######################
## WRITING INSTANCES ##
#######################

FORMULA_FUNCTORS = {Neg: 'neg', And: 'and', Or: 'or', Imp: 'imp', Iff: 'iff'}


def formula_text(f):
    '''
    The formula dialect text of a formula.

    '''
    if isinstance(f, Atom):
        return f.name
    elif isinstance(f, ConstTrue):
        return 'c(v)'
    elif isinstance(f, ConstFalse):
        return 'c(f)'
    elif isinstance(f, Neg):
        return 'neg(%s)' % formula_text(f.child)
    return '%s(%s,%s)' % (FORMULA_FUNCTORS[type(f)],
                          formula_text(f.left),
                          formula_text(f.right))


def serialize_formula_adf(fa):
    '''
    This writes a FormulaAdf in the formula dialect.

    '''
    lines = [' '.join('statement(%s).' % name for name in fa.statements)]
    lines.extend('ac(%s,%s).' % (name, formula_text(fa.acs[name]))
                 for name in fa.statements)
    return '\n'.join(lines) + '\n'


def serialize_padf(p):
    '''
    This writes a Padf in the prioritised dialect.

    '''
    names = p.names
    lines = [' '.join('s(%s).' % name for name in names)]
    for predicate, pairs in (('lp', p.supports),
                             ('lm', p.attacks),
                             ('pref', p.preferences)):
        if pairs:
            lines.append(' '.join('%s(%s,%s).' % (predicate, names[a],
                                                  names[b])
                                  for a, b in sorted(pairs)))
    return '\n'.join(lines) + '\n'
