#!/usr/bin/env python
# -*- coding: utf-8 -*-
# transform.py - Oct 2026
# License: MIT - see the LICENSE file for the full text.

'''This compiles formula ADFs and prioritised ADFs into acceptance tables,
and builds the reduct used by the stable semantics.

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

from .core import (
    Adf,
    AcceptanceTable,
    DomainError,
    StatementId,
    ValidationError,
    MAX_PARENTS,
    T,
    build_adf,
    validate_adf,
)
from .syntax import eval_formula, formula_atoms


def _check_cap(name, parents):
    if len(parents) > MAX_PARENTS:
        raise ValidationError(
            'statement %r has %d parents, the maximum is %d' %
            (name, len(parents), MAX_PARENTS)
        )


########################
## FORMULAS TO TABLES ##
########################

def formula_to_table(fa):
    '''This turns every formula into an explicit acceptance table.

    The parents of s are the atoms of its formula in first-appearance order,
    and the links are derived from them.

    Parameters
    ----------

    fa : FormulaAdf
        A parsed formula ADF.

    Returns
    -------

    Adf
        The equivalent ADF with table conditions.

    '''

    links = []
    tables = {}

    for name in fa.statements:

        formula = fa.acs[name]
        parents = formula_atoms(formula)
        _check_cap(name, parents)

        entries = np.zeros(1 << len(parents), dtype=bool)
        for mask in range(len(entries)):
            accepted = {p for bit, p in enumerate(parents) if mask >> bit & 1}
            entries[mask] = eval_formula(formula, accepted)

        links.extend((p, name) for p in parents)
        tables[name] = (parents, entries)

    LOGGER.debug('compiled %d formulas to tables' % len(fa.statements))
    return build_adf(fa.statements, links, tables)


######################
## PRIORITISED ADFS ##
######################

def padf_condition(p, s, members):
    '''This is the acceptance condition of s in the compiled PADF.

    Every attacker a of s in `members` must be defeated: either s > a, or some
    supporter b of s in `members` has b > a.

    '''
    for a in members:
        if (a, s) not in p.attacks or p.prefers(s, a):
            continue
        if not any((b, s) in p.supports and p.prefers(b, a)
                   for b in members):
            return False
    return True


def padf_to_adf(p):
    '''This compiles a prioritised ADF into a plain ADF.

    Parameters
    ----------

    p : Padf
        A parsed prioritised ADF.

    Returns
    -------

    Adf
        The ADF with L = L+ and L- combined. Parents of each statement are
        listed in declaration order; a node that both supports and attacks s
        counts in both roles.

    '''

    n = len(p.statements)
    incoming = [set() for _ in range(n)]
    for x, y in p.supports | p.attacks:
        incoming[y].add(x)

    conditions = []
    for s in p.statements:

        parent_index = sorted(incoming[s.index])
        _check_cap(s.name, parent_index)

        entries = np.zeros(1 << len(parent_index), dtype=bool)
        for mask in range(len(entries)):
            members = [x for bit, x in enumerate(parent_index)
                       if mask >> bit & 1]
            entries[mask] = padf_condition(p, s.index, members)

        conditions.append(
            AcceptanceTable([p.statements[x] for x in parent_index], entries)
        )

    return validate_adf(Adf(p.names, p.supports | p.attacks, conditions))


################
## THE REDUCT ##
################

def reduct(d, v):
    '''This builds the reduct of an ADF with respect to a two-valued
    interpretation.

    The reduct keeps only the statements that v maps to T. False parents are
    dropped from every condition, which fixes them as not accepted.

    Parameters
    ----------

    d : Adf
        The ADF.

    v : Interpretation3
        A two-valued interpretation over the statements of d.

    Returns
    -------

    Adf
        The reduced ADF over E_v.

    '''

    if v.statements != d.names:
        raise DomainError('interpretation is over a different statement set')
    if not v.is_two_valued:
        raise DomainError('the reduct needs a two-valued interpretation')

    kept = [s for s in d.statements if v.values[s.index] == T]
    new_index = {s.index: i for i, s in enumerate(kept)}

    conditions = []
    for s in kept:

        table = d.conditions[s.index]
        bits = [bit for bit, x in enumerate(table.parent_index)
                if x in new_index]

        entries = np.zeros(1 << len(bits), dtype=bool)
        for mask in range(len(entries)):
            original = 0
            for new_bit, old_bit in enumerate(bits):
                if mask >> new_bit & 1:
                    original |= 1 << old_bit
            entries[mask] = table.bits[original]

        parents = [StatementId(table.parents[b].name,
                               new_index[table.parent_index[b]])
                   for b in bits]
        conditions.append(AcceptanceTable(parents, entries))

    links = [(new_index[x], new_index[y]) for x, y in d.links
             if x in new_index and y in new_index]

    return validate_adf(Adf([s.name for s in kept], links, conditions))
