#!/usr/bin/env python
# -*- coding: utf-8 -*-
# operator.py - Oct 2026
# License: MIT - see the LICENSE file for the full text.

'''This contains the three-valued operator Gamma_D and its iteration to the
least fixpoint.

Gamma_D maps an interpretation v to the statement-wise consensus of each
acceptance condition over all two-valued extensions of v. Since a condition
only looks at the parents of its statement, it is enough to enumerate the
completions of the undecided parents.

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

from .core import (
    DomainError,
    Interpretation3,
    InvariantError,
    T, F, U,
)


#########################
## THE OPERATOR ITSELF ##
#########################

def condition_value(table, values):
    '''This is the consensus of one acceptance table over all completions of
    a (possibly partial) value vector.

    Parameters
    ----------

    table : AcceptanceTable
        The condition of the statement.

    values : sequence of TruthValue3 or int
        Values indexed by statement index. Anything not T or F counts as U.

    Returns
    -------

    TruthValue3

    '''

    tmask = 0
    umask = 0
    for bit, p in enumerate(table.parent_index):
        value = values[p]
        if value == T:
            tmask |= 1 << bit
        elif value != F:
            umask |= 1 << bit

    bits = table.bits
    if not umask:
        return T if bits[tmask] else F

    seen_true = False
    seen_false = False

    # walk all submasks of umask, stopping once both outcomes were seen
    sub = umask
    while True:
        if bits[tmask | sub]:
            seen_true = True
        else:
            seen_false = True
        if seen_true and seen_false:
            return U
        if sub == 0:
            break
        sub = (sub - 1) & umask

    return T if seen_true else F


def gamma_statement(d, v, s):
    '''This applies Gamma_D to v and reads off the value of one statement.

    Parameters
    ----------

    d : Adf
        The ADF.

    v : Interpretation3
        A total interpretation over the statements of d.

    s : StatementId, str or int
        The statement.

    Returns
    -------

    TruthValue3

    '''
    if v.statements != d.names:
        raise DomainError('interpretation is over a different statement set')
    return condition_value(d.conditions[d.statement(s).index], v.values)


def gamma_values(d, values):
    '''
    Gamma_D on a raw value vector. Returns a tuple.

    '''
    return tuple(condition_value(table, values) for table in d.conditions)


def gamma(d, v):
    '''This applies Gamma_D to a whole interpretation.

    Parameters
    ----------

    d : Adf
        The ADF.

    v : Interpretation3
        A total interpretation over the statements of d. It is not modified.

    Returns
    -------

    Interpretation3
        The new interpretation.

    '''
    if v.statements != d.names:
        raise DomainError('interpretation is over a different statement set')
    return Interpretation3(d.names, gamma_values(d, v.values))


####################
## LEAST FIXPOINT ##
####################

def least_fixpoint_trace(d):
    '''This iterates Gamma_D from the all-U interpretation to its least
    fixpoint and returns every step.

    Parameters
    ----------

    d : Adf
        The ADF.

    Returns
    -------

    list of Interpretation3
        The interpretations from all-U up to and including the fixpoint. The
        number of productive steps is len(trace) - 1, never more than the
        number of statements.

    '''

    values = (U,) * len(d)
    trace = [Interpretation3(d.names, values)]

    # each productive step decides at least one more statement
    for step in range(len(d) + 1):

        following = gamma_values(d, values)
        if following == values:
            LOGGER.debug('fixpoint reached after %d step(s)' % step)
            return trace

        values = following
        trace.append(Interpretation3(d.names, values))

    raise InvariantError(
        'no fixpoint after %d applications of the operator' % (len(d) + 1)
    )


def least_fixpoint(d):
    '''
    The grounded interpretation: the least fixpoint of Gamma_D.

    '''
    return least_fixpoint_trace(d)[-1]
