#!/usr/bin/env python
# -*- coding: utf-8 -*-
# semantics.py - Oct 2026
# License: MIT - see the LICENSE file for the full text.

'''This enumerates interpretations under the supported semantics:

- conflict-free sets
- admissible interpretations
- complete interpretations
- the grounded interpretation
- two-valued models
- stable models

The engines walk the assignment space statement by statement and prune a
subtree as soon as a statement's operator value under the partial assignment
rules it out. The operator is monotone in the information ordering, so a
value decided under a partial assignment stays decided in every completion.

`brute_force` evaluates the definitions literally over the whole space. It is
the reference the engines are tested against.

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

import itertools
import sys
from dataclasses import dataclass
from enum import Enum
from functools import reduce

from tqdm import tqdm

from .core import (
    Interpretation3,
    InvariantError,
    OracleCapError,
    StatementId,
    T, F, U,
    consensus,
    leq_info_value,
)
from .operator import condition_value, least_fixpoint
from .transform import reduct


###########
## TYPES ##
###########

class SemanticsKind(Enum):
    '''
    The supported semantics. The value is the name used in output headers.

    '''
    CONFLICT_FREE = 'conflict-free'
    ADMISSIBLE = 'admissible'
    COMPLETE = 'complete'
    GROUNDED = 'grounded'
    MODEL = 'model'
    STABLE = 'stable'


TWO_VALUED = (T, F)
THREE_VALUED = (T, F, U)

# default statement cap for the brute-force oracle
ORACLE_CAP = 10

# how many leading statements are fixed per task when the search space is
# split up
SPLIT_DEPTH = 2


@dataclass(frozen=True)
class ResultSet:
    '''The result of one semantics on one ADF.

    `interpretations` holds Interpretation3 objects, except for the
    conflict-free semantics where it holds frozensets of StatementId. Items
    are unique and sorted by their value vector, T < F < U per position.

    '''
    semantics: SemanticsKind
    statements: tuple
    interpretations: tuple

    def __len__(self):
        return len(self.interpretations)

    def __iter__(self):
        return iter(self.interpretations)

    def vectors(self):
        '''
        The value vectors of the results, in result order.

        '''
        return [_vector_of(item, len(self.statements))
                for item in self.interpretations]

    def literal_sets(self):
        '''
        The results as sets of literals: "a" for T, "-a" for F.

        '''
        out = []
        for vector in self.vectors():
            out.append(frozenset(
                (name if value == T else '-%s' % name)
                for name, value in zip(self.statements, vector)
                if value != U and
                not (value == F and
                     self.semantics is SemanticsKind.CONFLICT_FREE)
            ))
        return out


def _vector_of(item, n):
    if isinstance(item, Interpretation3):
        return item.values
    members = {s.index for s in item}
    return tuple(T if i in members else F for i in range(n))


def make_result_set(d, kind, vectors):
    '''
    This turns raw value vectors into a sorted, duplicate-free ResultSet.

    '''
    unique = sorted(set(tuple(v) for v in vectors))

    if kind is SemanticsKind.CONFLICT_FREE:
        items = tuple(
            frozenset(StatementId(name, i)
                      for i, (name, value) in enumerate(zip(d.names, vector))
                      if value == T)
            for vector in unique
        )
    else:
        items = tuple(Interpretation3(d.names, vector) for vector in unique)

    return ResultSet(kind, d.names, items)


#################################
## PRUNING RULES PER SEMANTICS ##
#################################

# each rule is a pair of checks on (assigned value a, operator value g):
# - exact: used once s and all its parents are assigned, so g is final
# - partial: used before that; g can only become more informative later

def _admissible_exact(a, g):
    return a == U or a == g


def _admissible_partial(a, g):
    return a == U or g == U or a == g


def _complete_exact(a, g):
    return a == g


def _complete_partial(a, g):
    return g == U or a == g


def _conflict_free_exact(a, g):
    return a == F or g == T


def _conflict_free_partial(a, g):
    return a == F or g != F


RULES = {
    SemanticsKind.CONFLICT_FREE: (TWO_VALUED,
                                  _conflict_free_exact,
                                  _conflict_free_partial),
    SemanticsKind.ADMISSIBLE: (THREE_VALUED,
                               _admissible_exact,
                               _admissible_partial),
    SemanticsKind.COMPLETE: (THREE_VALUED,
                             _complete_exact,
                             _complete_partial),
    SemanticsKind.MODEL: (TWO_VALUED,
                          _complete_exact,
                          _complete_partial),
}


################
## THE SEARCH ##
################

def search_prefix(d, kind, prefix=()):
    '''This runs the pruned search for one semantics with the first
    statements fixed to `prefix`.

    Parameters
    ----------

    d : Adf
        The ADF.

    kind : SemanticsKind
        One of CONFLICT_FREE, ADMISSIBLE, COMPLETE or MODEL.

    prefix : tuple of TruthValue3
        Values for the first len(prefix) statements.

    Returns
    -------

    list of tuple
        The value vectors of all accepted interpretations in this part of the
        space, in search order.

    '''

    choices, exact, partial = RULES[kind]
    n = len(d)
    conditions = d.conditions

    # statement s gets its final check when the last of s and its parents is
    # assigned
    last = [max((s,) + c.parent_index) for s, c in enumerate(conditions)]
    watchers = [
        tuple(sorted(s for s in set((k,) + d.children[k]) if s <= k))
        for k in range(n)
    ]

    values = [U] * n
    found = []
    pruned = [0]

    def consistent(k):
        for s in watchers[k]:
            g = condition_value(conditions[s], values)
            check = exact if last[s] == k else partial
            if not check(values[s], g):
                return False
        return True

    def extend(k):
        if k == n:
            found.append(tuple(values))
            return
        options = (prefix[k],) if k < len(prefix) else choices
        for a in options:
            values[k] = a
            if consistent(k):
                extend(k + 1)
            else:
                pruned[0] += 1
        values[k] = U

    extend(0)

    LOGGER.debug('%s search with prefix %s: %d found, %d subtrees pruned' %
                 (kind.value, [int(x) for x in prefix], len(found), pruned[0]))
    return found


def _prefixes(d, kind):
    choices = RULES[kind][0]
    return list(itertools.product(choices, repeat=min(SPLIT_DEPTH, len(d))))


def _search(d, kind, executor=None, progress=False):
    '''This runs the pruned search over every prefix, either in-process or on
    an executor, and collects the vectors.

    '''

    prefixes = _prefixes(d, kind)
    vectors = []

    if executor is None:

        for prefix in tqdm(prefixes,
                           desc=kind.value,
                           disable=not progress,
                           file=sys.stderr):
            vectors.extend(search_prefix(d, kind, prefix))

    else:

        tasks = executor.map(search_prefix,
                             itertools.repeat(d),
                             itertools.repeat(kind),
                             prefixes)
        for part in tqdm(tasks,
                         total=len(prefixes),
                         desc=kind.value,
                         disable=not progress,
                         file=sys.stderr):
            vectors.extend(part)

    return vectors


######################
## THE ENUMERATIONS ##
######################

def enumerate_conflict_free(d, executor=None, progress=False):
    '''This finds all conflict-free sets.

    A set M is conflict-free if every s in M is accepted by its condition
    given M restricted to its parents.

    Returns
    -------

    ResultSet
        Frozensets of StatementId.

    '''
    kind = SemanticsKind.CONFLICT_FREE
    return make_result_set(d, kind, _search(d, kind, executor, progress))


def enumerate_admissible(d, executor=None, progress=False):
    '''
    This finds all v with v <=_i Gamma_D(v).

    '''
    kind = SemanticsKind.ADMISSIBLE
    return make_result_set(d, kind, _search(d, kind, executor, progress))


def enumerate_complete(d, executor=None, progress=False):
    '''
    This finds all fixpoints of Gamma_D.

    '''
    kind = SemanticsKind.COMPLETE
    return make_result_set(d, kind, _search(d, kind, executor, progress))


def grounded(d, executor=None, progress=False):
    '''
    The grounded interpretation as a one-element ResultSet.

    '''
    return make_result_set(d, SemanticsKind.GROUNDED,
                           [least_fixpoint(d).values])


def enumerate_models(d, executor=None, progress=False):
    '''
    This finds all two-valued fixpoints of Gamma_D.

    '''
    kind = SemanticsKind.MODEL
    return make_result_set(d, kind, _search(d, kind, executor, progress))


def is_stable(d, v):
    '''This checks a model for stability: every statement of its reduct must
    be T in the reduct's grounded interpretation.

    '''
    grounded_reduct = least_fixpoint(reduct(d, v))
    return all(x == T for x in grounded_reduct.values)


def enumerate_stable(d, executor=None, progress=False):
    '''
    This finds the models that are stable.

    '''
    models = enumerate_models(d, executor=executor, progress=progress)
    stable = [v.values for v in models if is_stable(d, v)]
    LOGGER.debug('%d of %d models are stable' % (len(stable), len(models)))
    return make_result_set(d, SemanticsKind.STABLE, stable)


ENGINES = {
    SemanticsKind.CONFLICT_FREE: enumerate_conflict_free,
    SemanticsKind.ADMISSIBLE: enumerate_admissible,
    SemanticsKind.COMPLETE: enumerate_complete,
    SemanticsKind.GROUNDED: grounded,
    SemanticsKind.MODEL: enumerate_models,
    SemanticsKind.STABLE: enumerate_stable,
}


def compute(d, kind, executor=None, progress=False):
    '''
    This runs the engine for one semantics.

    '''
    return ENGINES[kind](d, executor=executor, progress=progress)


############################
## THE BRUTE-FORCE ORACLE ##
############################

def _accepted_mask(table, accepted):
    mask = 0
    for bit, p in enumerate(table.parent_index):
        if p in accepted:
            mask |= 1 << bit
    return mask


def _completions(values, positions):
    '''
    Every two-valued vector extending `values` on `positions`.

    '''
    undecided = [i for i in positions if values[i] == U]
    for fill in itertools.product(TWO_VALUED, repeat=len(undecided)):
        w = list(values)
        for i, x in zip(undecided, fill):
            w[i] = x
        yield w


def _global_gamma(conditions, positions, values):
    '''This is Gamma_D computed from its definition: the consensus, for each
    statement, of its condition over all global two-valued extensions.

    Statements outside `positions` count as F.

    '''
    outcomes = [[] for _ in positions]
    for w in _completions(values, positions):
        accepted = {i for i in positions if w[i] == T}
        for j, s in enumerate(positions):
            table = conditions[s]
            outcomes[j].append(
                T if table.bits[_accepted_mask(table, accepted)] else F
            )
    return tuple(reduce(consensus, x) for x in outcomes)


def _leq(v1, v2):
    return all(leq_info_value(a, b) for a, b in zip(v1, v2))


def _least(vectors):
    least = [v for v in vectors if all(_leq(v, w) for w in vectors)]
    if len(least) != 1:
        raise InvariantError('no unique least fixpoint among %d' %
                             len(vectors))
    return least[0]


def _brute_fixpoints(conditions, positions):
    found = []
    for values in itertools.product(THREE_VALUED, repeat=len(positions)):
        full = [F] * len(conditions)
        for i, x in zip(positions, values):
            full[i] = x
        if _global_gamma(conditions, positions, full) == values:
            found.append(values)
    return found


def brute_force(d, kind, cap=ORACLE_CAP):
    '''This evaluates the definitions of a semantics literally over the whole
    interpretation space.

    Parameters
    ----------

    d : Adf
        The ADF. Must have at most `cap` statements.

    kind : SemanticsKind
        The semantics to evaluate.

    cap : int
        The maximum number of statements to accept.

    Returns
    -------

    ResultSet

    '''

    n = len(d)
    if n > cap:
        raise OracleCapError(
            'the oracle handles at most %d statements, got %d' % (cap, n)
        )

    conditions = d.conditions
    everything = list(range(n))
    vectors = []

    if kind is SemanticsKind.CONFLICT_FREE:
        for v in itertools.product(TWO_VALUED, repeat=n):
            members = {i for i in everything if v[i] == T}
            if all(conditions[s].bits[_accepted_mask(conditions[s], members)]
                   for s in members):
                vectors.append(v)

    elif kind is SemanticsKind.ADMISSIBLE:
        for v in itertools.product(THREE_VALUED, repeat=n):
            if _leq(v, _global_gamma(conditions, everything, v)):
                vectors.append(v)

    elif kind is SemanticsKind.COMPLETE:
        vectors = _brute_fixpoints(conditions, everything)

    elif kind is SemanticsKind.GROUNDED:
        vectors = [_least(_brute_fixpoints(conditions, everything))]

    else:

        models = [
            v for v in itertools.product(TWO_VALUED, repeat=n)
            if _global_gamma(conditions, everything, v) == v
        ]

        if kind is SemanticsKind.MODEL:
            vectors = models

        else:
            # the reduct: false statements are fixed to F and dropped
            for v in models:
                kept = [i for i in everything if v[i] == T]
                least = _least(_brute_fixpoints(conditions, kept))
                if all(x == T for x in least):
                    vectors.append(v)

    return make_result_set(d, kind, vectors)
