#!/usr/bin/env python
# -*- coding: utf-8 -*-
# core.py - Oct 2026
# License: MIT - see the LICENSE file for the full text.

'''This contains the ADF data model, the three-valued truth domain and the
interpretation algebra used by every other module.

Statements are interned to dense integer indices when an ADF is built. All of
the hot-path structures (acceptance tables, interpretation value vectors) work
on these indices; names only show up at the I/O boundary.

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

from enum import IntEnum
from typing import Dict, Iterable, Mapping, NamedTuple, Sequence, Tuple

import numpy as np


################
## EXCEPTIONS ##
################

class DiamondError(Exception):
    '''
    Base class for all errors raised by this package.

    '''


class DomainError(DiamondError):
    '''
    An operation was called outside of its domain.

    '''


class ValidationError(DiamondError):
    '''
    An ADF (or an instance describing one) is ill-formed.

    '''


class OracleCapError(DiamondError):
    '''
    The brute-force oracle was asked to handle too many statements.

    '''


class InvariantError(DiamondError):
    '''
    An internal invariant failed. This always indicates a bug.

    '''


##################
## TRUTH VALUES ##
##################

class TruthValue3(IntEnum):
    '''The three truth values. The integer order T < F < U is the order used
    to sort value vectors in result sets.

    '''
    T = 0
    F = 1
    U = 2

    @property
    def is_classical(self):
        return self is not TruthValue3.U


T = TruthValue3.T
F = TruthValue3.F
U = TruthValue3.U

# the maximum number of parents a statement may have. the acceptance table of
# a statement holds 2^|parents| entries.
MAX_PARENTS = 20


def consensus(a, b):
    '''
    This is the meet of the information ordering.

    '''
    if a == b and a != U:
        return TruthValue3(a)
    return U


def leq_info_value(a, b):
    '''
    This is the information ordering on single truth values.

    '''
    return a == U or a == b


######################
## DATA MODEL TYPES ##
######################

class StatementId(NamedTuple):
    '''
    A statement name together with its dense index in the owning ADF.

    '''
    name: str
    index: int


class AcceptanceTable:
    '''This is a total acceptance condition over the parents of one statement.

    Bit i of an entry index corresponds to `parents[i]`. Entries are stored as
    a read-only numpy bool array, True standing for T.

    '''

    __slots__ = ('parents', 'entries', 'parent_index', 'bits', '_position')

    def __init__(self, parents, entries):

        self.parents = tuple(parents)
        entries = np.array(entries, dtype=bool).ravel()
        entries.flags.writeable = False
        self.entries = entries

        self.parent_index = tuple(p.index for p in self.parents)
        self._position = {p.index: bit for bit, p in enumerate(self.parents)}

        # plain python bools are much faster to index in the search loops
        self.bits = tuple(bool(x) for x in entries.tolist())

    def __len__(self):
        return len(self.bits)

    def __eq__(self, other):
        if not isinstance(other, AcceptanceTable):
            return NotImplemented
        return (self.parents == other.parents and
                self.bits == other.bits)

    def __hash__(self):
        return hash((self.parents, self.bits))

    def __repr__(self):
        return 'AcceptanceTable(parents=%r, entries=%r)' % (
            [p.name for p in self.parents],
            [('T' if x else 'F') for x in self.bits]
        )

    def mask_of(self, accepted):
        '''This turns a set of accepted statements into an entry index.

        `accepted` may contain StatementIds or plain statement indices.

        '''
        mask = 0
        for item in accepted:
            index = item.index if isinstance(item, StatementId) else item
            try:
                mask |= 1 << self._position[index]
            except KeyError:
                raise DomainError(
                    'statement %r is not a parent of this condition' % (item,)
                )
        return mask

    def members(self, mask):
        '''
        This decodes an entry index back into the parent StatementIds.

        '''
        return frozenset(
            p for bit, p in enumerate(self.parents) if mask >> bit & 1
        )


def eval_condition(table, accepted):
    '''This evaluates an acceptance condition for a set of accepted parents.

    Parameters
    ----------

    table : AcceptanceTable
        The condition to evaluate.

    accepted : iterable of StatementId or int
        The accepted parents. Every item must be a parent in `table`.

    Returns
    -------

    TruthValue3
        Either T or F, never U.

    '''
    return T if table.bits[table.mask_of(accepted)] else F


class Adf:
    '''This is an abstract dialectical framework D = (S, L, C).

    Parameters
    ----------

    statements : sequence of str
        The statement names in declaration order. Their positions become the
        dense statement indices.

    links : iterable of (int, int)
        The links as (parent index, child index) pairs.

    conditions : sequence of AcceptanceTable
        One table per statement, in statement order.

    Nothing is checked here; use `validate_adf` or `build_adf` for that.

    '''

    def __init__(self, statements, links, conditions):

        self.statements = tuple(
            StatementId(name, index) for index, name in enumerate(statements)
        )
        self.names = tuple(s.name for s in self.statements)
        self.links = frozenset((int(x), int(y)) for x, y in links)
        self.conditions = tuple(conditions)

        self._index = {s.name: s.index for s in self.statements}

        children = [[] for _ in self.statements]
        for x, y in sorted(self.links):
            if 0 <= x < len(children):
                children[x].append(y)
        self.children = tuple(tuple(c) for c in children)

    def __len__(self):
        return len(self.statements)

    def __eq__(self, other):
        if not isinstance(other, Adf):
            return NotImplemented
        return (self.names == other.names and
                self.links == other.links and
                self.conditions == other.conditions)

    def __hash__(self):
        return hash((self.names, self.links, self.conditions))

    def __repr__(self):
        return 'Adf(statements=%r, links=%d)' % (list(self.names),
                                                  len(self.links))

    def statement(self, key):
        '''
        This looks up a StatementId by name, index or StatementId.

        '''
        if isinstance(key, StatementId):
            return self.statements[key.index]
        if isinstance(key, str):
            try:
                return self.statements[self._index[key]]
            except KeyError:
                raise DomainError('unknown statement %r' % key)
        return self.statements[key]

    def parents_of(self, key):
        return self.conditions[self.statement(key).index].parents


def build_adf(statements: Sequence[str],
              links: Iterable[Tuple[str, str]],
              tables: Mapping[str, Tuple[Sequence[str], Sequence[bool]]]):
    '''This builds and validates an ADF from names.

    Parameters
    ----------

    statements : sequence of str
        Statement names in declaration order.

    links : iterable of (str, str)
        (parent, child) name pairs.

    tables : dict
        Maps each statement name to a tuple of (parent names, entries), where
        `entries` has 2^len(parents) items and bit i of an entry index refers
        to the i-th parent name.

    Returns
    -------

    Adf
        The validated ADF.

    '''

    index: Dict[str, int] = {}
    for name in statements:
        if name in index:
            raise ValidationError('statement %r is declared twice' % name)
        index[name] = len(index)

    def lookup(name, context):
        try:
            return index[name]
        except KeyError:
            raise ValidationError(
                '%s refers to undeclared statement %r' % (context, name)
            )

    link_pairs = set()
    for x, y in links:
        link_pairs.add((lookup(x, 'link (%s,%s)' % (x, y)),
                        lookup(y, 'link (%s,%s)' % (x, y))))

    conditions = []
    for name in statements:
        if name not in tables:
            raise ValidationError(
                'statement %r has no acceptance condition' % name
            )
        parent_names, entries = tables[name]
        parents = tuple(
            StatementId(p, lookup(p, 'condition of %r' % name))
            for p in parent_names
        )
        conditions.append(AcceptanceTable(parents, entries))

    extra = set(tables) - set(index)
    if extra:
        raise ValidationError(
            'condition given for undeclared statement %r' % sorted(extra)[0]
        )

    return validate_adf(Adf(statements, link_pairs, conditions))


def validate_adf(candidate):
    '''This checks an ADF and returns it unchanged if it is well-formed.

    Checks that every link endpoint is a declared statement, that each parent
    set agrees with the links, that no statement exceeds the parent cap and
    that every table is total.

    Raises ValidationError otherwise.

    '''

    n = len(candidate.statements)

    for x, y in candidate.links:
        if not (0 <= x < n and 0 <= y < n):
            raise ValidationError(
                'link (%s,%s) refers to an undeclared statement' % (x, y)
            )

    if len(candidate.conditions) != n:
        raise ValidationError(
            'expected %d acceptance conditions, got %d' %
            (n, len(candidate.conditions))
        )

    link_parents = [set() for _ in range(n)]
    for x, y in candidate.links:
        link_parents[y].add(x)

    for s, table in zip(candidate.statements, candidate.conditions):

        if len(table.parents) > MAX_PARENTS:
            raise ValidationError(
                'statement %r has %d parents, the maximum is %d' %
                (s.name, len(table.parents), MAX_PARENTS)
            )

        for p in table.parents:
            if not (0 <= p.index < n) or candidate.names[p.index] != p.name:
                raise ValidationError(
                    'condition of %r refers to undeclared statement %r' %
                    (s.name, p.name)
                )

        if len(set(table.parent_index)) != len(table.parent_index):
            raise ValidationError(
                'condition of %r lists a parent twice' % s.name
            )

        if set(table.parent_index) != link_parents[s.index]:
            raise ValidationError(
                'parents of %r in its condition disagree with the links' %
                s.name
            )

        if len(table) != 1 << len(table.parents):
            raise ValidationError(
                'condition of %r is not total: %d entries for %d parents' %
                (s.name, len(table), len(table.parents))
            )

    LOGGER.debug('validated ADF with %d statements, %d links' %
                 (n, len(candidate.links)))
    return candidate


#####################
## INTERPRETATIONS ##
#####################

class Interpretation3:
    '''This is a total three-valued interpretation.

    Values are kept in a tuple indexed by statement index; `statements` holds
    the statement names of the owning ADF so that interpretations over
    different statement sets are never compared by accident.

    '''

    __slots__ = ('statements', 'values')

    def __init__(self, statements, values):
        self.statements = tuple(statements)
        self.values = tuple(TruthValue3(x) for x in values)
        if len(self.values) != len(self.statements):
            raise DomainError('interpretation is not total')

    @classmethod
    def all_unknown(cls, adf):
        return cls(adf.names, (U,) * len(adf.names))

    @classmethod
    def from_literals(cls, adf, literals):
        '''Builds an interpretation from a literal notation: "a" for T, "-a"
        for F; statements not mentioned are U.

        '''
        values = [U] * len(adf.names)
        for lit in literals:
            if lit.startswith('-'):
                values[adf.statement(lit[1:]).index] = F
            else:
                values[adf.statement(lit).index] = T
        return cls(adf.names, values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, key):
        if isinstance(key, StatementId):
            return self.values[key.index]
        if isinstance(key, str):
            try:
                return self.values[self.statements.index(key)]
            except ValueError:
                raise DomainError('unknown statement %r' % key)
        return self.values[key]

    def __eq__(self, other):
        if not isinstance(other, Interpretation3):
            return NotImplemented
        return (self.statements == other.statements and
                self.values == other.values)

    def __hash__(self):
        return hash((self.statements, self.values))

    def __repr__(self):
        return 'Interpretation3({%s})' % ', '.join(self.literals())

    @property
    def is_two_valued(self):
        return U not in self.values

    def literals(self):
        '''
        The literal notation, in statement order: "a" for T, "-a" for F.

        '''
        out = []
        for name, value in zip(self.statements, self.values):
            if value == T:
                out.append(name)
            elif value == F:
                out.append('-%s' % name)
        return out

    def undecided(self):
        return [name for name, value in zip(self.statements, self.values)
                if value == U]


def leq_info(v1, v2):
    '''This is the information ordering lifted to interpretations.

    Raises DomainError if the two are over different statement sets.

    '''
    if v1.statements != v2.statements:
        raise DomainError(
            'interpretations are over different statement sets'
        )
    return all(leq_info_value(a, b) for a, b in zip(v1.values, v2.values))


def associated_extension(v):
    '''
    The set of statements mapped to T.

    '''
    return frozenset(
        StatementId(name, index)
        for index, (name, value) in enumerate(zip(v.statements, v.values))
        if value == T
    )
