#!/usr/bin/env python
# -*- coding: utf-8 -*-
# syntax.py - Oct 2026
# License: MIT - see the LICENSE file for the full text.

'''This contains the parsers for the three instance dialects and the
serializer back to the functional dialect.

All three dialects are sets of ground facts written in the usual logic
programming surface syntax::

    s(a). s(b). l(b,a).    % a comment runs to the end of the line
    co(a). ci(a,1,b).

- functional: s/1, l/2, ci/1, co/1, ci/3, co/3
- formula: statement/1, ac/2 with formulas built from neg/1, and/2, or/2,
  imp/2, iff/2, the constants c(v) and c(f), and statement atoms
- prioritised: s/1, lp/2, lm/2, pref/2

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

from dataclasses import dataclass
from typing import NamedTuple, Tuple, Union

import numpy as np

from lark import Lark
from lark.exceptions import UnexpectedInput

from .core import (
    ValidationError,
    StatementId,
    MAX_PARENTS,
    build_adf,
)


################
## EXCEPTIONS ##
################

class ParseError(ValidationError):
    '''
    An instance could not be parsed. Carries a 1-based line and column.

    '''

    def __init__(self, message, line, column):
        self.message = message
        self.line = line
        self.column = column
        super().__init__('line %s, column %s: %s' % (line, column, message))


#############
## GRAMMAR ##
#############

FACT_GRAMMAR = r'''
start: fact*

fact: NAME "(" arguments ")" "."
    | NAME "."

arguments: term ("," term)*

term: NAME "(" arguments ")"  -> compound
    | NAME                    -> name
    | INT                     -> number

NAME: /[a-z][A-Za-z0-9_]*/
INT: /-?[0-9]+/
COMMENT: /%[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
'''

_FACT_PARSER = Lark(FACT_GRAMMAR, parser='lalr', propagate_positions=True)


class Compound(NamedTuple):
    '''
    A compound ground term like and(a,b).

    '''
    functor: str
    args: tuple


Term = Union[str, int, Compound]


class Fact(NamedTuple):
    '''
    One ground fact, with the position of its predicate name.

    '''
    predicate: str
    args: Tuple[Term, ...]
    line: int
    column: int

    @property
    def signature(self):
        return '%s/%d' % (self.predicate, len(self.args))


# terms nest without bound: walkers keep (node, children_done) pairs on an
# explicit stack and collect finished subresults on a value stack

def _pop_args(values, arity):
    args = values[len(values) - arity:]
    del values[len(values) - arity:]
    return args


def term_text(term):
    '''
    This renders a term back to its source text.

    '''
    values = []
    stack = [(term, False)]

    while stack:
        node, done = stack.pop()
        if not isinstance(node, Compound):
            values.append(str(node))
        elif done:
            args = _pop_args(values, len(node.args))
            values.append('%s(%s)' % (node.functor, ','.join(args)))
        else:
            stack.append((node, True))
            stack.extend((x, False) for x in reversed(node.args))

    return values[0]


def _convert_term(tree):

    values = []
    stack = [(tree, False)]

    while stack:
        node, done = stack.pop()
        if node.data == 'name':
            values.append(str(node.children[0]))
        elif node.data == 'number':
            values.append(int(node.children[0]))
        else:
            functor, arguments = node.children
            if done:
                args = _pop_args(values, len(arguments.children))
                values.append(Compound(str(functor), tuple(args)))
            else:
                stack.append((node, True))
                stack.extend((x, False) for x in reversed(arguments.children))

    return values[0]


def _read_text(stream):
    if hasattr(stream, 'read'):
        return stream.read()
    return stream


def parse_facts(stream):
    '''This parses a fact file into a list of Facts.

    Parameters
    ----------

    stream : str or file-like
        The instance text, or anything with a `read()` method.

    Returns
    -------

    list of Fact
        The facts in file order.

    '''

    text = _read_text(stream)

    try:
        tree = _FACT_PARSER.parse(text)
    except UnexpectedInput as e:
        line, column = getattr(e, 'line', -1), getattr(e, 'column', -1)
        if not isinstance(line, int) or line < 1:
            # lark reports end-of-input errors without a position
            lines = text.split('\n')
            line, column = len(lines), len(lines[-1]) + 1
        raise ParseError('syntax error: %s' % str(e).strip().split('\n')[0],
                         line, column)

    facts = []
    for node in tree.children:
        predicate = node.children[0]
        if len(node.children) > 1:
            args = tuple(_convert_term(x) for x in node.children[1].children)
        else:
            args = ()
        facts.append(Fact(str(predicate), args,
                          predicate.line, predicate.column))

    return facts


def _fail(fact, message):
    raise ParseError(message, fact.line, fact.column)


def _identifier(fact, term):
    if not isinstance(term, str):
        _fail(fact, 'expected a statement name in %s, got %r' %
              (fact.signature, term_text(term)))
    return term


def _check_vocabulary(facts, allowed, dialect):
    for fact in facts:
        if fact.signature not in allowed:
            _fail(fact, 'unexpected fact %s in the %s dialect' %
                  (fact.signature, dialect))


def _declared(facts, predicate):
    '''This collects declared statements in first-appearance order, also
    remembering where each was declared.

    '''
    names, where = [], {}
    for fact in facts:
        if fact.predicate == predicate and len(fact.args) == 1:
            name = _identifier(fact, fact.args[0])
            if name not in where:
                names.append(name)
                where[name] = fact
    return names, where


def _require_declared(fact, name, declared):
    if name not in declared:
        _fail(fact, '%s refers to undeclared statement %r' %
              (fact.signature, name))


############################
## THE FUNCTIONAL DIALECT ##
############################

FUNCTIONAL_VOCABULARY = frozenset(
    ('s/1', 'l/2', 'ci/1', 'co/1', 'ci/3', 'co/3')
)

@dataclass(frozen=True)
class FunctionalFacts:
    '''The functional dialect facts grouped by kind.

    `groups` maps (predicate, statement, group text) to the parents named in
    that group; `unary` maps a statement to its unary ci/co predicates.

    '''
    s_facts: tuple
    l_facts: tuple
    unary: dict
    groups: dict


def functional_facts(facts):
    '''
    This sorts raw facts into FunctionalFacts, checking references.

    '''

    _check_vocabulary(facts, FUNCTIONAL_VOCABULARY, 'functional')
    names, where = _declared(facts, 's')

    links = []
    unary = {}
    groups = {}

    for fact in facts:

        if fact.predicate == 'l':
            x = _identifier(fact, fact.args[0])
            y = _identifier(fact, fact.args[1])
            _require_declared(fact, x, where)
            _require_declared(fact, y, where)
            if (x, y) not in links:
                links.append((x, y))

        elif fact.predicate in ('ci', 'co') and len(fact.args) == 1:
            s = _identifier(fact, fact.args[0])
            _require_declared(fact, s, where)
            if s in unary:
                _fail(fact, 'statement %r has more than one unary ci/co fact'
                      % s)
            unary[s] = (fact.predicate, fact)

        elif fact.predicate in ('ci', 'co'):
            s = _identifier(fact, fact.args[0])
            parent = _identifier(fact, fact.args[2])
            _require_declared(fact, s, where)
            _require_declared(fact, parent, where)
            key = (fact.predicate, s, term_text(fact.args[1]))
            if key not in groups:
                groups[key] = ([], fact)
            if parent not in groups[key][0]:
                groups[key][0].append(parent)

    return FunctionalFacts(tuple(names), tuple(links), unary, groups)


def functional_adf(facts):
    '''This assembles the ADF from functional dialect facts.

    Each ci/co group denotes one subset of the statement's parents. Every
    subset must be denoted exactly once: missing subsets violate totality and
    subsets denoted twice are ambiguous.

    '''

    ff = functional_facts(facts)
    _, where = _declared(facts, 's')

    parents = {name: [] for name in ff.s_facts}
    for x, y in ff.l_facts:
        parents[y].append(x)

    for name in ff.s_facts:
        if len(parents[name]) > MAX_PARENTS:
            _fail(where[name],
                  'statement %r has %d parents, the maximum is %d' %
                  (name, len(parents[name]), MAX_PARENTS))

    # mask -> (value, fact that denoted it) per statement
    denoted = {name: {} for name in ff.s_facts}

    def denote(name, mask, value, fact):
        if mask in denoted[name]:
            _fail(fact, 'subset {%s} of the parents of %r is denoted twice' %
                  (','.join(_subset_names(parents[name], mask)), name))
        denoted[name][mask] = value

    for name, (predicate, fact) in ff.unary.items():
        denote(name, 0, predicate == 'ci', fact)

    for (predicate, name, _), (members, fact) in ff.groups.items():
        position = {p: bit for bit, p in enumerate(parents[name])}
        mask = 0
        for member in members:
            if member not in position:
                _fail(fact, '%r is not a parent of %r' % (member, name))
            mask |= 1 << position[member]
        denote(name, mask, predicate == 'ci', fact)

    tables = {}
    for name in ff.s_facts:

        if name not in ff.unary:
            _fail(where[name],
                  'statement %r has neither ci(%s) nor co(%s)' %
                  (name, name, name))

        size = 1 << len(parents[name])
        missing = [m for m in range(size) if m not in denoted[name]]
        if missing:
            _fail(where[name],
                  'condition of %r is not total: subset {%s} is not denoted' %
                  (name, ','.join(_subset_names(parents[name], missing[0]))))

        entries = np.zeros(size, dtype=bool)
        for mask, value in denoted[name].items():
            entries[mask] = value
        tables[name] = (parents[name], entries)

    return build_adf(ff.s_facts, ff.l_facts, tables)


def _subset_names(parents, mask):
    return [p for bit, p in enumerate(parents) if mask >> bit & 1]


def parse_functional(stream):
    '''This parses an instance in the functional dialect.

    Parameters
    ----------

    stream : str or file-like
        The instance text.

    Returns
    -------

    Adf
        The validated ADF. Parent order is the order in which the l/2 facts
        for each statement first appear.

    '''
    return functional_adf(parse_facts(stream))


#########################
## THE FORMULA DIALECT ##
#########################

@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class ConstTrue:
    pass


@dataclass(frozen=True)
class ConstFalse:
    pass


@dataclass(frozen=True)
class Neg:
    child: object


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True)
class Imp:
    left: object
    right: object


@dataclass(frozen=True)
class Iff:
    left: object
    right: object


FormulaAst = Union[Atom, ConstTrue, ConstFalse, Neg, And, Or, Imp, Iff]

OPERATORS = {
    'neg': (Neg, 1),
    'and': (And, 2),
    'or': (Or, 2),
    'imp': (Imp, 2),
    'iff': (Iff, 2),
}

BINARY_OPERATORS = (And, Or, Imp, Iff)

_CONNECTIVES = {
    And: lambda x, y: x and y,
    Or: lambda x, y: x or y,
    Imp: lambda x, y: (not x) or y,
    Iff: lambda x, y: x == y,
}

FORMULA_VOCABULARY = frozenset(('statement/1', 'ac/2'))


@dataclass(frozen=True)
class FormulaAdf:
    '''
    Statements in declaration order and one formula per statement.

    '''
    statements: tuple
    acs: dict


def formula_atoms(f):
    '''
    The atom names of a formula in left-to-right first-appearance order.

    '''
    out = []
    seen = set()
    stack = [f]

    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            if node.name not in seen:
                seen.add(node.name)
                out.append(node.name)
        elif isinstance(node, Neg):
            stack.append(node.child)
        elif isinstance(node, BINARY_OPERATORS):
            stack.append(node.right)
            stack.append(node.left)

    return out


def eval_formula(f, accepted):
    '''This is the classical two-valued evaluation of a formula.

    Parameters
    ----------

    f : FormulaAst
        The formula.

    accepted : set of str
        Atom x is true iff x is in this set.

    Returns
    -------

    bool

    '''

    values = []
    stack = [(f, False)]

    while stack:

        node, done = stack.pop()

        if isinstance(node, Atom):
            values.append(node.name in accepted)
        elif isinstance(node, ConstTrue):
            values.append(True)
        elif isinstance(node, ConstFalse):
            values.append(False)
        elif isinstance(node, Neg):
            if done:
                values.append(not values.pop())
            else:
                stack.append((node, True))
                stack.append((node.child, False))
        elif isinstance(node, BINARY_OPERATORS):
            if done:
                right = values.pop()
                left = values.pop()
                values.append(_CONNECTIVES[type(node)](left, right))
            else:
                stack.append((node, True))
                stack.append((node.right, False))
                stack.append((node.left, False))
        else:
            raise TypeError('not a formula: %r' % (node,))

    return values[0]


def _formula_from_term(fact, term, declared):

    values = []
    stack = [(term, False)]

    while stack:

        node, done = stack.pop()

        if isinstance(node, str):
            _require_declared(fact, node, declared)
            values.append(Atom(node))
            continue

        elif isinstance(node, int):
            _fail(fact, 'numbers are not formulas: %r' % node)

        if done:
            cls, arity = OPERATORS[node.functor]
            values.append(cls(*_pop_args(values, arity)))
            continue

        if node.functor == 'c' and len(node.args) == 1:
            if node.args[0] == 'v':
                values.append(ConstTrue())
                continue
            elif node.args[0] == 'f':
                values.append(ConstFalse())
                continue
            _fail(fact, 'unknown truth constant %s' % term_text(node))

        if node.functor not in OPERATORS:
            _fail(fact, 'unknown operator %r' % node.functor)

        _, arity = OPERATORS[node.functor]
        if len(node.args) != arity:
            _fail(fact, 'operator %r takes %d argument(s), got %d' %
                  (node.functor, arity, len(node.args)))

        stack.append((node, True))
        stack.extend((x, False) for x in reversed(node.args))

    return values[0]


def formula_adf(facts):
    '''
    This assembles a FormulaAdf from formula dialect facts.

    '''

    _check_vocabulary(facts, FORMULA_VOCABULARY, 'formula')
    names, where = _declared(facts, 'statement')

    acs = {}
    for fact in facts:
        if fact.predicate != 'ac':
            continue
        s = _identifier(fact, fact.args[0])
        _require_declared(fact, s, where)
        if s in acs:
            _fail(fact, 'statement %r has more than one ac fact' % s)
        acs[s] = _formula_from_term(fact, fact.args[1], where)

    for name in names:
        if name not in acs:
            _fail(where[name], 'statement %r has no ac fact' % name)

    return FormulaAdf(tuple(names), acs)


def parse_formula_adf(stream):
    '''This parses an instance in the formula dialect.

    Parameters
    ----------

    stream : str or file-like
        The instance text.

    Returns
    -------

    FormulaAdf
        The statements plus one formula each.

    '''
    return formula_adf(parse_facts(stream))


#############################
## THE PRIORITISED DIALECT ##
#############################

PADF_VOCABULARY = frozenset(('s/1', 'lp/2', 'lm/2', 'pref/2'))


@dataclass(frozen=True)
class PadfFacts:
    s_facts: tuple
    lp_facts: tuple
    lm_facts: tuple
    pref_facts: tuple


class Padf:
    '''This is a prioritised ADF: statements, supporting links, attacking
    links and a strict partial order of preferences.

    Links and preferences are held as index pairs; `preferences` is
    transitively closed, (a, b) meaning a is preferred to b.

    '''

    def __init__(self, statements, supports, attacks, preferences):
        self.statements = tuple(
            StatementId(name, index) for index, name in enumerate(statements)
        )
        self.names = tuple(s.name for s in self.statements)
        self.supports = frozenset(supports)
        self.attacks = frozenset(attacks)
        self.preferences = frozenset(preferences)

    def __repr__(self):
        return 'Padf(statements=%r, supports=%d, attacks=%d, prefs=%d)' % (
            list(self.names), len(self.supports), len(self.attacks),
            len(self.preferences)
        )

    def prefers(self, a, b):
        return (a, b) in self.preferences


def transitive_closure(n, pairs):
    '''
    This closes a relation over range(n) using Warshall's algorithm.

    '''
    reach = np.zeros((n, n), dtype=bool)
    for a, b in pairs:
        reach[a, b] = True
    for k in range(n):
        reach |= np.outer(reach[:, k], reach[k, :])
    return reach


def padf_facts(facts):

    _check_vocabulary(facts, PADF_VOCABULARY, 'prioritised')
    names, where = _declared(facts, 's')

    collected = {'lp': [], 'lm': [], 'pref': []}
    for fact in facts:
        if fact.predicate in collected:
            x = _identifier(fact, fact.args[0])
            y = _identifier(fact, fact.args[1])
            _require_declared(fact, x, where)
            _require_declared(fact, y, where)
            if (x, y) not in collected[fact.predicate]:
                collected[fact.predicate].append((x, y))

    return PadfFacts(tuple(names),
                     tuple(collected['lp']),
                     tuple(collected['lm']),
                     tuple(collected['pref']))


def padf_from_facts(facts):
    '''This assembles a Padf, closing the preference relation and rejecting
    preference cycles.

    '''

    pf = padf_facts(facts)
    index = {name: i for i, name in enumerate(pf.s_facts)}

    def pairs(named):
        return [(index[x], index[y]) for x, y in named]

    reach = transitive_closure(len(pf.s_facts), pairs(pf.pref_facts))

    cyclic = np.flatnonzero(np.diag(reach))
    if cyclic.size > 0:
        name = pf.s_facts[cyclic[0]]
        offending = next(
            f for f in facts
            if f.predicate == 'pref' and name in f.args
        )
        _fail(offending,
              'preferences are not a strict partial order: '
              'statement %r is preferred to itself via a cycle' % name)

    preferences = [(int(a), int(b)) for a, b in zip(*np.nonzero(reach))]

    return Padf(pf.s_facts, pairs(pf.lp_facts), pairs(pf.lm_facts),
                preferences)


def parse_padf(stream):
    '''This parses an instance in the prioritised dialect.

    Parameters
    ----------

    stream : str or file-like
        The instance text.

    Returns
    -------

    Padf
        The prioritised ADF with its preference relation closed.

    '''
    return padf_from_facts(parse_facts(stream))


#######################
## DIALECT DETECTION ##
#######################

def detect_dialect(facts):
    '''This guesses the dialect of an instance from its predicates.

    Returns one of 'formula', 'prio' or 'functional'.

    '''
    predicates = {f.predicate for f in facts}
    if 'ac' in predicates or 'statement' in predicates:
        return 'formula'
    if predicates & {'lp', 'lm', 'pref'}:
        return 'prio'
    return 'functional'


###################
## SERIALIZATION ##
###################

def serialize_functional(d):
    '''This writes an ADF back out in the functional dialect.

    Group terms are consecutive integers from 1 per statement, assigned in
    subset-bitmask order and shared between ci and co.

    Parameters
    ----------

    d : Adf
        A validated ADF.

    Returns
    -------

    str
        The instance text. Empty for an ADF without statements.

    '''

    if len(d) == 0:
        return ''

    lines = [' '.join('s(%s).' % name for name in d.names)]

    link_facts = [
        'l(%s,%s).' % (p.name, s.name)
        for s, table in zip(d.statements, d.conditions)
        for p in table.parents
    ]
    if link_facts:
        lines.append(' '.join(link_facts))

    for s, table in zip(d.statements, d.conditions):
        condition = ['%s(%s).' % ('ci' if table.bits[0] else 'co', s.name)]
        for mask in range(1, len(table)):
            predicate = 'ci' if table.bits[mask] else 'co'
            condition.extend(
                '%s(%s,%d,%s).' % (predicate, s.name, mask, p)
                for p in _subset_names([x.name for x in table.parents], mask)
            )
        lines.append(' '.join(condition))

    return '\n'.join(lines) + '\n'
