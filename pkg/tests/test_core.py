'''
Tests for the truth values, the ADF data model and interpretations.

'''

import itertools
import unittest

import numpy as np

from diamond.backend.core import (
    AcceptanceTable,
    Adf,
    DomainError,
    Interpretation3,
    StatementId,
    ValidationError,
    MAX_PARENTS,
    T, F, U,
    associated_extension,
    build_adf,
    consensus,
    eval_condition,
    leq_info,
    leq_info_value,
    validate_adf,
)

VALUES = (T, F, U)


def example1():
    return build_adf(
        ['a', 'b', 'c'],
        [('b', 'a'), ('a', 'b'), ('b', 'c')],
        {'a': (['b'], [False, True]),
         'b': (['a'], [False, True]),
         'c': (['b'], [True, False])},
    )


class TestConsensus(unittest.TestCase):

    def test_lattice_laws(self):

        for a, b, c in itertools.product(VALUES, repeat=3):
            self.assertEqual(consensus(a, a), a)
            self.assertEqual(consensus(a, b), consensus(b, a))
            self.assertEqual(consensus(consensus(a, b), c),
                             consensus(a, consensus(b, c)))
            self.assertEqual(consensus(U, a), U)

    def test_meet_of_information_ordering(self):

        for a, b in itertools.product(VALUES, repeat=2):
            m = consensus(a, b)
            self.assertTrue(leq_info_value(m, a))
            self.assertTrue(leq_info_value(m, b))
            # every lower bound is below the meet
            for c in VALUES:
                if leq_info_value(c, a) and leq_info_value(c, b):
                    self.assertTrue(leq_info_value(c, m))

    def test_examples(self):
        self.assertEqual(consensus(T, T), T)
        self.assertEqual(consensus(F, F), F)
        self.assertEqual(consensus(T, F), U)


class TestInformationOrdering(unittest.TestCase):

    def test_partial_order_laws(self):

        for a in VALUES:
            self.assertTrue(leq_info_value(a, a))

        for a, b in itertools.product(VALUES, repeat=2):
            if leq_info_value(a, b) and leq_info_value(b, a):
                self.assertEqual(a, b)

        for a, b, c in itertools.product(VALUES, repeat=3):
            if leq_info_value(a, b) and leq_info_value(b, c):
                self.assertTrue(leq_info_value(a, c))

    def test_classical_values_are_incomparable(self):
        self.assertFalse(leq_info_value(T, F))
        self.assertFalse(leq_info_value(F, T))
        self.assertFalse(leq_info_value(T, U))
        self.assertTrue(T.is_classical)
        self.assertFalse(U.is_classical)

    def test_lifted_ordering(self):

        d = example1()
        bottom = Interpretation3.all_unknown(d)
        v = Interpretation3.from_literals(d, ['a', 'b', '-c'])
        w = Interpretation3.from_literals(d, ['a', 'b'])

        self.assertTrue(leq_info(bottom, v))
        self.assertTrue(leq_info(w, v))
        self.assertFalse(leq_info(v, w))

    def test_mismatched_statements(self):

        d = example1()
        other = Interpretation3(['a', 'b'], [U, U])

        with self.assertRaises(DomainError):
            leq_info(Interpretation3.all_unknown(d), other)


class TestAcceptanceTable(unittest.TestCase):

    def test_eval_condition(self):

        # Given
        d = example1()
        a, b, c = d.statements

        # Then
        self.assertEqual(eval_condition(d.conditions[2], []), T)
        self.assertEqual(eval_condition(d.conditions[2], [b]), F)
        self.assertEqual(eval_condition(d.conditions[0], {b}), T)
        self.assertEqual(eval_condition(d.conditions[0], set()), F)

    def test_non_parent_is_a_domain_error(self):

        d = example1()
        a, b, c = d.statements

        with self.assertRaises(DomainError):
            eval_condition(d.conditions[2], [c])

    def test_mask_bijection(self):

        parents = [StatementId(name, i) for i, name in enumerate('pqrs')]
        table = AcceptanceTable(parents, np.zeros(16, dtype=bool))

        seen = set()
        for r in range(len(parents) + 1):
            for subset in itertools.combinations(parents, r):
                mask = table.mask_of(subset)
                self.assertEqual(table.members(mask), frozenset(subset))
                seen.add(mask)

        self.assertEqual(seen, set(range(16)))

    def test_entries_are_read_only(self):

        table = AcceptanceTable([], [True])
        with self.assertRaises(ValueError):
            table.entries[0] = False


class TestValidation(unittest.TestCase):

    def test_example_is_valid(self):
        d = example1()
        self.assertEqual(len(d), 3)
        self.assertEqual(d.names, ('a', 'b', 'c'))
        self.assertEqual([p.name for p in d.parents_of('c')], ['b'])
        self.assertEqual(d.statement('b'), StatementId('b', 1))

    def test_undeclared_link_endpoint(self):
        with self.assertRaises(ValidationError):
            build_adf(['a'], [('x', 'a')], {'a': (['x'], [True, True])})

    def test_link_without_parent(self):
        with self.assertRaises(ValidationError):
            build_adf(['a', 'b'], [('a', 'b')],
                      {'a': ([], [True]), 'b': ([], [True])})

    def test_parent_without_link(self):
        with self.assertRaises(ValidationError):
            build_adf(['a', 'b'], [],
                      {'a': ([], [True]), 'b': (['a'], [True, False])})

    def test_table_not_total(self):
        with self.assertRaises(ValidationError):
            build_adf(['a', 'b'], [('a', 'b')],
                      {'a': ([], [True]), 'b': (['a'], [True])})

    def test_duplicate_statement(self):
        with self.assertRaises(ValidationError):
            build_adf(['a', 'a'], [], {'a': ([], [True])})

    def test_duplicate_parent(self):

        a = StatementId('a', 0)
        d = Adf(['a', 'b'], [(0, 1)],
                [AcceptanceTable([], [True]),
                 AcceptanceTable([a, a], [True, True, True, True])])

        with self.assertRaises(ValidationError):
            validate_adf(d)

    def test_parent_cap(self):

        names = ['s%d' % i for i in range(MAX_PARENTS + 2)]
        parents = [StatementId(x, i) for i, x in enumerate(names[:-1])]
        conditions = [AcceptanceTable([], [True]) for _ in names[:-1]]
        conditions.append(AcceptanceTable(
            parents, np.zeros(1 << len(parents), dtype=bool)
        ))
        d = Adf(names, [(p.index, len(names) - 1) for p in parents],
                conditions)

        with self.assertRaises(ValidationError):
            validate_adf(d)

    def test_empty_adf(self):
        d = build_adf([], [], {})
        self.assertEqual(len(d), 0)


class TestInterpretation(unittest.TestCase):

    def test_lookup_and_extension(self):

        d = example1()
        v = Interpretation3.from_literals(d, ['-a', '-b', 'c'])

        self.assertEqual(v['c'], T)
        self.assertEqual(v[0], F)
        self.assertEqual(v[d.statement('b')], F)
        self.assertTrue(v.is_two_valued)
        self.assertEqual(v.literals(), ['-a', '-b', 'c'])
        self.assertEqual(associated_extension(v),
                         frozenset([StatementId('c', 2)]))

    def test_undecided(self):

        d = example1()
        v = Interpretation3.from_literals(d, ['a'])

        self.assertFalse(v.is_two_valued)
        self.assertEqual(v.undecided(), ['b', 'c'])
        self.assertEqual(associated_extension(v),
                         frozenset([StatementId('a', 0)]))

    def test_unknown_statement(self):
        v = Interpretation3.all_unknown(example1())
        with self.assertRaises(DomainError):
            v['z']

    def test_not_total(self):
        with self.assertRaises(DomainError):
            Interpretation3(['a', 'b'], [T])


if __name__ == '__main__':
    unittest.main()
