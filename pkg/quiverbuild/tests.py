from django.test import SimpleTestCase

from abgroup.groups import AbelianPGroup
from action.presentation import AbelianGroupH, GroupPresentation
from action.reduction import reduce_to_hyperfocal
from charfield.characters import Character
from core import samples
from core.exceptions import InvalidInput, NonIntegerResult

from .quivers import (
    arrow_count_general,
    arrow_count_matrix,
    has_loops,
    is_connected,
    path_normal_form_count,
    presentation_quiver,
    to_dot,
    translate_quiver,
)
from .tables import CharacterTable, cyclotomic_inner_product, dual_group_table, quiver_from_character_table


def s3_table(module=(3, 1, 0)):
    doc = samples.s3_table_document()
    return CharacterTable.from_values(
        doc['exponent'],
        [(c['name'], c['size']) for c in doc['classes']],
        [(c['name'], c['values']) for c in doc['characters']],
        list(module),
    )


class BoundQuiverTests(SimpleTestCase):

    def test_worked_example(self):
        _, quiver = presentation_quiver(samples.worked_example())
        self.assertEqual(len(quiver.vertices), 4)
        self.assertEqual(len(quiver.arrows), 12)
        self.assertEqual(quiver.labels, ((1, 1), (1, 2), (2, 1)))
        self.assertEqual(
            {label: chi.exponents for label, chi in quiver.label_characters.items()},
            {(1, 1): (1,), (1, 2): (3,), (2, 1): (2,)},
        )
        relations = quiver.relations
        self.assertEqual(len(relations.commutators), 12)
        self.assertEqual(
            sorted((r.label, r.length) for r in relations.powers if r.vertex == 0),
            [((1, 1), 3), ((1, 2), 3), ((2, 1), 9)],
        )
        for v in range(4):
            self.assertEqual(path_normal_form_count(quiver, v), 81)

    def test_arrow_ids_sorted_by_vertex_then_label(self):
        _, quiver = presentation_quiver(samples.worked_example())
        keys = [(a.source, a.label) for a in quiver.arrows]
        self.assertEqual(keys, sorted(keys))
        self.assertEqual([a.id for a in quiver.arrows], list(range(12)))

    def test_commutator_paths_compose(self):
        _, quiver = presentation_quiver(samples.worked_example())
        for c in quiver.relations.commutators:
            for path in c.monomials(quiver):
                first, second = (quiver.arrow(a) for a in path)
                self.assertEqual(first.source, c.vertex)
                self.assertEqual(first.target, second.source)
            left_first, left_second = (quiver.arrow(a) for a in c.left)
            self.assertEqual((left_first.label, left_second.label), (c.labels[1], c.labels[0]))
            self.assertEqual(quiver.arrow(c.left[1]).target, quiver.arrow(c.right[1]).target)

    def test_trivial_h_single_loop(self):
        pres = GroupPresentation(AbelianPGroup(3, [(2, 1)]), AbelianGroupH(()), ())
        _, quiver = presentation_quiver(pres)
        self.assertEqual(len(quiver.vertices), 1)
        self.assertEqual(len(quiver.arrows), 1)
        self.assertTrue(has_loops(quiver))
        self.assertEqual(quiver.relations.commutators, ())
        (power,) = quiver.relations.powers
        self.assertEqual(power.length, 9)
        self.assertEqual(power.path(quiver), (0,) * 9)

    def test_reduced_g2(self):
        _, quiver = presentation_quiver(reduce_to_hyperfocal(samples.g2()))
        self.assertEqual(len(quiver.vertices), 3)
        self.assertEqual(len(quiver.arrows), 6)
        self.assertEqual(quiver.labels, ((2, 1), (2, 2)))
        self.assertEqual(len(quiver.relations.commutators), 3)
        self.assertEqual({r.length for r in quiver.relations.powers}, {4})
        self.assertEqual(sum(path_normal_form_count(quiver, v) for v in range(3)), 48)
        self.assertFalse(has_loops(quiver))

    def test_reduced_g1(self):
        _, quiver = presentation_quiver(reduce_to_hyperfocal(samples.g1()))
        self.assertEqual([path_normal_form_count(quiver, v) for v in range(3)], [4, 4, 4])

    def test_trivial_p(self):
        reduced = reduce_to_hyperfocal(samples.identity_action())
        _, quiver = presentation_quiver(reduced)
        self.assertEqual(quiver.arrows, ())
        self.assertEqual(path_normal_form_count(quiver, 0), 1)

    def test_dimension_law(self):
        presentations = samples.random_presentations(60, seed=12)
        for pres in presentations:
            with self.subTest(blocks=pres.pgroup.blocks, h=pres.hgroup.generator_orders):
                _, quiver = presentation_quiver(pres)
                counts = [path_normal_form_count(quiver, v) for v in range(len(quiver.vertices))]
                self.assertEqual(set(counts), {pres.pgroup.order})
                self.assertEqual(sum(counts), pres.order)
                for v in range(len(quiver.vertices)):
                    self.assertEqual(len(quiver.out_arrows[v]), pres.pgroup.rank)
                    powers = sorted(r.length for r in quiver.relations.powers if r.vertex == v)
                    self.assertEqual(powers, sorted(pres.p ** a.label[0] for a in quiver.out_arrows[v]))

    def test_translation_is_an_automorphism(self):
        for pres in [samples.worked_example(), samples.g2()] + samples.random_presentations(10, seed=13):
            _, quiver = presentation_quiver(pres)
            commutators = {(c.vertex, c.labels): c for c in quiver.relations.commutators}
            for mu in quiver.vertices:
                vertex_map, arrow_map = translate_quiver(quiver, mu)
                self.assertEqual(sorted(vertex_map.values()), list(range(len(quiver.vertices))))
                for a in quiver.arrows:
                    b = quiver.arrow(arrow_map[a.id])
                    self.assertEqual(b.label, a.label)
                    self.assertEqual((b.source, b.target), (vertex_map[a.source], vertex_map[a.target]))
                for (v, labels), c in commutators.items():
                    image = commutators[(vertex_map[v], labels)]
                    self.assertEqual(tuple(arrow_map[x] for x in c.left), image.left)
                    self.assertEqual(tuple(arrow_map[x] for x in c.right), image.right)

    def test_arrow_count_general(self):
        chars, quiver = presentation_quiver(reduce_to_hyperfocal(samples.g2()))
        omega = Character((1,), (3,))
        for lam in quiver.vertices:
            self.assertEqual(arrow_count_general(chars, lam, omega + lam), 1)
            self.assertEqual(arrow_count_general(chars, lam, lam), 0)

        pres = GroupPresentation(AbelianPGroup(2, [(1, 3)]), AbelianGroupH(()), ())
        chars, quiver = presentation_quiver(pres)
        (only,) = quiver.vertices
        self.assertEqual(arrow_count_general(chars, only, only), 3)

    def test_connectivity(self):
        _, quiver = presentation_quiver(reduce_to_hyperfocal(samples.g2()))
        self.assertTrue(is_connected(quiver))
        # C_4 acts on C_5 through its quotient C_2, so the eigencharacter misses half the dual group
        pres = GroupPresentation.from_lists(5, [(1, 1)], [4], [[[[4]]]])
        _, quiver = presentation_quiver(pres)
        self.assertFalse(is_connected(quiver))

    def test_path_count_needs_relations(self):
        with self.assertRaises(InvalidInput):
            path_normal_form_count(quiver_from_character_table(s3_table()), 0)

    def test_dot_export(self):
        _, quiver = presentation_quiver(reduce_to_hyperfocal(samples.g2()))
        dot = to_dot(quiver)
        self.assertTrue(dot.startswith('digraph quiver {'))
        self.assertEqual(dot.count('->'), 6)
        self.assertIn('[label="(1)"]', dot)
        self.assertIn('label="2,1"', dot)


class CharacterTableTests(SimpleTestCase):

    def test_s3_inner_products(self):
        table = s3_table()
        std, triv, sgn = table.row('std'), table.row('triv'), table.row('sgn')
        self.assertEqual(cyclotomic_inner_product(table, std, std), 1)
        self.assertEqual(cyclotomic_inner_product(table, std, table.product(table.module, std)), 2)
        self.assertEqual(cyclotomic_inner_product(table, triv, sgn), 0)
        self.assertEqual(table.order, 6)
        self.assertEqual(table.degrees, (1, 2, 1))

    def test_s3_quiver(self):
        quiver = quiver_from_character_table(s3_table())
        self.assertTrue(quiver.quiver_only)
        self.assertEqual(arrow_count_matrix(quiver), [[1, 1, 0], [1, 2, 1], [0, 1, 1]])

    def test_trivial_module_gives_loops(self):
        quiver = quiver_from_character_table(s3_table(module=(2, 2, 2)))
        self.assertEqual(arrow_count_matrix(quiver), [[2, 0, 0], [0, 2, 0], [0, 0, 2]])

    def test_cyclic_table_with_cyclotomic_values(self):
        table = CharacterTable.from_values(
            3,
            [('1', 1), ('c', 1), ('c2', 1)],
            [('triv', [1, 1, 1]), ('w', [1, [0, 1], [0, 0, 1]]), ('w2', [1, [0, 0, 1], [0, 1]])],
            [2, [0, 1, 1], [0, 1, 1]],
        )
        quiver = quiver_from_character_table(table)
        self.assertEqual(arrow_count_matrix(quiver), [[0, 1, 1], [1, 0, 1], [1, 1, 0]])
        self.assertEqual({(a.source, a.target) for a in quiver.arrows if a.source == 0}, {(0, 1), (0, 2)})

    def test_non_integer_inner_product(self):
        table = s3_table()
        with self.assertRaises(NonIntegerResult):
            cyclotomic_inner_product(table, table.row('triv'), (table.ring.element(1), table.ring.zero(), table.ring.zero()))

    def test_rows_must_be_orthonormal(self):
        with self.assertRaises(InvalidInput):
            CharacterTable.from_values(2, [('1', 1), ('c', 1)], [('a', [1, 1]), ('b', [1, 1])])

    def test_agrees_with_bound_quiver(self):
        presentations = samples.random_presentations(25, seed=14) + [samples.worked_example()]
        for pres in presentations:
            for current in (pres, reduce_to_hyperfocal(pres)):
                with self.subTest(blocks=current.pgroup.blocks, h=current.hgroup.generator_orders):
                    chars, quiver = presentation_quiver(current)
                    general = quiver_from_character_table(dual_group_table(current.hgroup, chars))
                    self.assertEqual(arrow_count_matrix(general), arrow_count_matrix(quiver))
