import itertools

from django.test import SimpleTestCase

from action.presentation import GroupPresentation
from action.reduction import reduce_to_hyperfocal
from charfield.characters import Character
from core import samples
from core.exceptions import InvalidInput, ZigzagViolation
from quiverbuild.quivers import make_quiver, presentation_quiver

from .cycles import (
    QualificationReason,
    canonical_form,
    composable_pairs,
    find_qualifying_cycles,
    is_qualifying,
    validate_zigzag,
)
from .templates import template_certificates

COMPANION_7 = [[0, 0, 1], [1, 0, 1], [0, 1, 0]]
COMPANION_5 = [[0, 0, 0, 1], [1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]]


def reduced_quiver(pres):
    reduced = reduce_to_hyperfocal(pres)
    chars, quiver = presentation_quiver(reduced)
    return reduced, chars, quiver


def klein_pair_presentation():
    """C_3 x C_3 on (C_2)^4, each factor rotating its own pair of coordinates."""
    return GroupPresentation.from_lists(
        2, [(1, 4)], [3, 3],
        [
            [[[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]],
            [[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 1]]],
        ],
    )


def g2_triangle(quiver):
    omega = Character((1,), (3,))
    lam = quiver.vertices[0]
    start = quiver.vertex_index[lam]
    other = quiver.vertex_index[omega + omega + lam]
    return (
        quiver.arrow_from(start, (2, 1)).id,
        quiver.arrow_from(other, (2, 2)).id,
        quiver.arrow_from(other, (2, 1)).id,
    )


def naive_qualifying(quiver, max_len):
    """
    Every zigzag arrow sequence of every rotation, grown one arrow at a time and kept
    only while its prefix satisfies the definition; closure and qualification are
    checked on the whole sequence.
    """
    monomials = set()
    if not quiver.quiver_only:
        for generator in quiver.relations.generators():
            monomials.update(generator.monomials(quiver))
    found = set()

    def grow(path, vertices):
        n = len(path)
        first, last = quiver.arrows[path[0]], quiver.arrows[path[-1]]
        if n >= 2 and first.source == (last.target if n % 2 else last.source):
            if not (n % 2 and (quiver.quiver_only or (path[-1], path[0]) in monomials)):
                found.add(tuple(path))
        if n == max_len:
            return
        shared = last.target if n % 2 else last.source
        if shared in vertices:
            return
        for a in quiver.arrows:
            if a.id in path or (a.target if n % 2 else a.source) != shared:
                continue
            grow(path + [a.id], vertices + [shared])

    for a in quiver.arrows:
        grow([a.id], [a.source])
    return {canonical_form(validate_zigzag(quiver, ids)) for ids in found}


class ValidateZigzagTests(SimpleTestCase):

    def setUp(self):
        _, _, self.quiver = reduced_quiver(samples.g2())

    def test_g2_triangle(self):
        cycle = validate_zigzag(self.quiver, g2_triangle(self.quiver))
        self.assertEqual(cycle.length, 3)
        self.assertEqual(cycle.parity, 'odd')
        self.assertEqual(len(set(cycle.vertices)), 3)
        self.assertEqual(composable_pairs(self.quiver, cycle), [(cycle.arrows[2], cycle.arrows[0])])

    def test_single_arrow(self):
        with self.assertRaises(ZigzagViolation) as ctx:
            validate_zigzag(self.quiver, (0,))
        self.assertEqual(ctx.exception.clause, 'length')

    def test_unknown_arrow(self):
        with self.assertRaises(ZigzagViolation) as ctx:
            validate_zigzag(self.quiver, (0, 99))
        self.assertEqual(ctx.exception.clause, 'arrow')

    def test_broken_alternation(self):
        q = self.quiver
        with self.assertRaises(ZigzagViolation) as ctx:
            validate_zigzag(q, (q.arrow_from(0, (2, 1)).id, q.arrow_from(0, (2, 2)).id))
        self.assertEqual((ctx.exception.clause, ctx.exception.index), ('alternation', 1))

    def test_repeated_vertex(self):
        # forward along (2,1), backward along (2,2) around all three vertices twice
        q = self.quiver
        forward, backward = (2, 1), (2, 2)
        arrows = (
            q.arrow_from(0, forward).id, q.arrow_from(2, backward).id,
            q.arrow_from(2, forward).id, q.arrow_from(1, backward).id,
            q.arrow_from(1, forward).id, q.arrow_from(0, backward).id,
        )
        with self.assertRaises(ZigzagViolation) as ctx:
            validate_zigzag(q, arrows)
        self.assertEqual((ctx.exception.clause, ctx.exception.index), ('distinct vertices', 3))


class QualificationTests(SimpleTestCase):

    def test_g2_triangle_qualifies(self):
        _, _, quiver = reduced_quiver(samples.g2())
        report = is_qualifying(quiver, validate_zigzag(quiver, g2_triangle(quiver)))
        self.assertTrue(report.qualifies)
        self.assertEqual(report.reason, QualificationReason.CLOSING_PATH_ABSENT)

    def test_g1_triangle_hits_square_relation(self):
        _, _, quiver = reduced_quiver(samples.g1())
        a1 = quiver.arrow_from(0, (1, 1))
        a2 = quiver.arrow_from(2, (1, 2))
        a3 = quiver.arrow_from(2, (1, 1))
        report = is_qualifying(quiver, validate_zigzag(quiver, (a1.id, a2.id, a3.id)))
        self.assertFalse(report.qualifies)
        self.assertEqual(report.reason, QualificationReason.CLOSING_PATH_APPEARS)
        power = quiver.relations.get(report.generator)
        self.assertEqual(power.path(quiver), (a3.id, a1.id))

    def test_even_cycle_qualifies(self):
        _, _, quiver = reduced_quiver(klein_pair_presentation())
        cycles = find_qualifying_cycles(quiver, shortest_only=True)
        self.assertEqual(cycles[0].length, 4)
        report = is_qualifying(quiver, cycles[0])
        self.assertEqual(report.reason, QualificationReason.EVEN_LENGTH)
        self.assertEqual(composable_pairs(quiver, cycles[0]), [])

    def test_relations_unknown(self):
        quiver = make_quiver('abc', [(0, 1, (0, 1)), (2, 1, (0, 1)), (2, 0, (0, 2))])
        cycle = validate_zigzag(quiver, (0, 1, 2))
        report = is_qualifying(quiver, cycle)
        self.assertFalse(report.qualifies)
        self.assertEqual(report.reason, QualificationReason.RELATIONS_UNKNOWN)
        self.assertEqual(find_qualifying_cycles(quiver), [])


class FindQualifyingCyclesTests(SimpleTestCase):

    def test_g2_first_certificate_is_a_triangle(self):
        _, _, quiver = reduced_quiver(samples.g2())
        cycles = find_qualifying_cycles(quiver)
        self.assertTrue(cycles)
        self.assertEqual(cycles[0].length, 3)
        self.assertIn(g2_triangle(quiver), [c.arrows for c in cycles])

    def test_g1_has_none(self):
        _, _, quiver = reduced_quiver(samples.g1())
        self.assertEqual(find_qualifying_cycles(quiver), [])

    def test_inversion_has_none(self):
        _, chars, quiver = reduced_quiver(samples.inversion())
        self.assertEqual(len(quiver.vertices), 2)
        self.assertEqual(find_qualifying_cycles(quiver), [])
        self.assertEqual(template_certificates(quiver, chars, 3), [])

    def test_bound_must_allow_two_arrows(self):
        _, _, quiver = reduced_quiver(samples.g2())
        with self.assertRaises(InvalidInput):
            find_qualifying_cycles(quiver, max_len=1)

    def test_output_is_canonical_and_deterministic(self):
        _, _, quiver = reduced_quiver(samples.worked_example())
        first = find_qualifying_cycles(quiver)
        second = find_qualifying_cycles(quiver)
        self.assertEqual([c.arrows for c in first], [c.arrows for c in second])
        keys = [(c.length, c.arrows) for c in first]
        self.assertEqual(keys, sorted(keys))
        for c in first:
            self.assertEqual(canonical_form(c), c.arrows)

    def test_seeds_only_shorten_the_search(self):
        _, _, quiver = reduced_quiver(klein_pair_presentation())
        seeded = find_qualifying_cycles(quiver, shortest_only=True, seeds=[(0, 99), (1, 1)])
        plain = find_qualifying_cycles(quiver, shortest_only=True)
        self.assertEqual([c.arrows for c in seeded], [c.arrows for c in plain])

    def test_agrees_with_naive_enumeration(self):
        presentations = [samples.g1(), samples.g2(), samples.inversion(), samples.worked_example()]
        presentations.append(GroupPresentation.from_lists(2, [(1, 3)], [7], [[COMPANION_7]]))
        presentations += samples.random_presentations(40, seed=21)
        sizes = []
        for pres in presentations:
            _, _, quiver = reduced_quiver(pres)
            n = len(quiver.vertices)
            if n > 8:
                continue
            with self.subTest(blocks=pres.pgroup.blocks, h=pres.hgroup.generator_orders):
                found = {c.arrows for c in find_qualifying_cycles(quiver, max_len=8)}
                self.assertEqual(found, naive_qualifying(quiver, min(8, n)))
                sizes.append(n)
        self.assertGreaterEqual(len(sizes), 10)
        self.assertGreaterEqual(max(sizes), 6)


class TemplateTests(SimpleTestCase):

    def test_hexagon_from_orbit_of_size_three(self):
        pres = GroupPresentation.from_lists(2, [(1, 3)], [7], [[COMPANION_7]])
        reduced, chars, quiver = reduced_quiver(pres)
        certificates = template_certificates(quiver, chars, 2)
        self.assertEqual([c.length for c in certificates], [6])
        self.assertEqual(len(set(certificates[0].vertices)), 6)

    def test_square_when_fifth_power_is_trivial(self):
        pres = GroupPresentation.from_lists(2, [(1, 4)], [5], [[COMPANION_5]])
        _, chars, quiver = reduced_quiver(pres)
        certificates = template_certificates(quiver, chars, 2)
        self.assertEqual([c.length for c in certificates], [4])

    def test_two_orbits_of_size_two(self):
        _, chars, quiver = reduced_quiver(klein_pair_presentation())
        certificates = template_certificates(quiver, chars, 2)
        self.assertEqual(certificates[0].length, 4)
        for c in certificates:
            self.assertTrue(is_qualifying(quiver, c).qualifies)
        shortest = find_qualifying_cycles(quiver, shortest_only=True)
        self.assertIn(certificates[0].arrows, [c.arrows for c in shortest])

    def test_inverse_pair_collapses(self):
        # chi and its inverse of order 3 over F_25: the alternating walk revisits vertices
        pres = GroupPresentation.from_lists(5, [(1, 2)], [3], [[[[0, 4], [1, 4]]]])
        _, chars, quiver = reduced_quiver(pres)
        self.assertEqual(template_certificates(quiver, chars, 5), [])
        cycles = find_qualifying_cycles(quiver, shortest_only=True)
        self.assertEqual(cycles[0].length, 3)

    def test_g2_needs_the_search(self):
        _, chars, quiver = reduced_quiver(samples.g2())
        self.assertEqual(template_certificates(quiver, chars, 2), [])
