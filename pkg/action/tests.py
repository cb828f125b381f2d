from django.test import SimpleTestCase

from abgroup.groups import BlockMatrix, image_subgroup, invariant_factors
from core import samples
from core.exceptions import InvalidPresentation

from .presentation import GroupPresentation, validate_presentation
from .reduction import (
    centralizer,
    hyperfocal_data,
    hyperfocal_subgroup,
    is_invariant,
    reduce_to_hyperfocal,
)


def _brute_force_hyperfocal(pres):
    """Subgroup generated by x^-1 (h . x) over every x in P and every h in H."""
    group = pres.pgroup
    moduli = group.moduli

    def add(x, y):
        return tuple(tuple((a + b) % m for a, b in zip(xi, yi)) for m, xi, yi in zip(moduli, x, y))

    def neg(x):
        return tuple(tuple((-a) % m for a in xi) for m, xi in zip(moduli, x))

    elements = list(group.elements())
    commutators = {
        add(neg(x), pres.matrix_for(h).apply(x))
        for h in pres.hgroup.elements()
        for x in elements
    }
    zero = tuple(tuple([0] * t) for _, t in group.blocks)
    seen, frontier = {zero}, [zero]
    while frontier:
        x = frontier.pop()
        for c in commutators:
            y = add(x, c)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


class ValidatePresentationTests(SimpleTestCase):

    def test_curated_presentations_are_valid(self):
        for name, factory in samples.SAMPLES.items():
            with self.subTest(name):
                self.assertEqual(validate_presentation(factory()), [])

    def test_p_divides_order_of_h(self):
        pres = GroupPresentation.from_lists(3, [(1, 1)], [3], [[[[1]]]])
        violations = validate_presentation(pres)
        self.assertEqual(len(violations), 1)
        self.assertIn('divides |H|', violations[0])

    def test_action_of_wrong_order(self):
        # b -> ab read mod 4 has order 6, not 3
        pres = GroupPresentation.from_lists(2, [(2, 2)], [3], [[[[0, 1], [1, 1]]]])
        self.assertEqual(validate_presentation(pres), ['generator 0: A^3 is not the identity'])

    def test_collects_every_violation(self):
        pres = GroupPresentation.from_lists(
            3, [(1, 2)], [2, 2], [[[[0, 1], [1, 0]]], [[[1, 0], [0, 2]]]],
        )
        self.assertEqual(validate_presentation(pres), ['generators 0 and 1 do not commute'])

        singular = GroupPresentation.from_lists(3, [(1, 2)], [2, 3], [[[[1, 0], [0, 0]]]])
        violations = validate_presentation(singular)
        self.assertTrue(any('expected 2 action matrices' in v for v in violations))
        self.assertTrue(any('divides |H|' in v for v in violations))
        self.assertTrue(any('not invertible' in v for v in violations))

    def test_operations_refuse_invalid_input(self):
        pres = GroupPresentation.from_lists(3, [(1, 1)], [3], [[[[1]]]])
        with self.assertRaises(InvalidPresentation) as ctx:
            hyperfocal_subgroup(pres)
        self.assertEqual(len(ctx.exception.violations), 1)


class HyperfocalTests(SimpleTestCase):

    def test_klein_and_homocyclic_rank_two(self):
        self.assertEqual(invariant_factors(hyperfocal_subgroup(samples.g1())), (2, 2))
        self.assertEqual(invariant_factors(hyperfocal_subgroup(samples.g2())), (4, 4))

    def test_identity_action(self):
        self.assertTrue(hyperfocal_subgroup(samples.identity_action()).is_trivial)
        self.assertTrue(centralizer(samples.identity_action()).is_whole)

    def test_worked_example_is_all_of_p(self):
        hyperfocal = hyperfocal_subgroup(samples.worked_example())
        self.assertEqual(invariant_factors(hyperfocal), (3, 3, 9))
        self.assertTrue(hyperfocal.is_whole)

    def test_centralizers(self):
        self.assertTrue(centralizer(samples.g1()).is_trivial)
        fixed = centralizer(samples.partial_fixed())
        self.assertEqual(fixed.order, 3)
        self.assertTrue(fixed.contains(((1, 0),)))

    def test_matches_brute_force_over_all_of_h(self):
        presentations = samples.random_presentations(40, seed=3, max_h_order=12)
        presentations += samples.random_presentations(40, seed=6, product_chance=1.0, max_product_order=12)
        presentations += [samples.g1(), samples.g2(), samples.worked_example(), samples.partial_fixed()]
        two_generated = 0
        for pres in presentations:
            if pres.pgroup.order > 256:
                continue
            two_generated += pres.hgroup.ngens == 2
            with self.subTest(blocks=pres.pgroup.blocks, h=pres.hgroup.generator_orders):
                hyperfocal = hyperfocal_subgroup(pres)
                members = {x for x in pres.pgroup.elements() if hyperfocal.contains(x)}
                self.assertEqual(members, _brute_force_hyperfocal(pres))
        self.assertGreaterEqual(two_generated, 10)

    def test_direct_product_and_invariance(self):
        for pres in samples.random_presentations(40, seed=4):
            with self.subTest(blocks=pres.pgroup.blocks):
                data = hyperfocal_data(pres)
                self.assertEqual(data.hyperfocal.order * data.centralizer.order, pres.pgroup.order)
                self.assertTrue(is_invariant(data.hyperfocal, pres))
                self.assertTrue(is_invariant(data.centralizer, pres))



def _moved_images(pres):
    """Isomorphism type of the image of A_g - I for every generator g."""
    identity = BlockMatrix.identity(pres.pgroup)
    return [invariant_factors(image_subgroup([a - identity], pres.pgroup)) for a in pres.action]

class ReductionTests(SimpleTestCase):

    def test_restricts_to_the_moved_coordinate(self):
        reduced = reduce_to_hyperfocal(samples.partial_fixed())
        self.assertEqual(reduced.pgroup.blocks, ((1, 1),))
        self.assertEqual(reduced.action[0].blocks, (((2,),),))

    def test_identity_action_reduces_to_trivial_group(self):
        reduced = reduce_to_hyperfocal(samples.identity_action())
        self.assertEqual(reduced.pgroup.order, 1)
        self.assertEqual(reduced.action[0].blocks, ())
        self.assertEqual(validate_presentation(reduced), [])

    def test_centerless_group_is_unchanged(self):
        reduced = reduce_to_hyperfocal(samples.g2())
        self.assertEqual(reduced.pgroup, samples.g2().pgroup)
        self.assertEqual(validate_presentation(reduced), [])

    def test_non_unit_pivot_summand(self):
        # [P, H] = <(3, 1)> in (C_9)^2 has Howell basis (3, 1), (0, 3)
        pres = GroupPresentation.from_lists(3, [(2, 2)], [2], [[[[1, 3], [0, 8]]]])
        reduced = reduce_to_hyperfocal(pres)
        self.assertEqual(reduced.pgroup.blocks, ((2, 1),))
        self.assertEqual(reduced.action[0].blocks, (((8,),),))
        self.assertEqual(validate_presentation(reduced), [])

    def test_reduced_presentations_are_centerless_and_stable(self):
        for pres in samples.random_presentations(40, seed=5):
            with self.subTest(blocks=pres.pgroup.blocks):
                reduced = reduce_to_hyperfocal(pres)
                self.assertEqual(validate_presentation(reduced), [])
                self.assertTrue(centralizer(reduced).is_trivial)
                twice = reduce_to_hyperfocal(reduced)
                self.assertEqual(twice.pgroup, reduced.pgroup)
                self.assertTrue(hyperfocal_subgroup(reduced).is_whole)
                self.assertEqual(_moved_images(twice), _moved_images(reduced))
