import galois
import numpy as np
from django.test import SimpleTestCase

from action.presentation import AbelianGroupH, GroupPresentation
from action.reduction import reduce_to_hyperfocal
from core import samples
from core.exceptions import InternalError, NotCoprime

from .characters import Character, all_characters, frobenius_orbits
from .eigen import check_reduced_characters, eigencharacters, eigenspaces, mod_p_action
from .fields import build_splitting_field


def chars(*exps, orders=(4,)):
    return [Character(e, orders) for e in exps]


class SplittingFieldTests(SimpleTestCase):

    def test_fourth_roots_over_three(self):
        field = build_splitting_field(3, 4)
        self.assertEqual(field.m, 2)
        self.assertEqual(field.order, 9)
        self.assertEqual(field.zeta ** 4, field.field(1))
        self.assertNotEqual(field.zeta ** 2, field.field(1))
        self.assertEqual(field.modulus, galois.Poly([1, 0, 1], field=galois.GF(3)))

    def test_cube_roots_over_two(self):
        field = build_splitting_field(2, 3)
        self.assertEqual(field.order, 4)
        self.assertEqual(field.zeta ** 3, field.field(1))
        self.assertNotEqual(field.zeta, field.field(1))

    def test_trivial_exponent(self):
        field = build_splitting_field(5, 1)
        self.assertEqual(field.m, 1)
        self.assertEqual(field.zeta, field.field(1))

    def test_not_coprime(self):
        with self.assertRaises(NotCoprime):
            build_splitting_field(3, 6)

    def test_construction_is_deterministic(self):
        first = build_splitting_field(2, 7)
        build_splitting_field.cache_clear()
        second = build_splitting_field(2, 7)
        self.assertEqual(int(first.zeta), int(second.zeta))
        self.assertEqual(first.modulus, second.modulus)


class CharacterTests(SimpleTestCase):

    def test_tensor_and_dual(self):
        a, b = chars((1,), (3,))
        self.assertTrue((a + b).is_trivial)
        self.assertEqual(-a, b)
        self.assertEqual(a * 2, Character((2,), (4,)))
        self.assertEqual((a * 2).order, 2)

    def test_all_characters(self):
        everything = all_characters(AbelianGroupH((2, 3)))
        self.assertEqual(len(everything), 6)
        self.assertEqual(everything[0], Character.trivial((2, 3)))
        self.assertEqual(everything, sorted(everything))

    def test_value(self):
        field = build_splitting_field(3, 4)
        chi = Character((1,), (4,))
        self.assertEqual(chi.value((1,), field), field.zeta)
        self.assertEqual(chi.value((2,), field), field.zeta ** 2)

    def test_frobenius_orbits(self):
        orbits = frobenius_orbits(chars((1,), (2,), orders=(3,)), 2)
        self.assertEqual([o.size for o in orbits], [2])

        orbits = frobenius_orbits(chars((0,), orders=(3,)), 2)
        self.assertEqual([o.size for o in orbits], [1])

        orbits = frobenius_orbits(chars((1,), (2,), (4,), orders=(7,)), 2)
        self.assertEqual(len(orbits), 1)
        self.assertEqual(orbits[0].characters, tuple(chars((1,), (2,), (4,), orders=(7,))))

    def test_orbits_ignore_multiplicity(self):
        orbits = frobenius_orbits(chars((1,), (1,), (2,), orders=(3,)), 2)
        self.assertEqual([o.size for o in orbits], [2])


class EigencharacterTests(SimpleTestCase):

    def test_worked_example(self):
        pres = samples.worked_example()
        field = build_splitting_field(3, 4)
        self.assertEqual(eigencharacters(pres, field), (
            (0, Character((1,), (4,))),
            (0, Character((3,), (4,))),
            (1, Character((2,), (4,))),
        ))

    def test_identity_action(self):
        pres = samples.identity_action(3, [(1, 2), (2, 1)], (4,))
        result = eigencharacters(pres, build_splitting_field(3, 4))
        trivial = Character.trivial((4,))
        self.assertEqual(result, ((0, trivial), (0, trivial), (1, trivial)))

    def test_order_three_block(self):
        result = eigencharacters(samples.g2(), build_splitting_field(2, 3))
        self.assertEqual([c.exponents for _, c in result], [(1,), (2,)])

    def _check_certificates(self, pres):
        field = build_splitting_field(pres.p, pres.hgroup.exponent)
        spaces = eigenspaces(pres, field)
        reduced = mod_p_action(pres, field)
        for space in spaces:
            for g, a in enumerate(reduced[space.block]):
                h = [0] * pres.hgroup.ngens
                h[g] = 1
                value = space.character.value(h, field)
                self.assertTrue(np.array_equal(a @ space.basis, space.basis * value))
        for i, (_, t) in enumerate(pres.pgroup.blocks):
            self.assertEqual(sum(s.dimension for s in spaces if s.block == i), t)
            for g, a in enumerate(reduced[i]):
                h = [0] * pres.hgroup.ngens
                h[g] = 1
                product = field.field(1)
                for s in spaces:
                    if s.block == i:
                        product = product * s.character.value(h, field) ** s.dimension
                self.assertEqual(product, np.linalg.det(a))

    def test_eigenvectors_and_determinants(self):
        for pres in samples.random_presentations(30, seed=8) + [samples.worked_example(), samples.g2()]:
            with self.subTest(blocks=pres.pgroup.blocks, h=pres.hgroup.generator_orders):
                self._check_certificates(pres)

    def test_generator_order_does_not_matter(self):
        forward = GroupPresentation.from_lists(
            5, [(1, 2)], [2, 4], [[[[1, 0], [0, 4]]], [[[2, 0], [0, 3]]]],
        )
        backward = GroupPresentation.from_lists(
            5, [(1, 2)], [4, 2], [[[[2, 0], [0, 3]]], [[[1, 0], [0, 4]]]],
        )
        self._check_certificates(forward)
        field = build_splitting_field(5, 4)
        swapped = sorted(
            (block, Character(tuple(reversed(c.exponents)), (2, 4)))
            for block, c in eigencharacters(backward, field)
        )
        self.assertEqual(tuple(swapped), eigencharacters(forward, field))


class ReducedCharacterTests(SimpleTestCase):

    def test_reduced_presentations_pass(self):
        for pres in samples.random_presentations(30, seed=9) + [samples.g1(), samples.worked_example()]:
            reduced = reduce_to_hyperfocal(pres)
            field = build_splitting_field(reduced.p, reduced.hgroup.exponent)
            check_reduced_characters(reduced, eigencharacters(reduced, field))

    def test_trivial_character_is_rejected(self):
        pres = samples.identity_action()
        with self.assertRaises(InternalError):
            check_reduced_characters(pres, [(0, Character.trivial((2,)))])

    def test_rank_one_two_block_is_rejected(self):
        pres = GroupPresentation.from_lists(2, [(1, 1)], [1], [[[[1]]]])
        with self.assertRaises(InternalError):
            check_reduced_characters(pres, [(0, Character((1,), (3,)))])
