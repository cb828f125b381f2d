import math
import random

from django.test import SimpleTestCase, override_settings

from action.presentation import validate_presentation

from . import samples
from .conf import toolkit_setting, toolkit_settings
from .exceptions import InvalidInput, InvalidPresentation, SpecParseError, ToolkitError, ZigzagViolation


class SamplesTests(SimpleTestCase):

    def test_curated_samples_are_valid(self):
        for name, build in samples.SAMPLES.items():
            with self.subTest(name):
                self.assertEqual(validate_presentation(build()), [])

    def test_g1_and_g2_agree_mod_two(self):
        g1, g2 = samples.g1(), samples.g2()
        self.assertEqual(g2.action[0].mod_p(2), g1.action[0].mod_p(2))
        self.assertEqual(g2.pgroup.order, 16)

    def test_random_presentations_are_valid(self):
        for pres in samples.random_presentations(60, seed=7):
            with self.subTest(blocks=pres.pgroup.blocks, h=pres.hgroup.generator_orders):
                self.assertEqual(validate_presentation(pres), [])
                (order,) = pres.hgroup.generator_orders
                self.assertLessEqual(order, 8)
                self.assertNotEqual(order % pres.p, 0)
                self.assertIn(list(pres.pgroup.blocks), [list(b) for b in samples.BLOCK_SHAPES[pres.p]])

    def test_products_of_cyclic_groups(self):
        presentations = samples.random_presentations(60, seed=7, product_chance=0.6)
        non_cyclic = 0
        for pres in presentations:
            with self.subTest(blocks=pres.pgroup.blocks, h=pres.hgroup.generator_orders):
                self.assertEqual(validate_presentation(pres), [])
                self.assertLessEqual(pres.hgroup.order, 12)
                self.assertTrue(all(d % pres.p for d in pres.hgroup.generator_orders))
                if pres.hgroup.ngens == 2:
                    a, b = pres.action
                    self.assertEqual(a @ b, b @ a)
                    non_cyclic += math.gcd(*pres.hgroup.generator_orders) > 1
        self.assertGreaterEqual(non_cyclic, 3)

    def test_random_presentations_are_seeded(self):
        self.assertEqual(samples.random_presentations(10, seed=3), samples.random_presentations(10, seed=3))

    def test_prime_and_order_bound(self):
        rng = random.Random(11)
        for _ in range(20):
            pres = samples.random_presentation(rng, p=5, max_h_order=4)
            self.assertEqual(pres.p, 5)
            self.assertLessEqual(pres.hgroup.order, 4)

    def test_identity_action(self):
        pres = samples.identity_action(p=2, blocks=((1, 2),), orders=(3, 5))
        self.assertTrue(all(a.is_identity() for a in pres.action))
        self.assertEqual(pres.hgroup.order, 15)


class ToolkitSettingsTests(SimpleTestCase):

    def test_defaults(self):
        self.assertEqual(toolkit_setting('DEFAULT_FIELD_Q'), 4)
        self.assertEqual(toolkit_setting('ORACLE_MAX_ORDER'), 256)

    @override_settings(TAUTILT_ISO_SEARCH_CAP=10)
    def test_override(self):
        self.assertEqual(toolkit_setting('ISO_SEARCH_CAP'), 10)

    def test_read_only(self):
        with self.assertRaises(TypeError):
            toolkit_settings()['DEFAULT_FIELD_Q'] = 2

    def test_unknown_key(self):
        with self.assertRaises(KeyError):
            toolkit_setting('MAX_QUIVER_SIZE')


class ExceptionTests(SimpleTestCase):

    def test_hierarchy(self):
        for error in (SpecParseError('x'), InvalidPresentation([]), ZigzagViolation('length', 1, 'x')):
            self.assertIsInstance(error, InvalidInput)
            self.assertIsInstance(error, ToolkitError)

    def test_spec_parse_error_location(self):
        error = SpecParseError("expected a list", 'action[0].blocks')
        self.assertEqual(error.location, 'action[0].blocks')
        self.assertEqual(str(error), 'action[0].blocks: expected a list')
        self.assertEqual(str(SpecParseError('bad')), 'bad')

    def test_presentation_violations(self):
        error = InvalidPresentation(['p = 3 divides |H| = 3', 'generator 0: A^3 is not the identity'])
        self.assertEqual(len(error.violations), 2)
        self.assertIn('divides', str(error))

    def test_zigzag_violation(self):
        error = ZigzagViolation('closure', 3, "odd length needs s(a_1) = t(a_n)")
        self.assertEqual((error.clause, error.index), ('closure', 3))
