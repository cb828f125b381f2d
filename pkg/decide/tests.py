from django.test import SimpleTestCase, TestCase

from action.presentation import GroupPresentation
from action.reduction import reduce_to_hyperfocal
from core import samples
from core.exceptions import InconsistentRankOne, InvalidInput, InvalidPresentation, NontrivialFixedSpace
from quiverbuild.quivers import presentation_quiver
from zigzag.cycles import find_qualifying_cycles, is_qualifying, validate_zigzag

from .models import VerdictRecord
from .verdicts import (
    FrattiniInput,
    GroupShape,
    HyperfocalKind,
    Mode,
    Outcome,
    Reason,
    Sufficiency,
    classify_hyperfocal,
    decide_abelian,
    decide_frattini,
    finiteness_sufficient,
)


def assert_certified(test, verdict):
    test.assertFalse(verdict.classification_only)
    cycle = validate_zigzag(verdict.quiver, verdict.certificate.arrows)
    test.assertTrue(is_qualifying(verdict.quiver, cycle).qualifies)


class ClassifyHyperfocalTests(SimpleTestCase):

    def test_kinds(self):
        self.assertEqual(classify_hyperfocal([2, 2], 2).kind, HyperfocalKind.KLEIN_FOUR)
        self.assertEqual(classify_hyperfocal([], 5).kind, HyperfocalKind.TRIVIAL)
        self.assertEqual(classify_hyperfocal([9], 3).kind, HyperfocalKind.CYCLIC)
        other = classify_hyperfocal([9, 3, 3], 3)
        self.assertEqual(other.kind, HyperfocalKind.OTHER)
        self.assertEqual(other.factors, (3, 3, 9))
        self.assertEqual(other.rank, 3)

    def test_klein_four_needs_p_two(self):
        self.assertEqual(classify_hyperfocal([4, 4], 2).kind, HyperfocalKind.OTHER)

    def test_mixed_primes(self):
        with self.assertRaises(InvalidInput):
            classify_hyperfocal([2, 3], 2)
        with self.assertRaises(InvalidInput):
            classify_hyperfocal([6], 2)


class FinitenessSufficientTests(SimpleTestCase):

    def test_descriptors(self):
        self.assertEqual(finiteness_sufficient(GroupShape.CYCLIC, 5), Sufficiency.YES)
        self.assertEqual(finiteness_sufficient(GroupShape.DIHEDRAL, 2), Sufficiency.YES)
        self.assertEqual(finiteness_sufficient(GroupShape.QUATERNION, 2), Sufficiency.YES)
        self.assertEqual(finiteness_sufficient(GroupShape.DIHEDRAL, 3), Sufficiency.UNKNOWN)
        self.assertEqual(finiteness_sufficient(GroupShape.OTHER, 2), Sufficiency.UNKNOWN)

    def test_hyperfocal_classes(self):
        self.assertEqual(finiteness_sufficient(classify_hyperfocal([2, 2], 2)), Sufficiency.YES)
        self.assertEqual(finiteness_sufficient(classify_hyperfocal([], 3)), Sufficiency.YES)
        self.assertEqual(finiteness_sufficient(classify_hyperfocal([3, 3], 3)), Sufficiency.UNKNOWN)


class DecideAbelianTests(SimpleTestCase):

    def test_g1_is_finite(self):
        verdict = decide_abelian(samples.g1())
        self.assertEqual(verdict.outcome, Outcome.FINITE)
        self.assertEqual(verdict.reason, Reason.KLEIN_FOUR)
        self.assertEqual(verdict.hyperfocal, (2, 2))
        self.assertIsNone(verdict.certificate)

    def test_g2_is_infinite_with_a_triangle(self):
        verdict = decide_abelian(samples.g2())
        self.assertEqual(verdict.outcome, Outcome.INFINITE)
        self.assertEqual(verdict.hyperfocal, (4, 4))
        self.assertEqual(verdict.certificate.length, 3)
        assert_certified(self, verdict)

    def test_worked_example_is_infinite(self):
        verdict = decide_abelian(samples.worked_example())
        self.assertEqual(verdict.outcome, Outcome.INFINITE)
        self.assertEqual(verdict.hyperfocal, (3, 3, 9))
        assert_certified(self, verdict)

    def test_identity_action_is_finite(self):
        verdict = decide_abelian(samples.identity_action())
        self.assertEqual(verdict.outcome, Outcome.FINITE)
        self.assertEqual(verdict.reason, Reason.TRIVIAL_HYPERFOCAL)
        self.assertEqual(verdict.hyperfocal, ())

    def test_cyclic_hyperfocal_is_finite(self):
        verdict = decide_abelian(samples.partial_fixed())
        self.assertEqual(verdict.outcome, Outcome.FINITE)
        self.assertEqual(verdict.reason, Reason.CYCLIC_HYPERFOCAL)
        self.assertEqual(verdict.hyperfocal, (3,))

    def test_invalid_presentation(self):
        pres = GroupPresentation.from_lists(3, [(1, 1)], [3], [[[[1]]]])
        with self.assertRaises(InvalidPresentation):
            decide_abelian(pres)

    def test_consistency_sweep(self):
        presentations = samples.random_presentations(40, seed=31) + [
            samples.g1(), samples.g2(), samples.inversion(), samples.partial_fixed(),
        ]
        presentations += samples.random_presentations(20, seed=33, max_h_order=4, product_chance=1.0, max_product_order=8)
        for pres in presentations:
            with self.subTest(blocks=pres.pgroup.blocks, h=pres.hgroup.generator_orders):
                verdict = decide_abelian(pres)
                self.assertFalse(verdict.classification_only)
                _, quiver = presentation_quiver(reduce_to_hyperfocal(pres))
                cycles = find_qualifying_cycles(quiver)
                self.assertEqual(verdict.outcome == Outcome.INFINITE, bool(cycles))
                if verdict.outcome == Outcome.INFINITE:
                    assert_certified(self, verdict)

    def test_reduction_does_not_change_the_verdict(self):
        for pres in [samples.g2(), samples.partial_fixed()] + samples.random_presentations(15, seed=32):
            with self.subTest(blocks=pres.pgroup.blocks):
                before = decide_abelian(pres)
                after = decide_abelian(reduce_to_hyperfocal(pres))
                self.assertEqual((before.outcome, before.reason), (after.outcome, after.reason))
                self.assertEqual(before.hyperfocal, after.hyperfocal)


class DecideFrattiniTests(SimpleTestCase):

    def test_p2_rank_two_is_unknown(self):
        verdict = decide_frattini(FrattiniInput(2, 2, (3,), ([[0, 1], [1, 1]],)))
        self.assertEqual(verdict.outcome, Outcome.UNKNOWN)
        self.assertEqual(verdict.reason, Reason.P2_RANK_TWO)
        self.assertEqual(verdict.mode, Mode.FRATTINI)

    def test_p3_rank_two_is_infinite(self):
        verdict = decide_frattini(FrattiniInput(3, 2, (2,), ([[2, 0], [0, 2]],)))
        self.assertEqual(verdict.outcome, Outcome.INFINITE)
        self.assertEqual(verdict.frattini_rank, 2)
        assert_certified(self, verdict)

    def test_p2_rank_three_is_infinite(self):
        verdict = decide_frattini(FrattiniInput(2, 3, (7,), ([[0, 0, 1], [1, 0, 1], [0, 1, 0]],)))
        self.assertEqual(verdict.outcome, Outcome.INFINITE)
        assert_certified(self, verdict)

    def test_small_ranks_are_finite(self):
        self.assertEqual(decide_frattini(FrattiniInput(3, 0, (2,), ([],))).reason, Reason.RANK_ZERO)
        self.assertEqual(decide_frattini(FrattiniInput(3, 1, (2,), ([[2]],))).outcome, Outcome.FINITE)

    def test_fixed_vector_is_rejected(self):
        with self.assertRaises(NontrivialFixedSpace):
            decide_frattini(FrattiniInput(3, 2, (2,), ([[1, 0], [0, 2]],)))

    def test_p2_rank_one_is_inconsistent(self):
        with self.assertRaises(InconsistentRankOne):
            decide_frattini(FrattiniInput(2, 1, (3,), ([[1]],)))


class VerdictRecordTests(TestCase):

    def test_store_is_keyed_by_spec(self):
        spec = {'p': 2, 'P': {'blocks': [{'exponent': 1, 'multiplicity': 2}]}}
        first = VerdictRecord.store(spec, {'mode': 'abelian', 'outcome': 'finite', 'reason': 'klein_four', 'hyperfocal': [2, 2]})
        reordered = {'P': {'blocks': [{'multiplicity': 2, 'exponent': 1}]}, 'p': 2}
        second = VerdictRecord.store(reordered, {'mode': 'abelian', 'outcome': 'infinite', 'reason': 'large_hyperfocal'})
        self.assertEqual(first.pk, second.pk)
        self.assertEqual(VerdictRecord.objects.count(), 1)
        record = VerdictRecord.objects.get()
        self.assertEqual(record.outcome, 'infinite')
        self.assertEqual(record.spec, spec)
        self.assertEqual(len(record.digest), 64)
