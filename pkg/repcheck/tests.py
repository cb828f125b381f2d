import itertools

from django.test import SimpleTestCase, override_settings

from action.reduction import reduce_to_hyperfocal
from core import samples
from core.exceptions import HolonomyZero, InvalidInput, NotQualifying, SearchSpaceTooLarge, ShapeError
from decide.verdicts import Outcome, decide_abelian
from quiverbuild.quivers import make_quiver, presentation_quiver
from zigzag.cycles import find_qualifying_cycles, validate_zigzag

from .bricks import (
    cycle_subquiver,
    endomorphism_dimension,
    enumerate_bricks,
    holonomy_family,
    is_brick,
    is_isomorphic,
    nontrivial_idempotent,
    pull_back_cycle_rep,
)
from .representations import QuiverRep, direct_sum, eval_relations


def kronecker():
    return make_quiver(('x', 'y'), [(0, 1, (0, 1)), (0, 1, (0, 2))])


def g2_certificate():
    _, quiver = presentation_quiver(reduce_to_hyperfocal(samples.g2()))
    return quiver, find_qualifying_cycles(quiver)[0]


class QuiverRepTests(SimpleTestCase):

    def test_shapes_are_checked(self):
        with self.assertRaises(ShapeError):
            QuiverRep.from_lists(kronecker(), 2, (1, 1), {0: [[1, 0]]})
        with self.assertRaises(ShapeError):
            QuiverRep.from_lists(kronecker(), 2, (1,))

    def test_zero_representation_satisfies_relations(self):
        _, quiver = presentation_quiver(reduce_to_hyperfocal(samples.g2()))
        rep = QuiverRep.zero(quiver, 2, (1, 1, 1))
        self.assertIsNone(eval_relations(rep))

    def test_square_relation_violation(self):
        _, quiver = presentation_quiver(reduce_to_hyperfocal(samples.g1()))
        ones = {quiver.arrow_from(v, (1, 1)).id: [[1]] for v in range(3)}
        rep = QuiverRep.from_lists(quiver, 2, (1, 1, 1), ones)
        violated = eval_relations(rep)
        power = quiver.relations.get(violated)
        self.assertEqual((power.vertex, power.label, power.length), (0, (1, 1), 2))

    def test_quiver_without_relations(self):
        rep = QuiverRep.from_lists(kronecker(), 2, (1, 1), {0: [[1]], 1: [[1]]})
        self.assertIsNone(eval_relations(rep))


class EndomorphismTests(SimpleTestCase):

    def test_simple(self):
        rep = QuiverRep.zero(kronecker(), 3, (1, 0))
        self.assertEqual(endomorphism_dimension(rep), 1)
        self.assertTrue(is_brick(rep))

    def test_direct_sum_of_a_brick(self):
        rep = QuiverRep.from_lists(kronecker(), 2, (1, 1), {0: [[1]]})
        self.assertTrue(is_brick(rep))
        self.assertEqual(endomorphism_dimension(direct_sum(rep, rep)), 4)

    def test_kronecker_one_two(self):
        rep = QuiverRep.from_lists(kronecker(), 2, (1, 2), {0: [[1], [0]], 1: [[0], [1]]})
        self.assertEqual(endomorphism_dimension(rep), 1)

    def test_zero_maps_are_not_bricks(self):
        self.assertFalse(is_brick(QuiverRep.zero(kronecker(), 2, (1, 1))))
        self.assertFalse(is_brick(QuiverRep.zero(kronecker(), 2, (0, 0))))


class IsomorphismTests(SimpleTestCase):

    def test_self(self):
        rep = QuiverRep.from_lists(kronecker(), 4, (1, 2), {0: [[1], [2]], 1: [[3], [1]]})
        self.assertTrue(is_isomorphic(rep, rep))

    def test_kronecker_points(self):
        a = QuiverRep.from_lists(kronecker(), 2, (1, 1), {0: [[1]], 1: [[0]]})
        b = QuiverRep.from_lists(kronecker(), 2, (1, 1), {0: [[0]], 1: [[1]]})
        self.assertFalse(is_isomorphic(a, b))

    def test_rescaled_is_isomorphic(self):
        a = QuiverRep.from_lists(kronecker(), 3, (1, 1), {0: [[1]], 1: [[2]]})
        b = QuiverRep.from_lists(kronecker(), 3, (1, 1), {0: [[2]], 1: [[1]]})
        self.assertTrue(is_isomorphic(a, b))

    def test_different_dimensions(self):
        self.assertFalse(is_isomorphic(QuiverRep.zero(kronecker(), 2, (1, 0)), QuiverRep.zero(kronecker(), 2, (0, 1))))

    def test_separately_built_quivers_of_one_shape(self):
        a = QuiverRep.from_lists(kronecker(), 2, (1, 1), {0: [[1]]})
        b = QuiverRep.from_lists(kronecker(), 2, (1, 1), {0: [[1]]})
        self.assertIsNot(a.quiver, b.quiver)
        self.assertTrue(is_isomorphic(a, b))
        self.assertEqual(direct_sum(a, b).dims, (2, 2))

    def test_quivers_of_another_shape(self):
        flipped = make_quiver(('x', 'y'), [(1, 0, (0, 1)), (0, 1, (0, 2))])
        a = QuiverRep.zero(kronecker(), 2, (1, 1))
        b = QuiverRep.zero(flipped, 2, (1, 1))
        with self.assertRaises(InvalidInput):
            is_isomorphic(a, b)
        with self.assertRaises(InvalidInput):
            direct_sum(a, b)


class IdempotentTests(SimpleTestCase):

    def bricks(self):
        quiver, cycle = g2_certificate()
        yield from holonomy_family(quiver, cycle, 4)
        yield from enumerate_bricks(kronecker(), (1, 1), 3).representatives
        yield QuiverRep.from_lists(kronecker(), 2, (1, 2), {0: [[1], [0]], 1: [[0], [1]]})

    def test_bricks_have_only_trivial_idempotents(self):
        for rep in self.bricks():
            with self.subTest(dims=rep.dims, matrices=rep.to_lists()):
                self.assertEqual(endomorphism_dimension(rep), 1)
                self.assertIsNone(nontrivial_idempotent(rep))

    def test_direct_sums_split(self):
        a = QuiverRep.from_lists(kronecker(), 3, (1, 1), {0: [[1]], 1: [[2]]})
        b = QuiverRep.from_lists(kronecker(), 3, (1, 1), {0: [[1]], 1: [[1]]})
        for rep in (direct_sum(a, a), direct_sum(a, b), direct_sum(a, QuiverRep.zero(kronecker(), 3, (1, 0)))):
            with self.subTest(dims=rep.dims):
                blocks = nontrivial_idempotent(rep)
                self.assertIsNotNone(blocks)
                for block in blocks:
                    self.assertTrue((block @ block == block).all())


class CycleFamilyTests(SimpleTestCase):

    def test_g2_triangle_brick(self):
        quiver, cycle = g2_certificate()
        rep = pull_back_cycle_rep(quiver, cycle, 1, 4)
        self.assertEqual(rep.dims, (1, 1, 1))
        self.assertIsNone(eval_relations(rep))
        self.assertEqual(endomorphism_dimension(rep), 1)

    def test_holonomies_are_distinct(self):
        quiver, cycle = g2_certificate()
        self.assertFalse(is_isomorphic(pull_back_cycle_rep(quiver, cycle, 2, 4), pull_back_cycle_rep(quiver, cycle, 3, 4)))

    def test_zero_holonomy(self):
        quiver, cycle = g2_certificate()
        with self.assertRaises(HolonomyZero):
            pull_back_cycle_rep(quiver, cycle, 0, 4)

    def test_non_qualifying_cycle(self):
        _, quiver = presentation_quiver(reduce_to_hyperfocal(samples.g1()))
        arrows = (quiver.arrow_from(0, (1, 1)).id, quiver.arrow_from(2, (1, 2)).id, quiver.arrow_from(2, (1, 1)).id)
        with self.assertRaises(NotQualifying):
            pull_back_cycle_rep(quiver, validate_zigzag(quiver, arrows), 1, 2)

    def test_certificates_carry_brick_families(self):
        presentations = [samples.g2(), samples.worked_example()] + samples.random_presentations(30, seed=41)
        certified = 0
        for pres in presentations:
            verdict = decide_abelian(pres)
            if verdict.outcome != Outcome.INFINITE:
                continue
            with self.subTest(blocks=pres.pgroup.blocks, h=pres.hgroup.generator_orders):
                for q in (2, 4):
                    family = holonomy_family(verdict.quiver, verdict.certificate, q)
                    self.assertEqual(len(family), q - 1)
                    for rep in family:
                        self.assertIsNone(eval_relations(rep))
                        self.assertTrue(is_brick(rep))
                    for a, b in itertools.combinations(family, 2):
                        self.assertFalse(is_isomorphic(a, b))
                certified += 1
        self.assertGreaterEqual(certified, 2)


class EnumerateBricksTests(SimpleTestCase):

    def test_kronecker_projective_line(self):
        for q in (2, 3, 4):
            with self.subTest(q=q):
                self.assertEqual(enumerate_bricks(kronecker(), (1, 1), q).count, q + 1)

    def test_first_representative_is_least(self):
        census = enumerate_bricks(kronecker(), (1, 1), 2)
        self.assertEqual(census.representatives[0].to_lists(), {0: [[0]], 1: [[1]]})

    def test_all_dimensions_zero(self):
        self.assertEqual(enumerate_bricks(kronecker(), (0, 0), 2).count, 0)

    def test_cycle_subquiver_grows_with_the_field(self):
        quiver, cycle = g2_certificate()
        sub = cycle_subquiver(quiver, cycle)
        self.assertTrue(sub.quiver_only)
        over_f2 = enumerate_bricks(sub, (1, 1, 1), 2).count
        over_f4 = enumerate_bricks(sub, (1, 1, 1), 4).count
        self.assertEqual((over_f2, over_f4), (4, 6))
        self.assertGreaterEqual(over_f4, 3)

    def test_holonomy_family_matches_census(self):
        quiver, cycle = g2_certificate()
        sub = cycle_subquiver(quiver, cycle)
        census = enumerate_bricks(sub, (1, 1, 1), 4)
        self.assertEqual(sum(1 for rep in census.representatives if all(m[0][0] for m in rep.to_lists().values())), 3)

    @override_settings(TAUTILT_BRICK_SEARCH_CAP=8)
    def test_search_cap(self):
        with self.assertRaises(SearchSpaceTooLarge):
            enumerate_bricks(kronecker(), (1, 1), 4)
