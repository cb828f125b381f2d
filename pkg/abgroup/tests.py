import random

from django.test import SimpleTestCase, override_settings

from core.exceptions import GroupTooLarge, InvalidInput, InvalidModulus, ShapeError

from .groups import (
    AbelianPGroup,
    BlockMatrix,
    exponent_tuples,
    howell_form,
    image_subgroup,
    invariant_factors,
    joint_kernel,
    kernel_subgroup,
    subgroup_sum,
)


def _add(group, x, y):
    return tuple(
        tuple((a + b) % m for a, b in zip(xi, yi))
        for m, xi, yi in zip(group.moduli, x, y)
    )


def _generated(group, generators):
    """Brute-force closure of a generating set."""
    zero = tuple(tuple([0] * t) for _, t in group.blocks)
    seen = {zero}
    frontier = [zero]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = _add(group, x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def _random_map(rng, group):
    return BlockMatrix.for_group(group, [
        [[rng.randrange(group.p ** e) for _ in range(t)] for _ in range(t)]
        for e, t in group.blocks
    ])


SMALL_GROUPS = [
    (2, [(1, 2)]),
    (2, [(2, 2)]),
    (2, [(1, 1), (2, 1), (3, 1)]),
    (2, [(1, 3), (2, 1)]),
    (3, [(1, 2)]),
    (3, [(1, 2), (2, 1)]),
    (3, [(2, 2)]),
    (5, [(1, 2)]),
    (7, [(1, 2)]),
]


class HowellFormTests(SimpleTestCase):

    def test_unit_determinant_spans_everything(self):
        form = howell_form([[0, 1], [1, 1]], 2)
        self.assertEqual(form.rank, 2)
        self.assertEqual(form.as_matrix(), ((1, 0), (0, 1)))

    def test_zero_matrix(self):
        form = howell_form([[0, 0], [0, 0]], 9)
        self.assertEqual(form.rank, 0)
        self.assertEqual(form.columns, ())
        self.assertEqual(form.order, 1)

    def test_non_unit_pivot(self):
        form = howell_form([[3]], 9)
        self.assertEqual(form.columns, ((3,),))
        self.assertEqual(form.order, 3)
        self.assertEqual({x for x in range(9) if form.contains([x])}, {0, 3, 6})

    def test_saturation_adds_hidden_generator(self):
        # span of (2, 1) mod 4 contains (0, 2), reachable only through 2 * (2, 1)
        form = howell_form([[2], [1]], 4)
        self.assertTrue(form.contains([0, 2]))
        self.assertFalse(form.contains([2, 0]))
        self.assertEqual(form.order, 4)

    def test_rejects_non_prime_power_modulus(self):
        for modulus in (1, 6, 12):
            with self.assertRaises(InvalidModulus):
                howell_form([[1]], modulus)

    def test_ragged_matrix(self):
        with self.assertRaises(ShapeError):
            howell_form([[1, 0], [1]], 4)

    def test_form_depends_only_on_span(self):
        rng = random.Random(7)
        for modulus, t in [(4, 2), (8, 3), (9, 2), (27, 2), (25, 2)]:
            for _ in range(20):
                cols = [[rng.randrange(modulus) for _ in range(t)] for _ in range(rng.randint(1, 3))]
                extra = []
                for _ in range(rng.randint(0, 3)):
                    coeffs = [rng.randrange(modulus) for _ in cols]
                    extra.append([sum(c * col[r] for c, col in zip(coeffs, cols)) % modulus for r in range(t)])
                shuffled = cols + extra
                rng.shuffle(shuffled)

                def rows(columns):
                    return [[col[r] for col in columns] for r in range(t)]

                self.assertEqual(howell_form(rows(cols), modulus), howell_form(rows(shuffled), modulus))

    def test_membership_matches_enumeration(self):
        rng = random.Random(11)
        group = AbelianPGroup(2, [(3, 2)])
        for _ in range(10):
            cols = [tuple(rng.randrange(8) for _ in range(2)) for _ in range(2)]
            form = howell_form([[c[r] for c in cols] for r in range(2)], 8)
            span = _generated(group, [(c,) for c in cols])
            members = {(x,) for (x,) in group.elements() if form.contains(x)}
            self.assertEqual(members, span)
            self.assertEqual(form.order, len(span))


class AbelianPGroupTests(SimpleTestCase):

    def test_order_and_rank(self):
        group = AbelianPGroup(3, [(1, 2), (2, 1)])
        self.assertEqual(group.order, 81)
        self.assertEqual(group.rank, 3)
        self.assertEqual(group.moduli, (3, 9))
        self.assertEqual(str(group), '(C_3)^2 x C_9')

    def test_trivial_group(self):
        group = AbelianPGroup(5)
        self.assertEqual(group.order, 1)
        self.assertEqual(list(group.elements()), [()])

    def test_rejects_bad_blocks(self):
        with self.assertRaises(InvalidInput):
            AbelianPGroup(4, [(1, 1)])
        with self.assertRaises(InvalidInput):
            AbelianPGroup(2, [(2, 1), (1, 1)])
        with self.assertRaises(InvalidInput):
            AbelianPGroup(2, [(1, 0)])

    def test_order_cap(self):
        with self.assertRaises(GroupTooLarge):
            AbelianPGroup(2, [(64, 1)])

    @override_settings(TAUTILT_ORACLE_MAX_ORDER=16)
    def test_oracle_enumeration_cap(self):
        self.assertEqual(len(exponent_tuples(AbelianPGroup(2, [(2, 2)]))), 16)
        with self.assertRaises(GroupTooLarge):
            exponent_tuples(AbelianPGroup(3, [(1, 3)]))


class BlockMatrixTests(SimpleTestCase):

    def test_entries_reduced(self):
        group = AbelianPGroup(3, [(1, 2), (2, 1)])
        m = BlockMatrix.for_group(group, [[[4, -1], [1, 2]], [[17]]])
        self.assertEqual(m.blocks, (((1, 2), (1, 2)), ((8,),)))

    def test_shape_errors(self):
        group = AbelianPGroup(2, [(1, 2)])
        with self.assertRaises(ShapeError):
            BlockMatrix.for_group(group, [[[1, 0]]])
        with self.assertRaises(ShapeError):
            BlockMatrix.for_group(group, [])

    def test_power(self):
        group = AbelianPGroup(2, [(2, 2)])
        a = BlockMatrix.for_group(group, [[[0, 1], [1, 1]]])
        self.assertFalse((a ** 3).is_identity())
        self.assertTrue((a ** 6).is_identity())
        self.assertEqual((a ** 0), BlockMatrix.identity(group))


class SubgroupTests(SimpleTestCase):

    def test_image_examples(self):
        g2 = AbelianPGroup(2, [(1, 2)])
        a = BlockMatrix.for_group(g2, [[[0, 1], [1, 1]]])
        full = image_subgroup([a - BlockMatrix.identity(g2)], g2)
        self.assertEqual(invariant_factors(full), (2, 2))
        self.assertTrue(full.is_whole)

        self.assertEqual(invariant_factors(image_subgroup([BlockMatrix.zero(g2)], g2)), ())

        c3 = AbelianPGroup(3, [(1, 2)])
        d = BlockMatrix.for_group(c3, [[[0, 0], [0, 1]]])
        image = image_subgroup([d], c3)
        self.assertEqual(invariant_factors(image), (3,))
        self.assertTrue(image.contains(((0, 1),)))
        self.assertFalse(image.contains(((1, 0),)))

    def test_kernel_examples(self):
        g2 = AbelianPGroup(2, [(1, 2)])
        zero = BlockMatrix.identity(g2) - BlockMatrix.identity(g2)
        self.assertTrue(kernel_subgroup(zero, g2).is_whole)
        unit = BlockMatrix.for_group(g2, [[[1, 1], [1, 0]]])
        self.assertTrue(kernel_subgroup(unit, g2).is_trivial)

        c3 = AbelianPGroup(3, [(1, 2)])
        d = BlockMatrix.for_group(c3, [[[0, 0], [0, 1]]])
        kernel = kernel_subgroup(d, c3)
        self.assertEqual(kernel.order, 3)
        self.assertTrue(kernel.contains(((1, 0),)))

    def test_full_homocyclic_factors(self):
        group = AbelianPGroup(2, [(2, 2)])
        whole = image_subgroup([BlockMatrix.identity(group)], group)
        self.assertEqual(invariant_factors(whole), (4, 4))

    def test_mixed_invariant_factors(self):
        group = AbelianPGroup(3, [(2, 2)])
        m = BlockMatrix.for_group(group, [[[3, 0], [0, 1]]])
        self.assertEqual(invariant_factors(image_subgroup([m], group)), (3, 9))

    def test_shape_mismatch(self):
        a = AbelianPGroup(2, [(1, 2)])
        b = AbelianPGroup(2, [(2, 2)])
        with self.assertRaises(ShapeError):
            image_subgroup([BlockMatrix.identity(b)], a)

    def test_joint_kernel_of_nothing_is_everything(self):
        group = AbelianPGroup(3, [(1, 1), (2, 1)])
        self.assertTrue(joint_kernel([], group).is_whole)

    def test_image_and_kernel_match_enumeration(self):
        rng = random.Random(2024)
        for p, blocks in SMALL_GROUPS:
            group = AbelianPGroup(p, blocks)
            elements = list(group.elements())
            for _ in range(4):
                maps = [_random_map(rng, group) for _ in range(rng.randint(1, 2))]

                image = image_subgroup(maps, group)
                brute_image = _generated(group, [m.apply(x) for m in maps for x in elements])
                self.assertEqual({x for x in elements if image.contains(x)}, brute_image)
                self.assertEqual(image.order, len(brute_image))

                kernel = joint_kernel(maps, group)
                zero = tuple(tuple([0] * t) for _, t in group.blocks)
                brute_kernel = {x for x in elements if all(m.apply(x) == zero for m in maps)}
                self.assertEqual({x for x in elements if kernel.contains(x)}, brute_kernel)

                single = maps[0]
                self.assertEqual(
                    kernel_subgroup(single, group).order * image_subgroup([single], group).order,
                    group.order,
                )

    def test_invariant_factors_multiply_to_order(self):
        rng = random.Random(5)
        for p, blocks in SMALL_GROUPS:
            group = AbelianPGroup(p, blocks)
            for _ in range(3):
                sub = image_subgroup([_random_map(rng, group)], group)
                product = 1
                for f in sub.invariant_factors:
                    product *= f
                self.assertEqual(product, sub.order)

    def test_sum_of_complementary_subgroups(self):
        group = AbelianPGroup(3, [(1, 2)])
        first = image_subgroup([BlockMatrix.for_group(group, [[[1, 0], [0, 0]]])], group)
        second = image_subgroup([BlockMatrix.for_group(group, [[[0, 0], [0, 1]]])], group)
        self.assertTrue(subgroup_sum(first, second).is_whole)
