"""
Curated presentations and a seeded generator of random valid ones.

The curated entries are the small groups the toolkit is usually checked
against; ``random_presentation`` feeds the property sweeps.
"""
import math
import random

from sympy import Matrix, divisors, primitive_root

from abgroup.groups import AbelianPGroup, BlockMatrix
from action.presentation import AbelianGroupH, GroupPresentation
from core.exceptions import InternalError


def g1():
    """(C_2)^2 x| C_3, c: a -> b, b -> ab."""
    return GroupPresentation.from_lists(2, [(1, 2)], [3], [[[[0, 1], [1, 1]]]])


def g2():
    """(C_4)^2 x| C_3, c: a -> b, b -> a^-1 b^-1 (reduces mod 2 to the action of g1)."""
    return GroupPresentation.from_lists(2, [(2, 2)], [3], [[[[0, 3], [1, 3]]]])


def worked_example():
    """((C_3)^2 x C_9) x| C_4."""
    return GroupPresentation.from_lists(
        3, [(1, 2), (2, 1)], [4], [[[[1, 1], [1, 2]], [[8]]]],
    )


def partial_fixed():
    """(C_3)^2 x| C_2 fixing the first coordinate and inverting the second."""
    return GroupPresentation.from_lists(3, [(1, 2)], [2], [[[[1, 0], [0, 2]]]])


def inversion():
    """C_3 x| C_2 by inversion."""
    return GroupPresentation.from_lists(3, [(1, 1)], [2], [[[[2]]]])


def identity_action(p=3, blocks=((1, 2),), orders=(2,)):
    pgroup = AbelianPGroup(p, blocks)
    return GroupPresentation(
        pgroup, AbelianGroupH(orders), tuple(BlockMatrix.identity(pgroup) for _ in orders),
    )


def s3_table_document():
    """Character table of S_3 with the module triv + std, as a chartable document."""
    return {
        'exponent': 6,
        'classes': [
            {'name': '1', 'size': 1},
            {'name': '(12)', 'size': 3},
            {'name': '(123)', 'size': 2},
        ],
        'characters': [
            {'name': 'triv', 'values': [1, 1, 1]},
            {'name': 'std', 'values': [2, 0, -1]},
            {'name': 'sgn', 'values': [1, -1, 1]},
        ],
        'module': [3, 1, 0],
    }


SAMPLES = {
    'g1': g1,
    'g2': g2,
    'worked-example': worked_example,
    'partial-fixed': partial_fixed,
    'inversion': inversion,
    'identity': identity_action,
}


BLOCK_SHAPES = {
    2: [[(1, 1)], [(1, 2)], [(1, 3)], [(1, 4)], [(2, 1)], [(2, 2)], [(3, 2)],
        [(1, 1), (2, 1)], [(1, 2), (2, 1)], [(1, 2), (2, 2)]],
    3: [[(1, 1)], [(1, 2)], [(1, 3)], [(1, 4)], [(2, 1)], [(2, 2)],
        [(1, 1), (2, 1)], [(1, 2), (2, 1)]],
    5: [[(1, 1)], [(1, 2)], [(2, 1)]],
}


def _gl_order(p, e, t):
    """|GL_t(Z/p^e)| split as (p-part exponent, p'-part)."""
    coprime = math.prod(p ** i - 1 for i in range(1, t + 1))
    return (e - 1) * t * t + t * (t - 1) // 2, coprime


def _random_unit_block(rng, p, e, t):
    while True:
        block = [[rng.randrange(p ** e) for _ in range(t)] for _ in range(t)]
        if _det_mod_p(block, p):
            return block


def _det_mod_p(block, p):
    return Matrix(block).det() % p


def _element_order(matrix, bound):
    for d in divisors(bound):
        if (matrix ** d).is_identity():
            return d
    raise InternalError("element order does not divide the group exponent bound")


def _commuting_partner(rng, pgroup, matrix):
    """
    A random element commuting with the block-diagonal ``matrix``: its restriction
    to a random subset of blocks, times a scalar of order dividing p - 1 per block.
    """
    p = pgroup.p
    root = primitive_root(p)
    blocks = []
    for (e, t), block in zip(pgroup.blocks, matrix.blocks):
        modulus = p ** e
        scalar = pow(root, p ** (e - 1) * rng.randrange(p - 1), modulus)
        base = block if rng.random() < 0.5 else Matrix.eye(t).tolist()
        blocks.append([[scalar * x for x in row] for row in base])
    return BlockMatrix.for_group(pgroup, blocks)


def random_presentation(rng=None, p=None, max_h_order=8, identity_chance=0.1,
                        product_chance=0.0, max_product_order=12):
    """
    A random valid presentation with H of p'-order.

    Random units are raised to the p-part of |GL| so that only their p'-component
    survives; the first generator of H acts by that component (or a power of it),
    of order at most ``max_h_order``. With probability ``product_chance`` H gets a
    second cyclic factor acting by a commuting element, with |H| at most
    ``max_product_order``; its order is any p'-multiple of that element's order, so
    H is often not cyclic.
    """
    rng = rng or random.Random()
    p = p or rng.choice(sorted(BLOCK_SHAPES))
    blocks = rng.choice(BLOCK_SHAPES[p])
    pgroup = AbelianPGroup(p, blocks)

    if rng.random() < identity_chance:
        d = rng.choice([d for d in range(1, max_h_order + 1) if d % p])
        return GroupPresentation(pgroup, AbelianGroupH((d,)), (BlockMatrix.identity(pgroup),))

    raw = []
    bound = 1
    for e, t in blocks:
        raw.append(_random_unit_block(rng, p, e, t))
        _, coprime = _gl_order(p, e, t)
        bound = math.lcm(bound, coprime)
    matrix = BlockMatrix.for_group(pgroup, raw)
    p_part = max(_gl_order(p, e, t)[0] for e, t in blocks)
    matrix = matrix ** (p ** p_part)

    order = _element_order(matrix, bound)
    target = max(d for d in divisors(order) if d <= max_h_order)
    matrix = matrix ** (order // target)

    if product_chance and rng.random() < product_chance:
        partner = _commuting_partner(rng, pgroup, matrix)
        partner_order = _element_order(partner, math.lcm(target, p - 1))
        room = max_product_order // target
        choices = [d for d in range(2, room + 1) if d % partner_order == 0 and d % p]
        if choices:
            second = rng.choice(choices)
            return GroupPresentation(pgroup, AbelianGroupH((target, second)), (matrix, partner))
    return GroupPresentation(pgroup, AbelianGroupH((target,)), (matrix,))


def random_presentations(count, seed=0, **kwargs):
    rng = random.Random(seed)
    return [random_presentation(rng, **kwargs) for _ in range(count)]
