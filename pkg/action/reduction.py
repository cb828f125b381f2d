import logging
from dataclasses import dataclass

import galois
import numpy as np
from sympy import Matrix

from abgroup.groups import (
    AbelianPGroup,
    BlockMatrix,
    SubgroupData,
    image_subgroup,
    joint_kernel,
    subgroup_sum,
)
from core.exceptions import InternalError

from .presentation import GroupPresentation, require_valid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HyperfocalData:
    hyperfocal: SubgroupData
    centralizer: SubgroupData
    reduced: GroupPresentation


def _commutator_maps(pres):
    identity = BlockMatrix.identity(pres.pgroup)
    return [a - identity for a in pres.action]


def hyperfocal_subgroup(pres):
    """[P, H], generated by the images of ``A_g - I`` over the H-generators."""
    require_valid(pres)
    return image_subgroup(_commutator_maps(pres), pres.pgroup)


def centralizer(pres):
    """C_P(H), the common kernel of ``A_g - I``."""
    require_valid(pres)
    return joint_kernel(_commutator_maps(pres), pres.pgroup)


def is_invariant(subgroup, pres):
    return all(
        subgroup.contains(a.apply(v)) for a in pres.action for v in subgroup.generators()
    )


def _independent_mod_p(vectors, p):
    """Greedy lowest-index-first selection of vectors independent over F_p."""
    field = galois.GF(p)
    chosen = []
    for index, v in enumerate(vectors):
        trial = [vectors[i] for i in chosen] + [v]
        if np.linalg.matrix_rank(field(np.array(trial, dtype=int) % p)) == len(trial):
            chosen.append(index)
    return chosen


def _summand_basis(form, p, e):
    """
    A free basis of a block component of [P, H], as the columns of a t x r matrix.

    The component is a direct summand of (Z/p^e)^t, so Howell columns that stay
    independent mod p generate it freely.
    """
    chosen = _independent_mod_p([list(c) for c in form.columns], p)
    columns = [form.columns[i] for i in chosen]
    if form.order != p ** (e * len(columns)):
        logger.error("block component of order %d is not free of rank %d", form.order, len(columns))
        raise InternalError("hyperfocal block component is not a homocyclic direct summand")
    return [list(row) for row in zip(*columns)] if columns else []


def reduce_to_hyperfocal(pres):
    """Presentation of [P, H] x| H with the induced action, zero-rank blocks dropped."""
    require_valid(pres)
    p = pres.p
    hyperfocal = image_subgroup(_commutator_maps(pres), pres.pgroup)
    new_blocks = []
    induced = [[] for _ in pres.action]
    for i, (e, t) in enumerate(pres.pgroup.blocks):
        form = hyperfocal.forms[i]
        if form.rank == 0:
            continue
        modulus = p ** e
        basis = _summand_basis(form, p, e)
        r = len(basis[0])
        rows = _independent_mod_p(basis, p)
        restricted = Matrix([basis[k] for k in rows])
        inverse = restricted.inv_mod(modulus)
        basis_matrix = Matrix(basis)
        for g, a in enumerate(pres.action):
            image = Matrix([list(row) for row in a.blocks[i]]) * basis_matrix
            x = (inverse * image.extract(rows, list(range(r)))).applyfunc(lambda v: v % modulus)
            if not (image - basis_matrix * x).applyfunc(lambda v: v % modulus).is_zero_matrix:
                logger.error("induced action on block %d for generator %d does not solve A B = B X", i, g)
                raise InternalError(f"block {i}: [P, H] is not invariant under generator {g}")
            induced[g].append(x.tolist())
        new_blocks.append((e, r))
        logger.debug("block %d: kept rank %d of %d", i, r, t)

    reduced_group = AbelianPGroup(p, new_blocks)
    return GroupPresentation(
        reduced_group,
        pres.hgroup,
        tuple(BlockMatrix.for_group(reduced_group, blocks) for blocks in induced),
    )


def hyperfocal_data(pres):
    """[P, H], C_P(H) and the reduced presentation, with the direct product law checked."""
    hyperfocal = hyperfocal_subgroup(pres)
    fixed = centralizer(pres)
    if hyperfocal.order * fixed.order != pres.pgroup.order or not subgroup_sum(hyperfocal, fixed).is_whole:
        logger.error("P is not the direct product of [P, H] and C_P(H)")
        raise InternalError("direct product decomposition P = C_P(H) x [P, H] failed")
    return HyperfocalData(hyperfocal, fixed, reduce_to_hyperfocal(pres))
