import logging
from dataclasses import dataclass

from core.exceptions import InternalError

from .characters import Character

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EigenSpace:
    """Common eigenspace of the mod-p action on one block; columns of ``basis`` span it."""
    block: int
    character: Character
    basis: object

    @property
    def dimension(self):
        return self.basis.shape[1]


def mod_p_action(pres, field):
    """Per block, the list of mod-p reduced generator matrices over ``field``."""
    return [
        [field.embed(a.blocks[i]) for a in pres.action]
        for i in range(len(pres.pgroup.blocks))
    ]


def eigenspaces(pres, field):
    """
    Split each block of M = J/J^2 into common eigenspaces of the H-generators.

    Generators are processed in order; each current subspace is cut by
    ker(A_g - zeta_g^j I) for j in 0..d_g-1, which must exhaust it.
    """
    orders = pres.hgroup.generator_orders
    F = field.field
    result = []
    for i, reduced in enumerate(mod_p_action(pres, field)):
        _, t = pres.pgroup.blocks[i]
        spaces = [((), F.Identity(t))]
        for g, (a, d) in enumerate(zip(reduced, orders)):
            root = field.root(d)
            split = []
            for exps, basis in spaces:
                found = 0
                for j in range(d):
                    shifted = (a - F.Identity(t) * root ** j) @ basis
                    null = shifted.null_space()
                    if null.shape[0]:
                        split.append((exps + (j,), basis @ null.T))
                        found += null.shape[0]
                if found != basis.shape[1]:
                    logger.error("block %d: generator %d split %d of %d dimensions", i, g, found, basis.shape[1])
                    raise InternalError(f"eigenspace split failed on block {i} for generator {g}")
            spaces = split
        for exps, basis in spaces:
            result.append(EigenSpace(i, Character(exps, orders), basis))
            logger.debug("block %d: eigencharacter %s with multiplicity %d", i, exps, basis.shape[1])
    result.sort(key=lambda s: (s.block, s.character))
    return result


def eigencharacters(pres, field):
    """Canonical multiset of (block index, character), sorted by block then character."""
    chars = []
    for space in eigenspaces(pres, field):
        chars.extend([(space.block, space.character)] * space.dimension)
    return tuple(sorted(chars))


def check_reduced_characters(pres, chars):
    """
    Sanity checks that hold once P has been replaced by [P, H]:
    no eigencharacter is trivial, and for p = 2 no block has multiplicity one.
    """
    for block, chi in chars:
        if chi.is_trivial:
            logger.error("trivial eigencharacter on block %d of a reduced presentation", block)
            raise InternalError("reduced presentation has a trivial eigencharacter (the quiver would have a loop)")
    if pres.p == 2:
        for i, (e, t) in enumerate(pres.pgroup.blocks):
            if t == 1:
                logger.error("block %d of a reduced 2-group has rank one", i)
                raise InternalError(f"reduced block {i} (C_{2 ** e}) has multiplicity one for p = 2")
