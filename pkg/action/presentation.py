"""
Presentations of semidirect products P x| H with P abelian (blockwise
homocyclic) and H abelian, given by one block matrix per H-generator.
"""
import itertools
import logging
import math
from dataclasses import dataclass

from sympy import Matrix

from abgroup.groups import AbelianPGroup, BlockMatrix
from core.exceptions import InvalidInput, InvalidPresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbelianGroupH:
    generator_orders: tuple = ()

    def __post_init__(self):
        orders = tuple(int(d) for d in self.generator_orders)
        if any(d < 1 for d in orders):
            raise InvalidInput(f"generator orders must be positive, got {orders}")
        object.__setattr__(self, 'generator_orders', orders)

    @property
    def order(self):
        return math.prod(self.generator_orders)

    @property
    def exponent(self):
        return math.lcm(*self.generator_orders) if self.generator_orders else 1

    @property
    def ngens(self):
        return len(self.generator_orders)

    def elements(self):
        return itertools.product(*[range(d) for d in self.generator_orders])


@dataclass(frozen=True)
class GroupPresentation:
    pgroup: AbelianPGroup
    hgroup: AbelianGroupH
    action: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'action', tuple(self.action))

    @property
    def p(self):
        return self.pgroup.p

    @property
    def order(self):
        return self.pgroup.order * self.hgroup.order

    @classmethod
    def from_lists(cls, p, blocks, orders, matrices):
        """``matrices[g]`` is the list of per-block integer matrices of generator ``g``."""
        pgroup = AbelianPGroup(p, blocks)
        return cls(
            pgroup,
            AbelianGroupH(orders),
            tuple(BlockMatrix.for_group(pgroup, m) for m in matrices),
        )

    def matrix_for(self, h):
        """Action matrix of the element of H with exponent tuple ``h``."""
        result = BlockMatrix.identity(self.pgroup)
        for a, k in zip(self.action, h):
            result = result @ (a ** k)
        return result


def validate_presentation(pres):
    """
    Every violated standing hypothesis, as human readable strings.

    An empty list means the presentation is valid.
    """
    violations = []
    p = pres.p
    orders = pres.hgroup.generator_orders
    if len(pres.action) != len(orders):
        violations.append(
            f"expected {len(orders)} action matrices (one per H-generator), got {len(pres.action)}"
        )
    if pres.hgroup.order % p == 0:
        violations.append(f"p = {p} divides |H| = {pres.hgroup.order}")

    shapes_ok = []
    for g, a in enumerate(pres.action):
        if a.moduli != pres.pgroup.moduli or [len(b) for b in a.blocks] != [t for _, t in pres.pgroup.blocks]:
            violations.append(f"generator {g}: action matrix does not match the blocks of P")
            continue
        shapes_ok.append(g)
        for i, block in enumerate(a.blocks):
            if Matrix([list(row) for row in block]).det() % p == 0:
                violations.append(f"generator {g}, block {i}: matrix is not invertible mod {p}")
        if g < len(orders) and not (a ** orders[g]).is_identity():
            violations.append(f"generator {g}: A^{orders[g]} is not the identity")

    for g, h in itertools.combinations(shapes_ok, 2):
        a, b = pres.action[g], pres.action[h]
        if a @ b != b @ a:
            violations.append(f"generators {g} and {h} do not commute")

    if violations:
        logger.debug("presentation rejected: %s", violations)
    return violations


def require_valid(pres):
    violations = validate_presentation(pres)
    if violations:
        raise InvalidPresentation(violations)
    return pres
