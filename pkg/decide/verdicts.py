"""
The verdict engine: tau-tilting finiteness of k[P x| H] from the structure of
the hyperfocal subgroup R = [P, H], with zigzag certificates for infinite
verdicts.

p = 2: finite iff R is trivial or C_2 x C_2.
p >= 3: finite iff R is trivial or cyclic.
"""
import logging
from dataclasses import dataclass, field

from django.db import models

from abgroup.groups import prime_power
from action.presentation import GroupPresentation, require_valid
from action.reduction import centralizer, hyperfocal_data
from charfield.eigen import check_reduced_characters, eigencharacters
from charfield.fields import build_splitting_field
from core.exceptions import InconsistentRankOne, InvalidInput, NontrivialFixedSpace
from quiverbuild.quivers import build_bound_quiver
from zigzag.cycles import find_qualifying_cycles
from zigzag.templates import template_certificates

logger = logging.getLogger(__name__)


class Outcome(models.TextChoices):
    FINITE = 'finite', 'tau-tilting finite'
    INFINITE = 'infinite', 'tau-tilting infinite'
    UNKNOWN = 'unknown', 'Undecided'


class Mode(models.TextChoices):
    ABELIAN = 'abelian', 'Abelian P'
    FRATTINI = 'frattini', 'Frattini quotient'


class HyperfocalKind(models.TextChoices):
    TRIVIAL = 'trivial', 'Trivial'
    CYCLIC = 'cyclic', 'Cyclic'
    KLEIN_FOUR = 'klein_four', 'Klein four'
    OTHER = 'other', 'Other'


class GroupShape(models.TextChoices):
    """Isomorphism types of R the sufficiency test knows about, abelian or not."""
    CYCLIC = 'cyclic', 'Cyclic'
    DIHEDRAL = 'dihedral', 'Dihedral'
    SEMIDIHEDRAL = 'semidihedral', 'Semidihedral'
    QUATERNION = 'quaternion', 'Generalized quaternion'
    OTHER = 'other', 'Other'


class Sufficiency(models.TextChoices):
    YES = 'yes', 'Finite'
    UNKNOWN = 'unknown', 'Not settled by the structure of R alone'


class Reason(models.TextChoices):
    TRIVIAL_HYPERFOCAL = 'trivial_hyperfocal', 'R is trivial'
    CYCLIC_HYPERFOCAL = 'cyclic_hyperfocal', 'p >= 3 and R is cyclic'
    KLEIN_FOUR = 'klein_four', 'p = 2 and R is C_2 x C_2, the dihedral group of order 4'
    LARGE_HYPERFOCAL = 'large_hyperfocal', 'R is not of finite type for this prime'
    RANK_ZERO = 'frattini_rank_zero', 'P/Phi(P) is trivial'
    RANK_ONE = 'frattini_rank_one', 'p >= 3 and P/Phi(P) has rank one'
    RANK_AT_LEAST_TWO = 'frattini_rank_at_least_two', 'p >= 3 and P/Phi(P) has rank at least two'
    P2_RANK_TWO = 'frattini_p2_rank_two', 'p = 2 and P/Phi(P) has rank two: both outcomes occur (compare samples g1 and g2)'
    P2_RANK_AT_LEAST_THREE = 'frattini_p2_rank_at_least_three', 'p = 2 and P/Phi(P) has rank at least three'


@dataclass(frozen=True)
class HyperfocalClass:
    kind: HyperfocalKind
    p: int
    factors: tuple = ()

    @property
    def rank(self):
        return len(self.factors)


@dataclass(frozen=True, eq=False)
class Verdict:
    """
    ``certificate`` is a qualifying ZigzagCycle in ``quiver`` for infinite verdicts.
    ``classification_only`` marks an infinite verdict the search failed to certify.
    """
    mode: Mode
    outcome: Outcome
    reason: Reason
    p: int
    hyperfocal: tuple = None
    frattini_rank: int = None
    certificate: object = None
    quiver: object = None
    classification_only: bool = False
    hyperfocal_class: HyperfocalClass = field(default=None, repr=False)


@dataclass(frozen=True)
class FrattiniInput:
    """Action of H on P/Phi(P) = (C_p)^n, one n x n matrix over F_p per H-generator."""
    p: int
    n: int
    orders: tuple
    matrices: tuple

    def presentation(self):
        blocks = [(1, self.n)] if self.n else []
        return GroupPresentation.from_lists(
            self.p, blocks, list(self.orders), [[m] if self.n else [] for m in self.matrices],
        )


def classify_hyperfocal(factors, p):
    factors = tuple(sorted(int(f) for f in factors))
    for f in factors:
        q, _ = prime_power(f)
        if q != p:
            raise InvalidInput(f"invariant factor {f} is not a power of p = {p}")
    if not factors:
        kind = HyperfocalKind.TRIVIAL
    elif len(factors) == 1:
        kind = HyperfocalKind.CYCLIC
    elif factors == (2, 2):
        kind = HyperfocalKind.KLEIN_FOUR
    else:
        kind = HyperfocalKind.OTHER
    return HyperfocalClass(kind, p, factors)


def finiteness_sufficient(desc, p=None):
    """
    Whether the shape of R alone forces finiteness: cyclic R for any p, and for
    p = 2 dihedral, semidihedral or generalized quaternion R. Anything else is
    left open here.
    """
    if isinstance(desc, HyperfocalClass):
        p = desc.p
        desc = {
            HyperfocalKind.TRIVIAL: GroupShape.CYCLIC,
            HyperfocalKind.CYCLIC: GroupShape.CYCLIC,
            HyperfocalKind.KLEIN_FOUR: GroupShape.DIHEDRAL,
        }.get(desc.kind, GroupShape.OTHER)
    if desc == GroupShape.CYCLIC:
        return Sufficiency.YES
    if p == 2 and desc in (GroupShape.DIHEDRAL, GroupShape.SEMIDIHEDRAL, GroupShape.QUATERNION):
        return Sufficiency.YES
    return Sufficiency.UNKNOWN


def _reduced_characters(reduced):
    field_ = build_splitting_field(reduced.p, reduced.hgroup.exponent)
    chars = eigencharacters(reduced, field_)
    check_reduced_characters(reduced, chars)
    return chars


def certify(reduced, chars=None):
    """
    Quiver of a reduced presentation and its shortest qualifying zigzag cycle
    (None when there is none), templates first.
    """
    if chars is None:
        chars = _reduced_characters(reduced)
    quiver = build_bound_quiver(chars, reduced.hgroup, reduced.pgroup)
    seeds = [c.arrows for c in template_certificates(quiver, chars, reduced.p)]
    cycles = find_qualifying_cycles(quiver, shortest_only=True, seeds=seeds)
    logger.debug("%d template seeds, %d shortest qualifying cycles", len(seeds), len(cycles))
    return quiver, (cycles[0] if cycles else None)


def _infinite(mode, reason, reduced, chars=None, **extra):
    quiver, cycle = certify(reduced, chars)
    if cycle is None:
        logger.warning("infinite verdict (%s) without a zigzag certificate", reason.value)
    return Verdict(
        mode=mode, outcome=Outcome.INFINITE, reason=reason, p=reduced.p,
        certificate=cycle, quiver=quiver, classification_only=cycle is None, **extra,
    )


def decide_abelian(pres):
    data = hyperfocal_data(pres)
    p = pres.p
    hyperfocal = classify_hyperfocal(data.hyperfocal.invariant_factors, p)
    chars = _reduced_characters(data.reduced)
    extra = {'hyperfocal': hyperfocal.factors, 'hyperfocal_class': hyperfocal}

    if hyperfocal.kind == HyperfocalKind.TRIVIAL:
        verdict = Verdict(Mode.ABELIAN, Outcome.FINITE, Reason.TRIVIAL_HYPERFOCAL, p, **extra)
    elif p == 2 and hyperfocal.kind == HyperfocalKind.KLEIN_FOUR:
        verdict = Verdict(Mode.ABELIAN, Outcome.FINITE, Reason.KLEIN_FOUR, p, **extra)
    elif p != 2 and hyperfocal.kind == HyperfocalKind.CYCLIC:
        verdict = Verdict(Mode.ABELIAN, Outcome.FINITE, Reason.CYCLIC_HYPERFOCAL, p, **extra)
    else:
        verdict = _infinite(Mode.ABELIAN, Reason.LARGE_HYPERFOCAL, data.reduced, chars, **extra)
    logger.info("abelian verdict: %s (%s), R = %s", verdict.outcome.value, verdict.reason.value, hyperfocal.factors)
    return verdict


def decide_frattini(inp):
    """
    Verdict from the action on P/Phi(P), assuming C_P(H) <= Phi(P); that assumption
    forces H to act on the quotient without nonzero fixed points.
    """
    p, n = inp.p, inp.n
    if p == 2 and n == 1:
        raise InconsistentRankOne("a 2'-group cannot act fixed-point-freely on C_2")
    pres = inp.presentation()
    require_valid(pres)
    if not centralizer(pres).is_trivial:
        raise NontrivialFixedSpace("H fixes a nonzero vector of P/Phi(P), so C_P(H) is not inside Phi(P)")

    extra = {'frattini_rank': n}
    if n == 0:
        verdict = Verdict(Mode.FRATTINI, Outcome.FINITE, Reason.RANK_ZERO, p, **extra)
    elif p == 2 and n == 2:
        verdict = Verdict(Mode.FRATTINI, Outcome.UNKNOWN, Reason.P2_RANK_TWO, p, **extra)
    elif p == 2:
        verdict = _infinite(Mode.FRATTINI, Reason.P2_RANK_AT_LEAST_THREE, pres, **extra)
    elif n == 1:
        verdict = Verdict(Mode.FRATTINI, Outcome.FINITE, Reason.RANK_ONE, p, **extra)
    else:
        verdict = _infinite(Mode.FRATTINI, Reason.RANK_AT_LEAST_TWO, pres, **extra)
    logger.info("frattini verdict: %s (%s), rank %d", verdict.outcome.value, verdict.reason.value, n)
    return verdict
