"""
Zigzag cycles in bound quivers.

A zigzag cycle a_1 ... a_n alternates direction: a_1 leaves v_0, a_2 enters
the target of a_1 from a new vertex, a_3 leaves that vertex, and so on. Odd
steps walk an arrow forwards and even steps walk one backwards. An even cycle
closes when a_n leaves v_0; an odd one when a_n enters v_0, so (a_n, a_1) is
its only composable pair.
"""
import logging
from dataclasses import dataclass

from django.db import models

from core.exceptions import InternalError, InvalidInput, ZigzagViolation

logger = logging.getLogger(__name__)


class QualificationReason(models.TextChoices):
    EVEN_LENGTH = 'even_length', 'Even length'
    CLOSING_PATH_ABSENT = 'closing_path_absent', 'Odd, closing path absent from the relations'
    CLOSING_PATH_APPEARS = 'closing_path_appears', 'Odd, closing path appears in a relation'
    RELATIONS_UNKNOWN = 'relations_unknown', 'Odd, relations unknown'


@dataclass(frozen=True)
class ZigzagCycle:
    arrows: tuple
    vertices: tuple

    @property
    def length(self):
        return len(self.arrows)

    @property
    def parity(self):
        return 'even' if self.length % 2 == 0 else 'odd'


@dataclass(frozen=True)
class QualificationReport:
    qualifies: bool
    reason: QualificationReason
    generator: int = None


def _shared_vertex(arrow, index):
    """Vertex v_index reached by a_index (1-based): its target on odd steps, its source on even ones."""
    return arrow.target if index % 2 else arrow.source


def validate_zigzag(quiver, arrow_ids):
    """The ZigzagCycle for ``arrow_ids``, or ZigzagViolation naming the failed clause."""
    arrow_ids = tuple(arrow_ids)
    n = len(arrow_ids)
    if n < 2:
        raise ZigzagViolation('length', n, "a zigzag cycle needs n >= 2 arrows")
    try:
        arrows = [quiver.arrow(a) for a in arrow_ids]
    except InvalidInput as exc:
        raise ZigzagViolation('arrow', 0, str(exc)) from exc

    for i in range(1, n):
        current, following = arrows[i - 1], arrows[i]
        if i % 2 and current.target != following.target:
            raise ZigzagViolation('alternation', i, f"t(a_{i}) != t(a_{i + 1})")
        if not i % 2 and current.source != following.source:
            raise ZigzagViolation('alternation', i, f"s(a_{i}) != s(a_{i + 1})")
    first, last = arrows[0], arrows[-1]
    if n % 2 and first.source != last.target:
        raise ZigzagViolation('closure', n, "odd length needs s(a_1) = t(a_n)")
    if not n % 2 and first.source != last.source:
        raise ZigzagViolation('closure', n, "even length needs s(a_1) = s(a_n)")

    if len(set(arrow_ids)) != n:
        repeated = next(i for i, a in enumerate(arrow_ids, 1) if arrow_ids.index(a) != i - 1)
        raise ZigzagViolation('distinct arrows', repeated, "an arrow is used twice")
    vertices = [first.source] + [_shared_vertex(a, i) for i, a in enumerate(arrows[:-1], 1)]
    seen = set()
    for i, v in enumerate(vertices):
        if v in seen:
            raise ZigzagViolation('distinct vertices', i, f"vertex {v} is visited twice")
        seen.add(v)

    cycle = ZigzagCycle(arrow_ids, tuple(vertices))
    _assert_composable_pairs(quiver, cycle)
    return cycle


def composable_pairs(quiver, cycle):
    """Ordered pairs (x, y) of cycle arrows with t(x) = s(y)."""
    arrows = [quiver.arrow(a) for a in cycle.arrows]
    return [(x.id, y.id) for x in arrows for y in arrows if x.id != y.id and x.target == y.source]


def _assert_composable_pairs(quiver, cycle):
    pairs = composable_pairs(quiver, cycle)
    expected = [] if cycle.length % 2 == 0 else [(cycle.arrows[-1], cycle.arrows[0])]
    if pairs != expected:
        logger.error("zigzag cycle %s has composable pairs %s", cycle.arrows, pairs)
        raise InternalError("validated zigzag cycle has unexpected composable arrows")


def is_qualifying(quiver, cycle):
    """
    Even cycles qualify. An odd cycle qualifies when its closing path, a_n then a_1,
    is not literally one of the monomials of the relation generators.
    """
    if cycle.length % 2 == 0:
        return QualificationReport(True, QualificationReason.EVEN_LENGTH)
    if quiver.quiver_only:
        return QualificationReport(False, QualificationReason.RELATIONS_UNKNOWN)
    closing = (cycle.arrows[-1], cycle.arrows[0])
    for c in quiver.relations.commutators:
        if closing in (c.left, c.right):
            return QualificationReport(False, QualificationReason.CLOSING_PATH_APPEARS, c.id)
    for r in quiver.relations.powers:
        if r.length == 2 and r.path(quiver) == closing:
            return QualificationReport(False, QualificationReason.CLOSING_PATH_APPEARS, r.id)
    return QualificationReport(True, QualificationReason.CLOSING_PATH_ABSENT)


def canonical_form(cycle):
    """
    Least arrow sequence describing the same cycle. Even cycles may start at any
    source vertex and run either way; an odd cycle's start is fixed by its closing pair.
    """
    arrows = cycle.arrows
    if len(arrows) % 2:
        return arrows
    n = len(arrows)
    reversed_arrows = arrows[::-1]
    candidates = []
    for seq in (arrows, reversed_arrows):
        candidates.extend(seq[k:] + seq[:k] for k in range(0, n, 2))
    return min(candidates)


def _zigzags_of_length(quiver, length):
    """Every zigzag arrow sequence of exactly ``length`` arrows with distinct vertices and arrows."""
    found = []

    def extend(start, path, visited, used, current):
        step = len(path) + 1
        candidates = quiver.out_arrows[current] if step % 2 else quiver.in_arrows[current]
        for a in candidates:
            if a.id in used:
                continue
            other = a.target if step % 2 else a.source
            if step == length:
                if other == start:
                    found.append(tuple(path) + (a.id,))
                continue
            if other in visited:
                continue
            visited.add(other)
            used.add(a.id)
            path.append(a.id)
            extend(start, path, visited, used, other)
            path.pop()
            used.discard(a.id)
            visited.discard(other)

    for v in range(len(quiver.vertices)):
        extend(v, [], {v}, set(), v)
    return found


def find_qualifying_cycles(quiver, max_len=None, shortest_only=False, seeds=()):
    """
    Every qualifying zigzag cycle of length at most ``max_len`` (default 2|V|),
    one per cycle in canonical form, sorted by length then arrow ids.

    ``seeds`` are candidate arrow sequences; a qualifying seed caps the search at its
    length when only the shortest cycles are wanted.
    """
    max_len = 2 * len(quiver.vertices) if max_len is None else max_len
    if max_len < 2:
        raise InvalidInput(f"max_len must be at least 2, got {max_len}")

    results = set()
    for seed in seeds:
        try:
            cycle = validate_zigzag(quiver, seed)
        except ZigzagViolation:
            continue
        if cycle.length <= max_len and is_qualifying(quiver, cycle).qualifies:
            results.add(canonical_form(cycle))
    if shortest_only and results:
        max_len = min(len(r) for r in results)

    for length in range(2, min(max_len, len(quiver.vertices)) + 1):
        for arrows in _zigzags_of_length(quiver, length):
            cycle = validate_zigzag(quiver, arrows)
            if is_qualifying(quiver, cycle).qualifies:
                results.add(canonical_form(cycle))
        logger.debug("zigzag search: %d qualifying cycles up to length %d", len(results), length)
        if shortest_only and results:
            break

    ordered = sorted(results, key=lambda arrows: (len(arrows), arrows))
    if shortest_only and ordered:
        ordered = [a for a in ordered if len(a) == len(ordered[0])]
    return [validate_zigzag(quiver, arrows) for arrows in ordered]
