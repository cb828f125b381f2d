"""
Candidate zigzag cycles built from the eigencharacters instead of by search.

Each template is a list of steps (offset, character): the arrow labelled by
``character`` leaving the vertex ``offset (x) lambda``. Templates are only
candidates; whatever fails validation or qualification is dropped.
"""
import itertools
import logging

from charfield.characters import frobenius_orbits
from core.exceptions import ZigzagViolation

from .cycles import canonical_form, is_qualifying, validate_zigzag

logger = logging.getLogger(__name__)


def _label_for(quiver, chi):
    labels = [label for label, c in sorted(quiver.label_characters.items()) if c == chi]
    return labels[0] if labels else None


def _realize(quiver, base, steps, labels=None):
    """Arrow ids for the steps, starting from the vertex ``base``; None when an arrow is missing."""
    arrows = []
    for k, (offset, chi) in enumerate(steps):
        label = labels[k] if labels else _label_for(quiver, chi)
        if label is None:
            return None
        vertex = quiver.vertex_index[offset + base]
        arrows.append(quiver.arrow_from(vertex, label).id)
    return tuple(arrows)


def alternating_walk(quiver, base, forward, backward):
    """
    Forward along ``forward``, backward along ``backward``, repeated until the walk
    is back at ``base`` after a backward step. Labels, not characters, so repeated
    eigencharacters give distinct arrows.
    """
    chi = quiver.label_characters[forward]
    psi = quiver.label_characters[backward]
    step = chi - psi
    steps, labels = [], []
    offset = base - base
    for _ in range(len(quiver.vertices)):
        steps.append((offset, chi))
        labels.append(forward)
        offset = offset + step
        steps.append((offset, psi))
        labels.append(backward)
        if offset.is_trivial:
            return _realize(quiver, base, steps, labels)
    return None


def _orbit_templates(chi):
    """Even templates from a Frobenius orbit chi, chi^2, chi^4, ... of size at least three."""
    zero = chi - chi
    hexagon = [
        (zero, 2 * chi), (chi, chi), (chi, 4 * chi), (3 * chi, 2 * chi), (3 * chi, chi), (zero, 4 * chi),
    ]
    templates = [hexagon]
    if (5 * chi).is_trivial:
        templates.append([(zero, chi), (2 * chi, 4 * chi), (2 * chi, 2 * chi), (zero, 4 * chi)])
    return templates


def _paired_orbit_template(chi, psi):
    """4-cycle from two Frobenius orbits {chi, chi^2} and {psi, psi^2}."""
    zero = chi - chi
    return [(zero, chi), (chi + psi, 2 * psi), (chi + psi, 2 * chi), (zero, psi)]


def template_certificates(quiver, eigenchars, p):
    """
    Validated, qualifying template cycles from the trivial vertex, canonical and sorted.

    Alternating walks are tried for every ordered pair of distinct labels; for p = 2
    the Frobenius orbit constructions are tried block by block.
    """
    if not quiver.vertices:
        return []
    base = quiver.vertices[0]
    candidates = []
    for forward, backward in itertools.permutations(quiver.labels, 2):
        candidates.append(alternating_walk(quiver, base, forward, backward))

    if p == 2:
        blocks = sorted({block for block, _ in eigenchars})
        for block in blocks:
            orbits = frobenius_orbits([chi for b, chi in eigenchars if b == block], p)
            for orbit in orbits:
                if orbit.size >= 3:
                    for steps in _orbit_templates(orbit.characters[0]):
                        candidates.append(_realize(quiver, base, steps))
            pairs = [o for o in orbits if o.size == 2]
            for first, second in itertools.combinations(pairs, 2):
                steps = _paired_orbit_template(first.characters[0], second.characters[0])
                candidates.append(_realize(quiver, base, steps))

    accepted = set()
    for arrows in candidates:
        if arrows is None:
            continue
        try:
            cycle = validate_zigzag(quiver, arrows)
        except ZigzagViolation as exc:
            logger.debug("template %s dropped: %s", arrows, exc)
            continue
        if is_qualifying(quiver, cycle).qualifies:
            accepted.add(canonical_form(cycle))
    ordered = sorted(accepted, key=lambda arrows: (len(arrows), arrows))
    return [validate_zigzag(quiver, arrows) for arrows in ordered]
