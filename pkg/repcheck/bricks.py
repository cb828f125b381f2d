"""
Bricks: representations whose endomorphism algebra is the ground field.

Homomorphism spaces are solved as linear systems over GF(q); isomorphism and
brick censuses are exhaustive and refuse to run past the configured caps.
"""
import itertools
import logging
from dataclasses import dataclass

import numpy as np

from core.conf import toolkit_setting
from core.exceptions import HolonomyZero, InvalidInput, NotQualifying, SearchSpaceTooLarge, ShapeError
from quiverbuild.quivers import make_quiver
from zigzag.cycles import is_qualifying, validate_zigzag

from .representations import QuiverRep, eval_relations

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BrickCensus:
    count: int
    representatives: tuple


def _variable_layout(source_dims, target_dims):
    """Offset of the block F_v (target_dims[v] x source_dims[v]) in the unknown vector."""
    offsets, total = [], 0
    for s, t in zip(source_dims, target_dims):
        offsets.append(total)
        total += s * t
    return offsets, total


def hom_space(a, b):
    """
    Basis (as rows) of the families F_v : a_v -> b_v with
    F_{t(x)} M^a_x = M^b_x F_{s(x)} for every arrow x.
    """
    if not a.quiver.same_shape(b.quiver) or a.q != b.q:
        raise InvalidInput("homomorphisms need representations of one quiver over one field")
    field = a.field
    offsets, nvars = _variable_layout(a.dims, b.dims)
    rows = []
    for x in a.quiver.arrows:
        s, t = x.source, x.target
        ma, mb = a.matrices[x.id], b.matrices[x.id]
        for i in range(b.dims[t]):
            for j in range(a.dims[s]):
                row = field.Zeros(nvars)
                for k in range(a.dims[t]):
                    row[offsets[t] + i * a.dims[t] + k] += ma[k, j]
                for k in range(b.dims[s]):
                    row[offsets[s] + k * a.dims[s] + j] -= mb[i, k]
                rows.append(row)
    if nvars == 0:
        return field.Zeros((0, 0)), offsets
    if not rows:
        return field.Identity(nvars), offsets
    return field(np.vstack([np.asarray(r) for r in rows])).null_space(), offsets


def endomorphism_dimension(rep):
    basis, _ = hom_space(rep, rep)
    return basis.shape[0]


def is_brick(rep):
    return not rep.is_zero and endomorphism_dimension(rep) == 1


def _blocks(vector, offsets, source_dims, target_dims):
    for v, (s, t) in enumerate(zip(source_dims, target_dims)):
        yield vector[offsets[v]:offsets[v] + s * t].reshape((t, s))


def is_isomorphic(a, b):
    """Whether some homomorphism a -> b is invertible at every vertex, searched exhaustively."""
    if a.dims != b.dims:
        return False
    basis, offsets = hom_space(a, b)
    k = basis.shape[0]
    if a.is_zero:
        return True
    if a.q ** k > toolkit_setting('ISO_SEARCH_CAP'):
        raise SearchSpaceTooLarge(f"isomorphism search over {a.q}^{k} homomorphisms exceeds the cap")
    field = a.field
    for coefficients in itertools.product(range(a.q), repeat=k):
        if not any(coefficients):
            continue
        vector = (field([coefficients]) @ basis)[0]
        if all(
            block.shape[0] == 0 or np.linalg.det(block) != 0
            for block in _blocks(vector, offsets, a.dims, b.dims)
        ):
            return True
    return False


def nontrivial_idempotent(rep):
    """
    An endomorphism e with e o e = e other than 0 and the identity, as its blocks
    at the vertices of nonzero dimension, or None when the representation is
    indecomposable.
    """
    basis, offsets = hom_space(rep, rep)
    k = basis.shape[0]
    if rep.q ** k > toolkit_setting('ISO_SEARCH_CAP'):
        raise SearchSpaceTooLarge(f"idempotent search over {rep.q}^{k} endomorphisms exceeds the cap")
    field = rep.field
    for coefficients in itertools.product(range(rep.q), repeat=k):
        if not any(coefficients):
            continue
        vector = (field([coefficients]) @ basis)[0]
        blocks = [block for block in _blocks(vector, offsets, rep.dims, rep.dims) if block.shape[0]]
        if any(not np.array_equal(block @ block, block) for block in blocks):
            continue
        if all(np.array_equal(block, field.Identity(block.shape[0])) for block in blocks):
            continue
        return blocks
    return None


def pull_back_cycle_rep(quiver, cycle, holonomy, q):
    """
    The representation that is one-dimensional on the cycle's vertices, 1 on its
    arrows except ``holonomy`` on the first, and zero elsewhere.
    """
    cycle = validate_zigzag(quiver, cycle.arrows)
    report = is_qualifying(quiver, cycle)
    if not report.qualifies:
        raise NotQualifying(f"cycle {cycle.arrows} does not qualify: {report.reason.label}")
    if holonomy == 0:
        raise HolonomyZero("the holonomy must be a nonzero field element")
    if not 0 < holonomy < q:
        raise InvalidInput(f"holonomy {holonomy} is not an element of GF({q})")
    on_cycle = set(cycle.vertices)
    dims = [int(v in on_cycle) for v in range(len(quiver.vertices))]
    matrices = {a: [[1]] for a in cycle.arrows}
    matrices[cycle.arrows[0]] = [[holonomy]]
    return QuiverRep.from_lists(quiver, q, dims, matrices)


def holonomy_family(quiver, cycle, q):
    return [pull_back_cycle_rep(quiver, cycle, h, q) for h in range(1, q)]


def cycle_subquiver(quiver, cycle):
    """The cycle on its own, vertices and arrows renumbered in cycle order, without relations."""
    index = {v: i for i, v in enumerate(cycle.vertices)}
    triples = []
    for arrow_id in cycle.arrows:
        a = quiver.arrow(arrow_id)
        triples.append((index[a.source], index[a.target], a.label))
    return make_quiver([quiver.vertices[v] for v in cycle.vertices], triples)


def enumerate_bricks(quiver, dims, q):
    """
    Brick isoclasses at dimension vector ``dims`` over GF(q), by trying every matrix
    assignment in lexicographic order; each class is represented by its first member.
    """
    dims = tuple(int(d) for d in dims)
    if len(dims) != len(quiver.vertices):
        raise ShapeError(f"expected {len(quiver.vertices)} vertex dimensions, got {len(dims)}")
    entries = sum(dims[a.target] * dims[a.source] for a in quiver.arrows)
    if q ** entries > toolkit_setting('BRICK_SEARCH_CAP'):
        raise SearchSpaceTooLarge(f"brick search over {q}^{entries} assignments exceeds the cap")
    if not any(dims):
        return BrickCensus(0, ())

    representatives = []
    for values in itertools.product(range(q), repeat=entries):
        matrices, position = {}, 0
        for a in quiver.arrows:
            size = dims[a.target] * dims[a.source]
            flat = values[position:position + size]
            position += size
            matrices[a.id] = np.array(flat, dtype=np.int64).reshape((dims[a.target], dims[a.source])).tolist()
        rep = QuiverRep.from_lists(quiver, q, dims, matrices)
        if eval_relations(rep) is not None or not is_brick(rep):
            continue
        if not any(is_isomorphic(other, rep) for other in representatives):
            representatives.append(rep)
    logger.debug("dims %s over GF(%d): %d brick isoclasses", dims, q, len(representatives))
    return BrickCensus(len(representatives), tuple(representatives))
