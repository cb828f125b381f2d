"""
Finite-dimensional representations of bound quivers over GF(q).

A representation assigns ``dims[v]`` to every vertex and a
``dims[target] x dims[source]`` matrix to every arrow. Paths are in traversal
order, so the matrix of a path a_1 ... a_k is M_{a_k} ... M_{a_1}.
"""
import logging
from dataclasses import dataclass
from functools import cached_property

import galois
import numpy as np

from abgroup.groups import prime_power
from core.exceptions import InvalidInput, ShapeError

logger = logging.getLogger(__name__)


def _compose(field, later, earlier):
    """``later @ earlier``; any empty dimension gives the zero matrix."""
    if 0 in (later.shape[0], earlier.shape[0], earlier.shape[1]):
        return field.Zeros((later.shape[0], earlier.shape[1]))
    return later @ earlier


@dataclass(frozen=True, eq=False)
class QuiverRep:
    quiver: object
    q: int
    dims: tuple
    matrices: tuple

    def __post_init__(self):
        n = len(self.quiver.vertices)
        if len(self.dims) != n:
            raise ShapeError(f"expected {n} vertex dimensions, got {len(self.dims)}")
        if any(d < 0 for d in self.dims):
            raise InvalidInput("vertex dimensions must be nonnegative")
        if len(self.matrices) != len(self.quiver.arrows):
            raise ShapeError(f"expected {len(self.quiver.arrows)} arrow matrices, got {len(self.matrices)}")
        for a, m in zip(self.quiver.arrows, self.matrices):
            expected = (self.dims[a.target], self.dims[a.source])
            if tuple(m.shape) != expected:
                raise ShapeError(f"arrow {a.id}: expected a {expected[0]}x{expected[1]} matrix, got {m.shape}")

    @cached_property
    def field(self):
        return galois.GF(self.q)

    @classmethod
    def from_lists(cls, quiver, q, dims, matrices=None):
        """
        ``matrices`` maps arrow ids to row lists of integer field elements;
        arrows left out carry the zero map.
        """
        prime_power(q)
        field = galois.GF(q)
        dims = tuple(int(d) for d in dims)
        if len(dims) != len(quiver.vertices):
            raise ShapeError(f"expected {len(quiver.vertices)} vertex dimensions, got {len(dims)}")
        matrices = matrices or {}
        unknown = set(matrices) - {a.id for a in quiver.arrows}
        if unknown:
            raise InvalidInput(f"unknown arrow ids {sorted(unknown)}")
        built = []
        for a in quiver.arrows:
            shape = (dims[a.target], dims[a.source])
            rows = matrices.get(a.id)
            if rows is None:
                built.append(field.Zeros(shape))
                continue
            values = np.array(rows, dtype=np.int64)
            if values.size != shape[0] * shape[1]:
                raise ShapeError(f"arrow {a.id}: expected a {shape[0]}x{shape[1]} matrix")
            if values.size and (values.min() < 0 or values.max() >= q):
                raise InvalidInput(f"arrow {a.id}: entries must lie in [0, {q})")
            built.append(field(values.reshape(shape)))
        return cls(quiver, q, dims, tuple(built))

    @classmethod
    def zero(cls, quiver, q, dims):
        return cls.from_lists(quiver, q, dims)

    @property
    def total_dimension(self):
        return sum(self.dims)

    @property
    def is_zero(self):
        return self.total_dimension == 0

    def matrix(self, arrow_id):
        return self.matrices[arrow_id]

    def path_matrix(self, path):
        first = self.quiver.arrow(path[0])
        result = self.field.Identity(self.dims[first.source])
        for arrow_id in path:
            result = _compose(self.field, self.matrices[arrow_id], result)
        return result

    def to_lists(self):
        return {a.id: self.matrices[a.id].tolist() for a in self.quiver.arrows}


def direct_sum(a, b):
    if not a.quiver.same_shape(b.quiver) or a.q != b.q:
        raise InvalidInput("direct sums need representations of one quiver over one field")
    field = a.field
    matrices = []
    for arrow in a.quiver.arrows:
        top, bottom = a.matrices[arrow.id], b.matrices[arrow.id]
        block = field.Zeros((top.shape[0] + bottom.shape[0], top.shape[1] + bottom.shape[1]))
        block[:top.shape[0], :top.shape[1]] = top
        block[top.shape[0]:, top.shape[1]:] = bottom
        matrices.append(block)
    return QuiverRep(a.quiver, a.q, tuple(x + y for x, y in zip(a.dims, b.dims)), tuple(matrices))


def eval_relations(rep, relations=None):
    """Id of the first relation generator the representation violates, or None."""
    relations = relations if relations is not None else rep.quiver.relations
    if relations is None:
        return None
    for c in relations.commutators:
        if np.any(rep.path_matrix(c.left) - rep.path_matrix(c.right)):
            logger.debug("commutator %d fails at vertex %d", c.id, c.vertex)
            return c.id
    for r in relations.powers:
        if np.any(rep.path_matrix(r.path(rep.quiver))):
            logger.debug("power relation %d fails at vertex %d", r.id, r.vertex)
            return r.id
    return None
