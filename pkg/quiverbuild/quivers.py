"""
Gabriel quivers with relations for k[P x| H], P and H abelian.

Vertices are the characters of H. A layer label (e, j) names the j-th
eigencharacter chi_{ej} of the block of exponent e; the arrow with that label
starting at lambda ends at chi_{ej} (x) lambda.

Paths are stored in traversal order: the first arrow walked comes first. The
monomial alpha_L alpha_L' at lambda therefore reads (alpha_{L', lambda},
alpha_{L, chi_L' lambda}).
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from charfield.characters import all_characters
from charfield.eigen import eigencharacters
from charfield.fields import build_splitting_field
from core.exceptions import InvalidInput

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arrow:
    id: int
    source: int
    target: int
    label: tuple


@dataclass(frozen=True)
class Commutator:
    """alpha_L alpha_L' - alpha_L' alpha_L at a vertex, for labels L < L'."""
    id: int
    vertex: int
    labels: tuple
    left: tuple
    right: tuple

    def monomials(self, quiver):
        return (self.left, self.right)


@dataclass(frozen=True)
class PowerRelation:
    """alpha_L^length starting at a vertex; the path itself is walked on demand."""
    id: int
    vertex: int
    label: tuple
    length: int

    def path(self, quiver):
        return quiver.walk(self.vertex, self.label, self.length)

    def monomials(self, quiver):
        return (self.path(quiver),)


@dataclass(frozen=True)
class RelationSet:
    commutators: tuple = ()
    powers: tuple = ()

    def generators(self):
        return self.commutators + self.powers

    def get(self, gid):
        return self.generators()[gid]

    def __len__(self):
        return len(self.commutators) + len(self.powers)


@dataclass(frozen=True, eq=False)
class BoundQuiver:
    """
    A quiver, optionally with its relation set.

    ``relations`` is None for quivers read off a character table, where no
    presentation of the ideal is known.
    """
    vertices: tuple
    arrows: tuple
    relations: RelationSet = None
    label_characters: dict = field(default_factory=dict)
    p: int = None

    @property
    def quiver_only(self):
        return self.relations is None

    @cached_property
    def out_arrows(self):
        result = {v: [] for v in range(len(self.vertices))}
        for a in self.arrows:
            result[a.source].append(a)
        return result

    @cached_property
    def in_arrows(self):
        result = {v: [] for v in range(len(self.vertices))}
        for a in self.arrows:
            result[a.target].append(a)
        return result

    @cached_property
    def _by_label(self):
        return {(a.source, a.label): a for a in self.arrows}

    @cached_property
    def vertex_index(self):
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def labels(self):
        return tuple(sorted({a.label for a in self.arrows}))

    def arrow(self, arrow_id):
        if not 0 <= arrow_id < len(self.arrows):
            raise InvalidInput(f"unknown arrow id {arrow_id}")
        return self.arrows[arrow_id]

    def arrow_from(self, vertex, label):
        return self._by_label[(vertex, label)]

    def walk(self, vertex, label, length):
        """Arrow ids of ``alpha_label^length`` starting at ``vertex``."""
        path = []
        for _ in range(length):
            a = self.arrow_from(vertex, label)
            path.append(a.id)
            vertex = a.target
        return tuple(path)

    def same_shape(self, other):
        """Same vertex count and the same (source, target, label) arrows in id order."""
        if self is other:
            return True
        return (
            len(self.vertices) == len(other.vertices)
            and [(a.source, a.target, a.label) for a in self.arrows]
            == [(a.source, a.target, a.label) for a in other.arrows]
        )

    def to_networkx(self):
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(len(self.vertices)))
        for a in self.arrows:
            graph.add_edge(a.source, a.target, key=a.id, label=a.label)
        return graph


def _layer_labels(eigenchars, pgroup):
    """(e, j) labels for the canonical eigencharacter multiset, j counted from 1 per block."""
    counters = Counter()
    labels = {}
    for block, chi in eigenchars:
        e, _ = pgroup.blocks[block]
        counters[block] += 1
        labels[(e, counters[block])] = chi
    return labels


def make_quiver(vertices, arrows, relations=None, label_characters=None, p=None):
    """
    Quiver from ``(source, target, label)`` triples over vertex indices;
    ids follow the order given.
    """
    return BoundQuiver(
        vertices=tuple(vertices),
        arrows=tuple(Arrow(i, s, t, tuple(label)) for i, (s, t, label) in enumerate(arrows)),
        relations=relations,
        label_characters=dict(label_characters or {}),
        p=p,
    )


def build_bound_quiver(eigenchars, hgroup, pgroup):
    """
    The bound quiver of k[P x| H]: one arrow per (vertex, label), commutators for
    every pair of distinct labels at every vertex, and alpha_{ej}^{p^e} at every vertex.
    """
    vertices = all_characters(hgroup)
    index = {v: i for i, v in enumerate(vertices)}
    label_characters = _layer_labels(eigenchars, pgroup)
    labels = sorted(label_characters)

    triples = [
        (index[v], index[label_characters[label] + v], label)
        for v in vertices for label in labels
    ]
    quiver = make_quiver(vertices, triples, label_characters=label_characters, p=pgroup.p)

    commutators = []
    for v in range(len(vertices)):
        for first, second in itertools.combinations(labels, 2):
            # alpha_first alpha_second: walk second, then first
            a = quiver.arrow_from(v, second)
            left = (a.id, quiver.arrow_from(a.target, first).id)
            b = quiver.arrow_from(v, first)
            right = (b.id, quiver.arrow_from(b.target, second).id)
            commutators.append(Commutator(len(commutators), v, (first, second), left, right))
    powers = [
        PowerRelation(len(commutators) + k, v, label, pgroup.p ** label[0])
        for k, (v, label) in enumerate(itertools.product(range(len(vertices)), labels))
    ]
    relations = RelationSet(tuple(commutators), tuple(powers))
    logger.debug(
        "bound quiver: %d vertices, %d arrows, %d relations",
        len(vertices), len(quiver.arrows), len(relations),
    )
    return BoundQuiver(
        vertices=quiver.vertices,
        arrows=quiver.arrows,
        relations=relations,
        label_characters=label_characters,
        p=pgroup.p,
    )


def path_normal_form_count(quiver, vertex):
    """
    Number of nonzero path classes from ``vertex``: exponent tuples (e_L) with
    0 <= e_L < p^e for every layer label L = (e, j) leaving the vertex.
    """
    if quiver.quiver_only:
        raise InvalidInput("path counts need the relations of a bound quiver")
    bounds = [range(quiver.p ** a.label[0]) for a in quiver.out_arrows[vertex]]
    return sum(1 for _ in itertools.product(*bounds))


def arrow_count_general(eigenchars, source, target):
    """Multiplicity of ``target`` in M (x) S_source for abelian H."""
    difference = target - source
    return sum(1 for _, chi in eigenchars if chi == difference)


def arrow_count_matrix(quiver):
    n = len(quiver.vertices)
    counts = [[0] * n for _ in range(n)]
    for a in quiver.arrows:
        counts[a.source][a.target] += 1
    return counts


def has_loops(quiver):
    return any(a.source == a.target for a in quiver.arrows)


def is_connected(quiver):
    if not quiver.vertices:
        return True
    return nx.is_weakly_connected(quiver.to_networkx())


def translate_quiver(quiver, mu):
    """
    The vertex and arrow permutations induced by lambda -> mu (x) lambda.

    Returns ``(vertex_map, arrow_map)`` as dicts of indices.
    """
    vertex_map = {
        i: quiver.vertex_index[mu + v] for i, v in enumerate(quiver.vertices)
    }
    arrow_map = {
        a.id: quiver.arrow_from(vertex_map[a.source], a.label).id for a in quiver.arrows
    }
    return vertex_map, arrow_map


def to_dot(quiver):
    """Graphviz source with vertices labelled by character tuples and arrows by layer labels."""
    lines = ['digraph quiver {', '\tgraph [rankdir=LR];']
    for i, v in enumerate(quiver.vertices):
        lines.append('\t"%d" [label="%s"];' % (i, v))
    for a in quiver.arrows:
        label = ','.join(str(x) for x in a.label)
        lines.append('\t"%d" -> "%d" [label="%s", id="a%d"];' % (a.source, a.target, label, a.id))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def presentation_quiver(pres):
    """Eigencharacters and bound quiver of a validated presentation, as given (not reduced)."""
    splitting = build_splitting_field(pres.p, pres.hgroup.exponent)
    chars = eigencharacters(pres, splitting)
    return chars, build_bound_quiver(chars, pres.hgroup, pres.pgroup)
