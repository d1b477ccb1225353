"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import itertools
import logging
import networkx as nx
from pcollect.group import search
from pcollect.group.handle import trivial_subgroup
from pcollect.topology import CONTRADICTORY
from pcollect.utility import check_cap


logger = logging.getLogger(__name__)


class GPoset:
    def __init__(self, elements, acting, flags=()):
        # Initialize instance attributes.
        unique = {element.get_key(): element for element in elements}
        self._elements = tuple(
            sorted(unique.values(), key=lambda h: h.get_sort_key())
        )
        self._index = {
            element.get_key(): index
            for index, element
            in enumerate(self._elements)
        }
        self._acting = acting
        self._flags = tuple(flags)
        self._graph = None
        self._actions = {}

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def get_elements(self):
        return self._elements

    def get_element(self, index):
        return self._elements[index]

    def get_acting(self):
        return self._acting

    def get_flags(self):
        return self._flags

    def is_empty(self):
        return not self._elements

    def index_of(self, subgroup):
        return self._index.get(subgroup.get_key())

    def contains(self, subgroup):
        return subgroup.get_key() in self._index

    def get_keys(self):
        return frozenset(self._index)

    def get_graph(self):
        # Edges i -> j for every strict inclusion E_i < E_j.
        if self._graph is None:
            graph = nx.DiGraph()
            graph.add_nodes_from(range(len(self._elements)))
            for i, j in itertools.combinations(range(len(self._elements)), 2):
                lower = self._elements[i]
                upper = self._elements[j]
                if (
                    lower.get_order() < upper.get_order()
                    and lower.is_subgroup_of(upper)
                ):
                    graph.add_edge(i, j)
            self._graph = graph
        return self._graph

    def get_relations(self):
        return tuple(sorted(self.get_graph().edges()))

    def less(self, i, j):
        return self.get_graph().has_edge(i, j)

    def less_equal(self, i, j):
        return i == j or self.less(i, j)

    def comparable(self, i, j):
        return self.less_equal(i, j) or self.less(j, i)

    def act(self, element):
        # Index permutation induced by conjugation, or None when not closed.
        if element not in self._actions:
            images = []
            for member in self._elements:
                images.append(self._index.get(member.conjugate(element).get_key()))
            self._actions[element] = tuple(images)
        return self._actions[element]

    def restrict(self, indices, acting=None, flags=()):
        return GPoset(
            (self._elements[index] for index in indices),
            self._acting if acting is None else acting,
            flags=flags,
        )

    def cone_points(self):
        graph = self.get_graph()
        size = len(self._elements)
        return tuple(
            index
            for index
            in range(size)
            if graph.in_degree(index) + graph.out_degree(index) == size - 1
        )


class SimplicialComplex:
    def __init__(self, vertices, simplices):
        # Initialize instance attributes.
        self._vertices = tuple(vertices)
        self._simplices = tuple(
            sorted(
                set(tuple(sorted(simplex)) for simplex in simplices),
                key=lambda simplex: (len(simplex), simplex),
            )
        )
        self._by_dimension = {}
        for simplex in self._simplices:
            self._by_dimension.setdefault(len(simplex) - 1, []).append(simplex)
        self._by_dimension = {
            dimension: tuple(simplices)
            for dimension, simplices
            in self._by_dimension.items()
        }

    @classmethod
    def from_facets(cls, vertices, facets):
        faces = set()
        for facet in facets:
            facet = tuple(sorted(facet))
            for size in range(1, len(facet) + 1):
                faces.update(itertools.combinations(facet, size))
        return cls(vertices, faces)

    def __len__(self):
        return len(self._simplices)

    def get_vertices(self):
        return self._vertices

    def get_simplices(self, dimension=None):
        if dimension is None:
            return self._simplices
        return self._by_dimension.get(dimension, ())

    def get_dimension(self):
        if not self._simplices:
            return -1
        return max(self._by_dimension)

    def get_f_vector(self):
        return tuple(
            len(self.get_simplices(dimension))
            for dimension
            in range(self.get_dimension() + 1)
        )

    def is_empty(self):
        return not self._simplices

    def is_face_closed(self):
        present = set(self._simplices)
        return all(
            face in present
            for simplex in self._simplices
            if len(simplex) > 1
            for face in itertools.combinations(simplex, len(simplex) - 1)
        )


def build_poset(collection, acting=None):
    acting = collection.group if acting is None else acting
    limits = acting.get_root().get_limits()
    check_cap(len(collection.members), limits.max_poset_elements, 'max_poset_elements')

    # Close the members under the acting group.
    closed = {member.get_key(): member for member in collection.members}
    frontier = list(closed.values())
    while frontier:
        next_frontier = []
        for member in frontier:
            for gen in acting.get_generators():
                image = member.conjugate(gen)
                key = image.get_key()
                if key not in closed:
                    closed[key] = image
                    next_frontier.append(image)
                    check_cap(
                        len(closed),
                        limits.max_poset_elements,
                        'max_poset_elements',
                    )
        frontier = next_frontier
    poset = GPoset(closed.values(), acting)
    logger.info(
        '%s poset: %d elements, %d comparabilities',
        collection.kind.value,
        len(poset),
        len(poset.get_relations()),
    )
    return poset


def fixed_subposet(poset, subgroup, acting=None):
    if acting is None:
        current = poset.get_acting()
        acting = (
            search.normalizer(current, subgroup)
            if subgroup.is_subgroup_of(current)
            else trivial_subgroup(current)
        )
    gens = subgroup.get_generators()
    indices = tuple(
        index
        for index, element
        in enumerate(poset.get_elements())
        if all(element.is_normalized_by(gen) for gen in gens)
    )
    return poset.restrict(indices, acting=acting)


def truncate(
    poset,
    greater_than=None,
    greater_equal=None,
    less_than=None,
    less_equal=None,
    acting=None
):
    lower = tuple(
        (bound, strict)
        for bound, strict
        in ((greater_than, True), (greater_equal, False))
        if bound is not None
    )
    upper = tuple(
        (bound, strict)
        for bound, strict
        in ((less_than, True), (less_equal, False))
        if bound is not None
    )

    # A lower bound above an upper bound leaves nothing.
    for low, low_strict in lower:
        for high, high_strict in upper:
            same = low.get_order() == high.get_order() and low == high
            if not low.is_subgroup_of(high) or (same and (low_strict or high_strict)):
                logger.debug('contradictory truncation bounds')
                return poset.restrict((), acting=acting, flags=(CONTRADICTORY,))

    indices = tuple(
        index
        for index, element
        in enumerate(poset.get_elements())
        if all(_above(element, low, strict) for low, strict in lower)
        and all(_above(high, element, strict) for high, strict in upper)
    )
    return poset.restrict(indices, acting=acting)


def order_complex(poset):
    limits = poset.get_acting().get_root().get_limits()
    comparability = poset.get_graph().to_undirected()
    chains = []
    for clique in nx.enumerate_all_cliques(comparability):
        chains.append(tuple(sorted(clique)))
        check_cap(len(chains), limits.max_simplices, 'max_simplices')
    return SimplicialComplex(poset.get_elements(), chains)


def action_defects(poset):
    # Pairs (generator, element index) where conjugation leaves the poset or
    # breaks comparability.
    defects = []
    relations = poset.get_relations()
    for gen in poset.get_acting().get_generators():
        images = poset.act(gen)
        for index, image in enumerate(images):
            if image is None:
                defects.append((gen, index))
        for i, j in relations:
            if images[i] is not None and images[j] is not None:
                if not poset.less(images[i], images[j]):
                    defects.append((gen, i))
    return tuple(defects)


def _above(element, bound, strict):
    if strict and element.get_order() == bound.get_order():
        return False
    return bound.is_subgroup_of(element)
