"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import logging
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.ntheory import factorint
from pcollect.errors import DomainError, InvalidInputError, ParseError
from pcollect.group import KEY_ELEMENTS, KEY_TRANSVERSAL
from pcollect.group import perm
from pcollect.utility import DEFAULT_LIMITS, check_cap


logger = logging.getLogger(__name__)


class GroupHandle:
    def __init__(
        self,
        degree,
        generators,
        name=None,
        limits=None,
        root=None,
        elements=None
    ):
        # Initialize instance attributes.
        self._degree = degree
        self._generators = _clean_generators(degree, generators)
        self._name = name
        self._root = self if root is None else root
        self._limits = (
            self._root.get_limits()
            if root is not None
            else DEFAULT_LIMITS
            if limits is None
            else limits
        )
        self._elements = None if elements is None else frozenset(elements)
        self._order = None if elements is None else len(self._elements)
        self._group = None
        self._key = None
        self._memo = {}

    def __repr__(self):
        label = self._name if self._name is not None else perm.format_generators(
            self._generators
        )
        return '<{0} {1} order={2}>'.format(
            type(self).__name__,
            label or '()',
            self.get_order(),
        )

    def __eq__(self, other):
        if not isinstance(other, GroupHandle):
            return NotImplemented
        if self is other:
            return True
        return (
            self._root is other._root
            and self.get_order() == other.get_order()
            and self.get_key() == other.get_key()
        )

    def __hash__(self):
        return hash(self.get_key())

    def __contains__(self, element):
        return self.contains(element)

    def get_degree(self):
        return self._degree

    def get_generators(self):
        return self._generators

    def get_name(self):
        return self._name

    def describe(self):
        if self._name is not None:
            return self._name
        if not self._generators:
            return '1'
        return '<' + perm.format_generators(self._generators) + '>'

    def get_root(self):
        return self._root

    def get_ambient(self):
        return self._root

    def get_limits(self):
        return self._limits

    def get_sympy(self):
        if self._group is None:
            self._group = self.new_sympy()
        return self._group

    def new_sympy(self):
        # Uncached: sympy searches grow the generator lists of their inputs.
        return PermutationGroup(
            [Permutation(list(gen)) for gen in self._generators]
            or [Permutation(list(perm.identity(self._degree)))]
        )

    def get_order(self):
        if self._order is None:
            self._order = int(self.get_sympy().order())
        return self._order

    def get_elements(self, cap=None):
        if self._elements is None:
            check_cap(
                self.get_order(),
                self._limits.max_order if cap is None else cap,
                'max_order',
            )
            if self._generators:
                self._elements = frozenset(
                    tuple(element)
                    for element
                    in self.get_sympy().generate(af=True)
                )
            else:
                self._elements = frozenset((perm.identity(self._degree),))
        return self._elements

    def has_elements(self):
        return self._elements is not None

    def get_sorted_elements(self):
        return tuple(sorted(self.get_elements()))

    def get_identity(self):
        return perm.identity(self._degree)

    def get_key(self):
        if self._key is None:
            if self.get_order() <= self._limits.key_order_cap:
                self._key = KEY_ELEMENTS + perm.encode(
                    self.get_sorted_elements(),
                    self._degree,
                )
            else:
                self._key = KEY_TRANSVERSAL + perm.encode(
                    _canonical_transversal(self),
                    self._degree,
                )
        return self._key

    def get_sort_key(self):
        return (self.get_order(), self.get_key())

    def memo(self, name, factory):
        # Cached attributes are written once.
        if name not in self._memo:
            self._memo[name] = factory()
        return self._memo[name]

    def contains(self, element):
        if len(element) != self._degree:
            return False
        if self._elements is not None:
            return tuple(element) in self._elements
        if not self._generators:
            return perm.is_identity(element)
        return self.get_sympy().contains(Permutation(list(element)))

    def is_trivial(self):
        return self.get_order() == 1

    def is_subgroup_of(self, other):
        if self.get_order() > other.get_order():
            return False
        if other.get_order() % self.get_order() != 0:
            return False
        return all(other.contains(gen) for gen in self._generators)

    def is_normalized_by(self, element):
        return all(
            self.contains(perm.conjugate(gen, element))
            for gen
            in self._generators
        )

    def is_normal_in(self, other):
        return all(self.is_normalized_by(gen) for gen in other.get_generators())

    def is_p_group(self, p):
        order = self.get_order()
        return order == 1 or set(factorint(order)) == {p}

    def is_abelian(self):
        return all(
            perm.commutes(gen_a, gen_b)
            for index, gen_a in enumerate(self._generators)
            for gen_b in self._generators[index + 1:]
        )

    def is_elementary_abelian(self, p):
        return (
            self.is_p_group(p)
            and self.is_abelian()
            and all(perm.order(gen) == p for gen in self._generators)
        )

    def conjugate(self, element):
        return SubgroupHandle(
            self._root,
            tuple(perm.conjugate(gen, element) for gen in self._generators),
            elements=(
                None
                if self._elements is None
                else perm.conjugate_set(self._elements, element)
            ),
        )

    def as_subgroup(self):
        return SubgroupHandle(
            self._root,
            self._generators,
            elements=self._elements,
        )


class SubgroupHandle(GroupHandle):
    def __init__(self, ambient, generators, elements=None, name=None, check=False):
        root = ambient.get_root()
        super().__init__(
            root.get_degree(),
            generators,
            name=name,
            root=root,
            elements=elements,
        )
        if check:
            for gen in self._generators:
                if not ambient.contains(gen):
                    raise DomainError(
                        'generator {0} is not in the ambient group'.format(
                            perm.format_permutation(gen)
                        )
                    )

    @classmethod
    def from_elements(cls, ambient, elements, name=None):
        elements = frozenset(elements)
        return cls(
            ambient,
            _generators_of(elements),
            elements=elements,
            name=name,
        )


def build_group(degree, generators, name=None, limits=None):
    if degree < 1:
        raise InvalidInputError('degree must be positive, got {0}'.format(degree))
    perms = tuple(
        perm.parse_permutation(gen, degree) if isinstance(gen, str) else tuple(gen)
        for gen
        in generators
    )
    for gen in perms:
        if len(gen) != degree or sorted(gen) != list(range(degree)):
            raise ParseError(
                'not a permutation of 1..{0}: {1!r}'.format(degree, gen)
            )
    group = GroupHandle(degree, perms, name=name, limits=limits)
    check_cap(group.get_order(), group.get_limits().max_order, 'max_order')
    logger.info(
        'built group %s of degree %d and order %d',
        name or perm.format_generators(group.get_generators()),
        degree,
        group.get_order(),
    )
    return group


def make_subgroup(ambient, generators, check=False):
    return SubgroupHandle(ambient, tuple(generators), check=check)


def trivial_subgroup(ambient):
    root = ambient.get_root()
    return SubgroupHandle(
        root,
        (),
        elements=(perm.identity(root.get_degree()),),
    )


def join(group_a, group_b):
    return SubgroupHandle(
        group_a.get_root(),
        group_a.get_generators() + group_b.get_generators(),
    )


def _clean_generators(degree, generators):
    # Drop identities and repeats, keeping input order.
    unit = perm.identity(degree)
    seen = set()
    cleaned = []
    for gen in generators:
        gen = tuple(gen)
        if gen != unit and gen not in seen:
            seen.add(gen)
            cleaned.append(gen)
    return tuple(cleaned)


def _generators_of(elements):
    # Greedy generating set in sorted element order.
    ordered = sorted(elements)
    if not ordered:
        return ()
    degree = len(ordered[0])
    generated = frozenset((perm.identity(degree),))
    generators = []
    for element in ordered:
        if element not in generated:
            generators.append(element)
            generated = perm.closure(generators, degree)
            if len(generated) == len(elements):
                break
    return tuple(generators)


def _canonical_transversal(group):
    # Lex-least element of every coset of the point-stabilizer chain with base
    # 0, 1, ..., n-1. The resulting set depends only on the group.
    degree = group.get_degree()
    levels = []
    current = group.get_sympy()
    for point in range(degree):
        transversal = {
            beta: tuple(element.array_form)
            for beta, element
            in current.orbit_transversal(point, pairs=True)
        }
        current = current.stabilizer(point)
        levels.append(transversal)
        if current.is_trivial:
            break

    representatives = []
    for level, transversal in enumerate(levels):
        for beta in sorted(transversal):
            representative = transversal[beta]
            for next_level in range(level + 1, len(levels)):
                next_transversal = levels[next_level]
                gamma = min(
                    next_transversal,
                    key=lambda candidate: representative[candidate],
                )
                representative = perm.compose(
                    next_transversal[gamma],
                    representative,
                )
            representatives.append(representative)
    logger.debug(
        'transversal key for order %d uses %d coset representatives',
        group.get_order(),
        len(representatives),
    )
    return tuple(sorted(representatives))
