"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import logging
from dataclasses import dataclass, field
from pcollect import collection
from pcollect.errors import DomainError, VerificationError
from pcollect.group import perm
from pcollect.group import search
from pcollect.group.handle import SubgroupHandle, trivial_subgroup
from pcollect.topology import ACYCLIC, CERTIFIED, NON_ACYCLIC
from pcollect.topology import homology as hom
from pcollect.topology import poset as posets
from pcollect.utility import check_cap


logger = logging.getLogger(__name__)


class ClassFunction:
    def __init__(self, table, values):
        # Initialize instance attributes.
        if len(values) != len(table):
            raise DomainError('class function needs one value per class')
        self._table = table
        self._values = tuple(int(value) for value in values)

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self._table is other._table and self._values == other._values

    def __hash__(self):
        return hash(self._values)

    def __repr__(self):
        return 'ClassFunction{0}'.format(self._values)

    def __add__(self, other):
        self._check_same(other)
        return ClassFunction(
            self._table,
            tuple(a + b for a, b in zip(self._values, other._values)),
        )

    def __sub__(self, other):
        self._check_same(other)
        return ClassFunction(
            self._table,
            tuple(a - b for a, b in zip(self._values, other._values)),
        )

    def __neg__(self):
        return ClassFunction(self._table, tuple(-value for value in self._values))

    def __mul__(self, scalar):
        return ClassFunction(
            self._table,
            tuple(scalar * value for value in self._values),
        )

    __rmul__ = __mul__

    @classmethod
    def constant(cls, table, value):
        return cls(table, tuple(value for index in range(len(table))))

    def get_table(self):
        return self._table

    def get_values(self):
        return self._values

    def value_at(self, element):
        return self._values[self._table.class_of(element)]

    def is_zero(self):
        return not any(self._values)

    def rows(self):
        return tuple(
            (index, label, value)
            for index, (label, value)
            in enumerate(zip(self._table.get_labels(), self._values))
        )

    def _check_same(self, other):
        if self._table is not other._table:
            raise DomainError('class functions of different groups')


@dataclass
class CrossValidation:
    equal: bool
    fixed_point: object
    induced: object


@dataclass
class SingularReport:
    p: int
    nonzero_classes: tuple
    identity_value: int

    @property
    def consistent_with_projective(self):
        return not self.nonzero_classes

    @property
    def nonprojective(self):
        return bool(self.nonzero_classes)


@dataclass
class VertexScreenEntry:
    subgroup: object
    profile: object
    verdict: str
    mod_p_acyclic: bool
    excluded: bool

    def statement(self):
        if self.excluded:
            return 'excluded: fixed set is {0}'.format(
                self.verdict if self.verdict != NON_ACYCLIC else 'mod-p acyclic'
            )
        return 'candidate: fixed set has ' + ', '.join(self.profile.lines())


@dataclass
class VertexScreenReport:
    p: int
    entries: tuple = field(default_factory=tuple)

    def candidates(self):
        return tuple(entry for entry in self.entries if not entry.excluded)


def fixed_point_verdict(fixed, profile):
    # Three-valued: certified by a cone point or a collapse, else by homology.
    if fixed.cone_points():
        return CERTIFIED
    complex_ = posets.order_complex(fixed)
    if not complex_.is_empty() and hom.collapse(complex_).collapsed_to_point:
        if not profile.is_acyclic():
            raise VerificationError('collapsible complex with nonzero homology')
        return CERTIFIED
    if profile.is_acyclic():
        return ACYCLIC
    return NON_ACYCLIC


def lefschetz_fixed_point(group, poset):
    table = search.conjugacy_classes(group)
    values = []
    for representative in table.get_representatives():
        cyclic = SubgroupHandle(group, (representative,))
        fixed = posets.fixed_subposet(poset, cyclic, acting=trivial_subgroup(group))
        values.append(hom.reduced_euler(posets.order_complex(fixed)))
    return ClassFunction(table, values)


def lefschetz_induced(group, poset):
    table = search.conjugacy_classes(group)
    limits = group.get_limits()
    complex_ = posets.order_complex(poset)
    actions = tuple(poset.act(gen) for gen in group.get_generators())
    for action in actions:
        if None in action:
            raise DomainError('poset is not closed under the group')

    total = ClassFunction.constant(table, -1)
    seen = set()
    for simplex in complex_.get_simplices():
        if simplex in seen:
            continue

        # Orbit of the chain under the generators.
        orbit = {simplex}
        frontier = [simplex]
        while frontier:
            next_frontier = []
            for chain in frontier:
                for action in actions:
                    image = tuple(sorted(action[index] for index in chain))
                    if image not in orbit:
                        orbit.add(image)
                        next_frontier.append(image)
            frontier = next_frontier
        seen.update(orbit)

        # A chain is stabilized only by elements fixing each of its members.
        stabilizer = group
        for index in simplex:
            stabilizer = search.normalizing_subgroup(
                stabilizer,
                poset.get_element(index),
            )
        if len(orbit) * stabilizer.get_order() != group.get_order():
            raise VerificationError(
                'orbit of size {0} with stabilizer of order {1}'.format(
                    len(orbit),
                    stabilizer.get_order(),
                )
            )
        sign = -1 if (len(simplex) - 1) % 2 else 1
        total = total + sign * permutation_character(group, stabilizer, table, limits)
    return total


def permutation_character(group, subgroup, table, limits):
    # Fixed right cosets Ht of g: t g t^-1 in H.
    transversal = right_transversal(group, subgroup, limits)
    values = []
    for representative in table.get_representatives():
        values.append(
            sum(
                1
                for coset
                in transversal
                if subgroup.contains(
                    perm.compose(
                        perm.compose(coset, representative),
                        perm.inverse(coset),
                    )
                )
            )
        )
    return ClassFunction(table, values)


def right_transversal(group, subgroup, limits):
    # Cosets Ht reached from H by right multiplication, named by least element.
    index = group.get_order() // subgroup.get_order()
    check_cap(index, limits.max_cosets, 'max_cosets')
    elements = subgroup.get_elements()
    unit = group.get_identity()
    found = {min(elements): unit}
    frontier = [unit]
    while frontier:
        next_frontier = []
        for current in frontier:
            for gen in group.get_generators():
                moved = perm.compose(current, gen)
                key = min(perm.compose(element, moved) for element in elements)
                if key not in found:
                    found[key] = moved
                    next_frontier.append(moved)
        frontier = next_frontier
    if len(found) != index:
        raise VerificationError(
            'found {0} cosets, expected {1}'.format(len(found), index)
        )
    return tuple(found[key] for key in sorted(found))


def cross_validate(group, poset):
    fixed_point = lefschetz_fixed_point(group, poset)
    induced = lefschetz_induced(group, poset)
    for index, label, value in fixed_point.rows():
        other = induced.get_values()[index]
        if value != other:
            raise VerificationError(
                'Lefschetz routes differ at class {0}: {1} != {2}'.format(
                    label,
                    value,
                    other,
                )
            )
    logger.info('Lefschetz routes agree: %s', fixed_point.get_values())
    return CrossValidation(True, fixed_point, induced)


def p_singular_vanishing(class_function, p):
    table = class_function.get_table()
    orders = table.get_orders()
    labels = table.get_labels()
    nonzero = tuple(
        (index, labels[index], value)
        for index, value
        in enumerate(class_function.get_values())
        if orders[index] % p == 0 and value != 0
    )
    return SingularReport(p, nonzero, class_function.get_values()[0])


def vertex_screen(group, p, poset):
    limits = group.get_limits()
    entries = []
    for representative in collection.enumerate_p_subgroups(group, p):
        fixed = posets.fixed_subposet(
            poset,
            representative,
            acting=trivial_subgroup(group),
        )
        profile = hom.homology(posets.order_complex(fixed), limits=limits)
        verdict = fixed_point_verdict(fixed, profile)
        mod_p = profile.is_acyclic_mod(p)
        entries.append(
            VertexScreenEntry(
                subgroup=representative,
                profile=profile,
                verdict=verdict,
                mod_p_acyclic=mod_p,
                excluded=mod_p,
            )
        )
    report = VertexScreenReport(p, tuple(entries))
    logger.info(
        'vertex screen: %d of %d classes survive',
        len(report.candidates()),
        len(entries),
    )
    return report
