"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import logging
import random
from sympy import isprime
from sympy.combinatorics import Permutation
from sympy.ntheory import multiplicity
from pcollect.errors import DomainError, InvalidInputError, ResourceError, VerificationError
from pcollect.group import perm
from pcollect.group.handle import SubgroupHandle, trivial_subgroup
from pcollect.utility import check_cap


logger = logging.getLogger(__name__)

# Orders up to this bound are cross-checked against class sizes.
ORACLE_ORDER = 2000
# Random draws before falling back to enumeration.
RANDOM_ATTEMPTS = 64


class ConjugacyClassTable:
    def __init__(self, group, representatives, sizes, members):
        # Initialize instance attributes.
        self._group = group
        self._representatives = tuple(representatives)
        self._sizes = tuple(sizes)
        self._members = tuple(members)
        self._lookup = {
            element: index
            for index, class_members in enumerate(self._members)
            for element in class_members
        }

    def __len__(self):
        return len(self._representatives)

    def get_group(self):
        return self._group

    def get_representatives(self):
        return self._representatives

    def get_sizes(self):
        return self._sizes

    def get_centralizer_orders(self):
        order = self._group.get_order()
        return tuple(order // size for size in self._sizes)

    def get_members(self, index):
        return self._members[index]

    def get_orders(self):
        return tuple(perm.order(rep) for rep in self._representatives)

    def get_labels(self):
        return tuple(
            '{0} ({1})'.format(perm.cycle_label(rep), size)
            for rep, size
            in zip(self._representatives, self._sizes)
        )

    def class_of(self, element):
        try:
            return self._lookup[tuple(element)]
        except KeyError:
            raise DomainError(
                '{0} is not in the group'.format(perm.format_permutation(element))
            )


# Searches.

def centralizer(group, target):
    if isinstance(target, tuple):
        return _element_centralizer(group, target)
    if not target.is_subgroup_of(group):
        raise DomainError('{0!r} is not a subgroup of {1!r}'.format(target, group))
    gens = target.get_generators()
    return _search(
        group,
        lambda element: all(perm.commutes(element, gen) for gen in gens),
        lambda: group.new_sympy().centralizer(target.new_sympy()),
    )


def normalizer(group, subgroup):
    if not subgroup.is_subgroup_of(group):
        raise DomainError(
            '{0!r} is not a subgroup of {1!r}'.format(subgroup, group)
        )
    if subgroup.is_normal_in(group):
        return _as_subgroup(group)
    return _search(
        group,
        subgroup.is_normalized_by,
        init_subgroup=subgroup,
    )


def normalizing_subgroup(group, subgroup):
    # N_group(subgroup), where subgroup need not lie in group.
    if all(subgroup.is_normalized_by(gen) for gen in group.get_generators()):
        return _as_subgroup(group)
    return _search(group, subgroup.is_normalized_by)


def intersection(group_a, group_b):
    if group_a.get_root() is not group_b.get_root():
        raise DomainError('intersection of subgroups of different groups')
    if group_a.is_subgroup_of(group_b):
        return _as_subgroup(group_a)
    if group_b.is_subgroup_of(group_a):
        return _as_subgroup(group_b)
    small, large = sorted((group_a, group_b), key=lambda g: g.get_sort_key())
    return _search(small, large.contains)


def center(group):
    if group.is_abelian():
        return _as_subgroup(group)
    gens = group.get_generators()
    return _search(
        group,
        lambda element: all(perm.commutes(element, gen) for gen in gens),
        lambda: group.new_sympy().center(),
    )


def sylow_p(group, p, start=None):
    _check_prime(p)
    if start is None:
        return group.memo(('sylow', p), lambda: _grow_sylow(group, p, None))
    return _grow_sylow(group, p, start)


def p_core(group, p, start=None):
    # start, when given, is a normal p-subgroup of group.
    _check_prime(p)
    return group.memo(('p_core', p), lambda: _p_core(group, p, start))


def omega1_center(subgroup, p):
    if not subgroup.is_p_group(p):
        raise DomainError('{0!r} is not a {1}-group'.format(subgroup, p))
    centre = center(subgroup)
    unit = subgroup.get_identity()
    return SubgroupHandle.from_elements(
        subgroup,
        (
            element
            for element
            in centre.get_elements()
            if perm.power(element, p) == unit
        ),
    )


def conjugacy_classes(group):
    return group.memo('classes', lambda: _conjugacy_classes(group))


# Orbits under conjugation.

def conjugacy_orbit(group, element):
    found = group.new_sympy().conjugacy_class(Permutation(list(element)))
    return frozenset(tuple(member.array_form) for member in found)


def subgroup_orbit(group, subgroup, cap=None):
    limits = group.get_limits()
    cap = limits.max_poset_elements if cap is None else cap
    orbit = {subgroup.get_key(): subgroup}
    frontier = [subgroup]
    gens = group.get_generators()
    while frontier:
        next_frontier = []
        for current in frontier:
            for gen in gens:
                image = current.conjugate(gen)
                key = image.get_key()
                if key not in orbit:
                    orbit[key] = image
                    next_frontier.append(image)
                    check_cap(len(orbit), cap, 'max_poset_elements')
        frontier = next_frontier
    return tuple(sorted(orbit.values(), key=lambda h: h.get_sort_key()))


def p_part(order, p):
    return p ** multiplicity(p, order)


def is_p_element(element, p):
    order = perm.order(element)
    return order > 1 and p_part(order, p) == order


# Search kernels.

def _search(group, prop, sympy_route=None, init_subgroup=None):
    limits = group.get_limits()
    if group.get_order() <= limits.brute_force_order:
        return SubgroupHandle.from_elements(
            group,
            (element for element in group.get_elements() if prop(element)),
        )

    if sympy_route is not None:
        found = sympy_route()
    else:
        nodes = [0]

        def counted(element):
            nodes[0] += 1
            if nodes[0] > limits.search_budget:
                raise ResourceError('search_budget', limits.search_budget)
            return prop(tuple(element.array_form))

        found = group.new_sympy().subgroup_search(
            counted,
            init_subgroup=(
                None if init_subgroup is None else init_subgroup.new_sympy()
            ),
        )
        logger.debug(
            'subgroup search in order %d used %d nodes',
            group.get_order(),
            nodes[0],
        )
    return SubgroupHandle(
        group,
        tuple(tuple(gen.array_form) for gen in found.generators),
    )


def _element_centralizer(group, element):
    if not group.contains(element):
        raise DomainError(
            '{0} is not in {1!r}'.format(perm.format_permutation(element), group)
        )
    result = _search(
        group,
        lambda candidate: perm.commutes(candidate, element),
        lambda: group.new_sympy().centralizer(Permutation(list(element))),
    )
    if group.get_order() <= ORACLE_ORDER:
        class_size = len(conjugacy_orbit(group, element))
        if class_size * result.get_order() != group.get_order():
            raise VerificationError(
                'centralizer of {0} has order {1} but class size is {2}'.format(
                    perm.format_permutation(element),
                    result.get_order(),
                    class_size,
                )
            )
    return result


def _grow_sylow(group, p, start):
    target = p_part(group.get_order(), p)
    if target == 1:
        return trivial_subgroup(group)
    check_cap(target, group.get_limits().sylow_order_cap, 'sylow_order_cap')

    # Grow inside normalizers: a proper p-subgroup P is properly contained in
    # a p-subgroup of N(P).
    rng = random.Random(group.get_limits().seed)
    current = trivial_subgroup(group) if start is None else start
    while current.get_order() < target:
        local = normalizer(group, current)
        step = _p_step(local, current, p, rng)
        powers = tuple(perm.power(step, i) for i in range(p))
        current = SubgroupHandle(
            group,
            current.get_generators() + (step,),
            elements=perm.product_set(current.get_elements(), powers),
        )
        logger.debug('sylow %d-subgroup grown to order %d', p, current.get_order())
    return current


def _p_step(local, current, p, rng):
    # An element y of N(P) outside P with y^p in P.
    for candidate in _candidates(local, rng):
        step = _step_from(candidate, current, p)
        if step is not None:
            return step
    raise DomainError(
        'no {0}-element extends {1!r} inside {2!r}'.format(p, current, local)
    )


def _candidates(group, rng):
    if not group.get_generators():
        return
    transversals = group.get_sympy().basic_transversals
    for attempt in range(RANDOM_ATTEMPTS):
        element = group.get_identity()
        for transversal in transversals:
            choice = transversal[rng.choice(sorted(transversal))]
            element = perm.compose(element, tuple(choice.array_form))
        yield element
    for element in group.get_sorted_elements():
        yield element


def _step_from(element, subgroup, p):
    # Smallest m with element^m in subgroup.
    power = element
    exponent = 1
    while not subgroup.contains(power):
        power = perm.compose(power, element)
        exponent += 1
    if exponent % p != 0:
        return None
    return perm.power(element, exponent // p)


def _p_core(group, p, start):
    core = sylow_p(group, p, start)
    changed = True
    while changed and not core.is_trivial():
        changed = False
        for gen in group.get_generators():
            if core.is_normalized_by(gen):
                continue
            core = intersection(core, core.conjugate(gen))
            changed = True
    logger.debug('O_%d of order %d is %d', p, group.get_order(), core.get_order())
    return core


def _conjugacy_classes(group):
    limits = group.get_limits()
    check_cap(group.get_order(), limits.max_order, 'max_order')
    if group.get_generators():
        found = group.get_sympy().conjugacy_classes()
    else:
        found = [{Permutation(list(group.get_identity()))}]
    check_cap(len(found), limits.max_classes, 'max_classes')

    classes = []
    for members in found:
        members = frozenset(tuple(member.array_form) for member in members)
        representative = min(members)
        classes.append(
            (
                (perm.cycle_type(representative), len(members), representative),
                members,
            )
        )
    classes.sort(key=lambda entry: entry[0])
    table = ConjugacyClassTable(
        group,
        tuple(entry[0][2] for entry in classes),
        tuple(entry[0][1] for entry in classes),
        tuple(entry[1] for entry in classes),
    )
    if sum(table.get_sizes()) != group.get_order():
        raise VerificationError('class sizes do not sum to the group order')
    logger.info('%d conjugacy classes in order %d', len(table), group.get_order())
    return table


def _as_subgroup(group):
    if isinstance(group, SubgroupHandle):
        return group
    return group.as_subgroup()


def _check_prime(p):
    if not isprime(p):
        raise InvalidInputError('{0} is not prime'.format(p))
