"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import logging
from dataclasses import dataclass, field
from enum import Enum
from sympy.ntheory import factorint
from pcollect.errors import DomainError, UsageError, VerificationError
from pcollect.group import perm
from pcollect.group import search
from pcollect.group.handle import SubgroupHandle, trivial_subgroup
from pcollect.utility import check_cap


logger = logging.getLogger(__name__)


class CollectionKind(Enum):
    S = 'S'
    A = 'A'
    B = 'B'
    CE = 'Ce'
    BCEN = 'Bcen'
    HAT_S = 'hatS'
    HAT_A = 'hatA'
    HAT_B = 'hatB'
    TILDE_S = 'tildeS'
    TILDE_B = 'tildeB'
    FRAK_S = 'frakS'

    @classmethod
    def parse(cls, text):
        for kind in cls:
            if kind.value == text:
                return kind
        raise UsageError(
            'unknown collection kind {0!r}; valid kinds: {1}'.format(
                text,
                ', '.join(kind.value for kind in cls),
            )
        )


class PCentralData:
    def __init__(self, group, p):
        # Initialize instance attributes.
        self._group = group
        self._p = p
        self._elements = None
        self._representatives = None

    def get_prime(self):
        return self._p

    def get_elements(self):
        if self._elements is None:
            sylow = search.sylow_p(self._group, self._p)
            bottom = search.omega1_center(sylow, self._p)
            found = set()
            representatives = []
            for element in bottom.get_sorted_elements():
                if perm.is_identity(element) or element in found:
                    continue
                orbit = search.conjugacy_orbit(self._group, element)
                found.update(orbit)
                representatives.append(min(orbit))
            self._elements = frozenset(found)
            self._representatives = tuple(sorted(representatives))
            logger.debug(
                '%d-central elements: %d in %d classes',
                self._p,
                len(self._elements),
                len(self._representatives),
            )
        return self._elements

    def get_representatives(self):
        self.get_elements()
        return self._representatives

    def contains(self, element):
        return tuple(element) in self.get_elements()

    def meets(self, subgroup):
        central = self.get_elements()
        return any(element in central for element in subgroup.get_elements())


@dataclass
class Hypothesis:
    name: str
    holds: bool
    witness: str = ''


@dataclass(frozen=True)
class ClassRecord:
    representative: object
    members: tuple


@dataclass
class Collection:
    group: object
    p: int
    kind: CollectionKind
    representatives: tuple
    members: tuple
    flags: tuple
    notes: tuple = ()
    hypotheses: tuple = ()

    def __len__(self):
        return len(self.representatives)

    def get_member_keys(self):
        return frozenset(member.get_key() for member in self.members)

    def contains(self, subgroup):
        return subgroup.get_key() in self.get_member_keys()

    def get_class_keys(self):
        return tuple(rep.get_key() for rep in self.representatives)


@dataclass
class CharacteristicClassification:
    local: bool
    parabolic: bool
    local_witnesses: tuple = field(default_factory=tuple)
    parabolic_witnesses: tuple = field(default_factory=tuple)


# Elements and single subgroups.

def p_central_data(group, p):
    return group.memo(('p_central', p), lambda: PCentralData(group, p))


def is_p_central(group, p, element):
    element = tuple(element)
    if not group.contains(element):
        raise DomainError(
            '{0} is not in the group'.format(perm.format_permutation(element))
        )
    if perm.order(element) != p:
        raise DomainError(
            '{0} does not have order {1}'.format(
                perm.format_permutation(element),
                p,
            )
        )
    index = group.get_order() // search.centralizer(group, element).get_order()
    return index % p != 0


def hat_subgroup(group, p, subgroup):
    _check_p_subgroup(subgroup, p)
    bottom = search.omega1_center(subgroup, p)
    central = p_central_data(group, p)
    chosen = tuple(
        element
        for element
        in bottom.get_sorted_elements()
        if central.contains(element)
    )
    if not chosen:
        return trivial_subgroup(group)
    return SubgroupHandle.from_elements(
        group,
        perm.closure(chosen, group.get_degree()),
    )


def is_distinguished(group, p, subgroup):
    return subgroup.memo(
        ('distinguished', p, group.get_key()),
        lambda: not hat_subgroup(group, p, subgroup).is_trivial(),
    )


def is_tilde(group, p, subgroup):
    return subgroup.memo(
        ('tilde', p, group.get_key()),
        lambda: p_central_data(group, p).meets(subgroup),
    )


def radical_closure(group, p, subgroup):
    _check_p_subgroup(subgroup, p)
    current = subgroup
    while True:
        local = search.normalizer(group, current)
        following = search.p_core(local, p, start=current)
        if following.get_order() == current.get_order():
            break
        current = following

    # The chain ends at a radical subgroup whose normalizer grows.
    closed = search.normalizer(group, current)
    if not search.normalizer(group, subgroup).is_subgroup_of(closed):
        raise VerificationError(
            'normalizer of {0!r} is not inside that of its closure'.format(
                subgroup
            )
        )
    if search.p_core(closed, p).get_order() != current.get_order():
        raise VerificationError('radical closure of {0!r} is not radical'.format(
            subgroup
        ))
    return current


def is_p_radical(group, subgroup, p=None):
    p = _prime_of(subgroup) if p is None else p
    _check_p_subgroup(subgroup, p)
    return subgroup.memo(
        ('radical', p, group.get_key()),
        lambda: (
            search.p_core(search.normalizer(group, subgroup), p).get_order()
            == subgroup.get_order()
        ),
    )


def is_p_centric(group, subgroup, p=None):
    p = _prime_of(subgroup) if p is None else p
    _check_p_subgroup(subgroup, p)

    def centric():
        index = (
            search.centralizer(group, subgroup).get_order()
            // search.center(subgroup).get_order()
        )
        return index % p != 0

    return subgroup.memo(('centric', p, group.get_key()), centric)


def has_characteristic_p(group, p):
    core = search.p_core(group, p)
    return search.centralizer(group, core).is_subgroup_of(core)


def characteristic_classification(group, p):
    return group.memo(
        ('classification', p),
        lambda: _classify(group, p),
    )


# Enumeration.

def enumerate_p_subgroups(group, p):
    return tuple(
        record.representative
        for record
        in subgroup_census(group, p)
    )


def subgroup_census(group, p):
    return group.memo(('census', p), lambda: _census(group, p))


def build_collection(group, p, kind):
    if kind is CollectionKind.FRAK_S:
        raise UsageError(
            'frakS depends on a subgroup T; build it with build_frakS'
        )
    records = tuple(
        record
        for record
        in subgroup_census(group, p)
        if _KIND_PREDICATES[kind](group, p, record.representative)
    )
    collection = Collection(
        group=group,
        p=p,
        kind=kind,
        representatives=tuple(record.representative for record in records),
        members=tuple(
            member
            for record
            in records
            for member
            in record.members
        ),
        flags=tuple(class_flags(group, p, record.representative) for record in records),
    )
    logger.info(
        '%s_%d: %d classes, %d subgroups',
        kind.value,
        p,
        len(collection.representatives),
        len(collection.members),
    )
    return collection


def class_flags(group, p, subgroup):
    return {
        'is_radical': is_p_radical(group, subgroup, p),
        'is_centric': is_p_centric(group, subgroup, p),
        'is_distinguished': is_distinguished(group, p, subgroup),
        'is_tilde': is_tilde(group, p, subgroup),
    }


def is_overgroup_closed(kind):
    return kind in (
        CollectionKind.S,
        CollectionKind.HAT_S,
        CollectionKind.TILDE_S,
    )


def _census(group, p):
    limits = group.get_limits()
    sylow = search.sylow_p(group, p)
    if sylow.is_trivial():
        return ()

    # Every subgroup of a p-group is reached from a smaller one by adjoining
    # an element of its normalizer whose p-th power lies in it.
    sylow_elements = sylow.get_sorted_elements()
    found = {}
    level = [trivial_subgroup(group)]
    while level:
        next_level = {}
        for current in level:
            covered = set(current.get_elements())
            for element in sylow_elements:
                if element in covered:
                    continue
                if not current.is_normalized_by(element):
                    continue
                if not current.contains(perm.power(element, p)):
                    continue
                powers = tuple(perm.power(element, i) for i in range(p))
                extended = SubgroupHandle(
                    group,
                    current.get_generators() + (element,),
                    elements=perm.product_set(current.get_elements(), powers),
                )
                covered.update(extended.get_elements())
                key = extended.get_key()
                if key not in found and key not in next_level:
                    next_level[key] = extended
        found.update(next_level)
        check_cap(len(found), limits.max_poset_elements, 'max_poset_elements')
        level = list(next_level.values())
    logger.debug('%d subgroups in a Sylow %d-subgroup', len(found), p)

    # Fuse under conjugation in the whole group.
    assigned = set()
    records = []
    for subgroup in sorted(found.values(), key=lambda h: h.get_sort_key()):
        if subgroup.get_key() in assigned:
            continue
        orbit = search.subgroup_orbit(group, subgroup)
        assigned.update(member.get_key() for member in orbit)
        records.append(ClassRecord(representative=orbit[0], members=orbit))
        check_cap(len(records), limits.max_classes, 'max_classes')
    records.sort(key=lambda record: record.representative.get_sort_key())
    logger.info(
        '%d classes of nontrivial %d-subgroups in order %d',
        len(records),
        p,
        group.get_order(),
    )
    return tuple(records)


def _classify(group, p):
    full = search.p_part(group.get_order(), p)
    local_witnesses = []
    parabolic_witnesses = []
    for representative in enumerate_p_subgroups(group, p):
        local = search.normalizer(group, representative)
        if has_characteristic_p(local, p):
            continue
        local_witnesses.append(representative)
        if local.get_order() % full == 0:
            parabolic_witnesses.append(representative)
    return CharacteristicClassification(
        local=not local_witnesses,
        parabolic=not parabolic_witnesses,
        local_witnesses=tuple(local_witnesses),
        parabolic_witnesses=tuple(parabolic_witnesses),
    )


def _prime_of(subgroup):
    primes = tuple(factorint(subgroup.get_order()))
    if len(primes) != 1:
        raise DomainError('{0!r} is not a nontrivial p-group'.format(subgroup))
    return primes[0]


def _check_p_subgroup(subgroup, p):
    if subgroup.is_trivial() or not subgroup.is_p_group(p):
        raise DomainError(
            '{0!r} is not a nontrivial {1}-group'.format(subgroup, p)
        )


def _radical(group, p, subgroup):
    return is_p_radical(group, subgroup, p)


def _centric(group, p, subgroup):
    return is_p_centric(group, subgroup, p)


def _elementary(group, p, subgroup):
    return subgroup.is_elementary_abelian(p)


_KIND_PREDICATES = {
    CollectionKind.S: lambda group, p, subgroup: True,
    CollectionKind.A: _elementary,
    CollectionKind.B: _radical,
    CollectionKind.CE: _centric,
    CollectionKind.BCEN: lambda group, p, subgroup: (
        _radical(group, p, subgroup) and _centric(group, p, subgroup)
    ),
    CollectionKind.HAT_S: is_distinguished,
    CollectionKind.HAT_A: lambda group, p, subgroup: (
        _elementary(group, p, subgroup)
        and is_distinguished(group, p, subgroup)
    ),
    CollectionKind.HAT_B: lambda group, p, subgroup: (
        _radical(group, p, subgroup) and is_distinguished(group, p, subgroup)
    ),
    CollectionKind.TILDE_S: is_tilde,
    CollectionKind.TILDE_B: lambda group, p, subgroup: (
        _radical(group, p, subgroup) and is_tilde(group, p, subgroup)
    ),
}
