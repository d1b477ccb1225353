"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import logging
from pcollect import collection
from pcollect.collection import Collection, CollectionKind, Hypothesis
from pcollect.errors import DomainError, UsageError, VerificationError
from pcollect.group import perm
from pcollect.group import search
from pcollect.group.handle import SubgroupHandle, build_group
from pcollect.utility import check_cap


logger = logging.getLogger(__name__)

# Notes attached to a frakS collection.
NOTE_CENTRAL_CORE = 'O_C contains a p-central element'
NOTE_CHOICE = 'membership depends on the choice of Sylow subgroups'


class QuotientContext:
    def __init__(self, group, p, subgroup):
        # Initialize instance attributes.
        self._group = group
        self._p = p
        self._subgroup = subgroup
        self._centralizer = search.centralizer(group, subgroup)
        self._core = search.p_core(self._centralizer, p)
        self._cosets = None
        self._coset_of = None
        self._quotient = None

        self._build()

    def get_group(self):
        return self._group

    def get_prime(self):
        return self._p

    def get_subgroup(self):
        return self._subgroup

    def get_centralizer(self):
        return self._centralizer

    def get_core(self):
        return self._core

    def get_quotient(self):
        return self._quotient

    def get_index(self):
        return len(self._cosets)

    def image_of(self, element):
        # Right multiplication on the right cosets O_C.y.
        return tuple(
            self._coset_of[perm.compose(representative, element)]
            for representative
            in self._cosets
        )

    def image(self, subgroup):
        return SubgroupHandle(
            self._quotient,
            tuple(self.image_of(gen) for gen in subgroup.get_generators()),
        )

    def lift(self, element):
        return self._cosets[element[0]]

    def preimage(self, subgroup):
        core = self._core.get_elements()
        elements = set()
        for element in subgroup.get_elements():
            elements.update(perm.product_set(core, (self.lift(element),)))
        return SubgroupHandle(
            self._group,
            self._core.get_generators()
            + tuple(self.lift(gen) for gen in subgroup.get_generators()),
            elements=elements,
        )

    def check_correspondence(self, subgroup):
        # For O_C <= Q <= C: q^-1(q(Q)) = Q and
        # q^-1(O_p(N_Cbar(Qbar))) = O_p(N_C(Q)).
        image = self.image(subgroup)
        if self.preimage(image) != subgroup:
            return False
        upstairs = search.p_core(
            search.normalizer(self._centralizer, subgroup),
            self._p,
        )
        downstairs = search.p_core(
            search.normalizer(self._quotient, image),
            self._p,
        )
        return self.preimage(downstairs) == upstairs

    def _build(self):
        limits = self._group.get_limits()
        check_cap(
            self._centralizer.get_order() // self._core.get_order(),
            limits.max_quotient_degree,
            'max_quotient_degree',
        )

        # Right cosets of O_C, each named by its least element.
        core = self._core.get_elements()
        by_key = {}
        for element in self._centralizer.get_elements():
            if element in by_key:
                continue
            coset = perm.product_set(core, (element,))
            key = min(coset)
            for member in coset:
                by_key[member] = key
        keys = sorted(set(by_key.values()))
        position = {key: index for index, key in enumerate(keys)}
        self._cosets = tuple(keys)
        self._coset_of = {
            element: position[key]
            for element, key
            in by_key.items()
        }

        gens = self._centralizer.get_generators()
        self._quotient = build_group(
            len(keys),
            tuple(self.image_of(gen) for gen in gens),
            name='C/O_C',
            limits=limits,
        )

        # q is a homomorphism and its kernel is O_C.
        for gen_a in gens:
            for gen_b in gens:
                if self.image_of(perm.compose(gen_a, gen_b)) != perm.compose(
                    self.image_of(gen_a),
                    self.image_of(gen_b),
                ):
                    raise VerificationError('coset action is not a homomorphism')
        expected = self._centralizer.get_order() // self._core.get_order()
        if self._quotient.get_order() != expected:
            raise VerificationError(
                'quotient has order {0}, expected {1}'.format(
                    self._quotient.get_order(),
                    expected,
                )
            )
        logger.info(
            'C has order %d, O_C order %d, quotient acts on %d cosets',
            self._centralizer.get_order(),
            self._core.get_order(),
            len(keys),
        )


def quotient_context(group, p, subgroup):
    return group.memo(
        ('quotient', p, subgroup.get_key()),
        lambda: QuotientContext(group, p, subgroup),
    )


def sylow_subgroups(group, p):
    return group.memo(
        ('sylows', p),
        lambda: search.subgroup_orbit(group, search.sylow_p(group, p)),
    )


def frak_hypotheses(group, p, context):
    # Standing assumptions on G and C = C_G(T); recorded, not enforced.
    centralizer = context.get_centralizer()
    quotient_group = context.get_quotient()
    return (
        Hypothesis(
            'G has parabolic characteristic p',
            collection.characteristic_classification(group, p).parabolic,
            '|G| = {0}'.format(group.get_order()),
        ),
        Hypothesis(
            'C does not have characteristic p',
            not collection.has_characteristic_p(centralizer, p),
            '|C| = {0}, |O_C| = {1}'.format(
                centralizer.get_order(),
                context.get_core().get_order(),
            ),
        ),
        Hypothesis(
            'C/O_C has parabolic characteristic p',
            collection.characteristic_classification(quotient_group, p).parabolic,
            '|C/O_C| = {0}'.format(quotient_group.get_order()),
        ),
    )


def build_frakS(group, p, subgroup):
    if subgroup.get_order() != p or not subgroup.is_subgroup_of(group):
        raise DomainError(
            'T must be a subgroup of order {0} of {1}'.format(p, group.describe())
        )
    central = collection.p_central_data(group, p)
    for gen in subgroup.get_generators():
        if central.contains(gen):
            raise UsageError(
                '{0} is p-central; use the P3.10 verifier instead'.format(
                    perm.format_permutation(gen)
                )
            )
    context = quotient_context(group, p, subgroup)
    hypotheses = frak_hypotheses(group, p, context)
    centralizer = context.get_centralizer()
    core = context.get_core()
    if central.meets(core):
        logger.info('frakS is empty: O_C contains a p-central element')
        return _frak(group, p, (), (NOTE_CENTRAL_CORE,), hypotheses)

    distinguished = collection.build_collection(group, p, CollectionKind.HAT_S)
    candidates = tuple(
        member
        for member
        in distinguished.members
        if member.get_order() > core.get_order()
        and core.is_subgroup_of(member)
        and member.is_subgroup_of(centralizer)
    )

    # Evaluate the existential over all pairs S_T <= S.
    local_sylows = search.subgroup_orbit(centralizer, search.sylow_p(centralizer, p))
    global_sylows = sylow_subgroups(group, p)
    members = []
    notes = []
    for candidate in candidates:
        centre = search.center(candidate)
        verdicts = set()
        for local in local_sylows:
            if not candidate.is_subgroup_of(local):
                continue
            for sylow in global_sylows:
                if not local.is_subgroup_of(sylow):
                    continue
                meet = search.intersection(centre, search.center(sylow))
                verdicts.add(not meet.is_trivial())
        if True in verdicts:
            members.append(candidate)
        if len(verdicts) > 1 and NOTE_CHOICE not in notes:
            notes.append(NOTE_CHOICE)
    logger.info('frakS: %d of %d candidates', len(members), len(candidates))
    return _frak(group, p, tuple(members), tuple(notes), hypotheses)


def _frak(group, p, members, notes, hypotheses):
    members = tuple(sorted(members, key=lambda h: h.get_sort_key()))
    return Collection(
        group=group,
        p=p,
        kind=CollectionKind.FRAK_S,
        representatives=members,
        members=members,
        flags=tuple(
            collection.class_flags(group, p, member)
            for member
            in members
        ),
        notes=notes,
        hypotheses=hypotheses,
    )
