"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import logging
from dataclasses import dataclass, field
from pcollect import collection
from pcollect import lefschetz
from pcollect.collection import CollectionKind, Hypothesis
from pcollect.errors import DomainError, ResourceError, UsageError
from pcollect.group import perm
from pcollect.group import search
from pcollect.group.handle import SubgroupHandle, trivial_subgroup
from pcollect.pipeline import (
    ERROR,
    FAIL,
    L3_3,
    L4_5,
    NOT_APPLICABLE,
    P2_4,
    P2_5,
    P3_1,
    P3_4,
    P3_5,
    P3_8,
    P3_9,
    P3_10,
    P4_3,
    P4_4,
    P4_6,
    P4_7,
    P4_8,
    P4_10,
    P4_11,
    PASS,
    STEP_CERTIFICATE,
    STEP_CHECK,
    STEP_EQUALITY,
    STEP_HOMOLOGY,
    STRENGTH_CERTIFICATES,
    STRENGTH_EULER,
    STRENGTH_HOMOLOGY,
    STRENGTH_NONE,
    T4_12,
    THEOREM_IDS,
)
from pcollect.topology import ACYCLIC, CERTIFIED, GE, LE
from pcollect.topology import certificate as cert
from pcollect.topology import homology as hom
from pcollect.topology import poset as posets
from pcollect.topology import quotient
from pcollect.utility import Stopwatch


logger = logging.getLogger(__name__)

# Artifacts kept per step.
MAX_ARTIFACTS = 25


@dataclass
class Step:
    name: str
    kind: str
    passed: bool
    detail: str = ''
    artifacts: tuple = ()


@dataclass
class VerificationReport:
    target: dict
    hypotheses: tuple
    steps: tuple
    verdict: str
    timing_ms: object = None
    config: dict = field(default_factory=dict)
    notes: tuple = ()

    def is_pass(self):
        return self.verdict == PASS

    def is_failure(self):
        return self.verdict == FAIL

    def to_dict(self):
        return {
            'target': dict(self.target),
            'hypotheses': [
                {
                    'name': hypothesis.name,
                    'holds': hypothesis.holds,
                    'witness': hypothesis.witness,
                }
                for hypothesis
                in self.hypotheses
            ],
            'steps': [
                {
                    'name': step.name,
                    'kind': step.kind,
                    'passed': step.passed,
                    'detail': step.detail,
                    'artifacts': list(step.artifacts),
                }
                for step
                in self.steps
            ],
            'verdict': self.verdict,
            'notes': list(self.notes),
            'timing_ms': self.timing_ms,
            'config': dict(self.config),
        }

    def to_text(self):
        target = self.target
        lines = [
            '{0} for {1} at p={2}{3}'.format(
                target['theorem'],
                target['group'],
                target['prime'],
                '' if target.get('t') is None else ', T=<{0}>'.format(target['t']),
            ),
        ]
        for hypothesis in self.hypotheses:
            lines.append('  hypothesis {0}: {1}{2}'.format(
                hypothesis.name,
                'holds' if hypothesis.holds else 'fails',
                ' ({0})'.format(hypothesis.witness) if hypothesis.witness else '',
            ))
        for step in self.steps:
            lines.append('  [{0}] {1}: {2}'.format(
                'ok' if step.passed else 'FAIL',
                step.name,
                step.detail,
            ))
            for artifact in step.artifacts:
                lines.append('      ' + artifact)
        for note in self.notes:
            lines.append('  note: ' + note)
        lines.append('  verdict: ' + self.verdict)
        if self.timing_ms is not None:
            lines.append('  time: {0} ms'.format(self.timing_ms))
        return '\n'.join(lines)


class TheoremContext:
    def __init__(self, group, p, subgroup=None, name=None):
        # Initialize instance attributes.
        self._group = group
        self._p = p
        self._given = subgroup
        self._name = name if name is not None else group.describe()
        self._posets = {}
        self._profiles = {}
        self._resolved = False
        self._subgroup = None
        self._stage = None
        self._notes = []

        if subgroup is not None:
            if subgroup.get_order() != p or not subgroup.is_subgroup_of(group):
                raise DomainError(
                    'T must be a subgroup of order {0} of {1}'.format(
                        p,
                        self._name,
                    )
                )

    def get_group(self):
        return self._group

    def get_prime(self):
        return self._p

    def get_name(self):
        return self._name

    def get_given_subgroup(self):
        return self._given

    def get_stage(self):
        return self._stage

    def get_notes(self):
        return tuple(self._notes)

    def enter(self, stage):
        self._stage = stage
        logger.debug('stage %s', stage)

    def note(self, text):
        if text not in self._notes:
            self._notes.append(text)

    def get_limits(self):
        return self._group.get_limits()

    def get_central(self):
        return collection.p_central_data(self._group, self._p)

    def get_classification(self):
        return collection.characteristic_classification(self._group, self._p)

    def get_collection(self, kind):
        return collection.build_collection(self._group, self._p, kind)

    def get_poset(self, kind):
        if kind not in self._posets:
            self._posets[kind] = posets.build_poset(self.get_collection(kind))
        return self._posets[kind]

    def get_profile(self, poset):
        key = (id(poset.get_acting().get_root()), poset.get_keys())
        if key not in self._profiles:
            self._profiles[key] = hom.homology(
                posets.order_complex(poset),
                limits=self.get_limits(),
            )
        return self._profiles[key]

    def get_subgroup(self):
        # T as given, else the first class of noncentral elements of order p.
        if not self._resolved:
            self._resolved = True
            self._subgroup = (
                self._given
                if self._given is not None
                else _default_subgroup(self._group, self._p)
            )
            if self._given is None and self._subgroup is not None:
                self.note('T chosen as ' + self._subgroup.describe())
        return self._subgroup

    def get_resolved_subgroup(self):
        return self._subgroup if self._resolved else self._given

    def get_normalizer(self):
        return search.normalizer(self._group, self.get_subgroup())

    def get_centralizer(self):
        return search.centralizer(self._group, self.get_subgroup())

    def get_core(self):
        return search.p_core(self.get_centralizer(), self._p)

    def get_quotient(self):
        return quotient.quotient_context(self._group, self._p, self.get_subgroup())


# Hypothesis gates.

def _gate_divides(context):
    order = context.get_group().get_order()
    return Hypothesis(
        'p divides |G|',
        order % context.get_prime() == 0,
        '|G| = {0}'.format(order),
    )


def _gate_characteristic(context):
    group = context.get_group()
    core = search.p_core(group, context.get_prime())
    return Hypothesis(
        'G has characteristic p',
        collection.has_characteristic_p(group, context.get_prime()),
        '|O_p(G)| = {0}'.format(core.get_order()),
    )


def _gate_local(context):
    classification = context.get_classification()
    return Hypothesis(
        'G has local characteristic p',
        classification.local,
        _witnesses(classification.local_witnesses),
    )


def _gate_parabolic(context):
    classification = context.get_classification()
    return Hypothesis(
        'G has parabolic characteristic p',
        classification.parabolic,
        _witnesses(classification.parabolic_witnesses),
    )


def _gate_noncentral(context):
    subgroup = context.get_subgroup()
    if subgroup is None:
        return Hypothesis(
            'T has order p and is not p-central',
            False,
            'no noncentral element of order p',
        )
    central = context.get_central()
    holds = not any(central.contains(gen) for gen in subgroup.get_generators())
    return Hypothesis(
        'T has order p and is not p-central',
        holds,
        'T = ' + subgroup.describe(),
    )


def _gate_central_core(context):
    core = context.get_core()
    return Hypothesis(
        'O_C contains a p-central element',
        context.get_central().meets(core),
        'O_C = ' + core.describe(),
    )


def _gate_noncentral_core(context):
    core = context.get_core()
    return Hypothesis(
        'O_C contains no p-central element',
        not context.get_central().meets(core),
        'O_C = ' + core.describe(),
    )


def _gate_c_not_characteristic(context):
    centralizer = context.get_centralizer()
    return Hypothesis(
        'C does not have characteristic p',
        not collection.has_characteristic_p(centralizer, context.get_prime()),
        '|C| = {0}, |O_C| = {1}'.format(
            centralizer.get_order(),
            context.get_core().get_order(),
        ),
    )


def _gate_quotient_parabolic(context):
    quotient_group = context.get_quotient().get_quotient()
    classification = collection.characteristic_classification(
        quotient_group,
        context.get_prime(),
    )
    return Hypothesis(
        'C/O_C has parabolic characteristic p',
        classification.parabolic,
        '|C/O_C| = {0}'.format(quotient_group.get_order()),
    )


# Verifiers.

def steps_p2_4(context):
    group, p = context.get_group(), context.get_prime()
    classification = context.get_classification()
    steps = [
        Step(
            'G has local characteristic p',
            STEP_CHECK,
            classification.local,
            _witnesses(classification.local_witnesses) or 'all normalizers',
        ),
    ]
    representatives = collection.enumerate_p_subgroups(group, p)
    failures = []
    for representative in representatives:
        lower, problem = cert.subgroup_product(
            representative,
            search.centralizer(group, representative),
        )
        upper = search.normalizer(group, representative)
        for label, subgroup in (('P.C_G(P)', lower), ('N_G(P)', upper)):
            if subgroup is None or not collection.has_characteristic_p(subgroup, p):
                failures.append('{0} for P = {1}'.format(
                    label,
                    representative.describe(),
                ))
    steps.append(Step(
        'P.C_G(P) and N_G(P) have characteristic p',
        STEP_CHECK,
        not failures,
        '{0} classes checked'.format(len(representatives)),
        _artifacts(failures),
    ))
    return steps


def steps_p2_5(context):
    group, p = context.get_group(), context.get_prime()
    records = collection.subgroup_census(group, p)

    # Characteristic p of centralizers, recorded for every member.
    centralizer_char = {}
    mismatches = []
    for record in records:
        representative = record.representative
        by_centralizer = collection.has_characteristic_p(
            search.centralizer(group, representative),
            p,
        )
        by_normalizer = collection.has_characteristic_p(
            search.normalizer(group, representative),
            p,
        )
        if by_centralizer != by_normalizer:
            mismatches.append('P = {0}: C_G(P) {1}, N_G(P) {2}'.format(
                representative.describe(),
                by_centralizer,
                by_normalizer,
            ))
        for member in record.members:
            centralizer_char[member.get_key()] = by_centralizer
    steps = [
        Step(
            'C_G(P) has characteristic p iff N_G(P) does',
            STEP_CHECK,
            not mismatches,
            '{0} classes checked'.format(len(records)),
            _artifacts(mismatches),
        ),
    ]

    violations = []
    pairs = 0
    members = tuple(member for record in records for member in record.members)
    for record in records:
        representative = record.representative
        for member in members:
            if not member.is_subgroup_of(representative):
                continue
            pairs += 1
            if (
                centralizer_char[member.get_key()]
                and not centralizer_char[representative.get_key()]
            ):
                violations.append('Q = {0} <= P = {1}'.format(
                    member.describe(),
                    representative.describe(),
                ))
    steps.append(Step(
        'C_G(Q) of characteristic p passes to every P >= Q',
        STEP_CHECK,
        not violations,
        '{0} pairs checked'.format(pairs),
        _artifacts(violations),
    ))
    return steps


def steps_p3_1(context):
    return [
        _inclusion_step(
            'Ce is contained in hatS',
            context.get_collection(CollectionKind.CE).members,
            context.get_collection(CollectionKind.HAT_S).members,
        ),
        _inclusion_step(
            'Bcen is contained in hatB',
            context.get_collection(CollectionKind.BCEN).members,
            context.get_collection(CollectionKind.HAT_B).members,
        ),
    ]


def steps_l3_3(context):
    group, p = context.get_group(), context.get_prime()
    checked = 0
    failures = []
    for representative in context.get_collection(CollectionKind.HAT_S).representatives:
        local = search.normalizer(group, representative)
        if not collection.has_characteristic_p(local, p):
            continue
        checked += 1
        core = search.p_core(local, p)
        centric = collection.is_p_centric(group, core, p)
        distinguished = collection.is_distinguished(group, p, core)
        if not (centric and distinguished):
            failures.append('P = {0}: O_p(N_G(P)) = {1} centric {2}, distinguished {3}'.format(
                representative.describe(),
                core.describe(),
                centric,
                distinguished,
            ))
    if not checked:
        return []
    return [
        Step(
            'O_p(N_G(P)) is centric and distinguished',
            STEP_CHECK,
            not failures,
            '{0} classes with N_G(P) of characteristic p'.format(checked),
            _artifacts(failures),
        ),
    ]


def steps_p3_4(context):
    return [
        _equality_step(
            'Bcen = B',
            context.get_collection(CollectionKind.BCEN).members,
            context.get_collection(CollectionKind.B).members,
        ),
    ]


def steps_p3_5(context):
    group, p = context.get_group(), context.get_prime()
    tilde = context.get_collection(CollectionKind.TILDE_S)
    failures = tuple(
        'P = ' + representative.describe()
        for representative
        in tilde.representatives
        if not collection.has_characteristic_p(
            search.normalizer(group, representative),
            p,
        )
    )
    steps = [
        Step(
            'N_G(P) has characteristic p for P in tildeS',
            STEP_CHECK,
            not failures,
            '{0} classes checked'.format(len(tilde.representatives)),
            _artifacts(failures),
        ),
        _equality_step(
            'Bcen = hatB',
            context.get_collection(CollectionKind.BCEN).members,
            context.get_collection(CollectionKind.HAT_B).members,
        ),
        _equality_step(
            'hatB = tildeB',
            context.get_collection(CollectionKind.HAT_B).members,
            context.get_collection(CollectionKind.TILDE_B).members,
        ),
    ]

    # Radical subgroups outside hatB avoid the p-central elements.
    central = context.get_central()
    hat_b = context.get_collection(CollectionKind.HAT_B)
    outside = tuple(
        representative
        for representative
        in context.get_collection(CollectionKind.B).representatives
        if not hat_b.contains(representative)
    )
    offenders = tuple(
        'V = ' + representative.describe()
        for representative
        in outside
        if central.meets(representative)
    )
    steps.append(Step(
        'B outside hatB has no p-central element',
        STEP_CHECK,
        not offenders,
        '{0} classes in B outside hatB'.format(len(outside)),
        _artifacts(offenders),
    ))
    return steps


def steps_p3_8(context):
    group, p = context.get_group(), context.get_prime()
    hat_s = context.get_poset(CollectionKind.HAT_S)
    hat_a = context.get_poset(CollectionKind.HAT_A)
    hat_b = context.get_collection(CollectionKind.HAT_B)
    steps = []

    context.enter('P3.8 elementary abelian cones')
    for representative in context.get_collection(CollectionKind.HAT_S).representatives:
        local = search.normalizer(group, representative)
        hat = collection.hat_subgroup(group, p, representative)
        domain = posets.truncate(hat_a, less_equal=representative, acting=local)
        steps.append(_certificate_step(
            'hatA_{<=P} contractible for P = ' + representative.describe(),
            domain,
            (
                cert.identity_map(domain),
                cert.product_map(domain, hat),
                cert.constant_map(domain, hat),
            ),
            (LE, GE),
            local,
        ))

    context.enter('P3.8 non-radical links')
    for representative in context.get_collection(CollectionKind.HAT_S).representatives:
        if hat_b.contains(representative):
            continue
        local = search.normalizer(group, representative)
        core = search.p_core(local, p)
        domain = posets.truncate(hat_s, greater_than=representative, acting=local)
        steps.append(_certificate_step(
            'hatS_{>P} contractible for P = ' + representative.describe(),
            domain,
            _radical_zigzag(domain, representative, core),
            (GE, LE, GE),
            local,
        ))

    context.enter('P3.8 homology')
    hat_b_poset = context.get_poset(CollectionKind.HAT_B)
    steps.append(_homology_step(context, 'hatS and hatA nerves', hat_s, hat_a))
    steps.append(_homology_step(context, 'hatS and hatB nerves', hat_s, hat_b_poset))
    return steps


def steps_p3_9(context):
    group, p = context.get_group(), context.get_prime()
    hat_s = context.get_poset(CollectionKind.HAT_S)
    steps = []
    context.enter('P3.9 radical closures')
    for representative in context.get_collection(CollectionKind.TILDE_S).representatives:
        local = search.normalizer(group, representative)
        closure = collection.radical_closure(group, p, representative)
        domain = posets.truncate(hat_s, greater_equal=representative, acting=local)
        steps.append(_certificate_step(
            'hatS_{>=P} contractible for P = ' + representative.describe(),
            domain,
            _radical_zigzag(domain, representative, closure),
            (GE, LE, GE),
            local,
        ))
    context.enter('P3.9 homology')
    steps.append(_homology_step(
        context,
        'hatS and tildeS nerves',
        hat_s,
        context.get_poset(CollectionKind.TILDE_S),
    ))
    return steps


def steps_p3_10(context):
    group = context.get_group()
    parabolic = context.get_classification().parabolic
    steps = []
    for element in context.get_central().get_representatives():
        cyclic = SubgroupHandle(group, (element,))
        local = search.normalizer(group, cyclic)
        label = cyclic.describe()

        context.enter('P3.10 tildeS fixed points of ' + label)
        fixed = posets.fixed_subposet(
            context.get_poset(CollectionKind.TILDE_S),
            cyclic,
            acting=local,
        )
        steps.append(_certificate_step(
            'tildeS^Z contractible for Z = ' + label,
            fixed,
            (
                cert.identity_map(fixed),
                cert.product_map(fixed, cyclic),
                cert.constant_map(fixed, cyclic),
            ),
            (LE, GE),
            local,
        ))
        if not parabolic:
            continue

        # The distinguished variants follow under parabolic characteristic p.
        for kind in (CollectionKind.HAT_S, CollectionKind.HAT_A, CollectionKind.HAT_B):
            context.enter('P3.10 {0} fixed points of {1}'.format(kind.value, label))
            fixed = posets.fixed_subposet(context.get_poset(kind), cyclic, acting=local)
            verdict = cert.check_certificate(cert.ContractionCertificate(
                domain=fixed,
                maps=(
                    cert.identity_map(fixed),
                    cert.product_map(fixed, cyclic),
                    cert.constant_map(fixed, cyclic),
                ),
                relations=(LE, GE),
                acting=local,
            ))
            profile = context.get_profile(fixed)
            contractibility = (
                CERTIFIED
                if verdict.valid
                else lefschetz.fixed_point_verdict(fixed, profile)
            )
            steps.append(Step(
                '{0}^Z acyclic for Z = {1}'.format(kind.value, label),
                STEP_HOMOLOGY,
                contractibility in (CERTIFIED, ACYCLIC),
                '{0} elements, {1}, zig-zag {2}'.format(
                    len(fixed),
                    contractibility,
                    'valid' if verdict.valid else 'not applicable',
                ),
                () if profile.is_acyclic() else _artifacts(profile.lines()),
            ))
    if not parabolic:
        context.note('hat variants skipped: G lacks parabolic characteristic p')
    return steps


def hypotheses_p4_3(context):
    tilde_b = context.get_collection(CollectionKind.TILDE_B)
    hat_s = context.get_collection(CollectionKind.HAT_S)
    missing = tuple(
        representative.describe()
        for representative
        in tilde_b.representatives
        if not hat_s.contains(representative)
    )
    return Hypothesis(
        'tildeS meets B inside hatS',
        not missing,
        ', '.join(missing),
    )


def steps_p4_3(context):
    group, p = context.get_group(), context.get_prime()
    given = context.get_given_subgroup()
    bottom = trivial_subgroup(group) if given is None else given
    local = search.normalizer(group, bottom)
    outer = posets.truncate(
        context.get_poset(CollectionKind.TILDE_S),
        greater_than=bottom,
        acting=local,
    )
    inner = posets.truncate(
        context.get_poset(CollectionKind.HAT_S),
        greater_than=bottom,
        acting=local,
    )

    # One subgroup per class suffices when the whole group acts.
    if given is None:
        hat_s = context.get_collection(CollectionKind.HAT_S)
        candidates = tuple(
            representative
            for representative
            in context.get_collection(CollectionKind.TILDE_S).representatives
            if not hat_s.contains(representative)
        )
    else:
        candidates = tuple(
            element
            for element
            in outer.get_elements()
            if not inner.contains(element)
        )

    context.enter('P4.3 links outside hatS')
    results = []
    for candidate in candidates:
        acting = search.normalizing_subgroup(local, candidate)
        core = search.p_core(search.normalizer(group, candidate), p)
        domain = posets.truncate(outer, greater_than=candidate, acting=acting)
        results.append((candidate, _check(
            domain,
            _radical_zigzag(domain, candidate, core),
            (GE, LE, GE),
            acting,
        )))
    context.enter('P4.3 homology')
    return [
        _family_step('tildeS_{>P} contractible for P outside hatS', results),
        _homology_step(context, 'tildeS_{>Q} and hatS_{>Q}', outer, inner),
    ]


def steps_p4_4(context):
    subgroup = context.get_subgroup()
    local = context.get_normalizer()
    centralizer = context.get_centralizer()
    hat_s = context.get_poset(CollectionKind.HAT_S)
    tilde_s = context.get_poset(CollectionKind.TILDE_S)

    context.enter('P4.4 fixed points')
    hat_fixed = posets.fixed_subposet(hat_s, subgroup, acting=local)
    tilde_fixed = posets.fixed_subposet(tilde_s, subgroup, acting=local)
    tilde_ge = posets.truncate(tilde_s, greater_equal=subgroup, acting=local)
    tilde_gt = posets.truncate(tilde_s, greater_than=subgroup, acting=local)
    hat_gt = posets.truncate(hat_s, greater_than=subgroup, acting=local)
    hat_gt_n = posets.truncate(hat_gt, less_equal=local, acting=local)
    hat_gt_c = posets.truncate(hat_gt, less_equal=centralizer, acting=local)

    steps = [
        _homology_step(context, 'hatS^T and tildeS^T', hat_fixed, tilde_fixed),
        _inclusion_step(
            'tildeS_{>=T} is contained in tildeS^T',
            tilde_ge.get_elements(),
            tilde_fixed.get_elements(),
        ),
        _homology_step(context, 'tildeS_{>=T} and tildeS^T', tilde_ge, tilde_fixed),
        _equality_step(
            'tildeS_{>=T} = tildeS_{>T}',
            tilde_ge.get_elements(),
            tilde_gt.get_elements(),
        ),
        _homology_step(context, 'tildeS_{>T} and hatS_{>T}', tilde_gt, hat_gt),
    ]

    context.enter('P4.4 retraction onto N_G(T)')
    steps.append(_certificate_step(
        'hatS_{>T} retracts onto hatS_{>T}^{<=N_G(T)}',
        hat_gt,
        (cert.identity_map(hat_gt), cert.normalizer_map(hat_gt, subgroup)),
        (GE,),
        local,
        target=hat_gt_n,
    ))
    steps.append(_equality_step(
        'hatS_{>T}^{<=N_G(T)} = hatS_{>T}^{<=C}',
        hat_gt_n.get_elements(),
        hat_gt_c.get_elements(),
    ))
    steps.append(_homology_step(context, 'hatS^T and hatS_{>T}^{<=C}', hat_fixed, hat_gt_c))
    return steps


def steps_l4_5(context):
    core = context.get_core()
    in_tilde = not core.is_trivial() and context.get_central().meets(core)
    characteristic = collection.has_characteristic_p(
        context.get_centralizer(),
        context.get_prime(),
    )
    return [
        Step(
            'O_C in tildeS iff C has characteristic p',
            STEP_CHECK,
            in_tilde == characteristic,
            'O_C = {0} in tildeS: {1}; C has characteristic p: {2}'.format(
                core.describe(),
                in_tilde,
                characteristic,
            ),
        ),
    ]


def steps_p4_6(context):
    subgroup = context.get_subgroup()
    local = context.get_normalizer()
    core = context.get_core()
    context.enter('P4.6 cone on O_C')
    domain = posets.truncate(
        context.get_poset(CollectionKind.TILDE_S),
        greater_than=subgroup,
        less_equal=context.get_centralizer(),
        acting=local,
    )
    steps = [
        _certificate_step(
            'tildeS_{>T}^{<=C} contractible',
            domain,
            (
                cert.identity_map(domain),
                cert.product_map(domain, core),
                cert.constant_map(domain, core),
            ),
            (LE, GE),
            local,
        ),
    ]
    context.enter('P4.6 fixed points')
    for kind, label in (
        (CollectionKind.HAT_S, 'hatS^T'),
        (CollectionKind.HAT_B, 'Delta^T'),
    ):
        fixed = posets.fixed_subposet(context.get_poset(kind), subgroup, acting=local)
        steps.append(_contractible_step(context, label + ' contractible', fixed))
    return steps


def steps_p4_7(context):
    subgroup = context.get_subgroup()
    local = context.get_normalizer()
    centralizer = context.get_centralizer()
    core = context.get_core()
    tilde_s = context.get_poset(CollectionKind.TILDE_S)
    context.enter('P4.7 retraction above O_C')
    outer = posets.truncate(
        tilde_s,
        greater_than=subgroup,
        less_equal=centralizer,
        acting=local,
    )
    inner = posets.truncate(
        tilde_s,
        greater_than=core,
        less_equal=centralizer,
        acting=local,
    )
    steps = [
        _certificate_step(
            'tildeS_{>T}^{<=C} retracts onto tildeS_{>O_C}^{<=C}',
            outer,
            (cert.identity_map(outer), cert.product_map(outer, core)),
            (LE,),
            local,
            target=inner,
        ),
    ]

    # P -> P.O_C lands above O_C exactly when O_C avoids the p-central elements.
    lands = True
    for element in outer.get_elements():
        image, problem = cert.subgroup_product(element, core)
        if problem is not None or not inner.contains(image):
            lands = False
            break
    noncentral = not context.get_central().meets(core)
    steps.append(Step(
        'image lies above O_C iff O_C has no p-central element',
        STEP_CHECK,
        lands == noncentral,
        'image above O_C: {0}; O_C noncentral: {1}'.format(lands, noncentral),
    ))
    steps.append(_homology_step(
        context,
        'tildeS_{>T}^{<=C} and tildeS_{>O_C}^{<=C}',
        outer,
        inner,
    ))
    return steps


def steps_p4_8(context):
    group, p = context.get_group(), context.get_prime()
    local = context.get_normalizer()
    centralizer = context.get_centralizer()
    bottoms = [('T', context.get_subgroup())]
    if context.get_core() != context.get_subgroup():
        bottoms.append(('O_C', context.get_core()))

    steps = []
    for label, bottom in bottoms:
        context.enter('P4.8 above ' + label)
        inner = posets.truncate(
            context.get_poset(CollectionKind.HAT_S),
            greater_than=bottom,
            less_equal=centralizer,
            acting=local,
        )
        outer = posets.truncate(
            context.get_poset(CollectionKind.TILDE_S),
            greater_than=bottom,
            less_equal=centralizer,
            acting=local,
        )
        results = []
        for element in outer.get_elements():
            acting = search.normalizing_subgroup(local, element)
            closure = collection.radical_closure(group, p, element)
            centre = search.center(closure)
            top, problem = cert.subgroup_product(element, centre)
            if problem is not None:
                results.append((element, cert.CertificateVerdict(
                    False,
                    failures=((0, element.describe(), problem),),
                )))
                continue
            domain = posets.truncate(inner, greater_equal=element, acting=acting)
            results.append((element, _check(
                domain,
                (
                    cert.identity_map(domain),
                    cert.normalizer_map(domain, element),
                    cert.normalizer_product_map(domain, element, centre),
                    cert.constant_map(domain, top),
                ),
                (GE, LE, GE),
                acting,
            )))
        steps.append(_family_step(
            'hatS_{{>{0}}}^{{<=C}} above P contractible for P in tildeS_{{>{0}}}^{{<=C}}'.format(label),
            results,
        ))
        steps.append(_homology_step(
            context,
            'hatS_{{>{0}}}^{{<=C}} and tildeS_{{>{0}}}^{{<=C}}'.format(label),
            inner,
            outer,
        ))
    return steps


def steps_p4_10(context):
    p = context.get_prime()
    local = context.get_normalizer()
    centralizer = context.get_centralizer()
    core = context.get_core()

    context.enter('P4.10 frakS')
    frak = quotient.build_frakS(context.get_group(), p, context.get_subgroup())
    for note in frak.notes:
        context.note(note)
    frak_poset = posets.GPoset(frak.members, local)
    hat_c = posets.truncate(
        context.get_poset(CollectionKind.HAT_S),
        greater_than=core,
        less_equal=centralizer,
        acting=local,
    )
    defects = posets.action_defects(frak_poset)
    steps = [
        Step(
            'frakS is invariant under N_G(T)',
            STEP_CHECK,
            not defects,
            '{0} elements'.format(len(frak_poset)),
            _artifacts(
                'moved by {0}: {1}'.format(
                    perm.format_permutation(gen),
                    frak_poset.get_element(index).describe(),
                )
                for gen, index
                in defects
            ),
        ),
        _inclusion_step(
            'frakS is contained in hatS_{>O_C}^{<=C}',
            frak_poset.get_elements(),
            hat_c.get_elements(),
        ),
    ]

    context.enter('P4.10 links')
    results = []
    for element in hat_c.get_elements():
        results.append((element, _frak_link(context, frak_poset, element)))
    steps.append(_family_step('frakS_{>=Q} contractible for Q in hatS_{>O_C}^{<=C}', results))
    steps.append(_homology_step(context, 'frakS and hatS_{>O_C}^{<=C}', frak_poset, hat_c))
    return steps


def steps_p4_11(context):
    p = context.get_prime()
    local = context.get_normalizer()
    projection = context.get_quotient()
    quotient_group = projection.get_quotient()

    context.enter('P4.11 quotient collections')
    frak = quotient.build_frakS(context.get_group(), p, context.get_subgroup())
    for note in frak.notes:
        context.note(note)
    frak_poset = posets.GPoset(frak.members, local)
    hat_bar = collection.build_collection(quotient_group, p, CollectionKind.HAT_S)
    hat_bar_poset = posets.build_poset(hat_bar)

    images = {
        element.get_key(): projection.image(element)
        for element
        in frak_poset.get_elements()
    }
    outside = tuple(
        element.describe()
        for element
        in frak_poset.get_elements()
        if not hat_bar.contains(images[element.get_key()])
    )
    steps = [
        Step(
            'q maps frakS into hatS(C/O_C)',
            STEP_CHECK,
            not outside,
            '{0} elements mapped'.format(len(images)),
            _artifacts(outside),
        ),
    ]

    context.enter('P4.11 fibres')
    broken = []
    results = []
    for image in hat_bar.members:
        lifted = projection.preimage(image)
        if not projection.check_correspondence(lifted):
            broken.append('correspondence fails at ' + lifted.describe())
        above = frozenset(
            element.get_key()
            for element
            in frak_poset.get_elements()
            if image.is_subgroup_of(images[element.get_key()])
        )
        fibre = posets.truncate(frak_poset, greater_equal=lifted)
        if above != fibre.get_keys():
            broken.append('fibre over {0} is not frakS above {1}'.format(
                image.describe(),
                lifted.describe(),
            ))
        results.append((lifted, _frak_link(context, frak_poset, lifted)))
    steps.append(Step(
        'preimages correspond to overgroups of O_C',
        STEP_CHECK,
        not broken,
        '{0} subgroups of C/O_C lifted'.format(len(hat_bar.members)),
        _artifacts(broken),
    ))
    steps.append(_family_step('frakS_{>=Q} contractible over hatS(C/O_C)', results))
    steps.append(_homology_step(context, 'frakS and hatS(C/O_C)', frak_poset, hat_bar_poset))
    return steps


def steps_t4_12(context):
    subgroup = context.get_subgroup()
    local = context.get_normalizer()
    steps = []
    for theorem, builder in (
        (P4_4, steps_p4_4),
        (P4_7, steps_p4_7),
        (P4_8, steps_p4_8),
        (P4_10, steps_p4_10),
        (P4_11, steps_p4_11),
    ):
        for step in builder(context):
            step.name = '{0}: {1}'.format(theorem, step.name)
            steps.append(step)

    # Both ends computed independently.
    context.enter('T4.12 end to end')
    projection = context.get_quotient()
    hat_bar_poset = posets.build_poset(collection.build_collection(
        projection.get_quotient(),
        context.get_prime(),
        CollectionKind.HAT_S,
    ))
    hat_fixed = posets.fixed_subposet(
        context.get_poset(CollectionKind.HAT_S),
        subgroup,
        acting=local,
    )
    delta_fixed = posets.fixed_subposet(
        context.get_poset(CollectionKind.HAT_B),
        subgroup,
        acting=local,
    )
    ends = (
        _homology_step(context, 'hatS^T and hatS(C/O_C)', hat_fixed, hat_bar_poset),
        _homology_step(context, 'Delta^T and hatS(C/O_C)', delta_fixed, hat_bar_poset),
    )
    steps.extend(ends)
    euler = (
        context.get_profile(hat_fixed).euler,
        context.get_profile(hat_bar_poset).euler,
    )
    steps.append(Step(
        'reduced Euler characteristics of hatS^T and hatS(C/O_C)',
        STEP_EQUALITY,
        euler[0] == euler[1],
        '{0} and {1}'.format(*euler),
    ))

    if all(step.passed for step in steps):
        strength = STRENGTH_CERTIFICATES
    elif all(step.passed for step in ends):
        strength = STRENGTH_HOMOLOGY
    elif euler[0] == euler[1]:
        strength = STRENGTH_EULER
    else:
        strength = STRENGTH_NONE
    context.note('strength: ' + strength)
    return steps


# Registry: (hypothesis gates, step builder) per theorem id.
_SECTION_FOUR = (_gate_parabolic, _gate_noncentral)
VERIFIERS = {
    P2_4: ((_gate_characteristic,), steps_p2_4),
    P2_5: ((), steps_p2_5),
    P3_1: ((), steps_p3_1),
    L3_3: ((_gate_parabolic,), steps_l3_3),
    P3_4: ((_gate_local,), steps_p3_4),
    P3_5: ((_gate_parabolic,), steps_p3_5),
    P3_8: ((_gate_parabolic,), steps_p3_8),
    P3_9: ((_gate_parabolic,), steps_p3_9),
    P3_10: ((), steps_p3_10),
    P4_3: ((hypotheses_p4_3,), steps_p4_3),
    P4_4: (_SECTION_FOUR, steps_p4_4),
    L4_5: (_SECTION_FOUR, steps_l4_5),
    P4_6: (_SECTION_FOUR + (_gate_central_core,), steps_p4_6),
    P4_7: (_SECTION_FOUR + (_gate_c_not_characteristic,), steps_p4_7),
    P4_8: (_SECTION_FOUR, steps_p4_8),
    P4_10: (_SECTION_FOUR + (_gate_noncentral_core,), steps_p4_10),
    P4_11: (
        _SECTION_FOUR + (_gate_c_not_characteristic, _gate_quotient_parabolic),
        steps_p4_11,
    ),
    T4_12: (
        _SECTION_FOUR + (_gate_c_not_characteristic, _gate_quotient_parabolic),
        steps_t4_12,
    ),
}


def verify(theorem_id, group, p, subgroup=None, name=None, timings=False):
    if theorem_id not in VERIFIERS:
        raise UsageError('unknown theorem {0!r}; valid ids: {1}'.format(
            theorem_id,
            ', '.join(THEOREM_IDS),
        ))
    stopwatch = Stopwatch(timings)
    context = TheoremContext(group, p, subgroup, name)
    gates, builder = VERIFIERS[theorem_id]

    # Gates run in order; later gates assume the earlier ones hold.
    hypotheses = []
    steps = []
    try:
        for gate in (_gate_divides,) + gates:
            context.enter('{0} hypothesis {1}'.format(theorem_id, gate.__name__))
            hypothesis = gate(context)
            hypotheses.append(hypothesis)
            if not hypothesis.holds:
                break
        stopwatch.lap('hypotheses')
        if all(hypothesis.holds for hypothesis in hypotheses):
            context.enter(theorem_id)
            steps = builder(context)
            stopwatch.lap('steps')
    except ResourceError as error:
        raise error.in_stage(context.get_stage()) from error

    if not all(hypothesis.holds for hypothesis in hypotheses):
        verdict = NOT_APPLICABLE
    elif not steps:
        verdict = NOT_APPLICABLE
        context.note('no instances to check')
    elif all(step.passed for step in steps):
        verdict = PASS
    else:
        verdict = FAIL

    resolved = context.get_resolved_subgroup()
    report = VerificationReport(
        target={
            'group': context.get_name(),
            'prime': p,
            'theorem': theorem_id,
            't': (
                None
                if resolved is None
                else perm.format_generators(resolved.get_generators())
            ),
        },
        hypotheses=tuple(hypotheses),
        steps=tuple(steps),
        verdict=verdict,
        timing_ms=stopwatch.get_total_ms(),
        config=group.get_limits().as_dict(),
        notes=context.get_notes(),
    )
    logger.info('%s on %s at p=%d: %s', theorem_id, context.get_name(), p, verdict)
    return report


def error_report(group_name, p, theorem_id, message, limits, t=None):
    return VerificationReport(
        target={'group': group_name, 'prime': p, 'theorem': theorem_id, 't': t},
        hypotheses=(),
        steps=(),
        verdict=ERROR,
        config=limits.as_dict(),
        notes=(message,),
    )


# Step helpers.

def _default_subgroup(group, p):
    central = collection.p_central_data(group, p)
    for representative in search.conjugacy_classes(group).get_representatives():
        if perm.order(representative) == p and not central.contains(representative):
            return SubgroupHandle(group, (representative,))
    return None


def _radical_zigzag(domain, subgroup, top):
    # Q >= N_Q(P) <= N_Q(P).top >= top.
    return (
        cert.identity_map(domain),
        cert.normalizer_map(domain, subgroup),
        cert.normalizer_product_map(domain, subgroup, top),
        cert.constant_map(domain, top),
    )


def _frak_link(context, frak_poset, element):
    # P >= N_P(Q) <= N_P(Q).O_Q >= O_Q with O_Q = O_p(N_C(Q)).
    acting = search.normalizing_subgroup(context.get_normalizer(), element)
    top = search.p_core(
        search.normalizer(context.get_centralizer(), element),
        context.get_prime(),
    )
    domain = posets.truncate(frak_poset, greater_equal=element, acting=acting)
    return _check(
        domain,
        _radical_zigzag(domain, element, top),
        (GE, LE, GE),
        acting,
    )


def _check(domain, maps, relations, acting, target=None, label=''):
    return cert.check_certificate(cert.ContractionCertificate(
        domain=domain,
        maps=tuple(maps),
        relations=tuple(relations),
        acting=acting,
        target=target,
        label=label,
    ))


def _certificate_step(name, domain, maps, relations, acting, target=None):
    verdict = _check(domain, maps, relations, acting, target, name)
    return Step(
        name,
        STEP_CERTIFICATE,
        verdict.valid,
        '{0} on {1} elements'.format(
            ' | '.join(self_map.descriptor for self_map in maps),
            len(domain),
        ),
        _failure_artifacts(verdict),
    )


def _family_step(name, results):
    failed = tuple(
        (subgroup, verdict)
        for subgroup, verdict
        in results
        if not verdict.valid
    )
    artifacts = []
    for subgroup, verdict in failed:
        step, element, reason = verdict.failures[0]
        artifacts.append('P = {0}: step {1}, element {2}: {3}'.format(
            subgroup.describe(),
            step,
            element,
            reason,
        ))
    return Step(
        name,
        STEP_CERTIFICATE,
        not failed,
        '{0} of {1} certificates valid'.format(
            len(results) - len(failed),
            len(results),
        ),
        _artifacts(artifacts),
    )


def _contractible_step(context, name, poset):
    profile = context.get_profile(poset)
    verdict = lefschetz.fixed_point_verdict(poset, profile)
    return Step(
        name,
        STEP_HOMOLOGY,
        verdict in (CERTIFIED, ACYCLIC),
        '{0} elements, {1}'.format(len(poset), verdict),
        () if profile.is_acyclic() else _artifacts(profile.lines()),
    )


def _homology_step(context, name, left, right):
    left_profile = context.get_profile(left)
    right_profile = context.get_profile(right)
    return Step(
        name,
        STEP_HOMOLOGY,
        _signature(left_profile) == _signature(right_profile),
        '{0} ({1} elements) vs {2} ({3} elements)'.format(
            _describe_profile(left_profile),
            len(left),
            _describe_profile(right_profile),
            len(right),
        ),
    )


def _inclusion_step(name, smaller, larger):
    larger_keys = frozenset(element.get_key() for element in larger)
    missing = tuple(
        element.describe()
        for element
        in smaller
        if element.get_key() not in larger_keys
    )
    return Step(
        name,
        STEP_EQUALITY,
        not missing,
        '{0} of {1} contained'.format(len(smaller) - len(missing), len(smaller)),
        _artifacts('missing ' + label for label in missing),
    )


def _equality_step(name, left, right):
    left_keys = frozenset(element.get_key() for element in left)
    right_keys = frozenset(element.get_key() for element in right)
    only_left = tuple(
        element.describe()
        for element
        in left
        if element.get_key() not in right_keys
    )
    only_right = tuple(
        element.describe()
        for element
        in right
        if element.get_key() not in left_keys
    )
    return Step(
        name,
        STEP_EQUALITY,
        not only_left and not only_right,
        '{0} and {1} subgroups'.format(len(left_keys), len(right_keys)),
        _artifacts(
            tuple('only left: ' + label for label in only_left)
            + tuple('only right: ' + label for label in only_right)
        ),
    )


def _signature(profile):
    return tuple(
        (group.dimension, group.rank, group.torsion)
        for group
        in profile.groups
        if not group.is_zero()
    )


def _describe_profile(profile):
    lines = tuple(group.describe() for group in profile.groups if not group.is_zero())
    return 'acyclic' if not lines else '; '.join(lines)


def _failure_artifacts(verdict):
    return _artifacts(
        'step {0}, element {1}: {2}'.format(*failure)
        for failure
        in verdict.failures
    )


def _artifacts(lines):
    return tuple(lines)[:MAX_ARTIFACTS]


def _witnesses(subgroups):
    return ', '.join(subgroup.describe() for subgroup in subgroups)
