"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.

A zig-zag f_0 = id, f_1, ..., f_k of monotone self-maps of a poset in which
adjacent maps are pointwise comparable is a homotopy between the identity and
f_k on the nerve. When f_k is constant the nerve is contractible; when f_k
lands in a subposet Y and every map preserves Y, Y is a deformation retract.
"""


import logging
from dataclasses import dataclass, field
from pcollect.group import perm
from pcollect.group import search
from pcollect.group.handle import SubgroupHandle
from pcollect.topology import GE, LE


logger = logging.getLogger(__name__)

# Failures kept per verdict.
MAX_FAILURES = 25


@dataclass
class PosetSelfMap:
    descriptor: str
    images: tuple
    defects: tuple = ()

    def is_total(self):
        return all(image is not None for image in self.images)


@dataclass
class ContractionCertificate:
    domain: object
    maps: tuple
    relations: tuple
    acting: object = None
    target: object = None
    label: str = ''


@dataclass
class CertificateVerdict:
    valid: bool
    label: str = ''
    failures: tuple = field(default_factory=tuple)

    def describe(self):
        if self.valid:
            return '{0}: valid'.format(self.label)
        step, element, reason = self.failures[0]
        return '{0}: invalid at step {1}, element {2}: {3}'.format(
            self.label,
            step,
            element,
            reason,
        )


# Map constructors.

def function_map(domain, descriptor, function):
    images = []
    defects = []
    for index, element in enumerate(domain.get_elements()):
        image, problem = function(element)
        if problem is not None:
            images.append(None)
            defects.append((index, problem))
            continue
        position = domain.index_of(image)
        if position is None:
            defects.append((index, 'image outside the domain'))
        images.append(position)
    return PosetSelfMap(descriptor, tuple(images), tuple(defects))


def identity_map(domain):
    return PosetSelfMap('identity', tuple(range(len(domain))))


def constant_map(domain, value):
    return function_map(
        domain,
        'constant at {0}'.format(_label(value)),
        lambda element: (value, None),
    )


def normalizer_map(domain, subgroup):
    return function_map(
        domain,
        'Q -> N_Q({0})'.format(_label(subgroup)),
        lambda element: (search.normalizing_subgroup(element, subgroup), None),
    )


def product_map(domain, factor):
    return function_map(
        domain,
        'Q -> Q.{0}'.format(_label(factor)),
        lambda element: subgroup_product(element, factor),
    )


def normalizer_product_map(domain, subgroup, factor):
    def apply(element):
        return subgroup_product(
            search.normalizing_subgroup(element, subgroup),
            factor,
        )

    return function_map(
        domain,
        'Q -> N_Q({0}).{1}'.format(_label(subgroup), _label(factor)),
        apply,
    )


def subgroup_product(group_a, group_b):
    # Q.X is a subgroup exactly when Q.X = X.Q as sets.
    forward = perm.product_set(group_a.get_elements(), group_b.get_elements())
    backward = perm.product_set(group_b.get_elements(), group_a.get_elements())
    if forward != backward:
        return None, 'product {0}.{1} is not a subgroup'.format(
            _label(group_a),
            _label(group_b),
        )
    return SubgroupHandle.from_elements(group_a.get_root(), forward), None


# Checking.

def check_certificate(certificate):
    domain = certificate.domain
    maps = certificate.maps
    failures = []

    def fail(step, index, reason):
        if len(failures) < MAX_FAILURES:
            failures.append((step, _element_label(domain, index), reason))

    if len(certificate.relations) != len(maps) - 1:
        fail(0, None, 'need one relation per adjacent pair of maps')
    if not maps or maps[0].images != tuple(range(len(domain))):
        fail(0, None, 'zig-zag does not start at the identity')
    if certificate.target is None and domain.is_empty():
        fail(0, None, 'empty poset is not contractible')

    # Totality and well-definedness.
    for step, self_map in enumerate(maps):
        for index, reason in self_map.defects:
            fail(step, index, reason)
    if failures:
        return _verdict(certificate, failures)

    # Monotonicity.
    relations = domain.get_relations()
    for step, self_map in enumerate(maps):
        images = self_map.images
        for lower, upper in relations:
            if not domain.less_equal(images[lower], images[upper]):
                fail(step, lower, 'not monotone against {0}'.format(
                    _element_label(domain, upper)
                ))

    # Adjacent maps are pointwise comparable.
    for step, relation in enumerate(certificate.relations):
        before = maps[step].images
        after = maps[step + 1].images
        for index in range(len(domain)):
            if relation == LE:
                ok = domain.less_equal(before[index], after[index])
            elif relation == GE:
                ok = domain.less_equal(after[index], before[index])
            else:
                ok = False
            if not ok:
                fail(step + 1, index, 'adjacency {0} fails'.format(relation))

    # End of the zig-zag.
    final = maps[-1].images
    if certificate.target is None:
        if len(set(final)) > 1:
            fail(len(maps) - 1, None, 'final map is not constant')
    else:
        target = certificate.target.get_keys()
        keys = tuple(element.get_key() for element in domain.get_elements())
        for index, image in enumerate(final):
            if keys[image] not in target:
                fail(len(maps) - 1, index, 'final map leaves the target')
        for step, self_map in enumerate(maps):
            for index, image in enumerate(self_map.images):
                if keys[index] in target and keys[image] not in target:
                    fail(step, index, 'map does not preserve the target')

    # Equivariance under the acting group.
    if certificate.acting is not None:
        for gen in certificate.acting.get_generators():
            action = domain.act(gen)
            for index, image in enumerate(action):
                if image is None:
                    fail(0, index, 'domain not invariant under {0}'.format(
                        perm.format_permutation(gen)
                    ))
            if None in action:
                continue
            for step, self_map in enumerate(maps):
                images = self_map.images
                for index in range(len(domain)):
                    if images[action[index]] != action[images[index]]:
                        fail(step, index, 'not equivariant under {0}'.format(
                            perm.format_permutation(gen)
                        ))

    return _verdict(certificate, failures)


def _verdict(certificate, failures):
    verdict = CertificateVerdict(
        valid=not failures,
        label=certificate.label,
        failures=tuple(failures),
    )
    logger.debug(verdict.describe())
    return verdict


def _label(subgroup):
    return subgroup.describe()


def _element_label(domain, index):
    if index is None:
        return '-'
    return _label(domain.get_element(index))
