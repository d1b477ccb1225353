"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


from pcollect import collection
from pcollect import resource
from pcollect.collection import CollectionKind
from pcollect.topology import GE, LE
from pcollect.topology import certificate as cert
from pcollect.topology import poset as posets
from pcollect.topology.certificate import ContractionCertificate


def _sub(group, text):
    return resource.parse_subgroup(group, text)


def _hat_radical(sym4):
    return posets.build_poset(
        collection.build_collection(sym4, 2, CollectionKind.HAT_B)
    )


def _reasons(verdict):
    return tuple(reason for step, element, reason in verdict.failures)


def test_contraction_to_a_normal_subgroup(sym4):
    domain = _hat_radical(sym4)
    klein = _sub(sym4, '(1,2)(3,4);(1,3)(2,4)')
    verdict = cert.check_certificate(ContractionCertificate(
        domain=domain,
        maps=(
            cert.identity_map(domain),
            cert.product_map(domain, klein),
            cert.constant_map(domain, klein),
        ),
        relations=(LE, GE),
        acting=sym4,
        label='hatB(sym4) onto O_2',
    ))
    assert verdict.valid
    assert verdict.failures == ()
    assert verdict.describe() == 'hatB(sym4) onto O_2: valid'


def test_product_with_a_non_normalizing_subgroup_is_rejected(sym4):
    domain = _hat_radical(sym4)
    swap = _sub(sym4, '(1,2)')
    product = cert.product_map(domain, swap)
    assert not product.is_total()
    verdict = cert.check_certificate(ContractionCertificate(
        domain=domain,
        maps=(
            cert.identity_map(domain),
            product,
            cert.constant_map(domain, swap),
        ),
        relations=(LE, GE),
        acting=sym4,
    ))
    assert not verdict.valid
    assert any('is not a subgroup' in reason for reason in _reasons(verdict))
    assert any('image outside the domain' in reason for reason in _reasons(verdict))


def test_final_map_must_be_constant(sym4):
    domain = _hat_radical(sym4)
    verdict = cert.check_certificate(ContractionCertificate(
        domain=domain,
        maps=(cert.identity_map(domain),),
        relations=(),
    ))
    assert not verdict.valid
    assert _reasons(verdict) == ('final map is not constant',)


def test_relations_must_match_the_maps(sym4):
    domain = _hat_radical(sym4)
    klein = _sub(sym4, '(1,2)(3,4);(1,3)(2,4)')
    verdict = cert.check_certificate(ContractionCertificate(
        domain=domain,
        maps=(cert.identity_map(domain), cert.constant_map(domain, klein)),
        relations=(),
    ))
    assert not verdict.valid
    assert 'need one relation per adjacent pair of maps' in _reasons(verdict)


def test_wrong_adjacency_direction(sym4):
    domain = _hat_radical(sym4)
    klein = _sub(sym4, '(1,2)(3,4);(1,3)(2,4)')
    verdict = cert.check_certificate(ContractionCertificate(
        domain=domain,
        maps=(cert.identity_map(domain), cert.constant_map(domain, klein)),
        relations=(LE,),
    ))
    assert not verdict.valid
    assert set(_reasons(verdict)) == {'adjacency le fails'}
    assert len(verdict.failures) == 3


def test_constant_map_at_a_moved_point_is_not_equivariant(sym4):
    domain = _hat_radical(sym4)
    dihedral = _sub(sym4, '(1,2,3,4);(1,3)')
    verdict = cert.check_certificate(ContractionCertificate(
        domain=domain,
        maps=(cert.identity_map(domain), cert.constant_map(domain, dihedral)),
        relations=(LE,),
        acting=sym4,
    ))
    assert not verdict.valid
    assert any(reason.startswith('not equivariant') for reason in _reasons(verdict))


def test_empty_poset_is_not_contractible(sym4):
    domain = _hat_radical(sym4).restrict(())
    verdict = cert.check_certificate(ContractionCertificate(
        domain=domain,
        maps=(cert.identity_map(domain),),
        relations=(),
    ))
    assert not verdict.valid
    assert 'empty poset is not contractible' in _reasons(verdict)


def test_retraction_onto_a_target(sym4):
    poset = posets.build_poset(collection.build_collection(sym4, 2, CollectionKind.S))
    klein = _sub(sym4, '(1,2)(3,4);(1,3)(2,4)')
    domain = posets.truncate(poset, greater_equal=klein)
    target = posets.truncate(domain, less_equal=klein)
    assert len(domain) == 4
    assert len(target) == 1
    verdict = cert.check_certificate(ContractionCertificate(
        domain=domain,
        maps=(cert.identity_map(domain), cert.constant_map(domain, klein)),
        relations=(GE,),
        acting=sym4,
        target=target,
    ))
    assert verdict.valid


def test_normalizer_maps(sym4):
    poset = posets.build_poset(collection.build_collection(sym4, 2, CollectionKind.S))
    dihedral = _sub(sym4, '(1,2,3,4);(1,3)')
    domain = posets.truncate(poset, less_equal=dihedral)
    cyclic = _sub(sym4, '(1,2,3,4)')
    normalizers = cert.normalizer_map(domain, cyclic)
    assert normalizers.is_total()
    assert domain.get_element(normalizers.images[domain.index_of(dihedral)]) == dihedral
    combined = cert.normalizer_product_map(domain, cyclic, cyclic)
    assert combined.is_total()


def test_subgroup_product(sym4):
    klein = _sub(sym4, '(1,2)(3,4);(1,3)(2,4)')
    product, problem = cert.subgroup_product(klein, _sub(sym4, '(1,2,3)'))
    assert problem is None
    assert product.get_order() == 12
    product, problem = cert.subgroup_product(_sub(sym4, '(1,2)'), _sub(sym4, '(2,3)'))
    assert product is None
    assert 'is not a subgroup' in problem
