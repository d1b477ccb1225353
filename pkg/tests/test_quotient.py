"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import pytest
from pcollect import collection
from pcollect import resource
from pcollect.collection import CollectionKind
from pcollect.errors import DomainError, UsageError
from pcollect.topology import quotient


def _sub(group, text):
    return resource.parse_subgroup(group, text)


def test_centralizer_quotient_of_a_transposition(sym5):
    context = quotient.quotient_context(sym5, 2, _sub(sym5, '(1,2)'))
    assert context.get_centralizer().get_order() == 12
    assert context.get_core() == _sub(sym5, '(1,2)')
    assert context.get_index() == 6
    bar = context.get_quotient()
    assert bar.get_order() == 6
    assert bar.get_degree() == 6
    assert collection.characteristic_classification(bar, 2).parabolic


def test_quotient_is_memoized(sym5):
    first = quotient.quotient_context(sym5, 2, _sub(sym5, '(1,2)'))
    second = quotient.quotient_context(sym5, 2, _sub(sym5, '(1,2)'))
    assert first is second


def test_image_and_preimage(sym5):
    context = quotient.quotient_context(sym5, 2, _sub(sym5, '(1,2)'))
    pair = _sub(sym5, '(1,2);(3,4)')
    image = context.image(pair)
    assert image.get_order() == 2
    assert context.preimage(image) == pair
    three = context.image(_sub(sym5, '(3,4,5)'))
    assert three.get_order() == 3
    assert context.preimage(three).get_order() == 6


def test_correspondence_holds_over_the_core(sym5):
    context = quotient.quotient_context(sym5, 2, _sub(sym5, '(1,2)'))
    for text in ('(1,2);(3,4)', '(1,2);(3,5)', '(1,2)'):
        assert context.check_correspondence(_sub(sym5, text))


def test_distinguished_subgroups_of_the_quotient(sym5):
    context = quotient.quotient_context(sym5, 2, _sub(sym5, '(1,2)'))
    hat = collection.build_collection(context.get_quotient(), 2, CollectionKind.HAT_S)
    assert len(hat.members) == 3
    assert all(member.get_order() == 2 for member in hat.members)


def test_frak_of_a_transposition(sym5):
    frak = quotient.build_frakS(sym5, 2, _sub(sym5, '(1,2)'))
    assert frak.kind is CollectionKind.FRAK_S
    assert len(frak.members) == 3
    assert all(member.is_elementary_abelian(2) for member in frak.members)
    assert all(member.get_order() == 4 for member in frak.members)
    assert _sub(sym5, '(1,2);(3,4)').get_key() in frak.get_member_keys()
    assert frak.notes == ()
    assert [hypothesis.name for hypothesis in frak.hypotheses] == [
        'G has parabolic characteristic p',
        'C does not have characteristic p',
        'C/O_C has parabolic characteristic p',
    ]
    assert all(hypothesis.holds for hypothesis in frak.hypotheses)


def test_frak_of_a_transposition_in_sym4(sym4):
    context = quotient.quotient_context(sym4, 2, _sub(sym4, '(1,2)'))
    assert context.get_centralizer().get_order() == 4
    assert context.get_core() == context.get_centralizer()
    assert context.get_quotient().get_order() == 1
    frak = quotient.build_frakS(sym4, 2, _sub(sym4, '(1,2)'))
    assert frak.members == ()
    assert frak.notes == (quotient.NOTE_CENTRAL_CORE,)
    assert [hypothesis.holds for hypothesis in frak.hypotheses] == [True, False, True]
    assert frak.hypotheses[1].witness == '|C| = 4, |O_C| = 4'


def test_frak_rejects_a_central_subgroup(sym4):
    with pytest.raises(UsageError):
        quotient.build_frakS(sym4, 2, _sub(sym4, '(1,2)(3,4)'))


@pytest.mark.parametrize('text', ['(1,2,3)', '(1,2);(3,4)', ''])
def test_frak_requires_a_subgroup_of_order_p(sym5, text):
    with pytest.raises(DomainError):
        quotient.build_frakS(sym5, 2, _sub(sym5, text))


def test_sylow_subgroups(sym4):
    sylows = quotient.sylow_subgroups(sym4, 2)
    assert len(sylows) == 3
    assert all(sylow.get_order() == 8 for sylow in sylows)
