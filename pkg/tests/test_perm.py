"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import pytest
from pcollect.errors import InvalidInputError, ParseError, ResourceError
from pcollect.group import perm


def test_parse_uses_one_based_cycles():
    assert perm.parse_permutation('(1,2,3)', 3) == (1, 2, 0)
    assert perm.parse_permutation('(1, 2)(3,4)', 4) == (1, 0, 3, 2)
    assert perm.parse_permutation('()', 4) == (0, 1, 2, 3)


def test_format_inverts_parse():
    assert perm.format_permutation((1, 2, 0)) == '(1,2,3)'
    assert perm.format_permutation((0, 1, 2)) == '()'
    assert perm.format_generators(((1, 0, 2), (0, 2, 1))) == '(1,2);(2,3)'


def test_parse_generators_splits_on_semicolons():
    gens = perm.parse_generators('(1,2,3,4); (1,2)', 4)
    assert gens == ((1, 2, 3, 0), (1, 0, 2, 3))


@pytest.mark.parametrize('text', ['(1,1)', '(1,5)', '(0,1)', '1,2', '(1,2'])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(ParseError):
        perm.parse_permutation(text, 3)


def test_parse_rejects_empty_degree():
    with pytest.raises(InvalidInputError):
        perm.parse_permutation('()', 0)


def test_compose_applies_left_argument_first():
    swap_12 = perm.parse_permutation('(1,2)', 3)
    swap_23 = perm.parse_permutation('(2,3)', 3)
    assert perm.compose(swap_12, swap_23) == (2, 0, 1)
    assert perm.compose(swap_23, swap_12) == (1, 2, 0)


def test_inverse_and_powers():
    cycle = perm.parse_permutation('(1,2,3,4,5)', 5)
    assert perm.compose(cycle, perm.inverse(cycle)) == perm.identity(5)
    assert perm.power(cycle, -1) == perm.inverse(cycle)
    assert perm.power(cycle, 5) == perm.identity(5)
    assert perm.power(cycle, 0) == perm.identity(5)


def test_conjugate_relabels_points():
    swap = perm.parse_permutation('(1,2)', 3)
    by = perm.parse_permutation('(1,2,3)', 3)
    assert perm.format_permutation(perm.conjugate(swap, by)) == '(2,3)'


def test_order_and_cycle_type():
    element = perm.parse_permutation('(1,2,3)(4,5)', 5)
    assert perm.order(element) == 6
    assert perm.cycle_type(element) == (3, 2)
    assert perm.cycle_label(element) == '3.2'
    assert perm.cycle_label(perm.parse_permutation('(1,2)(3,4)', 4)) == '2^2'
    assert perm.cycle_label(perm.identity(4)) == 'e'
    assert perm.moved_points(element) == 5


def test_commutes():
    assert perm.commutes(
        perm.parse_permutation('(1,2)', 4),
        perm.parse_permutation('(3,4)', 4),
    )
    assert not perm.commutes(
        perm.parse_permutation('(1,2)', 3),
        perm.parse_permutation('(2,3)', 3),
    )


def test_closure_generates_the_whole_group():
    gens = perm.parse_generators('(1,2);(1,2,3)', 3)
    assert len(perm.closure(gens, 3)) == 6
    assert perm.closure((), 3) == frozenset((perm.identity(3),))


def test_closure_is_closed_under_the_generators():
    gens = perm.parse_generators('(1,2,4)(3,6,5);(2,6)(3,7)', 7)
    elements = perm.closure(gens, 7)
    assert len(elements) == 168
    assert all(
        perm.compose(element, gen) in elements
        for element
        in elements
        for gen
        in gens
    )
    assert all(len(element) == 7 for element in elements)


def test_closure_respects_the_cap():
    gens = perm.parse_generators('(1,2,3,4);(1,2)', 4)
    with pytest.raises(ResourceError):
        perm.closure(gens, 4, cap=10)


def test_encode_is_fixed_width():
    assert perm.encode(((1, 0, 2),), 3) == bytes((1, 0, 2))
    assert len(perm.encode((perm.identity(300),), 300)) == 600
