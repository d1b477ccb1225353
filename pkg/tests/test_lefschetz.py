"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import pytest
from pcollect import collection
from pcollect import lefschetz
from pcollect import resource
from pcollect.collection import CollectionKind
from pcollect.errors import DomainError
from pcollect.group import perm
from pcollect.group import search
from pcollect.group.handle import trivial_subgroup
from pcollect.topology import CERTIFIED, NON_ACYCLIC
from pcollect.topology import homology as hom
from pcollect.topology import poset as posets
from pcollect.topology.poset import GPoset


def _sub(group, text):
    return resource.parse_subgroup(group, text)


def _hat_radical(group, p=2):
    return posets.build_poset(collection.build_collection(group, p, CollectionKind.HAT_B))


def test_routes_agree_on_sym5(sym5):
    routes = lefschetz.cross_validate(sym5, _hat_radical(sym5))
    assert routes.equal
    assert routes.fixed_point.get_values() == (4, 2, 0, 1, -1, 0, -1)
    assert routes.induced == routes.fixed_point


def test_sym4_function_vanishes(sym4):
    routes = lefschetz.cross_validate(sym4, _hat_radical(sym4))
    assert routes.fixed_point.is_zero()
    assert routes.induced.is_zero()


def test_value_at_an_element(sym5):
    function = lefschetz.lefschetz_fixed_point(sym5, _hat_radical(sym5))
    assert function.value_at(perm.parse_permutation('(3,5)', 5)) == 2
    assert function.value_at(perm.parse_permutation('(1,2,3,4,5)', 5)) == -1


def test_singular_classes_of_sym5(sym5):
    function = lefschetz.lefschetz_fixed_point(sym5, _hat_radical(sym5))
    report = lefschetz.p_singular_vanishing(function, 2)
    assert report.identity_value == 4
    assert [index for index, label, value in report.nonzero_classes] == [1, 4]
    assert report.nonprojective
    assert not report.consistent_with_projective


def test_singular_classes_of_sym4(sym4):
    function = lefschetz.lefschetz_fixed_point(sym4, _hat_radical(sym4))
    report = lefschetz.p_singular_vanishing(function, 2)
    assert report.consistent_with_projective
    assert report.identity_value == 0


def test_vertex_screen_leaves_the_transpositions(sym5):
    report = lefschetz.vertex_screen(sym5, 2, _hat_radical(sym5))
    assert len(report.entries) == len(collection.subgroup_census(sym5, 2))
    (candidate,) = report.candidates()
    assert candidate.subgroup.get_order() == 2
    assert perm.cycle_type(candidate.subgroup.get_generators()[0]) == (2,)
    assert candidate.profile.get(0).rank == 2
    assert candidate.verdict == NON_ACYCLIC
    assert candidate.statement().startswith('candidate')


def test_fixed_point_verdicts(sym4, sym5):
    poset = _hat_radical(sym4)
    fixed = posets.fixed_subposet(poset, _sub(sym4, '(1,2)(3,4);(1,3)(2,4)'))
    profile = hom.homology(posets.order_complex(fixed))
    assert lefschetz.fixed_point_verdict(fixed, profile) == CERTIFIED

    fixed = posets.fixed_subposet(_hat_radical(sym5), _sub(sym5, '(1,2)'))
    profile = hom.homology(posets.order_complex(fixed))
    assert lefschetz.fixed_point_verdict(fixed, profile) == NON_ACYCLIC


def test_collapsible_fixed_set_is_certified(sym4):
    path = GPoset(
        (
            _sub(sym4, '(1,3)'),
            _sub(sym4, '(1,3);(2,4)'),
            _sub(sym4, '(1,3)(2,4)'),
            _sub(sym4, '(1,2,3,4)'),
        ),
        trivial_subgroup(sym4),
    )
    assert path.cone_points() == ()
    profile = hom.homology(posets.order_complex(path))
    assert profile.is_acyclic()
    assert lefschetz.fixed_point_verdict(path, profile) == CERTIFIED


def test_class_function_arithmetic(sym4, sym5):
    table = search.conjugacy_classes(sym4)
    ones = lefschetz.ClassFunction.constant(table, 1)
    assert (ones - ones).is_zero()
    assert (ones + ones).get_values() == (2,) * len(table)
    assert (3 * ones).get_values() == (3,) * len(table)
    assert (-ones).get_values() == (-1,) * len(table)
    other = lefschetz.ClassFunction.constant(search.conjugacy_classes(sym5), 1)
    with pytest.raises(DomainError):
        ones + other
    with pytest.raises(DomainError):
        lefschetz.ClassFunction(table, (1, 2))


def test_regular_permutation_character(sym4):
    table = search.conjugacy_classes(sym4)
    character = lefschetz.permutation_character(
        sym4,
        trivial_subgroup(sym4),
        table,
        sym4.get_limits(),
    )
    assert character.get_values() == (24, 0, 0, 0, 0)


def test_permutation_character_of_a_point_stabilizer(sym4):
    table = search.conjugacy_classes(sym4)
    stabilizer = _sub(sym4, '(1,2,3);(1,2)')
    character = lefschetz.permutation_character(
        sym4,
        stabilizer,
        table,
        sym4.get_limits(),
    )
    for representative, value in zip(table.get_representatives(), character.get_values()):
        fixed_points = sum(1 for point in range(4) if representative[point] == point)
        assert value == fixed_points


def test_right_transversal(sym5):
    subgroup = _sub(sym5, '(1,2)')
    transversal = lefschetz.right_transversal(sym5, subgroup, sym5.get_limits())
    assert len(transversal) == 60
    cosets = {
        frozenset(perm.compose(element, t) for element in subgroup.get_elements())
        for t in transversal
    }
    assert len(cosets) == 60


def test_empty_fixed_set_is_not_acyclic(sym4):
    empty = _hat_radical(sym4).restrict(())
    profile = hom.homology(posets.order_complex(empty))
    assert lefschetz.fixed_point_verdict(empty, profile) == NON_ACYCLIC


@pytest.mark.parametrize('name', ['sym5', 'gl32'])
def test_function_vanishes_on_p_central_elements(name):
    group = resource.load_group(name)
    function = lefschetz.lefschetz_fixed_point(group, _hat_radical(group))
    representatives = collection.p_central_data(group, 2).get_representatives()
    assert representatives
    assert all(function.value_at(element) == 0 for element in representatives)


def test_building_of_gl32(gl32):
    routes = lefschetz.cross_validate(gl32, _hat_radical(gl32))
    assert routes.equal
    report = lefschetz.p_singular_vanishing(routes.fixed_point, 2)
    assert report.identity_value == -8
    assert report.consistent_with_projective
