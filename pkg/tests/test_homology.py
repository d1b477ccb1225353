"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import pytest
from sympy.polys.domains import QQ
from pcollect.errors import ResourceError
from pcollect.topology import homology as hom
from pcollect.topology.poset import SimplicialComplex
from pcollect.utility import DEFAULT_LIMITS

FANO_LINES = (
    (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0),
    (5, 6, 1), (6, 0, 2), (0, 1, 3),
)

# Six-vertex triangulation of the real projective plane.
PROJECTIVE_PLANE = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5),
)


def _fano_incidence():
    # Points 0..6, lines 7..13.
    edges = tuple(
        (point, 7 + line)
        for line, points in enumerate(FANO_LINES)
        for point in points
    )
    return SimplicialComplex.from_facets(range(14), edges)


def test_point_is_acyclic():
    profile = hom.homology(SimplicialComplex.from_facets((0,), ((0,),)))
    assert profile.is_acyclic()
    assert profile.euler == 0


def test_empty_complex_has_reduced_homology_in_degree_minus_one():
    profile = hom.homology(SimplicialComplex((), ()))
    assert profile.get(-1).rank == 1
    assert profile.euler == -1
    assert not profile.is_acyclic()


def test_hollow_triangle():
    complex_ = SimplicialComplex.from_facets(range(3), ((0, 1), (1, 2), (0, 2)))
    profile = hom.homology(complex_)
    assert profile.get(0).rank == 0
    assert profile.get(1).rank == 1
    assert profile.euler == -1
    assert not hom.collapse(complex_).collapsed_to_point


def test_filled_triangle_collapses():
    complex_ = SimplicialComplex.from_facets(range(3), ((0, 1, 2),))
    assert complex_.get_f_vector() == (3, 3, 1)
    assert hom.homology(complex_).is_acyclic()
    result = hom.collapse(complex_)
    assert result.collapsed_to_point
    assert result.steps == 3


def test_fano_incidence_graph():
    complex_ = _fano_incidence()
    assert complex_.get_f_vector() == (14, 21)
    profile = hom.homology(complex_)
    assert profile.get(0).rank == 0
    assert profile.get(1).rank == 8
    assert profile.euler == -8
    assert profile.betti() == {-1: 0, 0: 0, 1: 8}


def test_projective_plane_has_two_torsion():
    complex_ = SimplicialComplex.from_facets(range(6), PROJECTIVE_PLANE)
    assert complex_.get_f_vector() == (6, 15, 10)
    profile = hom.homology(complex_)
    assert profile.get(1).rank == 0
    assert profile.get(1).torsion == (2,)
    assert profile.get(2).is_zero()
    assert not profile.is_acyclic()
    assert profile.is_acyclic_mod(3)
    assert not profile.is_acyclic_mod(2)
    assert profile.mod_p_betti(2) == {-1: 0, 0: 0, 1: 1, 2: 1}
    assert profile.get(1).describe() == '1: 0 [2]'


def test_unreduced_homology():
    complex_ = SimplicialComplex.from_facets(range(4), ((0, 1), (2, 3)))
    profile = hom.homology(complex_, reduced=False)
    assert profile.get(0).rank == 2
    assert hom.homology(complex_).get(0).rank == 1


def test_boundaries_square_to_zero():
    complex_ = SimplicialComplex.from_facets(range(6), PROJECTIVE_PLANE)
    chains = hom.chain_complex(complex_)
    assert chains.get_shape(2) == (15, 10)
    assert chains.get_shape(0) == (1, 6)
    first = chains.to_rows(1)
    second = chains.to_rows(2)
    for row in first:
        for col in range(len(second[0])):
            assert sum(row[k] * second[k][col] for k in range(len(second))) == 0


def test_smith_invariants():
    assert hom.smith_invariants(({0: 2},), 1) == (1, (2,))
    assert hom.smith_invariants(({0: 1, 1: 1}, {0: 1, 1: -1}), 2) == (2, (2,))
    assert hom.smith_invariants((), 3) == (0, ())


def test_rank_over_a_field():
    assert hom.rank_over([[1, 1], [1, -1]], QQ) == 2
    assert hom.rank_over([], QQ) == 0


def test_simplex_cap():
    complex_ = _fano_incidence()
    with pytest.raises(ResourceError):
        hom.homology(complex_, limits=DEFAULT_LIMITS.updated(max_simplices=10))


def test_profile_as_dict():
    complex_ = SimplicialComplex.from_facets(range(3), ((0, 1), (1, 2), (0, 2)))
    data = hom.homology(complex_).as_dict()
    assert data['1'] == {'rank': 1, 'torsion': []}
