"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import heapq
import itertools
import logging
from dataclasses import dataclass, field
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors
from pcollect.errors import VerificationError
from pcollect.topology.poset import SimplicialComplex
from pcollect.utility import DEFAULT_LIMITS, check_cap


logger = logging.getLogger(__name__)

# Primes used by the rank oracle.
ORACLE_PRIMES = (2, 3, 5)


class ChainComplex:
    def __init__(self, sizes, boundaries, reduced):
        # Initialize instance attributes.
        self._sizes = dict(sizes)
        self._boundaries = dict(boundaries)
        self._reduced = reduced

    def is_reduced(self):
        return self._reduced

    def get_dimensions(self):
        return tuple(sorted(self._sizes))

    def get_size(self, dimension):
        return self._sizes.get(dimension, 0)

    def get_boundary(self, dimension):
        # Sparse columns: boundary[d][j] = {row: entry} for the j-th d-simplex.
        return self._boundaries.get(dimension, ())

    def get_shape(self, dimension):
        return (self.get_size(dimension - 1), self.get_size(dimension))

    def to_rows(self, dimension):
        rows, cols = self.get_shape(dimension)
        dense = [[0] * cols for row in range(rows)]
        for col, column in enumerate(self.get_boundary(dimension)):
            for row, entry in column.items():
                dense[row][col] = entry
        return dense


@dataclass
class HomologyGroup:
    dimension: int
    rank: int
    torsion: tuple = ()

    def is_zero(self):
        return self.rank == 0 and not self.torsion

    def describe(self):
        text = '{0}: {1}'.format(self.dimension, self.rank)
        if self.torsion:
            text += ' [' + ' '.join(str(value) for value in self.torsion) + ']'
        return text


@dataclass
class HomologyProfile:
    groups: tuple
    reduced: bool = True
    euler: int = 0

    def get(self, dimension):
        for group in self.groups:
            if group.dimension == dimension:
                return group
        return HomologyGroup(dimension, 0)

    def is_acyclic(self):
        return all(group.is_zero() for group in self.groups)

    def is_acyclic_mod(self, p):
        return all(value == 0 for value in self.mod_p_betti(p).values())

    def betti(self):
        return {group.dimension: group.rank for group in self.groups}

    def mod_p_betti(self, p):
        # Universal coefficients: H_d(K; F_p) = H_d (x) F_p + Tor(H_{d-1}, F_p).
        values = {}
        for group in self.groups:
            below = self.get(group.dimension - 1)
            values[group.dimension] = (
                group.rank
                + sum(1 for value in group.torsion if value % p == 0)
                + sum(1 for value in below.torsion if value % p == 0)
            )
        return values

    def lines(self):
        return tuple(group.describe() for group in self.groups)

    def as_dict(self):
        return {
            str(group.dimension): {
                'rank': group.rank,
                'torsion': list(group.torsion),
            }
            for group
            in self.groups
        }


@dataclass
class CollapseResult:
    remaining: object
    collapsed_to_point: bool
    steps: int = 0
    pairs: tuple = field(default_factory=tuple)


def chain_complex(complex_, reduced=True, limits=DEFAULT_LIMITS):
    check_cap(len(complex_), limits.max_simplices, 'max_simplices')
    sizes = {}
    boundaries = {}
    index = {}
    for dimension in range(complex_.get_dimension() + 1):
        simplices = complex_.get_simplices(dimension)
        sizes[dimension] = len(simplices)
        index[dimension] = {
            simplex: position
            for position, simplex
            in enumerate(simplices)
        }

    # Boundary of [v_0 .. v_d] is the alternating sum of its facets.
    for dimension in range(1, complex_.get_dimension() + 1):
        faces = index[dimension - 1]
        columns = []
        for simplex in complex_.get_simplices(dimension):
            column = {}
            for position in range(len(simplex)):
                face = simplex[:position] + simplex[position + 1:]
                column[faces[face]] = -1 if position % 2 else 1
            columns.append(column)
        boundaries[dimension] = tuple(columns)
    if reduced:
        sizes[-1] = 1
        boundaries[0] = tuple({0: 1} for simplex in complex_.get_simplices(0))

    chains = ChainComplex(sizes, boundaries, reduced)
    _check_square_zero(chains)
    return chains


def homology(complex_, reduced=True, limits=DEFAULT_LIMITS):
    chains = chain_complex(complex_, reduced, limits)
    ranks = {}
    torsion = {}
    for dimension in chains.get_dimensions():
        if dimension - 1 in chains.get_dimensions():
            ranks[dimension], torsion[dimension] = smith_invariants(
                chains.get_boundary(dimension),
                chains.get_size(dimension - 1),
            )

    groups = []
    low = -1 if reduced else 0
    for dimension in range(low, complex_.get_dimension() + 1):
        betti = (
            chains.get_size(dimension)
            - ranks.get(dimension, 0)
            - ranks.get(dimension + 1, 0)
        )
        groups.append(
            HomologyGroup(dimension, betti, torsion.get(dimension + 1, ()))
        )
    if complex_.is_empty() and not reduced:
        groups = []
    profile = HomologyProfile(
        tuple(groups),
        reduced=reduced,
        euler=reduced_euler(complex_) if reduced else reduced_euler(complex_) + 1,
    )

    # Alternating sum of Betti numbers is the Euler characteristic.
    alternating = sum(
        (-1 if group.dimension % 2 else 1) * group.rank
        for group
        in groups
    )
    if reduced and alternating != profile.euler:
        raise VerificationError(
            'Betti numbers sum to {0}, reduced Euler characteristic is {1}'.format(
                alternating,
                profile.euler,
            )
        )
    if reduced and len(complex_) <= limits.oracle_simplices:
        _check_against_ranks(chains, ranks, torsion)
    return profile


def reduced_euler(complex_):
    return sum(
        (-1) ** dimension * count
        for dimension, count
        in enumerate(complex_.get_f_vector())
    ) - 1


def smith_invariants(columns, rows):
    # Returns (rank, torsion coefficients > 1) of a sparse integer matrix.
    matrix = {}
    for col, column in enumerate(columns):
        for row, entry in column.items():
            if entry:
                matrix.setdefault(row, {})[col] = entry
    rank = 0

    # Eliminate with unit pivots while any remain.
    while True:
        pivot = _unit_pivot(matrix)
        if pivot is None:
            break
        row, col = pivot
        rank += 1
        pivot_row = matrix.pop(row)
        scale = pivot_row[col]
        for other in sorted(matrix):
            entries = matrix[other]
            factor = entries.get(col)
            if not factor:
                continue
            multiple = factor * scale
            for position, value in pivot_row.items():
                updated = entries.get(position, 0) - multiple * value
                if updated:
                    entries[position] = updated
                else:
                    entries.pop(position, None)
            if not entries:
                del matrix[other]

    if not matrix:
        return rank, ()
    remaining_rows = sorted(matrix)
    remaining_cols = sorted({col for entries in matrix.values() for col in entries})
    logger.debug(
        'smith residual %dx%d after %d unit pivots',
        len(remaining_rows),
        len(remaining_cols),
        rank,
    )
    residual = DM(
        [
            [matrix[row].get(col, 0) for col in remaining_cols]
            for row in remaining_rows
        ],
        ZZ,
    )
    factors = sorted(
        abs(int(value))
        for value
        in invariant_factors(residual)
        if value != 0
    )
    rank += len(factors)
    return rank, tuple(value for value in factors if value > 1)


def rank_over(rows, domain):
    if not rows or not rows[0]:
        return 0
    return DM(rows, ZZ).convert_to(domain).rank()


def collapse(complex_):
    present = set(complex_.get_simplices())
    cofaces = {simplex: set() for simplex in present}
    for simplex in present:
        if len(simplex) > 1:
            for face in itertools.combinations(simplex, len(simplex) - 1):
                cofaces[face].add(simplex)

    # Free faces in a fixed order: higher dimension first, then lexicographic.
    heap = [(-len(simplex), simplex) for simplex in present if len(cofaces[simplex]) == 1]
    heapq.heapify(heap)
    pairs = []
    while heap:
        size, face = heapq.heappop(heap)
        if face not in present or len(cofaces[face]) != 1:
            continue
        (coface,) = cofaces[face]
        if cofaces[coface]:
            continue
        present.discard(face)
        present.discard(coface)
        pairs.append((face, coface))
        for removed in (coface, face):
            for sub in _facets(removed):
                if sub not in present:
                    continue
                cofaces[sub].discard(removed)
                if len(cofaces[sub]) == 1:
                    heapq.heappush(heap, (-len(sub), sub))
                elif not cofaces[sub]:
                    # sub became maximal, so its facets may now be free.
                    for low in _facets(sub):
                        if low in present and len(cofaces[low]) == 1:
                            heapq.heappush(heap, (-len(low), low))

    remaining = SimplicialComplex(complex_.get_vertices(), present)
    result = CollapseResult(
        remaining=remaining,
        collapsed_to_point=len(present) == 1,
        steps=len(pairs),
        pairs=tuple(pairs),
    )
    logger.debug(
        'collapse: %d pairs removed, %d simplices remain',
        len(pairs),
        len(present),
    )
    return result


def _facets(simplex):
    if len(simplex) < 2:
        return ()
    return itertools.combinations(simplex, len(simplex) - 1)


def _unit_pivot(matrix):
    for row in sorted(matrix):
        for col in sorted(matrix[row]):
            if matrix[row][col] in (1, -1):
                return row, col
    return None


def _check_square_zero(chains):
    for dimension in chains.get_dimensions():
        lower = chains.get_boundary(dimension)
        upper = chains.get_boundary(dimension + 1)
        if not lower or not upper:
            continue
        for column in upper:
            total = {}
            for face, entry in column.items():
                for row, value in lower[face].items():
                    total[row] = total.get(row, 0) + entry * value
            if any(total.values()):
                raise VerificationError(
                    'boundary squares to a nonzero map in dimension {0}'.format(
                        dimension + 1
                    )
                )


def _check_against_ranks(chains, ranks, torsion):
    # Smith ranks must agree with ranks over Q; torsion-free ranks over F_p
    # follow from the invariant factors.
    for dimension, rank in ranks.items():
        rows = chains.to_rows(dimension)
        rational = rank_over(rows, QQ)
        if rational != rank:
            raise VerificationError(
                'rank of boundary {0}: smith {1}, rational {2}'.format(
                    dimension,
                    rank,
                    rational,
                )
            )
        for p in ORACLE_PRIMES:
            expected = rank - sum(
                1 for value in torsion[dimension] if value % p == 0
            )
            modular = rank_over(rows, GF(p))
            if modular != expected:
                raise VerificationError(
                    'rank of boundary {0} mod {1}: smith {2}, direct {3}'.format(
                        dimension,
                        p,
                        expected,
                        modular,
                    )
                )
