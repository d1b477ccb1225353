"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.

Permutations are tuples of 0-based point images (sympy array forms). Products
follow sympy: compose(a, b) applies a first, then b.
"""


import re
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.permutations import (
    _af_invert,
    _af_pow,
    _af_rmul,
    _af_rmuln,
)
from pcollect.errors import InvalidInputError, ParseError, ResourceError
from pcollect.group import GENERATOR_SEPARATOR, IDENTITY_TEXT


_CYCLE_TEXT = re.compile(r'^(\(\s*\d+(\s*,\s*\d+)*\s*\)|\(\s*\))+$')
_CYCLE = re.compile(r'\(([^()]*)\)')


# Parsing and formatting.

def identity(degree):
    return tuple(range(degree))


def parse_permutation(text, degree):
    if degree < 1:
        raise InvalidInputError('degree must be positive, got {0}'.format(degree))
    compact = ''.join(text.split())
    if compact == '' or not _CYCLE_TEXT.match(compact):
        raise ParseError('malformed cycle text {0!r}'.format(text))

    # Collect cycles, checking the points are distinct and in range.
    cycles = []
    seen = set()
    for body in _CYCLE.findall(compact):
        if body == '':
            continue
        cycle = [int(point) - 1 for point in body.split(',')]
        for point in cycle:
            if point < 0 or point >= degree:
                raise ParseError(
                    'point {0} outside 1..{1} in {2!r}'.format(
                        point + 1, degree, text
                    )
                )
            if point in seen:
                raise ParseError(
                    'point {0} repeated in {1!r}'.format(point + 1, text)
                )
            seen.add(point)
        cycles.append(cycle)

    if not cycles:
        return identity(degree)
    return tuple(Permutation(cycles, size=degree).array_form)


def parse_generators(text, degree):
    return tuple(
        parse_permutation(chunk, degree)
        for chunk
        in text.split(GENERATOR_SEPARATOR)
        if chunk.strip() != ''
    )


def format_permutation(perm):
    cycles = Permutation(list(perm)).cyclic_form
    if not cycles:
        return IDENTITY_TEXT
    return ''.join(
        '(' + ','.join(str(point + 1) for point in cycle) + ')'
        for cycle
        in cycles
    )


def format_generators(perms):
    return GENERATOR_SEPARATOR.join(format_permutation(perm) for perm in perms)


def to_sympy(perm):
    return Permutation(list(perm))


# Arithmetic.

def compose(perm_a, perm_b):
    return tuple(_af_rmul(perm_b, perm_a))


def inverse(perm):
    return tuple(_af_invert(perm))


def conjugate(perm, by):
    # perm^by = by^-1 * perm * by
    return tuple(_af_rmuln(by, perm, _af_invert(by)))


def power(perm, exponent):
    if exponent < 0:
        return tuple(_af_pow(_af_invert(perm), -exponent))
    return tuple(_af_pow(perm, exponent))


def is_identity(perm):
    return all(perm[i] == i for i in range(len(perm)))


def order(perm):
    return Permutation(list(perm)).order()


def moved_points(perm):
    return sum(1 for i in range(len(perm)) if perm[i] != i)


def cycle_type(perm):
    structure = Permutation(list(perm)).cycle_structure
    return tuple(
        sorted(
            (
                length
                for length, count in structure.items()
                if length > 1
                for _ in range(count)
            ),
            reverse=True,
        )
    )


def cycle_label(perm):
    lengths = cycle_type(perm)
    if not lengths:
        return 'e'
    parts = []
    for length in sorted(set(lengths), reverse=True):
        count = lengths.count(length)
        parts.append(
            str(length) if count == 1 else '{0}^{1}'.format(length, count)
        )
    return '.'.join(parts)


def commutes(perm_a, perm_b):
    return compose(perm_a, perm_b) == compose(perm_b, perm_a)


# Element sets.

def encode(perms, degree):
    width = 1 if degree <= 256 else 2
    if width == 1:
        return b''.join(bytes(perm) for perm in perms)
    return b''.join(
        b''.join(point.to_bytes(2, 'big') for point in perm)
        for perm
        in perms
    )


def closure(generators, degree, cap=None):
    gens = [Permutation(list(gen)) for gen in generators if not is_identity(gen)]
    if not gens:
        return frozenset((identity(degree),))
    group = PermutationGroup(gens)
    order = int(group.order())
    if cap is not None and order > cap:
        raise ResourceError('closure order', cap, order)
    return frozenset(tuple(element) for element in group.generate(af=True))


def conjugate_set(elements, by):
    return frozenset(conjugate(element, by) for element in elements)


def product_set(elements_a, elements_b):
    return frozenset(
        compose(element_a, element_b)
        for element_a
        in elements_a
        for element_b
        in elements_b
    )
