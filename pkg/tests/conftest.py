"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import pytest
from pcollect import resource


@pytest.fixture(scope='session')
def sym3():
    return resource.load_group('sym3')


@pytest.fixture(scope='session')
def sym4():
    return resource.load_group('sym4')


@pytest.fixture(scope='session')
def sym5():
    return resource.load_group('sym5')


@pytest.fixture(scope='session')
def dihedral4():
    return resource.load_group('dihedral4')


@pytest.fixture(scope='session')
def gl32():
    return resource.load_group('gl32')


@pytest.fixture(scope='session')
def sym6():
    return resource.load_group('sym6')
