"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


# Pointwise comparison of adjacent maps in a zig-zag.
LE = 'le'
GE = 'ge'

# Contractibility verdicts.
CERTIFIED = 'certified'
ACYCLIC = 'acyclic'
NON_ACYCLIC = 'non-acyclic'

# Poset flags.
CONTRADICTORY = 'contradictory'
