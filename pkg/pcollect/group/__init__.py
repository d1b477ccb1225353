"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


# Module constants.
IDENTITY_TEXT = '()'
GENERATOR_SEPARATOR = ';'
KEY_ELEMENTS = b'E'
KEY_TRANSVERSAL = b'T'
