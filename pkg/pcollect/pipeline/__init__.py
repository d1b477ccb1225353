"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


# Theorem ids accepted by the verifiers, in report order.
P2_4 = 'P2.4'
P2_5 = 'P2.5'
P3_1 = 'P3.1'
L3_3 = 'L3.3'
P3_4 = 'P3.4'
P3_5 = 'P3.5'
P3_8 = 'P3.8'
P3_9 = 'P3.9'
P3_10 = 'P3.10'
P4_3 = 'P4.3'
P4_4 = 'P4.4'
L4_5 = 'L4.5'
P4_6 = 'P4.6'
P4_7 = 'P4.7'
P4_8 = 'P4.8'
P4_10 = 'P4.10'
P4_11 = 'P4.11'
T4_12 = 'T4.12'
THEOREM_IDS = (
    P2_4, P2_5, P3_1, L3_3, P3_4, P3_5, P3_8, P3_9, P3_10,
    P4_3, P4_4, L4_5, P4_6, P4_7, P4_8, P4_10, P4_11, T4_12,
)

# Report verdicts.
PASS = 'pass'
FAIL = 'fail'
NOT_APPLICABLE = 'not-applicable'
ERROR = 'error'

# Step kinds.
STEP_CHECK = 'check'
STEP_EQUALITY = 'equality'
STEP_CERTIFICATE = 'certificate'
STEP_HOMOLOGY = 'homology'

# Strength reached by an end-to-end equivalence.
STRENGTH_CERTIFICATES = 'certificates'
STRENGTH_HOMOLOGY = 'homology'
STRENGTH_EULER = 'euler'
STRENGTH_NONE = 'none'
