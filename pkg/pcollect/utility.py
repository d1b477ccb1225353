"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


from dataclasses import asdict, dataclass, fields, replace
from datetime import datetime
from pcollect.errors import ResourceError


@dataclass(frozen=True)
class Limits:
    # Group and subgroup sizes.
    max_order: int = 10 ** 6
    key_order_cap: int = 512
    sylow_order_cap: int = 2 ** 9
    brute_force_order: int = 512
    # Enumeration sizes.
    max_classes: int = 10 ** 4
    max_poset_elements: int = 20000
    max_simplices: int = 200000
    max_cosets: int = 10 ** 5
    max_quotient_degree: int = 5000
    # Backtrack search nodes (property evaluations).
    search_budget: int = 10 ** 7
    # Complexes at most this large are cross-checked by the rank oracle.
    oracle_simplices: int = 200
    seed: int = 0

    def updated(self, **changes):
        return replace(self, **changes)

    def as_dict(self):
        return asdict(self)

    @classmethod
    def field_names(cls):
        return tuple(field.name for field in fields(cls))


DEFAULT_LIMITS = Limits()


def check_cap(value, cap, name):
    # Caps are hard errors, never silent truncation.
    if value > cap:
        raise ResourceError(name, cap, value)


class Stopwatch:
    def __init__(self, enabled=True):
        # Initialize instance attributes.
        self._enabled = enabled
        self._start = datetime.now()
        self._laps = []

    def lap(self, label):
        now = datetime.now()
        elapsed = (now - self._start).total_seconds() * 1000.0
        self._start = now
        self._laps.append((label, elapsed))
        return elapsed

    def get_laps(self):
        return tuple(self._laps)

    def get_total_ms(self):
        if not self._enabled:
            return None
        return int(round(sum(elapsed for label, elapsed in self._laps)))
