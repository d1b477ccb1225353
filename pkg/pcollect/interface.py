"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import logging
from dataclasses import dataclass
from multiprocessing import Pool
from pcollect import collection
from pcollect import lefschetz
from pcollect import resource
from pcollect.collection import CollectionKind
from pcollect.errors import UsageError
from pcollect.group import search
from pcollect.pipeline import ERROR, FAIL
from pcollect.pipeline import stage
from pcollect.pipeline import verifier
from pcollect.topology import homology as hom
from pcollect.topology import poset as posets
from pcollect.topology import quotient
from pcollect.utility import DEFAULT_LIMITS


logger = logging.getLogger(__name__)


@dataclass
class NerveSummary:
    poset: object
    f_vector: tuple
    profile: object


@dataclass
class FixedPointResult:
    subgroup: object
    nerve: NerveSummary
    verdict: str


@dataclass
class LefschetzResult:
    routes: object
    singular: object
    screen: object


@dataclass
class SuiteResult:
    entries: tuple

    def get_reports(self):
        return tuple(report for entry, report in self.entries)

    def get_failures(self):
        return tuple(
            report
            for entry, report
            in self.entries
            if not entry.exploratory and report.verdict in (FAIL, ERROR)
        )

    def get_exit_status(self):
        return 1 if self.get_failures() else 0


class Workbench:
    def __init__(self, limits=DEFAULT_LIMITS, num_workers=0, timings=False):
        # Initialize instance attributes.
        self._limits = limits
        self._timings = timings
        self._groups = {}
        self._workers = Pool(num_workers) if num_workers > 0 else None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()

    def close(self):
        if self._workers is not None:
            self._workers.close()
            self._workers.join()
            self._workers = None

    def get_limits(self):
        return self._limits

    def load_group(self, group_name):
        name = resource.library_lookup(group_name).name
        if name not in self._groups:
            self._groups[name] = resource.load_group(name, self._limits)
        return self._groups[name]

    def unload_group(self, group_name):
        del self._groups[resource.library_lookup(group_name).name]

    def parse_subgroup(self, group_name, subgroup_text):
        return resource.parse_subgroup(self.load_group(group_name), subgroup_text)

    def classes(self, group_name):
        return search.conjugacy_classes(self.load_group(group_name))

    def classify(self, group_name, p):
        return collection.characteristic_classification(self.load_group(group_name), p)

    def get_collection(self, group_name, p, kind, t=None):
        group = self.load_group(group_name)
        kind = CollectionKind.parse(kind) if isinstance(kind, str) else kind
        if kind is CollectionKind.FRAK_S:
            if t is None:
                raise UsageError('frakS needs a subgroup T of order p')
            return quotient.build_frakS(group, p, self.parse_subgroup(group_name, t))
        return collection.build_collection(group, p, kind)

    def poset(self, group_name, p, kind, t=None):
        group = self.load_group(group_name)
        members = self.get_collection(group_name, p, kind, t)
        acting = (
            group
            if t is None
            else search.normalizer(group, self.parse_subgroup(group_name, t))
        )
        return posets.build_poset(members, acting=acting)

    def nerve(self, poset):
        complex_ = posets.order_complex(poset)
        return NerveSummary(
            poset=poset,
            f_vector=complex_.get_f_vector(),
            profile=hom.homology(complex_, limits=self._limits),
        )

    def fixed(self, group_name, p, kind, subgroup_text):
        subgroup = self.parse_subgroup(group_name, subgroup_text)
        fixed = posets.fixed_subposet(self.poset(group_name, p, kind), subgroup)
        nerve = self.nerve(fixed)
        return FixedPointResult(
            subgroup=subgroup,
            nerve=nerve,
            verdict=lefschetz.fixed_point_verdict(fixed, nerve.profile),
        )

    def lefschetz(self, group_name, p, kind):
        group = self.load_group(group_name)
        poset = self.poset(group_name, p, kind)
        routes = lefschetz.cross_validate(group, poset)
        return LefschetzResult(
            routes=routes,
            singular=lefschetz.p_singular_vanishing(routes.fixed_point, p),
            screen=lefschetz.vertex_screen(group, p, poset),
        )

    def verify(self, theorem_id, group_name, p, t=None):
        group = self.load_group(group_name)
        subgroup = None if t is None else self.parse_subgroup(group_name, t)
        return verifier.verify(theorem_id, group, p, subgroup, timings=self._timings)

    def run_suite(self, config):
        # Pass entries through the pipeline; output keeps config order.
        in_data = (
            self._workers,
            tuple(
                (entry, config.limits, config.timings)
                for entry
                in config.runs
            ),
        )
        workers, out_entry_data = stage.suite_stage(in_data)
        result = SuiteResult(tuple(out_entry_data))
        logger.info(
            'suite: %d entries, %d failing',
            len(result.entries),
            len(result.get_failures()),
        )
        return result
