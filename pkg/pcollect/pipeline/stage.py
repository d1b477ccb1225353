"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import logging
from pcollect import resource
from pcollect.errors import PcollectError
from pcollect.pipeline import verifier


logger = logging.getLogger(__name__)


def suite_entry(in_packet):
    # Declare output packet.
    out_packet = None

    # Unpack input packet.
    (
        entry,
        limits,
        timings,
    ) = in_packet

    # Build the group and run the verifier.
    try:
        group = resource.load_group(entry.group, limits)
        subgroup = (
            None
            if entry.t is None
            else resource.parse_subgroup(group, entry.t)
        )
        report = verifier.verify(
            entry.theorem,
            group,
            entry.prime,
            subgroup,
            timings=timings,
        )
    except PcollectError as error:
        logger.warning('%s on %s failed: %s', entry.theorem, entry.group, error)
        report = verifier.error_report(
            entry.group,
            entry.prime,
            entry.theorem,
            '{0}: {1}'.format(type(error).__name__, error),
            limits,
            entry.t,
        )

    # Create output packet.
    out_packet = (
        entry,
        report,
    )

    return out_packet


def suite_stage(in_data):
    # Unpack input data.
    (
        workers,
        in_entry_data,
    ) = in_data

    # Declare/initialize output data.
    out_entry_data = None

    # Process data.
    if workers is None:
        out_entry_data = tuple(
            suite_entry(entry_packet)
            for entry_packet
            in in_entry_data
        )
    else:
        out_entry_data = tuple(
            workers.map(
                suite_entry,
                in_entry_data
            )
        )

    # Pack output data.
    return (
        workers,
        out_entry_data,
    )
