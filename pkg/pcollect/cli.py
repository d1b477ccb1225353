"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import argparse
import json
import logging
import sys
from dataclasses import asdict
from pcollect import resource
from pcollect.collection import CollectionKind
from pcollect.errors import PcollectError
from pcollect.group import perm
from pcollect.interface import Workbench
from pcollect.pipeline import ERROR, FAIL, THEOREM_IDS
from pcollect.utility import DEFAULT_LIMITS


logger = logging.getLogger(__name__)

# Exit statuses.
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=resource.OUTPUT_FORMATS, default=None)
    common.add_argument('--max-order', type=int, default=None)
    common.add_argument('--seed', type=int, default=None)
    common.add_argument('--workers', type=int, default=None)
    common.add_argument('--out', default=None, help='write output to PATH')
    common.add_argument('-v', '--verbose', action='count', default=0)

    parser = argparse.ArgumentParser(
        prog='pcollect',
        description='Collections of p-subgroups, their posets and homology.',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    kinds = tuple(kind.value for kind in CollectionKind)

    collections_parser = subparsers.add_parser(
        'collections',
        parents=[common],
        help='list a collection by conjugacy class',
    )
    _add_target(collections_parser)
    collections_parser.add_argument('--kind', choices=kinds, required=True)
    collections_parser.add_argument('--t', default=None, help='T for frakS')
    collections_parser.add_argument('--dump', default=None, help='write a poset dump')

    fixed_parser = subparsers.add_parser(
        'fixed',
        parents=[common],
        help='fixed points of a subgroup on a collection',
    )
    _add_target(fixed_parser)
    fixed_parser.add_argument('--kind', choices=kinds, required=True)
    fixed_parser.add_argument('--subgroup', required=True)

    lefschetz_parser = subparsers.add_parser(
        'lefschetz',
        parents=[common],
        help='reduced Lefschetz class function and screens',
    )
    _add_target(lefschetz_parser)
    lefschetz_parser.add_argument('--kind', choices=kinds, required=True)

    verify_parser = subparsers.add_parser(
        'verify',
        parents=[common],
        help='run one theorem verifier',
    )
    verify_parser.add_argument('--theorem', choices=THEOREM_IDS, required=True)
    _add_target(verify_parser)
    verify_parser.add_argument('--t', default=None)
    verify_parser.add_argument('--timings', action='store_true')

    suite_parser = subparsers.add_parser(
        'suite',
        parents=[common],
        help='run the verifiers named in a config file',
    )
    suite_parser.add_argument('--config', required=True)

    classes_parser = subparsers.add_parser(
        'classes',
        parents=[common],
        help='conjugacy class table',
    )
    classes_parser.add_argument('--group', required=True)

    classify_parser = subparsers.add_parser(
        'classify',
        parents=[common],
        help='local and parabolic characteristic p',
    )
    _add_target(classify_parser)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=LOG_LEVELS[min(args.verbose, len(LOG_LEVELS) - 1)],
        format='%(levelname)s %(name)s: %(message)s',
    )
    try:
        return _run(args)
    except PcollectError as error:
        print('pcollect: {0}: {1}'.format(type(error).__name__, error), file=sys.stderr)
        return EXIT_ERROR


def _run(args):
    logger.info('running %s', args.command)
    if args.command == 'suite':
        return _run_suite(args)

    limits = _limits(DEFAULT_LIMITS, args)
    output_format = args.format or 'text'
    timings = getattr(args, 'timings', False)
    with Workbench(limits, _workers(args, 0), timings) as workbench:
        status = EXIT_OK
        if args.command == 'collections':
            data, text = _collections_output(workbench, args)
        elif args.command == 'fixed':
            data, text = _fixed_output(workbench, args)
        elif args.command == 'lefschetz':
            data, text = _lefschetz_output(workbench, args)
        elif args.command == 'classes':
            data, text = _classes_output(workbench, args)
        elif args.command == 'classify':
            data, text = _classify_output(workbench, args)
        else:
            report = workbench.verify(args.theorem, args.group, args.prime, args.t)
            data, text = report.to_dict(), report.to_text()
            if report.verdict in (FAIL, ERROR):
                status = EXIT_CHECK_FAILED
    _emit(data, text, output_format, args.out)
    return status


def _run_suite(args):
    config = resource.load_config(args.config)
    limits = _limits(config.limits, args)
    output_format = args.format or config.format
    out_filename = args.out or config.out
    config.limits = limits
    with Workbench(limits, _workers(args, config.workers), config.timings) as workbench:
        result = workbench.run_suite(config)
    text = resource.render_reports(result.get_reports(), output_format)
    if out_filename is None:
        sys.stdout.write(text)
    else:
        resource.write_reports(result.get_reports(), output_format, out_filename)
    return EXIT_CHECK_FAILED if result.get_exit_status() else EXIT_OK


def _add_target(parser):
    parser.add_argument('--group', required=True)
    parser.add_argument('--prime', type=int, required=True)


def _limits(limits, args):
    changes = {}
    if args.max_order is not None:
        changes['max_order'] = args.max_order
    if args.seed is not None:
        changes['seed'] = args.seed
    return limits.updated(**changes)


def _workers(args, default):
    return default if args.workers is None else args.workers


def _emit(data, text, output_format, out_filename):
    if output_format == 'json':
        text = json.dumps(data, indent=2, sort_keys=True)
    if out_filename is None:
        print(text)
        return
    with open(out_filename, 'w') as f_out:
        f_out.write(text + '\n')


# Subcommand output as (data, text).

def _collections_output(workbench, args):
    members = workbench.get_collection(args.group, args.prime, args.kind, args.t)
    poset = workbench.poset(args.group, args.prime, args.kind, args.t)
    nerve = workbench.nerve(poset)
    if args.dump is not None:
        with open(args.dump, 'w') as f_out:
            f_out.write(resource.dump_poset(poset))
    classes = [
        {
            'representative': perm.format_generators(rep.get_generators()),
            'order': rep.get_order(),
            'flags': dict(flags),
        }
        for rep, flags
        in zip(members.representatives, members.flags)
    ]
    data = {
        'group': args.group,
        'prime': args.prime,
        'kind': members.kind.value,
        'classes': classes,
        'subgroups': len(members.members),
        'notes': list(members.notes),
        'hypotheses': [asdict(hypothesis) for hypothesis in members.hypotheses],
        'poset': {
            'elements': len(poset),
            'relations': len(poset.get_relations()),
            'f_vector': list(nerve.f_vector),
            'homology': nerve.profile.as_dict(),
        },
    }
    lines = ['{0}_{1}({2}): {3} classes, {4} subgroups'.format(
        members.kind.value,
        args.prime,
        args.group,
        len(classes),
        len(members.members),
    )]
    for entry in classes:
        lines.append('  order {0}: <{1}> {2}'.format(
            entry['order'],
            entry['representative'],
            ' '.join(name for name, value in sorted(entry['flags'].items()) if value),
        ))
    for hypothesis in members.hypotheses:
        lines.append('  hypothesis {0}: {1}'.format(
            hypothesis.name,
            'holds' if hypothesis.holds else 'fails',
        ))
    for note in members.notes:
        lines.append('  note: ' + note)
    lines.append('  poset: {0} elements, {1} relations, f-vector {2}'.format(
        len(poset),
        len(poset.get_relations()),
        tuple(nerve.f_vector),
    ))
    lines.extend('  H~' + line for line in nerve.profile.lines())
    return data, '\n'.join(lines)


def _fixed_output(workbench, args):
    result = workbench.fixed(args.group, args.prime, args.kind, args.subgroup)
    nerve = result.nerve
    data = {
        'group': args.group,
        'prime': args.prime,
        'kind': args.kind,
        'subgroup': args.subgroup,
        'elements': len(nerve.poset),
        'relations': len(nerve.poset.get_relations()),
        'f_vector': list(nerve.f_vector),
        'homology': nerve.profile.as_dict(),
        'verdict': result.verdict,
    }
    lines = [
        'fixed points of {0} on {1}_{2}({3}): {4} elements, {5} relations'.format(
            result.subgroup.describe(),
            args.kind,
            args.prime,
            args.group,
            len(nerve.poset),
            len(nerve.poset.get_relations()),
        ),
        '  f-vector {0}'.format(tuple(nerve.f_vector)),
    ]
    lines.extend('  H~' + line for line in nerve.profile.lines())
    lines.append('  verdict: ' + result.verdict)
    return data, '\n'.join(lines)


def _lefschetz_output(workbench, args):
    result = workbench.lefschetz(args.group, args.prime, args.kind)
    function = result.routes.fixed_point
    singular = result.singular
    rows = function.rows()
    data = {
        'group': args.group,
        'prime': args.prime,
        'kind': args.kind,
        'classes': [label for index, label, value in rows],
        'values': list(function.get_values()),
        'routes_agree': result.routes.equal,
        'identity_value': singular.identity_value,
        'nonzero_singular': [
            {'class': label, 'value': value}
            for index, label, value
            in singular.nonzero_classes
        ],
        'nonprojective': singular.nonprojective,
        'vertex_screen': [
            {
                'subgroup': perm.format_generators(entry.subgroup.get_generators()),
                'excluded': entry.excluded,
                'verdict': entry.verdict,
                'mod_p_acyclic': entry.mod_p_acyclic,
            }
            for entry
            in result.screen.entries
        ],
    }
    lines = ['reduced Lefschetz function of {0}_{1}({2})'.format(
        args.kind,
        args.prime,
        args.group,
    )]
    lines.extend('  {0}: {1}'.format(label, value) for index, label, value in rows)
    lines.append('  routes agree: {0}'.format(result.routes.equal))
    lines.append('  value at identity: {0}'.format(singular.identity_value))
    lines.append('  nonzero on p-singular classes: {0}'.format(
        ', '.join(label for index, label, value in singular.nonzero_classes) or 'none'
    ))
    for entry in result.screen.entries:
        lines.append('  {0}: {1}'.format(entry.subgroup.describe(), entry.statement()))
    return data, '\n'.join(lines)


def _classes_output(workbench, args):
    table = workbench.classes(args.group)
    rows = tuple(zip(
        table.get_labels(),
        table.get_representatives(),
        table.get_sizes(),
        table.get_centralizer_orders(),
    ))
    data = {
        'group': args.group,
        'classes': [
            {
                'label': label,
                'representative': perm.format_permutation(rep),
                'size': size,
                'centralizer_order': centralizer,
            }
            for label, rep, size, centralizer
            in rows
        ],
    }
    lines = ['{0}: {1} classes'.format(args.group, len(rows))]
    for label, rep, size, centralizer in rows:
        lines.append('  {0}  {1}  size {2}, centralizer {3}'.format(
            label,
            perm.format_permutation(rep),
            size,
            centralizer,
        ))
    return data, '\n'.join(lines)


def _classify_output(workbench, args):
    classification = workbench.classify(args.group, args.prime)
    data = {
        'group': args.group,
        'prime': args.prime,
        'local': classification.local,
        'parabolic': classification.parabolic,
        'local_witnesses': [
            perm.format_generators(witness.get_generators())
            for witness
            in classification.local_witnesses
        ],
        'parabolic_witnesses': [
            perm.format_generators(witness.get_generators())
            for witness
            in classification.parabolic_witnesses
        ],
    }
    lines = [
        '{0} at p={1}'.format(args.group, args.prime),
        '  local characteristic p: {0}'.format(classification.local),
        '  parabolic characteristic p: {0}'.format(classification.parabolic),
    ]
    for witness in classification.local_witnesses:
        lines.append('  witness: N_G({0}) lacks characteristic p'.format(
            witness.describe()
        ))
    return data, '\n'.join(lines)
