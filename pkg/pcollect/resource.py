"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import json
import logging
import math
import re
from dataclasses import dataclass, field
from sympy import isprime
from pcollect.errors import (
    ConfigError,
    LibraryLookupError,
    OutOfScopeError,
    ParseError,
    VerificationError,
)
from pcollect.group import GENERATOR_SEPARATOR
from pcollect.group import perm
from pcollect.group.handle import SubgroupHandle, build_group
from pcollect.pipeline import THEOREM_IDS
from pcollect.topology.poset import GPoset
from pcollect.utility import DEFAULT_LIMITS, Limits


logger = logging.getLogger(__name__)

# Largest n for the sym(n) and alt(n) families.
MAX_FAMILY_DEGREE = 8

# Named groups beyond desk scale.
OUT_OF_SCOPE = ('fi22', 'co1', 'co2', 'co3', 'hn', 'j2', 'j3', 'mcl', 'm22', 'm23', 'm24')

FAMILY_PATTERN = re.compile(r'^(sym|alt|dihedral)\(?(\d+)\)?$')

OUTPUT_FORMATS = ('text', 'json')
SETTING_KEYS = ('format', 'out', 'workers', 'timings')
RUN_KEYS = ('group', 'prime', 'theorem', 't', 'exploratory')

# Dump line tags.
DUMP_ELEMENT = 'E'
DUMP_RELATION = 'R'


@dataclass(frozen=True)
class GroupLibraryEntry:
    name: str
    degree: int
    generators: tuple
    order: int
    provenance: str = ''

    def get_generator_text(self):
        return GENERATOR_SEPARATOR.join(self.generators)


@dataclass(frozen=True)
class RunEntry:
    group: str
    prime: int
    theorem: str
    t: str = None
    exploratory: bool = False


@dataclass
class SuiteConfig:
    limits: Limits = DEFAULT_LIMITS
    format: str = 'text'
    out: str = None
    workers: int = 0
    timings: bool = False
    runs: tuple = field(default_factory=tuple)


_NAMED = {
    'gl32': GroupLibraryEntry(
        'gl32',
        7,
        ('(1,2,4)(3,6,5)', '(2,6)(3,7)'),
        168,
        'GL(3,2) acting on the 7 points of the Fano plane',
    ),
    'm11': GroupLibraryEntry(
        'm11',
        11,
        ('(1,2,3,4,5,6,7,8,9,10,11)', '(3,7,11,8)(4,10,5,6)'),
        7920,
        'Mathieu group M11, standard permutation generators',
    ),
    'm12': GroupLibraryEntry(
        'm12',
        12,
        (
            '(1,2,3,4,5,6,7,8,9,10,11)',
            '(3,7,11,8)(4,10,5,6)',
            '(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)',
        ),
        95040,
        'Mathieu group M12, standard permutation generators',
    ),
}


# Group library.

def library_names():
    return (
        tuple('{0}(n)'.format(family) for family in ('sym', 'alt', 'dihedral'))
        + tuple(sorted(_NAMED))
    )


def library_lookup(name):
    key = name.strip().lower().replace(' ', '')
    if key in _NAMED:
        return _NAMED[key]
    if key in OUT_OF_SCOPE:
        raise OutOfScopeError(
            '{0} is beyond desk scale; groups of this size are out of scope'.format(
                name
            )
        )
    match = FAMILY_PATTERN.match(key)
    if match is None:
        raise LibraryLookupError('unknown group {0!r}; valid names: {1}'.format(
            name,
            ', '.join(library_names()),
        ))
    family, n = match.group(1), int(match.group(2))
    if family == 'dihedral':
        return _dihedral(n, name)
    if not 1 <= n <= MAX_FAMILY_DEGREE:
        raise LibraryLookupError(
            '{0}(n) needs 1 <= n <= {1}, got {2}'.format(family, MAX_FAMILY_DEGREE, n)
        )
    if family == 'sym':
        return _symmetric(n)
    return _alternating(n)


def load_group(name, limits=None):
    entry = library_lookup(name)
    group = build_group(entry.degree, entry.generators, name=entry.name, limits=limits)
    if group.get_order() != entry.order:
        raise VerificationError('{0} has order {1}, documented {2}'.format(
            entry.name,
            group.get_order(),
            entry.order,
        ))
    return group


def parse_subgroup(group, text):
    return SubgroupHandle(
        group,
        perm.parse_generators(text, group.get_degree()),
        check=True,
    )


def _symmetric(n):
    if n == 1:
        generators = ()
    elif n == 2:
        generators = ('(1,2)',)
    else:
        generators = (_cycle(range(1, n + 1)), '(1,2)')
    return GroupLibraryEntry(
        'sym({0})'.format(n),
        n,
        generators,
        math.factorial(n),
        'symmetric group on {0} points'.format(n),
    )


def _alternating(n):
    return GroupLibraryEntry(
        'alt({0})'.format(n),
        n,
        tuple(_cycle((1, 2, point)) for point in range(3, n + 1)),
        max(1, math.factorial(n) // 2),
        'alternating group on {0} points'.format(n),
    )


def _dihedral(n, name):
    if n < 3:
        raise LibraryLookupError(
            'dihedral(n) needs n >= 3, got {0!r}'.format(name)
        )
    reflection = ''.join(
        _cycle((point, n + 1 - point))
        for point
        in range(1, n // 2 + 1)
    )
    return GroupLibraryEntry(
        'dihedral({0})'.format(n),
        n,
        (_cycle(range(1, n + 1)), reflection),
        2 * n,
        'symmetries of a regular {0}-gon'.format(n),
    )


def _cycle(points):
    return '(' + ','.join(str(point) for point in points) + ')'


# Configuration.

def load_config(config_filename, limits=DEFAULT_LIMITS):
    with open(config_filename, 'r') as f_in:
        return parse_config(f_in.read(), limits)


def parse_config(text, limits=DEFAULT_LIMITS):
    settings = {}
    changes = {}
    runs = []
    block = None
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split('#', 1)[0].strip()
        if not line:
            continue

        # Section header.
        if line.startswith('['):
            if line != '[run]':
                raise ConfigError('line {0}: unknown section {1}; valid: [run]'.format(
                    number,
                    line,
                ))
            if block is not None:
                runs.append(_run_entry(block, number))
            block = {}
            continue

        if '=' not in line:
            raise ConfigError('line {0}: expected key = value'.format(number))
        key, value = (part.strip() for part in line.split('=', 1))
        if block is not None:
            if key not in RUN_KEYS:
                raise ConfigError('line {0}: unknown run key {1!r}; valid: {2}'.format(
                    number,
                    key,
                    ', '.join(RUN_KEYS),
                ))
            block[key] = value
        elif key in Limits.field_names():
            changes[key] = _integer(key, value, number)
        elif key in SETTING_KEYS:
            settings[key] = value
        else:
            raise ConfigError('line {0}: unknown setting {1!r}; valid: {2}'.format(
                number,
                key,
                ', '.join(Limits.field_names() + SETTING_KEYS),
            ))
    if block is not None:
        runs.append(_run_entry(block, 'end'))

    config = SuiteConfig(
        limits=limits.updated(**changes),
        format=settings.get('format', 'text'),
        out=settings.get('out'),
        workers=_integer('workers', settings.get('workers', '0'), 'settings'),
        timings=_boolean('timings', settings.get('timings', 'false')),
        runs=tuple(runs),
    )
    if config.format not in OUTPUT_FORMATS:
        raise ConfigError('unknown format {0!r}; valid: {1}'.format(
            config.format,
            ', '.join(OUTPUT_FORMATS),
        ))
    logger.info('config: %d runs', len(config.runs))
    return config


def _run_entry(block, number):
    for key in ('group', 'prime', 'theorem'):
        if key not in block:
            raise ConfigError('run ending at line {0}: missing {1!r}'.format(number, key))

    # Fails on unknown or out-of-scope names.
    library_lookup(block['group'])
    prime = _integer('prime', block['prime'], number)
    if not isprime(prime):
        raise ConfigError('run ending at line {0}: {1} is not prime'.format(number, prime))
    if block['theorem'] not in THEOREM_IDS:
        raise ConfigError('unknown theorem {0!r}; valid ids: {1}'.format(
            block['theorem'],
            ', '.join(THEOREM_IDS),
        ))
    return RunEntry(
        group=block['group'],
        prime=prime,
        theorem=block['theorem'],
        t=block.get('t'),
        exploratory=_boolean('exploratory', block.get('exploratory', 'false')),
    )


def _integer(key, value, number):
    try:
        return int(value.replace('_', ''))
    except ValueError:
        raise ConfigError('line {0}: {1} needs an integer, got {2!r}'.format(
            number,
            key,
            value,
        ))


def _boolean(key, value):
    lowered = value.lower()
    if lowered in ('1', 'true', 'yes', 'on'):
        return True
    if lowered in ('0', 'false', 'no', 'off'):
        return False
    raise ConfigError('{0} needs true or false, got {1!r}'.format(key, value))


# Poset dumps.

def dump_poset(poset):
    lines = ['# {0} elements, {1} comparabilities'.format(
        len(poset),
        len(poset.get_relations()),
    )]
    for element in poset.get_elements():
        lines.append('{0} {1} {2}'.format(
            DUMP_ELEMENT,
            element.get_key().hex(),
            perm.format_generators(element.get_generators()) or '()',
        ))
    for lower, upper in poset.get_relations():
        lines.append('{0} {1} {2}'.format(DUMP_RELATION, lower, upper))
    return '\n'.join(lines) + '\n'


def load_poset_dump(text, group):
    elements = []
    relations = []
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith('#'):
            continue
        words = line.split(None, 2)
        if words[0] == DUMP_ELEMENT and len(words) == 3:
            subgroup = parse_subgroup(group, words[2])
            if subgroup.get_key().hex() != words[1]:
                raise ParseError('line {0}: key does not match the generators'.format(
                    number
                ))
            elements.append(subgroup)
        elif words[0] == DUMP_RELATION and len(words) == 3:
            try:
                relations.append((int(words[1]), int(words[2])))
            except ValueError:
                raise ParseError('line {0}: malformed relation'.format(number))
        else:
            raise ParseError('line {0}: unknown record {1!r}'.format(number, words[0]))

    poset = GPoset(elements, group)
    if len(poset) != len(elements):
        raise ParseError('dump repeats an element')
    if tuple(sorted(relations)) != poset.get_relations():
        raise ParseError('dumped comparabilities do not match the elements')
    return poset


# Reports.

def render_reports(reports, output_format):
    if output_format == 'json':
        return json.dumps(
            {'reports': [report.to_dict() for report in reports]},
            indent=2,
            sort_keys=True,
        ) + '\n'
    return '\n\n'.join(report.to_text() for report in reports) + '\n'


def write_reports(reports, output_format, out_filename):
    text = render_reports(reports, output_format)
    with open(out_filename, 'w') as f_out:
        f_out.write(text)
    logger.info('wrote %d reports to %s', len(reports), out_filename)
