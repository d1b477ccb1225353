"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import json
import os
import pytest
from pcollect import collection
from pcollect import resource
from pcollect.collection import CollectionKind
from pcollect.errors import ConfigError, LibraryLookupError, OutOfScopeError, ParseError
from pcollect.pipeline import P3_4, T4_12
from pcollect.pipeline import verifier
from pcollect.topology import poset as posets
from pcollect.utility import DEFAULT_LIMITS

SUITE_TEXT = """
# Caps and output.
max_order = 100_000
format = json
workers = 2

[run]
group = sym5
prime = 2
theorem = T4.12
t = (1,2)

[run]
group = m12
prime = 3
theorem = T4.12
exploratory = yes
"""


def test_library_families():
    assert resource.library_lookup('sym(5)').order == 120
    assert resource.library_lookup('Sym 5').name == 'sym(5)'
    assert resource.library_lookup('alt6').order == 360
    assert resource.library_lookup('dihedral(6)').order == 12
    assert resource.library_lookup('sym1').generators == ()


@pytest.mark.parametrize('name', ['sym9', 'alt0', 'dihedral2', 'psl(2,7)', 'nope'])
def test_unknown_library_names(name):
    with pytest.raises(LibraryLookupError):
        resource.library_lookup(name)


@pytest.mark.parametrize('name', ['fi22', 'Co1', 'M24'])
def test_out_of_scope_names(name):
    with pytest.raises(OutOfScopeError):
        resource.library_lookup(name)


def test_library_names_list_the_families():
    names = resource.library_names()
    assert 'sym(n)' in names
    assert 'gl32' in names
    assert 'm12' in names


def test_named_groups(gl32):
    assert gl32.get_order() == 168
    assert gl32.describe() == 'gl32'
    assert resource.load_group('alt5').get_order() == 60


@pytest.mark.slow
@pytest.mark.parametrize('name, order', [('m11', 7920), ('m12', 95040)])
def test_mathieu_groups(name, order):
    assert resource.load_group(name).get_order() == order


def test_generator_text():
    assert resource.library_lookup('gl32').get_generator_text() == '(1,2,4)(3,6,5);(2,6)(3,7)'


def test_parse_subgroup(sym4):
    subgroup = resource.parse_subgroup(sym4, '(1,2);(3,4)')
    assert subgroup.get_order() == 4
    assert resource.parse_subgroup(sym4, '').is_trivial()
    with pytest.raises(ParseError):
        resource.parse_subgroup(sym4, '(1,9)')


def test_parse_config():
    config = resource.parse_config(SUITE_TEXT)
    assert config.limits.max_order == 100000
    assert config.limits.max_classes == DEFAULT_LIMITS.max_classes
    assert config.format == 'json'
    assert config.workers == 2
    assert config.out is None
    assert not config.timings
    assert len(config.runs) == 2
    first, second = config.runs
    assert first == resource.RunEntry('sym5', 2, T4_12, '(1,2)', False)
    assert second.exploratory
    assert second.t is None


def test_corpus_suite_requires_m11():
    corpus = os.path.join(os.path.dirname(__file__), '..', 'corpus.cfg')
    config = resource.load_config(corpus)
    exploratory = {run.group: run.exploratory for run in config.runs}
    assert exploratory['m11'] is False
    assert exploratory['m12'] is True
    assert not any(
        run.exploratory
        for run
        in config.runs
        if run.group != 'm12'
    )


def test_empty_config():
    config = resource.parse_config('# nothing to run\n')
    assert config.runs == ()
    assert config.format == 'text'
    assert config.limits == DEFAULT_LIMITS


@pytest.mark.parametrize('text', [
    'colour = blue\n',
    'max_order = many\n',
    'format = xml\n',
    '[runs]\n',
    'max_order\n',
    '[run]\ngroup = sym4\nprime = 2\n',
    '[run]\ngroup = sym4\nprime = 4\ntheorem = P3.4\n',
    '[run]\ngroup = sym4\nprime = 2\ntheorem = P9.9\n',
    '[run]\ngroup = sym4\nprime = 2\ntheorem = P3.4\nkind = hatB\n',
    '[run]\ngroup = sym4\nprime = 2\ntheorem = P3.4\nexploratory = maybe\n',
    '[run]\ngroup = nope\nprime = 2\ntheorem = P3.4\n',
])
def test_config_errors(text):
    with pytest.raises(ConfigError):
        resource.parse_config(text)


def test_out_of_scope_run():
    with pytest.raises(OutOfScopeError):
        resource.parse_config('[run]\ngroup = fi22\nprime = 2\ntheorem = T4.12\n')


def test_unknown_setting_lists_the_valid_names():
    with pytest.raises(ConfigError) as info:
        resource.parse_config('colour = blue\n')
    assert 'max_order' in str(info.value)
    assert 'timings' in str(info.value)


def test_load_config(tmp_path):
    path = tmp_path / 'suite.cfg'
    path.write_text('timings = true\n[run]\ngroup = sym4\nprime = 2\ntheorem = P3.4\n')
    config = resource.load_config(str(path))
    assert config.timings
    assert config.runs[0].theorem == P3_4


def test_poset_dump_reloads(sym4):
    poset = posets.build_poset(
        collection.build_collection(sym4, 2, CollectionKind.HAT_B)
    )
    text = resource.dump_poset(poset)
    assert text.startswith('# 4 elements, 3 comparabilities\n')
    assert text.count('\nE ') == 4
    assert text.count('\nR ') == 3
    reloaded = resource.load_poset_dump(text, sym4)
    assert reloaded.get_keys() == poset.get_keys()
    assert reloaded.get_relations() == poset.get_relations()


def test_tampered_dumps_are_rejected(sym4):
    poset = posets.build_poset(
        collection.build_collection(sym4, 2, CollectionKind.HAT_B)
    )
    text = resource.dump_poset(poset)
    with pytest.raises(ParseError):
        resource.load_poset_dump(text + 'R 1 2\n', sym4)
    with pytest.raises(ParseError):
        resource.load_poset_dump(text + 'X 1 2\n', sym4)
    with pytest.raises(ParseError):
        resource.load_poset_dump(text.replace('\nE ', '\nE 00', 1), sym4)


def test_render_reports(sym4):
    report = verifier.verify(P3_4, sym4, 2)
    data = json.loads(resource.render_reports((report,), 'json'))
    assert [entry['verdict'] for entry in data['reports']] == ['pass']
    text = resource.render_reports((report, report), 'text')
    assert text.count('P3.4 for sym(4)') == 2
    assert resource.render_reports((), 'json') == '{\n  "reports": []\n}\n'


def test_write_reports(tmp_path, sym4):
    report = verifier.verify(P3_4, sym4, 2)
    path = tmp_path / 'report.txt'
    resource.write_reports((report,), 'text', str(path))
    assert path.read_text().startswith('P3.4 for sym(4) at p=2')
