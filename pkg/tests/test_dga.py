# installed modules
import pytest

# project modules
from bilch.dga import DGA, DgaError, DgaSyntaxError, parse_dga, serialize, validate
from bilch.families import build_family, trefoil_dga


FAMILY_SPECS = ['trefoil'] + \
    ['trefoil-link k={}'.format(k) for k in range(-2, 4)] + \
    ['hopf n={} k={}'.format(n, k) for n in range(1, 5) for k in range(-2, 4)]

TREFOIL_TEXT = """
# right handed trefoil, max tb
dim 1
gen a1 1
gen a2 1
gen b1 0
gen b2 0
gen b3 0
d a1 = 1 + b1 + b3 + b1*b2*b3
d a2 = 1 + b1 + b3 + b3*b2*b1
d b1 = 0
d b2 = 0
d b3 = 0
"""


def test_parse_trefoil_matches_family():
    dga = parse_dga(TREFOIL_TEXT)
    assert dga == trefoil_dga()
    assert [g.degree for g in dga.generators] == [1, 1, 0, 0, 0]
    assert dga.n == 1


def test_forward_references_and_components():
    dga = parse_dga('dim 2\n'
                    'd x = y\n'
                    'gen x 1 @left\n'
                    'gen y 0 @right\n'
                    'd y = 0\n')
    assert dga.d('x') == frozenset([(1, )])
    assert dga.generators[0].component == 'left'


def test_repeated_words_cancel():
    dga = parse_dga('dim 1\ngen a 1\ngen b 0\nd a = b + b + 1\nd b = 0\n')
    assert dga.d('a') == frozenset([()])


def test_maslov_header():
    assert len(parse_dga('dim 1\nmaslov 0\ngen a 0\nd a = 0\n')) == 1
    with pytest.raises(DgaSyntaxError) as e:
        parse_dga('dim 1\nmaslov 2\ngen a 0\nd a = 0\n')
    assert e.value.line == 2


@pytest.mark.parametrize('text, line', [
    ('gen a 1\nd a = 0\n', 1),
    ('dim 0\n', 1),
    ('dim 1\ndim 2\n', 2),
    ('dim 1\ngen a 1\ngen a 0\nd a = 0\n', 3),
    ('dim 1\ngen a 1\nd a = 0\nd a = 1\n', 4),
    ('dim 1\ngen a 1\ngen b 0\nd a = c\nd b = 0\n', 4),
    ('dim 1\ngen a 1\ngen b 0\nd a = b\n', 3),
    ('dim 1\ngen a 1\nd a = 1 +\n', 3),
    ('dim 1\ngen a 1\ngen b 0\nd a = b**b\nd b = 0\n', 4),
    ('dim 1\ngen a one\nd a = 0\n', 2),
    ('dim 1\nwhatever\n', 2),
    ('dim 1\ngen a 1\nd b = 0\nd a = 0\n', 3),
])
def test_syntax_errors_carry_line(text, line):
    with pytest.raises(DgaSyntaxError) as e:
        parse_dga(text)
    assert e.value.line == line
    assert str(e.value).startswith('line {}, column'.format(line))


def test_unknown_generator_column():
    with pytest.raises(DgaSyntaxError) as e:
        parse_dga('dim 1\ngen a 1\ngen b 0\nd a = b + zz\nd b = 0\n')
    assert e.value.column == 11
    assert 'zz' in str(e.value)


@pytest.mark.parametrize('spec', FAMILY_SPECS)
def test_serialize_round_trip(spec):
    dga = build_family(spec)
    text = serialize(dga)
    assert text.startswith('dim {}\n'.format(dga.n))
    assert parse_dga(text) == dga
    assert serialize(parse_dga(text)) == text


def test_round_trip_keeps_components():
    text = serialize(build_family('trefoil-link k=1'))
    assert ' @mixed\n' in text
    components = {gen.component for gen in parse_dga(text).generators}
    assert components == {'trefoil', 'unknot', 'mixed'}


def test_from_terms_errors():
    with pytest.raises(DgaError):
        DGA.from_terms(1, [('a', 1)], {'b': [()]})
    with pytest.raises(DgaError):
        DGA.from_terms(1, [('a', 1)], {'a': [('b', )]})
    with pytest.raises(DgaError):
        DGA.from_terms(1, [('a', 1), ('a', 0)], {})
    with pytest.raises(DgaError):
        DGA(1, [('a', 1)], [])


def test_leibniz_rule():
    dga = DGA.from_terms(1, [('x', 1), ('y', 0), ('z', 0)],
                         {'x': [('y', )], 'y': [()]})
    x, y, z = range(3)
    # d(x*z*y) = y*z*y + x*z*1
    assert dga.apply(frozenset([(x, z, y)])) == frozenset([(y, z, y), (x, z)])


def test_format_poly():
    dga = trefoil_dga()
    assert dga.format_poly(dga.d('a1')) == '1 + b1 + b3 + b1*b2*b3'
    assert dga.format_poly(frozenset()) == '0'


@pytest.mark.parametrize('spec', FAMILY_SPECS)
def test_validate_families(spec):
    report = validate(build_family(spec))
    assert report.is_valid, report.to_text()
    assert report.to_text() == 'valid'


def test_validate_reports_both_kinds():
    dga = DGA.from_terms(1, [('a', 1), ('b', 0), ('c', 0)],
                         {'a': [('b', )], 'b': [('c', )]})
    report = validate(dga)
    assert [(i.kind, i.generator) for i in report.issues] == [
        ('degree', 'b'), ('d_squared', 'a')]
    assert not report.is_valid
    assert len(report) == 2
    assert report.to_dict()['valid'] is False
    assert 'd(d(a)) = c' in report.to_text()


def test_index_unknown_name():
    with pytest.raises(DgaError):
        trefoil_dga().index('nope')
