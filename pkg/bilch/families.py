"""Built-in DGAs and chain complexes: the trefoil, the trefoil with a
linked unknot, the Hopf link, the 2N-copy of the unknot, the note
subcomplex, and the chain-level model of a connected sum."""

# built in modules
import re
import collections

# project modules
from .augment import Augmentation, AugmentationError, ChainComplex
from .core import parity
from .dga import DGA


class FamilyError(RuntimeError):
    """Error raised for invalid family parameters or connected sums"""

    def __init__(self, *args, **kwargs):
        super(FamilyError, self).__init__(*args, **kwargs)


# values on (b1, b2, b3), numbered as in the usual table of the five
# augmentations of the max-tb right handed trefoil
TREFOIL_AUGMENTATIONS = collections.OrderedDict([
    (1, (1, 1, 1)),
    (2, (1, 0, 0)),
    (3, (1, 1, 0)),
    (4, (0, 0, 1)),
    (5, (0, 1, 1)),
])
TREFOIL_LEFT = (1, 3)
TREFOIL_RIGHT = (2, 4, 5)

# symbolic lengths: l for the unknot chord, e the shift between the
# copies, d the Morse perturbation (d << e << l)
HOPF_CHORD_LENGTHS = collections.OrderedDict([
    ('c1_1', 'l'),
    ('c2_2', 'l'),
    ('c1_2', 'l+e'),
    ('c2_1', 'l-e'),
    ('m1_2', 'e-d'),
    ('M1_2', 'e+d'),
])


def _trefoil_terms(component=None):
    generators = [('a1', 1, component), ('a2', 1, component),
                  ('b1', 0, component), ('b2', 0, component),
                  ('b3', 0, component)]
    differential = {
        'a1': [(), ('b1', ), ('b3', ), ('b1', 'b2', 'b3')],
        'a2': [(), ('b1', ), ('b3', ), ('b3', 'b2', 'b1')],
    }
    return generators, differential


def trefoil_dga():
    generators, differential = _trefoil_terms()
    return DGA.from_terms(1, generators, differential)


def trefoil_link_dga(shift_k):
    """The trefoil with an unknot whose Maslov potential is shifted by
    shift_k: new generators a3, c1, c2, d1, d2"""
    generators, differential = _trefoil_terms('trefoil')
    generators += [
        ('a3', 1, 'unknot'),
        ('c1', shift_k - 1, 'mixed'),
        ('c2', shift_k, 'mixed'),
        ('d1', 1 - shift_k, 'mixed'),
        ('d2', -shift_k, 'mixed'),
    ]
    differential['c2'] = [('c1', ), ('b2', 'b1', 'c1')]
    differential['d1'] = [('d2', ), ('d2', 'b2', 'b1')]
    return DGA.from_terms(1, generators, differential)


def trefoil_augmentations(dga):
    """The five trefoil augmentations on dga (the trefoil or the trefoil
    link, extended by zero), keyed by their usual numbers"""
    return collections.OrderedDict(
        (number, Augmentation(dga, dict(zip(('b1', 'b2', 'b3'), bits))))
        for number, bits in TREFOIL_AUGMENTATIONS.items())


def trefoil_link_augmentations(dga):
    """(left, right) lists of designated augmentations of the trefoil
    link: left from TREFOIL_LEFT, right from TREFOIL_RIGHT"""
    augs = trefoil_augmentations(dga)
    return ([augs[i] for i in TREFOIL_LEFT],
            [augs[i] for i in TREFOIL_RIGHT])


def hopf_dga(n, k):
    """2-copy of the standard unknot in dimension n, the upper copy with
    Maslov potential shifted by k"""
    if n < 1:
        raise FamilyError('n must be at least 1 (got {})'.format(n))
    generators = [
        ('c1_1', n, 'L1'),
        ('c2_2', n, 'L2'),
        ('c1_2', n + k, 'mixed'),
        ('c2_1', n - k, 'mixed'),
        ('m1_2', k - 1, 'mixed'),
        ('M1_2', n + k - 1, 'mixed'),
    ]
    differential = {
        'c1_2': [('M1_2', ), ('m1_2', 'c1_1'), ('c2_2', 'm1_2')],
        'c1_1': [('c2_1', 'm1_2')],
        'c2_2': [('m1_2', 'c2_1')],
    }
    return DGA.from_terms(n, generators, differential)


def hopf_augmentations(dga):
    """(eps_L, eps_R): m1_2 sent to 0 and to 1, every other chord to 0"""
    try:
        return (Augmentation(dga, {'m1_2': 0}),
                Augmentation(dga, {'m1_2': 1}))
    except AugmentationError as e:
        raise FamilyError('no designated Hopf augmentations: {}'.format(e))


def _c(i, j):
    return 'c{}_{}'.format(i, j)


def multicopy_complex(N, n):
    """Bilinearized complex of the 2N-copy of the unknot for the
    augmentations augmenting m_(i,i+1) for even i (left) and odd i
    (right).

    Generators with an index 0 or 2N+1, and m_(i,i), M_(i,i), are zero.
    """
    if N < 1:
        raise FamilyError('N must be at least 1 (got {})'.format(N))
    if n < 1:
        raise FamilyError('n must be at least 1 (got {})'.format(n))
    size = 2 * N
    indices = range(1, size + 1)
    upper = [(i, j) for i in indices for j in indices if i < j]

    basis = [(_c(i, i), n) for i in indices]
    basis += [(_c(i, j), n + j - i) for i, j in upper]
    basis += [(_c(j, i), n - j + i) for i, j in upper]
    basis += [('m{}_{}'.format(i, j), j - i - 1) for i, j in upper]
    basis += [('M{}_{}'.format(i, j), n + j - i - 1) for i, j in upper]
    names = set(name for name, _ in basis)

    def keep(terms):
        return [name for coefficient, name in terms
                if coefficient and name in names]

    boundary = {}
    for i in indices:
        boundary[_c(i, i)] = keep([(parity(i), _c(i, i - 1)),
                                   (parity(i), _c(i + 1, i))])
    for i, j in upper:
        boundary[_c(i, j)] = keep([(1, 'M{}_{}'.format(i, j)),
                                   (parity(j), _c(i, j - 1)),
                                   (parity(i), _c(i + 1, j))])
        boundary[_c(j, i)] = keep([(parity(i), _c(j, i - 1)),
                                   (parity(j), _c(j + 1, i))])
        for kind in ('m', 'M'):
            boundary['{}{}_{}'.format(kind, i, j)] = keep([
                (parity(j), '{}{}_{}'.format(kind, i, j - 1)),
                (parity(i), '{}{}_{}'.format(kind, i + 1, j))])

    return ChainComplex(n, basis, boundary)


def note_subcomplex(k, m, n):
    """Subcomplex of the chords between a note component of k chords,
    with Maslov shift m, and the component labelled 0"""
    if k < 1:
        raise FamilyError('k must be at least 1 (got {})'.format(k))
    if n < 1:
        raise FamilyError('n must be at least 1 (got {})'.format(n))
    chords = range(1, k + 1)

    basis = [('c0_0', n)]
    basis += [('c0_{}'.format(j), n + j - m) for j in chords]
    basis += [('c{}_0'.format(j), n - j + m) for j in chords]
    basis += [('m0_{}'.format(j), j - m - 1) for j in chords]
    basis += [('M0_{}'.format(j), n + j - m - 1) for j in chords]

    boundary = {}
    for j in chords:
        odd = parity(j)
        boundary['c0_{}'.format(j)] = ['M0_{}'.format(j)] + (
            ['c0_{}'.format(j - 1)] if odd and j > 1 else [])
        boundary['c{}_0'.format(j)] = (
            ['c{}_0'.format(j + 1)] if odd and j < k else [])
        for kind in ('m', 'M'):
            boundary['{}0_{}'.format(kind, j)] = (
                ['{}0_{}'.format(kind, j - 1)] if odd and j > 1 else [])

    return ChainComplex(n, basis, boundary)


def attach_s(cx, n, rho, name='s'):
    """Chain-level connected sum: a new cycle s of degree n-1 and, for
    every degree n element x with rho(x) = 1, the term s in d(x).

    Args:
        cx (ChainComplex): the complex.
        n (int): dimension.
        rho (iterable): the degree n basis names where rho is 1.
        name (str): name of the new generator.

    Raises:
        FamilyError: rho mentions an element that is not of degree n,
            name is taken, or rho does not vanish on the boundaries of
            degree n+1 elements.
    """
    rho = set(rho)
    degree_n = set(cx.basis[i][0] for i in cx.in_degree(n))
    stray = sorted(rho - degree_n)
    if stray:
        raise FamilyError('rho is only defined on degree {} elements, not '
                          'on {}'.format(n, ', '.join(stray)))
    if name in cx.names:
        raise FamilyError('"{}" is already a basis element'.format(name))

    for i in cx.in_degree(n + 1):
        y = cx.basis[i][0]
        if len(rho.intersection(cx.boundary_of(y))) % 2:
            raise FamilyError(
                'rho does not vanish on d({}); attaching {} would break '
                'd∘d = 0'.format(y, name))

    boundary = cx.boundary_map()
    for x in rho:
        boundary[x] = list(boundary[x]) + [name]
    return ChainComplex(cx.n, list(cx.basis) + [(name, n - 1)], boundary)


def realization_complex(plan):
    """Chain model of a realization plan: for every pair, the note
    subcomplex with its fundamental class c0_0 removed by a connected
    sum, plus cycles spelling q."""
    n = plan.n
    basis = []
    for e, c in plan.q.items():
        basis += [('q{}_{}'.format(e, i), e)
                  for i in range(c)]
    total = ChainComplex(n, basis)
    for index, pair in enumerate(plan.pairs):
        note = attach_s(note_subcomplex(pair.k, pair.m, n), n, ['c0_0'])
        total = total.direct_sum(note.renamed('p{}_'.format(index)))
    return total


FamilySpec = collections.namedtuple('FamilySpec', ['family', 'params'])

FAMILY_PARAMETERS = collections.OrderedDict([
    ('trefoil', ()),
    ('trefoil-link', ('k', )),
    ('hopf', ('n', 'k')),
    ('multicopy', ('N', 'n')),
    ('note', ('k', 'm', 'n')),
])

PARAM_RE = re.compile(r'^([A-Za-z]+)=([+-]?\d+)$')


def parse_family_spec(tokens):
    """Reads a family name followed by name=<int> parameters, e.g.
    ["hopf", "n=2", "k=1"].

    Raises:
        FamilyError: unknown family, unknown/missing/repeated parameter
            or non-integer value.
    """
    if isinstance(tokens, str):
        tokens = tokens.split()
    if not tokens:
        raise FamilyError('missing family name (one of {})'.format(
            ', '.join(FAMILY_PARAMETERS)))
    family, rest = tokens[0], tokens[1:]
    if family not in FAMILY_PARAMETERS:
        raise FamilyError('unknown family "{}" (one of {})'.format(
            family, ', '.join(FAMILY_PARAMETERS)))

    expected = FAMILY_PARAMETERS[family]
    params = {}
    for token in rest:
        match = PARAM_RE.match(token)
        if match is None:
            raise FamilyError('cannot read "{}" as name=<int>'.format(token))
        key, value = match.group(1), int(match.group(2))
        if key not in expected:
            raise FamilyError('family "{}" has no parameter "{}"'.format(
                family, key))
        if key in params:
            raise FamilyError('parameter "{}" given twice'.format(key))
        params[key] = value

    missing = [key for key in expected if key not in params]
    if missing:
        raise FamilyError('family "{}" needs {}'.format(
            family, ', '.join('{}=<int>'.format(key) for key in missing)))

    return FamilySpec(family, tuple((key, params[key]) for key in expected))


def build_family(spec):
    """Builds the DGA (trefoil, trefoil-link, hopf) or ChainComplex
    (multicopy, note) described by spec"""
    if isinstance(spec, (str, list, tuple)) and not isinstance(
            spec, FamilySpec):
        spec = parse_family_spec(spec)
    params = dict(spec.params)

    if spec.family == 'trefoil':
        return trefoil_dga()
    if spec.family == 'trefoil-link':
        return trefoil_link_dga(params['k'])
    if spec.family == 'hopf':
        return hopf_dga(params['n'], params['k'])
    if spec.family == 'multicopy':
        return multicopy_complex(params['N'], params['n'])
    if spec.family == 'note':
        return note_subcomplex(params['k'], params['m'], params['n'])
    raise FamilyError('unknown family "{}"'.format(spec.family))
