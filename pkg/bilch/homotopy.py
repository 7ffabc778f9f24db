"""DGA homotopy of augmentations.

Two augmentations eps1, eps2 are homotopic when eps1 - eps2 = K∘d for an
(eps1, eps2)-derivation K of degree +1. Since GF(2) sits in degree 0, K
is determined by a functional kbar on the degree -1 generators and the
condition reduces to kbar(d^{eps1,eps2} c) = (eps1 - eps2)(c) on the
degree 0 generators c: one linear system over GF(2).
"""

# built in modules
import json
import itertools

# installed modules
import numpy as np

# project modules
from .augment import bilinearize, enumerate_augmentations
from .complex import betti, poincare
from .config import normalize_method
from .core import UnionFind
from .gf2 import BitMatrix, nullspace_basis, solve
from .meta import SILENT
from .multiprocessing import pool_map


class HomotopyError(RuntimeError):
    """Error raised when the homotopy decision methods are inconsistent
    or the input is not a connected Legendrian DGA"""

    def __init__(self, *args, **kwargs):
        super(HomotopyError, self).__init__(*args, **kwargs)


class HomotopyWitness(object):
    """kbar: degree -1 generator name -> GF(2) value"""

    def __init__(self, kbar):
        self.kbar = dict(kbar)

    def _kbar_vector(self, dga):
        return [self.kbar.get(g.name, 0) if g.degree == -1 else 0
                for g in dga.generators]

    def derivation_value(self, dga, eps1, eps2, word):
        """K(a1...am) = sum over i of eps1(a1...a(i-1)) kbar(ai)
        eps2(a(i+1)...am)"""
        kbar = self._kbar_vector(dga)
        total = 0
        for pos, gen in enumerate(word):
            if kbar[gen] and eps1.of_word(word[:pos]) and \
                    eps2.of_word(word[pos + 1:]):
                total ^= 1
        return total

    def derivation_of_poly(self, dga, eps1, eps2, poly):
        total = 0
        for word in poly:
            total ^= self.derivation_value(dga, eps1, eps2, word)
        return total

    def verify(self, dga, eps1, eps2):
        """Checks eps1 - eps2 = K∘d on every generator"""
        for i, poly in enumerate(dga.differential):
            if (eps1(i) ^ eps2(i)) != self.derivation_of_poly(
                    dga, eps1, eps2, poly):
                return False
        return True

    def to_dict(self):
        return {name: int(bit) for name, bit in sorted(self.kbar.items())}

    def __eq__(self, other):
        if not isinstance(other, HomotopyWitness):
            return NotImplemented
        return self.kbar == other.kbar

    def __repr__(self):
        return 'HomotopyWitness({})'.format(self.to_dict())


def _difference(dga, eps1, eps2, indices):
    return np.array([eps1(i) ^ eps2(i) for i in indices], dtype=np.uint8)


def homotopy_witness(dga, eps1, eps2):
    """A functional kbar with eps1 - eps2 = kbar∘d^{eps1,eps2}, or None.

    Raises:
        AugmentationError: eps1 or eps2 is not an augmentation.
    """
    cx = bilinearize(dga, eps1, eps2)
    minus_one = cx.in_degree(-1)
    delta = _difference(dga, eps1, eps2, cx.in_degree(0))

    solution = solve(cx.matrix(0).transpose(), delta)
    if solution is None:
        return None
    return HomotopyWitness({cx.basis[i][0]: int(bit)
                            for i, bit in zip(minus_one, solution)})


def tau0_rank(dga, eps1, eps2):
    """Rank (0 or 1) of the map induced by eps1 - eps2 on degree 0
    homology of the bilinearized complex"""
    cx = bilinearize(dga, eps1, eps2)
    delta = _difference(dga, eps1, eps2, cx.in_degree(0))
    cycles = BitMatrix.from_rows(nullspace_basis(cx.matrix(0)), len(delta))
    return int(cycles.dot(delta).any())


def dimension_defect(dga, eps1, eps2):
    """dim H_n(eps2, eps1) - dim H_{-1}(eps1, eps2)"""
    swapped = betti(bilinearize(dga, eps2, eps1))
    straight = betti(bilinearize(dga, eps1, eps2))
    return swapped.get(dga.n, 0) - straight.get(-1, 0)


def homotopic_by_dimension(dga, eps1, eps2):
    """Dimension criterion for connected Legendrians: homotopic iff the
    defect is 1, not homotopic iff it is 0.

    Raises:
        HomotopyError: any other defect (non-geometric input).
    """
    defect = dimension_defect(dga, eps1, eps2)
    if defect not in (0, 1):
        raise HomotopyError(
            'dimension defect {} for ({}) and ({}) is neither 0 nor 1: '
            'non-geometric input (not a connected Legendrian DGA)'.format(
                defect, eps1.label(), eps2.label()))
    return defect == 1


def decide_pair(dga, eps1, eps2, method):
    """Homotopy decision(s) for one ordered pair.

    Returns:
        decisions (dict): method name -> bool, for "witness" and/or
            "dimension".
    """
    method = normalize_method(method)
    out = {}
    if method in ('witness', 'cross_check'):
        out['witness'] = homotopy_witness(dga, eps1, eps2) is not None
    if method in ('dimension', 'cross_check'):
        out['dimension'] = homotopic_by_dimension(dga, eps1, eps2)
    return out


class HomotopyPartition(object):
    """Homotopy classes of an augmentation list.

    classes are tuples of augmentation indices ordered by smallest
    member; decisions maps every ordered pair (i, j), i != j, to the
    per-method verdicts.
    """

    def __init__(self, augmentations, classes, method, decisions):
        self.augmentations = list(augmentations)
        self.classes = [tuple(c) for c in classes]
        self.method = method
        self.decisions = dict(decisions)

    def class_of(self, index):
        for c in self.classes:
            if index in c:
                return c
        raise IndexError('augmentation {} out of range'.format(index))

    def to_dict(self):
        return {
            'schema': 1,
            'method': self.method,
            'augmentations': [e.label() for e in self.augmentations],
            'classes': [list(c) for c in self.classes],
            'method_agreement': [
                {'pair': [i, j], 'decisions': dict(sorted(d.items()))}
                for (i, j), d in sorted(self.decisions.items())
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self):
        lines = ['{} class(es) ({})'.format(len(self.classes), self.method)]
        for c in self.classes:
            lines.append('{{{}}}: {}'.format(
                ', '.join(str(i) for i in c),
                ' ; '.join(self.augmentations[i].label() for i in c)))
        return '\n'.join(lines)


def homotopy_classes(dga, method='witness', cap=None, workers=1,
                     printer=None, augmentations=None):
    """Partitions the augmentations of dga into homotopy classes.

    Every ordered pair is decided (with pool_map when workers > 1); the
    relation must come out symmetric and transitive.

    Raises:
        AugmentationError: cap exceeded.
        HomotopyError: the two methods disagree under cross_check, or the
            observed relation is not symmetric or not transitive.
    """
    method = normalize_method(method)
    printer = SILENT if printer is None else printer
    if augmentations is None:
        augmentations = enumerate_augmentations(dga, cap=cap, printer=printer)

    pairs = [(i, j) for i, j in itertools.permutations(
        range(len(augmentations)), 2)]
    results = pool_map(
        decide_pair,
        [(dga, augmentations[i], augmentations[j], method) for i, j in pairs],
        workers=workers)
    decisions = dict(zip(pairs, results))
    printer('{} ordered pair(s) decided with {}'.format(len(pairs), method))

    related = {}
    for (i, j), verdicts in decisions.items():
        if len(set(verdicts.values())) > 1:
            raise HomotopyError(
                'methods disagree on pair ({}, {}): {}'.format(
                    i, j, ', '.join('{}={}'.format(k, v)
                                    for k, v in sorted(verdicts.items()))))
        related[(i, j)] = next(iter(verdicts.values()))

    for (i, j), value in related.items():
        if value != related[(j, i)]:
            raise HomotopyError(
                'relation is not symmetric on ({}, {})'.format(i, j))

    uf = UnionFind(len(augmentations))
    for (i, j), value in related.items():
        if value:
            uf.union(i, j)
    classes = uf.get_clusters()

    for cluster in classes:
        for i, j in itertools.combinations(cluster, 2):
            if not related[(i, j)]:
                raise HomotopyError(
                    'relation is not transitive: {} and {} are linked '
                    'through other augmentations but not homotopic'.format(
                        i, j))

    return HomotopyPartition(augmentations, classes, method, decisions)


def _table_cell(dga, eps1, eps2):
    return poincare(bilinearize(dga, eps1, eps2))


class BlchTable(object):
    """table[i][j] is the Poincaré polynomial of the pair
    (augmentations[i], augmentations[j])"""

    def __init__(self, augmentations, table):
        self.augmentations = list(augmentations)
        self.table = [list(row) for row in table]

    def __getitem__(self, index):
        i, j = index
        return self.table[i][j]

    def __len__(self):
        return len(self.augmentations)

    def to_dict(self):
        return {
            'schema': 1,
            'augmentations': [e.label() for e in self.augmentations],
            'table': [[str(p) for p in row] for row in self.table],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self):
        """Augmentation legend followed by the grid; cells are separated
        by "|" so that every cell reads back with LaurentPolynomial.parse"""
        if not self.augmentations:
            return 'no augmentations'
        lines = ['e{}: {}'.format(i, e.label())
                 for i, e in enumerate(self.augmentations)]
        labels = ['e{}'.format(i) for i in range(len(self.augmentations))]
        cells = [[str(p) for p in row] for row in self.table]
        width = max([len(c) for row in cells for c in row] +
                    [len(label) for label in labels])
        label_width = max(len(label) for label in labels)
        lines.append('')
        lines.append(' ' * label_width + ' | ' + ' | '.join(
            label.ljust(width) for label in labels).rstrip())
        for label, row in zip(labels, cells):
            lines.append(label.ljust(label_width) + ' | ' + ' | '.join(
                c.ljust(width) for c in row).rstrip())
        return '\n'.join(lines)


def blch_table(dga, cap=None, workers=1, printer=None, augmentations=None):
    """Poincaré polynomials of every ordered augmentation pair, in
    enumeration order.

    Raises:
        AugmentationError: cap exceeded.
    """
    printer = SILENT if printer is None else printer
    if augmentations is None:
        augmentations = enumerate_augmentations(dga, cap=cap, printer=printer)
    size = len(augmentations)
    cells = pool_map(
        _table_cell,
        [(dga, augmentations[i], augmentations[j])
         for i in range(size) for j in range(size)],
        workers=workers)
    return BlchTable(augmentations,
                     [cells[i * size:(i + 1) * size] for i in range(size)])
