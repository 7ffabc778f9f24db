"""Augmentations of a DGA and the (bi)linearized chain complexes they
induce."""

# built in modules
import re

# project modules
from .config import DEFAULTS
from .core import toggle
from .dga import DGA, DgaError, serialize
from .gf2 import BitMatrix
from .meta import SILENT, StatusPrinter


SELECTOR_ITEM_RE = re.compile(r'^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(\S+)\s*$')


class AugmentationError(RuntimeError):
    """Error raised for invalid augmentations or oversized enumerations"""

    def __init__(self, *args, **kwargs):
        super(AugmentationError, self).__init__(*args, **kwargs)


class Augmentation(object):
    """A GF(2) assignment on the degree 0 generators of a DGA.

    Degree 0 generators missing from values are sent to 0; every other
    generator is sent to 0 and the unit to 1. Whether the assignment
    kills the differential is checked by is_augmentation, not here.
    """

    def __init__(self, dga, values=None):
        values = dict(values or {})
        self._dga = dga
        self._zero_degree = tuple(dga.generators_of_degree(0))

        for name, bit in values.items():
            try:
                i = dga.index(name)
            except DgaError:
                raise AugmentationError(
                    'assignment mentions unknown generator "{}"'.format(name))
            if bit not in (0, 1) or isinstance(bit, float):
                raise AugmentationError(
                    'value of "{}" must be 0 or 1 (got {!r})'.format(name, bit))
            if dga.degree(i) != 0 and bit:
                raise AugmentationError(
                    '"{}" has degree {}, augmentations vanish off degree '
                    '0'.format(name, dga.degree(i)))

        self._bits = tuple(int(values.get(dga.generators[i].name, 0))
                           for i in self._zero_degree)
        self._value = [0] * len(dga)
        for i, bit in zip(self._zero_degree, self._bits):
            self._value[i] = bit

    @classmethod
    def from_bits(cls, dga, bits):
        """bits are the values of the degree 0 generators in declaration
        order"""
        names = [dga.generators[i].name for i in dga.generators_of_degree(0)]
        if len(bits) != len(names):
            raise AugmentationError('{} values given for {} degree 0 '
                                    'generators'.format(len(bits), len(names)))
        return cls(dga, dict(zip(names, bits)))

    @property
    def dga(self):
        return self._dga

    @property
    def bits(self):
        return self._bits

    @property
    def values(self):
        return {self._dga.generators[i].name: b
                for i, b in zip(self._zero_degree, self._bits)}

    def __call__(self, i):
        """Value on the generator of index i"""
        return self._value[i]

    def of_word(self, word):
        for i in word:
            if not self._value[i]:
                return 0
        return 1

    def of_poly(self, poly):
        return sum(self.of_word(w) for w in poly) % 2

    def label(self):
        return ','.join('{}={}'.format(self._dga.generators[i].name, b)
                        for i, b in zip(self._zero_degree, self._bits))

    def __eq__(self, other):
        if not isinstance(other, Augmentation):
            return NotImplemented
        return self._dga.names == other.dga.names and self._bits == other.bits

    def __hash__(self):
        return hash((self._dga.names, self._bits))

    def __lt__(self, other):
        return self._bits < other.bits

    def __repr__(self):
        return 'Augmentation({})'.format(self.label())


def _coerce(dga, values):
    if isinstance(values, Augmentation):
        if values.dga.names != dga.names:
            raise AugmentationError(
                'augmentation belongs to a different DGA')
        return values
    return Augmentation(dga, values)


def is_augmentation(dga, values):
    """True if the unital multiplicative extension of values kills the
    differential of every generator.

    Raises:
        AugmentationError: unknown generator or non 0/1 value.
    """
    eps = _coerce(dga, values)
    return all(eps.of_poly(poly) == 0 for poly in dga.differential)


def _constraints(dga, zero_degree):
    """For every generator, the words of its differential that can have
    a nonzero value (only degree 0 factors), grouped by the depth of the
    search at which all their factors are assigned."""
    position = {gen: pos for pos, gen in enumerate(zero_degree)}
    by_depth = [[] for _ in range(len(zero_degree) + 1)]

    for poly in dga.differential:
        words = [tuple(position[i] for i in w) for w in poly
                 if all(i in position for i in w)]
        if not words:
            continue
        depth = max((max(w) + 1 if w else 0) for w in words)
        by_depth[depth].append(words)

    return by_depth


def enumerate_augmentations(dga, cap=None, printer=None):
    """All augmentations of dga, in lexicographic order of the values on
    the degree 0 generators (declaration order).

    Args:
        dga (DGA): the algebra.
        cap (int): maximal number of degree 0 generators (default 24).
        printer (Printer): progress output.

    Returns:
        augmentations (list): Augmentation objects.

    Raises:
        AugmentationError: more degree 0 generators than cap.
    """
    cap = DEFAULTS['cap'] if cap is None else cap
    printer = SILENT if printer is None else printer
    zero_degree = dga.generators_of_degree(0)

    if len(zero_degree) > cap:
        raise AugmentationError(
            '{} degree 0 generators exceed the cap of {} ({:,} assignments '
            'to search)'.format(len(zero_degree), cap, 2 ** len(zero_degree)))

    by_depth = _constraints(dga, zero_degree)
    status = StatusPrinter(printer, print_every=1000, comment='augmentations')
    found = []
    bits = [0] * len(zero_degree)

    def satisfied(depth):
        for words in by_depth[depth]:
            total = 0
            for w in words:
                if all(bits[pos] for pos in w):
                    total ^= 1
            if total:
                return False
        return True

    def search(depth):
        if depth == len(zero_degree):
            found.append(Augmentation.from_bits(dga, tuple(bits)))
            status.increase()
            return
        for bit in (0, 1):
            bits[depth] = bit
            if satisfied(depth + 1):
                search(depth + 1)
        bits[depth] = 0

    if satisfied(0):
        search(0)

    printer('{} augmentation(s) over {} degree 0 generator(s)'.format(
        len(found), len(zero_degree)))
    return found


def parse_selector(dga, text, augmentations):
    """Reads an augmentation selector: an index into augmentations, or a
    comma separated "name=bit" list.

    Raises:
        AugmentationError: bad index, bad list or not an augmentation.
    """
    text = text.strip()
    if re.match(r'^\d+$', text):
        index = int(text)
        if index >= len(augmentations):
            raise AugmentationError(
                'augmentation index {} out of range ({} augmentation(s))'
                .format(index, len(augmentations)))
        return augmentations[index]

    if not text:
        raise AugmentationError('empty augmentation selector')

    values = {}
    for item in text.split(','):
        match = SELECTOR_ITEM_RE.match(item)
        if match is None or match.group(2) not in ('0', '1'):
            raise AugmentationError(
                'cannot read "{}" as name=0 or name=1'.format(item.strip()))
        values[match.group(1)] = int(match.group(2))

    eps = Augmentation(dga, values)
    if not is_augmentation(dga, eps):
        raise AugmentationError(
            '{} does not satisfy eps∘d = 0'.format(eps.label()))
    return eps


class ChainComplex(object):
    """Z-graded GF(2) chain complex on a named basis.

    basis is a sequence of (name, degree); boundary maps a name to the
    names in its boundary (missing names are cycles). The boundary must
    lower degree by exactly one.
    """

    def __init__(self, n, basis, boundary=None):
        self._n = int(n)
        self._basis = tuple((str(name), int(deg)) for name, deg in basis)
        self._index = {}
        for i, (name, _) in enumerate(self._basis):
            if name in self._index:
                raise ValueError('duplicate basis element "{}"'.format(name))
            self._index[name] = i

        boundary = boundary or {}
        unknown = sorted(set(boundary) - set(self._index))
        if unknown:
            raise ValueError('boundary given for unknown basis element(s) '
                             '{}'.format(', '.join(unknown)))

        images = []
        for name, deg in self._basis:
            image = set()
            for target in boundary.get(name, ()):
                if target not in self._index:
                    raise ValueError('"{}" is not a basis element'.format(
                        target))
                if self._basis[self._index[target]][1] != deg - 1:
                    raise ValueError(
                        'boundary of "{}" (degree {}) contains "{}" of '
                        'degree {}'.format(name, deg, target,
                                           self._basis[self._index[target]][1]))
                toggle(image, self._index[target])
            images.append(frozenset(image))
        self._boundary = tuple(images)

    @property
    def n(self):
        return self._n

    @property
    def basis(self):
        return self._basis

    @property
    def names(self):
        return tuple(name for name, _ in self._basis)

    def __len__(self):
        return len(self._basis)

    def degree_of(self, name):
        return self._basis[self._index[name]][1]

    def degrees(self):
        """Sorted degrees carrying at least one basis element"""
        return sorted(set(deg for _, deg in self._basis))

    def in_degree(self, k):
        return [i for i, (_, deg) in enumerate(self._basis) if deg == k]

    def dim(self, k):
        return len(self.in_degree(k))

    def boundary_of(self, name):
        """Names in the boundary of name, in basis order"""
        return tuple(self._basis[j][0]
                     for j in sorted(self._boundary[self._index[name]]))

    def boundary_map(self):
        return {name: self.boundary_of(name) for name in self.names}

    def matrix(self, k):
        """The boundary C_k -> C_{k-1} as a BitMatrix with one column per
        degree k element and one row per degree k-1 element"""
        cols = self.in_degree(k)
        rows = self.in_degree(k - 1)
        row_of = {j: r for r, j in enumerate(rows)}
        entries = [[0] * len(cols) for _ in rows]
        for c, i in enumerate(cols):
            for j in self._boundary[i]:
                entries[row_of[j]][c] = 1
        return BitMatrix.from_rows(entries, len(cols))

    def square_zero_violations(self):
        """Names x with d(d(x)) != 0"""
        bad = []
        for i, (name, _) in enumerate(self._basis):
            square = set()
            for j in self._boundary[i]:
                for target in self._boundary[j]:
                    toggle(square, target)
            if square:
                bad.append(name)
        return bad

    def direct_sum(self, other):
        if self._n != other.n:
            raise ValueError('cannot sum complexes of dimensions {} and '
                             '{}'.format(self._n, other.n))
        return ChainComplex(self._n, self._basis + other.basis,
                            dict(self.boundary_map(), **other.boundary_map()))

    def renamed(self, prefix):
        return ChainComplex(
            self._n, [(prefix + name, deg) for name, deg in self._basis],
            {prefix + name: [prefix + t for t in image]
             for name, image in self.boundary_map().items()})

    def to_dga(self):
        """The complex as a DGA whose differential is linear"""
        return DGA(self._n,
                   [(name, deg) for name, deg in self._basis],
                   [frozenset((j, ) for j in image)
                    for image in self._boundary])

    def to_text(self):
        return serialize(self.to_dga())

    def __eq__(self, other):
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return (self._n == other.n and self._basis == other.basis and
                self.boundary_map() == other.boundary_map())

    def __hash__(self):
        return hash((self._n, self._basis, self._boundary))

    def __repr__(self):
        return 'ChainComplex(n={}, basis={})'.format(self._n, list(self._basis))


def bilinearize(dga, eps1, eps2):
    """The bilinearized complex of dga for the pair (eps1, eps2).

    Each word b1...bk of d(g) contributes, for every position i, the
    generator bi times eps1(b1...b(i-1)) eps2(b(i+1)...bk). The unit
    contributes nothing.

    Raises:
        AugmentationError: eps1 or eps2 is not an augmentation of dga.
        DgaError: a contribution breaks the degree -1 rule.
    """
    eps1, eps2 = _coerce(dga, eps1), _coerce(dga, eps2)
    for label, eps in (('first', eps1), ('second', eps2)):
        if not is_augmentation(dga, eps):
            raise AugmentationError('{} augmentation {} does not satisfy '
                                    'eps∘d = 0'.format(label, eps.label()))

    boundary = {}
    for g, poly in enumerate(dga.differential):
        image = set()
        for word in poly:
            for pos, b in enumerate(word):
                if eps1.of_word(word[:pos]) and eps2.of_word(word[pos + 1:]):
                    toggle(image, b)
        for b in image:
            if dga.degree(b) != dga.degree(g) - 1:
                raise DgaError(
                    'd({}) produces {} of degree {}; run validate on the '
                    'DGA'.format(dga.generators[g].name,
                                 dga.generators[b].name, dga.degree(b)))
        boundary[dga.generators[g].name] = [
            dga.generators[b].name for b in sorted(image)]

    return ChainComplex(dga.n, [(g.name, g.degree) for g in dga.generators],
                        boundary)


def linearize(dga, eps):
    return bilinearize(dga, eps, eps)
