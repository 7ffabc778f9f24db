"""Free noncommutative Z-graded DGAs over GF(2).

A word is a tuple of generator indices (the empty tuple is the unit 1)
and a polynomial is a frozenset of words: a word is present with
coefficient 1 or absent, so addition is symmetric difference.

Text format, one directive per line, '#' starts a comment:

    dim 1
    gen a1 1
    gen b1 0 @knot
    d a1 = 1 + b1 + b1*b2*b3
    d b1 = 0
"""

# built in modules
import re
import collections

# project modules
from .core import gf2_sum, toggle


NAME_PATTERN = r'[A-Za-z_][A-Za-z0-9_]*'
NAME_RE = re.compile(r'^{}$'.format(NAME_PATTERN))

DIM_RE = re.compile(r'^dim\s+(\S+)$')
MASLOV_RE = re.compile(r'^maslov\s+(\S+)$')
GEN_RE = re.compile(
    r'^gen\s+(\S+)\s+(\S+)(?:\s+@(\S+))?$')
DIFF_RE = re.compile(r'^d\s+(\S+)\s*=(.*)$')
INT_RE = re.compile(r'^[+-]?\d+$')


class DgaError(RuntimeError):
    """Error raised for ill-formed DGAs"""

    def __init__(self, *args, **kwargs):
        super(DgaError, self).__init__(*args, **kwargs)


class DgaSyntaxError(DgaError):
    """Error raised while parsing the DGA text format; line and column
    are 1-based."""

    def __init__(self, message, line, column=1):
        self.line = line
        self.column = column
        super(DgaSyntaxError, self).__init__(
            'line {}, column {}: {}'.format(line, column, message))


Generator = collections.namedtuple(
    'Generator', ['name', 'degree', 'component'])
Generator.__new__.__defaults__ = (None, )


class DGA(object):
    """Generators, differential and ambient dimension n.

    differential[i] is the polynomial d(generators[i]). Instances are
    immutable and compare structurally.
    """

    def __init__(self, n, generators, differential):
        self._n = int(n)
        self._generators = tuple(Generator(*g) for g in generators)
        self._differential = tuple(frozenset(p) for p in differential)

        if len(self._differential) != len(self._generators):
            raise DgaError('{} differentials given for {} generators'.format(
                len(self._differential), len(self._generators)))

        self._index = {}
        for i, gen in enumerate(self._generators):
            if gen.name in self._index:
                raise DgaError(
                    'duplicate generator name "{}"'.format(gen.name))
            self._index[gen.name] = i

        size = len(self._generators)
        for poly in self._differential:
            for word in poly:
                if any(not (0 <= j < size) for j in word):
                    raise DgaError('word {} references an unknown '
                                   'generator index'.format(word))

    @classmethod
    def from_terms(cls, n, generators, differential):
        """Builds a DGA from generator names.

        Args:
            n (int): ambient dimension.
            generators (list): (name, degree) or (name, degree, component).
            differential (dict): name -> list of words, each word a
                sequence of names; the empty sequence is the unit.
                Repeated words cancel; missing names have zero
                differential.

        Raises:
            DgaError: unknown or duplicate generator names.
        """
        generators = [Generator(*g) for g in generators]
        index = {g.name: i for i, g in enumerate(generators)}

        unknown = sorted(set(differential) - set(index))
        if unknown:
            raise DgaError('differential given for unknown generator(s) '
                           '{}'.format(', '.join(unknown)))

        def to_word(names):
            try:
                return tuple(index[name] for name in names)
            except KeyError as e:
                raise DgaError('unknown generator "{}"'.format(e.args[0]))

        polys = [
            frozenset(gf2_sum(to_word(w) for w in differential.get(g.name, ())))
            for g in generators
        ]
        return cls(n, generators, polys)

    @property
    def n(self):
        return self._n

    @property
    def generators(self):
        return self._generators

    @property
    def differential(self):
        return self._differential

    @property
    def names(self):
        return tuple(g.name for g in self._generators)

    def __len__(self):
        return len(self._generators)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise DgaError('unknown generator "{}"'.format(name))

    def degree(self, i):
        return self._generators[i].degree

    def degree_of_word(self, word):
        return sum(self._generators[i].degree for i in word)

    def generators_of_degree(self, degree):
        return [i for i, g in enumerate(self._generators)
                if g.degree == degree]

    def d(self, name):
        return self._differential[self.index(name)]

    def apply(self, poly):
        """Leibniz extension of the differential to a polynomial"""
        result = set()
        for word in poly:
            for pos, gen in enumerate(word):
                for image in self._differential[gen]:
                    toggle(result, word[:pos] + image + word[pos + 1:])
        return frozenset(result)

    def format_word(self, word):
        if not word:
            return '1'
        return '*'.join(self._generators[i].name for i in word)

    def format_poly(self, poly):
        if not poly:
            return '0'
        return ' + '.join(
            self.format_word(w) for w in sorted(poly, key=lambda w: (len(w), w)))

    def __eq__(self, other):
        if not isinstance(other, DGA):
            return NotImplemented
        return (self._n == other.n and
                self._generators == other.generators and
                self._differential == other.differential)

    def __hash__(self):
        return hash((self._n, self._generators, self._differential))

    def __repr__(self):
        return 'DGA(n={}, generators={})'.format(self._n, list(self.names))


def _strip_comment(ln):
    pos = ln.find('#')
    return ln if pos < 0 else ln[:pos]


def _parse_int(token, what, line, column):
    if not INT_RE.match(token):
        raise DgaSyntaxError(
            '{} must be an integer (got "{}")'.format(what, token),
            line, column)
    return int(token)


def _parse_poly(body, body_column, line, index):
    """Returns the polynomial spelled in body (words as index tuples);
    body_column is the column where body starts."""
    if body.strip() == '0':
        return frozenset()
    if body.strip() == '':
        raise DgaSyntaxError('missing polynomial after "="', line, body_column)

    words = []
    for term in re.finditer(r'[^+]+', body):
        text = term.group(0)
        if text.strip() == '':
            raise DgaSyntaxError('empty term', line, body_column + term.start())
        if text.strip() == '1':
            words.append(())
            continue

        word = []
        offset = term.start()
        for factor in re.finditer(r'[^*]+', text):
            name = factor.group(0).strip()
            column = (body_column + offset + factor.start() +
                      len(factor.group(0)) - len(factor.group(0).lstrip()))
            if not NAME_RE.match(name):
                raise DgaSyntaxError(
                    'invalid factor "{}"'.format(name), line, column)
            if name not in index:
                raise DgaSyntaxError(
                    'unknown generator "{}"'.format(name), line, column)
            word.append(index[name])
        if text.count('*') != len(word) - 1:
            raise DgaSyntaxError('empty factor in "{}"'.format(text.strip()),
                                 line, body_column + offset)
        words.append(tuple(word))

    if body.strip().startswith('+') or body.strip().endswith('+') or \
            '++' in body.replace(' ', ''):
        raise DgaSyntaxError('empty term', line, body_column)

    return frozenset(gf2_sum(words))


def parse_dga(text):
    """Parses the DGA text format.

    Differentials may mention generators declared further down. The
    laws of a differential are not checked here (see validate).

    Raises:
        DgaSyntaxError: malformed line, unknown or duplicate generator,
            missing or repeated "d" line, missing "dim", nonzero maslov.
    """
    n = None
    generators = []
    declared_at = {}
    diff_lines = {}

    for line_no, raw in enumerate(text.split('\n'), start=1):
        ln = _strip_comment(raw)
        if ln.strip() == '':
            continue
        indent = len(ln) - len(ln.lstrip())
        ln = ln.strip()
        col0 = indent + 1

        match = DIM_RE.match(ln)
        if match:
            if n is not None:
                raise DgaSyntaxError('"dim" given twice', line_no, col0)
            n = _parse_int(match.group(1), 'dim', line_no,
                           col0 + match.start(1))
            if n < 1:
                raise DgaSyntaxError('dim must be at least 1', line_no,
                                     col0 + match.start(1))
            continue

        match = MASLOV_RE.match(ln)
        if match:
            value = _parse_int(match.group(1), 'maslov', line_no,
                               col0 + match.start(1))
            if value != 0:
                raise DgaSyntaxError(
                    'nonzero Maslov class {} is not supported: gradings '
                    'must be integers'.format(value),
                    line_no, col0 + match.start(1))
            continue

        match = GEN_RE.match(ln)
        if match:
            name, degree, component = match.groups()
            if not NAME_RE.match(name):
                raise DgaSyntaxError('invalid generator name "{}"'.format(
                    name), line_no, col0 + match.start(1))
            if name in declared_at:
                raise DgaSyntaxError(
                    'duplicate generator "{}" (first declared on line '
                    '{})'.format(name, declared_at[name]),
                    line_no, col0 + match.start(1))
            degree = _parse_int(degree, 'degree', line_no,
                                col0 + match.start(2))
            if component is not None and not NAME_RE.match(component):
                raise DgaSyntaxError('invalid component "{}"'.format(
                    component), line_no, col0 + match.start(3))
            declared_at[name] = line_no
            generators.append(Generator(name, degree, component))
            continue

        match = DIFF_RE.match(ln)
        if match:
            name = match.group(1)
            if name in diff_lines:
                raise DgaSyntaxError(
                    'second "d" line for "{}" (first on line {})'.format(
                        name, diff_lines[name][0]),
                    line_no, col0 + match.start(1))
            diff_lines[name] = (line_no, col0 + match.start(1),
                                match.group(2), col0 + match.start(2))
            continue

        raise DgaSyntaxError(
            'cannot parse "{}"'.format(ln), line_no, col0)

    if n is None:
        raise DgaSyntaxError('missing "dim" header', 1, 1)

    index = {g.name: i for i, g in enumerate(generators)}

    differential = [None] * len(generators)
    for name, (line_no, name_col, body, body_col) in sorted(
            diff_lines.items(), key=lambda item: item[1][0]):
        if name not in index:
            raise DgaSyntaxError(
                '"d" line for undeclared generator "{}"'.format(name),
                line_no, name_col)
        differential[index[name]] = _parse_poly(body, body_col, line_no, index)

    for i, gen in enumerate(generators):
        if differential[i] is None:
            raise DgaSyntaxError(
                'generator "{}" has no "d" line'.format(gen.name),
                declared_at[gen.name], 1)

    return DGA(n, generators, differential)


def serialize(dga):
    """Canonical text of dga: header, generators in declaration order,
    then one "d" line per generator."""
    lines = ['dim {}'.format(dga.n)]
    for gen in dga.generators:
        lines.append('gen {} {}{}'.format(
            gen.name, gen.degree,
            '' if gen.component is None else ' @{}'.format(gen.component)))
    for gen, poly in zip(dga.generators, dga.differential):
        lines.append('d {} = {}'.format(gen.name, dga.format_poly(poly)))
    return '\n'.join(lines) + '\n'


ValidationIssue = collections.namedtuple(
    'ValidationIssue', ['kind', 'generator', 'message'])


class ValidationReport(object):
    """Every violated differential law; empty means valid"""

    def __init__(self, issues):
        self.issues = tuple(issues)

    @property
    def is_valid(self):
        return not self.issues

    def __len__(self):
        return len(self.issues)

    def to_text(self):
        if self.is_valid:
            return 'valid'
        return '\n'.join('{} {}: {}'.format(i.kind, i.generator, i.message)
                         for i in self.issues)

    def to_dict(self):
        return {
            'valid': self.is_valid,
            'issues': [dict(i._asdict()) for i in self.issues],
        }


def validate(dga):
    """Checks that d has degree -1 and that d∘d = 0 on every generator.

    Returns:
        report (ValidationReport): at most one "degree" issue per
            generator, then at most one "d_squared" issue per generator.
    """
    issues = []

    for i, gen in enumerate(dga.generators):
        bad_words = sorted(
            (w for w in dga.differential[i]
             if dga.degree_of_word(w) != gen.degree - 1),
            key=lambda w: (len(w), w))
        if bad_words:
            issues.append(ValidationIssue(
                'degree', gen.name,
                'expected degree {} for {}'.format(
                    gen.degree - 1,
                    ', '.join('{} (degree {})'.format(
                        dga.format_word(w), dga.degree_of_word(w))
                        for w in bad_words))))

    for i, gen in enumerate(dga.generators):
        square = dga.apply(dga.differential[i])
        if square:
            issues.append(ValidationIssue(
                'd_squared', gen.name,
                'd(d({})) = {}'.format(gen.name, dga.format_poly(square))))

    return ValidationReport(issues)
