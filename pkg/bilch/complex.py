"""Homology of GF(2) chain complexes and Laurent polynomials with
integer coefficients (Poincaré polynomials and their geography)."""

# built in modules
import re
import fractions

# project modules
from .core import parity
from .gf2 import BitMatrix, nullspace_basis, rank, row_space_contains


TERM_RE = re.compile(r'^(?:(\d+)(\*?))?(t(?:\^(~?\d+))?)?$')


class ComplexError(RuntimeError):
    """Error raised for complexes with d∘d != 0 and for unreadable
    polynomials"""

    def __init__(self, *args, **kwargs):
        super(ComplexError, self).__init__(*args, **kwargs)


class LaurentPolynomial(object):
    """Finitely many integer coefficients indexed by exponents in Z.

    Only nonzero coefficients are stored; instances are immutable.
    """

    __slots__ = ('_coeffs', )

    def __init__(self, coefficients=None):
        if isinstance(coefficients, LaurentPolynomial):
            coefficients = coefficients.as_dict()
        elif isinstance(coefficients, int):
            coefficients = {0: coefficients}
        self._coeffs = {int(e): int(c)
                        for e, c in sorted((coefficients or {}).items())
                        if c != 0}

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def parse(cls, text):
        """Reads "c*t^e" terms joined by "+" or "-" ("1", "t", "2t", "t^-3"
        and "0" are accepted). Whitespace is ignored.

        Raises:
            ComplexError: text is not a polynomial.
        """
        compact = re.sub(r'\s+', '', text).replace('^-', '^~')
        if compact == '':
            raise ComplexError('empty polynomial')

        coeffs = {}
        pos = 0
        for match in re.finditer(r'([+-]?)([^+-]*)', compact):
            if match.start() != pos or match.group(0) == '':
                continue
            pos = match.end()
            sign, body = match.groups()
            term = TERM_RE.match(body)
            if (body == '' or term is None or
                    (term.group(2) and term.group(3) is None)):
                raise ComplexError(
                    'cannot read "{}" in polynomial "{}"'.format(
                        (sign + body).replace('~', '-'), text))
            coefficient = int(term.group(1)) if term.group(1) else 1
            if term.group(3) is None:
                exponent = 0
            elif term.group(4) is None:
                exponent = 1
            else:
                exponent = int(term.group(4).replace('~', '-'))
            if sign == '-':
                coefficient = -coefficient
            coeffs[exponent] = coeffs.get(exponent, 0) + coefficient

        if pos != len(compact):
            raise ComplexError('cannot read polynomial "{}"'.format(text))
        return cls(coeffs)

    def as_dict(self):
        return dict(self._coeffs)

    def items(self):
        return list(self._coeffs.items())

    def coefficient(self, exponent):
        return self._coeffs.get(exponent, 0)

    def is_nonnegative(self):
        return all(c > 0 for c in self._coeffs.values())

    def __add__(self, other):
        other = _coerce(other)
        coeffs = dict(self._coeffs)
        for e, c in other.items():
            coeffs[e] = coeffs.get(e, 0) + c
        return LaurentPolynomial(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        coeffs = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other.items():
                coeffs[e1 + e2] = coeffs.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(coeffs)

    __rmul__ = __mul__

    def shift(self, j):
        """Multiplication by t^j"""
        return LaurentPolynomial(
            {e + j: c for e, c in self._coeffs.items()})

    def invert(self):
        """Substitution t -> 1/t"""
        return LaurentPolynomial({-e: c for e, c in self._coeffs.items()})

    def __call__(self, x):
        total = 0
        for e, c in self._coeffs.items():
            total += c * (x ** e if e >= 0 else fractions.Fraction(1, x ** -e))
        if isinstance(total, fractions.Fraction) and total.denominator == 1:
            return int(total)
        return total

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other.as_dict()

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def __str__(self):
        if not self._coeffs:
            return '0'
        out = ''
        for e, c in self._coeffs.items():
            if e == 0:
                term = str(abs(c))
            else:
                power = 't' if e == 1 else 't^{}'.format(e)
                term = power if abs(c) == 1 else '{}*{}'.format(abs(c), power)
            if not out:
                out = term if c > 0 else '-' + term
            else:
                out += (' + ' if c > 0 else ' - ') + term
        return out

    def __repr__(self):
        return 'LaurentPolynomial("{}")'.format(self)


def _coerce(value):
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int):
        return LaurentPolynomial(value)
    raise TypeError('cannot combine a LaurentPolynomial with {!r}'.format(
        value))


def _check_square_zero(cx):
    bad = cx.square_zero_violations()
    if bad:
        raise ComplexError('d∘d != 0 on {}'.format(', '.join(bad)))


def betti(cx):
    """Homology dimensions of cx.

    Returns:
        betti (dict): degree -> dim H_k, ascending degrees, zero entries
            omitted.

    Raises:
        ComplexError: d∘d != 0.
    """
    _check_square_zero(cx)
    ranks = {}

    def rank_of(k):
        if k not in ranks:
            ranks[k] = rank(cx.matrix(k))
        return ranks[k]

    out = {}
    for k in cx.degrees():
        value = cx.dim(k) - rank_of(k) - rank_of(k + 1)
        if value:
            out[k] = value
    return out


def poincare(cx):
    return LaurentPolynomial(betti(cx))


def euler_characteristic(cx):
    return sum((-1) ** parity(k) * cx.dim(k) for k in cx.degrees())


def homology_basis(cx, k):
    """Cycle representatives of a basis of H_k.

    Cycles of the kernel basis are taken in order and kept when they are
    independent from the boundaries and the cycles kept so far.

    Returns:
        basis (list): each representative is a tuple of basis names.
    """
    _check_square_zero(cx)
    names = [cx.basis[i][0] for i in cx.in_degree(k)]
    boundaries = cx.matrix(k + 1).transpose()
    span = [row for row in boundaries.to_dense()]

    representatives = []
    for cycle in nullspace_basis(cx.matrix(k)):
        current = BitMatrix.from_rows(span, len(names))
        if row_space_contains(current, cycle):
            continue
        span.append(cycle)
        representatives.append(
            tuple(name for name, bit in zip(names, cycle) if bit))
    return representatives

