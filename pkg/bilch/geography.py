"""Which Laurent polynomials occur as (bi)linearized Poincaré
polynomials, and how to realize them.

All polynomials here have nonnegative integer coefficients (they count
homology dimensions).
"""

# built in modules
import json
import functools
import itertools
import collections

# project modules
from .complex import LaurentPolynomial
from .core import parity


class GeographyError(RuntimeError):
    """Error raised for inadmissible or infeasible polynomials"""

    def __init__(self, *args, **kwargs):
        super(GeographyError, self).__init__(*args, **kwargs)


AdmissibleSplit = collections.namedtuple('AdmissibleSplit', ['q', 'p', 'mode'])


def _check_input(P, n):
    if n < 1:
        raise GeographyError('dimension n must be at least 1 (got {})'.format(n))
    negative = [e for e, c in P.items() if c < 0]
    if negative:
        raise GeographyError(
            'polynomial {} has negative coefficients (exponents {})'.format(
                P, ', '.join(str(e) for e in negative)))


def _free_parts(P, exponents):
    """Every choice of coefficients 0 <= q_e <= P_e on exponents, in
    lexicographic order of (q_e for e in exponents)"""
    ranges = [range(P.coefficient(e) + 1) for e in exponents]
    for values in itertools.product(*ranges):
        yield dict(zip(exponents, values))


def _with(coefficients, exponent):
    """coefficients plus a coefficient 1 at exponent"""
    out = dict(coefficients)
    out[exponent] = 1
    return out


def blch_splits(P, n):
    """All splits P = q + p admissible for bilinearized homology, with q
    lexicographically increasing.

    q has nonnegative coefficients in degrees 0..n-1 and q(0) = 1;
    p = P - q has nonnegative coefficients with p(-1) even (n odd) or
    p(-1) = 0 (n even).

    Raises:
        GeographyError: negative coefficients in P or n < 1.
    """
    _check_input(P, n)
    if P.coefficient(0) < 1:
        return

    for free in _free_parts(P, list(range(1, n))):
        q = LaurentPolynomial(_with(free, 0))
        p = P - q
        value = p(-1)
        if (parity(n) and value % 2 == 0) or (not parity(n) and value == 0):
            yield AdmissibleSplit(q, p, 'blch')


def blch_admissible_split(P, n):
    """Lexicographically smallest bLCH split of P, or None"""
    return next(blch_splits(P, n), None)


def _duality_half(R, n):
    """p with R = p + t^(n-1) p(1/t), putting each paired coefficient on
    the smaller exponent; None when no such p exists"""
    p = {}
    for e, c in R.items():
        mirror = n - 1 - e
        if e == mirror:
            if c % 2:
                return None
            p[e] = c // 2
        elif R.coefficient(mirror) != c:
            return None
        elif e < mirror:
            p[e] = c
    return LaurentPolynomial(p)


def lch_admissible_split(P, n):
    """Split P = q + p + t^(n-1) p(1/t) for linearized homology.

    q is monic of degree n with q(0) = 0 and free nonnegative
    coefficients in degrees 1..n-1; the lexicographically smallest such
    q is returned, or None.

    Raises:
        GeographyError: negative coefficients in P or n < 1.
    """
    _check_input(P, n)
    if P.coefficient(n) < 1:
        return None

    for free in _free_parts(P, list(range(1, n))):
        q = LaurentPolynomial(_with(free, n))
        R = P - q
        if not R.is_nonnegative():
            continue
        p = _duality_half(R, n)
        if p is not None:
            return AdmissibleSplit(q, p, 'lch')
    return None


def swapped_polynomial(split, n):
    """Polynomial of the swapped augmentation pair: q + t^(n-1) p(1/t)"""
    return split.q + split.p.invert().shift(n - 1)


def relpoly_consistent(P12, P21, n):
    """True if some bLCH split of P12 swaps to P21"""
    _check_input(P21, n)
    return any(swapped_polynomial(split, n) == P21
               for split in blch_splits(P12, n))


def connected_sum_polynomial(P, n, rho_vanishes):
    """Effect of a connected sum between two components.

    Raises:
        GeographyError: no t^n term to remove.
    """
    if rho_vanishes:
        return P + LaurentPolynomial.monomial(n - 1)
    if P.coefficient(n) < 1:
        raise GeographyError(
            '{} has no t^{} term for the connected sum to remove'.format(P, n))
    return P - LaurentPolynomial.monomial(n)


def exponent_a(k, m, n):
    """Exponent of the last homology class of a note component of k
    chords with Maslov shift m"""
    if k < 1:
        raise GeographyError('k must be at least 1 (got {})'.format(k))
    if parity(k) == 0:
        return k - m - 1
    return n - k + m


PlanPair = collections.namedtuple('PlanPair', ['u', 'v', 'm', 'k', 'a'])


class RealizationPlan(object):
    """A realization of P = q + p: one note component per pair of
    exponents of p, inside a 2N-copy, plus an external component whose
    polynomial is q + t^n - 1."""

    def __init__(self, n, q, pairs, N):
        self.n = n
        self.q = q
        self.pairs = [PlanPair(*pair) for pair in pairs]
        self.N = N

    def to_dict(self):
        return {
            'schema': 1,
            'n': self.n,
            'q': str(self.q),
            'pairs': [dict(pair._asdict()) for pair in self.pairs],
            'N': self.N,
            'predicted': str(predicted_polynomial(self)),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self):
        lines = ['n = {}, N = {}, q = {}'.format(self.n, self.N, self.q)]
        for pair in self.pairs:
            lines.append('u={} v={} m={} k={} a={}'.format(*pair))
        lines.append('predicted: {}'.format(predicted_polynomial(self)))
        return '\n'.join(lines)

    def __eq__(self, other):
        if not isinstance(other, RealizationPlan):
            return NotImplemented
        return ((self.n, self.q, self.pairs, self.N) ==
                (other.n, other.q, other.pairs, other.N))


def _make_pair(u, v, n):
    if parity(u) != parity(v):
        u, v = min(u, v), max(u, v)
        k = v - u + 1
    else:
        k = n - u - v
    if k < 1:
        return None
    m = -u
    return PlanPair(u, v, m, k, exponent_a(k, m, n))


def _pair_exponents(exponents, n):
    """Pairs the sorted multiset exponents: the smallest remaining
    exponent is matched with each candidate partner in increasing order,
    same parity partners only for odd n."""

    @functools.lru_cache(maxsize=None)
    def search(remaining):
        if not remaining:
            return ()
        first, rest = remaining[0], remaining[1:]
        for pos, partner in enumerate(rest):
            if pos > 0 and rest[pos - 1] == partner:
                continue
            if parity(first) == parity(partner) and not parity(n):
                continue
            pair = _make_pair(first, partner, n)
            if pair is None:
                continue
            tail = search(rest[:pos] + rest[pos + 1:])
            if tail is not None:
                return (pair, ) + tail
        return None

    return search(tuple(sorted(exponents)))


def _smallest_even_N(pairs):
    k_max = max([pair.k for pair in pairs] + [1])
    N = max(2, (k_max + 1) // 2)
    return N + parity(N)


def plan_realization(P, n):
    """Realization plan for a bLCH-admissible polynomial.

    The splits of P are tried in order; for each, the exponents of p are
    paired with backtracking until every k is at least 1.

    Raises:
        GeographyError: P is not admissible, or no split admits a
            feasible pairing.
    """
    splits = list(blch_splits(P, n))
    if not splits:
        raise GeographyError('{} is not bLCH-admissible for n = {}'.format(
            P, n))

    for split in splits:
        exponents = []
        for e, c in split.p.items():
            exponents.extend([e] * c)
        pairs = _pair_exponents(exponents, n)
        if pairs is None:
            continue
        plan = RealizationPlan(n, split.q, pairs, _smallest_even_N(pairs))
        if predicted_polynomial(plan) != P:
            raise GeographyError('plan for {} predicts {}'.format(
                P, predicted_polynomial(plan)))
        return plan

    raise GeographyError(
        'no feasible pairing for {} with n = {}: every pairing of the '
        'exponents of p needs some k < 1'.format(P, n))


def predicted_polynomial(plan):
    """q + sum of t^(-m) + t^a over the pairs"""
    total = plan.q
    for pair in plan.pairs:
        total = total + LaurentPolynomial.monomial(-pair.m) + \
            LaurentPolynomial.monomial(pair.a)
    return total
