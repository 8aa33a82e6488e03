"""Exact and certified arithmetic for cosine matrices.

Angles are rational multiples of pi. When every denominator is at most 6 the
cosines live in QQ(sqrt2, sqrt3, sqrt5) and inertia comes from the exact
characteristic polynomial. Otherwise a symmetric elimination over mpmath
intervals is refined from the configured start precision, doubling each round.
"""
import logging
from fractions import Fraction
from functools import lru_cache

from mpmath.ctx_iv import MPIntervalContext
import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from utils import config
from utils.errors import PrecisionExhaustedError

logger = logging.getLogger(__name__)

# denominator -> square root its cosines need
_EXACT_ROOTS = {1: None, 2: None, 3: None, 4: 2, 5: 5, 6: 3}


def is_exact_angle(angle):
    return Fraction(angle).denominator in _EXACT_ROOTS


def cos_pi(angle):
    """Exact sympy value of cos(angle * pi)."""
    angle = Fraction(angle)
    return sympy.cos(sympy.Rational(angle.numerator, angle.denominator) * sympy.pi)


@lru_cache(maxsize=None)
def _field(roots):
    if not roots:
        return QQ
    return QQ.algebraic_field(*(sympy.sqrt(r) for r in roots))


@lru_cache(maxsize=None)
def _field_element(roots, angle):
    return _field(roots).from_sympy(cos_pi(angle))


def _sign(domain, element):
    if domain.is_zero(element):
        return 0
    value = domain.to_sympy(element)
    if value.is_positive:
        return 1
    if value.is_negative:
        return -1
    raise PrecisionExhaustedError(f"Could not decide the sign of {value}")


def _sign_changes(signs):
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def exact_inertia(angles):
    """(positive, zero, negative) eigenvalue counts of a symmetric cosine matrix.

    All angle denominators must be in 1..6. The matrix is symmetric so every
    root of the characteristic polynomial is real and Descartes' rule is exact.
    """
    n = len(angles)
    roots = tuple(sorted({_EXACT_ROOTS[Fraction(a).denominator] for row in angles for a in row} - {None}))
    domain = _field(roots)
    rows = [[_field_element(roots, Fraction(a)) for a in row] for row in angles]
    coefficients = DomainMatrix(rows, (n, n), domain).charpoly()
    signs = [_sign(domain, c) for c in coefficients]

    nullity = 0
    while nullity < n and signs[n - nullity] == 0:
        nullity += 1
    positive = _sign_changes(signs)
    # p(-x): the coefficient of x^k picks up (-1)^k; position i holds x^(n-i)
    negative = _sign_changes([s if (n - i) % 2 == 0 else -s for i, s in enumerate(signs)])
    if positive + negative + nullity != n:
        raise PrecisionExhaustedError("Characteristic polynomial has non-real roots")
    return positive, nullity, negative


def _interval_matrix(angles, ctx):
    n = len(angles)
    matrix = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            a = Fraction(angles[i][j])
            if a == 0:
                matrix[i][j] = ctx.mpf(1)
            else:
                matrix[i][j] = ctx.cos(ctx.pi * a.numerator / a.denominator)
    return matrix


def _interval_classify(angles, ctx):
    """Return 'PD', 'INDEFINITE' or None when the pivots are not certified."""
    matrix = _interval_matrix(angles, ctx)
    remaining = list(range(len(matrix)))
    while remaining:
        pivots = [(i, matrix[i][i]) for i in remaining]
        if any(value.b < 0 for _, value in pivots):
            return "INDEFINITE"
        positive = [i for i, value in pivots if value.a > 0]
        if not positive:
            for i in remaining:
                for j in remaining:
                    if i < j and (matrix[i][i] * matrix[j][j] - matrix[i][j] * matrix[j][i]).b < 0:
                        return "INDEFINITE"
            return None
        k = positive[0]
        remaining.remove(k)
        pivot = matrix[k][k]
        for i in remaining:
            factor = matrix[i][k] / pivot
            for j in remaining:
                matrix[i][j] = matrix[i][j] - factor * matrix[k][j]
    return "PD"


def interval_inertia_class(angles, start_precision=None, max_precision=None):
    """Certified 'PD' or 'INDEFINITE' by interval elimination.

    Raises PrecisionExhaustedError when the matrix looks singular at the
    largest precision (a zero eigenvalue cannot be certified this way).
    """
    precision = start_precision or config.interval_start_precision()
    limit = max_precision or config.interval_max_precision()
    # mpmath.iv is shared by every thread
    ctx = MPIntervalContext()
    while precision <= limit:
        ctx.prec = precision
        result = _interval_classify(angles, ctx)
        if result is not None:
            return result
        logger.debug("Interval elimination undecided at %d bits", precision)
        precision *= 2
    raise PrecisionExhaustedError(
        f"Eigenvalue sign not separated from zero at {limit} bits", precision=limit
    )


def matrix_rank(rows, columns, modulus=None):
    """Exact rank of an integer matrix over QQ (or over GF(2) when modulus == 2)."""
    if not rows or not columns:
        return 0
    matrix = DomainMatrix.from_Matrix(sympy.Matrix(rows))
    return matrix.convert_to(sympy.GF(2) if modulus == 2 else QQ).rank()
