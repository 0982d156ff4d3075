"""
Exact coefficient rings in the deformation parameters and conversions between them.

Four rings are used throughout the package, all over the rationals:

- ``ALPHA_FIELD``: rational functions in α (Jack polynomials, θ, c, h)
- ``A_FIELD``: elements are Laurent polynomials in A with α = A²
  (normalized characters, intermediate structure-constant arithmetic)
- ``BETA_RING``: polynomials in β = α − 1 (connection coefficients)
- ``DELTA_RING``: polynomials in δ = A − 1/A (structure constants)

Elements are sympy ring/field elements, so they are immutable values with
structural equality and canonical (gcd-reduced) representation.
"""

from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Union

from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.rings import PolyElement, ring

from jacklab.core.exceptions import ConversionError, DegreeBoundError

ALPHA_FIELD, alpha = field("alpha", QQ)
A_FIELD, A = field("A", QQ)
BETA_RING, beta = ring("beta", QQ)
DELTA_RING, delta = ring("delta", QQ)

# Type aliases; the concrete classes are sympy's.
AlphaRationalFunction = FracElement
LaurentA = FracElement
BetaPolynomial = PolyElement
DeltaPolynomial = PolyElement

Rational = Union[int, Fraction]

DELTA_A = A - 1 / A
GAMMA_A = -A + 1 / A


def qq(value: Rational):
    """Convert an int or Fraction to a QQ domain element."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def to_fraction(value) -> Fraction:
    """Convert a QQ domain element to a Fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


def format_fraction(value: Rational) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# Univariate polynomial helpers
# ---------------------------------------------------------------------------

def poly_coefficients(p: PolyElement) -> List[Fraction]:
    """Coefficients of a univariate polynomial, ascending; ``[]`` for zero."""
    if not p:
        return []
    top = max(monom[0] for monom in p.keys())
    return [to_fraction(p.get((k,), QQ.zero)) for k in range(top + 1)]


def poly_degree(p: PolyElement) -> Optional[int]:
    """Degree of a univariate polynomial, ``None`` for zero."""
    if not p:
        return None
    return max(monom[0] for monom in p.keys())


def poly_coefficient(p: PolyElement, k: int) -> Fraction:
    return to_fraction(p.get((k,), QQ.zero))


def poly_from_coefficients(target_ring, coefficients: List[Rational]) -> PolyElement:
    return target_ring.from_dict({(k,): qq(c) for k, c in enumerate(coefficients) if c})


def has_nonnegative_integer_coefficients(p: PolyElement) -> bool:
    return all(c >= 0 and c.denominator == 1 for c in poly_coefficients(p))


def poly_to_json(p: PolyElement) -> List[str]:
    return [format_fraction(c) for c in poly_coefficients(p)]


# ---------------------------------------------------------------------------
# Laurent polynomials in A
# ---------------------------------------------------------------------------

def laurent_terms(f: LaurentA) -> Dict[int, Fraction]:
    """
    Exponent -> coefficient mapping of a Laurent polynomial in A.

    Raises:
        ConversionError: if the denominator is not a monomial
    """
    denom_terms = f.denom.terms()
    if len(denom_terms) != 1:
        raise ConversionError(f"not a Laurent polynomial in A: {f}")
    (shift,), scale = denom_terms[0]
    scale = to_fraction(scale)
    return {monom[0] - shift: to_fraction(c) / scale for monom, c in f.numer.terms()}


def laurent_from_terms(terms: Dict[int, Rational]) -> LaurentA:
    terms = {e: c for e, c in terms.items() if c}
    if not terms:
        return A_FIELD.zero
    shift = min(min(terms), 0)
    numer = A_FIELD.ring.from_dict({(e - shift,): qq(c) for e, c in terms.items()})
    denom = A_FIELD.ring.from_dict({(-shift,): QQ.one})
    return A_FIELD.new(numer, denom)


def laurent_to_json(f: LaurentA) -> Dict[str, str]:
    return {str(e): format_fraction(c) for e, c in sorted(laurent_terms(f).items())}


def a_top_coefficient(f: LaurentA, d: int) -> Fraction:
    """
    Coefficient of A^d in f, asserting deg f <= d.

    Raises:
        DegreeBoundError: if f has a term above A^d
    """
    terms = laurent_terms(f)
    if terms and max(terms) > d:
        raise DegreeBoundError(f"degree bound violated: deg {max(terms)} > {d}")
    return terms.get(d, Fraction(0))


def _delta_power_terms(k: int) -> Dict[int, int]:
    # (A - 1/A)^k
    return {k - 2 * j: (-1) ** j * comb(k, j) for j in range(k + 1)}


def laurent_to_delta(f: LaurentA) -> DeltaPolynomial:
    """
    Rewrite f as a polynomial in δ = A − 1/A.

    Raises:
        ConversionError: if f(A) != f(−1/A), i.e. f is not in the δ-subring
    """
    terms = laurent_terms(f)
    for exponent, coefficient in terms.items():
        if terms.get(-exponent, 0) != (-1) ** (exponent % 2) * coefficient:
            raise ConversionError(f"not expressible in delta: {f}")

    remaining = dict(terms)
    result: Dict[int, Fraction] = {}
    while remaining:
        top = max(remaining)
        coefficient = remaining[top]
        result[top] = coefficient
        for exponent, weight in _delta_power_terms(top).items():
            value = remaining.get(exponent, 0) - coefficient * weight
            if value:
                remaining[exponent] = value
            else:
                remaining.pop(exponent, None)
    return DELTA_RING.from_dict({(k,): qq(c) for k, c in result.items()})


def delta_to_laurent(p: DeltaPolynomial) -> LaurentA:
    """Evaluate a δ-polynomial at δ = A − 1/A."""
    total: Dict[int, Fraction] = {}
    for k, c in enumerate(poly_coefficients(p)):
        if not c:
            continue
        for exponent, weight in _delta_power_terms(k).items():
            total[exponent] = total.get(exponent, 0) + c * weight
    return laurent_from_terms(total)


# ---------------------------------------------------------------------------
# Rational functions in α
# ---------------------------------------------------------------------------

def alpha_to_laurent(f: AlphaRationalFunction) -> LaurentA:
    """Substitute α = A²."""
    ring_a = A_FIELD.ring
    numer = ring_a.from_dict({(2 * monom[0],): c for monom, c in f.numer.terms()})
    denom = ring_a.from_dict({(2 * monom[0],): c for monom, c in f.denom.terms()})
    return A_FIELD.new(numer, denom)


def _shift_alpha_poly(p: PolyElement) -> PolyElement:
    # p(α) -> p(β + 1)
    result = BETA_RING.zero
    for monom, c in p.terms():
        result += (beta + 1) ** monom[0] * c
    return result


def alpha_to_beta(f: AlphaRationalFunction) -> BetaPolynomial:
    """
    The polynomial g with g(β) = f(β + 1).

    Raises:
        ConversionError: if f(β + 1) has a pole
    """
    numer = _shift_alpha_poly(f.numer)
    denom = _shift_alpha_poly(f.denom)
    quotient, remainder = numer.div(denom)
    if remainder:
        raise ConversionError(f"not a polynomial in beta: {f}")
    return quotient


def beta_to_alpha(p: BetaPolynomial) -> AlphaRationalFunction:
    """Substitute β = α − 1."""
    result = ALPHA_FIELD.zero
    for monom, c in p.terms():
        result += (alpha - 1) ** monom[0] * c
    return result


def alpha_at_one(f: AlphaRationalFunction) -> Fraction:
    """Value of f at α = 1 (the Schur point)."""
    numer = sum((to_fraction(c) for c in f.numer.values()), Fraction(0))
    denom = sum((to_fraction(c) for c in f.denom.values()), Fraction(0))
    if denom == 0:
        raise ConversionError(f"pole at alpha = 1: {f}")
    return numer / denom


def alpha_to_str(f: AlphaRationalFunction) -> str:
    return str(f.as_expr())


def laurent_to_beta(f: LaurentA) -> BetaPolynomial:
    """
    Rewrite f(A) with α = A² as a polynomial in β = α − 1.

    Raises:
        ConversionError: on odd or negative powers of A
    """
    result = BETA_RING.zero
    for exponent, coefficient in laurent_terms(f).items():
        if exponent % 2 or exponent < 0:
            raise ConversionError(f"not a polynomial in beta: {f}")
        result += (beta + 1) ** (exponent // 2) * qq(coefficient)
    return result
