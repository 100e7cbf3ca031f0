"""Matrix elements of finite-dimensional Lorentz-group representations.

The central object is the two-parameter family Z^l_mn(theta, tau): the matrix
element carrying a rotation angle theta and a boost rapidity tau, indexed by a
non-negative (half-)integer weight l and projections m, n with l - m and l - n
non-negative integers.  Two independent evaluation routes are provided:

``z_sum``
    The explicit double sum: for each internal index k, an exact-coefficient
    table is assembled once (integer factorials, perfect-square detection, exact
    rational division) and evaluated in the folded form
    sin^p(theta/2) cos^(2l-p)(theta/2) * sinh^q(tau/2) cosh^(2l-q)(tau/2); the
    exponents are provably non-negative inside the summation bounds, so the
    route is stable on the whole closed interval [0, pi] and reproduces
    Z(0, 0) = delta_mn exactly in IEEE arithmetic.

``z_2f1``
    The terminating-hypergeometric route: per internal index k, a Gauss series
    2F1(m - l, -l - k; m - k + 1; -tan^2(theta/2)) against the rotation angle
    and 2F1(n - l, -l - k; n - k + 1; tanh^2(tau/2)) against the rapidity, each
    multiplied by the square-root factorial prefactor required for agreement
    with the double sum.  When a lower parameter m - k + 1 (or n - k + 1) is a
    non-positive integer, the printed series is singular although the full term
    is finite; that term falls back to the corresponding inner sum.

``su2_factor_p`` / ``qu2_factor_jacobi`` are the rotation-angle and rapidity
halves of the summand, so that sum_k P^l_mk(cos theta) * Q^l_kn(cosh tau)
factorizes Z^l_mn; they deliberately evaluate the unfolded tangent-power form
(with reciprocal-gamma zeroing of out-of-range terms) so the factorization
check compares genuinely different floating-point evaluations.

``generalized_m`` decorates Z with the exponential weights
e^(-m(epsilon + i phi)) and e^(-n(vareps + i chi)); the ``dotted`` flag selects
the conjugate series, whose value at a given six-tuple of real parameters is
the complex conjugate of the undotted value at the same parameters.
``associated_m`` (n = 0, with the e^(-m(epsilon + i phi)) sign convention) and
``zonal_z`` (m = n = 0) are the standard specializations, and ``section3_z``
evaluates the explicit low-order closed forms for m in {-1, 0, +1}.

All powers of i and all fractional powers use principal branches; all functions
are pure and deterministic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .group_kinematics import ComplexEulerAngles

__all__ = [
    "HarmonicIndex",
    "HypersphericalValue",
    "gamma_reciprocal",
    "terminating_2f1",
    "z_sum",
    "z_2f1",
    "su2_factor_p",
    "qu2_factor_jacobi",
    "generalized_m",
    "generalized_m_values",
    "associated_m",
    "zonal_z",
    "section3_z",
]

#: i**n for n mod 4, exact.
_I_POW = (1 + 0j, 1j, -1 + 0j, -1j)


def _doubled(name: str, value: float) -> int:
    """Map a half-integer to its exact doubled integer, validating on the way."""
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    doubled = round(2 * value)
    if abs(2 * value - doubled) > 1e-9:
        raise ValueError(f"{name} must be an integer or half-integer, got {value!r}")
    return int(doubled)


@dataclass(frozen=True)
class HarmonicIndex:
    """Weight l and projections m, n of a representation matrix element.

    l is a non-negative integer or half-integer; m and n belong to the same
    class (l - m and l - n are non-negative integers) with |m|, |n| <= l.
    ``dotted`` selects the conjugate series.
    """

    l: float
    m: float
    n: float
    dotted: bool = False

    def __post_init__(self) -> None:
        L = _doubled("l", self.l)
        M = _doubled("m", self.m)
        N = _doubled("n", self.n)
        if L < 0:
            raise ValueError(f"l must be non-negative, got {self.l!r}")
        for name, D in (("m", M), ("n", N)):
            if abs(D) > L:
                raise ValueError(f"|{name}| must not exceed l, got {name}="
                                 f"{getattr(self, name)!r} with l={self.l!r}")
            if (L - D) % 2:
                raise ValueError(
                    f"l - {name} must be an integer, got l={self.l!r}, "
                    f"{name}={getattr(self, name)!r}")
        object.__setattr__(self, "l", L / 2)
        object.__setattr__(self, "m", M / 2)
        object.__setattr__(self, "n", N / 2)

    @property
    def doubled(self) -> tuple[int, int, int]:
        return int(round(2 * self.l)), int(round(2 * self.m)), int(round(2 * self.n))

    @property
    def eigenvalue(self) -> float:
        """l(l+1), the quadratic-invariant eigenvalue of the weight."""
        return self.l * (self.l + 1)


@dataclass(frozen=True)
class HypersphericalValue:
    """A matrix-element evaluation bundled with the point it was taken at."""

    index: HarmonicIndex
    theta: float
    tau: float
    value: complex
    angles: ComplexEulerAngles | None = None

    def __post_init__(self) -> None:
        value = complex(self.value)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise ValueError(f"value must be finite, got {value!r}")
        object.__setattr__(self, "value", value)


def gamma_reciprocal(x: float) -> float:
    """1/Gamma(x) for (half-)integer x, exactly 0 at the poles.

    Non-positive integers are poles of Gamma, so the reciprocal is defined to
    vanish there; this is the convention that zeroes out-of-range summands in
    the factorial sums below.
    """
    if x == round(x):
        n = int(round(x))
        if n <= 0:
            return 0.0
        return 1.0 / math.factorial(n - 1)
    return 1.0 / math.gamma(x)


def terminating_2f1(a: float, b: float, c: float, x: complex) -> complex:
    """Gauss hypergeometric sum 2F1(a, b; c; x) for terminating parameters.

    Requires a or b to be a non-positive integer so the series is a finite
    polynomial.  Raises ValueError if neither upper parameter terminates the
    series, or if c is a non-positive integer whose pole is reached before
    termination.
    """
    stops = [-int(round(v)) for v in (a, b)
             if v == round(v) and round(v) <= 0]
    if not stops:
        raise ValueError(
            f"series does not terminate: neither a={a!r} nor b={b!r} "
            "is a non-positive integer")
    order = min(stops)
    if c == round(c) and round(c) <= 0 and -int(round(c)) < order:
        raise ValueError(
            f"lower parameter c={c!r} hits a pole before the series "
            f"terminates at order {order}")
    total = 1.0 + 0j if isinstance(x, complex) else 1.0
    term = total
    for j in range(order):
        term *= (a + j) * (b + j) / ((c + j) * (j + 1)) * x
        total += term
    return total


def _sqrt_ratio(factorial_args: tuple[int, ...], denominator: int,
                sign: int) -> float:
    """sign * sqrt(prod of factorials) / denominator, exact when possible.

    When the factorial product is a perfect square the result is an exact
    rational converted once to float (so ratios like sqrt((a! b!)^2)/(a! b!)
    come out as exactly 1.0); otherwise a single correctly-rounded sqrt is used.
    """
    product = 1
    for arg in factorial_args:
        product *= math.factorial(arg)
    root = math.isqrt(product)
    if root * root == product:
        return sign * float(Fraction(root, denominator))
    return sign * math.sqrt(product) / denominator


@lru_cache(maxsize=None)
def _angular_terms(L: int, A: int, K: int, alternating: bool
                   ) -> tuple[tuple[int, int, float], ...]:
    """Exact coefficient table for one half of the Z summand.

    Doubled indices: weight L = 2l, projection A = 2a (a = m on the rotation
    side, a = n on the rapidity side), internal index K = 2k.  Each entry is
    (odd_power, even_power, coefficient) for a term
    coefficient * odd(x/2)**odd_power * even(x/2)**even_power with
    (odd, even) = (sin, cos) or (sinh, cosh).  ``alternating`` applies the
    (-1)^j sign of the rotation side.
    """
    la, lpa = (L - A) // 2, (L + A) // 2
    lk, lpk = (L - K) // 2, (L + K) // 2
    ak = (A - K) // 2
    terms = []
    for j in range(max(0, -ak), min(la, lpk) + 1):
        p = ak + 2 * j
        denominator = (math.factorial(j) * math.factorial(la - j)
                       * math.factorial(lpk - j) * math.factorial(ak + j))
        sign = -1 if (alternating and j % 2) else 1
        terms.append((p, L - p, _sqrt_ratio((la, lpa, lk, lpk),
                                            denominator, sign)))
    return tuple(terms)


@lru_cache(maxsize=None)
def _z_table(L: int, M: int, N: int):
    """Per-k coefficient tables for Z^l_mn, keyed by doubled indices."""
    return tuple(
        (((M - K) // 2) % 4,
         _angular_terms(L, M, K, True),
         _angular_terms(L, N, K, False))
        for K in range(-L, L + 1, 2)
    )


def _z_value(L: int, M: int, N: int, theta: float, tau: float) -> complex:
    """Folded-form evaluation of the double sum at doubled indices."""
    sh, ch = math.sin(theta / 2), math.cos(theta / 2)
    sb, cb = math.sinh(tau / 2), math.cosh(tau / 2)
    total = 0j
    for ipow, theta_terms, tau_terms in _z_table(L, M, N):
        rotation = 0.0
        for p, cp, coeff in theta_terms:
            rotation += coeff * sh**p * ch**cp
        rapidity = 0.0
        for q, cq, coeff in tau_terms:
            rapidity += coeff * sb**q * cb**cq
        total += _I_POW[ipow] * (rotation * rapidity)
    return total


def _validate_theta(theta: float) -> float:
    theta = float(theta)
    if not (math.isfinite(theta) and 0.0 <= theta <= math.pi):
        raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
    return theta


def _validate_tau(tau: float) -> float:
    tau = float(tau)
    if not math.isfinite(tau):
        raise ValueError(f"tau must be finite, got {tau!r}")
    return tau


def z_sum(idx: HarmonicIndex, theta: float, tau: float) -> complex:
    """Z^l_mn(theta, tau) via the exact-coefficient double sum."""
    theta, tau = _validate_theta(theta), _validate_tau(tau)
    L, M, N = idx.doubled
    value = _z_value(L, M, N, theta, tau)
    return value.conjugate() if idx.dotted else value


def _theta_inner_unfolded(L: int, M: int, K: int, theta: float) -> complex:
    """Rotation-side summand in the raw tangent-power form, including i^(m-k).

    Used as the fallback for internal indices where the hypergeometric lower
    parameter is a non-positive integer, and by ``su2_factor_p``.
    """
    la, lpk = (L - M) // 2, (L + K) // 2
    lpa, lk = (L + M) // 2, (L - K) // 2
    ak = (M - K) // 2
    t, c = math.tan(theta / 2), math.cos(theta / 2)
    acc = 0.0
    for j in range(la + 1):
        if (gamma_reciprocal(j + 1) * gamma_reciprocal(la - j + 1)
                * gamma_reciprocal(lpk - j + 1) * gamma_reciprocal(ak + j + 1)) == 0.0:
            continue
        denominator = (math.factorial(j) * math.factorial(la - j)
                       * math.factorial(lpk - j) * math.factorial(ak + j))
        coeff = _sqrt_ratio((la, lpa, lk, lpk), denominator, -1 if j % 2 else 1)
        acc += coeff * t ** (ak + 2 * j)
    return _I_POW[ak % 4] * (c ** L * acc)


def _tau_inner_unfolded(L: int, N: int, K: int, tau: float) -> float:
    """Rapidity-side summand in the raw hyperbolic-tangent form (real)."""
    la, lpk = (L - N) // 2, (L + K) // 2
    lpa, lk = (L + N) // 2, (L - K) // 2
    ak = (N - K) // 2
    t, c = math.tanh(tau / 2), math.cosh(tau / 2)
    acc = 0.0
    for s in range(la + 1):
        if (gamma_reciprocal(s + 1) * gamma_reciprocal(la - s + 1)
                * gamma_reciprocal(lpk - s + 1) * gamma_reciprocal(ak + s + 1)) == 0.0:
            continue
        denominator = (math.factorial(s) * math.factorial(la - s)
                       * math.factorial(lpk - s) * math.factorial(ak + s))
        coeff = _sqrt_ratio((la, lpa, lk, lpk), denominator, 1)
        acc += coeff * t ** (ak + 2 * s)
    return c ** L * acc


def su2_factor_p(l: float, m: float, k: float, theta: float) -> complex:
    """Rotation-angle half P^l_mk(cos theta) of the Z summand.

    Includes the i^(m-k) phase; at theta = 0 reduces to the Kronecker delta.
    """
    idx = HarmonicIndex(l, m, k)  # reuse index validation for the (l, m, k) triple
    theta = _validate_theta(theta)
    L, M, K = idx.doubled
    return _theta_inner_unfolded(L, M, K, theta)


def qu2_factor_jacobi(l: float, k: float, n: float, tau: float) -> float:
    """Rapidity half Q^l_kn(cosh tau) of the Z summand (real-valued).

    At tau = 0 reduces to the Kronecker delta.
    """
    idx = HarmonicIndex(l, k, n)
    tau = _validate_tau(tau)
    L, K, N = idx.doubled
    return _tau_inner_unfolded(L, N, K, tau)


def _theta_factor_2f1(L: int, M: int, K: int, theta: float) -> complex:
    """Rotation-side summand via the terminating Gauss series (with fallback)."""
    ak = (M - K) // 2
    if ak < 0:
        return _theta_inner_unfolded(L, M, K, theta)
    la, lpa = (L - M) // 2, (L + M) // 2
    lk, lpk = (L - K) // 2, (L + K) // 2
    prefactor = _sqrt_ratio(
        (la, lpa, lk, lpk),
        math.factorial(la) * math.factorial(lpk) * math.factorial(ak), 1)
    sh, ch = math.sin(theta / 2), math.cos(theta / 2)
    x = -math.tan(theta / 2) ** 2
    series = terminating_2f1((M - L) / 2, -(L + K) / 2, ak + 1, x)
    return _I_POW[ak % 4] * (prefactor * sh**ak * ch**(L - ak) * series)


def _tau_factor_2f1(L: int, N: int, K: int, tau: float) -> float:
    """Rapidity-side summand via the terminating Gauss series (with fallback)."""
    ak = (N - K) // 2
    if ak < 0:
        return _tau_inner_unfolded(L, N, K, tau)
    la, lpa = (L - N) // 2, (L + N) // 2
    lk, lpk = (L - K) // 2, (L + K) // 2
    prefactor = _sqrt_ratio(
        (la, lpa, lk, lpk),
        math.factorial(la) * math.factorial(lpk) * math.factorial(ak), 1)
    sb, cb = math.sinh(tau / 2), math.cosh(tau / 2)
    x = math.tanh(tau / 2) ** 2
    series = terminating_2f1((N - L) / 2, -(L + K) / 2, ak + 1, x)
    return prefactor * sb**ak * cb**(L - ak) * series


def z_2f1(idx: HarmonicIndex, theta: float, tau: float) -> complex:
    """Z^l_mn(theta, tau) via terminating hypergeometric series per summand."""
    theta, tau = _validate_theta(theta), _validate_tau(tau)
    L, M, N = idx.doubled
    total = 0j
    for K in range(-L, L + 1, 2):
        total += _theta_factor_2f1(L, M, K, theta) * _tau_factor_2f1(L, N, K, tau)
    return total.conjugate() if idx.dotted else total


def generalized_m_values(l: float, m: float, n: float, phi: float,
                         epsilon: float, theta: float, tau: float,
                         chi: float, vareps: float, *,
                         dotted: bool = False) -> complex:
    """Exponentially weighted matrix element at raw parameter values.

    This entry point does not range-validate the six parameters: the
    finite-difference verification stencils legitimately step slightly outside
    the canonical parameter ranges.  Use ``generalized_m`` for validated input.
    The dotted value at a six-tuple of reals is the complex conjugate of the
    undotted value at the same six-tuple.
    """
    L, M, N = HarmonicIndex(l, m, n).doubled
    weight = cmath.exp(complex(-(m * epsilon + n * vareps),
                               -(m * phi + n * chi)))
    value = weight * _z_value(L, M, N, theta, tau)
    return value.conjugate() if dotted else value


def generalized_m(idx: HarmonicIndex, angles: ComplexEulerAngles) -> complex:
    """e^(-m(epsilon + i phi)) * Z^l_mn(theta, tau) * e^(-n(vareps + i chi))."""
    return generalized_m_values(idx.l, idx.m, idx.n, angles.phi, angles.epsilon,
                                angles.theta, angles.tau, angles.chi,
                                angles.vareps, dotted=idx.dotted)


def associated_m(l: float, m: float, angles: ComplexEulerAngles) -> complex:
    """Associated function: the n = 0 specialization e^(-m(epsilon+i phi)) Z^l_m0."""
    return generalized_m_values(l, m, 0.0, angles.phi, angles.epsilon,
                                angles.theta, angles.tau, 0.0, 0.0)


def zonal_z(l: float, theta: float, tau: float) -> complex:
    """Zonal function Z^l_00(theta, tau)."""
    return z_sum(HarmonicIndex(l, 0.0, 0.0), theta, tau)


def section3_z(l: int, m: int, theta: float, tau: float) -> complex:
    """Closed-form specialization of Z^l_m0 for m in {-1, 0, +1}, integer l >= 1.

    Evaluates the explicit low-order displays (square-root factorial prefactor
    times a terminating Gauss series per internal index, falling back to the
    raw inner sum where the series' lower parameter is non-positive).  Agrees
    with ``z_2f1(HarmonicIndex(l, m, 0), theta, tau)``.
    """
    if l != int(l) or int(l) < 1:
        raise ValueError(f"l must be an integer >= 1, got {l!r}")
    if m not in (-1, 0, 1):
        raise ValueError(f"m must be one of -1, 0, +1, got {m!r}")
    l = int(l)
    theta, tau = _validate_theta(theta), _validate_tau(tau)
    tan2 = math.tan(theta / 2) ** 2
    tanh2 = math.tanh(tau / 2) ** 2
    total = 0j
    for k in range(-l, l + 1):
        mk, nk = m - k, -k
        if mk >= 0:
            prefactor = math.sqrt(
                math.factorial(l - m) * math.factorial(l + m)
                * math.factorial(l - k) * math.factorial(l + k)
            ) / (math.factorial(l - m) * math.factorial(l + k)
                 * math.factorial(mk))
            rotation = (_I_POW[mk % 4] * prefactor
                        * math.sin(theta / 2) ** mk
                        * math.cos(theta / 2) ** (2 * l - mk)
                        * terminating_2f1(m - l, -l - k, mk + 1, -tan2))
        else:
            rotation = _theta_inner_unfolded(2 * l, 2 * m, 2 * k, theta)
        if nk >= 0:
            prefactor = math.sqrt(
                math.factorial(l) * math.factorial(l)
                * math.factorial(l - k) * math.factorial(l + k)
            ) / (math.factorial(l) * math.factorial(l + k) * math.factorial(nk))
            rapidity = (prefactor
                        * math.sinh(tau / 2) ** nk
                        * math.cosh(tau / 2) ** (2 * l - nk)
                        * terminating_2f1(-l, -l - k, nk + 1, tanh2))
        else:
            rapidity = _tau_inner_unfolded(2 * l, 0, 2 * k, tau)
        total += rotation * rapidity
    return total
