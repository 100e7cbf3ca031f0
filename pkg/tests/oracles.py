"""Independent reference implementations used only by the test suite.

Everything in here is deliberately written against different libraries and in a
different style from the package under test:

* ``z_reference`` evaluates the hyperspherical double sum directly with mpmath at
  40 significant digits, keeping the raw tangent/hyperbolic-tangent powers instead
  of the package's folded sine/cosine form and exact coefficient tables.
* ``wigner_d`` is the textbook factorial formula for the SU(2) small-d matrix.
* ``brute_2f1`` sums the terminating Gauss series with exact rational coefficients.

None of these import the package.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath as mp

_I_POW = (1, 1j, -1, -1j)  # i**n for n mod 4


def _doubled(value: float) -> int:
    doubled = round(2 * value)
    if abs(2 * value - doubled) > 1e-12:
        raise ValueError(f"not a half-integer: {value!r}")
    return int(doubled)


def z_reference(l: float, m: float, n: float, theta: float, tau: float,
                dps: int = 40) -> complex:
    """High-precision direct evaluation of the hyperspherical function.

    Requires 0 <= theta < pi (the raw tangent form is singular at pi).
    """
    L, M, N = _doubled(l), _doubled(m), _doubled(n)
    with mp.workdps(dps):
        th = mp.mpf(theta) / 2
        ta = mp.mpf(tau) / 2
        t, c = mp.tan(th), mp.cos(th)
        u, b = mp.tanh(ta), mp.cosh(ta)
        total = mp.mpc(0)
        for K in range(-L, L + 1, 2):
            lm, lpm = (L - M) // 2, (L + M) // 2
            ln_, lpn = (L - N) // 2, (L + N) // 2
            lk, lpk = (L - K) // 2, (L + K) // 2
            mk, nk = (M - K) // 2, (N - K) // 2
            theta_sum = mp.mpf(0)
            for j in range(max(0, -mk), min(lm, lpk) + 1):
                num = (-1) ** j * mp.power(t, mk + 2 * j)
                den = (mp.factorial(j) * mp.factorial(lm - j)
                       * mp.factorial(lpk - j) * mp.factorial(mk + j))
                theta_sum += num / den
            theta_part = (mp.sqrt(mp.factorial(lm) * mp.factorial(lpm)
                                  * mp.factorial(lk) * mp.factorial(lpk))
                          * mp.power(c, L) * theta_sum)
            tau_sum = mp.mpf(0)
            for s in range(max(0, -nk), min(ln_, lpk) + 1):
                num = mp.power(u, nk + 2 * s)
                den = (mp.factorial(s) * mp.factorial(ln_ - s)
                       * mp.factorial(lpk - s) * mp.factorial(nk + s))
                tau_sum += num / den
            tau_part = (mp.sqrt(mp.factorial(ln_) * mp.factorial(lpn)
                                * mp.factorial(lk) * mp.factorial(lpk))
                        * mp.power(b, L) * tau_sum)
            total += _I_POW[mk % 4] * theta_part * tau_part
        return complex(total)


def wigner_d(l: float, mp_: float, m: float, beta: float) -> float:
    """Textbook SU(2) small-d matrix element d^l_{mp_, m}(beta)."""
    L, MP, M = _doubled(l), _doubled(mp_), _doubled(m)
    jm = (L + M) // 2       # l + m
    jmp = (L + MP) // 2     # l + m'
    jmm = (L - M) // 2      # l - m
    jmmp = (L - MP) // 2    # l - m'
    dmm = (MP - M) // 2     # m' - m
    prefactor = math.sqrt(math.factorial(jm) * math.factorial(jmm)
                          * math.factorial(jmp) * math.factorial(jmmp))
    total = 0.0
    half = beta / 2
    for s in range(max(0, -dmm), min(jm, jmmp) + 1):
        denom = (math.factorial(jm - s) * math.factorial(s)
                 * math.factorial(dmm + s) * math.factorial(jmmp - s))
        sign = -1.0 if (dmm + s) % 2 else 1.0
        cos_pow = jm + jmmp - 2 * s
        sin_pow = dmm + 2 * s
        total += (sign * math.cos(half) ** cos_pow * math.sin(half) ** sin_pow
                  / denom)
    return prefactor * total


def brute_2f1(a: int, b: int, c: float, x: float) -> float:
    """Terminating Gauss hypergeometric sum with exact rational coefficients."""
    stops = [-v for v in (a, b) if v == int(v) and v <= 0]
    if not stops:
        raise ValueError("series does not terminate")
    order = int(min(stops))
    total = 0.0
    for k in range(order + 1):
        coeff = Fraction(1)
        for i in range(k):
            coeff *= Fraction((a + i) * (b + i), 1)
            coeff /= Fraction((c + i) * (i + 1))
        total += float(coeff) * x ** k
    return total
