"""Boost-rotation sector: spin-block matrices, the radial system, and
separated solutions on the complex two-sphere.

CONTENTS
    * ``build_matrices`` -- the 3x3 spin-block matrices Lambda_1..3 (scaled by
      a constant c11) and the six 6x6 block matrices Upsilon built from them.
      Two variants ship: the verbatim printed form, whose Lambda_1 is missing
      its (2,3) entry and consequently violates the spin-1 algebra, and the
      corrected ladder-symmetric form (the default), which satisfies
      [Lambda_i, Lambda_j] = +i eps_ijk Lambda_k and
      Lambda_1^2 + Lambda_2^2 + Lambda_3^2 = 2 * identity at c11 = 1.
    * ``RadialSolution`` / ``radial_residual`` -- the first-order radial
      system at angular order l in r-multiplied form,

          2r f'_{1,+1}(r) - f_{1,+1}(r) - sqrt(2l(l+1)) f_{1,0}(r) = 0,
         -2r f'_{1,-1}(r) + f_{1,-1}(r) + sqrt(2l(l+1)) f_{1,0}(r) = 0,

      plus the dotted pair at the conjugated argument r*.  The system forces
      f_{1,-1} = f_{1,+1} identically.  Closed-form solutions are
      f_{1,+-1} = C sqrt(r) + (linear coefficient) * r with
      f_{1,0} = sqrt(2l(l+1)) r.  The "paper" variant uses linear coefficient
      sqrt(2l(l+1)), which leaves residual (sqrt(2l(l+1)) - 2l(l+1)) r in the
      first equation (kept as a documented, flagged discrepancy); the
      "corrected" variant uses 2l(l+1), which zeroes all four residuals.
    * ``separated_psi`` -- the angular-times-radial solution triple
      psi_1 = f_{1,+1}(r) M^{+1}_l,  psi_2 = f_{1,0}(r) Z^l_00,
      psi_3 = f_{1,-1}(r) M^{-1}_l, with the dotted triple built from the
      conjugated radius and the conjugated (dotted) angular functions.

CONVENTIONS
    Square roots of complex r use the principal branch (cut along the
    negative real axis); sample points in tests avoid the cut.  r is an
    independent complex coordinate, not derived from the spacetime point.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .group_kinematics import ComplexEulerAngles
from .lorentz_harmonics import generalized_m_values

__all__ = [
    "LambdaMatrices",
    "RadialSolution",
    "SeparatedSolution",
    "build_matrices",
    "radial_residual",
    "radial_ladder",
    "separated_psi",
]


def radial_ladder(l: int) -> float:
    """The coupling constant sqrt(2 l (l+1)) of the radial system."""
    return math.sqrt(2.0 * l * (l + 1))


@dataclass(frozen=True)
class LambdaMatrices:
    """Spin-block matrices Lambda_1..3 and the 6x6 Upsilon family.

    The Upsilon matrices are block-anti-diagonal:
    Upsilon_i = [[0, conj(Lambda_i)], [Lambda_i, 0]] for i = 1..3 and the same
    with an extra factor i on both corner blocks for i = 4..6.
    """

    lambda1: np.ndarray
    lambda2: np.ndarray
    lambda3: np.ndarray
    upsilons: tuple[np.ndarray, ...]
    c11: complex
    corrected: bool

    @property
    def lambdas(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.lambda1, self.lambda2, self.lambda3

    def casimir(self) -> np.ndarray:
        """Lambda_1^2 + Lambda_2^2 + Lambda_3^2 (equals 2 c11^2 I if corrected)."""
        return sum(lam @ lam for lam in self.lambdas)

    def casimir_defect(self) -> float:
        """Max-entry distance of the Casimir sum from 2 c11^2 * identity."""
        target = 2.0 * self.c11 * self.c11 * np.eye(3)
        return float(np.abs(self.casimir() - target).max())

    def commutator_sign(self) -> int:
        """Global sign s in [Lambda_i, Lambda_j] = s i c11 eps_ijk Lambda_k.

        Measured numerically; +1 for the corrected variant.  Raises
        AssertionError if the commutators are not proportional to the
        generators (as happens for the verbatim printed variant).
        """
        unit = [lam / self.c11 for lam in self.lambdas]
        signs = []
        for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            commutator = unit[i] @ unit[j] - unit[j] @ unit[i]
            target = 1j * unit[k]
            entry = np.argmax(np.abs(target))
            ratio = commutator.flat[entry] / target.flat[entry]
            if np.abs(commutator - ratio * target).max() > 1e-12:
                raise AssertionError(
                    "commutators are not proportional to the generators")
            signs.append(complex(ratio))
        if len({round(s.real) for s in signs}) != 1 or any(
                abs(s.imag) > 1e-12 for s in signs):
            raise AssertionError(f"inconsistent commutator signs: {signs}")
        return int(round(signs[0].real))


def build_matrices(c11: complex = 1.0, corrected: bool = True) -> LambdaMatrices:
    """Construct the Lambda and Upsilon matrices at overall scale c11.

    corrected=False reproduces the printed arrays verbatim, including the
    Lambda_1 whose second row is missing its (2,3) entry; that variant fails
    both the commutation relations and the Casimir identity and is retained
    as a documented negative control.  corrected=True (default) restores the
    ladder-symmetric (2,3) entry.
    """
    c11 = complex(c11)
    if c11 == 0:
        raise ValueError("c11 must be non-zero")
    if not (math.isfinite(c11.real) and math.isfinite(c11.imag)):
        raise ValueError(f"c11 must be finite, got {c11!r}")
    over_sqrt2 = c11 / math.sqrt(2.0)
    row2_end = 1.0 if corrected else 0.0
    lambda1 = over_sqrt2 * np.array([[0, 1, 0], [1, 0, row2_end], [0, 1, 0]],
                                    dtype=complex)
    lambda2 = over_sqrt2 * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]])
    lambda3 = c11 * np.array([[1, 0, 0], [0, 0, 0], [0, 0, -1]], dtype=complex)
    lambdas = (lambda1, lambda2, lambda3)
    zero = np.zeros((3, 3), dtype=complex)
    upsilons = tuple(
        np.block([[zero, factor * lam.conj()], [factor * lam, zero]])
        for factor in (1.0, 1j) for lam in lambdas
    )
    return LambdaMatrices(lambda1, lambda2, lambda3, upsilons, c11, corrected)


_VARIANTS = ("paper", "corrected")


@dataclass(frozen=True)
class RadialSolution:
    """Closed-form solutions of the radial system at angular order l.

    f_{1,+-1}(r) = C sqrt(r) + (linear coefficient) r,
    f_{1,0}(r)   = sqrt(2l(l+1)) r,

    where the linear coefficient is sqrt(2l(l+1)) for variant="paper"
    (printed form; leaves a nonzero first-equation residual) and 2l(l+1) for
    variant="corrected" (zeroes all four residuals).  The dotted functions
    have the same shape with integration constant Cdot, evaluated at the
    conjugated radius.  f_{1,-1} coincides with f_{1,+1} identically, as
    forced by the system.
    """

    l: int
    C: complex = 0.0
    Cdot: complex = 0.0
    variant: str = "corrected"

    def __post_init__(self) -> None:
        if self.l != int(self.l) or int(self.l) < 1:
            raise ValueError(f"l must be an integer >= 1, got {self.l!r}")
        object.__setattr__(self, "l", int(self.l))
        if self.variant not in _VARIANTS:
            raise ValueError(
                f"variant must be one of {_VARIANTS}, got {self.variant!r}")
        for name in ("C", "Cdot"):
            value = complex(getattr(self, name))
            if not (math.isfinite(value.real) and math.isfinite(value.imag)):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    @property
    def ladder(self) -> float:
        return radial_ladder(self.l)

    @property
    def linear_coefficient(self) -> float:
        if self.variant == "paper":
            return self.ladder
        return 2.0 * self.l * (self.l + 1)

    def _f(self, constant: complex, r: complex) -> complex:
        return constant * cmath.sqrt(r) + self.linear_coefficient * r

    def _f_prime(self, constant: complex, r: complex) -> complex:
        derivative = complex(self.linear_coefficient)
        if constant != 0:
            derivative += constant / (2.0 * cmath.sqrt(r))
        return derivative

    # Undotted triple (integration constant C).
    def f_plus(self, r: complex) -> complex:
        return self._f(self.C, r)

    def f_plus_prime(self, r: complex) -> complex:
        return self._f_prime(self.C, r)

    def f_zero(self, r: complex) -> complex:
        return self.ladder * r

    def f_zero_prime(self, r: complex) -> complex:
        return complex(self.ladder)

    def f_minus(self, r: complex) -> complex:
        return self.f_plus(r)

    def f_minus_prime(self, r: complex) -> complex:
        return self.f_plus_prime(r)

    # Dotted triple (integration constant Cdot), evaluated at r* by callers.
    def fdot_plus(self, r_star: complex) -> complex:
        return self._f(self.Cdot, r_star)

    def fdot_plus_prime(self, r_star: complex) -> complex:
        return self._f_prime(self.Cdot, r_star)

    def fdot_zero(self, r_star: complex) -> complex:
        return self.ladder * r_star

    def fdot_zero_prime(self, r_star: complex) -> complex:
        return complex(self.ladder)

    def fdot_minus(self, r_star: complex) -> complex:
        return self.fdot_plus(r_star)

    def fdot_minus_prime(self, r_star: complex) -> complex:
        return self.fdot_plus_prime(r_star)

    def select(self, lam: int, dotted: bool = False):
        """The radial evaluator for projection lam in {+1, 0, -1}."""
        table = {
            (1, False): self.f_plus, (0, False): self.f_zero,
            (-1, False): self.f_minus,
            (1, True): self.fdot_plus, (0, True): self.fdot_zero,
            (-1, True): self.fdot_minus,
        }
        try:
            return table[(lam, dotted)]
        except KeyError:
            raise ValueError(
                f"projection label must be +1, 0, or -1, got {lam!r}") from None


def radial_residual(l: int, radial, r: complex
                    ) -> tuple[complex, complex, complex, complex]:
    """Residuals of the four radial equations at r (and r* for the dotted pair).

    The equations are taken in r-multiplied form,

        eq1 =  2r f'_{1,+1}(r) - f_{1,+1}(r) - sqrt(2l(l+1)) f_{1,0}(r),
        eq2 = -2r f'_{1,-1}(r) + f_{1,-1}(r) + sqrt(2l(l+1)) f_{1,0}(r),

    with eq3/eq4 the dotted analogues at r* = conj(r).  ``radial`` may be any
    object exposing the twelve evaluator methods of RadialSolution.
    """
    if l != int(l) or int(l) < 1:
        raise ValueError(f"l must be an integer >= 1, got {l!r}")
    r = complex(r)
    if r == 0:
        raise ValueError("r = 0 is a singular point of the radial system")
    ladder = radial_ladder(int(l))
    eq1 = (2.0 * r * radial.f_plus_prime(r) - radial.f_plus(r)
           - ladder * radial.f_zero(r))
    eq2 = (-2.0 * r * radial.f_minus_prime(r) + radial.f_minus(r)
           + ladder * radial.f_zero(r))
    r_star = r.conjugate()
    eq3 = (2.0 * r_star * radial.fdot_plus_prime(r_star)
           - radial.fdot_plus(r_star) - ladder * radial.fdot_zero(r_star))
    eq4 = (-2.0 * r_star * radial.fdot_minus_prime(r_star)
           + radial.fdot_minus(r_star) + ladder * radial.fdot_zero(r_star))
    return eq1, eq2, eq3, eq4


@dataclass(frozen=True)
class SeparatedSolution:
    """Angular-times-radial triple (psi_1, psi_2, psi_3) and its dotted twin."""

    l: int
    r: complex
    psi: tuple[complex, complex, complex]
    psi_dot: tuple[complex, complex, complex]


def separated_psi(l: int, radial, r: complex,
                  angles: ComplexEulerAngles) -> SeparatedSolution:
    """Separated solution triple at radius r and group angles.

    psi_1 = f_{1,+1}(r) M^{+1}_l(phi, eps, theta, tau, 0, 0),
    psi_2 = f_{1,0}(r)  Z^l_00(theta, tau),
    psi_3 = f_{1,-1}(r) M^{-1}_l(phi, eps, theta, tau, 0, 0),

    where M^{m}_l is the associated (n = 0) exponentially weighted matrix
    element.  The dotted triple uses the dotted radial functions at r* and the
    dotted (conjugated) angular functions at the same real parameters.
    """
    if l != int(l) or int(l) < 1:
        raise ValueError(f"l must be an integer >= 1, got {l!r}")
    l = int(l)
    r = complex(r)

    def angular(m: int, dotted: bool) -> complex:
        return generalized_m_values(l, m, 0.0, angles.phi, angles.epsilon,
                                    angles.theta, angles.tau, 0.0, 0.0,
                                    dotted=dotted)

    psi = (radial.f_plus(r) * angular(+1, False),
           radial.f_zero(r) * angular(0, False),
           radial.f_minus(r) * angular(-1, False))
    r_star = r.conjugate()
    psi_dot = (radial.fdot_plus(r_star) * angular(+1, True),
               radial.fdot_zero(r_star) * angular(0, True),
               radial.fdot_minus(r_star) * angular(-1, True))
    return SeparatedSolution(l, r, psi, psi_dot)
