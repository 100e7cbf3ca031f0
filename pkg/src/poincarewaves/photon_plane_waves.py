"""Translation-sector photon: first-order wave equations and plane-wave modes.

PHYSICS SCOPE
    A complex 3-vector field psi is governed by a pair of first-order equations

        (i/c) d/dt psi - i (alpha . grad) psi = 0        (ME1)
        (i/c) d/dt psi + i (alpha . grad) psi = 0        (ME2)

    built from the spin matrices alpha_1..alpha_3 defined below (hbar = 1
    throughout; c is configurable, default 1).  The 6-component combination
    Psi = (psi; psi~) couples them through the block matrices Gamma_mu:

        [(i/c) d/dt Gamma_0 - i Gamma_j d/dx_j] Psi = 0   (6x6 form, "ME6")

    whose upper three rows apply the ME2 operator to the lower block and whose
    lower rows apply the ME1 operator to the upper block; consequently a column
    (u; u*) solves the 6x6 system exactly when u solves ME1 (and then u*
    automatically solves ME2, since conj(alpha) = -alpha).

MEASURED SIGN CONVENTIONS (frozen by computation, asserted in tests)
    * The alpha matrices are minus the standard spin-1 generators:
      [alpha_i, alpha_j] = -i eps_ijk alpha_k (global commutator sign -1), and
      (alpha . grad) psi = -i curl psi.
    * The Hermitian "curl matrix" M(k) = -c (k . alpha) = i c [k x] has
      eigenvalues {+c|k|, -c|k|, 0}; the closed-form polarization vectors
      carry M eps_+ = +c|k| eps_+, M eps_- = -c|k| eps_-, M eps_0 = 0.
    * With omega = +c|k|, the mode eps_+ e^{i(k.x - wt)} therefore solves ME1
      and eps_- e^{i(k.x - wt)} solves ME2; conjugation swaps the two.
    * For w = E - iB the classical Maxwell system corresponds to ME2, so the
      field extraction E = Re(w), B = -Im(w) in ``maxwell_residuals`` uses each
      mode's ME2-solving member.

    Plane waves are represented exactly as lists of PlaneWaveTerm
    (amplitude, wavevector, frequency) so that gradients and time derivatives
    are algebraic: grad -> i k, d/dt -> -i omega.  All residuals are therefore
    exact-arithmetic up to floating-point roundoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "SpinMatrices",
    "WaveVector",
    "PolarizationTriple",
    "PhotonPlaneWave",
    "PlaneWaveTerm",
    "FieldPair",
    "Eigenstructure",
    "spin_matrices",
    "commutator_sign",
    "curl_matrix",
    "eigenstructure",
    "polarization_vectors",
    "transversality_residual",
    "plane_wave",
    "me1_member",
    "me2_member",
    "me6_column",
    "evaluate_terms",
    "dirac_form_residual",
    "dirac_form_scale",
    "maxwell_residuals",
    "maxwell_residuals_from_terms",
    "energy_density",
    "lagrangian_density_translation",
    "anti_equation_residual",
    "NORMALIZATION",
]

#: Plane-wave normalization {2 (2 pi)^3}^(-1/2).
NORMALIZATION = 1.0 / math.sqrt(2.0 * (2.0 * math.pi) ** 3)

#: Relative threshold below which the transverse polarization axis is treated
#: as degenerate (k1^2 + k2^2 < DEGENERACY_THRESHOLD * |k|^2).
DEGENERACY_THRESHOLD = 1e-12

_ALPHA1 = np.array([[0, 0, 0], [0, 0, 1j], [0, -1j, 0]], dtype=complex)
_ALPHA2 = np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]], dtype=complex)
_ALPHA3 = np.array([[0, 1j, 0], [-1j, 0, 0], [0, 0, 0]], dtype=complex)
_ALPHA = (_ALPHA1, _ALPHA2, _ALPHA3)

_ID3 = np.eye(3, dtype=complex)
_GAMMA0 = np.block([[np.zeros((3, 3)), _ID3], [_ID3, np.zeros((3, 3))]])
_GAMMA = tuple(
    np.block([[np.zeros((3, 3), dtype=complex), -alpha],
              [alpha, np.zeros((3, 3), dtype=complex)]])
    for alpha in _ALPHA
)

for _matrix in (*_ALPHA, _GAMMA0, *_GAMMA):
    _matrix.setflags(write=False)


@dataclass(frozen=True)
class SpinMatrices:
    """The 3x3 spin matrices and the 6x6 block matrices built from them."""

    alpha1: np.ndarray
    alpha2: np.ndarray
    alpha3: np.ndarray
    gamma0: np.ndarray
    gamma1: np.ndarray
    gamma2: np.ndarray
    gamma3: np.ndarray

    @property
    def alphas(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.alpha1, self.alpha2, self.alpha3

    @property
    def gammas(self) -> tuple[np.ndarray, ...]:
        return self.gamma0, self.gamma1, self.gamma2, self.gamma3


def spin_matrices() -> SpinMatrices:
    """Fresh copies of the alpha and Gamma matrices."""
    return SpinMatrices(*(m.copy() for m in (*_ALPHA, _GAMMA0, *_GAMMA)))


def commutator_sign() -> int:
    """Global sign s in [alpha_i, alpha_j] = s i eps_ijk alpha_k, measured.

    The three cyclic pairs are required to agree exactly; the measured value
    is -1 (the matrices are minus the standard spin-1 generators).
    """
    signs = []
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        commutator = _ALPHA[i] @ _ALPHA[j] - _ALPHA[j] @ _ALPHA[i]
        target = 1j * _ALPHA[k]
        entry = np.argmax(np.abs(target))
        ratio = commutator.flat[entry] / target.flat[entry]
        if np.abs(commutator - ratio * target).max() > 1e-14:
            raise AssertionError("commutator is not proportional to i*alpha_k")
        signs.append(complex(ratio))
    if len({round(s.real) for s in signs}) != 1 or any(abs(s.imag) > 1e-14 for s in signs):
        raise AssertionError(f"inconsistent commutator signs: {signs}")
    return int(round(signs[0].real))


@dataclass(frozen=True)
class WaveVector:
    """Spatial wavevector (units: inverse length)."""

    k1: float
    k2: float
    k3: float

    def __post_init__(self) -> None:
        for name in ("k1", "k2", "k3"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    @property
    def array(self) -> np.ndarray:
        return np.array([self.k1, self.k2, self.k3])

    @property
    def magnitude(self) -> float:
        return math.sqrt(self.k1**2 + self.k2**2 + self.k3**2)

    def omega(self, c: float = 1.0) -> float:
        """Dispersion omega = c |k| for the propagating modes."""
        return c * self.magnitude


def _as_wavevector(k) -> WaveVector:
    if isinstance(k, WaveVector):
        return k
    k1, k2, k3 = (float(component) for component in k)
    return WaveVector(k1, k2, k3)


def _check_helicity(lam: int) -> int:
    if lam not in (-1, 0, 1):
        raise ValueError(f"helicity label must be +1, 0, or -1, got {lam!r}")
    return int(lam)


def _check_c(c: float) -> float:
    c = float(c)
    if not (math.isfinite(c) and c > 0):
        raise ValueError(f"c must be a positive finite constant, got {c!r}")
    return c


def curl_matrix(k, c: float = 1.0) -> np.ndarray:
    """The Hermitian matrix M(k) = -c (k . alpha) = i c [k x].

    Acting on an amplitude a, M a = i c k x a, so the plane-wave eigenproblem
    of the first-order equations is M eps = omega eps.
    """
    kv = _as_wavevector(k)
    c = _check_c(c)
    return -c * (kv.k1 * _ALPHA1 + kv.k2 * _ALPHA2 + kv.k3 * _ALPHA3)


@dataclass(frozen=True)
class Eigenstructure:
    """Spectral data of the curl matrix, eigenvalues ascending."""

    eigenvalues: np.ndarray   # [-c|k|, 0, +c|k|]
    eigenvectors: np.ndarray  # columns matching eigenvalues

    @property
    def omega_minus(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def omega_zero(self) -> float:
        return float(self.eigenvalues[1])

    @property
    def omega_plus(self) -> float:
        return float(self.eigenvalues[2])

    def vector(self, position: int) -> np.ndarray:
        return self.eigenvectors[:, position]


def eigenstructure(k, c: float = 1.0) -> Eigenstructure:
    """Eigen-decomposition of the curl matrix (Hermitian solver, ascending)."""
    kv = _as_wavevector(k)
    if kv.magnitude == 0.0:
        raise ValueError("wavevector must be non-zero for the eigenproblem")
    values, vectors = np.linalg.eigh(curl_matrix(kv, c))
    return Eigenstructure(values, vectors)


@dataclass(frozen=True)
class PolarizationTriple:
    """Unit polarization vectors: transverse eps_+, eps_-, longitudinal eps_0."""

    eps_plus: np.ndarray
    eps_minus: np.ndarray
    eps_zero: np.ndarray

    def select(self, lam: int) -> np.ndarray:
        lam = _check_helicity(lam)
        return {1: self.eps_plus, 0: self.eps_zero, -1: self.eps_minus}[lam]


def polarization_vectors(k) -> PolarizationTriple:
    """Closed-form polarization vectors for wavevector k.

    eps_pm = (-k1 k3 +- i k2 |k|, -k2 k3 -+ i k1 |k|, k1^2 + k2^2)
             / sqrt(2 |k|^2 (k1^2 + k2^2)),   eps_0 = k / |k|.

    When k1^2 + k2^2 < 1e-12 |k|^2 the transverse denominators degenerate and
    the continuous limit along k2 = 0, k1 -> 0+ is used instead:
    eps_pm = (-1, -+ i sign(k3), 0)/sqrt(2), eps_0 = (0, 0, sign(k3)).
    The vectors satisfy M eps_lam = lam c |k| eps_lam for the curl matrix M.
    """
    kv = _as_wavevector(k)
    norm = kv.magnitude
    if norm == 0.0:
        raise ValueError("wavevector must be non-zero to define polarizations")
    k1, k2, k3 = kv.k1, kv.k2, kv.k3
    perp_sq = k1 * k1 + k2 * k2
    if perp_sq < DEGENERACY_THRESHOLD * norm * norm:
        sign3 = 1.0 if k3 > 0 else -1.0
        inv_sqrt2 = 1.0 / math.sqrt(2.0)
        eps_plus = np.array([-1.0, -1j * sign3, 0.0]) * inv_sqrt2
        eps_minus = np.array([-1.0, +1j * sign3, 0.0]) * inv_sqrt2
        eps_zero = np.array([0.0, 0.0, sign3], dtype=complex)
        return PolarizationTriple(eps_plus, eps_minus, eps_zero)
    denominator = math.sqrt(2.0 * norm * norm * perp_sq)
    eps_plus = np.array([
        complex(-k1 * k3, k2 * norm),
        complex(-k2 * k3, -k1 * norm),
        complex(perp_sq, 0.0),
    ]) / denominator
    eps_minus = np.array([
        complex(-k1 * k3, -k2 * norm),
        complex(-k2 * k3, k1 * norm),
        complex(perp_sq, 0.0),
    ]) / denominator
    eps_zero = kv.array.astype(complex) / norm
    return PolarizationTriple(eps_plus, eps_minus, eps_zero)


def transversality_residual(k, lam: int) -> float:
    """|k . eps_lam|: zero for the transverse modes, |k| for the longitudinal."""
    kv = _as_wavevector(k)
    eps = polarization_vectors(kv).select(lam)
    return float(abs(kv.array @ eps))


@dataclass(frozen=True)
class PlaneWaveTerm:
    """One exact exponential term: amplitude * exp[i (k.x - omega t)].

    Derivatives act algebraically: grad -> i k, d/dt -> -i omega.
    """

    amplitude: np.ndarray
    kvec: np.ndarray
    omega: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "amplitude",
                           np.asarray(self.amplitude, dtype=complex))
        object.__setattr__(self, "kvec", np.asarray(self.kvec, dtype=float))
        if self.kvec.shape != (3,):
            raise ValueError("kvec must be a 3-vector")
        object.__setattr__(self, "omega", float(self.omega))

    def phase(self, x, t: float) -> complex:
        return complex(np.exp(1j * (self.kvec @ np.asarray(x, dtype=float)
                                    - self.omega * t)))

    def conjugate(self) -> "PlaneWaveTerm":
        """Term representing the complex conjugate of this term's value."""
        return PlaneWaveTerm(self.amplitude.conjugate(), -self.kvec, -self.omega)


def evaluate_terms(terms: Iterable[PlaneWaveTerm], x, t: float) -> np.ndarray:
    """Sum of amplitude * phase over the terms at spacetime point (x, t)."""
    terms = list(terms)
    if not terms:
        return np.zeros(0, dtype=complex)
    total = np.zeros_like(terms[0].amplitude, dtype=complex)
    for term in terms:
        total = total + term.amplitude * term.phase(x, t)
    return total


@dataclass(frozen=True)
class FieldPair:
    """Field strengths extracted from a 6-component value.

    The upper and lower 3-blocks of a 6-component value are read as E - iB and
    E + iB respectively, so E = (upper + lower)/2 and B = i (upper - lower)/2.
    For conjugate-paired columns (lower = conj(upper)) both are real; the
    arrays are kept complex so the extraction round-trips any value.
    """

    E: np.ndarray
    B: np.ndarray

    @classmethod
    def from_value(cls, psi6) -> "FieldPair":
        psi6 = np.asarray(psi6, dtype=complex)
        if psi6.shape != (6,):
            raise ValueError("expected a 6-component value")
        upper, lower = psi6[:3], psi6[3:]
        return cls((upper + lower) / 2, 1j * (upper - lower) / 2)

    def reconstruct(self) -> np.ndarray:
        return np.concatenate([self.E - 1j * self.B, self.E + 1j * self.B])


@dataclass(frozen=True)
class PhotonPlaneWave:
    """Displayed 6-component plane-wave column for helicity lam.

    value(x, t) = N (eps_lam; eps_lam) exp[i(k.x - omega t)] with
    N = {2 (2 pi)^3}^(-1/2), omega = c|k| for lam = +-1; the longitudinal
    mode carries no time dependence (omega = 0).
    """

    k: WaveVector
    lam: int
    c: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", _as_wavevector(self.k))
        object.__setattr__(self, "lam", _check_helicity(self.lam))
        object.__setattr__(self, "c", _check_c(self.c))
        if self.k.magnitude == 0.0:
            raise ValueError("wavevector must be non-zero")

    @property
    def omega(self) -> float:
        return self.k.omega(self.c) if self.lam else 0.0

    def displayed_term(self) -> PlaneWaveTerm:
        eps = polarization_vectors(self.k).select(self.lam)
        amplitude = NORMALIZATION * np.concatenate([eps, eps])
        return PlaneWaveTerm(amplitude, self.k.array, self.omega)

    def value(self, x, t: float) -> np.ndarray:
        term = self.displayed_term()
        return term.amplitude * term.phase(x, t)

    def field_pair(self, x, t: float) -> FieldPair:
        return FieldPair.from_value(self.value(x, t))


def plane_wave(k, lam: int, x, t: float, c: float = 1.0) -> np.ndarray:
    """Value of the displayed 6-component plane-wave column at (x, t)."""
    return PhotonPlaneWave(_as_wavevector(k), lam, c).value(x, t)


def me1_member(k, lam: int, c: float = 1.0) -> list[PlaneWaveTerm]:
    """The 3-vector representative of mode lam that solves ME1 exactly.

    lam=+1: eps_+ e^{i(k.x - wt)}; lam=-1: the conjugate of the ME2-solving
    eps_- e^{i(k.x - wt)}; lam=0: the static eps_0 e^{i k.x}.  Amplitudes carry
    the plane-wave normalization.
    """
    kv = _as_wavevector(k)
    lam = _check_helicity(lam)
    c = _check_c(c)
    eps = polarization_vectors(kv).select(lam)
    omega = kv.omega(c) if lam else 0.0
    direct = PlaneWaveTerm(NORMALIZATION * eps, kv.array, omega)
    if lam == -1:
        return [direct.conjugate()]
    return [direct]


def me2_member(k, lam: int, c: float = 1.0) -> list[PlaneWaveTerm]:
    """The 3-vector representative of mode lam that solves ME2 exactly.

    The conjugate of the ME1 member (conj(alpha) = -alpha swaps the two
    equations), i.e. the E - iB carrier of the classical Maxwell system.
    """
    return [term.conjugate() for term in me1_member(k, lam, c)]


def me6_column(k, lam: int, c: float = 1.0) -> list[PlaneWaveTerm]:
    """The conjugate-paired 6-component column (u; u*) that solves the 6x6 form.

    u is the mode's ME1-solving member; the lower block carries its conjugate
    so the upper rows (the ME2 operator) and lower rows (the ME1 operator) of
    the 6x6 system vanish simultaneously.
    """
    upper = me1_member(k, lam, c)
    column = []
    for term in upper:
        column.append(PlaneWaveTerm(
            np.concatenate([term.amplitude, np.zeros(3)]),
            term.kvec, term.omega))
        conj = term.conjugate()
        column.append(PlaneWaveTerm(
            np.concatenate([np.zeros(3), conj.amplitude]),
            conj.kvec, conj.omega))
    return column


def _me3_operator(term: PlaneWaveTerm, spatial_sign: float, c: float) -> np.ndarray:
    """(i/c) d/dt + spatial_sign * i (alpha . grad) applied to one 3-vector term."""
    kdota = (term.kvec[0] * _ALPHA1 + term.kvec[1] * _ALPHA2
             + term.kvec[2] * _ALPHA3)
    return (term.omega / c) * term.amplitude + spatial_sign * (
        -(kdota @ term.amplitude))


def _me6_operator(term: PlaneWaveTerm, c: float) -> np.ndarray:
    """[(i/c) d/dt Gamma_0 - i Gamma_j d/dx_j] applied to one 6-vector term."""
    result = (term.omega / c) * (_GAMMA0 @ term.amplitude)
    for j in range(3):
        result = result + term.kvec[j] * (_GAMMA[j] @ term.amplitude)
    return result


def dirac_form_residual(terms: Sequence[PlaneWaveTerm], equation: str,
                        x=(0.0, 0.0, 0.0), t: float = 0.0,
                        c: float = 1.0) -> float:
    """Euclidean norm of the chosen first-order operator applied to the wave.

    equation: "ME1" ((i/c)d/dt - i alpha.grad on 3-vectors), "ME2" (the +alpha
    variant), or "ME6" (the 6x6 block form).  Derivatives are exact per term;
    the residual is evaluated at the given spacetime point.
    """
    c = _check_c(c)
    equation = equation.upper()
    if equation not in ("ME1", "ME2", "ME6"):
        raise ValueError(f"equation must be ME1, ME2, or ME6, got {equation!r}")
    total = None
    for term in terms:
        if equation == "ME6":
            if term.amplitude.shape != (6,):
                raise ValueError("ME6 residual needs 6-component terms")
            applied = _me6_operator(term, c)
        else:
            if term.amplitude.shape != (3,):
                raise ValueError(f"{equation} residual needs 3-component terms")
            applied = _me3_operator(term, -1.0 if equation == "ME1" else 1.0, c)
        contribution = applied * term.phase(x, t)
        total = contribution if total is None else total + contribution
    if total is None:
        return 0.0
    return float(np.linalg.norm(total))


def dirac_form_scale(terms: Sequence[PlaneWaveTerm], c: float = 1.0) -> float:
    """Natural magnitude of the operator terms: sum of |amp| (|w|/c + |k|)."""
    c = _check_c(c)
    return float(sum(
        np.linalg.norm(term.amplitude)
        * (abs(term.omega) / c + np.linalg.norm(term.kvec))
        for term in terms))


def _curl_of(terms: Sequence[PlaneWaveTerm]) -> list[PlaneWaveTerm]:
    return [PlaneWaveTerm(1j * np.cross(term.kvec, term.amplitude),
                          term.kvec, term.omega) for term in terms]


def _div_of(terms: Sequence[PlaneWaveTerm]) -> list[PlaneWaveTerm]:
    return [PlaneWaveTerm(np.array([1j * (term.kvec @ term.amplitude)]),
                          term.kvec, term.omega) for term in terms]


def _dt_of(terms: Sequence[PlaneWaveTerm]) -> list[PlaneWaveTerm]:
    return [PlaneWaveTerm(-1j * term.omega * term.amplitude,
                          term.kvec, term.omega) for term in terms]


def _scaled(terms: Sequence[PlaneWaveTerm], factor: complex) -> list[PlaneWaveTerm]:
    return [PlaneWaveTerm(factor * term.amplitude, term.kvec, term.omega)
            for term in terms]


def maxwell_residuals_from_terms(e_terms: Sequence[PlaneWaveTerm],
                                 b_terms: Sequence[PlaneWaveTerm],
                                 x=(0.0, 0.0, 0.0), t: float = 0.0,
                                 c: float = 1.0) -> tuple[float, float, float, float]:
    """Residual magnitudes of the four classical field equations.

    Returns (faraday, ampere, div_e, div_b) for
    curl E + (1/c) dB/dt, curl B - (1/c) dE/dt, div E, div B,
    with all derivatives exact per term, evaluated at (x, t).
    """
    c = _check_c(c)
    faraday = evaluate_terms([*_curl_of(e_terms), *_scaled(_dt_of(b_terms), 1 / c)], x, t)
    ampere = evaluate_terms([*_curl_of(b_terms), *_scaled(_dt_of(e_terms), -1 / c)], x, t)
    div_e = evaluate_terms(_div_of(e_terms), x, t)
    div_b = evaluate_terms(_div_of(b_terms), x, t)
    return (float(np.linalg.norm(faraday)), float(np.linalg.norm(ampere)),
            float(np.linalg.norm(div_e)), float(np.linalg.norm(div_b)))


def mode_field_terms(k, lam: int, c: float = 1.0
                     ) -> tuple[list[PlaneWaveTerm], list[PlaneWaveTerm]]:
    """Exact E and B term lists of mode lam via the E - iB carrier.

    w = the mode's ME2-solving member; E = Re(w) and B = -Im(w) expand into
    conjugate-paired exponential terms (so both fields are real-valued).
    """
    w = me2_member(k, lam, c)
    e_terms = [* _scaled(w, 0.5), *_scaled([t.conjugate() for t in w], 0.5)]
    b_terms = [* _scaled(w, 0.5j), *_scaled([t.conjugate() for t in w], -0.5j)]
    return e_terms, b_terms


def maxwell_residuals(k, lam: int, x=(0.0, 0.0, 0.0), t: float = 0.0,
                      c: float = 1.0) -> tuple[float, float, float, float]:
    """Residuals of the four classical field equations for mode lam.

    Transverse modes (lam = +-1) satisfy all four equations to roundoff; the
    longitudinal mode satisfies the two curl equations trivially but fails both
    divergence equations at scale |k| (the transversality exclusion).
    """
    e_terms, b_terms = mode_field_terms(k, lam, c)
    return maxwell_residuals_from_terms(e_terms, b_terms, x, t, c)


def energy_density(psi6) -> float:
    """psi-bar Gamma_0 psi = psi^dagger psi, cross-checked against the fields.

    Verifies the algebraic identity psi^dagger psi = 2 (|E|^2 + |B|^2) with
    E, B from FieldPair (Hermitian squared norms) before returning the value.
    """
    psi6 = np.asarray(psi6, dtype=complex)
    if psi6.shape != (6,):
        raise ValueError("expected a 6-component value")
    direct = float(np.real(psi6.conjugate() @ psi6))
    pair = FieldPair.from_value(psi6)
    dual = 2.0 * float(np.linalg.norm(pair.E) ** 2 + np.linalg.norm(pair.B) ** 2)
    if abs(direct - dual) > 1e-12 * max(1.0, abs(direct)):
        raise ArithmeticError(
            f"energy dual-formula identity violated: {direct!r} vs {dual!r}")
    return direct


def lagrangian_density_translation(terms: Sequence[PlaneWaveTerm],
                                   x=(0.0, 0.0, 0.0), t: float = 0.0,
                                   c: float = 1.0) -> complex:
    """Antisymmetrized first-order Lagrangian density of a 6-component wave.

    L = -(1/2) [ (1/c) psi-bar Gamma_0 dpsi/dt - psi-bar Gamma_j dpsi/dx_j
                 - (1/c) dpsi-bar/dt Gamma_0 psi + dpsi-bar/dx_j Gamma_j psi ]

    with psi-bar = psi^dagger Gamma_0.  Vanishes identically on solutions of
    the 6x6 first-order system (both brackets vanish separately on-shell).
    """
    c = _check_c(c)
    psi = evaluate_terms(terms, x, t)
    dpsi_t = evaluate_terms(_dt_of(terms), x, t)
    dpsi = [evaluate_terms(
        [PlaneWaveTerm(1j * term.kvec[j] * term.amplitude, term.kvec,
                       term.omega) for term in terms], x, t) for j in range(3)]
    psi_bar = psi.conjugate() @ _GAMMA0
    psi_bar_t = dpsi_t.conjugate() @ _GAMMA0
    psi_bar_j = [d.conjugate() @ _GAMMA0 for d in dpsi]
    forward = (psi_bar @ _GAMMA0 @ dpsi_t) / c
    backward = (psi_bar_t @ _GAMMA0 @ psi) / c
    for j in range(3):
        forward = forward - psi_bar @ _GAMMA[j] @ dpsi[j]
        backward = backward - psi_bar_j[j] @ _GAMMA[j] @ psi
    return complex(-(forward - backward) / 2)


def anti_equation_residual(terms: Sequence[PlaneWaveTerm],
                           x=(0.0, 0.0, 0.0), t: float = 0.0,
                           c: float = 1.0) -> float:
    """Residual of the conjugate-field equation on psi-bar built from psi.

    Applies (1/c) Gamma_0^T d/dt - Gamma_j^T d/dx_j to psi-bar^T = Gamma_0
    conj(psi) with exact per-term derivatives.  Algebraically this equals
    Gamma_0 times the conjugate of the direct 6x6 residual, so it vanishes
    on-shell; it is computed directly here so the identity is testable.
    """
    c = _check_c(c)
    total = np.zeros(6, dtype=complex)
    for term in terms:
        if term.amplitude.shape != (6,):
            raise ValueError("conjugate-field residual needs 6-component terms")
        conj = term.conjugate()
        bar_amplitude = _GAMMA0 @ conj.amplitude
        applied = (conj.omega / c) * (_GAMMA0.T @ bar_amplitude)
        for j in range(3):
            applied = applied + conj.kvec[j] * (_GAMMA[j].T @ bar_amplitude)
        total = total + applied * conj.phase(x, t)
    return float(np.linalg.norm(total))
