"""Assembled wavefunctions: translation plane waves times boost-rotation factors.

Each assembled member is an exact product

    psi_lam(x, t, r, angles)
        = [plane-wave 6-column for (k, lam)]
          * f^l_{1,lam}(r) * M^{lam}_l(phi, eps, theta, tau, 0, 0)

with the boost-rotation factor a scalar multiplying both 3-blocks uniformly.
The dotted (conjugate, negative-energy) branch uses the conjugated plane-wave
column exp[-i(k.x - wt)] with conjugated polarization, the dotted radial
functions at r*, and the dotted (conjugated) angular functions.

The full catalog for one wavevector has six members
[psi_+1, psi_0, psi_-1, psi_dot_+1, psi_dot_0, psi_dot_-1]; the physical
subset is exactly {psi_+1, psi_-1}: dotted members are tagged negative-energy
and omitted, longitudinal members are tagged excluded-by-transversality with
|k . eps_lam| recorded as evidence.

r and the spacetime point are independent coordinates of the configuration
space; no constraint ties r to x.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .group_kinematics import ComplexEulerAngles
from .lorentz_harmonics import generalized_m_values
from .photon_plane_waves import (
    NORMALIZATION,
    PhotonPlaneWave,
    PlaneWaveTerm,
    WaveVector,
    polarization_vectors,
    transversality_residual,
)

__all__ = [
    "PoincareWaveFunction",
    "CatalogMember",
    "SolutionCatalog",
    "assemble",
    "build_catalog",
    "physical_filter",
    "TAG_NEGATIVE_ENERGY",
    "TAG_OMITTED",
    "TAG_LONGITUDINAL",
]

TAG_NEGATIVE_ENERGY = "negative-energy"
TAG_OMITTED = "omitted"
TAG_LONGITUDINAL = "excluded-by-transversality"


@dataclass(frozen=True)
class PoincareWaveFunction:
    """One assembled member: plane-wave column times boost-rotation scalar."""

    k: WaveVector
    lam: int
    l: int
    radial: object
    dotted: bool = False
    c: float = 1.0

    def __post_init__(self) -> None:
        wave = PhotonPlaneWave(self.k, self.lam, self.c)  # validates k, lam, c
        object.__setattr__(self, "k", wave.k)
        if self.l != int(self.l) or int(self.l) < 1:
            raise ValueError(f"l must be an integer >= 1, got {self.l!r}")
        object.__setattr__(self, "l", int(self.l))
        object.__setattr__(self, "dotted", bool(self.dotted))

    @property
    def omega(self) -> float:
        return self.k.omega(self.c) if self.lam else 0.0

    def translation_value(self, x, t: float) -> np.ndarray:
        """The 6-component plane-wave factor (conjugated on the dotted branch)."""
        base = PhotonPlaneWave(self.k, self.lam, self.c).value(x, t)
        return base.conjugate() if self.dotted else base

    def translation_term3(self) -> PlaneWaveTerm:
        """The 3-vector exponential term carried by the translation factor."""
        eps = polarization_vectors(self.k).select(self.lam)
        term = PlaneWaveTerm(NORMALIZATION * eps, self.k.array, self.omega)
        return term.conjugate() if self.dotted else term

    def translation_equation(self) -> str:
        """Which first-order equation the translation factor solves exactly.

        The +1 mode with omega = +c|k| solves ME1 and the -1 mode solves ME2;
        conjugation (the dotted branch) swaps them.  The static longitudinal
        factor solves both; ME1 is reported.
        """
        if self.lam == 0:
            return "ME1"
        positive = self.lam == 1
        if self.dotted:
            positive = not positive
        return "ME1" if positive else "ME2"

    def lorentz_factor(self, r: complex, angles: ComplexEulerAngles) -> complex:
        """f^l_{1,lam}(r) * M^{lam}_l, conjugate-branch aware."""
        radius = complex(r)
        if self.dotted:
            radius = radius.conjugate()
        angular = generalized_m_values(
            self.l, self.lam, 0.0, angles.phi, angles.epsilon,
            angles.theta, angles.tau, 0.0, 0.0, dotted=self.dotted)
        return self.radial.select(self.lam, dotted=self.dotted)(radius) * angular

    def value(self, x, t: float, r: complex,
              angles: ComplexEulerAngles) -> np.ndarray:
        return self.translation_value(x, t) * self.lorentz_factor(r, angles)


def assemble(k, lam: int, l: int, radial, x, t: float, r: complex,
             angles: ComplexEulerAngles, dotted: bool = False,
             c: float = 1.0) -> np.ndarray:
    """Assembled 6-component value at one configuration-space point."""
    wave = PoincareWaveFunction(k if isinstance(k, WaveVector)
                                else WaveVector(*map(float, k)),
                                lam, l, radial, dotted, c)
    return wave.value(x, t, r, angles)


@dataclass(frozen=True)
class CatalogMember:
    """One catalog entry with its exclusion tags and evidence."""

    label: str
    wave: PoincareWaveFunction
    tags: tuple[str, ...]
    transversality: float

    @property
    def is_physical(self) -> bool:
        return not self.tags


@dataclass(frozen=True)
class SolutionCatalog:
    """The six assembled members for one wavevector, in a fixed order."""

    members: tuple[CatalogMember, ...]

    def member(self, label: str) -> CatalogMember:
        for member in self.members:
            if member.label == label:
                return member
        raise KeyError(label)

    @property
    def physical(self) -> tuple[CatalogMember, ...]:
        return tuple(m for m in self.members if m.is_physical)


_LABELS = {(1, False): "psi_+1", (0, False): "psi_0", (-1, False): "psi_-1",
           (1, True): "psi_dot_+1", (0, True): "psi_dot_0",
           (-1, True): "psi_dot_-1"}


def build_catalog(k, l: int, radial, c: float = 1.0) -> SolutionCatalog:
    """All six members [psi_+1, psi_0, psi_-1, psi_dot_+1, psi_dot_0, psi_dot_-1].

    Dotted members carry the negative-energy/omitted tags; longitudinal
    members carry the transversality-exclusion tag with |k . eps_0| (= |k|)
    recorded as evidence.
    """
    kv = k if isinstance(k, WaveVector) else WaveVector(*map(float, k))
    members = []
    for dotted in (False, True):
        for lam in (1, 0, -1):
            tags = []
            if dotted:
                tags += [TAG_NEGATIVE_ENERGY, TAG_OMITTED]
            if lam == 0:
                tags.append(TAG_LONGITUDINAL)
            members.append(CatalogMember(
                label=_LABELS[(lam, dotted)],
                wave=PoincareWaveFunction(kv, lam, l, radial, dotted, c),
                tags=tuple(tags),
                transversality=transversality_residual(kv, lam),
            ))
    return SolutionCatalog(tuple(members))


def physical_filter(catalog: SolutionCatalog) -> tuple[CatalogMember, ...]:
    """The untagged members: exactly the undotted transverse pair."""
    physical = catalog.physical
    labels = {member.label for member in physical}
    if labels != {"psi_+1", "psi_-1"}:
        raise AssertionError(
            f"physical subset must be psi_+1 and psi_-1, got {sorted(labels)}")
    return physical
