"""Matrix spinors, column spinors and local observables.

A column spinor psi maps bijectively onto an element Psi of the even
subalgebra (scalar + six bivectors + pseudoscalar, eight real coefficients)
with psi = Psi u1, u1 = (1,0,0,0)^T.  The component dictionary is

    psi = (r0 - i r3,  r2 - i r1,  s3 + i s0,  s1 + i s2)^T
    Psi = r0 + s_k alpha_k + PSEUDO s0 - r_k PSEUDO alpha_k

Every local observable (current, spin density, density, duality angle,
tetrad, spin plane) is computed from Psi by trace projection, which keeps
one convention authoritative.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import sta
from .sta import ALPHA, GAMMA, GAMMA_UP, ID, PSEUDO
from .units import NATURAL, UnitSystem

Array = np.ndarray

U1 = np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)

# basis for the even-subalgebra expansion, ordered to match _coeffs below
_EVEN_BASIS = np.stack([
    ID, ALPHA[0], ALPHA[1], ALPHA[2],
    PSEUDO, PSEUDO @ ALPHA[0], PSEUDO @ ALPHA[1], PSEUDO @ ALPHA[2],
])

# plane of the phase rotation: gamma^2 gamma^1 (== gamma_2 gamma_1)
PHASE_PLANE = GAMMA_UP[2] @ GAMMA_UP[1]


class NullDensity(ValueError):
    """psi^dagger psi vanished; observables are undefined at this point."""


def from_components(r, s) -> Array:
    """Column spinor from the real octet (r_mu, s_mu)."""
    r = np.asarray(r, dtype=float)
    s = np.asarray(s, dtype=float)
    return np.array([
        r[0] - 1j * r[3],
        r[2] - 1j * r[1],
        s[3] + 1j * s[0],
        s[1] + 1j * s[2],
    ])


def to_components(psi: Array) -> tuple[Array, Array]:
    """Inverse of from_components (exact round trip)."""
    psi = np.asarray(psi, dtype=complex)
    r = np.array([psi[0].real, -psi[1].imag, psi[1].real, -psi[0].imag])
    s = np.array([psi[2].imag, psi[3].real, psi[3].imag, psi[2].real])
    return r, s


def hestenes_matrix(psi: Array) -> Array:
    """The unique even-subalgebra Psi with Psi u1 = psi."""
    r, s = to_components(psi)
    coeffs = np.array([r[0], s[1], s[2], s[3], s[0], -r[1], -r[2], -r[3]])
    return np.einsum("i,ijk->jk", coeffs, _EVEN_BASIS)


def to_column(Psi: Array) -> Array:
    """psi = Psi u1 (first column)."""
    return np.asarray(Psi, dtype=complex)[:, 0].copy()


def phase_rotor(arg: float) -> Array:
    """exp(-gamma^2 gamma^1 * arg); acts on u1 as multiplication by
    exp(-i*arg)."""
    return np.cos(arg) * ID - np.sin(arg) * PHASE_PLANE


@dataclass(frozen=True)
class MatrixSpinor:
    """Factored matrix spinor: density, duality angle, Lorentz rotor and the
    scalar phase argument multiplying gamma^2 gamma^1."""

    rho: float
    beta: float
    rotor: Array
    phase_arg: float

    def __post_init__(self):
        if self.rho <= 0.0:
            raise ValueError("rho must be positive")


def assemble(ms: MatrixSpinor) -> Array:
    """sqrt(rho) exp(PSEUDO beta/2) rotor exp(-gamma^2 gamma^1 phase)."""
    duality = np.cos(ms.beta / 2.0) * ID + np.sin(ms.beta / 2.0) * PSEUDO
    return np.sqrt(ms.rho) * duality @ ms.rotor @ phase_rotor(ms.phase_arg)


# ---------------------------------------------------------------------------
# plane waves
# ---------------------------------------------------------------------------


def boost_from_momentum(p, m: float, units: UnitSystem = NATURAL,
                        sign: int = +1) -> Array:
    """Positive-definite boost taking the rest spinor to momentum p; the
    sign=-1 branch flips the momentum (negative-energy convention)."""
    p = np.asarray(p, dtype=float)
    c = units.c
    energy = np.sqrt((m * c * c) ** 2 + c * c * float(p @ p))
    mc2 = m * c * c
    pref = np.sqrt((energy + mc2) / (2.0 * mc2))
    slope = sign * c / (energy + mc2)
    mat = ID + slope * sum(pk * g for pk, g in zip(p, ALPHA))
    return pref * mat


def plane_wave(p, m: float, spin_axis=(0.0, 0.0, 1.0), angle: float = 0.0,
               energy_sign: int = +1, units: UnitSystem = NATURAL):
    """Free plane-wave column-spinor field (t, x, y, z) -> psi.

    The spin rotation is exp(-PSEUDO alpha.axis * angle/2) applied in the
    rest frame before boosting; energy_sign=-1 returns the negative-energy
    mode with the opposite-velocity boost and the pseudoscalar phase factor.
    """
    p = np.asarray(p, dtype=float)
    axis = np.asarray(spin_axis, dtype=float)
    norm = np.linalg.norm(axis)
    bvec = (angle / 2.0) * axis / norm if angle != 0.0 and norm > 0 else (0, 0, 0)
    rot = sta.exp_bivector((0.0, 0.0, 0.0), bvec)
    c, hbar = units.c, units.hbar
    energy = np.sqrt((m * c * c) ** 2 + c * c * float(p @ p))
    boost = boost_from_momentum(p, m, units, sign=energy_sign)
    chi = rot[:, 0]  # rest-frame column with chosen spin orientation
    col0 = boost @ chi
    if energy_sign < 0:
        col0 = PSEUDO @ col0

    def field(t, x, y, z):
        # the negative-energy mode carries the opposite velocity: its boost
        # and its spatial wave vector are both flipped
        arg = (energy * t
               - energy_sign * (p[0] * x + p[1] * y + p[2] * z)) / hbar
        return np.exp(-1j * energy_sign * arg) * col0

    return field


# ---------------------------------------------------------------------------
# observables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Observables:
    current: Array            # J^mu
    spin_density: Array       # rho * s^mu
    rho: float
    beta: float
    scalar: float             # signed rho * cos(beta)
    velocity: Array | None    # J / rho, None when rho underflows
    spin: Array | None        # spin_density / rho
    tetrad: tuple | None      # e_0 .. e_3
    spin_plane: Array | None  # e2 e1 as a matrix
    undefined: bool


def observables(psi: Array, Psi: Array | None = None,
                rho_floor: float = 1e-10) -> Observables:
    """All local bilinear observables of a column spinor.

    Raises NullDensity when psi^dagger psi vanishes.  When the invariant
    density rho falls below `rho_floor` relative to J^0 the velocity, spin,
    tetrad and spin-plane entries are flagged undefined (None) instead of
    being extrapolated.
    """
    psi = np.asarray(psi, dtype=complex)
    j0 = float(np.vdot(psi, psi).real)
    if j0 <= 0.0:
        raise NullDensity("psi has zero norm at this point")
    if Psi is None:
        Psi = hestenes_matrix(psi)
    rev = sta.reversion(Psi)
    prod = Psi @ rev
    scalar = float(np.trace(prod).real) / 4.0
    pseudo = -float(np.trace(prod @ PSEUDO).real) / 4.0
    rho = float(np.hypot(scalar, pseudo))
    beta = float(np.arctan2(pseudo, scalar))

    vectors = [Psi @ g @ rev for g in GAMMA]
    current = sta.to_vector(vectors[0])
    spin_density = sta.to_vector(vectors[3])

    if rho < rho_floor * j0:
        return Observables(current, spin_density, rho, beta, scalar,
                           None, None, None, None, True)
    tetrad = tuple(sta.to_vector(v) / rho for v in vectors)
    # e2 e1 = exp(-PSEUDO beta) Psi gamma2 gamma1 rev(Psi) / rho
    dual_inv = np.cos(beta) * ID - np.sin(beta) * PSEUDO
    spin_plane = dual_inv @ Psi @ GAMMA[2] @ GAMMA[1] @ rev / rho
    return Observables(
        current=current,
        spin_density=spin_density,
        rho=rho,
        beta=beta,
        scalar=scalar,
        velocity=current / rho,
        spin=spin_density / rho,
        tetrad=tetrad,
        spin_plane=spin_plane,
        undefined=False,
    )


def spin_plane_from_vectors(velocity: Array, spin: Array) -> Array:
    """Spin plane e2 e1 from the velocity/spin cross-product form,

        S = alpha.(s x v) + PSEUDO alpha.(v0 s - s0 v).

    The relative plus sign is pinned by S = e2 e1 at the rest state."""
    v0, vv = velocity[0], velocity[1:]
    s0, sv = spin[0], spin[1:]
    cross = np.cross(sv, vv)
    lin = v0 * sv - s0 * vv
    out = np.zeros((4, 4), dtype=complex)
    for k in range(3):
        out += cross[k] * ALPHA[k] + lin[k] * (PSEUDO @ ALPHA[k])
    return out
