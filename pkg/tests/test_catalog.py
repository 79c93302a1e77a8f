"""Solution-catalog checks: eigenvalues, profiles, normalization, spinors,
potentials, fields, averages, kinematic closed forms."""
import math

import numpy as np
import pytest

from rdibeams import catalog as cat
from rdibeams import spinors, waveforms
from rdibeams.numerics import adaptive_simpson


def norm_closed_uniform(spec):
    eps = cat.eigenvalue(spec)
    mc2 = spec.m
    return spec.B * math.sqrt(
        2.0 ** spec.l * math.factorial(spec.n)
        / (math.pi * math.factorial(spec.n + spec.l) * eps * (eps + mc2)))


def norm_closed_radial(spec):
    eps = cat.eigenvalue(spec)
    mc2 = spec.m
    n, M = spec.n, spec.M
    K = 2 * n + M + 1
    kappa = (M + 1) / K
    return spec.B * kappa ** ((M + 2) / 2.0) * math.sqrt(
        math.factorial(n)
        / (4.0 * math.pi * math.factorial(n + M) * K * eps * (eps + mc2)))


# ---------------------------------------------------------------------------
# eigenvalues
# ---------------------------------------------------------------------------


def test_eigenvalue_ground_states():
    for fam, kw in [(cat.Family.UNIFORM_B, {}), (cat.Family.UNIFORM_B_SPLIT, {}),
                    (cat.Family.RADIAL_B, {"M": 0})]:
        spec = cat.SolutionSpec(fam, n=0, **kw)
        assert cat.eigenvalue(spec) == pytest.approx(1.0, abs=1e-15)


def test_eigenvalue_quoted_values():
    assert cat.eigenvalue(cat.SolutionSpec(cat.Family.UNIFORM_B, n=1)) \
        == pytest.approx(math.sqrt(3.0), abs=1e-12)
    assert cat.eigenvalue(cat.SolutionSpec(cat.Family.UNIFORM_B_SPLIT,
                                           n=1, l=1)) \
        == pytest.approx(math.sqrt(5.0), abs=1e-12)
    assert cat.eigenvalue(cat.SolutionSpec(cat.Family.RADIAL_B, n=1, M=0)) \
        == pytest.approx(math.sqrt(19.0 / 18.0), abs=1e-12)


def test_eigenvalue_longitudinal_momentum_rule():
    for fam, kw in [(cat.Family.UNIFORM_B, dict(n=1, l=1)),
                    (cat.Family.UNIFORM_B_SPLIT, dict(n=2, l=1)),
                    (cat.Family.RADIAL_B, dict(n=1, M=2))]:
        at_rest = cat.eigenvalue(cat.SolutionSpec(fam, **kw))
        moving = cat.eigenvalue(cat.SolutionSpec(fam, p_z=0.7, **kw))
        assert moving == pytest.approx(math.sqrt(at_rest ** 2 + 0.49),
                                       abs=1e-12)


def test_degeneracy_structure():
    eps = [cat.eigenvalue(cat.SolutionSpec(cat.Family.UNIFORM_B, n=2, l=l))
           for l in range(6)]
    assert max(eps) - min(eps) == 0.0
    split = [cat.eigenvalue(cat.SolutionSpec(cat.Family.UNIFORM_B_SPLIT,
                                             n=2, l=l)) for l in range(6)]
    assert all(b > a for a, b in zip(split, split[1:]))


# ---------------------------------------------------------------------------
# profiles and normalization
# ---------------------------------------------------------------------------


def test_uniform_ground_profile_is_constant():
    spec = cat.SolutionSpec(cat.Family.UNIFORM_B, n=0, l=0)
    f0, h0 = cat.radial_profile(spec, 0.3)
    f1, h1 = cat.radial_profile(spec, 1.7)
    assert f0 == pytest.approx(f1, rel=1e-14)
    assert h0 == pytest.approx(math.exp(-0.09), rel=1e-14)


def test_free_bessel_profile_unnormalized_at_origin():
    spec = cat.SolutionSpec(cat.Family.FREE_BESSEL, l=0, p_perp=1.0)
    raw = cat._raw_profile(spec, 0.0)
    assert raw["f"] == pytest.approx(1.0)
    assert raw["H"] == 1.0


def test_radial_profile_first_excited():
    # f proportional to exp(lam/2 - lam/6) (1 - lam/3) for n=1, M=0
    spec = cat.SolutionSpec(cat.Family.RADIAL_B, n=1, M=0)
    norm = cat.normalization(spec)
    for lam in (0.4, 1.1, 2.9):
        f, H = cat.radial_profile(spec, lam)
        expected = norm * math.exp(lam / 2.0 - lam / 6.0) * (1.0 - lam / 3.0)
        assert f == pytest.approx(expected, rel=1e-13)
        assert H == pytest.approx(math.exp(-lam / 2.0), rel=1e-14)


def _norm_integral(spec):
    eps = cat.eigenvalue(spec)
    A = spec.m + eps
    pz2 = spec.p_z ** 2

    def j0(lam):
        pr = cat.profile(spec, lam)
        aH = pr["amp"] * pr["H"]
        bH = pr["ampd"] * pr["H"]
        return (A * A + pz2) * aH * aH / spec.B ** 2 + bH * bH / 4.0

    lam_max = 7.0 if spec.family is not cat.Family.RADIAL_B else \
        85.0 * (2 * spec.n + spec.M + 1) / (spec.M + 1)
    return 2.0 * math.pi * adaptive_simpson(lambda u: j0(u) * u, 0.0,
                                            lam_max, tol=1e-12)


@pytest.mark.parametrize("spec", [
    cat.SolutionSpec(cat.Family.UNIFORM_B, n=0, l=0),
    cat.SolutionSpec(cat.Family.UNIFORM_B, n=1, l=0),
    cat.SolutionSpec(cat.Family.UNIFORM_B, n=2, l=1),
    cat.SolutionSpec(cat.Family.UNIFORM_B_SPLIT, n=1, l=1),
    cat.SolutionSpec(cat.Family.UNIFORM_B_SPLIT, n=2, l=2),
    cat.SolutionSpec(cat.Family.RADIAL_B, n=1, M=0),
    cat.SolutionSpec(cat.Family.RADIAL_B, n=2, M=1),
    cat.SolutionSpec(cat.Family.UNIFORM_B, n=1, l=1, p_z=0.6),
])
def test_probability_normalization(spec):
    assert _norm_integral(spec) == pytest.approx(1.0, abs=1e-8)


def test_normalization_closed_forms():
    for n, l in ((0, 0), (1, 0), (2, 1), (1, 3)):
        spec = cat.SolutionSpec(cat.Family.UNIFORM_B, n=n, l=l)
        assert cat.normalization(spec) == pytest.approx(
            norm_closed_uniform(spec), rel=1e-12)
    for n, M in ((1, 0), (2, 1), (1, 3)):
        spec = cat.SolutionSpec(cat.Family.RADIAL_B, n=n, M=M)
        assert cat.normalization(spec) == pytest.approx(
            norm_closed_radial(spec), rel=1e-12)


def test_free_bessel_normalization_convention():
    spec = cat.SolutionSpec(cat.Family.FREE_BESSEL, l=1, p_perp=0.8)
    eps = cat.eigenvalue(spec)
    expected = spec.B / (math.sqrt(2.0) * eps * math.sqrt(1.0 / eps + 1.0))
    assert cat.normalization(spec) == pytest.approx(expected, rel=1e-14)


# ---------------------------------------------------------------------------
# spinors
# ---------------------------------------------------------------------------


def test_uniform_ground_state_weak_field_limit():
    # B -> 0 with n = l = 0 goes over to the rest spinor, spin up
    t = 0.83
    for B in (1e-2, 1e-4):
        spec = cat.SolutionSpec(cat.Family.UNIFORM_B, n=0, l=0, B=B)
        psi = cat.spinor(spec)(t, 0.3, -0.2, 0.5)
        norm_here = np.linalg.norm(psi)
        target = np.array([np.exp(-1j * t), 0, 0, 0]) * norm_here
        np.testing.assert_allclose(psi, target, atol=norm_here * B)


def test_free_bessel_component_ratio():
    spec = cat.SolutionSpec(cat.Family.FREE_BESSEL, l=1, p_perp=0.9)
    eps = cat.eigenvalue(spec)
    kt = math.sqrt(eps ** 2 - 1.0)
    from rdibeams.specialfn import bessel_j

    for x, y in ((1.2, 0.4), (0.6, 1.9)):
        psi = cat.spinor(spec)(0.7, x, y, 0.0)
        lam = cat.lam_of_r(spec, math.hypot(x, y))
        phi = math.atan2(y, x)
        arg = 2.0 * lam * kt / spec.B
        expected = 1j * kt * np.exp(1j * phi) * bessel_j(2, arg) \
            / ((1.0 + eps) * bessel_j(1, arg))
        assert psi[3] / psi[0] == pytest.approx(expected, rel=1e-12)


def test_volkov_zero_amplitude_degenerates_to_free():
    spec = cat.SolutionSpec(cat.Family.VOLKOV_BESSEL, l=1, p_perp=0.9,
                            waveform=waveforms.circular(0.0), omega=1.1)
    base = spec.static_base()
    for pt in ((0.4, 1.0, 2.0, 0.3), (1.9, 0.8, 0.5, 2.5)):
        np.testing.assert_array_equal(cat.spinor(spec)(*pt),
                                      cat.spinor(base)(*pt))


def test_dressed_spinor_matches_explicit_redmond_column():
    # independent transcription of the dressed uniform-field column; must
    # agree with the null-rotation construction up to one global constant
    spec = cat.SolutionSpec(cat.Family.REDMOND, n=1, l=0,
                            waveform=waveforms.circular(0.3), omega=1.1)
    eps = cat.eigenvalue(spec)
    B = spec.B
    n, l = spec.n, spec.l
    from rdibeams.specialfn import hyp1f1_poly

    def explicit(t, x, y, z):
        xi = cat.xi_of(spec, t, z)
        dx, dy = cat.coordinate_shift(spec, xi)
        xp, yp = x + dx, y + dy
        lamp = cat.lam_of_r(spec, math.hypot(xp, yp))
        phi = math.atan2(yp, xp)
        d1, d2 = spec.waveform.fdot(xi)
        u = 2.0 * lamp * lamp
        f1a = hyp1f1_poly(n, l + 1.0, u)
        f1b = hyp1f1_poly(n - 1, l + 2.0, u)
        w = spec.omega
        col = np.array([
            4.0 * (1.0 + eps) * f1a / B
            - 4.0 * B * n * (xp + 1j * yp) * (d2 + 1j * d1) * f1b
            / (eps * (2 * l + 2) * w),
            2.0 * (1.0 + eps) * (d1 + 1j * d2) * f1a / (B * eps * w),
            4.0 * B * n * (yp - 1j * xp) * (d1 - 1j * d2) * f1b
            / (eps * (2 * l + 2) * w),
            8.0j * B * n * (xp + 1j * yp) * f1b / (2 * l + 2)
            - 2.0 * (1.0 + eps) * (d1 + 1j * d2) * f1a / (B * eps * w),
        ])
        pref = (np.exp(1j * phi) * lamp) ** l * np.exp(-lamp * lamp) \
            * np.exp(1j * (cat.gauge_phase(spec, xi) - eps * t))
        return pref * col

    rng = np.random.default_rng(9)
    ratios = []
    for _ in range(12):
        pt = tuple(rng.uniform(0.4, 3.0, size=4))
        a = cat.spinor(spec)(*pt)
        b = explicit(*pt)
        mask = np.abs(b) > 1e-10
        ratios.extend((a[mask] / b[mask]).tolist())
    ratios = np.array(ratios)
    np.testing.assert_allclose(ratios, ratios[0], rtol=1e-10)


def test_dressed_spinor_matches_explicit_radial_laser_column():
    spec = cat.SolutionSpec(cat.Family.RADIAL_B_LASER, n=1, M=0,
                            waveform=waveforms.circular(0.3), omega=1.1)
    eps = cat.eigenvalue(spec)
    B = spec.B
    n, M = spec.n, spec.M
    K = 2 * n + M + 1
    from rdibeams.specialfn import laguerre

    def explicit(t, x, y, z):
        xi = cat.xi_of(spec, t, z)
        dx, dy = cat.coordinate_shift(spec, xi)
        xp, yp = x + dx, y + dy
        lamp = cat.lam_of_r(spec, math.hypot(xp, yp))
        phi = math.atan2(yp, xp)
        d1, d2 = spec.waveform.fdot(xi)
        u = lamp * (M + 1) / K
        La = laguerre(n, M, u)
        Lb = laguerre(n - 1, M + 1, u)
        w = spec.omega
        denom = math.sqrt(B ** 2 * n * (M + n + 1)
                          + 4.0 * (M + 2 * n + 1) ** 2)
        col = np.array([
            8.0 * (1.0 + eps) * La / B
            + B * (yp - 1j * xp) * (d1 - 1j * d2)
            * ((M + 1) * Lb - n * La) / (eps * lamp * w * K),
            4.0 * (1.0 + eps) * (d1 + 1j * d2) * La / (B * eps * w),
            (xp + 1j * yp) * (d2 + 1j * d1)
            * (2.0 * B * n * La - 2.0 * B * (M + 1) * Lb) / (lamp * w * denom),
            2.0 * B * (1j * (M + 1) * (xp + 1j * yp) * Lb
                       + n * (yp - 1j * xp) * La) / (lamp * K)
            - 4.0 * (1.0 + eps) * (d1 + 1j * d2) * La / (B * eps * w),
        ])
        pref = lamp ** (M / 2.0) \
            * np.exp(-lamp * (M + 1) / (2.0 * K)
                     + 0.5j * M * phi) \
            * np.exp(1j * (cat.gauge_phase(spec, xi) - eps * t))
        return pref * col

    rng = np.random.default_rng(10)
    ratios = []
    for _ in range(12):
        pt = tuple(rng.uniform(0.4, 3.0, size=4))
        a = cat.spinor(spec)(*pt)
        b = explicit(*pt)
        mask = np.abs(b) > 1e-10
        ratios.extend((a[mask] / b[mask]).tolist())
    ratios = np.array(ratios)
    np.testing.assert_allclose(ratios, ratios[0], rtol=1e-9)


# ---------------------------------------------------------------------------
# potentials and fields
# ---------------------------------------------------------------------------


def test_potential_values():
    free = cat.SolutionSpec(cat.Family.FREE_BESSEL, l=1, p_perp=1.0)
    np.testing.assert_array_equal(cat.potential(free, 0.3, 1.0, 2.0, 0.5),
                                  np.zeros(4))
    uni = cat.SolutionSpec(cat.Family.UNIFORM_B, n=1, l=0, B=1.3)
    x, y = 0.7, -0.4
    eA = cat.potential(uni, 0.0, x, y, 1.0)
    np.testing.assert_allclose(
        eA, [0.0, -y * 1.3 ** 2 / 2.0, x * 1.3 ** 2 / 2.0, 0.0], atol=1e-14)
    rad = cat.SolutionSpec(cat.Family.RADIAL_B, n=1, M=0, B=0.9)
    eA = cat.potential(rad, 0.0, x, y, 1.0)
    r = math.hypot(x, y)
    assert eA[2] == pytest.approx(x * 0.9 / (4.0 * r), abs=1e-14)
    assert eA[1] == pytest.approx(-y * 0.9 / (4.0 * r), abs=1e-14)
    with pytest.raises(cat.OnAxisError):
        cat.potential(rad, 0.0, 0.0, 0.0, 1.0)


def test_dressed_potential_structure():
    wf = waveforms.circular(0.35)
    volkov = cat.SolutionSpec(cat.Family.VOLKOV_BESSEL, l=0, p_perp=1.0,
                              waveform=wf, omega=1.2)
    pt = (0.8, 1.1, 0.6, 0.9)
    xi = cat.xi_of(volkov, pt[0], pt[3])
    d1, d2 = wf.fdot(xi)
    eA = cat.potential(volkov, *pt)
    np.testing.assert_allclose(eA, [0.0, d1 / 1.2, d2 / 1.2, 0.0], atol=1e-14)
    red = cat.SolutionSpec(cat.Family.REDMOND, n=1, l=0, waveform=wf,
                           omega=1.2)
    eps = cat.eigenvalue(red)
    parts = cat.potential_split(red, *pt)
    xp, yp, _ = cat._primed(red, *pt)
    a0 = -(xp * d2 - yp * d1) / (2.0 * eps * 1.2)
    np.testing.assert_allclose(parts["radiation"], [a0, 0.0, 0.0, a0],
                               atol=1e-14)
    total = cat.potential(red, *pt)
    assert total[0] == pytest.approx(total[3], abs=1e-15)
    # switching the drive off reproduces the stationary potential
    off = cat.SolutionSpec(cat.Family.REDMOND, n=1, l=0,
                           waveform=waveforms.circular(0.0), omega=1.2)
    np.testing.assert_array_equal(cat.potential(off, *pt),
                                  cat.potential(off.static_base(), *pt))


def test_field_values_and_sources():
    uni = cat.SolutionSpec(cat.Family.UNIFORM_B, n=1, l=0, B=1.1)
    smp = cat.fields(uni, 0.0, 0.8, 0.5, 0.2)
    np.testing.assert_allclose(smp.magnetic, [0, 0, 1.1 ** 2], atol=1e-15)
    np.testing.assert_array_equal(smp.electric, np.zeros(3))
    rad = cat.SolutionSpec(cat.Family.RADIAL_B, n=1, M=1, B=0.8)
    x, y = 1.2, -0.7
    r = math.hypot(x, y)
    smp = cat.fields(rad, 0.0, x, y, 0.0)
    assert np.linalg.norm(smp.magnetic) == pytest.approx(0.8 / (4.0 * r),
                                                         rel=1e-14)
    np.testing.assert_allclose(
        smp.current_source,
        (0.8 / 4.0) * np.array([-y, x, 0.0]) / r ** 3, atol=1e-15)


def test_uniform_envelope_gives_constant_field_radial_gives_inverse_r():
    # the magnetic field is constant iff the envelope is Gaussian
    uni = cat.SolutionSpec(cat.Family.UNIFORM_B, n=1, l=0)
    vals = [cat.fields(uni, 0.0, x, y, 0.0).magnetic[2]
            for x, y in ((0.5, 0.1), (1.0, 2.0), (3.3, 0.4))]
    assert np.var(vals) == 0.0
    rad = cat.SolutionSpec(cat.Family.RADIAL_B, n=1, M=0)
    for x, y in ((0.5, 0.1), (1.0, 2.0)):
        bz = cat.fields(rad, 0.0, x, y, 0.0).magnetic[2]
        assert bz == pytest.approx(1.0 / (4.0 * math.hypot(x, y)), rel=1e-14)


# ---------------------------------------------------------------------------
# averages
# ---------------------------------------------------------------------------


def test_average_density_matches_closed_form():
    for spec in (cat.SolutionSpec(cat.Family.UNIFORM_B, n=1, l=0),
                 cat.SolutionSpec(cat.Family.UNIFORM_B_SPLIT, n=1, l=1),
                 cat.SolutionSpec(cat.Family.RADIAL_B, n=2, M=1)):
        av = cat.averages(spec)
        assert av["rho"] == pytest.approx(av["rho_closed"], abs=1e-8)
        assert av["norm"] == pytest.approx(1.0, abs=1e-10)


def test_average_azimuthal_current():
    spec = cat.SolutionSpec(cat.Family.UNIFORM_B, n=1, l=0)
    av = cat.averages(spec)
    eps = cat.eigenvalue(spec)
    assert abs(av["J_phi"]) == pytest.approx(math.sqrt(2.0) / eps, abs=1e-8)
    assert av["J_phi"] == pytest.approx(av["J_phi_closed"], abs=1e-8)
    spec = cat.SolutionSpec(cat.Family.RADIAL_B, n=1, M=0)
    av = cat.averages(spec)
    eps = cat.eigenvalue(spec)
    assert abs(av["J_phi"]) == pytest.approx(2.0 / (9.0 * eps), abs=1e-8)
    spec = cat.SolutionSpec(cat.Family.UNIFORM_B_SPLIT, n=1, l=2)
    av = cat.averages(spec)
    assert av["J_phi"] == pytest.approx(av["J_phi_closed"], abs=1e-8)


def test_dressed_averages_z_current_and_centroid():
    wf = waveforms.circular(0.3)
    spec = cat.SolutionSpec(cat.Family.REDMOND, n=1, l=0, waveform=wf,
                            omega=1.1)
    vals = [cat.averages(spec, xi=xi)["J_z"] for xi in (0.0, 0.9, 2.2, 4.0)]
    assert max(vals) - min(vals) < 1e-9  # constant for circular drive
    av = cat.averages(spec, xi=0.7)
    assert av["J_z"] == pytest.approx(av["J_z_closed"], abs=1e-9)
    np.testing.assert_allclose(av["centroid"], av["centroid_closed"],
                               atol=1e-6)
    spec = cat.SolutionSpec(cat.Family.RADIAL_B_LASER, n=1, M=0, waveform=wf,
                            omega=0.9)
    av = cat.averages(spec, xi=1.3)
    assert av["J_z"] == pytest.approx(av["J_z_closed"], abs=1e-9)
    np.testing.assert_allclose(av["centroid"], av["centroid_closed"],
                               atol=1e-6)


def test_averages_reject_free_beam():
    with pytest.raises(cat.NotNormalizable):
        cat.averages(cat.SolutionSpec(cat.Family.FREE_BESSEL, l=0,
                                      p_perp=1.0))


# ---------------------------------------------------------------------------
# velocity / spin closed forms
# ---------------------------------------------------------------------------


def test_velocity_spin_matches_observables():
    wf = waveforms.circular(0.3)
    specs = [
        cat.SolutionSpec(cat.Family.UNIFORM_B, n=1, l=0),
        cat.SolutionSpec(cat.Family.UNIFORM_B, n=1, l=1, p_z=0.7),
        cat.SolutionSpec(cat.Family.RADIAL_B, n=2, M=1, p_z=0.4),
        cat.SolutionSpec(cat.Family.REDMOND, n=1, l=0, waveform=wf,
                         omega=1.1),
        cat.SolutionSpec(cat.Family.RADIAL_B_LASER, n=1, M=0, waveform=wf,
                         omega=1.1),
    ]
    rng = np.random.default_rng(11)
    for spec in specs:
        col = cat.spinor(spec)
        checked = 0
        for _ in range(40):
            pt = tuple(rng.uniform(0.4, 3.5, size=4))
            obs = spinors.observables(col(*pt))
            if obs.undefined:
                continue
            v, s = cat.velocity_spin(spec, *pt)
            np.testing.assert_allclose(v, obs.velocity, atol=1e-10)
            np.testing.assert_allclose(s, obs.spin, atol=1e-10)
            checked += 1
        assert checked >= 20


def test_stationary_spin_is_axial():
    spec = cat.SolutionSpec(cat.Family.UNIFORM_B, n=1, l=0)
    rng = np.random.default_rng(12)
    for _ in range(15):
        pt = tuple(rng.uniform(0.4, 3.5, size=4))
        _, s = cat.velocity_spin(spec, *pt)
        np.testing.assert_allclose(np.abs(s), [0, 0, 0, 1], atol=1e-12)


def test_dressed_spin_time_component():
    # s_r^0 = -c^4 (f1'^2 + f2'^2) / (2 eps^2 omega^2) wherever the duality
    # angle is zero
    wf = waveforms.circular(0.3)
    spec = cat.SolutionSpec(cat.Family.REDMOND, n=1, l=0, waveform=wf,
                            omega=1.1)
    eps = cat.eigenvalue(spec)
    col = cat.spinor(spec)
    rng = np.random.default_rng(13)
    checked = 0
    for _ in range(60):
        pt = tuple(rng.uniform(0.4, 3.0, size=4))
        obs = spinors.observables(col(*pt))
        if obs.undefined or obs.scalar < 0:
            continue
        xi = cat.xi_of(spec, pt[0], pt[3])
        d1, d2 = wf.fdot(xi)
        expected = -(d1 * d1 + d2 * d2) / (2.0 * eps ** 2 * 1.1 ** 2)
        _, s = cat.velocity_spin(spec, *pt)
        assert s[0] == pytest.approx(expected, abs=1e-10)
        checked += 1
    assert checked >= 20


def test_laser_dress_matrix_equals_column_lift():
    # the matrix-level dressing and the even-subalgebra lift of the dressed
    # column must be the same field
    wf = waveforms.circular(0.3)
    spec = cat.SolutionSpec(cat.Family.REDMOND, n=1, l=0, waveform=wf,
                            omega=1.1)
    base = spec.static_base()
    eps = cat.eigenvalue(base)
    dressed_matrix = cat.laser_dress_matrix(cat.matrix_spinor(base), wf, eps,
                                            spec.omega)
    lifted = cat.matrix_spinor(spec)
    rng = np.random.default_rng(21)
    for _ in range(10):
        pt = tuple(rng.uniform(0.4, 3.5, size=4))
        np.testing.assert_allclose(dressed_matrix(*pt), lifted(*pt),
                                   atol=1e-13)
    # zero drive: identity transform, bitwise
    off = cat.laser_dress_matrix(cat.matrix_spinor(base),
                                 waveforms.circular(0.0), eps, spec.omega)
    pt = (0.9, 1.2, 0.8, 0.3)
    np.testing.assert_array_equal(off(*pt), cat.matrix_spinor(base)(*pt))


def test_nilpotency_of_dressing_generator_100_phases():
    wf = waveforms.circular(0.45)
    rng = np.random.default_rng(22)
    for _ in range(100):
        xi = float(rng.uniform(0.0, 4.0 * math.pi))
        d1, d2 = wf.fdot(xi)
        gen = cat.null_rotation_generator(d1, d2, math.sqrt(3.0), 1.1)
        assert np.max(np.abs(gen @ gen)) < 1e-15


def test_si_units_smoke():
    # closed-form eigenvalue carries the unit constants consistently
    from rdibeams.units import SI
    me = 9.1093837015e-31
    spec = cat.SolutionSpec(cat.Family.UNIFORM_B, n=0, l=0, m=me, B=1e-20,
                            units=SI)
    rest = me * SI.c ** 2
    assert cat.eigenvalue(spec) == pytest.approx(rest, rel=1e-12)
    spec1 = cat.SolutionSpec(cat.Family.UNIFORM_B, n=1, l=0, m=me, B=1e-20,
                             units=SI)
    expected = math.sqrt(rest ** 2 + 2.0 * 1e-40)
    assert cat.eigenvalue(spec1) == pytest.approx(expected, rel=1e-12)


def test_spec_validation():
    with pytest.raises(ValueError):
        cat.SolutionSpec(cat.Family.UNIFORM_B, n=-1)
    with pytest.raises(ValueError):
        cat.SolutionSpec(cat.Family.RADIAL_B, M=-2)
    with pytest.raises(ValueError):
        cat.SolutionSpec(cat.Family.REDMOND, n=1)  # no waveform
    with pytest.raises(ValueError):
        cat.SolutionSpec(cat.Family.REDMOND, n=1,
                         waveform=waveforms.circular(0.1), p_z=0.5)
    with pytest.raises(ValueError):
        cat.SolutionSpec(cat.Family.FREE_BESSEL, p_perp=0.0)
