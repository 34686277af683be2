import numpy as np
import pytest

from pcomod import builtin
from pcomod.ncpoly import NCPoly
from pcomod.numgeom import (
    FourierPoly,
    GridConfig,
    SphereElement,
    WindingError,
    decomposition_report,
    delta_map,
    disc_membership,
    equivariant_parity_probe,
    equivariant_parts,
    face_atlas,
    gauge_conjugation_report,
    mattprop_report,
    peter_weyl_report,
    phi_hat,
    phi_hat_grid,
    phi_identities_report,
    pi_n,
    pi_n_inverse,
    rp2_membership,
    splitting_identities_report,
    sphere_membership,
    symbol,
    winding_number,
)
from pcomod.numgeom.grids import circle_angles
from pcomod.numgeom.toeplitz import random_toeplitz_poly
from pcomod.scalars import S_ONE, Scalar

CFG = GridConfig()


def test_phi_hat_values():
    assert phi_hat(1, np.pi / 4) == pytest.approx(1.0, abs=1e-15)
    assert phi_hat(1, np.pi) == -1.0
    assert phi_hat(2, np.pi / 2) == 1.0
    # linear sector value
    assert phi_hat(1, np.pi / 2) == pytest.approx(0.0, abs=1e-15)


def test_delta_values_match_square_corners():
    assert delta_map(1, 1, 1) == pytest.approx(np.exp(9j * np.pi / 4))
    assert delta_map(1, 1, -1) == pytest.approx(np.exp(7j * np.pi / 4))
    assert delta_map(1, -1, 1) == pytest.approx(np.exp(3j * np.pi / 4))
    assert delta_map(1, -1, -1) == pytest.approx(np.exp(5j * np.pi / 4))
    assert delta_map(2, 1, 1) == pytest.approx(np.exp(1j * np.pi / 4))
    # Z2-equivariance: delta(-k, -t) = -delta(k, t)
    k = np.array([1.0, -1.0])[:, None]
    t = np.linspace(-1, 1, 33)[None, :]
    for i in (1, 2):
        assert np.max(np.abs(delta_map(i, -k, -t) + delta_map(i, k, t))) < 1e-14


def test_grid_oddness_bit_exact():
    for i in (1, 2):
        v = phi_hat_grid(i, CFG.n_circle)
        assert np.max(np.abs(v + np.roll(v, -(CFG.n_circle // 2)))) == 0.0


def test_chart_and_splitting_reports():
    rep = phi_identities_report(CFG)
    assert max(rep.values()) < 1e-12
    rep = splitting_identities_report(CFG, 8)
    assert max(rep.values()) < 1e-9


def test_gauge_report():
    rep = gauge_conjugation_report(CFG, 60)
    assert rep["involution"] == 0.0
    assert rep["phi_closed_form"] == 0.0
    assert rep["sigma_conj"] < 1e-12


def test_memberships():
    ts = builtin.toeplitz_system()
    al = ts.alphabet
    one, zero, s = NCPoly.one(al), NCPoly.zero(al), NCPoly.gen(al, "s")
    ok, r = rp2_membership([one, one, one], CFG)
    assert ok and r == 0.0
    ok, r = rp2_membership([s, zero, zero], CFG)
    assert not ok and r == pytest.approx(1.0, abs=1e-12)
    ok, _ = disc_membership([one, one, one], CFG)
    assert ok
    elt = SphereElement([(one, zero)] * 3)
    ok, r = sphere_membership(elt, CFG)
    assert ok and r == 0.0
    bad = SphereElement([(zero, one)] * 3)
    ok, r = sphere_membership(bad, CFG)
    assert not ok and r == pytest.approx(2.0, abs=1e-12)


def test_face_atlas_localizes_corruption():
    ts = builtin.toeplitz_system()
    one, zero = NCPoly.one(ts.alphabet), NCPoly.zero(ts.alphabet)
    good = face_atlas(SphereElement([(one, zero)] * 3), CFG)
    assert good["pass"] and len(good["edges"]) == 12
    bad = face_atlas(SphereElement([(one, zero), (-one, zero), (one, zero)]), CFG)
    assert not bad["pass"]
    broken = [k for k, v in bad["edges"].items() if v > CFG.tol]
    assert broken and all(k[0] in ("01", "12") for k in broken)


def test_symbol_exactness_and_flip():
    ts = builtin.toeplitz_system()
    rng = CFG.rng(41)
    for _ in range(40):
        p = random_toeplitz_poly(rng, 3)
        r = random_toeplitz_poly(rng, 3)
        assert symbol(ts.mul(p, r)).coeffs == (symbol(p) * symbol(r)).coeffs
        assert symbol(ts.star(p)).coeffs == symbol(p).star().coeffs


def test_decomposition_roundtrips_and_split():
    rep = decomposition_report(CFG, n_random=200)
    assert rep["pass"]
    ts = builtin.toeplitz_system()
    al = ts.alphabet
    s = NCPoly.gen(al, "s")
    one, zero = NCPoly.one(al), NCPoly.zero(al)
    elt = SphereElement([(one + s, s)] * 3)
    plus, minus = equivariant_parts(elt)
    back = plus.add(minus)
    for (p0, p1), (q0, q1) in zip(back.components, elt.components):
        assert (p0 - q0).is_zero() and (p1 - q1).is_zero()
    # eigenparts really are eigenvectors
    fp = plus.flip().sub(plus)
    assert all(p0.is_zero() and p1.is_zero() for p0, p1 in fp.components)


def test_winding_numbers_and_guards():
    th = circle_angles(720)
    assert winding_number(np.exp(1j * th)) == 1
    assert winding_number(np.exp(3j * th)) == 3
    assert winding_number(np.ones_like(th, dtype=complex)) == 0
    # a 10x denser sampling gives the same winding (density oracle)
    th10 = circle_angles(7200)
    assert winding_number(np.exp(3j * th10)) == 3
    with pytest.raises(WindingError, match="SINGULAR"):
        winding_number(np.exp(1j * th) - 1.0)
    with pytest.raises(WindingError, match="DENSITY"):
        winding_number(np.exp(40j * circle_angles(64)))


def test_winding_additive_and_rotation_invariant():
    th = circle_angles(720)
    rng = CFG.rng(43)
    for _ in range(10):
        c1 = rng.normal(size=3) + 1j * rng.normal(size=3)
        f = np.exp(2j * th) * (2.5 + c1[0] * np.exp(1j * th) * 0.2 + c1[1] * 0.1)
        g = np.exp(-1j * th) * (3.0 + c1[2] * 0.2)
        wf, wg = winding_number(f), winding_number(g)
        assert winding_number(f * g) == wf + wg
        shift = int(rng.integers(0, 720))
        assert winding_number(np.roll(f, shift)) == wf


def test_parity_probe_small():
    rep = equivariant_parity_probe(1, 10, CFG)
    assert rep.all_odd
    rep2 = equivariant_parity_probe(2, 25, CFG)
    assert rep2.all_odd and rep2.control_has_both


def test_peter_weyl_spot_values():
    # |a| = 1: omega = 1 and the first factor vanishes
    aa = 1.0
    omega2 = 2.0 / (1.0 + abs(aa - 0.0))
    assert omega2 == 1.0 and (1 - omega2 * aa) == 0.0
    # |a|^2 = |c|^2 = 1/2: omega^2 = 2 and both factors vanish
    omega2 = 2.0 / (1.0 + abs(0.5 - 0.5))
    assert omega2 == 2.0 and (1 - omega2 * 0.5) == 0.0
    rep = peter_weyl_report(2000, CFG)
    assert rep["pass"]


def test_mattprop_report():
    rep = mattprop_report(CFG, n_random=100)
    assert rep["pass"]
