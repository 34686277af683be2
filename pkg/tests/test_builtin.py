import pytest

from pcomod import builtin
from pcomod.exprs import parse_poly, parse_tensor_terms
from pcomod.ncpoly import NCPoly
from pcomod.scalars import GaussRat, S_ONE, Scalar
from pcomod.tensors import Tensor


def test_registry_and_errors():
    names = builtin.registry()
    for required in ("c_z2", "o_u1", "su_q2", "gl_q2", "sl_q2", "quantum_plane", "toeplitz"):
        assert required in names
    with pytest.raises(builtin.UnknownNameError) as exc:
        builtin.build("su_q3")
    assert "su_q2" in str(exc.value)  # nearest-match hint
    with pytest.raises(builtin.QZeroError):
        builtin.build("gl_q2", 0)


def test_su_delta_and_z2_antipode(su, z2):
    als = su.system.alphabet
    want = parse_tensor_terms("g # a + as # g", als, 2)
    assert su.delta_word(("g",)) == Tensor((su.system, su.system), want)
    assert z2.antipode_word(("u",)) == NCPoly.gen(z2.system.alphabet, "u")


def test_q_one_degenerations():
    for name in ("su_q2", "gl_q2", "sl_q2"):
        H = builtin.build(name, 1)
        gens = H.system.alphabet.gens
        for i, g in enumerate(gens):
            for h in gens[i + 1:]:
                comm = H.system.normal_form(
                    NCPoly.word(H.system.alphabet, (g, h))
                    - NCPoly.word(H.system.alphabet, (h, g))
                )
                assert comm.is_zero(), (name, g, h)
    B = builtin.quantum_plane(1)
    xy = NCPoly.word(B.alphabet, ("x", "y"))
    yx = NCPoly.word(B.alphabet, ("y", "x"))
    assert B.normal_form(xy - yx).is_zero()


def test_units_certificate():
    cert = builtin.quantum_plane_units_certificate(builtin.quantum_plane(), 6)
    assert cert.ok and cert.pairs_checked == 209


def test_su_to_u1_surjection_checks():
    assert builtin.su_q2_to_u1_checks() == []
    pi = builtin.su_q2_to_u1_map()
    su = builtin.su_q2()
    als = su.system.alphabet
    # the sphere relation maps to unitarity of u
    rel = parse_poly("as*a + gs*g - 1", als)
    assert pi.apply(rel).is_zero()
    # pi(Delta alpha) = u (x) u: the gamma term dies
    u1 = builtin.o_u1()
    img = su.delta_word(("a",)).map_leg(0, pi.apply_word, codomain=u1.system).map_leg(
        1, pi.apply_word, codomain=u1.system
    )
    assert img == Tensor((u1.system, u1.system), {(("u",), ("u",)): S_ONE})
    assert pi.apply(NCPoly.one(als)) == NCPoly.one(u1.system.alphabet)


def test_gl_antipode_squares():
    gl = builtin.gl_q2()
    al = gl.system.alphabet
    b = NCPoly.gen(al, "b")
    s2b = gl.antipode(gl.antipode(b))
    assert s2b == b.scale(Scalar.q_power(-2))


def test_toeplitz_matrix_spot_check():
    import numpy as np

    from pcomod.numgeom.toeplitz import masked_residual, toeplitz_matrix

    T = builtin.toeplitz_system()
    al = T.alphabet
    p = NCPoly.gen(al, "s") + NCPoly.word(al, ("ss", "ss"))
    r = NCPoly.word(al, ("s", "ss")) - NCPoly.one(al).scale(Scalar.of(2))
    n = 64
    prod = toeplitz_matrix(T.mul(p, r), n)
    spot = toeplitz_matrix(p, n) @ toeplitz_matrix(r, n)
    assert masked_residual(prod, spot, n // 8) < 1e-12
    # the isometry relation holds strictly away from the truncation corner
    ident = toeplitz_matrix(T.mul(NCPoly.gen(al, "ss"), NCPoly.gen(al, "s")), n)
    assert masked_residual(ident, np.eye(n), n // 8) < 1e-12
