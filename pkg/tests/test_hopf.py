import random

import pytest

from pcomod import builtin
from pcomod.exprs import parse_poly, parse_tensor_terms
from pcomod.hopf import (
    CheckFailure,
    HopfAlgebra,
    HopfIdeal,
    NotHopfIdealError,
    check_hopf_axioms,
    coinvariant_basis_words,
    generator_map_isomorphism_problems,
    left_coinvariant_test,
    quotient_hopf,
)
from pcomod.ncpoly import NCPoly
from pcomod.scalars import S_ONE, S_Q
from pcomod.tensors import Tensor

from oracles import Z2Model


def test_delta_examples(z2, su):
    alz = z2.system.alphabet
    assert z2.delta_word(("u",)) == Tensor((z2.system, z2.system), {(("u",), ("u",)): S_ONE})
    als = su.system.alphabet
    want = parse_tensor_terms("a # a - Q*(gs # g)", als, 2)
    assert su.delta_word(("a",)) == Tensor((su.system, su.system), want)
    assert su.delta_word(()) == Tensor.of((su.system, su.system), su.system.one(), su.system.one())
    # the gamma column of the corepresentation matrix
    wantg = parse_tensor_terms("g # a + as # g", als, 2)
    assert su.delta_word(("g",)) == Tensor((su.system, su.system), wantg)


def test_axiom_suites_pass(z2, u1, su, gl, sl):
    for H in (z2, u1):
        assert check_hopf_axioms(H, 4) == []
    for H in (su, gl, sl):
        assert check_hopf_axioms(H, 3) == []


def test_corrupted_coproduct_fails_counit(z2):
    bad = HopfAlgebra(
        z2.system,
        {"u": Tensor((z2.system, z2.system), {(("u",), ()): S_ONE})},
        dict(z2.counit_table),
        dict(z2.antipode_table),
        dict(z2.antipode_inv_table),
        name="bad",
    )
    fails = check_hopf_axioms(bad, 1)
    assert any(f.check.startswith("counit") and f.where == "u" for f in fails)


def test_quotient_u1_is_z2_by_structure_constants(u1, z2):
    J = builtin.u1_mod_z2_ideal(u1)
    assert J.validate() == []
    qH, proj = quotient_hopf(u1, J)
    # 2-dimensional: basis {1, u}; compare against the finite group model
    basis = qH.system.basis_words(3)
    assert basis == [(), ("u",)]
    for i in (0, 1):
        for j in (0, 1):
            prod = qH.system.mul(
                NCPoly.word(qH.system.alphabet, ("u",) * i),
                NCPoly.word(qH.system.alphabet, ("u",) * j),
            )
            k = Z2Model.mul(i, j)
            assert prod == NCPoly.word(qH.system.alphabet, ("u",) * k)
    for i in (0, 1):
        w = ("u",) * i
        legs = {(w, w): S_ONE}
        assert qH.delta_word(w) == Tensor((qH.system, qH.system), legs)
        assert qH.counit_word(w) == S_ONE
        assert qH.antipode_word(w) == NCPoly.word(qH.system.alphabet, ("u",) * Z2Model.antipode(i))
    assert generator_map_isomorphism_problems(
        qH, z2, {"u": NCPoly.gen(z2.system.alphabet, "u"), "ui": NCPoly.gen(z2.system.alphabet, "u")}, 3
    ) == []


def test_quotient_gl_is_sl(gl, sl):
    J = builtin.gl_mod_det_ideal(gl)
    assert J.validate() == []
    qG, _ = quotient_hopf(gl, J)
    gm = {g: NCPoly.gen(sl.system.alphabet, g) for g in ("a", "b", "c", "d")}
    gm["Di"] = NCPoly.one(sl.system.alphabet)
    assert generator_map_isomorphism_problems(qG, sl, gm, 3) == []


def test_quotient_by_zero_ideal(z2):
    J = HopfIdeal(z2, [], name="<0>")
    qH, _ = quotient_hopf(z2, J)
    assert qH.system.rules == z2.system.rules
    assert check_hopf_axioms(qH, 3) == []


def test_left_coinvariants(gl, u1):
    JG = builtin.gl_mod_det_ideal(gl)
    al = gl.system.alphabet
    assert left_coinvariant_test(gl, JG, NCPoly.gen(al, "Di"))
    assert left_coinvariant_test(gl, JG, parse_poly("a*d - Q*b*c", al))
    assert left_coinvariant_test(gl, JG, NCPoly.one(al))
    JU = builtin.u1_mod_z2_ideal(u1)
    assert not left_coinvariant_test(u1, JU, NCPoly.gen(u1.system.alphabet, "u"))


def test_coinvariant_words_closed_under_multiplication(u1):
    J = builtin.u1_mod_z2_ideal(u1)
    words = coinvariant_basis_words(u1, J, 2)
    assert ("u", "u") in words and ("u",) not in words
    for w1 in words:
        for w2 in words:
            prod = u1.system.mul(
                NCPoly.word(u1.system.alphabet, w1), NCPoly.word(u1.system.alphabet, w2)
            )
            assert left_coinvariant_test(u1, J, prod)


def test_group_like_inverse_property(gl, u1, z2):
    for H in (gl, u1, z2):
        for w in H.group_like_words(2):
            p = NCPoly.word(H.system.alphabet, w)
            assert H.system.mul(H.antipode(p), p) == H.system.one()


def test_not_hopf_ideal_raises(u1):
    al = u1.system.alphabet
    J = HopfIdeal(u1, [NCPoly.gen(al, "u") + NCPoly.one(al)], name="<u+1>")
    report = J.validate()
    assert any(f.check == "counit-kill" for f in report)
    with pytest.raises(NotHopfIdealError):
        quotient_hopf(u1, J)


def test_anti_coalgebra_property_randomized(su):
    rng = random.Random(29)
    words = su.system.basis_words(3)
    flip = lambda t: t.swap_legs(0, 1)
    for w in rng.sample(words, k=12):
        lhs = su.delta_word(w).map_leg(0, su.antipode_word).map_leg(1, su.antipode_word)
        rhs = flip(su.delta(su.antipode_word(w)))
        assert lhs == rhs
