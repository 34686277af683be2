import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcomod import builtin
from pcomod.exprs import parse_poly
from pcomod.ncpoly import Alphabet, NCPoly
from pcomod.rewrite import NoStarError, OrderViolation, RewriteSystem, SizeLimitError
from pcomod.scalars import GaussRat, S_ONE, S_Q, S_QINV, Scalar

from oracles import Z2Model, plane_normal_form, toeplitz_normal_word


def test_normal_form_gl_examples(gl):
    al = gl.system.alphabet
    # ab = q ba orients to ba -> q^-1 ab
    assert gl.system.normal_form(NCPoly.word(al, ("b", "a"))) == parse_poly("Q^-1*a*b", al)
    # ad = da + (q - q^-1) bc orients to da -> ad - (q - q^-1) bc
    got = gl.system.normal_form(NCPoly.word(al, ("d", "a")))
    want = parse_poly("a*d", al) - parse_poly("b*c", al).scale(S_Q - S_QINV)
    assert got == want
    assert gl.system.normal_form(NCPoly.one(al)) == NCPoly.one(al)


def test_mul_quantum_plane_against_inversion_oracle():
    B = builtin.quantum_plane()
    al = B.alphabet
    x, y = NCPoly.gen(al, "x"), NCPoly.gen(al, "y")
    assert B.mul(x, y) == NCPoly.word(al, ("x", "y"))
    assert B.mul(y, x) == NCPoly.word(al, ("x", "y")).scale(S_QINV)
    rng = random.Random(3)
    for _ in range(200):
        word = "".join(rng.choice("xy") for _ in range(rng.randint(0, 6)))
        a, b, k = plane_normal_form(word)
        got = B.normal_form(NCPoly.word(al, tuple(word)))
        want = NCPoly.word(al, ("x",) * a + ("y",) * b).scale(Scalar.q_power(-k))
        assert got == want


def test_mul_z2_against_group_model(z2):
    al = z2.system.alphabet
    u = NCPoly.gen(al, "u")
    assert z2.system.mul(u, u) == NCPoly.one(al)
    rng = random.Random(5)
    for _ in range(50):
        k = rng.randint(0, 7)
        got = z2.system.normal_form(NCPoly.word(al, ("u",) * k))
        i = 0
        for _ in range(k):
            i = Z2Model.mul(i, 1)
        want = NCPoly.word(al, ("u",) * i)
        assert got == want


def test_toeplitz_normal_forms_against_stack_model():
    T = builtin.toeplitz_system()
    al = T.alphabet
    rng = random.Random(11)
    for _ in range(300):
        word = tuple(rng.choice(["s", "ss"]) for _ in range(rng.randint(0, 7)))
        a, b = toeplitz_normal_word(word)
        got = T.normal_form(NCPoly.word(al, word))
        assert got == NCPoly.word(al, ("s",) * a + ("ss",) * b)


def test_order_violation_reported():
    al = Alphabet(["a", "b"])
    ok = NCPoly.word(al, ("b", "a"))
    with pytest.raises(OrderViolation):
        RewriteSystem(al, [(("a", "b"), ok)])  # rhs ba > lhs ab
    # and the empty left side is rejected outright
    with pytest.raises(OrderViolation):
        RewriteSystem(al, [((), NCPoly.one(al))])


def test_confluence_reports(z2, su):
    assert z2.system.check_local_confluence(4).confluent
    rep = su.system.check_local_confluence(6)
    assert rep.confluent and rep.words_checked > 1000


def test_confluence_conflict_detected():
    al = Alphabet(["a", "b"])
    one = NCPoly.one(al)
    sys = RewriteSystem(
        al,
        [(("b", "a"), NCPoly.word(al, ("a", "b"))), (("b", "a", "a"), one)],
    )
    rep = sys.check_local_confluence(3)
    assert not rep.confluent
    assert any(len(c.word) == 3 for c in rep.conflicts)


def test_star_su_examples(su):
    al = su.system.alphabet
    ag = NCPoly.word(al, ("a", "g"))
    got = su.system.star(ag)
    # (alpha gamma)^* = gamma^* alpha^*, a normal-form basis word here
    assert got == NCPoly.word(al, ("gs", "as"))
    assert su.system.star(NCPoly.one(al)) == NCPoly.one(al)
    # star o star = id after normal form
    assert su.system.star(got) == su.system.normal_form(ag)


def test_star_toeplitz_antilinear():
    T = builtin.toeplitz_system()
    al = T.alphabet
    i_s = NCPoly.gen(al, "s").scale(Scalar.i())
    assert T.star(i_s) == NCPoly.gen(al, "ss").scale(-Scalar.i())
    B = builtin.quantum_plane()
    with pytest.raises(NoStarError):
        B.star(NCPoly.gen(B.alphabet, "x"))


def test_star_involution_randomized(su):
    """star o star = id on 1000 random degree-<= 4 polynomials for every
    star-equipped builtin."""
    rng = random.Random(13)
    starred = [su.system, builtin.c_z2().system, builtin.o_u1().system,
               builtin.toeplitz_system(), builtin.pw_patch()[0].system]
    per = 1000 // len(starred)
    for sysm in starred:
        al = sysm.alphabet
        words = sysm.basis_words(4)
        for _ in range(per):
            terms = {}
            for w in rng.sample(words, k=min(4, len(words))):
                terms[w] = Scalar.of(GaussRat(rng.randint(-2, 2), rng.randint(-2, 2)))
            p = sysm.normal_form(NCPoly(al, terms))
            assert sysm.star(sysm.star(p)) == p


def test_normal_form_idempotent_and_associative(gl):
    rng = random.Random(17)
    al = gl.system.alphabet
    words = gl.system.all_words(3)
    for _ in range(60):
        ws = rng.sample(words, k=3)
        p, r, t = (NCPoly.word(al, w) for w in ws)
        nf = gl.system.normal_form
        assert nf(nf(p.concat(r))) == nf(p.concat(r))
        assert nf(gl.system.mul(gl.system.mul(p, r), t)) == nf(gl.system.mul(p, gl.system.mul(r, t)))


def test_all_paths_oracle_agrees(su):
    rng = random.Random(19)
    words = [w for w in su.system.all_words(4) if len(w) >= 2]
    for w in rng.sample(words, k=25):
        finals = su.system.normal_forms_all_paths(w)
        assert len(finals) == 1
        nf = su.system.normal_form(NCPoly.word(su.system.alphabet, w))
        assert finals == {frozenset(nf.terms.items())}


def test_size_limit_guard():
    gl = builtin.gl_q2()
    small = RewriteSystem(
        gl.system.alphabet,
        [(r.lhs_word, r.rhs) for r in gl.system.rules],
        term_cap=3,
    )
    al = gl.system.alphabet
    with pytest.raises(SizeLimitError):
        small.normal_form(NCPoly.word(al, ("d", "a", "d", "a", "d", "a")))


def test_central_canonicalization(gl):
    al = gl.system.alphabet
    assert al.canon(("Di", "a", "Di", "b")) == ("a", "b", "Di", "Di")
    # determinant matching sees through interleaved words
    w = gl.system.normal_form(NCPoly.word(al, ("b", "c", "c", "Di")))
    assert w == parse_poly("Q^-2*a*c*d*Di - Q^-1*c", al)


def test_basis_words_degree_counts(su):
    # PBW count: words g^k gs^l a^m or g^k gs^l as^m
    words = su.system.basis_words(3)
    expected = sum(2 * (d + 1) * (d + 2) // 2 - (d + 1) for d in range(4))
    assert len(words) == expected
