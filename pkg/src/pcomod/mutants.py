"""Negative controls: deliberately corrupted structure tables, each of which
must be caught by the standard verifiers with a localized witness."""

from __future__ import annotations

from typing import Callable

import numpy as np

from . import builtin
from .comodule import (
    CleavingMap,
    ComoduleAlgebra,
    NotModuleAlgebraError,
    StrongConnection,
    smash_product,
    verify_strong_connection,
)
from .hopf import HopfAlgebra, HopfIdeal, check_hopf_axioms
from .maps import NotWellDefinedError, gens_map
from .ncpoly import NCPoly
from .pullback import multipullback_membership
from .scalars import S_ONE, Scalar
from .tensors import Tensor


class Mutant:
    def __init__(self, name: str, suite: str, detect: Callable[[], list[str]]):
        self.name = name
        self.suite = suite
        self.detect = detect  # returns nonempty witness list iff caught


def _witnesses(failures) -> list[str]:
    return [f"{f.check} @ {f.where}" for f in failures]


# -- hopf-axioms mutants -----------------------------------------------------

def _z2_delta_u_x_1() -> list[str]:
    H = builtin.c_z2()
    bad = HopfAlgebra(
        H.system,
        {"u": Tensor((H.system, H.system), {(("u",), ()): S_ONE})},
        dict(H.counit_table),
        dict(H.antipode_table),
        dict(H.antipode_inv_table),
        name="c_z2/corrupt-delta",
    )
    return _witnesses(check_hopf_axioms(bad, 2))


def _su_antipode_sign() -> list[str]:
    H = builtin.su_q2()
    anti = dict(H.antipode_table)
    anti["g"] = -anti["g"]  # S(gamma) = +q gamma instead of -q gamma
    bad = HopfAlgebra(H.system, dict(H.delta_table), dict(H.counit_table), anti,
                      dict(H.antipode_inv_table), name="su_q2/corrupt-S")
    return _witnesses(check_hopf_axioms(bad, 2))


def _gl_counit_zero() -> list[str]:
    H = builtin.gl_q2()
    eps = dict(H.counit_table)
    eps["a"] = Scalar.of(0)
    bad = HopfAlgebra(H.system, dict(H.delta_table), eps, dict(H.antipode_table),
                      dict(H.antipode_inv_table), name="gl_q2/corrupt-eps")
    return _witnesses(check_hopf_axioms(bad, 2))


# -- comodule-axioms mutants ---------------------------------------------------

def _toeplitz_coaction_degree_drop() -> list[str]:
    T = builtin.toeplitz_comodule()
    coact = dict(T.coaction_table)
    coact["ss"] = Tensor((T.system, T.hopf.system), {(("ss",), ()): S_ONE})
    bad = ComoduleAlgebra(T.system, T.hopf, coact, name="toeplitz/corrupt-coaction")
    return _witnesses(bad.check_axioms(2))


def _smash_coaction_flip() -> list[str]:
    """Trivializing the fiber coaction is formally consistent but breaks the
    smash-product invariant: a group-like fiber generator becomes coinvariant."""
    sm = builtin.toeplitz_z2_smash()
    coact = dict(sm.coaction_table)
    coact["u"] = Tensor((sm.system, sm.hopf.system), {(("u",), ()): S_ONE})
    bad = ComoduleAlgebra(sm.system, sm.hopf, coact, name="smash/corrupt-coaction")
    if bad.is_coinvariant(NCPoly.gen(sm.system.alphabet, "u")):
        return ["group-like fiber generator u became coaction-invariant"]
    return []


def _pw_patch_wrong_grade() -> list[str]:
    P, _ = builtin.pw_patch()
    coact = dict(P.coaction_table)
    coact["wi"] = Tensor((P.system, P.hopf.system), {(("wi",), ("u",)): S_ONE})
    bad = ComoduleAlgebra(P.system, P.hopf, coact, name="pw_patch/corrupt-grade")
    return _witnesses(bad.check_axioms(2))


# -- strong-connection mutants ---------------------------------------------------

def _connection_drops_fiber() -> list[str]:
    sm = builtin.toeplitz_z2_smash()
    ell = StrongConnection.from_cleaving(sm.cleaving(), 2)
    one2 = Tensor.of((sm.system, sm.system), sm.system.one(), sm.system.one())
    ell.table[("u",)] = Tensor(
        (sm.system, sm.system), {(("u",), ()): S_ONE}
    )  # (1 (x) u) (x) (1 (x) 1): the right leg loses u
    return _witnesses(verify_strong_connection(ell, 2))


def _connection_not_unital() -> list[str]:
    sm = builtin.toeplitz_z2_smash()
    ell = StrongConnection.from_cleaving(sm.cleaving(), 2)
    ell.table[()] = ell.table[()].scale(Scalar.of(2))
    return _witnesses(verify_strong_connection(ell, 2))


def _cleaving_not_colinear() -> list[str]:
    P, cl = builtin.pw_patch()
    H = P.hopf
    j = gens_map(
        "gamma_bad",
        H.system,
        P.system,
        {"u": NCPoly.word(P.system.alphabet, ("w", "w")), "ui": NCPoly.word(P.system.alphabet, ("wi", "wi"))},
        check=False,
    )
    bad = CleavingMap(P, j)
    return _witnesses(bad.verify(2))


# -- smash mutants ------------------------------------------------------------------

def _plane_action_wrong_weight() -> list[str]:
    table = builtin.plane_action_table("formal")
    B = builtin.quantum_plane()
    table[("a", "x")] = NCPoly.gen(B.alphabet, "x").scale(Scalar.q_power(-1))
    try:
        smash_product(B, builtin.gl_q2(), table, name="mutant", check=True)
    except NotModuleAlgebraError as e:
        return [str(e)]
    return []


def _plane_action_breaks_diagonal_weight() -> list[str]:
    """d |> y with the wrong weight contradicts the determinant relation."""
    table = builtin.plane_action_table("formal")
    B = builtin.quantum_plane()
    table[("d", "y")] = NCPoly.gen(B.alphabet, "y").scale(Scalar.q_power(-1))
    try:
        smash_product(B, builtin.gl_q2(), table, name="mutant", check=True)
    except NotModuleAlgebraError as e:
        return [str(e)]
    return []


def _plane_action_determinant_breaks() -> list[str]:
    table = builtin.plane_action_table("formal")
    B = builtin.quantum_plane()
    table[("Di", "x")] = NCPoly.gen(B.alphabet, "x").scale(Scalar.q_power(2))
    try:
        smash_product(B, builtin.gl_q2(), table, name="mutant", check=True)
    except NotModuleAlgebraError as e:
        return [str(e)]
    return []


# -- covering / transition mutants ----------------------------------------------------

def _edge_map_forgets_twist() -> list[str]:
    triv = builtin.sphere_covering()
    pair = triv.covering.pairs[(0, 1)]
    al = pair.target.system.alphabet
    bad_map = gens_map(
        "pi^1_0-bad",
        triv.covering.pieces[1].comodule.system,
        pair.target.system,
        {"s": NCPoly.gen(al, "z2"), "ss": NCPoly.gen(al, "z2i"), "u": NCPoly.gen(al, "v")},
        check=True,
    )
    pair.map_j = bad_map
    return _witnesses(triv.covering.validate(2))


def _constant_fiber_tuple_rejected() -> list[str]:
    """Not a corruption but the canonical no-false-pass control: the constant
    fiber tuple must NOT be a member (the bundle is nontrivial)."""
    triv = builtin.sphere_covering()
    u = NCPoly.gen(triv.covering.pieces[0].comodule.system.alphabet, "u")
    ok, failures = multipullback_membership(triv.covering, [u, u, u])
    return _witnesses(failures) if not ok else []


def _kernel_overlap_detected() -> list[str]:
    from .pullback import Covering

    sm = builtin.toeplitz_z2_smash()
    al = sm.system.alphabet
    proj = NCPoly.one(al) - NCPoly.word(al, ("s", "ss"))
    cov = Covering.from_kernels(sm, [[proj], [proj]], base_gens=[("s", "ss")] * 2, name="bad-cover")
    return _witnesses(cov.kernel_intersection_certificate(3))


# -- reduction-theorem mutants -----------------------------------------------------------

def _not_a_hopf_ideal() -> list[str]:
    H = builtin.o_u1()
    al = H.system.alphabet
    J = HopfIdeal(H, [NCPoly.gen(al, "u") + NCPoly.one(al)], name="<u+1>")
    return _witnesses(J.validate())


def _prolonged_cleaving_wrong_power() -> list[str]:
    pro = builtin.sphere_prolonged()
    triv = pro.trivialisation
    piece = triv.covering.pieces[0]
    al = piece.comodule.system.alphabet
    H = triv.hopf
    j = gens_map(
        "gamma-bad",
        H.system,
        piece.comodule.system,
        {"u": NCPoly.word(al, ("U", "U")), "ui": NCPoly.word(al, ("Ui", "Ui"))},
        check=False,
    )
    bad = CleavingMap(piece.comodule, j)
    return _witnesses(bad.verify(2))


def _surjection_not_algebra_map() -> list[str]:
    H = builtin.o_u1()
    z2 = builtin.c_z2()
    al = z2.system.alphabet
    try:
        gens_map(
            "pi-bad",
            H.system,
            z2.system,
            {"u": NCPoly.gen(al, "u"), "ui": NCPoly.one(al)},
            check=True,
        )
    except NotWellDefinedError as e:
        return [str(e)]
    return []


# -- numeric mutants -------------------------------------------------------------------

def _phi_wrong_slope() -> list[str]:
    from .numgeom.circle import _angdist, delta_angle
    from .numgeom.grids import GridConfig, Z2, interval_nodes

    cfg = GridConfig()
    bad_phi = lambda th: np.clip(2.0 - (3.0 / np.pi) * _angdist(th, 0.0), -1.0, 1.0)
    t = interval_nodes(cfg.m_interval)[None, :]
    k = Z2[:, None]
    resid = float(np.max(np.abs(bad_phi(delta_angle(1, k, t)) - k)))
    return [f"chart composition residual {resid:.3f}"] if resid > cfg.tol else []


def _face_sign_flip() -> list[str]:
    from .numgeom.grids import GridConfig
    from .numgeom.membership import SphereElement, face_atlas

    cfg = GridConfig()
    ts = builtin.toeplitz_system()
    one = NCPoly.one(ts.alphabet)
    zero = NCPoly.zero(ts.alphabet)
    s = NCPoly.gen(ts.alphabet, "s")
    good = SphereElement([(one + s - s, zero)] * 3)
    bad = SphereElement([(one, zero), (-one, zero), (one, zero)])
    fa = face_atlas(bad, cfg)
    if fa["pass"]:
        return []
    worst = max(fa["edges"], key=fa["edges"].get)
    return [f"edge {worst} residual {fa['edges'][worst]:.3f}"]


def _omega_wrong_denominator() -> list[str]:
    from .numgeom.grids import GridConfig

    cfg = GridConfig()
    rng = cfg.rng(99)
    v = rng.normal(size=(2000, 4))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    a = v[:, 0] + 1j * v[:, 1]
    c = v[:, 2] + 1j * v[:, 3]
    aa, cc = np.abs(a) ** 2, np.abs(c) ** 2
    omega2 = 2.0 / (1.0 + aa)  # wrong: drops the |a|^2-|c|^2 fold
    resid = float(np.max(np.abs((1 - omega2 * aa) * (1 - omega2 * cc))))
    return [f"zero-identity residual {resid:.3f}"] if resid > cfg.tol else []


def _parity_mislabeled_generator() -> list[str]:
    from .numgeom.grids import GridConfig, circle_angles
    from .numgeom.probes import _random_loop, winding_number

    cfg = GridConfig()
    rng = cfg.rng(100)
    theta = circle_angles(cfg.n_circle)
    evens = 0
    for _ in range(20):
        while True:
            _, dets = _random_loop(rng, 2, theta, "even")
            try:
                w = winding_number(dets)
                break
            except Exception:
                continue
        if w % 2 == 0:
            evens += 1
    return [f"{evens}/20 even windings from the mislabeled family"] if evens else []


MUTANTS: list[Mutant] = [
    Mutant("z2-coproduct-drops-leg", "hopf-axioms", _z2_delta_u_x_1),
    Mutant("su-antipode-sign", "hopf-axioms", _su_antipode_sign),
    Mutant("gl-counit-zero", "hopf-axioms", _gl_counit_zero),
    Mutant("toeplitz-coaction-degree-drop", "comodule-axioms", _toeplitz_coaction_degree_drop),
    Mutant("smash-coaction-flip", "comodule-axioms", _smash_coaction_flip),
    Mutant("patch-coaction-wrong-grade", "comodule-axioms", _pw_patch_wrong_grade),
    Mutant("connection-drops-fiber", "strong-connection", _connection_drops_fiber),
    Mutant("connection-not-unital", "strong-connection", _connection_not_unital),
    Mutant("cleaving-not-colinear", "strong-connection", _cleaving_not_colinear),
    Mutant("action-wrong-weight", "smash", _plane_action_wrong_weight),
    Mutant("action-breaks-diagonal-weight", "smash", _plane_action_breaks_diagonal_weight),
    Mutant("action-breaks-determinant", "smash", _plane_action_determinant_breaks),
    Mutant("edge-map-forgets-twist", "covering", _edge_map_forgets_twist),
    Mutant("constant-fiber-tuple-rejected", "covering", _constant_fiber_tuple_rejected),
    Mutant("kernel-overlap-detected", "covering", _kernel_overlap_detected),
    Mutant("counit-does-not-kill", "reduction-theorem", _not_a_hopf_ideal),
    Mutant("descended-cleaving-wrong-power", "reduction-theorem", _prolonged_cleaving_wrong_power),
    Mutant("surjection-not-algebra-map", "reduction-theorem", _surjection_not_algebra_map),
    Mutant("chart-wrong-slope", "sphere-gluing", _phi_wrong_slope),
    Mutant("face-sign-flip", "sphere-gluing", _face_sign_flip),
    Mutant("patch-function-wrong-fold", "peter-weyl", _omega_wrong_denominator),
    Mutant("parity-family-mislabeled", "parity-probe", _parity_mislabeled_generator),
]
