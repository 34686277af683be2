"""Comodule algebras, cleaving maps, strong connections, smash products,
reduction data and the unital-map correspondence on smash products."""

from __future__ import annotations

from typing import Sequence

from .hopf import CheckFailure, HopfAlgebra, HopfIdeal, quotient_hopf
from .linalg import RowSpace
from .maps import LinearMap, gens_map
from .ncpoly import NCPoly, Word, word_str
from .rewrite import RewriteSystem
from .scalars import S_ONE
from .tensors import Tensor


class NotModuleAlgebraError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class ComoduleAlgebra:
    """Presented algebra P with an H-coaction declared on generators and
    extended as an algebra map."""

    def __init__(
        self,
        system: RewriteSystem,
        hopf: HopfAlgebra,
        coaction: dict[str, Tensor],
        name: str = "",
    ):
        self.system = system
        self.hopf = hopf
        self.coaction_table = coaction
        self.name = name or f"{system.name} over {hopf.name}"
        self._coact_cache: dict[Word, Tensor] = {}

    def coact_word(self, w: Word) -> Tensor:
        hit = self._coact_cache.get(w)
        if hit is not None:
            return hit
        out = Tensor.of((self.system, self.hopf.system), self.system.one(), self.hopf.system.one())
        for g in w:
            out = out.mul(self.coaction_table[g])
        self._coact_cache[w] = out
        return out

    def coact(self, p: NCPoly) -> Tensor:
        out = Tensor.zero((self.system, self.hopf.system))
        for w, c in p.terms.items():
            out = out + self.coact_word(w).scale(c)
        return out

    def is_coinvariant(self, p: NCPoly) -> bool:
        p = self.system.normal_form(p)
        target = Tensor(
            (self.system, self.hopf.system), {(w, ()): c for w, c in p.terms.items()}, _normalized=True
        )
        return self.coact(p) == target

    def check_axioms(self, degree_bound: int) -> list[CheckFailure]:
        """Well-definedness on the rewrite rules, coaction coassociativity and
        the counit law on basis words up to the bound."""
        failures = []
        H = self.hopf
        for rule in self.system.rules:
            lhs = self.coact_word(rule.lhs_word)
            rhs = self.coact(rule.rhs)
            if lhs != rhs:
                failures.append(
                    CheckFailure(
                        "coaction-well-defined",
                        word_str(rule.lhs_word),
                        f"{lhs!r} != {rhs!r}",
                    )
                )
        for w in self.system.basis_words(degree_bound):
            ws = word_str(w)
            d = self.coact_word(w)
            lhs = d.expand_leg(0, self.coact_word)
            rhs = d.expand_leg(1, H.delta_word)
            if lhs != rhs:
                failures.append(CheckFailure("coaction-coassociativity", ws, f"{lhs!r} != {rhs!r}"))
            ce = d.contract_leg(1, H.counit_word).leg_poly(0)
            wp = self.system.normal_form(NCPoly.word(self.system.alphabet, w))
            if ce != wp:
                failures.append(CheckFailure("coaction-counit", ws, f"{ce!r} != {wp!r}"))
        return failures

    def __repr__(self):
        return f"ComoduleAlgebra({self.name})"


def is_coinvariant(P: ComoduleAlgebra, p: NCPoly) -> bool:
    return P.is_coinvariant(p)


def canonical_map(P: ComoduleAlgebra, t: Tensor) -> Tensor:
    """can(p (x) q) = p q_(0) (x) q_(1), over P (x) P (B-balancing is a separate check)."""
    expanded = t.expand_leg(1, P.coact_word)  # (P, P, H)
    return expanded.merge_legs(0, P.system)


# ---------------------------------------------------------------------------
# cleaving maps and strong connections
# ---------------------------------------------------------------------------

class CleavingMap:
    """Unital right-colinear convolution-invertible j: H -> P.

    For algebra-map cleavings the convolution inverse is j o S automatically.
    """

    def __init__(self, P: ComoduleAlgebra, j: LinearMap, j_inv: LinearMap | None = None):
        self.P = P
        self.j = j
        if j_inv is None:
            if j.mode != "algebra":
                raise PreconditionError(
                    f"{j.name}: non-algebra cleaving needs an explicit convolution inverse"
                )
            j_inv = j.compose(P.hopf.antipode_map(), name=f"{j.name}oS")
        self.j_inv = j_inv

    def verify(self, degree_bound: int) -> list[CheckFailure]:
        failures = []
        P, H = self.P, self.P.hopf
        one = P.system.one()
        if self.j.apply(H.system.one()) != one:
            failures.append(CheckFailure("cleaving-unital", "1", f"j(1) = {self.j.apply(H.system.one())!r}"))
        for w in H.system.basis_words(degree_bound):
            ws = word_str(w)
            jim = self.j.apply_word(w)
            lhs = P.coact(jim)
            rhs = H.delta_word(w).map_leg(0, self.j.apply_word, codomain=P.system)
            if lhs != rhs:
                failures.append(CheckFailure("cleaving-colinear", ws, f"{lhs!r} != {rhs!r}"))
            conv = P.system.zero()
            vnoc = P.system.zero()
            for (w1, w2), c in H.delta_word(w).terms.items():
                conv = conv + P.system.mul(self.j.apply_word(w1), self.j_inv.apply_word(w2)).scale(c)
                vnoc = vnoc + P.system.mul(self.j_inv.apply_word(w1), self.j.apply_word(w2)).scale(c)
            target = one.scale(H.counit_word(w))
            if P.system.normal_form(conv) != target:
                failures.append(CheckFailure("cleaving-inverse-right", ws, f"{conv!r} != {target!r}"))
            if P.system.normal_form(vnoc) != target:
                failures.append(CheckFailure("cleaving-inverse-left", ws, f"{vnoc!r} != {target!r}"))
        return failures


class StrongConnection:
    """Linear lifting ell: H -> P (x) P tabulated on normal-form words."""

    def __init__(self, P: ComoduleAlgebra, table: dict[Word, Tensor], bound: int):
        self.P = P
        self.table = dict(table)
        self.bound = bound
        if () not in self.table:
            self.table[()] = Tensor.of((P.system, P.system), P.system.one(), P.system.one())

    @staticmethod
    def from_cleaving(j: CleavingMap, bound: int) -> "StrongConnection":
        """ell = (j^-1 (x) j) o Delta."""
        P, H = j.P, j.P.hopf
        table: dict[Word, Tensor] = {}
        for w in H.system.basis_words(bound):
            acc = Tensor.zero((P.system, P.system))
            for (w1, w2), c in H.delta_word(w).terms.items():
                acc = acc + Tensor.of(
                    (P.system, P.system), j.j_inv.apply_word(w1), j.j.apply_word(w2)
                ).scale(c)
            table[w] = acc
        return StrongConnection(P, table, bound)

    def apply_word(self, w: Word) -> Tensor:
        if w not in self.table:
            from .maps import DegreeExceededError

            raise DegreeExceededError(f"strong connection untabulated at {word_str(w)}")
        return self.table[w]

    def apply(self, p: NCPoly) -> Tensor:
        out = Tensor.zero((self.P.system, self.P.system))
        for w, c in p.terms.items():
            out = out + self.apply_word(w).scale(c)
        return out

    def translation_sandwich(self, h: NCPoly, mid: NCPoly) -> NCPoly:
        """h^[1] * mid * h^[2], multiplied out in P."""
        P = self.P.system
        out = P.zero()
        for w, c in h.terms.items():
            for (a, b), cc in self.apply_word(w).terms.items():
                out = out + P.mul_many(
                    [NCPoly.word(P.alphabet, a), mid, NCPoly.word(P.alphabet, b)]
                ).scale(c * cc)
        return P.normal_form(out)

    def verify(self, degree_bound: int) -> list[CheckFailure]:
        return verify_strong_connection(self, degree_bound)


def strong_connection_from_cleaving(j: CleavingMap, bound: int = 4) -> StrongConnection:
    return StrongConnection.from_cleaving(j, bound)


def verify_strong_connection(ell: StrongConnection, degree_bound: int) -> list[CheckFailure]:
    """The three strong-connection axioms plus h^[1] h^[2] = eps(h), on basis
    words up to the bound."""
    failures = []
    P = ell.P
    H = P.hopf
    Ps, Hs = P.system, H.system
    one = Ps.one()
    if ell.apply_word(()) != Tensor.of((Ps, Ps), one, one):
        failures.append(CheckFailure("connection-unital", "1", f"ell(1) = {ell.apply_word(())!r}"))
    for w in Hs.basis_words(degree_bound):
        if w not in ell.table:
            continue
        ws = word_str(w)
        lw = ell.apply_word(w)
        # axiom 1: ell(h)<1> ell(h)<2>_(0)  (x)  ell(h)<2>_(1)  =  1 (x) h
        got = canonical_map(P, lw)
        want = Tensor((Ps, Hs), {((), w): S_ONE})
        if got != want:
            failures.append(CheckFailure("connection-axiom-1", ws, f"{got!r} != {want!r}"))
        # axiom 2: S(h1) (x) ell(h2)  =  ell(h)<1>_(1) (x) ell(h)<1>_(0) (x) ell(h)<2>
        lhs2 = H.delta_word(w).map_leg(0, H.antipode_word).expand_leg(1, ell.apply_word)
        rhs2 = lw.expand_leg(0, P.coact_word).swap_legs(0, 1)
        if lhs2 != rhs2:
            failures.append(CheckFailure("connection-axiom-2", ws, f"{lhs2!r} != {rhs2!r}"))
        # axiom 3: ell(h1) (x) h2  =  ell(h)<1> (x) ell(h)<2>_(0) (x) ell(h)<2>_(1)
        lhs3 = H.delta_word(w).expand_leg(0, ell.apply_word)
        rhs3 = lw.expand_leg(1, P.coact_word)
        if lhs3 != rhs3:
            failures.append(CheckFailure("connection-axiom-3", ws, f"{lhs3!r} != {rhs3!r}"))
        # translation-map property: h^[1] h^[2] = eps(h) 1
        prod = lw.merge_legs(0, Ps).leg_poly(0)
        target = one.scale(H.counit_word(w))
        if prod != target:
            failures.append(CheckFailure("connection-translation", ws, f"{prod!r} != {target!r}"))
    return failures


# ---------------------------------------------------------------------------
# smash products
# ---------------------------------------------------------------------------

class SmashProduct(ComoduleAlgebra):
    """B x| H on the flat alphabet (B-generators then H-generators), with the
    cross relations h b = (h_(1) |> b) h_(2) installed as rewrite rules."""

    def __init__(self, system, hopf, coaction, b_system, action, name=""):
        super().__init__(system, hopf, coaction, name=name)
        self.b_system = b_system
        self.action = action  # ActionData

    @property
    def b_gens(self) -> tuple[str, ...]:
        return self.b_system.alphabet.gens

    @property
    def h_gens(self) -> tuple[str, ...]:
        return self.hopf.system.alphabet.gens

    def split_word(self, w: Word) -> tuple[Word, Word]:
        hset = set(self.h_gens)
        b = tuple(g for g in w if g not in hset)
        h = tuple(g for g in w if g in hset)
        return b, h

    def project_base(self, p: NCPoly) -> NCPoly:
        """(id (x) eps): collapse the H-part of each normal-form word."""
        p = self.system.normal_form(p)
        out = NCPoly.zero(self.b_system.alphabet)
        for w, c in p.terms.items():
            bw, hw = self.split_word(w)
            out = out + NCPoly.word(self.b_system.alphabet, bw).scale(
                c * self.hopf.counit_word(hw)
            )
        return self.b_system.normal_form(out)

    def include_base(self, p: NCPoly) -> NCPoly:
        return self.system.normal_form(NCPoly(self.system.alphabet, dict(p.terms)))

    def include_hopf(self, p: NCPoly) -> NCPoly:
        return self.system.normal_form(NCPoly(self.system.alphabet, dict(p.terms)))

    def cleaving(self) -> CleavingMap:
        j = gens_map(
            f"j_{self.name}",
            self.hopf.system,
            self.system,
            {g: NCPoly.gen(self.system.alphabet, g) for g in self.h_gens},
            check=False,
        )
        return CleavingMap(self, j)


class ActionData:
    """Left H-module-algebra action on B, declared on (H-gen, B-gen) pairs."""

    def __init__(self, hopf: HopfAlgebra, b_system: RewriteSystem, table: dict[tuple[str, str], NCPoly]):
        self.hopf = hopf
        self.b_system = b_system
        self.table = {k: b_system.normal_form(v) for k, v in table.items()}
        self._cache: dict[tuple[Word, Word], NCPoly] = {}

    def act(self, hw: Word, bw: Word) -> NCPoly:
        """hw |> bw via h|>(b b') = (h1|>b)(h2|>b'), (hk)|>b = h|>(k|>b)."""
        key = (hw, bw)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        B = self.b_system
        if not hw:
            out = NCPoly.word(B.alphabet, bw)
        elif len(hw) > 1:
            out = self.act_poly(hw[:1], self.act(hw[1:], bw))
        else:
            g = hw[0]
            if not bw:
                out = NCPoly.const(B.alphabet, self.hopf.counit_table[g])
            elif len(bw) == 1:
                out = self.table[(g, bw[0])]
            else:
                out = B.zero()
                for (w1, w2), c in self.hopf.delta_word(hw).terms.items():
                    out = out + B.mul(self.act(w1, bw[:1]), self.act(w2, bw[1:])).scale(c)
        out = B.normal_form(out)
        self._cache[key] = out
        return out

    def act_poly(self, hw: Word, bp: NCPoly) -> NCPoly:
        out = self.b_system.zero()
        for bw, c in bp.terms.items():
            out = out + self.act(hw, bw).scale(c)
        return self.b_system.normal_form(out)

    def act_hpoly(self, hp: NCPoly, bp: NCPoly) -> NCPoly:
        out = self.b_system.zero()
        for hw, c in hp.terms.items():
            out = out + self.act_poly(hw, bp).scale(c)
        return self.b_system.normal_form(out)

    def module_algebra_problems(self) -> list[CheckFailure]:
        """Well-definedness on both presentations: every (B-rule, H-gen) and
        (H-rule, B-gen) pair must agree."""
        problems = []
        B, H = self.b_system, self.hopf
        for rule in B.rules:
            lhs = NCPoly.word(B.alphabet, rule.lhs_word)
            for g in H.system.alphabet.gens:
                left = self.act_poly((g,), lhs)
                right = self.act_poly((g,), rule.rhs)
                if B.normal_form(left - right) != B.zero():
                    problems.append(
                        CheckFailure(
                            "module-algebra/B-relation",
                            f"{g} |> ({word_str(rule.lhs_word)} - rhs)",
                            f"{left!r} != {right!r}",
                        )
                    )
        for rule in H.system.rules:
            for b in B.alphabet.gens:
                left = self.act(rule.lhs_word, (b,))
                right = self.act_hpoly(rule.rhs, NCPoly.gen(B.alphabet, b))
                if B.normal_form(left - right) != B.zero():
                    problems.append(
                        CheckFailure(
                            "module-algebra/H-relation",
                            f"({word_str(rule.lhs_word)}) |> {b}",
                            f"{left!r} != {right!r}",
                        )
                    )
        return problems


def smash_product(
    b_system: RewriteSystem,
    H: HopfAlgebra,
    action_table: dict[tuple[str, str], NCPoly],
    name: str = "",
    h_central: bool = False,
    check: bool = True,
) -> SmashProduct:
    """Build B x| H; raises NotModuleAlgebraError when the action fails
    the module-algebra axioms (checked on all generator/relation pairs)."""
    from .ncpoly import Alphabet

    action = ActionData(H, b_system, action_table)
    if check:
        problems = action.module_algebra_problems()
        if problems:
            raise NotModuleAlgebraError(f"{name or 'smash'}: {problems[0]}")
    b_gens = b_system.alphabet.gens
    h_gens = H.system.alphabet.gens
    overlap = set(b_gens) & set(h_gens)
    if overlap:
        raise NotModuleAlgebraError(f"generator names shared between B and H: {sorted(overlap)}")
    central = tuple(b_system.alphabet.central) + (h_gens if h_central else ())
    alpha = Alphabet(b_gens + h_gens, central=central)

    def lift_b(p: NCPoly) -> NCPoly:
        return NCPoly(alpha, dict(p.terms))

    rules: list[tuple[Word, NCPoly]] = []
    for rule in b_system.rules:
        rules.append((rule.lhs_word, lift_b(rule.rhs)))
    if h_central:
        # centrality already encodes the cross relations; only the trivial
        # action is compatible with it
        for (z, b), p in action.table.items():
            expected = NCPoly.gen(b_system.alphabet, b).scale(H.counit_table[z])
            if b_system.normal_form(p - expected) != b_system.zero():
                raise NotModuleAlgebraError(
                    f"h_central smash requires the trivial action; {z}|>{b} = {p!r}"
                )
        for rule in H.system.rules:
            rules.append((rule.lhs_word, NCPoly(alpha, dict(rule.rhs.terms))))
        suffix = None
    else:
        suffix = H.system
        for z in h_gens:
            for b in b_gens:
                rhs = NCPoly.zero(alpha)
                for (w1, w2), c in H.delta_word((z,)).terms.items():
                    acted = action.act(w1, (b,))
                    for bw, cc in acted.terms.items():
                        rhs = rhs + NCPoly.word(alpha, bw + w2).scale(c * cc)
                rules.append(((z, b), rhs))
    system = RewriteSystem(
        alpha,
        rules,
        name=name or f"{b_system.name}x|{H.name}",
        suffix_system=suffix,
        scalar_tower=b_system.scalar_tower,
    )
    coaction: dict[str, Tensor] = {}
    for b in b_gens:
        coaction[b] = Tensor.of((system, H.system), NCPoly.gen(alpha, b), H.system.one())
    for z in h_gens:
        coaction[z] = Tensor(
            (system, H.system),
            {
                (w1, w2): c
                for (w1, w2), c in H.delta_word((z,)).terms.items()
            },
        )
    return SmashProduct(system, H, coaction, b_system, action, name=name or system.name)


# ---------------------------------------------------------------------------
# Miyashita-Ulbrich compatibility
# ---------------------------------------------------------------------------

def miyashita_ulbrich_check(
    f: LinearMap,
    ell: StrongConnection,
    samples: Sequence[tuple[NCPoly, NCPoly]],
    P: ComoduleAlgebra | None = None,
) -> list[CheckFailure]:
    """f(S(h_(1)) k h_(2)) = h^[1] f(k) h^[2] on the given (k, h) samples."""
    P = P or ell.P
    H = P.hopf
    failures = []
    for k, h in samples:
        arg = H.system.zero()
        for (w1, w2), c in H.delta(h).terms.items():
            arg = arg + H.system.mul_many(
                [H.antipode_word(w1), k, NCPoly.word(H.system.alphabet, w2)]
            ).scale(c)
        lhs = f.apply(H.system.normal_form(arg))
        rhs = ell.translation_sandwich(h, f.apply(k))
        if P.system.normal_form(lhs - rhs) != P.system.zero():
            failures.append(
                CheckFailure(
                    "miyashita-ulbrich",
                    f"(k={k!r}, h={h!r})",
                    f"{lhs!r} != {rhs!r}",
                )
            )
    return failures


# ---------------------------------------------------------------------------
# theta correspondence on smash products
# ---------------------------------------------------------------------------

def theta_forward(f: LinearMap, smash: SmashProduct, dwords: Sequence[Word]) -> LinearMap:
    """theta_f = (id_B (x) eps) o f, tabulated on the given coinvariant words."""
    table = {w: smash.project_base(f.apply_word(w)) for w in dwords}
    return LinearMap(
        f"theta[{f.name}]",
        smash.hopf.system,
        smash.b_system,
        mode="table",
        table=table,
        bound=max((len(w) for w in dwords), default=0),
    )


def theta_backward(theta: LinearMap, smash: SmashProduct, dwords: Sequence[Word]) -> LinearMap:
    """f_theta = (theta (x) id_H) o Delta, tabulated on the given words."""
    H = smash.hopf
    table: dict[Word, NCPoly] = {}
    for w in dwords:
        acc = smash.system.zero()
        for (w1, w2), c in H.delta_word(w).terms.items():
            bpart = theta.apply_word(w1)
            for bw, cc in bpart.terms.items():
                acc = acc + NCPoly.word(smash.system.alphabet, bw + w2).scale(c * cc)
        table[w] = smash.system.normal_form(acc)
    return LinearMap(
        f"f[{theta.name}]",
        H.system,
        smash.system,
        mode="table",
        table=table,
        bound=max((len(w) for w in dwords), default=0),
    )


def verify_theta_properties(
    theta: LinearMap,
    smash: SmashProduct,
    dpolys: Sequence[NCPoly],
    hpolys: Sequence[NCPoly] = (),
) -> list[CheckFailure]:
    """The three reduction-data properties of a unital map theta: D -> B:
    anti-multiplicativity, the commutation rule, and S-equivariance."""
    failures = []
    H = smash.hopf
    B = smash.b_system
    act = smash.action

    from .maps import DegreeExceededError

    def theta_poly(p: NCPoly) -> NCPoly:
        out = B.zero()
        for w, c in p.terms.items():
            out = out + theta.apply_word(w).scale(c)
        return B.normal_form(out)

    one = B.one()
    if theta_poly(H.system.one()) != one:
        failures.append(CheckFailure("theta-unital", "1", f"theta(1) = {theta_poly(H.system.one())!r}"))
    for k in dpolys:
        for l in dpolys:
            kl = H.system.mul(k, l)
            try:
                lhs = theta_poly(kl)
                rhs = B.mul(theta_poly(l), theta_poly(k))
            except DegreeExceededError:
                continue
            if B.normal_form(lhs - rhs) != B.zero():
                failures.append(
                    CheckFailure(
                        "theta-antimultiplicative",
                        f"(k={k!r}, l={l!r})",
                        f"theta(kl)={lhs!r} != theta(l)theta(k)={rhs!r}",
                    )
                )
    for k in dpolys:
        for b in smash.b_gens:
            bp = NCPoly.gen(B.alphabet, b)
            try:
                lhs = B.mul(bp, theta_poly(k))
                rhs = B.zero()
                for (w1, w2), c in H.delta(k).terms.items():
                    rhs = rhs + B.mul(
                        theta.apply_word(w1), act.act(w2, (b,))
                    ).scale(c)
            except DegreeExceededError:
                continue
            if B.normal_form(lhs - rhs) != B.zero():
                failures.append(
                    CheckFailure(
                        "theta-commutation",
                        f"(k={k!r}, b={b})",
                        f"b theta(k) = {B.normal_form(lhs)!r} != theta(k1)(k2|>b) = {B.normal_form(rhs)!r}",
                    )
                )
    for k in dpolys:
        for h in hpolys:
            arg = H.system.zero()
            for (w1, w2), c in H.delta(h).terms.items():
                arg = arg + H.system.mul_many(
                    [H.antipode_word(w1), k, NCPoly.word(H.system.alphabet, w2)]
                ).scale(c)
            try:
                lhs = theta_poly(H.system.normal_form(arg))
                rhs = act.act_hpoly(H.antipode(h), theta_poly(k))
            except DegreeExceededError:
                continue
            if B.normal_form(lhs - rhs) != B.zero():
                failures.append(
                    CheckFailure(
                        "theta-S-equivariance",
                        f"(k={k!r}, h={h!r})",
                        f"{lhs!r} != {rhs!r}",
                    )
                )
    return failures


# ---------------------------------------------------------------------------
# reduction ideal (Hopf-Galois reduction data)
# ---------------------------------------------------------------------------

class ReductionIdeal:
    def __init__(self, P, generators, quotient_system, inverse_table, report):
        self.P = P
        self.generators = generators
        self.quotient_system = quotient_system
        self.inverse_table = inverse_table
        self.report = report


def reduction_ideal(
    P: ComoduleAlgebra,
    f: LinearMap,
    J: HopfIdeal,
    ell: StrongConnection,
    bound: int = 3,
    base_gens: Sequence[str] = (),
) -> ReductionIdeal:
    """I_f = P f(D /\\ ker eps), with the inverse correspondence
    f_I(k) = S^-1(k)^[1] (i_B o pi_I)(S^-1(k)^[2]) round-trip-tested on the table.

    Preconditions (colinearity, centrality against declared base generators,
    Miyashita-Ulbrich compatibility on degree-bounded samples) are enforced.
    """
    from .hopf import left_coinvariant_test

    H = P.hopf
    report: list[CheckFailure] = []
    dwords = [
        w
        for w in H.system.basis_words(bound)
        if left_coinvariant_test(H, J, NCPoly.word(H.system.alphabet, w))
    ]
    # colinearity of f on D
    for w in dwords:
        img = f.apply_word(w)
        lhs = P.coact(img)
        rhs = H.delta_word(w).map_leg(0, f.apply_word, codomain=P.system)
        if lhs != rhs:
            report.append(CheckFailure("reduction-colinearity", word_str(w), f"{lhs!r} != {rhs!r}"))
    # centrality in Z_P(B)
    for w in dwords:
        img = f.apply_word(w)
        for b in base_gens:
            bp = NCPoly.gen(P.system.alphabet, b)
            diff = P.system.mul(img, bp) - P.system.mul(bp, img)
            if P.system.normal_form(diff) != P.system.zero():
                report.append(
                    CheckFailure("reduction-centrality", f"f({word_str(w)}) vs {b}", f"{P.system.normal_form(diff)!r} != 0")
                )
    hsamples = [NCPoly.word(H.system.alphabet, w) for w in H.system.basis_words(max(1, bound - 1))]
    dsamples = [NCPoly.word(H.system.alphabet, w) for w in dwords]
    report.extend(
        miyashita_ulbrich_check(f, ell, [(k, h) for k in dsamples for h in hsamples], P)
    )
    if report:
        raise PreconditionError(f"reduction_ideal preconditions failed: {report[0]}")
    gens = []
    for w in dwords:
        g = f.apply(
            NCPoly.word(H.system.alphabet, w)
            - NCPoly.const(H.system.alphabet, H.counit_word(w))
        )
        if not g.is_zero():
            gens.append(g)
    qsys = P.system.extend_by_ideal(gens, name=f"{P.name}/I_f")
    inverse_table: dict[Word, NCPoly] = {}
    for w in dwords:
        sk = H.antipode_inv(NCPoly.word(H.system.alphabet, w))
        acc = P.system.zero()
        for ww, c in sk.terms.items():
            for (a, b), cc in ell.apply_word(ww).terms.items():
                projected = qsys.normal_form(NCPoly.word(P.system.alphabet, b))
                acc = acc + P.system.mul(
                    NCPoly.word(P.system.alphabet, a), projected
                ).scale(c * cc)
        inverse_table[w] = P.system.normal_form(acc)
        diff = qsys.normal_form(inverse_table[w] - f.apply_word(w))
        if not diff.is_zero():
            report.append(
                CheckFailure("reduction-roundtrip", word_str(w), f"f_I != f mod I at {word_str(w)}: {diff!r}")
            )
    return ReductionIdeal(P, gens, qsys, inverse_table, report)


# ---------------------------------------------------------------------------
# principality certificate for quotient pairs
# ---------------------------------------------------------------------------

def principal_quotient_pair_certificate(H: HopfAlgebra, J: HopfIdeal, bound: int):
    """Certify that H is a principal H/J-comodule algebra (for the coaction
    (id (x) pi) o Delta) by exhibiting a strong connection and verifying its
    axioms up to the bound.

    The connection is built recursively on quotient basis words: ell(1) = 1 (x) 1
    and ell([v g]) = S(g_(1)) ell([v])<1> (x) ell([v])<2> g_(2), the sandwich
    construction for quotients of matrix quantum groups.

    Returns (failures, connection, comodule).
    """
    qH, proj = quotient_hopf(H, J)
    coaction = {
        g: H.delta_table[g].map_leg(1, proj.apply_word, codomain=qH.system)
        for g in H.system.alphabet.gens
    }
    P = ComoduleAlgebra(H.system, qH, coaction, name=f"{H.name} over {qH.name}")
    Hs = H.system
    table: dict[Word, Tensor] = {(): Tensor.of((Hs, Hs), Hs.one(), Hs.one())}
    words = sorted(qH.system.basis_words(bound), key=len)
    for w in words:
        if not w:
            continue
        v, g = w[:-1], w[-1]
        prev = table[v]
        acc = Tensor.zero((Hs, Hs))
        for (g1, g2), c in H.delta_word((g,)).terms.items():
            # left-multiply leg 0 by S(g1), right-multiply leg 1 by g2
            part = Tensor(
                (Hs, Hs),
                {
                    (sa + a, b + g2): c * cc * sc
                    for (a, b), cc in prev.terms.items()
                    for sa, sc in H.antipode_word(g1).terms.items()
                },
            )
            acc = acc + part
        table[w] = acc
    ell = StrongConnection(P, table, bound)
    return verify_strong_connection(ell, bound), ell, P


# ---------------------------------------------------------------------------
# graded-basis lemma (rank-one case) and bounded tensor-over-base equality
# ---------------------------------------------------------------------------

def graded_basis_check(
    A: ComoduleAlgebra, gamma: Word, gamma_inv: Word, e: NCPoly, f: NCPoly
) -> list[CheckFailure]:
    """{e} is a basis of the gamma-graded component iff f in the inverse
    component satisfies e f = 1 = f e (the rank-one instance)."""
    failures = []
    S = A.system
    Hs = A.hopf.system
    for name, elt, grade in (("e", e, gamma), ("f", f, gamma_inv)):
        got = A.coact(elt)
        want = Tensor((S, Hs), {(w, grade): c for w, c in S.normal_form(elt).terms.items()})
        if got != want:
            failures.append(CheckFailure("graded-component", name, f"{got!r} != {want!r}"))
    if S.mul(e, f) != S.one():
        failures.append(CheckFailure("graded-basis-ef", "e*f", f"{S.mul(e, f)!r} != 1"))
    if S.mul(f, e) != S.one():
        failures.append(CheckFailure("graded-basis-fe", "f*e", f"{S.mul(f, e)!r} != 1"))
    return failures


def tensor_over_base_equal(
    t1: Tensor,
    t2: Tensor,
    P: RewriteSystem,
    base_gens: Sequence[str],
    degree_cap: int = 8,
    gens_generate_base: bool = False,
):
    """Equality in P (x)_B P, decided against the span of balancing relations
    u b (x) v - u (x) b v over the listed base generators, degree by degree.

    Returns True, False, or "UNDECIDED" (the listed generators may not
    exhaust B, so failure to balance is inconclusive unless the caller
    asserts they generate it).
    """
    diff = t1 - t2
    if diff.is_zero():
        return True
    deg = max(len(a) + len(b) for (a, b) in diff.terms)
    if deg > degree_cap:
        return "UNDECIDED"
    relations = []
    words = P.all_words(deg)
    base = set(base_gens)
    for a in words:
        if not a or a[-1] not in base:
            continue
        for b in words:
            if len(a) + len(b) > deg:
                continue
            t_left = Tensor((P, P), {(a, b): S_ONE})
            t_right = Tensor((P, P), {(a[:-1], (a[-1],) + b): S_ONE})
            rel = t_left - t_right
            if not rel.is_zero():
                relations.append({k: c for k, c in rel.terms.items()})
    space = RowSpace()
    for rel in relations:
        space.add(rel)
    if space.contains(dict(diff.terms)):
        return True
    return False if gens_generate_base else "UNDECIDED"
