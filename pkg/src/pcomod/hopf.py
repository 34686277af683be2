"""Hopf algebra structure on presented algebras: coproduct, counit, antipode,
convolution, Hopf ideals, quotients, and left-coinvariant membership."""

from __future__ import annotations

from dataclasses import dataclass

from .maps import LinearMap, gens_map
from .ncpoly import NCPoly, Word, word_str
from .rewrite import RewriteSystem
from .scalars import S_ONE, S_ZERO, Scalar
from .tensors import Tensor


class NotHopfIdealError(ValueError):
    pass


@dataclass
class CheckFailure:
    check: str
    where: str
    detail: str

    def __repr__(self):
        return f"FAIL[{self.check} @ {self.where}]: {self.detail}"


class HopfAlgebra:
    """Presented algebra plus generator-level Delta, counit, antipode.

    Delta and the counit extend as algebra maps, the antipode (and its
    inverse, supplied explicitly) as anti-algebra maps.
    """

    def __init__(
        self,
        system: RewriteSystem,
        delta: dict[str, Tensor],
        counit: dict[str, Scalar],
        antipode: dict[str, NCPoly],
        antipode_inv: dict[str, NCPoly],
        name: str = "",
    ):
        self.system = system
        self.name = name or system.name
        self.delta_table = delta
        self.counit_table = counit
        self.antipode_table = antipode
        self.antipode_inv_table = antipode_inv
        self._delta_word_cache: dict[Word, Tensor] = {}
        self._antipode_word_cache: dict[Word, NCPoly] = {}

    # -- structure maps ------------------------------------------------------
    def delta_word(self, w: Word) -> Tensor:
        hit = self._delta_word_cache.get(w)
        if hit is not None:
            return hit
        sys2 = (self.system, self.system)
        out = Tensor.of(sys2, self.system.one(), self.system.one())
        for g in w:
            out = out.mul(self.delta_table[g])
        self._delta_word_cache[w] = out
        return out

    def delta(self, p: NCPoly) -> Tensor:
        out = Tensor.zero((self.system, self.system))
        for w, c in p.terms.items():
            out = out + self.delta_word(w).scale(c)
        return out

    def delta_n(self, p: NCPoly, n: int) -> Tensor:
        """Iterated coproduct with n+1 legs (n = 1 is delta)."""
        out = self.delta(p)
        for _ in range(n - 1):
            out = out.expand_leg(0, self.delta_word)
        return out

    def counit_word(self, w: Word) -> Scalar:
        out = S_ONE
        for g in w:
            out = out * self.counit_table[g]
            if out.is_zero():
                return S_ZERO
        return out

    def counit(self, p: NCPoly) -> Scalar:
        out = S_ZERO
        for w, c in p.terms.items():
            out = out + c * self.counit_word(w)
        return out

    def counit_poly(self, p: NCPoly) -> NCPoly:
        return NCPoly.const(self.system.alphabet, self.counit(p))

    def antipode_word(self, w: Word) -> NCPoly:
        hit = self._antipode_word_cache.get(w)
        if hit is not None:
            return hit
        out = self.system.one()
        for g in reversed(w):
            out = self.system.mul(out, self.antipode_table[g])
        self._antipode_word_cache[w] = out
        return out

    def antipode(self, p: NCPoly) -> NCPoly:
        out = self.system.zero()
        for w, c in p.terms.items():
            out = out + self.antipode_word(w).scale(c)
        return self.system.normal_form(out)

    def antipode_inv(self, p: NCPoly) -> NCPoly:
        out = self.system.zero()
        for w, c in p.terms.items():
            img = self.system.one()
            for g in reversed(w):
                img = self.system.mul(img, self.antipode_inv_table[g])
            out = out + img.scale(c)
        return self.system.normal_form(out)

    def antipode_map(self) -> LinearMap:
        return gens_map(
            f"S_{self.name}", self.system, self.system, dict(self.antipode_table), mode="anti", check=False
        )

    def unit_counit_map(self, codomain: RewriteSystem | None = None) -> LinearMap:
        """eta o eps: the convolution unit, as an algebra map."""
        cod = codomain or self.system
        images = {
            g: NCPoly.const(cod.alphabet, self.counit_table[g])
            for g in self.system.alphabet.gens
        }
        return gens_map(f"eta.eps_{self.name}", self.system, cod, images, check=False)

    def is_group_like(self, w: Word) -> bool:
        sys2 = (self.system, self.system)
        return (
            self.delta_word(w) == Tensor(sys2, {(w, w): S_ONE})
            and self.counit_word(w) == S_ONE
        )

    def group_like_words(self, bound: int) -> list[Word]:
        return [w for w in self.system.basis_words(bound) if self.is_group_like(w)]

    def __repr__(self):
        return f"HopfAlgebra({self.name})"


# ----------------------------------------------------------------------------
# axiom suite
# ----------------------------------------------------------------------------

def check_hopf_axioms(H: HopfAlgebra, degree_bound: int) -> list[CheckFailure]:
    """Coassociativity, counit law, antipode law, antipode invertibility and
    the anti-coalgebra property of S on every normal-form word up to the bound."""
    failures: list[CheckFailure] = []
    sysm = H.system
    one = sysm.one()
    for w in sysm.basis_words(degree_bound):
        ws = word_str(w)
        d = H.delta_word(w)
        left = d.expand_leg(0, H.delta_word)
        right = d.expand_leg(1, H.delta_word)
        if left != right:
            failures.append(CheckFailure("coassociativity", ws, f"{left!r} != {right!r}"))
        ce_l = d.contract_leg(0, H.counit_word).leg_poly(0)
        ce_r = d.contract_leg(1, H.counit_word).leg_poly(0)
        wp = sysm.normal_form(NCPoly.word(sysm.alphabet, w))
        if ce_l != wp:
            failures.append(CheckFailure("counit-left", ws, f"{ce_l!r} != {wp!r}"))
        if ce_r != wp:
            failures.append(CheckFailure("counit-right", ws, f"{ce_r!r} != {wp!r}"))
        target = one.scale(H.counit_word(w))
        s_id = d.map_leg(0, H.antipode_word).merge_legs(0).leg_poly(0)
        if s_id != target:
            failures.append(CheckFailure("antipode-left", ws, f"{s_id!r} != {target!r}"))
        id_s = d.map_leg(1, H.antipode_word).merge_legs(0).leg_poly(0)
        if id_s != target:
            failures.append(CheckFailure("antipode-right", ws, f"{id_s!r} != {target!r}"))
        sw = H.antipode_word(w)
        if H.antipode_inv(sw) != wp:
            failures.append(CheckFailure("antipode-inverse", ws, f"S^-1(S({ws})) != {ws}"))
        if H.antipode(H.antipode_inv(NCPoly.word(sysm.alphabet, w))) != wp:
            failures.append(CheckFailure("antipode-inverse", ws, f"S(S^-1({ws})) != {ws}"))
        lhs = d.map_leg(0, H.antipode_word).map_leg(1, H.antipode_word).swap_legs(0, 1)
        rhs = H.delta(sw)
        if lhs != rhs:
            failures.append(CheckFailure("anti-coalgebra", ws, f"{lhs!r} != {rhs!r}"))
    return failures


# ----------------------------------------------------------------------------
# convolution
# ----------------------------------------------------------------------------

def convolution(
    f: LinearMap,
    g: LinearMap,
    H: HopfAlgebra,
    codomain: RewriteSystem | None = None,
    bound: int = 4,
) -> LinearMap:
    """(f*g)(h) = f(h_(1)) g(h_(2)), tabulated on basis words up to the bound."""
    cod = codomain or f.codomain
    table: dict[Word, NCPoly] = {}
    for w in H.system.basis_words(bound):
        acc = cod.zero()
        for (w1, w2), c in H.delta_word(w).terms.items():
            acc = acc + cod.mul(f.apply_word(w1), g.apply_word(w2)).scale(c)
        table[w] = cod.normal_form(acc)
    return LinearMap(f"({f.name}*{g.name})", H.system, cod, mode="table", table=table, bound=bound)


# ----------------------------------------------------------------------------
# Hopf ideals and quotients
# ----------------------------------------------------------------------------

class HopfIdeal:
    """Two-sided ideal J given by generators, with the Hopf-ideal axioms
    (counit kill, coideal containment, antipode stability) certified by
    bounded reduction in the quotient."""

    def __init__(self, H: HopfAlgebra, gens: list[NCPoly], name: str = "J"):
        self.hopf = H
        self.gens = [H.system.normal_form(g) for g in gens]
        self.name = name
        self._qsys: RewriteSystem | None = None

    def quotient_system(self) -> RewriteSystem:
        if self._qsys is None:
            self._qsys = self.hopf.system.extend_by_ideal(
                self.gens, name=f"{self.hopf.name}/{self.name}"
            )
        return self._qsys

    def validate(self) -> list[CheckFailure]:
        H = self.hopf
        failures: list[CheckFailure] = []
        qs = self.quotient_system()
        zero2 = Tensor.zero((qs, qs))
        for i, g in enumerate(self.gens):
            where = f"gen[{i}]={g!r}"
            if not H.counit(g).is_zero():
                failures.append(CheckFailure("counit-kill", where, f"eps(g) = {H.counit(g)!r}"))
            d = H.delta(g)
            reduced = Tensor((qs, qs), d.terms)
            if reduced != zero2:
                failures.append(CheckFailure("coideal", where, f"Delta(g) != 0 mod J(x)H+H(x)J: {reduced!r}"))
            sg = qs.normal_form(H.antipode(g))
            if not sg.is_zero():
                failures.append(CheckFailure("antipode-stability", where, f"S(g) = {sg!r} mod J"))
        return failures

    def member(self, p: NCPoly) -> bool:
        return self.quotient_system().normal_form(p).is_zero()


def quotient_hopf(H: HopfAlgebra, J: HopfIdeal) -> tuple[HopfAlgebra, LinearMap]:
    """H/J with inherited structure maps, plus the canonical surjection."""
    problems = J.validate()
    if problems:
        raise NotHopfIdealError(f"{J.name}: {problems[0]}")
    qs = J.quotient_system()
    delta = {g: Tensor((qs, qs), t.terms) for g, t in H.delta_table.items()}
    antipode = {g: qs.normal_form(p) for g, p in H.antipode_table.items()}
    antipode_inv = {g: qs.normal_form(p) for g, p in H.antipode_inv_table.items()}
    quotient = HopfAlgebra(
        qs, delta, dict(H.counit_table), antipode, antipode_inv, name=f"{H.name}/{J.name}"
    )
    proj = gens_map(f"pi_{H.name}/{J.name}", H.system, qs,
                    {g: NCPoly.gen(qs.alphabet, g) for g in H.system.alphabet.gens},
                    check=False)
    return quotient, proj


def left_coinvariant_test(H: HopfAlgebra, J: HopfIdeal, p: NCPoly) -> bool:
    """True iff (pi (x) id)(Delta p) = [1] (x) p in (H/J) (x) H."""
    qs = J.quotient_system()
    p = H.system.normal_form(p)
    lhs = Tensor((qs, H.system), H.delta(p).terms)
    rhs = Tensor((qs, H.system), {((), w): c for w, c in p.terms.items()})
    return lhs == rhs


def coinvariant_basis_words(H: HopfAlgebra, J: HopfIdeal, bound: int) -> list[Word]:
    return [
        w
        for w in H.system.basis_words(bound)
        if left_coinvariant_test(H, J, NCPoly.word(H.system.alphabet, w))
    ]


def generator_map_isomorphism_problems(
    H1: HopfAlgebra, H2: HopfAlgebra, gen_map: dict[str, NCPoly], bound: int
) -> list[CheckFailure]:
    """Certify that the generator assignment extends to a Hopf isomorphism
    up to the degree bound: well-defined algebra map, intertwines Delta,
    counit and S on generators, and bijective on the degree-bounded basis."""
    from .linalg import RowSpace
    from .maps import gens_map as _gens_map
    from .maps import NotWellDefinedError

    failures: list[CheckFailure] = []
    try:
        phi = _gens_map("phi", H1.system, H2.system, gen_map, check=True)
    except NotWellDefinedError as e:
        return [CheckFailure("iso-well-defined", "rules", str(e))]
    for g in H1.system.alphabet.gens:
        img = phi.apply_word((g,))
        lhs = H1.delta_word((g,)).map_leg(0, phi.apply_word, codomain=H2.system).map_leg(
            1, phi.apply_word, codomain=H2.system
        )
        rhs = H2.delta(img)
        if lhs != rhs:
            failures.append(CheckFailure("iso-coproduct", g, f"{lhs!r} != {rhs!r}"))
        if H1.counit_table[g] != H2.counit(img):
            failures.append(CheckFailure("iso-counit", g, ""))
        if phi.apply(H1.antipode_table[g]) != H2.antipode(img):
            failures.append(CheckFailure("iso-antipode", g, ""))
    basis1 = H1.system.basis_words(bound)
    basis2 = H2.system.basis_words(bound)
    space = RowSpace()
    indep = 0
    for w in basis1:
        vec = dict(phi.apply_word(w).terms)
        if space.add(vec):
            indep += 1
    if indep != len(basis1):
        failures.append(
            CheckFailure("iso-injective", f"degree<={bound}", f"rank {indep} < {len(basis1)}")
        )
    for w in basis2:
        if not space.contains({w: S_ONE}):
            failures.append(
                CheckFailure("iso-surjective", word_str(w), "not in the image span")
            )
            break
    return failures


def coinvariant_compatibility_check(
    triv, J: HopfIdeal, bound: int = 2
) -> list[CheckFailure]:
    """When the transition functions annihilate J, the piece trivialisations
    agree on the left-coinvariant subalgebra through the double quotients:
    pi^i_j(gamma_i(h)) = pi^j_i(gamma_j(h)) and T_ij(h) = eps(h) for h in D."""
    H = triv.hopf
    failures: list[CheckFailure] = []
    dwords = coinvariant_basis_words(H, J, bound)
    n = triv.covering.size
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            target, mi, mj = triv.covering.pair_maps(i, j)
            for w in dwords:
                left = mi.apply(triv.cleavings[i].j.apply_word(w))
                right = mj.apply(triv.cleavings[j].j.apply_word(w))
                if target.system.normal_form(left - right) != target.system.zero():
                    failures.append(
                        CheckFailure(
                            "coinvariant-compatibility",
                            f"pi^{i}_{j}(gamma_{i}({word_str(w)}))",
                            f"{left!r} != {right!r}",
                        )
                    )
                tij = triv.transition(i, j, w)
                want = target.system.one().scale(H.counit_word(w))
                if tij != want:
                    failures.append(
                        CheckFailure(
                            "transition-counit-on-D",
                            f"T_{i}{j}({word_str(w)})",
                            f"{tij!r} != {want!r}",
                        )
                    )
    return failures
