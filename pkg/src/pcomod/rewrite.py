"""Oriented rewriting over noncommutative words with degree-bounded confluence checking."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .ncpoly import EMPTY, Alphabet, NCPoly, Word, word_str
from .scalars import S_ONE, S_ZERO, Scalar


class OrderViolation(ValueError):
    """A rule's right-hand side is not strictly smaller in the monomial order."""


class SizeLimitError(RuntimeError):
    """Intermediate term count exceeded the configured cap."""


class NoStarError(ValueError):
    """The rewrite system carries no star table."""


@dataclass(frozen=True)
class Rule:
    lhs_nc: Word
    lhs_central: tuple  # sorted tuple of central generator names (with multiplicity)
    rhs: NCPoly

    @property
    def lhs_word(self) -> Word:
        return self.lhs_nc + self.lhs_central

    def __repr__(self):
        return f"{word_str(self.lhs_word)} -> {self.rhs!r}"


@dataclass
class Conflict:
    word: Word
    result1: NCPoly
    result2: NCPoly

    def __repr__(self):
        return f"CONFLICT({word_str(self.word)}: {self.result1!r} vs {self.result2!r})"


@dataclass
class ConfluenceReport:
    degree_bound: int
    words_checked: int
    conflicts: list[Conflict] = field(default_factory=list)

    @property
    def confluent(self) -> bool:
        return not self.conflicts


class RewriteSystem:
    """Alphabet + oriented rules (+ optional star involution, suffix canonicalizer).

    Every rule strictly decreases the degree-lexicographic order (checked at
    construction), so exhaustive leftmost reduction terminates on any input.
    A rule whose left side contains central generators matches them anywhere
    in the word (the word monoid is the free product with a central part).
    """

    def __init__(
        self,
        alphabet: Alphabet,
        rules: Sequence[tuple[Word, NCPoly]] = (),
        star: dict[str, NCPoly] | None = None,
        name: str = "",
        term_cap: int = 100_000,
        suffix_system: "RewriteSystem | None" = None,
        scalar_tower: str = "Q(i)(q)",
    ):
        self.alphabet = alphabet
        self.name = name
        self.term_cap = term_cap
        self.star_table = star
        self.suffix_system = suffix_system
        self.suffix_gens = frozenset(suffix_system.alphabet.gens) if suffix_system else frozenset()
        self.scalar_tower = scalar_tower
        self.rules: list[Rule] = []
        for lhs, rhs in rules:
            self.rules.append(self._make_rule(tuple(lhs), rhs))
        self._nf_cache: dict[Word, NCPoly] = {}
        # index plain rules by first noncentral letter for fast matching
        self._by_first: dict[str, list[Rule]] = {}
        self._central_only: list[Rule] = []
        for r in self.rules:
            if r.lhs_nc:
                self._by_first.setdefault(r.lhs_nc[0], []).append(r)
            else:
                self._central_only.append(r)

    # -- construction ------------------------------------------------------
    def _make_rule(self, lhs: Word, rhs: NCPoly) -> Rule:
        a = self.alphabet
        lhs = a.canon(lhs)
        if not lhs:
            raise OrderViolation("empty word cannot be a rule left side")
        rhs = NCPoly(a, rhs.terms)
        lk = a.key(lhs)
        for w in rhs.terms:
            if not a.key(w) < lk:
                raise OrderViolation(
                    f"rule {word_str(lhs)} -> {rhs!r}: right side term "
                    f"{word_str(w)} is not order-smaller"
                )
        nc, c = a.split_central(lhs)
        return Rule(nc, c, rhs)

    @staticmethod
    def from_relations(
        alphabet: Alphabet,
        relations: Sequence[tuple[NCPoly, NCPoly]],
        **kw,
    ) -> "RewriteSystem":
        """Orient each relation lhs = rhs by its leading word automatically."""
        rules = []
        for left, right in relations:
            diff = left - right
            if diff.is_zero():
                continue
            lead = diff.leading_word()
            lc = diff.terms[lead]
            rest = NCPoly(alphabet, {w: c for w, c in diff.terms.items() if w != lead})
            rules.append((lead, rest.scale(-(lc.inv()))))
        return RewriteSystem(alphabet, rules, **kw)

    def extend(self, extra_rules: Sequence[tuple[Word, NCPoly]], name: str = "") -> "RewriteSystem":
        base = [(r.lhs_word, r.rhs) for r in self.rules]
        return RewriteSystem(
            self.alphabet,
            base + list(extra_rules),
            star=self.star_table,
            name=name or f"{self.name}+quot",
            term_cap=self.term_cap,
            suffix_system=self.suffix_system,
            scalar_tower=self.scalar_tower,
        )

    def extend_by_ideal(self, gens: Sequence[NCPoly], name: str = "") -> "RewriteSystem":
        """Quotient rewrite system: orient each (normalized) ideal generator by its leading word."""
        rules = []
        for g in gens:
            g = self.normal_form(g)
            if g.is_zero():
                continue
            lead = g.leading_word()
            lc = g.terms[lead]
            rest = NCPoly(self.alphabet, {w: c for w, c in g.terms.items() if w != lead})
            rules.append((lead, rest.scale(-(lc.inv()))))
        return self.extend(rules, name=name)

    # -- matching ------------------------------------------------------------
    def _match(self, word: Word):
        """Leftmost redex in a canonical word; returns (rule, pos, nc, c) or None."""
        a = self.alphabet
        nc, c = a.split_central(word)
        if self._central_only and c:
            cc = Counter(c)
            for r in self._central_only:
                need = Counter(r.lhs_central)
                if all(cc[g] >= k for g, k in need.items()):
                    return r, 0, nc, c
        for i in range(len(nc)):
            cands = self._by_first.get(nc[i])
            if not cands:
                continue
            for r in cands:
                L = len(r.lhs_nc)
                if nc[i : i + L] != r.lhs_nc:
                    continue
                if r.lhs_central:
                    cc = Counter(c)
                    need = Counter(r.lhs_central)
                    if not all(cc[g] >= k for g, k in need.items()):
                        continue
                return r, i, nc, c
        return None

    def _apply(self, rule: Rule, pos: int, nc: Word, c: Word):
        """One rewriting step; yields (word, coeff) pairs (words canonical)."""
        a = self.alphabet
        left = nc[:pos]
        right = nc[pos + len(rule.lhs_nc):]
        rem = list(c)
        for g in rule.lhs_central:
            rem.remove(g)
        rem_t = tuple(rem)
        for w, coeff in rule.rhs.terms.items():
            yield a.canon(left + w + right + rem_t), coeff

    def is_irreducible(self, word: Word) -> bool:
        word = self.alphabet.canon(word)
        if self._match(word) is not None:
            return False
        if self.suffix_system is not None:
            pre, suf = self._split_zone(word)
            if suf:
                nf = self.suffix_system._nf_word(suf)
                if list(nf.terms.items()) != [(suf, S_ONE)]:
                    return False
        return True

    # -- normal form ----------------------------------------------------------
    def _split_zone(self, word: Word) -> tuple[Word, Word]:
        k = len(word)
        while k and word[k - 1] in self.suffix_gens:
            k -= 1
        if any(g in self.suffix_gens for g in word[:k]):
            raise RuntimeError(
                f"zone letters not separated in {word_str(word)}; separation rules incomplete"
            )
        return word[:k], word[k:]

    def _nf_word(self, word: Word) -> NCPoly:
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        a = self.alphabet
        acc: dict[Word, Scalar] = {}
        work: list[tuple[Word, Scalar]] = [(word, S_ONE)]
        while work:
            if len(work) + len(acc) > self.term_cap:
                raise SizeLimitError(
                    f"term count exceeded cap {self.term_cap} while reducing {word_str(word)}"
                )
            w, coeff = work.pop()
            hit = self._nf_cache.get(w)
            if hit is not None:
                for ww, cc in hit.terms.items():
                    v = acc.get(ww, S_ZERO) + coeff * cc
                    if v.is_zero():
                        acc.pop(ww, None)
                    else:
                        acc[ww] = v
                continue
            m = self._match(w)
            if m is None:
                v = acc.get(w, S_ZERO) + coeff
                if v.is_zero():
                    acc.pop(w, None)
                else:
                    acc[w] = v
            else:
                rule, pos, nc, c = m
                for ww, cc in self._apply(rule, pos, nc, c):
                    work.append((ww, coeff * cc))
        if self.suffix_system is not None:
            acc = self._zone_canon(acc)
        out = NCPoly(a, acc)
        if len(self._nf_cache) > 400_000:
            self._nf_cache.clear()
        self._nf_cache[word] = out
        return out

    def _zone_canon(self, acc: dict[Word, Scalar]) -> dict[Word, Scalar]:
        out: dict[Word, Scalar] = {}
        for w, coeff in acc.items():
            pre, suf = self._split_zone(w)
            if not suf:
                out[w] = out.get(w, S_ZERO) + coeff
                continue
            nf = self.suffix_system._nf_word(suf)
            for sw, sc in nf.terms.items():
                ww = pre + sw
                v = out.get(ww, S_ZERO) + coeff * sc
                if v.is_zero():
                    out.pop(ww, None)
                else:
                    out[ww] = v
        return {w: c for w, c in out.items() if not c.is_zero()}

    def normal_form(self, p: NCPoly) -> NCPoly:
        acc: dict[Word, Scalar] = {}
        for w, c in p.terms.items():
            nf = self._nf_word(self.alphabet.canon(w))
            for ww, cc in nf.terms.items():
                v = acc.get(ww, S_ZERO) + c * cc
                if v.is_zero():
                    acc.pop(ww, None)
                else:
                    acc[ww] = v
        return NCPoly(self.alphabet, acc)

    def mul(self, p: NCPoly, r: NCPoly) -> NCPoly:
        return self.normal_form(p.concat(r))

    def mul_many(self, ps: Iterable[NCPoly]) -> NCPoly:
        out = NCPoly.one(self.alphabet)
        for p in ps:
            out = self.mul(out, p)
        return out

    def gen(self, g: str) -> NCPoly:
        return NCPoly.gen(self.alphabet, g)

    def one(self) -> NCPoly:
        return NCPoly.one(self.alphabet)

    def zero(self) -> NCPoly:
        return NCPoly.zero(self.alphabet)

    # -- star ------------------------------------------------------------------
    def star(self, p: NCPoly) -> NCPoly:
        if self.star_table is None:
            raise NoStarError(f"{self.name or 'system'} has no star table")
        out = NCPoly.zero(self.alphabet)
        for w, c in p.terms.items():
            img = NCPoly.const(self.alphabet, c.conj())
            for g in reversed(w):
                img = self.mul(img, self.star_table[g])
            out = out + img
        return self.normal_form(out)

    # -- enumeration -------------------------------------------------------------
    def all_words(self, max_deg: int) -> list[Word]:
        """All canonical words of degree <= max_deg (not only irreducible ones)."""
        seen = {EMPTY}
        layer = [EMPTY]
        out = [EMPTY]
        for _ in range(max_deg):
            nxt = []
            for w in layer:
                for g in self.alphabet.gens:
                    ww = self.alphabet.canon(w + (g,))
                    if ww not in seen:
                        seen.add(ww)
                        nxt.append(ww)
            out.extend(nxt)
            layer = nxt
        return out

    def basis_words(self, max_deg: int) -> list[Word]:
        """Irreducible (normal-form) words up to max_deg, in monomial order."""
        out = [w for w in self.all_words(max_deg) if self.is_irreducible(w)]
        out.sort(key=self.alphabet.key)
        return out

    # -- confluence ---------------------------------------------------------------
    def one_step_reducts(self, word: Word) -> list[NCPoly]:
        """Every single rewriting step applicable to the word (all rules, all positions)."""
        a = self.alphabet
        word = a.canon(word)
        nc, c = a.split_central(word)
        cc = Counter(c)
        outs = []
        for r in self._central_only:
            need = Counter(r.lhs_central)
            if all(cc[g] >= k for g, k in need.items()):
                outs.append(NCPoly(a, dict(self._apply(r, 0, nc, c))))
        for i in range(len(nc)):
            for r in self._by_first.get(nc[i], ()):  # noqa: B905
                L = len(r.lhs_nc)
                if nc[i : i + L] != r.lhs_nc:
                    continue
                if r.lhs_central:
                    need = Counter(r.lhs_central)
                    if not all(cc[g] >= k for g, k in need.items()):
                        continue
                outs.append(NCPoly(a, dict(self._apply(r, i, nc, c))))
        return outs

    def check_local_confluence(self, degree_bound: int) -> ConfluenceReport:
        """Brute-force: every canonical word up to the bound, every one-step reduct,
        all reducts must share one full normal form. Never throws on conflicts."""
        report = ConfluenceReport(degree_bound=degree_bound, words_checked=0)
        for w in self.all_words(degree_bound):
            reducts = self.one_step_reducts(w)
            if not reducts:
                continue
            report.words_checked += 1
            nfs = [self.normal_form(r) for r in reducts]
            first = nfs[0]
            for other in nfs[1:]:
                if other != first:
                    report.conflicts.append(Conflict(w, first, other))
                    break
        return report

    def normal_forms_all_paths(self, word: Word, cap: int = 2000) -> set:
        """Independent oracle: the set of fully reduced forms reachable by *any*
        reduction strategy (as hashable term-sets). Exponential; small inputs only."""
        word = self.alphabet.canon(word)
        start = frozenset({(word, S_ONE)})
        seen = {start}
        frontier = [start]
        finals = set()
        while frontier:
            if len(seen) > cap:
                raise SizeLimitError("all-paths search exceeded cap")
            poly = frontier.pop()
            branched = False
            for w, c in poly:
                for step in self.one_step_reducts(w):
                    branched = True
                    acc = {ww: cc for ww, cc in poly if ww != w}
                    for ww, cc in step.terms.items():
                        v = acc.get(ww, S_ZERO) + c * cc
                        if v.is_zero():
                            acc.pop(ww, None)
                        else:
                            acc[ww] = v
                    nxt = frozenset(acc.items())
                    if nxt not in seen:
                        seen.add(nxt)
                        frontier.append(nxt)
            if not branched:
                # fully reduced except possibly zone canon
                if self.suffix_system is not None:
                    acc = self._zone_canon(dict(poly))
                    finals.add(frozenset(acc.items()))
                else:
                    finals.add(poly)
        return finals

    # -- structural identity ------------------------------------------------------
    def _signature(self):
        sig = getattr(self, "_sig", None)
        if sig is None:
            star = (
                frozenset((g, p) for g, p in self.star_table.items())
                if self.star_table
                else None
            )
            sig = (
                self.alphabet,
                tuple(self.rules),
                star,
                self.suffix_system._signature() if self.suffix_system else None,
            )
            self._sig = sig
        return sig

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, RewriteSystem) and self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())

    def __repr__(self):
        return f"RewriteSystem({self.name or self.alphabet.gens}, {len(self.rules)} rules)"
