"""Exact Fourier-polynomial symbols of Toeplitz *-polynomials and truncated
matrix realizations for spot checks."""

from __future__ import annotations

import numpy as np

from ..ncpoly import NCPoly
from ..scalars import S_ZERO, Scalar


class FourierPoly:
    """Finite map k -> Scalar representing sum c_k z^k on the circle; exact."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if not c.is_zero()}

    def __add__(self, other: "FourierPoly") -> "FourierPoly":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            v = out.get(k, S_ZERO) + c
            if v.is_zero():
                out.pop(k, None)
            else:
                out[k] = v
        return FourierPoly(out)

    def __mul__(self, other: "FourierPoly") -> "FourierPoly":
        out: dict[int, Scalar] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                v = out.get(k, S_ZERO) + c1 * c2
                if v.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = v
        return FourierPoly(out)

    def scale(self, c: Scalar) -> "FourierPoly":
        return FourierPoly({k: cc * c for k, cc in self.coeffs.items()})

    def star(self) -> "FourierPoly":
        return FourierPoly({-k: c.conj() for k, c in self.coeffs.items()})

    def flip(self) -> "FourierPoly":
        """Pullback of z -> -z."""
        return FourierPoly({k: (c if k % 2 == 0 else -c) for k, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, FourierPoly) and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def sup_norm_bound(self) -> float:
        return float(sum(abs(c.to_complex()) for c in self.coeffs.values()))

    def eval(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        out = np.zeros(theta.shape, dtype=complex)
        for k, c in self.coeffs.items():
            out = out + c.to_complex() * np.exp(1j * k * theta)
        return out

    def eval_at(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)
        for k, c in self.coeffs.items():
            out = out + c.to_complex() * z**k
        return out

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c!r}*z^{k}" for k, c in sorted(self.coeffs.items()))


def symbol(p: NCPoly) -> FourierPoly:
    """The symbol map s -> z applied to a Toeplitz *-polynomial; exact and
    multiplicative (a *-homomorphism on symbols)."""
    out: dict[int, Scalar] = {}
    for w, c in p.terms.items():
        k = sum(1 if g == "s" else -1 for g in w)
        v = out.get(k, S_ZERO) + c
        if v.is_zero():
            out.pop(k, None)
        else:
            out[k] = v
    return FourierPoly(out)


def toeplitz_flip(p: NCPoly) -> NCPoly:
    """alpha_{-1}: s -> -s, ss -> -ss (the Z2 action on the quantum square)."""
    return NCPoly(
        p.alphabet, {w: (c if len(w) % 2 == 0 else -c) for w, c in p.terms.items()}
    )


def toeplitz_matrix(p: NCPoly, n: int) -> np.ndarray:
    """Truncated realization: s acts as the lower shift on C^n."""
    S = np.zeros((n, n))
    for k in range(n - 1):
        S[k + 1, k] = 1.0
    imgs = {"s": S, "ss": S.T}
    out = np.zeros((n, n), dtype=complex)
    for w, c in p.terms.items():
        m = np.eye(n)
        for g in w:
            m = m @ imgs[g]
        out = out + c.to_complex() * m
    return out


def masked_residual(a: np.ndarray, b: np.ndarray, margin: int) -> float:
    """Max |a-b| ignoring the truncation corner (last `margin` rows/columns)."""
    n = a.shape[0]
    m = n - margin
    return float(np.max(np.abs(a[:m, :m] - b[:m, :m]))) if m > 0 else 0.0


class ToeplitzNum:
    """Exact *-polynomial in the isometry plus a truncation size; the symbol is
    always computed from the polynomial, the matrix is for spot numerics only."""

    def __init__(self, poly: NCPoly, n: int = 64):
        self.poly = poly
        self.n = n

    def symbol(self) -> FourierPoly:
        return symbol(self.poly)

    def matrix(self) -> np.ndarray:
        return toeplitz_matrix(self.poly, self.n)

    def flip(self) -> "ToeplitzNum":
        return ToeplitzNum(toeplitz_flip(self.poly), self.n)


def random_toeplitz_poly(rng, max_deg: int, coeff_range: int = 3) -> NCPoly:
    """Random *-polynomial in s, ss with small Gaussian-integer coefficients."""
    from ..builtin import toeplitz_system
    from ..scalars import GaussRat

    sys = toeplitz_system()
    words = sys.basis_words(max_deg)
    terms = {}
    for w in words:
        re = int(rng.integers(-coeff_range, coeff_range + 1))
        im = int(rng.integers(-coeff_range, coeff_range + 1))
        if re or im:
            terms[w] = Scalar.of(GaussRat(re, im))
    p = NCPoly(sys.alphabet, terms)
    return p if not p.is_zero() else NCPoly.one(sys.alphabet)
