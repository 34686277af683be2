"""Winding-number probes, the equivariant parity experiment, the Monte-Carlo
Peter-Weyl identities, and the surjectivity-criterion conditions."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .circle import (
    delta_angle,
    delta_pullback,
    interval_fn,
    iota_z2_pullback,
    iota_z2_pushforward,
    omega_hat,
    phi_gauged_pullback,
    phi_hat,
)
from .grids import GridConfig, Z2, circle_angles, interval_nodes
from .toeplitz import random_toeplitz_poly, symbol


class WindingError(RuntimeError):
    pass


def winding_number(values: np.ndarray, tol_det: float = 1e-9, max_jump: float = np.pi / 2) -> int:
    """Accumulated determinant phase of a sampled loop divided by 2 pi.

    values: (N,) complex samples (already determinants) or (N, n, n) matrices.
    Raises WindingError('SINGULAR...') if a determinant is tiny and
    WindingError('DENSITY...') if a phase jump exceeds the guard (then the
    rounding of the total phase would not be provably correct)."""
    values = np.asarray(values)
    dets = np.linalg.det(values) if values.ndim == 3 else values
    small = np.abs(dets) < tol_det
    if np.any(small):
        raise WindingError(f"SINGULAR at sample {int(np.argmax(small))}")
    closed = np.concatenate([dets, dets[:1]])
    jumps = np.angle(closed[1:] / closed[:-1])
    if np.max(np.abs(jumps)) >= max_jump:
        raise WindingError("DENSITY: phase jump exceeds the guard; resample more densely")
    total = float(np.sum(jumps))
    return int(round(total / (2 * np.pi)))


def random_fourier_entry(rng, parity: str, max_deg: int = 3) -> np.ndarray:
    """Coefficients c_k, k = -max_deg..max_deg, with the off-parity ones zeroed.
    parity: 'odd' (f(-z) = -f(z)), 'even' (f(-z) = f(z)), or 'any'."""
    ks = np.arange(-max_deg, max_deg + 1)
    c = rng.normal(size=ks.size) + 1j * rng.normal(size=ks.size)
    if parity == "odd":
        c[ks % 2 == 0] = 0.0
    elif parity == "even":
        c[ks % 2 == 1] = 0.0
    return c


def eval_fourier(c: np.ndarray, theta: np.ndarray) -> np.ndarray:
    max_deg = (c.size - 1) // 2
    ks = np.arange(-max_deg, max_deg + 1)
    return np.tensordot(c, np.exp(1j * np.outer(ks, theta)), axes=(0, 0))


@dataclass
class ParityReport:
    size: int
    trials: int
    windings: list = field(default_factory=list)
    control_windings: list = field(default_factory=list)
    resamples: int = 0

    @property
    def all_odd(self) -> bool:
        return all(w % 2 == 1 for w in self.windings)

    @property
    def control_has_both(self) -> bool:
        pars = {w % 2 for w in self.control_windings}
        return pars == {0, 1}


def _random_loop(rng, n: int, theta: np.ndarray, first_row: str, max_deg: int = 3):
    """Matrix loop with the requested first-row parity, other rows even for the
    equivariant family and unconstrained for the control."""
    other = "even" if first_row == "odd" else "any"
    while True:
        mats = np.zeros((theta.size, n, n), dtype=complex)
        for i in range(n):
            parity = first_row if i == 0 else other
            for j in range(n):
                mats[:, i, j] = eval_fourier(random_fourier_entry(rng, parity, max_deg), theta)
        dets = np.linalg.det(mats)
        if np.min(np.abs(dets)) > 1e-3:
            return mats, dets


def equivariant_parity_probe(n: int, trials: int, cfg: GridConfig) -> ParityReport:
    """det of a loop with odd first row and even other rows is odd, hence has
    odd winding; the control family (even first row, unconstrained others)
    shows both parities."""
    rng = cfg.rng(4)
    theta = circle_angles(cfg.n_circle)
    report = ParityReport(size=n, trials=trials)

    def sample(first_row: str) -> int:
        while True:
            _, dets = _random_loop(rng, n, theta, first_row)
            if first_row == "odd":
                flip = np.roll(dets, -(cfg.n_circle // 2))
                assert np.max(np.abs(dets + flip)) < 1e-6 * np.max(np.abs(dets))
            try:
                return winding_number(dets)
            except WindingError:
                report.resamples += 1

    for _ in range(trials):
        report.windings.append(sample("odd"))
    for _ in range(trials):
        report.control_windings.append(sample("even"))
    return report


# ---------------------------------------------------------------------------
# Peter-Weyl identities on Monte-Carlo points of the 3-sphere
# ---------------------------------------------------------------------------

def peter_weyl_report(samples: int, cfg: GridConfig, degrees=(-2, -1, 0, 1, 2)) -> dict:
    rng = cfg.rng(5)
    v = rng.normal(size=(samples, 4))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    a = v[:, 0] + 1j * v[:, 1]
    c = v[:, 2] + 1j * v[:, 3]
    aa = np.abs(a) ** 2
    cc = np.abs(c) ** 2
    omega2 = 2.0 / (1.0 + np.abs(aa - cc))
    out = {}
    out["zero_identity"] = float(np.max(np.abs((1 - omega2 * aa) * (1 - omega2 * cc))))
    # the factor supported on each patch vanishes there
    apatch = aa >= 0.5
    out["a_patch_unitary"] = float(np.max(np.abs(omega2[apatch] * aa[apatch] - 1.0)))
    out["c_patch_unitary"] = float(np.max(np.abs(omega2[~apatch] * cc[~apatch] - 1.0)))
    # cleaving multiplicativity on the a-patch: (omega a)^(n+m) = (omega a)^n (omega a)^m
    # with negative powers via the conjugate (unitarity makes this the inverse)
    omega = np.sqrt(omega2)
    wa = omega[apatch] * a[apatch]

    def power(z, k):
        return z**k if k >= 0 else np.conj(z) ** (-k)

    worst = 0.0
    for nn in degrees:
        for mm in degrees:
            lhs = power(wa, nn + mm)
            rhs = power(wa, nn) * power(wa, mm)
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    out["cleaving_multiplicative"] = worst
    # line-bundle equivariance: f = omega^n a^n satisfies f(e^{i phi} x) = f(x) e^{i n phi}
    phis = rng.uniform(0, 2 * np.pi, size=8)
    worst = 0.0
    for nn in degrees:
        f = lambda av, cv: power(np.sqrt(2.0 / (1.0 + np.abs(np.abs(av) ** 2 - np.abs(cv) ** 2))) * av, nn)
        base = f(a, c)
        for phi in phis:
            g = np.exp(1j * phi)
            worst = max(worst, float(np.max(np.abs(f(a * g, c * g) - base * np.exp(1j * nn * phi)))))
    out["line_bundle_equivariance"] = worst
    out["pass"] = max(out["zero_identity"], out["cleaving_multiplicative"], out["line_bundle_equivariance"]) < cfg.tol
    out["samples"] = samples
    return out


# ---------------------------------------------------------------------------
# surjectivity-criterion conditions
# ---------------------------------------------------------------------------

def mattprop_report(cfg: GridConfig, n_random: int = 1000) -> dict:
    """Condition (1): for h vanishing at the interval endpoints, F = omega_1(h)
    satisfies delta_1^* F = h and delta_2^* F = 0 (the kernel-image equality on
    a generating family); the mirrored statement for omega_2.  Condition (2):
    the two composite partial-inverse paths agree modulo functions vanishing
    at the endpoints, on random degree-<=3 Toeplitz elements; plus the corner
    identity (id (x) iota^*) delta_1^* = (iota^* (x) id) delta_2^*."""
    rng = cfg.rng(6)
    nodes = interval_nodes(cfg.m_interval)
    out = {}
    # condition (1)
    worst_split = 0.0
    worst_kernel = 0.0
    for _ in range(24):
        vals = rng.normal(size=cfg.m_interval) + 1j * rng.normal(size=cfg.m_interval)
        vals[0] = vals[-1] = 0.0  # vanishes at the endpoints
        h = interval_fn(vals, nodes)
        for e0, e1 in ((1.0, 0.0), (0.0, 1.0), (0.7, -0.4)):
            f1 = lambda kk, tt: (e0 + e1 * np.asarray(kk)) * h(tt)
            F = omega_hat(1, f1)
            back = delta_pullback(1, F)
            k = Z2[:, None]
            t = nodes[None, :]
            worst_split = max(worst_split, float(np.max(np.abs(back(k, t) - f1(k, t)))))
            other = delta_pullback(2, F)
            worst_kernel = max(
                worst_kernel, float(np.max(np.abs(other(nodes[:, None], Z2[None, :]))))
            )
            f2 = lambda tt, kk: (e0 + e1 * np.asarray(kk)) * h(tt)
            G = omega_hat(2, f2)
            back2 = delta_pullback(2, G)
            worst_split = max(
                worst_split,
                float(np.max(np.abs(back2(nodes[:, None], Z2[None, :]) - f2(nodes[:, None], Z2[None, :])))),
            )
            other2 = delta_pullback(1, G)
            worst_kernel = max(worst_kernel, float(np.max(np.abs(other2(k, t)))))
    out["condition1_splitting"] = worst_split
    out["condition1_kernel_image"] = worst_kernel
    # corner identity
    k1 = Z2[:, None]
    k2 = Z2[None, :]
    worst_corner = 0.0
    for _ in range(16):
        p = random_toeplitz_poly(rng, 3)
        F = symbol(p)
        lhs = F.eval(delta_angle(1, k1, k2.astype(float)))  # (id x iota^*) delta_1^*
        rhs = F.eval(delta_angle(2, k2, k1.astype(float)))  # (iota^* x id) delta_2^*
        worst_corner = max(worst_corner, float(np.max(np.abs(lhs - rhs))))
    out["corner_identity"] = worst_corner
    # condition (2): both composite paths on random b (x) g
    worst_c2 = 0.0
    for _ in range(n_random):
        b = random_toeplitz_poly(rng, 3)
        Fb = symbol(b)
        g0, g1 = rng.normal(size=2)
        g = lambda cc: g0 + g1 * np.asarray(cc)
        # path A: pi^{01}_2 (pi^{02}_1)^{-1} pi^{20}_1 of [b (x) g]
        X = lambda aa, xx, cc: Fb.eval(delta_angle(1, aa, xx)) * g(cc)
        PhiX = lambda tt, aa, cc: X(cc, tt, aa)  # Phi_02 swap
        YA = {}
        for cval in (1.0, -1.0):
            f = lambda tt, kk, cv=cval: PhiX(tt, kk, cv)
            YA[cval] = omega_hat(2, f)
        ZA = lambda aa, xx, cc: np.where(
            np.asarray(cc) > 0, YA[1.0](delta_angle(1, aa, xx)), YA[-1.0](delta_angle(1, aa, xx))
        )
        # path B: pi^{10}_2 (pi^{12}_0)^{-1} pi^{21}_0 of [b (x) g]
        W = lambda tt, aa, cc: Fb.eval(delta_angle(2, aa, tt)) * g(cc)
        PhiW = lambda tt, aa, cc: W(tt, cc, aa)  # Phi_12 swap
        YB = {}
        for cval in (1.0, -1.0):
            f = lambda tt, kk, cv=cval: PhiW(tt, kk, cv)
            YB[cval] = omega_hat(2, f)
        SB = lambda aa, xx, cc: np.where(
            np.asarray(cc) > 0, YB[1.0](delta_angle(1, aa, xx)), YB[-1.0](delta_angle(1, aa, xx))
        )
        ZB = lambda aa, xx, cc: SB(cc, xx, aa)  # Phi_01 swap
        # compare the classes modulo C(Z2) (x) ker iota^* (x) C(Z2): evaluate at x = +-1
        aas = Z2[:, None, None]
        xs = np.array([1.0, -1.0])[None, :, None]
        cs = Z2[None, None, :]
        worst_c2 = max(worst_c2, float(np.max(np.abs(ZA(aas, xs, cs) - ZB(aas, xs, cs)))))
    out["condition2_residual"] = worst_c2
    out["pass"] = (
        max(worst_split, worst_kernel, worst_corner, worst_c2) < max(cfg.tol, 1e-9)
    )
    out["trials"] = n_random
    return out
