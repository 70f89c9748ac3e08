"""Asymptotic rate vs relative-distance upper bounds for LRCs.

All curves are the n -> infinity limits of the finite-length bounds at fixed
locality (o(1) terms dropped), as functions of the relative minimum distance
delta_n = d/n.  Values are clamped to [0, 1] and every implemented curve is
nonincreasing in delta_n.

The locality-aware composite bound minimizes, over the fraction x of
coordinates spent on local blocks,

    x + (1 - x nu) * R_opt(delta_n / (1 - x nu)),   nu = G(kappa_B, delta)/kappa_B,

where R_opt is a locality-free rate bound (asymptotic Plotkin, or MRRW for
binary codes).  The minimization is numeric: a 1024-point grid scan seeds a
golden-section refinement with objective tolerance 1e-6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import (
    griesmer_length,
    local_dim_bound,
    local_dim_bound_logconvex,
)

GRID_POINTS = 1024
OBJECTIVE_TOL = 1e-6
ROPT_CHOICES = ("plotkin", "mrrw")


def _clamp01(x: float) -> float:
    return 0.0 if x < 0.0 else (1.0 if x > 1.0 else x)


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0 by continuity."""
    if x < 0.0 or x > 1.0:
        raise ValueError(f"binary entropy argument {x} outside [0, 1]")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def ropt_plotkin(delta_n: float, q: int) -> float:
    """Asymptotic Plotkin rate bound: 1 - q/(q-1) delta_n, zero past (q-1)/q."""
    if delta_n < 0.0:
        raise ValueError(f"relative distance {delta_n} below 0")
    return _clamp01(1.0 - q / (q - 1) * delta_n)


def ropt_mrrw(delta_n: float) -> float:
    """MRRW rate bound for binary codes: h(1/2 - sqrt(d(1-d))); zero past 1/2.

    Defined for q = 2 only; callers wanting another field must fall back to
    the Plotkin curve.
    """
    if delta_n < 0.0:
        raise ValueError(f"relative distance {delta_n} below 0")
    if delta_n >= 0.5:
        return 0.0
    return _clamp01(binary_entropy(0.5 - math.sqrt(delta_n * (1.0 - delta_n))))


def _base_bound(ropt_choice: str, q: int):
    if ropt_choice == "plotkin":
        return lambda dn: ropt_plotkin(dn, q)
    if ropt_choice == "mrrw":
        if q != 2:
            raise ValueError("MRRW is defined for q = 2 only; use the plotkin fallback")
        return ropt_mrrw
    raise ValueError(f"ropt choice must be one of {ROPT_CHOICES}, got {ropt_choice!r}")


def rate_singleton(delta_n: float) -> float:
    return _clamp01(1.0 - delta_n)


def rate_gopalan(delta_n: float, r: int) -> float:
    return _clamp01(r / (r + 1) * (1.0 - delta_n))


def rate_prakash(delta_n: float, r: int, delta: int) -> float:
    return _clamp01(r / (r + delta - 1) * (1.0 - delta_n))


def rate_abhmt(delta_n: float, r: int, delta: int, q: int, choice: str = "best") -> float:
    """Asymptote of the log-convexity bound: kappa_A/(r + delta - 1) (1 - delta_n)."""
    kappa_a = local_dim_bound_logconvex(r, delta, q, choice)
    return _clamp01(kappa_a / (r + delta - 1) * (1.0 - delta_n))


def rate_local_griesmer(delta_n: float, r: int, delta: int, q: int) -> float:
    """Asymptote of the Griesmer Singleton-type bound:
    kappa_B/G(kappa_B, delta) (1 - delta_n)."""
    kappa_b = local_dim_bound(r, delta, q)
    return _clamp01(kappa_b / griesmer_length(kappa_b, delta, q) * (1.0 - delta_n))


def reschain_plotkin_closed(delta_n: float, kappa: int, delta: int, q: int,
                            clamp: bool = True) -> float:
    """Closed form of the composite bound when R_opt is the Plotkin line:
    kappa/G(kappa, delta) * (1 - delta_n/(1 - 1/q)).

    With clamp=False the raw line value is returned (it goes negative past
    (q-1)/q), which is what the threshold-crossing comparisons need.
    """
    line = kappa / griesmer_length(kappa, delta, q) * (1.0 - delta_n / (1.0 - 1.0 / q))
    return _clamp01(line) if clamp else line


def _optimize_rate(nu: float, delta_n: float, base) -> float:
    """min over x in [0, 1/nu) of x + (1 - x nu) base(delta_n / (1 - x nu))."""

    def f(x: float) -> float:
        rem = 1.0 - x * nu
        if rem <= 1e-12:
            return x
        arg = delta_n / rem
        return x + rem * (0.0 if arg >= 1.0 else base(arg))

    xs = np.linspace(0.0, 1.0 / nu, GRID_POINTS, endpoint=False)
    vals = np.array([f(float(x)) for x in xs])
    i = int(np.argmin(vals))
    lo = float(xs[max(0, i - 1)])
    hi = float(xs[i + 1]) if i + 1 < len(xs) else (1.0 / nu) * (1.0 - 1e-12)
    best = float(vals[i])

    phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - phi * (b - a)
    d = a + phi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(200):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = f(d)
        best = min(best, fc, fd)
        if (b - a) * max(nu, 1.0) < OBJECTIVE_TOL * 1e-3:
            break
    return _clamp01(best)


def rate_reschain(delta_n: float, r: int, delta: int, q: int,
                  ropt_choice: str = "mrrw") -> float:
    """The composite residual-chain rate bound at locality (r, delta)."""
    base = _base_bound(ropt_choice, q)
    kappa_b = local_dim_bound(r, delta, q)
    nu = griesmer_length(kappa_b, delta, q) / kappa_b
    return _optimize_rate(nu, delta_n, base)


def rate_cm_rdelta(delta_n: float, r: int, delta: int, q: int,
                   ropt_choice: str = "mrrw") -> float:
    """Asymptote of the alphabet-dependent (r, delta) bound: the same
    minimization with the block overhead nu = (r + delta - 1)/r."""
    base = _base_bound(ropt_choice, q)
    nu = (r + delta - 1) / r
    return _optimize_rate(nu, delta_n, base)


def improvement_threshold(r: int, delta: int, q: int, choice: str = "best"):
    """Relative distance past which the Plotkin-composed bound beats the
    log-convexity line.

    Defined when G(kappa_A, delta) < r + delta - 1; returns None otherwise
    (the two lines coincide or the Griesmer length exceeds the block size).
    """
    kappa_a = local_dim_bound_logconvex(r, delta, q, choice)
    g = griesmer_length(kappa_a, delta, q)
    size = r + delta - 1
    if g >= size:
        return None
    return 1.0 / (1.0 + (1.0 / (q - 1)) * (1.0 / (1.0 - g / size)))


# --- curve sampling and CSV emission ---

CURVE_NAMES = (
    "singleton",
    "gopalan",
    "prakash",
    "abhmt",
    "local_griesmer",
    "cm_rdelta",
    "reschain",
    "plotkin",
    "mrrw",
)


@dataclass(frozen=True)
class AsymptoticCurve:
    label: str
    params: dict
    grid: tuple
    rates: tuple


def default_grid(points: int = 512) -> np.ndarray:
    """Uniform delta_n grid over [0, 1]."""
    if points < 2:
        raise ValueError("grid needs at least 2 points")
    return np.linspace(0.0, 1.0, points)


def curve(name: str, grid, r: int, delta: int, q: int,
          lc_choice: str = "best", ropt_choice: str = "mrrw") -> AsymptoticCurve:
    """Sample one named bound over a delta_n grid."""
    fns = {
        "singleton": lambda dn: rate_singleton(dn),
        "gopalan": lambda dn: rate_gopalan(dn, r),
        "prakash": lambda dn: rate_prakash(dn, r, delta),
        "abhmt": lambda dn: rate_abhmt(dn, r, delta, q, lc_choice),
        "local_griesmer": lambda dn: rate_local_griesmer(dn, r, delta, q),
        "cm_rdelta": lambda dn: rate_cm_rdelta(dn, r, delta, q, ropt_choice),
        "reschain": lambda dn: rate_reschain(dn, r, delta, q, ropt_choice),
        "plotkin": lambda dn: ropt_plotkin(dn, q),
        "mrrw": lambda dn: ropt_mrrw(dn),
    }
    if name not in fns:
        raise ValueError(f"unknown curve {name!r}; choose from {CURVE_NAMES}")
    fn = fns[name]
    grid = np.asarray(grid, dtype=float)
    rates = tuple(float(fn(float(dn))) for dn in grid)
    params = {"r": r, "delta": delta, "q": q,
              "lc_choice": lc_choice, "ropt_choice": ropt_choice}
    return AsymptoticCurve(label=name, params=params, grid=tuple(float(x) for x in grid),
                           rates=rates)


def emit_curves(names, grid, r: int, delta: int, q: int, out,
                lc_choice: str = "best", ropt_choice: str = "mrrw") -> None:
    """Write the requested bounds over the grid as CSV (9 significant digits).

    The header comments record the parameters and the numeric method, and
    that the curves are n -> infinity limits with o(1) terms dropped.
    """
    curves = [curve(name, grid, r, delta, q, lc_choice, ropt_choice) for name in names]
    lines = [
        "# asymptotic rate bounds: n -> infinity limits, o(1) terms dropped",
        f"# params: r={r} delta={delta} q={q} lc_choice={lc_choice} ropt_choice={ropt_choice}",
        f"# minimization: {GRID_POINTS}-point grid scan + golden-section refinement, "
        f"objective tolerance {OBJECTIVE_TOL:g}",
        "delta_n," + ",".join(c.label for c in curves),
    ]
    grid = np.asarray(grid, dtype=float)
    for row, dn in enumerate(grid):
        vals = ",".join(f"{c.rates[row]:.9g}" for c in curves)
        lines.append(f"{float(dn):.9g},{vals}")
    text = "\n".join(lines) + "\n"
    if hasattr(out, "write"):
        out.write(text)
    else:
        from pathlib import Path

        Path(out).write_text(text, encoding="utf-8")
