"""Internal special functions for the Student-t distribution.

The t CDF is evaluated through the regularized incomplete beta function,
computed here with the classic continued-fraction scheme (modified Lentz),
so the package does not depend on a special-function library for its core
distributions.  The representation used:

    P(T > x) = (1/2) * I_z(alpha/2, 1/2),   z = alpha / (alpha + x^2),  x >= 0,

with symmetry for x < 0.  Quantiles invert the survival function with a
bracketed Newton iteration started from a normal-theory guess in the bulk
and a power-law tail guess in the tails.  Everything is vectorized; scalars
in give scalars out.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConvergenceError, ParameterError

_TINY = 1e-300
_CF_EPS = 3e-16
_CF_MAX_ITER = 400


def _betacf(a: float, b: float, x: np.ndarray) -> np.ndarray:
    """Continued fraction for the incomplete beta (Lentz), vectorized in x."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = np.ones_like(x)
    d = 1.0 - qab * x / qap
    np.copyto(d, _TINY, where=np.abs(d) < _TINY)
    d = 1.0 / d
    h = d.copy()
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        np.copyto(d, _TINY, where=np.abs(d) < _TINY)
        c = 1.0 + aa / c
        np.copyto(c, _TINY, where=np.abs(c) < _TINY)
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        np.copyto(d, _TINY, where=np.abs(d) < _TINY)
        c = 1.0 + aa / c
        np.copyto(c, _TINY, where=np.abs(c) < _TINY)
        d = 1.0 / d
        delta = d * c
        h *= delta
        if np.all(np.abs(delta - 1.0) < _CF_EPS):
            return h
    raise ConvergenceError(
        f"incomplete-beta continued fraction did not converge in {_CF_MAX_ITER} iterations"
    )


def betainc_reg(a: float, b: float, x) -> np.ndarray | float:
    """Regularized incomplete beta I_x(a, b) for scalar a, b > 0."""
    if a <= 0.0 or b <= 0.0:
        raise ParameterError(f"betainc_reg requires a, b > 0, got a={a}, b={b}")
    x_arr = np.asarray(x, dtype=float)
    scalar = x_arr.ndim == 0
    x_arr = np.atleast_1d(x_arr)
    if np.any((x_arr < 0.0) | (x_arr > 1.0)):
        raise ParameterError("betainc_reg requires x in [0, 1]")

    out = np.empty_like(x_arr)
    at_zero = x_arr <= 0.0
    at_one = x_arr >= 1.0
    out[at_zero] = 0.0
    out[at_one] = 1.0
    interior = ~(at_zero | at_one)
    if np.any(interior):
        xi = x_arr[interior]
        log_beta = math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)
        log_front = a * np.log(xi) + b * np.log1p(-xi) - log_beta
        res = np.empty_like(xi)
        direct = xi < (a + 1.0) / (a + b + 2.0)
        if np.any(direct):
            res[direct] = np.exp(log_front[direct]) * _betacf(a, b, xi[direct]) / a
        mirrored = ~direct
        if np.any(mirrored):
            res[mirrored] = 1.0 - np.exp(log_front[mirrored]) * _betacf(
                b, a, 1.0 - xi[mirrored]
            ) / b
        out[interior] = res
    return float(out[0]) if scalar else out


def t_log_pdf_const(alpha: float) -> float:
    return (
        math.lgamma((alpha + 1.0) / 2.0)
        - math.lgamma(alpha / 2.0)
        - 0.5 * math.log(alpha * math.pi)
    )


def t_pdf(x, alpha: float):
    """Student-t density with ``alpha`` degrees of freedom."""
    x_arr = np.asarray(x, dtype=float)
    val = np.exp(
        t_log_pdf_const(alpha) - 0.5 * (alpha + 1.0) * np.log1p(x_arr * x_arr / alpha)
    )
    return float(val) if np.ndim(x) == 0 else val


def t_sf(x, alpha: float):
    """Student-t survival function P(T > x)."""
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    z = alpha / (alpha + x_arr * x_arr)
    half_tail = 0.5 * np.atleast_1d(betainc_reg(alpha / 2.0, 0.5, z))
    out = np.where(x_arr >= 0.0, half_tail, 1.0 - half_tail)
    return float(out[0]) if np.ndim(x) == 0 else out


def t_cdf(x, alpha: float):
    x_arr = np.asarray(x, dtype=float)
    out = 1.0 - t_sf(x_arr, alpha)
    return float(out) if np.ndim(x) == 0 else out


def t_tail_constant(alpha: float) -> float:
    """Constant c with P(T > x) ~ (c/2) x^{-alpha} as x -> infinity."""
    return (
        2.0
        * math.exp(math.lgamma((alpha + 1.0) / 2.0) - math.lgamma(alpha / 2.0))
        * alpha ** ((alpha - 1.0) / 2.0)
        / math.sqrt(alpha * math.pi)
    )


# Acklam's rational approximation of the standard normal quantile.  Only used
# to seed the Newton iteration below; final accuracy comes from the t CDF.
_ACKLAM_A = (
    -3.969683028665376e01, 2.209460984245205e02, -2.759285104469687e02,
    1.383577518672690e02, -3.066479806614716e01, 2.506628277459239e00,
)
_ACKLAM_B = (
    -5.447609879822406e01, 1.615858368580409e02, -1.556989798598866e02,
    6.680131188771972e01, -1.328068155288572e01,
)
_ACKLAM_C = (
    -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e00,
    -2.549732539343734e00, 4.374664141464968e00, 2.938163982698783e00,
)
_ACKLAM_D = (
    7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e00,
    3.754408661907416e00,
)


def _norm_ppf_approx(p: np.ndarray) -> np.ndarray:
    a, b, c, d = _ACKLAM_A, _ACKLAM_B, _ACKLAM_C, _ACKLAM_D
    out = np.empty_like(p)
    lo = p < 0.02425
    hi = p > 1.0 - 0.02425
    mid = ~(lo | hi)
    if np.any(mid):
        q = p[mid] - 0.5
        r = q * q
        num = ((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]
        den = (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r) + 1.0
        out[mid] = num * q / den
    if np.any(lo):
        q = np.sqrt(-2.0 * np.log(p[lo]))
        num = ((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]
        den = ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q) + 1.0
        out[lo] = num / den
    if np.any(hi):
        q = np.sqrt(-2.0 * np.log(1.0 - p[hi]))
        num = ((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]
        den = ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q) + 1.0
        out[hi] = -num / den
    return out


def _t_upper_quantile_start(p: np.ndarray, alpha: float) -> np.ndarray:
    """Initial guess for the quantile at upper-tail probability p <= 1/2."""
    out = np.empty_like(p)
    tail = p < 0.05
    if np.any(tail):
        c = t_tail_constant(alpha)
        out[tail] = (c / (2.0 * p[tail])) ** (1.0 / alpha)
    bulk = ~tail
    if np.any(bulk):
        z = _norm_ppf_approx(1.0 - p[bulk])
        # first Cornish-Fisher style correction toward the t distribution
        out[bulk] = z + (z**3 + z) / (4.0 * alpha)
    return np.maximum(out, 0.0)


def t_ppf(u, alpha: float, tol: float = 1e-13, max_iter: int = 60):
    """Student-t quantile: the x with P(T <= x) = u, elementwise.

    Bracketed Newton on the survival function; terminates when the CDF
    residual is below ``tol`` relative to the tail probability.
    """
    u_arr = np.atleast_1d(np.asarray(u, dtype=float))
    if np.any((u_arr <= 0.0) | (u_arr >= 1.0)):
        raise ParameterError("t_ppf requires probabilities strictly inside (0, 1)")

    # reduce to the upper tail: solve sf(x) = p with p <= 1/2, then apply sign
    p = np.where(u_arr >= 0.5, 1.0 - u_arr, u_arr)
    sign = np.where(u_arr >= 0.5, 1.0, -1.0)
    x = _t_upper_quantile_start(p, alpha)
    lo = np.zeros_like(x)
    hi = np.full_like(x, np.inf)
    resid = t_sf(x, alpha) - p
    tol_vec = tol * p
    for _ in range(max_iter):
        active = np.abs(resid) > tol_vec
        if not np.any(active):
            break
        r = resid[active]
        xa = x[active]
        lo_a = lo[active]
        hi_a = hi[active]
        lo_a = np.where(r > 0, np.maximum(lo_a, xa), lo_a)
        hi_a = np.where(r < 0, np.minimum(hi_a, xa), hi_a)
        step = r / t_pdf(xa, alpha)
        x_new = xa + step
        # fall back to bisection when Newton leaves the bracket
        bad = (x_new <= lo_a) | (x_new >= hi_a)
        if np.any(bad):
            mid = np.where(
                np.isinf(hi_a), 2.0 * np.maximum(lo_a, 1.0), 0.5 * (lo_a + hi_a)
            )
            x_new = np.where(bad, mid, x_new)
        x[active] = x_new
        lo[active] = lo_a
        hi[active] = hi_a
        resid[active] = t_sf(x_new, alpha) - p[active]
    else:
        worst = float(np.max(np.abs(resid) / np.maximum(p, _TINY)))
        raise ConvergenceError(
            f"t quantile Newton iteration did not converge (worst relative "
            f"CDF residual {worst:.3e})"
        )
    out = sign * x
    return float(out[0]) if np.ndim(u) == 0 else out
