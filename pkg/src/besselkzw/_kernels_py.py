"""Pure-Python scalar kernels: gamma, hypergeometric series, zeta, Bessel.

This module is the fallback twin of the compiled extension `_kernels_cy`;
both expose the same functions with identical semantics. Policy (branch
selection, pole guards, integer-order limits) lives in `foundations`, not
here: these routines assume arguments inside their stated regimes and
return raw (value, work, converged) style tuples.
"""

from __future__ import annotations

import cmath
import math

BACKEND_NAME = "python"

_EULER_GAMMA = 0.57721566490153286061

# Lanczos rational approximation, g = 607/128, 15 coefficients.
_LANCZOS_G = 4.7421875
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)

_SQRT_2PI = math.sqrt(2.0 * math.pi)


def sinpi(z: complex) -> complex:
    """sin(pi*z) with exact integer reduction of the real part."""
    x, y = z.real, z.imag
    m = math.floor(x + 0.5)
    r = x - m
    val = cmath.sin(math.pi * complex(r, y))
    return -val if (m & 1) else val


def cospi(z: complex) -> complex:
    """cos(pi*z) with exact integer reduction of the real part."""
    x, y = z.real, z.imag
    m = math.floor(x + 0.5)
    r = x - m
    val = cmath.cos(math.pi * complex(r, y))
    return -val if (m & 1) else val


def gamma(z: complex) -> complex:
    """Complex gamma via Lanczos; reflection for Re(z) < 1/2.

    No pole guard: the caller must keep z away from non-positive integers.
    """
    z = complex(z)
    if z.real < 0.5:
        return math.pi / (sinpi(z) * gamma(1.0 - z))
    zm = z - 1.0
    acc = _LANCZOS_C[0]
    for i in range(1, 15):
        acc += _LANCZOS_C[i] / (zm + i)
    t = zm + _LANCZOS_G + 0.5
    return _SQRT_2PI * t ** (zm + 0.5) * cmath.exp(-t) * acc


def rgamma(z: complex) -> complex:
    """1/gamma(z); exact zeros at the poles of gamma."""
    z = complex(z)
    if z.real < 0.5:
        # reflection keeps this finite and exact at non-positive integers
        return sinpi(z) * gamma(1.0 - z) / math.pi
    return 1.0 / gamma(z)


# ---------------------------------------------------------------------------
# hypergeometric power series (raw sums, no transformations)

def hyp1f1_raw(a: complex, c: complex, x: complex, max_terms: int,
               tol: float):
    """Taylor sum of 1F1(a;c;x). Returns (value, terms_used, converged)."""
    a = complex(a)
    c = complex(c)
    x = complex(x)
    term = 1.0 + 0.0j
    total = term
    small = 0
    for n in range(max_terms):
        if term == 0:
            return total, n + 1, True
        term *= (a + n) * x / ((c + n) * (n + 1))
        total += term
        if abs(term) <= tol * abs(total):
            small += 1
            if small >= 2 and n >= 4:
                return total, n + 1, True
        else:
            small = 0
    return total, max_terms, False


def hyp0f2_raw(c1: complex, c2: complex, x: complex, max_terms: int,
               tol: float):
    """Taylor sum of 0F2(;c1,c2;x)."""
    c1 = complex(c1)
    c2 = complex(c2)
    x = complex(x)
    term = 1.0 + 0.0j
    total = term
    small = 0
    for n in range(max_terms):
        if term == 0:
            return total, n + 1, True
        term *= x / ((c1 + n) * (c2 + n) * (n + 1))
        total += term
        if abs(term) <= tol * abs(total):
            small += 1
            if small >= 2 and n >= 4:
                return total, n + 1, True
        else:
            small = 0
    return total, max_terms, False


def hyp2f2_raw(a1: complex, a2: complex, c1: complex, c2: complex,
               x: complex, max_terms: int, tol: float):
    """Taylor sum of 2F2(a1,a2;c1,c2;x)."""
    a1 = complex(a1)
    a2 = complex(a2)
    c1 = complex(c1)
    c2 = complex(c2)
    x = complex(x)
    term = 1.0 + 0.0j
    total = term
    small = 0
    for n in range(max_terms):
        if term == 0:
            return total, n + 1, True
        term *= (a1 + n) * (a2 + n) * x / ((c1 + n) * (c2 + n) * (n + 1))
        total += term
        if abs(term) <= tol * abs(total):
            small += 1
            if small >= 2 and n >= 4:
                return total, n + 1, True
        else:
            small = 0
    return total, max_terms, False


# ---------------------------------------------------------------------------
# Riemann zeta: accelerated alternating series (Borwein weights)

_zeta_weight_cache: dict = {}


def _zeta_weights(n: int):
    """Borwein's d_k weights; returns (d_n, [d_k - d_n for k < n])."""
    cached = _zeta_weight_cache.get(n)
    if cached is not None:
        return cached
    t = 1.0 / n
    s = t
    partial = [s]
    for j in range(1, n + 1):
        t *= 4.0 * (n + j - 1) * (n - j + 1) / ((2.0 * j) * (2.0 * j - 1))
        s += t
        partial.append(s)
    dn = n * s
    diffs = [n * partial[k] - dn for k in range(n)]
    out = (dn, diffs)
    _zeta_weight_cache[n] = out
    return out


def zeta_raw(s: complex, n: int) -> complex:
    """Alternating-series zeta with n acceleration weights.

    Accuracy is the caller's responsibility via the choice of n; the
    scheme converges for Re(s) > -2 at the heights used in this package.
    """
    s = complex(s)
    dn, diffs = _zeta_weights(n)
    acc = 0.0 + 0.0j
    sign = 1.0
    for k in range(n):
        acc += sign * diffs[k] * cmath.exp(-s * math.log(k + 1))
        sign = -sign
    denom = dn * (1.0 - 2.0 ** (1.0 - s))
    return -acc / denom


# ---------------------------------------------------------------------------
# Bessel functions: ascending series, asymptotic forms, K-specific schemes

def besseli_series(nu: complex, x: complex, max_terms: int, tol: float):
    """Ascending series for I_nu(x); principal branch of (x/2)^nu."""
    nu = complex(nu)
    x = complex(x)
    if x == 0:
        val = 1.0 + 0.0j if abs(nu) < 1e-14 else 0.0 + 0.0j
        return val, 1, True
    h = x / 2.0
    term = cmath.exp(nu * cmath.log(h)) * rgamma(nu + 1.0)
    total = term
    h2 = h * h
    for m in range(1, max_terms):
        term *= h2 / (m * (nu + m))
        total += term
        if abs(term) <= tol * abs(total) and m >= 4:
            return total, m + 1, True
    return total, max_terms, False


def besselj_series(nu: complex, x: complex, max_terms: int, tol: float):
    """Ascending series for J_nu(x)."""
    nu = complex(nu)
    x = complex(x)
    if x == 0:
        val = 1.0 + 0.0j if abs(nu) < 1e-14 else 0.0 + 0.0j
        return val, 1, True
    h = x / 2.0
    term = cmath.exp(nu * cmath.log(h)) * rgamma(nu + 1.0)
    total = term
    h2 = -h * h
    for m in range(1, max_terms):
        term *= h2 / (m * (nu + m))
        total += term
        if abs(term) <= tol * abs(total) and m >= 4:
            return total, m + 1, True
    return total, max_terms, False


def ij_even_series(n2: int, u: complex, max_terms: int, tol: float):
    """I_{n2}(u) + J_{n2}(u) for even integer order n2 >= 0.

    Only every second term of the ascending series survives the sum, so
    this costs half of two separate evaluations and has no cancellation.
    """
    u = complex(u)
    if u == 0:
        val = 2.0 + 0.0j if n2 == 0 else 0.0 + 0.0j
        return val, 1, True
    h = u / 2.0
    term = cmath.exp(n2 * cmath.log(h)) / math.factorial(n2)
    total = term
    h4 = h * h * h * h
    m = 0
    for it in range(max_terms):
        term *= h4 / ((m + 1) * (m + 2) * (n2 + m + 1) * (n2 + m + 2))
        m += 2
        total += term
        if abs(term) <= tol * abs(total) and it >= 2:
            return 2.0 * total, it + 1, True
    return 2.0 * total, max_terms, False


def besselk_temme(mu: complex, x: complex, max_terms: int, tol: float):
    """K_mu(x) and K_{mu+1}(x) for |Re mu| <= 1/2, |x| <= 2.

    Series scheme with explicit small-mu limits, so integer orders are a
    smooth interior case rather than a pole.
    """
    mu = complex(mu)
    x = complex(x)
    x2 = x / 2.0
    mu2 = mu * mu

    gampl = rgamma(1.0 + mu)   # 1/Gamma(1+mu)
    gammi = rgamma(1.0 - mu)   # 1/Gamma(1-mu)
    if abs(mu) >= 1e-2:
        gam1 = (gammi - gampl) / (2.0 * mu)
    else:
        gam1 = (-_EULER_GAMMA + 0.04200263503409523553 * mu2
                + 0.0000962197152787697356211 * mu2 * mu2)
    gam2 = 0.5 * (gammi + gampl)

    pimu = math.pi * mu
    if abs(pimu) >= 1e-3:
        fact = pimu / cmath.sin(pimu)
    else:
        p2 = pimu * pimu
        fact = 1.0 + p2 / 6.0 + 7.0 * p2 * p2 / 360.0

    d = -cmath.log(x2)
    e = mu * d
    if abs(e) >= 1e-3:
        fact2 = cmath.sinh(e) / e
    else:
        e2 = e * e
        fact2 = 1.0 + e2 / 6.0 + e2 * e2 / 120.0

    ff = fact * (gam1 * cmath.cosh(e) + gam2 * fact2 * d)
    total = ff
    ee = cmath.exp(e)
    p = 0.5 * ee / gampl
    q = 0.5 / (ee * gammi)
    c = 1.0 + 0.0j
    d2 = x2 * x2
    total1 = p
    for i in range(1, max_terms):
        ff = (i * ff + p + q) / (i * i - mu2)
        c *= d2 / i
        p /= (i - mu)
        q /= (i + mu)
        delt = c * ff
        total += delt
        delt1 = c * (p - i * ff)
        total1 += delt1
        if abs(delt) < abs(total) * tol:
            return total, total1 * 2.0 / x, i, True
    return total, total1 * 2.0 / x, max_terms, False


def besselk_trap(mu: complex, x: complex, tol: float, max_levels: int):
    """K_mu(x) for Re(x) > 0 by trapezoidal sums of the cosh integral.

    Integrates exp(-x(cosh t - 1)) cosh(mu t) over t >= 0 and scales by
    exp(-x); the even integrand makes the trapezoid rule spectrally
    accurate, and halving h reuses all previous nodes.
    """
    mu = complex(mu)
    x = complex(x)
    rx = x.real
    arm = abs(mu.real)
    # crude truncation point: decay of Re(x)(cosh t - 1) beats cosh(mu t)
    t_hi = math.acosh(1.0 + 48.0 / rx)
    t_hi = math.acosh(1.0 + (48.0 + arm * t_hi + 4.0) / rx)

    def g(t: float) -> complex:
        return cmath.exp(-x * (math.cosh(t) - 1.0)) * cmath.cosh(mu * t)

    n0 = 16
    h = t_hi / n0
    acc = 0.5 * g(0.0)
    for k in range(1, n0 + 1):
        acc += g(k * h)
    val = acc * h
    work = n0 + 1
    err = abs(val)
    for _level in range(max_levels):
        h *= 0.5
        n0 *= 2
        add = 0.0 + 0.0j
        for k in range(1, n0, 2):
            add += g(k * h)
        work += n0 // 2
        new_val = 0.5 * val + h * add
        err = abs(new_val - val)
        val = new_val
        if err <= tol * abs(val) + 1e-305:
            return cmath.exp(-x) * val, err * abs(cmath.exp(-x)), work, True
    scale = abs(cmath.exp(-x))
    return cmath.exp(-x) * val, err * scale, work, False


def besseljy_asym(nu: complex, x: float):
    """Hankel large-argument forms of J_nu(x), Y_nu(x) for real x > 0.

    Returns (J, Y, err_abs); err_abs is the magnitude of the first
    omitted term times the oscillatory amplitude.
    """
    nu = complex(nu)
    z4 = 4.0 * nu * nu
    # b_k = (nu,k) / (2x)^k, accumulated until terms stop shrinking;
    # P takes even k with sign (-1)^(k/2), Q odd k with sign (-1)^((k-1)/2)
    b = 1.0 + 0.0j
    p = 1.0 + 0.0j
    q = 0.0 + 0.0j
    last = abs(b)
    k = 0
    nterm = 0.0
    while True:
        k += 1
        b *= (z4 - (2.0 * k - 1.0) ** 2) / (8.0 * k * x)
        nterm = abs(b)
        if nterm >= last or nterm < 1e-18:
            break
        sign = -1.0 if (k // 2) & 1 else 1.0
        if k % 2 == 1:
            q += sign * b
        else:
            p += sign * b
        last = nterm
        if k > 60:
            break
    omega = x - (0.5 * nu + 0.25) * math.pi
    cw = cmath.cos(omega)
    sw = cmath.sin(omega)
    amp = math.sqrt(2.0 / (math.pi * x))
    jv = amp * (cw * p - sw * q)
    yv = amp * (sw * p + cw * q)
    err = amp * nterm * max(abs(cw), abs(sw), 1.0)
    return jv, yv, err


def besseli_asym(nu: complex, x: float):
    """Large-argument form of I_nu(x) for real x > 0; returns (I, err)."""
    nu = complex(nu)
    z4 = 4.0 * nu * nu
    b = 1.0 + 0.0j
    total = b
    last = abs(b)
    k = 0
    nterm = 0.0
    while True:
        k += 1
        b *= -(z4 - (2.0 * k - 1.0) ** 2) / (8.0 * k * x)
        nterm = abs(b)
        if nterm >= last or nterm < 1e-18:
            break
        total += b
        last = nterm
        if k > 60:
            break
    pref = math.exp(x) / math.sqrt(2.0 * math.pi * x)
    # the circuit term ~ e^{-x} relative to the leading exponential
    err = pref * (nterm + 2.0 * math.exp(-2.0 * x))
    return pref * total, err
