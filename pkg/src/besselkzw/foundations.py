"""Complex special-function building blocks.

Everything downstream (the generalized Bessel evaluators, the identity
checks, the Riemann-xi integrals) is assembled from the functions here:
gamma, confluent/generalized hypergeometric series, the Bessel family at
complex order, the Riemann zeta function, divisor sums, and the
Koshliakov kernel.

All functions are pure; a shared immutable EvalConfig carries tolerances
and iteration caps, so values may be computed concurrently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .backend import kernels
from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError, NonConvergence, PoleError

# Euler-Mascheroni constant, 20 significant digits
EULER_GAMMA = 0.57721566490153286061

_INT_POLE_TOL = 1e-12


def _as_complex(v) -> complex:
    return complex(v)


def _near_nonpositive_int(s: complex, tol: float = _INT_POLE_TOL) -> bool:
    if abs(s.imag) > tol:
        return False
    r = round(s.real)
    return r <= 0 and abs(s.real - r) <= tol


# ---------------------------------------------------------------------------
# gamma

def gamma(s) -> complex:
    """Complex gamma function, relative accuracy ~1e-14 for |s| <= 50.

    Raises PoleError when s is within 1e-12 of a non-positive integer.
    """
    s = _as_complex(s)
    if _near_nonpositive_int(s):
        raise PoleError(f"gamma pole at s={s}")
    return kernels.gamma(s)


def rgamma(s) -> complex:
    """1/gamma(s); finite everywhere, with exact zeros at gamma's poles."""
    return kernels.rgamma(_as_complex(s))


def sinpi(s) -> complex:
    return kernels.sinpi(_as_complex(s))


def cospi(s) -> complex:
    return kernels.cospi(_as_complex(s))


# ---------------------------------------------------------------------------
# hypergeometric series

def hyp1f1(a, c, x, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Confluent hypergeometric 1F1(a;c;x).

    For Re(x) < 0 with |x| > 1 the sum is taken through the Kummer
    transformation e^x 1F1(c-a;c;-x), which avoids the cancellation of
    the directly summed alternating series.
    """
    a = _as_complex(a)
    c = _as_complex(c)
    x = _as_complex(x)
    if _near_nonpositive_int(c):
        raise PoleError(f"1F1 parameter pole at c={c}")
    if x.real < 0.0 and abs(x) > 1.0:
        val, n, ok = kernels.hyp1f1_raw(c - a, c, -x, cfg.max_series_terms,
                                        cfg.rel_tol)
        val = cmath.exp(x) * val
    else:
        val, n, ok = kernels.hyp1f1_raw(a, c, x, cfg.max_series_terms,
                                        cfg.rel_tol)
    if not ok:
        raise NonConvergence(f"1F1({a},{c},{x}) needs more than "
                             f"{cfg.max_series_terms} terms")
    return val


def hyp0f2(c1, c2, x, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Generalized hypergeometric 0F2(;c1,c2;x); entire in x."""
    c1 = _as_complex(c1)
    c2 = _as_complex(c2)
    if _near_nonpositive_int(c1) or _near_nonpositive_int(c2):
        raise PoleError("0F2 lower parameter is a non-positive integer")
    val, n, ok = kernels.hyp0f2_raw(c1, c2, _as_complex(x),
                                    cfg.max_series_terms, cfg.rel_tol)
    if not ok:
        raise NonConvergence("0F2 term cap exhausted")
    return val


def hyp2f2(a1, a2, c1, c2, x, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Generalized hypergeometric 2F2(a1,a2;c1,c2;x)."""
    c1 = _as_complex(c1)
    c2 = _as_complex(c2)
    if _near_nonpositive_int(c1) or _near_nonpositive_int(c2):
        raise PoleError("2F2 lower parameter is a non-positive integer")
    val, n, ok = kernels.hyp2f2_raw(_as_complex(a1), _as_complex(a2), c1, c2,
                                    _as_complex(x), cfg.max_series_terms,
                                    cfg.rel_tol)
    if not ok:
        raise NonConvergence("2F2 term cap exhausted")
    return val


# ---------------------------------------------------------------------------
# Bessel family

_SERIES_CUTOFF = 12.0
_K_SERIES_CUTOFF = 2.0
_ORDER_LIMIT_WINDOW = 1e-6
_ORDER_LIMIT_STEP = 1e-5


def _near_int(v: complex, tol: float) -> bool:
    return abs(v.imag) <= tol and abs(v.real - round(v.real)) <= tol


def _bessel_k_base(mu: complex, x: complex, cfg: EvalConfig) -> complex:
    """K_mu(x) for |Re mu| <= 1/2 + eps, Re(x) > 0."""
    if abs(x) <= _K_SERIES_CUTOFF:
        val, _, _, ok = kernels.besselk_temme(mu, x, 4 * cfg.max_series_terms,
                                              1e-16)
        if not ok:
            raise NonConvergence(f"K series stalled at mu={mu}, x={x}")
        return val
    val, _, _, ok = kernels.besselk_trap(mu, x, 1e-15,
                                         cfg.max_quad_levels + 4)
    if not ok:
        raise NonConvergence(f"K quadrature stalled at mu={mu}, x={x}")
    return val


def _bessel_k_base_pair(mu: complex, x: complex, cfg: EvalConfig):
    """(K_mu, K_{mu+1}) for |Re mu| <= 1/2."""
    if abs(x) <= _K_SERIES_CUTOFF:
        k0, k1, _, ok = kernels.besselk_temme(mu, x, 4 * cfg.max_series_terms,
                                              1e-16)
        if not ok:
            raise NonConvergence(f"K series stalled at mu={mu}, x={x}")
        return k0, k1
    return (_bessel_k_base(mu, x, cfg), _bessel_k_base(mu + 1.0, x, cfg))


def bessel_K(nu, x, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Modified Bessel function of the second kind, complex order.

    Valid for |arg x| < pi/2. Integer orders are reached smoothly (the
    small-argument scheme has explicit limits, the large-argument scheme
    never sees the order reflection), so no perturbation is needed.
    """
    nu = _as_complex(nu)
    x = _as_complex(x)
    if x == 0 or abs(cmath.phase(x)) >= math.pi / 2:
        raise DomainError(f"bessel_K needs |arg x| < pi/2, got x={x}")
    if nu.real < 0:
        nu = -nu  # K is even in its order
    m = round(nu.real)
    mu = nu - m
    k0, k1 = _bessel_k_base_pair(mu, x, cfg)
    if m == 0:
        return k0
    for j in range(1, m):
        k0, k1 = k1, k0 + (2.0 * (mu + j) / x) * k1
    return k1


def bessel_K_orders(nu0, x, jmin: int, jmax: int,
                    cfg: EvalConfig = DEFAULT_CONFIG):
    """[K_{nu0+j}(x) for j in jmin..jmax] via the three-term recurrence.

    Two base evaluations at reduced order anchor an upward recurrence
    (stable: |K| grows with |Re order| in both directions from the base).
    """
    nu0 = _as_complex(nu0)
    x = _as_complex(x)
    if x == 0 or abs(cmath.phase(x)) >= math.pi / 2:
        raise DomainError(f"bessel_K needs |arg x| < pi/2, got x={x}")
    m0 = round(nu0.real)
    mu = nu0 - m0
    k0, k1 = _bessel_k_base_pair(mu, x, cfg)
    lo = m0 + jmin
    hi = m0 + jmax
    vals = {0: k0, 1: k1}
    a, b = k0, k1
    for k in range(1, hi):
        a, b = b, a + (2.0 * (mu + k) / x) * b
        vals[k + 1] = b
    a, b = k1, k0
    for k in range(0, -lo):
        # downward: K_{mu-k-1} = K_{mu-k+1} - (2(mu-k)/x) K_{mu-k}
        a, b = b, a - (2.0 * (mu - k) / x) * b
        vals[-k - 1] = b
    return [vals[j + m0] for j in range(jmin, jmax + 1)]


def bessel_I(nu, x, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Modified Bessel function of the first kind; |arg x| < pi."""
    nu = _as_complex(nu)
    x = _as_complex(x)
    if x != 0 and abs(cmath.phase(x)) >= math.pi:
        raise DomainError("bessel_I needs |arg x| < pi")
    if _near_int(nu, _INT_POLE_TOL) and nu.real < 0:
        nu = -nu  # I_{-n} = I_n
    if x.imag == 0 and x.real > _SERIES_CUTOFF:
        val, _ = kernels.besseli_asym(nu, x.real)
        return val
    val, _, ok = kernels.besseli_series(nu, x, 4 * cfg.max_series_terms,
                                        1e-16)
    if not ok:
        raise NonConvergence(f"I series cap exhausted at nu={nu}, x={x}")
    return val


def bessel_J(nu, x, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Bessel function of the first kind for real x > 0 (x = 0 allowed)."""
    nu = _as_complex(nu)
    xc = _as_complex(x)
    if xc.imag != 0 or xc.real < 0:
        raise DomainError("bessel_J is restricted to real x >= 0")
    xr = xc.real
    if xr == 0:
        if abs(nu) < 1e-14:
            return 1.0 + 0.0j
        if nu.real > 0 or _near_int(nu, _INT_POLE_TOL):
            return 0.0 + 0.0j
        raise DomainError("bessel_J diverges at x=0 for Re(nu) < 0")
    neg_int = _near_int(nu, _INT_POLE_TOL) and nu.real < 0
    if neg_int:
        nu = -nu
    if xr > _SERIES_CUTOFF:
        val, _, _ = kernels.besseljy_asym(nu, xr)
    else:
        val, _, ok = kernels.besselj_series(nu, xc, 4 * cfg.max_series_terms,
                                            1e-16)
        if not ok:
            raise NonConvergence(f"J series cap exhausted at nu={nu}, x={x}")
    if neg_int and (round(nu.real) & 1):
        val = -val  # J_{-n} = (-1)^n J_n
    return val


def _bessel_y_from_j(nu: complex, xr: float, cfg: EvalConfig) -> complex:
    jp = bessel_J(nu, xr, cfg)
    jm = bessel_J(-nu, xr, cfg)
    return (jp * cospi(nu) - jm) / sinpi(nu)


def bessel_Y(nu, x, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Bessel function of the second kind for real x > 0.

    Near-integer orders are evaluated as the two-sided average of the
    order perturbed by +-1e-5, a Richardson-style limit of the
    (J cos - J_{-nu})/sin assembly.
    """
    nu = _as_complex(nu)
    xc = _as_complex(x)
    if xc.imag != 0 or xc.real <= 0:
        raise DomainError("bessel_Y is restricted to real x > 0")
    xr = xc.real
    if xr > _SERIES_CUTOFF:
        _, val, _ = kernels.besseljy_asym(nu, xr)
        return val
    if _near_int(nu, _ORDER_LIMIT_WINDOW):
        n = round(nu.real)
        h = _ORDER_LIMIT_STEP

        def avg(step: float) -> complex:
            return 0.5 * (_bessel_y_from_j(n + step, xr, cfg)
                          + _bessel_y_from_j(n - step, xr, cfg))

        coarse = avg(h)
        fine = avg(0.5 * h)
        return (4.0 * fine - coarse) / 3.0
    return _bessel_y_from_j(nu, xr, cfg)


def bessel_k_half_integer(n: int, y) -> complex:
    """K_{n+1/2}(y) by its finite closed form (n >= 0 integer)."""
    y = _as_complex(y)
    acc = 0.0 + 0.0j
    c = 1.0 + 0.0j
    for k in range(n + 1):
        acc += c
        c *= (n + k + 1) * (n - k) / (2.0 * (k + 1) * y)
    return cmath.sqrt(math.pi / (2.0 * y)) * cmath.exp(-y) * acc


# ---------------------------------------------------------------------------
# Koshliakov kernel

@dataclass
class KernelSample:
    """Kernel value at (z, u) with its two sub-terms for diagnostics.

    value = m_part - j_part where m_part = cos(pi z) M_{2z}(4 sqrt(u)),
    j_part = sin(pi z) J_{2z}(4 sqrt(u)), M_v = (2/pi) K_v - Y_v.
    """

    z: complex
    u: float
    value: complex
    m_part: complex
    j_part: complex


def koshliakov_kernel(z, u, cfg: EvalConfig = DEFAULT_CONFIG) -> KernelSample:
    """The self-reciprocality kernel cos(pi z) M_{2z} - sin(pi z) J_{2z}
    at argument 4 sqrt(u); requires -1/2 < Re(z) < 1/2 and u > 0."""
    z = _as_complex(z)
    if not (-0.5 < z.real < 0.5):
        raise DomainError(f"kernel needs -1/2 < Re(z) < 1/2, got z={z}")
    u = float(u)
    if u <= 0:
        raise DomainError("kernel argument u must be positive")
    v = 4.0 * math.sqrt(u)
    two_z = 2.0 * z
    m_val = (2.0 / math.pi) * bessel_K(two_z, v, cfg) - bessel_Y(two_z, v, cfg)
    j_val = bessel_J(two_z, v, cfg)
    m_part = cospi(z) * m_val
    j_part = sinpi(z) * j_val
    return KernelSample(z=z, u=u, value=m_part - j_part,
                        m_part=m_part, j_part=j_part)


# ---------------------------------------------------------------------------
# Riemann zeta

def _zeta_weight_count(s: complex) -> int:
    t = abs(s.imag)
    sigma = s.real
    n = (math.pi / 2.0 * t + 42.0 + 2.0 * max(0.0, 0.5 - sigma)) / 1.7627
    n = int(n) + 12
    return max(24, 4 * ((n + 3) // 4))


def zeta(s) -> complex:
    """Riemann zeta via the accelerated alternating series.

    The series handles Re(s) > -2 directly; elsewhere (and near the
    removable zeros of 1 - 2^{1-s}) the functional equation maps the
    argument into the well-conditioned half-plane. Target accuracy is
    1e-12 relative for |Im s| <= 60.
    """
    s = _as_complex(s)
    if abs(s - 1.0) <= _INT_POLE_TOL:
        raise PoleError("zeta pole at s=1")
    if s.real > -2.0 and abs(1.0 - 2.0 ** (1.0 - s)) > 0.5:
        return kernels.zeta_raw(s, _zeta_weight_count(s))
    # reflection: zeta(s) = pi^{s-1/2} G((1-s)/2) / G(s/2) zeta(1-s),
    # with 1/G(s/2) expanded so the trivial zeros come out exact
    s1 = 1.0 - s
    z1 = kernels.zeta_raw(s1, _zeta_weight_count(s1))
    pref = cmath.exp((s - 0.5) * math.log(math.pi))
    return (pref * kernels.gamma((1.0 - s) / 2.0)
            * kernels.rgamma(s / 2.0) * z1)


# ---------------------------------------------------------------------------
# divisor sums

def sigma_divisor(n: int, z) -> complex:
    """sum over divisors d|n of d^{-z}, by trial division up to sqrt(n)."""
    if n < 1 or n != int(n):
        raise DomainError("sigma_divisor needs an integer n >= 1")
    n = int(n)
    z = _as_complex(z)
    total = 0.0 + 0.0j
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += cmath.exp(-z * math.log(d)) if d > 1 else 1.0
            q = n // d
            if q != d:
                total += cmath.exp(-z * math.log(q))
        d += 1
    return total


def divisor_count(n: int) -> int:
    """d(n), the number of divisors."""
    return round(sigma_divisor(n, 0.0).real)
