"""Shared quadrature machinery.

Three schemes cover everything in the package:

* composite Gauss-Legendre with panel doubling (smooth integrands on a
  finite interval; error estimated from successive refinement levels);
* trapezoidal sums under double-exponential maps (endpoint algebraic
  singularities, semi-infinite exponential decay);
* half-period summation with repeated averaging for slowly decaying
  oscillatory tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from numpy.polynomial.legendre import leggauss


@dataclass
class QuadResult:
    value: complex
    err: float
    work: int
    converged: bool


@lru_cache(maxsize=8)
def _gl_nodes(n: int):
    xs, ws = leggauss(n)
    return tuple(xs.tolist()), tuple(ws.tolist())


def gl_fixed(f: Callable[[float], complex], a: float, b: float,
             npanels: int, order: int = 16) -> complex:
    """Composite Gauss-Legendre with npanels equal panels."""
    xs, ws = _gl_nodes(order)
    h = (b - a) / npanels
    total = 0.0 + 0.0j
    for i in range(npanels):
        mid = a + (i + 0.5) * h
        half = 0.5 * h
        acc = 0.0 + 0.0j
        for x, w in zip(xs, ws):
            acc += w * f(mid + half * x)
        total += acc * half
    return total


def adaptive_gl(f: Callable[[float], complex], a: float, b: float,
                rel_tol: float, abs_tol: float, max_levels: int,
                order: int = 16, n0: int = 1) -> QuadResult:
    """Panel-doubling Gauss-Legendre; err from the last refinement step."""
    npanels = n0
    val = gl_fixed(f, a, b, npanels, order)
    work = npanels * order
    err = abs(val) + abs_tol
    for _ in range(max_levels):
        npanels *= 2
        new = gl_fixed(f, a, b, npanels, order)
        work += npanels * order
        err = abs(new - val)
        val = new
        if err <= max(rel_tol * abs(val), abs_tol):
            return QuadResult(val, err, work, True)
    return QuadResult(val, err, work, False)


def dyadic_gl(f: Callable[[float], complex], a: float, b: float,
              rel_tol: float, abs_tol: float, max_levels: int,
              splits: int = 40, order: int = 16) -> QuadResult:
    """Adaptive GL on [a,b] with dyadic subdivision toward the endpoint a.

    Handles integrable algebraic/log behaviour at a: each dyadic piece
    [a + (b-a)/2^{k+1}, a + (b-a)/2^k] sees an analytic integrand.
    """
    total = 0.0 + 0.0j
    err = 0.0
    work = 0
    ok = True
    width = b - a
    hi = b
    for k in range(splits):
        lo = a + width / 2.0 ** (k + 1)
        r = adaptive_gl(f, lo, hi, rel_tol, abs_tol / (k + 2) ** 2,
                        max_levels, order=order)
        total += r.value
        err += r.err
        work += r.work
        ok = ok and r.converged
        hi = lo
        if abs(r.value) < abs_tol and k > 4:
            break
    return QuadResult(total, err, work, ok)


def trap_doubling(g: Callable[[float], complex], a: float, b: float,
                  rel_tol: float, abs_tol: float, max_levels: int,
                  n0: int = 16) -> QuadResult:
    """Trapezoid sums on [a,b] with halving; nodes nest between levels."""
    h = (b - a) / n0
    acc = 0.5 * (g(a) + g(b))
    for k in range(1, n0):
        acc += g(a + k * h)
    val = acc * h
    work = n0 + 1
    err = abs(val) + abs_tol
    n = n0
    for _ in range(max_levels):
        h *= 0.5
        n *= 2
        add = 0.0 + 0.0j
        for k in range(1, n, 2):
            add += g(a + k * h)
        work += n // 2
        new = 0.5 * val + h * add
        err = abs(new - val)
        val = new
        if err <= max(rel_tol * abs(val), abs_tol):
            return QuadResult(val, err, work, True)
    return QuadResult(val, err, work, False)


def de_exp_decay_0inf(f: Callable[[float], complex], sing_power: float,
                      decay_rate: float, rel_tol: float, abs_tol: float,
                      max_levels: int) -> QuadResult:
    """Integral of f over (0, inf) via the map t = exp(u - exp(-u)).

    Requirements: f(t) ~ t^sigma near 0 with Re(sigma) = sing_power > -1,
    and |f(t)| <~ exp(-decay_rate * t) for large t. Both tails of the
    transformed integrand then decay double-exponentially.
    """
    s1 = sing_power + 1.0
    if s1 <= 0:
        raise ValueError("endpoint power must exceed -1")
    # u -> -inf: |f t du| ~ exp(-s1 * exp(-u));  u -> +inf: exp(-rate e^u)
    u_lo = -math.log(46.0 / s1)
    u_hi = math.log(46.0 / max(decay_rate, 1e-8)) + 1.0
    u_hi = max(u_hi, 1.0)

    def g(u: float) -> complex:
        t = math.exp(u - math.exp(-u))
        if t == 0.0 or t == math.inf:
            return 0.0 + 0.0j
        return f(t) * t * (1.0 + math.exp(-u))

    return trap_doubling(g, u_lo, u_hi, rel_tol, abs_tol, max_levels)


def euler_accelerated_sum(terms: Sequence[complex]):
    """Sum of an alternating-tail sequence by repeated averaging.

    `terms` are the signed half-period contributions; returns (value,
    err_estimate). The averaging table is built over the last portion of
    the sequence, the head is summed directly.
    """
    n = len(terms)
    if n == 0:
        return 0.0 + 0.0j, 0.0
    tail = min(n, 24)
    head = n - tail
    base = sum(terms[:head], 0.0 + 0.0j)
    # partial sums of the tail
    row = []
    acc = 0.0 + 0.0j
    for t in terms[head:]:
        acc += t
        row.append(acc)
    prev_est = row[-1]
    est = prev_est
    while len(row) > 1:
        row = [0.5 * (row[i] + row[i + 1]) for i in range(len(row) - 1)]
        prev_est = est
        est = row[-1]
    return base + est, abs(est - prev_est) + abs(terms[-1]) * 2.0 ** (1 - tail)


def oscillatory_halfperiods(f: Callable[[float], complex], start: float,
                            half_period: float, cap: int, rel_tol: float,
                            abs_tol: float, order: int = 12):
    """Integrate f over [start, inf) when f alternates sign half-period-wise.

    Sums successive half-period panels by fixed Gauss-Legendre and feeds
    them to the averaging accelerator, extending until the tail estimate
    passes tolerance or the period cap is hit. Returns QuadResult.
    """
    xs, ws = _gl_nodes(order)
    terms = []
    work = 0

    def panel(k: int) -> complex:
        a = start + k * half_period
        mid = a + 0.5 * half_period
        half = 0.5 * half_period
        acc = 0.0 + 0.0j
        for x, w in zip(xs, ws):
            acc += w * f(mid + half * x)
        return acc * half

    value = 0.0 + 0.0j
    err = math.inf
    batch = 16
    k = 0
    while k < cap:
        for _ in range(batch):
            if k >= cap:
                break
            terms.append(panel(k))
            work += order
            k += 1
        value, err = euler_accelerated_sum(terms)
        if err <= max(rel_tol * abs(value), abs_tol):
            return QuadResult(value, err, work, True)
    return QuadResult(value, err, work, False)
