"""Double-exponential (tanh-sinh) quadrature on finite intervals.

Nodes are stored as complements c = 1 - |t| so that points next to the
endpoints keep full relative accuracy. Each level halves the step and only
evaluates the new (odd) nodes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .mpcore import context


@dataclass(frozen=True)
class TSResult:
    value: object
    error: object  # |I_L - I_(L-1)|, a conservative estimate for I_L
    nodes: int
    level: int


@lru_cache(maxsize=None)
def _level_nodes(dps: int, level: int) -> tuple:
    """(complement, weight) pairs for the nodes first appearing at ``level``.

    Level 0 has step 1 and contains t = 0; level L >= 1 adds t = (2j-1)/2^L.
    The t = 0 node is returned as complement 1 with its weight.
    """
    ctx = context(dps)
    h = ctx.mpf(2) ** (-level)
    halfpi = ctx.pi / 2
    eps = ctx.mpf(10) ** (-dps - 5)
    out = []
    j = 0 if level == 0 else 1
    stride = 1 if level == 0 else 2
    while True:
        t = h * j
        u = halfpi * ctx.sinh(t)
        e = ctx.exp(-2 * u)
        comp = 2 * e / (1 + e)  # 1 - tanh(u)
        ch = ctx.cosh(u)
        w = halfpi * ctx.cosh(t) / (ch * ch)
        if j and (w < eps or comp < eps):
            break
        out.append((comp, w))
        j += stride
    return tuple(out)


def tanh_sinh(f, a, b, dps: int, abs_tol, max_level: int = 12) -> TSResult:
    """Integrate f over [a, b] (finite, a < b) to absolute tolerance abs_tol."""
    ctx = context(dps)
    a, b = ctx.mpf(a), ctx.mpf(b)
    half = (b - a) / 2
    total = ctx.zero
    prev = None
    nodes = 0
    err = ctx.inf
    for level in range(max_level + 1):
        acc = ctx.zero
        for comp, w in _level_nodes(dps, level):
            if comp == 1:
                acc += w * f(a + half)
                nodes += 1
            else:
                off = half * comp
                acc += w * (f(a + off) + f(b - off))
                nodes += 2
        total += acc
        est = total * half * ctx.mpf(2) ** (-level)
        if prev is not None:
            err = abs(est - prev)
            if err <= abs_tol and level >= 3:
                return TSResult(est, err, nodes, level)
        prev = est
    return TSResult(prev, err, nodes, max_level)
