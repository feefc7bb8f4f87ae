"""Dense univariate polynomials over Q, plus Sturm-sequence root counting.

Polynomials are tuples of Fractions in ascending degree order with no
trailing zeros; the zero polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction


def poly(coeffs) -> tuple:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(p: tuple) -> int:
    return len(p) - 1


def padd(a: tuple, b: tuple) -> tuple:
    n = max(len(a), len(b))
    return poly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def pneg(a: tuple) -> tuple:
    return tuple(-c for c in a)


def psub(a: tuple, b: tuple) -> tuple:
    return padd(a, pneg(b))


def pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return poly(out)


def pscale(a: tuple, c) -> tuple:
    c = Fraction(c)
    if c == 0:
        return ()
    return tuple(ai * c for ai in a)


def pdivmod(a: tuple, b: tuple) -> tuple:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    db, lb = degree(b), b[-1]
    while len(r) - 1 >= db and any(c != 0 for c in r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        k = len(r) - 1 - db
        f = r[-1] / lb
        q[k] = f
        for i in range(len(b)):
            r[k + i] -= f * b[i]
        r.pop()
    return poly(q), poly(r)


def pmod(a: tuple, b: tuple) -> tuple:
    return pdivmod(a, b)[1]


def pmonic(a: tuple) -> tuple:
    if not a:
        return ()
    return tuple(c / a[-1] for c in a)


def pderiv(a: tuple) -> tuple:
    return poly([i * a[i] for i in range(1, len(a))])


def peval(a: tuple, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pgcd(a: tuple, b: tuple) -> tuple:
    while b:
        a, b = b, pmod(a, b)
    return pmonic(a)


def pxgcd(a: tuple, b: tuple) -> tuple:
    """Return (g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = poly([1]), ()
    t0, t1 = (), poly([1])
    while r1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
        t0, t1 = t1, psub(t0, pmul(q, t1))
    if not r0:
        return (), s0, t0
    lead = r0[-1]
    inv = 1 / lead
    return pmonic(r0), pscale(s0, inv), pscale(t0, inv)


def is_squarefree(p: tuple) -> bool:
    return degree(pgcd(p, pderiv(p))) <= 0


def peval_interval(a: tuple, lo: Fraction, hi: Fraction) -> tuple:
    """Exact range bounds of a over [lo, hi] by interval Horner."""
    mn, mx = Fraction(0), Fraction(0)
    for c in reversed(a):
        cands = (mn * lo, mn * hi, mx * lo, mx * hi)
        mn, mx = min(cands) + c, max(cands) + c
    return mn, mx


def sturm_chain(p: tuple) -> list:
    chain = [p, pderiv(p)]
    while chain[-1]:
        nxt = pneg(pmod(chain[-2], chain[-1]))
        if not nxt:
            break
        chain.append(nxt)
    return [c for c in chain if c]


def _sign_changes(vals) -> int:
    signs = [1 if v > 0 else -1 for v in vals if v != 0]
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def count_roots(p: tuple, lo, hi, chain=None) -> int:
    """Number of distinct real roots of squarefree p in (lo, hi]; requires p(lo) != 0."""
    lo, hi = Fraction(lo), Fraction(hi)
    if chain is None:
        chain = sturm_chain(p)
    va = _sign_changes([peval(c, lo) for c in chain])
    vb = _sign_changes([peval(c, hi) for c in chain])
    return va - vb
