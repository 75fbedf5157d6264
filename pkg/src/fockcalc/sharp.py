"""The sharp product: apply g-reflected in (conj(z) - d/dz) to f.

For holomorphic f and g this builds the unique symbol u with Berezin
transform f * conj(g); it is also the exact symbol of the operator
product T_f T_conj(g).

Per g-term gamma * w^i * exp(w.r), the operator factorizes as

    conj(gamma) * (zbar - D)^i * exp((zbar - D) . conj(r))

where D is the Wirtinger z-derivative and zbar the multiplication by
conj(z).  All the operator components commute, so

  * the exponential factor acts first as exp(zbar.conj(r)) times the
    argument shift z |-> z - conj(r), and
  * (zbar - D)^i expands by the commuting-binomial identity
    sum_{l <= i} C(i,l) zbar^l (-D)^{i-l}.

Inputs that are sums apply termwise; sums of pairs (f_l, g_l) are handled
by caller-side linearity.
"""

from __future__ import annotations

from itertools import product

from .indices import mi_binomial, mi_order
from .symbols import Symbol, exponential, monomial


def _partials_upto(base: Symbol, i) -> dict:
    """All Wirtinger derivatives d^m base for m <= i componentwise."""
    n = base.n
    zero = (0,) * n
    out = {zero: base}
    for m in product(*(range(k + 1) for k in i)):
        if m == zero:
            continue
        j = next(idx for idx, mj in enumerate(m) if mj > 0)
        prev = list(m)
        prev[j] -= 1
        out[m] = out[tuple(prev)].dz(j + 1)
    return out


def sharp(f: Symbol, g: Symbol) -> Symbol:
    """Sharp product of holomorphic symbols: g-reflected(conj(z) - D) applied to f."""
    if f.n != g.n:
        raise ValueError(f"dimension mismatch: {f.n} vs {g.n}")
    if not (f.is_holomorphic and g.is_holomorphic):
        raise ValueError("sharp is defined for holomorphic symbols only")
    n = f.n
    out = Symbol(n)
    for gt in g.terms:
        gamma = gt.coef.conjugate()
        i = gt.a
        q = tuple(x.conjugate() for x in gt.c)
        # exponential factor: exp(zbar.q) times the shift z |-> z - q
        base = f.shift(q) * exponential(n, d=q)
        partials = _partials_upto(base, i)
        acc = Symbol(n)
        for l in product(*(range(k + 1) for k in i)):
            m = tuple(ik - lk for ik, lk in zip(i, l))
            sign = -1 if mi_order(m) % 2 else 1
            weight = sign * mi_binomial(i, l)
            acc = acc + monomial(n, b=l, coef=weight) * partials[m]
        out = out + acc.scale(gamma)
    return out
