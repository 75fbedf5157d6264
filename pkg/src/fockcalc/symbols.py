"""Canonical algebra of polynomial-times-exponential symbols on C^n.

A term denotes the function

    z |-> coef * z^a * conj(z)^b * exp(z.c + conj(z).d)

with z.c = sum_k z_k c_k bilinear (no conjugation).  A Symbol is a finite
canonical sum of such terms.  The class is closed under products, Wirtinger
derivatives, conjugation, argument shifts and every operator computed by
this package, which is what makes all the operator identities exactly
checkable.

Holomorphic symbols are plain Symbols whose terms all have b = 0 and d = 0
(`is_holomorphic`); operations that only make sense there (shift, reflect)
enforce it at runtime.

Canonical form: terms with the same key (a, b, c, d) are merged, where the
exponential parameters c, d compare with an absolute tolerance of 1e-9 so
that float noise like c + c' - c' re-merges with c; coefficients whose
modulus falls below 1e-12 * max(1, largest modulus) are dropped; terms are
ordered graded-lex on (a, b), then lexicographically on the real/imaginary
parts of (c, d).  The zero symbol is the empty term list.

Only this closed class is representable: no power series, no essential
singularities.  General symbols of at-most-Gaussian growth exist beyond it,
but every formula the package verifies restricts exactly to this class.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable

from .indices import MultiIndex, as_multi_index

#: absolute tolerance for grouping exponential parameters into one term key
PARAM_TOL = 1e-9

#: relative floor below which merged coefficients are dropped
COEF_FLOOR = 1e-12

ComplexVector = tuple[complex, ...]


@dataclass(frozen=True)
class SymbolTerm:
    """One canonical term coef * z^a * conj(z)^b * exp(z.c + conj(z).d)."""

    coef: complex
    a: MultiIndex
    b: MultiIndex
    c: ComplexVector
    d: ComplexVector

    @property
    def degree(self) -> int:
        return sum(self.a) + sum(self.b)

    @property
    def is_holomorphic(self) -> bool:
        return all(k == 0 for k in self.b) and all(x == 0 for x in self.d)


def _as_cvector(v, n: int) -> ComplexVector:
    if v is None:
        return (0j,) * n
    t = tuple(complex(x) for x in v)
    if len(t) != n:
        raise ValueError(f"expected a length-{n} complex vector, got length {len(t)}")
    return t


def _vec_close(u: ComplexVector, v: ComplexVector) -> bool:
    return all(abs(x - y) <= PARAM_TOL for x, y in zip(u, v))


def _vec_sort_key(v: ComplexVector):
    return tuple(p for x in v for p in (x.real, x.imag))


def _term_sort_key(entry):
    a, b, c, d = entry
    return (
        sum(a) + sum(b),
        tuple(-k for k in a),
        tuple(-k for k in b),
        _vec_sort_key(c),
        _vec_sort_key(d),
    )


def _canonicalize(n: int, raw: Iterable[SymbolTerm]) -> tuple[SymbolTerm, ...]:
    # Phase 1: exact-key merge (cheap, catches the common case of identical
    # float parameters).
    exact: dict[tuple, complex] = {}
    for t in raw:
        if len(t.a) != n or len(t.b) != n or len(t.c) != n or len(t.d) != n:
            raise ValueError(f"term dimension mismatch (expected n={n}): {t}")
        key = (t.a, t.b, t.c, t.d)
        exact[key] = exact.get(key, 0j) + complex(t.coef)

    # Phase 2: cluster keys whose exponential parameters agree within
    # PARAM_TOL componentwise.  Keys are visited in sorted order, so the
    # group representative (first-seen key) is deterministic.
    groups: list[list] = []  # [a, b, c, d, coef]
    by_ab: dict[tuple, list[int]] = {}
    for key in sorted(exact, key=_term_sort_key):
        a, b, c, d = key
        coef = exact[key]
        merged = False
        for gi in by_ab.get((a, b), ()):
            g = groups[gi]
            if _vec_close(g[2], c) and _vec_close(g[3], d):
                g[4] += coef
                merged = True
                break
        if not merged:
            by_ab.setdefault((a, b), []).append(len(groups))
            groups.append([a, b, c, d, coef])

    # Phase 3: drop coefficients below the relative floor.
    if not groups:
        return ()
    biggest = max(abs(g[4]) for g in groups)
    floor = COEF_FLOOR * max(1.0, biggest)
    terms = [
        SymbolTerm(g[4], g[0], g[1], g[2], g[3]) for g in groups if abs(g[4]) >= floor
    ]
    terms.sort(key=lambda t: _term_sort_key((t.a, t.b, t.c, t.d)))
    return tuple(terms)


class Symbol:
    """Finite canonical sum of polynomial-times-exponential terms on C^n.

    Immutable after construction; all operations return new symbols and are
    safe for unrestricted concurrent use.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Iterable[SymbolTerm] = ()):
        if n < 1:
            raise ValueError("dimension must be >= 1")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "terms", _canonicalize(int(n), terms))

    def __setattr__(self, name, value):
        raise AttributeError("Symbol is immutable")

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_holomorphic(self) -> bool:
        return all(t.is_holomorphic for t in self.terms)

    @property
    def is_constant(self) -> bool:
        return all(
            t.degree == 0 and all(x == 0 for x in t.c) and all(x == 0 for x in t.d)
            for t in self.terms
        )

    def degree(self) -> int:
        """Largest total monomial order; -1 for the zero symbol."""
        return max((t.degree for t in self.terms), default=-1)

    def constant_value(self) -> complex:
        """Value of a constant symbol (see is_constant)."""
        if not self.is_constant:
            raise ValueError("symbol is not constant")
        return sum((t.coef for t in self.terms), 0j)

    # -- ring structure ------------------------------------------------------

    def _check_dim(self, other: "Symbol") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = constant(self.n, other)
        if not isinstance(other, Symbol):
            return NotImplemented
        self._check_dim(other)
        return Symbol(self.n, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, (int, float, complex)):
            other = constant(self.n, other)
        if not isinstance(other, Symbol):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor: complex) -> "Symbol":
        factor = complex(factor)
        return Symbol(
            self.n,
            (SymbolTerm(t.coef * factor, t.a, t.b, t.c, t.d) for t in self.terms),
        )

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self.scale(other)
        if not isinstance(other, Symbol):
            return NotImplemented
        self._check_dim(other)
        raw = []
        for s in self.terms:
            for t in other.terms:
                raw.append(
                    SymbolTerm(
                        s.coef * t.coef,
                        tuple(x + y for x, y in zip(s.a, t.a)),
                        tuple(x + y for x, y in zip(s.b, t.b)),
                        tuple(x + y for x, y in zip(s.c, t.c)),
                        tuple(x + y for x, y in zip(s.d, t.d)),
                    )
                )
        return Symbol(self.n, raw)

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("symbol powers must be non-negative integers")
        out = constant(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    # -- conjugation and holomorphic-only maps --------------------------------

    def conj(self) -> "Symbol":
        """Pointwise complex conjugate: (coef,a,b,c,d) -> (coef*,b,a,d*,c*)."""
        return Symbol(
            self.n,
            (
                SymbolTerm(
                    t.coef.conjugate(),
                    t.b,
                    t.a,
                    tuple(x.conjugate() for x in t.d),
                    tuple(x.conjugate() for x in t.c),
                )
                for t in self.terms
            ),
        )

    def reflect(self) -> "Symbol":
        """conj(f(conj(z))): conjugates coefficients and exponential parameters.

        Holomorphic symbols only; the result is again holomorphic.
        """
        if not self.is_holomorphic:
            raise ValueError("reflect is defined for holomorphic symbols only")
        return Symbol(
            self.n,
            (
                SymbolTerm(
                    t.coef.conjugate(),
                    t.a,
                    t.b,
                    tuple(x.conjugate() for x in t.c),
                    t.d,
                )
                for t in self.terms
            ),
        )

    def shift(self, eta) -> "Symbol":
        """Argument shift z |-> z - eta for holomorphic symbols.

        Monomials expand by the binomial theorem; exp(z.c) picks up the
        constant factor exp(-eta.c).
        """
        if not self.is_holomorphic:
            raise ValueError("shift is defined for holomorphic symbols only")
        eta = _as_cvector(eta, self.n)
        zero = (0,) * self.n
        czero = (0j,) * self.n
        raw = []
        for t in self.terms:
            base = t.coef * cmath.exp(-sum(e * x for e, x in zip(eta, t.c)))
            # expand prod_k (z_k - eta_k)^{a_k}
            expansion = [(base, zero)]
            for k, ak in enumerate(t.a):
                if ak == 0:
                    continue
                nxt = []
                for coef, expo in expansion:
                    for j in range(ak + 1):
                        w = coef * math.comb(ak, j) * (-eta[k]) ** (ak - j)
                        if w == 0:
                            continue
                        e2 = list(expo)
                        e2[k] = j
                        nxt.append((w, tuple(e2)))
                expansion = nxt
            for coef, expo in expansion:
                raw.append(SymbolTerm(coef, expo, zero, t.c, czero))
        return Symbol(self.n, raw)

    def dz(self, k: int) -> "Symbol":
        """Wirtinger derivative d/dz_k (1-based k); conj(z) is a constant."""
        if not 1 <= k <= self.n:
            raise ValueError(f"coordinate index {k} out of range 1..{self.n}")
        i = k - 1
        raw = []
        for t in self.terms:
            if t.a[i] > 0:
                a2 = list(t.a)
                a2[i] -= 1
                raw.append(SymbolTerm(t.coef * t.a[i], tuple(a2), t.b, t.c, t.d))
            if t.c[i] != 0:
                raw.append(SymbolTerm(t.coef * t.c[i], t.a, t.b, t.c, t.d))
        return Symbol(self.n, raw)

    # -- evaluation and size ---------------------------------------------------

    def eval(self, zeta) -> complex:
        """Numeric value at the point zeta in C^n."""
        zeta = _as_cvector(zeta, self.n)
        zbar = tuple(x.conjugate() for x in zeta)
        total = 0j
        for t in self.terms:
            v = t.coef
            for zk, ak in zip(zeta, t.a):
                if ak:
                    v *= zk**ak
            for wk, bk in zip(zbar, t.b):
                if bk:
                    v *= wk**bk
            ex = sum(z * c for z, c in zip(zeta, t.c)) + sum(
                w * d for w, d in zip(zbar, t.d)
            )
            if ex != 0:
                v *= cmath.exp(ex)
            total += v
        return total

    def __call__(self, zeta) -> complex:
        return self.eval(zeta)

    def coeff_norm(self) -> float:
        """Euclidean norm of the canonical coefficient vector."""
        return math.sqrt(sum(abs(t.coef) ** 2 for t in self.terms))

    # -- comparison / display ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Symbol):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.terms))

    def __repr__(self):
        return f"Symbol(n={self.n}, {len(self.terms)} terms)"

    def __str__(self):
        from . import dsl  # local import: dsl depends on this module

        return dsl.format_symbol(self)


# -- constructors ----------------------------------------------------------------


def zero(n: int) -> Symbol:
    return Symbol(n, ())


def constant(n: int, value: complex = 1) -> Symbol:
    value = complex(value)
    if value == 0:
        return zero(n)
    z = (0,) * n
    cz = (0j,) * n
    return Symbol(n, [SymbolTerm(value, z, z, cz, cz)])


def coordinate(n: int, k: int) -> Symbol:
    """The coordinate function z_k (1-based k)."""
    if not 1 <= k <= n:
        raise ValueError(f"coordinate index {k} out of range 1..{n}")
    a = tuple(1 if j == k - 1 else 0 for j in range(n))
    return monomial(n, a)


def monomial(n: int, a=None, coef: complex = 1, b=None) -> Symbol:
    """coef * z^a * conj(z)^b."""
    a = (0,) * n if a is None else as_multi_index(a)
    b = (0,) * n if b is None else as_multi_index(b)
    if len(a) != n or len(b) != n:
        raise ValueError("exponent length does not match dimension")
    cz = (0j,) * n
    return Symbol(n, [SymbolTerm(complex(coef), a, b, cz, cz)])


def exponential(n: int, c=None, d=None, coef: complex = 1) -> Symbol:
    """coef * exp(z.c + conj(z).d)."""
    z = (0,) * n
    return Symbol(
        n, [SymbolTerm(complex(coef), z, z, _as_cvector(c, n), _as_cvector(d, n))]
    )


def kernel(w) -> Symbol:
    """Reproducing kernel K_w: z |-> exp(z . conj(w))."""
    w = tuple(complex(x) for x in w)
    return exponential(len(w), c=tuple(x.conjugate() for x in w))


def relative_residual(s: Symbol, ref: Symbol) -> float:
    """Coefficient-norm of (s - ref), relative to max(1, coefficient-norm of ref)."""
    return (s - ref).coeff_norm() / max(1.0, ref.coeff_norm())
