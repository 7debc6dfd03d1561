"""Sparse multivariate polynomials over arbitrary-precision integers.

Variables are nonnegative integer indices; index i prints as "w{i+1}" by
default.  Monomials are stored as sorted tuples of (variable, exponent)
pairs with all exponents positive, so equal polynomials have identical
internal form.  Terms are ordered graded-lexicographically for printing
and for leading-term division.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

Monomial = tuple[tuple[int, int], ...]


class PolyError(Exception):
    pass


class DivisionByZero(PolyError):
    pass


class NotDivisible(PolyError):
    """Exact division was requested but the remainder is nonzero."""


def _normalize_mono(pairs: Iterable[tuple[int, int]]) -> Monomial:
    merged: dict[int, int] = {}
    for v, e in pairs:
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_key(m: Monomial):
    # Graded-lex: higher total degree first, then higher power on the
    # smallest variable.  Sorting ascending by this key puts the leading
    # term first.
    return (-_mono_degree(m), tuple((v, -e) for v, e in m))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    merged = dict(a)
    for v, e in b:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def _mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b, or None when b does not divide a."""
    rest = dict(a)
    for v, e in b:
        have = rest.get(v, 0)
        if have < e:
            return None
        if have == e:
            del rest[v]
        else:
            rest[v] = have - e
    return tuple(sorted(rest.items()))


class Polynomial:
    """Immutable element of Z[w_1, w_2, ...]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = c
        self._terms: dict[Monomial, int] = clean
        self._hash: int | None = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def const(c: int) -> "Polynomial":
        return Polynomial({(): c})

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial.const(1)

    @staticmethod
    def var(index: int) -> "Polynomial":
        if index < 0:
            raise ValueError("variable index must be >= 0")
        return Polynomial({((index, 1),): 1})

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> set[int]:
        return {v for m in self._terms for v, _ in m}

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(_mono_degree(m) for m in self._terms)

    def _leading(self) -> tuple[Monomial, int]:
        m = min(self._terms, key=_mono_key)
        return m, self._terms[m]

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return Polynomial(out)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def exact_div(self, q: "Polynomial") -> "Polynomial":
        """Quotient s with self = q * s; raises NotDivisible otherwise.

        Leading-term division in graded-lex order: over an integral
        domain the quotient's leading term is always LT(p)/LT(q), so the
        greedy loop terminates with zero remainder iff q divides p.
        """
        if q.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if self.is_zero():
            return Polynomial.zero()
        lt_q, lc_q = q._leading()
        rem = self
        quot: dict[Monomial, int] = {}
        while not rem.is_zero():
            lt_r, lc_r = rem._leading()
            m = _mono_div(lt_r, lt_q)
            if m is None or lc_r % lc_q != 0:
                raise NotDivisible(f"{q} does not divide {self}")
            c = lc_r // lc_q
            quot[m] = quot.get(m, 0) + c
            rem = rem - Polynomial({m: c}) * q
        return Polynomial(quot)

    # -- homomorphisms ------------------------------------------------

    def substitute(self, mapping: Mapping[int, "Polynomial"]) -> "Polynomial":
        """Ring homomorphism sending variable v to mapping[v] (identity
        on variables not in the mapping)."""
        out = Polynomial.zero()
        for m, c in self._terms.items():
            term = Polynomial.const(c)
            for v, e in m:
                img = mapping.get(v)
                if img is None:
                    img = Polynomial.var(v)
                term = term * img**e
            out = out + term
        return out

    def eval_mod(self, assignment: Mapping[int, int], modulus: int) -> int:
        """Value at an integer point, reduced modulo a prime."""
        total = 0
        for m, c in self._terms.items():
            val = c % modulus
            for v, e in m:
                val = val * pow(assignment[v] % modulus, e, modulus) % modulus
            total = (total + val) % modulus
        return total

    # -- formatting ---------------------------------------------------

    def to_string(self, name: Callable[[int], str] | None = None) -> str:
        """Canonical text form, e.g. "w1^2*w2 + 3*w5"."""
        if not self._terms:
            return "0"
        if name is None:
            name = lambda i: f"w{i + 1}"
        parts = []
        for m in sorted(self._terms, key=_mono_key):
            c = self._terms[m]
            factors = []
            for v, e in m:
                factors.append(name(v) if e == 1 else f"{name(v)}^{e}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            parts.append((c < 0, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for negative, body in parts[1:]:
            out += (" - " if negative else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()})"


def power_product(factors: Iterable[tuple[Polynomial, int]]) -> Polynomial:
    """Product of p_i^k_i; the empty product is 1."""
    out = Polynomial.one()
    for p, k in factors:
        if k:
            out = out * p**k
    return out
