"""Exact sparse polynomials in the three commuting variables q, t, u.

Only the t-degree is capped: every operation silently discards terms whose
t-exponent exceeds the cap, while q- and u-exponents stay exact.  Both sides
of the identity this package verifies have finite q,u content at each
t-degree, so truncating in t alone is enough to make equality testing exact.

Coefficients are integers kept inside the signed 64-bit range; an operation
that would leave that range raises CoefficientOverflowError instead of
wrapping or growing silently.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import NamedTuple

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class CoefficientOverflowError(OverflowError):
    """A coefficient left the signed 64-bit range."""


class Monomial(NamedTuple):
    """Exponent triple q^q * t^t * u^u."""

    q: int
    t: int
    u: int

    def key(self) -> tuple[int, int, int]:
        """Canonical sort key: lexicographic by (t, q, u)."""
        return (self.t, self.q, self.u)


def _checked(coeff: int) -> int:
    if coeff < INT64_MIN or coeff > INT64_MAX:
        raise CoefficientOverflowError(
            f"coefficient {coeff} outside signed 64-bit range"
        )
    return coeff


class TruncatedPoly:
    """A polynomial in q, t, u with integer coefficients, truncated in t.

    Values are immutable after construction and stored canonically (zero
    coefficients purged, every t-exponent <= t_cap), so ``==`` is structural
    equality.  Two polynomials can be combined only at equal t_cap.

    >>> q_integer(3, 5)
    <TruncatedPoly cap=5: 1 + q + q^2>
    >>> p = TruncatedPoly(2, {Monomial(1, 1, 0): 1}) + 1
    >>> p * p
    <TruncatedPoly cap=2: 1 + 2*q*t + q^2*t^2>
    >>> p ** 3                                  # t^3 falls past the cap
    <TruncatedPoly cap=2: 1 + 3*q*t + 3*q^2*t^2>
    """

    __slots__ = ("t_cap", "_terms")

    def __init__(
        self, t_cap: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()
    ):
        if t_cap < 0:
            raise ValueError(f"t_cap must be nonnegative, got {t_cap}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        canonical: dict[Monomial, int] = {}
        for mon, coeff in items:
            mon = Monomial(*mon)
            if mon.q < 0 or mon.t < 0 or mon.u < 0:
                raise ValueError(f"negative exponent in {mon}")
            if mon.t > t_cap or coeff == 0:
                continue
            canonical[mon] = _checked(canonical.get(mon, 0) + coeff)
        canonical = {m: c for m, c in canonical.items() if c != 0}
        object.__setattr__(self, "t_cap", t_cap)
        object.__setattr__(self, "_terms", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedPoly is immutable")

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        """Copy of the term map (monomial -> nonzero coefficient)."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, q: int = 0, t: int = 0, u: int = 0) -> int:
        return self._terms.get(Monomial(q, t, u), 0)

    def t_slice(self, k: int) -> TruncatedPoly:
        """The terms with t-exponent exactly k, as a polynomial."""
        return TruncatedPoly(self.t_cap, {m: c for m, c in self._terms.items() if m.t == k})

    def evaluate(self, q: int = 1, t: int = 1, u: int = 1) -> int:
        """Exact integer evaluation (checked against the coefficient range)."""
        total = 0
        for mon, coeff in self._terms.items():
            total = _checked(total + coeff * q**mon.q * t**mon.t * u**mon.u)
        return total

    def truncate(self, new_cap: int) -> TruncatedPoly:
        """Re-truncate to a smaller (or equal) cap."""
        if new_cap > self.t_cap:
            raise ValueError(f"cannot raise t_cap from {self.t_cap} to {new_cap}")
        return TruncatedPoly(new_cap, self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda item: item[0].key())

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> TruncatedPoly:
        if isinstance(other, TruncatedPoly):
            if other.t_cap != self.t_cap:
                raise ValueError(f"t_cap mismatch: {self.t_cap} vs {other.t_cap}")
            return other
        if isinstance(other, int):
            return TruncatedPoly(self.t_cap, {Monomial(0, 0, 0): other})
        return NotImplemented

    def __add__(self, other) -> TruncatedPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for mon, coeff in other._terms.items():
            out[mon] = _checked(out.get(mon, 0) + coeff)
        return TruncatedPoly(self.t_cap, out)

    __radd__ = __add__

    def __neg__(self) -> TruncatedPoly:
        return TruncatedPoly(self.t_cap, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> TruncatedPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> TruncatedPoly:
        return (-self) + other

    def __mul__(self, other) -> TruncatedPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        cap = self.t_cap
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                t = m1.t + m2.t
                if t > cap:
                    continue
                mon = Monomial(m1.q + m2.q, t, m1.u + m2.u)
                out[mon] = _checked(out.get(mon, 0) + _checked(c1 * c2))
        return TruncatedPoly(cap, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> TruncatedPoly:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {e}")
        result = TruncatedPoly.one(self.t_cap)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self.t_cap == other.t_cap and self._terms == other._terms

    __hash__ = None  # mutable-dict-backed; equality is structural

    # -- construction helpers -----------------------------------------------

    @classmethod
    def zero(cls, t_cap: int) -> TruncatedPoly:
        return cls(t_cap)

    @classmethod
    def one(cls, t_cap: int) -> TruncatedPoly:
        return cls(t_cap, {Monomial(0, 0, 0): 1})

    @classmethod
    def term(cls, t_cap: int, coeff: int, q: int = 0, t: int = 0, u: int = 0) -> TruncatedPoly:
        return cls(t_cap, {Monomial(q, t, u): coeff})

    # -- display ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mon, coeff in self.sorted_terms():
            factors = []
            for name, exp in (("q", mon.q), ("t", mon.t), ("u", mon.u)):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            body = "*".join(factors)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not parts:
                parts.append(text if coeff > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"<TruncatedPoly cap={self.t_cap}: {self}>"


# -- q/u-integers and the identity's building blocks -------------------------


def q_integer(n: int, cap: int) -> TruncatedPoly:
    """[n]_q = 1 + q + ... + q^(n-1), the zero polynomial when n = 0."""
    if n < 0:
        raise ValueError(f"q-integer index must be nonnegative, got {n}")
    return TruncatedPoly(cap, {Monomial(j, 0, 0): 1 for j in range(n)})


def u_integer(n: int, cap: int) -> TruncatedPoly:
    """[n]_u = 1 + u + ... + u^(n-1), the zero polynomial when n = 0."""
    if n < 0:
        raise ValueError(f"u-integer index must be nonnegative, got {n}")
    return TruncatedPoly(cap, {Monomial(0, 0, j): 1 for j in range(n)})


def expand_denominator(n: int, cap: int) -> TruncatedPoly:
    """Power-series expansion of prod_{j=0}^{n} 1/(1 - q^j t) up to t^cap.

    Each factor expands to the geometric series sum_m q^(jm) t^m, and the
    product is taken with ordinary truncated multiplication.

    >>> expand_denominator(1, 2)
    <TruncatedPoly cap=2: 1 + t + q*t + t^2 + q*t^2 + q^2*t^2>
    """
    if n < 1:
        raise ValueError(f"need a positive number of variables, got n={n}")
    result = TruncatedPoly.one(cap)
    for j in range(n + 1):
        geometric = TruncatedPoly(cap, {Monomial(j * m, m, 0): 1 for m in range(cap + 1)})
        result = result * geometric
    return result


def lhs_term(r: int, n: int, k: int, cap: int) -> TruncatedPoly:
    """The height-k summand ([k+1]_q + u [r-1]_u [k]_q)^n * t^k."""
    if r < 1 or n < 1:
        raise ValueError(f"r and n must be positive, got r={r}, n={n}")
    if k < 0 or k > cap:
        raise ValueError(f"k must lie in [0, cap], got k={k}, cap={cap}")
    colored = TruncatedPoly.term(cap, 1, u=1) * u_integer(r - 1, cap) * q_integer(k, cap)
    base = q_integer(k + 1, cap) + colored
    return base**n * TruncatedPoly.term(cap, 1, t=k)


def first_difference(a: TruncatedPoly, b: TruncatedPoly) -> tuple[Monomial, int, int] | None:
    """The (t, q, u)-lexicographically first monomial where a and b differ.

    Returns (monomial, coeff_in_a, coeff_in_b), or None if the polynomials
    are equal.  Used to build deterministic counterexamples.
    """
    if a.t_cap != b.t_cap:
        raise ValueError(f"t_cap mismatch: {a.t_cap} vs {b.t_cap}")
    a_terms, b_terms = a.terms, b.terms
    for mon in sorted(set(a_terms) | set(b_terms), key=Monomial.key):
        ca, cb = a_terms.get(mon, 0), b_terms.get(mon, 0)
        if ca != cb:
            return mon, ca, cb
    return None


# -- interchange format -------------------------------------------------------


def to_records(p: TruncatedPoly) -> list[dict[str, int]]:
    """Serialize as records {"q","t","u","coeff"} sorted by (t, q, u).

    The sorted record list is the bit-exact interchange form used by the CLI.
    """
    return [
        {"q": mon.q, "t": mon.t, "u": mon.u, "coeff": coeff}
        for mon, coeff in p.sorted_terms()
    ]


def from_records(records: Iterable[Mapping[str, int]], t_cap: int) -> TruncatedPoly:
    return TruncatedPoly(
        t_cap, ((Monomial(r["q"], r["t"], r["u"]), r["coeff"]) for r in records)
    )
