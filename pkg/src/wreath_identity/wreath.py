"""Colored permutations, their window statistics, and group enumeration.

An element of Z_r wr S_n is a pair (epsilon, pi) displayed in window
notation [pi(1)^e1 ... pi(n)^en]: pi is a permutation of {1..n} written as
the tuple of its window values, and e_i is the color carried by window
position i.  Descents are taken with respect to the weak order on colored
letters realized by :func:`bz_sort_key`: zero-colored letters increase with
value, positive-colored letters sit strictly below the sentinel 0^0 and
decrease with value, and two positive-colored copies of the same value are
tied.  Position 0 of every window holds the sentinel 0^0, so a window can
have a descent at position 0.

Two color-indexing conventions coexist and must not be conflated:
:class:`ColoredPermutation` colors are indexed by window position, while
:class:`EpsilonVector` colors are indexed by letter.  The only crossing
point is :func:`colored_window` / :func:`g_epsilon`, which perform the
reindexing color_i = eps[pi(i)] explicitly.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
import re
from collections.abc import Iterator, Sequence

from .poly import Monomial, TruncatedPoly

LESS, EQUAL, GREATER = -1, 0, 1

DEFAULT_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured object budget."""


@dataclasses.dataclass(frozen=True)
class ColoredLetter:
    """A symbol value^color; value 0 only occurs as the sentinel 0^0."""

    value: int
    color: int

    def __post_init__(self):
        if self.value < 0 or self.color < 0:
            raise ValueError(f"value and color must be nonnegative: {self}")
        if self.value == 0 and self.color != 0:
            raise ValueError(f"value 0 must carry color 0: {self}")

    def __str__(self) -> str:
        return f"{self.value}^{self.color}"


def bz_sort_key(value: int, color: int) -> tuple[int, int]:
    """Sort key realizing the colored-letter order.

    Positive-colored letters form the lower block, ordered by decreasing
    value; zero-colored letters (sentinel 0^0 included) form the upper
    block, ordered by increasing value.  Equal keys mean tied letters.

    >>> bz_sort_key(3, 1) < bz_sort_key(2, 1) < bz_sort_key(0, 0) < bz_sort_key(2, 0)
    True
    """
    return (0, -value) if color > 0 else (1, value)


def bz_compare(a: ColoredLetter, b: ColoredLetter) -> int:
    """Three-way comparison under the colored-letter order.

    Returns LESS, EQUAL or GREATER.  EQUAL only occurs on equal values
    (same letter, or the same value under two positive colors); between
    letters of distinct values the order is strict.
    """
    ka, kb = bz_sort_key(a.value, a.color), bz_sort_key(b.value, b.color)
    if ka < kb:
        return LESS
    if ka > kb:
        return GREATER
    return EQUAL


_TOKEN = re.compile(r"^(\d+)\^(\d+)$")


@dataclasses.dataclass(frozen=True)
class ColoredPermutation:
    """Window [pi(1)^c1 ... pi(n)^cn]; colors indexed by window position."""

    pi: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "pi", tuple(self.pi))
        object.__setattr__(self, "colors", tuple(self.colors))
        n = len(self.pi)
        if sorted(self.pi) != list(range(1, n + 1)):
            raise ValueError(f"window values {self.pi} are not a permutation of 1..{n}")
        if len(self.colors) != n:
            raise ValueError(f"{len(self.colors)} colors for {n} window positions")
        if any(c < 0 for c in self.colors):
            raise ValueError(f"negative color in {self.colors}")

    @property
    def n(self) -> int:
        return len(self.pi)

    def letters(self) -> tuple[ColoredLetter, ...]:
        return tuple(ColoredLetter(v, c) for v, c in zip(self.pi, self.colors))

    def window_str(self) -> str:
        """Window text form, e.g. ``[2^0 3^1 1^1]``.  Round-trips via parse."""
        return "[" + " ".join(f"{v}^{c}" for v, c in zip(self.pi, self.colors)) + "]"

    @classmethod
    def parse(cls, text: str) -> ColoredPermutation:
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"window text must be bracketed: {text!r}")
        values, colors = [], []
        for token in body[1:-1].split():
            match = _TOKEN.match(token)
            if not match:
                raise ValueError(f"bad window letter {token!r} in {text!r}")
            values.append(int(match.group(1)))
            colors.append(int(match.group(2)))
        return cls(tuple(values), tuple(colors))

    def __str__(self) -> str:
        return self.window_str()


def descent_set(w: ColoredPermutation) -> set[int]:
    """Positions i in [0, n-1] where letter i exceeds letter i+1.

    Position 0 holds the sentinel 0^0, so 0 is a descent exactly when the
    first window letter has positive color.

    >>> sorted(descent_set(ColoredPermutation.parse("[2^0 3^1 1^1]")))
    [1]
    """
    keys = [bz_sort_key(0, 0)]
    keys += [bz_sort_key(v, c) for v, c in zip(w.pi, w.colors)]
    return {i for i in range(w.n) if keys[i] > keys[i + 1]}


def des(w: ColoredPermutation) -> int:
    return len(descent_set(w))


def maj(w: ColoredPermutation) -> int:
    return sum(descent_set(w))


def col(w: ColoredPermutation) -> int:
    return sum(w.colors)


def ordinary_descent_set(pi: Sequence[int]) -> set[int]:
    """Classical descent set of a plain permutation: {i in [1, n-1] : pi(i) > pi(i+1)}.

    Agrees with descent_set on the all-zero coloring (where position 0 can
    never descend).
    """
    return {i for i in range(1, len(pi)) if pi[i - 1] > pi[i]}


@dataclasses.dataclass(frozen=True)
class EpsilonVector:
    """A color vector indexed by letter: colors[i-1] is the color of letter i."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if any(c < 0 for c in self.colors):
            raise ValueError(f"negative color in {self.colors}")

    @property
    def n(self) -> int:
        return len(self.colors)

    def color_of(self, letter: int) -> int:
        return self.colors[letter - 1]

    def support(self) -> frozenset[int]:
        """Letters carrying positive color."""
        return frozenset(i + 1 for i, c in enumerate(self.colors) if c > 0)

    def col(self) -> int:
        return sum(self.colors)


def colored_window(eps: EpsilonVector, pi: Sequence[int]) -> ColoredPermutation:
    """The element of G_eps with window values pi: letter pi(i) keeps its color."""
    return ColoredPermutation(tuple(pi), tuple(eps.color_of(v) for v in pi))


def g_epsilon(eps: EpsilonVector) -> Iterator[ColoredPermutation]:
    """The n! windows in which every letter permanently carries its eps color.

    Yields in lexicographic order of the window value sequence.
    """
    for pi in itertools.permutations(range(1, eps.n + 1)):
        yield colored_window(eps, pi)


def group_order(r: int, n: int) -> int:
    return r**n * math.factorial(n)


def enumerate_group(
    r: int, n: int, budget: int = DEFAULT_BUDGET
) -> Iterator[ColoredPermutation]:
    """All r^n * n! elements, lexicographic by pi then by window color vector."""
    if r < 1 or n < 1:
        raise ValueError(f"r and n must be positive, got r={r}, n={n}")
    total = group_order(r, n)
    if total > budget:
        raise BudgetExceededError(f"group order {total} exceeds budget {budget}")

    def generate() -> Iterator[ColoredPermutation]:
        for pi in itertools.permutations(range(1, n + 1)):
            for colors in itertools.product(range(r), repeat=n):
                yield ColoredPermutation(pi, colors)

    return generate()


def numerator(
    r: int, n: int, cap: int | None = None, budget: int = DEFAULT_BUDGET
) -> TruncatedPoly:
    """The joint distribution sum q^maj t^des u^col over all of Z_r wr S_n.

    des never exceeds n, so any cap >= n (the default is n itself) captures
    the polynomial exactly.
    """
    if cap is None:
        cap = n
    terms: dict[Monomial, int] = {}
    for w in enumerate_group(r, n, budget):
        d = descent_set(w)
        mon = Monomial(sum(d), len(d), sum(w.colors))
        terms[mon] = terms.get(mon, 0) + 1
    return TruncatedPoly(cap, terms)
