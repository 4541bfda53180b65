"""Lattice geometry over the cone of the box [0, r]^n.

The cone is the set of points (alpha*x, alpha) for x in [0, r]^n and
alpha >= 0; its lattice points are organized by the height-k slices
([0, kr]^n, k).  Each point gets an exact monomial weight via
:func:`m_prime` / :func:`m`, the box decomposes into half-open unit cubes
indexed by color vectors (:func:`slice_membership`), and [0, k]^n further
decomposes into dilated partially open simplices indexed by permutations
(:func:`delta_membership`).  Everything here uses integer comparisons only.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
from collections.abc import Iterator, Sequence
from typing import NamedTuple

from .poly import Monomial, TruncatedPoly
from .wreath import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    EpsilonVector,
    ordinary_descent_set,
)


class LatticePoint(NamedTuple):
    """A lattice point (v, k) on the height-k slice of the cone."""

    v: tuple[int, ...]
    k: int


def lattice_point(v: Sequence[int], k: int, r: int) -> LatticePoint:
    """Validated constructor: every coordinate must lie in [0, k*r]."""
    v = tuple(v)
    if k < 0:
        raise ValueError(f"height must be nonnegative, got {k}")
    if any(not 0 <= vi <= k * r for vi in v):
        raise ValueError(f"point {v} outside [0, {k * r}]^{len(v)} at height {k}")
    return LatticePoint(v, k)


@functools.lru_cache(maxsize=None)
def m_prime(j: int, k: int) -> Monomial:
    """Weight of the single coordinate value j at height k (t-free).

    q^j on the initial run 0 <= j <= k; past it, the value wraps into
    q^((j-1) mod k) * u^((j-1) div k), with the mod-k representative taken
    from [0, k-1].

    >>> m_prime(2, 1), m_prime(3, 2), m_prime(4, 2)
    (Monomial(q=0, t=0, u=1), Monomial(q=0, t=0, u=1), Monomial(q=1, t=0, u=1))
    """
    if j < 0:
        raise ValueError(f"coordinate value must be nonnegative, got {j}")
    if k == 0:
        if j != 0:
            raise ValueError(f"height 0 admits only the apex coordinate, got {j}")
        return Monomial(0, 0, 0)
    if j <= k:
        return Monomial(j, 0, 0)
    return Monomial((j - 1) % k, 0, (j - 1) // k)


def m(p: LatticePoint) -> Monomial:
    """Weight of a lattice point: the product of its coordinate weights times t^k."""
    q_exp = 0
    u_exp = 0
    for vi in p.v:
        mon = m_prime(vi, p.k)
        q_exp += mon.q
        u_exp += mon.u
    return Monomial(q_exp, p.k, u_exp)


@dataclasses.dataclass(frozen=True)
class CubeSliceSpec:
    """The height-k slice of the cone over the half-open cube of eps."""

    eps: EpsilonVector
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"height must be nonnegative, got {self.k}")


def slice_membership(p: LatticePoint, spec: CubeSliceSpec) -> bool:
    """Whether (v, k) lies in the dilated half-open cube of eps at height k.

    Coordinate i must satisfy k*eps_i <= v_i <= k*(eps_i + 1), strictly on
    the left when eps_i > 0 (the lower facet is removed there).  The apex
    (k = 0) belongs to the eps = 0 cone only.
    """
    if p.k != spec.k:
        raise ValueError(f"height mismatch: point at {p.k}, slice at {spec.k}")
    if len(p.v) != spec.eps.n:
        raise ValueError(f"dimension mismatch: point {p.v}, eps {spec.eps.colors}")
    if spec.k == 0:
        return all(vi == 0 for vi in p.v) and all(c == 0 for c in spec.eps.colors)
    for vi, ei in zip(p.v, spec.eps.colors):
        lo = spec.k * ei
        if vi > lo + spec.k or vi < lo or (ei > 0 and vi == lo):
            return False
    return True


def enumerate_slice(
    spec: CubeSliceSpec, budget: int = DEFAULT_BUDGET
) -> Iterator[LatticePoint]:
    """All lattice points of the slice, in lexicographic order of v.

    The count is k^s * (k+1)^(n-s) for k >= 1, where s is the size of the
    support of eps.
    """
    k, eps = spec.k, spec.eps
    if (k + 1) ** eps.n > budget:
        raise BudgetExceededError(
            f"slice of size up to {(k + 1) ** eps.n} exceeds budget {budget}"
        )

    def generate() -> Iterator[LatticePoint]:
        if k == 0:
            if all(c == 0 for c in eps.colors):
                yield LatticePoint((0,) * eps.n, 0)
            return
        ranges = [
            range(k * ei + (1 if ei > 0 else 0), k * (ei + 1) + 1) for ei in eps.colors
        ]
        for v in itertools.product(*ranges):
            yield LatticePoint(v, k)

    return generate()


def slice_sum(
    spec: CubeSliceSpec, cap: int | None = None, budget: int = DEFAULT_BUDGET
) -> TruncatedPoly:
    """Pointwise sum of m over one cube slice (brute-force enumeration)."""
    if cap is None:
        cap = spec.k
    terms: dict[Monomial, int] = {}
    for p in enumerate_slice(spec, budget):
        mon = m(p)
        terms[mon] = terms.get(mon, 0) + 1
    return TruncatedPoly(cap, terms)


def cone_sum(
    eps: EpsilonVector, cap: int, budget: int = DEFAULT_BUDGET
) -> TruncatedPoly:
    """Sum of m over the cone of the eps cube, up to t-degree cap."""
    total = TruncatedPoly.zero(cap)
    for k in range(cap + 1):
        total = total + slice_sum(CubeSliceSpec(eps, k), cap, budget)
    return total


def full_slice_sum(
    r: int, n: int, k: int, cap: int | None = None, budget: int = DEFAULT_BUDGET
) -> TruncatedPoly:
    """Pointwise sum of m over the whole slice ([0, kr]^n, k)."""
    if r < 1 or n < 1:
        raise ValueError(f"r and n must be positive, got r={r}, n={n}")
    if k < 0:
        raise ValueError(f"height must be nonnegative, got {k}")
    if cap is None:
        cap = k
    if (k * r + 1) ** n > budget:
        raise BudgetExceededError(
            f"slice of size {(k * r + 1) ** n} exceeds budget {budget}"
        )
    terms: dict[Monomial, int] = {}
    for v in itertools.product(range(k * r + 1), repeat=n):
        mon = m(LatticePoint(v, k))
        terms[mon] = terms.get(mon, 0) + 1
    return TruncatedPoly(cap, terms)


def delta_membership(alpha: Sequence[int], k: int, pi: Sequence[int]) -> bool:
    """Whether alpha lies in the k-dilated partially open simplex of pi.

    Requires k >= alpha[pi(1)] >= ... >= alpha[pi(n)] >= 0, strictly at
    every classical descent of pi.
    """
    if any(not 0 <= a <= k for a in alpha):
        raise ValueError(f"alpha {tuple(alpha)} outside [0, {k}]^{len(alpha)}")
    if len(alpha) != len(pi):
        raise ValueError(f"dimension mismatch: alpha {tuple(alpha)}, pi {tuple(pi)}")
    descents = ordinary_descent_set(pi)
    prev = k
    for i, letter in enumerate(pi, start=1):
        cur = alpha[letter - 1]
        if cur > prev:
            return False
        if i - 1 in descents and cur == prev:
            return False
        prev = cur
    return True


def find_simplex(alpha: Sequence[int], k: int) -> tuple[int, ...]:
    """The unique permutation whose dilated simplex contains alpha.

    Exhaustive search over S_n; finding zero or several matches would mean
    the simplices fail to partition [0, k]^n and raises RuntimeError.
    """
    matches = [
        pi
        for pi in itertools.permutations(range(1, len(alpha) + 1))
        if delta_membership(alpha, k, pi)
    ]
    if len(matches) != 1:
        raise RuntimeError(
            f"simplex decomposition violated at alpha={tuple(alpha)}, k={k}: "
            f"{len(matches)} matching permutations"
        )
    return matches[0]


def figure_grid(r: int, k: int) -> list[dict]:
    """The (kr+1) x (kr+1) grid of t-free point weights for n = 2.

    Entries are emitted in lexicographic (row-major) order of v; each
    monomial record carries the q- and u-exponents with the t-factor
    divided out.
    """
    if r < 1 or k < 0:
        raise ValueError(f"need r >= 1 and k >= 0, got r={r}, k={k}")
    grid = []
    for v in itertools.product(range(k * r + 1), repeat=2):
        mon = m(LatticePoint(v, k))
        grid.append({"v": list(v), "monomial": {"q": mon.q, "u": mon.u}})
    return grid
