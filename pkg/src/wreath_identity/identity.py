"""End-to-end verifiers for every step of the geometric argument.

Each verifier runs an exhaustive desk-scale check of one claim and returns
a :class:`VerificationReport`; a failing report always carries the first
counterexample in a fixed deterministic order, so output is diffable.  The
pipeline, from inner constructions outward:

* the reversal ``rho`` transports colored descents to ordinary descents
  (:func:`descent_shift_check`),
* bounded compositions biject with (permutation, partition) pairs
  (:func:`find_pi_for_composition`, :func:`composition_to_partition`),
* the order-preserving relabeling ``omega`` matches the statistics of two
  same-multiset color assignments (:func:`omega_map`),
* cone sums equal group generating functions over the denominator
  (:func:`verify_prop_few_colors`, :func:`verify_corollary`),
* and the full identity equates the height-slice sum with the joint
  (maj, des, col) distribution over the whole group
  (:func:`verify_theorem`).
"""

from __future__ import annotations

import dataclasses
import itertools
import json
import time
from collections.abc import Sequence

from .poly import (
    Monomial,
    TruncatedPoly,
    expand_denominator,
    first_difference,
    lhs_term,
    q_integer,
)
from .wreath import (
    DEFAULT_BUDGET,
    ColoredPermutation,
    EpsilonVector,
    bz_sort_key,
    colored_window,
    descent_set,
    g_epsilon,
    numerator,
    ordinary_descent_set,
)
from .geometry import cone_sum

Composition = tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of nonnegative parts (zeros allowed)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts {self.parts} are not weakly decreasing")
        if self.parts and self.parts[-1] < 0:
            raise ValueError(f"negative part in {self.parts}")

    def total(self) -> int:
        return sum(self.parts)


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exhaustive check; failures carry a counterexample."""

    claim: str
    params: dict
    status: str
    counterexample: dict | None
    elapsed_ms: float

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"status must be pass or fail, got {self.status!r}")
        if self.status == "fail" and self.counterexample is None:
            raise ValueError("a failing report must carry a counterexample")

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "status": self.status,
            "counterexample": self.counterexample,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def report_from_comparison(
    claim: str,
    params: dict,
    lhs: TruncatedPoly,
    rhs: TruncatedPoly,
    started: float,
    context: dict | None = None,
) -> VerificationReport:
    """Build a report from an exact polynomial comparison.

    On inequality the counterexample names the (t, q, u)-first differing
    monomial together with both computed coefficients.
    """
    diff = first_difference(lhs, rhs)
    counterexample = None
    if diff is not None:
        mon, c_lhs, c_rhs = diff
        counterexample = dict(context or {})
        counterexample.update(
            monomial={"q": mon.q, "t": mon.t, "u": mon.u}, lhs=c_lhs, rhs=c_rhs
        )
    return _finish(claim, params, counterexample, started)


def _finish(
    claim: str, params: dict, counterexample: dict | None, started: float
) -> VerificationReport:
    elapsed = (time.perf_counter() - started) * 1000.0
    status = "pass" if counterexample is None else "fail"
    return VerificationReport(claim, params, status, counterexample, elapsed)


# -- the rho shift and the composition bijection ------------------------------


def rho(l: int, n: int) -> tuple[int, ...]:
    """The involution reversing 1..l and fixing l+1..n, in one-line notation.

    >>> rho(2, 3)
    (2, 1, 3)
    """
    if not 0 <= l <= n:
        raise ValueError(f"need 0 <= l <= n, got l={l}, n={n}")
    return tuple(range(l, 0, -1)) + tuple(range(l + 1, n + 1))


def compose(outer: Sequence[int], inner: Sequence[int]) -> tuple[int, ...]:
    """(outer o inner)(i) = outer(inner(i)), both in one-line notation."""
    return tuple(outer[x - 1] for x in inner)


def _ones_vector(l: int, n: int) -> EpsilonVector:
    return EpsilonVector((1,) * l + (0,) * (n - l))


def descent_shift_check(l: int, n: int) -> VerificationReport:
    """Check that rho converts colored descents to ordinary descents.

    For every pi, the window in G_eps with eps = (1^l, 0^(n-l)) must satisfy
    Des(window) minus {0} = Des(rho o pi), with 0 a descent exactly when
    pi(1) <= l (and l >= 1).
    """
    started = time.perf_counter()
    params = {"l": l, "n": n}
    eps = _ones_vector(l, n)
    rho_perm = rho(l, n)
    counterexample = None
    for pi in itertools.permutations(range(1, n + 1)):
        w = colored_window(eps, pi)
        colored = descent_set(w)
        sigma = compose(rho_perm, pi)
        ordinary = ordinary_descent_set(sigma)
        zero_expected = l >= 1 and pi[0] <= l
        if colored - {0} != ordinary or (0 in colored) != zero_expected:
            counterexample = {
                "window": w.window_str(),
                "descents": sorted(colored),
                "shifted_perm": list(sigma),
                "ordinary_descents": sorted(ordinary),
            }
            break
    return _finish("descent_shift", params, counterexample, started)


def check_composition(alpha: Sequence[int], k: int, l: int, n: int) -> Composition:
    """Validate the (k, l) bound profile: first l parts <= k-1, rest <= k."""
    alpha = tuple(alpha)
    if not 0 <= l <= n:
        raise ValueError(f"need 0 <= l <= n, got l={l}, n={n}")
    if len(alpha) != n:
        raise ValueError(f"composition {alpha} does not have {n} parts")
    if any(a < 0 for a in alpha):
        raise ValueError(f"negative part in {alpha}")
    if any(a > k - 1 for a in alpha[:l]) or any(a > k for a in alpha[l:]):
        raise ValueError(f"composition {alpha} violates the (k={k}, l={l}) bounds")
    return alpha


def _chain_holds(alpha: Sequence[int], k: int, eps: EpsilonVector, sigma: Sequence[int]) -> bool:
    descents = ordinary_descent_set(sigma)
    prev = k - eps.color_of(sigma[0])
    for i, letter in enumerate(sigma, start=1):
        cur = alpha[letter - 1]
        if cur > prev or (i - 1 in descents and cur == prev):
            return False
        prev = cur
    return True


def find_pi_for_composition(
    alpha: Sequence[int], k: int, l: int, n: int
) -> ColoredPermutation:
    """The unique window of G_(1^l, 0^(n-l)) whose shifted chain fits alpha.

    The chain condition reads the composition along rho o pi, weakly
    decreasing with strict drops at the ordinary descents and topped by
    k minus the color of the leading letter.  Uniqueness is asserted by
    exhaustive search; zero or multiple matches raise RuntimeError because
    either would falsify the bijection this implements.
    """
    alpha = check_composition(alpha, k, l, n)
    eps = _ones_vector(l, n)
    rho_perm = rho(l, n)
    matches = []
    for pi in itertools.permutations(range(1, n + 1)):
        if _chain_holds(alpha, k, eps, compose(rho_perm, pi)):
            matches.append(pi)
    if len(matches) != 1:
        raise RuntimeError(
            f"composition chain violated at alpha={alpha}, k={k}, l={l}: "
            f"{len(matches)} matching permutations"
        )
    return colored_window(eps, matches[0])


def composition_to_partition(
    alpha: Sequence[int], k: int, l: int, n: int
) -> tuple[Partition, ColoredPermutation]:
    """Map a bounded composition to its (partition, window) pair.

    Part i is the chain value at slot i lowered by the number of descents
    of the shifted permutation at or past slot i; the result is weakly
    decreasing with total sum(alpha) - maj(window).
    """
    w = find_pi_for_composition(alpha, k, l, n)
    sigma = compose(rho(l, n), w.pi)
    descents = ordinary_descent_set(sigma)
    parts = tuple(
        alpha[sigma[i - 1] - 1] - sum(1 for d in descents if d >= i)
        for i in range(1, n + 1)
    )
    return Partition(parts), w


# -- the order-preserving relabeling ------------------------------------------


def _letter_set(eps: EpsilonVector) -> list[tuple[int, int]]:
    """The letters i^eps(i), sorted ascending under the colored-letter order."""
    letters = [(i, eps.color_of(i)) for i in range(1, eps.n + 1)]
    return sorted(letters, key=lambda vc: bz_sort_key(*vc))


def omega_map(
    eps: EpsilonVector, eps_prime: EpsilonVector, w: ColoredPermutation
) -> ColoredPermutation:
    """Apply the unique order-preserving relabeling G_eps -> G_eps_prime.

    Both letter sets are totally ordered (values are distinct, so no ties
    arise), and omega matches them rank by rank; the window is mapped
    letterwise.
    """
    if sorted(eps.colors) != sorted(eps_prime.colors):
        raise ValueError(
            f"{eps_prime.colors} is not a rearrangement of {eps.colors}"
        )
    if w.colors != tuple(eps.color_of(v) for v in w.pi):
        raise ValueError(f"window {w.window_str()} does not belong to G_{eps.colors}")
    omega = dict(zip(_letter_set(eps), _letter_set(eps_prime)))
    mapped = [omega[(v, c)] for v, c in zip(w.pi, w.colors)]
    return ColoredPermutation(
        tuple(v for v, _ in mapped), tuple(c for _, c in mapped)
    )


# -- generating functions over G_eps ------------------------------------------


def g_epsilon_gf(eps: EpsilonVector, cap: int) -> TruncatedPoly:
    """Sum of q^maj t^des u^col over G_eps (col is constant on the set)."""
    color_weight = eps.col()
    terms: dict[Monomial, int] = {}
    for w in g_epsilon(eps):
        d = descent_set(w)
        mon = Monomial(sum(d), len(d), color_weight)
        terms[mon] = terms.get(mon, 0) + 1
    return TruncatedPoly(cap, terms)


# -- step verifiers ------------------------------------------------------------


def _same_support_pairs(r: int, n: int):
    """Lexicographic pairs of distinct color vectors with equal support."""
    by_support: dict[tuple[bool, ...], list[tuple[int, ...]]] = {}
    for colors in itertools.product(range(r), repeat=n):
        mask = tuple(c > 0 for c in colors)
        by_support.setdefault(mask, []).append(colors)
    for mask in sorted(by_support):
        yield from itertools.combinations(by_support[mask], 2)


def verify_lemma_same_support(
    r: int,
    n: int,
    cap: int = 5,
    check_cone: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> VerificationReport:
    """Same-support color vectors share descent sets and shifted cone sums.

    Descent part: for every pair of window color vectors with equal support
    and every pi, the two windows have identical descent sets.  Cone part
    (optional): the cone sums of two same-support cubes agree after shifting
    by u to a common color weight.
    """
    started = time.perf_counter()
    params = {"r": r, "n": n, "t_cap": cap, "check_cone": check_cone}
    counterexample = None

    for e1, e2 in _same_support_pairs(r, n):
        for pi in itertools.permutations(range(1, n + 1)):
            d1 = descent_set(ColoredPermutation(pi, e1))
            d2 = descent_set(ColoredPermutation(pi, e2))
            if d1 != d2:
                counterexample = {
                    "part": "descents",
                    "pi": list(pi),
                    "eps": list(e1),
                    "eps_prime": list(e2),
                    "lhs": sorted(d1),
                    "rhs": sorted(d2),
                }
                break
        if counterexample:
            break

    if counterexample is None and check_cone:
        sums: dict[tuple[int, ...], TruncatedPoly] = {}

        def cached_sum(colors: tuple[int, ...]) -> TruncatedPoly:
            if colors not in sums:
                sums[colors] = cone_sum(EpsilonVector(colors), cap, budget)
            return sums[colors]

        for e1, e2 in _same_support_pairs(r, n):
            lhs = cached_sum(e1) * TruncatedPoly.term(cap, 1, u=sum(e2))
            rhs = cached_sum(e2) * TruncatedPoly.term(cap, 1, u=sum(e1))
            diff = first_difference(lhs, rhs)
            if diff is not None:
                mon, c_lhs, c_rhs = diff
                counterexample = {
                    "part": "cone_sums",
                    "eps": list(e1),
                    "eps_prime": list(e2),
                    "monomial": {"q": mon.q, "t": mon.t, "u": mon.u},
                    "lhs": c_lhs,
                    "rhs": c_rhs,
                }
                break

    return _finish("same_support", params, counterexample, started)


def verify_prop_few_colors(
    l: int, n: int, cap: int, budget: int = DEFAULT_BUDGET
) -> VerificationReport:
    """Cone sum of the (1^l, 0^(n-l)) cube, three ways.

    The brute-force cone sum must equal both the closed form
    u^l sum_k [k]_q^l [k+1]_q^(n-l) t^k and the G_eps generating function
    over the expanded denominator.
    """
    started = time.perf_counter()
    params = {"l": l, "n": n, "t_cap": cap}
    eps = _ones_vector(l, n)
    geometric = cone_sum(eps, cap, budget)

    closed = TruncatedPoly.zero(cap)
    for k in range(cap + 1):
        closed = closed + (
            q_integer(k, cap) ** l
            * q_integer(k + 1, cap) ** (n - l)
            * TruncatedPoly.term(cap, 1, t=k)
        )
    closed = closed * TruncatedPoly.term(cap, 1, u=l)

    diff = first_difference(geometric, closed)
    if diff is not None:
        mon, c_lhs, c_rhs = diff
        return _finish(
            "few_colors",
            params,
            {
                "part": "closed_form",
                "monomial": {"q": mon.q, "t": mon.t, "u": mon.u},
                "lhs": c_lhs,
                "rhs": c_rhs,
            },
            started,
        )

    group_side = g_epsilon_gf(eps, cap) * expand_denominator(n, cap)
    return report_from_comparison(
        "few_colors", params, geometric, group_side, started, {"part": "group_side"}
    )


def verify_lemma_triple_preserving(
    eps: EpsilonVector, eps_prime: EpsilonVector
) -> VerificationReport:
    """omega induces a descent-set-preserving bijection G_eps -> G_eps_prime.

    Checks the setwise Des equality elementwise (which subsumes maj and
    des), the color weights, and bijectivity of the induced map.
    """
    started = time.perf_counter()
    params = {"eps": list(eps.colors), "eps_prime": list(eps_prime.colors)}
    counterexample = None
    images = []
    for w in g_epsilon(eps):
        image = omega_map(eps, eps_prime, w)
        images.append(image)
        if descent_set(image) != descent_set(w) or sum(image.colors) != sum(w.colors):
            counterexample = {
                "window": w.window_str(),
                "image": image.window_str(),
                "descents": sorted(descent_set(w)),
                "image_descents": sorted(descent_set(image)),
            }
            break
    if counterexample is None:
        if set(images) != set(g_epsilon(eps_prime)):
            counterexample = {
                "part": "bijection",
                "image_count": len(set(images)),
                "expected_count": len(list(g_epsilon(eps_prime))),
            }
    return _finish("triple_preserving", params, counterexample, started)


def verify_corollary(
    eps: EpsilonVector, cap: int, budget: int = DEFAULT_BUDGET
) -> VerificationReport:
    """Cone sum of any cube equals its G_eps generating function over the denominator."""
    started = time.perf_counter()
    params = {"eps": list(eps.colors), "t_cap": cap}
    lhs = cone_sum(eps, cap, budget)
    rhs = g_epsilon_gf(eps, cap) * expand_denominator(eps.n, cap)
    return report_from_comparison("cone_generating_function", params, lhs, rhs, started)


def verify_theorem(
    r: int, n: int, cap: int | None = None, budget: int = DEFAULT_BUDGET
) -> VerificationReport:
    """The full identity, compared exactly after clearing the denominator.

    Left side: the sum over heights k <= cap of ([k+1]_q + u[r-1]_u[k]_q)^n t^k.
    Right side: the joint (maj, des, col) distribution over the whole group
    times the expanded denominator, truncated at the same cap.
    """
    if r < 1 or n < 1:
        raise ValueError(f"r and n must be positive, got r={r}, n={n}")
    if cap is None:
        cap = n + 3
    started = time.perf_counter()
    params = {"r": r, "n": n, "t_cap": cap}
    lhs = TruncatedPoly.zero(cap)
    for k in range(cap + 1):
        lhs = lhs + lhs_term(r, n, k, cap)
    rhs = numerator(r, n, cap, budget) * expand_denominator(n, cap)
    return report_from_comparison("theorem", params, lhs, rhs, started)
