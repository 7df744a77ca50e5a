"""Topological indices of generator graphs: brute-force sums and closed forms.

Each index has two independent routes: a definitional brute-force evaluation
on the graph (distance or edge sums, no structural shortcuts) and a closed
form in the order n and the generator count s. Integer-valued indices use
exact arithmetic; irrational-valued ones use floats with compensated
summation on the brute-force side.

The harmonic index has two closed forms. `harmonic_formula` matches the
edge-sum definition. `harmonic_formula_all_pairs` is the variant whose pair
accounting also charges non-adjacent vertex pairs; it exceeds the edge sum by
exactly `harmonic_gap` whenever there are at least two non-generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from gengraph.cyclic import is_prime
from gengraph.generator_graph import build_generator_graph
from gengraph.graphs import DistanceMatrix, SimpleGraph, bfs_distances

# Relative tolerance for float formula-vs-brute-force agreement.
REL_TOL = 1e-9
# Absolute floor so exact-zero comparisons are well defined.
ABS_TOL = 1e-12


def _require_connected(dm: DistanceMatrix) -> None:
    if not dm.connected:
        raise ValueError("distance-based index requires a connected graph")


def _check_domain(n: int, s: int) -> None:
    if n < 2:
        raise ValueError(f"order must be at least 2, got {n}")
    if not 1 <= s <= n - 1:
        raise ValueError(f"generator count must lie in [1, {n - 1}], got {s}")


def _edge_degree_pairs(g: SimpleGraph) -> tuple[np.ndarray, np.ndarray]:
    """Degree pairs (deg u, deg v) over edges u < v in sorted edge order."""
    us, vs = np.nonzero(np.triu(g.adjacency, 1))
    deg = g.degrees()
    return deg[us], deg[vs]


def wiener_bruteforce(g: SimpleGraph, distances: DistanceMatrix | None = None) -> int:
    """Sum of hop distances over unordered vertex pairs."""
    dm = bfs_distances(g) if distances is None else distances
    _require_connected(dm)
    return int(dm.entries.sum()) // 2


def gutman_bruteforce(g: SimpleGraph, distances: DistanceMatrix | None = None) -> int:
    """Sum of deg(u) * deg(v) * d(u, v) over unordered vertex pairs."""
    dm = bfs_distances(g) if distances is None else distances
    _require_connected(dm)
    deg = g.degrees()
    # diagonal distances are zero, so the full quadratic form double-counts pairs
    return int(deg @ dm.entries @ deg) // 2


def harmonic_bruteforce(g: SimpleGraph) -> float:
    """Sum of 2 / (deg(u) + deg(v)) over edges, compensated summation."""
    du, dv = _edge_degree_pairs(g)
    terms = 2.0 / (du + dv)
    return math.fsum(terms.tolist())


def randic_bruteforce(g: SimpleGraph) -> float:
    """Sum of 1 / sqrt(deg(u) * deg(v)) over edges, compensated summation."""
    du, dv = _edge_degree_pairs(g)
    terms = 1.0 / np.sqrt((du * dv).astype(np.float64))
    return math.fsum(terms.tolist())


def sombor_bruteforce(g: SimpleGraph) -> float:
    """Sum of sqrt(deg(u)^2 + deg(v)^2) over edges, compensated summation."""
    du, dv = _edge_degree_pairs(g)
    terms = np.sqrt((du * du + dv * dv).astype(np.float64))
    return math.fsum(terms.tolist())


def wiener_formula(n: int, s: int) -> Fraction:
    """Closed form s^2/2 - (2n-1)s/2 + n^2 - n; integral on the valid domain."""
    _check_domain(n, s)
    return Fraction(s * s - (2 * n - 1) * s, 2) + (n * n - n)


def gutman_formula(n: int, s: int) -> Fraction:
    """Closed form s(s-1)(n-1)^2/2 + s^2(n-s)(2n-s-2)."""
    _check_domain(n, s)
    return Fraction(s * (s - 1) * (n - 1) ** 2, 2) + s * s * (n - s) * (2 * n - s - 2)


def harmonic_formula(n: int, s: int) -> Fraction:
    """Edge-sum harmonic closed form: s(s-1)/(2(n-1)) + 2s(n-s)/(n+s-1)."""
    _check_domain(n, s)
    return Fraction(s * (s - 1), 2 * (n - 1)) + Fraction(2 * s * (n - s), n + s - 1)


def harmonic_formula_all_pairs(n: int, s: int) -> Fraction:
    """Harmonic sum charged over ALL unordered vertex pairs, adjacent or not.

    Equals harmonic_formula(n, s) + harmonic_gap(n, s): the extra term is the
    contribution of the non-adjacent non-generator pairs.
    """
    _check_domain(n, s)
    return Fraction(s * (s - 1), 2 * (n - 1)) + (n - s) * Fraction(
        (n - 1) ** 2 + 3 * s * s, 2 * s * (n + s - 1)
    )


def harmonic_gap(n: int, s: int) -> Fraction:
    """Exact excess of the all-pairs harmonic form over the edge sum.

    (n-s)(n-s-1)/(2s): one term 2/(2s) per non-adjacent non-generator pair.
    Zero exactly when n - s <= 1.
    """
    _check_domain(n, s)
    return Fraction((n - s) * (n - s - 1), 2 * s)


def randic_formula(n: int, s: int) -> float:
    """Closed form (s(s-1)/2 + (n-s) sqrt((n-1)s)) / (n-1)."""
    _check_domain(n, s)
    return (0.5 * s * (s - 1) + (n - s) * math.sqrt((n - 1) * s)) / (n - 1)


def sombor_formula(n: int, s: int) -> float:
    """Closed form (sqrt(2)/2) s(s-1)(n-1) + s(n-s) sqrt((n-1)^2 + s^2)."""
    _check_domain(n, s)
    return math.sqrt(2) / 2 * s * (s - 1) * (n - 1) + s * (n - s) * math.sqrt(
        (n - 1) ** 2 + s * s
    )


def _check_prime(p: int) -> None:
    if p < 2 or not is_prime(p):
        raise ValueError(f"prime order required, got {p}")


def wiener_prime_order(p: int) -> Fraction:
    """Value on prime order, where the generator graph is complete: p(p-1)/2."""
    _check_prime(p)
    return Fraction(p * (p - 1), 2)


def gutman_prime_order(p: int) -> Fraction:
    """Prime-order value p(p-1)^3/2."""
    _check_prime(p)
    return Fraction(p * (p - 1) ** 3, 2)


def harmonic_prime_order(p: int) -> Fraction:
    """Prime-order value p/2."""
    _check_prime(p)
    return Fraction(p, 2)


def randic_prime_order(p: int) -> float:
    """Prime-order value p/2."""
    _check_prime(p)
    return p / 2


def sombor_prime_order(p: int) -> float:
    """Prime-order value (sqrt(2)/2) p(p-1)^2."""
    _check_prime(p)
    return math.sqrt(2) / 2 * p * (p - 1) ** 2


@dataclass(frozen=True)
class IndexComparison:
    """One index: brute-force value vs closed form, with agreement verdict."""

    name: str
    brute_force: int | float
    formula: Fraction | float
    abs_difference: float
    agrees: bool


@dataclass(frozen=True)
class IndexReport:
    """All index comparisons for one group order."""

    n: int
    s: int
    comparisons: tuple[IndexComparison, ...]

    def comparison(self, name: str) -> IndexComparison:
        for c in self.comparisons:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "indices": [
                {
                    "name": c.name,
                    "brute_force": c.brute_force,
                    "formula": float(c.formula),
                    "abs_difference": c.abs_difference,
                    "agrees": c.agrees,
                }
                for c in self.comparisons
            ],
        }


def _exact_comparison(name: str, brute: int, formula: Fraction) -> IndexComparison:
    return IndexComparison(
        name=name,
        brute_force=brute,
        formula=formula,
        abs_difference=float(abs(formula - brute)),
        agrees=formula == brute,
    )


def _float_comparison(name: str, brute: float, formula: Fraction | float) -> IndexComparison:
    formula_value = float(formula)
    return IndexComparison(
        name=name,
        brute_force=brute,
        formula=formula,
        abs_difference=abs(formula_value - brute),
        agrees=math.isclose(brute, formula_value, rel_tol=REL_TOL, abs_tol=ABS_TOL),
    )


def compute_index_report(n: int) -> IndexReport:
    """Brute-force and closed-form values of every index for Z_n."""
    gg = build_generator_graph(n)
    g = gg.graph
    s = gg.group.generator_count
    dm = bfs_distances(g)
    harmonic_brute = harmonic_bruteforce(g)
    comparisons = (
        _exact_comparison("wiener", wiener_bruteforce(g, dm), wiener_formula(n, s)),
        _exact_comparison("gutman", gutman_bruteforce(g, dm), gutman_formula(n, s)),
        _float_comparison("harmonic", harmonic_brute, harmonic_formula(n, s)),
        _float_comparison("harmonic_all_pairs", harmonic_brute, harmonic_formula_all_pairs(n, s)),
        _float_comparison("randic", randic_bruteforce(g), randic_formula(n, s)),
        _float_comparison("sombor", sombor_bruteforce(g), sombor_formula(n, s)),
    )
    return IndexReport(n=n, s=s, comparisons=comparisons)
