"""Lower bounds and non-existence rules for (v, k, g, lambda) parameters.

All functions take the degree k >= 3, the girth g >= 3 and the requested
per-vertex girth-cycle count lambda >= 1, and reason about the smallest
order v a vertex-girth-regular graph with those parameters can have.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field


class NonPositiveDenominator(ValueError):
    """Signals an infeasible per-edge count in lb_lambda_refined."""


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_params(k: int, g: int, lam: int) -> None:
    if k < 3:
        raise ValueError(f"degree {k} < 3")
    if g < 3:
        raise ValueError(f"girth {g} < 3")
    if lam < 1:
        raise ValueError(f"cycle count {lam} < 1")


def moore_bound(k: int, g: int) -> int:
    """Smallest possible order of a k-regular graph of girth g."""
    if g % 2:
        h = (g - 1) // 2
        return 1 + k * sum((k - 1) ** i for i in range(h))
    h = g // 2
    return 2 * sum((k - 1) ** i for i in range(h))


def lambda_max(k: int, g: int) -> int:
    """Largest feasible per-vertex girth-cycle count for degree k, girth g.

    Attained exactly by the graphs meeting the Moore bound, so parameters
    with lambda == lambda_max(k, g) force the order to be moore_bound(k, g).
    """
    e = (g - 1) // 2 if g % 2 else g // 2
    return k * (k - 1) ** e // 2


def nonexistence_verdict(k: int, g: int, lam: int):
    """Name of the rule proving no such graph exists, or None.

    None means no rule applies, not that a graph exists.
    """
    _check_params(k, g, lam)
    cap = lambda_max(k, g)
    if lam > cap:
        return "above-cycle-capacity"
    if lam == cap:
        return None
    if g == 3 and lam == k * (k - 1) // 2 - 1:
        return "complete-minus-one"
    eps = cap - lam
    if g % 2 and g >= 7 and 2 * eps <= k - 1:
        return "odd-girth-gap"
    if g % 2 == 0 and eps < k - 1:
        return "even-girth-gap"
    return None


def lb_even(k: int, g: int, lam: int, bipartite: bool = False) -> int:
    """Order bound for even girth from counting around a cheapest edge."""
    _check_params(k, g, lam)
    if g % 2:
        raise ValueError("even girth required")
    h = g // 2
    kk = (k - 1) ** h
    base = 2 * (kk - 1) // (k - 2)
    t = 2 * lam // k
    if bipartite:
        return base + 2 * _ceil_div(kk - t, k)
    return base + _ceil_div(2 * kk - 2 * t, k)


def lb_odd(k: int, g: int, lam: int) -> int:
    """Order bound for odd girth from counting around a vertex."""
    _check_params(k, g, lam)
    if g % 2 == 0:
        raise ValueError("odd girth required")
    h = (g - 1) // 2
    kk = (k - 1) ** h
    base = (k * kk - 2) // (k - 2)
    return base + _ceil_div(k * kk - 2 * lam, k)


def lb_lambda_refined(k: int, g: int, lam: int, edge_count: int) -> int:
    """Even-girth order bound assuming some edge lies on edge_count cycles.

    Raises NonPositiveDenominator when that per-edge count is infeasible
    for the given lambda; callers skip such values.
    """
    _check_params(k, g, lam)
    if g % 2:
        raise ValueError("even girth required")
    h = g // 2
    kk = (k - 1) ** h
    dd = (k - 1) ** (h - 1)
    corr = max(0, _ceil_div(edge_count * edge_count - edge_count * dd, 2 * dd))
    den = 2 * lam - 3 * edge_count + kk - 2 * corr
    if den <= 0:
        raise NonPositiveDenominator(
            f"edge count {edge_count} infeasible for lambda {lam}"
        )
    return 2 * (kk - 1) // (k - 2) + _ceil_div((kk - edge_count) ** 2, den)


def lb_signature_avg(k: int, g: int, lam: int):
    """lb_lambda_refined at the two per-edge counts nearest 2*lambda/k.

    Some edge must carry at most floor(2 lam / k) cycles and some edge at
    least ceil(2 lam / k), so the larger of the two refined bounds
    applies.  Returns None when both candidate counts are infeasible.
    """
    best = None
    for ec in {2 * lam // k, _ceil_div(2 * lam, k)}:
        try:
            b = lb_lambda_refined(k, g, lam, ec)
        except NonPositiveDenominator:
            continue
        if best is None or b > best:
            best = b
    return best


def cyclefree_closed_walks(length: int, k: int) -> int:
    """Closed walks of the given length from a vertex of the k-regular tree.

    Dynamic program over the distance from the start: the first step away
    from any visited-subtree leaf has k choices at the root and k - 1
    elsewhere, stepping back toward the root has one.  Odd lengths give 0.
    """
    if length < 0:
        raise ValueError("negative length")
    if length % 2:
        return 0
    f = {0: 1}
    for _ in range(length):
        nf: dict = {}
        for d, w in f.items():
            if d == 0:
                nf[1] = nf.get(1, 0) + w * k
            else:
                nf[d + 1] = nf.get(d + 1, 0) + w * (k - 1)
                nf[d - 1] = nf.get(d - 1, 0) + w
        f = nf
    return f.get(0, 0)


def lb_spectral(k: int, g: int, lam: int, bipartite: bool = False) -> int:
    """Even-girth order bound from power sums of adjacency eigenvalues.

    The trace of A^g counts closed g-walks: cycle-free ones plus 2*lam*n
    walks around girth cycles.  Bounding the non-principal eigenvalues
    yields the order bound; the bipartite variant is roughly twice as
    strong for g = 2 mod 4.
    """
    _check_params(k, g, lam)
    if g % 2:
        raise ValueError("even girth required")
    cg = cyclefree_closed_walks(g, k)
    if g % 4 == 0:
        ch = cyclefree_closed_walks(g // 2, k)
        num = cg + 2 * lam + k**g - 2 * ch * k ** (g // 2)
        den = cg - ch * ch + 2 * lam
        if bipartite:
            return _ceil_div(2 * num, den)
        return _ceil_div(num, den)
    num = cg + 2 * lam + k**g
    den = cg + 2 * lam
    if bipartite:
        return _ceil_div(2 * k**g, den)
    return _ceil_div(num, den)


def divisibility_refine(k: int, g: int, lam: int, n0: int) -> int:
    """Smallest n >= n0 with n*k even and n*lam divisible by g.

    A k-regular graph needs an even degree sum, and the per-vertex counts
    sum to g times the number of girth cycles.
    """
    n = n0
    while n * k % 2 or n * lam % g:
        n += 1
    return n


@dataclass
class BoundReport:
    """Everything the bound machinery can say about (k, g, lambda)."""

    k: int
    g: int
    lam: int
    moore: int
    lambda_cap: int
    moore_required: bool
    verdicts: list = field(default_factory=list)
    lower_bounds: list = field(default_factory=list)
    best_lb: int | None = None
    impossible: bool = False


def best_lower_bound(k: int, g: int, lam: int) -> BoundReport:
    """Combine every applicable rule into one report.

    Verdict rules run first; when one fires the report is marked
    impossible and carries no numeric bound.  Otherwise the best numeric
    bound is the max of the applicable formulas, lifted to the next order
    allowed by the divisibility constraints.
    """
    _check_params(k, g, lam)
    cap = lambda_max(k, g)
    report = BoundReport(
        k=k,
        g=g,
        lam=lam,
        moore=moore_bound(k, g),
        lambda_cap=cap,
        moore_required=lam == cap,
    )
    rule = nonexistence_verdict(k, g, lam)
    report.verdicts.append((rule or "none", rule is not None))
    if rule is not None:
        report.impossible = True
        return report
    report.lower_bounds.append(("moore", report.moore))
    if g % 2:
        report.lower_bounds.append(("neighborhood-count", lb_odd(k, g, lam)))
    else:
        report.lower_bounds.append(("neighborhood-count", lb_even(k, g, lam)))
        sig = lb_signature_avg(k, g, lam)
        if sig is not None:
            report.lower_bounds.append(("signature-average", sig))
        report.lower_bounds.append(("eigenvalue-power-sum", lb_spectral(k, g, lam)))
    raw = max(v for _, v in report.lower_bounds)
    best = divisibility_refine(k, g, lam, raw)
    if best != raw:
        report.lower_bounds.append(("divisibility", best))
    report.best_lb = best
    return report
