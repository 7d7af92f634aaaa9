"""Semistability and quasistability of multidegrees, in exact integers.

A multidegree d of total degree D on a curve of genus g is semistable at a
subcurve Y when

    | d_Y - D * omega(Y) / (2g - 2) |  <=  k_Y / 2,

and D-quasistability at a component X additionally requires the strict
lower bound on every subcurve containing X.  The thresholds are
half-integers and the boundary cases matter, so every comparison here is
done after clearing denominators: multiply through by 2*(2g - 2) and
compare integers.  No rational or floating-point arithmetic is used
anywhere.

The same predicates can be phrased through the canonical polarization, a
vector bundle of rank 2g - 2 (rank 1 when D = g - 1) whose degree on Y is
(g - 1 - D) * omega(Y): semistability at Y demands
chi(L|_W) * rank >= -deg(E|_W) at both W = Y and W = Y'.  The two forms
are algebraically identical after clearing denominators, and the test
suite holds them to exact boolean equality.

Checking connected subcurves suffices: the slack is additive over
connected parts and the bound k_Y is too, so the triangle inequality
extends semistability to disconnected subcurves, and strictness on the
part containing X extends quasistability.  The brute-force check over all
subsets is kept as a test-only oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .curves import CurveTree, Multidegree, Subcurve


@dataclass(frozen=True)
class StabilityVerdict:
    semistable: bool
    witnesses: tuple[tuple[Subcurve, str], ...] = ()


@dataclass(frozen=True)
class Polarization:
    """Rank and per-subcurve degree data of the canonical polarization."""

    tree: CurveTree
    d: int

    @property
    def g(self) -> int:
        return self.tree.genus

    @property
    def rank(self) -> int:
        return 1 if self.d == self.g - 1 else 2 * self.g - 2

    def degree_on(self, sub: Subcurve) -> int:
        if self.d == self.g - 1:
            return 0
        return (self.g - 1 - self.d) * self.tree.omega_degree(sub)


def polarization(tree: CurveTree, d: int) -> Polarization:
    return Polarization(tree, d)


def _slack(tree: CurveTree, md: Multidegree, sub: Subcurve) -> tuple[int, int]:
    """Scaled slack and bound: (2(2g-2) d_Y - 2 D omega_Y, (2g-2) k_Y)."""
    g = tree.genus
    return (
        2 * (2 * g - 2) * md.on(sub) - 2 * md.total * tree.omega_degree(sub),
        (2 * g - 2) * tree.k(sub),
    )


def _check_proper(tree: CurveTree, sub: Subcurve) -> None:
    if sub.mask == 0:
        raise ValueError("subcurve must be non-empty")
    if sub.mask == tree.full.mask:
        raise ValueError("subcurve must be proper")


def is_semistable_at(tree: CurveTree, md: Multidegree, sub: Subcurve) -> bool:
    """Two-sided bound at one subcurve; holds at Y iff it holds at Y'."""
    _check_proper(tree, sub)
    slack, bound = _slack(tree, md, sub)
    return -bound <= slack <= bound


def chi_form_semistable_at(tree: CurveTree, md: Multidegree, sub: Subcurve) -> bool:
    """Semistability at a subcurve in Euler-characteristic form.

    The polarization inequality chi(L|_W) * rank >= -deg(E|_W) is one-sided
    per subcurve; evaluated at both W = sub and W = sub' it is exactly the
    two-sided bound of :func:`is_semistable_at`.
    """
    _check_proper(tree, sub)
    pol = polarization(tree, md.total)
    return _chi_holds(tree, md, sub, pol) and _chi_holds(
        tree, md, tree.complement(sub), pol
    )


def _chi_holds(tree: CurveTree, md: Multidegree, sub: Subcurve, pol: Polarization) -> bool:
    # chi(L|_W) = d_W + #parts(W) - g_W; the complement side may be disconnected.
    parts = len(tree.connected_parts(sub))
    chi = md.on(sub) + parts - tree.subcurve_genus(sub)
    return chi * pol.rank >= -pol.degree_on(sub)


@lru_cache(maxsize=None)
def _connected_stats(tree: CurveTree) -> tuple[tuple[Subcurve, int, int], ...]:
    """(subcurve, scaled omega term, scaled bound) per connected proper subcurve.

    Cached per tree; the precomputed pair lets the hot enumeration loop
    evaluate the inequality with one multidegree sum and two comparisons.
    """
    g = tree.genus
    return tuple(
        (sub, 2 * tree.omega_degree(sub), (2 * g - 2) * tree.k(sub))
        for sub in tree.connected_subcurves
    )


def is_semistable(tree: CurveTree, md: Multidegree) -> StabilityVerdict:
    """Check semistability at every connected proper subcurve.

    Witnesses name each failing subcurve together with the violated side
    of the bound.
    """
    g = tree.genus
    d = md.total
    scale = 2 * (2 * g - 2)
    witnesses = []
    for sub, omega2, bound in _connected_stats(tree):
        slack = scale * md.on(sub) - d * omega2
        if slack > bound:
            witnesses.append((sub, "upper"))
        elif slack < -bound:
            witnesses.append((sub, "lower"))
    return StabilityVerdict(not witnesses, tuple(witnesses))


def _is_semistable_bool(tree: CurveTree, md: Multidegree) -> bool:
    g = tree.genus
    d = md.total
    scale = 2 * (2 * g - 2)
    for sub, omega2, bound in _connected_stats(tree):
        slack = scale * md.on(sub) - d * omega2
        if not -bound <= slack <= bound:
            return False
    return True


def is_quasistable(tree: CurveTree, md: Multidegree, component_id: str) -> bool:
    """Semistable, with the strict lower bound on subcurves containing X.

    Strictness on connected subcurves containing X propagates to
    disconnected ones because the remaining parts satisfy the non-strict
    lower bound by semistability.
    """
    try:
        bit = 1 << tree.ids.index(component_id)
    except ValueError:
        raise KeyError(f"unknown component '{component_id}'") from None
    g = tree.genus
    d = md.total
    scale = 2 * (2 * g - 2)
    for sub, omega2, bound in _connected_stats(tree):
        slack = scale * md.on(sub) - d * omega2
        if not -bound <= slack <= bound:
            return False
        if sub.mask & bit and slack == -bound:
            return False
    return True


def _component_ranges(tree: CurveTree, d: int) -> list[range]:
    """Per-component degree ranges allowed by the single-component bound."""
    g = tree.genus
    denom = 2 * (2 * g - 2)
    ranges = []
    for i, cid in enumerate(tree.ids):
        sub = Subcurve(1 << i)
        omega = tree.omega_degree(sub)
        bound = (2 * g - 2) * tree.k(sub)
        lo = -((-(2 * d * omega - bound)) // denom)  # ceil
        hi = (2 * d * omega + bound) // denom  # floor
        ranges.append(range(lo, hi + 1))
    return ranges


def enumerate_semistable(tree: CurveTree, d: int) -> tuple[Multidegree, ...]:
    """All semistable multidegrees of total degree d, canonically sorted.

    Candidates are generated inside the exact per-component box given by
    the single-component bound, pruned by the running total, then filtered
    at the remaining connected subcurves.
    """
    if d < 0:
        raise ValueError(f"total degree must be >= 0, got {d}")
    ranges = _component_ranges(tree, d)
    if any(not r for r in ranges):
        return ()
    n = len(ranges)
    suffix_min = [0] * (n + 1)
    suffix_max = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_min[i] = suffix_min[i + 1] + ranges[i][0]
        suffix_max[i] = suffix_max[i + 1] + ranges[i][-1]

    g = tree.genus
    scale = 2 * (2 * g - 2)
    stats = [
        (sub, omega2, bound)
        for sub, omega2, bound in _connected_stats(tree)
        if sub.mask.bit_count() > 1
    ]

    out: list[Multidegree] = []
    chosen = [0] * n

    def descend(i: int, total: int) -> None:
        if i == n:
            md = Multidegree(tuple(chosen))
            for sub, omega2, bound in stats:
                slack = scale * md.on(sub) - d * omega2
                if not -bound <= slack <= bound:
                    return
            out.append(md)
            return
        for value in ranges[i]:
            rest = d - total - value
            if suffix_min[i + 1] <= rest <= suffix_max[i + 1]:
                chosen[i] = value
                descend(i + 1, total + value)

    descend(0, 0)
    out.sort(key=lambda md: md.degrees)
    return tuple(out)


def enumerate_quasistable(tree: CurveTree, d: int, component_id: str) -> tuple[Multidegree, ...]:
    """Semistable multidegrees of total degree d that are X-quasistable."""
    return tuple(
        md
        for md in enumerate_semistable(tree, d)
        if is_quasistable(tree, md, component_id)
    )
