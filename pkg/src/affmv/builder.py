"""Compute the left side of an MV polytope from its right Lusztig data.

The recursion mirrors the inductive construction: peel one quadrilateral
or triangle off the bottom, decided by an explicit inequality between the
first left entry of a reduced datum and the low entries of the input,
and glue the closed-form pieces back together.  Inputs may be rational;
integral inputs always produce integral outputs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .lusztig import LusztigDatum, Partition, left_weight, reverse, weight
from .root_lattice import UNTWISTED, _norm


def _require_nonneg(*values):
    for v in values:
        if v < 0:
            raise ValueError(f"negative input {v}")


def _merge_disjoint(*sparse):
    """Combine {index: value} dicts whose supports must not collide."""
    out: dict = {}
    for part in sparse:
        for j, v in part.items():
            if v == 0:
                continue
            if out.get(j):
                raise AssertionError(f"edge collision at index {j}")
            out[j] = v
    if not out:
        return ()
    top = max(out)
    return tuple(out.get(j, 0) for j in range(1, top + 1))


def _sparse(entries) -> dict:
    return {j: v for j, v in enumerate(entries, start=1) if v != 0}


def left_data_quadrilateral(a1, a1up) -> LusztigDatum:
    """Left data of the polytope with right data (a_1, 0, ..., 0, a^1).

    Equal entries give a triangle whose left side is a decorated vertical
    edge.  Otherwise the left side consists of two consecutive root edges
    picked out by the integer r with (r-1)/r <= a_1/a^1 <= r/(r+1); at a
    ratio boundary both admissible r give the same answer.
    """
    a1, a1up = _norm(a1), _norm(a1up)
    _require_nonneg(a1, a1up)
    if a1 == a1up:
        lam = Partition.of(a1) if a1 else Partition()
        return LusztigDatum((), lam, ())
    if a1 > a1up:
        return reverse(left_data_quadrilateral(a1up, a1))

    diff = a1up - a1
    lo = Fraction(a1) / Fraction(diff)
    r = max(1, math.ceil(lo))

    def entries(r):
        er = r * a1up - (r + 1) * a1
        er1 = r * a1 - (r - 1) * a1up
        assert er >= 0 and er1 >= 0, (a1, a1up, r)
        return _merge_disjoint({r: er, r + 1: er1})

    out = entries(r)
    if lo == r and r >= 1:
        # two admissible r at the ratio boundary; they must agree
        assert entries(r + 1) == out, (a1, a1up, r)
    return LusztigDatum(out, Partition(), ())


def left_data_a1_ak(a1, k: int, ak) -> LusztigDatum:
    """Left data for right data with only a_1 and a_k nonzero (k >= 2)."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    a1, ak = _norm(a1), _norm(ak)
    _require_nonneg(a1, ak)
    if a1 >= (k - 2) * ak:
        return LusztigDatum(
            _merge_disjoint({k - 1: ak}), Partition(),
            (a1 + 2 * ak,) if a1 + 2 * ak else ())
    # stack a triangle above the quadrilateral with top edge (k-1)*ak
    quad = left_data_quadrilateral(a1, (k - 1) * ak)
    assert not quad.lam.parts and not quad.a_up
    return LusztigDatum(quad.a, Partition(), (k * ak,))


def left_data_ak_a1up(k: int, ak, a1up) -> LusztigDatum:
    """Left data for right data with only a_k (k >= 2) and a^1 nonzero."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    ak, a1up = _norm(ak), _norm(a1up)
    _require_nonneg(ak, a1up)
    if a1up >= (k + 1) * ak:
        return LusztigDatum(
            _merge_disjoint({1: a1up - 2 * ak, k + 1: ak}),
            Partition(), ())
    # stack the polytope with right data (k*ak, 0, ..., 0, a^1) above a
    # triangle whose left edge is (k-1)*ak
    inner = left_data_quadrilateral(k * ak, a1up)
    merged = _merge_disjoint({1: (k - 1) * ak}, _sparse(inner.a))
    return LusztigDatum(merged, inner.lam, inner.a_up)


def left_data_base(a1, lam: Partition, a1up) -> LusztigDatum:
    """Left data for right data of the form (a_1, lambda, a^1)."""
    a1, a1up = _norm(a1), _norm(a1up)
    _require_nonneg(a1, a1up)
    lam1 = lam.largest()
    if lam1 > max(a1, a1up):
        # two quadrilaterals with a decorated trapezoid between them
        q_bottom = left_data_quadrilateral(a1, lam1)
        q_top = left_data_quadrilateral(a1up, lam1)
        assert not q_bottom.lam.parts and not q_top.lam.parts
        mid = Partition(lam.parts[1:])
        return LusztigDatum(q_bottom.a, mid, q_top.a)
    if a1 == a1up:
        # trapezoid; the right edge length becomes the top left part
        return LusztigDatum((), lam.add_part(a1), ())
    if a1 < a1up:
        q = left_data_quadrilateral(a1, a1up)
        assert not q.lam.parts and not q.a_up
        return LusztigDatum(q.a, lam, ())
    return reverse(left_data_base(a1up, lam, a1))


@lru_cache(maxsize=None)
def _rtl(datum: LusztigDatum) -> LusztigDatum:
    a = datum
    low = _sparse(a.a)
    high = {j for j in low if j >= 2}

    if high:
        k = min(high)
        if a.entry(1) != 0:
            result = _case_low_first(a, k)
        else:
            result = _case_low_zero(a, k)
    elif any(j >= 2 for j in _sparse(a.a_up)):
        result = reverse(_rtl(reverse(a)))
    else:
        result = left_data_base(a.entry(1), a.lam, a.up_entry(1))

    assert left_weight(result) == weight(a), (a, result)
    return result


def _case_low_first(a: LusztigDatum, k: int) -> LusztigDatum:
    """a_1 > 0 and a_k > 0 for the smallest k >= 2."""
    a1, ak = a.entry(1), a.entry(k)
    bbar = _rtl(a.with_entry(1, 0))
    b1 = bbar.entry(1)
    assert all(bbar.entry(j) == 0 for j in range(2, k + 1))
    if (k - 1) * b1 >= k * a1 + ak:
        # the alpha0 diagonal at level k is active: quadrilateral below
        quad = left_data_quadrilateral(a1, b1)
        assert len(quad.a) <= k
        merged = _merge_disjoint(
            _sparse(quad.a),
            {j: v for j, v in _sparse(bbar.a).items() if j > k})
        return LusztigDatum(merged, bbar.lam, bbar.a_up)
    # the alpha1 diagonal at level k is active: level-k piece below
    c1 = max(a1 + 2 * ak, k * ak)
    c = LusztigDatum((c1,) + (0,) * (k - 1) + a.a[k:], a.lam, a.a_up)
    cbar = _rtl(c)
    assert all(cbar.entry(j) == 0 for j in range(1, k))
    merged = _merge_disjoint({k - 1: ak}, _sparse(cbar.a))
    return LusztigDatum(merged, cbar.lam, cbar.a_up)


def _case_low_zero(a: LusztigDatum, k: int) -> LusztigDatum:
    """a_1 = 0 and a_k > 0 for the smallest k >= 2."""
    ak, ak1 = a.entry(k), a.entry(k + 1)
    bbar = _rtl(a.with_entry(k, 0))
    b1 = bbar.entry(1)
    assert all(bbar.entry(j) == 0 for j in range(2, k + 2))
    if b1 <= (k + 1) * ak + k * ak1:
        # the alpha1 diagonal at level k+1 is active: quadrilateral below
        c1 = k * ak + (k + 1) * ak1
        c = LusztigDatum((c1,) + (0,) * k + a.a[k + 1:], a.lam, a.a_up)
        cbar = _rtl(c)
        assert all(cbar.entry(j) == 0 for j in range(1, k + 1))
        merged = _merge_disjoint(
            {1: (k - 1) * ak + k * ak1}, _sparse(cbar.a))
        return LusztigDatum(merged, cbar.lam, cbar.a_up)
    # the alpha0 diagonal at level k+1 is active: level-k piece below
    merged = _merge_disjoint(
        {1: b1 - 2 * ak, k + 1: ak},
        {j: v for j, v in _sparse(bbar.a).items() if j >= k + 2})
    return LusztigDatum(merged, bbar.lam, bbar.a_up)


def right_to_left(a: LusztigDatum) -> LusztigDatum:
    """Left Lusztig data of the unique MV polytope with right data a.

    Weight preserving, an involution, and integrality preserving; the
    recursion also accepts rational entries.
    """
    if a.system != UNTWISTED:
        raise ValueError("twisted data go through the twisted module")
    return _rtl(a)


def left_to_right(abar: LusztigDatum) -> LusztigDatum:
    """Right data from left data; the same map as right_to_left.

    Horizontal reflection identifies the two readings, and the transfer
    map commutes with it, so one function serves both directions.
    """
    return right_to_left(abar)


def abar1_closed_formula(a: LusztigDatum):
    """First left entry by the closed max formula, clamped at zero.

    Candidates come in three families: two consecutive low entries, the
    top decoration part, and a tail of high entries; each is discounted
    by the low entries it has to cross.
    """
    if a.system != UNTWISTED:
        raise ValueError("untwisted data only")
    low_total = sum(a.a)
    best = 0
    for k in range(2, len(a.a) + 2):
        cand = ((k - 1) * a.entry(k) + (k - 2) * a.entry(k - 1)
                - 2 * sum(a.entry(j) for j in range(1, k - 1)))
        best = max(best, cand)
    if a.lam.parts:
        best = max(best, a.lam.largest() - 2 * low_total)
    upper_tail = sum(a.a_up)
    for k in range(1, len(a.a_up) + 1):
        upper_tail -= a.up_entry(k)
        cand = (k * a.up_entry(k) + (k + 1) * a.up_entry(k + 1)
                + 2 * (upper_tail - a.up_entry(k + 1)) - 2 * low_total)
        best = max(best, cand)
    return best
