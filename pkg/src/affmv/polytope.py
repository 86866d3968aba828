"""Decorated polytopes, the defining inequalities, diagonals, and pictures.

A polytope is stored as its pair of Lusztig data; the four vertex chains
are derived.  The vertex after k steps up the right lower chain is mu(k),
up the left lower chain mubar(k); mu_up(k) and mubar_up(k) count steps
down from the top vertex.  Everything is exact and immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .builder import right_to_left
from .lusztig import LusztigDatum, Partition, left_weight, reverse, weight
from .root_lattice import (
    RootVector,
    TWISTED,
    UNTWISTED,
    bilinear,
    real_root,
    simple_root,
    zero_vector,
)

_FAMILIES = (
    "lower_a0",         # (mubar_k, mu_{k-1}), parallel to alpha0 when active
    "lower_a1",         # (mu_k, mubar_{k-1}), parallel to alpha1
    "upper_a1",         # (mubar^k, mu^{k-1}), parallel to alpha1
    "upper_a0",         # (mu^k, mubar^{k-1}), parallel to alpha0
    "middle_lower_a0",  # (mubar_inf, mu_inf)
    "middle_lower_a1",  # (mu_inf, mubar_inf)
    "middle_upper_a0",  # (mubar^inf, mu^inf)
    "middle_upper_a1",  # (mu^inf, mubar^inf)
)


@dataclass(frozen=True)
class Diagonal:
    """One candidate diagonal: a family name plus a level where indexed."""

    family: str
    level: int | None = None

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family.startswith("middle"):
            if self.level is not None:
                raise ValueError("middle diagonals carry no level")
        else:
            if self.level is None or self.level < 1:
                raise ValueError("indexed diagonals need a positive level")

    @property
    def axis(self) -> str:
        return self.family[-2:]

    def slot(self):
        """Height position of the diagonal's slot, ordered bottom to top."""
        if self.family.startswith("lower"):
            return (0, self.level)
        if self.family == "middle_lower_a0" or self.family == "middle_lower_a1":
            return (1, 0)
        if self.family == "middle_upper_a0" or self.family == "middle_upper_a1":
            return (1, 1)
        return (2, -self.level)


def _scaled_root(side, k, system, coeff):
    return real_root(side, k, system).scale(coeff)


@dataclass(frozen=True)
class DecoratedPolytope:
    """Right and left Lusztig data of one decorated GGMS polytope."""

    right: LusztigDatum
    left: LusztigDatum

    def __post_init__(self):
        if self.right.system != self.left.system:
            raise ValueError("mixed root systems")
        if weight(self.right) != left_weight(self.left):
            raise ValueError("sides do not close")

    @property
    def system(self) -> str:
        return self.right.system

    @cached_property
    def top(self) -> RootVector:
        return weight(self.right)

    # -- vertex chains, all anchored at mu_0 = 0 ---------------------------

    def mu(self, k: int) -> RootVector:
        v = zero_vector(self.system)
        for j in range(1, min(k, len(self.right.a)) + 1):
            v = v + _scaled_root("lower", j, self.system, self.right.entry(j))
        return v

    def mubar(self, k: int) -> RootVector:
        v = zero_vector(self.system)
        for j in range(1, min(k, len(self.left.a)) + 1):
            v = v + _scaled_root("upper", j, self.system, self.left.entry(j))
        return v

    def mu_up(self, k: int) -> RootVector:
        v = self.top
        for j in range(1, min(k, len(self.right.a_up)) + 1):
            v = v - _scaled_root("upper", j, self.system, self.right.up_entry(j))
        return v

    def mubar_up(self, k: int) -> RootVector:
        v = self.top
        for j in range(1, min(k, len(self.left.a_up)) + 1):
            v = v - _scaled_root("lower", j, self.system, self.left.up_entry(j))
        return v

    @cached_property
    def mu_inf(self) -> RootVector:
        return self.mu(len(self.right.a))

    @cached_property
    def mubar_inf(self) -> RootVector:
        return self.mubar(len(self.left.a))

    @cached_property
    def mu_up_inf(self) -> RootVector:
        return self.mu_up(len(self.right.a_up))

    @cached_property
    def mubar_up_inf(self) -> RootVector:
        return self.mubar_up(len(self.left.a_up))

    def stabilization(self) -> int:
        """Largest index at which any of the four chains still moves."""
        return max(1, self.right.max_index(), self.left.max_index())

    def width(self):
        diff = self.mu_inf - self.mubar_inf
        norm = 2 if self.system == UNTWISTED else 8
        return Fraction(bilinear(diff, simple_root(1, self.system)), norm)

    # -- diagonal pairings -------------------------------------------------

    def pairing(self, d: Diagonal):
        """The quantity whose vanishing makes the diagonal active."""
        f, k = d.family, d.level
        if f == "lower_a0":
            return (self.mubar(k) - self.mu(k - 1)).coord(1)
        if f == "lower_a1":
            return (self.mu(k) - self.mubar(k - 1)).coord(0)
        if f == "upper_a1":
            return (self.mubar_up(k) - self.mu_up(k - 1)).coord(0)
        if f == "upper_a0":
            return (self.mu_up(k) - self.mubar_up(k - 1)).coord(1)
        if f == "middle_lower_a0":
            return (self.mubar_inf - self.mu_inf).coord(1)
        if f == "middle_lower_a1":
            return (self.mu_inf - self.mubar_inf).coord(0)
        if f == "middle_upper_a0":
            return (self.mu_up_inf - self.mubar_up_inf).coord(1)
        return (self.mubar_up_inf - self.mu_up_inf).coord(0)

    def is_active(self, d: Diagonal) -> bool:
        return self.pairing(d) == 0

    def diagonal_length(self, d: Diagonal):
        """Length of an active diagonal in units of its root direction."""
        f, k = d.family, d.level
        if f == "lower_a0":
            return (self.mubar(k) - self.mu(k - 1)).coord(0)
        if f == "lower_a1":
            return (self.mu(k) - self.mubar(k - 1)).coord(1)
        if f == "upper_a1":
            return (self.mu_up(k - 1) - self.mubar_up(k)).coord(1)
        if f == "upper_a0":
            return (self.mubar_up(k - 1) - self.mu_up(k)).coord(0)
        if f == "middle_lower_a0":
            return (self.mubar_inf - self.mu_inf).coord(0)
        if f == "middle_lower_a1":
            return (self.mu_inf - self.mubar_inf).coord(1)
        if f == "middle_upper_a0":
            return (self.mubar_up_inf - self.mu_up_inf).coord(0)
        return (self.mu_up_inf - self.mubar_up_inf).coord(1)


def from_data_pair(a: LusztigDatum, abar: LusztigDatum) -> DecoratedPolytope:
    """Assemble a polytope from a right/left data pair (must close up)."""
    return DecoratedPolytope(a, abar)


def from_right_data(a: LusztigDatum) -> DecoratedPolytope:
    if a.system != UNTWISTED:
        from .twisted import a22_right_to_left
        return DecoratedPolytope(a, a22_right_to_left(a))
    return DecoratedPolytope(a, right_to_left(a))


@dataclass(frozen=True)
class MvReport:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _first_level(system: str) -> int:
    # the twisted conditions are stated from level 1, the untwisted from 2
    return 1 if system == TWISTED else 2


def is_mv(p: DecoratedPolytope) -> MvReport:
    """Check the four defining conditions; report the first violation."""
    kmax = p.stabilization() + 1
    lo = _first_level(p.system)
    for k in range(lo, kmax + 1):
        pa0 = p.pairing(Diagonal("lower_a0", k))
        pa1 = p.pairing(Diagonal("lower_a1", k))
        if pa0 > 0 or pa1 > 0 or (pa0 != 0 and pa1 != 0):
            return MvReport(False, f"condition (1) fails at level {k}")
        qa1 = p.pairing(Diagonal("upper_a1", k))
        qa0 = p.pairing(Diagonal("upper_a0", k))
        if qa1 < 0 or qa0 < 0 or (qa1 != 0 and qa0 != 0):
            return MvReport(False, f"condition (2) fails at level {k}")
    # stabilized limits of (1) and (2)
    ml0 = p.pairing(Diagonal("middle_lower_a0"))
    ml1 = p.pairing(Diagonal("middle_lower_a1"))
    if ml0 > 0 or ml1 > 0 or (ml0 != 0 and ml1 != 0):
        return MvReport(False, "condition (1) fails at the stabilized level")
    mu0 = p.pairing(Diagonal("middle_upper_a0"))
    mu1 = p.pairing(Diagonal("middle_upper_a1"))
    if mu0 < 0 or mu1 < 0 or (mu0 != 0 and mu1 != 0):
        return MvReport(False, "condition (2) fails at the stabilized level")

    lam, lbar = p.right.lam, p.left.lam
    v_low = p.mu_inf - p.mubar_inf
    v_up = p.mu_up_inf - p.mubar_up_inf
    parallel = v_low.c0 * v_up.c1 - v_low.c1 * v_up.c0 == 0
    w = p.width()
    if parallel:
        if lam != lbar:
            return MvReport(False, "condition (3): parallel sides need "
                                   "equal decorations")
    else:
        if lbar.size() == lam.size() + w:
            if lbar != lam.add_part(w):
                return MvReport(False, "condition (3): left decoration is "
                                       "not right plus a width part")
        elif lam.size() == lbar.size() + w:
            if lam != lbar.add_part(w):
                return MvReport(False, "condition (3): right decoration is "
                                       "not left plus a width part")
        else:
            return MvReport(False, "condition (3): decoration sizes do not "
                                   "differ by the width")
    if lam.largest() > w or lbar.largest() > w:
        return MvReport(False, "condition (4): decoration part exceeds width")
    return MvReport(True)


def k1_diagnostic(p: DecoratedPolytope) -> bool:
    """Whether the (vacuous) untwisted level-1 analogue of (1)-(2) holds."""
    pa0 = p.pairing(Diagonal("lower_a0", 1))
    pa1 = p.pairing(Diagonal("lower_a1", 1))
    qa1 = p.pairing(Diagonal("upper_a1", 1))
    qa0 = p.pairing(Diagonal("upper_a0", 1))
    return (pa0 <= 0 and pa1 <= 0 and (pa0 == 0 or pa1 == 0)
            and qa1 >= 0 and qa0 >= 0 and (qa1 == 0 or qa0 == 0))


def active_diagonals(p: DecoratedPolytope) -> list[Diagonal]:
    """Every diagonal whose pairing vanishes, bottom to top."""
    rep = is_mv(p)
    if not rep:
        raise ValueError(f"not an MV polytope: {rep.reason}")
    out = []
    kmax = p.stabilization()
    lo = _first_level(p.system)
    for k in range(lo, kmax + 1):
        for fam in ("lower_a0", "lower_a1"):
            d = Diagonal(fam, k)
            if p.is_active(d):
                out.append(d)
    for fam in ("middle_lower_a0", "middle_lower_a1",
                "middle_upper_a0", "middle_upper_a1"):
        d = Diagonal(fam)
        if p.is_active(d):
            out.append(d)
    for k in range(kmax, lo - 1, -1):
        for fam in ("upper_a1", "upper_a0"):
            d = Diagonal(fam, k)
            if p.is_active(d):
                out.append(d)
    return out


def cut_along(p: DecoratedPolytope, d: Diagonal):
    """Split an MV polytope along an active diagonal into two MV halves."""
    if not p.is_active(d):
        raise ValueError(f"diagonal {d} is not active")
    ell = p.diagonal_length(d)
    a, ab = p.right, p.left
    f, k = d.family, d.level
    sys = p.system

    def datum(low, lam, up):
        return LusztigDatum(tuple(low), lam, tuple(up), sys)

    if f == "lower_a0":
        bottom = from_data_pair(
            datum(a.a[:k - 1], Partition(), (ell,)),
            datum(ab.a[:k], Partition(), ()))
        top = from_data_pair(
            datum((0,) * (k - 1) + a.a[k - 1:], a.lam, a.a_up),
            datum((ell,) + (0,) * (k - 1) + ab.a[k:], ab.lam, ab.a_up))
    elif f == "lower_a1":
        bottom = from_data_pair(
            datum(a.a[:k], Partition(), ()),
            datum(ab.a[:k - 1], Partition(), (ell,)))
        top = from_data_pair(
            datum((ell,) + (0,) * (k - 1) + a.a[k:], a.lam, a.a_up),
            datum((0,) * (k - 1) + ab.a[k - 1:], ab.lam, ab.a_up))
    elif f == "middle_lower_a0":
        bottom = from_data_pair(
            datum(a.a, Partition(), (ell,)),
            datum(ab.a, Partition(), ()))
        top = from_data_pair(
            datum((), a.lam, a.a_up),
            datum((ell,), ab.lam, ab.a_up))
    elif f == "middle_lower_a1":
        bottom = from_data_pair(
            datum(a.a, Partition(), ()),
            datum(ab.a, Partition(), (ell,)))
        top = from_data_pair(
            datum((ell,), a.lam, a.a_up),
            datum((), ab.lam, ab.a_up))
    elif f == "middle_upper_a0":
        bottom = from_data_pair(
            datum(a.a, a.lam, (ell,)),
            datum(ab.a, ab.lam, ()))
        top = from_data_pair(
            datum((), Partition(), a.a_up),
            datum((ell,), Partition(), ab.a_up))
    elif f == "middle_upper_a1":
        bottom = from_data_pair(
            datum(a.a, a.lam, ()),
            datum(ab.a, ab.lam, (ell,)))
        top = from_data_pair(
            datum((ell,), Partition(), a.a_up),
            datum((), Partition(), ab.a_up))
    elif f == "upper_a1":
        bottom = from_data_pair(
            datum(a.a, a.lam, (0,) * (k - 1) + a.a_up[k - 1:]),
            datum(ab.a, ab.lam, (ell,) + (0,) * (k - 1) + ab.a_up[k:]))
        top = from_data_pair(
            datum((ell,), Partition(), a.a_up[:k - 1]),
            datum((), Partition(), ab.a_up[:k]))
    else:  # upper_a0
        bottom = from_data_pair(
            datum(a.a, a.lam, (ell,) + (0,) * (k - 1) + a.a_up[k:]),
            datum(ab.a, ab.lam, (0,) * (k - 1) + ab.a_up[k - 1:]))
        top = from_data_pair(
            datum((), Partition(), a.a_up[:k]),
            datum((ell,), Partition(), ab.a_up[:k - 1]))

    for half in (bottom, top):
        rep = is_mv(half)
        if not rep:
            raise AssertionError(f"cut half not MV: {rep.reason}")
    return bottom, top


# -- symmetries -------------------------------------------------------------


def reflect_h(p: DecoratedPolytope) -> DecoratedPolytope:
    """Swap the two simple-root directions: right and left data trade."""
    return DecoratedPolytope(p.left, p.right)


def reflect_v(p: DecoratedPolytope) -> DecoratedPolytope:
    """Flip top and bottom: both data reverse."""
    return DecoratedPolytope(reverse(p.right), reverse(p.left))


def negate(p: DecoratedPolytope) -> DecoratedPolytope:
    """Point reflection, the composition of the two mirror symmetries."""
    return DecoratedPolytope(reverse(p.left), reverse(p.right))


# -- complete systems of diagonals and their realization --------------------


@dataclass(frozen=True)
class DiagonalSystem:
    """One choice of diagonal per slot, eventually constant on both ends.

    lower[i] is the choice at lower level i+2; past the stored prefix the
    choice is lower_tail, and similarly for the upper half.  Choices are
    the strings "a0" and "a1".
    """

    lower: tuple = ()
    lower_tail: str = "a0"
    upper: tuple = ()
    upper_tail: str = "a0"

    def __post_init__(self):
        for c in self.lower + self.upper + (self.lower_tail, self.upper_tail):
            if c not in ("a0", "a1"):
                raise ValueError(f"choice must be 'a0' or 'a1', got {c!r}")
        # drop prefix entries that already agree with the tail
        low, up = list(self.lower), list(self.upper)
        while low and low[-1] == self.lower_tail:
            low.pop()
        while up and up[-1] == self.upper_tail:
            up.pop()
        object.__setattr__(self, "lower", tuple(low))
        object.__setattr__(self, "upper", tuple(up))

    def choice_lower(self, k: int) -> str:
        if k < 2:
            raise ValueError("lower slots start at level 2")
        i = k - 2
        return self.lower[i] if i < len(self.lower) else self.lower_tail

    def choice_upper(self, k: int) -> str:
        if k < 2:
            raise ValueError("upper slots start at level 2")
        i = k - 2
        return self.upper[i] if i < len(self.upper) else self.upper_tail

    def sequence(self) -> list:
        """Choices read from the bottom slot to the top slot."""
        seq = list(self.lower) + [self.lower_tail, self.upper_tail]
        seq += list(reversed(self.upper))
        return seq

    def type_changes(self) -> int:
        seq = self.sequence()
        return sum(1 for x, y in zip(seq, seq[1:]) if x != y)

    def flip(self) -> "DiagonalSystem":
        sw = {"a0": "a1", "a1": "a0"}
        return DiagonalSystem(tuple(sw[c] for c in self.lower),
                              sw[self.lower_tail],
                              tuple(sw[c] for c in self.upper),
                              sw[self.upper_tail])


def active_system_matches(p: DecoratedPolytope, s: DiagonalSystem) -> bool:
    """Whether exactly the diagonals of s are active in p, no others."""
    bound = max(p.stabilization(), len(s.lower) + 1, len(s.upper) + 1) + 1
    for k in range(2, bound + 1):
        want = s.choice_lower(k)
        a0 = p.is_active(Diagonal("lower_a0", k))
        a1 = p.is_active(Diagonal("lower_a1", k))
        if (a0, a1) != (want == "a0", want == "a1"):
            return False
        want = s.choice_upper(k)
        a0 = p.is_active(Diagonal("upper_a0", k))
        a1 = p.is_active(Diagonal("upper_a1", k))
        if (a0, a1) != (want == "a0", want == "a1"):
            return False
    for fam, want in (("middle_lower", s.lower_tail),
                      ("middle_upper", s.upper_tail)):
        a0 = p.is_active(Diagonal(fam + "_a0"))
        a1 = p.is_active(Diagonal(fam + "_a1"))
        if (a0, a1) != (want == "a0", want == "a1"):
            return False
    return True


def _scale_datum(d: LusztigDatum, m) -> LusztigDatum:
    return LusztigDatum(tuple(x * m for x in d.a),
                        Partition(tuple(p * m for p in d.lam.parts)),
                        tuple(x * m for x in d.a_up), d.system)


def _denominator_lcm(d: LusztigDatum) -> int:
    out = 1
    for x in list(d.a) + list(d.a_up) + list(d.lam.parts):
        if isinstance(x, Fraction):
            out = out * x.denominator // math.gcd(out, x.denominator)
    return out


def scale_to_integral(p: DecoratedPolytope) -> DecoratedPolytope:
    m = 1
    for d in (p.right, p.left):
        n = _denominator_lcm(d)
        m = m * n // math.gcd(m, n)
    if m == 1:
        return p
    return DecoratedPolytope(_scale_datum(p.right, m), _scale_datum(p.left, m))


# rational sizes tried for the free gluing parameter, nearly-degenerate first
_GLUE_PARAMS = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), 1,
                Fraction(2, 3), Fraction(1, 6), 2, 3)


def realize_diagonal_system(s: DiagonalSystem) -> DecoratedPolytope:
    """An integral MV polytope whose active diagonals are exactly s.

    Built by induction on the number of type changes: glue a quadrilateral
    or a triangle below a recursively realized polytope, then clear
    denominators.
    """
    p = _realize(s)
    p = scale_to_integral(p)
    rep = is_mv(p)
    assert rep, rep.reason
    assert active_system_matches(p, s)
    return p


def _realize(s: DiagonalSystem) -> DecoratedPolytope:
    if s.type_changes() == 0:
        t = s.lower_tail
        if t == "a1":
            return from_data_pair(LusztigDatum((1,)),
                                  LusztigDatum((), Partition(), (1,)))
        return from_data_pair(LusztigDatum((), Partition(), (1,)),
                              LusztigDatum((1,)))
    if s.choice_lower(2) == "a0":
        return reflect_h(_realize(s.flip()))

    # lowest alpha0 choice, scanning bottom to top
    low_len = len(s.lower) + 1
    for k in range(2, low_len + 2):
        if s.choice_lower(k) == "a0":
            return _realize_glue_lower(s, k)
    if s.upper_tail == "a0":
        return _realize_glue_triangle(s)
    up_len = len(s.upper) + 1
    for k in range(up_len + 1, 1, -1):
        if s.choice_upper(k) == "a0":
            return _realize_glue_upper(s, k)
    raise AssertionError("change count positive but no alpha0 choice found")


def _candidate_ok(p: DecoratedPolytope, s: DiagonalSystem) -> bool:
    return bool(is_mv(p)) and active_system_matches(p, s)


def _realize_glue_lower(s: DiagonalSystem, k: int) -> DecoratedPolytope:
    """Glue a quadrilateral below the lowest alpha0 slot at lower level k."""
    inner = DiagonalSystem(("a0",) * (k - 2) + tuple(s.lower[k - 2:]),
                           s.lower_tail, s.upper, s.upper_tail)
    q = _realize(inner)
    ell = q.left.entry(1)
    assert ell > 0 and q.right.entry(1) == 0
    for t in _GLUE_PARAMS:
        for m in _GLUE_PARAMS:
            # new bottom quadrilateral with left edges t at k-1 and u at k
            u = (m * ell - (k - 1) * t) / Fraction(k)
            if u <= 0:
                continue
            a1 = (k - 2) * t + (k - 1) * u
            right = LusztigDatum(
                (a1,) + tuple(x * m for x in q.right.a[1:]),
                Partition(tuple(x * m for x in q.right.lam.parts)),
                tuple(x * m for x in q.right.a_up))
            la = {k - 1: t, k: u}
            for j, x in enumerate(q.left.a[1:], start=2):
                if x:
                    assert j > k, "inner polytope left chain reaches the glue"
                    la[j] = x * m
            top = max(la)
            left = LusztigDatum(
                tuple(la.get(j, 0) for j in range(1, top + 1)),
                Partition(tuple(x * m for x in q.left.lam.parts)),
                tuple(x * m for x in q.left.a_up))
            cand = from_data_pair(right, left)
            if _candidate_ok(cand, s):
                return cand
    raise AssertionError(f"no gluing parameters realized {s}")


def _realize_glue_triangle(s: DiagonalSystem) -> DecoratedPolytope:
    """All lower slots alpha1, first alpha0 at the stabilized upper slot."""
    inner = DiagonalSystem((), "a0", s.upper, s.upper_tail)
    q = _realize(inner)
    ell = q.left.entry(1)
    assert ell > 0
    assert not q.right.a and not q.right.lam.parts and not q.left.lam.parts
    assert all(x == 0 for x in q.left.a[1:])
    for m in _GLUE_PARAMS:
        w = m * ell
        right = LusztigDatum((w,), Partition(),
                             tuple(x * m for x in q.right.a_up))
        left = LusztigDatum((), Partition.of(w),
                            tuple(x * m for x in q.left.a_up))
        cand = from_data_pair(right, left)
        if _candidate_ok(cand, s):
            return cand
    raise AssertionError(f"no gluing parameters realized {s}")


def _realize_glue_upper(s: DiagonalSystem, k: int) -> DecoratedPolytope:
    """Glue a quadrilateral below an alpha0 slot at upper level k."""
    inner = DiagonalSystem((), "a0", tuple(s.upper[:k - 1]), "a0")
    q = _realize(inner)
    ell = q.left.entry(1)
    assert ell > 0
    assert not q.right.a and not q.right.lam.parts and not q.left.lam.parts
    assert all(x == 0 for x in q.left.a[1:])
    assert all(q.right.up_entry(j) == 0
               for j in range(k + 1, len(q.right.a_up) + 1))
    assert all(q.left.up_entry(j) == 0 for j in range(k, len(q.left.a_up) + 1))
    for t in _GLUE_PARAMS:
        for m in _GLUE_PARAMS:
            # quadrilateral with left edges u at level k and t at level k+1
            u = (m * ell - k * t) / Fraction(k - 1)
            if u <= 0:
                continue
            a1 = k * u + (k + 1) * t
            right = LusztigDatum((a1,), Partition(),
                                 tuple(x * m for x in q.right.a_up))
            lup = {j: x * m for j, x in enumerate(q.left.a_up, start=1) if x}
            assert all(j < k for j in lup)
            lup[k] = u
            lup[k + 1] = t
            top = max(lup)
            left = LusztigDatum((), Partition(),
                                tuple(lup.get(j, 0) for j in range(1, top + 1)))
            cand = from_data_pair(right, left)
            if _candidate_ok(cand, s):
                return cand
    raise AssertionError(f"no gluing parameters realized {s}")


# -- pictures ---------------------------------------------------------------


def _draw_frame(p: DecoratedPolytope):
    """Integer picture coordinates of the boundary and decoration ticks."""
    stretch = 1 if p.system == UNTWISTED else 2

    def xy(v: RootVector):
        return (-v.c0 + stretch * v.c1, v.c0 + stretch * v.c1)

    n = p.stabilization()
    right_side = [p.mu(k) for k in range(n + 1)] + [p.mu_up_inf]
    right_side += [p.mu_up(k) for k in range(n, -1, -1)]
    left_side = [p.mubar(k) for k in range(n + 1)] + [p.mubar_up_inf]
    left_side += [p.mubar_up(k) for k in range(n, -1, -1)]
    cycle = right_side + [v for v in reversed(left_side)]
    boundary = []
    for v in cycle:
        pt = xy(v)
        if not boundary or boundary[-1] != pt:
            boundary.append(pt)
    if len(boundary) > 1 and boundary[0] == boundary[-1]:
        boundary.pop()

    ticks = []
    for base, lam in ((p.mu_inf, p.right.lam), (p.mubar_inf, p.left.lam)):
        total = 0
        for part in lam.parts[:-1]:
            total += part
            from .root_lattice import delta
            ticks.append(xy(base + delta(p.system).scale(total)))

    scale = 1
    for x, y in boundary + ticks:
        for c in (x, y):
            if isinstance(c, Fraction):
                scale = scale * c.denominator // math.gcd(scale, c.denominator)
    boundary = [(x * scale, y * scale) for x, y in boundary]
    ticks = [(x * scale, y * scale) for x, y in ticks]
    return boundary, ticks


def render(p: DecoratedPolytope, format: str = "svg") -> str:
    """Deterministic picture of an MV polytope, as SVG or TikZ text."""
    rep = is_mv(p)
    if not rep:
        raise ValueError(f"not an MV polytope: {rep.reason}")
    if format not in ("svg", "tikz"):
        raise ValueError(f"format must be 'svg' or 'tikz', got {format!r}")
    boundary, ticks = _draw_frame(p)
    if format == "tikz":
        lines = ["\\begin{tikzpicture}[scale=0.5]"]
        if len(boundary) > 1:
            path = " -- ".join(f"({x},{y})" for x, y in boundary)
            lines.append(f"\\draw[thick] {path} -- cycle;")
        for x, y in boundary:
            lines.append(f"\\fill ({x},{y}) circle (0.08);")
        for x, y in ticks:
            lines.append(f"\\fill ({x},{y}) circle (0.05);")
        lines.append("\\end{tikzpicture}")
        return "\n".join(lines) + "\n"

    xs = [x for x, _ in boundary] or [0]
    ys = [y for _, y in boundary] or [0]
    pad = 2
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - x0 + pad, max(ys) - y0 + pad
    # svg y axis points down; flip
    flip = max(ys) + pad

    def pt(x, y):
        return f"{x},{flip - y}"

    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" '
             f'viewBox="{x0} {flip - (y0 + h)} {w} {h}">']
    if len(boundary) > 1:
        pts = " ".join(pt(x, y) for x, y in boundary)
        lines.append(f'<polygon points="{pts}" fill="none" '
                     f'stroke="black" stroke-width="0.15"/>')
    for x, y in boundary:
        lines.append(f'<circle cx="{x}" cy="{flip - y}" r="0.3"/>')
    for x, y in ticks:
        lines.append(f'<circle cx="{x}" cy="{flip - y}" r="0.2"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
