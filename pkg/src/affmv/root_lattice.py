"""Exact root-system arithmetic for the two rank-2 affine types.

Vectors live in the span of the two simple roots; weights add integer
multiples of the two fundamental weights.  All coordinates are ints or
Fractions, never floats.  Everything here is immutable and side-effect
free, so values can be shared across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

UNTWISTED = "untwisted"
TWISTED = "twisted"
SYSTEMS = (UNTWISTED, TWISTED)

# Gram matrices of the invariant bilinear form on the simple roots.
_GRAM = {
    UNTWISTED: ((2, -2), (-2, 2)),
    TWISTED: ((2, -4), (-4, 8)),
}

# cartan[i][j] = pairing of simple root j against simple coroot i.
_CARTAN = {
    UNTWISTED: ((2, -2), (-2, 2)),
    TWISTED: ((2, -4), (-1, 2)),
}


def _norm(x):
    """Collapse a denominator-1 Fraction to int so equality is canonical."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        return _norm(Fraction(x))
    raise TypeError(f"exact rational required, got {type(x).__name__}")


def _check_system(system: str) -> None:
    if system not in SYSTEMS:
        raise ValueError(f"unknown root system tag {system!r}")


@dataclass(frozen=True)
class RootVector:
    """Exact vector c0*alpha0 + c1*alpha1 in the chosen system."""

    c0: object
    c1: object
    system: str = UNTWISTED

    def __post_init__(self):
        _check_system(self.system)
        object.__setattr__(self, "c0", _norm(self.c0))
        object.__setattr__(self, "c1", _norm(self.c1))

    def __add__(self, other: "RootVector") -> "RootVector":
        self._same(other)
        return RootVector(self.c0 + other.c0, self.c1 + other.c1, self.system)

    def __sub__(self, other: "RootVector") -> "RootVector":
        self._same(other)
        return RootVector(self.c0 - other.c0, self.c1 - other.c1, self.system)

    def __neg__(self) -> "RootVector":
        return RootVector(-self.c0, -self.c1, self.system)

    def scale(self, r) -> "RootVector":
        return RootVector(r * self.c0, r * self.c1, self.system)

    def coord(self, i: int):
        """Coefficient of simple root i; equals pairing with a fundamental
        coweight, which is how the polytope inequalities are evaluated."""
        return self.c0 if i == 0 else self.c1

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def height(self):
        return self.c0 + self.c1

    def _same(self, other: "RootVector") -> None:
        if self.system != other.system:
            raise ValueError("mixed root systems")


def zero_vector(system: str = UNTWISTED) -> RootVector:
    return RootVector(0, 0, system)


def simple_root(i: int, system: str = UNTWISTED) -> RootVector:
    return RootVector(1 if i == 0 else 0, 1 if i == 1 else 0, system)


def delta(system: str = UNTWISTED) -> RootVector:
    """The primitive imaginary root: alpha0+alpha1, resp. 2*alpha0+alpha1."""
    return RootVector(1, 1) if system == UNTWISTED else RootVector(2, 1, TWISTED)


def bilinear(v: RootVector, w: RootVector):
    """Invariant bilinear form, exact."""
    v._same(w)
    g = _GRAM[v.system]
    a, b = (v.c0, v.c1), (w.c0, w.c1)
    return sum(a[i] * g[i][j] * b[j] for i in range(2) for j in range(2))


def real_root(side: str, k: int, system: str = UNTWISTED) -> RootVector:
    """The k-th real root climbing one side of the positive cone.

    side "lower" gives the alpha1 family, side "upper" the alpha0 family.
    For the twisted system the two families alternate between short and
    long roots with the parity of k.
    """
    if k < 1:
        raise ValueError(f"root index must be >= 1, got {k}")
    if side not in ("lower", "upper"):
        raise ValueError(f"side must be 'lower' or 'upper', got {side!r}")
    d = delta(system)
    if system == UNTWISTED:
        base = simple_root(1 if side == "lower" else 0)
        return base + d.scale(k - 1)
    if side == "lower":
        if k % 2 == 1:
            return RootVector(0, 1, TWISTED) + d.scale(k - 1)
        return RootVector(1, 1, TWISTED) + d.scale(Fraction(k - 2, 2))
    if k % 2 == 1:
        return RootVector(1, 0, TWISTED) + d.scale(Fraction(k - 1, 2))
    return RootVector(2, 0, TWISTED) + d.scale(k - 1)


@dataclass(frozen=True)
class AffineWeight:
    """m0*Lambda0 + m1*Lambda1 + a root-lattice part."""

    m0: object
    m1: object
    root_part: RootVector

    def __post_init__(self):
        object.__setattr__(self, "m0", _norm(self.m0))
        object.__setattr__(self, "m1", _norm(self.m1))

    @property
    def system(self) -> str:
        return self.root_part.system

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(self.m0 + other.m0, self.m1 + other.m1,
                            self.root_part + other.root_part)

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(self.m0 - other.m0, self.m1 - other.m1,
                            self.root_part - other.root_part)

    def __neg__(self) -> "AffineWeight":
        return AffineWeight(-self.m0, -self.m1, -self.root_part)

    def add_root(self, v: RootVector) -> "AffineWeight":
        return AffineWeight(self.m0, self.m1, self.root_part + v)

    def is_dominant_integral(self) -> bool:
        return (isinstance(self.m0, int) and isinstance(self.m1, int)
                and self.m0 >= 0 and self.m1 >= 0
                and self.root_part.is_zero())


def weight_from_roots(v: RootVector) -> AffineWeight:
    return AffineWeight(0, 0, v)


def fundamental_weight(i: int, system: str = UNTWISTED) -> AffineWeight:
    return AffineWeight(1 if i == 0 else 0, 1 if i == 1 else 0,
                        zero_vector(system))


def pair_coroot(w, i: int, system: str | None = None):
    """Pairing against the i-th simple coroot.

    Accepts an AffineWeight or a bare RootVector; fundamental weights pair
    to the Kronecker delta and simple roots via the Cartan matrix.
    """
    if isinstance(w, RootVector):
        w = weight_from_roots(w)
    if system is not None and system != w.system:
        raise ValueError("system tag does not match the weight")
    cartan = _CARTAN[w.system]
    lam = w.m0 if i == 0 else w.m1
    return lam + cartan[i][0] * w.root_part.c0 + cartan[i][1] * w.root_part.c1


def weyl_reflect(w: AffineWeight, i: int) -> AffineWeight:
    """Simple reflection s_i(w) = w - <w, alpha_i^vee> alpha_i."""
    n = pair_coroot(w, i)
    return w.add_root(simple_root(i, w.system).scale(-n))


def weyl_orbit_chains(lam: AffineWeight, depth: int):
    """The two alternating reflection chains through -lam.

    Returns (v, vbar) with v[k] = s1 s0 s1 ... (-lam) and
    vbar[k] = s0 s1 s0 ... (-lam), each word of length k, for k <= depth.
    """
    if not lam.is_dominant_integral():
        raise ValueError("weight must be dominant integral")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    v = [-lam]
    vbar = [-lam]
    for _ in range(depth):
        v.append(weyl_reflect(vbar[-1], 1))
        vbar.append(weyl_reflect(v[-2], 0))
    return v, vbar
