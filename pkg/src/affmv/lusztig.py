"""Lusztig data: edge multiplicities along one side of an MV polytope.

A datum stores the list a (edges in the alpha1-root family, indexed from
1), a partition decorating the vertical edge, and the list a_up (alpha0
family).  Entries may be Fractions internally; the serialized form is
integral only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .root_lattice import (
    RootVector,
    UNTWISTED,
    _check_system,
    _norm,
    delta,
    real_root,
    zero_vector,
)


def _trim(entries) -> tuple:
    out = [_norm(x) for x in entries]
    for x in out:
        if x < 0:
            raise ValueError(f"negative entry {x}")
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; zero parts are never stored."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(_norm(p) for p in self.parts if _norm(p) != 0)
        for p, q in zip(parts, parts[1:]):
            if p < q:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        object.__setattr__(self, "parts", parts)

    @staticmethod
    def of(*parts) -> "Partition":
        return Partition(tuple(sorted(parts, reverse=True)))

    def size(self):
        return sum(self.parts)

    def largest(self):
        return self.parts[0] if self.parts else 0

    def add_part(self, p) -> "Partition":
        if p == 0:
            return self
        return Partition(tuple(sorted(self.parts + (p,), reverse=True)))

    def remove_part(self, p) -> "Partition | None":
        """Remove one part equal to p, or None if absent."""
        parts = list(self.parts)
        if p in parts:
            parts.remove(p)
            return Partition(tuple(parts))
        return None

    def is_integral(self) -> bool:
        return all(isinstance(p, int) for p in self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


@dataclass(frozen=True)
class LusztigDatum:
    """One side's data (a_k), lambda, (a^k); index k counts from 1."""

    a: tuple = ()
    lam: Partition = Partition()
    a_up: tuple = ()
    system: str = UNTWISTED

    def __post_init__(self):
        _check_system(self.system)
        object.__setattr__(self, "a", _trim(self.a))
        object.__setattr__(self, "a_up", _trim(self.a_up))
        if not isinstance(self.lam, Partition):
            object.__setattr__(self, "lam", Partition(tuple(self.lam)))

    @staticmethod
    def zero(system: str = UNTWISTED) -> "LusztigDatum":
        return LusztigDatum(system=system)

    def entry(self, k: int):
        """a_k (1-indexed); zero beyond the stored prefix."""
        return self.a[k - 1] if 1 <= k <= len(self.a) else 0

    def up_entry(self, k: int):
        """a^k (1-indexed)."""
        return self.a_up[k - 1] if 1 <= k <= len(self.a_up) else 0

    def with_entry(self, k: int, value) -> "LusztigDatum":
        a = list(self.a) + [0] * max(0, k - len(self.a))
        a[k - 1] = value
        return LusztigDatum(tuple(a), self.lam, self.a_up, self.system)

    def with_up_entry(self, k: int, value) -> "LusztigDatum":
        up = list(self.a_up) + [0] * max(0, k - len(self.a_up))
        up[k - 1] = value
        return LusztigDatum(self.a, self.lam, tuple(up), self.system)

    def is_zero(self) -> bool:
        return not self.a and not self.a_up and not self.lam.parts

    def is_integral(self) -> bool:
        return (all(isinstance(x, int) for x in self.a)
                and all(isinstance(x, int) for x in self.a_up)
                and self.lam.is_integral())

    def max_index(self) -> int:
        return max(len(self.a), len(self.a_up))

    def key(self):
        return (self.a, self.lam.parts, self.a_up, self.system)


def weight(d: LusztigDatum) -> RootVector:
    """Sum of all edge vectors: the weight of the datum."""
    total = zero_vector(d.system)
    for k, x in enumerate(d.a, start=1):
        if x:
            total = total + real_root("lower", k, d.system).scale(x)
    for k, x in enumerate(d.a_up, start=1):
        if x:
            total = total + real_root("upper", k, d.system).scale(x)
    s = d.lam.size()
    if s:
        total = total + delta(d.system).scale(s)
    return total


def left_weight(d: LusztigDatum) -> RootVector:
    """Weight of the datum read as left data (families swapped)."""
    return weight(reverse(d))


def height(d: LusztigDatum):
    """Sum of the two root coordinates of the weight."""
    return weight(d).height()


def reverse(d: LusztigDatum) -> LusztigDatum:
    """Swap the two lists; this is how vertical reflection acts on data."""
    return LusztigDatum(d.a_up, d.lam, d.a, d.system)


def to_json_dict(d: LusztigDatum) -> dict:
    if not d.is_integral():
        raise ValueError("only integral data are serialized")
    out: dict = {}
    if d.a:
        out["a"] = list(d.a)
    if d.lam.parts:
        out["lambda"] = list(d.lam.parts)
    if d.a_up:
        out["a_up"] = list(d.a_up)
    out["system"] = d.system
    return out


def from_json_dict(obj: dict) -> LusztigDatum:
    if not isinstance(obj, dict):
        raise ValueError("datum JSON must be an object")
    known = {"a", "lambda", "a_up", "system"}
    extra = set(obj) - known
    if extra:
        raise ValueError(f"unknown datum fields: {sorted(extra)}")

    def ints(key):
        xs = obj.get(key, [])
        if not isinstance(xs, list) or not all(isinstance(x, int) for x in xs):
            raise ValueError(f"field {key!r} must be a list of integers")
        return tuple(xs)

    system = obj.get("system", UNTWISTED)
    return LusztigDatum(ints("a"), Partition(ints("lambda")), ints("a_up"),
                        system)


def dumps(d: LusztigDatum) -> str:
    return json.dumps(to_json_dict(d), sort_keys=True)


def loads(text: str) -> LusztigDatum:
    return from_json_dict(json.loads(text))
