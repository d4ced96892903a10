"""Symbolic descriptors for the infinite arc families used in closures.

Five closed-form kinds suffice for every infinite set this package needs:

* ``LeftFan(p, s_max)``   -- all admissible ``(s, p)`` with ``s <= s_max``;
* ``RightFan(p, u_min)``  -- all admissible ``(p, u)`` with ``u >= u_min``;
* ``Band(k_max, l_min)``  -- all admissible ``(k, l)`` with ``k <= k_max`` and
  ``l >= l_min``;
* ``HalfLeft(p)``         -- all admissible arcs with both endpoints ``<= p``;
* ``HalfRight(q)``        -- dually, both endpoints ``>= q``.

Each kind decides membership, "is some member crossed by this arc", window
enumeration, and its fountain-locus contribution exactly; the crossing tests
reduce to at most one residue search over a single period, and every one of
them is pinned against brute enumeration in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .arcs import Arc, ModelParams
from .errors import ValidationError
from .regions import IntRegion

__all__ = [
    "Band",
    "Family",
    "HalfLeft",
    "HalfRight",
    "LeftFan",
    "RightFan",
    "family_from_json",
    "family_to_json",
]


def _residue_in(lo: int, hi: int, target: int, n: int) -> bool:
    """Is there an x in [lo, hi] with x = target (mod n)?"""
    if lo > hi:
        return False
    first = lo + (target - lo) % n
    return first <= hi


def _iter_residue(lo: int, hi: int, target: int, n: int) -> Iterator[int]:
    if lo > hi:
        return
    first = lo + (target - lo) % n
    yield from range(first, hi + 1, n)


@dataclass(frozen=True)
class LeftFan:
    """All admissible arcs ending at ``p`` with foot at most ``s_max``."""

    p: int
    s_max: int

    kind = "left_fan"

    def is_member(self, a: Arc, params: ModelParams) -> bool:
        return a.u == self.p and a.t <= self.s_max

    def crossed_by(self, a: Arc, params: ModelParams) -> bool:
        t, u = a
        if t < self.p < u:
            return True  # feet reach arbitrarily far left of t
        if u < self.p:
            hi = min(u - 1, self.s_max)
            return _residue_in(t + 1, hi, self.p - 1, params.n)
        return False

    def members_in(self, lo: int, hi: int, params: ModelParams) -> Iterator[Arc]:
        if not lo <= self.p <= hi:
            return
        for s in _iter_residue(lo, min(self.s_max, self.p - 2), self.p - 1, params.n):
            yield Arc(s, self.p)

    def left_locus(self) -> IntRegion:
        return IntRegion.of(points=[self.p])

    def right_locus(self) -> IntRegion:
        return IntRegion.empty()


@dataclass(frozen=True)
class RightFan:
    """All admissible arcs starting at ``p`` with head at least ``u_min``."""

    p: int
    u_min: int

    kind = "right_fan"

    def is_member(self, a: Arc, params: ModelParams) -> bool:
        return a.t == self.p and a.u >= self.u_min

    def crossed_by(self, a: Arc, params: ModelParams) -> bool:
        t, u = a
        if t < self.p < u:
            return True
        if self.p < t:
            lo = max(t + 1, self.u_min)
            return _residue_in(lo, u - 1, self.p + 1, params.n)
        return False

    def members_in(self, lo: int, hi: int, params: ModelParams) -> Iterator[Arc]:
        if not lo <= self.p <= hi:
            return
        for u in _iter_residue(max(self.u_min, self.p + 2, lo), hi, self.p + 1, params.n):
            yield Arc(self.p, u)

    def left_locus(self) -> IntRegion:
        return IntRegion.empty()

    def right_locus(self) -> IntRegion:
        return IntRegion.of(points=[self.p])


@dataclass(frozen=True)
class Band:
    """All admissible arcs reaching from ``(-inf, k_max]`` to ``[l_min, inf)``."""

    k_max: int
    l_min: int

    kind = "band"

    def is_member(self, a: Arc, params: ModelParams) -> bool:
        return a.t <= self.k_max and a.u >= self.l_min

    def crossed_by(self, a: Arc, params: ModelParams) -> bool:
        # Either a member pierces (t, u) from the left (its head lands in the
        # open interval, feet are free) or from the right (its foot lands in
        # the interval, heads are free).  Residues never obstruct: the free
        # endpoint absorbs the congruence.
        return a.u > self.l_min or a.t < self.k_max

    def members_in(self, lo: int, hi: int, params: ModelParams) -> Iterator[Arc]:
        n = params.n
        for k in range(lo, min(self.k_max, hi) + 1):
            for u in _iter_residue(max(self.l_min, k + 2, lo), hi, k + 1, n):
                yield Arc(k, u)

    def left_locus(self) -> IntRegion:
        return IntRegion.of(right_rays=[self.l_min])

    def right_locus(self) -> IntRegion:
        return IntRegion.of(left_rays=[self.k_max])


@dataclass(frozen=True)
class HalfLeft:
    """All admissible arcs with both endpoints at most ``p``."""

    p: int

    kind = "half_left"

    def is_member(self, a: Arc, params: ModelParams) -> bool:
        return a.u <= self.p

    def crossed_by(self, a: Arc, params: ModelParams) -> bool:
        # Any arc whose left endpoint lies below p is pierced by a member
        # ending just inside it; everything else sits fully to the right.
        return a.t < self.p

    def members_in(self, lo: int, hi: int, params: ModelParams) -> Iterator[Arc]:
        n = params.n
        top = min(self.p, hi)
        for t in range(lo, top + 1):
            for u in _iter_residue(t + 2, top, t + 1, n):
                yield Arc(t, u)

    def left_locus(self) -> IntRegion:
        return IntRegion.of(left_rays=[self.p])

    def right_locus(self) -> IntRegion:
        return IntRegion.empty()


@dataclass(frozen=True)
class HalfRight:
    """All admissible arcs with both endpoints at least ``q``."""

    q: int

    kind = "half_right"

    def is_member(self, a: Arc, params: ModelParams) -> bool:
        return a.t >= self.q

    def crossed_by(self, a: Arc, params: ModelParams) -> bool:
        return a.u > self.q

    def members_in(self, lo: int, hi: int, params: ModelParams) -> Iterator[Arc]:
        n = params.n
        for t in range(max(self.q, lo), hi + 1):
            for u in _iter_residue(t + 2, hi, t + 1, n):
                yield Arc(t, u)

    def left_locus(self) -> IntRegion:
        return IntRegion.empty()

    def right_locus(self) -> IntRegion:
        return IntRegion.of(right_rays=[self.q])


Family = Union[LeftFan, RightFan, Band, HalfLeft, HalfRight]

_KINDS = {cls.kind: cls for cls in (LeftFan, RightFan, Band, HalfLeft, HalfRight)}
_FIELDS = {
    "left_fan": ("p", "s_max"),
    "right_fan": ("p", "u_min"),
    "band": ("k_max", "l_min"),
    "half_left": ("p",),
    "half_right": ("q",),
}


def family_to_json(f: Family) -> dict:
    d: dict = {"kind": f.kind}
    for name in _FIELDS[f.kind]:
        d[name] = getattr(f, name)
    return d


def family_from_json(d: dict, locus: str = "family") -> Family:
    if not isinstance(d, dict) or "kind" not in d:
        raise ValidationError(f"{locus}: expected an object with a 'kind' field")
    kind = d["kind"]
    if kind not in _KINDS:
        raise ValidationError(f"{locus}: unknown family kind {kind!r}")
    fields = _FIELDS[kind]
    extra = set(d) - set(fields) - {"kind"}
    if extra:
        raise ValidationError(f"{locus}: unexpected fields {sorted(extra)}")
    args = []
    for name in fields:
        if name not in d:
            raise ValidationError(f"{locus}: missing field {name!r}")
        v = d[name]
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValidationError(f"{locus}.{name}: expected an integer, got {v!r}")
        args.append(v)
    return _KINDS[kind](*args)
