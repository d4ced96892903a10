"""Exact subsets of the integers built from points and half-infinite rays.

Fountain loci are always of this shape: finitely many isolated points plus
rays ``(-inf, p]`` and ``[q, inf)``.  Regions are canonical on construction
(rays merged per side, points absorbed into rays), so membership and subset
tests are exact and cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = ["IntRegion"]


@dataclass(frozen=True)
class IntRegion:
    points: frozenset[int]
    left_rays: frozenset[int]  # each p stands for (-inf, p]
    right_rays: frozenset[int]  # each q stands for [q, inf)

    @staticmethod
    def of(
        points: Iterable[int] = (),
        left_rays: Iterable[int] = (),
        right_rays: Iterable[int] = (),
    ) -> "IntRegion":
        left = {max(left_rays)} if left_rays else set()
        right = {min(right_rays)} if right_rays else set()
        lmax = max(left) if left else None
        rmin = min(right) if right else None
        pts = {
            x
            for x in points
            if not (lmax is not None and x <= lmax)
            and not (rmin is not None and x >= rmin)
        }
        return IntRegion(frozenset(pts), frozenset(left), frozenset(right))

    @staticmethod
    def empty() -> "IntRegion":
        return IntRegion.of()

    @property
    def left_max(self) -> int | None:
        return max(self.left_rays) if self.left_rays else None

    @property
    def right_min(self) -> int | None:
        return min(self.right_rays) if self.right_rays else None

    def __contains__(self, x: int) -> bool:
        if x in self.points:
            return True
        lmax = self.left_max
        if lmax is not None and x <= lmax:
            return True
        rmin = self.right_min
        return rmin is not None and x >= rmin

    def is_empty(self) -> bool:
        return not (self.points or self.left_rays or self.right_rays)

    def union(self, other: "IntRegion") -> "IntRegion":
        return IntRegion.of(
            self.points | other.points,
            self.left_rays | other.left_rays,
            self.right_rays | other.right_rays,
        )

    def uncovered_witness(self, other: "IntRegion") -> int | None:
        """Some integer in ``self`` but not in ``other``, or None if subset."""
        for x in sorted(self.points):
            if x not in other:
                return x
        lmax = self.left_max
        if lmax is not None:
            floor = other.left_max
            if floor is None:
                # Our ray escapes downward: walk below other's right ray and
                # its finitely many points.
                x = lmax
                rmin = other.right_min
                if rmin is not None and x >= rmin:
                    x = rmin - 1
                while x in other.points:
                    x -= 1
                return x
            for x in range(lmax, floor, -1):
                if x not in other:
                    return x
        rmin = self.right_min
        if rmin is not None:
            ceil = other.right_min
            if ceil is None:
                x = rmin
                olmax = other.left_max
                if olmax is not None and x <= olmax:
                    x = olmax + 1
                while x in other.points:
                    x += 1
                return x
            for x in range(rmin, ceil):
                if x not in other:
                    return x
        return None

    def issubset(self, other: "IntRegion") -> bool:
        return self.uncovered_witness(other) is None

    def iter_in(self, lo: int, hi: int) -> Iterator[int]:
        for x in range(lo, hi + 1):
            if x in self:
                yield x
