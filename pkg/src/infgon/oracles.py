"""Brute-force oracles and randomized corpora backing the verification suite.

Everything here recomputes claims by exhaustion or replays them through an
independent route: crossing versus extension vanishing, the Calabi-Yau
dimension dualities, rotation steps versus the explicit cell walk, and the
rotation-versus-triangle agreement.  The library is only trusted as far as
these sweeps stay empty.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .arcs import Arc, ModelParams, cross, is_admissible, serre, shift
from .arcsets import Window, admissible_arcs_in
from .cellwalk import walk_predecessor, walk_successor
from .errors import TriangleMismatch
from .homs import ext1_case, hom_dim
from .mutation import (
    DividerSet,
    mutation_via_triangle,
    predecessor,
    rotate_arc,
    rotate_arc_inverse,
    successor,
)

__all__ = [
    "FuzzReport",
    "cross_ext_mismatches",
    "hom_serre_mismatches",
    "random_divider_case",
    "random_finite_arcs",
    "run_mutation_fuzz",
    "serre_duality_mismatches",
]


def _profile_any(x: Arc, y: Arc, p: ModelParams) -> bool:
    """Does any Ext^i(x, y), 1 <= i <= n, survive?"""
    t, u = y
    for i in range(p.n):
        if ext1_case(x, Arc(t - i, u - i), p).nonzero:
            return True
    return False


def cross_ext_mismatches(p: ModelParams, lo: int, hi: int) -> list[tuple[Arc, Arc]]:
    """Ordered arc pairs in the window where crossing and Ext disagree."""
    arcs = list(admissible_arcs_in(Window(lo, hi), p))
    bad = []
    for x in arcs:
        for y in arcs:
            if cross(x, y) != _profile_any(x, y, p):
                bad.append((x, y))
    return bad


def serre_duality_mismatches(
    p: ModelParams, lo: int, hi: int
) -> list[tuple[Arc, Arc, int]]:
    """Pairs and degrees violating ext_dim(x,y,i) == ext_dim(y,x,n+1-i)."""
    n = p.n
    arcs = list(admissible_arcs_in(Window(lo, hi), p))
    bad = []
    for idx, x in enumerate(arcs):
        for y in arcs[idx:]:
            for i in range(1, n + 1):
                fwd = ext1_case(x, shift(y, i - 1), p).nonzero
                bwd = ext1_case(y, shift(x, n - i), p).nonzero
                if fwd != bwd:
                    bad.append((x, y, i))
    return bad


def hom_serre_mismatches(p: ModelParams, lo: int, hi: int) -> list[tuple[Arc, Arc]]:
    """Pairs violating hom_dim(x, y) == hom_dim(y, serre(x))."""
    arcs = list(admissible_arcs_in(Window(lo, hi), p))
    bad = []
    for x in arcs:
        sx = serre(x, p)
        for y in arcs:
            if hom_dim(x, y, p) != hom_dim(y, sx, p):
                bad.append((x, y))
    return bad


def _random_admissible(rng: random.Random, n: int, lo: int, hi: int) -> Arc | None:
    """Uniform-ish admissible arc with both endpoints in [lo, hi]."""
    for _ in range(64):
        t = rng.randint(lo, hi - 2)
        d0 = 2 if n == 1 else n + 1
        top = (hi - t - d0) // n
        if top < 0:
            continue
        return Arc(t, t + d0 + n * rng.randint(0, top))
    return None


def random_finite_arcs(
    rng: random.Random, p: ModelParams, max_arcs: int, lo: int, hi: int
) -> list[Arc]:
    """Small random admissible arc set within a window."""
    out = set()
    for _ in range(rng.randint(1, max_arcs)):
        a = _random_admissible(rng, p.n, lo, hi)
        if a is not None:
            out.add(a)
    return sorted(out)


def random_divider_case(
    rng: random.Random, *, max_arcs: int = 8, span: int = 60
) -> tuple[ModelParams, DividerSet, Arc]:
    """A random non-crossing divider set (nesting encouraged) plus one
    compatible arc to rotate."""
    while True:
        n = rng.choice((1, 2, 3, 4, 5))
        p = ModelParams(n)
        lo, hi = -span // 2, span - span // 2
        arcs: set[Arc] = set()
        first = _random_admissible(rng, n, lo, hi)
        if first is None:
            continue
        arcs.add(first)
        for _ in range(rng.randint(0, max_arcs - 1)):
            mode = rng.random()
            base = rng.choice(sorted(arcs))
            if mode < 0.4 and base.u - base.t > n + 2:
                cand = _random_admissible(rng, n, base.t, base.u)  # nest inside
            elif mode < 0.7:
                cand = _random_admissible(
                    rng, n, max(lo, base.t - n - 4), min(hi, base.u + n + 4)
                )  # hug the base: shared endpoints and tight nests
            else:
                cand = _random_admissible(rng, n, lo, hi)
            if cand is None or any(cross(cand, b) for b in arcs):
                continue
            arcs.add(cand)
        d = DividerSet.of(p, arcs)
        for _ in range(128):
            a = _random_admissible(rng, n, lo, hi)
            if a is not None and a not in d.arcs and not any(cross(a, b) for b in d.arcs):
                return p, d, a


def _random_family(rng: random.Random, lo: int = -15, hi: int = 15):
    from .families import Band, HalfLeft, HalfRight, LeftFan, RightFan

    kind = rng.randint(0, 4)
    a, b = rng.randint(lo, hi), rng.randint(lo, hi)
    if kind == 0:
        return LeftFan(a, a - 2 - abs(b) % 8)
    if kind == 1:
        return RightFan(a, a + 2 + abs(b) % 8)
    if kind == 2:
        return Band(min(a, b) - 2, max(a, b) + 2)
    if kind == 3:
        return HalfLeft(a)
    return HalfRight(a)


def random_family_rotation_case(rng: random.Random):
    """A random family-bearing arc set with a compatible divider set.

    The divider arcs are members of the set and cross nothing in it, so the
    pair is a valid input for set rotation.
    """
    from .arcsets import ArcSet, crosses_set

    while True:
        n = rng.choice((1, 2, 3, 4))
        p = ModelParams(n)
        arcs: set[Arc] = set()
        want = rng.randint(1, 3)
        for _ in range(30):
            if len(arcs) >= want:
                break
            a = _random_admissible(rng, n, -12, 12)
            if a is not None and all(not cross(a, b) for b in arcs):
                arcs.add(a)
        if not arcs:
            continue
        d = DividerSet.of(p, arcs)
        fams = []
        want_f = rng.randint(1, 3)
        for _ in range(25):
            if len(fams) >= want_f:
                break
            fam = _random_family(rng)
            if all(not crosses_set(b, ArcSet.of(p, families=[fam])) for b in d.arcs):
                fams.append(fam)
        if not fams:
            continue
        x = ArcSet.of(p, frozenset(d.arcs), tuple(fams))
        if any(crosses_set(b, x) for b in d.arcs):
            continue
        return p, x, d


@dataclass
class FuzzReport:
    cases: int = 0
    involution_failures: list = field(default_factory=list)
    image_failures: list = field(default_factory=list)
    cellwalk_failures: list = field(default_factory=list)
    triangle_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.involution_failures
            or self.image_failures
            or self.cellwalk_failures
            or self.triangle_failures
        )


def run_mutation_fuzz(num_cases: int, seed: int = 0) -> FuzzReport:
    """Randomized agreement run for the whole rotation stack.

    Per case: the rotation image must be admissible and divider-compatible
    (rotate_arc asserts this internally), the inverse rotation must undo it,
    the step rules must match the explicit cell walk at every endpoint of
    both arcs, and the extension-triangle route must certify the move.
    """
    rng = random.Random(seed)
    rep = FuzzReport()
    for _ in range(num_cases):
        p, d, a = random_divider_case(rng)
        rep.cases += 1
        image = rotate_arc(a, d)
        if not is_admissible(image, p) or any(cross(image, b) for b in d.arcs):
            rep.image_failures.append((p.n, d, a, image))
        back = rotate_arc_inverse(image, d)
        if back != a:
            rep.involution_failures.append((p.n, d, a, image, back))
        for arc in (a, image):
            for v in arc:
                if predecessor(v, arc, d) != walk_predecessor(v, arc, d.arcs):
                    rep.cellwalk_failures.append((p.n, d, arc, "pred", v))
                if successor(v, arc, d) != walk_successor(v, arc, d.arcs):
                    rep.cellwalk_failures.append((p.n, d, arc, "succ", v))
        try:
            res = mutation_via_triangle(a, d, p)
            if res.image != image:
                rep.triangle_failures.append((p.n, d, a, "image drift"))
        except TriangleMismatch as exc:
            rep.triangle_failures.append((p.n, d, a, str(exc)))
    return rep
