"""Exact face enumeration for rational hyperplane arrangements.

Faces are the maximal connected regions on which every hyperplane keeps
a fixed sign; each is identified by its sign vector and carries an exact
rational witness in its relative interior.

The enumeration walks the intersection lattice breadth-first from the
initial face's flat (the whole space): every face is a full-dimensional
cell of exactly one flat (the intersection of the hyperplanes containing
it), cells of a flat are obtained from the cells of its sub-flats (the
walls) by stepping off each wall to both sides by an exact rational
amount, and flats are deduplicated by their set of incident hyperplanes.
This stays correct on maximally degenerate inputs (many hyperplanes
through one point), where flipping one sign at a time would miss faces,
and it needs no linear programming: every witness is produced by direct
rational arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .geometry import ConstraintSystem, GeometryError

IntVec = Tuple[int, ...]
Hyperplane = Tuple[IntVec, int]  # a . x = b with integer, gcd-reduced, lead > 0
SignVector = Tuple[int, ...]


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _canon_ints(values: Sequence[int]) -> IntVec:
    g = 0
    for v in values:
        g = math.gcd(g, abs(v))
    if g > 1:
        values = [v // g for v in values]
    else:
        values = list(values)
    lead = next((v for v in values if v), 0)
    if lead < 0:
        values = [-v for v in values]
    return tuple(values)


def hyperplane_of_constraint(c) -> Tuple[Hyperplane, int]:
    """Integer hyperplane key plus orientation for a LinearConstraint.

    orientation +1 means the constraint reads ``value <= 0`` against the
    normalized hyperplane value a.x - b, orientation -1 means ``>= 0``.
    """
    den = 1
    for f in list(c.coeffs) + [c.bound]:
        den = den * f.denominator // math.gcd(den, f.denominator)
    ints = [int(f * den) for f in list(c.coeffs) + [c.bound]]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    lead = next(v for v in ints[:-1] if v)
    orient = 1
    if lead < 0:
        ints = [-v for v in ints]
        orient = -1
    return (tuple(ints[:-1]), ints[-1]), orient


class RationalPoint:
    """A point stored as integer numerators over one positive denominator."""

    __slots__ = ("nums", "den")

    def __init__(self, nums: IntVec, den: int):
        if den < 0:
            nums, den = tuple(-n for n in nums), -den
        self.nums = tuple(nums)
        self.den = den

    @staticmethod
    def from_fractions(coords: Sequence[Fraction]) -> "RationalPoint":
        den = 1
        for f in coords:
            den = den * f.denominator // math.gcd(den, f.denominator)
        return RationalPoint(tuple(int(f * den) for f in coords), den)

    def to_fractions(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.nums)

    def __repr__(self):
        return f"RationalPoint({self.nums}, {self.den})"


class _Flat:
    __slots__ = ("zset", "point", "dirs", "cells")

    def __init__(self, zset: frozenset, point: RationalPoint, dirs: Tuple[IntVec, ...]):
        self.zset = zset
        self.point = point
        self.dirs = dirs
        self.cells: Optional[List[RationalPoint]] = None


class Arrangement:
    """A deduplicated list of hyperplanes with lazy exact face enumeration."""

    def __init__(self, dim: int, hyperplanes: Iterable[Hyperplane]):
        self.dim = dim
        hp = sorted(set(hyperplanes))
        for a, _ in hp:
            if len(a) != dim:
                raise GeometryError("hyperplane dimension mismatch")
            if not any(a):
                raise GeometryError("zero normal vector")
        self.hyperplanes: Tuple[Hyperplane, ...] = tuple(hp)
        self.index = {h: i for i, h in enumerate(self.hyperplanes)}
        self._faces: Optional[Dict[SignVector, RationalPoint]] = None

    @property
    def m(self) -> int:
        return len(self.hyperplanes)

    def sign_vector(self, point: RationalPoint) -> SignVector:
        nums, den = point.nums, point.den
        out = []
        for a, b in self.hyperplanes:
            v = _dot(a, nums) - b * den
            out.append(0 if v == 0 else (1 if v > 0 else -1))
        return tuple(out)

    def values_at(self, point: RationalPoint) -> List[int]:
        """Scaled hyperplane values (true value times point.den)."""
        nums, den = point.nums, point.den
        return [_dot(a, nums) - b * den for a, b in self.hyperplanes]

    def faces(self) -> Dict[SignVector, RationalPoint]:
        if self._faces is None:
            self._faces = self._enumerate()
        return self._faces

    def face_count(self) -> int:
        return len(self.faces())

    # -- enumeration ---------------------------------------------------------

    def _enumerate(self) -> Dict[SignVector, RationalPoint]:
        dim = self.dim
        normals = [h[0] for h in self.hyperplanes]
        offsets = [h[1] for h in self.hyperplanes]
        faces: Dict[SignVector, RationalPoint] = {}
        flats: Dict[frozenset, _Flat] = {}

        unit = tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))
        top = _Flat(frozenset(), RationalPoint((0,) * dim, 1), unit)
        flats[top.zset] = top

        def classify(fl: _Flat):
            """Group hyperplanes not containing the flat by their trace on it."""
            nums, den = fl.point.nums, fl.point.den
            classes: Dict[IntVec, List[int]] = {}
            proj: Dict[int, IntVec] = {}
            for idx in range(self.m):
                if idx in fl.zset:
                    continue
                a = normals[idx]
                a_flat = tuple(_dot(a, d) for d in fl.dirs)
                if not any(a_flat):
                    continue  # constant sign on this flat
                vnum = _dot(a, nums) - offsets[idx] * den
                key = _canon_ints(tuple(x * den for x in a_flat) + (vnum,))
                classes.setdefault(key, []).append(idx)
                proj[idx] = a_flat
            ordered = sorted(classes.values(), key=lambda members: members[0])
            return ordered, proj

        def process(fl: _Flat) -> List[RationalPoint]:
            if fl.cells is not None:
                return fl.cells
            classes, proj = classify(fl)
            cells: List[RationalPoint] = []
            if not classes:
                sv = self.sign_vector(fl.point)
                if sv not in faces:
                    faces[sv] = fl.point
                fl.cells = [fl.point]
                return fl.cells

            seen_signs = set()
            for members in classes:
                rep = members[0]
                a_flat = proj[rep]
                nu = tuple(
                    sum(a_flat[i] * fl.dirs[i][j] for i in range(len(fl.dirs)))
                    for j in range(dim)
                )
                zchild = fl.zset | frozenset(members)
                child = flats.get(zchild)
                if child is None:
                    child = _Flat(zchild, _drop_to_trace(fl, rep, nu, normals, offsets),
                                  _reduce_dirs(fl.dirs, a_flat))
                    flats[zchild] = child
                walls = process(child)
                for w in walls:
                    eps = self._step_size(w, nu, fl.zset, members, normals, offsets)
                    wf = w.to_fractions()
                    for sgn in (1, -1):
                        p = RationalPoint.from_fractions(
                            tuple(x + sgn * eps * nj for x, nj in zip(wf, nu)))
                        sv = self.sign_vector(p)
                        if sv not in seen_signs:
                            seen_signs.add(sv)
                            cells.append(p)
                            if sv not in faces:
                                faces[sv] = p
            fl.cells = cells
            return cells

        process(top)
        return faces

    def _step_size(self, w: RationalPoint, nu: IntVec, zset, members,
                   normals, offsets) -> Fraction:
        """A rational eps so that w +- eps*nu keeps every off-wall sign."""
        nums, den = w.nums, w.den
        bound: Optional[Fraction] = None
        skip = zset.union(members)
        for idx in range(self.m):
            if idx in skip:
                continue
            drift = _dot(normals[idx], nu)
            if not drift:
                continue
            vnum = _dot(normals[idx], nums) - offsets[idx] * den
            if vnum == 0:
                continue  # contains the wall's flat; cannot happen off zset
            cand = Fraction(abs(vnum), den * abs(drift))
            if bound is None or cand < bound:
                bound = cand
        if bound is None:
            return Fraction(1)
        return bound / 2


def _reduce_dirs(dirs: Tuple[IntVec, ...], a_flat: IntVec) -> Tuple[IntVec, ...]:
    pivot = next(i for i, v in enumerate(a_flat) if v)
    out = []
    for i, d in enumerate(dirs):
        if i == pivot:
            continue
        if a_flat[i] == 0:
            out.append(d)
        else:
            vec = tuple(a_flat[pivot] * dj - a_flat[i] * pj
                        for dj, pj in zip(d, dirs[pivot]))
            out.append(_canon_ints(vec))
    return tuple(out)


def _drop_to_trace(fl: _Flat, rep: int, nu: IntVec, normals, offsets) -> RationalPoint:
    """Project the flat's base point onto the trace of hyperplane ``rep``."""
    a, b = normals[rep], offsets[rep]
    denom = _dot(a, nu)  # sum of squares of the projected normal; nonzero
    wf = fl.point.to_fractions()
    v0 = Fraction(_dot(a, fl.point.nums) - b * fl.point.den, fl.point.den)
    step = v0 / denom
    return RationalPoint.from_fractions(tuple(x - step * nj for x, nj in zip(wf, nu)))


def arrangement_of_systems(dim: int, systems: Iterable[ConstraintSystem]) -> Arrangement:
    planes = []
    for s in systems:
        for c in s.constraints:
            h, _ = hyperplane_of_constraint(c)
            planes.append(h)
    return Arrangement(dim, planes)


# Small FIFO cache: the open and closed variants of one realization share
# the same hyperplane set, so non-degeneracy checks reuse one enumeration.
_CACHE: Dict[Tuple[int, Tuple[Hyperplane, ...]], Arrangement] = {}
_CACHE_LIMIT = 12


def cached_arrangement(dim: int, hyperplanes: Iterable[Hyperplane]) -> Arrangement:
    key = (dim, tuple(sorted(set(hyperplanes))))
    arr = _CACHE.get(key)
    if arr is None:
        arr = Arrangement(dim, key[1])
        if len(_CACHE) >= _CACHE_LIMIT:
            _CACHE.pop(next(iter(_CACHE)))
        _CACHE[key] = arr
    return arr
