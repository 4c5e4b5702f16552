"""Codes of open/closed polyhedral realizations, exactly.

A realization maps labels to H-polyhedra, all open (every constraint
strict) or all closed (every constraint weak).  Its code is the set of
membership patterns that actually occur at points of R^d.  Membership
patterns are constant on the relative interior of each face of the
arrangement of all constraint hyperplanes and every point lies in
exactly one face, so evaluating one witness per face yields the code.

``code_of`` uses the lattice-walking face enumeration from
``arrangement``; ``code_of_bruteforce`` independently scans sign vectors
with the LP and is the oracle the fast path is tested against.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from .arrangement import (Arrangement, RationalPoint, cached_arrangement,
                          hyperplane_of_constraint)
from .codes import Code, Codeword, Label, disjoint_union as code_disjoint_union
from .geometry import (ConstraintSystem, GeometryError, InfeasibleSystemError,
                       LinearConstraint, Point, feasible_witness, is_bounded,
                       le, maximize)

OPEN = "open"
CLOSED = "closed"

DEFAULT_BRUTE_CAP = 12
BRUTE_CAP_ENV = "CONVEXCODES_BRUTE_CAP"


class RealizationError(ValueError):
    pass


@dataclass(frozen=True)
class Body:
    """One convex set of a realization, as a constraint system.

    A body whose weak system is infeasible denotes the empty set; its
    label then never appears in any codeword.
    """

    system: ConstraintSystem

    @property
    def dim(self) -> int:
        return self.system.dim

    def contains(self, point) -> bool:
        return self.system.satisfied_by(point)


@dataclass(frozen=True)
class Realization:
    dim: int
    topology: str
    bodies: Tuple[Tuple[Label, Body], ...]

    def __init__(self, dim: int, topology: str, bodies):
        if topology not in (OPEN, CLOSED):
            raise RealizationError(f"topology must be open or closed, got {topology!r}")
        if isinstance(bodies, Mapping):
            items = tuple(sorted(bodies.items(), key=lambda kv: kv[0].sort_key))
        else:
            items = tuple(sorted(bodies, key=lambda kv: kv[0].sort_key))
        names = [l for l, _ in items]
        if len(set(names)) != len(names):
            raise RealizationError("duplicate body labels")
        want_strict = topology == OPEN
        for label, body in items:
            if body.dim != dim:
                raise RealizationError(f"body {label} has dimension {body.dim}, expected {dim}")
            for c in body.system.constraints:
                if c.strict != want_strict:
                    kind = "strict" if want_strict else "weak"
                    raise RealizationError(
                        f"{topology} realization requires all-{kind} constraints (body {label})")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "topology", topology)
        object.__setattr__(self, "bodies", items)

    @property
    def labels(self) -> Tuple[Label, ...]:
        return tuple(l for l, _ in self.bodies)

    def body(self, label: Label) -> Body:
        for l, b in self.bodies:
            if l == label:
                return b
        raise KeyError(label)

    def as_dict(self) -> Dict[Label, Body]:
        return dict(self.bodies)


@dataclass(frozen=True)
class CodeWithWitnesses:
    """A computed code plus one exact witness point per codeword.

    Unlike ``make_code`` this records only observed codewords: the empty
    word is present exactly when some point of R^d lies outside every
    body, which the constructions in this package always exhibit.
    """

    code: Code
    witnesses: Tuple[Tuple[Codeword, Point], ...]

    def witness(self, word: Codeword) -> Point:
        for w, p in self.witnesses:
            if w == word:
                return p
        raise KeyError(word)

    @property
    def words(self) -> FrozenSet[Codeword]:
        return self.code.codewords


def _observed_code(labels, patterns: Dict[FrozenSet[Label], Point]) -> CodeWithWitnesses:
    words = {Codeword(fs): pt for fs, pt in patterns.items()}
    code = Code(frozenset(labels), frozenset(words))
    witnesses = tuple(sorted(words.items(), key=lambda kv: (len(kv[0]), kv[0].sort_key)))
    return CodeWithWitnesses(code, witnesses)


# --- fast path ---------------------------------------------------------------

def _body_tests(r: Realization, arr: Arrangement):
    """Per body: list of (hyperplane index, orientation, strict) triples."""
    tests = []
    for label, body in r.bodies:
        rows = []
        for c in body.system.constraints:
            h, orient = hyperplane_of_constraint(c)
            rows.append((arr.index[h], orient, c.strict))
        tests.append((label, rows))
    return tests


def code_of(r: Realization) -> CodeWithWitnesses:
    """The code of a realization, with a rational witness per codeword.

    Hyperplanes of all bodies are deduplicated by their normalized
    identity; every face of their arrangement is enumerated; membership
    is decided by re-substituting each face witness into every body's
    own constraints (sign vectors are never trusted transitively).
    """
    planes = []
    for _, body in r.bodies:
        for c in body.system.constraints:
            h, _ = hyperplane_of_constraint(c)
            planes.append(h)
    arr = cached_arrangement(r.dim, planes)
    tests = _body_tests(r, arr)
    patterns: Dict[FrozenSet[Label], Point] = {}
    for sign, witness in sorted(arr.faces().items()):
        values = arr.values_at(witness)  # fresh substitution at the witness
        members = []
        for label, rows in tests:
            ok = True
            for idx, orient, strict in rows:
                v = orient * values[idx]
                if v > 0 or (strict and v == 0):
                    ok = False
                    break
            if ok:
                members.append(label)
        key = frozenset(members)
        if key not in patterns:
            patterns[key] = witness.to_fractions()
    return _observed_code(r.labels, patterns)


# --- independent oracle -------------------------------------------------------

def brute_force_cap() -> int:
    value = os.environ.get(BRUTE_CAP_ENV)
    if value:
        return int(value)
    return DEFAULT_BRUTE_CAP


def code_of_bruteforce(r: Realization, cap: Optional[int] = None) -> CodeWithWitnesses:
    """Same contract as ``code_of`` via exhaustive sign-vector search.

    Walks the 3^m sign assignments depth-first, pruning any prefix whose
    partial system the LP reports infeasible; each surviving leaf yields
    a relative-interior witness directly from the LP.
    """
    if cap is None:
        cap = brute_force_cap()
    planes = []
    for _, body in r.bodies:
        for c in body.system.constraints:
            h, _ = hyperplane_of_constraint(c)
            planes.append(h)
    arr = Arrangement(r.dim, planes)  # reused only for the deduplicated list
    if arr.m > cap:
        raise RealizationError(f"{arr.m} hyperplanes exceed the brute-force cap {cap}")
    hyperplanes = arr.hyperplanes
    dim = r.dim

    def constraint_for(h, sign) -> List[LinearConstraint]:
        coeffs = tuple(Fraction(v) for v in h[0])
        bound = Fraction(h[1])
        if sign == 0:
            return [LinearConstraint(coeffs, bound, False),
                    LinearConstraint(tuple(-c for c in coeffs), -bound, False)]
        if sign < 0:
            return [LinearConstraint(coeffs, bound, True)]
        return [LinearConstraint(tuple(-c for c in coeffs), -bound, True)]

    faces: List[Point] = []

    def search(k: int, rows: List[LinearConstraint]):
        witness = feasible_witness(ConstraintSystem(dim, tuple(rows)))
        if witness is None:
            return
        if k == len(hyperplanes):
            faces.append(witness)
            return
        for sign in (-1, 0, 1):
            search(k + 1, rows + constraint_for(hyperplanes[k], sign))

    search(0, [])

    patterns: Dict[FrozenSet[Label], Point] = {}
    for witness in faces:
        members = frozenset(
            label for label, body in r.bodies if body.contains(witness))
        if members not in patterns:
            patterns[members] = witness
    return _observed_code(r.labels, patterns)


def bruteforce_face_count(r: Realization, cap: Optional[int] = None) -> int:
    """Number of realizable sign vectors, via the same exhaustive search."""
    if cap is None:
        cap = brute_force_cap()
    planes = []
    for _, body in r.bodies:
        for c in body.system.constraints:
            h, _ = hyperplane_of_constraint(c)
            planes.append(h)
    arr = Arrangement(r.dim, planes)
    if arr.m > cap:
        raise RealizationError(f"{arr.m} hyperplanes exceed the brute-force cap {cap}")
    count = 0
    dim = r.dim

    def constraint_for(h, sign):
        coeffs = tuple(Fraction(v) for v in h[0])
        bound = Fraction(h[1])
        if sign == 0:
            return [LinearConstraint(coeffs, bound, False),
                    LinearConstraint(tuple(-c for c in coeffs), -bound, False)]
        if sign < 0:
            return [LinearConstraint(coeffs, bound, True)]
        return [LinearConstraint(tuple(-c for c in coeffs), -bound, True)]

    def search(k, rows):
        nonlocal count
        if feasible_witness(ConstraintSystem(dim, tuple(rows))) is None:
            return
        if k == len(arr.hyperplanes):
            count += 1
            return
        for sign in (-1, 0, 1):
            search(k + 1, rows + constraint_for(arr.hyperplanes[k], sign))

    search(0, [])
    return count


# --- closure / interior / non-degeneracy -------------------------------------

_EMPTY_MARKER_BOUND = Fraction(-1)


def _empty_body(dim: int) -> Body:
    """A canonical explicitly-empty weak body (x_0 <= -1 and x_0 >= 1)."""
    e0 = tuple(Fraction(1 if j == 0 else 0) for j in range(dim))
    return Body(ConstraintSystem(dim, (
        LinearConstraint(e0, Fraction(-1), False),
        LinearConstraint(tuple(-c for c in e0), Fraction(-1), False),
    )))


def closure_of(r: Realization) -> Realization:
    """Replace every open body by its closure.

    For a nonempty all-strict polyhedral set {Ax < b} the closure is the
    weak system {Ax <= b}; an empty strict body stays empty (the closure
    of the empty set is empty), represented by a canonical infeasible
    weak system.
    """
    if r.topology != OPEN:
        raise RealizationError("closure_of expects an open realization")
    bodies = {}
    for label, body in r.bodies:
        if feasible_witness(body.system) is None:
            bodies[label] = _empty_body(r.dim)
        else:
            bodies[label] = Body(body.system.weakened())
    return Realization(r.dim, CLOSED, bodies)


def interior_of(r: Realization) -> Realization:
    """Replace every closed body by its interior.

    The interior of {Ax <= b} is {Ax < b}: for a full-dimensional
    polyhedron the strict system is exactly the interior, and for a
    lower-dimensional one some inequality is tight on all of it, so the
    strict system is empty like the interior.
    """
    if r.topology != CLOSED:
        raise RealizationError("interior_of expects a closed realization")
    bodies = {label: Body(body.system.strictified()) for label, body in r.bodies}
    return Realization(r.dim, OPEN, bodies)


@dataclass(frozen=True)
class NondegeneracyReport:
    ok: bool
    gained: FrozenSet[Codeword]  # words of the transformed code only
    lost: FrozenSet[Codeword]    # words of the original code only

    @property
    def diff(self) -> FrozenSet[Codeword]:
        return self.gained | self.lost


def is_nondegenerate(r: Realization) -> NondegeneracyReport:
    """Compare code(r) against the code of its closure (open) or interior (closed)."""
    original = code_of(r).words
    other = closure_of(r) if r.topology == OPEN else interior_of(r)
    transformed = code_of(other).words
    return NondegeneracyReport(
        ok=(original == transformed),
        gained=frozenset(transformed - original),
        lost=frozenset(original - transformed),
    )


# --- composition --------------------------------------------------------------

def _bounding_interval(body: Body, axis: int) -> Tuple[Fraction, Fraction]:
    n = body.dim
    obj = [Fraction(0)] * n
    obj[axis] = Fraction(1)
    status, hi, _ = maximize(body.system, obj)
    if status != "optimal":
        raise InfeasibleSystemError("unbounded or empty body in bounding box")
    obj[axis] = Fraction(-1)
    status, lo_neg, _ = maximize(body.system, obj)
    if status != "optimal":
        raise InfeasibleSystemError("unbounded or empty body in bounding box")
    return -lo_neg, hi


def translate_realization(r: Realization, offset) -> Realization:
    offset = tuple(Fraction(o) for o in offset)
    bodies = {
        label: Body(ConstraintSystem(
            r.dim, tuple(c.translated(offset) for c in body.system.constraints)))
        for label, body in r.bodies
    }
    return Realization(r.dim, r.topology, bodies)


def compose_apart(r1: Realization, r2: Realization) -> Realization:
    """Union of two bounded realizations with r2 shifted far along axis 0.

    The offset is an exact rational exceeding the sum of both bounding
    box extents plus one, so no body of one part can meet the other;
    code_of of the result equals the disjoint union of the two codes.
    """
    if r1.dim != r2.dim:
        raise RealizationError("dimension mismatch")
    if r1.topology != r2.topology:
        raise RealizationError("topology mismatch")
    shared = set(r1.labels) & set(r2.labels)
    if shared:
        raise RealizationError(f"overlapping labels: {sorted(str(l) for l in shared)}")
    for _, body in r1.bodies + r2.bodies:
        if not is_bounded(body.system):
            raise RealizationError("compose_apart requires bounded bodies")

    def axis_extent(r: Realization):
        lo = hi = None
        for _, body in r.bodies:
            a, b = _bounding_interval(body, 0)
            lo = a if lo is None else min(lo, a)
            hi = b if hi is None else max(hi, b)
        return lo, hi

    if not r1.bodies or not r2.bodies:
        offset = Fraction(0)
    else:
        lo1, hi1 = axis_extent(r1)
        lo2, hi2 = axis_extent(r2)
        offset = (hi1 - lo2) + (hi1 - lo1) + (hi2 - lo2) + 1
    shift = tuple(offset if j == 0 else Fraction(0) for j in range(r1.dim))
    moved = translate_realization(r2, shift)
    bodies = dict(r1.bodies)
    bodies.update(dict(moved.bodies))
    return Realization(r1.dim, r1.topology, bodies)


def delete_bodies(r: Realization, dropped: Iterable[Label]) -> Realization:
    dropped_set = frozenset(dropped)
    unknown = dropped_set - set(r.labels)
    if unknown:
        raise RealizationError(f"unknown labels: {sorted(str(l) for l in unknown)}")
    bodies = {l: b for l, b in r.bodies if l not in dropped_set}
    return Realization(r.dim, r.topology, bodies)
