"""Exact rational linear constraints and feasibility.

Everything here is over ``fractions.Fraction``; there is no tolerance
parameter anywhere.  Strict inequalities are decided exactly by
maximizing an auxiliary slack variable, so "is this open region
nonempty" gets a true/false answer with a rational witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

Rat = Fraction
Point = Tuple[Fraction, ...]

LE = "<="
LT = "<"
EQ = "=="


class GeometryError(ValueError):
    """Malformed geometric input (dimension mismatch, zero normals, ...)."""


class InfeasibleSystemError(GeometryError):
    """An operation required a feasible system but got an empty one."""


def rat(value, den=None) -> Fraction:
    if den is not None:
        return Fraction(value, den)
    return Fraction(value)


def format_rat(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(text) -> Fraction:
    if isinstance(text, str) and "/" in text:
        num, _, den = text.partition("/")
        return Fraction(int(num), int(den))
    return Fraction(text)


@dataclass(frozen=True)
class LinearConstraint:
    """``coeffs . x <= bound`` (weak) or ``< bound`` (strict).

    Stored scaled so the first nonzero coefficient is +1 or -1; the
    underlying hyperplane identity normalizes the leading coefficient
    to +1, flipping the pair's sign if needed.
    """

    coeffs: Tuple[Fraction, ...]
    bound: Fraction
    strict: bool = False

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if not any(coeffs):
            raise GeometryError("constraint coefficients are all zero")
        lead = next(c for c in coeffs if c)
        scale = 1 / abs(lead)
        object.__setattr__(self, "coeffs", tuple(c * scale for c in coeffs))
        object.__setattr__(self, "bound", Fraction(self.bound) * scale)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def hyperplane_key(self) -> Tuple[Tuple[Fraction, ...], Fraction]:
        lead = next(c for c in self.coeffs if c)
        if lead > 0:
            return (self.coeffs, self.bound)
        return (tuple(-c for c in self.coeffs), -self.bound)

    def weakened(self) -> "LinearConstraint":
        return LinearConstraint(self.coeffs, self.bound, False)

    def strictified(self) -> "LinearConstraint":
        return LinearConstraint(self.coeffs, self.bound, True)

    def value_at(self, point: Sequence[Fraction]) -> Fraction:
        return sum(c * x for c, x in zip(self.coeffs, point)) - self.bound

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        v = self.value_at(point)
        return v < 0 if self.strict else v <= 0

    def translated(self, offset: Sequence[Fraction]) -> "LinearConstraint":
        """Constraint for the set shifted by ``offset`` (x' = x + offset)."""
        shift = sum(c * o for c, o in zip(self.coeffs, offset))
        return LinearConstraint(self.coeffs, self.bound + shift, self.strict)

    def __str__(self) -> str:
        rel = LT if self.strict else LE
        lhs = " + ".join(f"{format_rat(c)}*x{i}" for i, c in enumerate(self.coeffs) if c)
        return f"{lhs} {rel} {format_rat(self.bound)}"


def le(coeffs, bound) -> LinearConstraint:
    return LinearConstraint(tuple(Fraction(c) for c in coeffs), Fraction(bound), False)


def lt(coeffs, bound) -> LinearConstraint:
    return LinearConstraint(tuple(Fraction(c) for c in coeffs), Fraction(bound), True)


def ge(coeffs, bound) -> LinearConstraint:
    return le([-Fraction(c) for c in coeffs], -Fraction(bound))


def gt(coeffs, bound) -> LinearConstraint:
    return lt([-Fraction(c) for c in coeffs], -Fraction(bound))


@dataclass(frozen=True)
class ConstraintSystem:
    dim: int
    constraints: Tuple[LinearConstraint, ...]

    def __init__(self, dim: int, constraints: Iterable[LinearConstraint] = ()):
        constraints = tuple(constraints)
        for c in constraints:
            if c.dim != dim:
                raise GeometryError(f"constraint dimension {c.dim} != system dimension {dim}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "constraints", constraints)

    def weakened(self) -> "ConstraintSystem":
        return ConstraintSystem(self.dim, tuple(c.weakened() for c in self.constraints))

    def strictified(self) -> "ConstraintSystem":
        return ConstraintSystem(self.dim, tuple(c.strictified() for c in self.constraints))

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        if len(point) != self.dim:
            raise GeometryError("point dimension mismatch")
        return all(c.satisfied_by(point) for c in self.constraints)

    def with_constraints(self, extra: Iterable[LinearConstraint]) -> "ConstraintSystem":
        return ConstraintSystem(self.dim, self.constraints + tuple(extra))


# --- simplex ----------------------------------------------------------------
#
# Dense two-phase tableau simplex over Fraction with Bland's rule (an
# anti-cycling rule is required: the systems we solve are built from many
# constraints through common points and are maximally degenerate).

_OPTIMAL = "optimal"
_UNBOUNDED = "unbounded"
_INFEASIBLE = "infeasible"


def _pivot(tab: List[List[Fraction]], basis: List[int], row: int, col: int) -> None:
    piv = tab[row][col]
    inv = 1 / piv
    tab[row] = [v * inv for v in tab[row]]
    prow = tab[row]
    for i, r in enumerate(tab):
        if i == row:
            continue
        f = r[col]
        if f:
            tab[i] = [a - f * b for a, b in zip(r, prow)]
    basis[row] = col


def _run_simplex(tab, basis, cost, ncols) -> str:
    """Maximize ``cost`` over the tableau in place.  Bland's rule."""
    while True:
        # reduced costs: c_j - c_B . B^{-1} A_j
        cb = [cost[b] for b in basis]
        entering = -1
        for j in range(ncols):
            rc = cost[j] - sum(cbi * tab[i][j] for i, cbi in enumerate(cb) if cbi)
            if rc > 0:
                entering = j
                break
        if entering < 0:
            return _OPTIMAL
        leave_row = -1
        best_ratio = None
        for i, r in enumerate(tab):
            a = r[entering]
            if a > 0:
                ratio = r[-1] / a
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < basis[leave_row]
                ):
                    best_ratio = ratio
                    leave_row = i
        if leave_row < 0:
            return _UNBOUNDED
        _pivot(tab, basis, leave_row, entering)


class _LP:
    """max objective over {rows}, free variables x_0..x_{n-1}, optional t >= 0.

    Rows are (coeffs, rel, bound) with rel in {LE, LT, EQ}; LT rows get
    ``+ t`` added on the left so that t > 0 at the optimum certifies
    strict feasibility.
    """

    def __init__(self, n: int, rows, use_t: bool):
        self.n = n
        self.use_t = use_t
        self.rows = list(rows)

    def solve(self, objective, t_objective=Fraction(0)):
        n = self.n
        nfree = 2 * n  # x_j = u_j - v_j
        t_col = nfree if self.use_t else -1
        nstruct = nfree + (1 if self.use_t else 0)
        rows = list(self.rows)
        if self.use_t:
            rows = rows + [((), "t<=1", Fraction(1))]

        nslack = sum(1 for _, rel, _ in rows if rel != EQ)
        ncols = nstruct + nslack
        tab: List[List[Fraction]] = []
        slack_of_row: List[int] = []
        si = 0
        for coeffs, rel, bound in rows:
            row = [Fraction(0)] * (ncols + 1)
            if rel == "t<=1":
                row[t_col] = Fraction(1)
            else:
                for j, c in enumerate(coeffs):
                    if c:
                        row[j] = Fraction(c)
                        row[n + j] = -Fraction(c)
                if rel == LT and self.use_t:
                    row[t_col] = Fraction(1)
            if rel == EQ:
                slack_of_row.append(-1)
            else:
                row[nstruct + si] = Fraction(1)
                slack_of_row.append(nstruct + si)
                si += 1
            row[-1] = Fraction(bound)
            tab.append(row)

        # make rhs nonnegative, then install a starting basis
        art_rows = []
        for i, row in enumerate(tab):
            if row[-1] < 0:
                tab[i] = [-v for v in row]
                art_rows.append(i)
            elif slack_of_row[i] < 0:
                art_rows.append(i)
        basis = [0] * len(tab)
        for i in range(len(tab)):
            if i not in art_rows:
                basis[i] = slack_of_row[i]

        total_cols = ncols + len(art_rows)
        if art_rows:
            full = []
            for i, row in enumerate(tab):
                pad = [Fraction(0)] * len(art_rows)
                full.append(row[:-1] + pad + [row[-1]])
            for k, i in enumerate(art_rows):
                full[i][ncols + k] = Fraction(1)
                basis[i] = ncols + k
            tab = full
            phase1 = [Fraction(0)] * total_cols
            for k in range(len(art_rows)):
                phase1[ncols + k] = Fraction(-1)
            _run_simplex(tab, basis, phase1, total_cols)
            value = sum(-tab[i][-1] for i in range(len(tab)) if basis[i] >= ncols)
            if value < 0:
                return _INFEASIBLE, None, None
            # drive leftover artificials out of the basis
            for i in range(len(tab)):
                if basis[i] >= ncols:
                    piv_col = next((j for j in range(ncols) if tab[i][j]), None)
                    if piv_col is not None:
                        _pivot(tab, basis, i, piv_col)
            keep = [i for i in range(len(tab)) if basis[i] < ncols]
            tab = [tab[i][:ncols] + [tab[i][-1]] for i in keep]
            basis = [basis[i] for i in keep]

        cost = [Fraction(0)] * ncols
        for j, c in enumerate(objective):
            if c:
                cost[j] = Fraction(c)
                cost[n + j] = -Fraction(c)
        if self.use_t and t_objective:
            cost[t_col] = Fraction(t_objective)
        status = _run_simplex(tab, basis, cost, ncols)
        if status == _UNBOUNDED:
            return _UNBOUNDED, None, None

        values = [Fraction(0)] * ncols
        for i, b in enumerate(basis):
            values[b] = tab[i][-1]
        x = tuple(values[j] - values[n + j] for j in range(n))
        t = values[t_col] if self.use_t else Fraction(0)
        obj = sum(Fraction(c) * xi for c, xi in zip(objective, x))
        if self.use_t and t_objective:
            obj += t_objective * t
        return _OPTIMAL, obj, (x, t)


def _lp_rows(system: ConstraintSystem):
    return [(c.coeffs, LT if c.strict else LE, c.bound) for c in system.constraints]


def feasible_witness(system: ConstraintSystem) -> Optional[Point]:
    """An exact point satisfying every constraint (strict ones strictly), or None.

    Strict rows are handled by maximizing a shared slack t in [0, 1]
    added to each strict row; the system is strictly feasible iff the
    optimum has t > 0.
    """
    has_strict = any(c.strict for c in system.constraints)
    lp = _LP(system.dim, _lp_rows(system), use_t=has_strict)
    zero = [Fraction(0)] * system.dim
    status, _, sol = lp.solve(zero, t_objective=Fraction(1) if has_strict else Fraction(0))
    if status != _OPTIMAL:
        return None
    x, t = sol
    if has_strict and t <= 0:
        return None
    return x


def maximize(system: ConstraintSystem, objective: Sequence[Fraction]):
    """Maximize a linear functional over the weak relaxation of ``system``.

    Returns (status, value, point) with status one of "optimal",
    "unbounded", "infeasible".
    """
    rows = [(c.coeffs, LE, c.bound) for c in system.constraints]
    lp = _LP(system.dim, rows, use_t=False)
    status, value, sol = lp.solve([Fraction(c) for c in objective])
    if status != _OPTIMAL:
        return status, None, None
    return status, value, sol[0]


def is_bounded(system: ConstraintSystem) -> bool:
    """True iff the recession cone of the weak system is the origin alone.

    Decided per coordinate direction: the cone {y : A y <= 0} contains a
    ray with y_j of a given sign iff the LP max +-y_j over the cone,
    capped at 1, attains 1.
    """
    if feasible_witness(system.weakened()) is None:
        raise InfeasibleSystemError("is_bounded needs a feasible weak system")
    n = system.dim
    cone_rows = [(c.coeffs, LE, Fraction(0)) for c in system.constraints]
    for j in range(n):
        for sign in (1, -1):
            cap = [Fraction(0)] * n
            cap[j] = Fraction(sign)
            rows = cone_rows + [(tuple(cap), LE, Fraction(1))]
            lp = _LP(n, rows, use_t=False)
            status, value, _ = lp.solve(cap)
            if status != _OPTIMAL or value > 0:
                return False
    return True


# --- 2-D polygon helpers ----------------------------------------------------

def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def sort_ccw(points: Sequence[Point]) -> List[Point]:
    """Sort 2-D points counterclockwise around their centroid (exact)."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    n = len(pts)
    cx = sum(p[0] for p in pts) / n
    cy = sum(p[1] for p in pts) / n

    def half(p):
        dx, dy = p[0] - cx, p[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    import functools

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return -1 if hp < hq else 1
        c = (p[0] - cx) * (q[1] - cy) - (p[1] - cy) * (q[0] - cx)
        if c > 0:
            return -1
        if c < 0:
            return 1
        return 0

    return sorted(pts, key=functools.cmp_to_key(cmp))


def convex_hull(points: Sequence[Point]) -> List[Point]:
    """Strict convex hull of 2-D rational points (monotone chain, CCW).

    Collinear and interior points are dropped, so the result is always
    in strictly convex position.
    """
    pts = sorted(set(tuple(Fraction(x) for x in p) for p in points))
    if len(pts) < 3:
        return pts
    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def hull_hrep(points: Sequence[Point], strict: bool = False) -> ConstraintSystem:
    """H-representation of the convex hull of arbitrary 2-D points."""
    return polygon_hrep(convex_hull(points), strict)


def polygon_hrep(vertices: Sequence[Point], strict: bool = False) -> ConstraintSystem:
    """Halfplane representation of the convex hull of 2-D vertices.

    Vertices must be distinct and in strictly convex position (no three
    collinear); any cyclic order is accepted.  One weak halfplane per
    edge (strict ones when ``strict``).
    """
    pts = [tuple(Fraction(x) for x in p) for p in vertices]
    if len(pts) < 3:
        raise GeometryError("polygon needs at least 3 vertices")
    if any(len(p) != 2 for p in pts):
        raise GeometryError("polygon vertices must be 2-D")
    if len(set(pts)) != len(pts):
        raise GeometryError("duplicate polygon vertices")
    pts = sort_ccw(pts)
    n = len(pts)
    for i in range(n):
        if _cross(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) <= 0:
            raise GeometryError("vertices are not in strictly convex position")
    cons = []
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        dx, dy = q[0] - p[0], q[1] - p[1]
        # outward normal of a CCW edge
        normal = (dy, -dx)
        bound = normal[0] * p[0] + normal[1] * p[1]
        cons.append(LinearConstraint(normal, bound, strict))
    return ConstraintSystem(2, tuple(cons))


def segment_hrep(a: Point, b: Point) -> ConstraintSystem:
    """Closed segment between two distinct 2-D points as four weak constraints."""
    a = tuple(Fraction(x) for x in a)
    b = tuple(Fraction(x) for x in b)
    if a == b:
        raise GeometryError("segment endpoints coincide")
    d = (b[0] - a[0], b[1] - a[1])
    normal = (-d[1], d[0])
    level = normal[0] * a[0] + normal[1] * a[1]
    lo = d[0] * a[0] + d[1] * a[1]
    hi = d[0] * b[0] + d[1] * b[1]
    return ConstraintSystem(2, (
        le(normal, level),
        ge(normal, level),
        ge(d, lo),
        le(d, hi),
    ))


def lcm(a: int, b: int) -> int:
    return abs(a * b) // math.gcd(a, b) if a and b else abs(a or b)


def int_scaled(values: Sequence[Fraction]) -> Tuple[int, ...]:
    """Scale rationals by a positive common factor to coprime integers."""
    vals = [Fraction(v) for v in values]
    den = 1
    for v in vals:
        den = lcm(den, v.denominator)
    ints = [int(v * den) for v in vals]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)
