"""Explicit rational realizations for every code family.

Each generator returns an exact open or closed polyhedral realization
whose code equals the corresponding ``families`` code; the test suite
and ``verify-all`` re-derive every one of these equalities with the
arrangement engine, so the concrete constants below (polygon vertices,
offsets, slab widths) are configuration data validated by computation,
not trusted geometry.

Regular polygons in the planar constructions are replaced by rational
convex polygons with vertices on the rational unit circle; only convex
position and incidence structure matter for the realized codes.
"""

from __future__ import annotations

import importlib.resources
import json
from fractions import Fraction
from typing import Dict, List, Tuple

from .atlas import Body, CLOSED, OPEN, Realization, delete_bodies
from .codes import CodeError, Label, alpha, beta, delta, gamma, plain
from .geometry import (ConstraintSystem, LinearConstraint, ge, gt, le, lt,
                       polygon_hrep, segment_hrep)
from .jsonio import realization_from_json

VARIANTS = (
    "sunflower_closed_R2", "sunflower_open_Rd",
    "c2dd_open_R2", "c2dd_nondeg_Rd",
    "c22d_closed_R2", "c22d_open_R2", "c22d_nondeg_Rd",
    "cInf2Inf_closed_R2", "c2InfInf_open_R2",
    "c22Inf_closed_R2", "c22Inf_open_R2",
)

SECTION5_VARIANTS = ("cInf2Inf_closed_R2", "c2InfInf_open_R2",
                     "c22Inf_closed_R2", "c22Inf_open_R2")


def _check_d(d: int) -> int:
    if d is None or d < 2:
        raise CodeError(f"construction needs d >= 2, got {d}")
    return d


def circle_point(t: Fraction) -> Tuple[Fraction, Fraction]:
    """The rational unit-circle point with tangent-half-angle parameter t."""
    t = Fraction(t)
    den = 1 + t * t
    return ((1 - t * t) / den, 2 * t / den)


def _spread_circle_points(n: int) -> List[Tuple[Fraction, Fraction]]:
    """n rational points on the unit circle in convex position.

    Tangent-half-angle parameters are spaced by 3/2 < pi/2, which keeps
    every angular gap (including the wrap across the branch point)
    under pi, so the points positively span the plane.
    """
    return [circle_point(Fraction(3 * (2 * k - (n - 1)), 4)) for k in range(n)]


# --- sunflowers ---------------------------------------------------------------

def realize_sunflower_closed_R2(d: int) -> Realization:
    """d closed spokes from the origin plus a thin closed strip across them."""
    d = _check_d(d)
    tips = [circle_point(Fraction(i, d + 1)) for i in range(1, d + 1)]
    bodies: Dict[Label, Body] = {}
    for i, tip in enumerate(tips, start=1):
        bodies[plain(i)] = Body(segment_hrep((Fraction(0), Fraction(0)), tip))
    min_y = min(p[1] for p in tips)
    lo, hi = min_y / 4, min_y / 2
    strip = polygon_hrep([(-2, lo), (2, lo), (2, hi), (-2, hi)])
    bodies[plain(d + 1)] = Body(strip)
    return Realization(2, CLOSED, bodies)


def realize_sunflower_open_Rd(d: int) -> Realization:
    """Open unit slabs sharing the corner simplex plus a far diagonal slice."""
    d = _check_d(d)
    bodies: Dict[Label, Body] = {}
    ones = [Fraction(1)] * d

    def axis(j):
        return tuple(Fraction(1 if k == j else 0) for k in range(d))

    for i in range(d):
        rows = []
        for j in range(d):
            if j == i:
                continue
            rows.append(gt(axis(j), 0))
            rows.append(lt(axis(j), 1))
        rows.append(gt(ones, 1))
        bodies[plain(i + 1)] = Body(ConstraintSystem(d, tuple(rows)))
    rows = [gt(axis(j), 0) for j in range(d)]
    rows.append(gt(ones, 5 * d * d))
    rows.append(lt(ones, 5 * d * d + 1))
    bodies[plain(d + 1)] = Body(ConstraintSystem(d, tuple(rows)))
    return Realization(d, OPEN, bodies)


# --- the layered planar construction ------------------------------------------

def _line_intersection(l1, l2) -> Tuple[Fraction, Fraction]:
    (a1, b1), c1 = l1
    (a2, b2), c2 = l2
    det = a1 * b2 - a2 * b1
    if det == 0:
        raise CodeError("parallel lines in construction")
    x = (c1 * b2 - c2 * b1) / det
    y = (a1 * c2 - a2 * c1) / det
    return (x, y)


def realize_c2dd_open_R2(d: int) -> Realization:
    """Open planar realization: polygon-with-flaps plus a bent two-ply strip.

    A rational convex (d+1)-gon P is inscribed in the polygon Q cut out
    by the circle tangents at P's vertices, so each vertex of P sits in
    the relative interior of an edge of Q and int(Q minus the edge-j
    halfplanes) decomposes into P plus flaps.  Offset lines L_i, L_i'
    parallel to P's edges carry the beta/gamma quadrilaterals; the
    offsets are fixed fractions of each flap's depth.
    """
    d = _check_d(d)
    n = d + 1
    verts = _spread_circle_points(n)  # v_1..v_n counterclockwise

    def v(i):  # 1-based, cyclic
        return verts[(i - 1) % n]

    # edge i of P runs v_i -> v_{i+1}; outward normal via CCW orientation
    edge_normal = {}
    edge_level = {}
    for i in range(1, n + 1):
        p, q = v(i), v(i + 1)
        normal = (q[1] - p[1], p[0] - q[0])
        edge_normal[i] = normal
        edge_level[i] = normal[0] * p[0] + normal[1] * p[1]

    # flap depth over edge i: distance (in normal units) to the tangent corner
    eps = {}
    for i in range(1, n + 1):
        w = _line_intersection((v(i), Fraction(1)), (v(i + 1), Fraction(1)))
        depth = edge_normal[i][0] * w[0] + edge_normal[i][1] * w[1] - edge_level[i]
        if depth <= 0:
            raise CodeError("degenerate flap")
        eps[i] = depth / 4

    def L(i, ply):  # the line parallel to edge i at offset ply * eps_i
        i = (i - 1) % n + 1
        return (edge_normal[i], edge_level[i] + ply * eps[i])

    p: Dict[int, Tuple[Fraction, Fraction]] = {}
    q: Dict[int, Tuple[Fraction, Fraction]] = {}
    r: Dict[int, Tuple[Fraction, Fraction]] = {}
    s: Dict[int, Tuple[Fraction, Fraction]] = {}
    t: Dict[int, Tuple[Fraction, Fraction]] = {}
    u: Dict[int, Tuple[Fraction, Fraction]] = {}
    for i in range(2, d + 1):
        p[i] = _line_intersection(L(i - 1, 1), L(i, 1))
        q[i] = _line_intersection(L(i - 1, 2), L(i, 2))
        r[i] = _line_intersection(L(i - 1, 1), L(i, 2))
        s[i] = _line_intersection(L(i - 1, 2), L(i, 1))
        t[i] = ((q[i][0] + r[i][0]) / 2, (q[i][1] + r[i][1]) / 2)
        u[i] = ((q[i][0] + s[i][0]) / 2, (q[i][1] + s[i][1]) / 2)
    p[1] = s[1] = _line_intersection(L(1, 1), L(n, 2))
    q[1] = t[1] = _line_intersection(L(1, 2), L(n, 2))
    r[n] = p[n] = _line_intersection(L(d, 1), L(n, 2))
    q[n] = u[n] = _line_intersection(L(d, 2), L(n, 2))

    bodies: Dict[Label, Body] = {}
    tangent_rows = [lt(vk, 1) for vk in verts]
    for i in range(1, d + 1):
        rows = list(tangent_rows)
        for j in range(1, n + 1):
            if j != i:
                rows.append(lt(edge_normal[j], edge_level[j]))
        bodies[alpha(i)] = Body(ConstraintSystem(2, tuple(rows)))
        rows = list(tangent_rows)
        for j in range(1, n + 1):
            if j not in (i, n):
                rows.append(lt(edge_normal[j], edge_level[j]))
        bodies[delta(i)] = Body(ConstraintSystem(2, tuple(rows)))
    for i in range(1, d + 1):
        bodies[beta(i)] = Body(polygon_hrep([s[i], r[i + 1], q[i + 1], q[i]], strict=True))
        bodies[gamma(i)] = Body(polygon_hrep([p[i], p[i + 1], u[i + 1], t[i]], strict=True))
    return Realization(2, OPEN, bodies)


def realize_c2dd_nondeg_Rd(d: int) -> Realization:
    """The non-degenerate open realization in R^d.

    Axis tubes over the open unit cube carry the alpha/delta sets; the
    beta/gamma sets slice a thin diagonal slab far from the origin by
    the level sets of l(x) = sum i * x_i.  All inequalities are the
    construction's stated ones, with the alpha sets additionally cut to
    x_i > 0 so they are genuinely subsets of the delta tubes.
    """
    d = _check_d(d)
    bodies: Dict[Label, Body] = {}
    ones = tuple(Fraction(1) for _ in range(d))
    weights = tuple(Fraction(i) for i in range(1, d + 1))
    dd = d * d

    def axis(j):
        return tuple(Fraction(1 if k == j else 0) for k in range(d))

    def tube_rows(i):
        rows = []
        for j in range(d):
            if j == i:
                rows.append(gt(axis(j), 0))
            else:
                rows.append(gt(axis(j), 0))
                rows.append(lt(axis(j), 1))
        return rows

    for i in range(d):
        bodies[delta(i + 1)] = Body(ConstraintSystem(d, tuple(tube_rows(i))))
        rows = tube_rows(i)
        rows.append(gt(ones, 1))
        bodies[alpha(i + 1)] = Body(ConstraintSystem(d, tuple(rows)))

    region_rows = [gt(axis(j), 0) for j in range(d)]
    region_rows.append(gt(ones, 5 * dd))
    region_rows.append(lt(ones, 5 * dd + 1))
    region_rows.append(gt(weights, 4 * dd))
    region_rows.append(lt(weights, 5 * d * dd + dd))
    for i in range(1, d + 1):
        rows = list(region_rows)
        rows.append(gt(weights, 5 * i * dd - 4 * dd))
        rows.append(lt(weights, 5 * i * dd + 4 * dd))
        bodies[beta(i)] = Body(ConstraintSystem(d, tuple(rows)))
        rows = list(region_rows)
        rows.append(gt(weights, 5 * i * dd - 2 * dd))
        rows.append(lt(weights, 5 * i * dd + 2 * dd))
        bodies[gamma(i)] = Body(ConstraintSystem(d, tuple(rows)))
    return Realization(d, OPEN, bodies)


def realize_c22d_closed_R2(d: int) -> Realization:
    """Closed planar realization: slabs in a strip plus triangles through one apex."""
    d = _check_d(d)
    bodies: Dict[Label, Body] = {}
    strip = [ge((0, 1), -1), le((0, 1), 0), ge((1, 0), 0), le((1, 0), 4 * d - 3)]
    for i in range(1, d + 1):
        rows = strip + [ge((1, 0), 4 * i - 7), le((1, 0), 4 * i)]
        bodies[beta(i)] = Body(ConstraintSystem(2, tuple(rows)))
        rows = strip + [ge((1, 0), 4 * i - 5), le((1, 0), 4 * i - 2)]
        bodies[gamma(i)] = Body(ConstraintSystem(2, tuple(rows)))
    apex = (Fraction(0), Fraction(d))
    for i in range(1, d + 1):
        qi = (Fraction(16 * i - 15, 4), Fraction(0))
        ri = (Fraction(16 * i - 13, 4), Fraction(0))
        bodies[alpha(i)] = Body(polygon_hrep([apex, qi, ri]))
    return Realization(2, CLOSED, bodies)


def _delta_labels(d: int):
    return [delta(i) for i in range(1, d + 1)]


def realize_c22d_open_R2(d: int) -> Realization:
    return delete_bodies(realize_c2dd_open_R2(d), _delta_labels(d))


def realize_c22d_nondeg_Rd(d: int) -> Realization:
    return delete_bodies(realize_c2dd_nondeg_Rd(d), _delta_labels(d))


# --- the fixed planar realizations --------------------------------------------

def realize_section5(variant: str) -> Realization:
    """Load one of the bundled fixed planar realizations.

    Coordinates live in versioned JSON data files; every consumer
    re-verifies the realized code, so a tampered file fails loudly with
    a codeword diff rather than being trusted.
    """
    if variant not in SECTION5_VARIANTS:
        raise CodeError(f"unknown fixed realization {variant!r}; "
                        f"choose from {', '.join(SECTION5_VARIANTS)}")
    text = importlib.resources.files("convexcodes.data").joinpath(f"{variant}.json").read_text()
    return realization_from_json(json.loads(text))


def realize(variant: str, d: int = None) -> Realization:
    """Dispatch a realization variant name to its generator."""
    if variant in SECTION5_VARIANTS:
        if d is not None:
            raise CodeError(f"variant {variant} takes no size parameter")
        return realize_section5(variant)
    generators = {
        "sunflower_closed_R2": realize_sunflower_closed_R2,
        "sunflower_open_Rd": realize_sunflower_open_Rd,
        "c2dd_open_R2": realize_c2dd_open_R2,
        "c2dd_nondeg_Rd": realize_c2dd_nondeg_Rd,
        "c22d_closed_R2": realize_c22d_closed_R2,
        "c22d_open_R2": realize_c22d_open_R2,
        "c22d_nondeg_Rd": realize_c22d_nondeg_Rd,
    }
    if variant not in generators:
        raise CodeError(f"unknown variant {variant!r}; choose from {', '.join(VARIANTS)}")
    return generators[variant](_check_d(d))


def expected_code(variant: str, d: int = None):
    """The family code a given realization variant must realize."""
    from .families import build_code
    if variant.startswith("sunflower"):
        return build_code("sunflower", d)
    if variant.startswith("c2dd"):
        return build_code("c2dd", d)
    if variant.startswith("c22d"):
        return build_code("c22d", d)
    if variant.startswith("cInf2Inf"):
        return build_code("cInf2Inf")
    if variant.startswith("c2InfInf"):
        return build_code("c2InfInf")
    if variant.startswith("c22Inf"):
        return build_code("c22Inf")
    raise CodeError(f"unknown variant {variant!r}")
