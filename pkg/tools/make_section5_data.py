"""Derive and freeze the fixed planar realizations (data/*.json).

Run from the repo root:  python tools/make_section5_data.py
Each candidate is verified against its family code with both the fast
engine and (where the hyperplane count allows) the brute-force oracle
before being written.
"""

import json
import math
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from convexcodes.atlas import (Body, CLOSED, OPEN, Realization, code_of,
                               code_of_bruteforce, is_nondegenerate)
from convexcodes.codes import plain
from convexcodes.constructions import circle_point
from convexcodes.families import build_code
from convexcodes.geometry import (ConstraintSystem, gt, hull_hrep, lt,
                                  polygon_hrep, segment_hrep)
from convexcodes.jsonio import realization_to_json

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "convexcodes", "data")


def rational_dir(theta_deg: float) -> tuple:
    """Exact rational unit vector within ~1e-5 of the given direction."""
    half = math.radians(theta_deg) / 2
    t = Fraction(math.tan(half)).limit_denominator(100000)
    return circle_point(t)


def closed_cInf2Inf() -> Realization:
    bodies = {
        plain(1): Body(polygon_hrep([(0, 0), (8, 0), (8, 1), (0, 1)])),
        plain(2): Body(segment_hrep((1, Fraction(1, 2)), (4, Fraction(7, 2)))),
        plain(3): Body(polygon_hrep([(0, 0), (4, 0), (4, 4), (0, 4)])),
        plain(4): Body(polygon_hrep([(3, 0), (8, 0), (8, 4), (4, Fraction(7, 2))])),
        plain(5): Body(segment_hrep((4, Fraction(7, 2)), (6, Fraction(1, 2)))),
    }
    return Realization(2, CLOSED, bodies)


def open_c2InfInf() -> Realization:
    hexagon = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]
    hex_rows = polygon_hrep(hexagon, strict=True).constraints
    normals = [(0, 1), (-2, 1), (-2, -1), (0, -1), (2, -1), (2, 1)]
    bodies = {}
    for k, n in enumerate(normals, start=1):
        rows = list(hex_rows) + [gt(n, 0)]
        bodies[plain(k)] = Body(ConstraintSystem(2, tuple(rows)))
    return Realization(2, OPEN, bodies)


def closed_c22Inf() -> Realization:
    H = 18
    bodies = {
        plain(1): Body(polygon_hrep([(1, 0), (Fraction(3, 2), 0), (4, H)])),
        plain(2): Body(polygon_hrep([(2, 0), (4, 0), (4, H), (2, 1)])),
        plain(3): Body(polygon_hrep([(Fraction(33, 4), 0), (9, 0), (9, 2), (4, H)])),
        plain(4): Body(polygon_hrep([(1, 0), (4, 0), (4, 1), (1, 1)])),
        plain(5): Body(polygon_hrep([(1, 0), (2, 0), (2, 1), (1, 1)])),
        plain(6): Body(polygon_hrep([(2, 0), (8, 0), (8, 1), (2, 1)])),
        plain(7): Body(polygon_hrep([(4, 0), (6, 0), (6, 1), (4, 1)])),
        plain(8): Body(polygon_hrep([(6, 0), (9, 0), (9, 1), (6, 1)])),
        plain(9): Body(polygon_hrep([(8, 0), (9, 0), (9, 1), (8, 1)])),
    }
    return Realization(2, CLOSED, bodies)


def open_c22Inf() -> Realization:
    """Fan of six open cone-slab sets around a central pinwheel triangle.

    The chain sets 4..9 are sectors of the slab 2 < u.x < 3 (u the unit
    direction at 192 degrees), so all their inner and outer boundaries
    lie on the same two lines and zone words switch only across rays.
    Sets 1, 2, 3 share the pinwheel triangle D (each contains two of its
    edges and exits through the third) and reach their private sectors:
    2 covers the whole 144..216 band, 1 and 3 dip into the end zones.
    """
    u = rational_dir(192)

    ray = {a: rational_dir(a) for a in
           (120, 126, 138, 144, 168, 192, 216, 222, 228, 234, 240, 246, 258, 264)}

    def cone_rows(a_deg, b_deg):
        da, db = ray[a_deg], ray[b_deg]
        return [gt((-da[1], da[0]), 0), lt((-db[1], db[0]), 0)]

    def slab_rows(lo, hi):
        return [gt(u, lo), lt(u, hi)]

    def sector(a_deg, b_deg, lo, hi):
        return Body(ConstraintSystem(2, tuple(cone_rows(a_deg, b_deg) + slab_rows(lo, hi))))

    bodies = {
        plain(4): sector(120, 216, 2, 3),
        plain(5): sector(120, 168, 2, 3),
        plain(6): sector(144, 240, 2, 3),
        plain(7): sector(192, 228, 2, 3),
        plain(8): sector(222, 264, 2, 3),
        plain(9): sector(234, 264, 2, 3),
    }

    # pinwheel triangle: V_b on ray 144, V_c on ray 216, V_a between them
    V_b = tuple(Fraction(9, 10) * c for c in ray[144])
    V_c = tuple(Fraction(9, 10) * c for c in ray[216])
    d132 = rational_dir(132)
    V_a = (V_c[0] + Fraction(3, 2) * d132[0], V_c[1] + Fraction(3, 2) * d132[1])

    def on_ray(a_deg, level):
        d = ray[a_deg]
        r = level / (u[0] * d[0] + u[1] * d[1])
        return (r * d[0], r * d[1])

    lo1, hi1 = Fraction(11, 5), Fraction(27, 10)  # dip slab levels inside (2,3)
    dip1 = [on_ray(126, lo1), on_ray(126, hi1), on_ray(138, hi1), on_ray(138, lo1)]
    dip3 = [on_ray(246, lo1), on_ray(246, hi1), on_ray(258, hi1), on_ray(258, lo1)]

    body1 = Body(hull_hrep([V_a, V_b, V_c] + dip1, strict=True))
    body3 = Body(hull_hrep([V_a, V_b, V_c] + dip3, strict=True))
    body2 = Body(hull_hrep([V_a, V_b, V_c, on_ray(144, 3), on_ray(216, 3)], strict=True))

    bodies[plain(1)] = body1
    bodies[plain(2)] = body2
    bodies[plain(3)] = body3
    return Realization(2, OPEN, bodies)


def freeze(name, realization, family, expect_nondegenerate=None, brute=False):
    expected = build_code(family)
    got = code_of(realization)
    if got.code.codewords != expected.codewords or got.code.base != expected.base:
        extra = {str(w) for w in got.words} - {str(w) for w in expected.codewords}
        missing = {str(w) for w in expected.codewords} - {str(w) for w in got.words}
        raise SystemExit(f"{name}: wrong code\n  extra: {sorted(extra)}\n  missing: {sorted(missing)}")
    if brute:
        bf = code_of_bruteforce(realization)
        assert bf.words == got.words, f"{name}: oracle disagrees"
    if expect_nondegenerate is not None:
        rep = is_nondegenerate(realization)
        assert rep.ok == expect_nondegenerate, (
            f"{name}: nondegenerate={rep.ok}, expected {expect_nondegenerate} "
            f"(gained {[str(w) for w in rep.gained]}, lost {[str(w) for w in rep.lost]})")
    path = os.path.join(OUT, f"{name}.json")
    with open(path, "w") as fh:
        json.dump(realization_to_json(realization), fh, sort_keys=True, indent=1)
        fh.write("\n")
    print(f"{name}: OK ({len(got.words)} words) -> {os.path.relpath(path)}")


def main():
    os.makedirs(OUT, exist_ok=True)
    freeze("cInf2Inf_closed_R2", closed_cInf2Inf(), "cInf2Inf",
           expect_nondegenerate=False)
    freeze("c2InfInf_open_R2", open_c2InfInf(), "c2InfInf",
           expect_nondegenerate=False, brute=True)
    freeze("c22Inf_closed_R2", closed_c22Inf(), "c22Inf")
    freeze("c22Inf_open_R2", open_c22Inf(), "c22Inf")


if __name__ == "__main__":
    main()
