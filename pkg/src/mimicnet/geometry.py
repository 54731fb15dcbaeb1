"""Exact planar predicates over rational coordinates."""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

Point = tuple[Fraction, Fraction]


def orient(a: Point, b: Point, c: Point) -> Fraction:
    """Twice the signed area of ``abc``; positive for a left turn."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def segment_crossing(p1: Point, p2: Point, q1: Point, q2: Point):
    """Parameters ``(s, t, point)`` of a proper crossing of ``p1p2`` and ``q1q2``.

    Returns None when the segments are disjoint, parallel, or only meet at
    an endpoint of either segment. A touching configuration where an
    endpoint lies in the interior of the other segment raises ValueError,
    since it breaks general position.
    """
    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    if d1 == d2 == 0:
        # collinear: overlapping interiors are a degeneracy, shared endpoints are not
        if _overlap_collinear(p1, p2, q1, q2):
            raise ValueError("collinear overlapping segments")
        return None
    shared = {p1, p2} & {q1, q2}
    if shared:
        return None
    if (d1 == 0 and _between(q1, q2, p1)) or (d2 == 0 and _between(q1, q2, p2)):
        raise ValueError("segment endpoint lies on another segment")
    if (d3 == 0 and _between(p1, p2, q1)) or (d4 == 0 and _between(p1, p2, q2)):
        raise ValueError("segment endpoint lies on another segment")
    if (d1 > 0) == (d2 > 0) or d1 == 0 or d2 == 0:
        return None
    if (d3 > 0) == (d4 > 0) or d3 == 0 or d4 == 0:
        return None
    s = d1 / (d1 - d2)
    t = d3 / (d3 - d4)
    point = (p1[0] + s * (p2[0] - p1[0]), p1[1] + s * (p2[1] - p1[1]))
    return s, t, point


def _between(a: Point, b: Point, p: Point) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _overlap_collinear(p1, p2, q1, q2) -> bool:
    key = 0 if p1[0] != p2[0] else 1
    a0, a1 = sorted((p1[key], p2[key]))
    b0, b1 = sorted((q1[key], q2[key]))
    return max(a0, b0) < min(a1, b1)


def _half(d) -> int:
    # 0 for directions in [0, pi), 1 for [pi, 2pi)
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def _angle_cmp(d1, d2) -> int:
    h1, h2 = _half(d1), _half(d2)
    if h1 != h2:
        return h1 - h2
    cross = d1[0] * d2[1] - d1[1] * d2[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def sort_by_angle(items, direction):
    """Sort ``items`` counterclockwise by ``direction(item)`` starting from +x."""
    return sorted(items, key=cmp_to_key(lambda a, b: _angle_cmp(direction(a), direction(b))))


def signed_area(poly: list[Point]) -> Fraction:
    total = Fraction(0)
    for i in range(len(poly)):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % len(poly)]
        total += x1 * y2 - x2 * y1
    return total / 2


def winding_number(poly: list[Point], p: Point) -> int:
    """Winding number of the closed polyline ``poly`` around ``p``.

    ``p`` must not lie on the polyline.
    """
    w = 0
    for i in range(len(poly)):
        a = poly[i]
        b = poly[(i + 1) % len(poly)]
        if a[1] <= p[1]:
            if b[1] > p[1] and orient(a, b, p) > 0:
                w += 1
        elif b[1] <= p[1] and orient(a, b, p) < 0:
            w -= 1
    return w


def on_polyline(poly: list[Point], p: Point) -> bool:
    for i in range(len(poly)):
        a = poly[i]
        b = poly[(i + 1) % len(poly)]
        if orient(a, b, p) == 0 and _between(a, b, p):
            return True
    return False
