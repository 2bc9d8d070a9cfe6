"""Exact planar primitives: points, orientation, segment intersection.

Everything operates on Fractions; predicates return exact signs, never epsilons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .rational import rat


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __repr__(self):
        return f"({self.x}, {self.y})"


def pt(x, y) -> Point:
    return Point(rat(x), rat(y))


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear."""
    v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def cross(ax: Fraction, ay: Fraction, bx: Fraction, by: Fraction) -> Fraction:
    return ax * by - ay * bx


def point_on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the closed segment ab."""
    if orient(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def point_in_open_segment(p: Point, a: Point, b: Point) -> bool:
    return point_on_segment(p, a, b) and p != a and p != b


def seg_y_at(a: Point, b: Point, x: Fraction) -> Fraction:
    """y of the (non-vertical) segment/line through a, b at abscissa x."""
    if a.x == b.x:
        raise ZeroDivisionError("vertical segment has no y(x)")
    return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)


def segment_intersection(a: Point, b: Point, c: Point, d: Point):
    """Exact intersection of closed segments ab and cd.

    Returns one of:
      None                      -- disjoint
      ("point", P)              -- a single common point P
      ("overlap", P, Q)         -- collinear overlap with positive length, P < Q
    """
    r_x, r_y = b.x - a.x, b.y - a.y
    s_x, s_y = d.x - c.x, d.y - c.y
    denom = cross(r_x, r_y, s_x, s_y)
    acx, acy = c.x - a.x, c.y - a.y
    if denom == 0:
        if cross(acx, acy, r_x, r_y) != 0:
            return None  # parallel, not collinear
        # collinear: project on x (or y if the line is vertical)
        if a.x != b.x:
            key = lambda p: p.x
        else:
            key = lambda p: p.y
        lo1, hi1 = sorted((a, b), key=key)
        lo2, hi2 = sorted((c, d), key=key)
        lo = max(lo1, lo2, key=key)
        hi = min(hi1, hi2, key=key)
        if key(lo) > key(hi):
            return None
        if lo == hi:
            return ("point", lo)
        return ("overlap", lo, hi)
    t = cross(acx, acy, s_x, s_y) / denom
    u = cross(acx, acy, r_x, r_y) / denom
    if 0 <= t <= 1 and 0 <= u <= 1:
        return ("point", Point(a.x + t * r_x, a.y + t * r_y))
    return None


def segments_properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the open segments cross transversally (single interior point each)."""
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def polyline_is_x_monotone(points) -> bool:
    """Strictly increasing or strictly decreasing x along the point list."""
    if len(points) < 2:
        return False
    inc = all(p.x < q.x for p, q in zip(points, points[1:]))
    dec = all(p.x > q.x for p, q in zip(points, points[1:]))
    return inc or dec


def polyline_left_to_right(points) -> tuple:
    """The same polyline ordered by increasing x (assumes x-monotone)."""
    if points[0].x > points[-1].x:
        return tuple(reversed(points))
    return tuple(points)


def polyline_y_at(points, x: Fraction) -> Optional[Fraction]:
    """y of an x-monotone polyline at abscissa x, or None if x outside its span.

    `points` must already be ordered left to right.
    """
    if x < points[0].x or x > points[-1].x:
        return None
    for p, q in zip(points, points[1:]):
        if p.x <= x <= q.x:
            return seg_y_at(p, q, x)
    return None  # pragma: no cover


def max_abs_slope(segments) -> Fraction:
    """max |dy/dx| over (p, q) segment pairs; 0 for an empty iterable."""
    best = Fraction(0)
    for p, q in segments:
        s = abs((q.y - p.y) / (q.x - p.x))
        if s > best:
            best = s
    return best
