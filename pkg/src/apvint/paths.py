"""Piecewise line/arc integration paths in the complex plane.

A path runs from a to b on the real axis while avoiding the interior pole x0,
passing it either above or below. Side classification is done by a winding
number computation: the path is closed with a straight return from b to a
indented *below* x0 by a small semicircle, and the winding number of the
resulting loop about x0 is -1 for paths passing above and 0 for paths passing
below (the loop built from a below-path and a reversed above-path winds +1,
matching the residue-count convention used by the jump relation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .expr import AnalyticityDecl, Expr

__all__ = [
    "IntegralSpec",
    "Line",
    "Arc",
    "ComplexPath",
    "semicircle_path",
    "semicircle_bulge_path",
    "classify_side",
    "path_to_dict",
    "path_from_dict",
    "MIN_CLEARANCE_FACTOR",
]

JOIN_TOL = 1e-12

# Minimum pole clearance, as a fraction of (b - a). Purely a conditioning
# floor for the quadrature, not a restriction of the underlying theory.
MIN_CLEARANCE_FACTOR = 1e-6


@dataclass(frozen=True)
class IntegralSpec:
    """The full problem statement: integrate f(x) / (x - x0)^(n+1) over [a, b]."""

    f: Expr
    a: float
    b: float
    x0: float
    n: int
    decl: AnalyticityDecl = field(default_factory=lambda: AnalyticityDecl(entire=True))

    def __post_init__(self):
        if not (self.a < self.x0 < self.b):
            raise ValueError(f"need a < x0 < b, got a={self.a}, x0={self.x0}, b={self.b}")
        if self.n < 0 or self.n != int(self.n):
            raise ValueError(f"n must be a nonnegative integer, got {self.n}")

    @property
    def pole_gap(self) -> float:
        """Distance from x0 to the nearest interval endpoint."""
        return min(self.x0 - self.a, self.b - self.x0)


@dataclass(frozen=True)
class Line:
    start: complex
    end: complex

    def point(self, t):
        """Position at parameter t in [0, 1]."""
        return self.start + (self.end - self.start) * np.asarray(t)

    def derivative(self, t):
        return np.full_like(np.asarray(t, dtype=np.complex128), self.end - self.start)

    @property
    def first(self):
        return self.start

    @property
    def last(self):
        return self.end

    @property
    def param_interval(self):
        return (0.0, 1.0)

    def reversed(self):
        return Line(self.end, self.start)

    def min_distance_to(self, p: complex) -> float:
        d = self.end - self.start
        L2 = abs(d) ** 2
        if L2 == 0.0:
            return abs(p - self.start)
        t = ((p - self.start).real * d.real + (p - self.start).imag * d.imag) / L2
        t = min(max(t, 0.0), 1.0)
        return abs(p - (self.start + t * d))


@dataclass(frozen=True)
class Arc:
    center: complex
    radius: float
    theta_start: float
    theta_end: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("arc radius must be positive")
        if abs(self.theta_end - self.theta_start) > 2 * math.pi + 1e-9:
            raise ValueError("arc sweep exceeds a full turn")

    def point(self, theta):
        return self.center + self.radius * np.exp(1j * np.asarray(theta))

    def derivative(self, theta):
        return 1j * self.radius * np.exp(1j * np.asarray(theta))

    @property
    def first(self):
        return self.center + self.radius * np.exp(1j * self.theta_start)

    @property
    def last(self):
        return self.center + self.radius * np.exp(1j * self.theta_end)

    @property
    def param_interval(self):
        return (self.theta_start, self.theta_end)

    def reversed(self):
        return Arc(self.center, self.radius, self.theta_end, self.theta_start)

    def contains_angle(self, theta: float, tol: float = 1e-12) -> bool:
        lo, hi = sorted((self.theta_start, self.theta_end))
        # normalize theta into [lo - 2pi, hi + 2pi] window
        while theta < lo - tol:
            theta += 2 * math.pi
        while theta > hi + tol:
            theta -= 2 * math.pi
        return lo - tol <= theta <= hi + tol

    def min_distance_to(self, p: complex) -> float:
        v = p - self.center
        r = abs(v)
        theta = math.atan2(v.imag, v.real)
        if self.contains_angle(theta):
            return abs(r - self.radius)
        return min(abs(p - self.first), abs(p - self.last))


Segment = Line | Arc


@dataclass(frozen=True)
class ComplexPath:
    """Ordered, continuously joined line/arc segments from a to b; immutable."""

    segments: tuple
    side: str  # "above" | "below"

    def __post_init__(self):
        if self.side not in ("above", "below"):
            raise ValueError(f"side must be 'above' or 'below', got {self.side!r}")
        segs = tuple(self.segments)
        if not segs:
            raise ValueError("path needs at least one segment")
        scale = max(1.0, max(abs(s.first) + abs(s.last) for s in segs))
        for prev, nxt in zip(segs, segs[1:]):
            if abs(complex(prev.last) - complex(nxt.first)) > JOIN_TOL * scale:
                raise ValueError(f"segments do not join continuously: {prev.last} vs {nxt.first}")
        object.__setattr__(self, "segments", segs)

    @property
    def start(self) -> complex:
        return complex(self.segments[0].first)

    @property
    def end(self) -> complex:
        return complex(self.segments[-1].last)

    def min_distance_to(self, p: complex) -> float:
        return min(seg.min_distance_to(p) for seg in self.segments)

    def reversed(self) -> "ComplexPath":
        flipped = {"above": "below", "below": "above"}[self.side]
        return ComplexPath(tuple(s.reversed() for s in reversed(self.segments)), flipped)

    def sample(self, per_segment: int = 257) -> np.ndarray:
        pts = []
        for seg in self.segments:
            lo, hi = seg.param_interval
            pts.append(seg.point(np.linspace(lo, hi, per_segment)))
        return np.concatenate(pts)


# ---------------------------------------------------------------------------
# Constructors


def semicircle_path(spec: IntegralSpec, eps: float, side: str) -> ComplexPath:
    """Real segments with a radius-eps semicircular indentation over/under x0."""
    gap = spec.pole_gap
    if not (0 < eps < gap):
        raise ValueError(f"eps must lie in (0, {gap}), got {eps}")
    _check_clearance(spec, eps)
    _check_pole_margins(spec, eps)
    arc = Arc(complex(spec.x0), eps, math.pi, 0.0) if side == "above" else \
        Arc(complex(spec.x0), eps, -math.pi, 0.0)
    segments = (
        Line(complex(spec.a), complex(spec.x0 - eps)),
        arc,
        Line(complex(spec.x0 + eps), complex(spec.b)),
    )
    return ComplexPath(segments, side)


def semicircle_bulge_path(spec: IntegralSpec, radius: float, side: str) -> ComplexPath:
    """Large semicircular bulge centered at x0, joined to a and b by real lines.

    With radius equal to the pole gap on a symmetric interval the path is the
    bare arc; degenerate line pieces are dropped.
    """
    gap = spec.pole_gap
    if not (0 < radius <= gap):
        raise ValueError(f"radius must lie in (0, {gap}], got {radius}")
    _check_clearance(spec, radius)
    _check_pole_margins(spec, radius)
    arc = Arc(complex(spec.x0), radius, math.pi, 0.0) if side == "above" else \
        Arc(complex(spec.x0), radius, -math.pi, 0.0)
    segments = []
    if spec.x0 - radius > spec.a:
        segments.append(Line(complex(spec.a), complex(spec.x0 - radius)))
    segments.append(arc)
    if spec.x0 + radius < spec.b:
        segments.append(Line(complex(spec.x0 + radius), complex(spec.b)))
    return ComplexPath(tuple(segments), side)


def _check_clearance(spec: IntegralSpec, closest: float):
    floor = MIN_CLEARANCE_FACTOR * (spec.b - spec.a)
    if closest < floor:
        raise ValueError(f"path clearance {closest} below conditioning floor {floor}")


def _check_pole_margins(spec: IntegralSpec, eps: float):
    for p in spec.decl.declared_poles:
        if abs(p - spec.x0) <= eps:
            raise ValueError(f"declared pole {p} within distance {eps} of x0={spec.x0}")
        if min(Line(complex(spec.a), complex(spec.b)).min_distance_to(p), abs(p - spec.x0)) <= 0:
            raise ValueError(f"declared pole {p} lies on the integration interval")


# ---------------------------------------------------------------------------
# Side classification


def classify_side(path: ComplexPath, x0: float) -> str:
    """Return 'above', 'below' or 'invalid' for a path with real endpoints.

    Uses winding of (path + indented straight return) about x0, computed from
    unwrapped argument increments along a dense sampling. Paths touching x0 or
    self-intersecting are invalid.
    """
    a, b = path.start, path.end
    if abs(a.imag) > 1e-9 or abs(b.imag) > 1e-9:
        return "invalid"
    if path.min_distance_to(complex(x0)) <= 0.0:
        return "invalid"
    if _self_intersects(path):
        return "invalid"
    span = abs(b.real - a.real)
    delta = min(min(x0 - a.real, b.real - x0) * 0.5,
                path.min_distance_to(complex(x0)) * 0.5,
                0.001 * span if span else 1.0)
    if delta <= 0:
        return "invalid"
    # closed loop: path, then b -> a along the real axis indented below x0
    return_segs = (
        Line(b, complex(x0 + delta)),
        Arc(complex(x0), delta, 0.0, -math.pi),
        Line(complex(x0 - delta), a),
    )
    pts = [path.sample()]
    for seg in return_segs:
        lo, hi = seg.param_interval
        pts.append(seg.point(np.linspace(lo, hi, 257)))
    loop = np.concatenate(pts)
    angles = np.unwrap(np.angle(loop - x0))
    winding = (angles[-1] - angles[0]) / (2 * math.pi)
    nearest = round(winding)
    if abs(winding - nearest) > 0.1:
        return "invalid"
    if nearest == -1:
        return "above"
    if nearest == 0:
        return "below"
    return "invalid"


# ---------------------------------------------------------------------------
# Self-intersection tests (exact line/arc intersections, pairwise)


def _self_intersects(path: ComplexPath) -> bool:
    segs = path.segments
    scale = max(1.0, max(abs(s.first) + abs(s.last) for s in segs))
    tol = 1e-9 * scale
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            pts = _segment_intersections(segs[i], segs[j], tol)
            for p in pts:
                if j == i + 1 and abs(p - complex(segs[i].last)) <= 10 * tol:
                    continue  # shared joint between consecutive segments
                return True
    return False


def _segment_intersections(s1, s2, tol):
    if isinstance(s1, Line) and isinstance(s2, Line):
        return _line_line(s1, s2, tol)
    if isinstance(s1, Line) and isinstance(s2, Arc):
        return _line_arc(s1, s2, tol)
    if isinstance(s1, Arc) and isinstance(s2, Line):
        return _line_arc(s2, s1, tol)
    return _arc_arc(s1, s2, tol)


def _line_line(l1, l2, tol):
    p, r = l1.start, l1.end - l1.start
    q, s = l2.start, l2.end - l2.start
    cross = (r.real * s.imag - r.imag * s.real)
    if abs(cross) < 1e-15 * (abs(r) * abs(s) + 1e-300):
        # parallel: overlap check via projection
        if abs((q - p).real * r.imag - (q - p).imag * r.real) > tol * max(abs(r), 1.0):
            return []
        L2 = abs(r) ** 2
        if L2 == 0:
            return []
        t0 = ((q - p).real * r.real + (q - p).imag * r.imag) / L2
        t1 = t0 + (s.real * r.real + s.imag * r.imag) / L2
        lo, hi = sorted((t0, t1))
        lo, hi = max(lo, 0.0), min(hi, 1.0)
        if hi - lo > tol / max(abs(r), 1e-300):
            return [p + 0.5 * (lo + hi) * r]
        return []
    qp = q - p
    t = (qp.real * s.imag - qp.imag * s.real) / cross
    u = (qp.real * r.imag - qp.imag * r.real) / cross
    eps_t = tol / max(abs(r), 1e-300)
    eps_u = tol / max(abs(s), 1e-300)
    if -eps_t <= t <= 1 + eps_t and -eps_u <= u <= 1 + eps_u:
        return [p + t * r]
    return []


def _line_arc(line, arc, tol):
    d = line.end - line.start
    f = line.start - arc.center
    a = abs(d) ** 2
    if a == 0:
        return []
    bq = 2 * (f.real * d.real + f.imag * d.imag)
    c = abs(f) ** 2 - arc.radius ** 2
    disc = bq * bq - 4 * a * c
    if disc < 0:
        return []
    out = []
    eps_t = tol / max(abs(d), 1e-300)
    for root in ({-bq / (2 * a)} if disc == 0 else
                 {(-bq + math.sqrt(disc)) / (2 * a), (-bq - math.sqrt(disc)) / (2 * a)}):
        if -eps_t <= root <= 1 + eps_t:
            p = line.start + root * d
            v = p - arc.center
            if arc.contains_angle(math.atan2(v.imag, v.real), tol / arc.radius):
                out.append(p)
    return out


def _arc_arc(a1, a2, tol):
    d = a2.center - a1.center
    dist = abs(d)
    if dist < 1e-15:
        if abs(a1.radius - a2.radius) > tol:
            return []
        # concentric same-radius: angular overlap check
        n = 64
        thetas = np.linspace(*a1.param_interval, n)
        hits = [a1.point(t) for t in thetas
                if a2.contains_angle(float(t), tol / a1.radius)]
        return hits[:1]
    r1, r2 = a1.radius, a2.radius
    if dist > r1 + r2 + tol or dist < abs(r1 - r2) - tol:
        return []
    x = (dist ** 2 + r1 ** 2 - r2 ** 2) / (2 * dist)
    h2 = r1 ** 2 - x ** 2
    h = math.sqrt(max(h2, 0.0))
    u = d / dist
    base = a1.center + x * u
    out = []
    for p in ({base} if h == 0 else {base + 1j * h * u, base - 1j * h * u}):
        v1, v2 = p - a1.center, p - a2.center
        if a1.contains_angle(math.atan2(v1.imag, v1.real), tol / r1) and \
                a2.contains_angle(math.atan2(v2.imag, v2.real), tol / r2):
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# JSON schema


def path_to_dict(path: ComplexPath) -> dict:
    segments = []
    for seg in path.segments:
        if isinstance(seg, Line):
            segments.append({"type": "line",
                             "from": [seg.start.real, seg.start.imag],
                             "to": [seg.end.real, seg.end.imag]})
        else:
            segments.append({"type": "arc",
                             "center": [seg.center.real, seg.center.imag],
                             "radius": seg.radius,
                             "theta_start": seg.theta_start,
                             "theta_end": seg.theta_end})
    return {"side": path.side, "segments": segments}


def path_from_dict(data: dict) -> ComplexPath:
    segments = []
    for seg in data["segments"]:
        if seg["type"] == "line":
            segments.append(Line(complex(*seg["from"]), complex(*seg["to"])))
        elif seg["type"] == "arc":
            segments.append(Arc(complex(*seg["center"]), float(seg["radius"]),
                                float(seg["theta_start"]), float(seg["theta_end"])))
        else:
            raise ValueError(f"unknown segment type {seg['type']!r}")
    return ComplexPath(tuple(segments), data["side"])
