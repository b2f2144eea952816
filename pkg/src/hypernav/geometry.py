"""Analytic geometry of the Poincare disk.

Points live inside the open unit disk; geodesics are diameters or circular
arcs orthogonal to the boundary.  Isometries are disk-preserving Moebius
maps z -> (a z + b) / (conj(b) z + conj(a)) with |a|^2 - |b|^2 = 1, applied
to z (direct) or to conj(z) (reflecting).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

_NORM_TOL = 1e-12


@dataclass(frozen=True)
class DiskPoint:
    x: float
    y: float

    def __post_init__(self) -> None:
        if self.x * self.x + self.y * self.y >= 1.0:
            raise ValueError(f"point ({self.x}, {self.y}) is not inside the unit disk")

    @classmethod
    def from_complex(cls, z: complex) -> DiskPoint:
        return cls(z.real, z.imag)

    def to_complex(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class TilePatch:
    """Geometric realization of one tile: vertex cycle plus center."""

    vertices: tuple[DiskPoint, ...]
    center: DiskPoint


@dataclass(frozen=True)
class DiskIsometry:
    a: complex
    b: complex
    reflecting: bool = False

    def __post_init__(self) -> None:
        det = abs(self.a) ** 2 - abs(self.b) ** 2
        if det <= 0:
            raise ValueError("coefficients do not preserve the disk")
        if abs(det - 1.0) > _NORM_TOL:
            scale = 1.0 / math.sqrt(det)
            object.__setattr__(self, "a", self.a * scale)
            object.__setattr__(self, "b", self.b * scale)

    @classmethod
    def identity(cls) -> DiskIsometry:
        return cls(1.0 + 0.0j, 0.0j)

    @classmethod
    def rotation(cls, angle: float) -> DiskIsometry:
        return cls(cmath.exp(0.5j * angle), 0.0j)

    @classmethod
    def axis_reflection(cls, angle: float) -> DiskIsometry:
        """Reflection across the diameter at the given angle: z -> e^(2i angle) conj(z)."""
        return cls(cmath.exp(1j * angle), 0.0j, reflecting=True)

    def __call__(self, z: complex) -> complex:
        if self.reflecting:
            z = z.conjugate()
        return (self.a * z + self.b) / (self.b.conjugate() * z + self.a.conjugate())


def apply(m: DiskIsometry, pt: DiskPoint) -> DiskPoint:
    return DiskPoint.from_complex(m(pt.to_complex()))


def apply_patch(m: DiskIsometry, patch: TilePatch) -> TilePatch:
    return TilePatch(tuple(apply(m, v) for v in patch.vertices), apply(m, patch.center))


def compose(m1: DiskIsometry, m2: DiskIsometry) -> DiskIsometry:
    """Isometry acting as m1 after m2 (function composition order)."""
    a2, b2 = m2.a, m2.b
    if m1.reflecting:
        a2, b2 = a2.conjugate(), b2.conjugate()
    a = m1.a * a2 + m1.b * b2.conjugate()
    b = m1.a * b2 + m1.b * a2.conjugate()
    return DiskIsometry(a, b, m1.reflecting != m2.reflecting)


def invert(m: DiskIsometry) -> DiskIsometry:
    a, b = m.a.conjugate(), -m.b
    if m.reflecting:
        a, b = a.conjugate(), b.conjugate()
    return DiskIsometry(a, b, m.reflecting)


def hyperbolic_distance(u: DiskPoint | complex, v: DiskPoint | complex) -> float:
    zu = u.to_complex() if isinstance(u, DiskPoint) else u
    zv = v.to_complex() if isinstance(v, DiskPoint) else v
    d2 = abs(zu - zv) ** 2
    denom = (1.0 - abs(zu) ** 2) * (1.0 - abs(zv) ** 2)
    return math.acosh(1.0 + 2.0 * d2 / denom)


def geodesic_circle(u: complex, v: complex) -> tuple[complex, float] | None:
    """Center and radius of the geodesic circle through u and v.

    Returns None when the geodesic is a diameter.  The circle is orthogonal
    to the unit circle: |c|^2 = 1 + r^2.
    """
    cross = u.real * v.imag - u.imag * v.real
    if abs(cross) < 1e-14 * max(1.0, abs(u) * abs(v)):
        return None
    # solve 2 c.u = |u|^2 + 1, 2 c.v = |v|^2 + 1
    ru = abs(u) ** 2 + 1.0
    rv = abs(v) ** 2 + 1.0
    det = 2.0 * cross
    cx = (ru * v.imag - rv * u.imag) / det
    cy = (rv * u.real - ru * v.real) / det
    c = complex(cx, cy)
    return c, math.sqrt(abs(c) ** 2 - 1.0)


def reflect(p1: DiskPoint | complex, p2: DiskPoint | complex) -> DiskIsometry:
    """Reflection across the geodesic through two distinct interior points."""
    z1 = p1.to_complex() if isinstance(p1, DiskPoint) else p1
    z2 = p2.to_complex() if isinstance(p2, DiskPoint) else p2
    if abs(z1 - z2) < 1e-14:
        raise ValueError("coincident points do not determine a geodesic")
    circ = geodesic_circle(z1, z2)
    if circ is None:
        return DiskIsometry.axis_reflection(cmath.phase(z2 - z1))
    c, r = circ
    # inversion z -> (c conj(z) - 1) / (conj(z) - conj(c)), det-normalized
    return DiskIsometry(1j * c / r, -1j / r, reflecting=True)


def validate_schlafli(p: int, q: int) -> bool:
    """True when {p,q} tiles the hyperbolic plane: 1/p + 1/q < 1/2."""
    if p < 3 or q < 3:
        raise ValueError("p and q must be at least 3")
    return 2 * (p + q) < p * q


def circumradius(p: int, q: int) -> float:
    """Hyperbolic center-to-vertex distance of the regular {p,q} tile."""
    return math.acosh(1.0 / (math.tan(math.pi / p) * math.tan(math.pi / q)))


def base_polygon(p: int, q: int) -> TilePatch:
    """Regular p-gon with vertex angle 2 pi / q, centered at the origin.

    Canonical pose: first vertex on the positive x-axis, counterclockwise
    vertex order; edge k joins vertices k and k+1.
    """
    if not validate_schlafli(p, q):
        raise ValueError(f"{{{p},{q}}} is not a hyperbolic tiling")
    radius = math.tanh(circumradius(p, q) / 2.0)
    vertices = tuple(
        DiskPoint.from_complex(radius * cmath.exp(2j * math.pi * k / p)) for k in range(p)
    )
    return TilePatch(vertices, DiskPoint(0.0, 0.0))


def interior_angles(patch: TilePatch) -> list[float]:
    """Angle of the polygon at each vertex, measured between the two geodesic edges."""
    pts = [v.to_complex() for v in patch.vertices]
    n = len(pts)
    angles = []
    for i in range(n):
        prev_pt = pts[(i - 1) % n]
        here = pts[i]
        next_pt = pts[(i + 1) % n]
        t1 = _edge_tangent(here, prev_pt)
        t2 = _edge_tangent(here, next_pt)
        raw = abs(cmath.phase(t2 / t1))
        angles.append(raw)
    return angles


def _edge_tangent(at: complex, toward: complex) -> complex:
    """Unit tangent at ``at`` of the geodesic edge running to ``toward``."""
    circ = geodesic_circle(at, toward)
    if circ is None:
        t = toward - at
        return t / abs(t)
    c, _ = circ
    radial = at - c
    t = 1j * radial
    # orient the tangent toward the other endpoint
    if (t.real * (toward - at).real + t.imag * (toward - at).imag) < 0:
        t = -t
    return t / abs(t)
