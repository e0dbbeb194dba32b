"""Upper half plane geometry: Mobius maps, geodesics, ideal triangles, feet.

Boundary points live on the extended real line; the point at infinity is the
float ``inf`` (a single symbol, never ``-inf``).  Interior points are complex
numbers with positive imaginary part, wrapped in :class:`HPoint` at the API
surface.  All operations are pure and all types immutable, so everything here
is safe for unrestricted parallel use.

Angle convention: a unit tangent ``(x, y, theta)`` points in the direction
``theta`` measured counterclockwise from the positive x axis.  ``theta_to(p,
v)`` is the angle from ``v`` to the ray toward ``p``, counterclockwise,
wrapped to ``[-pi, pi)``.  This convention is frozen here; downstream code
consumes only ``|Theta|`` and left/right sign tests.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

INF = math.inf

TWO_PI = 2.0 * math.pi

# distance from the center of an ideal triangle to each of its sides
CENTER_SIDE_DIST = 0.5 * math.log(3.0)

# center of the ideal triangle (0, 1, oo)
CENTER_01INF = complex(0.5, 0.5 * math.sqrt(3.0))


def is_inf(x) -> bool:
    return x == INF


def wrap_angle(t: float) -> float:
    """Reduce an angle to [-pi, pi)."""
    t = math.fmod(t + math.pi, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    return t - math.pi


@dataclass(frozen=True)
class HPoint:
    """A point x + iy of the upper half plane, y > 0."""

    x: float
    y: float

    def __post_init__(self):
        if not self.y > 0.0:
            raise ValueError(f"HPoint needs y > 0, got y={self.y}")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @staticmethod
    def of(z: complex) -> "HPoint":
        return HPoint(z.real, z.imag)


@dataclass(frozen=True)
class UnitTangent:
    """A unit tangent vector (x, y, theta) with theta reduced mod 2*pi."""

    x: float
    y: float
    theta: float

    def __post_init__(self):
        if not self.y > 0.0:
            raise ValueError(f"UnitTangent needs y > 0, got y={self.y}")
        object.__setattr__(self, "theta", self.theta % TWO_PI)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @property
    def point(self) -> HPoint:
        return HPoint(self.x, self.y)

    def rotated(self, dtheta: float) -> "UnitTangent":
        return UnitTangent(self.x, self.y, self.theta + dtheta)


@dataclass(frozen=True)
class MobiusMap:
    """Real Mobius map z -> (az+b)/(cz+d), stored with ad - bc = 1."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if not det > 0.0:
            raise ValueError(f"orientation-preserving map needs det > 0, got {det}")
        s = 1.0 / math.sqrt(det)
        if self.a < 0.0 or (self.a == 0.0 and self.c < 0.0):
            s = -s
        object.__setattr__(self, "a", self.a * s)
        object.__setattr__(self, "b", self.b * s)
        object.__setattr__(self, "c", self.c * s)
        object.__setattr__(self, "d", self.d * s)

    @staticmethod
    def identity() -> "MobiusMap":
        return MobiusMap(1.0, 0.0, 0.0, 1.0)

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """self after other."""
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __call__(self, z):
        if isinstance(z, HPoint):
            return HPoint.of(self.apply_complex(z.z))
        if isinstance(z, UnitTangent):
            return self.apply_tangent(z)
        if isinstance(z, complex):
            return self.apply_complex(z)
        return self.apply_boundary(z)

    def apply_complex(self, z: complex) -> complex:
        return (self.a * z + self.b) / (self.c * z + self.d)

    def apply_boundary(self, x):
        if is_inf(x):
            if self.c == 0.0:
                return INF
            return self.a / self.c
        den = self.c * x + self.d
        if den == 0.0:
            return INF
        return (self.a * x + self.b) / den

    def apply_tangent(self, v: UnitTangent) -> UnitTangent:
        z = v.z
        w = self.apply_complex(z)
        # derivative 1/(cz+d)^2 rotates tangent vectors by -2*arg(cz+d)
        dtheta = -2.0 * cmath.phase(self.c * z + self.d)
        return UnitTangent(w.real, w.imag, v.theta + dtheta)

    def trace_sq(self) -> float:
        t = self.a + self.d
        return t * t


def _to_01inf(p0, p1, p2) -> MobiusMap:
    """Mobius map sending the ccw boundary triple (p0, p1, p2) to (0, 1, inf)."""
    if is_inf(p0):
        return MobiusMap(0.0, p1 - p2, 1.0, -p2)
    if is_inf(p1):
        return MobiusMap(1.0, -p0, 1.0, -p2)
    if is_inf(p2):
        return MobiusMap(1.0, -p0, 0.0, p1 - p0)
    return MobiusMap(p1 - p2, -p0 * (p1 - p2), p1 - p0, -p2 * (p1 - p0))


def mobius_three_points(src, dst) -> MobiusMap:
    """The Mobius map taking the ccw boundary triple src to the ccw triple dst."""
    return _to_01inf(*dst).inverse().compose(_to_01inf(*src))


def geodesic_chart(u, w) -> MobiusMap:
    """Mobius map sending boundary point u to 0 and w to inf."""
    if is_inf(w):
        return MobiusMap(1.0, -u, 0.0, 1.0)
    if is_inf(u):
        return MobiusMap(0.0, -1.0, 1.0, -w)
    if u < w:
        return MobiusMap(-1.0, u, 1.0, -w)
    return MobiusMap(1.0, -u, 1.0, -w)


def cusp_chart(p) -> MobiusMap:
    """A Mobius map sending the boundary point p to inf."""
    if is_inf(p):
        return MobiusMap.identity()
    return MobiusMap(0.0, -1.0, 1.0, -p)


@dataclass(frozen=True)
class Geodesic:
    """Unoriented complete geodesic given by two distinct boundary endpoints."""

    e1: float
    e2: float

    def __post_init__(self):
        if self.e1 == self.e2:
            raise ValueError("geodesic endpoints must be distinct")
        a, b = self.e1, self.e2
        if is_inf(a) or (not is_inf(b) and b < a):
            object.__setattr__(self, "e1", b)
            object.__setattr__(self, "e2", a)

    def contains(self, z: HPoint, tol: float = 1e-12) -> bool:
        m = geodesic_chart(self.e1, self.e2)
        w = m.apply_complex(z.z)
        return abs(w.real) <= tol * abs(w)


@dataclass(frozen=True)
class OrientedGeodesic:
    """Geodesic with a direction of travel, from ``src`` to ``dst``."""

    src: float
    dst: float

    def __post_init__(self):
        if self.src == self.dst:
            raise ValueError("oriented geodesic endpoints must be distinct")

    def reversed(self) -> "OrientedGeodesic":
        return OrientedGeodesic(self.dst, self.src)

    @property
    def geodesic(self) -> Geodesic:
        return Geodesic(self.src, self.dst)


def _cyclic_boundary_less(a, b) -> bool:
    """Order on extended reals with inf largest."""
    if is_inf(a):
        return False
    if is_inf(b):
        return True
    return a < b


def is_ccw(v0, v1, v2) -> bool:
    """True when the boundary triple is positively (counterclockwise) ordered."""
    asc = (
        _cyclic_boundary_less(v0, v1)
        + _cyclic_boundary_less(v1, v2)
        + _cyclic_boundary_less(v2, v0)
    )
    return asc >= 2


@dataclass(frozen=True)
class IdealTriangle:
    """Ideal triangle, vertices stored in positive cyclic order.

    The cyclic order is canonicalized so the smallest vertex (inf greatest)
    comes first.
    """

    v0: float
    v1: float
    v2: float

    def __post_init__(self):
        vs = (self.v0, self.v1, self.v2)
        if len({vs[0], vs[1], vs[2]}) != 3:
            raise ValueError("triangle vertices must be pairwise distinct")
        if not is_ccw(*vs):
            vs = (vs[0], vs[2], vs[1])
        # rotate the minimum first
        k = min(range(3), key=lambda i: (is_inf(vs[i]), vs[i] if not is_inf(vs[i]) else 0.0))
        vs = (vs[k], vs[(k + 1) % 3], vs[(k + 2) % 3])
        object.__setattr__(self, "v0", vs[0])
        object.__setattr__(self, "v1", vs[1])
        object.__setattr__(self, "v2", vs[2])

    @property
    def vertices(self):
        return (self.v0, self.v1, self.v2)


@dataclass(frozen=True)
class Horoball:
    """Horoball h_c(z) >= level at the cusp c, with a fixed normalizing map.

    ``chart`` sends the cusp to inf; heights are log(Im(chart(z))/width),
    so the cusp stabilizer conjugates to the unit translation.
    """

    base: float
    level: float
    chart: MobiusMap
    width: float = 1.0

    def height(self, z: HPoint) -> float:
        return math.log(self.chart.apply_complex(z.z).imag / self.width)

    def contains(self, z: HPoint) -> bool:
        return self.height(z) >= self.level


def hyp_dist(z1: HPoint | complex, z2: HPoint | complex) -> float:
    """Hyperbolic distance in the upper half plane."""
    if isinstance(z1, HPoint):
        z1 = z1.z
    if isinstance(z2, HPoint):
        z2 = z2.z
    num = abs(z1 - z2) ** 2
    return math.acosh(1.0 + num / (2.0 * z1.imag * z2.imag))


def foot(g: Geodesic, w: HPoint) -> tuple[HPoint, UnitTangent]:
    """Nearest point of the geodesic to w, with the unit normal toward w.

    Raises ValueError when w lies on the geodesic (normal undefined).
    """
    m = geodesic_chart(g.e1, g.e2)
    zw = m.apply_complex(w.z)
    if abs(zw.real) <= 1e-14 * abs(zw):
        raise ValueError("foot undefined: point lies on the geodesic")
    f = complex(0.0, abs(zw))
    theta = 0.0 if zw.real > 0 else math.pi
    back = m.inverse()
    return back(HPoint.of(f)), back.apply_tangent(UnitTangent(f.real, f.imag, theta))


def foot_point(g: Geodesic, w: HPoint) -> HPoint:
    m = geodesic_chart(g.e1, g.e2)
    zw = m.apply_complex(w.z)
    return m.inverse()(HPoint.of(complex(0.0, abs(zw))))


def center(t: IdealTriangle) -> HPoint:
    """The point of the ideal triangle at distance log(sqrt 3) from each side."""
    m = mobius_three_points((0.0, 1.0, INF), t.vertices)
    return HPoint.of(m.apply_complex(CENTER_01INF))


def height(chart: MobiusMap, z: HPoint, width: float = 1.0) -> float:
    """Height log(Im(chart(z))/width) of z with respect to a normalized cusp."""
    return math.log(chart.apply_complex(z.z).imag / width)


def delta(p, z1: HPoint | complex, z2: HPoint | complex) -> float:
    """Signed distance between the horocircles at p through z1 and z2.

    Positive iff the horoball at p through z1 is inside the one through z2
    (z1 closer to p).  For a normalized cusp this is the height difference.
    """
    if isinstance(z1, HPoint):
        z1 = z1.z
    if isinstance(z2, HPoint):
        z2 = z2.z
    if is_inf(p):
        return math.log(z1.imag) - math.log(z2.imag)
    return (
        math.log(z1.imag)
        - 2.0 * math.log(abs(z1 - p))
        - math.log(z2.imag)
        + 2.0 * math.log(abs(z2 - p))
    )


def ray_direction_to(p, z: complex) -> float:
    """Direction angle at z of the geodesic ray from z to the boundary point p."""
    x, y = z.real, z.imag
    if is_inf(p):
        return 0.5 * math.pi
    if p == x:
        return -0.5 * math.pi
    # circle through z with one end at p: center c0 on the real axis
    c0 = (x * x + y * y - p * p) / (2.0 * (x - p))
    phi = cmath.phase(complex(x - c0, y))
    if p > c0:
        return wrap_angle(phi - 0.5 * math.pi)
    return wrap_angle(phi + 0.5 * math.pi)


def theta_to(p, v: UnitTangent) -> float:
    """Angle from v to the ray toward p, counterclockwise, in [-pi, pi)."""
    return wrap_angle(ray_direction_to(p, v.z) - v.theta)


def forward_endpoint(v: UnitTangent):
    """Boundary endpoint of the geodesic ray from (z, theta)."""
    c, s = math.cos(v.theta), math.sin(v.theta)
    if abs(c) < 1e-15:
        return INF if s > 0 else v.x
    # parametrize the circle z = c0 + R e^{i phi}; travel with dphi > 0 has
    # direction phi + pi/2 and heads to c0 - R, travel with dphi < 0 has
    # direction phi - pi/2 and heads to c0 + R; pick the phi in (0, pi)
    phi = v.theta - 0.5 * math.pi
    if math.sin(phi) > 0.0:
        sphi, cphi = math.sin(phi), math.cos(phi)
        r = v.y / sphi
        return (v.x - r * cphi) - r
    phi = v.theta + 0.5 * math.pi
    sphi, cphi = math.sin(phi), math.cos(phi)
    r = v.y / sphi
    return (v.x - r * cphi) + r


def backward_endpoint(v: UnitTangent):
    return forward_endpoint(v.rotated(math.pi))


def zmax(g: Geodesic | OrientedGeodesic, p) -> HPoint:
    """The point of the geodesic closest to p (max height at p).

    Raises ValueError when p is an endpoint (no closest point exists).
    """
    if isinstance(g, OrientedGeodesic):
        u, w = g.src, g.dst
    else:
        u, w = g.e1, g.e2
    if p == u or p == w:
        raise ValueError("zmax undefined: p is an endpoint of the geodesic")
    if is_inf(p):
        return HPoint(0.5 * (u + w), 0.5 * abs(w - u))
    n = cusp_chart(p)
    u1, w1 = n.apply_boundary(u), n.apply_boundary(w)
    if is_inf(u1) or is_inf(w1):
        # p maps one endpoint to a finite value, the other stays finite
        raise ValueError("degenerate chart in zmax")
    top = HPoint(0.5 * (u1 + w1), 0.5 * abs(w1 - u1))
    return n.inverse()(top)


def geodesic_time(g: Geodesic, z1: HPoint, z2: HPoint) -> float:
    """Signed distance from z1 to z2 along g, positive toward g.e2."""
    m = geodesic_chart(g.e1, g.e2)
    return math.log(abs(m.apply_complex(z2.z))) - math.log(abs(m.apply_complex(z1.z)))


# --- exact-rational helpers -------------------------------------------------
#
# At zero shear every tessellation vertex is a rational or inf; these mirrors
# of the float operations keep Fractions exact for the Farey checks.


def apply_int_mobius(mat, x):
    """Apply an integer matrix ((a,b),(c,d)) to a Fraction or INF."""
    (a, b), (c, d) = mat
    if is_inf(x):
        if c == 0:
            return INF
        return Fraction(a, c)
    den = c * x + d
    if den == 0:
        return INF
    return Fraction(a * x + b, den)


def fraction_pq(x):
    """Numerator/denominator of a boundary rational, with inf -> (1, 0)."""
    if is_inf(x):
        return 1, 0
    f = Fraction(x)
    return f.numerator, f.denominator
