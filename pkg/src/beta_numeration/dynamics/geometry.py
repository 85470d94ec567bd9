from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from beta_numeration import global_state
from beta_numeration.errors import ParseError
from beta_numeration.field import Box, FieldElement, compare, edge_sign, modulus_squared_equals
from beta_numeration.whisper import whisper

Point = Tuple[Fraction, Fraction]


def cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Sequence[Point]) -> List[Point]:
    """Counter-clockwise hull, collinear points dropped (monotone chain)."""
    points = sorted(set(points))
    if len(points) <= 2:
        return points
    lower, upper = [], []
    for p in points:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(points):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def twice_area(polygon: Sequence[Point]) -> Fraction:
    return sum((polygon[i][0] * polygon[(i + 1) % len(polygon)][1]
                - polygon[(i + 1) % len(polygon)][0] * polygon[i][1] for i in range(len(polygon))), Fraction(0))


def _clip(polygon: List[Point], a: Point, b: Point, keep_left: bool) -> List[Point]:
    """Part of a convex polygon on one closed side of the line a -> b."""
    def side(p):
        value = cross(a, b, p)
        return value if keep_left else -value

    result = []
    for i, p in enumerate(polygon):
        q = polygon[(i + 1) % len(polygon)]
        sp, sq = side(p), side(q)
        if sp >= 0:
            result.append(p)
        if (sp > 0 > sq) or (sp < 0 < sq):
            t = sp / (sp - sq)
            result.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return result


def subtract_convex(piece: List[Point], hole: Sequence[Point]) -> List[List[Point]]:
    """Convex pieces covering piece minus the interior of hole, pieces of zero area dropped."""
    pieces = []
    remaining = piece
    for i, a in enumerate(hole):
        b = hole[(i + 1) % len(hole)]
        outside = _clip(remaining, a, b, keep_left=False)
        if len(outside) >= 3 and twice_area(outside) != 0:
            pieces.append(outside)
        remaining = _clip(remaining, a, b, keep_left=True)
        if len(remaining) < 3 or twice_area(remaining) == 0:
            break
    return pieces


def polygon_covered(target: List[Point], tiles: Sequence[Sequence[Point]]) -> bool:
    """Whether the union of the closed convex tiles covers the convex target up to sets of zero area."""
    pieces = [target]
    for tile in tiles:
        pieces = [rest for piece in pieces for rest in subtract_convex(piece, tile)]
        if not pieces:
            return True
    return not pieces


# regions

def _exact_point(z: FieldElement) -> Optional[Point]:
    return z.field.exact_complex(z)


@dataclass(frozen=True)
class IntervalRegion:
    """Half-open [lo, hi) on the real line; endpoints are field elements."""
    lo: FieldElement
    hi: FieldElement

    def contains(self, x: FieldElement) -> bool:
        return compare(x, self.lo) >= 0 and compare(x, self.hi) < 0

    @property
    def contains_zero_inside(self) -> bool:
        return self.lo.sign() < 0 < self.hi.sign()


@dataclass(frozen=True)
class DiskRegion:
    """Open disk of rational radius around 0."""
    radius: Fraction

    def __post_init__(self):
        if Fraction(self.radius) <= 0:
            raise ParseError(f"disk radius {self.radius} must be positive")
        object.__setattr__(self, "radius", Fraction(self.radius))

    @property
    def radius_squared(self) -> Fraction:
        return self.radius * self.radius

    def contains(self, z: FieldElement) -> bool:
        exact = _exact_point(z)
        if exact:
            return exact[0] ** 2 + exact[1] ** 2 < self.radius_squared
        eps = Fraction(1, 1 << global_state.precision_bits)
        boundary_checked = False
        while True:
            modulus = z.embed(eps).abs_squared()
            if modulus.hi < self.radius_squared:
                return True
            if modulus.lo >= self.radius_squared:
                return False
            if not boundary_checked and eps.denominator.bit_length() > global_state.exact_check_bits:
                boundary_checked = True
                if modulus_squared_equals(z, self.radius_squared):
                    whisper("dynamics", f"{z} lies on the disk boundary, outside the open disk")
                    return False
            eps /= 1 << 16

    def contains_point(self, p: Point) -> bool:
        return p[0] ** 2 + p[1] ** 2 < self.radius_squared


@dataclass(frozen=True)
class PolygonRegion:
    """Closed convex polygon, vertices counter-clockwise, with 0 in its interior."""
    vertices: Tuple[Point, ...]

    def __post_init__(self):
        vertices = tuple((Fraction(x), Fraction(y)) for x, y in self.vertices)
        hull = convex_hull(vertices)
        if len(hull) != len(vertices) or twice_area(hull) <= 0:
            raise ParseError("polygon vertices must be in convex position")
        # rotate the hull so the caller's first vertex stays first
        start = hull.index(vertices[0])
        object.__setattr__(self, "vertices", tuple(hull[start:] + hull[:start]))
        if not all(cross(a, b, (Fraction(0), Fraction(0))) > 0 for a, b in self.edges()):
            raise ParseError("polygon must contain 0 in its interior")

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def contains_point(self, p: Point) -> bool:
        return all(cross(a, b, p) >= 0 for a, b in self.edges())

    def contains_box(self, box: Box) -> Optional[bool]:
        """True if the box is inside, False if it misses the polygon, None when it meets the boundary."""
        corners = box.corners
        if all(self.contains_point(c) for c in corners):
            return True
        for a, b in self.edges():
            if all(cross(a, b, c) < 0 for c in corners):
                return False
        return None

    def contains(self, z: FieldElement) -> bool:
        exact = _exact_point(z)
        if exact:
            return self.contains_point(exact)
        eps = Fraction(1, 1 << global_state.precision_bits)
        while eps.denominator.bit_length() <= global_state.exact_check_bits:
            verdict = self.contains_box(z.embed(eps))
            if verdict is not None:
                return verdict
            eps /= 1 << 16
        inside = all(edge_sign(z, a, b) >= 0 for a, b in self.edges())
        whisper("dynamics", f"{z} decided exactly against the polygon boundary: inside = {inside}")
        return inside

    def translated(self, a: Point) -> List[Point]:
        return [(x + a[0], y + a[1]) for x, y in self.vertices]

    def boundary_distance_squared(self) -> Fraction:
        """Squared distance from 0 to the boundary, for 0 inside."""
        best = None
        for a, b in self.edges():
            dx, dy = b[0] - a[0], b[1] - a[1]
            length = dx * dx + dy * dy
            t = -(a[0] * dx + a[1] * dy) / length
            t = min(max(t, Fraction(0)), Fraction(1))
            px, py = a[0] + t * dx, a[1] + t * dy
            distance = px * px + py * py
            best = distance if best is None else min(best, distance)
        return best
