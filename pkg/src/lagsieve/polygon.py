"""Newton polygons and factor-degree exclusion.

Points follow the convention (i, nu_p(c_{m-i})): abscissa 0 is the leading
coefficient, abscissa m the constant term.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import INFINITY, _val_unchecked, factorize, is_prime, valuation
from .polys import AlphaParam, IntPoly, build_g


class LemmaTag(str, enum.Enum):
    DUMAS = "dumas"
    FILASETA = "filaseta"
    DUMAS_ALL = "dumas-all-coeffs"
    MONIC_LINEAR = "monic-linear"
    GLEMMA = "glemma"
    GLEMMA1 = "glemma1"
    HALF_IRRED = "half-irred"
    LINEAR_ROOTS = "linear-roots"
    BOUNDED_SEARCH = "bounded-search"
    EVEN_QUARTIC = "even-quartic"
    CITED_T = "cited-T"
    CITED_T0 = "cited-T0"
    CITED_S = "cited-S"


@dataclass(frozen=True)
class Edge:
    start: tuple[int, int]
    end: tuple[int, int]

    @property
    def horizontal_length(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def slope(self) -> Fraction:
        return Fraction(self.end[1] - self.start[1], self.horizontal_length)

    @property
    def primitive_step(self) -> int:
        return self.slope.denominator

    @property
    def lattice_point_count(self) -> int:
        return self.horizontal_length // self.primitive_step - 1

    def to_dict(self) -> dict:
        s = self.slope
        return {
            "slope": f"{s.numerator}/{s.denominator}",
            "length": self.horizontal_length,
            "lattice_points": self.lattice_point_count,
        }


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Lower convex hull of points sorted by abscissa; colinear points dropped."""
    hull: list[tuple[int, int]] = []
    for pt in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


@dataclass(frozen=True)
class NewtonPolygon:
    prime: int
    points: tuple[tuple[int, int], ...]
    vertices: tuple[tuple[int, int], ...]

    @classmethod
    def from_points(cls, points, prime: int) -> "NewtonPolygon":
        pts = tuple(sorted((i, v) for i, v in points if v is not INFINITY))
        if len(pts) < 2 or pts[0][0] != 0:
            raise ValueError("need finite endpoints at both ends")
        return cls(prime, pts, tuple(lower_hull(list(pts))))

    @property
    def degree(self) -> int:
        return self.vertices[-1][0]

    @property
    def edges(self) -> list[Edge]:
        return [Edge(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    @property
    def rightmost_slope(self) -> Fraction:
        return self.edges[-1].slope

    def height_at(self, x) -> Fraction:
        """Newton function value at abscissa x."""
        for a, b in zip(self.vertices, self.vertices[1:]):
            if a[0] <= x <= b[0]:
                return a[1] + Fraction(b[1] - a[1], b[0] - a[0]) * (x - a[0])
        raise ValueError(f"{x} outside [0, {self.degree}]")

    def slope_lengths(self) -> dict[Fraction, int]:
        out: dict[Fraction, int] = {}
        for e in self.edges:
            out[e.slope] = out.get(e.slope, 0) + e.horizontal_length
        return out

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "vertices": [list(v) for v in self.vertices],
            "edges": [e.to_dict() for e in self.edges],
        }


def newton_polygon(poly: IntPoly, prime: int) -> NewtonPolygon:
    if not is_prime(prime):
        raise ValueError(f"{prime} is not prime")
    if poly.is_zero() or poly[0] == 0:
        raise ValueError("Newton polygon needs nonzero constant and leading terms")
    cs = poly.coeffs
    m = len(cs) - 1
    pts = [(i, _val_unchecked(cs[m - i], prime)) for i in range(m + 1)]
    return NewtonPolygon.from_points(pts, prime)


def rightmost_slope(poly: IntPoly, prime: int) -> Fraction:
    """Slope of the last polygon edge: the greatest slope from any point to
    the constant-term point.  Avoids building the hull."""
    cs = poly.coeffs
    m = len(cs) - 1
    if cs[0] == 0 or m < 1:
        raise ValueError("need nonzero constant term and degree >= 1")
    vm = _val_unchecked(cs[0], prime)
    num, den = None, 1
    for i in range(m):
        c = cs[m - i]
        if c == 0:
            continue
        dy, dx = vm - _val_unchecked(c, prime), m - i
        if num is None or dy * den > num * dx:
            num, den = dy, dx
    return Fraction(num, den)


def _degree_mask(edges) -> int:
    reach = 1
    for e in edges:
        step, length = e.primitive_step, e.horizontal_length
        acc = 0
        for c in range(0, length + 1, step):
            acc |= reach << c
        reach = acc
    return reach


def attainable_degrees(np_: NewtonPolygon) -> set[int]:
    """Degrees compatible with the polygon: sums over edges of multiples of
    each edge's primitive step, up to the edge's length."""
    mask = _degree_mask(np_.edges)
    return {i for i in range(mask.bit_length()) if mask >> i & 1}


@dataclass
class CriterionReport:
    lemma_tag: LemmaTag
    prime_used: int | None
    excluded_degrees: frozenset[int]
    conclusive: bool
    notes: str = ""
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.conclusive and self.excluded_degrees:
            raise ValueError("inconclusive report cannot exclude degrees")

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma_tag.value,
            "prime": self.prime_used,
            "excluded_degrees": sorted(self.excluded_degrees),
            "conclusive": self.conclusive,
            "notes": self.notes,
        }


def filaseta_exclusion(g: IntPoly, prime: int, l: int, k: int) -> CriterionReport:
    """No factor with degree in [l+1, k] for any twist sum a_j b_j x^j with
    p not dividing a_0 a_m."""
    m = g.degree
    if not (m >= 2 * k > 2 * l >= 0):
        raise ValueError(f"need m >= 2k > 2l >= 0 (m={m}, k={k}, l={l})")
    tag = LemmaTag.FILASETA
    if g[m] % prime == 0:
        return CriterionReport(tag, prime, frozenset(), False, "p divides leading coefficient")
    if any(g[j] % prime for j in range(0, m - l)):
        return CriterionReport(tag, prime, frozenset(), False, "p misses a low coefficient")
    slope = newton_polygon(g, prime).rightmost_slope
    if slope * k < 1:
        return CriterionReport(
            tag, prime, frozenset(range(l + 1, k + 1)), True,
            f"rightmost slope {slope} < 1/{k}", {"rightmost_slope": slope},
        )
    return CriterionReport(
        tag, prime, frozenset(), False,
        f"rightmost slope {slope} >= 1/{k}", {"rightmost_slope": slope},
    )


def _free_point_levels(g: IntPoly, prime: int):
    """Endpoints plus, for each interior point strictly below the chord, the
    heights a twisted coefficient can give it while staying below the chord.

    Points with zero coefficient are absent for every twist.  Heights at or
    above the chord can never produce a hull vertex, so a twist pushing a
    point there is equivalent to removing it.
    """
    m = g.degree
    left = (0, valuation(g[m], prime))
    right = (m, valuation(g[0], prime))
    dy, dx = right[1] - left[1], m
    free = []
    for i in range(1, m):
        v = valuation(g[m - i], prime)
        if v is INFINITY:
            continue
        # heights h with h < left_y + dy*i/dx
        top = left[1] * dx + dy * i  # chord height times dx
        if v * dx < top:
            max_h = (top - 1) // dx
            free.append((i, tuple(range(v, max_h + 1))))
    return left, right, free


def _admissible_polygons(g: IntPoly, prime: int, max_points: int, max_configs: int):
    left, right, free = _free_point_levels(g, prime)
    if len(free) > max_points:
        return None, len(free)
    total = math.prod(len(levels) + 1 for _, levels in free)
    if total > max_configs:
        return None, len(free)

    def gen():
        choices = [(None,) + levels for _, levels in free]
        for combo in itertools.product(*choices):
            pts = [left]
            pts += [(i, h) for (i, _), h in zip(free, combo) if h is not None]
            pts.append(right)
            yield lower_hull(pts)

    return gen(), len(free)


def dumas_exclusion_poly(
    g: IntPoly, prime: int, k: int, *, max_points: int = 22, max_configs: int = 1 << 18
) -> CriterionReport:
    """Exclude degree k for every admissible twist of g (ends fixed up to
    units, interior coefficients arbitrary)."""
    tag = LemmaTag.DUMAS_ALL
    if g[0] % prime == 0 and g[0] == 0:
        raise ValueError("zero constant term")
    gen, count = _admissible_polygons(g, prime, max_points, max_configs)
    if gen is None:
        return CriterionReport(
            tag, prime, frozenset(), False,
            f"{count} below-chord points exceed enumeration budget",
        )
    seen = set()
    for verts in gen:
        key = tuple(verts)
        if key in seen:
            continue
        seen.add(key)
        edges = [Edge(a, b) for a, b in zip(verts, verts[1:])]
        if _degree_mask(edges) >> k & 1:
            return CriterionReport(
                tag, prime, frozenset(), False,
                f"degree {k} attainable for vertices {list(key)}",
            )
    return CriterionReport(
        tag, prime, frozenset({k}), True,
        f"{len(seen)} admissible polygons, {count} free points",
    )


def dumas_exclusion_all_coeffs(
    n: int, alpha: AlphaParam, prime: int, k: int, *, max_points: int = 22
) -> CriterionReport:
    if k < 1:
        raise ValueError("k must be >= 1")
    return dumas_exclusion_poly(build_g(n, alpha), prime, k, max_points=max_points)


def monic_linear_constraint_poly(g: IntPoly, prime: int, *, max_points: int = 22) -> set[int] | None:
    """Exponents e = nu_p(b) for which some admissible polygon has an edge of
    integer slope e (so a root b with p^e || b is not ruled out).

    Returns None when the enumeration budget is exceeded.
    """
    gen, _ = _admissible_polygons(g, prime, max_points, 1 << 18)
    if gen is None:
        return None
    cap = valuation(g[0], prime)
    out: set[int] = set()
    for verts in gen:
        for a, b in zip(verts, verts[1:]):
            dy, dx = b[1] - a[1], b[0] - a[0]
            if dy % dx == 0 and dy // dx <= cap:
                out.add(dy // dx)
    return out


def monic_linear_constraint(w_template: tuple[int, AlphaParam], prime: int) -> set[int] | None:
    n, alpha = w_template
    if not isinstance(alpha, AlphaParam):
        alpha = AlphaParam.from_value(alpha)
    return monic_linear_constraint_poly(build_g(n, alpha), prime)


@lru_cache(maxsize=4096)
def cached_g(n: int, alpha: AlphaParam) -> IntPoly:
    return build_g(n, alpha)


@lru_cache(maxsize=65536)
def cached_polygon(n: int, alpha: AlphaParam, prime: int, square: bool = False) -> NewtonPolygon:
    from .polys import substitute_square

    g = cached_g(n, alpha)
    if square:
        g = substitute_square(g)
    return newton_polygon(g, prime)


def constant_primes(n: int, alpha: AlphaParam) -> list[int]:
    """Primes dividing the constant term of g (candidates for polygon work)."""
    out: set[int] = set()
    for i in range(1, n + 1):
        out.update(factorize(alpha.a + (alpha.u + i) * alpha.d))
    return sorted(out)
