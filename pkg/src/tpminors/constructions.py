"""Builders for the extremal objects: dual lines, mate points, incidence
configurations and their canonicalization, the assembled 2xn TP matrix,
power-sum matrices with a closed-form determinant, grid matrices, and
cofactor hyperplane families.

Everything here is exact; configurations carry non-vertical lines in
slope-intercept form (vertical lines are excluded by construction and
eliminated during canonicalization).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .exact import RatMatrix, det, rat, verify_tp, verify_tp_contiguous


@dataclass(frozen=True)
class Point2:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", rat(self.x))
        object.__setattr__(self, "y", rat(self.y))


@dataclass(frozen=True)
class Line2:
    """Non-vertical line y = m*x + c."""

    m: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", rat(self.m))
        object.__setattr__(self, "c", rat(self.c))

    def contains(self, p: Point2) -> bool:
        return p.y == self.m * p.x + self.c


@dataclass(frozen=True)
class Hyperplane:
    """Affine hyperplane sum_j coeffs[j] * x_j = offset."""

    coeffs: tuple
    offset: Fraction

    def __post_init__(self):
        cs = tuple(rat(c) for c in self.coeffs)
        if all(c == 0 for c in cs):
            raise ValueError("hyperplane coefficients must not all be zero")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "offset", rat(self.offset))

    @property
    def dim(self):
        return len(self.coeffs)

    def contains(self, point) -> bool:
        if len(point) != self.dim:
            raise ValueError("point dimension %d != %d" % (len(point), self.dim))
        return sum(c * rat(x) for c, x in zip(self.coeffs, point)) == self.offset


@dataclass(frozen=True)
class IncidenceConfig:
    points: tuple
    lines: tuple

    def __post_init__(self):
        pts = tuple(self.points)
        lns = tuple(self.lines)
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        if len(set(lns)) != len(lns):
            raise ValueError("lines must be distinct")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "lines", lns)


@dataclass
class ConstraintReport:
    """Violations of the six canonical-form constraints, as (id, indices)."""

    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


class CanonicalizationError(RuntimeError):
    def __init__(self, message, config=None, last_report=None):
        super().__init__(message)
        self.config = config
        self.last_report = last_report


# ---------------------------------------------------------------------------
# duality and mates


def dual_line(p: Point2) -> Line2:
    """Dual line of p=(a,b): {(x,y) : a*y - b*x = 1}.

    q lies on it iff det of the 2x2 matrix with columns p, q equals 1.
    Requires both coordinates nonzero (entries of a TP matrix always are).
    """
    if p.x == 0 or p.y == 0:
        raise ValueError("dual line requires both coordinates nonzero: %r" % (p,))
    # a*y - b*x = 1  ->  y = (b/a) x + 1/a
    return Line2(p.y / p.x, Fraction(1, 1) / p.x)


def mate_point(l: Line2) -> Point2:
    """The point (1/c, m/c) paired with line l: y = m*x + c.

    It sits on the parallel of l through the origin at distance 1/d from the
    origin (d = distance of l from the origin); the square roots in that
    description cancel, leaving an exact rational point.  For every point p on
    l, det(mate, p) = 1.
    """
    if l.m <= 0 or l.c <= 0:
        raise ValueError("mate point needs positive slope and intercept: %r" % (l,))
    return Point2(Fraction(1, 1) / l.c, l.m / l.c)


# ---------------------------------------------------------------------------
# the extremal point-line family


def elekes_config(N: int) -> IncidenceConfig:
    """Grid points [1..N] x [1..2N^2] against lines y=ax+b, a in [1..N],
    b in [1..N^2]: 2N^3 points, N^3 lines, every line meeting exactly N
    points, N^4 incidences in total."""
    if N < 1:
        raise ValueError("N must be >= 1")
    points = tuple(
        Point2(Fraction(i), Fraction(j))
        for i in range(1, N + 1)
        for j in range(1, 2 * N * N + 1)
    )
    lines = tuple(
        Line2(Fraction(a), Fraction(b))
        for a in range(1, N + 1)
        for b in range(1, N * N + 1)
    )
    return IncidenceConfig(points, lines)


def check_constraints(cfg: IncidenceConfig) -> ConstraintReport:
    """Test the six canonical-form constraints exactly.

    1 no two lines parallel; 2 slopes positive; 3 intercepts positive;
    4 every two points linearly independent; 5 no origin-parallel translate of
    a line passes through a point; 6 all points strictly in the first quadrant.
    """
    report = ConstraintReport()
    lines = cfg.lines
    points = cfg.points
    for a, b in combinations(range(len(lines)), 2):
        if lines[a].m == lines[b].m:
            report.violations.append((1, (a, b)))
    for i, l in enumerate(lines):
        if l.m <= 0:
            report.violations.append((2, (i,)))
        if l.c <= 0:
            report.violations.append((3, (i,)))
    for a, b in combinations(range(len(points)), 2):
        p, q = points[a], points[b]
        if p.x * q.y - p.y * q.x == 0:
            report.violations.append((4, (a, b)))
    for i, l in enumerate(lines):
        for j, p in enumerate(points):
            if p.y == l.m * p.x:
                report.violations.append((5, (i, j)))
    for j, p in enumerate(points):
        if p.x <= 0 or p.y <= 0:
            report.violations.append((6, (j,)))
    return report


# -- projective helpers (3x3 integer matrices on homogeneous coordinates) ---


def det_int3(M):
    return (
        M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
        - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
        + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])
    )


def _adjugate3(M):
    c = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            sub = [
                [M[r][s] for s in range(3) if s != j] for r in range(3) if r != i
            ]
            c[j][i] = (-1) ** (i + j) * (sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0])
    return c


def _apply3(M, v):
    return tuple(sum(M[i][k] * v[k] for k in range(3)) for i in range(3))


def _line_coeffs(l: Line2):
    # y = m x + c  <->  [-m, 1, -c] . (x, y, 1) = 0
    return (-l.m, Fraction(1), -l.c)


def _cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def canonicalize_config(cfg: IncidenceConfig, seed: int, budget: int = 64) -> IncidenceConfig:
    """Relabel cfg by an exact projective-then-affine map into canonical form.

    The incidence graph is preserved bijectively and the result passes
    check_constraints with no violations.  Each attempt draws a random
    integer projective map whose vanishing line misses all points and all
    pairwise line intersections (killing parallels), then applies
    deterministic shears/translations to make slopes, intercepts, and point
    coordinates positive; residual coincidences (constraints 4/5) trigger a
    retry.  Deterministic given (cfg, seed); raises after ``budget`` attempts.
    """
    if len(set(cfg.points)) != len(cfg.points):
        raise ValueError("points must be distinct")
    rng = random.Random(seed)
    line_vecs = [_line_coeffs(l) for l in cfg.lines]
    crossings = [
        _cross3(line_vecs[a], line_vecs[b])
        for a, b in combinations(range(len(line_vecs)), 2)
    ]
    point_vecs = [(p.x, p.y, Fraction(1)) for p in cfg.points]
    last_report = None
    for _ in range(budget):
        M = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
        if det_int3(M) == 0:
            continue
        # vanishing-line test: nothing we care about may map to infinity
        imgs = [_apply3(M, v) for v in point_vecs]
        if any(w[2] == 0 for w in imgs):
            continue
        if any(_apply3(M, v)[2] == 0 for v in crossings):
            continue
        pts = [Point2(w[0] / w[2], w[1] / w[2]) for w in imgs]
        adj = _adjugate3(M)
        # line coefficients transform by the adjugate (inverse up to scale)
        new_lines = []
        vertical = False
        for v in line_vecs:
            A, B, C = (sum(v[i] * adj[i][j] for i in range(3)) for j in range(3))
            if B == 0:
                vertical = True
                break
            new_lines.append(Line2(-A / B, -C / B))
        if vertical:
            continue
        # shear y -> y + t*x pushes every slope above zero
        min_m = min(l.m for l in new_lines) if new_lines else Fraction(1)
        t = Fraction(1) - min_m if min_m <= 0 else Fraction(0)
        pts = [Point2(p.x, p.y + t * p.x) for p in pts]
        new_lines = [Line2(l.m + t, l.c) for l in new_lines]
        # translate into the first quadrant with positive intercepts
        min_x = min((p.x for p in pts), default=Fraction(1))
        u = Fraction(1) - min_x if min_x <= 0 else Fraction(0)
        min_y = min((p.y for p in pts), default=Fraction(1))
        v_lo = max(
            [Fraction(0) - min_y] + [l.m * u - l.c for l in new_lines]
        ) if (new_lines or pts) else Fraction(0)
        v = v_lo + 1
        pts = [Point2(p.x + u, p.y + v) for p in pts]
        new_lines = [Line2(l.m, l.c + v - l.m * u) for l in new_lines]
        try:
            candidate = IncidenceConfig(tuple(pts), tuple(new_lines))
        except ValueError:
            continue
        report = check_constraints(candidate)
        if report.ok:
            return candidate
        last_report = report
    raise CanonicalizationError(
        "canonicalization failed after %d attempts" % budget,
        config=cfg,
        last_report=last_report,
    )


def assemble_tp_2xn(cfg: IncidenceConfig) -> RatMatrix:
    """Assemble the 2x|Q| TP matrix from a canonical configuration.

    Q is the point set together with one mate point per line, sorted by
    strictly increasing slope through the origin (a tie means the constraints
    were not actually satisfied).  The count of 2x2 minors equal to 1 is at
    least the incidence count of cfg, one unit minor per incidence via the
    mate-point identity.
    """
    report = check_constraints(cfg)
    if not report.ok:
        raise ValueError(
            "configuration violates canonical constraints: %r" % report.violations[:5]
        )
    Q = list(cfg.points) + [mate_point(l) for l in cfg.lines]
    Q.sort(key=lambda p: p.y / p.x)
    for a, b in zip(Q, Q[1:]):
        if a.y / a.x == b.y / b.x:
            raise ValueError("slope tie while assembling: %r vs %r" % (a, b))
    A = RatMatrix([[p.x for p in Q], [p.y for p in Q]])
    verdict = verify_tp(A) if A.cols <= 200 else verify_tp_contiguous(A)
    if not verdict.ok:
        raise AssertionError("assembled matrix unexpectedly not TP: %r" % (verdict.witness,))
    return A


# ---------------------------------------------------------------------------
# power-sum and grid matrices


def _validate_power_sum_params(a, b, k):
    a = tuple(rat(x) for x in a)
    b = tuple(rat(x) for x in b)
    if len(a) < 2 or len(b) < 2:
        raise ValueError("need at least two a's and two b's")
    if int(k) != k or k < 2:
        raise ValueError("k must be an integer >= 2")
    if any(x <= 0 for x in a) or any(x <= 0 for x in b):
        raise ValueError("all a_j and b_i must be positive")
    if any(y <= x for x, y in zip(a, a[1:])):
        raise ValueError("a must be strictly increasing")
    if any(y >= x for x, y in zip(b, b[1:])):
        raise ValueError("b must be strictly decreasing")
    return a, b, int(k)


def power_sum_matrix(a, b, k) -> RatMatrix:
    """Matrix with entries (b_i + a_j)^(k-1) for increasing positive a and
    decreasing positive b; every k x k minor is positive.  Rectangular shapes
    (|b| rows by |a| columns) are allowed."""
    a, b, k = _validate_power_sum_params(a, b, k)
    return RatMatrix([[(bi + aj) ** (k - 1) for aj in a] for bi in b])


def power_sum_det_closed_form(a, b, k) -> Fraction:
    """Closed-form determinant of the square k x k power-sum matrix:
    product of binomials C(k-1, i) times all pairwise differences of the a's
    and (reversed) b's."""
    a, b, k = _validate_power_sum_params(a, b, k)
    if len(a) != k or len(b) != k:
        raise ValueError("closed form needs |a| = |b| = k")
    value = Fraction(1)
    for i in range(k):
        value *= comb(k - 1, i)
    for t in range(k):
        for l in range(t + 1, k):
            value *= a[l] - a[t]
    for w in range(k):
        for u in range(w + 1, k):
            value *= b[w] - b[u]
    return value


def grid_matrix(n: int) -> RatMatrix:
    """The n x n TP_2 grid matrix A_{i,j} = (n-i+1) + j.

    Rows are ordered so the row offsets decrease; the 2x2 minor on rows i<j,
    cols k<l equals (l-k)(j-i), the area of the matching grid rectangle.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    return RatMatrix(
        [[Fraction((n - i + 1) + j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    )


# ---------------------------------------------------------------------------
# hyperplane families


def hyperplane_family(A: RatMatrix, t) -> list:
    """All cofactor hyperplanes of a TP d x n matrix at level t != 0.

    For each (d-1)-tuple I of column indices, the hyperplane
    sum_j c_j x_j = t whose coefficients are the last-column cofactors of the
    d x d determinant with columns A_{.,I} and a variable column.  A point p_k
    with k > max(I) lies on the t=1 member iff the d x d minor on columns
    I + (k) equals 1.  Members are verified pairwise non-proportional.
    """
    t = rat(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    d = A.rows
    if A.cols < d - 1:
        raise ValueError("need at least d-1 columns")
    out = []
    for I in combinations(range(1, A.cols + 1), d - 1):
        coeffs = []
        for j in range(1, d + 1):
            rows = tuple(r for r in range(1, d + 1) if r != j)
            if d == 1:
                cof = Fraction(1)
            else:
                cof = (-1) ** (j + d) * det(A.submatrix(rows, I))
            coeffs.append(cof)
        if all(c == 0 for c in coeffs):
            raise ValueError(
                "columns %r are dependent; matrix is not TP" % (I,)
            )
        out.append((I, Hyperplane(tuple(coeffs), t)))
    # distinctness: no two members proportional (including offsets)
    seen = {}
    for I, h in out:
        lead = next(c for c in h.coeffs if c != 0)
        key = tuple(c / lead for c in h.coeffs) + (h.offset / lead,)
        if key in seen:
            raise ValueError(
                "hyperplanes for %r and %r are proportional" % (seen[key], I)
            )
        seen[key] = I
    return out


# ---------------------------------------------------------------------------
# JSON interchange for configurations and point sets


def config_to_json(cfg: IncidenceConfig) -> str:
    doc = {
        "points": [[str(p.x), str(p.y)] for p in cfg.points],
        "lines": [{"m": str(l.m), "c": str(l.c)} for l in cfg.lines],
    }
    return json.dumps(doc)


def config_from_json(text: str) -> IncidenceConfig:
    doc = json.loads(text)
    points = tuple(Point2(Fraction(x), Fraction(y)) for x, y in doc.get("points", []))
    lines = tuple(Line2(Fraction(l["m"]), Fraction(l["c"])) for l in doc.get("lines", []))
    return IncidenceConfig(points, lines)


def points_to_json(points) -> str:
    return json.dumps({"points": [[str(p.x), str(p.y)] for p in points]})


def points_from_json(text: str):
    doc = json.loads(text)
    return [Point2(Fraction(x), Fraction(y)) for x, y in doc["points"]]
