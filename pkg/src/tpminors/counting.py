"""Exact censuses and counters.

Minor-value censuses over index scopes, point-line and point-hyperplane
incidences, unit-area axis-parallel rectangle counts, the grid closed form
with the divisor function, and the multiset difference/product algebra with
maximum multiplicity.  Counts are exact integers; census keys are canonical
reduced rationals.  Enumeration is range-partitionable: partial censuses from
disjoint chunks merge by plain Counter addition, so any parallel schedule
yields identical output.
"""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import isqrt, lcm

from .constructions import IncidenceConfig, Point2
from .exact import RatMatrix, det_int, rat

SCOPES = ("all-pairs", "columns-only")


def _index_scope(A: RatMatrix, k: int, scope: str):
    if int(k) != k or k < 1:
        raise ValueError("minor order must be a positive integer")
    if k > min(A.rows, A.cols):
        raise ValueError("order %d exceeds matrix dimensions %dx%d" % (k, A.rows, A.cols))
    if scope == "columns-only":
        if k != A.rows:
            raise ValueError("columns-only scope requires k = rows")
        row_tuples = [tuple(range(1, A.rows + 1))]
    elif scope == "all-pairs":
        row_tuples = list(combinations(range(1, A.rows + 1), k))
    else:
        raise ValueError("unknown scope %r" % (scope,))
    return row_tuples


def _int_rows(A: RatMatrix):
    """Clear denominators once: per-row integer entries and scale factors."""
    int_rows = []
    scales = []
    for row in A.entries:
        m = lcm(*(e.denominator for e in row))
        int_rows.append([e.numerator * (m // e.denominator) for e in row])
        scales.append(m)
    return int_rows, scales


def minor_census(A: RatMatrix, k: int, scope: str = "all-pairs",
                 witnesses: bool = False, part=None):
    """Exact multiset of all k x k minor values over the chosen index scope.

    Returns a Counter mapping canonical Fraction -> multiplicity; with
    ``witnesses`` also a dict value -> list of (I, J).  ``part=(i, n)``
    restricts enumeration to every n-th (row, column) tuple pair starting at
    offset i; partial results merge by Counter addition.
    """
    row_tuples = _index_scope(A, k, scope)
    int_rows, scales = _int_rows(A)
    census = Counter()
    wit = {} if witnesses else None
    idx = 0
    lo, step = (0, 1) if part is None else part
    for I in row_tuples:
        denom = 1
        for i in I:
            denom *= scales[i - 1]
        sel = [int_rows[i - 1] for i in I]
        for J in combinations(range(1, A.cols + 1), k):
            if idx % step == lo:
                sub = [[r[j - 1] for j in J] for r in sel]
                v = Fraction(det_int(sub), denom)
                census[v] += 1
                if wit is not None:
                    wit.setdefault(v, []).append((I, J))
            idx += 1
    if witnesses:
        return census, wit
    return census


def merge_censuses(parts):
    total = Counter()
    for p in parts:
        total.update(p)
    return total


def count_minors_equal(A: RatMatrix, k: int, t, scope: str = "all-pairs") -> int:
    """Number of k x k minors equal to t in the chosen scope."""
    return minor_census(A, k, scope)[rat(t)]


def max_repeated_minor(A: RatMatrix, k: int, scope: str = "all-pairs"):
    """(value, multiplicity) of the most repeated minor; ties break to the
    smaller value."""
    census = minor_census(A, k, scope)
    best = None
    for v, m in census.items():
        if best is None or m > best[1] or (m == best[1] and v < best[0]):
            best = (v, m)
    return best


def distinct_minor_count(A: RatMatrix, k: int, scope: str = "all-pairs") -> int:
    return len(minor_census(A, k, scope))


# ---------------------------------------------------------------------------
# incidences


def point_line_incidences(cfg: IncidenceConfig, return_pairs: bool = False):
    """Exact I(P, L) by per-line membership tests."""
    pairs = []
    count = 0
    for li, l in enumerate(cfg.lines):
        for pi, p in enumerate(cfg.points):
            if p.y == l.m * p.x + l.c:
                count += 1
                if return_pairs:
                    pairs.append((pi, li))
    return (count, pairs) if return_pairs else count


def point_hyperplane_incidences(points, planes, ordered_restriction=None) -> int:
    """Exact count of (point, hyperplane) incidences.

    ``ordered_restriction`` is a list of (d-1)-index-tuples aligned with
    ``planes``; when given, a pair (plane for tuple I, point with 1-based
    index k) is counted only if k > max(I) -- exactly the ordered pairs that
    correspond to unit d x d minors on columns I + (k).
    """
    if ordered_restriction is not None and len(ordered_restriction) != len(planes):
        raise ValueError("restriction list must align with planes")
    count = 0
    for a, h in enumerate(planes):
        cut = max(ordered_restriction[a]) if ordered_restriction is not None else 0
        for kidx, p in enumerate(points, start=1):
            if ordered_restriction is not None and kidx <= cut:
                continue
            if h.contains(p):
                count += 1
    return count


def verify_no_Kd2(points, planes):
    """Check that no d points lie on two planes of the family.

    Returns (True, None) or (False, (point indices, (plane index a, b))).
    """
    if not planes:
        return True, None
    d = planes[0].dim
    incident = []
    for h in planes:
        incident.append(frozenset(i for i, p in enumerate(points) if h.contains(p)))
    for a, b in combinations(range(len(planes)), 2):
        common = incident[a] & incident[b]
        if len(common) >= d:
            return False, (tuple(sorted(common))[:d], (a, b))
    return True, None


# ---------------------------------------------------------------------------
# rectangles and the grid closed form


def unit_rectangles(points, area, mode: str = "diagonal") -> int:
    """Count axis-parallel rectangles of the given area spanned by point pairs.

    diagonal mode: ordered pairs (p, q) with q strictly up-right of p and
    (q.x - p.x)(q.y - p.y) = area.  both-diagonals additionally counts
    anti-diagonal pairs (dx * dy < 0 with |dx * dy| = area).  Exact O(n^2)
    pair enumeration after clearing denominators.
    """
    if mode not in ("diagonal", "both-diagonals"):
        raise ValueError("unknown mode %r" % (mode,))
    area = rat(area)
    if area <= 0:
        raise ValueError("area must be positive")
    pts = [(p.x, p.y) if isinstance(p, Point2) else (rat(p[0]), rat(p[1])) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points must be distinct")
    dens = [v.denominator for xy in pts for v in xy]
    L = lcm(*dens) if dens else 1
    ipts = [(int(x * L), int(y * L)) for x, y in pts]
    # (dx*dy) == area  <=>  (L*dx)(L*dy) * area.den == area.num * L^2
    target = area.numerator * L * L
    aden = area.denominator
    count = 0
    anti = mode == "both-diagonals"
    n = len(ipts)
    for i in range(n):
        xi, yi = ipts[i]
        for j in range(i + 1, n):
            prod = (ipts[j][0] - xi) * (ipts[j][1] - yi)
            if prod > 0:
                if prod * aden == target:
                    count += 1
            elif anti and prod < 0:
                if -prod * aden == target:
                    count += 1
    return count


def divisor_count(k: int) -> int:
    """div(k): number of positive divisors, by trial division."""
    if k < 1:
        raise ValueError("k must be >= 1")
    total = 0
    r = isqrt(k)
    for d in range(1, r + 1):
        if k % d == 0:
            total += 2
    if r * r == k:
        total -= 1
    return total


def best_k(n: int):
    """The k <= n/2 maximizing div(k) (smallest k on ties)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    bk, bd = 1, 1
    for k in range(1, n // 2 + 1):
        d = divisor_count(k)
        if d > bd:
            bk, bd = k, d
    return bk, bd


def grid_area_k_count(n: int, k: int) -> int:
    """Closed form for the number of area-k axis-parallel rectangles in the
    integer grid [1..n]^2: sum over divisor pairs dx*dy = k with dx, dy <=
    n-1 of (n-dx)(n-dy).

    Equals the multiplicity of value k in the 2x2 all-pairs minor census of
    grid_matrix(n).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if k < 1:
        raise ValueError("k must be >= 1")
    total = 0
    for dx in range(1, min(k, n - 1) + 1):
        if k % dx == 0:
            dy = k // dx
            if dy <= n - 1:
                total += (n - dx) * (n - dy)
    return total


# ---------------------------------------------------------------------------
# multiset algebra


def as_multiset(values) -> Counter:
    """Embed an iterable of values (multiplicity 1 each unless repeated) or a
    Counter into a rational-keyed multiset."""
    if isinstance(values, Counter):
        return Counter({rat(v): int(m) for v, m in values.items() if m})
    return Counter(rat(v) for v in values)


def multiset_mass(C: Counter) -> int:
    return sum(C.values())


def multiset_diff(C, D) -> Counter:
    """C - D with convolved multiplicities m(s) = sum m(c) m(d) over c-d=s."""
    C, D = as_multiset(C), as_multiset(D)
    out = Counter()
    for c, mc in C.items():
        for d, md in D.items():
            out[c - d] += mc * md
    return out


def multiset_prod(C, D) -> Counter:
    """C * D with convolved multiplicities m(s) = sum m(c) m(d) over c*d=s."""
    C, D = as_multiset(C), as_multiset(D)
    out = Counter()
    for c, mc in C.items():
        for d, md in D.items():
            out[c * d] += mc * md
    return out


def mu(C) -> int:
    """Maximum multiplicity of any element; 0 for the empty multiset."""
    C = as_multiset(C)
    return max(C.values(), default=0)


def mu_nonzero(C) -> int:
    """Maximum multiplicity over nonzero elements (degenerate rectangles have
    area 0, so growth checks against the unit-area bound exclude it)."""
    C = as_multiset(C)
    return max((m for v, m in C.items() if v != 0), default=0)


# ---------------------------------------------------------------------------
# census serialization: rows "value,multiplicity" sorted by value


def census_to_csv(census: Counter) -> str:
    lines = ["%s,%d" % (v, m) for v, m in sorted(census.items())]
    return "\n".join(lines) + ("\n" if lines else "")


def census_to_json(census: Counter) -> str:
    return json.dumps({"census": [[str(v), m] for v, m in sorted(census.items())]})


def census_from_csv(text: str) -> Counter:
    out = Counter()
    for ln in text.splitlines():
        if not ln.strip() or ln.startswith("#"):
            continue
        v, m = ln.split(",")
        out[Fraction(v)] = int(m)
    return out
