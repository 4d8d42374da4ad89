import random
from fractions import Fraction as F

import pytest

from tpminors import (
    CanonicalizationError,
    IncidenceConfig,
    Line2,
    Point2,
    RatMatrix,
    assemble_tp_2xn,
    canonicalize_config,
    check_constraints,
    config_from_json,
    config_to_json,
    count_minors_equal,
    det,
    dual_line,
    elekes_config,
    grid_matrix,
    hyperplane_family,
    mate_point,
    minor,
    minor_census,
    point_line_incidences,
    power_sum_det_closed_form,
    power_sum_matrix,
    verify_no_Kd2,
    verify_tp,
)


def det2(p, q):
    # determinant of the 2x2 matrix with columns p, q
    return p.x * q.y - p.y * q.x


class TestDualLine:
    def test_example(self):
        l = dual_line(Point2(2, 3))
        assert l.contains(Point2(1, 2))
        assert det2(Point2(2, 3), Point2(1, 2)) == 1

    def test_unit_point(self):
        l = dual_line(Point2(1, 1))
        assert l == Line2(1, 1)
        assert l.contains(Point2(1, 2))

    def test_zero_coordinate_rejected(self):
        with pytest.raises(ValueError):
            dual_line(Point2(1, 0))
        with pytest.raises(ValueError):
            dual_line(Point2(0, 3))

    def test_on_dual_iff_unit_det(self):
        p = Point2(F(3, 2), F(5, 3))
        l = dual_line(p)
        for q in [Point2(1, F(28, 15)), Point2(3, F(18, 5)), Point2(2, 2)]:
            assert l.contains(q) == (det2(p, q) == 1)


class TestMatePoint:
    def test_diagonal_line(self):
        p = mate_point(Line2(1, 1))
        assert p == Point2(1, 1)
        assert det2(p, Point2(2, 3)) == 1

    def test_closed_form(self):
        assert mate_point(Line2(2, 4)) == Point2(F(1, 4), F(1, 2))

    def test_inverse_distance_identity_squared(self):
        # |mate|^2 * dist(origin, l)^2 == 1 without taking roots
        for l in [Line2(1, 1), Line2(F(2, 3), F(7, 5)), Line2(5, F(1, 9))]:
            p = mate_point(l)
            norm2 = p.x * p.x + p.y * p.y
            dist2 = l.c * l.c / (1 + l.m * l.m)
            assert norm2 * dist2 == 1

    def test_unit_det_for_all_points_on_line(self):
        rng = random.Random(5)
        for _ in range(20):
            l = Line2(F(rng.randint(1, 9), rng.randint(1, 4)), F(rng.randint(1, 9), rng.randint(1, 4)))
            mate = mate_point(l)
            x = F(rng.randint(-9, 9), rng.randint(1, 5))
            p = Point2(x, l.m * x + l.c)
            assert det2(mate, p) == 1

    def test_precondition(self):
        with pytest.raises(ValueError):
            mate_point(Line2(-1, 1))
        with pytest.raises(ValueError):
            mate_point(Line2(1, 0))


class TestElekesConfig:
    @pytest.mark.parametrize(
        "N,points,lines,inc", [(1, 2, 1, 1), (2, 16, 8, 16), (3, 54, 27, 81)]
    )
    def test_counts(self, N, points, lines, inc):
        cfg = elekes_config(N)
        assert len(cfg.points) == points
        assert len(cfg.lines) == lines
        assert point_line_incidences(cfg) == inc

    def test_every_line_meets_exactly_N_points(self):
        N = 3
        cfg = elekes_config(N)
        for l in cfg.lines:
            assert sum(1 for p in cfg.points if l.contains(p)) == N

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            elekes_config(0)


class TestCheckConstraints:
    def test_elekes_has_parallels(self):
        rep = check_constraints(elekes_config(2))
        assert (1, (0, 1)) in rep.violations  # a=1,b=1 parallel to a=1,b=2

    def test_dependent_points(self):
        cfg = IncidenceConfig((Point2(1, 1), Point2(2, 2)), ())
        rep = check_constraints(cfg)
        assert (4, (0, 1)) in rep.violations

    def test_canonical_output_clean(self):
        can = canonicalize_config(elekes_config(2), seed=3)
        assert check_constraints(can).ok

    def test_each_constraint_detected(self):
        cfg = IncidenceConfig(
            (Point2(-1, 2), Point2(2, 4)),
            (Line2(-1, 5), Line2(2, -3), Line2(2, 7)),
        )
        rep = check_constraints(cfg)
        ids = {c for c, _ in rep.violations}
        assert 1 in ids  # two slope-2 lines
        assert 2 in ids  # negative slope
        assert 3 in ids  # negative intercept
        assert 6 in ids  # point outside first quadrant
        # constraint 5: point (2,4) on origin-translate of slope-2 lines
        assert any(c == 5 for c, _ in rep.violations)


class TestCanonicalize:
    def test_preserves_incidences(self):
        cfg = elekes_config(2)
        can = canonicalize_config(cfg, seed=7)
        assert point_line_incidences(can) == point_line_incidences(cfg) == 16
        assert check_constraints(can).ok

    def test_deterministic_given_seed(self):
        a = canonicalize_config(elekes_config(2), seed=9)
        b = canonicalize_config(elekes_config(2), seed=9)
        assert a == b

    def test_already_canonical_stays_canonical(self):
        can = canonicalize_config(elekes_config(2), seed=1)
        again = canonicalize_config(can, seed=2)
        assert check_constraints(again).ok
        assert point_line_incidences(again) == point_line_incidences(can)

    def test_duplicate_points_rejected(self):
        cfg = IncidenceConfig.__new__(IncidenceConfig)
        object.__setattr__(cfg, "points", (Point2(1, 2), Point2(1, 2)))
        object.__setattr__(cfg, "lines", ())
        with pytest.raises(ValueError):
            canonicalize_config(cfg, seed=0)

    def test_budget_exhaustion_raises(self):
        with pytest.raises(CanonicalizationError) as err:
            canonicalize_config(elekes_config(2), seed=0, budget=0)
        assert err.value.config is not None


class TestAssemble:
    def test_tiny_example(self):
        cfg = IncidenceConfig((Point2(1, 2), Point2(2, 3)), (Line2(1, 1),))
        A = assemble_tp_2xn(cfg)
        assert A == RatMatrix([[1, 2, 1], [1, 3, 2]])
        assert count_minors_equal(A, 2, 1, "columns-only") == 3

    def test_canonical_elekes(self):
        can = canonicalize_config(elekes_config(2), seed=7)
        A = assemble_tp_2xn(can)
        assert (A.rows, A.cols) == (2, 24)
        assert verify_tp(A).ok
        assert count_minors_equal(A, 2, 1, "columns-only") >= 16

    def test_points_only(self):
        cfg = IncidenceConfig((Point2(2, 1), Point2(1, 2), Point2(1, 5)), ())
        A = assemble_tp_2xn(cfg)
        assert A.cols == 3
        assert verify_tp(A).ok

    def test_unsatisfied_constraints_rejected(self):
        with pytest.raises(ValueError):
            assemble_tp_2xn(elekes_config(2))  # not canonical


class TestPowerSum:
    def test_paper_entry_formula(self):
        assert power_sum_matrix((1, 2), (2, 1), 2) == RatMatrix([[3, 4], [2, 3]])

    def test_entrywise_k3(self):
        A = power_sum_matrix((1, 2, 3), (3, 2, 1), 3)
        assert A == RatMatrix([[16, 25, 36], [9, 16, 25], [4, 9, 16]])

    def test_2x2_symbolic_determinant(self):
        rng = random.Random(1)
        for _ in range(25):
            a1 = F(rng.randint(1, 30), rng.randint(1, 6))
            a2 = a1 + F(rng.randint(1, 9), rng.randint(1, 6))
            b2 = F(rng.randint(1, 30), rng.randint(1, 6))
            b1 = b2 + F(rng.randint(1, 9), rng.randint(1, 6))
            A = power_sum_matrix((a1, a2), (b1, b2), 2)
            assert det(A) == (a2 - a1) * (b1 - b2)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            power_sum_matrix((2, 1), (2, 1), 2)  # a not increasing
        with pytest.raises(ValueError):
            power_sum_matrix((1, 2), (1, 2), 2)  # b not decreasing
        with pytest.raises(ValueError):
            power_sum_matrix((0, 1), (2, 1), 2)  # not positive
        with pytest.raises(ValueError):
            power_sum_matrix((1, 2), (2, 1), 1)  # k too small

    def test_closed_form_examples(self):
        assert power_sum_det_closed_form((1, 2), (2, 1), 2) == 1
        assert power_sum_det_closed_form((1, 2, 3), (3, 2, 1), 3) == 8

    def test_closed_form_matches_det_random(self):
        rng = random.Random(17)
        for _ in range(40):
            k = rng.randint(2, 6)
            a = sorted({F(rng.randint(1, 60), rng.randint(1, 6)) for _ in range(3 * k)})[:k]
            b = sorted({F(rng.randint(1, 60), rng.randint(1, 6)) for _ in range(3 * k)})[:k]
            if len(a) < k or len(b) < k:
                continue
            b = list(reversed(b))
            assert det(power_sum_matrix(a, b, k)) == power_sum_det_closed_form(a, b, k)

    def test_size_mismatch_closed_form(self):
        with pytest.raises(ValueError):
            power_sum_det_closed_form((1, 2, 3), (3, 2, 1), 2)


class TestGridMatrix:
    def test_n3(self):
        G = grid_matrix(3)
        assert G == RatMatrix([[4, 5, 6], [3, 4, 5], [2, 3, 4]])
        assert verify_tp(G, 2).ok

    def test_minor_closed_form(self):
        assert minor(grid_matrix(3), (1, 2), (1, 3)) == 2

    def test_n2(self):
        G = grid_matrix(2)
        assert G == RatMatrix([[3, 4], [2, 3]])
        assert det(G) == 1

    def test_minor_multiset_matches_area_products(self):
        n = 5
        G = grid_matrix(n)
        census = minor_census(G, 2, "all-pairs")
        from collections import Counter
        expected = Counter()
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(1, n + 1):
                    for l in range(k + 1, n + 1):
                        expected[F((l - k) * (j - i))] += 1
        assert census == expected

    def test_too_small(self):
        with pytest.raises(ValueError):
            grid_matrix(1)


class TestHyperplaneFamily:
    def test_d2_matches_dual_line(self):
        fam = hyperplane_family(RatMatrix([[2], [3]]), 1)
        assert len(fam) == 1
        (I, h) = fam[0]
        assert I == (1,)
        # -3*x1 + 2*x2 = 1 is the dual line a*y - b*x = 1 of (2,3)
        assert h.coeffs == (F(-3), F(2)) and h.offset == 1
        dl = dual_line(Point2(2, 3))
        assert h.contains((1, dl.m * 1 + dl.c))

    def test_d3_membership_iff_unit_minor(self):
        A = power_sum_matrix(range(1, 6), (3, 2, 1), 3)
        fam = dict(hyperplane_family(A, 1))
        for I in [(1, 2), (2, 4), (1, 3)]:
            h = fam[I]
            for k in range(max(I) + 1, A.cols + 1):
                on = h.contains(A.column(k))
                m = minor(A, (1, 2, 3), tuple(sorted(I + (k,))))
                assert on == (m == 1)

    def test_parallel_members_at_different_levels(self):
        A = power_sum_matrix(range(1, 5), (3, 2, 1), 3)
        f1 = dict(hyperplane_family(A, 1))
        f2 = dict(hyperplane_family(A, F(7, 3)))
        for I, h in f1.items():
            assert f2[I].coeffs == h.coeffs
            assert f2[I].offset != h.offset

    def test_zero_level_rejected(self):
        with pytest.raises(ValueError):
            hyperplane_family(RatMatrix([[2], [3]]), 0)

    def test_dependent_columns_detected(self):
        A = RatMatrix([[1, 2], [2, 4], [3, 6]])  # proportional columns
        with pytest.raises(ValueError):
            hyperplane_family(A, 1)

    def test_family_is_Kd2_free(self):
        A = power_sum_matrix(range(1, 9), (3, 2, 1), 3)
        fam = hyperplane_family(A, 1)
        pts = [A.column(j) for j in range(1, A.cols + 1)]
        ok, witness = verify_no_Kd2(pts, [h for _, h in fam])
        assert ok and witness is None


class TestConfigJson:
    def test_round_trip(self):
        cfg = elekes_config(2)
        assert config_from_json(config_to_json(cfg)) == cfg

    def test_fraction_coordinates(self):
        cfg = IncidenceConfig((Point2(F(1, 3), F(2, 7)),), (Line2(F(5, 2), F(1, 9)),))
        assert config_from_json(config_to_json(cfg)) == cfg
