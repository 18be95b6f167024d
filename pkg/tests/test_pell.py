import pytest
from hypothesis import given, settings, strategies as st

from dioph.arith import is_perfect_square, isqrt
from dioph.pell import (
    PellClass,
    PellProblem,
    PellSolution,
    fundamental_solution,
    solve_general,
    sqrt_cf,
    unit_sequence,
)

NONSQUARE_D = [D for D in range(2, 200) if is_perfect_square(D) is None]


def brute_solutions(D, N, max_y):
    out = []
    for y in range(max_y + 1):
        x = is_perfect_square(N + D * y * y)
        if x is not None:
            out.append((x, y))
    return out


class TestSqrtCF:
    @pytest.mark.parametrize(
        "D,a0,period",
        [
            (2, 1, (2,)),
            (8, 2, (1, 4)),
            (48, 6, (1, 12)),
            (13, 3, (1, 1, 1, 1, 6)),
            (7, 2, (1, 1, 1, 4)),
        ],
    )
    def test_examples(self, D, a0, period):
        cf = sqrt_cf(D)
        assert (cf.a0, cf.period) == (a0, period)

    @pytest.mark.parametrize("bad", [0, 1, 4, 9, 49, 100, -3])
    def test_square_or_small_rejected(self, bad):
        with pytest.raises(ValueError):
            sqrt_cf(bad)

    def test_period_ends_at_twice_a0(self):
        for D in NONSQUARE_D:
            cf = sqrt_cf(D)
            assert cf.period[-1] == 2 * cf.a0
            assert all(t >= 1 for t in cf.period)

    def test_convergents_track_sqrt(self):
        # |p^2 - D*q^2| stays below 2*sqrt(D)+2 along the convergents
        for D in NONSQUARE_D[:40]:
            cf = sqrt_cf(D)
            p2, p1, q2, q1 = 0, 1, 1, 0
            for a in cf.terms(2 * len(cf.period) + 2):
                p, q = a * p1 + p2, a * q1 + q2
                if q > 0:
                    assert abs(p * p - D * q * q) <= 2 * isqrt(D) + 2
                p2, p1, q2, q1 = p1, p, q1, q


class TestFundamentalSolution:
    def test_examples(self):
        assert fundamental_solution(2) == PellSolution(3, 2)
        assert fundamental_solution(8) == PellSolution(3, 1)
        assert fundamental_solution(48) == PellSolution(7, 1)
        assert fundamental_solution(13) == PellSolution(649, 180)

    def test_notoriously_large_case(self):
        assert fundamental_solution(61) == PellSolution(1766319049, 226153980)

    def test_minimality_against_brute_force(self):
        for D in [D for D in range(2, 100) if is_perfect_square(D) is None]:
            fund = fundamental_solution(D)
            assert fund.x * fund.x - D * fund.y * fund.y == 1
            assert fund.y >= 1
            brute = [(x, y) for x, y in brute_solutions(D, 1, 10**4) if y >= 1]
            if brute:
                assert (fund.x, fund.y) == brute[0]
            else:
                assert fund.y > 10**4


class TestUnitSequence:
    def test_frozen_values_d8(self):
        assert unit_sequence(8, 5) == [
            PellSolution(1, 0),
            PellSolution(3, 1),
            PellSolution(17, 6),
            PellSolution(99, 35),
            PellSolution(577, 204),
        ]

    def test_frozen_values_d48(self):
        assert unit_sequence(48, 4) == [
            PellSolution(1, 0),
            PellSolution(7, 1),
            PellSolution(97, 14),
            PellSolution(1351, 195),
        ]

    def test_recurrence_coefficients(self):
        # 2 * x1 for the two discriminants used throughout the fixtures
        assert 2 * fundamental_solution(8).x == 6
        assert 2 * fundamental_solution(48).x == 14

    def test_count_validation(self):
        with pytest.raises(ValueError):
            unit_sequence(8, 0)
        assert unit_sequence(8, 1) == [PellSolution(1, 0)]

    @given(st.sampled_from(NONSQUARE_D), st.integers(min_value=2, max_value=12))
    @settings(max_examples=40, deadline=None)
    def test_every_term_solves_unit_equation(self, D, count):
        seq = unit_sequence(D, count)
        assert len(seq) == count
        c = 2 * seq[1].x
        for i, s in enumerate(seq):
            assert s.x * s.x - D * s.y * s.y == 1
            if i >= 2:
                assert s.x == c * seq[i - 1].x - seq[i - 2].x
                assert s.y == c * seq[i - 1].y - seq[i - 2].y


class TestPellProblem:
    def test_validation(self):
        with pytest.raises(ValueError):
            PellProblem(4, 1)
        with pytest.raises(ValueError):
            PellProblem(1, 1)
        with pytest.raises(ValueError):
            PellProblem(8, 0)


class TestPellClass:
    def test_post_init_rejects_non_solutions(self):
        prob = PellProblem(8, 1)
        unit = fundamental_solution(8)
        with pytest.raises(ValueError):
            PellClass(prob, PellSolution(2, 1), 1, unit)
        with pytest.raises(ValueError):
            PellClass(prob, PellSolution(1, 0), 0, unit)
        with pytest.raises(ValueError):
            PellClass(prob, PellSolution(1, 0), 1, PellSolution(3, 2))

    def test_members_stay_on_conic(self):
        for prob in [PellProblem(2, -2), PellProblem(5, -4), PellProblem(2, 7)]:
            for cls in solve_general(prob):
                for u, v in cls.members(6):
                    assert u * u - prob.D * v * v == prob.N

    def test_members_window_is_symmetric_walk(self):
        cls = solve_general(PellProblem(2, -2))[0]
        mem = cls.members(2)
        assert len(mem) == 5
        assert mem[2] == (0, 1)


class TestSolveGeneral:
    def test_single_class_examples(self):
        classes = solve_general(PellProblem(2, -2))
        assert len(classes) == 1
        assert [(s.x, s.y) for s in classes[0].nonnegative(100)] == [
            (0, 1),
            (4, 3),
            (24, 17),
            (140, 99),
        ]

    def test_unit_equation_as_general_case(self):
        classes = solve_general(PellProblem(8, 1))
        assert len(classes) == 1
        assert [(s.x, s.y) for s in classes[0].nonnegative(100)] == [
            (1, 0),
            (3, 1),
            (17, 6),
            (99, 35),
        ]

    def test_insoluble_case_gives_no_classes(self):
        # x^2 = 2 mod 3 has no solution
        assert solve_general(PellProblem(3, 2)) == []

    def test_ambiguous_class_with_even_y_is_found(self):
        # D=5, N=-4: three classes, including (4, 2) which a base-solution
        # bound tied to the N<0 branch alone would miss.
        classes = solve_general(PellProblem(5, -4))
        reps = {(c.x_sign * c.base.x, c.base.y) for c in classes}
        assert reps == {(1, 1), (-1, 1), (4, 2)}
        union = set()
        for c in classes:
            union.update((s.x, s.y) for s in c.nonnegative(100))
        assert union == {(1, 1), (4, 2), (11, 5), (29, 13), (76, 34), (199, 89)}

    def test_mirrored_representatives_both_kept(self):
        reps = {
            (c.x_sign * c.base.x, c.base.y)
            for c in solve_general(PellProblem(2, 7))
        }
        assert reps == {(3, 1), (-3, 1)}

    def test_class_bound_validation(self):
        with pytest.raises(ValueError):
            solve_general(PellProblem(2, -2), class_bound=0)

    @given(
        st.sampled_from([D for D in range(2, 40) if is_perfect_square(D) is None]),
        st.integers(min_value=-40, max_value=40).filter(lambda n: n != 0),
    )
    @settings(max_examples=60, deadline=None)
    def test_classes_cover_brute_force_window(self, D, N):
        expected = set(brute_solutions(D, N, 500))
        got = set()
        for cls in solve_general(PellProblem(D, N)):
            got.update((s.x, s.y) for s in cls.nonnegative(500))
        assert got == expected
