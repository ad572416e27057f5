from fractions import Fraction
from random import Random

import pytest

from conecompress import (
    ProblemInput,
    best_head_coefficient,
    coefficient_cap,
    compress,
    level_membership,
    step,
    tightest_lower,
    tightest_upper,
    validate,
)
from conecompress.compress import PartialSolution
from conecompress.errors import BudgetExceededError
from conecompress.model import SortedWitness

from oracle import naive_tightest

W4 = validate(ProblemInput(4, 1, (2, 3, 7, 29)))


def witness(*y):
    return SortedWitness(y=tuple(y), perm=tuple(range(len(y))))


def random_config(rng):
    n = rng.randint(2, 4)
    d = rng.randint(1, 2)
    y = sorted(rng.randint(0, 12) for _ in range(n))
    if y[-1] == 0:
        y[-1] = 1
    level = rng.randint(1, n - 1)
    tail = sorted(rng.randint(0, 9) for _ in range(n - level))
    if tail[-1] == 0:
        tail[-1] = 1
    return d, witness(*y), level, PartialSolution(level + 1, tuple(tail))


class TestBestHeadCoefficient:
    def test_spec_examples(self):
        assert best_head_coefficient(1, 29, 7, 8, upper=True) == 4
        assert best_head_coefficient(1, -1, 2, 1, upper=True) is None
        assert best_head_coefficient(-2, 10, 1, 8, upper=True) == 1

    def test_lower_mirror(self):
        # s > 0: push the head to the most negative admissible value
        assert best_head_coefficient(3, 50, 1, 8, upper=False) == -8
        # s < 0: stay as close to zero as admissibility allows
        assert best_head_coefficient(-3, -4, 2, 8, upper=False) == -2
        # no admissible head at all
        assert best_head_coefficient(1, -20, 2, 8, upper=False) is None

    def test_zero_witness_head(self):
        assert best_head_coefficient(5, 0, 0, 8, upper=True) == 8
        assert best_head_coefficient(5, -1, 0, 8, upper=True) is None
        assert best_head_coefficient(0, 0, 0, 8, upper=True) == 1

    def test_exhaustive_against_scan(self):
        rng = Random(7)
        for _ in range(300):
            s = rng.randint(-20, 20)
            t = rng.randint(-30, 30)
            y_head = rng.randint(0, 6)
            cap = rng.randint(1, 9)
            for upper in (True, False):
                got = best_head_coefficient(s, t, y_head, cap, upper=upper)
                heads = range(1, cap + 1) if upper else range(-1, -cap - 1, -1)
                feasible = [c for c in heads if c * y_head <= t]
                if not feasible:
                    assert got is None
                    continue
                values = [Fraction(s, c) for c in feasible]
                best = min(values) if upper else max(values)
                assert got in feasible
                assert Fraction(s, got) == best


class TestTightestBounds:
    def test_upper_level3(self):
        r = tightest_upper(3, W4, PartialSolution(4, (1,)), 8)
        assert r.value == Fraction(1, 4)
        assert r.achieving.coeffs == (4, -1)

    def test_upper_level2(self):
        r = tightest_upper(2, W4, PartialSolution(3, (1, 4)), 2)
        assert r.value == Fraction(1, 2)
        assert r.achieving.coeffs == (2, -1, 0)

    def test_upper_level1(self):
        r = tightest_upper(1, W4, PartialSolution(2, (1, 2, 8)), 1)
        assert r.value == 1
        assert r.achieving.coeffs == (1, -1, 0, 0)

    def test_lower_level3(self):
        r = tightest_lower(3, W4, PartialSolution(4, (1,)), 8)
        assert r.value == Fraction(1, 5)
        assert r.achieving.coeffs == (-5, 1)

    def test_lower_level1(self):
        r = tightest_lower(1, W4, PartialSolution(2, (1, 2, 8)), 1)
        want = naive_tightest(1, W4.y, (1, 2, 8), 1, False)
        assert (r.value, r.achieving.coeffs) == want
        assert r.value == 0
        assert r.achieving.coeffs == (-1, 0, 0, 0)

    @pytest.mark.parametrize("k", [1, 3, 17])
    def test_lower_equal_witness_entries(self, k):
        r = tightest_lower(2, witness(k, k, k), PartialSolution(3, (1,)), 2)
        want = naive_tightest(2, (k, k, k), (1,), 2, False)
        assert (r.value, r.achieving.coeffs) == want
        assert r.value <= 1

    def test_denominator_within_cap(self):
        rng = Random(31)
        for _ in range(40):
            d, w, level, tail = random_config(rng)
            cap = coefficient_cap(d, level)
            for fn in (tightest_upper, tightest_lower):
                r = fn(level, w, tail, cap)
                assert 1 <= r.value.denominator <= cap

    def test_budget_error_carries_required_count(self):
        with pytest.raises(BudgetExceededError) as info:
            tightest_upper(3, W4, PartialSolution(4, (1,)), 8, budget=7)
        assert info.value.required == 8  # head scan at the widest level
        w = witness(1, 2, 3)
        with pytest.raises(BudgetExceededError) as info:
            tightest_upper(1, w, PartialSolution(2, (1, 2)), 1, budget=8)
        assert info.value.required == 9  # (2*1+1)**2 tail vectors

    def test_rejects_misaligned_tail(self):
        with pytest.raises(ValueError):
            tightest_upper(2, W4, PartialSolution(4, (1,)), 2)


class TestOracleEquivalence:
    def test_random_configurations(self):
        rng = Random(202)
        for _ in range(40):
            d, w, level, tail = random_config(rng)
            cap = coefficient_cap(d, level)
            for upper in (True, False):
                fn = tightest_upper if upper else tightest_lower
                got = fn(level, w, tail, cap)
                want_value, want_coeffs = naive_tightest(
                    level, w.y, tail.x, cap, upper
                )
                assert got.value == want_value
                assert got.achieving.coeffs == want_coeffs


class TestStep:
    def test_level3(self):
        rec = step(3, 1, W4, PartialSolution(4, (1,)))
        assert rec.chosen == Fraction(1, 4)
        assert rec.scale == 4
        assert rec.partial_after.x == (1, 4)

    def test_level2(self):
        rec = step(2, 1, W4, PartialSolution(3, (1, 4)))
        assert rec.chosen == Fraction(1, 2)
        assert rec.scale == 2
        assert rec.partial_after.x == (1, 2, 8)

    def test_level1(self):
        rec = step(1, 1, W4, PartialSolution(2, (1, 2, 8)))
        assert rec.chosen == 1
        assert rec.scale == 1
        assert rec.partial_after.x == (1, 1, 2, 8)

    def test_consistency_on_random_instances(self):
        rng = Random(404)
        for _ in range(30):
            n = rng.randint(2, 4)
            d = rng.randint(1, 2)
            y = tuple(rng.randint(0, 30) for _ in range(n))
            if all(v == 0 for v in y):
                y = y[:-1] + (5,)
            out = compress(ProblemInput(n, d, y))
            for rec in out.trace:
                assert rec.lower.value <= rec.upper.value
                assert rec.scale == rec.chosen.denominator
                assert 1 <= rec.scale <= rec.cap


class TestCompress:
    def test_worked_example(self):
        out = compress(ProblemInput(4, 1, (2, 3, 7, 29)))
        assert out.x == (1, 1, 2, 8)
        assert out.bound == 16

    def test_dimension_one(self):
        out = compress(ProblemInput(1, 3, (40,)))
        assert out.x == (1,)
        assert out.trace == ()

    def test_equal_entries(self):
        out = compress(ProblemInput(3, 1, (2, 2, 2)))
        assert out.x == (1, 1, 1)
        # every bound chosen along the way is exactly 1
        assert all(rec.chosen == 1 for rec in out.trace)

    def test_two_coordinates(self):
        out = compress(ProblemInput(2, 1, (2, 5)))
        assert out.x == (1, 1)

    def test_unsorted_witness(self):
        out = compress(ProblemInput(3, 1, (7, 2, 2)))
        assert out.x == (2, 1, 1)

    def test_witness_with_zeros(self):
        out = compress(ProblemInput(3, 1, (0, 0, 5)))
        assert out.x == (0, 0, 1)
        zero_step = out.trace[0]
        assert zero_step.chosen == 0 and zero_step.scale == 1

    def test_output_nondecreasing_for_sorted_witness(self):
        rng = Random(55)
        for _ in range(20):
            n = rng.randint(2, 5)
            y = tuple(sorted(rng.randint(0, 50) for _ in range(n)))
            if y[-1] == 0:
                y = y[:-1] + (1,)
            out = compress(ProblemInput(n, 1, y))
            assert all(a <= b for a, b in zip(out.x, out.x[1:]))

    def test_last_entry_within_running_cap_product(self):
        out = compress(ProblemInput(5, 2, (3, 14, 15, 92, 65)))
        for rec in out.trace:
            limit = 1
            for j in range(rec.level, 5):
                limit *= coefficient_cap(2, j)
            assert rec.partial_after.x[-1] <= limit

    def test_deterministic(self):
        p = ProblemInput(4, 2, (9, 1, 30, 14))
        assert compress(p) == compress(p)

    @pytest.mark.parametrize("k", [2, 10**6])
    def test_scaling_invariance(self, k):
        rng = Random(77)
        for _ in range(10):
            n = rng.randint(2, 4)
            y = tuple(rng.randint(0, 40) for _ in range(n))
            if all(v == 0 for v in y):
                y = (1,) + y[1:]
            a = compress(ProblemInput(n, 1, y))
            b = compress(ProblemInput(n, 1, tuple(k * v for v in y)))
            assert a == b

    def test_partials_stay_members(self):
        rng = Random(88)
        for _ in range(16):
            d = rng.randint(1, 2)
            n = rng.randint(2, 4 if d == 1 else 3)
            y = tuple(rng.randint(0, 25) for _ in range(n))
            if all(v == 0 for v in y):
                y = y[:-1] + (2,)
            problem = ProblemInput(n, d, y)
            w = validate(problem)
            out = compress(problem)
            for rec in out.trace:
                assert level_membership(rec.partial_after, w, d).ok

    def test_budget_error_propagates(self):
        with pytest.raises(BudgetExceededError) as info:
            compress(ProblemInput(6, 2, (1, 2, 3, 4, 5, 6)), budget=1000)
        assert info.value.required == 2147483648

    def test_astronomical_budget_requirement_reported_as_unknown(self):
        with pytest.raises(BudgetExceededError) as info:
            compress(ProblemInput(20, 2, tuple(range(1, 21))), budget=10**9)
        assert info.value.required is None


class TestPartialSolution:
    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            PartialSolution(1, (-1, 2))

    def test_rejects_zero_last(self):
        with pytest.raises(ValueError):
            PartialSolution(1, (0, 0))

    def test_rejects_decreasing(self):
        with pytest.raises(ValueError):
            PartialSolution(1, (3, 1))

    def test_n_property(self):
        assert PartialSolution(3, (1, 4)).n == 4
