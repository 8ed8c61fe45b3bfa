import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphhash import bench
from graphhash.bench import BenchSetting, run_benchmark, symmetric_stress, tipping_point


class TestTippingPoint:
    def test_table1_last_row(self):
        assert 2 * 1840.11 / 33.62 == pytest.approx(109.47, abs=0.005)
        assert tipping_point(33.62, 1840.11, 0) == 110

    def test_strict_at_equality(self):
        # N = 1: 2*1/2 = 1 is not > 0 + 1
        assert tipping_point(2, 1, 0) == 2

    def test_never(self):
        assert tipping_point(0, 1, 0) is None

    def test_immediate(self):
        assert tipping_point(10, 1, 0) == 1

    def test_with_compare_cost(self):
        n = tipping_point(1, 10, 1)
        lhs = lambda k: k / 2  # noqa: E731
        rhs = lambda k: math.log2(k) + 10  # noqa: E731
        assert lhs(n) > rhs(n) and not lhs(n - 1) > rhs(n - 1)

    def test_negative(self):
        with pytest.raises(ValueError):
            tipping_point(-1, 1, 1)

    @given(
        st.floats(0.001, 1e4),
        st.floats(0, 1e5),
        st.floats(0, 1e2),
    )
    def test_boundary(self, u, h, c):
        n = tipping_point(u, h, c)
        wins = lambda k: u * k / 2 > math.log2(k) * c + h  # noqa: E731
        if n is None:
            assert not wins(bench.TIPPING_MAX)
            return
        assert wins(n)
        if n > 1:
            assert not wins(n - 1)

    @given(st.floats(0.01, 100), st.floats(0, 1e4), st.floats(0, 1e4), st.floats(0, 10))
    def test_monotone(self, u, h1, h2, c):
        lo, hi = sorted((h1, h2))
        a, b = tipping_point(u, lo, c), tipping_point(u, hi, c)
        assert a <= b
        assert tipping_point(u * 2, hi, c) <= b


class TestBenchmark:
    def test_small_report(self):
        settings = [BenchSetting(10, 100, trials=3, seed=1), BenchSetting(20, 400, trials=3, seed=1)]
        report = run_benchmark(settings)
        assert report.ok
        lines = report.to_table().splitlines()
        assert lines[0] == bench.REPORT_HEADER
        assert [ln.split(",")[:3] for ln in lines[1:]] == [["10", "100", "3"], ["20", "400", "3"]]
        for ln in lines[1:]:
            for field in ln.split(",")[3:]:
                assert len(field.split(".")[1]) == 3

    def test_single_trial_is_the_measurement(self, monkeypatch):
        calls = []

        def fake(nv, ne, seed):
            calls.append(seed)
            return True, True, 4e6, 2e6, 4.5e6, 5e5

        monkeypatch.setattr(bench, "_measure_pair", fake)
        row = bench.run_setting(BenchSetting(5, 5, trials=1, seed=10))
        assert calls == [9, 10]  # warm-up, then the measured pair
        assert (row.ullmann_avg_ms, row.hash_avg_ms, row.hash_eq_avg_ms, row.cmp_avg_ms) == (4.0, 2.0, 4.5, 0.5)

    def test_error_annotation(self, monkeypatch):
        def boom(nv, ne, seed):
            raise MemoryError("out of memory")

        monkeypatch.setattr(bench, "_measure_pair", boom)
        report = run_benchmark([BenchSetting(5, 5, trials=2)])
        assert not report.ok
        table = report.to_table()
        assert "5,5,2,nan,nan,nan,nan" in table
        assert "# 5/5: MemoryError" in table

    def test_trials_positive(self):
        with pytest.raises(ValueError):
            BenchSetting(1, 1, trials=0)

    def test_parse(self):
        assert BenchSetting.parse("30/900", 7, 2) == BenchSetting(30, 900, 7, 2)


class TestStress:
    def test_empty(self):
        assert symmetric_stress([]) == []

    def test_k3(self):
        (row,) = symmetric_stress([3])
        assert row.codes_equal and row.n == 3

    def test_growth(self):
        small, big = symmetric_stress([10, 20])
        assert big.hash_ms > small.hash_ms

    def test_budget(self):
        rows = symmetric_stress([5, 6, 7], budget_s=0.0)
        assert rows[0].timed_out and rows[1].timed_out and math.isnan(rows[2].hash_ms)
