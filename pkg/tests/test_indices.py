import math

import pytest

from citemetric import (
    DomainError,
    EmptyProfileError,
    MissingFieldError,
    build_profile,
    c_k,
    compute_report,
    g_index_egghe,
    g_index_parabola,
    h_index,
    i_k,
    kh1,
    kh2,
    kh3,
    kh_max,
    line_crossing,
    m_index,
    synthesize_counts,
)
from oracles import check_crossing_against_grid


def test_crossing_mid_segment():
    p = build_profile("a", [7, 1])
    cp = line_crossing(p, 4.0)  # segment from (1, 7) to (2, 1) meets c = 4r at r = 1.3
    assert cp.r_star == pytest.approx(1.3, abs=1e-12)
    assert cp.c_star == pytest.approx(5.2, abs=1e-12)


def test_crossing_at_clamp_boundary():
    cp = line_crossing(build_profile("a", [2]), 2.0)
    assert (cp.r_star, cp.c_star) == (1.0, 2.0)


def test_crossing_inside_constant_extension():
    cp = line_crossing(build_profile("a", [2]), 4.0)
    assert (cp.r_star, cp.c_star) == (0.5, 2.0)  # ordinate capped at c_max


def test_crossing_uniform_profile():
    cp = line_crossing(build_profile("a", [3, 3, 3]), 3.0)
    assert (cp.r_star, cp.c_star) == (1.0, 3.0)


def test_crossing_agrees_with_grid_scan():
    cases = [
        ([7, 1], 4.0),
        ([7, 1], math.sqrt(8)),
        ([2], math.sqrt(2)),
        ([9, 7, 7, 3, 1, 1], 1.0),
        ([9, 7, 7, 3, 1, 1], 4.6666),
        ([40, 12, 3, 3, 2, 1, 1, 1], 0.25),
    ]
    for counts, slope in cases:
        p = build_profile("a", counts)
        check_crossing_against_grid(line_crossing(p, slope), slope, counts)


def test_crossing_rejects_bad_input():
    with pytest.raises(EmptyProfileError):
        line_crossing(build_profile("a", [0, 0]), 1.0)
    with pytest.raises(DomainError):
        line_crossing(build_profile("a", [3]), 0.0)
    with pytest.raises(DomainError):
        line_crossing(build_profile("a", [3]), -2.0)


def test_h_index_examples():
    assert h_index(build_profile("a", [7, 1])) == 1
    assert h_index(build_profile("a", [10, 5, 2])) == 2
    assert h_index(build_profile("a", [3, 3, 3])) == 3
    assert h_index(build_profile("a", [1, 1, 1, 1])) == 1
    assert h_index(build_profile("a", [])) == 0
    assert h_index(build_profile("a", [0, 0])) == 0


def test_g_parabola_examples():
    assert g_index_parabola(build_profile("a", [7, 1])) == 1
    assert g_index_parabola(build_profile("a", [10, 5, 2])) == 4
    assert g_index_parabola(build_profile("a", [1])) == 1
    assert g_index_parabola(build_profile("a", [])) == 0
    # always a perfect square
    g = g_index_parabola(build_profile("a", [100, 90, 80, 17, 2]))
    assert math.isqrt(g) ** 2 == g == 16


def test_g_egghe_examples():
    assert g_index_egghe(build_profile("a", [7, 1])) == 2
    assert g_index_egghe(build_profile("a", [4, 4, 4, 4])) == 4
    assert g_index_egghe(build_profile("a", [100])) == 1  # capped by the number of works
    assert g_index_egghe(build_profile("a", [9, 1, 0, 0])) == 3  # zero-cited works pad the tail
    assert g_index_egghe(build_profile("a", [])) == 0


def test_m_index():
    assert m_index(build_profile("a", [7, 1], career_years=7)) == pytest.approx(1 / 7)
    with pytest.raises(MissingFieldError):
        m_index(build_profile("a", [7, 1]))


def test_i_k_and_c_k():
    p = build_profile("a", [13, 4])
    assert i_k(p, 10) == 1
    assert i_k(p, 4) == 2
    assert i_k(p, 14) == 0
    assert c_k(p, 10) == 17
    assert c_k(p, 1) == 13
    assert c_k(p, 100) == 17
    with pytest.raises(DomainError):
        i_k(p, 0)
    with pytest.raises(DomainError):
        c_k(p, 0)
    empty = build_profile("a", [])
    assert i_k(empty, 10) == 0
    assert c_k(empty, 10) == 0


def test_kh_values_for_two_work_profile():
    p = build_profile("a", [7, 1])
    assert kh1(p) == pytest.approx(5.2, abs=1e-12)
    assert kh2(p) == pytest.approx(math.sqrt(8), abs=1e-12)
    assert kh3(p) == pytest.approx(13 * math.sqrt(8) / (6 + math.sqrt(8)), abs=1e-9)


def test_kh_values_for_single_work_profiles():
    p = build_profile("a", [2, 0, 0])
    assert kh1(p) == 2.0
    assert kh2(p) == pytest.approx(math.sqrt(2))
    assert kh3(p) == pytest.approx(4 * math.sqrt(2) / (2 + math.sqrt(2)), abs=1e-9)
    q = build_profile("b", [4])
    assert kh1(q) == 4.0
    assert kh3(q) == pytest.approx(8 / 3, abs=1e-9)
    s = build_profile("c", [3])
    assert kh3(s) == pytest.approx(3 * math.sqrt(3) - 3, abs=1e-9)


def test_kh3_clamps_at_top_citation_count():
    # sqrt(789) is about 28.1, steeper than the top count of 19
    p = build_profile("a", synthesize_counts(198, 142, 789, 19))
    assert kh3(p) == 19.0


def test_kh_max_is_the_largest_of_the_three():
    p = build_profile("a", [7, 1])
    assert kh_max(p) == max(kh1(p), kh2(p), kh3(p)) == kh1(p)
    u = build_profile("u", [5, 5, 5, 5, 5])
    assert kh1(u) == kh2(u) == kh3(u) == kh_max(u) == 5.0


def test_empty_profile_indices_are_zero_by_convention():
    p = build_profile("a", [])
    assert kh1(p) == 0.0
    assert kh2(p) == 0.0
    assert kh3(p) == 0.0
    assert kh_max(p) == 0.0
    report = compute_report(p)
    assert (report.r0, report.r, report.h, report.g, report.i10, report.c10) == (0, 0, 0, 0, 0, 0)
    assert report.kh == 0.0
    assert report.m is None


def test_report_collects_every_column():
    report = compute_report(build_profile("w", [2, 0, 0], career_years=2))
    assert report.author_id == "w"
    assert (report.r0, report.r, report.c_sigma, report.c10, report.c_max) == (3, 1, 2, 2, 2)
    assert report.c_s == 2.0
    assert (report.h, report.g, report.i10) == (1, 1, 0)
    assert report.m == 0.5
    assert report.kh1 == 2.0
    assert report.kh2 == pytest.approx(1.41, abs=0.005)
    assert report.kh3 == pytest.approx(1.66, abs=0.005)
    assert report.kh == 2.0


def test_report_m_absent_without_career_years():
    assert compute_report(build_profile("a", [5, 3])).m is None
