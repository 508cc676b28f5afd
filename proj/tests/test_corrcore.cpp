#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace seqforge;
using seqforge::testhelp::pm;
using seqforge::testhelp::pm_matrix;

TEST_CASE("accf evaluates all three branches") {
    const auto a = pm({1, 1, 1, -1});
    const auto b = pm({1, 1, -1, 1});
    CHECK(accf(a, b, 3).equals(1, 0));
    CHECK(accf(a, b, 0).equals(0, 0));
    CHECK(accf(a, b, 4).equals(0, 0));
    CHECK(accf(a, b, -4).equals(0, 0));
    CHECK(accf(a, b, 17).equals(0, 0));
}

TEST_CASE("aacf examples") {
    const auto a = pm({1, 1, 1, -1});
    CHECK(aacf(a, 0).equals(4, 0));
    CHECK(aacf(a, 1).equals(1, 0));
    CHECK(aacf(a, 2).equals(0, 0));
    const PhaseSequence q6(6, {0, 1, 5, 2});
    CHECK(aacf(q6, 0).equals(4, 0));
}

TEST_CASE("accf dimension mismatches are rejected") {
    CHECK_THROWS_AS(accf(pm({1, 1}), pm({1, 1, 1}), 0), dimension_error);
    CHECK_THROWS_AS(accf(pm({1, 1}), PhaseSequence(4, {0, 1}), 0), dimension_error);
}

TEST_CASE("conjugate symmetry holds exactly for q in {2,4}") {
    std::mt19937_64 rng(11);
    for (int q : {2, 4}) {
        std::uniform_int_distribution<int> pick(0, q - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const int len = 2 + static_cast<int>(rng() % 16);
            std::vector<int> ea(static_cast<std::size_t>(len)), eb(ea);
            for (auto& x : ea) x = pick(rng);
            for (auto& x : eb) x = pick(rng);
            const PhaseSequence a(q, ea), b(q, eb);
            for (int lambda = -len; lambda <= len; ++lambda) {
                const CorrelationValue lhs = accf(a, b, -lambda);
                const CorrelationValue rhs = accf(b, a, lambda);
                CHECK(lhs.re == rhs.re);
                CHECK(lhs.im == -rhs.im);
            }
        }
    }
}

TEST_CASE("exact path agrees with the floating path") {
    std::mt19937_64 rng(23);
    for (int q : {2, 4}) {
        std::uniform_int_distribution<int> pick(0, q - 1);
        for (int trial = 0; trial < 100; ++trial) {
            const int len = 2 + static_cast<int>(rng() % 20);
            std::vector<int> ea(static_cast<std::size_t>(len)), eb(ea);
            for (auto& x : ea) x = pick(rng);
            for (auto& x : eb) x = pick(rng);
            const PhaseSequence a(q, ea), b(q, eb);
            for (int lambda = -(len - 1); lambda < len; ++lambda) {
                const CorrelationValue ex = accf(a, b, lambda);
                const auto fl = accf_float(a, b, lambda);
                CHECK(ex.exact);
                CHECK(std::abs(ex.value() - fl) < 1e-9 * len);
                CHECK(ex.re == std::round(ex.re));
                CHECK(ex.im == std::round(ex.im));
            }
        }
    }
}

TEST_CASE("shift_forward follows the index pattern") {
    const auto v = pm({1, -1, -1, 1});
    CHECK(shift_forward(v, 1) == pm({1, 1, -1, -1}));
    CHECK(shift_forward(v, 4) == pm({1, -1, -1, 1}));
    CHECK(shift_forward(pm({1, 1, 1, -1}), 4) == pm({-1, 1, 1, 1}));
    CHECK_THROWS_AS(shift_forward(v, 0), std::out_of_range);
    CHECK_THROWS_AS(shift_forward(v, 5), std::out_of_range);
}

TEST_CASE("shift_right rotates right") {
    const PhaseSequence v(4, {0, 1, 2, 3});
    CHECK(shift_right(v, 0) == v);
    CHECK(shift_right(v, 1) == PhaseSequence(4, {3, 0, 1, 2}));
    CHECK(shift_right(v, 2) == PhaseSequence(4, {2, 3, 0, 1}));
    CHECK(shift_right(shift_right(v, 1), 1) == shift_right(v, 2));
    CHECK_THROWS_AS(shift_right(v, 4), std::out_of_range);
    CHECK_THROWS_AS(shift_right(v, -1), std::out_of_range);
}

TEST_CASE("circulant matches the printed 4x4 matrix") {
    const auto m = circulant(pm({1, -1, -1, 1}));
    CHECK(m == pm_matrix({{1, 1, -1, -1}, {-1, 1, 1, -1}, {-1, -1, 1, 1}, {1, -1, -1, 1}}));

    const auto m2 = circulant(pm({1, 1, 1, -1}));
    CHECK(m2 == pm_matrix({{1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {-1, 1, 1, 1}}));

    CHECK(circulant(pm({-1})) == pm_matrix({{-1}}));
}

TEST_CASE("circulant entry [i][j] = a_{(i-j) mod n} and columns are right shifts") {
    const PhaseSequence a(4, {0, 1, 2, 3});
    const auto m = circulant(a);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(m.row(i).exp_at(j) == a.exp_at(((i - j) % 4 + 4) % 4));
    for (int j = 0; j < 4; ++j) {
        const PhaseSequence col_src = shift_right(a, j);
        for (int i = 0; i < 4; ++i) CHECK(m.row(i).exp_at(j) == col_src.exp_at(i));
    }
}

TEST_CASE("truncate_columns") {
    const auto m = circulant(pm({1, -1, -1, 1}));
    CHECK(truncate_columns(m, 0) == m);
    const auto t = truncate_columns(m, 1);
    CHECK(t.col_count() == 3);
    CHECK(t.row(0) == pm({1, 1, -1}));
    CHECK_THROWS_AS(truncate_columns(m, 4), std::out_of_range);
}

TEST_CASE("kronecker product") {
    CHECK(kronecker<int>({1, -1}, {1, 1}) == std::vector<int>{1, 1, -1, -1});
    CHECK(kronecker<int>({1, 7, -2}, {1}) == std::vector<int>{1, 7, -2});
    CHECK(kronecker<int>({1, 1}, {1, 0}) == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("auto_sum") {
    const auto s = pm_matrix({{1, 1, 1, -1}, {1, 1, -1, 1}});
    CHECK(auto_sum(s, 1).is_zero());
    CHECK(auto_sum(s, 0).equals(8, 0));
    CHECK(auto_sum(pm_matrix({{1, 1}, {1, -1}}), 1).is_zero());
}

TEST_CASE("cross_sum_adjacent") {
    CHECK(cross_sum_adjacent(pm_matrix({{1, 1}, {1, -1}}), 1).is_zero());
    const auto single = pm_matrix({{1, 1, 1, -1}});
    for (int lambda = 0; lambda < 4; ++lambda) {
        const CorrelationValue lhs = cross_sum_adjacent(single, lambda);
        const CorrelationValue rhs = aacf(single.row(0), lambda);
        CHECK(lhs.re == rhs.re);
        CHECK(lhs.im == rhs.im);
    }
    const auto e4 = seqforge::testhelp::e4_neg_diag();
    CHECK(cross_sum_adjacent(e4, 3).is_zero());
}

TEST_CASE("cross_sum_pointwise on a GCS against itself") {
    const auto s = pm_matrix({{1, 1, 1, -1}, {1, 1, -1, 1}});
    CHECK(cross_sum_pointwise(s, s, 0).equals(8, 0));
    for (int lambda = 1; lambda < 4; ++lambda) CHECK(cross_sum_pointwise(s, s, lambda).is_zero());
    CHECK_THROWS_AS(cross_sum_pointwise(s, pm_matrix({{1, 1}, {1, -1}}), 0), dimension_error);
}

TEST_CASE("PhaseSequence validation and helpers") {
    CHECK_THROWS_AS(PhaseSequence(3, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PhaseSequence(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(PhaseSequence::from_pm1({1, 2}), std::invalid_argument);
    CHECK(PhaseSequence(4, {-1, 5}) == PhaseSequence(4, {3, 1}));

    const PhaseSequence s(4, {0, 1, 2, 3});
    CHECK(s.conjugated() == PhaseSequence(4, {0, 3, 2, 1}));
    CHECK(s.reversed() == PhaseSequence(4, {3, 2, 1, 0}));
    CHECK(s.negated() == PhaseSequence(4, {2, 3, 0, 1}));
    CHECK(s.truncated(2) == PhaseSequence(4, {0, 1}));
    CHECK(s.elementwise(s) == PhaseSequence(4, {0, 2, 0, 2}));
    CHECK(s.concat(s).length() == 8);
    CHECK_THROWS_AS(pm({1, -1}).elementwise(PhaseSequence(4, {0, 1})), dimension_error);
}
