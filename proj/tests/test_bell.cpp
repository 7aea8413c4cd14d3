#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "trisum/bell.hpp"
#include "trisum/series.hpp"

using namespace trisum;

namespace {

DerivativePoint random_point(std::mt19937_64& rng, std::size_t size)
{
    std::uniform_int_distribution<long> entry(-3, 3);
    DerivativePoint point;
    point.values.reserve(size);
    for (std::size_t i = 0; i < size; ++i)
        point.values.emplace_back(entry(rng));
    return point;
}

} // namespace

TEST_CASE("psi_derivative_point worked values")
{
    const auto point = psi_derivative_point(6);
    CHECK(point.values == std::vector<BigInt>{1, 0, 6, 0, 0, 720});
    CHECK(point.x(1) == 1);
    CHECK(point.x(2) == 0);
    CHECK_THROWS_AS(point.x(0), std::invalid_argument);
    CHECK_THROWS_AS(point.x(7), std::invalid_argument);
}

TEST_CASE("bell_table worked values at the triangular point")
{
    const auto table = bell_table(psi_derivative_point(3), 3);
    CHECK(table.at(3, 1) == 6); // = x_3
    CHECK(table.at(3, 3) == 1); // = x_1^3
    CHECK(table.at(3, 2) == 0); // = 3 x_1 x_2 with x_2 = 0
}

TEST_CASE("bell_table boundary columns")
{
    const auto check_boundaries = [](const DerivativePoint& point, std::size_t max_n) {
        const auto table = bell_table(point, max_n);
        BigInt x1_power = 1;
        for (std::size_t n = 1; n <= max_n; ++n) {
            x1_power *= point.x(1);
            CHECK(table.at(n, 1) == point.x(n));
            CHECK(table.at(n, n) == x1_power);
        }
    };
    check_boundaries(psi_derivative_point(25), 25);
    std::mt19937_64 rng(31337);
    check_boundaries(random_point(rng, 18), 18);
}

TEST_CASE("bell_table preconditions and bounds")
{
    CHECK_THROWS_AS(bell_table(psi_derivative_point(3), 5), std::invalid_argument);
    CHECK_THROWS_AS(bell_table(psi_derivative_point(3), 0), std::invalid_argument);
    const auto table = bell_table(psi_derivative_point(4), 4);
    CHECK_THROWS_AS(table.at(5, 1), InsufficientTable);
    CHECK_THROWS_AS(table.at(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(table.at(3, 0), std::invalid_argument);
}

TEST_CASE("bell_oracle worked values")
{
    const auto point = psi_derivative_point(6);
    CHECK(bell_oracle(point, 3, 2) == 0); // 3 x_1 x_2, x_2 = 0
    CHECK(bell_oracle(point, 1, 1) == 1);
    CHECK(bell_oracle(point, 6, 1) == 720); // = x_6
}

TEST_CASE("bell_table agrees with the definition-sum oracle")
{
    const std::size_t max_n = 20;
    const auto psi_point = psi_derivative_point(max_n);
    const auto psi_table = bell_table(psi_point, max_n);
    for (std::size_t n = 1; n <= max_n; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            CHECK(psi_table.at(n, k) == bell_oracle(psi_point, n, k));

    std::mt19937_64 rng(271828);
    for (int round = 0; round < 10; ++round) {
        const auto point = random_point(rng, 14);
        const auto table = bell_table(point, 14);
        for (std::size_t n = 1; n <= 14; ++n)
            for (std::size_t k = 1; k <= n; ++k)
                CHECK(table.at(n, k) == bell_oracle(point, n, k));
    }
}

TEST_CASE("partial Bell polynomials are homogeneous of degree k")
{
    std::mt19937_64 rng(161803);
    const auto point = random_point(rng, 10);
    DerivativePoint doubled = point;
    for (auto& v : doubled.values)
        v *= 2;
    for (std::size_t n = 1; n <= 10; ++n) {
        BigInt scale = 1; // 2^k
        for (std::size_t k = 1; k <= n; ++k) {
            scale *= 2;
            CHECK(bell_oracle(doubled, n, k) == scale * bell_oracle(point, n, k));
        }
    }
}

TEST_CASE("lemma1 left side worked values")
{
    const auto table = bell_table(psi_derivative_point(3), 3);
    CHECK(lemma1_lhs_via_bell(table, 1) == Rational(-1));
    CHECK(lemma1_lhs_via_bell(table, 2) == Rational(1, 2));
    CHECK(lemma1_lhs_via_bell(table, 3) == Rational(-4, 3)); // (1/6)(-6 + 0 - 2)
    CHECK_THROWS_AS(lemma1_lhs_via_bell(table, 4), InsufficientTable);
    CHECK_THROWS_AS(lemma1_lhs_via_bell(table, 0), std::invalid_argument);
}

TEST_CASE("lemma1 left side equals the divisor sum")
{
    const std::size_t bound = 40;
    const auto table = bell_table(psi_derivative_point(bound), bound);
    for (std::size_t n = 1; n <= bound; ++n)
        CHECK(lemma1_lhs_via_bell(table, n) == divisor_sum(n));
}

TEST_CASE("lemma2 right side worked values")
{
    const auto trep = trep_table(3, 3);
    CHECK(lemma2_rhs(3, 1, trep) == 6); // 3! t_1(3)
    CHECK(lemma2_rhs(3, 3, trep) == 1); // 3 - 6 + 4
    CHECK(lemma2_rhs(2, 2, trep) == 1); // -2 t_1(2) + t_2(2)
    CHECK_THROWS_AS(lemma2_rhs(2, 3, trep), std::invalid_argument);
    CHECK_THROWS_AS(lemma2_rhs(4, 2, trep), InsufficientTable);
}

TEST_CASE("lemma2 ties Bell entries to representation counts")
{
    const std::size_t bound = 40;
    const auto bell = bell_table(psi_derivative_point(bound), bound);
    const auto trep = trep_table(bound, bound);
    for (std::size_t n = 1; n <= bound; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            CHECK(bell.at(n, k) == lemma2_rhs(n, k, trep));
}

TEST_CASE("log derivative via Bell sums, worked values")
{
    const auto table = bell_table(psi_derivative_point(3), 3);
    CHECK(faa_di_bruno_log_derivative(table, 1) == Rational(1));
    CHECK(faa_di_bruno_log_derivative(table, 2) == Rational(-1));
    CHECK(faa_di_bruno_log_derivative(table, 3) == Rational(8));
    CHECK_THROWS_AS(faa_di_bruno_log_derivative(table, 4), InsufficientTable);
}

TEST_CASE("log derivative matches the formal logarithm coefficients")
{
    const std::size_t bound = 40;
    const auto table = bell_table(psi_derivative_point(bound), bound);
    const auto log_psi = formal_log(psi_series(bound));
    for (std::size_t n = 1; n <= bound; ++n) {
        const Rational expected = Rational(factorial(n)) * log_psi[n];
        CHECK(faa_di_bruno_log_derivative(table, n) == expected);
        CHECK(faa_di_bruno_log_derivative(table, n)
              == -Rational(factorial(n)) * divisor_sum(n));
    }
}
