#ifndef TRISUM_NUMBERS_HPP
#define TRISUM_NUMBERS_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trisum/bigint.hpp"
#include "trisum/errors.hpp"

namespace trisum {

// m is triangular iff 8m+1 is a perfect square. 0 counts as triangular.
inline bool is_triangular(const BigInt& m)
{
    if (m < 0)
        return false;
    const BigInt probe = 8 * m + 1;
    const BigInt root = sqrt(probe); // floor square root, exact
    return root * root == probe;
}

inline bool is_triangular(std::size_t m) { return is_triangular(BigInt(m)); }

// Ascending triangular numbers <= limit, starting at 0.
inline std::vector<std::size_t> triangular_numbers_upto(std::size_t limit)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0, t = 0; t <= limit; ++k, t = k * (k + 1) / 2)
        out.push_back(t);
    return out;
}

// D(n) = sum over divisors d of n of (1 + 2(-1)^d)/d, i.e. -1/d at odd d
// and 3/d at even d. Divisors found by trial division up to sqrt(n).
inline Rational divisor_sum(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("divisor_sum: n must be positive");
    Rational acc = 0;
    auto add_term = [&acc](std::size_t d) {
        acc += Rational(d % 2 == 0 ? 3 : -1, static_cast<unsigned long>(d));
    };
    for (std::size_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        add_term(d);
        if (d != n / d)
            add_term(n / d);
    }
    return acc;
}

// C(n, r); zero when r > n. Multiplicative formula, every division exact.
inline BigInt binomial(std::size_t n, std::size_t r)
{
    if (r > n)
        return 0;
    if (n - r < r)
        r = n - r;
    BigInt acc = 1;
    for (std::size_t i = 1; i <= r; ++i) {
        acc *= static_cast<unsigned long>(n - r + i);
        acc /= static_cast<unsigned long>(i);
    }
    return acc;
}

// counts[r-1][m] = t_r(m): ordered r-tuples of triangular numbers (0 allowed)
// summing to m, for 1 <= r <= max_r, 0 <= m <= max_n.
struct TripRepTable {
    std::size_t max_n = 0;
    std::size_t max_r = 0;
    std::vector<std::vector<BigInt>> counts;

    const BigInt& at(std::size_t r, std::size_t n) const
    {
        if (r < 1)
            throw std::invalid_argument("TripRepTable::at: r must be >= 1");
        if (r > max_r || n > max_n)
            throw InsufficientTable("TripRepTable::at: entry (r=" + std::to_string(r)
                                    + ", n=" + std::to_string(n) + ") exceeds table bounds");
        return counts[r - 1][n];
    }
};

// Row 1 is the triangular indicator; row r is row r-1 convolved with the
// sparse support of the triangular indicator.
inline TripRepTable trep_table(std::size_t max_n, std::size_t max_r)
{
    if (max_r < 1)
        throw std::invalid_argument("trep_table: max_r must be >= 1");
    TripRepTable table;
    table.max_n = max_n;
    table.max_r = max_r;
    table.counts.assign(max_r, std::vector<BigInt>(max_n + 1, BigInt(0)));

    const auto support = triangular_numbers_upto(max_n);
    for (std::size_t t : support)
        table.counts[0][t] = 1;
    for (std::size_t r = 2; r <= max_r; ++r) {
        const auto& prev = table.counts[r - 2];
        auto& row = table.counts[r - 1];
        for (std::size_t m = 0; m <= max_n; ++m) {
            BigInt acc = 0;
            for (std::size_t t : support) {
                if (t > m)
                    break;
                acc += prev[m - t];
            }
            row[m] = std::move(acc);
        }
    }
    return table;
}

namespace detail {

// Enumerates values for the last tuple position and recurses on the rest.
// Self-contained on purpose: no tables, no series.
inline BigInt trep_enumerate(std::size_t n, std::size_t r)
{
    if (r == 0)
        return n == 0 ? 1 : 0;
    BigInt acc = 0;
    for (std::size_t k = 0, t = 0; t <= n; ++k, t = k * (k + 1) / 2)
        acc += trep_enumerate(n - t, r - 1);
    return acc;
}

} // namespace detail

// Independent oracle for t_r(n) by direct enumeration of ordered tuples.
// Intended for small inputs; exponential in r.
inline BigInt trep_oracle(std::size_t n, std::size_t r)
{
    if (r < 1)
        throw std::invalid_argument("trep_oracle: r must be >= 1");
    return detail::trep_enumerate(n, r);
}

// Right side of the main identity: sum over r = 1..n of
// (-1)^r / r * C(n, r) * t_r(n), accumulated term by term in exact rationals.
inline Rational theorem_rhs(std::size_t n, const TripRepTable& table)
{
    if (n == 0)
        throw std::invalid_argument("theorem_rhs: n must be positive");
    if (table.max_n < n || table.max_r < n)
        throw InsufficientTable("theorem_rhs: table covers (max_r=" + std::to_string(table.max_r)
                                + ", max_n=" + std::to_string(table.max_n) + "), need r,n <= "
                                + std::to_string(n));
    Rational acc = 0;
    for (std::size_t r = 1; r <= n; ++r) {
        Rational term(binomial(n, r) * table.at(r, n), static_cast<unsigned long>(r));
        if (r % 2 == 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

// Both sides of the auxiliary summation identity
//   sum_{k=r}^{n} C(k, r)/k  =  C(n, r)/r.
inline std::pair<Rational, Rational> binomial_identity_sides(std::size_t n, std::size_t r)
{
    if (r < 1 || r > n)
        throw std::invalid_argument("binomial_identity_sides: need 1 <= r <= n");
    Rational lhs = 0;
    for (std::size_t k = r; k <= n; ++k)
        lhs += Rational(binomial(k, r), static_cast<unsigned long>(k));
    Rational rhs(binomial(n, r), static_cast<unsigned long>(r));
    return {lhs, rhs};
}

inline bool binomial_identity_check(std::size_t n, std::size_t r)
{
    auto [lhs, rhs] = binomial_identity_sides(n, r);
    return lhs == rhs;
}

} // namespace trisum

#endif
