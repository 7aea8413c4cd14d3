#ifndef TRISUM_BELL_HPP
#define TRISUM_BELL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trisum/bigint.hpp"
#include "trisum/errors.hpp"
#include "trisum/numbers.hpp"

namespace trisum {

// The sequence x_1 .. x_M a partial Bell polynomial is evaluated at. Any
// integer sequence is allowed; the one of interest has x_i = i-th derivative
// of the triangular indicator series at 0, i.e. x_i = i! at triangular i and
// 0 elsewhere.
struct DerivativePoint {
    std::vector<BigInt> values; // values[i-1] = x_i

    std::size_t size() const { return values.size(); }

    const BigInt& x(std::size_t i) const
    {
        if (i < 1 || i > values.size())
            throw std::invalid_argument("DerivativePoint::x: index " + std::to_string(i)
                                        + " outside 1.." + std::to_string(values.size()));
        return values[i - 1];
    }
};

inline DerivativePoint psi_derivative_point(std::size_t max_index)
{
    DerivativePoint point;
    point.values.reserve(max_index);
    for (std::size_t i = 1; i <= max_index; ++i)
        point.values.push_back(is_triangular(i) ? factorial(i) : BigInt(0));
    return point;
}

// entries[n-1][k-1] = B_{n,k} at a fixed point, for 1 <= k <= n <= max_n.
struct BellTable {
    std::size_t max_n = 0;
    std::vector<std::vector<BigInt>> entries;

    const BigInt& at(std::size_t n, std::size_t k) const
    {
        if (n < 1 || k < 1 || k > n)
            throw std::invalid_argument("BellTable::at: need 1 <= k <= n");
        if (n > max_n)
            throw InsufficientTable("BellTable::at: n=" + std::to_string(n)
                                    + " exceeds table max_n=" + std::to_string(max_n));
        return entries[n - 1][k - 1];
    }
};

// Fills the table by the recurrence
//   B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) * x_i * B_{n-i, k-1}
// with B_{0,0} = 1 and B_{m,0} = 0 for m >= 1. Zero x_i are skipped, which
// makes the fill cheap at sparse points.
inline BellTable bell_table(const DerivativePoint& point, std::size_t max_n)
{
    if (max_n < 1)
        throw std::invalid_argument("bell_table: max_n must be >= 1");
    if (point.size() < max_n)
        throw std::invalid_argument("bell_table: point has " + std::to_string(point.size())
                                    + " values, need " + std::to_string(max_n));

    // Pascal rows up to max_n - 1, so C(n-1, i-1) is a lookup.
    std::vector<std::vector<BigInt>> pascal(max_n);
    for (std::size_t row = 0; row < max_n; ++row) {
        pascal[row].assign(row + 1, BigInt(1));
        for (std::size_t col = 1; col < row; ++col)
            pascal[row][col] = pascal[row - 1][col - 1] + pascal[row - 1][col];
    }

    BellTable table;
    table.max_n = max_n;
    table.entries.assign(max_n, {});
    for (std::size_t n = 1; n <= max_n; ++n) {
        table.entries[n - 1].assign(n, BigInt(0));
        for (std::size_t k = 1; k <= n; ++k) {
            BigInt acc = 0;
            for (std::size_t i = 1; i + k <= n + 1; ++i) {
                const BigInt& xi = point.x(i);
                if (xi == 0)
                    continue;
                if (k == 1) {
                    if (i == n) // B_{0,0} = 1
                        acc += pascal[n - 1][i - 1] * xi;
                } else if (n - i >= k - 1) {
                    const BigInt& sub = table.entries[n - i - 1][k - 2];
                    if (sub != 0)
                        acc += pascal[n - 1][i - 1] * xi * sub;
                }
            }
            table.entries[n - 1][k - 1] = std::move(acc);
        }
    }
    return table;
}

namespace detail {

// Walks multi-indices (l_1, .., l_max_i) with sum l_i = parts and
// sum i*l_i = weight, choosing l_max_i first.
inline void bell_definition_sum(const DerivativePoint& point, std::size_t max_i,
                                std::size_t weight, std::size_t parts,
                                const Rational& partial, Rational& total)
{
    if (max_i == 0) {
        if (weight == 0 && parts == 0)
            total += partial;
        return;
    }
    if (weight < parts || weight > parts * max_i)
        return; // no assignment of `parts` values in 1..max_i can reach `weight`
    const std::size_t cap = std::min(parts, weight / max_i);
    for (std::size_t l = 0; l <= cap; ++l) {
        Rational next = partial;
        if (l > 0) {
            Rational base(point.x(max_i), factorial(max_i)); // x_i / i!
            Rational power = 1;
            for (std::size_t e = 0; e < l; ++e)
                power *= base;
            next *= power / Rational(factorial(l));
            if (next == 0)
                continue;
        }
        bell_definition_sum(point, max_i - 1, weight - l * max_i, parts - l, next, total);
    }
}

} // namespace detail

// Evaluates the definition of B_{n,k} directly:
//   sum over l_1..l_{n-k+1} with sum l_i = k, sum i*l_i = n of
//   n! / prod(l_i!) * prod (x_i / i!)^{l_i}.
// Deliberately independent of the recurrence; intended for small n.
inline BigInt bell_oracle(const DerivativePoint& point, std::size_t n, std::size_t k)
{
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("bell_oracle: need 1 <= k <= n");
    const std::size_t max_i = n - k + 1;
    if (point.size() < max_i)
        throw std::invalid_argument("bell_oracle: point too short for (n=" + std::to_string(n)
                                    + ", k=" + std::to_string(k) + ")");
    Rational total = 0;
    detail::bell_definition_sum(point, max_i, n, k, Rational(1), total);
    total *= Rational(factorial(n));
    if (denominator(total) != 1)
        throw NonIntegerResult("bell_oracle: B_{" + std::to_string(n) + ","
                               + std::to_string(k) + "} evaluated to non-integer "
                               + to_ratio(total));
    return numerator(total);
}

// (1/n!) * sum_{k=1}^{n} (-1)^k (k-1)! B_{n,k}. Equals the divisor sum D(n)
// when the table is built at the triangular derivative point.
inline Rational lemma1_lhs_via_bell(const BellTable& table, std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("lemma1_lhs_via_bell: n must be positive");
    if (n > table.max_n)
        throw InsufficientTable("lemma1_lhs_via_bell: n=" + std::to_string(n)
                                + " exceeds table max_n=" + std::to_string(table.max_n));
    BigInt acc = 0;
    BigInt kfac = 1; // (k-1)!
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1)
            kfac *= static_cast<unsigned long>(k - 1);
        const BigInt term = kfac * table.at(n, k);
        if (k % 2 == 1)
            acc -= term;
        else
            acc += term;
    }
    return Rational(acc, factorial(n));
}

// (n!/k!) * sum_{r=1}^{k} (-1)^{k-r} C(k,r) t_r(n), with n!/k! taken as the
// falling-factorial product (k+1)(k+2)..n so everything stays in integers.
inline BigInt lemma2_rhs(std::size_t n, std::size_t k, const TripRepTable& table)
{
    if (k < 1 || k > n)
        throw std::invalid_argument("lemma2_rhs: need 1 <= k <= n");
    if (table.max_n < n || table.max_r < k)
        throw InsufficientTable("lemma2_rhs: table covers (max_r=" + std::to_string(table.max_r)
                                + ", max_n=" + std::to_string(table.max_n) + "), need (r="
                                + std::to_string(k) + ", n=" + std::to_string(n) + ")");
    BigInt falling = 1;
    for (std::size_t i = k + 1; i <= n; ++i)
        falling *= static_cast<unsigned long>(i);
    BigInt acc = 0;
    for (std::size_t r = 1; r <= k; ++r) {
        const BigInt term = binomial(k, r) * table.at(r, n);
        if ((k - r) % 2 == 1)
            acc -= term;
        else
            acc += term;
    }
    return falling * acc;
}

// n-th derivative of log composed with the indicator series, at 0:
//   sum_{k=1}^{n} (-1)^{k-1} (k-1)! B_{n,k}.
inline Rational faa_di_bruno_log_derivative(const BellTable& table, std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("faa_di_bruno_log_derivative: n must be positive");
    if (n > table.max_n)
        throw InsufficientTable("faa_di_bruno_log_derivative: n=" + std::to_string(n)
                                + " exceeds table max_n=" + std::to_string(table.max_n));
    BigInt acc = 0;
    BigInt kfac = 1; // (k-1)!
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1)
            kfac *= static_cast<unsigned long>(k - 1);
        const BigInt term = kfac * table.at(n, k);
        if (k % 2 == 1)
            acc += term;
        else
            acc -= term;
    }
    return Rational(acc);
}

} // namespace trisum

#endif
