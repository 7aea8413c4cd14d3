#ifndef TRISUM_SERIES_HPP
#define TRISUM_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trisum/bigint.hpp"
#include "trisum/errors.hpp"
#include "trisum/numbers.hpp"

namespace trisum {

// Formal power series over BigInt, truncated mod q^(order+1). A series of
// order N stores exactly N+1 coefficients; binary operations on operands of
// unequal order truncate to the minimum order. Immutable once built.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, BigInt(0)) {}

    explicit TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw std::invalid_argument("TruncatedSeries: need at least the constant term");
    }

    static TruncatedSeries one(std::size_t order)
    {
        TruncatedSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
    std::span<const BigInt> coeffs() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

// Same shape with exact rational coefficients; only the formal logarithm
// needs it.
class RationalSeries {
public:
    explicit RationalSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

    explicit RationalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw std::invalid_argument("RationalSeries: need at least the constant term");
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    std::span<const Rational> coeffs() const { return coeffs_; }

    friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

inline TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order)
{
    if (order > a.order())
        throw std::invalid_argument("truncate: cannot extend a series");
    std::vector<BigInt> c(a.coeffs().begin(), a.coeffs().begin() + order + 1);
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<BigInt> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        c[i] = a[i] + b[i];
    return TruncatedSeries(std::move(c));
}

// Cauchy product truncated at the minimum order. Schoolbook convolution,
// driven by the nonzero coefficients of the sparser operand.
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    auto count_nonzero = [n](const TruncatedSeries& s) {
        std::size_t c = 0;
        for (std::size_t i = 0; i <= n; ++i)
            if (s[i] != 0)
                ++c;
        return c;
    };
    const TruncatedSeries& sparse = count_nonzero(a) <= count_nonzero(b) ? a : b;
    const TruncatedSeries& dense = &sparse == &a ? b : a;

    std::vector<BigInt> c(n + 1, BigInt(0));
    for (std::size_t i = 0; i <= n; ++i) {
        const BigInt& ai = sparse[i];
        if (ai == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (dense[j] != 0)
                c[i + j] += ai * dense[j];
        }
    }
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return add(a, b);
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return mul(a, b);
}

// Binary exponentiation over mul; r = 0 gives the constant series 1.
inline TruncatedSeries pow(const TruncatedSeries& a, unsigned long r)
{
    TruncatedSeries result = TruncatedSeries::one(a.order());
    TruncatedSeries base = a;
    while (r > 0) {
        if (r & 1)
            result = mul(result, base);
        r >>= 1;
        if (r)
            base = mul(base, base);
    }
    return result;
}

// Multiplicative inverse by the standard coefficient recurrence
//   b[0] = 1/a[0],  b[n] = -1/a[0] * sum_{k>=1} a[k] b[n-k].
// Over the integers this needs |a[0]| = 1, in which case 1/a[0] = a[0].
inline TruncatedSeries invert(const TruncatedSeries& a)
{
    if (a[0] != 1 && a[0] != -1)
        throw NonUnitConstantTerm("invert: constant term must be +1 or -1, got "
                                  + to_decimal(a[0]));
    const std::size_t n = a.order();
    std::vector<std::size_t> support; // nonzero indices of a, from 1
    for (std::size_t k = 1; k <= n; ++k)
        if (a[k] != 0)
            support.push_back(k);

    std::vector<BigInt> b(n + 1, BigInt(0));
    b[0] = a[0];
    for (std::size_t m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (std::size_t k : support) {
            if (k > m)
                break;
            acc += a[k] * b[m - k];
        }
        b[m] = -a[0] * acc;
    }
    return TruncatedSeries(std::move(b));
}

// The triangular indicator series: coefficient 1 at every triangular index
// (including 0), 0 elsewhere.
inline TruncatedSeries psi_series(std::size_t order)
{
    std::vector<BigInt> c(order + 1, BigInt(0));
    for (std::size_t i = 0; i <= order; ++i)
        if (is_triangular(i))
            c[i] = 1;
    return TruncatedSeries(std::move(c));
}

namespace detail {

// 1 + coeff * q^j truncated at `order`; degenerates to the constant 1 when
// j > order.
inline TruncatedSeries binomial_factor(std::size_t order, std::size_t j, long coeff)
{
    std::vector<BigInt> c(order + 1, BigInt(0));
    c[0] = 1;
    if (j <= order)
        c[j] += coeff;
    return TruncatedSeries(std::move(c));
}

} // namespace detail

// prod_{j=1}^{order} (1 + q^j)^2 (1 - q^j). Factors with j > order only
// touch coefficients beyond the truncation, so stopping at j = order is
// exact.
inline TruncatedSeries product_form_A(std::size_t order)
{
    TruncatedSeries acc = TruncatedSeries::one(order);
    for (std::size_t j = 1; j <= order; ++j) {
        const TruncatedSeries plus = detail::binomial_factor(order, j, 1);
        const TruncatedSeries minus = detail::binomial_factor(order, j, -1);
        acc = mul(acc, mul(mul(plus, plus), minus));
    }
    return acc;
}

// prod_{j=1}^{order} (1 - q^{2j})^2 / (1 - q^j), the denominator handled
// through invert.
inline TruncatedSeries product_form_B(std::size_t order)
{
    TruncatedSeries acc = TruncatedSeries::one(order);
    for (std::size_t j = 1; j <= order; ++j) {
        const TruncatedSeries sq = detail::binomial_factor(order, 2 * j, -1);
        const TruncatedSeries geom = invert(detail::binomial_factor(order, j, -1));
        acc = mul(acc, mul(mul(sq, sq), geom));
    }
    return acc;
}

// Formal logarithm of a series with constant term 1, via the defining
// relation a * L' = a', i.e. coefficientwise
//   n*a[n] = sum_{k=1}^{n} k*L[k]*a[n-k],
// solved for L[n] one degree at a time. One pass, exact rationals.
inline RationalSeries formal_log(const TruncatedSeries& a)
{
    if (a[0] != 1)
        throw NonUnitConstantTerm("formal_log: constant term must be 1, got "
                                  + to_decimal(a[0]));
    const std::size_t n = a.order();
    std::vector<std::size_t> support; // nonzero indices of a, from 1
    for (std::size_t k = 1; k <= n; ++k)
        if (a[k] != 0)
            support.push_back(k);

    std::vector<Rational> log_coeffs(n + 1, Rational(0));
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (std::size_t i : support) { // i = m - k, the index into a
            if (i >= m)
                break;
            const std::size_t k = m - i;
            acc += static_cast<unsigned long>(k) * log_coeffs[k] * Rational(a[i]);
        }
        log_coeffs[m] = Rational(a[m]) - acc / static_cast<unsigned long>(m);
    }
    return RationalSeries(std::move(log_coeffs));
}

} // namespace trisum

#endif
