#ifndef TRISUM_VERIFY_HPP
#define TRISUM_VERIFY_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "trisum/bell.hpp"
#include "trisum/bigint.hpp"
#include "trisum/errors.hpp"
#include "trisum/numbers.hpp"
#include "trisum/series.hpp"

namespace trisum {

enum class CheckKind { theorem, lemma1, lemma2, product, logseries, binomial, oracle };

inline constexpr std::array<CheckKind, 7> all_check_kinds = {
    CheckKind::theorem, CheckKind::lemma1,   CheckKind::lemma2,  CheckKind::product,
    CheckKind::logseries, CheckKind::binomial, CheckKind::oracle,
};

inline std::string_view check_name(CheckKind kind)
{
    switch (kind) {
    case CheckKind::theorem: return "theorem";
    case CheckKind::lemma1: return "lemma1";
    case CheckKind::lemma2: return "lemma2";
    case CheckKind::product: return "product";
    case CheckKind::logseries: return "logseries";
    case CheckKind::binomial: return "binomial";
    case CheckKind::oracle: return "oracle";
    }
    throw std::logic_error("check_name: unhandled kind");
}

inline CheckKind parse_check(std::string_view name)
{
    for (CheckKind kind : all_check_kinds)
        if (check_name(kind) == name)
            return kind;
    throw UnknownCheck("unknown check '" + std::string(name)
                       + "' (expected theorem|lemma1|lemma2|product|logseries|binomial|oracle)");
}

// Bounds every check completes at comfortably while still pushing integer
// sizes into the hundreds of digits.
inline std::size_t default_bound(CheckKind kind)
{
    switch (kind) {
    case CheckKind::theorem: return 300;
    case CheckKind::lemma1: return 60;
    case CheckKind::lemma2: return 60;
    case CheckKind::product: return 2000;
    case CheckKind::logseries: return 500;
    case CheckKind::binomial: return 100;
    case CheckKind::oracle: return 30;
    }
    throw std::logic_error("default_bound: unhandled kind");
}

// The oracle check always sweeps r = 1..5; its bound only moves the n range.
inline constexpr std::size_t oracle_max_r = 5;

struct FailureWitness {
    std::vector<std::int64_t> indices;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const FailureWitness&, const FailureWitness&) = default;
};

struct VerificationReport {
    std::string check;
    std::size_t bound = 0;
    std::size_t total_cases = 0;
    std::vector<FailureWitness> failures;
    std::int64_t elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
};

struct VerifyRequest {
    CheckKind kind;
    std::size_t bound;
};

// Everything the checks share, built once per invocation at the maximum
// needed bound and read-only afterwards. Table construction dominates the
// cost; the checks themselves are comparisons.
struct VerifyContext {
    std::optional<TripRepTable> trep;
    std::optional<BellTable> bell;
    std::optional<TruncatedSeries> psi;
    std::optional<TruncatedSeries> prod_a;
    std::optional<TruncatedSeries> prod_b;
    std::optional<RationalSeries> psi_log;

    static VerifyContext build(std::span<const VerifyRequest> requests)
    {
        std::size_t trep_n = 0, trep_r = 0, bell_n = 0;
        std::size_t psi_order = 0, product_order = 0, log_order = 0;
        bool want_trep = false, want_bell = false, want_product = false, want_log = false;
        for (const auto& req : requests) {
            switch (req.kind) {
            case CheckKind::theorem:
                want_trep = true;
                trep_n = std::max(trep_n, req.bound);
                trep_r = std::max(trep_r, req.bound);
                break;
            case CheckKind::lemma1:
                want_bell = true;
                bell_n = std::max(bell_n, req.bound);
                break;
            case CheckKind::lemma2:
                want_bell = true;
                want_trep = true;
                bell_n = std::max(bell_n, req.bound);
                trep_n = std::max(trep_n, req.bound);
                trep_r = std::max(trep_r, req.bound);
                break;
            case CheckKind::product:
                want_product = true;
                product_order = std::max(product_order, req.bound);
                psi_order = std::max(psi_order, req.bound);
                break;
            case CheckKind::logseries:
                want_log = true;
                log_order = std::max(log_order, req.bound);
                psi_order = std::max(psi_order, req.bound);
                break;
            case CheckKind::binomial:
                break;
            case CheckKind::oracle:
                want_trep = true;
                trep_n = std::max(trep_n, req.bound);
                trep_r = std::max(trep_r, oracle_max_r);
                break;
            }
        }

        VerifyContext ctx;
        if (want_trep)
            ctx.trep = trep_table(trep_n, trep_r);
        if (want_bell)
            ctx.bell = bell_table(psi_derivative_point(bell_n), bell_n);
        if (want_product || want_log)
            ctx.psi = psi_series(psi_order);
        if (want_product) {
            ctx.prod_a = product_form_A(product_order);
            ctx.prod_b = product_form_B(product_order);
        }
        if (want_log)
            ctx.psi_log = formal_log(truncate(*ctx.psi, log_order));
        return ctx;
    }
};

// Flips one triangular-representation count so every identity that consumes
// it fails. Returns a description of what was corrupted, empty if the
// context holds no table to corrupt.
inline std::string inject_fault(VerifyContext& ctx)
{
    if (ctx.trep && ctx.trep->max_n >= 1) {
        ctx.trep->counts[0][1] += 1;
        return "t_1(1) incremented";
    }
    if (ctx.bell) {
        ctx.bell->entries[0][0] += 1;
        return "B_{1,1} incremented";
    }
    return {};
}

namespace detail {

// Runs body(instance, sink) for instance = 0..count-1, striped over up to
// `jobs` workers. Witnesses are tagged with their instance and merged in
// instance order, so the result does not depend on the worker count.
template <typename Body>
std::vector<FailureWitness> run_striped(std::size_t count, unsigned jobs, Body&& body)
{
    using Tagged = std::pair<std::size_t, FailureWitness>;
    std::vector<Tagged> tagged;
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            body(i, tagged);
    } else {
        std::vector<std::vector<Tagged>> partial(jobs);
        std::vector<std::exception_ptr> errors(jobs);
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += jobs)
                        body(i, partial[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& worker : workers)
            worker.join();
        for (unsigned w = 0; w < jobs; ++w)
            if (errors[w])
                std::rethrow_exception(errors[w]);
        for (auto& part : partial)
            tagged.insert(tagged.end(), std::make_move_iterator(part.begin()),
                          std::make_move_iterator(part.end()));
    }
    std::stable_sort(tagged.begin(), tagged.end(),
                     [](const Tagged& a, const Tagged& b) { return a.first < b.first; });
    std::vector<FailureWitness> out;
    out.reserve(tagged.size());
    for (auto& [index, witness] : tagged)
        out.push_back(std::move(witness));
    return out;
}

template <typename Sink>
void emit(Sink& sink, std::size_t instance, std::vector<std::int64_t> indices,
          std::string lhs, std::string rhs)
{
    sink.emplace_back(instance,
                      FailureWitness{std::move(indices), std::move(lhs), std::move(rhs)});
}

inline const TripRepTable& need_trep(const VerifyContext& ctx, std::size_t n, std::size_t r)
{
    if (!ctx.trep || ctx.trep->max_n < n || ctx.trep->max_r < r)
        throw InsufficientTable("verify context lacks a representation table covering (r="
                                + std::to_string(r) + ", n=" + std::to_string(n) + ")");
    return *ctx.trep;
}

inline const BellTable& need_bell(const VerifyContext& ctx, std::size_t n)
{
    if (!ctx.bell || ctx.bell->max_n < n)
        throw InsufficientTable("verify context lacks a Bell table covering n="
                                + std::to_string(n));
    return *ctx.bell;
}

} // namespace detail

// Evaluates one named identity exactly for every instance up to `bound`,
// fanning the instances over up to `jobs` workers. The report is
// deterministic regardless of jobs.
inline VerificationReport run_check(const VerifyContext& ctx, CheckKind kind,
                                    std::size_t bound, unsigned jobs)
{
    if (bound < 1)
        throw std::invalid_argument("run_check: bound must be >= 1");
    VerificationReport report;
    report.check = std::string(check_name(kind));
    report.bound = bound;
    const auto started = std::chrono::steady_clock::now();

    switch (kind) {
    case CheckKind::theorem: {
        const auto& trep = detail::need_trep(ctx, bound, bound);
        report.total_cases = bound;
        report.failures = detail::run_striped(bound, jobs, [&](std::size_t i, auto& sink) {
            const std::size_t n = i + 1;
            const Rational lhs = divisor_sum(n);
            const Rational rhs = theorem_rhs(n, trep);
            if (lhs != rhs)
                detail::emit(sink, i, {static_cast<std::int64_t>(n)}, to_ratio(lhs),
                             to_ratio(rhs));
        });
        break;
    }
    case CheckKind::lemma1: {
        const auto& bell = detail::need_bell(ctx, bound);
        report.total_cases = bound;
        report.failures = detail::run_striped(bound, jobs, [&](std::size_t i, auto& sink) {
            const std::size_t n = i + 1;
            const Rational lhs = lemma1_lhs_via_bell(bell, n);
            const Rational rhs = divisor_sum(n);
            if (lhs != rhs)
                detail::emit(sink, i, {static_cast<std::int64_t>(n)}, to_ratio(lhs),
                             to_ratio(rhs));
        });
        break;
    }
    case CheckKind::lemma2: {
        const auto& bell = detail::need_bell(ctx, bound);
        const auto& trep = detail::need_trep(ctx, bound, bound);
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t n = 1; n <= bound; ++n)
            for (std::size_t k = 1; k <= n; ++k)
                cells.emplace_back(n, k);
        report.total_cases = cells.size();
        report.failures =
            detail::run_striped(cells.size(), jobs, [&](std::size_t i, auto& sink) {
                const auto [n, k] = cells[i];
                const BigInt& lhs = bell.at(n, k);
                const BigInt rhs = lemma2_rhs(n, k, trep);
                if (lhs != rhs)
                    detail::emit(sink, i,
                                 {static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)},
                                 to_decimal(lhs), to_decimal(rhs));
            });
        break;
    }
    case CheckKind::product: {
        if (!ctx.psi || !ctx.prod_a || !ctx.prod_b || ctx.psi->order() < bound
            || ctx.prod_a->order() < bound || ctx.prod_b->order() < bound)
            throw InsufficientTable("verify context lacks product series at order "
                                    + std::to_string(bound));
        // indices are [coefficient, form] with form 1 and 2 naming the two
        // product factorizations.
        report.total_cases = bound + 1;
        report.failures =
            detail::run_striped(bound + 1, jobs, [&](std::size_t i, auto& sink) {
                const BigInt& expected = (*ctx.psi)[i];
                if ((*ctx.prod_a)[i] != expected)
                    detail::emit(sink, i, {static_cast<std::int64_t>(i), 1},
                                 to_decimal(expected), to_decimal((*ctx.prod_a)[i]));
                if ((*ctx.prod_b)[i] != expected)
                    detail::emit(sink, i, {static_cast<std::int64_t>(i), 2},
                                 to_decimal(expected), to_decimal((*ctx.prod_b)[i]));
            });
        break;
    }
    case CheckKind::logseries: {
        if (!ctx.psi_log || ctx.psi_log->order() < bound)
            throw InsufficientTable("verify context lacks the log series at order "
                                    + std::to_string(bound));
        report.total_cases = bound;
        report.failures = detail::run_striped(bound, jobs, [&](std::size_t i, auto& sink) {
            const std::size_t n = i + 1;
            const Rational& lhs = (*ctx.psi_log)[n];
            const Rational rhs = -divisor_sum(n);
            if (lhs != rhs)
                detail::emit(sink, i, {static_cast<std::int64_t>(n)}, to_ratio(lhs),
                             to_ratio(rhs));
        });
        break;
    }
    case CheckKind::binomial: {
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t n = 1; n <= bound; ++n)
            for (std::size_t r = 1; r <= n; ++r)
                cells.emplace_back(n, r);
        report.total_cases = cells.size();
        report.failures =
            detail::run_striped(cells.size(), jobs, [&](std::size_t i, auto& sink) {
                const auto [n, r] = cells[i];
                const auto [lhs, rhs] = binomial_identity_sides(n, r);
                if (lhs != rhs)
                    detail::emit(sink, i,
                                 {static_cast<std::int64_t>(n), static_cast<std::int64_t>(r)},
                                 to_ratio(lhs), to_ratio(rhs));
            });
        break;
    }
    case CheckKind::oracle: {
        const auto& trep = detail::need_trep(ctx, bound, oracle_max_r);
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t n = 0; n <= bound; ++n)
            for (std::size_t r = 1; r <= oracle_max_r; ++r)
                cells.emplace_back(n, r);
        report.total_cases = cells.size();
        report.failures =
            detail::run_striped(cells.size(), jobs, [&](std::size_t i, auto& sink) {
                const auto [n, r] = cells[i];
                const BigInt& lhs = trep.at(r, n);
                const BigInt rhs = trep_oracle(n, r);
                if (lhs != rhs)
                    detail::emit(sink, i,
                                 {static_cast<std::int64_t>(n), static_cast<std::int64_t>(r)},
                                 to_decimal(lhs), to_decimal(rhs));
            });
        break;
    }
    }

    const auto finished = std::chrono::steady_clock::now();
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(finished - started).count();
    return report;
}

// Convenience form that builds the shared tables itself.
inline VerificationReport run_check(std::string_view name, std::size_t bound, unsigned jobs)
{
    const CheckKind kind = parse_check(name);
    const VerifyRequest request{kind, bound};
    const VerifyContext ctx = VerifyContext::build({&request, 1});
    return run_check(ctx, kind, bound, jobs);
}

inline std::vector<VerificationReport> run_checks(std::span<const VerifyRequest> requests,
                                                  unsigned jobs, const VerifyContext& ctx)
{
    std::vector<VerificationReport> reports;
    reports.reserve(requests.size());
    for (const auto& req : requests)
        reports.push_back(run_check(ctx, req.kind, req.bound, jobs));
    return reports;
}

} // namespace trisum

#endif
