#ifndef TRISUM_CLI_HPP
#define TRISUM_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trisum/bell.hpp"
#include "trisum/bigint.hpp"
#include "trisum/numbers.hpp"
#include "trisum/report.hpp"
#include "trisum/series.hpp"
#include "trisum/verify.hpp"

namespace trisum {

namespace detail {

inline std::string bracket_list(std::span<const BigInt> values)
{
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += to_decimal(values[i]);
    }
    out += "]";
    return out;
}

inline int usage_error(const std::string& message)
{
    std::cerr << "trisum: " << message << "\n";
    return 2;
}

} // namespace detail

// Exit codes: 0 all requested checks passed / value printed, 1 identity
// failure or internal error, 2 usage error.
inline int run_cli(int argc, const char* const* argv)
{
    CLI::App app{"exact verifier for triangular-number and Bell-polynomial identities"};
    app.require_subcommand(1);

    std::string check_arg;
    std::uint64_t bound_arg = 0;
    unsigned jobs_arg = 1;
    std::string format_arg = "table";
    bool inject_fault_arg = false;

    auto* verify = app.add_subcommand("verify", "run an identity check (or all of them)");
    verify->add_option("check", check_arg,
                       "theorem|lemma1|lemma2|product|logseries|binomial|oracle|all")
        ->required();
    auto* bound_opt = verify->add_option("--bound", bound_arg,
                                         "largest instance to verify (per-check default)")
                          ->check(CLI::PositiveNumber);
    verify->add_option("--jobs", jobs_arg, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", format_arg, "table|json|csv (default table)");
    verify->add_flag("--inject-fault", inject_fault_arg,
                     "corrupt one shared table entry first; exercises the failure path");

    std::string entity_arg;
    std::int64_t n_arg = -1, r_arg = -1, k_arg = -1, order_arg = -1;

    auto* compute = app.add_subcommand("compute", "print one exact quantity");
    compute->add_option("entity", entity_arg, "psi|trep|divsum|bell|rhs")->required();
    auto* n_opt = compute->add_option("--n", n_arg, "main index");
    compute->add_option("--r", r_arg, "tuple length for trep");
    compute->add_option("--k", k_arg, "part count for bell");
    auto* order_opt = compute->add_option("--order", order_arg, "truncation order for psi");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            ReportFormat format;
            std::vector<VerifyRequest> requests;
            try {
                format = parse_format(format_arg);
                if (check_arg == "all") {
                    for (CheckKind kind : all_check_kinds)
                        requests.push_back({kind, *bound_opt ? bound_arg : default_bound(kind)});
                } else {
                    const CheckKind kind = parse_check(check_arg);
                    requests.push_back({kind, *bound_opt ? bound_arg : default_bound(kind)});
                }
            } catch (const std::invalid_argument& e) {
                return detail::usage_error(e.what());
            }

            VerifyContext ctx = VerifyContext::build(requests);
            if (inject_fault_arg) {
                const std::string note = inject_fault(ctx);
                std::cerr << "trisum: fault injected"
                          << (note.empty() ? " (no table in context, nothing corrupted)"
                                           : ": " + note)
                          << "\n";
            }
            const auto reports = run_checks(requests, jobs_arg, ctx);
            if (reports.size() == 1)
                std::cout << emit_report(reports.front(), format);
            else
                std::cout << emit_reports(reports, format);
            for (const auto& report : reports)
                if (!report.passed())
                    return 1;
            return 0;
        }

        // compute
        const auto need = [&](const CLI::Option* opt, std::int64_t value, const char* name,
                              std::int64_t min) {
            if (!*opt)
                throw std::invalid_argument("compute " + entity_arg + ": missing --"
                                            + std::string(name));
            if (value < min)
                throw std::invalid_argument("compute " + entity_arg + ": --" + std::string(name)
                                            + " must be >= " + std::to_string(min));
        };
        try {
            if (entity_arg == "psi") {
                need(order_opt, order_arg, "order", 0);
                const auto series = psi_series(static_cast<std::size_t>(order_arg));
                std::cout << detail::bracket_list(series.coeffs()) << "\n";
            } else if (entity_arg == "trep") {
                need(n_opt, n_arg, "n", 0);
                const auto n = static_cast<std::size_t>(n_arg);
                if (r_arg >= 0) {
                    if (r_arg < 1)
                        throw std::invalid_argument("compute trep: --r must be >= 1");
                    const auto r = static_cast<std::size_t>(r_arg);
                    std::cout << to_decimal(trep_table(n, r).at(r, n)) << "\n";
                } else {
                    // whole column t_1(n)..t_n(n)
                    const std::size_t max_r = std::max<std::size_t>(n, 1);
                    const auto table = trep_table(n, max_r);
                    std::vector<BigInt> column;
                    for (std::size_t r = 1; r <= max_r; ++r)
                        column.push_back(table.at(r, n));
                    std::cout << detail::bracket_list(column) << "\n";
                }
            } else if (entity_arg == "divsum") {
                need(n_opt, n_arg, "n", 1);
                std::cout << to_ratio(divisor_sum(static_cast<std::size_t>(n_arg))) << "\n";
            } else if (entity_arg == "bell") {
                need(n_opt, n_arg, "n", 1);
                if (k_arg < 0)
                    throw std::invalid_argument("compute bell: missing --k");
                const auto n = static_cast<std::size_t>(n_arg);
                const auto k = static_cast<std::size_t>(k_arg);
                if (k < 1 || k > n)
                    throw std::invalid_argument("compute bell: --k must satisfy 1 <= k <= n");
                const auto table = bell_table(psi_derivative_point(n), n);
                std::cout << to_decimal(table.at(n, k)) << "\n";
            } else if (entity_arg == "rhs") {
                need(n_opt, n_arg, "n", 1);
                const auto n = static_cast<std::size_t>(n_arg);
                std::cout << to_ratio(theorem_rhs(n, trep_table(n, n))) << "\n";
            } else {
                throw std::invalid_argument("unknown entity '" + entity_arg
                                            + "' (expected psi|trep|divsum|bell|rhs)");
            }
        } catch (const std::invalid_argument& e) {
            return detail::usage_error(e.what());
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "trisum: error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace trisum

#endif
