#ifndef TRISUM_REPORT_HPP
#define TRISUM_REPORT_HPP

#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "trisum/verify.hpp"

namespace trisum {

enum class ReportFormat { table, json, csv };

inline ReportFormat parse_format(std::string_view name)
{
    if (name == "table")
        return ReportFormat::table;
    if (name == "json")
        return ReportFormat::json;
    if (name == "csv")
        return ReportFormat::csv;
    throw std::invalid_argument("unknown format '" + std::string(name)
                                + "' (expected table|json|csv)");
}

namespace detail {

inline nlohmann::ordered_json report_to_json(const VerificationReport& report)
{
    nlohmann::ordered_json j;
    j["check"] = report.check;
    j["bound"] = report.bound;
    j["total_cases"] = report.total_cases;
    auto failures = nlohmann::ordered_json::array();
    for (const auto& witness : report.failures) {
        nlohmann::ordered_json f;
        f["indices"] = witness.indices;
        f["lhs"] = witness.lhs;
        f["rhs"] = witness.rhs;
        failures.push_back(std::move(f));
    }
    j["failures"] = std::move(failures);
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

inline std::string joined_indices(const FailureWitness& witness)
{
    std::string out;
    for (std::size_t i = 0; i < witness.indices.size(); ++i) {
        if (i > 0)
            out += ';';
        out += std::to_string(witness.indices[i]);
    }
    return out;
}

inline void append_csv_rows(std::ostringstream& out, const VerificationReport& report)
{
    for (const auto& witness : report.failures)
        out << report.check << ',' << report.bound << ',' << joined_indices(witness) << ','
            << witness.lhs << ',' << witness.rhs << '\n';
}

inline void append_table(std::ostringstream& out, const VerificationReport& report)
{
    out << (report.passed() ? "[PASS] " : "[FAIL] ") << report.check
        << "  bound=" << report.bound << "  cases=" << report.total_cases
        << "  failures=" << report.failures.size() << "  elapsed=" << report.elapsed_ms
        << "ms\n";
    for (const auto& witness : report.failures)
        out << "  at [" << joined_indices(witness) << "]: lhs=" << witness.lhs
            << " rhs=" << witness.rhs << '\n';
}

inline constexpr std::string_view csv_header = "check,bound,indices,lhs,rhs\n";

} // namespace detail

inline std::string emit_report(const VerificationReport& report, ReportFormat format)
{
    switch (format) {
    case ReportFormat::json:
        return detail::report_to_json(report).dump(2) + "\n";
    case ReportFormat::csv: {
        std::ostringstream out;
        out << detail::csv_header;
        detail::append_csv_rows(out, report);
        return out.str();
    }
    case ReportFormat::table: {
        std::ostringstream out;
        detail::append_table(out, report);
        return out.str();
    }
    }
    throw std::logic_error("emit_report: unhandled format");
}

// Multi-report rendering for `verify all`: a JSON array, one CSV header with
// all rows, or stacked table blocks.
inline std::string emit_reports(std::span<const VerificationReport> reports,
                                ReportFormat format)
{
    switch (format) {
    case ReportFormat::json: {
        auto array = nlohmann::ordered_json::array();
        for (const auto& report : reports)
            array.push_back(detail::report_to_json(report));
        return array.dump(2) + "\n";
    }
    case ReportFormat::csv: {
        std::ostringstream out;
        out << detail::csv_header;
        for (const auto& report : reports)
            detail::append_csv_rows(out, report);
        return out.str();
    }
    case ReportFormat::table: {
        std::ostringstream out;
        for (const auto& report : reports)
            detail::append_table(out, report);
        return out.str();
    }
    }
    throw std::logic_error("emit_reports: unhandled format");
}

} // namespace trisum

#endif
