// Acceptance suite: one line per criterion, exact arithmetic throughout,
// exit status 0 only if every criterion holds. The path to the trisum CLI
// binary is expected as argv[1] (used by the determinism / exit-code
// criterion).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "trisum/trisum.hpp"

using namespace trisum;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body)
{
    std::string detail;
    const auto started = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    if (ok) {
        std::cout << "[PASS] " << name << " (" << elapsed << " ms)\n";
    } else {
        std::cout << "[FAIL] " << name << (detail.empty() ? "" : ": " + detail) << " ("
                  << elapsed << " ms)\n";
        ++failures;
    }
    std::cout.flush();
}

int run_command(const std::string& command)
{
    const int status = std::system(command.c_str());
    if (status == -1 || !WIFEXITED(status))
        return -1;
    return WEXITSTATUS(status);
}

nlohmann::json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return nlohmann::json::parse(in);
}

void zero_elapsed(nlohmann::json& reports)
{
    for (auto& report : reports)
        report["elapsed_ms"] = 0;
}

} // namespace

int main(int argc, char** argv)
{
    const std::string cli = argc > 1 ? argv[1] : "";

    std::optional<TripRepTable> trep300;
    std::optional<BellTable> bell60;

    criterion("main identity: divisor sum equals the alternating binomial sum, n <= 300",
              [&](std::string& detail) {
                  trep300 = trep_table(300, 300);
                  for (std::size_t n = 1; n <= 300; ++n) {
                      if (divisor_sum(n) != theorem_rhs(n, *trep300)) {
                          detail = "first mismatch at n=" + std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    criterion("worked value t_2(7) = 2 on both routes; t_r(0) = 1 for r <= 300",
              [&](std::string& detail) {
                  if (!trep300) {
                      detail = "representation table unavailable";
                      return false;
                  }
                  if (trep300->at(2, 7) != 2 || trep_oracle(7, 2) != 2) {
                      detail = "t_2(7) mismatch";
                      return false;
                  }
                  for (std::size_t r = 1; r <= 300; ++r) {
                      if (trep300->at(r, 0) != 1) {
                          detail = "t_" + std::to_string(r) + "(0) != 1";
                          return false;
                      }
                  }
                  return true;
              });

    criterion("both infinite-product forms reproduce the series at order 2000",
              [&](std::string& detail) {
                  const auto psi = psi_series(2000);
                  if (product_form_A(2000) != psi) {
                      detail = "first product form diverges";
                      return false;
                  }
                  if (product_form_B(2000) != psi) {
                      detail = "second product form diverges";
                      return false;
                  }
                  return true;
              });

    criterion("Bell-polynomial route to the divisor sum, n <= 60, both readings",
              [&](std::string& detail) {
                  bell60 = bell_table(psi_derivative_point(60), 60);
                  const auto log_psi = formal_log(psi_series(60));
                  for (std::size_t n = 1; n <= 60; ++n) {
                      if (lemma1_lhs_via_bell(*bell60, n) != divisor_sum(n)) {
                          detail = "Bell sum mismatch at n=" + std::to_string(n);
                          return false;
                      }
                      const Rational expected = Rational(factorial(n)) * log_psi[n];
                      if (faa_di_bruno_log_derivative(*bell60, n) != expected) {
                          detail = "log-derivative mismatch at n=" + std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    criterion("Bell entries equal scaled alternating representation sums, k <= n <= 60",
              [&](std::string& detail) {
                  if (!trep300 || !bell60) {
                      detail = "shared tables unavailable";
                      return false;
                  }
                  for (std::size_t n = 1; n <= 60; ++n)
                      for (std::size_t k = 1; k <= n; ++k)
                          if (bell60->at(n, k) != lemma2_rhs(n, k, *trep300)) {
                              detail = "mismatch at (n=" + std::to_string(n)
                                       + ", k=" + std::to_string(k) + ")";
                              return false;
                          }
                  return true;
              });

    criterion("log series carries negated divisor sums to order 1000",
              [&](std::string& detail) {
                  const auto log_psi = formal_log(psi_series(1000));
                  for (std::size_t n = 1; n <= 1000; ++n)
                      if (log_psi[n] != -divisor_sum(n)) {
                          detail = "coefficient mismatch at n=" + std::to_string(n);
                          return false;
                      }
                  return true;
              });

    criterion("binomial summation identity to n = 100 and Pascal's rule to 60",
              [&](std::string& detail) {
                  for (std::size_t n = 1; n <= 100; ++n)
                      for (std::size_t r = 1; r <= n; ++r)
                          if (!binomial_identity_check(n, r)) {
                              detail = "summation identity fails at (n=" + std::to_string(n)
                                       + ", r=" + std::to_string(r) + ")";
                              return false;
                          }
                  for (std::size_t k = 0; k <= 60; ++k) {
                      if (binomial(k + 1, 0) - binomial(k, 0) != 0) {
                          detail = "Pascal r=0 edge fails at k=" + std::to_string(k);
                          return false;
                      }
                      for (std::size_t r = 1; r <= k; ++r)
                          if (binomial(k, r - 1) != binomial(k + 1, r) - binomial(k, r)) {
                              detail = "Pascal's rule fails at (k=" + std::to_string(k)
                                       + ", r=" + std::to_string(r) + ")";
                              return false;
                          }
                  }
                  return true;
              });

    criterion("oracle equivalence: tuple counts n<=30 r<=5; Bell tables n<=20 at 11 points",
              [&](std::string& detail) {
                  if (!trep300) {
                      detail = "representation table unavailable";
                      return false;
                  }
                  for (std::size_t n = 0; n <= 30; ++n)
                      for (std::size_t r = 1; r <= 5; ++r)
                          if (trep300->at(r, n) != trep_oracle(n, r)) {
                              detail = "tuple count mismatch at (n=" + std::to_string(n)
                                       + ", r=" + std::to_string(r) + ")";
                              return false;
                          }

                  const auto check_point = [&](const DerivativePoint& point) {
                      const auto table = bell_table(point, 20);
                      for (std::size_t n = 1; n <= 20; ++n)
                          for (std::size_t k = 1; k <= n; ++k)
                              if (table.at(n, k) != bell_oracle(point, n, k))
                                  return false;
                      return true;
                  };
                  if (!check_point(psi_derivative_point(20))) {
                      detail = "Bell recurrence vs definition mismatch at the triangular point";
                      return false;
                  }
                  std::mt19937_64 rng(424243);
                  std::uniform_int_distribution<long> entry(-3, 3);
                  for (int round = 0; round < 10; ++round) {
                      DerivativePoint point;
                      for (std::size_t i = 0; i < 20; ++i)
                          point.values.emplace_back(entry(rng));
                      if (!check_point(point)) {
                          detail = "Bell recurrence vs definition mismatch at random point "
                                   + std::to_string(round);
                          return false;
                      }
                  }
                  return true;
              });

    criterion("CLI determinism across worker counts and exit-code contract",
              [&](std::string& detail) {
                  if (cli.empty()) {
                      detail = "path to the trisum binary must be passed as argv[1]";
                      return false;
                  }
                  const std::string quoted = "\"" + cli + "\"";
                  if (run_command(quoted + " verify all --jobs 1 --format json"
                                  " > acceptance_all_jobs1.json 2>/dev/null")
                      != 0) {
                      detail = "verify all --jobs 1 did not exit 0";
                      return false;
                  }
                  if (run_command(quoted + " verify all --jobs 8 --format json"
                                  " > acceptance_all_jobs8.json 2>/dev/null")
                      != 0) {
                      detail = "verify all --jobs 8 did not exit 0";
                      return false;
                  }
                  auto solo = load_json("acceptance_all_jobs1.json");
                  auto fanned = load_json("acceptance_all_jobs8.json");
                  zero_elapsed(solo);
                  zero_elapsed(fanned);
                  if (solo.dump() != fanned.dump()) {
                      detail = "reports differ between jobs=1 and jobs=8";
                      return false;
                  }
                  if (run_command(quoted + " verify theorem --bound 3 --inject-fault"
                                  " --format json > acceptance_fault.json 2>/dev/null")
                      != 1) {
                      detail = "fault injection did not exit 1";
                      return false;
                  }
                  if (run_command(quoted + " verify eisenstein >/dev/null 2>/dev/null") != 2) {
                      detail = "unknown check did not exit 2";
                      return false;
                  }
                  return true;
              });

    if (failures == 0)
        std::cout << "all acceptance criteria hold\n";
    else
        std::cout << failures << " acceptance criteria failed\n";
    return failures == 0 ? 0 : 1;
}
