#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "exact_core.hpp"
#include "report.hpp"
#include "sequence_analysis.hpp"

namespace cauchy2 {

inline constexpr std::uint64_t kDefaultSeed = 20131203;

/// Suite names in canonical (report) order.
const std::vector<std::string>& suite_names();

/// Suites whose failures are a known anomaly of the literal statement: they
/// are reported under `discrepancies` and never change the exit status.
bool is_discrepancy_suite(std::string_view suite);

/// Accepts "all" or a comma list; returns canonical order, deduplicated.
std::vector<std::string> parse_suite_selection(std::string_view text);

struct VerifyOptions {
    std::vector<std::string> suites = suite_names();
    /// Log-convexity runs over c_0 .. c_{n_bound}.
    std::size_t n_bound = 100;
    std::size_t cm_depth = 60;
    std::vector<ExactRational> epsilons = {ExactRational(BigInt(3), BigInt(4)), ExactRational(BigInt(1), BigInt(10)),
                                           ExactRational(BigInt(1), BigInt(100)),
                                           ExactRational(BigInt(1), BigInt(1000))};
    std::size_t depth = kDefaultProbeDepth;
    std::uint64_t seed = kDefaultSeed;
    std::size_t table_bound = kDefaultTableBound;
};

struct VerifyResult {
    std::vector<CheckReport> reports;
    std::size_t table_n_max = 0;

    [[nodiscard]] std::size_t passed() const;
    /// Failures outside the discrepancy suites.
    [[nodiscard]] std::size_t failed() const;
    [[nodiscard]] bool ok() const { return failed() == 0; }
    [[nodiscard]] const CheckReport* find(std::string_view suite) const;
};

/// Largest c-index needed by the selected suites.
std::size_t required_table_index(const VerifyOptions& options);

VerifyResult run_verify(const VerifyOptions& options);
/// Same as run_verify on a caller-supplied table (must cover required_table_index).
VerifyResult run_verify(const VerifyOptions& options, const CauchyTable& table);

CheckReport minimality_report(const DiffTable& dt, const std::vector<ExactRational>& epsilons);

nlohmann::ordered_json options_json(const VerifyOptions& options);
nlohmann::ordered_json verify_json(const VerifyResult& result, const VerifyOptions& options);
std::string verify_csv(const VerifyResult& result);
std::string verify_plain(const VerifyResult& result, const VerifyOptions& options);

} // namespace cauchy2
