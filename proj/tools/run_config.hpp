#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cauchy2::cli {

inline constexpr unsigned kDefaultPrecision = 128;
inline constexpr const char* kPrecisionEnv = "CAUCHY2_PRECISION";

/// Every option of every subcommand, with its documented default.
struct RunConfig {
    std::string command;              // compute | quad | eval | verify
    std::string format = "plain";     // plain | csv | json
    unsigned precision = kDefaultPrecision;
    std::string tol = "1/100000000000000000000";  // canonical "p/q"; default 1e-20
    std::string out;                  // empty: stdout
    std::size_t table_bound = 256;

    // compute
    std::size_t n_max = 10;
    // quad, eval h / dh
    std::size_t n = 0;
    std::string rule = "gl";          // gl | cc
    // eval
    std::string kind;                 // F | h | hs | dh
    std::string z = "1";
    std::string t = "0";
    std::string s = "0";
    std::size_t k = 1;
    // verify
    std::string suites = "all";
    std::size_t n_bound = 100;
    std::size_t cm_depth = 60;
    std::string epsilon = "3/4,1/10,1/100,1/1000";
    std::size_t depth = 200;
    std::uint64_t seed = 20131203;

    /// Arguments that reproduce this configuration exactly (command first).
    [[nodiscard]] std::vector<std::string> canonical_args() const;
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct ParseOutcome {
    std::optional<RunConfig> config;
    int exit_code = 0;
};

/// Parses `args` (without the program name). env_precision is the value of
/// CAUCHY2_PRECISION or null; an explicit --precision wins. Help and errors
/// are printed to out/err and returned with config unset.
ParseOutcome parse_run_config(const std::vector<std::string>& args, const char* env_precision, std::ostream& out,
                              std::ostream& err);

} // namespace cauchy2::cli
