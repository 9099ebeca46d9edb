#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rational.hpp"

namespace cauchy2 {

inline constexpr std::string_view kToolkitName = "cauchy2";
inline constexpr std::string_view kToolkitVersion = "1.0.0";

/// Significant digits in the decimal rendering of exact report values.
inline constexpr int kReportDigits = 30;

enum class Relation { le, ge, eq, lt };

std::string_view relation_symbol(Relation r);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// One instantiated claim `lhs rel rhs`, evaluated exactly.
/// margin is >= 0 exactly when the claim holds (for eq it is -|lhs - rhs|).
struct CheckCase {
    std::string key;
    KeyValues inputs;
    ExactRational lhs;
    ExactRational rhs;
    Relation relation = Relation::le;
    bool holds = false;
    ExactRational margin;
    KeyValues extras;
};

CheckCase make_case(std::string key, KeyValues inputs, ExactRational lhs, Relation rel, ExactRational rhs);

struct CheckReport {
    std::string suite;
    KeyValues parameters;
    std::vector<CheckCase> cases;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> counterexamples;
    KeyValues notes;
    std::uint64_t seed = 0;

    void add(CheckCase c);
    [[nodiscard]] bool all_hold() const { return failed == 0; }
    /// Least margin over all cases, if any.
    [[nodiscard]] const CheckCase* weakest_case() const;
};

nlohmann::ordered_json to_json(const ExactRational& value);
nlohmann::ordered_json to_json(const CheckCase& c);
nlohmann::ordered_json to_json(const CheckReport& r);

std::string tuple_string(const std::vector<std::size_t>& values);

} // namespace cauchy2
