#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "exact_core.hpp"
#include "report.hpp"

namespace cauchy2 {

inline constexpr std::size_t kDefaultProbeDepth = 200;

/// d[k][n] = (-1)^k Delta^k mu_n for k + n <= depth.
class DiffTable {
public:
    /// Needs values mu_0 .. mu_depth. Built by d[k+1][n] = d[k][n] - d[k][n+1].
    static DiffTable build(std::span<const ExactRational> mu, std::size_t depth);

    [[nodiscard]] std::size_t depth() const { return rows_.size() - 1; }
    [[nodiscard]] const ExactRational& at(std::size_t k, std::size_t n) const;
    /// (-1)^k sum_m (-1)^m C(k,m) mu_{n+k-m}, straight from row 0.
    [[nodiscard]] ExactRational binomial_form(std::size_t k, std::size_t n) const;
    [[nodiscard]] std::size_t entry_count() const;

private:
    std::vector<std::vector<ExactRational>> rows_;
};

/// Difference table of mu_n = c_n/n!; cross-validates a sample of entries
/// against the binomial sum and throws std::logic_error on disagreement.
DiffTable build_diff_table(const CauchyTable& table, std::size_t depth);

/// One case per entry; passes iff every d[k][n] >= 0. Notes carry the minimum entry.
CheckReport check_complete_monotonicity(const DiffTable& dt);

struct MinimalityProbe {
    ExactRational epsilon;
    std::optional<std::size_t> violation_order;
    std::vector<ExactRational> d0_sequence;
    ExactRational min_observed;
    std::size_t depth = 0;
};

/// First k <= depth with d[k][0] < epsilon. Lowering mu_0 by epsilon lowers
/// exactly the column d[.][0] by epsilon and leaves every n >= 1 untouched.
MinimalityProbe minimality_probe(const DiffTable& dt, const ExactRational& epsilon);

/// c_{n+1}^2 <= c_n c_{n+2} for 0 <= n <= size-3.
CheckReport check_log_convexity(std::span<const ExactRational> values);
CheckReport check_log_convexity(const CauchyTable& table);

} // namespace cauchy2
