#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "exact_core.hpp"
#include "matrix_checks.hpp"
#include "report.hpp"

namespace cauchy2 {

struct MajorizationResult {
    bool majorized = false;
    /// majorized and lambda is not a permutation of mu.
    bool strict = false;
};

/// lambda <= mu in the majorization order. Throws DomainError on length mismatch.
MajorizationResult is_majorized(const IndexTuple& lambda, const IndexTuple& mu);

/// A pair known to satisfy lambda <= mu; only constructible through make().
class MajPair {
public:
    static std::optional<MajPair> make(IndexTuple lambda, IndexTuple mu);

    [[nodiscard]] const IndexTuple& lambda() const { return lambda_; }
    [[nodiscard]] const IndexTuple& mu() const { return mu_; }
    [[nodiscard]] bool strict() const { return strict_; }

private:
    MajPair(IndexTuple lambda, IndexTuple mu, bool strict)
        : lambda_(std::move(lambda)), mu_(std::move(mu)), strict_(strict) {}

    IndexTuple lambda_;
    IndexTuple mu_;
    bool strict_;
};

/// prod c_{lambda_i} <= prod c_{mu_i}.
CheckCase check_thm4(const MajPair& pair, const CauchyTable& table);
/// prod c_{n+lambda_i} <= prod c_{n+mu_i}.
CheckCase check_thm4_shifted(const MajPair& pair, std::size_t n, const CauchyTable& table);
/// (c_{l+k})^n <= (c_{l+n})^k (c_l)^(n-k), requires n > k > 0.
CheckCase check_cor_power(std::size_t ell, std::size_t n, std::size_t k, const CauchyTable& table);
/// c_{l+k} c_{l+n-k} >= c_{l+m} c_{l+n-m} under n >= k >= m, 2k >= n, 2m >= n.
CheckCase check_thm5(std::size_t ell, std::size_t n, std::size_t k, std::size_t m, const CauchyTable& table);

struct GhiValues {
    ExactRational g;
    ExactRational h;
    ExactRational i;
};

GhiValues compute_ghi(std::size_t n, std::size_t m, std::size_t ell, const CauchyTable& table);

/// G >= 0, H >= 0, H against G by the sign of m - n, and I >= G when n >= m.
std::vector<CheckCase> check_thm6(std::size_t n, std::size_t m, std::size_t ell, const CauchyTable& table);

/// All non-increasing tuples of the given length with entries <= max_entry.
std::vector<IndexTuple> descending_tuples(std::size_t length, std::size_t max_entry);

CheckReport sweep_thm4(const CauchyTable& table, std::size_t m_max = 3, std::size_t entry_max = 6);
CheckReport sweep_thm4_shifted(const CauchyTable& table, std::size_t shift_max = 3, std::size_t m_max = 3,
                               std::size_t entry_max = 4);
/// Random chains lambda <= nu <= mu built by Robin Hood transfers from a random mu.
CheckReport sweep_thm4_random(const CauchyTable& table, std::uint64_t seed, std::size_t chains = 100,
                              std::size_t m_max = 5, std::size_t entry_max = 12);
CheckReport sweep_cor_power(const CauchyTable& table, std::size_t ell_max = 3, std::size_t n_max = 8);
CheckReport sweep_thm5(const CauchyTable& table, std::size_t ell_max = 3, std::size_t n_max = 8);
CheckReport sweep_thm6(const CauchyTable& table, std::size_t n_max = 5, std::size_t m_max = 5,
                       std::size_t ell_max = 3);

} // namespace cauchy2
