#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "exact_core.hpp"
#include "report.hpp"

namespace cauchy2 {

class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t order) : order_(order), entries_(order * order) {}

    [[nodiscard]] std::size_t order() const { return order_; }
    ExactRational& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
    const ExactRational& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

    /// M_ij = f(a_i + a_j).
    static ExactMatrix hankel(const std::vector<std::size_t>& a,
                              const std::function<ExactRational(std::size_t)>& f);

private:
    std::size_t order_;
    std::vector<ExactRational> entries_;
};

using IndexTuple = std::vector<std::size_t>;

/// Fraction-free elimination after scaling each row to integers. det of the
/// 0x0 matrix is 1.
ExactRational det_exact(const ExactMatrix& mat);

/// |(-1)^(a_i+a_j) c_{n+a_i+a_j}|_m >= 0.
CheckCase check_thm3_signed(std::size_t n, const IndexTuple& a, const CauchyTable& table);
/// (-1)^(mn) |c_{n+a_i+a_j}|_m >= 0, taken literally.
CheckCase check_thm3_plain(std::size_t n, const IndexTuple& a, const CauchyTable& table);
/// |c_{n+a_i+a_j}|_m >= 0, the form the derivative identity actually yields.
CheckCase check_thm3_unsigned(std::size_t n, const IndexTuple& a, const CauchyTable& table);
/// |c_{a_i+a_j} / (a_i+a_j)!|_m >= 0.
CheckCase check_thm7_det(const IndexTuple& a, const CauchyTable& table);
/// (mu_{a0})^(m-1) mu_{a0 + sum a} >= prod_k mu_{a0 + a_k}.
CheckCase check_thm7_product(std::size_t a0, const IndexTuple& a, const CauchyTable& table);

/// Calls f on every tuple of length `length` with entries in [0, max_entry], lexicographically.
void for_each_tuple(std::size_t length, std::size_t max_entry, const std::function<void(const IndexTuple&)>& f);

struct Thm3Sweep {
    std::size_t n_max = 6;
    std::size_t m_max = 4;
    std::size_t entry_max = 4;
};

CheckReport sweep_thm3_signed(const CauchyTable& table, const Thm3Sweep& range = {});
CheckReport sweep_thm3_plain(const CauchyTable& table, const Thm3Sweep& range = {});
CheckReport sweep_thm3_unsigned(const CauchyTable& table, const Thm3Sweep& range = {});
CheckReport sweep_thm7_det(const CauchyTable& table, std::size_t m_max = 4, std::size_t entry_max = 4);
CheckReport sweep_thm7_product(const CauchyTable& table, std::size_t m_max = 3, std::size_t entry_max = 4);

} // namespace cauchy2
