#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rational.hpp"

namespace cauchy2 {

/// Largest table index accepted without an explicit opt-in. Bit lengths of
/// c_n grow faster than linearly, so larger tables are a deliberate choice.
inline constexpr std::size_t kDefaultTableBound = 256;

/// Unsigned Stirling numbers of the first kind s(n,k), 0 <= k <= n <= n_max:
/// the coefficients of x^k in the rising factorial (x)_n.
class StirlingTriangle {
public:
    [[nodiscard]] std::size_t n_max() const { return rows_.size() - 1; }
    [[nodiscard]] const BigInt& at(std::size_t n, std::size_t k) const { return rows_.at(n).at(k); }
    [[nodiscard]] std::span<const BigInt> row(std::size_t n) const { return rows_.at(n); }

private:
    friend StirlingTriangle build_stirling(std::size_t n_max, std::size_t capacity);
    std::vector<std::vector<BigInt>> rows_;
};

/// Exact c_n and mu_n = c_n / n! for 0 <= n <= n_max.
class CauchyTable {
public:
    /// Takes ownership of c_0..c_N and derives mu. Throws DomainError if
    /// any value is non-positive.
    static CauchyTable from_values(std::vector<ExactRational> c);

    [[nodiscard]] std::size_t n_max() const { return c_.size() - 1; }
    [[nodiscard]] const ExactRational& c(std::size_t n) const;
    [[nodiscard]] const ExactRational& mu(std::size_t n) const;
    [[nodiscard]] std::span<const ExactRational> c_values() const { return c_; }
    [[nodiscard]] std::span<const ExactRational> mu_values() const { return mu_; }

    /// Throws CapacityError unless the table covers index n.
    void require(std::size_t n, const char* what) const;

    friend bool operator==(const CauchyTable& a, const CauchyTable& b) { return a.c_ == b.c_; }

private:
    std::vector<ExactRational> c_;
    std::vector<ExactRational> mu_;
};

StirlingTriangle build_stirling(std::size_t n_max, std::size_t capacity = kDefaultTableBound);

/// c_n = sum_k s(n,k) / (k+1), from integrating (x)_n term by term over [0,1].
ExactRational cauchy_via_stirling(std::size_t n, const StirlingTriangle& tri);

/// Maclaurin coefficients a_0..a_n of (1+t) ln(1+t) / t.
std::vector<ExactRational> series_coefficients(std::size_t n_max);

/// Inverts the series of (1+t) ln(1+t) / t to get b_n = (-1)^n c_n / n!.
CauchyTable cauchy_via_series(std::size_t n_max, std::size_t capacity = kDefaultTableBound);

/// Runs both routes through n_max and throws RouteMismatchError on any disagreement.
CauchyTable cross_checked_table(std::size_t n_max, std::size_t capacity = kDefaultTableBound);

ExactRational rising_factorial(const ExactRational& x, std::size_t n);
ExactRational falling_factorial(const ExactRational& x, std::size_t n);

} // namespace cauchy2
