#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string_view>
#include <utility>
#include <vector>

#include "bigfloat.hpp"
#include "rational.hpp"

namespace cauchy2 {

/// Extra bits carried internally above the requested precision.
inline constexpr Precision kGuardBits = 32;

/// Abscissae and weights of a rule on [-1, 1].
struct NodeSet {
    std::vector<BigFloat> x;
    std::vector<BigFloat> w;
};

/// A family of interpolatory rules indexed by order; successive evaluations
/// double the order. Node tables are built once per (order, precision) and
/// then shared read-only between threads.
class QuadratureRule {
public:
    virtual ~QuadratureRule() = default;
    [[nodiscard]] virtual std::string_view name() const = 0;
    [[nodiscard]] std::shared_ptr<const NodeSet> nodes(std::size_t order, Precision bits) const;

protected:
    [[nodiscard]] virtual NodeSet build(std::size_t order, Precision bits) const = 0;

private:
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::size_t, Precision>, std::shared_ptr<const NodeSet>> cache_;
};

/// m-point Gauss-Legendre; roots by Newton on the three-term recurrence.
class GaussLegendreRule final : public QuadratureRule {
public:
    [[nodiscard]] std::string_view name() const override { return "gauss-legendre"; }

protected:
    [[nodiscard]] NodeSet build(std::size_t order, Precision bits) const override;
};

/// Clenshaw-Curtis on the order+1 Chebyshev extreme points (order even).
class ClenshawCurtisRule final : public QuadratureRule {
public:
    [[nodiscard]] std::string_view name() const override { return "clenshaw-curtis"; }

protected:
    [[nodiscard]] NodeSet build(std::size_t order, Precision bits) const override;
};

const QuadratureRule& gauss_legendre();
const QuadratureRule& clenshaw_curtis();

enum class IntegrandKind { cauchy_moment, F_at, h_at, h_general };

/// One of the log-weighted integrals over (0, inf):
///   cauchy_moment(n): int du / (u [pi^2 + ln^2 u] (1+u)^n)          = c_n / n!
///   F_at(z):          int (u+1) du / (u [pi^2 + ln^2 u] (u+1+z))     = z / ((1+z) ln(1+z))
///   h_at(n, t):       int (u+1) du / (u [pi^2 + ln^2 u] (u+1+t)^(n+1))
///   h_general(s, t):  same with real exponent s+1
class IntegrandSpec {
public:
    static IntegrandSpec cauchy_moment(std::size_t n);
    static IntegrandSpec F_at(const ExactRational& z);
    static IntegrandSpec h_at(std::size_t n, const ExactRational& t);
    static IntegrandSpec h_general(const ExactRational& s, const ExactRational& t);

    [[nodiscard]] IntegrandKind kind() const { return kind_; }
    [[nodiscard]] std::size_t n() const { return n_; }
    /// z for F_at, t for h kinds, 0 for moments.
    [[nodiscard]] const ExactRational& shift() const { return shift_; }
    /// n for h_at and moments, s for h_general, 0 for F_at.
    [[nodiscard]] const ExactRational& order() const { return order_; }

private:
    IntegrandSpec(IntegrandKind kind, std::size_t n, ExactRational shift, ExactRational order)
        : kind_(kind), n_(n), shift_(std::move(shift)), order_(std::move(order)) {}

    IntegrandKind kind_;
    std::size_t n_;
    ExactRational shift_;
    ExactRational order_;
};

/// The integrand after u = e^v, v = pi tan(theta), on [-pi/2, pi/2].
/// Every kind has the form (1/pi) (w+1)^a / (w+1+shift)^b with w = e^v.
class TransformedIntegrand {
public:
    TransformedIntegrand(const IntegrandSpec& spec, Precision bits);

    BigFloat operator()(const BigFloat& theta) const;
    [[nodiscard]] Precision precision() const { return bits_; }
    /// One-sided limits at theta = -pi/2 and +pi/2 (including the 1/pi factor).
    [[nodiscard]] const BigFloat& lower_limit() const { return lower_; }
    [[nodiscard]] const BigFloat& upper_limit() const { return upper_; }

private:
    Precision bits_;
    BigFloat num_power_;
    BigFloat den_power_;
    BigFloat shift_;
    BigFloat one_plus_shift_;
    BigFloat pi_;
    BigFloat half_pi_;
    BigFloat inv_pi_;
    BigFloat lower_;
    BigFloat upper_;
};

TransformedIntegrand transform_integrand(const IntegrandSpec& spec, Precision bits);

struct QuadResult {
    BigFloat value;
    BigFloat error_estimate;
    std::size_t nodes_used = 0;
    bool converged = false;
};

struct QuadratureConfig {
    const QuadratureRule* rule = &gauss_legendre();
    std::size_t initial_order = 16;
    std::size_t max_order = 2048;
};

/// Converts an exact tolerance at working precision; throws DomainError unless tol > 0.
BigFloat make_tolerance(const ExactRational& tol, Precision bits);

/// Integrates with orders m, 2m, 4m, ... until |I_2m - I_m| <= tol. Works at
/// precision + kGuardBits. Non-convergence within max_order is reported
/// through the flag with the best value.
QuadResult integrate(const IntegrandSpec& spec, const BigFloat& tol, Precision precision,
                     const QuadratureConfig& config = {});

QuadResult eval_F(const ExactRational& z, const BigFloat& tol, Precision precision);
QuadResult eval_h(std::size_t n, const ExactRational& t, const BigFloat& tol, Precision precision);
QuadResult eval_h_general(const ExactRational& s, const ExactRational& t, const BigFloat& tol,
                          Precision precision);
/// h_ell^(k)(t) = (-1)^k (ell+k)!/ell! h_{ell+k}(t).
QuadResult eval_h_derivative(std::size_t ell, std::size_t k, const ExactRational& t, const BigFloat& tol,
                             Precision precision);

/// z / ((1+z) ln(1+z)) evaluated directly, 1 at z = 0.
BigFloat F_closed_form(const ExactRational& z, Precision bits);

} // namespace cauchy2
