#include "quadrature.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace cauchy2 {

std::shared_ptr<const NodeSet> QuadratureRule::nodes(std::size_t order, Precision bits) const {
    const auto key = std::make_pair(order, bits);
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    // Built outside the lock; a racing builder produces an identical table.
    auto built = std::make_shared<const NodeSet>(build(order, bits));
    std::lock_guard lock(mutex_);
    return cache_.emplace(key, std::move(built)).first->second;
}

namespace {

// P_m(x) and P_m'(x) by the three-term recurrence.
void legendre(std::size_t m, mpfr_srcptr x, mpfr_ptr p, mpfr_ptr dp, mpfr_ptr prev, mpfr_ptr tmp) {
    mpfr_set_ui(prev, 1, MPFR_RNDN);
    mpfr_set(p, x, MPFR_RNDN);
    for (std::size_t k = 2; k <= m; ++k) {
        // p_k = ((2k-1) x p_{k-1} - (k-1) p_{k-2}) / k
        mpfr_mul(tmp, x, p, MPFR_RNDN);
        mpfr_mul_ui(tmp, tmp, static_cast<unsigned long>(2 * k - 1), MPFR_RNDN);
        mpfr_mul_ui(prev, prev, static_cast<unsigned long>(k - 1), MPFR_RNDN);
        mpfr_sub(tmp, tmp, prev, MPFR_RNDN);
        mpfr_div_ui(tmp, tmp, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_swap(prev, p);
        mpfr_swap(p, tmp);
    }
    // P' = m (x P_m - P_{m-1}) / (x^2 - 1)
    mpfr_mul(dp, x, p, MPFR_RNDN);
    mpfr_sub(dp, dp, prev, MPFR_RNDN);
    mpfr_mul_ui(dp, dp, static_cast<unsigned long>(m), MPFR_RNDN);
    mpfr_sqr(tmp, x, MPFR_RNDN);
    mpfr_sub_ui(tmp, tmp, 1, MPFR_RNDN);
    mpfr_div(dp, dp, tmp, MPFR_RNDN);
}

long double legendre_newton_ld(std::size_t m, long double x) {
    for (int it = 0; it < 100; ++it) {
        long double prev = 1.0L;
        long double p = x;
        for (std::size_t k = 2; k <= m; ++k) {
            const long double next = ((2.0L * k - 1.0L) * x * p - (k - 1.0L) * prev) / static_cast<long double>(k);
            prev = p;
            p = next;
        }
        const long double dp = static_cast<long double>(m) * (x * p - prev) / (x * x - 1.0L);
        const long double dx = p / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-19L) break;
    }
    return x;
}

} // namespace

NodeSet GaussLegendreRule::build(std::size_t m, Precision bits) const {
    if (m < 1) throw DomainError("Gauss-Legendre order must be positive");
    NodeSet ns;
    ns.x.reserve(m);
    ns.w.reserve(m);

    BigFloat x(bits), p(bits), dp(bits), prev(bits), tmp(bits), dx(bits), weight(bits);
    BigFloat threshold(bits);
    mpfr_set_ui_2exp(threshold.get(), 1, -(bits - 4), MPFR_RNDN);

    auto weight_at = [&](const BigFloat& root) {
        legendre(m, root.get(), p.get(), dp.get(), prev.get(), tmp.get());
        // w = 2 / ((1 - x^2) P'(x)^2)
        mpfr_sqr(tmp.get(), root.get(), MPFR_RNDN);
        mpfr_ui_sub(tmp.get(), 1, tmp.get(), MPFR_RNDN);
        mpfr_sqr(weight.get(), dp.get(), MPFR_RNDN);
        mpfr_mul(weight.get(), weight.get(), tmp.get(), MPFR_RNDN);
        mpfr_ui_div(weight.get(), 2, weight.get(), MPFR_RNDN);
        return weight;
    };

    const long double pi_ld = 3.141592653589793238462643383279502884L;
    for (std::size_t i = 1; i <= m / 2; ++i) {
        const long double guess =
            std::cos(pi_ld * (static_cast<long double>(i) - 0.25L) / (static_cast<long double>(m) + 0.5L));
        mpfr_set_ld(x.get(), legendre_newton_ld(m, guess), MPFR_RNDN);
        for (int it = 0; it < 64; ++it) {
            legendre(m, x.get(), p.get(), dp.get(), prev.get(), tmp.get());
            mpfr_div(dx.get(), p.get(), dp.get(), MPFR_RNDN);
            mpfr_sub(x.get(), x.get(), dx.get(), MPFR_RNDN);
            mpfr_abs(dx.get(), dx.get(), MPFR_RNDN);
            if (dx <= threshold) break;
        }
        const BigFloat w = weight_at(x);
        ns.x.push_back(x);
        ns.w.push_back(w);
        ns.x.push_back(-x);
        ns.w.push_back(w);
    }
    if (m % 2 == 1) {
        const BigFloat zero(0L, bits);
        ns.w.push_back(weight_at(zero));
        ns.x.push_back(zero);
    }
    return ns;
}

NodeSet ClenshawCurtisRule::build(std::size_t order, Precision bits) const {
    if (order < 2 || order % 2 != 0) throw DomainError("Clenshaw-Curtis order must be even and >= 2");
    const std::size_t n = order;
    // cos(j pi / n) for j = 0 .. 2n-1
    std::vector<BigFloat> cosines;
    cosines.reserve(2 * n);
    const BigFloat step = BigFloat::pi(bits) / BigFloat(static_cast<long>(n), bits);
    for (std::size_t j = 0; j < 2 * n; ++j) cosines.push_back(cos(step * BigFloat(static_cast<long>(j), bits)));

    NodeSet ns;
    ns.x.reserve(n + 1);
    ns.w.reserve(n + 1);
    const BigFloat one(1L, bits);
    for (std::size_t j = 0; j <= n; ++j) {
        BigFloat acc(bits);
        for (std::size_t k = 1; k <= n / 2; ++k) {
            const long b = (k == n / 2) ? 1 : 2;
            const long denom = static_cast<long>(4 * k * k - 1);
            acc += BigFloat(b, bits) / BigFloat(denom, bits) * cosines[(2 * k * j) % (2 * n)];
        }
        const long c = (j == 0 || j == n) ? 1 : 2;
        ns.w.push_back(BigFloat(c, bits) / BigFloat(static_cast<long>(n), bits) * (one - acc));
        ns.x.push_back(cosines[j]);
    }
    // Pin the endpoints exactly so the integrand sees theta = +-pi/2.
    ns.x.front() = one;
    ns.x.back() = -one;
    return ns;
}

const QuadratureRule& gauss_legendre() {
    static const GaussLegendreRule rule;
    return rule;
}

const QuadratureRule& clenshaw_curtis() {
    static const ClenshawCurtisRule rule;
    return rule;
}

IntegrandSpec IntegrandSpec::cauchy_moment(std::size_t n) {
    return {IntegrandKind::cauchy_moment, n, ExactRational(0), ExactRational(static_cast<long>(n))};
}

IntegrandSpec IntegrandSpec::F_at(const ExactRational& z) {
    if (z <= ExactRational(-1)) throw DomainError("F(z) requires z > -1, got " + z.to_string());
    return {IntegrandKind::F_at, 0, z, ExactRational(1)};
}

IntegrandSpec IntegrandSpec::h_at(std::size_t n, const ExactRational& t) {
    if (t.sign() < 0) throw DomainError("h_n(t) requires t >= 0, got " + t.to_string());
    return {IntegrandKind::h_at, n, t, ExactRational(static_cast<long>(n))};
}

IntegrandSpec IntegrandSpec::h_general(const ExactRational& s, const ExactRational& t) {
    if (s.sign() < 0) throw DomainError("h(t; s) requires s >= 0, got " + s.to_string());
    if (t.sign() < 0) throw DomainError("h(t; s) requires t >= 0, got " + t.to_string());
    return {IntegrandKind::h_general, 0, t, s};
}

TransformedIntegrand::TransformedIntegrand(const IntegrandSpec& spec, Precision bits)
    : bits_(bits),
      num_power_(bits),
      den_power_(bits),
      shift_(spec.shift(), bits),
      one_plus_shift_(spec.shift() + ExactRational(1), bits),
      pi_(BigFloat::pi(bits)),
      half_pi_(bits),
      inv_pi_(bits),
      lower_(bits),
      upper_(bits) {
    half_pi_ = pi_ / BigFloat(2L, bits);
    inv_pi_ = BigFloat(1L, bits) / pi_;
    if (spec.kind() == IntegrandKind::cauchy_moment) {
        num_power_ = BigFloat(0L, bits);
        den_power_ = BigFloat(spec.order(), bits);
    } else {
        num_power_ = BigFloat(1L, bits);
        den_power_ = BigFloat(spec.order() + ExactRational(spec.kind() == IntegrandKind::F_at ? 0 : 1), bits);
    }
    // theta -> -pi/2: w -> 0, value (1 + shift)^(-b).
    lower_ = inv_pi_ * exp(-(den_power_ * log(one_plus_shift_)));
    // theta -> +pi/2: w^(a-b) -> 0 when a < b; the ratio tends to 1 when a = b.
    const BigFloat excess = num_power_ - den_power_;
    upper_ = excess.sign() < 0 ? BigFloat(0L, bits) : inv_pi_;
}

BigFloat TransformedIntegrand::operator()(const BigFloat& theta) const {
    if (theta >= half_pi_) return upper_;
    if (theta <= -half_pi_) return lower_;
    const BigFloat v = pi_ * tan(theta);
    if (!v.is_finite()) return v.sign() > 0 ? upper_ : lower_;

    BigFloat exponent(bits_);
    if (v.sign() > 0) {
        // log(1+w) = v + log1p(e^-v), log(1+w+s) = v + log1p((1+s) e^-v); never overflows.
        const BigFloat r = exp(-v);
        exponent = (num_power_ - den_power_) * v + num_power_ * log1p(r) - den_power_ * log1p(one_plus_shift_ * r);
    } else {
        const BigFloat w = exp(v);
        exponent = num_power_ * log1p(w) - den_power_ * log1p(w + shift_);
    }
    return inv_pi_ * exp(exponent);
}

TransformedIntegrand transform_integrand(const IntegrandSpec& spec, Precision bits) {
    return TransformedIntegrand(spec, bits);
}

BigFloat make_tolerance(const ExactRational& tol, Precision bits) {
    if (tol.sign() <= 0) throw DomainError("tolerance must be positive, got " + tol.to_string());
    return BigFloat(tol, bits);
}

QuadResult integrate(const IntegrandSpec& spec, const BigFloat& tol, Precision precision,
                     const QuadratureConfig& config) {
    if (tol.sign() <= 0 || !tol.is_finite()) throw DomainError("tolerance must be positive and finite");
    if (precision < 2) throw DomainError("precision must be at least 2 bits");
    const Precision work = precision + kGuardBits;
    const TransformedIntegrand f(spec, work);
    const BigFloat half_pi = BigFloat::pi(work) / BigFloat(2L, work);
    BigFloat work_tol(work);
    mpfr_set(work_tol.get(), tol.get(), MPFR_RNDN);

    QuadResult result{BigFloat(work), BigFloat::infinity(work), 0, false};
    auto apply = [&](std::size_t order) {
        const auto ns = config.rule->nodes(order, work);
        BigFloat sum(work);
        for (std::size_t i = 0; i < ns->x.size(); ++i) sum += ns->w[i] * f(half_pi * ns->x[i]);
        result.nodes_used += ns->x.size();
        return half_pi * sum;
    };

    std::size_t order = config.initial_order;
    BigFloat previous = apply(order);
    result.value = previous;
    while (order * 2 <= config.max_order) {
        order *= 2;
        BigFloat current = apply(order);
        // two rules can agree to the last bit; the error is still no smaller than the rounding level
        const BigFloat rounding = abs(current) * BigFloat(ExactRational(BigInt(1), BigInt(1) << static_cast<unsigned long>(work)), work);
        result.error_estimate = max(abs(current - previous), rounding);
        result.value = current;
        if (result.error_estimate <= work_tol) {
            result.converged = true;
            break;
        }
        previous = std::move(current);
    }
    return result;
}

QuadResult eval_F(const ExactRational& z, const BigFloat& tol, Precision precision) {
    return integrate(IntegrandSpec::F_at(z), tol, precision);
}

QuadResult eval_h(std::size_t n, const ExactRational& t, const BigFloat& tol, Precision precision) {
    return integrate(IntegrandSpec::h_at(n, t), tol, precision);
}

QuadResult eval_h_general(const ExactRational& s, const ExactRational& t, const BigFloat& tol,
                          Precision precision) {
    return integrate(IntegrandSpec::h_general(s, t), tol, precision);
}

QuadResult eval_h_derivative(std::size_t ell, std::size_t k, const ExactRational& t, const BigFloat& tol,
                             Precision precision) {
    const Precision work = precision + kGuardBits;
    BigInt ratio = 1;
    for (std::size_t j = ell + 1; j <= ell + k; ++j) ratio *= static_cast<unsigned long>(j);
    const BigFloat factor(ExactRational(ratio), work);
    QuadResult r = eval_h(ell + k, t, tol / factor, precision);
    r.value = factor * r.value;
    if (k % 2 == 1) r.value = -r.value;
    r.error_estimate = factor * r.error_estimate;
    return r;
}

BigFloat F_closed_form(const ExactRational& z, Precision bits) {
    if (z <= ExactRational(-1)) throw DomainError("F(z) requires z > -1, got " + z.to_string());
    if (z.is_zero()) return BigFloat(1L, bits);
    const BigFloat zf(z, bits);
    return zf / ((BigFloat(1L, bits) + zf) * log1p(zf));
}

} // namespace cauchy2
