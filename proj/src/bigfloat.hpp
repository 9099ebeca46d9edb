#pragma once

#include <string>
#include <utility>

#include <mpfr.h>

#include "rational.hpp"

namespace cauchy2 {

using Precision = mpfr_prec_t;

/// Correctly rounded binary floating point with a per-value precision.
/// Binary operations round to the larger of the two operand precisions.
class BigFloat {
public:
    explicit BigFloat(Precision bits);
    BigFloat(long value, Precision bits);
    BigFloat(const ExactRational& value, Precision bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat pi(Precision bits);
    static BigFloat infinity(Precision bits);

    [[nodiscard]] Precision precision() const { return mpfr_get_prec(v_); }
    [[nodiscard]] mpfr_srcptr get() const { return v_; }
    [[nodiscard]] mpfr_ptr get() { return v_; }

    [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
    [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant decimal digits.
    [[nodiscard]] std::string to_string(int digits) const;

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat tan(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat max(const BigFloat& a, const BigFloat& b);

} // namespace cauchy2
