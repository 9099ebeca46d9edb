#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cauchy2 {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    explicit ExactRational(const BigInt& value) : q_(value) {}
    ExactRational(const BigInt& num, const BigInt& den);
    explicit ExactRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Accepts "p", "p/q", and exact decimals such as "-1.25", "1e-12", "0.5E3".
    static ExactRational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

    /// "p/q", or "p" for integers.
    [[nodiscard]] std::string to_string() const;
    /// Rounded decimal, scientific notation with `digits` significant digits.
    [[nodiscard]] std::string to_decimal(int digits) const;
    [[nodiscard]] double to_double() const { return q_.get_d(); }

    ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator-(const ExactRational& a) { return ExactRational(mpq_class(-a.q_)); }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_{0};
};

ExactRational abs(const ExactRational& x);
ExactRational pow(const ExactRational& base, unsigned exponent);
BigInt factorial(unsigned n);

} // namespace cauchy2
