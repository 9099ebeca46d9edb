#include "bigfloat.hpp"

#include <algorithm>
#include <memory>

namespace cauchy2 {

BigFloat::BigFloat(Precision bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(long value, Precision bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const ExactRational& value, Precision bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, other.precision());
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(Precision bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::infinity(Precision bits) {
    BigFloat r(bits);
    mpfr_set_inf(r.v_, 1);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t exp10 = 0;
    std::unique_ptr<char, void (*)(char*)> raw(
        mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(std::max(digits, 1)), v_, MPFR_RNDN), mpfr_free_str);
    std::string mant(raw.get());
    std::string sign_str;
    if (mant.front() == '-') {
        sign_str = "-";
        mant.erase(0, 1);
    }
    std::string out = sign_str + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp10) - 1);
    return out;
}

namespace {

template <typename Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
    BigFloat r(std::max(a.precision(), b.precision()));
    op(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

template <typename Op>
BigFloat unary(const BigFloat& a, Op op) {
    BigFloat r(a.precision());
    op(r.get(), a.get(), MPFR_RNDN);
    return r;
}

} // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }
BigFloat operator-(const BigFloat& a) { return unary(a, mpfr_neg); }

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat log1p(const BigFloat& x) { return unary(x, mpfr_log1p); }
BigFloat tan(const BigFloat& x) { return unary(x, mpfr_tan); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat pow(const BigFloat& base, const BigFloat& exponent) { return binary(base, exponent, mpfr_pow); }
BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

} // namespace cauchy2
