#include "rational.hpp"

#include <cctype>
#include <cmath>
#include <memory>

#include <mpfr.h>

#include "errors.hpp"

namespace cauchy2 {

ExactRational::ExactRational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.is_zero()) throw DomainError("division by zero rational");
    q_ /= o.q_;
    return *this;
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw ParseError("malformed number: '" + std::string(whole) + "'");
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("malformed number: '" + std::string(whole) + "'");
    }
    return BigInt(std::string(digits), 10);
}

BigInt pow10(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace

ExactRational ExactRational::parse(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty number");

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    ExactRational value;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(text.substr(0, slash), whole);
        const BigInt den = parse_integer(text.substr(slash + 1), whole);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
        value = ExactRational(num, den);
    } else {
        long exponent = 0;
        if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_text = text.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            const BigInt mag = parse_integer(exp_text, whole);
            if (mag > 100000) throw ParseError("exponent out of range in '" + std::string(whole) + "'");
            exponent = mag.get_si();
            if (exp_negative) exponent = -exponent;
            text = text.substr(0, e);
        }
        std::string digits;
        if (const auto dot = text.find('.'); dot != std::string_view::npos) {
            const std::string_view int_part = text.substr(0, dot);
            const std::string_view frac_part = text.substr(dot + 1);
            if (int_part.empty() && frac_part.empty())
                throw ParseError("malformed number: '" + std::string(whole) + "'");
            digits = std::string(int_part) + std::string(frac_part);
            exponent -= static_cast<long>(frac_part.size());
        } else {
            digits = std::string(text);
        }
        const BigInt mantissa = parse_integer(digits, whole);
        if (exponent >= 0) {
            value = ExactRational(BigInt(mantissa * pow10(static_cast<unsigned long>(exponent))));
        } else {
            value = ExactRational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
        }
    }
    return negative ? -value : value;
}

std::string ExactRational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string ExactRational::to_decimal(int digits) const {
    if (digits < 1) digits = 1;
    if (is_zero()) return "0";
    mpfr_t x;
    mpfr_init2(x, static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16);
    mpfr_set_q(x, q_.get_mpq_t(), MPFR_RNDN);
    mpfr_exp_t exp10 = 0;
    std::unique_ptr<char, void (*)(char*)> raw(
        mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), x, MPFR_RNDN), mpfr_free_str);
    mpfr_clear(x);
    std::string mant(raw.get());
    std::string sign;
    if (!mant.empty() && mant.front() == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp10) - 1);
    return out;
}

ExactRational abs(const ExactRational& x) { return x.sign() < 0 ? -x : x; }

ExactRational pow(const ExactRational& base, unsigned exponent) {
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return ExactRational(num, den);
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace cauchy2
