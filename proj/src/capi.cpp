#include "cauchy2/cauchy2.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "errors.hpp"
#include "exact_core.hpp"
#include "quadrature.hpp"
#include "verify.hpp"

using namespace cauchy2;

struct cauchy2_table {
    CauchyTable table;
};

struct cauchy2_quad {
    QuadResult result;
    Precision precision;
    ExactRational tol;
    std::optional<ExactRational> exact_reference;
    std::optional<BigFloat> float_reference;
};

struct cauchy2_verify_options {
    VerifyOptions options;
};

struct cauchy2_report {
    VerifyOptions options;
    VerifyResult result;
};

namespace {

thread_local std::string last_error;

cauchy2_status fail(cauchy2_status status, const std::string& message) {
    last_error = message;
    return status;
}

template <typename F>
cauchy2_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const DomainError& e) {
        return fail(CAUCHY2_E_DOMAIN, e.what());
    } catch (const CapacityError& e) {
        return fail(CAUCHY2_E_CAPACITY, e.what());
    } catch (const ParseError& e) {
        return fail(CAUCHY2_E_PARSE, e.what());
    } catch (const RouteMismatchError& e) {
        return fail(CAUCHY2_E_ROUTE_MISMATCH, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CAUCHY2_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(CAUCHY2_E_INTERNAL, e.what());
    } catch (...) {
        return fail(CAUCHY2_E_INTERNAL, "unknown exception");
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ExactRational parse_arg(const char* text, const char* what) {
    if (text == nullptr) throw ParseError(std::string(what) + " is null");
    return ExactRational::parse(text);
}

int default_digits(Precision bits) {
    return std::max(1, static_cast<int>(std::floor(static_cast<double>(bits) * 0.30102999566398120)));
}

int digits_or_default(unsigned digits, Precision bits) {
    return digits == 0 ? default_digits(bits) : static_cast<int>(digits);
}

Precision checked_precision(unsigned precision) {
    if (precision < 2) throw DomainError("precision must be at least 2 bits");
    return static_cast<Precision>(precision);
}

cauchy2_status finish_quad(QuadResult result, Precision precision, const ExactRational& tol,
                           std::optional<ExactRational> exact_ref, std::optional<BigFloat> float_ref,
                           cauchy2_quad** out) {
    *out = new cauchy2_quad{std::move(result), precision, tol, std::move(exact_ref), std::move(float_ref)};
    return CAUCHY2_OK;
}

ExactRational exact_mu(std::size_t n) { return cauchy_via_series(n, std::max(n, kDefaultTableBound)).mu(n); }

BigFloat reference_value(const cauchy2_quad& q) {
    const Precision work = q.precision + kGuardBits;
    if (q.exact_reference) return BigFloat(*q.exact_reference, work);
    if (q.float_reference) return *q.float_reference;
    throw DomainError("this integral has no known reference value");
}

} // namespace

extern "C" {

const char* cauchy2_version(void) { return kToolkitVersion.data(); }

const char* cauchy2_last_error(void) { return last_error.c_str(); }

void cauchy2_string_free(char* s) { std::free(s); }

cauchy2_status cauchy2_parse_rational(const char* text, char** out) {
    return guarded([&] {
        if (out == nullptr) return fail(CAUCHY2_E_NULL, "output pointer is null");
        *out = copy_string(parse_arg(text, "text").to_string());
        return CAUCHY2_OK;
    });
}

// ---- tables ---------------------------------------------------------------

cauchy2_status cauchy2_table_create(size_t n_max, size_t table_bound, cauchy2_table** out) {
    return guarded([&] {
        if (out == nullptr) return fail(CAUCHY2_E_NULL, "output pointer is null");
        const std::size_t bound = table_bound == 0 ? kDefaultTableBound : table_bound;
        *out = new cauchy2_table{cross_checked_table(n_max, bound)};
        return CAUCHY2_OK;
    });
}

void cauchy2_table_destroy(cauchy2_table* table) { delete table; }

cauchy2_status cauchy2_table_n_max(const cauchy2_table* table, size_t* out) {
    if (table == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
    *out = table->table.n_max();
    return CAUCHY2_OK;
}

extern "C++" {
namespace {

template <typename Render>
cauchy2_status table_value(const cauchy2_table* table, char** out, Render render) {
    return guarded([&] {
        if (table == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
        *out = copy_string(render(table->table));
        return CAUCHY2_OK;
    });
}

} // namespace
} // extern "C++"

cauchy2_status cauchy2_table_c(const cauchy2_table* table, size_t n, char** out) {
    return table_value(table, out, [n](const CauchyTable& t) { return t.c(n).to_string(); });
}

cauchy2_status cauchy2_table_mu(const cauchy2_table* table, size_t n, char** out) {
    return table_value(table, out, [n](const CauchyTable& t) { return t.mu(n).to_string(); });
}

cauchy2_status cauchy2_table_c_decimal(const cauchy2_table* table, size_t n, unsigned digits, char** out) {
    return table_value(table, out, [=](const CauchyTable& t) {
        return t.c(n).to_decimal(digits == 0 ? 30 : static_cast<int>(digits));
    });
}

cauchy2_status cauchy2_table_mu_decimal(const cauchy2_table* table, size_t n, unsigned digits, char** out) {
    return table_value(table, out, [=](const CauchyTable& t) {
        return t.mu(n).to_decimal(digits == 0 ? 30 : static_cast<int>(digits));
    });
}

// ---- quadrature -----------------------------------------------------------

cauchy2_status cauchy2_quad_moment(size_t n, const char* tol, unsigned precision, cauchy2_rule rule,
                                   cauchy2_quad** out) {
    return guarded([&] {
        if (out == nullptr) return fail(CAUCHY2_E_NULL, "output pointer is null");
        const Precision bits = checked_precision(precision);
        const ExactRational tol_q = parse_arg(tol, "tol");
        QuadratureConfig config;
        if (rule == CAUCHY2_RULE_CLENSHAW_CURTIS) config.rule = &clenshaw_curtis();
        else if (rule != CAUCHY2_RULE_GAUSS_LEGENDRE) return fail(CAUCHY2_E_DOMAIN, "unknown quadrature rule");
        QuadResult r = integrate(IntegrandSpec::cauchy_moment(n), make_tolerance(tol_q, bits + kGuardBits), bits,
                                 config);
        return finish_quad(std::move(r), bits, tol_q, exact_mu(n), std::nullopt, out);
    });
}

cauchy2_status cauchy2_eval_F(const char* z, const char* tol, unsigned precision, cauchy2_quad** out) {
    return guarded([&] {
        if (out == nullptr) return fail(CAUCHY2_E_NULL, "output pointer is null");
        const Precision bits = checked_precision(precision);
        const ExactRational z_q = parse_arg(z, "z");
        const ExactRational tol_q = parse_arg(tol, "tol");
        QuadResult r = eval_F(z_q, make_tolerance(tol_q, bits + kGuardBits), bits);
        std::optional<ExactRational> exact;
        if (z_q.is_zero()) exact = ExactRational(1);
        return finish_quad(std::move(r), bits, tol_q, exact, F_closed_form(z_q, bits + kGuardBits), out);
    });
}

cauchy2_status cauchy2_eval_h(size_t n, const char* t, const char* tol, unsigned precision, cauchy2_quad** out) {
    return guarded([&] {
        if (out == nullptr) return fail(CAUCHY2_E_NULL, "output pointer is null");
        const Precision bits = checked_precision(precision);
        const ExactRational t_q = parse_arg(t, "t");
        const ExactRational tol_q = parse_arg(tol, "tol");
        QuadResult r = eval_h(n, t_q, make_tolerance(tol_q, bits + kGuardBits), bits);
        std::optional<ExactRational> exact;
        if (t_q.is_zero()) exact = exact_mu(n);
        return finish_quad(std::move(r), bits, tol_q, exact, std::nullopt, out);
    });
}

cauchy2_status cauchy2_eval_h_general(const char* s, const char* t, const char* tol, unsigned precision,
                                      cauchy2_quad** out) {
    return guarded([&] {
        if (out == nullptr) return fail(CAUCHY2_E_NULL, "output pointer is null");
        const Precision bits = checked_precision(precision);
        const ExactRational s_q = parse_arg(s, "s");
        const ExactRational t_q = parse_arg(t, "t");
        const ExactRational tol_q = parse_arg(tol, "tol");
        QuadResult r = eval_h_general(s_q, t_q, make_tolerance(tol_q, bits + kGuardBits), bits);
        std::optional<ExactRational> exact;
        if (t_q.is_zero() && s_q.is_integer() && s_q.sign() >= 0)
            exact = exact_mu(s_q.numerator().get_ui());
        return finish_quad(std::move(r), bits, tol_q, exact, std::nullopt, out);
    });
}

cauchy2_status cauchy2_eval_h_derivative(size_t ell, size_t k, const char* t, const char* tol, unsigned precision,
                                         cauchy2_quad** out) {
    return guarded([&] {
        if (out == nullptr) return fail(CAUCHY2_E_NULL, "output pointer is null");
        const Precision bits = checked_precision(precision);
        const ExactRational t_q = parse_arg(t, "t");
        const ExactRational tol_q = parse_arg(tol, "tol");
        QuadResult r = eval_h_derivative(ell, k, t_q, make_tolerance(tol_q, bits + kGuardBits), bits);
        std::optional<ExactRational> exact;
        if (t_q.is_zero()) {
            // (-1)^k c_{ell+k} / ell!
            const auto table = cauchy_via_series(ell + k, std::max(ell + k, kDefaultTableBound));
            ExactRational v = table.c(ell + k) / ExactRational(factorial(static_cast<unsigned>(ell)));
            exact = k % 2 == 1 ? -v : v;
        }
        return finish_quad(std::move(r), bits, tol_q, exact, std::nullopt, out);
    });
}

void cauchy2_quad_destroy(cauchy2_quad* q) { delete q; }

cauchy2_status cauchy2_quad_value(const cauchy2_quad* q, unsigned digits, char** out) {
    return guarded([&] {
        if (q == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
        *out = copy_string(q->result.value.to_string(digits_or_default(digits, q->precision)));
        return CAUCHY2_OK;
    });
}

cauchy2_status cauchy2_quad_value_double(const cauchy2_quad* q, double* out) {
    if (q == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
    *out = q->result.value.to_double();
    return CAUCHY2_OK;
}

cauchy2_status cauchy2_quad_error_estimate(const cauchy2_quad* q, unsigned digits, char** out) {
    return guarded([&] {
        if (q == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
        *out = copy_string(q->result.error_estimate.to_string(digits == 0 ? 6 : static_cast<int>(digits)));
        return CAUCHY2_OK;
    });
}

cauchy2_status cauchy2_quad_tolerance(const cauchy2_quad* q, char** out) {
    return guarded([&] {
        if (q == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
        *out = copy_string(q->tol.to_string());
        return CAUCHY2_OK;
    });
}

cauchy2_status cauchy2_quad_nodes_used(const cauchy2_quad* q, size_t* out) {
    if (q == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
    *out = q->result.nodes_used;
    return CAUCHY2_OK;
}

cauchy2_status cauchy2_quad_converged(const cauchy2_quad* q, int* out) {
    if (q == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
    *out = q->result.converged ? 1 : 0;
    return CAUCHY2_OK;
}

cauchy2_status cauchy2_quad_has_reference(const cauchy2_quad* q, int* out) {
    if (q == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
    *out = (q->exact_reference || q->float_reference) ? 1 : 0;
    return CAUCHY2_OK;
}

cauchy2_status cauchy2_quad_reference(const cauchy2_quad* q, unsigned digits, char** out) {
    return guarded([&] {
        if (q == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
        *out = copy_string(reference_value(*q).to_string(digits_or_default(digits, q->precision)));
        return CAUCHY2_OK;
    });
}

cauchy2_status cauchy2_quad_reference_exact(const cauchy2_quad* q, char** out) {
    return guarded([&] {
        if (q == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
        if (!q->exact_reference) return fail(CAUCHY2_E_DOMAIN, "reference value is not exact");
        *out = copy_string(q->exact_reference->to_string());
        return CAUCHY2_OK;
    });
}

cauchy2_status cauchy2_quad_deviation(const cauchy2_quad* q, unsigned digits, char** out) {
    return guarded([&] {
        if (q == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
        *out = copy_string(abs(q->result.value - reference_value(*q)).to_string(digits == 0 ? 6
                                                                                            : static_cast<int>(digits)));
        return CAUCHY2_OK;
    });
}

cauchy2_status cauchy2_quad_deviation_within(const cauchy2_quad* q, const char* factor, int* out) {
    return guarded([&] {
        if (q == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
        const Precision work = q->precision + kGuardBits;
        const BigFloat bound(parse_arg(factor, "factor") * q->tol, work);
        *out = abs(q->result.value - reference_value(*q)) <= bound ? 1 : 0;
        return CAUCHY2_OK;
    });
}

// ---- verification ---------------------------------------------------------

cauchy2_status cauchy2_verify_options_create(cauchy2_verify_options** out) {
    return guarded([&] {
        if (out == nullptr) return fail(CAUCHY2_E_NULL, "output pointer is null");
        *out = new cauchy2_verify_options{};
        return CAUCHY2_OK;
    });
}

void cauchy2_verify_options_destroy(cauchy2_verify_options* options) { delete options; }

extern "C++" {
namespace {

template <typename F>
cauchy2_status with_options(cauchy2_verify_options* options, F&& f) {
    return guarded([&] {
        if (options == nullptr) return fail(CAUCHY2_E_NULL, "options handle is null");
        f(options->options);
        return CAUCHY2_OK;
    });
}

} // namespace
} // extern "C++"

cauchy2_status cauchy2_verify_options_set_suites(cauchy2_verify_options* options, const char* suites) {
    return with_options(options, [&](VerifyOptions& o) {
        if (suites == nullptr) throw ParseError("suite list is null");
        o.suites = parse_suite_selection(suites);
    });
}

cauchy2_status cauchy2_verify_options_set_n_bound(cauchy2_verify_options* options, size_t n_bound) {
    return with_options(options, [&](VerifyOptions& o) {
        if (n_bound < 2) throw DomainError("n-bound must be at least 2");
        o.n_bound = n_bound;
    });
}

cauchy2_status cauchy2_verify_options_set_cm_depth(cauchy2_verify_options* options, size_t depth) {
    return with_options(options, [&](VerifyOptions& o) { o.cm_depth = depth; });
}

cauchy2_status cauchy2_verify_options_set_epsilons(cauchy2_verify_options* options, const char* epsilons) {
    return with_options(options, [&](VerifyOptions& o) {
        if (epsilons == nullptr) throw ParseError("epsilon list is null");
        std::vector<ExactRational> parsed;
        const std::string_view text(epsilons);
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t comma = std::min(text.find(',', start), text.size());
            const ExactRational eps = ExactRational::parse(text.substr(start, comma - start));
            if (eps.sign() <= 0) throw DomainError("epsilon must be positive, got " + eps.to_string());
            parsed.push_back(eps);
            start = comma + 1;
        }
        o.epsilons = std::move(parsed);
    });
}

cauchy2_status cauchy2_verify_options_set_depth(cauchy2_verify_options* options, size_t depth) {
    return with_options(options, [&](VerifyOptions& o) { o.depth = depth; });
}

cauchy2_status cauchy2_verify_options_set_seed(cauchy2_verify_options* options, uint64_t seed) {
    return with_options(options, [&](VerifyOptions& o) { o.seed = seed; });
}

cauchy2_status cauchy2_verify_options_set_table_bound(cauchy2_verify_options* options, size_t bound) {
    return with_options(options, [&](VerifyOptions& o) { o.table_bound = bound; });
}

cauchy2_status cauchy2_verify_options_json(const cauchy2_verify_options* options, char** out) {
    return guarded([&] {
        if (options == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
        *out = copy_string(options_json(options->options).dump());
        return CAUCHY2_OK;
    });
}

const char* cauchy2_suite_names(void) {
    static const std::string joined = [] {
        std::string s;
        for (const auto& n : suite_names()) s += (s.empty() ? "" : ",") + n;
        return s;
    }();
    return joined.c_str();
}

cauchy2_status cauchy2_verify_run(const cauchy2_verify_options* options, cauchy2_report** out) {
    return guarded([&] {
        if (options == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
        *out = new cauchy2_report{options->options, run_verify(options->options)};
        return CAUCHY2_OK;
    });
}

void cauchy2_report_destroy(cauchy2_report* report) { delete report; }

cauchy2_status cauchy2_report_ok(const cauchy2_report* report, int* out) {
    if (report == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
    *out = report->result.ok() ? 1 : 0;
    return CAUCHY2_OK;
}

cauchy2_status cauchy2_report_counts(const cauchy2_report* report, size_t* passed, size_t* failed,
                                     size_t* discrepancies) {
    if (report == nullptr) return fail(CAUCHY2_E_NULL, "report handle is null");
    if (passed != nullptr) *passed = report->result.passed();
    if (failed != nullptr) *failed = report->result.failed();
    if (discrepancies != nullptr) {
        std::size_t d = 0;
        for (const auto& r : report->result.reports)
            if (is_discrepancy_suite(r.suite) && r.failed > 0) ++d;
        *discrepancies = d;
    }
    return CAUCHY2_OK;
}

cauchy2_status cauchy2_report_render(const cauchy2_report* report, cauchy2_format format, char** out) {
    return guarded([&] {
        if (report == nullptr || out == nullptr) return fail(CAUCHY2_E_NULL, "null argument");
        switch (format) {
        case CAUCHY2_FORMAT_PLAIN: *out = copy_string(verify_plain(report->result, report->options)); break;
        case CAUCHY2_FORMAT_CSV: *out = copy_string(verify_csv(report->result)); break;
        case CAUCHY2_FORMAT_JSON: *out = copy_string(verify_json(report->result, report->options).dump(2) + "\n"); break;
        default: return fail(CAUCHY2_E_DOMAIN, "unknown output format");
        }
        return CAUCHY2_OK;
    });
}

} // extern "C"
