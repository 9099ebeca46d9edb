// cauchy2 command-line front end. Talks to the library only through the C API.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cauchy2/cauchy2.h"
#include "run_config.hpp"

namespace {

using cauchy2::cli::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 1;
constexpr int kExitInternal = 2;
constexpr int kExitNoConvergence = 3;

struct StatusError {
    cauchy2_status status;
    std::string message;
};

void check(cauchy2_status status) {
    if (status != CAUCHY2_OK) throw StatusError{status, cauchy2_last_error()};
}

int exit_code_for(cauchy2_status status) {
    switch (status) {
    case CAUCHY2_E_DOMAIN:
    case CAUCHY2_E_CAPACITY:
    case CAUCHY2_E_PARSE:
    case CAUCHY2_E_NULL: return kExitBadArgs;
    default: return kExitInternal;
    }
}

std::string take(char* s) {
    std::string out(s);
    cauchy2_string_free(s);
    return out;
}

template <typename Getter>
std::string get_string(Getter getter) {
    char* s = nullptr;
    check(getter(&s));
    return take(s);
}

struct TableDeleter { void operator()(cauchy2_table* t) const { cauchy2_table_destroy(t); } };
struct QuadDeleter { void operator()(cauchy2_quad* q) const { cauchy2_quad_destroy(q); } };
struct OptionsDeleter { void operator()(cauchy2_verify_options* o) const { cauchy2_verify_options_destroy(o); } };
struct ReportDeleter { void operator()(cauchy2_report* r) const { cauchy2_report_destroy(r); } };

unsigned digits_for(unsigned precision) { return std::max(1u, static_cast<unsigned>(precision * 0.30103)); }

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw StatusError{CAUCHY2_E_DOMAIN, "cannot open output file '" + cfg.out + "'"};
    f << text;
}

int run_compute(const RunConfig& cfg) {
    cauchy2_table* raw = nullptr;
    check(cauchy2_table_create(cfg.n_max, cfg.table_bound, &raw));
    std::unique_ptr<cauchy2_table, TableDeleter> table(raw);
    const unsigned digits = digits_for(cfg.precision);

    std::ostringstream os;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    if (cfg.format == "csv") os << "n,c_n,mu_n,c_n_decimal,mu_n_decimal\n";
    if (cfg.format == "plain") os << "n\tc_n\tc_n/n!\tdecimal(c_n)\n";
    for (std::size_t n = 0; n <= cfg.n_max; ++n) {
        const std::string c = get_string([&](char** s) { return cauchy2_table_c(table.get(), n, s); });
        const std::string mu = get_string([&](char** s) { return cauchy2_table_mu(table.get(), n, s); });
        const std::string cd = get_string([&](char** s) { return cauchy2_table_c_decimal(table.get(), n, digits, s); });
        const std::string md = get_string([&](char** s) { return cauchy2_table_mu_decimal(table.get(), n, digits, s); });
        if (cfg.format == "csv") {
            os << n << ',' << c << ',' << mu << ',' << cd << ',' << md << '\n';
        } else if (cfg.format == "json") {
            rows.push_back({{"n", n}, {"c", c}, {"mu", mu}, {"c_decimal", cd}, {"mu_decimal", md}});
        } else {
            os << n << '\t' << c << '\t' << mu << '\t' << cd << '\n';
        }
    }
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["n_max"] = cfg.n_max;
        j["routes_agree"] = true;
        j["precision"] = cfg.precision;
        j["rows"] = std::move(rows);
        os << j.dump(2) << '\n';
    }
    emit(cfg, os.str());
    return kExitOk;
}

struct QuadSummary {
    std::string value;
    std::string error;
    std::size_t nodes = 0;
    bool converged = false;
    bool has_reference = false;
    std::string reference;
    std::string reference_exact;
    std::string deviation;
    bool within = true;
};

QuadSummary summarize(const cauchy2_quad* q, unsigned precision, bool compare) {
    QuadSummary s;
    s.value = get_string([&](char** o) { return cauchy2_quad_value(q, digits_for(precision), o); });
    s.error = get_string([&](char** o) { return cauchy2_quad_error_estimate(q, 6, o); });
    check(cauchy2_quad_nodes_used(q, &s.nodes));
    int flag = 0;
    check(cauchy2_quad_converged(q, &flag));
    s.converged = flag != 0;
    check(cauchy2_quad_has_reference(q, &flag));
    s.has_reference = flag != 0 && compare;
    if (s.has_reference) {
        s.reference = get_string([&](char** o) { return cauchy2_quad_reference(q, digits_for(precision), o); });
        char* exact = nullptr;
        if (cauchy2_quad_reference_exact(q, &exact) == CAUCHY2_OK) s.reference_exact = take(exact);
        s.deviation = get_string([&](char** o) { return cauchy2_quad_deviation(q, 6, o); });
        int within = 0;
        check(cauchy2_quad_deviation_within(q, "10", &within));
        s.within = within != 0;
    }
    return s;
}

std::string render_quad(const RunConfig& cfg, const QuadSummary& s, const std::string& label) {
    std::ostringstream os;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["integral"] = label;
        j["value"] = s.value;
        j["error_estimate"] = s.error;
        j["tolerance"] = cfg.tol;
        j["nodes_used"] = s.nodes;
        j["converged"] = s.converged;
        if (s.has_reference) {
            j["reference"] = s.reference;
            if (!s.reference_exact.empty()) j["reference_exact"] = s.reference_exact;
            j["deviation"] = s.deviation;
            j["within_10_tol"] = s.within;
        }
        os << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << "integral,value,error_estimate,tolerance,nodes_used,converged,reference,reference_exact,deviation,"
              "within_10_tol\n";
        os << '"' << label << "\"," << s.value << ',' << s.error << ',' << cfg.tol << ',' << s.nodes << ','
           << (s.converged ? "true" : "false") << ',' << s.reference << ',' << s.reference_exact << ','
           << s.deviation << ',' << (s.has_reference ? (s.within ? "true" : "false") : "") << '\n';
    } else {
        os << "integral        " << label << '\n';
        os << "value           " << s.value << '\n';
        os << "error estimate  " << s.error << "  (tol " << cfg.tol << ", " << s.nodes << " nodes, "
           << (s.converged ? "converged" : "NOT converged") << ")\n";
        if (s.has_reference) {
            os << "reference       " << s.reference;
            if (!s.reference_exact.empty()) os << "  (= " << s.reference_exact << ")";
            os << '\n';
            os << "deviation       " << s.deviation << (s.within ? "  within 10*tol" : "  EXCEEDS 10*tol") << '\n';
        }
    }
    return os.str();
}

int run_quad(const RunConfig& cfg) {
    cauchy2_quad* raw = nullptr;
    const cauchy2_rule rule = cfg.rule == "cc" ? CAUCHY2_RULE_CLENSHAW_CURTIS : CAUCHY2_RULE_GAUSS_LEGENDRE;
    check(cauchy2_quad_moment(cfg.n, cfg.tol.c_str(), cfg.precision, rule, &raw));
    std::unique_ptr<cauchy2_quad, QuadDeleter> q(raw);
    const QuadSummary s = summarize(q.get(), cfg.precision, true);
    emit(cfg, render_quad(cfg, s, "c_" + std::to_string(cfg.n) + "/" + std::to_string(cfg.n) + "!"));
    if (!s.converged) return kExitNoConvergence;
    return s.within ? kExitOk : kExitBadArgs;
}

int run_eval(const RunConfig& cfg) {
    cauchy2_quad* raw = nullptr;
    std::string label;
    if (cfg.kind == "F") {
        check(cauchy2_eval_F(cfg.z.c_str(), cfg.tol.c_str(), cfg.precision, &raw));
        label = "F(" + cfg.z + ")";
    } else if (cfg.kind == "h") {
        check(cauchy2_eval_h(cfg.n, cfg.t.c_str(), cfg.tol.c_str(), cfg.precision, &raw));
        label = "h_" + std::to_string(cfg.n) + "(" + cfg.t + ")";
    } else if (cfg.kind == "hs") {
        check(cauchy2_eval_h_general(cfg.s.c_str(), cfg.t.c_str(), cfg.tol.c_str(), cfg.precision, &raw));
        label = "h(" + cfg.t + "; " + cfg.s + ")";
    } else {
        check(cauchy2_eval_h_derivative(cfg.n, cfg.k, cfg.t.c_str(), cfg.tol.c_str(), cfg.precision, &raw));
        label = "h_" + std::to_string(cfg.n) + "^(" + std::to_string(cfg.k) + ")(" + cfg.t + ")";
    }
    std::unique_ptr<cauchy2_quad, QuadDeleter> q(raw);
    const QuadSummary s = summarize(q.get(), cfg.precision, true);
    emit(cfg, render_quad(cfg, s, label));
    return s.converged ? kExitOk : kExitNoConvergence;
}

int run_verify(const RunConfig& cfg) {
    cauchy2_verify_options* raw_opts = nullptr;
    check(cauchy2_verify_options_create(&raw_opts));
    std::unique_ptr<cauchy2_verify_options, OptionsDeleter> opts(raw_opts);
    check(cauchy2_verify_options_set_suites(opts.get(), cfg.suites.c_str()));
    check(cauchy2_verify_options_set_n_bound(opts.get(), cfg.n_bound));
    check(cauchy2_verify_options_set_cm_depth(opts.get(), cfg.cm_depth));
    check(cauchy2_verify_options_set_epsilons(opts.get(), cfg.epsilon.c_str()));
    check(cauchy2_verify_options_set_depth(opts.get(), cfg.depth));
    check(cauchy2_verify_options_set_seed(opts.get(), cfg.seed));
    check(cauchy2_verify_options_set_table_bound(opts.get(), cfg.table_bound));

    cauchy2_report* raw_report = nullptr;
    check(cauchy2_verify_run(opts.get(), &raw_report));
    std::unique_ptr<cauchy2_report, ReportDeleter> report(raw_report);

    const cauchy2_format format = cfg.format == "json" ? CAUCHY2_FORMAT_JSON
                                : cfg.format == "csv"  ? CAUCHY2_FORMAT_CSV
                                                       : CAUCHY2_FORMAT_PLAIN;
    emit(cfg, get_string([&](char** s) { return cauchy2_report_render(report.get(), format, s); }));
    int ok = 0;
    check(cauchy2_report_ok(report.get(), &ok));
    return ok ? kExitOk : kExitBadArgs;
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto parsed = cauchy2::cli::parse_run_config(args, std::getenv(cauchy2::cli::kPrecisionEnv), std::cout,
                                                       std::cerr);
    if (!parsed.config) return parsed.exit_code;
    const RunConfig& cfg = *parsed.config;
    try {
        if (cfg.command == "compute") return run_compute(cfg);
        if (cfg.command == "quad") return run_quad(cfg);
        if (cfg.command == "eval") return run_eval(cfg);
        return run_verify(cfg);
    } catch (const StatusError& e) {
        std::cerr << "cauchy2: " << e.message << '\n';
        return exit_code_for(e.status);
    } catch (const std::exception& e) {
        std::cerr << "cauchy2: " << e.what() << '\n';
        return kExitInternal;
    }
}
