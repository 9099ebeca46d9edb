#include "run_config.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cauchy2/cauchy2.h"

namespace cauchy2::cli {

namespace {

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (!text.empty() && text.back() == ',') out.emplace_back();
    return out;
}

std::string join(const std::vector<std::string>& items) {
    std::string s;
    for (const auto& i : items) s += (s.empty() ? "" : ",") + i;
    return s;
}

std::string canonical_rational(const std::string& text, const char* what) {
    char* out = nullptr;
    if (cauchy2_parse_rational(text.c_str(), &out) != CAUCHY2_OK)
        throw CLI::ValidationError(what, cauchy2_last_error());
    std::string s(out);
    cauchy2_string_free(out);
    return s;
}

std::string canonical_suites(const std::string& text) {
    const auto known = split(cauchy2_suite_names());
    std::vector<bool> chosen(known.size(), false);
    for (const auto& item : split(text)) {
        if (item == "all") {
            std::fill(chosen.begin(), chosen.end(), true);
            continue;
        }
        const auto it = std::find(known.begin(), known.end(), item);
        if (it == known.end()) throw CLI::ValidationError("--suite", "unknown suite '" + item + "'");
        chosen[static_cast<std::size_t>(it - known.begin())] = true;
    }
    if (std::all_of(chosen.begin(), chosen.end(), [](bool b) { return b; })) return "all";
    std::vector<std::string> picked;
    for (std::size_t i = 0; i < known.size(); ++i)
        if (chosen[i]) picked.push_back(known[i]);
    if (picked.empty()) throw CLI::ValidationError("--suite", "no suite selected");
    return join(picked);
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
    sub->add_option("--precision", cfg.precision, "Working precision in bits (env " + std::string(kPrecisionEnv) + ")")
        ->check(CLI::Range(2u, 1u << 20))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "Write output to FILE instead of stdout");
}

void add_tol(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--tol", cfg.tol, "Absolute tolerance, exact decimal or p/q")->capture_default_str();
}

} // namespace

std::vector<std::string> RunConfig::canonical_args() const {
    std::vector<std::string> a;
    auto opt = [&](const char* flag, const std::string& v) {
        a.emplace_back(flag);
        a.push_back(v);
    };
    if (command == "eval") {
        a = {"eval", kind};
    } else {
        a = {command};
    }
    opt("--format", format);
    opt("--precision", std::to_string(precision));
    if (!out.empty()) opt("--out", out);
    if (command == "compute") {
        opt("--n-max", std::to_string(n_max));
        opt("--table-bound", std::to_string(table_bound));
    } else if (command == "quad") {
        opt("--n", std::to_string(n));
        opt("--tol", tol);
        opt("--rule", rule);
    } else if (command == "eval") {
        opt("--tol", tol);
        if (kind == "F") opt("--z", z);
        if (kind == "h" || kind == "dh") opt("--n", std::to_string(n));
        if (kind == "dh") opt("--k", std::to_string(k));
        if (kind == "hs") opt("--s", s);
        if (kind != "F") opt("--t", t);
    } else if (command == "verify") {
        opt("--suite", suites);
        opt("--n-bound", std::to_string(n_bound));
        opt("--cm-depth", std::to_string(cm_depth));
        opt("--epsilon", epsilon);
        opt("--depth", std::to_string(depth));
        opt("--seed", std::to_string(seed));
        opt("--table-bound", std::to_string(table_bound));
    }
    return a;
}

ParseOutcome parse_run_config(const std::vector<std::string>& args, const char* env_precision, std::ostream& out,
                              std::ostream& err) {
    RunConfig cfg;
    if (env_precision != nullptr && *env_precision != '\0') {
        const std::string_view text(env_precision);
        unsigned bits = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), bits);
        if (ec != std::errc() || ptr != text.data() + text.size() || bits < 2) {
            err << "invalid " << kPrecisionEnv << "='" << env_precision << "'\n";
            return {std::nullopt, 1};
        }
        cfg.precision = bits;
    }

    CLI::App app{"Cauchy numbers of the second kind: exact tables, quadrature, and inequality verification",
                 "cauchy2"};
    app.require_subcommand(1);
    app.set_version_flag("--version", cauchy2_version());

    auto* compute = app.add_subcommand("compute", "Exact c_n and c_n/n! by two independent routes");
    add_common(compute, cfg);
    compute->add_option("--n-max", cfg.n_max, "Largest index")->capture_default_str();
    compute->add_option("--table-bound", cfg.table_bound, "Opt-in bound for large tables")->capture_default_str();

    auto* quad = app.add_subcommand("quad", "Quadrature of the integral for c_n/n!, compared with the exact value");
    add_common(quad, cfg);
    add_tol(quad, cfg);
    quad->add_option("--n", cfg.n, "Index n")->capture_default_str();
    quad->add_option("--rule", cfg.rule, "Quadrature rule")
        ->check(CLI::IsMember({"gl", "cc"}))
        ->capture_default_str();

    auto* eval = app.add_subcommand("eval", "Evaluate F(z), h_n(t), h(t;s) or h_n^(k)(t) by quadrature");
    add_common(eval, cfg);
    add_tol(eval, cfg);
    eval->add_option("kind", cfg.kind, "F | h | hs | dh")->required()->check(CLI::IsMember({"F", "h", "hs", "dh"}));
    eval->add_option("--z", cfg.z, "Point z > -1 for F")->capture_default_str();
    eval->add_option("--t", cfg.t, "Point t >= 0 for h kinds")->capture_default_str();
    eval->add_option("--s", cfg.s, "Order s >= 0 for hs")->capture_default_str();
    eval->add_option("--n", cfg.n, "Index n for h, ell for dh")->capture_default_str();
    eval->add_option("--k", cfg.k, "Derivative order for dh")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the exact verification suites");
    add_common(verify, cfg);
    verify->add_option("--suite", cfg.suites, "all, or a comma list of: " + std::string(cauchy2_suite_names()))
        ->capture_default_str();
    verify->add_option("--n-bound", cfg.n_bound, "Log-convexity range c_0..c_N")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20))
        ->capture_default_str();
    verify->add_option("--cm-depth", cfg.cm_depth, "Difference table depth for complete monotonicity")
        ->capture_default_str();
    verify->add_option("--epsilon", cfg.epsilon, "Comma list of minimality probe epsilons")->capture_default_str();
    verify->add_option("--depth", cfg.depth, "Minimality probe search depth")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "Seed for randomized suites")->capture_default_str();
    verify->add_option("--table-bound", cfg.table_bound, "Opt-in bound for large tables")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (compute->parsed()) cfg.command = "compute";
        else if (quad->parsed()) cfg.command = "quad";
        else if (eval->parsed()) cfg.command = "eval";
        else cfg.command = "verify";

        cfg.tol = canonical_rational(cfg.tol, "--tol");
        cfg.z = canonical_rational(cfg.z, "--z");
        cfg.t = canonical_rational(cfg.t, "--t");
        cfg.s = canonical_rational(cfg.s, "--s");
        std::vector<std::string> eps;
        for (const auto& e : split(cfg.epsilon)) eps.push_back(canonical_rational(e, "--epsilon"));
        cfg.epsilon = join(eps);
        cfg.suites = canonical_suites(cfg.suites);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {std::nullopt, code == 0 ? 0 : 1};
    }
    return {cfg, 0};
}

} // namespace cauchy2::cli
