#include "verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "errors.hpp"
#include "inequality_suites.hpp"
#include "matrix_checks.hpp"

namespace cauchy2 {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "cm",     "minimality",   "logconvex",   "thm3-signed", "thm3-plain", "thm3-unsigned", "thm4",
        "thm4-shifted", "thm4-random", "cor-power", "thm5",       "thm6",      "thm7-product",  "thm7-det"};
    return names;
}

bool is_discrepancy_suite(std::string_view suite) { return suite == "thm3-plain"; }

std::vector<std::string> parse_suite_selection(std::string_view text) {
    const auto& all = suite_names();
    std::vector<bool> chosen(all.size(), false);
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view item = text.substr(start, comma - start);
        if (item == "all") {
            std::fill(chosen.begin(), chosen.end(), true);
        } else {
            const auto it = std::find(all.begin(), all.end(), item);
            if (it == all.end()) throw ParseError("unknown suite '" + std::string(item) + "'");
            chosen[static_cast<std::size_t>(it - all.begin())] = true;
        }
        start = comma + 1;
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (chosen[i]) out.push_back(all[i]);
    return out;
}

std::size_t VerifyResult::passed() const {
    std::size_t n = 0;
    for (const auto& r : reports)
        if (!is_discrepancy_suite(r.suite)) n += r.passed;
    return n;
}

std::size_t VerifyResult::failed() const {
    std::size_t n = 0;
    for (const auto& r : reports)
        if (!is_discrepancy_suite(r.suite)) n += r.failed;
    return n;
}

const CheckReport* VerifyResult::find(std::string_view suite) const {
    for (const auto& r : reports)
        if (r.suite == suite) return &r;
    return nullptr;
}

namespace {

bool selected(const VerifyOptions& o, std::string_view suite) {
    return std::find(o.suites.begin(), o.suites.end(), suite) != o.suites.end();
}

} // namespace

std::size_t required_table_index(const VerifyOptions& o) {
    std::size_t need = 2;
    auto want = [&](std::string_view suite, std::size_t index) {
        if (selected(o, suite)) need = std::max(need, index);
    };
    want("cm", o.cm_depth);
    want("minimality", o.depth);
    want("logconvex", o.n_bound);
    want("thm3-signed", 6 + 2 * 4);
    want("thm3-plain", 6 + 2 * 4);
    want("thm3-unsigned", 6 + 2 * 4);
    want("thm4", 6);
    want("thm4-shifted", 3 + 4);
    want("thm4-random", 12);
    want("cor-power", 3 + 8);
    want("thm5", 3 + 8);
    want("thm6", 3 + 5 + 2 * 5);
    want("thm7-product", 4 + 3 * 4);
    want("thm7-det", 2 * 4);
    return need;
}

CheckReport minimality_report(const DiffTable& dt, const std::vector<ExactRational>& epsilons) {
    CheckReport report;
    report.suite = "minimality";
    report.parameters = {{"depth", std::to_string(dt.depth())}};
    std::size_t witnesses = 0;
    for (const auto& eps : epsilons) {
        const MinimalityProbe probe = minimality_probe(dt, eps);
        const KeyValues inputs = {{"epsilon", eps.to_string()}, {"depth", std::to_string(dt.depth())}};
        const std::string key = "epsilon=" + eps.to_string();
        if (probe.violation_order) {
            ++witnesses;
            const std::size_t k = *probe.violation_order;
            CheckCase c = make_case(key, inputs, dt.at(k, 0), Relation::lt, eps);
            // Lowering mu_0 by eps lowers d[k][0] by eps: the perturbed entry is negative.
            const ExactRational perturbed = dt.at(k, 0) - eps;
            c.extras = {{"outcome", "witness"},
                        {"violation_order", std::to_string(k)},
                        {"perturbed_entry", perturbed.to_string()},
                        {"perturbed_fails_cm", perturbed.sign() < 0 ? "yes" : "no"}};
            report.add(std::move(c));
        } else {
            CheckCase c = make_case(key, inputs, probe.min_observed, Relation::ge, eps);
            c.extras = {{"outcome", "not_found_within_depth"}, {"min_observed_decimal",
                                                                probe.min_observed.to_decimal(kReportDigits)}};
            report.add(std::move(c));
        }
    }
    report.notes = {{"witnesses_found", std::to_string(witnesses)},
                    {"not_found_within_depth", std::to_string(epsilons.size() - witnesses)}};
    return report;
}

VerifyResult run_verify(const VerifyOptions& options) {
    const std::size_t need = required_table_index(options);
    if (need > options.table_bound) {
        throw CapacityError("selected suites need c_" + std::to_string(need) + " beyond table bound " +
                            std::to_string(options.table_bound));
    }
    return run_verify(options, cross_checked_table(need, options.table_bound));
}

VerifyResult run_verify(const VerifyOptions& o, const CauchyTable& table) {
    const std::size_t need = required_table_index(o);
    if (need > o.table_bound) {
        throw CapacityError("selected suites need c_" + std::to_string(need) + " beyond table bound " +
                            std::to_string(o.table_bound));
    }
    table.require(need, "verify");
    VerifyResult result;
    result.table_n_max = table.n_max();
    for (const auto& suite : o.suites) {
        if (suite == "cm") {
            result.reports.push_back(check_complete_monotonicity(build_diff_table(table, o.cm_depth)));
        } else if (suite == "minimality") {
            result.reports.push_back(minimality_report(build_diff_table(table, o.depth), o.epsilons));
        } else if (suite == "logconvex") {
            CheckReport r = check_log_convexity(table.c_values().first(o.n_bound + 1));
            result.reports.push_back(std::move(r));
        } else if (suite == "thm3-signed") {
            result.reports.push_back(sweep_thm3_signed(table));
        } else if (suite == "thm3-plain") {
            result.reports.push_back(sweep_thm3_plain(table));
        } else if (suite == "thm3-unsigned") {
            result.reports.push_back(sweep_thm3_unsigned(table));
        } else if (suite == "thm4") {
            result.reports.push_back(sweep_thm4(table));
        } else if (suite == "thm4-shifted") {
            result.reports.push_back(sweep_thm4_shifted(table));
        } else if (suite == "thm4-random") {
            result.reports.push_back(sweep_thm4_random(table, o.seed));
        } else if (suite == "cor-power") {
            result.reports.push_back(sweep_cor_power(table));
        } else if (suite == "thm5") {
            result.reports.push_back(sweep_thm5(table));
        } else if (suite == "thm6") {
            result.reports.push_back(sweep_thm6(table));
        } else if (suite == "thm7-product") {
            result.reports.push_back(sweep_thm7_product(table));
        } else if (suite == "thm7-det") {
            result.reports.push_back(sweep_thm7_det(table));
        } else {
            throw ParseError("unknown suite '" + suite + "'");
        }
        result.reports.back().seed = o.seed;
    }
    return result;
}

nlohmann::ordered_json options_json(const VerifyOptions& o) {
    nlohmann::ordered_json j;
    j["suites"] = o.suites;
    j["n_bound"] = o.n_bound;
    j["cm_depth"] = o.cm_depth;
    auto eps = nlohmann::ordered_json::array();
    for (const auto& e : o.epsilons) eps.push_back(e.to_string());
    j["epsilon"] = std::move(eps);
    j["depth"] = o.depth;
    j["seed"] = o.seed;
    j["table_bound"] = o.table_bound;
    return j;
}

namespace {

nlohmann::ordered_json discrepancy_entry(const CheckReport& r) {
    nlohmann::ordered_json d;
    d["suite"] = r.suite;
    d["statement"] = "(-1)^(m n) det(c_{n+a_i+a_j}) >= 0";
    d["counterexample_count"] = r.failed;
    for (const auto& c : r.cases) {
        if (c.holds) continue;
        d["first_counterexample"] = to_json(c);
        break;
    }
    return d;
}

} // namespace

nlohmann::ordered_json verify_json(const VerifyResult& result, const VerifyOptions& options) {
    nlohmann::ordered_json j;
    j["toolkit"] = std::string(kToolkitName);
    j["version"] = std::string(kToolkitVersion);
    j["config"] = options_json(options);
    j["table_n_max"] = result.table_n_max;

    auto discrepancies = nlohmann::ordered_json::array();
    std::size_t cases = 0;
    std::size_t discrepancy_cases = 0;
    for (const auto& r : result.reports) {
        cases += r.cases.size();
        if (is_discrepancy_suite(r.suite)) discrepancy_cases += r.cases.size();
        if (is_discrepancy_suite(r.suite) && r.failed > 0) discrepancies.push_back(discrepancy_entry(r));
    }
    nlohmann::ordered_json summary;
    summary["suites"] = result.reports.size();
    summary["cases"] = cases;
    summary["passed"] = result.passed();
    summary["failed"] = result.failed();
    // passed + failed + discrepancy_cases == cases
    summary["discrepancy_cases"] = discrepancy_cases;
    summary["status"] = result.ok() ? "pass" : "fail";
    j["summary"] = std::move(summary);
    j["discrepancies"] = std::move(discrepancies);

    auto suites = nlohmann::ordered_json::array();
    for (const auto& r : result.reports) suites.push_back(to_json(r));
    j["suites"] = std::move(suites);
    return j;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

std::string verify_csv(const VerifyResult& result) {
    std::ostringstream os;
    os << "suite,key,lhs,relation,rhs,holds,margin\n";
    for (const auto& r : result.reports) {
        for (const auto& c : r.cases) {
            os << csv_field(r.suite) << ',' << csv_field(c.key) << ',' << csv_field(c.lhs.to_string()) << ','
               << relation_symbol(c.relation) << ',' << csv_field(c.rhs.to_string()) << ','
               << (c.holds ? "true" : "false") << ',' << csv_field(c.margin.to_string()) << '\n';
        }
    }
    return os.str();
}

std::string verify_plain(const VerifyResult& result, const VerifyOptions& options) {
    std::ostringstream os;
    os << kToolkitName << ' ' << kToolkitVersion << " verify  seed=" << options.seed
       << "  table n_max=" << result.table_n_max << '\n';
    os << std::left << std::setw(16) << "suite" << std::setw(8) << "cases" << std::setw(8) << "passed"
       << std::setw(8) << "failed" << "weakest margin\n";
    for (const auto& r : result.reports) {
        const CheckCase* weakest = r.weakest_case();
        os << std::left << std::setw(16) << r.suite << std::setw(8) << r.cases.size() << std::setw(8) << r.passed
           << std::setw(8) << r.failed << (weakest ? weakest->margin.to_decimal(12) + "  [" + weakest->key + "]" : "-")
           << '\n';
    }
    if (const CheckReport* m = result.find("minimality")) {
        os << "minimality probe (depth " << options.depth << "):\n";
        for (const auto& c : m->cases) {
            std::string outcome;
            std::string order;
            for (const auto& [k, v] : c.extras) {
                if (k == "outcome") outcome = v;
                if (k == "violation_order") order = v;
            }
            os << "  " << c.key << ": ";
            if (outcome == "witness")
                os << "witness k=" << order << " (d[k][0] = " << c.lhs.to_string() << ")\n";
            else
                os << "not found within depth (min d[k][0] = " << c.lhs.to_decimal(12) << ")\n";
        }
    }
    bool any = false;
    for (const auto& r : result.reports) {
        if (!is_discrepancy_suite(r.suite) || r.failed == 0) continue;
        if (!any) os << "discrepancies:\n";
        any = true;
        for (const auto& c : r.cases) {
            if (c.holds) continue;
            os << "  " << r.suite << ": " << r.failed << " literal failures; first " << c.key << " value "
               << c.lhs.to_string() << '\n';
            break;
        }
    }
    for (const auto& r : result.reports) {
        if (is_discrepancy_suite(r.suite)) continue;
        for (const auto& key : r.counterexamples) os << "counterexample " << r.suite << ": " << key << '\n';
    }
    os << "result: " << (result.ok() ? "PASS" : "FAIL") << "  (passed " << result.passed() << ", failed "
       << result.failed() << ")\n";
    return os.str();
}

} // namespace cauchy2
