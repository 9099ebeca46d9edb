// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance [--criterion N] [--cli PATH]
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "exact_core.hpp"
#include "inequality_suites.hpp"
#include "matrix_checks.hpp"
#include "quadrature.hpp"
#include "sequence_analysis.hpp"

using namespace cauchy2;

namespace {

ExactRational q(long p, long d = 1) { return ExactRational(BigInt(p), BigInt(d)); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;  // 0: untimed
    std::function<Outcome()> run;
};

std::string cli_path;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Outcome c1() {
    const std::vector<ExactRational> known{q(1), q(1, 2), q(5, 6), q(9, 4), q(251, 30), q(475, 12), q(19087, 84)};
    const auto tri = build_stirling(6);
    const auto series = cauchy_via_series(6);
    int bad = 0;
    for (std::size_t n = 0; n < known.size(); ++n) {
        if (cauchy_via_stirling(n, tri) != known[n]) ++bad;
        if (series.c(n) != known[n]) ++bad;
    }
    return {bad == 0, "14 route values checked, " + std::to_string(bad) + " mismatches"};
}

Outcome c2() {
    const auto tri = build_stirling(200);
    const auto series = cauchy_via_series(200);
    int bad = 0;
    for (std::size_t n = 0; n <= 200; ++n)
        if (cauchy_via_stirling(n, tri) != series.c(n)) ++bad;
    return {bad == 0, "n=0..200, " + std::to_string(bad) + " mismatches"};
}

Outcome c3() {
    const Precision bits = 128;
    const auto table = cauchy_via_series(30);
    const BigFloat tol = make_tolerance(q(1, 1000000000000L), bits + kGuardBits);
    double worst = 0;
    int bad = 0;
    for (std::size_t n = 0; n <= 30; ++n) {
        const auto r = integrate(IntegrandSpec::cauchy_moment(n), tol, bits);
        const double dev = abs(r.value - BigFloat(table.mu(n), bits + kGuardBits)).to_double();
        worst = std::max(worst, dev);
        if (!r.converged || dev > 1e-11) ++bad;
    }
    return {bad == 0, "n=0..30 at tol 1e-12, max |error| " + fmt(worst) + ", " + std::to_string(bad) + " failures"};
}

Outcome c4() {
    const auto table = cauchy_via_series(60);
    const auto rep = check_complete_monotonicity(build_diff_table(table, 60));
    return {rep.cases.size() == 1891 && rep.failed == 0,
            std::to_string(rep.cases.size()) + " entries, " + std::to_string(rep.failed) + " violations"};
}

Outcome c5() {
    const auto table = cauchy_via_series(200);
    const auto dt = build_diff_table(table, 200);
    bool pass = true;
    std::string detail;
    for (const auto& eps : {q(3, 4), q(1, 10), q(1, 100)}) {
        const auto p = minimality_probe(dt, eps);
        detail += "eps=" + eps.to_string() + ": ";
        if (p.violation_order) {
            detail += "k=" + std::to_string(*p.violation_order) + "; ";
        } else {
            detail += "no k<=200 (min d[k][0]=" + p.min_observed.to_decimal(6) + "); ";
            pass = false;
        }
    }
    const auto p34 = minimality_probe(dt, q(3, 4));
    if (!p34.violation_order || *p34.violation_order != 1) pass = false;
    const auto p1000 = minimality_probe(dt, q(1, 1000));
    detail += "eps=1/1000: " + (p1000.violation_order ? "k=" + std::to_string(*p1000.violation_order)
                                                      : std::string("not found at depth 200"));
    return {pass, detail};
}

Outcome c6() {
    const auto table = cauchy_via_series(32);
    const auto rep = sweep_thm3_signed(table);
    return {rep.failed == 0 && rep.cases.size() == 5460,
            std::to_string(rep.cases.size()) + " determinants, " + std::to_string(rep.failed) + " negative"};
}

Outcome c7() {
    const auto table = cauchy_via_series(32);
    const auto plain = sweep_thm3_plain(table);
    const auto unsig = sweep_thm3_unsigned(table);
    bool flagged = false;
    for (const auto& c : plain.cases)
        if (c.key == "m=1,n=1,a=(0)") flagged = !c.holds && c.lhs == q(-1, 2);
    const bool listed = !plain.counterexamples.empty() && plain.counterexamples.front() == "m=1,n=1,a=(0)";
    return {flagged && listed && unsig.failed == 0 && unsig.cases.size() == 5460,
            std::string("m=1,n=1,a=(0) ") + (flagged ? "flagged at -1/2" : "NOT flagged") + ", " +
                std::to_string(plain.failed) + " literal failures; unsigned " + std::to_string(unsig.cases.size()) +
                " cases, " + std::to_string(unsig.failed) + " negative"};
}

Outcome c8() {
    const auto table = cauchy_via_series(102);
    const auto t4 = sweep_thm4(table, 3, 6);
    const auto lc = check_log_convexity(table);
    const auto cp = sweep_cor_power(table, 3, 8);
    const bool pass = t4.failed == 0 && lc.failed == 0 && lc.cases.size() == 101 && cp.failed == 0;
    return {pass, "majorization " + std::to_string(t4.cases.size()) + " pairs/" + std::to_string(t4.failed) +
                      " fail; log-convexity n=0.." + std::to_string(lc.cases.size() - 1) + "/" +
                      std::to_string(lc.failed) + " fail; power " + std::to_string(cp.cases.size()) + "/" +
                      std::to_string(cp.failed) + " fail"};
}

Outcome c9() {
    const auto table = cauchy_via_series(40);
    const auto rep = sweep_thm5(table, 3, 8);
    return {rep.failed == 0 && !rep.cases.empty(),
            std::to_string(rep.cases.size()) + " quadruples, " + std::to_string(rep.failed) + " violations"};
}

Outcome c10() {
    const auto table = cauchy_via_series(40);
    std::size_t cases = 0, bad = 0, literal = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t m = 1; m <= 5; ++m)
            for (std::size_t l = 0; l <= 3; ++l) {
                for (const auto& c : check_thm6(n, m, l, table)) {
                    ++cases;
                    if (!c.holds) ++bad;
                }
                const auto v = compute_ghi(n, m, l, table);
                const int s = (v.h - v.g).sign();
                const int nm = n > m ? 1 : (n < m ? -1 : 0);
                if (s != nm) ++literal;
            }
    const auto spot = compute_ghi(1, 1, 0, table);
    const bool spot_ok = spot.g == q(37, 24);
    return {bad == 0 && spot_ok,
            std::to_string(cases) + " cases, " + std::to_string(bad) + " violations (H vs G ordered as m vs n); G_{1,1,0}=" +
                spot.g.to_string() + "; " + std::to_string(literal) + " of 100 triples contradict sign(H-G)=sign(n-m)"};
}

Outcome c11() {
    const auto table = cauchy_via_series(40);
    const auto prod = sweep_thm7_product(table, 3, 4);
    const auto det = sweep_thm7_det(table, 4, 4);
    return {prod.failed == 0 && det.failed == 0,
            "product " + std::to_string(prod.cases.size()) + "/" + std::to_string(prod.failed) + " fail; determinant " +
                std::to_string(det.cases.size()) + "/" + std::to_string(det.failed) + " fail"};
}

Outcome c12() {
    const Precision bits = 128;
    const BigFloat tol = make_tolerance(q(1, 100000000000000L), bits + kGuardBits);
    double worst = 0;
    bool pass = true;
    for (const auto& z : {q(-9, 10), q(-1, 2), q(1, 10), q(1), q(10), q(1000)}) {
        const auto r = eval_F(z, tol, bits);
        const double dev = abs(r.value - F_closed_form(z, bits + kGuardBits)).to_double();
        worst = std::max(worst, dev);
        if (!r.converged || dev > 1e-12) pass = false;
    }
    return {pass, "6 points at 128 bits, max |error| " + fmt(worst)};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Outcome c13() {
    if (cli_path.empty()) return {false, "no --cli executable given"};
    const auto dir = std::filesystem::temp_directory_path() / ("cauchy2-accept-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::vector<std::string> outputs;
    for (int i = 0; i < 2; ++i) {
        const auto out = dir / ("run" + std::to_string(i) + ".json");
        const std::string cmd = "\"" + cli_path + "\" verify --suite all --seed 20131203 --format json --out \"" +
                                out.string() + "\"";
        const int status = std::system(cmd.c_str());
        if (status != 0) {
            std::filesystem::remove_all(dir);
            return {false, "verify exited with status " + std::to_string(status)};
        }
        outputs.push_back(slurp(out));
    }
    std::filesystem::remove_all(dir);
    const bool same = outputs[0] == outputs[1] && !outputs[0].empty();
    return {same, std::to_string(outputs[0].size()) + " bytes, " + (same ? "identical" : "DIFFERENT")};
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
        else if (a == "--cli" && i + 1 < argc) cli_path = argv[++i];
        else {
            std::cerr << "usage: acceptance [--criterion N] [--cli PATH]\n";
            return 2;
        }
    }

    const std::vector<Criterion> all{
        {1, "exact regression c_0..c_6", 1, c1},
        {2, "route equivalence n<=200", 30, c2},
        {3, "integral representation n<=30", 60, c3},
        {4, "complete monotonicity k+n<=60", 0, c4},
        {5, "minimality probe", 0, c5},
        {6, "signed Hankel determinants", 0, c6},
        {7, "literal plain form flagged, unsigned form holds", 0, c7},
        {8, "majorization products and corollaries", 0, c8},
        {9, "two-sided product inequality", 0, c9},
        {10, "G/H/I inequalities", 0, c10},
        {11, "product and determinant inequalities for c_n/n!", 0, c11},
        {12, "F(z) against the closed form", 0, c12},
        {13, "byte-identical verify reports", 0, c13},
    };

    int failures = 0;
    bool ran = false;
    for (const auto& c : all) {
        if (only != 0 && c.id != only) continue;
        ran = true;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
            o.pass = false;
            o.detail += "; over the " + fmt(c.time_limit_s) + " s limit";
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " -- " << o.detail
                  << " (" << fmt(secs) << " s)\n";
        if (!o.pass) ++failures;
    }
    if (!ran) {
        std::cerr << "no criterion " << only << "\n";
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
