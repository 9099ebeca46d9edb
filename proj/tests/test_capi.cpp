#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "cauchy2/cauchy2.h"

namespace {

std::string take(char* s) {
    std::string out(s);
    cauchy2_string_free(s);
    return out;
}

} // namespace

TEST_CASE("version and parsing") {
    CHECK(std::string(cauchy2_version()) == "1.0.0");
    char* s = nullptr;
    REQUIRE(cauchy2_parse_rational("0.25", &s) == CAUCHY2_OK);
    CHECK(take(s) == "1/4");
    CHECK(cauchy2_parse_rational("half", &s) == CAUCHY2_E_PARSE);
    CHECK(std::strlen(cauchy2_last_error()) > 0);
    CHECK(cauchy2_parse_rational(nullptr, &s) == CAUCHY2_E_PARSE);
    CHECK(cauchy2_parse_rational("1", nullptr) == CAUCHY2_E_NULL);
}

TEST_CASE("tables") {
    cauchy2_table* t = nullptr;
    REQUIRE(cauchy2_table_create(6, 0, &t) == CAUCHY2_OK);
    size_t n_max = 0;
    CHECK(cauchy2_table_n_max(t, &n_max) == CAUCHY2_OK);
    CHECK(n_max == 6);
    char* s = nullptr;
    REQUIRE(cauchy2_table_c(t, 6, &s) == CAUCHY2_OK);
    CHECK(take(s) == "19087/84");
    REQUIRE(cauchy2_table_mu(t, 2, &s) == CAUCHY2_OK);
    CHECK(take(s) == "5/12");
    REQUIRE(cauchy2_table_mu_decimal(t, 2, 6, &s) == CAUCHY2_OK);
    CHECK(take(s) == "4.16667e-1");
    CHECK(cauchy2_table_c(t, 7, &s) == CAUCHY2_E_CAPACITY);
    CHECK(cauchy2_table_c(nullptr, 0, &s) == CAUCHY2_E_NULL);
    cauchy2_table_destroy(t);
    cauchy2_table_destroy(nullptr);

    CHECK(cauchy2_table_create(300, 0, &t) == CAUCHY2_E_CAPACITY);
    CHECK(cauchy2_table_create(3, 0, nullptr) == CAUCHY2_E_NULL);
}

TEST_CASE("quadrature handles") {
    cauchy2_quad* q = nullptr;
    REQUIRE(cauchy2_quad_moment(4, "1e-15", 128, CAUCHY2_RULE_GAUSS_LEGENDRE, &q) == CAUCHY2_OK);
    int flag = 0;
    CHECK(cauchy2_quad_converged(q, &flag) == CAUCHY2_OK);
    CHECK(flag == 1);
    CHECK(cauchy2_quad_has_reference(q, &flag) == CAUCHY2_OK);
    CHECK(flag == 1);
    char* s = nullptr;
    REQUIRE(cauchy2_quad_reference_exact(q, &s) == CAUCHY2_OK);
    CHECK(take(s) == "251/720");
    REQUIRE(cauchy2_quad_tolerance(q, &s) == CAUCHY2_OK);
    CHECK(take(s) == "1/1000000000000000");
    double v = 0;
    CHECK(cauchy2_quad_value_double(q, &v) == CAUCHY2_OK);
    CHECK(v == doctest::Approx(251.0 / 720.0).epsilon(1e-15));
    CHECK(cauchy2_quad_deviation_within(q, "1", &flag) == CAUCHY2_OK);
    CHECK(flag == 1);
    size_t nodes = 0;
    CHECK(cauchy2_quad_nodes_used(q, &nodes) == CAUCHY2_OK);
    CHECK(nodes > 0);
    cauchy2_quad_destroy(q);

    REQUIRE(cauchy2_eval_F("10", "1e-14", 128, &q) == CAUCHY2_OK);
    CHECK(cauchy2_quad_reference_exact(q, &s) == CAUCHY2_E_DOMAIN);
    CHECK(cauchy2_quad_deviation_within(q, "1", &flag) == CAUCHY2_OK);
    CHECK(flag == 1);
    cauchy2_quad_destroy(q);

    REQUIRE(cauchy2_eval_h(1, "1", "1e-14", 128, &q) == CAUCHY2_OK);
    CHECK(cauchy2_quad_has_reference(q, &flag) == CAUCHY2_OK);
    CHECK(flag == 0);
    CHECK(cauchy2_quad_deviation(q, 6, &s) == CAUCHY2_E_DOMAIN);
    cauchy2_quad_destroy(q);

    REQUIRE(cauchy2_eval_h_derivative(0, 2, "0", "1e-14", 128, &q) == CAUCHY2_OK);
    REQUIRE(cauchy2_quad_reference_exact(q, &s) == CAUCHY2_OK);
    CHECK(take(s) == "5/6");
    cauchy2_quad_destroy(q);

    REQUIRE(cauchy2_eval_h_general("2", "0", "1e-14", 128, &q) == CAUCHY2_OK);
    REQUIRE(cauchy2_quad_reference_exact(q, &s) == CAUCHY2_OK);
    CHECK(take(s) == "5/12");
    cauchy2_quad_destroy(q);

    CHECK(cauchy2_eval_F("-1", "1e-14", 128, &q) == CAUCHY2_E_DOMAIN);
    CHECK(cauchy2_eval_F("1", "-1e-14", 128, &q) == CAUCHY2_E_DOMAIN);
    CHECK(cauchy2_eval_F("1", "1e-14", 1, &q) == CAUCHY2_E_DOMAIN);
    CHECK(cauchy2_eval_F("one", "1e-14", 128, &q) == CAUCHY2_E_PARSE);
    CHECK(cauchy2_quad_moment(2, "1e-10", 128, static_cast<cauchy2_rule>(9), &q) == CAUCHY2_E_DOMAIN);
}

TEST_CASE("verify through the boundary") {
    cauchy2_verify_options* o = nullptr;
    REQUIRE(cauchy2_verify_options_create(&o) == CAUCHY2_OK);
    CHECK(cauchy2_verify_options_set_suites(o, "thm3-plain,logconvex") == CAUCHY2_OK);
    CHECK(cauchy2_verify_options_set_suites(o, "nope") == CAUCHY2_E_PARSE);
    CHECK(cauchy2_verify_options_set_n_bound(o, 20) == CAUCHY2_OK);
    CHECK(cauchy2_verify_options_set_n_bound(o, 1) == CAUCHY2_E_DOMAIN);
    CHECK(cauchy2_verify_options_set_epsilons(o, "1/2,0") == CAUCHY2_E_DOMAIN);
    CHECK(cauchy2_verify_options_set_epsilons(o, "1/2") == CAUCHY2_OK);
    char* s = nullptr;
    REQUIRE(cauchy2_verify_options_json(o, &s) == CAUCHY2_OK);
    CHECK(take(s).find("\"n_bound\":20") != std::string::npos);

    cauchy2_report* r = nullptr;
    REQUIRE(cauchy2_verify_run(o, &r) == CAUCHY2_OK);
    int ok = 0;
    CHECK(cauchy2_report_ok(r, &ok) == CAUCHY2_OK);
    CHECK(ok == 1);
    size_t passed = 0, failed = 0, disc = 0;
    CHECK(cauchy2_report_counts(r, &passed, &failed, &disc) == CAUCHY2_OK);
    CHECK(passed == 19);
    CHECK(failed == 0);
    CHECK(disc == 1);
    REQUIRE(cauchy2_report_render(r, CAUCHY2_FORMAT_JSON, &s) == CAUCHY2_OK);
    const std::string a = take(s);
    REQUIRE(cauchy2_report_render(r, CAUCHY2_FORMAT_CSV, &s) == CAUCHY2_OK);
    CHECK(take(s).rfind("suite,key", 0) == 0);
    cauchy2_report_destroy(r);
    cauchy2_verify_options_destroy(o);
    CHECK(a.find("\"discrepancies\"") != std::string::npos);
    CHECK(std::string(cauchy2_suite_names()).rfind("cm,minimality,logconvex", 0) == 0);
}

TEST_CASE("last error is per thread") {
    char* s = nullptr;
    REQUIRE(cauchy2_parse_rational("bad", &s) == CAUCHY2_E_PARSE);
    const std::string main_msg = cauchy2_last_error();
    std::string thread_msg = "unset";
    std::thread([&] {
        thread_msg = cauchy2_last_error();
    }).join();
    CHECK(thread_msg.empty());
    CHECK(main_msg == cauchy2_last_error());
}

TEST_CASE("concurrent quadrature") {
    std::vector<std::thread> pool;
    std::vector<int> good(4, 0);
    for (int i = 0; i < 4; ++i)
        pool.emplace_back([&, i] {
            cauchy2_quad* q = nullptr;
            if (cauchy2_quad_moment(static_cast<size_t>(i + 3), "1e-18", 160, CAUCHY2_RULE_GAUSS_LEGENDRE, &q) !=
                CAUCHY2_OK)
                return;
            int within = 0;
            cauchy2_quad_deviation_within(q, "10", &within);
            good[static_cast<size_t>(i)] = within;
            cauchy2_quad_destroy(q);
        });
    for (auto& t : pool) t.join();
    for (int g : good) CHECK(g == 1);
}
