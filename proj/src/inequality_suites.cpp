#include "inequality_suites.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace cauchy2 {

MajorizationResult is_majorized(const IndexTuple& lambda, const IndexTuple& mu) {
    if (lambda.size() != mu.size()) {
        throw DomainError("majorization needs equal lengths, got " + std::to_string(lambda.size()) + " and " +
                          std::to_string(mu.size()));
    }
    IndexTuple l = lambda;
    IndexTuple u = mu;
    std::sort(l.begin(), l.end(), std::greater<>());
    std::sort(u.begin(), u.end(), std::greater<>());
    std::size_t sum_l = 0;
    std::size_t sum_u = 0;
    for (std::size_t k = 0; k < l.size(); ++k) {
        sum_l += l[k];
        sum_u += u[k];
        if (sum_l > sum_u) return {};
    }
    if (sum_l != sum_u) return {};
    return {true, l != u};
}

std::optional<MajPair> MajPair::make(IndexTuple lambda, IndexTuple mu) {
    const auto r = is_majorized(lambda, mu);
    if (!r.majorized) return std::nullopt;
    return MajPair(std::move(lambda), std::move(mu), r.strict);
}

namespace {

ExactRational product(const IndexTuple& idx, std::size_t shift, const CauchyTable& table) {
    ExactRational p(1);
    for (auto i : idx) p *= table.c(shift + i);
    return p;
}

std::string pair_key(const MajPair& pair) { return tuple_string(pair.lambda()) + "<=" + tuple_string(pair.mu()); }

} // namespace

CheckCase check_thm4_shifted(const MajPair& pair, std::size_t n, const CauchyTable& table) {
    CheckCase c = make_case(pair_key(pair) + (n > 0 ? ",n=" + std::to_string(n) : ""),
                            {{"lambda", tuple_string(pair.lambda())},
                             {"mu", tuple_string(pair.mu())},
                             {"n", std::to_string(n)}},
                            product(pair.lambda(), n, table), Relation::le, product(pair.mu(), n, table));
    c.extras = {{"strict_majorization", pair.strict() ? "yes" : "no"}};
    return c;
}

CheckCase check_thm4(const MajPair& pair, const CauchyTable& table) { return check_thm4_shifted(pair, 0, table); }

CheckCase check_cor_power(std::size_t ell, std::size_t n, std::size_t k, const CauchyTable& table) {
    if (!(n > k && k > 0)) {
        throw DomainError("power corollary needs n > k > 0, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    const auto un = static_cast<unsigned>(n);
    const auto uk = static_cast<unsigned>(k);
    return make_case("l=" + std::to_string(ell) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k),
                     {{"l", std::to_string(ell)}, {"n", std::to_string(n)}, {"k", std::to_string(k)}},
                     pow(table.c(ell + k), un), Relation::le,
                     pow(table.c(ell + n), uk) * pow(table.c(ell), un - uk));
}

CheckCase check_thm5(std::size_t ell, std::size_t n, std::size_t k, std::size_t m, const CauchyTable& table) {
    if (!(n >= k && k >= m && 2 * k >= n && 2 * m >= n)) {
        throw DomainError("Theorem 5 hypothesis n >= k >= m, k >= n-k, m >= n-m fails for n=" + std::to_string(n) +
                          " k=" + std::to_string(k) + " m=" + std::to_string(m));
    }
    return make_case("l=" + std::to_string(ell) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                         ",m=" + std::to_string(m),
                     {{"l", std::to_string(ell)},
                      {"n", std::to_string(n)},
                      {"k", std::to_string(k)},
                      {"m", std::to_string(m)}},
                     table.c(ell + k) * table.c(ell + n - k), Relation::ge, table.c(ell + m) * table.c(ell + n - m));
}

GhiValues compute_ghi(std::size_t n, std::size_t m, std::size_t ell, const CauchyTable& table) {
    if (n < 1 || m < 1) throw DomainError("G/H/I need n, m >= 1");
    table.require(ell + n + 2 * m, "G/H/I");
    const auto& cl = table.c(ell);
    const auto& cn = table.c(ell + n);
    const auto& cm = table.c(ell + m);
    const auto& c2m = table.c(ell + 2 * m);
    const auto& cnm = table.c(ell + n + m);
    const auto& cn2m = table.c(ell + n + 2 * m);
    const ExactRational head = cn2m * cl * cl;
    const ExactRational tail = cn * cm * cm;
    const ExactRational cross_m = cnm * cm * cl;
    const ExactRational cross_2m = cn * c2m * cl;
    const ExactRational two(2);
    return {head - cross_m - cross_2m + tail, head - two * cross_m + tail, head - two * cross_2m + tail};
}

std::vector<CheckCase> check_thm6(std::size_t n, std::size_t m, std::size_t ell, const CauchyTable& table) {
    const GhiValues v = compute_ghi(n, m, ell, table);
    const std::string key = "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",l=" + std::to_string(ell);
    const KeyValues inputs = {{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"l", std::to_string(ell)}};
    std::vector<CheckCase> out;
    out.push_back(make_case(key + ":G>=0", inputs, v.g, Relation::ge, ExactRational(0)));
    out.push_back(make_case(key + ":H>=0", inputs, v.h, Relation::ge, ExactRational(0)));
    // H <= G when m < n, H = G when m = n, H >= G when m > n.
    const Relation direction = m < n ? Relation::le : (m == n ? Relation::eq : Relation::ge);
    out.push_back(make_case(key + ":H" + std::string(relation_symbol(direction)) + "G", inputs, v.h, direction, v.g));
    if (n >= m) out.push_back(make_case(key + ":I>=G", inputs, v.i, Relation::ge, v.g));
    return out;
}

std::vector<IndexTuple> descending_tuples(std::size_t length, std::size_t max_entry) {
    std::vector<IndexTuple> out;
    IndexTuple cur;
    std::function<void(std::size_t)> rec = [&](std::size_t bound) {
        if (cur.size() == length) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = bound + 1; v-- > 0;) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(max_entry);
    return out;
}

CheckReport sweep_thm4(const CauchyTable& table, std::size_t m_max, std::size_t entry_max) {
    CheckReport report;
    report.suite = "thm4";
    report.parameters = {{"m_max", std::to_string(m_max)}, {"entry_max", std::to_string(entry_max)}};
    std::size_t strict_pairs = 0;
    std::size_t strict_with_equality = 0;
    for (std::size_t m = 1; m <= m_max; ++m) {
        const auto tuples = descending_tuples(m, entry_max);
        for (const auto& lambda : tuples) {
            for (const auto& mu : tuples) {
                const auto pair = MajPair::make(lambda, mu);
                if (!pair) continue;
                CheckCase c = check_thm4(*pair, table);
                if (pair->strict()) {
                    ++strict_pairs;
                    if (c.margin.is_zero()) ++strict_with_equality;
                }
                report.add(std::move(c));
            }
        }
    }
    report.notes = {{"strict_pairs", std::to_string(strict_pairs)},
                    {"strict_pairs_with_zero_margin", std::to_string(strict_with_equality)}};
    return report;
}

CheckReport sweep_thm4_shifted(const CauchyTable& table, std::size_t shift_max, std::size_t m_max,
                               std::size_t entry_max) {
    CheckReport report;
    report.suite = "thm4-shifted";
    report.parameters = {{"shift_max", std::to_string(shift_max)},
                         {"m_max", std::to_string(m_max)},
                         {"entry_max", std::to_string(entry_max)}};
    for (std::size_t n = 0; n <= shift_max; ++n) {
        for (std::size_t m = 2; m <= m_max; ++m) {
            const auto tuples = descending_tuples(m, entry_max);
            for (const auto& lambda : tuples)
                for (const auto& mu : tuples)
                    if (const auto pair = MajPair::make(lambda, mu); pair && pair->strict())
                        report.add(check_thm4_shifted(*pair, n, table));
        }
    }
    return report;
}

namespace {

// One Robin Hood transfer: move a unit from an entry to one at least two smaller.
// Returns false when the tuple admits none (all entries within 1 of each other).
bool robin_hood(IndexTuple& t, std::mt19937_64& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> moves;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
            if (t[i] >= t[j] + 2) moves.emplace_back(i, j);
    if (moves.empty()) return false;
    const auto [i, j] = moves[rng() % moves.size()];
    --t[i];
    ++t[j];
    return true;
}

IndexTuple transfer_steps(IndexTuple t, std::mt19937_64& rng) {
    const std::size_t steps = rng() % 4;
    for (std::size_t s = 0; s < steps && robin_hood(t, rng); ++s) {}
    return t;
}

} // namespace

CheckReport sweep_thm4_random(const CauchyTable& table, std::uint64_t seed, std::size_t chains, std::size_t m_max,
                              std::size_t entry_max) {
    CheckReport report;
    report.suite = "thm4-random";
    report.seed = seed;
    report.parameters = {{"chains", std::to_string(chains)},
                         {"m_max", std::to_string(m_max)},
                         {"entry_max", std::to_string(entry_max)}};
    std::mt19937_64 rng(seed);
    for (std::size_t chain = 0; chain < chains; ++chain) {
        const std::size_t m = 2 + rng() % (m_max - 1);
        IndexTuple mu(m);
        for (auto& v : mu) v = rng() % (entry_max + 1);
        const IndexTuple nu = transfer_steps(mu, rng);
        const IndexTuple lambda = transfer_steps(nu, rng);
        const auto lower = MajPair::make(lambda, nu);
        const auto upper = MajPair::make(nu, mu);
        const auto outer = MajPair::make(lambda, mu);
        if (!lower || !upper || !outer) throw std::logic_error("Robin Hood transfer broke majorization");
        const std::string prefix = "chain=" + std::to_string(chain) + ":";
        CheckCase a = check_thm4(*lower, table);
        CheckCase b = check_thm4(*upper, table);
        CheckCase c = check_thm4(*outer, table);
        a.key = prefix + "lambda<=nu";
        b.key = prefix + "nu<=mu";
        c.key = prefix + "lambda<=mu";
        // Composed margins: prod c_mu - prod c_lambda = (nu - lambda) + (mu - nu).
        c.extras.emplace_back("composes", c.margin == a.margin + b.margin ? "yes" : "no");
        report.add(std::move(a));
        report.add(std::move(b));
        report.add(std::move(c));
    }
    return report;
}

CheckReport sweep_cor_power(const CauchyTable& table, std::size_t ell_max, std::size_t n_max) {
    CheckReport report;
    report.suite = "cor-power";
    report.parameters = {{"l_max", std::to_string(ell_max)}, {"n_max", std::to_string(n_max)}};
    for (std::size_t ell = 0; ell <= ell_max; ++ell)
        for (std::size_t n = 2; n <= n_max; ++n)
            for (std::size_t k = 1; k < n; ++k) report.add(check_cor_power(ell, n, k, table));
    return report;
}

CheckReport sweep_thm5(const CauchyTable& table, std::size_t ell_max, std::size_t n_max) {
    CheckReport report;
    report.suite = "thm5";
    report.parameters = {{"l_max", std::to_string(ell_max)}, {"n_max", std::to_string(n_max)}};
    for (std::size_t ell = 0; ell <= ell_max; ++ell)
        for (std::size_t n = 0; n <= n_max; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                for (std::size_t m = 0; m <= k; ++m)
                    if (2 * k >= n && 2 * m >= n) report.add(check_thm5(ell, n, k, m, table));
    return report;
}

CheckReport sweep_thm6(const CauchyTable& table, std::size_t n_max, std::size_t m_max, std::size_t ell_max) {
    CheckReport report;
    report.suite = "thm6";
    report.parameters = {{"n_max", std::to_string(n_max)},
                         {"m_max", std::to_string(m_max)},
                         {"l_max", std::to_string(ell_max)}};
    for (std::size_t n = 1; n <= n_max; ++n)
        for (std::size_t m = 1; m <= m_max; ++m)
            for (std::size_t ell = 0; ell <= ell_max; ++ell)
                for (auto& c : check_thm6(n, m, ell, table)) report.add(std::move(c));
    return report;
}

} // namespace cauchy2
