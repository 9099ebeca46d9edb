#include "sequence_analysis.hpp"

#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace cauchy2 {

DiffTable DiffTable::build(std::span<const ExactRational> mu, std::size_t depth) {
    if (mu.size() < depth + 1) {
        throw CapacityError("difference table of depth " + std::to_string(depth) + " needs " +
                            std::to_string(depth + 1) + " values, have " + std::to_string(mu.size()));
    }
    DiffTable dt;
    dt.rows_.reserve(depth + 1);
    dt.rows_.emplace_back(mu.begin(), mu.begin() + static_cast<std::ptrdiff_t>(depth + 1));
    for (std::size_t k = 0; k < depth; ++k) {
        const auto& prev = dt.rows_.back();
        std::vector<ExactRational> next;
        next.reserve(prev.size() - 1);
        for (std::size_t n = 0; n + 1 < prev.size(); ++n) next.push_back(prev[n] - prev[n + 1]);
        dt.rows_.push_back(std::move(next));
    }
    return dt;
}

const ExactRational& DiffTable::at(std::size_t k, std::size_t n) const {
    if (k + n > depth()) {
        throw CapacityError("difference entry (" + std::to_string(k) + "," + std::to_string(n) +
                            ") beyond depth " + std::to_string(depth()));
    }
    return rows_[k][n];
}

ExactRational DiffTable::binomial_form(std::size_t k, std::size_t n) const {
    if (k + n > depth()) throw CapacityError("binomial form beyond table depth");
    const auto& mu = rows_[0];
    ExactRational sum;
    BigInt binom = 1;
    for (std::size_t m = 0; m <= k; ++m) {
        const ExactRational term = ExactRational(binom) * mu[n + k - m];
        if (m % 2 == 0) sum += term; else sum -= term;
        binom = binom * static_cast<unsigned long>(k - m) / static_cast<unsigned long>(m + 1);
    }
    return k % 2 == 0 ? sum : -sum;
}

std::size_t DiffTable::entry_count() const {
    const std::size_t d = depth();
    return (d + 1) * (d + 2) / 2;
}

DiffTable build_diff_table(const CauchyTable& table, std::size_t depth) {
    table.require(depth, "difference table");
    DiffTable dt = DiffTable::build(table.mu_values(), depth);
    auto validate = [&](std::size_t k, std::size_t n) {
        if (dt.binomial_form(k, n) != dt.at(k, n)) {
            throw std::logic_error("difference recurrence and binomial sum disagree at (" + std::to_string(k) +
                                   "," + std::to_string(n) + ")");
        }
    };
    const std::size_t dense = std::min<std::size_t>(depth, 16);
    for (std::size_t k = 0; k <= dense; ++k)
        for (std::size_t n = 0; k + n <= dense; ++n) validate(k, n);
    for (std::size_t k = 0; k <= depth; k += 10) validate(k, depth - k);
    validate(depth, 0);
    return dt;
}

CheckReport check_complete_monotonicity(const DiffTable& dt) {
    CheckReport report;
    report.suite = "cm";
    report.parameters = {{"depth", std::to_string(dt.depth())}};
    std::size_t strict = 0;
    for (std::size_t k = 0; k <= dt.depth(); ++k) {
        for (std::size_t n = 0; k + n <= dt.depth(); ++n) {
            const ExactRational& d = dt.at(k, n);
            if (d.sign() > 0) ++strict;
            report.add(make_case("k=" + std::to_string(k) + ",n=" + std::to_string(n),
                                 {{"k", std::to_string(k)}, {"n", std::to_string(n)}}, d, Relation::ge,
                                 ExactRational(0)));
        }
    }
    if (const CheckCase* weakest = report.weakest_case()) {
        report.notes.emplace_back("min_entry", weakest->lhs.to_string());
        report.notes.emplace_back("min_entry_decimal", weakest->lhs.to_decimal(kReportDigits));
        report.notes.emplace_back("min_entry_at", weakest->key);
    }
    report.notes.emplace_back("strictly_positive_entries", std::to_string(strict));
    return report;
}

MinimalityProbe minimality_probe(const DiffTable& dt, const ExactRational& epsilon) {
    if (epsilon.sign() <= 0) throw DomainError("minimality probe needs epsilon > 0, got " + epsilon.to_string());
    MinimalityProbe probe;
    probe.epsilon = epsilon;
    probe.depth = dt.depth();
    probe.min_observed = dt.at(0, 0);
    for (std::size_t k = 0; k <= dt.depth(); ++k) {
        const ExactRational& d = dt.at(k, 0);
        probe.d0_sequence.push_back(d);
        if (d < probe.min_observed) probe.min_observed = d;
        if (d < epsilon) {
            probe.violation_order = k;
            break;
        }
    }
    return probe;
}

CheckReport check_log_convexity(std::span<const ExactRational> values) {
    CheckReport report;
    report.suite = "logconvex";
    report.parameters = {{"n_max", std::to_string(values.empty() ? 0 : values.size() - 1)}};
    for (std::size_t n = 0; n + 2 < values.size(); ++n) {
        report.add(make_case("n=" + std::to_string(n), {{"n", std::to_string(n)}}, values[n + 1] * values[n + 1],
                             Relation::le, values[n] * values[n + 2]));
    }
    return report;
}

CheckReport check_log_convexity(const CauchyTable& table) {
    if (table.n_max() < 2) throw CapacityError("log-convexity check needs c_0 .. c_2 at least");
    return check_log_convexity(table.c_values());
}

} // namespace cauchy2
