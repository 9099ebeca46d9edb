#include "exact_core.hpp"

#include <string>

#include "errors.hpp"

namespace cauchy2 {

namespace {

void check_capacity(std::size_t n_max, std::size_t capacity) {
    if (n_max > capacity) {
        throw CapacityError("table index " + std::to_string(n_max) + " exceeds the configured bound " +
                            std::to_string(capacity));
    }
}

} // namespace

StirlingTriangle build_stirling(std::size_t n_max, std::size_t capacity) {
    check_capacity(n_max, capacity);
    StirlingTriangle tri;
    tri.rows_.reserve(n_max + 1);
    tri.rows_.push_back({BigInt(1)});
    for (std::size_t n = 0; n < n_max; ++n) {
        const auto& prev = tri.rows_.back();
        std::vector<BigInt> next(n + 2);
        // s(n+1,k) = n s(n,k) + s(n,k-1)
        for (std::size_t k = 0; k <= n + 1; ++k) {
            BigInt v = 0;
            if (k <= n) v = prev[k] * static_cast<unsigned long>(n);
            if (k >= 1) v += prev[k - 1];
            next[k] = std::move(v);
        }
        tri.rows_.push_back(std::move(next));
    }
    return tri;
}

ExactRational cauchy_via_stirling(std::size_t n, const StirlingTriangle& tri) {
    if (n > tri.n_max()) {
        throw CapacityError("Stirling triangle has " + std::to_string(tri.n_max() + 1) + " rows, need row " +
                            std::to_string(n));
    }
    mpq_class sum = 0;
    const auto row = tri.row(n);
    for (std::size_t k = 0; k <= n; ++k) {
        sum += mpq_class(row[k], static_cast<unsigned long>(k + 1));
        sum.canonicalize();
    }
    return ExactRational(sum);
}

std::vector<ExactRational> series_coefficients(std::size_t n_max) {
    std::vector<ExactRational> a;
    a.reserve(n_max + 1);
    a.emplace_back(1);
    for (std::size_t j = 1; j <= n_max; ++j) {
        const BigInt den = BigInt(static_cast<unsigned long>(j)) * static_cast<unsigned long>(j + 1);
        a.emplace_back(BigInt(j % 2 == 1 ? 1 : -1), den);
    }
    return a;
}

CauchyTable cauchy_via_series(std::size_t n_max, std::size_t capacity) {
    check_capacity(n_max, capacity);
    const auto a = series_coefficients(n_max);
    std::vector<ExactRational> b;
    b.reserve(n_max + 1);
    b.emplace_back(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        ExactRational acc;
        for (std::size_t j = 1; j <= n; ++j) acc += a[j] * b[n - j];
        b.push_back(-acc);
    }
    std::vector<ExactRational> c;
    c.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        ExactRational cn = b[n] * ExactRational(factorial(static_cast<unsigned>(n)));
        c.push_back(n % 2 == 0 ? cn : -cn);
    }
    return CauchyTable::from_values(std::move(c));
}

CauchyTable cross_checked_table(std::size_t n_max, std::size_t capacity) {
    CauchyTable table = cauchy_via_series(n_max, capacity);
    const StirlingTriangle tri = build_stirling(n_max, capacity);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const ExactRational via_stirling = cauchy_via_stirling(n, tri);
        if (via_stirling != table.c(n)) {
            throw RouteMismatchError("exact routes disagree at n=" + std::to_string(n) + ": Stirling " +
                                     via_stirling.to_string() + " vs series " + table.c(n).to_string());
        }
    }
    return table;
}

CauchyTable CauchyTable::from_values(std::vector<ExactRational> c) {
    if (c.empty()) throw DomainError("Cauchy table needs at least c_0");
    CauchyTable t;
    t.mu_.reserve(c.size());
    BigInt fact = 1;
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (n > 0) fact *= static_cast<unsigned long>(n);
        if (c[n].sign() <= 0) throw DomainError("Cauchy table entry c_" + std::to_string(n) + " is not positive");
        t.mu_.push_back(c[n] / ExactRational(fact));
    }
    t.c_ = std::move(c);
    return t;
}

const ExactRational& CauchyTable::c(std::size_t n) const {
    require(n, "c");
    return c_[n];
}

const ExactRational& CauchyTable::mu(std::size_t n) const {
    require(n, "mu");
    return mu_[n];
}

void CauchyTable::require(std::size_t n, const char* what) const {
    if (n > n_max()) {
        throw CapacityError(std::string(what) + ": index " + std::to_string(n) + " beyond table bound " +
                            std::to_string(n_max()));
    }
}

ExactRational rising_factorial(const ExactRational& x, std::size_t n) {
    ExactRational r(1);
    for (std::size_t i = 0; i < n; ++i) r *= x + ExactRational(static_cast<long>(i));
    return r;
}

ExactRational falling_factorial(const ExactRational& x, std::size_t n) {
    ExactRational r(1);
    for (std::size_t i = 0; i < n; ++i) r *= x - ExactRational(static_cast<long>(i));
    return r;
}

} // namespace cauchy2
