#include "report.hpp"

namespace cauchy2 {

std::string_view relation_symbol(Relation r) {
    switch (r) {
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::eq: return "==";
    case Relation::lt: return "<";
    }
    return "?";
}

CheckCase make_case(std::string key, KeyValues inputs, ExactRational lhs, Relation rel, ExactRational rhs) {
    CheckCase c;
    c.key = std::move(key);
    c.inputs = std::move(inputs);
    c.relation = rel;
    switch (rel) {
    case Relation::le:
        c.margin = rhs - lhs;
        c.holds = c.margin.sign() >= 0;
        break;
    case Relation::ge:
        c.margin = lhs - rhs;
        c.holds = c.margin.sign() >= 0;
        break;
    case Relation::eq:
        c.margin = -abs(lhs - rhs);
        c.holds = c.margin.is_zero();
        break;
    case Relation::lt:
        c.margin = rhs - lhs;
        c.holds = c.margin.sign() > 0;
        break;
    }
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

void CheckReport::add(CheckCase c) {
    if (c.holds) {
        ++passed;
    } else {
        ++failed;
        counterexamples.push_back(c.key);
    }
    cases.push_back(std::move(c));
}

const CheckCase* CheckReport::weakest_case() const {
    const CheckCase* best = nullptr;
    for (const auto& c : cases) {
        if (best == nullptr || c.margin < best->margin) best = &c;
    }
    return best;
}

nlohmann::ordered_json to_json(const ExactRational& value) {
    nlohmann::ordered_json j;
    j["num"] = value.numerator().get_str();
    j["den"] = value.denominator().get_str();
    j["decimal"] = value.to_decimal(kReportDigits);
    return j;
}

namespace {

nlohmann::ordered_json to_json(const KeyValues& kv) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : kv) j[k] = v;
    return j;
}

} // namespace

nlohmann::ordered_json to_json(const CheckCase& c) {
    nlohmann::ordered_json j;
    j["key"] = c.key;
    j["inputs"] = to_json(c.inputs);
    j["lhs"] = to_json(c.lhs);
    j["relation"] = std::string(relation_symbol(c.relation));
    j["rhs"] = to_json(c.rhs);
    j["holds"] = c.holds;
    j["margin"] = to_json(c.margin);
    if (!c.extras.empty()) j["extras"] = to_json(c.extras);
    return j;
}

nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["parameters"] = to_json(r.parameters);
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["counterexamples"] = r.counterexamples;
    j["notes"] = to_json(r.notes);
    j["seed"] = r.seed;
    j["version"] = std::string(kToolkitVersion);
    auto cases = nlohmann::ordered_json::array();
    for (const auto& c : r.cases) cases.push_back(to_json(c));
    j["cases"] = std::move(cases);
    return j;
}

std::string tuple_string(const std::vector<std::size_t>& values) {
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(values[i]);
    }
    return s + ")";
}

} // namespace cauchy2
