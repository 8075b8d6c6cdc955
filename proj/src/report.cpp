#include "lucasnomial/report.hpp"

#include "lucasnomial/errors.hpp"

namespace lucasnomial {

bool IdentityReport::record(std::string key, const BivariatePolynomial& lhs, const BivariatePolynomial& rhs) {
    const bool ok = lhs == rhs;
    if (!ok) {
        failures_.push_back({key, lhs, rhs});
    }
    cases_.push_back({std::move(key), ok});
    return ok;
}

void IdentityReport::merge(const IdentityReport& other) {
    cases_.insert(cases_.end(), other.cases_.begin(), other.cases_.end());
    failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
}

nlohmann::json to_json(const BivariatePolynomial& p) {
    auto terms = nlohmann::json::array();
    for (const auto& [mono, c] : p.terms()) {
        terms.push_back(nlohmann::json::array({mono.s_exp, mono.t_exp, c.get_str()}));
    }
    return {{"terms", terms}};
}

BivariatePolynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
        throw ParseError("polynomial JSON must be an object with a \"terms\" array");
    }
    BivariatePolynomial out;
    for (const auto& term : j.at("terms")) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_number_unsigned() ||
            !term[1].is_number_unsigned() || !term[2].is_string()) {
            throw ParseError("polynomial term must be [a, b, \"coefficient\"]");
        }
        Integer c;
        if (c.set_str(term[2].get<std::string>(), 10) != 0) {
            throw ParseError("bad coefficient " + term[2].get<std::string>());
        }
        out.add_term(Monomial{term[0].get<std::uint32_t>(), term[1].get<std::uint32_t>()}, c);
    }
    return out;
}

nlohmann::json to_json(const IdentityReport& report) {
    auto cases = nlohmann::json::array();
    for (const auto& c : report.cases()) {
        cases.push_back({{"case", c.key}, {"pass", c.passed}});
    }
    auto failures = nlohmann::json::array();
    for (const auto& f : report.failures()) {
        failures.push_back({{"case", f.key}, {"lhs", to_json(f.lhs)}, {"rhs", to_json(f.rhs)}});
    }
    return {{"identity", report.identity()},
            {"range", report.range()},
            {"cases_checked", report.cases_checked()},
            {"passed", report.passed()},
            {"cases", cases},
            {"failures", failures}};
}

std::string summary_line(const IdentityReport& report) {
    std::string out = report.identity() + " [" + report.range() + "]: " +
                      std::to_string(report.cases_checked()) + " cases, " +
                      std::to_string(report.failures().size()) + " failures: " +
                      (report.passed() ? "PASS" : "FAIL");
    if (const auto* f = report.first_failure()) {
        out += "\nfirst counterexample " + f->key + ": lhs = " + to_canonical_text(f->lhs) +
               ", rhs = " + to_canonical_text(f->rhs);
    }
    return out;
}

std::string to_text(const IdentityReport& report) {
    std::string out;
    for (const auto& c : report.cases()) {
        out += (c.passed ? "PASS " : "FAIL ") + c.key + "\n";
    }
    out += summary_line(report) + "\n";
    return out;
}

}  // namespace lucasnomial
