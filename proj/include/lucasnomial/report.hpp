#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "lucasnomial/polynomial.hpp"

namespace lucasnomial {

struct CaseResult {
    std::string key;
    bool passed = true;
};

struct IdentityFailure {
    std::string key;
    BivariatePolynomial lhs;
    BivariatePolynomial rhs;
};

/// Outcome of checking an identity over a parameter range. Failures are
/// recorded rather than thrown; the report passes iff no failure was recorded.
class IdentityReport {
public:
    IdentityReport() = default;
    IdentityReport(std::string identity, std::string range)
        : identity_(std::move(identity)), range_(std::move(range)) {}

    /// Compares lhs and rhs exactly and records the case. Returns whether they agree.
    bool record(std::string key, const BivariatePolynomial& lhs, const BivariatePolynomial& rhs);
    void merge(const IdentityReport& other);

    const std::string& identity() const { return identity_; }
    const std::string& range() const { return range_; }
    const std::vector<CaseResult>& cases() const { return cases_; }
    const std::vector<IdentityFailure>& failures() const { return failures_; }
    std::size_t cases_checked() const { return cases_.size(); }
    bool passed() const { return failures_.empty(); }
    /// First counterexample, if any.
    const IdentityFailure* first_failure() const { return failures_.empty() ? nullptr : &failures_.front(); }

private:
    std::string identity_;
    std::string range_;
    std::vector<CaseResult> cases_;
    std::vector<IdentityFailure> failures_;
};

/// {"terms": [[a, b, "coeff"], ...]} in canonical order.
nlohmann::json to_json(const BivariatePolynomial& p);
BivariatePolynomial polynomial_from_json(const nlohmann::json& j);

/// {"identity", "range", "cases_checked", "passed", "cases": [{"case", "pass"}],
///  "failures": [{"case", "lhs", "rhs"}]}
nlohmann::json to_json(const IdentityReport& report);

/// Per-case lines "PASS <key>" / "FAIL <key>" followed by a summary line.
std::string to_text(const IdentityReport& report);
std::string summary_line(const IdentityReport& report);

}  // namespace lucasnomial
