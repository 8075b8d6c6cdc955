// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// budget. All comparisons are exact polynomial or integer equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "lucasnomial/cli.hpp"
#include "lucasnomial/interpretations.hpp"
#include "lucasnomial/lucas.hpp"
#include "lucasnomial/lucasnomial.hpp"
#include "lucasnomial/partitions.hpp"
#include "lucasnomial/specializations.hpp"
#include "lucasnomial/tilings.hpp"
#include "oracles.hpp"

using namespace lucasnomial;

namespace {

struct Criterion {
    std::string id;
    std::string title;
    double budget_seconds;
    std::function<std::string()> check;  // empty string on success, else the reason
};

BivariatePolynomial pow2(unsigned e) {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, e);
    return v;
}

std::string ac1_linear_strip3() {
    std::ostringstream out;
    std::ostringstream err;
    if (cli::run({"tilings", "linear", "3", "--weights"}, out, err) != 0) {
        return "cli failed: " + err.str();
    }
    std::istringstream lines(out.str());
    std::string line;
    std::multiset<std::string> weights;
    BivariatePolynomial total;
    while (std::getline(lines, line)) {
        const auto tab = line.find('\t');
        const std::string head = line.substr(0, tab);
        if (head == "count" || head == "sum") {
            continue;
        }
        const std::string w = line.substr(tab + 1);
        weights.insert(w);
        total += parse_polynomial(w);
    }
    if (weights != std::multiset<std::string>{"s^3", "s*t", "s*t"}) {
        return "weight multiset differs";
    }
    if (total != lucas_F(4)) {
        return "sum " + to_canonical_text(total) + " != F_4";
    }
    return {};
}

std::string ac2_circular3() {
    const auto tilings = enumerate(StripKind::circular, 3);
    if (tilings.size() != 4) {
        return "expected 4 tilings, got " + std::to_string(tilings.size());
    }
    BivariatePolynomial total;
    for (const auto& tiling : tilings) {
        total += weight(tiling);
    }
    if (total != lucas_L(3) || total != parse_polynomial("s^3 + 3*s*t")) {
        return "sum " + to_canonical_text(total);
    }
    return {};
}

std::string ac3_worked_example() {
    const auto lambda = make_partition({3, 2, 2, 0, 0}, 5, 4);
    if (to_text(complement(lambda)) != "[5,4,2,2]") {
        return "complement " + to_text(complement(lambda));
    }
    const auto linear = fixtures::worked_example_pair(PairFlavor::linear_pair);
    const auto circular = fixtures::worked_example_pair(PairFlavor::circular_pair);
    if (!is_member(linear) || !is_member(circular)) {
        return "fixture is not a member of its pair set";
    }
    if (weight(linear) != parse_polynomial("s^6*t^7")) {
        return "linear weight " + to_canonical_text(weight(linear));
    }
    if (weight(circular) != parse_polynomial("4*s^6*t^7")) {
        return "circular weight " + to_canonical_text(weight(circular));
    }
    return {};
}

std::string ac4_three_methods() {
    for (int n = 0; n <= 14; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto q = via_quotient(n, k);
            if (via_recursion_fib(n, k) != q || via_recursion_luc(n, k) != q) {
                return "disagreement at (" + std::to_string(n) + "," + std::to_string(k) + ")";
            }
        }
    }
    return {};
}

std::string ac5_theorem() {
    for (unsigned m = 0; m <= 10; ++m) {
        for (unsigned n = 0; m + n <= 10; ++n) {
            const auto c = via_quotient(static_cast<int>(m + n), static_cast<int>(m));
            const auto c4 = pow2(m + n) * c;
            const std::string at = " at m=" + std::to_string(m) + " n=" + std::to_string(n);
            if (rhs_linear(m, n, Mode::gf) != c) {
                return "linear gf" + at;
            }
            if (rhs_circular(m, n, Mode::gf) != c4) {
                return "circular gf" + at;
            }
            if (m + n <= 7) {
                if (rhs_linear(m, n, Mode::enumerate) != c) {
                    return "linear enumerate" + at;
                }
                if (rhs_circular(m, n, Mode::enumerate) != c4) {
                    return "circular enumerate" + at;
                }
            }
        }
    }
    return {};
}

std::string ac6_recursions() {
    const auto report = verify_recursions(12);
    if (!report.passed()) {
        return summary_line(report);
    }
    // Both addition formulas and both recursions over their admissible ranges.
    std::map<std::string, std::size_t> per_identity;
    for (const auto& c : report.cases()) {
        per_identity[c.key.substr(0, c.key.find(' '))]++;
    }
    const std::map<std::string, std::size_t> expected{
        {"fib-addition", 78}, {"luc-addition", 91}, {"rec-fib", 66}, {"rec-luc", 66}};
    if (per_identity != expected) {
        return "unexpected case coverage";
    }
    return {};
}

std::string ac7_multiplicity_free() {
    for (unsigned m = 0; m <= 6; ++m) {
        for (unsigned n = 0; m + n <= 6; ++n) {
            const auto pairs = enumerate_pairs(m, n, PairFlavor::linear_pair);
            const std::set<TilingPair> distinct(pairs.begin(), pairs.end());
            const Integer expected = eval_int(via_quotient(static_cast<int>(m + n), static_cast<int>(m)), 1, 1);
            if (distinct.size() != pairs.size() || Integer(static_cast<unsigned long>(pairs.size())) != expected) {
                return "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + std::to_string(pairs.size()) +
                       " objects, " + std::to_string(distinct.size()) + " distinct, expected " + expected.get_str();
            }
        }
    }
    return {};
}

std::string ac8_specializations() {
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto q = std::get<UnivariatePolynomial>(specialize(n, k, SpecializationPreset::qbinomial()));
            if (q != gaussian_binomial_oracle(n, k)) {
                return "qbinomial (" + std::to_string(n) + "," + std::to_string(k) + ")";
            }
        }
    }
    for (unsigned n = 0; n <= 20; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            const auto v = std::get<Integer>(
                specialize(static_cast<int>(n), static_cast<int>(k), SpecializationPreset::fibonomial()));
            if (v != oracle::fibonomial(n, k)) {
                return "fibonomial (" + std::to_string(n) + "," + std::to_string(k) + ")";
            }
        }
    }
    if (std::get<Integer>(specialize(5, 2, SpecializationPreset::fibonomial())) != 15) {
        return "fibonomial (5,2) != 15";
    }
    return {};
}

std::string ac9_structure() {
    for (int n = 0; n <= 14; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto c = via_quotient(n, k);
            const std::string at = " at (" + std::to_string(n) + "," + std::to_string(k) + ")";
            if (c != via_quotient(n, n - k)) {
                return "symmetry" + at;
            }
            if (!has_nonnegative_coefficients(c)) {
                return "negative coefficient" + at;
            }
            if (!is_homogeneous(c, static_cast<std::uint64_t>(k * (n - k)))) {
                return "homogeneity" + at;
            }
        }
    }
    return {};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "L_3 tilings and weights sum to F_4", 1.0, ac1_linear_strip3},
        {"AC2", "C_3 has 4 tilings summing to L_3", 1.0, ac2_circular3},
        {"AC3", "worked 5x4 example: complement and pair weights", 1.0, ac3_worked_example},
        {"AC4", "quotient = rec-fib = rec-luc for k <= n <= 14", 10.0, ac4_three_methods},
        {"AC5", "tiling-pair sums equal C and 2^(m+n) C: enumerate m+n<=7, gf m+n<=10", 60.0, ac5_theorem},
        {"AC6", "addition formulas and both recursions, m+n<=12", 5.0, ac6_recursions},
        {"AC7", "multiplicity-free pairs counted by the fibonomial, m+n<=6", 10.0, ac7_multiplicity_free},
        {"AC8", "q-binomial n<=12 and fibonomial n<=20 oracles", 5.0, ac8_specializations},
        {"AC9", "symmetry, nonnegativity, homogeneity for n<=14", 5.0, ac9_structure},
    };
    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string reason;
        try {
            reason = criterion.check();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (reason.empty() && elapsed >= criterion.budget_seconds) {
            reason = "exceeded runtime budget";
        }
        const bool ok = reason.empty();
        failures += ok ? 0 : 1;
        std::cout << (ok ? "PASS " : "FAIL ") << criterion.id << "  " << criterion.title << "  (" << elapsed
                  << " s, budget " << criterion.budget_seconds << " s)";
        if (!ok) {
            std::cout << "  -- " << reason;
        }
        std::cout << '\n';
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << '\n';
    return failures == 0 ? 0 : 1;
}
