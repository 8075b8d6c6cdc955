#include "lucasnomial/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "lucasnomial/errors.hpp"
#include "lucasnomial/interpretations.hpp"
#include "lucasnomial/lucas.hpp"
#include "lucasnomial/lucasnomial.hpp"
#include "lucasnomial/partitions.hpp"
#include "lucasnomial/report.hpp"
#include "lucasnomial/specializations.hpp"
#include "lucasnomial/tilings.hpp"

namespace lucasnomial::cli {

namespace {

// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string render(const BivariatePolynomial& p, const std::string& format) {
    if (format == "json") {
        return to_json(p).dump();
    }
    if (format == "latex") {
        return to_latex(p);
    }
    return to_canonical_text(p);
}

const std::vector<std::string> kFormats{"text", "json", "latex"};

struct Request {
    // lucas
    std::string which;
    // shared positionals
    int n = 0;
    int k = 0;
    unsigned rows = 0;
    unsigned cols = 0;
    std::string format = "text";
    std::string method = "rec-fib";
    // tilings
    std::string kind;
    bool weights = false;
    // partitions
    bool with_complement = false;
    // verify
    std::string identity;
    std::optional<unsigned> m_max;
    std::optional<unsigned> n_max;
    std::string mode = "gf";
    std::string flavor = "both";
    bool parallel = false;
    std::string verify_format = "text";
    // specialize
    std::string preset;
    std::optional<long> ell;
};

int cmd_lucas(const Request& req, std::ostream& out) {
    const auto n = static_cast<unsigned>(req.n);
    const BivariatePolynomial& value =
        req.which == "F" ? lucas_F(n) : (req.which == "L" ? lucas_L(n) : lucas_factorial(n));
    out << render(value, req.format) << '\n';
    return kSuccess;
}

int cmd_lucasnomial(const Request& req, std::ostream& out) {
    out << render(lucasnomial(req.n, req.k, parse_method(req.method)), req.format) << '\n';
    return kSuccess;
}

int cmd_table(const Request& req, std::ostream& out) {
    const LucasnomialTable tab = table(req.n);
    if (req.format == "json") {
        auto rows = nlohmann::json::array();
        for (const auto& row : tab.rows()) {
            auto entries = nlohmann::json::array();
            for (const auto& entry : row) {
                entries.push_back(to_json(entry));
            }
            rows.push_back(entries);
        }
        out << nlohmann::json{{"N", req.n}, {"rows", rows}}.dump() << '\n';
        return kSuccess;
    }
    for (int n = 0; n <= tab.max_row(); ++n) {
        for (int k = 0; k <= n; ++k) {
            out << "C(" << n << "," << k << ") = " << render(tab.entry(n, k), req.format) << '\n';
        }
    }
    return kSuccess;
}

int cmd_tilings(const Request& req, std::ostream& out) {
    const StripKind kind = parse_strip_kind(req.kind);
    const auto n = static_cast<unsigned>(req.n);
    const auto tilings = enumerate(kind, n);
    BivariatePolynomial total;
    for (const auto& tiling : tilings) {
        out << to_text(tiling);
        if (req.weights) {
            const BivariatePolynomial w = weight(tiling);
            out << '\t' << to_canonical_text(w);
            total += w;
        }
        out << '\n';
    }
    out << "count\t" << tilings.size() << '\n';
    if (req.weights) {
        out << "sum\t" << to_canonical_text(total) << '\n';
    }
    return kSuccess;
}

int cmd_partitions(const Request& req, std::ostream& out) {
    const auto parts = enumerate_in_rect(req.rows, req.cols);
    for (const auto& lambda : parts) {
        out << to_text(lambda);
        if (req.with_complement) {
            out << " -> " << to_text(complement(lambda));
        }
        out << '\n';
    }
    out << "count\t" << parts.size() << '\n';
    return kSuccess;
}

int cmd_verify(const Request& req, std::ostream& out) {
    const bool is_theorem = req.identity == "theorem";
    const bool is_recursions = req.identity == "recursions";
    if (!is_theorem && (req.mode != "gf" || req.flavor != "both")) {
        throw UsageError("--mode and --flavor apply to 'verify theorem' only");
    }
    if (is_recursions && req.m_max) {
        throw UsageError("'verify recursions' takes its bound m+n <= N from --n-max");
    }
    const bool json = req.verify_format == "json";
    VerifyOptions options;
    options.parallel = req.parallel;
    if (!json) {
        options.on_case = [&out](const CaseResult& c) {
            out << (c.passed ? "PASS " : "FAIL ") << c.key << '\n';
            out.flush();
        };
    }
    IdentityReport report;
    if (is_theorem) {
        report = verify_theorem(req.m_max.value_or(3), req.n_max.value_or(3), parse_flavor(req.flavor),
                                parse_mode(req.mode), options);
    } else if (is_recursions) {
        report = verify_recursions(req.n_max.value_or(12), options);
    } else {
        report = verify_lemma1(req.m_max.value_or(12), req.n_max.value_or(12), options);
    }
    if (json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        out << summary_line(report) << '\n';
    }
    return report.passed() ? kSuccess : kVerificationFailed;
}

int cmd_specialize(const Request& req, std::ostream& out) {
    SpecializationPreset preset;
    if (req.preset == "lnomial") {
        if (!req.ell) {
            throw UsageError("--preset lnomial requires --ell");
        }
        preset = SpecializationPreset::lnomial(*req.ell);
    } else if (req.ell) {
        throw UsageError("--ell applies to --preset lnomial only");
    } else {
        preset = req.preset == "fibonomial" ? SpecializationPreset::fibonomial() : SpecializationPreset::qbinomial();
    }
    if (req.k < 0 || req.k > req.n) {
        throw UsageError("specialize requires 0 <= k <= n");
    }
    out << to_text(specialize(req.n, req.k, preset)) << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lucas polynomials, lucasnomial coefficients and their tiling interpretations", "lucasnomial"};
    app.require_subcommand(1, 1);
    Request req;

    auto* lucas = app.add_subcommand("lucas", "Lucas polynomial F_n, companion L_n, or factorial F_n!");
    lucas->add_option("which", req.which, "F, L or factorial")->required()->check(CLI::IsMember({"F", "L", "factorial"}));
    lucas->add_option("n", req.n)->required()->check(CLI::NonNegativeNumber);
    lucas->add_option("--format", req.format)->check(CLI::IsMember(kFormats));

    auto* nomial = app.add_subcommand("lucasnomial", "Lucasnomial coefficient C(n, k)");
    nomial->add_option("n", req.n)->required()->check(CLI::NonNegativeNumber);
    nomial->add_option("k", req.k)->required();
    nomial->add_option("--method", req.method)->check(CLI::IsMember({"quotient", "rec-fib", "rec-luc"}));
    nomial->add_option("--format", req.format)->check(CLI::IsMember(kFormats));

    auto* tab = app.add_subcommand("table", "Lucasnomial triangle through row N");
    tab->add_option("N", req.n)->required()->check(CLI::NonNegativeNumber);
    tab->add_option("--format", req.format)->check(CLI::IsMember(kFormats));

    auto* til = app.add_subcommand("tilings", "Enumerate strip tilings");
    til->add_option("kind", req.kind)->required()->check(CLI::IsMember({"linear", "nolead", "circular"}));
    til->add_option("n", req.n)->required()->check(CLI::Range(0, 30));
    til->add_flag("--weights", req.weights, "Print each weight and their sum");

    auto* part = app.add_subcommand("partitions", "Enumerate partitions in an m x n rectangle");
    part->add_option("m", req.rows)->required()->check(CLI::Range(0U, 20U));
    part->add_option("n", req.cols)->required()->check(CLI::Range(0U, 20U));
    part->add_flag("--complement", req.with_complement, "Also print the complement partition");

    auto* ver = app.add_subcommand("verify", "Verify an identity over a parameter range");
    ver->add_option("identity", req.identity)->required()->check(CLI::IsMember({"lemma1", "recursions", "theorem"}));
    ver->add_option("--m-max", req.m_max);
    ver->add_option("--n-max", req.n_max);
    ver->add_option("--mode", req.mode)->check(CLI::IsMember({"enumerate", "gf"}));
    ver->add_option("--flavor", req.flavor)->check(CLI::IsMember({"linear", "circular", "both"}));
    ver->add_flag("--parallel", req.parallel);
    ver->add_option("--format", req.verify_format)->check(CLI::IsMember({"text", "json"}));

    auto* special = app.add_subcommand("specialize", "Evaluate C(n, k) at a distinguished specialization");
    special->add_option("n", req.n)->required()->check(CLI::NonNegativeNumber);
    special->add_option("k", req.k)->required();
    special->add_option("--preset", req.preset)->required()->check(CLI::IsMember({"fibonomial", "lnomial", "qbinomial"}));
    special->add_option("--ell", req.ell);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (lucas->parsed()) {
            return cmd_lucas(req, out);
        }
        if (nomial->parsed()) {
            return cmd_lucasnomial(req, out);
        }
        if (tab->parsed()) {
            return cmd_table(req, out);
        }
        if (til->parsed()) {
            return cmd_tilings(req, out);
        }
        if (part->parsed()) {
            return cmd_partitions(req, out);
        }
        if (ver->parsed()) {
            return cmd_verify(req, out);
        }
        return cmd_specialize(req, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace lucasnomial::cli
