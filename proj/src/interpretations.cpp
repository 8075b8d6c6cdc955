#include "lucasnomial/interpretations.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>
#include <utility>

#include "lucasnomial/errors.hpp"
#include "lucasnomial/lucas.hpp"
#include "lucasnomial/lucasnomial.hpp"

namespace lucasnomial {

Mode parse_mode(std::string_view name) {
    if (name == "enumerate") {
        return Mode::enumerate;
    }
    if (name == "gf") {
        return Mode::gf;
    }
    throw DomainError("unknown mode " + std::string(name));
}

Flavor parse_flavor(std::string_view name) {
    if (name == "linear") {
        return Flavor::linear;
    }
    if (name == "circular") {
        return Flavor::circular;
    }
    if (name == "both") {
        return Flavor::both;
    }
    throw DomainError("unknown flavor " + std::string(name));
}

std::string_view mode_name(Mode mode) { return mode == Mode::enumerate ? "enumerate" : "gf"; }

std::string_view flavor_name(Flavor flavor) {
    switch (flavor) {
        case Flavor::linear:
            return "linear";
        case Flavor::circular:
            return "circular";
        case Flavor::both:
            return "both";
    }
    return "?";
}

namespace {

StripKind row_kind(PairFlavor flavor) {
    return flavor == PairFlavor::linear_pair ? StripKind::linear : StripKind::circular;
}

StripKind col_kind(PairFlavor flavor) {
    return flavor == PairFlavor::linear_pair ? StripKind::linear_nolead : StripKind::circular;
}

bool tiling_in(const Tiling& tiling, StripKind kind, unsigned length) {
    if (!is_valid(tiling) || tiling.length() != length) {
        return false;
    }
    switch (kind) {
        case StripKind::linear:
            return !tiling.circular;
        case StripKind::linear_nolead:
            return !tiling.circular && (tiling.tiles.empty() || tiling.tiles.front() != Tile::mono);
        case StripKind::circular:
            return tiling.circular;
    }
    return false;
}

}  // namespace

bool is_member(const TilingPair& pair) {
    if (!is_valid(pair.lambda)) {
        return false;
    }
    const Partition lambda_star = complement(pair.lambda);
    if (pair.row_tilings.size() != pair.lambda.parts.size() ||
        pair.col_tilings.size() != lambda_star.parts.size()) {
        return false;
    }
    for (std::size_t i = 0; i < pair.row_tilings.size(); ++i) {
        if (!tiling_in(pair.row_tilings[i], row_kind(pair.flavor), pair.lambda.parts[i])) {
            return false;
        }
    }
    for (std::size_t j = 0; j < pair.col_tilings.size(); ++j) {
        if (!tiling_in(pair.col_tilings[j], col_kind(pair.flavor), lambda_star.parts[j])) {
            return false;
        }
    }
    return true;
}

BivariatePolynomial weight(const TilingPair& pair) {
    BivariatePolynomial out = 1;
    for (const auto& tiling : pair.row_tilings) {
        out *= weight(tiling);
    }
    for (const auto& tiling : pair.col_tilings) {
        out *= weight(tiling);
    }
    return out;
}

namespace {

Integer pair_count(const Partition& lambda, const Partition& lambda_star, PairFlavor flavor) {
    Integer product = 1;
    for (unsigned part : lambda.parts) {
        product *= count(row_kind(flavor), part);
    }
    for (unsigned part : lambda_star.parts) {
        product *= count(col_kind(flavor), part);
    }
    return product;
}

void check_budget(unsigned rows, unsigned cols, PairFlavor flavor, std::uint64_t budget) {
    const Integer predicted = predicted_pair_count(rows, cols, flavor);
    if (predicted > Integer(std::to_string(budget))) {
        throw ResourceError("enumeration of " + predicted.get_str() + " tiling pairs over " +
                            std::to_string(rows) + "x" + std::to_string(cols) + " exceeds the budget of " +
                            std::to_string(budget) + "; use gf mode");
    }
}

}  // namespace

Integer predicted_pair_count(unsigned rows, unsigned cols, PairFlavor flavor) {
    Integer total = 0;
    for (const auto& lambda : enumerate_in_rect(rows, cols)) {
        total += pair_count(lambda, complement(lambda), flavor);
    }
    return total;
}

void for_each_pair(unsigned rows, unsigned cols, PairFlavor flavor,
                   const std::function<void(const TilingPair&)>& visit, std::uint64_t budget) {
    check_budget(rows, cols, flavor, budget);
    for (const auto& lambda : enumerate_in_rect(rows, cols)) {
        const Partition lambda_star = complement(lambda);
        // Candidate lists, rows first then columns.
        std::vector<std::vector<Tiling>> choices;
        choices.reserve(lambda.parts.size() + lambda_star.parts.size());
        for (unsigned part : lambda.parts) {
            choices.push_back(enumerate(row_kind(flavor), part));
        }
        for (unsigned part : lambda_star.parts) {
            choices.push_back(enumerate(col_kind(flavor), part));
        }
        if (std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); })) {
            continue;
        }
        std::vector<std::size_t> odometer(choices.size(), 0);
        TilingPair pair;
        pair.flavor = flavor;
        pair.lambda = lambda;
        while (true) {
            pair.row_tilings.clear();
            pair.col_tilings.clear();
            for (std::size_t i = 0; i < choices.size(); ++i) {
                auto& target = i < lambda.parts.size() ? pair.row_tilings : pair.col_tilings;
                target.push_back(choices[i][odometer[i]]);
            }
            visit(pair);
            // Advance the last position fastest; stop once every position wraps.
            std::size_t pos = choices.size();
            while (pos > 0 && ++odometer[pos - 1] == choices[pos - 1].size()) {
                odometer[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) {
                break;
            }
        }
    }
}

std::vector<TilingPair> enumerate_pairs(unsigned rows, unsigned cols, PairFlavor flavor, std::uint64_t budget) {
    std::vector<TilingPair> out;
    for_each_pair(rows, cols, flavor, [&](const TilingPair& pair) { out.push_back(pair); }, budget);
    return out;
}

namespace {

BivariatePolynomial rhs(unsigned m, unsigned n, PairFlavor flavor, Mode mode, std::uint64_t budget) {
    BivariatePolynomial total;
    if (mode == Mode::enumerate) {
        for_each_pair(m, n, flavor, [&](const TilingPair& pair) { total += weight(pair); }, budget);
        return total;
    }
    for (const auto& lambda : enumerate_in_rect(m, n)) {
        BivariatePolynomial term = 1;
        for (unsigned part : lambda.parts) {
            term *= gf(row_kind(flavor), part);
        }
        for (unsigned part : complement(lambda).parts) {
            term *= gf(col_kind(flavor), part);
        }
        total += term;
    }
    return total;
}

std::string case_key(std::string_view identity, int m, int n) {
    return std::string(identity) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
}

struct CaseTask {
    std::string key;
    std::function<std::pair<BivariatePolynomial, BivariatePolynomial>()> evaluate;
};

// Evaluates every task, optionally on worker threads, and records the results
// in task order so the report is identical either way.
void run_cases(IdentityReport& report, std::vector<CaseTask>& tasks, const VerifyOptions& options) {
    auto emit = [&](CaseTask& task, const BivariatePolynomial& lhs, const BivariatePolynomial& rhs) {
        const bool ok = report.record(task.key, lhs, rhs);
        if (options.on_case) {
            options.on_case(CaseResult{task.key, ok});
        }
    };
    if (!options.parallel || tasks.size() < 2) {
        for (auto& task : tasks) {
            auto [lhs, rhs] = task.evaluate();
            emit(task, lhs, rhs);
        }
        return;
    }
    std::vector<std::optional<std::pair<BivariatePolynomial, BivariatePolynomial>>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(tasks.size())));
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    try {
                        results[i] = tasks[i].evaluate();
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        emit(tasks[i], results[i]->first, results[i]->second);
    }
}

Integer power_of_two(unsigned exp) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, exp);
    return out;
}

}  // namespace

BivariatePolynomial rhs_linear(unsigned m, unsigned n, Mode mode, std::uint64_t budget) {
    return rhs(m, n, PairFlavor::linear_pair, mode, budget);
}

BivariatePolynomial rhs_circular(unsigned m, unsigned n, Mode mode, std::uint64_t budget) {
    return rhs(m, n, PairFlavor::circular_pair, mode, budget);
}

IdentityReport verify_theorem(unsigned m_max, unsigned n_max, Flavor flavor, Mode mode,
                              const VerifyOptions& options) {
    IdentityReport report("theorem", "m<=" + std::to_string(m_max) + " n<=" + std::to_string(n_max) +
                                         " flavor=" + std::string(flavor_name(flavor)) +
                                         " mode=" + std::string(mode_name(mode)));
    const std::uint64_t budget = options.budget;
    std::vector<CaseTask> tasks;
    for (unsigned m = 0; m <= m_max; ++m) {
        for (unsigned n = 0; n <= n_max; ++n) {
            const int total = static_cast<int>(m + n);
            if (flavor != Flavor::circular) {
                tasks.push_back({case_key("linear", m, n), [=] {
                                     return std::pair{rhs_linear(m, n, mode, budget), via_quotient(total, m)};
                                 }});
            }
            if (flavor != Flavor::linear) {
                tasks.push_back({case_key("circular", m, n), [=] {
                                     return std::pair{rhs_circular(m, n, mode, budget),
                                                      BivariatePolynomial(power_of_two(m + n)) *
                                                          via_quotient(total, m)};
                                 }});
            }
        }
    }
    if (mode == Mode::enumerate) {
        // Refuse before doing any work.
        for (unsigned m = 0; m <= m_max; ++m) {
            for (unsigned n = 0; n <= n_max; ++n) {
                if (flavor != Flavor::circular) {
                    check_budget(m, n, PairFlavor::linear_pair, budget);
                }
                if (flavor != Flavor::linear) {
                    check_budget(m, n, PairFlavor::circular_pair, budget);
                }
            }
        }
    }
    run_cases(report, tasks, options);
    return report;
}

namespace {

void add_lemma_tasks(std::vector<CaseTask>& tasks, int m, int n) {
    if (m >= 1) {
        tasks.push_back({case_key("fib-addition", m, n), [=] {
                             const auto um = static_cast<unsigned>(m);
                             const auto un = static_cast<unsigned>(n);
                             return std::pair{lucas_F(um + un), lucas_F(un + 1) * lucas_F(um) +
                                                                    BivariatePolynomial::t() * lucas_F(um - 1) *
                                                                        lucas_F(un)};
                         }});
    }
    tasks.push_back({case_key("luc-addition", m, n), [=] {
                         const auto um = static_cast<unsigned>(m);
                         const auto un = static_cast<unsigned>(n);
                         return std::pair{BivariatePolynomial(2) * lucas_F(um + un),
                                          lucas_L(un) * lucas_F(um) + lucas_L(um) * lucas_F(un)};
                     }});
}

}  // namespace

IdentityReport verify_recursions(unsigned N, const VerifyOptions& options) {
    IdentityReport report("recursions", "m+n<=" + std::to_string(N));
    std::vector<CaseTask> tasks;
    const int bound = static_cast<int>(N);
    for (int m = 0; m <= bound; ++m) {
        for (int n = 0; m + n <= bound; ++n) {
            add_lemma_tasks(tasks, m, n);
        }
    }
    for (int m = 1; m <= bound; ++m) {
        for (int n = 1; m + n <= bound; ++n) {
            tasks.push_back({case_key("rec-fib", m, n), [=] {
                                 const auto um = static_cast<unsigned>(m);
                                 const auto un = static_cast<unsigned>(n);
                                 return std::pair{via_quotient(m + n, m),
                                                  lucas_F(un + 1) * via_quotient(m + n - 1, m - 1) +
                                                      BivariatePolynomial::t() * lucas_F(um - 1) *
                                                          via_quotient(m + n - 1, n - 1)};
                             }});
            tasks.push_back({case_key("rec-luc", m, n), [=] {
                                 const auto um = static_cast<unsigned>(m);
                                 const auto un = static_cast<unsigned>(n);
                                 return std::pair{BivariatePolynomial(2) * via_quotient(m + n, m),
                                                  lucas_L(un) * via_quotient(m + n - 1, m - 1) +
                                                      lucas_L(um) * via_quotient(m + n - 1, n - 1)};
                             }});
        }
    }
    run_cases(report, tasks, options);
    return report;
}

IdentityReport verify_lemma1(unsigned m_max, unsigned n_max, const VerifyOptions& options) {
    IdentityReport report("lemma1", "m<=" + std::to_string(m_max) + " n<=" + std::to_string(n_max));
    std::vector<CaseTask> tasks;
    for (int m = 0; m <= static_cast<int>(m_max); ++m) {
        for (int n = 0; n <= static_cast<int>(n_max); ++n) {
            add_lemma_tasks(tasks, m, n);
        }
    }
    run_cases(report, tasks, options);
    return report;
}

}  // namespace lucasnomial
