#include "lucasnomial/lucasnomial.hpp"

#include <stdexcept>
#include <string>

#include "lucasnomial/errors.hpp"

namespace lucasnomial {

Method parse_method(std::string_view name) {
    if (name == "quotient") {
        return Method::quotient;
    }
    if (name == "rec-fib") {
        return Method::rec_fib;
    }
    if (name == "rec-luc") {
        return Method::rec_luc;
    }
    throw DomainError("unknown method " + std::string(name));
}

std::string_view method_name(Method method) {
    switch (method) {
        case Method::quotient:
            return "quotient";
        case Method::rec_fib:
            return "rec-fib";
        case Method::rec_luc:
            return "rec-luc";
    }
    return "?";
}

LucasnomialEngine& LucasnomialEngine::shared() {
    static LucasnomialEngine engine;
    return engine;
}

BivariatePolynomial LucasnomialEngine::via_quotient(int n, int k) {
    if (n < 0) {
        throw DomainError("lucasnomial requires n >= 0");
    }
    if (k < 0 || k > n) {
        return {};
    }
    {
        std::lock_guard lock(quotient_mutex_);
        if (auto it = quotient_memo_.find({n, k}); it != quotient_memo_.end()) {
            return it->second;
        }
    }
    const auto un = static_cast<unsigned>(n);
    const auto uk = static_cast<unsigned>(k);
    BivariatePolynomial result =
        exact_div(cache_.factorial(un), cache_.factorial(uk) * cache_.factorial(un - uk));
    std::lock_guard lock(quotient_mutex_);
    return quotient_memo_.try_emplace({n, k}, std::move(result)).first->second;
}

void LucasnomialEngine::extend_fib_rows(int n) {
    const auto t = BivariatePolynomial::t();
    while (static_cast<int>(fib_rows_.size()) <= n) {
        const int row = static_cast<int>(fib_rows_.size());
        std::vector<BivariatePolynomial> entries(static_cast<std::size_t>(row) + 1);
        entries.front() = 1;
        entries.back() = 1;
        const auto& prev = row > 0 ? fib_rows_.back() : entries;
        // Entry (m + n', m) with m = k, n' = row - k, both >= 1.
        for (int k = 1; k < row; ++k) {
            const auto m = static_cast<unsigned>(k);
            const auto np = static_cast<unsigned>(row - k);
            entries[k] = cache_.fib(np + 1) * prev[m - 1] + t * cache_.fib(m - 1) * prev[np - 1];
        }
        fib_rows_.push_back(std::move(entries));
    }
}

BivariatePolynomial LucasnomialEngine::via_recursion_fib(int n, int k) {
    if (n < 0) {
        throw DomainError("lucasnomial requires n >= 0");
    }
    if (k < 0 || k > n) {
        return {};
    }
    std::lock_guard lock(fib_mutex_);
    extend_fib_rows(n);
    return fib_rows_[n][k];
}

BivariatePolynomial LucasnomialEngine::doubled_luc(int m, int n) {
    if (m < 0 || n < 0) {
        throw DomainError("doubled_luc requires m, n >= 0");
    }
    std::lock_guard lock(luc_mutex_);
    // Fill by increasing m + n so both predecessors exist.
    for (int total = 0; total <= m + n; ++total) {
        for (int i = 0; i <= total; ++i) {
            const int j = total - i;
            if (i > m || j > n || luc_memo_.contains({i, j})) {
                continue;
            }
            BivariatePolynomial value;
            if (i == 0 || j == 0) {
                Integer power;
                mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(total));
                value = power;
            } else {
                value = cache_.luc(static_cast<unsigned>(j)) * luc_memo_.at({i - 1, j}) +
                        cache_.luc(static_cast<unsigned>(i)) * luc_memo_.at({i, j - 1});
            }
            luc_memo_.emplace(std::pair{i, j}, std::move(value));
        }
    }
    return luc_memo_.at({m, n});
}

BivariatePolynomial LucasnomialEngine::via_recursion_luc(int n, int k) {
    if (n < 0) {
        throw DomainError("lucasnomial requires n >= 0");
    }
    if (k < 0 || k > n) {
        return {};
    }
    const BivariatePolynomial f = doubled_luc(k, n - k);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(n));
    try {
        return exact_div(f, power);
    } catch (const IndivisibleError& e) {
        throw InternalParityError("2^" + std::to_string(n) + " does not divide f(" + std::to_string(k) + "," +
                                  std::to_string(n - k) + "): " + e.what());
    }
}

BivariatePolynomial LucasnomialEngine::compute(int n, int k, Method method) {
    switch (method) {
        case Method::quotient:
            return via_quotient(n, k);
        case Method::rec_fib:
            return via_recursion_fib(n, k);
        case Method::rec_luc:
            return via_recursion_luc(n, k);
    }
    throw DomainError("unknown method");
}

BivariatePolynomial via_quotient(int n, int k) { return LucasnomialEngine::shared().via_quotient(n, k); }
BivariatePolynomial via_recursion_fib(int n, int k) { return LucasnomialEngine::shared().via_recursion_fib(n, k); }
BivariatePolynomial via_recursion_luc(int n, int k) { return LucasnomialEngine::shared().via_recursion_luc(n, k); }
BivariatePolynomial lucasnomial(int n, int k, Method method) {
    return LucasnomialEngine::shared().compute(n, k, method);
}

LucasnomialTable table(int N) {
    if (N < 0) {
        throw DomainError("table requires N >= 0");
    }
    auto& engine = LucasnomialEngine::shared();
    std::vector<std::vector<BivariatePolynomial>> rows;
    rows.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        std::vector<BivariatePolynomial> row;
        row.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            row.push_back(engine.via_recursion_fib(n, k));
        }
        if (row[n / 2] != engine.via_quotient(n, n / 2)) {
            throw std::logic_error("lucasnomial table row " + std::to_string(n) +
                                   " disagrees with the quotient method");
        }
        rows.push_back(std::move(row));
    }
    return LucasnomialTable(std::move(rows));
}

}  // namespace lucasnomial
