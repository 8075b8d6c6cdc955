#include "lucasnomial/lucas.hpp"

#include <memory>
#include <mutex>

#include "lucasnomial/errors.hpp"

namespace lucasnomial {

LucasCache::LucasCache() {
    fib_.push_back(std::make_unique<BivariatePolynomial>(0));
    fib_.push_back(std::make_unique<BivariatePolynomial>(1));
    luc_.push_back(std::make_unique<BivariatePolynomial>(2));
    luc_.push_back(std::make_unique<BivariatePolynomial>(BivariatePolynomial::s()));
    fact_.push_back(std::make_unique<BivariatePolynomial>(1));
    fact_.push_back(std::make_unique<BivariatePolynomial>(1));
}

LucasCache& LucasCache::shared() {
    static LucasCache cache;
    return cache;
}

void LucasCache::extend_to(unsigned n) {
    {
        std::shared_lock lock(mutex_);
        if (n < fib_.size()) {
            return;
        }
    }
    std::unique_lock lock(mutex_);
    const auto s = BivariatePolynomial::s();
    const auto t = BivariatePolynomial::t();
    while (fib_.size() <= n) {
        const std::size_t k = fib_.size();
        fib_.push_back(std::make_unique<BivariatePolynomial>(s * *fib_[k - 1] + t * *fib_[k - 2]));
        luc_.push_back(std::make_unique<BivariatePolynomial>(s * *luc_[k - 1] + t * *luc_[k - 2]));
        fact_.push_back(std::make_unique<BivariatePolynomial>(*fact_[k - 1] * *fib_[k]));
    }
}

const BivariatePolynomial& LucasCache::fib(unsigned n) {
    extend_to(n);
    std::shared_lock lock(mutex_);
    return *fib_[n];
}

const BivariatePolynomial& LucasCache::luc(unsigned n) {
    extend_to(n);
    std::shared_lock lock(mutex_);
    return *luc_[n];
}

const BivariatePolynomial& LucasCache::factorial(unsigned n) {
    extend_to(n);
    std::shared_lock lock(mutex_);
    return *fact_[n];
}

const BivariatePolynomial& lucas_F(unsigned n) { return LucasCache::shared().fib(n); }
const BivariatePolynomial& lucas_L(unsigned n) { return LucasCache::shared().luc(n); }
const BivariatePolynomial& lucas_factorial(unsigned n) { return LucasCache::shared().factorial(n); }

IdentityReport check_lemma1(int m, int n, AdditionFormula part) {
    const bool want_fib = part != AdditionFormula::luc;
    const bool want_luc = part != AdditionFormula::fib;
    if (m < 0 || n < 0) {
        throw DomainError("check_lemma1 requires m, n >= 0");
    }
    if (want_fib && m == 0) {
        throw DomainError("the F addition formula requires m >= 1");
    }
    const auto um = static_cast<unsigned>(m);
    const auto un = static_cast<unsigned>(n);
    const std::string params = "m=" + std::to_string(m) + " n=" + std::to_string(n);

    IdentityReport report("lemma1", params);
    if (want_fib) {
        BivariatePolynomial lhs = lucas_F(um + un);
        BivariatePolynomial rhs =
            lucas_F(un + 1) * lucas_F(um) + BivariatePolynomial::t() * lucas_F(um - 1) * lucas_F(un);
        report.record("fib-addition " + params, lhs, rhs);
    }
    if (want_luc) {
        BivariatePolynomial lhs = BivariatePolynomial(2) * lucas_F(um + un);
        BivariatePolynomial rhs = lucas_L(un) * lucas_F(um) + lucas_L(um) * lucas_F(un);
        report.record("luc-addition " + params, lhs, rhs);
    }
    return report;
}

}  // namespace lucasnomial
