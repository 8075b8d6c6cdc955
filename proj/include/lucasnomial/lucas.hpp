#pragma once

#include <memory>
#include <shared_mutex>
#include <vector>

#include "lucasnomial/polynomial.hpp"
#include "lucasnomial/report.hpp"

namespace lucasnomial {

/// Memoized Lucas polynomials F_n, companion polynomials L_n and factorials
/// F_n! = F_1 F_2 ... F_n.
///
///   F_0 = 0, F_1 = 1, L_0 = 2, L_1 = s,  X_n = s X_{n-1} + t X_{n-2}.
///
/// The cache only grows. Reads and extensions are guarded by a shared mutex,
/// so one instance may be used from several threads. Returned references stay
/// valid for the lifetime of the cache.
class LucasCache {
public:
    LucasCache();
    LucasCache(const LucasCache&) = delete;
    LucasCache& operator=(const LucasCache&) = delete;

    const BivariatePolynomial& fib(unsigned n);
    const BivariatePolynomial& luc(unsigned n);
    const BivariatePolynomial& factorial(unsigned n);

    /// Process-wide instance used by the free functions below.
    static LucasCache& shared();

private:
    void extend_to(unsigned n);

    std::shared_mutex mutex_;
    std::vector<std::unique_ptr<BivariatePolynomial>> fib_;
    std::vector<std::unique_ptr<BivariatePolynomial>> luc_;
    std::vector<std::unique_ptr<BivariatePolynomial>> fact_;
};

const BivariatePolynomial& lucas_F(unsigned n);
const BivariatePolynomial& lucas_L(unsigned n);
const BivariatePolynomial& lucas_factorial(unsigned n);

enum class AdditionFormula { fib, luc, both };

/// Checks, for the given (m, n),
///   F addition:  F_{m+n} = F_{n+1} F_m + t F_{m-1} F_n            (m >= 1, n >= 0)
///   L addition:  2 F_{m+n} = L_n F_m + L_m F_n                     (m, n >= 0)
/// The second identity is checked doubled so both sides stay integral.
/// Throws DomainError for negative arguments, or m = 0 when the F addition formula is requested.
IdentityReport check_lemma1(int m, int n, AdditionFormula part = AdditionFormula::both);

}  // namespace lucasnomial
