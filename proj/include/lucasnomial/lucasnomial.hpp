#pragma once

#include <map>
#include <mutex>
#include <string_view>
#include <utility>
#include <vector>

#include "lucasnomial/lucas.hpp"
#include "lucasnomial/polynomial.hpp"

namespace lucasnomial {

enum class Method { quotient, rec_fib, rec_luc };

/// Parses "quotient", "rec-fib" or "rec-luc"; throws DomainError otherwise.
Method parse_method(std::string_view name);
std::string_view method_name(Method method);

/// Lucasnomial coefficients C(n, k) = F_n! / (F_k! F_{n-k}!) by three
/// independent routes, each with its own memo table:
///
///  - quotient: exact division of factorials.
///  - rec_fib:  C(m+n, m) = F_{n+1} C(m+n-1, m-1) + t F_{m-1} C(m+n-1, n-1).
///  - rec_luc:  f(m, n) = 2^{m+n} C(m+n, m) satisfies
///              f(m, n) = L_n f(m-1, n) + L_m f(m, n-1), f(m, 0) = 2^m, f(0, n) = 2^n;
///              the result is f with every coefficient divided by 2^{m+n}.
///
/// Out-of-range k (k < 0 or k > n) yields 0. All methods are safe to call
/// concurrently.
class LucasnomialEngine {
public:
    explicit LucasnomialEngine(LucasCache& cache = LucasCache::shared()) : cache_(cache) {}
    LucasnomialEngine(const LucasnomialEngine&) = delete;
    LucasnomialEngine& operator=(const LucasnomialEngine&) = delete;

    BivariatePolynomial via_quotient(int n, int k);
    BivariatePolynomial via_recursion_fib(int n, int k);
    BivariatePolynomial via_recursion_luc(int n, int k);
    BivariatePolynomial compute(int n, int k, Method method);

    /// 2^{m+n} C(m+n, m) from the companion recursion, before the final division.
    BivariatePolynomial doubled_luc(int m, int n);

    static LucasnomialEngine& shared();

private:
    // Rows 0..n of the triangle for the F-recursion.
    void extend_fib_rows(int n);

    LucasCache& cache_;
    std::mutex quotient_mutex_;
    std::map<std::pair<int, int>, BivariatePolynomial> quotient_memo_;
    std::mutex fib_mutex_;
    std::vector<std::vector<BivariatePolynomial>> fib_rows_;
    std::mutex luc_mutex_;
    std::map<std::pair<int, int>, BivariatePolynomial> luc_memo_;  // keyed by (m, n) of f
};

BivariatePolynomial via_quotient(int n, int k);
BivariatePolynomial via_recursion_fib(int n, int k);
BivariatePolynomial via_recursion_luc(int n, int k);
BivariatePolynomial lucasnomial(int n, int k, Method method = Method::rec_fib);

/// Pascal-style triangle of lucasnomials, rows 0..N.
class LucasnomialTable {
public:
    LucasnomialTable() = default;
    explicit LucasnomialTable(std::vector<std::vector<BivariatePolynomial>> rows) : rows_(std::move(rows)) {}

    int max_row() const { return static_cast<int>(rows_.size()) - 1; }
    const BivariatePolynomial& entry(int n, int k) const { return rows_.at(n).at(k); }
    const std::vector<std::vector<BivariatePolynomial>>& rows() const { return rows_; }

private:
    std::vector<std::vector<BivariatePolynomial>> rows_;
};

/// Rows 0..N from the F-recursion. Entry (n, floor(n/2)) of every row is
/// re-derived by the quotient method; a mismatch throws std::logic_error.
LucasnomialTable table(int N);

}  // namespace lucasnomial
