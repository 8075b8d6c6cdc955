#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lucasnomial {

using Integer = mpz_class;

/// Exponent pair of the monomial s^s_exp t^t_exp.
struct Monomial {
    std::uint32_t s_exp = 0;
    std::uint32_t t_exp = 0;

    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Dense polynomial in a single variable q; coeffs[i] multiplies q^i.
/// The highest stored coefficient is never zero, so the zero polynomial is empty.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Integer> coeffs);

    static UnivariatePolynomial constant(const Integer& c);
    /// c * q^exp
    static UnivariatePolynomial monomial(const Integer& c, std::size_t exp);
    static UnivariatePolynomial q() { return monomial(1, 1); }

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of a nonzero polynomial; -1 for zero.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Integer coeff(std::size_t exp) const;

    UnivariatePolynomial operator-() const;
    UnivariatePolynomial& operator+=(const UnivariatePolynomial& rhs);
    UnivariatePolynomial& operator-=(const UnivariatePolynomial& rhs);
    friend UnivariatePolynomial operator+(UnivariatePolynomial lhs, const UnivariatePolynomial& rhs) {
        return lhs += rhs;
    }
    friend UnivariatePolynomial operator-(UnivariatePolynomial lhs, const UnivariatePolynomial& rhs) {
        return lhs -= rhs;
    }
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& lhs, const UnivariatePolynomial& rhs);
    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

    UnivariatePolynomial pow(unsigned exp) const;
    Integer eval(const Integer& q0) const;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

/// Quotient of p by d, required to be exact. Throws IndivisibleError otherwise.
UnivariatePolynomial exact_div(const UnivariatePolynomial& p, const UnivariatePolynomial& d);

/// Descending exponents, e.g. "q^2 + q + 1".
std::string to_canonical_text(const UnivariatePolynomial& p);

/// Sparse polynomial in s and t with arbitrary-precision integer coefficients.
///
/// Terms are kept in lexicographic order with s > t, largest first: descending
/// s-exponent, ties broken by descending t-exponent. No stored coefficient is
/// zero, so two polynomials are equal iff their term maps are equal.
class BivariatePolynomial {
public:
    using TermMap = std::map<Monomial, Integer, std::greater<>>;

    BivariatePolynomial() = default;
    BivariatePolynomial(const Integer& c);  // NOLINT: implicit constant embedding
    BivariatePolynomial(long c) : BivariatePolynomial(Integer(c)) {}  // NOLINT

    static BivariatePolynomial monomial(const Integer& c, std::uint32_t s_exp, std::uint32_t t_exp);
    static BivariatePolynomial s() { return monomial(1, 1, 0); }
    static BivariatePolynomial t() { return monomial(1, 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Coefficient of s^a t^b (zero when absent).
    Integer coeff(std::uint32_t s_exp, std::uint32_t t_exp) const;
    /// Largest term under the lex order. Precondition: nonzero.
    const TermMap::value_type& leading_term() const { return *terms_.begin(); }

    BivariatePolynomial operator-() const;
    BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
    BivariatePolynomial& operator-=(const BivariatePolynomial& rhs);
    BivariatePolynomial& operator*=(const BivariatePolynomial& rhs);
    friend BivariatePolynomial operator+(BivariatePolynomial lhs, const BivariatePolynomial& rhs) {
        return lhs += rhs;
    }
    friend BivariatePolynomial operator-(BivariatePolynomial lhs, const BivariatePolynomial& rhs) {
        return lhs -= rhs;
    }
    friend BivariatePolynomial operator*(const BivariatePolynomial& lhs, const BivariatePolynomial& rhs);
    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

    /// Adds c * s^a t^b, dropping the term if it cancels.
    void add_term(const Monomial& mono, const Integer& c);

private:
    TermMap terms_;
};

BivariatePolynomial add(const BivariatePolynomial& p, const BivariatePolynomial& q);
BivariatePolynomial mul(const BivariatePolynomial& p, const BivariatePolynomial& q);

/// Exact quotient by repeated cancellation of leading terms (lex, s > t).
/// Throws DomainError when d is zero and IndivisibleError when the division
/// is not exact.
BivariatePolynomial exact_div(const BivariatePolynomial& p, const BivariatePolynomial& d);

/// Divides every coefficient by c; throws IndivisibleError unless all are multiples of c.
BivariatePolynomial exact_div(const BivariatePolynomial& p, const Integer& c);

Integer eval_int(const BivariatePolynomial& p, const Integer& s0, const Integer& t0);

/// p(S(q), T(q)) expanded.
UnivariatePolynomial subst_univar(const BivariatePolynomial& p, const UnivariatePolynomial& s_sub,
                                  const UnivariatePolynomial& t_sub);

/// Canonical text, e.g. "s^3 + 2*s*t", "-t^2", "0".
std::string to_canonical_text(const BivariatePolynomial& p);

/// LaTeX rendering in canonical term order, e.g. "s^{3} + 2 s t".
std::string to_latex(const BivariatePolynomial& p);

/// Inverse of to_canonical_text. Whitespace between tokens is optional.
/// Throws ParseError on malformed input.
BivariatePolynomial parse_polynomial(std::string_view text);

/// Every term s^a t^b satisfies a + 2b == weight_degree (zero polynomial qualifies).
bool is_homogeneous(const BivariatePolynomial& p, std::uint64_t weight_degree);

bool has_nonnegative_coefficients(const BivariatePolynomial& p);

}  // namespace lucasnomial
