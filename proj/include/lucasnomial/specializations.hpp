#pragma once

#include <string>
#include <variant>

#include "lucasnomial/polynomial.hpp"

namespace lucasnomial {

/// Distinguished substitutions for (s, t):
///   fibonomial  (1, 1)
///   lnomial     (ell, -1)
///   qbinomial   (q + 1, -q)
struct SpecializationPreset {
    enum class Kind { fibonomial, lnomial, qbinomial };

    Kind kind = Kind::fibonomial;
    long ell = 0;  // lnomial only

    static SpecializationPreset fibonomial() { return {Kind::fibonomial, 0}; }
    static SpecializationPreset lnomial(long ell) { return {Kind::lnomial, ell}; }
    static SpecializationPreset qbinomial() { return {Kind::qbinomial, 0}; }
};

using SpecializedValue = std::variant<Integer, UnivariatePolynomial>;

/// C(n, k) computed as a polynomial first, then specialized. Integer
/// quotients of specialized factorials are never formed, since F_n can
/// vanish at a specialization point (F_3(1, -1) = 0).
/// Throws DomainError unless 0 <= k <= n.
SpecializedValue specialize(int n, int k, const SpecializationPreset& preset);

/// prod_{i=1}^{k} (q^{n-k+i} - 1) / (q^i - 1) by exact univariate division,
/// independent of the Lucas machinery. Throws DomainError unless 0 <= k <= n.
UnivariatePolynomial gaussian_binomial_oracle(int n, int k);

std::string to_text(const SpecializedValue& value);

}  // namespace lucasnomial
