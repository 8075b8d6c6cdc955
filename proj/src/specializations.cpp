#include "lucasnomial/specializations.hpp"

#include "lucasnomial/errors.hpp"
#include "lucasnomial/lucasnomial.hpp"

namespace lucasnomial {

namespace {

void check_range(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("specialization requires 0 <= k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    }
}

}  // namespace

SpecializedValue specialize(int n, int k, const SpecializationPreset& preset) {
    check_range(n, k);
    const BivariatePolynomial value = via_recursion_fib(n, k);
    switch (preset.kind) {
        case SpecializationPreset::Kind::fibonomial:
            return eval_int(value, 1, 1);
        case SpecializationPreset::Kind::lnomial:
            return eval_int(value, Integer(preset.ell), -1);
        case SpecializationPreset::Kind::qbinomial: {
            const auto q = UnivariatePolynomial::q();
            return subst_univar(value, q + UnivariatePolynomial::constant(1), -q);
        }
    }
    throw DomainError("unknown specialization preset");
}

UnivariatePolynomial gaussian_binomial_oracle(int n, int k) {
    check_range(n, k);
    const auto one = UnivariatePolynomial::constant(1);
    UnivariatePolynomial result = one;
    // After step i the running value is the Gaussian binomial [n-k+i choose i],
    // so every intermediate division is exact.
    for (int i = 1; i <= k; ++i) {
        const auto numerator = UnivariatePolynomial::monomial(1, static_cast<std::size_t>(n - k + i)) - one;
        const auto denominator = UnivariatePolynomial::monomial(1, static_cast<std::size_t>(i)) - one;
        result = exact_div(result * numerator, denominator);
    }
    return result;
}

std::string to_text(const SpecializedValue& value) {
    if (const auto* integer = std::get_if<Integer>(&value)) {
        return integer->get_str();
    }
    return to_canonical_text(std::get<UnivariatePolynomial>(value));
}

}  // namespace lucasnomial
