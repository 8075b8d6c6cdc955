#include <doctest.h>

#include "lucasnomial/errors.hpp"
#include "lucasnomial/lucas.hpp"
#include "lucasnomial/specializations.hpp"
#include "oracles.hpp"

using namespace lucasnomial;

namespace {

Integer as_int(const SpecializedValue& v) { return std::get<Integer>(v); }
UnivariatePolynomial as_poly(const SpecializedValue& v) { return std::get<UnivariatePolynomial>(v); }

}  // namespace

TEST_CASE("specialize") {
    CHECK(as_int(specialize(4, 2, SpecializationPreset::fibonomial())) == 6);
    CHECK(as_int(specialize(5, 2, SpecializationPreset::fibonomial())) == 15);
    CHECK(to_canonical_text(as_poly(specialize(3, 1, SpecializationPreset::qbinomial()))) == "q^2 + q + 1");
    CHECK(as_int(specialize(2, 1, SpecializationPreset::lnomial(2))) == 2);
    // s = 2, t = -1 makes F_n = n, so the lnomial at ell = 2 is the ordinary binomial.
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(as_int(specialize(n, k, SpecializationPreset::lnomial(2))) == oracle::binomial(n, k));
        }
    }
    CHECK(as_int(specialize(6, 3, SpecializationPreset::lnomial(3))) == 6930);
    CHECK_THROWS_AS(specialize(3, 4, SpecializationPreset::fibonomial()), DomainError);
    CHECK_THROWS_AS(specialize(3, -1, SpecializationPreset::qbinomial()), DomainError);
    CHECK(to_text(specialize(4, 2, SpecializationPreset::qbinomial())) == "q^4 + q^3 + 2*q^2 + q + 1");
}

TEST_CASE("gaussian_binomial_oracle") {
    CHECK(to_canonical_text(gaussian_binomial_oracle(3, 1)) == "q^2 + q + 1");
    CHECK(gaussian_binomial_oracle(7, 0) == UnivariatePolynomial::constant(1));
    CHECK(to_canonical_text(gaussian_binomial_oracle(4, 2)) == "q^4 + q^3 + 2*q^2 + q + 1");
    CHECK_THROWS_AS(gaussian_binomial_oracle(2, 3), DomainError);
    for (unsigned n = 0; n <= 12; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(gaussian_binomial_oracle(static_cast<int>(n), static_cast<int>(k)) == oracle::q_pascal(n, k));
        }
    }
}

TEST_CASE("property: specializations match independent oracles") {
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(as_poly(specialize(n, k, SpecializationPreset::qbinomial())) == gaussian_binomial_oracle(n, k));
        }
    }
    for (unsigned n = 0; n <= 20; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(as_int(specialize(static_cast<int>(n), static_cast<int>(k), SpecializationPreset::fibonomial())) ==
                  oracle::fibonomial(n, k));
        }
    }
}

TEST_CASE("F_n(1, -1) is periodic and lnomials at ell = 1 stay well defined") {
    const int period[] = {0, 1, 1, 0, -1, -1};
    for (unsigned n = 0; n <= 24; ++n) {
        CHECK(eval_int(lucas_F(n), 1, -1) == period[n % 6]);
    }
    // F_3(1,-1) = 0, yet C(6,3) evaluates fine from the polynomial.
    CHECK_NOTHROW(specialize(6, 3, SpecializationPreset::lnomial(1)));
}
