#include <doctest.h>

#include <random>

#include "lucasnomial/errors.hpp"
#include "lucasnomial/polynomial.hpp"
#include "lucasnomial/report.hpp"

using namespace lucasnomial;

namespace {

BivariatePolynomial P(const char* text) { return parse_polynomial(text); }

BivariatePolynomial random_poly(std::mt19937& rng, int max_terms = 4, int max_exp = 4, int max_coeff = 9) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    BivariatePolynomial out;
    for (int i = terms(rng); i > 0; --i) {
        out.add_term(Monomial{static_cast<std::uint32_t>(exp(rng)), static_cast<std::uint32_t>(exp(rng))},
                     Integer(coeff(rng)));
    }
    return out;
}

}  // namespace

TEST_CASE("add") {
    CHECK(to_canonical_text(add(BivariatePolynomial::s(), BivariatePolynomial::t())) == "s + t");
    CHECK(add(P("s^3 + s*t"), P("s*t")) == P("s^3 + 2*s*t"));
    const auto p = P("3*s^2*t - 7");
    CHECK(add(p, BivariatePolynomial{}) == p);
    CHECK((p - p).is_zero());
}

TEST_CASE("mul") {
    CHECK(mul(P("s^2 + t"), P("s^2 + 2*t")) == P("s^4 + 3*s^2*t + 2*t^2"));
    const auto p = P("s^5 - 4*s*t^3 + 11");
    CHECK(mul(p, 1) == p);
    CHECK(mul(p, 0).is_zero());
}

TEST_CASE("exact_div") {
    CHECK(exact_div(P("s^2 - t^2"), P("s - t")) == P("s + t"));
    // F_1 F_2 F_3 F_4 / ((F_1 F_2)(F_1 F_2))
    const auto f4fact = P("s") * P("s^2 + t") * P("s^3 + 2*s*t");
    CHECK(exact_div(f4fact, P("s") * P("s")) == P("s^4 + 3*s^2*t + 2*t^2"));
    CHECK_THROWS_AS(exact_div(P("s + t"), P("s*t")), IndivisibleError);
    CHECK_THROWS_AS(exact_div(P("s^2 + 1"), P("s + 1")), IndivisibleError);
    CHECK_THROWS_AS(exact_div(P("s"), BivariatePolynomial{}), DomainError);
    CHECK(exact_div(P("6*s - 4*t"), Integer(2)) == P("3*s - 2*t"));
    CHECK_THROWS_AS(exact_div(P("3*s"), Integer(2)), IndivisibleError);
}

TEST_CASE("eval_int") {
    CHECK(eval_int(P("s^3 + 2*s*t"), 1, 1) == 3);
    CHECK(eval_int(BivariatePolynomial{}, 17, -4) == 0);
    CHECK(eval_int(P("s^4 + 3*s^2*t + 2*t^2"), 1, 1) == 6);
    CHECK(eval_int(P("s^2 - t"), 3, -2) == 11);
}

TEST_CASE("subst_univar") {
    const auto q = UnivariatePolynomial::q();
    const auto one = UnivariatePolynomial::constant(1);
    const auto S = q + one;
    const auto T = -q;
    // (q^3 - 1) / (q - 1)
    const auto q3 = exact_div(UnivariatePolynomial::monomial(1, 3) - one, q - one);
    CHECK(subst_univar(P("s^2 + t"), S, T) == q3);
    CHECK(to_canonical_text(subst_univar(P("s^2 + t"), S, T)) == "q^2 + q + 1");
    CHECK(subst_univar(P("-5"), S, T) == UnivariatePolynomial::constant(-5));
    CHECK(subst_univar(P("s"), S, T) == S);
}

TEST_CASE("canonical text") {
    CHECK(to_canonical_text(P("s^3 + 2*s*t")) == "s^3 + 2*s*t");
    CHECK(to_canonical_text(BivariatePolynomial{}) == "0");
    CHECK(to_canonical_text(-P("t^2")) == "-t^2");
    CHECK(to_canonical_text(P("t + s")) == "s + t");
    CHECK(to_canonical_text(P("1 - s*t^2 + 4*s^2")) == "4*s^2 - s*t^2 + 1");
    CHECK(to_canonical_text(P("-1")) == "-1");
    CHECK(to_latex(P("s^3 + 2*s*t - t^2")) == "s^{3} + 2 s t - t^{2}");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("s + "), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("s^0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2**s"), ParseError);
}

TEST_CASE("canonical order is descending s then descending t") {
    const auto p = P("t^3 + s*t + s + s^2 + 1 + s*t^5");
    std::vector<Monomial> order;
    for (const auto& [mono, c] : p.terms()) {
        order.push_back(mono);
    }
    const std::vector<Monomial> expected{{2, 0}, {1, 5}, {1, 1}, {1, 0}, {0, 3}, {0, 0}};
    CHECK(order == expected);
}

TEST_CASE("univariate exact division") {
    const auto one = UnivariatePolynomial::constant(1);
    const auto q = UnivariatePolynomial::q();
    CHECK(exact_div(q * q - one, q - one) == q + one);
    CHECK_THROWS_AS(exact_div(q * q + one, q - one), IndivisibleError);
    CHECK_THROWS_AS(exact_div(q, UnivariatePolynomial{}), DomainError);
}

TEST_CASE("property: ring laws, division, evaluation, text round trip") {
    std::mt19937 rng(20240601);
    for (int iter = 0; iter < 300; ++iter) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        const auto c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) {
            CHECK(exact_div(a * b, b) == a);
        }
        const Integer s0 = static_cast<int>(rng() % 11) - 5;
        const Integer t0 = static_cast<int>(rng() % 11) - 5;
        CHECK(eval_int(a * b, s0, t0) == eval_int(a, s0, t0) * eval_int(b, s0, t0));
        CHECK(parse_polynomial(to_canonical_text(a)) == a);
        CHECK(polynomial_from_json(to_json(a)) == a);
        for (const auto& [mono, coeff] : a.terms()) {
            CHECK(coeff != 0);
        }
    }
}

TEST_CASE("big coefficients stay exact") {
    BivariatePolynomial p = P("s + t");
    for (int i = 0; i < 7; ++i) {
        p = p * p;  // (s + t)^128
    }
    CHECK(p.coeff(64, 64) == Integer("23951146041928082866135587776380551750"));
    CHECK(exact_div(p, P("s + t")).coeff(127, 0) == 1);
}
