#include <doctest.h>

#include <algorithm>
#include <set>

#include "lucasnomial/errors.hpp"
#include "lucasnomial/lucas.hpp"
#include "lucasnomial/tilings.hpp"
#include "oracles.hpp"

using namespace lucasnomial;

namespace {

std::multiset<std::string> weight_multiset(const std::vector<Tiling>& tilings) {
    std::multiset<std::string> out;
    for (const auto& tiling : tilings) {
        out.insert(to_canonical_text(weight(tiling)));
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate") {
    const auto l3 = enumerate(StripKind::linear, 3);
    CHECK(l3.size() == 3);
    CHECK(weight_multiset(l3) == std::multiset<std::string>{"s^3", "s*t", "s*t"});
    CHECK(to_text(l3[0]) == "M M M");
    CHECK(to_text(l3[1]) == "M D");
    CHECK(to_text(l3[2]) == "D M");

    const auto c3 = enumerate(StripKind::circular, 3);
    CHECK(c3.size() == 4);
    CHECK(c3.back().wrap);
    CHECK(to_text(c3.back()) == "(D) M");

    CHECK(enumerate(StripKind::linear_nolead, 1).empty());
    const auto nolead0 = enumerate(StripKind::linear_nolead, 0);
    REQUIRE(nolead0.size() == 1);
    CHECK(weight(nolead0[0]) == BivariatePolynomial(1));

    const auto c2 = enumerate(StripKind::circular, 2);
    REQUIRE(c2.size() == 3);
    CHECK(to_text(c2[0]) == "M M");
    CHECK(to_text(c2[1]) == "D");
    CHECK(to_text(c2[2]) == "(D)");
    CHECK(weight_multiset(c2) == std::multiset<std::string>{"s^2", "t", "t"});

    CHECK(enumerate(StripKind::circular, 1).size() == 1);
    CHECK_FALSE(enumerate(StripKind::circular, 1)[0].wrap);
}

TEST_CASE("weight") {
    CHECK(weight(parse_tiling("M M M", false)) == parse_polynomial("s^3"));
    CHECK(weight(Tiling{true, false, {}}) == BivariatePolynomial(2));
    CHECK(weight(Tiling{false, false, {}}) == BivariatePolynomial(1));
    CHECK(weight(parse_tiling("(D) M", true)) == parse_polynomial("s*t"));
}

TEST_CASE("gf") {
    CHECK(gf(StripKind::linear, 3) == parse_polynomial("s^3 + 2*s*t"));
    CHECK(gf(StripKind::linear_nolead, 0) == BivariatePolynomial(1));
    CHECK(gf(StripKind::linear_nolead, 1).is_zero());
    CHECK(gf(StripKind::circular, 0) == BivariatePolynomial(2));
}

TEST_CASE("enumeration matches closed forms, counts, and is duplicate-free and ordered") {
    for (StripKind kind : {StripKind::linear, StripKind::linear_nolead, StripKind::circular}) {
        for (unsigned n = 0; n <= 12; ++n) {
            const auto tilings = enumerate(kind, n);
            BivariatePolynomial total;
            for (const auto& tiling : tilings) {
                CHECK(is_valid(tiling));
                CHECK(tiling.length() == n);
                total += weight(tiling);
            }
            CHECK(total == gf(kind, n));
            CHECK(Integer(static_cast<unsigned long>(tilings.size())) == count(kind, n));
            CHECK(std::is_sorted(tilings.begin(), tilings.end()));
            CHECK(std::set<Tiling>(tilings.begin(), tilings.end()).size() == tilings.size());
        }
    }
    for (unsigned n = 2; n <= 12; ++n) {
        CHECK(enumerate(StripKind::linear, n).size() ==
              enumerate(StripKind::linear, n - 1).size() + enumerate(StripKind::linear, n - 2).size());
        CHECK(enumerate(StripKind::circular, n).size() ==
              enumerate(StripKind::linear, n).size() + enumerate(StripKind::linear, n - 2).size());
    }
}

TEST_CASE("text form round trips") {
    for (unsigned n = 0; n <= 6; ++n) {
        for (const auto& tiling : enumerate(StripKind::circular, n)) {
            CHECK(parse_tiling(to_text(tiling), true) == tiling);
        }
    }
    CHECK_THROWS_AS(parse_tiling("M X", false), ParseError);
    CHECK_THROWS_AS(parse_tiling("(D) M", false), ParseError);
    CHECK(parse_strip_kind("nolead") == StripKind::linear_nolead);
    CHECK_THROWS_AS(parse_strip_kind("spiral"), DomainError);
}
