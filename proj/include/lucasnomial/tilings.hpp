#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lucasnomial/polynomial.hpp"

namespace lucasnomial {

enum class Tile : std::uint8_t { mono, domino };

/// Which family of strip tilings to enumerate.
///  - linear:        L_n, all monomino/domino coverings of a 1 x n strip.
///  - linear_nolead: L'_n, linear tilings whose first tile is not a monomino
///                   (L'_0 = {empty}, L'_1 = {}).
///  - circular:      C_n, edges 0 and n identified, so one domino may wrap
///                   around and cover squares n and 1.
enum class StripKind : std::uint8_t { linear, linear_nolead, circular };

/// Parses "linear", "nolead"/"linear_nolead" or "circular"; throws DomainError otherwise.
StripKind parse_strip_kind(std::string_view name);
std::string_view strip_kind_name(StripKind kind);

/// A tiling of a 1 x n strip.
///
/// A wrap tiling stores only the tiles of the interior squares 2..n-1; the
/// circular domino covering squares n and 1 is the `wrap` flag. wrap implies
/// `circular` and n >= 2. The `circular` flag also fixes the weight of the
/// empty tiling: 1 as an element of L_0, 2 as an element of C_0.
struct Tiling {
    bool circular = false;
    bool wrap = false;
    std::vector<Tile> tiles;

    /// Number of squares covered, counting the circular domino.
    unsigned length() const;
    unsigned monominoes() const;
    /// Dominoes including the circular one.
    unsigned dominoes() const;

    friend auto operator<=>(const Tiling&, const Tiling&) = default;
    friend bool operator==(const Tiling&, const Tiling&) = default;
};

/// wrap implies circular and a strip of at least two squares.
bool is_valid(const Tiling& tiling);

/// All tilings of the given kind, duplicate-free. Order: lexicographic over
/// tile sequences with monomino < domino, non-wrap tilings before wrap ones.
std::vector<Tiling> enumerate(StripKind kind, unsigned n);

/// s^{#monominoes} t^{#dominoes}; the empty circular tiling weighs 2.
BivariatePolynomial weight(const Tiling& tiling);

/// Closed-form sum of weights over enumerate(kind, n):
/// linear F_{n+1}; nolead 1, 0, t F_{n-1} for n = 0, 1, >= 2; circular 2 for n = 0, else L_n.
BivariatePolynomial gf(StripKind kind, unsigned n);

/// Number of tilings of the given kind (the gf evaluated at s = t = 1,
/// counting the empty circular tiling once).
Integer count(StripKind kind, unsigned n);

/// "M D M"; wrap tilings lead with "(D)", e.g. "(D) M". The empty tiling is "e".
std::string to_text(const Tiling& tiling);

/// Inverse of to_text. Throws ParseError on malformed input.
Tiling parse_tiling(std::string_view text, bool circular);

}  // namespace lucasnomial
