#include "lucasnomial/tilings.hpp"

#include <sstream>

#include "lucasnomial/errors.hpp"
#include "lucasnomial/lucas.hpp"

namespace lucasnomial {

StripKind parse_strip_kind(std::string_view name) {
    if (name == "linear") {
        return StripKind::linear;
    }
    if (name == "nolead" || name == "linear_nolead") {
        return StripKind::linear_nolead;
    }
    if (name == "circular") {
        return StripKind::circular;
    }
    throw DomainError("unknown tiling kind " + std::string(name));
}

std::string_view strip_kind_name(StripKind kind) {
    switch (kind) {
        case StripKind::linear:
            return "linear";
        case StripKind::linear_nolead:
            return "nolead";
        case StripKind::circular:
            return "circular";
    }
    return "?";
}

unsigned Tiling::monominoes() const {
    unsigned count = 0;
    for (Tile tile : tiles) {
        count += tile == Tile::mono ? 1U : 0U;
    }
    return count;
}

unsigned Tiling::dominoes() const {
    return static_cast<unsigned>(tiles.size()) - monominoes() + (wrap ? 1U : 0U);
}

unsigned Tiling::length() const { return monominoes() + 2 * dominoes(); }

bool is_valid(const Tiling& tiling) { return !tiling.wrap || (tiling.circular && tiling.length() >= 2); }

namespace {

// Appends every linear tiling of n squares to out, lexicographically (mono first).
void linear_tilings(unsigned n, std::vector<Tile>& prefix, std::vector<std::vector<Tile>>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    prefix.push_back(Tile::mono);
    linear_tilings(n - 1, prefix, out);
    prefix.pop_back();
    if (n >= 2) {
        prefix.push_back(Tile::domino);
        linear_tilings(n - 2, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<Tile>> linear_tilings(unsigned n) {
    std::vector<std::vector<Tile>> out;
    std::vector<Tile> prefix;
    prefix.reserve(n);
    linear_tilings(n, prefix, out);
    return out;
}

}  // namespace

std::vector<Tiling> enumerate(StripKind kind, unsigned n) {
    std::vector<Tiling> out;
    switch (kind) {
        case StripKind::linear:
            for (auto& tiles : linear_tilings(n)) {
                out.push_back(Tiling{false, false, std::move(tiles)});
            }
            break;
        case StripKind::linear_nolead:
            for (auto& tiles : linear_tilings(n)) {
                if (tiles.empty() || tiles.front() != Tile::mono) {
                    out.push_back(Tiling{false, false, std::move(tiles)});
                }
            }
            break;
        case StripKind::circular:
            for (auto& tiles : linear_tilings(n)) {
                out.push_back(Tiling{true, false, std::move(tiles)});
            }
            if (n >= 2) {
                for (auto& tiles : linear_tilings(n - 2)) {
                    out.push_back(Tiling{true, true, std::move(tiles)});
                }
            }
            break;
    }
    return out;
}

BivariatePolynomial weight(const Tiling& tiling) {
    if (tiling.circular && tiling.tiles.empty() && !tiling.wrap) {
        return 2;
    }
    return BivariatePolynomial::monomial(1, tiling.monominoes(), tiling.dominoes());
}

BivariatePolynomial gf(StripKind kind, unsigned n) {
    switch (kind) {
        case StripKind::linear:
            return lucas_F(n + 1);
        case StripKind::linear_nolead:
            if (n == 0) {
                return 1;
            }
            if (n == 1) {
                return 0;
            }
            return BivariatePolynomial::t() * lucas_F(n - 1);
        case StripKind::circular:
            return n == 0 ? BivariatePolynomial(2) : lucas_L(n);
    }
    return 0;
}

namespace {

// Fibonacci number F_k as an integer.
Integer fibonacci(unsigned k) {
    Integer out;
    mpz_fib_ui(out.get_mpz_t(), k);
    return out;
}

}  // namespace

Integer count(StripKind kind, unsigned n) {
    switch (kind) {
        case StripKind::linear:
            return fibonacci(n + 1);
        case StripKind::linear_nolead:
            if (n == 0) {
                return 1;
            }
            return n == 1 ? Integer(0) : fibonacci(n - 1);
        case StripKind::circular:
            if (n < 2) {
                return 1;
            }
            return fibonacci(n + 1) + fibonacci(n - 1);
    }
    return 0;
}

std::string to_text(const Tiling& tiling) {
    if (tiling.tiles.empty() && !tiling.wrap) {
        return "e";
    }
    std::string out;
    if (tiling.wrap) {
        out = "(D)";
    }
    for (Tile tile : tiling.tiles) {
        if (!out.empty()) {
            out += ' ';
        }
        out += tile == Tile::mono ? 'M' : 'D';
    }
    return out;
}

Tiling parse_tiling(std::string_view text, bool circular) {
    Tiling out;
    out.circular = circular;
    std::istringstream in{std::string(text)};
    std::string token;
    bool first = true;
    bool empty_marker = false;
    while (in >> token) {
        if (token == "(D)" && first && circular) {
            out.wrap = true;
        } else if (token == "M") {
            out.tiles.push_back(Tile::mono);
        } else if (token == "D") {
            out.tiles.push_back(Tile::domino);
        } else if (token == "e" && first) {
            empty_marker = true;
        } else {
            throw ParseError("bad tiling token '" + token + "' in \"" + std::string(text) + "\"");
        }
        first = false;
    }
    if (empty_marker && (out.wrap || !out.tiles.empty())) {
        throw ParseError("empty-tiling marker mixed with tiles");
    }
    return out;
}

}  // namespace lucasnomial
