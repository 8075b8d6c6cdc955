#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace lucasnomial {

/// A partition lambda contained in a rows x cols rectangle: exactly `rows`
/// weakly decreasing parts, each in [0, cols]. Zero parts are kept.
struct Partition {
    std::vector<unsigned> parts;
    unsigned rows = 0;
    unsigned cols = 0;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;
};

bool is_valid(const Partition& lambda);

/// Throws DomainError unless the parts form a valid partition in rows x cols.
Partition make_partition(std::vector<unsigned> parts, unsigned rows, unsigned cols);

/// All partitions in the rows x cols rectangle, in increasing lexicographic
/// order of their part lists; there are binomial(rows + cols, rows) of them.
std::vector<Partition> enumerate_in_rect(unsigned rows, unsigned cols);

/// Column lengths of the rectangle minus lambda, as a partition in the
/// transposed cols x rows rectangle. Part j counts the empty cells of column
/// cols + 1 - j, so the result is already weakly decreasing.
Partition complement(const Partition& lambda);

/// Number of cells.
unsigned size(const Partition& lambda);

/// "[3,2,2,0,0]"
std::string to_text(const Partition& lambda);

/// Inverse of to_text for a given rectangle. Throws ParseError / DomainError.
Partition parse_partition(std::string_view text, unsigned rows, unsigned cols);

}  // namespace lucasnomial
