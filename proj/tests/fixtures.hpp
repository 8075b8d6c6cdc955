#pragma once

// Worked example: lambda = (3,2,2,0,0) inside a 5 x 4 rectangle, complement
// (5,4,2,2), with one fixed tiling of every row and column. Rows are read left
// to right; complement columns (rectangle columns 4, 3, 2, 1) bottom to top.

#include "lucasnomial/interpretations.hpp"

namespace fixtures {

inline lucasnomial::TilingPair worked_example_pair(lucasnomial::PairFlavor flavor) {
    using namespace lucasnomial;
    const bool circular = flavor == PairFlavor::circular_pair;
    TilingPair pair;
    pair.flavor = flavor;
    pair.lambda = make_partition({3, 2, 2, 0, 0}, 5, 4);
    for (const char* row : {"M D", "D", "M M", "e", "e"}) {
        pair.row_tilings.push_back(parse_tiling(row, circular));
    }
    for (const char* col : {"D M D", "D M M", "D", "D"}) {
        pair.col_tilings.push_back(parse_tiling(col, circular));
    }
    return pair;
}

}  // namespace fixtures
