#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "lucasnomial/partitions.hpp"
#include "lucasnomial/polynomial.hpp"
#include "lucasnomial/report.hpp"
#include "lucasnomial/tilings.hpp"

namespace lucasnomial {

/// linear_pair:   rows of lambda from L, columns of lambda* from L'.
/// circular_pair: rows and columns from C; empty parts carry the empty
///                circular tiling (weight 2).
enum class PairFlavor : std::uint8_t { linear_pair, circular_pair };

enum class Mode : std::uint8_t { enumerate, gf };
enum class Flavor : std::uint8_t { linear, circular, both };

Mode parse_mode(std::string_view name);
Flavor parse_flavor(std::string_view name);
std::string_view mode_name(Mode mode);
std::string_view flavor_name(Flavor flavor);

/// One tiling per row of lambda and one per column of its complement.
///
/// Columns are listed in the order of the parts of lambda* and each column
/// tiling is read from the bottom edge of the rectangle upwards, so for
/// linear pairs the no-leading-monomino rule applies at the rectangle edge.
struct TilingPair {
    PairFlavor flavor = PairFlavor::linear_pair;
    Partition lambda;
    std::vector<Tiling> row_tilings;
    std::vector<Tiling> col_tilings;

    friend auto operator<=>(const TilingPair&, const TilingPair&) = default;
    friend bool operator==(const TilingPair&, const TilingPair&) = default;
};

/// True when the pair is an element of L_lambda x L'_lambda* (or C x C).
bool is_member(const TilingPair& pair);

/// Product of the weights of all component tilings.
BivariatePolynomial weight(const TilingPair& pair);

/// Default refusal threshold for enumerate mode.
inline constexpr std::uint64_t kDefaultPairBudget = 10'000'000;

/// Sum over lambda in rows x cols of the number of pairs.
Integer predicted_pair_count(unsigned rows, unsigned cols, PairFlavor flavor);

/// Calls visit for every pair over every lambda in rows x cols, lambdas in
/// enumerate_in_rect order, pairs in odometer order over the per-part lists.
/// Throws ResourceError if the predicted pair count exceeds budget.
void for_each_pair(unsigned rows, unsigned cols, PairFlavor flavor,
                   const std::function<void(const TilingPair&)>& visit, std::uint64_t budget = kDefaultPairBudget);

std::vector<TilingPair> enumerate_pairs(unsigned rows, unsigned cols, PairFlavor flavor,
                                        std::uint64_t budget = kDefaultPairBudget);

/// Sum over lambda in m x n of the weights of L_lambda x L'_lambda*.
/// enumerate materializes every pair; gf multiplies per-part closed forms.
BivariatePolynomial rhs_linear(unsigned m, unsigned n, Mode mode, std::uint64_t budget = kDefaultPairBudget);

/// Sum over lambda in m x n of the weights of C_lambda x C_lambda*.
BivariatePolynomial rhs_circular(unsigned m, unsigned n, Mode mode, std::uint64_t budget = kDefaultPairBudget);

struct VerifyOptions {
    bool parallel = false;
    std::uint64_t budget = kDefaultPairBudget;
    /// Called once per case, in case order, as results become final.
    std::function<void(const CaseResult&)> on_case;
};

/// For 0 <= m <= m_max, 0 <= n <= n_max checks
///   linear:   rhs_linear(m, n)   == C(m+n, m)
///   circular: rhs_circular(m, n) == 2^{m+n} C(m+n, m)
/// against the quotient method. Throws ResourceError from enumerate mode.
IdentityReport verify_theorem(unsigned m_max, unsigned n_max, Flavor flavor, Mode mode,
                              const VerifyOptions& options = {});

/// For 1 <= m, n with m + n <= N checks both lucasnomial recursions (the
/// companion one in doubled form), and the two addition formulas for F over
/// every admissible (m, n) with m + n <= N.
IdentityReport verify_recursions(unsigned N, const VerifyOptions& options = {});

/// check_lemma1 over 1 <= m <= m_max, 0 <= n <= n_max (the L addition formula also at m = 0).
IdentityReport verify_lemma1(unsigned m_max, unsigned n_max, const VerifyOptions& options = {});

}  // namespace lucasnomial
