#pragma once

#include <cmath>
#include <stdexcept>

// Elo rating arithmetic: the expected score of a player whose rating exceeds
// the opponent's by RD, and the inverse mapping from an observed score to the
// rating difference it implies.

namespace evochess {

/// Expected winning rate for a rating advantage of `rating_diff` Elo points:
/// W = 1 / (10^(-RD/400) + 1). Strictly increasing, W(0) = 0.5, and
/// W(RD) + W(-RD) = 1.
inline double expected_score(double rating_diff) {
    return 1.0 / (std::pow(10.0, -rating_diff / 400.0) + 1.0);
}

/// Rating difference implied by a winning rate in (0, 1):
/// RD = -400 * log10(1/W - 1). Exact inverse of expected_score; a score of
/// 0 or 1 implies an unbounded difference and is rejected.
inline double rating_difference(double winning_rate) {
    if (!(winning_rate > 0.0) || !(winning_rate < 1.0))
        throw std::domain_error("rating_difference: winning rate must lie strictly in (0, 1)");
    return -400.0 * std::log10(1.0 / winning_rate - 1.0);
}

}  // namespace evochess
