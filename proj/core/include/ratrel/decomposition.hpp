#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ratrel {

/// Letter separating blocks in tree codes and in the relation R.
inline constexpr char kSeparator = 'A';

/// Index i of a parse of a word pair (y1, y2) into the shape
///
///     y1 = x(1) u1 A v2 x(3) u3 A v4 x(5) u5 A ...
///     y2 = v1 x(2) u2 A v3 x(4) u4 A ...
///
/// with |v_i| = 2|u_i| or 2|u_i| + 1. Letters beyond the end of a finite
/// prefix are unknown: `x` is empty when x(i) lies past the cut, and
/// `u`/`v` hold only the part that is visible.
struct RBlock {
    std::optional<char> x;
    std::string u;
    std::string v;
    /// u is followed by its separator inside the prefix, so |u| is final.
    bool u_closed = false;
    /// v is followed by x(i+1) inside the prefix, so |v| is final.
    bool v_closed = false;
};

using RDecomposition = std::vector<RBlock>;

struct DecompositionResult {
    bool feasible = false;
    /// Largest number of indices with x(i) = 1 among the x letters that lie
    /// inside the prefixes.
    std::size_t max_ones = 0;
    /// A parse attaining max_ones (empty when infeasible).
    RDecomposition witness;
};

/// Maximizes the count of x(i) = 1 over all parses of (@p y1, @p y2) that some
/// infinite continuation of both prefixes could complete. Letters must come
/// from {0, 1, A}; anything else throws AlphabetMismatch.
DecompositionResult r_decomposition_max_ones(std::string_view y1, std::string_view y2);

/// Checks the length law and the letter placement of @p d against the
/// prefixes; used to validate witnesses.
bool is_consistent_decomposition(std::string_view y1, std::string_view y2, const RDecomposition& d);

} // namespace ratrel
