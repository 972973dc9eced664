#pragma once

#include <cstddef>

#include "ratrel/tree.hpp"

namespace ratrel {

/// Outcome of checking one tree against the coding reduction for the
/// language of words with infinitely many 1s.
struct ReductionReport {
    std::size_t vertex_count = 0; ///< m, size of the minimal presentation
    std::size_t blocks = 0;       ///< k
    bool ground = false;          ///< some branch has infinitely many 1s
    bool feasible = false;        ///< the code prefixes admit a parse
    std::size_t ones = 0;         ///< best parse's count of x(i) = 1
    std::size_t visits = 0;       ///< transducer's accepting visits on the same prefixes
    bool verdict = false;         ///< ones >= m + 1
    bool agreement = false;       ///< verdict == ground
    bool coherent = false;        ///< |visits - ones| <= 1
    bool sound = false;           ///< 2k + 1 >= m(m + 1) + m, so the threshold is decisive
};

/// Throws AlphabetMismatch if a reachable label is not 0 or 1, CapacityError
/// if k is out of range.
ReductionReport reduce_verify(const RegularTree& t, std::size_t k);

} // namespace ratrel
