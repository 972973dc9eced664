#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ratrel/reduction.hpp"
#include "ratrel/tree.hpp"

namespace ratrel {

/// Largest presentation size the reduction experiment supports at desk scale.
inline constexpr std::size_t kMaxCorpusVertices = 3;

struct CorpusSpec {
    std::size_t max_vertices = 3;
    std::size_t samples = 50;
    std::uint64_t seed = 7;
    std::size_t blocks = 7;
};

/// Throws CapacityError when the settings are out of the supported range.
void validate(const CorpusSpec& spec);

/// Seeded random trees over {0,1} with at most spec.max_vertices vertices,
/// minimized and deduplicated up to bisimulation, in discovery order. Stops at
/// spec.samples trees or when the attempt budget runs out (small m admits
/// only a handful of distinct trees).
std::vector<RegularTree> generate_corpus(const CorpusSpec& spec);

/// Every distinct tree over {0,1} presentable with at most @p max_vertices
/// vertices, minimized, ordered by canonical key.
std::vector<RegularTree> enumerate_trees(std::size_t max_vertices);

struct CorpusRow {
    RegularTree tree;
    ReductionReport report;
};

struct CorpusReport {
    std::vector<CorpusRow> rows;
    bool pass = false; ///< every row agrees and is coherent
};

CorpusReport verify_corpus(const CorpusSpec& spec);

} // namespace ratrel
