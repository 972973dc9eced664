#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ratrel/buchi.hpp"

namespace ratrel {

/// Node of the infinite binary tree: a finite word over {l, r}.
class NodeAddress {
public:
    NodeAddress() = default;
    /// Throws MalformedStructure on letters other than 'l' and 'r'.
    explicit NodeAddress(std::string path);

    const std::string& path() const noexcept { return path_; }
    std::size_t depth() const noexcept { return path_.size(); }

    auto operator<=>(const NodeAddress&) const = default;

private:
    std::string path_;
};

struct TreeVertex {
    std::string name;
    char label;
    std::size_t left;
    std::size_t right;

    bool operator==(const TreeVertex&) const = default;
};

/// Finite graph presenting an infinite binary labeled tree: the tree is the
/// unfolding of the graph from the root, so every node has both children.
class RegularTree {
public:
    /// Throws MalformedStructure on out-of-range children, a bad root,
    /// duplicate names or invalid labels.
    RegularTree(std::vector<TreeVertex> vertices, std::size_t root);

    const std::vector<TreeVertex>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    std::size_t root() const noexcept { return root_; }
    char label(std::size_t v) const noexcept { return vertices_[v].label; }
    std::size_t left(std::size_t v) const noexcept { return vertices_[v].left; }
    std::size_t right(std::size_t v) const noexcept { return vertices_[v].right; }

    /// Presentation equality; see bisimilar() for tree equality.
    bool operator==(const RegularTree&) const = default;

private:
    std::vector<TreeVertex> vertices_;
    std::size_t root_;
};

/// Tree with every node labeled @p label (one vertex looping on itself).
RegularTree constant_tree(char label);

char label_at(const RegularTree& t, const NodeAddress& a);

enum class LevelOrder { lex, reverse_lex };

/// Largest n accepted by level_nodes().
inline constexpr std::size_t kMaxLevel = 20;

/// The 2^n addresses of length n, l before r in lex order.
/// Throws CapacityError for n > kMaxLevel.
std::vector<NodeAddress> level_nodes(std::size_t n, LevelOrder order);

/// First k blocks of each coordinate of the tree code.
///
/// sigma1 lists the levels 0, 2, 4, ... in reverse lexicographic order, sigma2
/// the levels 1, 3, 5, ... in lexicographic order; every block is closed by
/// the separator A.
struct TreeCode {
    std::string sigma1;
    std::string sigma2;
    std::size_t levels_covered = 0;

    bool operator==(const TreeCode&) const = default;
};

/// Largest k accepted by encode().
inline constexpr std::size_t kMaxBlocks = 9;

/// Length of sigma1 for k blocks: sum of 4^j for j < k, plus k separators.
std::size_t sigma1_length(std::size_t k);
/// Length of sigma2 for k blocks: twice the letters of sigma1, plus k separators.
std::size_t sigma2_length(std::size_t k);

/// Throws CapacityError unless 1 <= k <= kMaxBlocks, and AlphabetMismatch if
/// a label equals the separator.
TreeCode encode(const RegularTree& t, std::size_t k);

/// True iff some branch of @p t, read from the root, is accepted by @p aut.
/// Throws AlphabetMismatch when a reachable label is outside the automaton's
/// alphabet.
bool path_check(const RegularTree& t, const BuchiAutomaton& aut);

/// True iff both trees carry the same labels at every address shorter than
/// @p depth.
bool agree_above_depth(const RegularTree& a, const RegularTree& b, std::size_t depth);

/// Checks that the k-block code only depends on labels above depth 2k: when
/// the trees agree there, their codes must be equal.
bool continuity_probe(const RegularTree& a, const RegularTree& b, std::size_t k);

/// Drops vertices unreachable from the root.
RegularTree trim(const RegularTree& t);

/// Smallest presentation of the same infinite tree (partition refinement),
/// with vertices renumbered in breadth-first order from the root and named
/// v0, v1, ...
RegularTree minimize(const RegularTree& t);

/// String identifying the denoted infinite tree; equal keys iff bisimilar.
std::string canonical_key(const RegularTree& t);

/// True iff both presentations unfold to the same infinite tree.
bool bisimilar(const RegularTree& a, const RegularTree& b);

} // namespace ratrel
