#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace ratrel::detail {

/// Adjacency-list digraph over dense vertex ids.
struct Digraph {
    std::vector<std::vector<std::size_t>> out;

    explicit Digraph(std::size_t n = 0) : out(n) {}

    std::size_t size() const noexcept { return out.size(); }

    std::size_t add_vertex() {
        out.emplace_back();
        return out.size() - 1;
    }

    void add_edge(std::size_t from, std::size_t to) { out[from].push_back(to); }
};

/// Strongly connected components; component ids are assigned in reverse
/// topological order (sinks first). Iterative Tarjan.
inline std::vector<std::size_t> strongly_connected_components(const Digraph& g,
                                                              std::size_t* count = nullptr) {
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    const std::size_t n = g.size();
    std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> frames; // vertex, next edge
    std::size_t next_index = 0, next_comp = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnset)
            continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, e] = frames.back();
            if (e < g.out[v].size()) {
                const std::size_t w = g.out[v][e++];
                if (index[w] == kUnset) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::size_t done = v;
            frames.pop_back();
            if (!frames.empty()) {
                const std::size_t parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                } while (w != done);
                ++next_comp;
            }
        }
    }
    if (count)
        *count = next_comp;
    return comp;
}

} // namespace ratrel::detail
