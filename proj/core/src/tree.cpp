#include "ratrel/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "ratrel/decomposition.hpp"
#include "ratrel/error.hpp"
#include "scc.hpp"

namespace ratrel {

NodeAddress::NodeAddress(std::string path) : path_(std::move(path)) {
    for (char c : path_)
        if (c != 'l' && c != 'r')
            throw MalformedStructure(std::string("node address letter '") + c + "' is not l or r");
}

RegularTree::RegularTree(std::vector<TreeVertex> vertices, std::size_t root)
    : vertices_(std::move(vertices)), root_(root) {
    const std::size_t n = vertices_.size();
    if (n == 0)
        throw MalformedStructure("tree needs at least one vertex");
    if (root_ >= n)
        throw MalformedStructure("root out of range");
    std::set<std::string> names;
    for (const auto& v : vertices_) {
        if (v.left >= n || v.right >= n)
            throw MalformedStructure("child of vertex '" + v.name + "' out of range");
        if (!Alphabet::is_valid_letter(v.label))
            throw MalformedStructure("vertex '" + v.name + "' has an invalid label");
        if (!names.insert(v.name).second)
            throw MalformedStructure("duplicate vertex name '" + v.name + "'");
    }
}

RegularTree constant_tree(char label) { return RegularTree({{"v0", label, 0, 0}}, 0); }

char label_at(const RegularTree& t, const NodeAddress& a) {
    std::size_t v = t.root();
    for (char c : a.path())
        v = c == 'l' ? t.left(v) : t.right(v);
    return t.label(v);
}

std::vector<NodeAddress> level_nodes(std::size_t n, LevelOrder order) {
    if (n > kMaxLevel)
        throw CapacityError("level " + std::to_string(n) + " exceeds the limit of " +
                            std::to_string(kMaxLevel));
    const std::size_t count = std::size_t{1} << n;
    std::vector<NodeAddress> out;
    out.reserve(count);
    for (std::size_t rank = 0; rank < count; ++rank) {
        // Bit n-1 of the lex rank is the first letter; 0 is l.
        std::string path(n, 'l');
        for (std::size_t b = 0; b < n; ++b)
            if (rank >> (n - 1 - b) & 1)
                path[b] = 'r';
        out.emplace_back(std::move(path));
    }
    if (order == LevelOrder::reverse_lex)
        std::reverse(out.begin(), out.end());
    return out;
}

std::size_t sigma1_length(std::size_t k) {
    std::size_t letters = 0, block = 1;
    for (std::size_t j = 0; j < k; ++j, block *= 4)
        letters += block;
    return letters + k;
}

std::size_t sigma2_length(std::size_t k) { return 2 * (sigma1_length(k) - k) + k; }

TreeCode encode(const RegularTree& t, std::size_t k) {
    if (k == 0 || k > kMaxBlocks)
        throw CapacityError("block count " + std::to_string(k) + " outside 1.." +
                            std::to_string(kMaxBlocks));
    for (const auto& v : t.vertices())
        if (v.label == kSeparator)
            throw AlphabetMismatch(std::string("tree label '") + kSeparator +
                                   "' collides with the block separator");

    TreeCode code;
    code.levels_covered = k;
    code.sigma1.reserve(sigma1_length(k));
    code.sigma2.reserve(sigma2_length(k));
    std::vector<std::size_t> level{t.root()}; // vertices of C_n in lex order
    for (std::size_t n = 0; n < 2 * k; ++n) {
        if (n % 2 == 0) {
            for (auto it = level.rbegin(); it != level.rend(); ++it)
                code.sigma1.push_back(t.label(*it));
            code.sigma1.push_back(kSeparator);
        } else {
            for (std::size_t v : level)
                code.sigma2.push_back(t.label(v));
            code.sigma2.push_back(kSeparator);
        }
        if (n + 1 == 2 * k)
            break;
        std::vector<std::size_t> next;
        next.reserve(2 * level.size());
        for (std::size_t v : level) {
            next.push_back(t.left(v));
            next.push_back(t.right(v));
        }
        level = std::move(next);
    }
    return code;
}

bool path_check(const RegularTree& t, const BuchiAutomaton& aut) {
    // Product vertex (tree vertex, state before reading the vertex label).
    const std::size_t states = aut.state_count();
    const auto id = [states](std::size_t v, std::size_t q) { return v * states + q; };
    detail::Digraph graph(t.size() * states);
    std::vector<bool> seen(graph.size(), false);
    std::vector<std::size_t> work{id(t.root(), aut.initial())};
    seen[work.front()] = true;
    while (!work.empty()) {
        const std::size_t node = work.back();
        work.pop_back();
        const std::size_t v = node / states, q = node % states;
        const char a = t.label(v);
        if (!aut.alphabet().contains(a))
            throw AlphabetMismatch(std::string("tree label '") + a +
                                   "' is not in the automaton alphabet {" +
                                   aut.alphabet().letters() + "}");
        for (const auto& tr : aut.outgoing(q)) {
            if (tr.letter != a)
                continue;
            for (std::size_t child : {t.left(v), t.right(v)}) {
                const std::size_t to = id(child, tr.target);
                graph.add_edge(node, to);
                if (!seen[to]) {
                    seen[to] = true;
                    work.push_back(to);
                }
            }
        }
    }

    std::size_t count = 0;
    const auto comp = detail::strongly_connected_components(graph, &count);
    std::vector<std::size_t> size(count, 0);
    std::vector<bool> looped(count, false);
    for (std::size_t node = 0; node < graph.size(); ++node) {
        ++size[comp[node]];
        for (std::size_t to : graph.out[node])
            if (to == node)
                looped[comp[node]] = true;
    }
    for (std::size_t node = 0; node < graph.size(); ++node)
        if (seen[node] && aut.is_accepting(node % states) &&
            (size[comp[node]] > 1 || looped[comp[node]]))
            return true;
    return false;
}

bool agree_above_depth(const RegularTree& a, const RegularTree& b, std::size_t depth) {
    if (depth == 0)
        return true;
    // Breadth-first over vertex pairs; the first visit of a pair is at its
    // shallowest address.
    std::set<std::pair<std::size_t, std::size_t>> seen{{a.root(), b.root()}};
    std::deque<std::tuple<std::size_t, std::size_t, std::size_t>> queue{{a.root(), b.root(), 0}};
    while (!queue.empty()) {
        const auto [va, vb, d] = queue.front();
        queue.pop_front();
        if (a.label(va) != b.label(vb))
            return false;
        if (d + 1 >= depth)
            continue;
        for (const auto& next : {std::pair(a.left(va), b.left(vb)), std::pair(a.right(va), b.right(vb))})
            if (seen.insert(next).second)
                queue.emplace_back(next.first, next.second, d + 1);
    }
    return true;
}

bool continuity_probe(const RegularTree& a, const RegularTree& b, std::size_t k) {
    return !agree_above_depth(a, b, 2 * k) || encode(a, k) == encode(b, k);
}

RegularTree trim(const RegularTree& t) {
    std::vector<bool> reachable(t.size(), false);
    std::vector<std::size_t> work{t.root()};
    reachable[t.root()] = true;
    while (!work.empty()) {
        const std::size_t v = work.back();
        work.pop_back();
        for (std::size_t c : {t.left(v), t.right(v)})
            if (!reachable[c]) {
                reachable[c] = true;
                work.push_back(c);
            }
    }
    std::vector<std::size_t> renumber(t.size(), 0);
    std::size_t next = 0;
    for (std::size_t v = 0; v < t.size(); ++v)
        if (reachable[v])
            renumber[v] = next++;
    std::vector<TreeVertex> kept;
    kept.reserve(next);
    for (std::size_t v = 0; v < t.size(); ++v)
        if (reachable[v]) {
            const auto& old = t.vertices()[v];
            kept.push_back({old.name, old.label, renumber[old.left], renumber[old.right]});
        }
    return RegularTree(std::move(kept), renumber[t.root()]);
}

RegularTree minimize(const RegularTree& t) {
    const RegularTree live = trim(t);
    const std::size_t n = live.size();

    // Moore refinement: start from label classes, split on children's classes.
    std::vector<std::size_t> cls(n);
    {
        std::map<char, std::size_t> ids;
        for (std::size_t v = 0; v < n; ++v)
            cls[v] = ids.try_emplace(live.label(v), ids.size()).first->second;
    }
    for (std::size_t classes = 0;;) {
        std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (std::size_t v = 0; v < n; ++v) {
            const auto key = std::make_tuple(cls[v], cls[live.left(v)], cls[live.right(v)]);
            next[v] = ids.try_emplace(key, ids.size()).first->second;
        }
        cls = std::move(next);
        if (ids.size() == classes)
            break;
        classes = ids.size();
    }

    // Number classes breadth-first from the root, left before right.
    std::vector<std::size_t> order(n, n), representative;
    std::deque<std::size_t> queue{live.root()};
    order[cls[live.root()]] = 0;
    representative.push_back(live.root());
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t c : {live.left(v), live.right(v)})
            if (order[cls[c]] == n) {
                order[cls[c]] = representative.size();
                representative.push_back(c);
                queue.push_back(c);
            }
    }
    std::vector<TreeVertex> out;
    out.reserve(representative.size());
    for (std::size_t i = 0; i < representative.size(); ++i) {
        const std::size_t v = representative[i];
        out.push_back({"v" + std::to_string(i), live.label(v), order[cls[live.left(v)]],
                       order[cls[live.right(v)]]});
    }
    return RegularTree(std::move(out), 0);
}

std::string canonical_key(const RegularTree& t) {
    const RegularTree m = minimize(t);
    std::string key;
    for (const auto& v : m.vertices()) {
        key.push_back(v.label);
        key += ',' + std::to_string(v.left) + ',' + std::to_string(v.right) + ';';
    }
    return key;
}

bool bisimilar(const RegularTree& a, const RegularTree& b) { return canonical_key(a) == canonical_key(b); }

} // namespace ratrel
