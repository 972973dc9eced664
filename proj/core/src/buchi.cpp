#include "ratrel/buchi.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "ratrel/error.hpp"
#include "scc.hpp"

namespace ratrel {

BuchiAutomaton::BuchiAutomaton(Alphabet alphabet, std::vector<std::string> states,
                               std::size_t initial, std::vector<bool> accepting,
                               std::vector<BuchiTransition> transitions)
    : alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      initial_(initial),
      accepting_(std::move(accepting)),
      transitions_(std::move(transitions)) {
    const std::size_t n = states_.size();
    if (n == 0)
        throw MalformedStructure("automaton needs at least one state");
    if (initial_ >= n)
        throw MalformedStructure("initial state out of range");
    if (accepting_.size() != n)
        throw MalformedStructure("accepting flags do not match state count");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (states_[i] == states_[j])
                throw MalformedStructure("duplicate state name '" + states_[i] + "'");
    for (const auto& t : transitions_) {
        if (t.source >= n || t.target >= n)
            throw MalformedStructure("transition endpoint out of range");
        if (!alphabet_.contains(t.letter))
            throw MalformedStructure(std::string("transition letter '") + t.letter +
                                     "' not in alphabet");
    }
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

    outgoing_.resize(n);
    for (const auto& t : transitions_)
        outgoing_[t.source].push_back(t);
    for (auto& out : outgoing_)
        std::sort(out.begin(), out.end(), [this](const BuchiTransition& a, const BuchiTransition& b) {
            return std::pair(alphabet_.index_of(a.letter), a.target) <
                   std::pair(alphabet_.index_of(b.letter), b.target);
        });
}

std::optional<std::size_t> BuchiAutomaton::find_state(const std::string& name) const {
    const auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - states_.begin());
}

bool BuchiAutomaton::operator==(const BuchiAutomaton& other) const {
    return alphabet_ == other.alphabet_ && states_ == other.states_ && initial_ == other.initial_ &&
           accepting_ == other.accepting_ && transitions_ == other.transitions_;
}

bool buchi_member(const BuchiAutomaton& aut, const Lasso& w) {
    for (const std::string* part : {&w.prefix(), &w.period()})
        for (char c : *part)
            if (!aut.alphabet().contains(c))
                throw AlphabetMismatch(std::string("letter '") + c +
                                       "' is not in the automaton alphabet {" +
                                       aut.alphabet().letters() + "}");

    // Configurations (state, position class), explored from (initial, 0).
    const std::size_t classes = w.class_count();
    const auto id = [classes](std::size_t q, std::size_t c) { return q * classes + c; };
    detail::Digraph graph(aut.state_count() * classes);
    std::vector<bool> seen(graph.size(), false);
    std::vector<std::size_t> work{id(aut.initial(), 0)};
    seen[work.front()] = true;
    while (!work.empty()) {
        const std::size_t v = work.back();
        work.pop_back();
        const std::size_t q = v / classes, c = v % classes;
        const char a = w.letter_of_class(c);
        for (const auto& t : aut.outgoing(q)) {
            if (t.letter != a)
                continue;
            const std::size_t to = id(t.target, w.next_class(c));
            graph.add_edge(v, to);
            if (!seen[to]) {
                seen[to] = true;
                work.push_back(to);
            }
        }
    }

    std::size_t count = 0;
    const auto comp = detail::strongly_connected_components(graph, &count);
    std::vector<std::size_t> size(count, 0);
    std::vector<bool> looped(count, false);
    for (std::size_t v = 0; v < graph.size(); ++v) {
        ++size[comp[v]];
        for (std::size_t to : graph.out[v])
            if (to == v)
                looped[comp[v]] = true;
    }
    for (std::size_t v = 0; v < graph.size(); ++v) {
        if (!seen[v] || !aut.is_accepting(v / classes))
            continue;
        if (size[comp[v]] > 1 || looped[comp[v]])
            return true;
    }
    return false;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Breadth-first search over letters in alphabet order. Nodes at each depth are
// discovered in lexicographic order of their access words, so the recorded
// parent chain spells the shortest, lexicographically least word.
// When `from_successors` is set the search is seeded with the successors of
// @p start, which makes @p start itself a target (shortest non-empty cycle).
std::vector<std::optional<std::string>> shortest_words(const BuchiAutomaton& aut,
                                                       std::size_t start, bool from_successors) {
    const std::size_t n = aut.state_count();
    std::vector<std::size_t> parent(n, kNone);
    std::vector<char> via(n, 0);
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue;
    const auto expand = [&](std::size_t q, std::size_t from) {
        for (const auto& t : aut.outgoing(q))
            if (!seen[t.target]) {
                seen[t.target] = true;
                parent[t.target] = from;
                via[t.target] = t.letter;
                queue.push_back(t.target);
            }
    };
    if (from_successors) {
        expand(start, kNone);
    } else {
        seen[start] = true;
        queue.push_back(start);
    }
    while (!queue.empty()) {
        const std::size_t q = queue.front();
        queue.pop_front();
        expand(q, q);
    }

    std::vector<std::optional<std::string>> words(n);
    for (std::size_t q = 0; q < n; ++q) {
        if (!seen[q])
            continue;
        std::string word;
        std::size_t cur = q;
        while (from_successors || cur != start) {
            word.push_back(via[cur]);
            if (parent[cur] == kNone)
                break;
            cur = parent[cur];
        }
        std::reverse(word.begin(), word.end());
        words[q] = std::move(word);
    }
    return words;
}

} // namespace

EmptinessResult buchi_empty(const BuchiAutomaton& aut) {
    const auto to_prefix = shortest_words(aut, aut.initial(), false);
    const auto& alphabet = aut.alphabet();
    const auto ranks = [&alphabet](const std::string& s) {
        std::vector<std::size_t> r;
        for (char c : s)
            r.push_back(alphabet.index_of(c));
        return r;
    };

    std::optional<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>> best_key;
    std::optional<std::pair<std::string, std::string>> best;
    for (std::size_t q = 0; q < aut.state_count(); ++q) {
        if (!aut.is_accepting(q) || !to_prefix[q])
            continue;
        const auto cycles = shortest_words(aut, q, true);
        if (!cycles[q])
            continue;
        const std::string& prefix = *to_prefix[q];
        const std::string& cycle = *cycles[q];
        auto key = std::make_tuple(prefix.size() + cycle.size(), prefix.size(), ranks(prefix + cycle));
        if (!best_key || key < *best_key) {
            best_key = std::move(key);
            best = std::pair(prefix, cycle);
        }
    }
    if (!best)
        return {};

    Lasso witness = canonicalize(Lasso(best->first, best->second, alphabet));
    if (!buchi_member(aut, witness))
        throw std::logic_error("emptiness witness " + witness.to_string() + " is not accepted");
    return {false, std::move(witness)};
}

BuchiAutomaton b_automaton() {
    return BuchiAutomaton(Alphabet("01"), {"s0", "s1"}, 0, {false, true},
                          {{0, '0', 0}, {0, '1', 1}, {1, '0', 0}, {1, '1', 1}});
}

BuchiAutomaton with_complemented_acceptance(const BuchiAutomaton& aut) {
    std::vector<bool> flipped(aut.state_count());
    for (std::size_t q = 0; q < flipped.size(); ++q)
        flipped[q] = !aut.is_accepting(q);
    return BuchiAutomaton(aut.alphabet(), aut.states(), aut.initial(), std::move(flipped),
                          aut.transitions());
}

} // namespace ratrel
