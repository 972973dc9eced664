#pragma once

// Seeded random instances for the property tests.

#include <random>
#include <string>
#include <vector>

#include "ratrel/buchi.hpp"
#include "ratrel/lasso.hpp"
#include "ratrel/transducer.hpp"
#include "ratrel/tree.hpp"

namespace ratrel::testgen {

inline std::vector<std::string> words_over(const std::string& letters, std::size_t min_len,
                                           std::size_t max_len) {
    std::vector<std::string> out, layer{""};
    for (std::size_t n = 0; n <= max_len; ++n) {
        if (n >= min_len)
            out.insert(out.end(), layer.begin(), layer.end());
        std::vector<std::string> next;
        for (const auto& w : layer)
            for (char a : letters)
                next.push_back(w + a);
        layer = std::move(next);
    }
    return out;
}

inline std::vector<Lasso> lassos_over(const Alphabet& a, std::size_t max_prefix, std::size_t max_period) {
    std::vector<Lasso> out;
    for (const auto& u : words_over(a.letters(), 0, max_prefix))
        for (const auto& v : words_over(a.letters(), 1, max_period))
            out.emplace_back(u, v, a);
    return out;
}

inline BuchiAutomaton random_automaton(std::mt19937_64& rng, std::size_t max_states,
                                       const Alphabet& alphabet = Alphabet("01")) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
    std::bernoulli_distribution coin(0.4);
    std::vector<std::string> names;
    std::vector<bool> accepting;
    for (std::size_t q = 0; q < n; ++q) {
        names.push_back("q" + std::to_string(q));
        accepting.push_back(coin(rng));
    }
    std::vector<BuchiTransition> delta;
    for (std::size_t q = 0; q < n; ++q)
        for (char a : alphabet.letters())
            for (std::size_t r = 0; r < n; ++r)
                if (coin(rng))
                    delta.push_back({q, a, r});
    return BuchiAutomaton(alphabet, std::move(names), 0, std::move(accepting), std::move(delta));
}

/// Up to @p max_states states and @p max_transitions transitions whose words
/// have length at most 1, over alphabets of one or two letters.
inline BuchiTransducer random_transducer(std::mt19937_64& rng, std::size_t max_states,
                                         std::size_t max_transitions) {
    std::uniform_int_distribution<std::size_t> state_count(1, max_states);
    const std::size_t n = state_count(rng);
    const Alphabet in(std::bernoulli_distribution(0.8)(rng) ? "ab" : "a");
    const Alphabet out(std::bernoulli_distribution(0.8)(rng) ? "01" : "0");
    const auto pick_word = [&rng](const Alphabet& a) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, a.size())(rng);
        return k == a.size() ? std::string{} : std::string(1, a[k]);
    };
    std::uniform_int_distribution<std::size_t> state(0, n - 1);
    std::vector<TransducerTransition> delta;
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_transitions)(rng);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t from = state(rng);
        std::string u = pick_word(in);
        std::string v = pick_word(out);
        delta.push_back({from, std::move(u), std::move(v), state(rng)});
    }
    std::vector<std::string> names;
    std::vector<bool> accepting;
    for (std::size_t q = 0; q < n; ++q) {
        names.push_back("q" + std::to_string(q));
        accepting.push_back(std::bernoulli_distribution(0.5)(rng));
    }
    return BuchiTransducer(std::move(names), in, out, std::move(delta), 0, std::move(accepting));
}

inline Lasso random_lasso(std::mt19937_64& rng, const Alphabet& a, std::size_t max_prefix,
                          std::size_t max_period) {
    std::uniform_int_distribution<std::size_t> letter(0, a.size() - 1);
    const auto word = [&](std::size_t len) {
        std::string w;
        for (std::size_t i = 0; i < len; ++i)
            w.push_back(a[letter(rng)]);
        return w;
    };
    const std::size_t p = std::uniform_int_distribution<std::size_t>(0, max_prefix)(rng);
    const std::size_t v = std::uniform_int_distribution<std::size_t>(1, max_period)(rng);
    std::string prefix = word(p);
    return Lasso(std::move(prefix), word(v), a);
}

/// Tree differing from @p t exactly at the address l^depth: a fresh copy of
/// the leftmost path down to that node, whose label is flipped between 0 and 1.
inline RegularTree flip_leftmost(const RegularTree& t, std::size_t depth) {
    std::vector<TreeVertex> vertices = t.vertices();
    const std::size_t base = vertices.size();
    std::size_t v = t.root();
    for (std::size_t d = 0; d <= depth; ++d) {
        const bool last = d == depth;
        char label = t.label(v);
        if (last)
            label = label == '0' ? '1' : '0';
        vertices.push_back({"p" + std::to_string(d), label, last ? t.left(v) : base + d + 1, t.right(v)});
        v = t.left(v);
    }
    return RegularTree(std::move(vertices), base);
}

} // namespace ratrel::testgen
