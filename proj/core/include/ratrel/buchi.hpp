#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ratrel/alphabet.hpp"
#include "ratrel/lasso.hpp"

namespace ratrel {

struct BuchiTransition {
    std::size_t source;
    char letter;
    std::size_t target;

    auto operator<=>(const BuchiTransition&) const = default;
};

/// Nondeterministic Buchi automaton with a single initial state.
///
/// States are named; transitions and accepting sets refer to states by their
/// index in declaration order. The transition set is kept sorted and free of
/// duplicates so that structural equality is set equality.
class BuchiAutomaton {
public:
    /// Throws MalformedStructure when an index is out of range or a letter is
    /// not in @p alphabet.
    BuchiAutomaton(Alphabet alphabet, std::vector<std::string> states, std::size_t initial,
                   std::vector<bool> accepting, std::vector<BuchiTransition> transitions);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<std::string>& states() const noexcept { return states_; }
    std::size_t state_count() const noexcept { return states_.size(); }
    std::size_t initial() const noexcept { return initial_; }
    bool is_accepting(std::size_t q) const noexcept { return accepting_[q]; }
    const std::vector<bool>& accepting() const noexcept { return accepting_; }
    const std::vector<BuchiTransition>& transitions() const noexcept { return transitions_; }

    /// Transitions leaving @p q, sorted by (letter order, target).
    const std::vector<BuchiTransition>& outgoing(std::size_t q) const noexcept { return outgoing_[q]; }

    /// Index of the state called @p name, if any.
    std::optional<std::size_t> find_state(const std::string& name) const;

    bool operator==(const BuchiAutomaton& other) const;

private:
    Alphabet alphabet_;
    std::vector<std::string> states_;
    std::size_t initial_;
    std::vector<bool> accepting_;
    std::vector<BuchiTransition> transitions_;
    std::vector<std::vector<BuchiTransition>> outgoing_;
};

/// True iff some run on @p w visits an accepting state infinitely often.
/// Throws AlphabetMismatch when @p w uses a letter unknown to @p aut.
bool buchi_member(const BuchiAutomaton& aut, const Lasso& w);

struct EmptinessResult {
    bool empty = true;
    std::optional<Lasso> witness;
};

/// Emptiness check. When the language is non-empty the witness is the
/// accepted lasso with the shortest total presentation, ties broken by the
/// shorter prefix and then lexicographically in alphabet order.
EmptinessResult buchi_empty(const BuchiAutomaton& aut);

/// Two states over {0,1} accepting exactly the words with infinitely many 1s.
BuchiAutomaton b_automaton();

/// Same states and transitions as @p aut with the accepting set complemented.
BuchiAutomaton with_complemented_acceptance(const BuchiAutomaton& aut);

} // namespace ratrel
