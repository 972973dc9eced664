#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratrel/alphabet.hpp"
#include "ratrel/lasso.hpp"

namespace ratrel {

/// One element of the transition relation: read `input` on tape 1 and
/// `output` on tape 2 (either may be empty) while moving source -> target.
struct TransducerTransition {
    std::size_t source;
    std::string input;
    std::string output;
    std::size_t target;

    bool silent() const noexcept { return input.empty() && output.empty(); }

    auto operator<=>(const TransducerTransition&) const = default;
};

/// Two-tape asynchronous Buchi transducer (K, Sigma, Gamma, Delta, q0, F).
///
/// A computation is an infinite chain of transitions from the initial state;
/// it is successful when it visits an accepting state infinitely often. The
/// recognized relation holds the (input, output) pairs of successful
/// computations in which both tapes are consumed infinitely.
class BuchiTransducer {
public:
    BuchiTransducer(std::vector<std::string> states, Alphabet input_alphabet,
                    Alphabet output_alphabet, std::vector<TransducerTransition> transitions,
                    std::size_t initial, std::vector<bool> accepting);

    const std::vector<std::string>& states() const noexcept { return states_; }
    std::size_t state_count() const noexcept { return states_.size(); }
    const Alphabet& input_alphabet() const noexcept { return input_alphabet_; }
    const Alphabet& output_alphabet() const noexcept { return output_alphabet_; }
    const std::vector<TransducerTransition>& transitions() const noexcept { return transitions_; }
    std::size_t initial() const noexcept { return initial_; }
    bool is_accepting(std::size_t q) const noexcept { return accepting_[q]; }
    const std::vector<bool>& accepting() const noexcept { return accepting_; }

    /// Indices into transitions() of the transitions leaving @p q.
    const std::vector<std::size_t>& outgoing(std::size_t q) const noexcept { return outgoing_[q]; }

    std::optional<std::size_t> find_state(const std::string& name) const;

    /// Longest |input| + |output| over all transitions.
    std::size_t max_advance() const noexcept { return max_advance_; }

    bool operator==(const BuchiTransducer& other) const;

private:
    std::vector<std::string> states_;
    Alphabet input_alphabet_;
    Alphabet output_alphabet_;
    std::vector<TransducerTransition> transitions_;
    std::size_t initial_;
    std::vector<bool> accepting_;
    std::vector<std::vector<std::size_t>> outgoing_;
    std::size_t max_advance_ = 0;
};

/// Exact membership of a lasso pair in the recognized relation.
///
/// Searches the finite graph of configurations (state, class on tape 1,
/// class on tape 2) for a reachable strongly connected component that holds
/// an accepting state and edges advancing each tape.
/// Throws AlphabetMismatch on letters outside the tape alphabets.
bool rel_pair_member(const BuchiTransducer& t, const Lasso& input, const Lasso& output);

/// Returned by max_accepting_visits when a silent cycle through an accepting
/// state is reachable, so the count has no finite maximum.
inline constexpr std::size_t kUnboundedVisits = std::numeric_limits<std::size_t>::max();

/// Maximum, over all finite computations whose input is a prefix of
/// @p in_prefix and whose output is a prefix of @p out_prefix, of the number of
/// steps entering an accepting state.
std::size_t max_accepting_visits(const BuchiTransducer& t, std::string_view in_prefix,
                                 std::string_view out_prefix);

/// The nine-state transducer over {0,1,A} whose relation pairs tree codes
/// with a branch carrying infinitely many 1s. 52 transitions, accepting
/// states q1^1 and q2^1.
BuchiTransducer paper_transducer();

struct TransducerDiagnostics {
    /// States not reachable from the initial state.
    std::vector<std::string> unreachable_states;
    /// Indices of transitions whose source cannot reach any accepting state.
    std::vector<std::size_t> hopeless_transitions;
    /// Strongly connected groups of states closed under (empty, empty) moves.
    std::vector<std::vector<std::string>> silent_cycles;

    bool clean() const noexcept {
        return unreachable_states.empty() && hopeless_transitions.empty() && silent_cycles.empty();
    }
};

TransducerDiagnostics rel_validate(const BuchiTransducer& t);

} // namespace ratrel
