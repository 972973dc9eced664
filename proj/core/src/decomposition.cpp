#include "ratrel/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "ratrel/error.hpp"

namespace ratrel {

namespace {

constexpr std::size_t kNoBack = std::numeric_limits<std::size_t>::max();

struct Segment {
    std::string_view letters; // visible part, A-free
    bool complete = false;    // followed by a separator inside the prefix
};

std::vector<Segment> split_segments(std::string_view tape) {
    std::vector<Segment> out;
    std::size_t start = 0;
    for (std::size_t p = 0; p < tape.size(); ++p)
        if (tape[p] == kSeparator) {
            out.push_back({tape.substr(start, p - start), true});
            start = p + 1;
        }
    if (start < tape.size())
        out.push_back({tape.substr(start), false});
    return out;
}

// Candidate placement of x(i) inside its segment. Exact states carry the
// position |v_{i-1}|; open states stand for every position >= `pos`, which
// arises when |u_{i-1}| is only bounded below because of a cut.
struct State {
    bool exact;
    std::size_t pos;
    std::size_t ones;
    std::size_t back; // index into the previous level
};

class Parser {
public:
    Parser(std::string_view y1, std::string_view y2)
        : tape1_(split_segments(y1)), tape2_(split_segments(y2)) {}

    // Segment holding x(i), i >= 1; a default Segment once the tape has ended.
    Segment segment(std::size_t i) const {
        const auto& tape = i % 2 == 1 ? tape1_ : tape2_;
        const std::size_t idx = i % 2 == 1 ? (i - 1) / 2 : (i - 2) / 2;
        return idx < tape.size() ? tape[idx] : Segment{};
    }

    bool exhausted(std::size_t i) const {
        const auto& tape = i % 2 == 1 ? tape1_ : tape2_;
        const std::size_t idx = i % 2 == 1 ? (i - 1) / 2 : (i - 2) / 2;
        return idx >= tape.size();
    }

    DecompositionResult run() {
        levels_.push_back({State{true, 0, 0, kNoBack}});
        std::size_t i = 1;
        while (!(exhausted(i) && exhausted(i + 1))) {
            levels_.push_back(step(i, levels_.back()));
            if (levels_.back().empty())
                return {};
            ++i;
        }
        // Everything from x(i) on lies past both cuts.
        const auto& last = levels_.back();
        std::size_t best = 0;
        for (std::size_t s = 1; s < last.size(); ++s)
            if (last[s].ones > last[best].ones)
                best = s;
        DecompositionResult result;
        result.feasible = true;
        result.max_ones = last[best].ones;
        result.witness = rebuild(best);
        return result;
    }

private:
    // Resolves open states at level i into exact positions that fall inside
    // the visible segment and keeps the best state per exact position.
    std::vector<State> resolve(const std::vector<State>& states, const Segment& seg,
                               std::vector<State>& still_open) const {
        const std::size_t len = seg.letters.size();
        std::map<std::size_t, State> exact;
        const auto keep = [&exact](std::size_t pos, const State& s) {
            auto [it, fresh] = exact.try_emplace(pos, s);
            if (!fresh && s.ones > it->second.ones)
                it->second = s;
        };
        std::vector<std::pair<std::size_t, std::size_t>> opens; // (lo, index)
        for (std::size_t k = 0; k < states.size(); ++k) {
            const auto& s = states[k];
            if (s.exact)
                keep(s.pos, State{true, s.pos, s.ones, k});
            else
                opens.emplace_back(s.pos, k);
        }
        std::sort(opens.begin(), opens.end());
        // Sweep positions; the best open state covering p is a prefix maximum.
        std::size_t cursor = 0, best = kNoBack;
        const std::size_t first = opens.empty() ? len : opens.front().first;
        for (std::size_t p = first; p < len; ++p) {
            while (cursor < opens.size() && opens[cursor].first <= p) {
                const std::size_t k = opens[cursor].second;
                if (best == kNoBack || states[k].ones > states[best].ones)
                    best = k;
                ++cursor;
            }
            if (best != kNoBack)
                keep(p, State{true, p, states[best].ones, best});
        }
        if (!seg.complete && !opens.empty()) {
            // Positions at or beyond the cut stay unresolved.
            std::size_t k = opens.front().second;
            for (const auto& [lo, idx] : opens)
                if (states[idx].ones > states[k].ones)
                    k = idx;
            still_open.push_back(State{false, 0, states[k].ones, k});
        }
        std::vector<State> out;
        for (auto& [pos, s] : exact)
            out.push_back(s);
        return out;
    }

    std::vector<State> step(std::size_t i, const std::vector<State>& states) {
        const Segment seg = segment(i);
        const std::size_t len = seg.letters.size();
        std::vector<State> beyond;
        const auto exact = resolve(states, seg, beyond);
        resolved_.push_back(exact);
        resolved_beyond_.push_back(beyond);

        std::map<std::size_t, State> next_exact;
        std::map<std::size_t, State> next_open;
        const auto put = [](std::map<std::size_t, State>& m, const State& s) {
            auto [it, fresh] = m.try_emplace(s.pos, s);
            if (!fresh && s.ones > it->second.ones)
                it->second = s;
        };
        // Back indices of the next level point into the concatenation
        // exact ++ beyond of this level's resolved states.
        for (std::size_t k = 0; k < exact.size(); ++k) {
            const State& s = exact[k];
            if (s.pos < len) {
                const std::size_t ones = s.ones + (seg.letters[s.pos] == '1' ? 1 : 0);
                const std::size_t u = len - s.pos - 1;
                if (seg.complete) {
                    put(next_exact, State{true, 2 * u, ones, k});
                    put(next_exact, State{true, 2 * u + 1, ones, k});
                } else {
                    put(next_open, State{false, 2 * u, ones, k});
                }
            } else if (!seg.complete) {
                put(next_open, State{false, 0, s.ones, k});
            }
        }
        for (std::size_t k = 0; k < beyond.size(); ++k)
            put(next_open, State{false, 0, beyond[k].ones, exact.size() + k});

        std::vector<State> out;
        for (auto& [pos, s] : next_exact)
            out.push_back(s);
        // Drop open states dominated by one with a lower bound and more ones.
        std::size_t best_ones = 0;
        bool any = false;
        for (auto& [lo, s] : next_open)
            if (!any || s.ones > best_ones) {
                out.push_back(s);
                best_ones = s.ones;
                any = true;
            }
        return out;
    }

    // Walks back-pointers from state @p idx of the final level. A state of
    // level i points into the resolved list of level i - 1, whose entries in
    // turn point at the unresolved state they were derived from.
    RDecomposition rebuild(std::size_t idx) const {
        const std::size_t depth = levels_.size();
        std::vector<std::pair<bool, std::size_t>> placement(depth + 1); // x(i) -> (exact, pos)
        const State& last = levels_[depth - 1][idx];
        placement[depth] = {last.exact, last.pos};
        std::size_t back = last.back;
        for (std::size_t level = depth - 1; level > 0; --level) {
            const auto& exact = resolved_[level - 1];
            const auto& beyond = resolved_beyond_[level - 1];
            const State& r = back < exact.size() ? exact[back] : beyond[back - exact.size()];
            placement[level] = {r.exact, r.pos};
            back = levels_[level - 1][r.back].back;
        }

        RDecomposition blocks(depth);
        for (std::size_t i = 1; i <= depth; ++i) {
            const Segment seg = segment(i);
            const auto [exact, pos] = placement[i];
            RBlock& b = blocks[i - 1];
            if (exact && pos < seg.letters.size()) {
                b.x = seg.letters[pos];
                b.u = std::string(seg.letters.substr(pos + 1));
                b.u_closed = seg.complete;
            }
            if (i < depth) {
                const Segment next = segment(i + 1);
                const auto [next_exact, next_pos] = placement[i + 1];
                if (next_exact) {
                    b.v = std::string(next.letters.substr(0, std::min(next_pos, next.letters.size())));
                    b.v_closed = next_pos < next.letters.size();
                } else {
                    b.v = std::string(next.letters);
                }
            }
        }
        return blocks;
    }

    std::vector<Segment> tape1_, tape2_;
    std::vector<std::vector<State>> levels_;           // levels_[i-1]: states placing x(i)
    std::vector<std::vector<State>> resolved_;         // resolved_[i-1]: exact states at level i
    std::vector<std::vector<State>> resolved_beyond_;  // resolved_beyond_[i-1]: open past the cut
};

void require_relation_letters(std::string_view word) {
    for (char c : word)
        if (c != '0' && c != '1' && c != kSeparator)
            throw AlphabetMismatch(std::string("letter '") + c + "' is not in {0,1,A}");
}

} // namespace

DecompositionResult r_decomposition_max_ones(std::string_view y1, std::string_view y2) {
    require_relation_letters(y1);
    require_relation_letters(y2);
    return Parser(y1, y2).run();
}

bool is_consistent_decomposition(std::string_view y1, std::string_view y2, const RDecomposition& d) {
    const auto tape1 = split_segments(y1), tape2 = split_segments(y2);
    for (std::size_t i = 1; i <= d.size(); ++i) {
        const auto& tape = i % 2 == 1 ? tape1 : tape2;
        const std::size_t idx = i % 2 == 1 ? (i - 1) / 2 : (i - 2) / 2;
        const Segment seg = idx < tape.size() ? tape[idx] : Segment{};
        const RBlock& b = d[i - 1];
        const std::string_view v_prev = i == 1 ? std::string_view{} : std::string_view{d[i - 2].v};
        if (!seg.letters.starts_with(v_prev))
            return false;
        if (b.x) {
            if (i > 1 && !d[i - 2].v_closed)
                return false;
            if (v_prev.size() >= seg.letters.size() || seg.letters[v_prev.size()] != *b.x)
                return false;
            if (seg.letters.size() - v_prev.size() - 1 != b.u.size() || !seg.letters.ends_with(b.u))
                return false;
            if (b.u_closed != seg.complete)
                return false;
        } else if (b.u_closed || !b.u.empty()) {
            return false;
        }
        if (b.v_closed) {
            if (b.u_closed && b.v.size() != 2 * b.u.size() && b.v.size() != 2 * b.u.size() + 1)
                return false;
            if (!b.u_closed && b.v.size() < 2 * b.u.size())
                return false;
        }
    }
    return true;
}

} // namespace ratrel
