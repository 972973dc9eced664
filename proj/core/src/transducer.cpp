#include "ratrel/transducer.hpp"

#include <algorithm>
#include <utility>

#include "ratrel/error.hpp"
#include "scc.hpp"

namespace ratrel {

BuchiTransducer::BuchiTransducer(std::vector<std::string> states, Alphabet input_alphabet,
                                 Alphabet output_alphabet,
                                 std::vector<TransducerTransition> transitions,
                                 std::size_t initial, std::vector<bool> accepting)
    : states_(std::move(states)),
      input_alphabet_(std::move(input_alphabet)),
      output_alphabet_(std::move(output_alphabet)),
      transitions_(std::move(transitions)),
      initial_(initial),
      accepting_(std::move(accepting)) {
    const std::size_t n = states_.size();
    if (n == 0)
        throw MalformedStructure("transducer needs at least one state");
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
        if (!input_alphabet_.admits(t.input))
            throw MalformedStructure("transition input '" + t.input + "' leaves the input alphabet");
        if (!output_alphabet_.admits(t.output))
            throw MalformedStructure("transition output '" + t.output +
                                     "' leaves the output alphabet");
    }
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

    outgoing_.resize(n);
    for (std::size_t i = 0; i < transitions_.size(); ++i) {
        outgoing_[transitions_[i].source].push_back(i);
        max_advance_ = std::max(max_advance_, transitions_[i].input.size() + transitions_[i].output.size());
    }
}

std::optional<std::size_t> BuchiTransducer::find_state(const std::string& name) const {
    const auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - states_.begin());
}

bool BuchiTransducer::operator==(const BuchiTransducer& other) const {
    return states_ == other.states_ && input_alphabet_ == other.input_alphabet_ &&
           output_alphabet_ == other.output_alphabet_ && transitions_ == other.transitions_ &&
           initial_ == other.initial_ && accepting_ == other.accepting_;
}

namespace {

void require_letters(const Alphabet& alphabet, std::string_view word, const char* tape) {
    for (char c : word)
        if (!alphabet.contains(c))
            throw AlphabetMismatch(std::string("letter '") + c + "' is not in the " + tape +
                                   " alphabet {" + alphabet.letters() + "}");
}

// Reads @p word on @p w starting at position class @p c; returns the class
// after the word, or nullopt on a mismatch.
std::optional<std::size_t> read_word(const Lasso& w, std::size_t c, std::string_view word) {
    for (char a : word) {
        if (w.letter_of_class(c) != a)
            return std::nullopt;
        c = w.next_class(c);
    }
    return c;
}

} // namespace

bool rel_pair_member(const BuchiTransducer& t, const Lasso& input, const Lasso& output) {
    require_letters(t.input_alphabet(), input.prefix(), "input");
    require_letters(t.input_alphabet(), input.period(), "input");
    require_letters(t.output_alphabet(), output.prefix(), "output");
    require_letters(t.output_alphabet(), output.period(), "output");

    const std::size_t c1 = input.class_count(), c2 = output.class_count();
    const auto id = [c1, c2](std::size_t q, std::size_t i, std::size_t j) { return (q * c1 + i) * c2 + j; };

    struct Edge {
        std::size_t from, to;
        bool advances_input, advances_output;
    };
    detail::Digraph graph(t.state_count() * c1 * c2);
    std::vector<Edge> edges;
    std::vector<bool> seen(graph.size(), false);
    std::vector<std::size_t> work{id(t.initial(), 0, 0)};
    seen[work.front()] = true;
    while (!work.empty()) {
        const std::size_t v = work.back();
        work.pop_back();
        const std::size_t j = v % c2, i = (v / c2) % c1, q = v / (c1 * c2);
        for (std::size_t k : t.outgoing(q)) {
            const auto& tr = t.transitions()[k];
            const auto ni = read_word(input, i, tr.input);
            if (!ni)
                continue;
            const auto nj = read_word(output, j, tr.output);
            if (!nj)
                continue;
            const std::size_t to = id(tr.target, *ni, *nj);
            graph.add_edge(v, to);
            edges.push_back({v, to, !tr.input.empty(), !tr.output.empty()});
            if (!seen[to]) {
                seen[to] = true;
                work.push_back(to);
            }
        }
    }

    std::size_t count = 0;
    const auto comp = detail::strongly_connected_components(graph, &count);
    std::vector<bool> has_accepting(count, false), moves_input(count, false), moves_output(count, false);
    for (std::size_t v = 0; v < graph.size(); ++v)
        if (seen[v] && t.is_accepting(v / (c1 * c2)))
            has_accepting[comp[v]] = true;
    for (const auto& e : edges) {
        if (comp[e.from] != comp[e.to])
            continue;
        moves_input[comp[e.from]] = moves_input[comp[e.from]] || e.advances_input;
        moves_output[comp[e.from]] = moves_output[comp[e.from]] || e.advances_output;
    }
    for (std::size_t c = 0; c < count; ++c)
        if (has_accepting[c] && moves_input[c] && moves_output[c])
            return true;
    return false;
}

std::size_t max_accepting_visits(const BuchiTransducer& t, std::string_view in_prefix,
                                 std::string_view out_prefix) {
    require_letters(t.input_alphabet(), in_prefix, "input");
    require_letters(t.output_alphabet(), out_prefix, "output");

    // Forward sweep over layers of equal consumed length i + j. Non-silent
    // transitions always move to a later layer, so a ring of max_advance + 1
    // layers suffices; silent transitions stay inside a layer and are closed
    // with a Bellman-Ford relaxation that also detects positive cycles.
    constexpr std::size_t kUnset = kUnboundedVisits;
    const std::size_t states = t.state_count();
    const std::size_t width = (in_prefix.size() + 1) * states;
    const std::size_t ring = t.max_advance() + 1;

    struct Layer {
        std::vector<std::size_t> value;
        std::vector<std::size_t> touched;
    };
    std::vector<Layer> layers(ring);
    for (auto& layer : layers)
        layer.value.assign(width, kUnset);

    // Non-silent transitions bucketed by (state, first input letter, first
    // output letter); slot 0 of a head stands for the empty word.
    const std::size_t in_heads = t.input_alphabet().size() + 1;
    const std::size_t out_heads = t.output_alphabet().size() + 1;
    const auto bucket = [&](std::size_t q, std::size_t hi, std::size_t ho) {
        return (q * in_heads + hi) * out_heads + ho;
    };
    std::vector<std::vector<std::size_t>> silent_from(states);
    std::vector<std::vector<std::size_t>> loud_from(states * in_heads * out_heads);
    bool any_silent = false;
    for (std::size_t k = 0; k < t.transitions().size(); ++k) {
        const auto& tr = t.transitions()[k];
        if (tr.silent()) {
            silent_from[tr.source].push_back(k);
            any_silent = true;
            continue;
        }
        const std::size_t hi = tr.input.empty() ? 0 : 1 + t.input_alphabet().index_of(tr.input[0]);
        const std::size_t ho = tr.output.empty() ? 0 : 1 + t.output_alphabet().index_of(tr.output[0]);
        loud_from[bucket(tr.source, hi, ho)].push_back(k);
    }

    const auto offer = [](Layer& layer, std::size_t cfg, std::size_t v) {
        std::size_t& slot = layer.value[cfg];
        if (slot == kUnset) {
            slot = v;
            layer.touched.push_back(cfg);
            return true;
        }
        if (v > slot) {
            slot = v;
            return true;
        }
        return false;
    };

    offer(layers[0], t.initial(), 0);
    std::size_t best = 0;
    const std::size_t last_layer = in_prefix.size() + out_prefix.size();
    for (std::size_t s = 0; s <= last_layer; ++s) {
        Layer& layer = layers[s % ring];
        if (layer.touched.empty())
            continue;

        if (any_silent) {
            bool changed = true;
            for (std::size_t round = 0; changed; ++round) {
                if (round > states)
                    return kUnboundedVisits;
                changed = false;
                for (std::size_t n = 0; n < layer.touched.size(); ++n) {
                    const std::size_t cfg = layer.touched[n];
                    const std::size_t q = cfg % states, i = cfg / states;
                    for (std::size_t k : silent_from[q]) {
                        const auto& tr = t.transitions()[k];
                        const std::size_t v = layer.value[cfg] + (t.is_accepting(tr.target) ? 1 : 0);
                        changed = offer(layer, i * states + tr.target, v) || changed;
                    }
                }
            }
        }

        for (std::size_t cfg : layer.touched) {
            const std::size_t q = cfg % states, i = cfg / states, j = s - i;
            const std::size_t v = layer.value[cfg];
            best = std::max(best, v);
            const std::size_t his[2] = {
                0, i < in_prefix.size() ? 1 + t.input_alphabet().index_of(in_prefix[i]) : 0};
            const std::size_t hos[2] = {
                0, j < out_prefix.size() ? 1 + t.output_alphabet().index_of(out_prefix[j]) : 0};
            for (std::size_t a = 0; a < 2; ++a) {
                if (a == 1 && his[1] == 0)
                    break;
                for (std::size_t b = 0; b < 2; ++b) {
                    if (b == 1 && hos[1] == 0)
                        break;
                    for (std::size_t k : loud_from[bucket(q, his[a], hos[b])]) {
                        const auto& tr = t.transitions()[k];
                        if (i + tr.input.size() > in_prefix.size() ||
                            j + tr.output.size() > out_prefix.size())
                            continue;
                        if (in_prefix.compare(i, tr.input.size(), tr.input) != 0 ||
                            out_prefix.compare(j, tr.output.size(), tr.output) != 0)
                            continue;
                        const std::size_t advance = tr.input.size() + tr.output.size();
                        offer(layers[(s + advance) % ring], (i + tr.input.size()) * states + tr.target,
                              v + (t.is_accepting(tr.target) ? 1 : 0));
                    }
                }
            }
        }

        for (std::size_t cfg : layer.touched)
            layer.value[cfg] = kUnset;
        layer.touched.clear();
    }
    return best;
}

BuchiTransducer paper_transducer() {
    enum : std::size_t { q0, q1, q2, q3, q4, q1_0, q1_1, q2_0, q2_1 };
    std::vector<std::string> names{"q0", "q1", "q2", "q3", "q4", "q1^0", "q1^1", "q2^0", "q2^1"};
    const std::string sigma = "01";

    std::vector<TransducerTransition> delta;
    const auto add = [&delta](std::size_t from, std::string in, std::string out, std::size_t to) {
        delta.push_back({from, std::move(in), std::move(out), to});
    };
    const auto words_of_length = [&sigma](std::size_t len) {
        std::vector<std::string> words{""};
        for (std::size_t n = 0; n < len; ++n) {
            std::vector<std::string> next;
            for (const auto& w : words)
                for (char a : sigma)
                    next.push_back(w + a);
            words = std::move(next);
        }
        return words;
    };
    const std::vector<std::string> at_most_one{"0", "1", ""};

    for (char a : sigma)
        add(q0, std::string(1, a), "", q1);
    for (const auto& u : words_of_length(1))
        for (const auto& v : words_of_length(2))
            add(q1, u, v, q1);
    for (const auto& v : at_most_one)
        add(q1, "", v, q2);
    add(q2, "A", "0", q1_0);
    add(q2, "A", "1", q1_1);
    for (std::size_t q : {q1_0, q1_1, q3})
        for (const auto& u : words_of_length(2))
            for (const auto& v : words_of_length(1))
                add(q, u, v, q3);
    for (std::size_t q : {q1_0, q1_1, q3})
        for (const auto& u : at_most_one)
            add(q, u, "", q4);
    add(q4, "0", "A", q2_0);
    add(q4, "1", "A", q2_1);
    add(q2_0, "", "", q1);
    add(q2_1, "", "", q1);

    std::vector<bool> accepting(names.size(), false);
    accepting[q1_1] = accepting[q2_1] = true;
    return BuchiTransducer(std::move(names), Alphabet("01A"), Alphabet("01A"), std::move(delta), q0,
                           std::move(accepting));
}

TransducerDiagnostics rel_validate(const BuchiTransducer& t) {
    const std::size_t n = t.state_count();
    TransducerDiagnostics report;

    std::vector<bool> reachable(n, false);
    std::vector<std::size_t> work{t.initial()};
    reachable[t.initial()] = true;
    while (!work.empty()) {
        const std::size_t q = work.back();
        work.pop_back();
        for (std::size_t k : t.outgoing(q)) {
            const std::size_t to = t.transitions()[k].target;
            if (!reachable[to]) {
                reachable[to] = true;
                work.push_back(to);
            }
        }
    }
    for (std::size_t q = 0; q < n; ++q)
        if (!reachable[q])
            report.unreachable_states.push_back(t.states()[q]);

    std::vector<std::vector<std::size_t>> predecessors(n);
    for (const auto& tr : t.transitions())
        predecessors[tr.target].push_back(tr.source);
    std::vector<bool> hopeful(n, false);
    for (std::size_t q = 0; q < n; ++q)
        if (t.is_accepting(q)) {
            hopeful[q] = true;
            work.push_back(q);
        }
    while (!work.empty()) {
        const std::size_t q = work.back();
        work.pop_back();
        for (std::size_t p : predecessors[q])
            if (!hopeful[p]) {
                hopeful[p] = true;
                work.push_back(p);
            }
    }
    for (std::size_t k = 0; k < t.transitions().size(); ++k)
        if (!hopeful[t.transitions()[k].source])
            report.hopeless_transitions.push_back(k);

    detail::Digraph silent(n);
    std::vector<bool> self_loop(n, false);
    for (const auto& tr : t.transitions())
        if (tr.silent()) {
            silent.add_edge(tr.source, tr.target);
            if (tr.source == tr.target)
                self_loop[tr.source] = true;
        }
    std::size_t count = 0;
    const auto comp = detail::strongly_connected_components(silent, &count);
    std::vector<std::vector<std::string>> groups(count);
    for (std::size_t q = 0; q < n; ++q)
        groups[comp[q]].push_back(t.states()[q]);
    for (std::size_t q = 0; q < n; ++q) {
        auto& group = groups[comp[q]];
        if (group.empty())
            continue;
        if (group.size() > 1 || self_loop[q])
            report.silent_cycles.push_back(group);
        group.clear();
    }
    return report;
}

} // namespace ratrel
