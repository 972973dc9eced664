// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles/oracles.hpp"
#include "ratrel/buchi.hpp"
#include "ratrel/corpus.hpp"
#include "ratrel/reduction.hpp"
#include "ratrel/text_format.hpp"
#include "ratrel/transducer.hpp"
#include "ratrel/tree.hpp"

using namespace ratrel;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds)
        o.require(false, "runtime over the " + std::to_string(limit_seconds) + " s limit");
    std::printf("%s [%d] %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    return o.pass;
}

Outcome lasso_membership() {
    Outcome o;
    const auto b = b_automaton();
    const auto lassos = testgen::lassos_over(Alphabet("01"), 3, 3);
    o.require(lassos.size() == 210, "expected 210 lassos, got " + std::to_string(lassos.size()));
    std::size_t accepted = 0;
    for (const auto& w : lassos) {
        const bool want = canonicalize(w).period().find('1') != std::string::npos;
        const bool got = buchi_member(b, w);
        o.require(got == want, "mismatch on " + w.to_string());
        accepted += got;
    }
    if (o.pass)
        o.detail = std::to_string(lassos.size()) + " lassos, " + std::to_string(accepted) + " accepted";
    return o;
}

Outcome transducer_oracle() {
    Outcome o;
    std::mt19937_64 rng(2024);
    constexpr int kTransducers = 600, kPairs = 6;
    std::size_t positives = 0, checked = 0;
    for (int round = 0; round < kTransducers && o.pass; ++round) {
        const auto t = testgen::random_transducer(rng, 3, 6);
        for (int s = 0; s < kPairs; ++s) {
            const auto in = testgen::random_lasso(rng, t.input_alphabet(), 2, 2);
            const auto out = testgen::random_lasso(rng, t.output_alphabet(), 2, 2);
            const bool got = rel_pair_member(t, in, out);
            o.require(got == oracle::rel_pair_member(t, in, out),
                      "transducer " + std::to_string(round) + " on " + in.to_string() + " / " + out.to_string());
            positives += got;
            ++checked;
        }
    }
    if (o.pass)
        o.detail = std::to_string(kTransducers) + " transducers, " + std::to_string(checked) + " pairs, " +
                   std::to_string(positives) + " in the relation";
    return o;
}

Outcome paper_structure() {
    Outcome o;
    const auto t = paper_transducer();
    o.require(t.state_count() == 9, "state count " + std::to_string(t.state_count()));
    std::vector<std::string> accepting;
    for (std::size_t q = 0; q < t.state_count(); ++q)
        if (t.is_accepting(q))
            accepting.push_back(t.states()[q]);
    o.require(accepting == std::vector<std::string>{"q1^1", "q2^1"}, "unexpected accepting set");
    o.require(t.transitions().size() == 52, "transition count " + std::to_string(t.transitions().size()));
    o.require(rel_validate(t).silent_cycles.empty(), "silent cycle present");
    const std::string text = write_transducer(t);
    const auto reread = parse_transducer(text);
    o.require(reread == t, "round trip changed the transducer");
    o.require(write_transducer(reread) == text, "round trip is not byte-stable");
    o.require(write_transducer(paper_transducer()) == text, "generation is not deterministic");
    if (o.pass)
        o.detail = "9 states, F = {q1^1, q2^1}, 52 transitions, " + std::to_string(text.size()) + " bytes stable";
    return o;
}

Outcome hand_pairs() {
    Outcome o;
    const auto t = paper_transducer();
    const Alphabet code("01A");
    const Lasso in_yes("10A", "0010A", code), out_yes("", "0010A", code);
    const Lasso in_no("10A", "0000A", code), out_no("", "0000A", code);
    o.require(rel_pair_member(t, in_yes, out_yes), "10A(0010A) / (0010A) rejected");
    o.require(oracle::rel_pair_member(t, in_yes, out_yes), "oracle rejects 10A(0010A) / (0010A)");
    o.require(!rel_pair_member(t, in_no, out_no), "10A(0000A) / (0000A) accepted");
    o.require(!oracle::rel_pair_member(t, in_no, out_no), "oracle accepts 10A(0000A) / (0000A)");
    return o;
}

Outcome encoding_laws() {
    Outcome o;
    const auto corpus = generate_corpus(CorpusSpec{});
    std::size_t probes = 0;
    for (std::size_t k = 1; k <= 4 && o.pass; ++k) {
        const std::string tag = " at k=" + std::to_string(k);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& t = corpus[i];
            const auto c = encode(t, k);
            std::size_t p1 = 0, p2 = 0, len = 1;
            for (std::size_t j = 1; j <= k; ++j, len *= 4) {
                o.require(c.sigma1.find('A', p1) == p1 + len, "sigma1 block length" + tag);
                o.require(c.sigma2.find('A', p2) == p2 + 2 * len, "sigma2 block length" + tag);
                p1 += len + 1;
                p2 += 2 * len + 1;
            }
            o.require(p1 == c.sigma1.size() && p2 == c.sigma2.size(), "trailing letters" + tag);

            for (std::size_t d = 0; d <= 2 * k + 1; ++d) {
                const auto u = testgen::flip_leftmost(t, d);
                o.require(continuity_probe(t, u, k), "continuity, perturbed at depth " + std::to_string(d) + tag);
                if (d < 2 * k)
                    o.require(encode(u, k) != c, "injectivity, perturbed at depth " + std::to_string(d) + tag);
                ++probes;
            }
            for (std::size_t j = i + 1; j < corpus.size(); ++j) {
                const auto& s = corpus[j];
                o.require(continuity_probe(t, s, k), "continuity between corpus trees" + tag);
                if (!agree_above_depth(t, s, 2 * k))
                    o.require(encode(s, k) != c, "injectivity between corpus trees" + tag);
                ++probes;
            }
        }
    }
    if (o.pass)
        o.detail = std::to_string(corpus.size()) + " trees, " + std::to_string(probes) + " probes";
    return o;
}

Outcome reduction_corpus() {
    Outcome o;
    const CorpusSpec spec{};
    const auto report = verify_corpus(spec);
    o.require(report.rows.size() >= 50, "only " + std::to_string(report.rows.size()) + " distinct trees");
    std::set<std::string> keys;
    std::size_t ground = 0, agree = 0, coherent = 0;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        keys.insert(canonical_key(row.tree));
        o.require(row.tree.size() <= 3, "tree with more than 3 vertices");
        o.require(row.report.ground == path_check(row.tree, b_automaton()), "ground truth mismatch");
        o.require(row.report.agreement, "row " + std::to_string(i) + " disagrees");
        o.require(row.report.coherent, "row " + std::to_string(i) + " visits " +
                                           std::to_string(row.report.visits) + " vs ones " +
                                           std::to_string(row.report.ones));
        ground += row.report.ground;
        agree += row.report.agreement;
        coherent += row.report.coherent;
    }
    o.require(keys.size() == report.rows.size(), "corpus contains bisimilar trees");
    o.require(report.pass, "corpus verdict FAIL");
    if (o.pass) {
        std::ostringstream s;
        s << report.rows.size() << " trees (seed " << spec.seed << ", k=" << spec.blocks << "), " << ground
          << " with a ground-truth branch, agreement " << agree << "/" << report.rows.size()
          << ", coherent " << coherent << "/" << report.rows.size();
        o.detail = s.str();
    }
    return o;
}

Outcome path_check_oracle() {
    Outcome o;
    const auto trees = enumerate_trees(3);
    const auto b = b_automaton();
    const auto co = with_complemented_acceptance(b);
    std::size_t positives = 0;
    for (const auto& t : trees)
        for (const auto* aut : {&b, &co}) {
            const bool got = path_check(t, *aut);
            o.require(got == oracle::path_check(t, *aut), "mismatch on " + canonical_key(t));
            positives += got;
        }
    if (o.pass)
        o.detail = std::to_string(trees.size()) + " trees, 2 automata, " + std::to_string(positives) + " positive";
    return o;
}

} // namespace

int main() {
    bool all = true;
    all &= run_criterion(1, "lasso membership exactness", 1.0, lasso_membership);
    all &= run_criterion(2, "transducer membership vs configuration-repeat oracle", 30.0, transducer_oracle);
    all &= run_criterion(3, "tree-code transducer structure and round trip", 0.0, paper_structure);
    all &= run_criterion(4, "hand-derived membership pairs", 0.0, hand_pairs);
    all &= run_criterion(5, "encoding laws for k <= 4", 0.0, encoding_laws);
    all &= run_criterion(6, "reduction experiment on the seeded corpus", 120.0, reduction_corpus);
    all &= run_criterion(7, "path check vs branch oracle on all trees up to 3 vertices", 30.0, path_check_oracle);
    std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
    return all ? 0 : 1;
}
