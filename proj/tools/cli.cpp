#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ratrel/buchi.hpp"
#include "ratrel/corpus.hpp"
#include "ratrel/error.hpp"
#include "ratrel/reduction.hpp"
#include "ratrel/text_format.hpp"
#include "ratrel/transducer.hpp"
#include "ratrel/tree.hpp"

namespace ratrel::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Wraps a parser so its errors name the file they came from.
template <typename Parse>
auto load(const std::string& path, Parse parse) {
    const std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw ParseError(0, path + ": " + e.what());
    }
}

const char* verdict(bool b) { return b ? "true" : "false"; }

std::string finite_word(const std::string& tok) { return tok == "_" ? std::string{} : tok; }

void print_header(std::ostream& out) {
    out << std::left << std::setw(5) << "row" << std::setw(4) << "m" << std::setw(8) << "ground"
        << std::setw(6) << "ones" << std::setw(8) << "visits" << std::setw(9) << "verdict"
        << "agree\n";
}

void print_row(std::ostream& out, std::size_t row, const ReductionReport& r) {
    out << std::left << std::setw(5) << row << std::setw(4) << r.vertex_count << std::setw(8)
        << verdict(r.ground) << std::setw(6) << r.ones << std::setw(8)
        << (r.visits == kUnboundedVisits ? std::string("inf") : std::to_string(r.visits))
        << std::setw(9) << verdict(r.verdict) << (r.agreement && r.coherent ? "yes" : "no") << '\n';
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decision procedures for Buchi automata, two-tape Buchi transducers and the "
                 "tree-coding reduction"};
    app.require_subcommand(1);

    std::string aut_file, trans_file, tree_file, lasso1, lasso2, output_path, word = "both";
    std::size_t k = 7, size = 3, samples = 50;
    std::uint64_t seed = 7;

    auto* aut_member = app.add_subcommand("aut-member", "Lasso membership in a Buchi automaton");
    aut_member->add_option("automaton", aut_file)->required();
    aut_member->add_option("lasso", lasso1, "prefix(period)")->required();

    auto* aut_empty = app.add_subcommand("aut-empty", "Emptiness check with witness");
    aut_empty->add_option("automaton", aut_file)->required();

    auto* rel_member = app.add_subcommand("rel-member", "Lasso-pair membership in a transducer relation");
    rel_member->add_option("transducer", trans_file)->required();
    rel_member->add_option("input", lasso1, "prefix(period) on tape 1")->required();
    rel_member->add_option("output", lasso2, "prefix(period) on tape 2")->required();

    auto* rel_visits = app.add_subcommand("rel-visits", "Max accepting visits over finite prefixes");
    rel_visits->add_option("transducer", trans_file)->required();
    rel_visits->add_option("input", lasso1, "finite word, _ for empty")->required();
    rel_visits->add_option("output", lasso2, "finite word, _ for empty")->required();

    auto* gen = app.add_subcommand("gen-paper-transducer", "Write the nine-state tree-code transducer");
    gen->add_option("-o", output_path, "output path (stdout when omitted)");

    auto* tree_encode = app.add_subcommand("tree-encode", "Print the first k blocks of a tree code");
    tree_encode->add_option("tree", tree_file)->required();
    tree_encode->add_option("-k", k, "block count")->required();
    tree_encode->add_option("--word", word, "sigma1|sigma2|both")
        ->check(CLI::IsMember({"sigma1", "sigma2", "both"}));

    auto* tree_path = app.add_subcommand("tree-path-check", "Does some branch satisfy the automaton?");
    tree_path->add_option("tree", tree_file)->required();
    tree_path->add_option("automaton", aut_file)->required();

    auto* reduce = app.add_subcommand("reduce-verify", "Check the coding reduction on one tree");
    reduce->add_option("tree", tree_file)->required();
    reduce->add_option("-k", k, "block count");

    auto* corpus = app.add_subcommand("corpus-verify", "Check the coding reduction on a seeded corpus");
    corpus->add_option("--size", size, "max vertices per tree");
    corpus->add_option("--samples", samples, "distinct trees to draw");
    corpus->add_option("--seed", seed, "generator seed");
    corpus->add_option("-k", k, "block count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*aut_member) {
            const auto aut = load(aut_file, parse_automaton);
            out << verdict(buchi_member(aut, parse_lasso(lasso1, aut.alphabet()))) << '\n';
        } else if (*aut_empty) {
            const auto result = buchi_empty(load(aut_file, parse_automaton));
            if (result.empty)
                out << "empty\n";
            else
                out << "nonempty " << result.witness->to_string() << '\n';
        } else if (*rel_member) {
            const auto t = load(trans_file, parse_transducer);
            const Lasso in = parse_lasso(lasso1, t.input_alphabet());
            const Lasso outw = parse_lasso(lasso2, t.output_alphabet());
            out << verdict(rel_pair_member(t, in, outw)) << '\n';
        } else if (*rel_visits) {
            const auto t = load(trans_file, parse_transducer);
            const std::size_t v = max_accepting_visits(t, finite_word(lasso1), finite_word(lasso2));
            if (v == kUnboundedVisits)
                out << "unbounded\n";
            else
                out << v << '\n';
        } else if (*gen) {
            const std::string text = write_transducer(paper_transducer());
            if (output_path.empty()) {
                out << text;
            } else {
                std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
                if (!file || !(file << text) || !file.flush())
                    throw Error("cannot write '" + output_path + "'");
            }
        } else if (*tree_encode) {
            const TreeCode code = encode(load(tree_file, parse_tree), k);
            if (word != "sigma2")
                out << code.sigma1 << '\n';
            if (word != "sigma1")
                out << code.sigma2 << '\n';
        } else if (*tree_path) {
            const auto t = load(tree_file, parse_tree);
            out << verdict(path_check(t, load(aut_file, parse_automaton))) << '\n';
        } else if (*reduce) {
            const auto t = load(tree_file, parse_tree);
            const ReductionReport r = reduce_verify(t, k);
            print_header(out);
            print_row(out, 0, r);
            out << (r.agreement && r.coherent ? "PASS" : "FAIL") << '\n';
            if (!(r.agreement && r.coherent))
                out << "# offending tree (row 0)\n" << write_tree(minimize(t));
        } else if (*corpus) {
            const CorpusSpec spec{size, samples, seed, k};
            const CorpusReport report = verify_corpus(spec);
            print_header(out);
            for (std::size_t i = 0; i < report.rows.size(); ++i)
                print_row(out, i, report.rows[i].report);
            out << (report.pass ? "PASS" : "FAIL") << '\n';
            for (std::size_t i = 0; i < report.rows.size(); ++i) {
                const auto& r = report.rows[i].report;
                if (!(r.agreement && r.coherent))
                    out << "# offending tree (row " << i << ")\n" << write_tree(report.rows[i].tree);
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace ratrel::cli
