#include "ratrel/text_format.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "ratrel/error.hpp"

namespace ratrel {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string tok; in >> tok;)
            line.tokens.push_back(std::move(tok));
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

Alphabet parse_alphabet(const Line& line) {
    std::string letters;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        if (line.tokens[i].size() != 1)
            throw ParseError(line.number, "letter '" + line.tokens[i] + "' must be a single character");
        letters += line.tokens[i];
    }
    try {
        return Alphabet(letters);
    } catch (const Error& e) {
        throw ParseError(line.number, e.what());
    }
}

// State declarations shared by the automaton and transducer formats.
struct StateTable {
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    std::vector<bool> accepting;
    std::optional<std::size_t> initial;

    void declare(const Line& line) {
        if (line.tokens.size() < 2)
            throw ParseError(line.number, "state declaration needs a name");
        const std::string& name = line.tokens[1];
        if (!index.try_emplace(name, names.size()).second)
            throw ParseError(line.number, "state '" + name + "' declared twice");
        bool is_initial = false, is_accepting = false;
        for (std::size_t i = 2; i < line.tokens.size(); ++i) {
            if (line.tokens[i] == "initial")
                is_initial = true;
            else if (line.tokens[i] == "accepting")
                is_accepting = true;
            else
                throw ParseError(line.number, "unknown state flag '" + line.tokens[i] + "'");
        }
        if (is_initial) {
            if (initial)
                throw ParseError(line.number, "more than one initial state");
            initial = names.size();
        }
        names.push_back(name);
        accepting.push_back(is_accepting);
    }

    std::size_t lookup(const std::string& name, std::size_t line) const {
        const auto it = index.find(name);
        if (it == index.end())
            throw ParseError(line, "undeclared state '" + name + "'");
        return it->second;
    }

    void finish() const {
        if (names.empty())
            throw ParseError(0, "no states declared");
        if (!initial)
            throw ParseError(0, "no initial state");
    }
};

void write_states(std::ostringstream& out, const std::vector<std::string>& names, std::size_t initial,
                  const std::vector<bool>& accepting) {
    for (std::size_t q = 0; q < names.size(); ++q) {
        out << "state " << names[q];
        if (q == initial)
            out << " initial";
        if (accepting[q])
            out << " accepting";
        out << '\n';
    }
}

void write_letters(std::ostringstream& out, const char* keyword, const Alphabet& alphabet) {
    out << keyword;
    for (char c : alphabet.letters())
        out << ' ' << c;
    out << '\n';
}

} // namespace

BuchiAutomaton parse_automaton(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines.front().tokens.front() != "alphabet")
        throw ParseError(lines.empty() ? 0 : lines.front().number,
                         "automaton must start with an 'alphabet' line");
    const Alphabet alphabet = parse_alphabet(lines.front());

    StateTable states;
    std::vector<const Line*> trans_lines;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& kw = line.tokens.front();
        if (kw == "state")
            states.declare(line);
        else if (kw == "trans")
            trans_lines.push_back(&line);
        else
            throw ParseError(line.number, "unknown directive '" + kw + "'");
    }
    states.finish();

    std::vector<BuchiTransition> transitions;
    for (const Line* line : trans_lines) {
        if (line->tokens.size() != 4)
            throw ParseError(line->number, "expected 'trans <src> <letter> <dst>'");
        const std::string& letter = line->tokens[2];
        if (letter.size() != 1 || !alphabet.contains(letter[0]))
            throw ParseError(line->number, "letter '" + letter + "' is not in the alphabet");
        transitions.push_back({states.lookup(line->tokens[1], line->number), letter[0],
                               states.lookup(line->tokens[3], line->number)});
    }
    return BuchiAutomaton(alphabet, states.names, *states.initial, states.accepting,
                          std::move(transitions));
}

std::string write_automaton(const BuchiAutomaton& aut) {
    std::ostringstream out;
    write_letters(out, "alphabet", aut.alphabet());
    write_states(out, aut.states(), aut.initial(), aut.accepting());
    for (const auto& t : aut.transitions())
        out << "trans " << aut.states()[t.source] << ' ' << t.letter << ' ' << aut.states()[t.target]
            << '\n';
    return out.str();
}

BuchiTransducer parse_transducer(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.size() < 2 || lines[0].tokens.front() != "input-alphabet" ||
        lines[1].tokens.front() != "output-alphabet")
        throw ParseError(lines.empty() ? 0 : lines.front().number,
                         "transducer must start with 'input-alphabet' and 'output-alphabet' lines");
    const Alphabet input = parse_alphabet(lines[0]);
    const Alphabet output = parse_alphabet(lines[1]);

    StateTable states;
    std::vector<const Line*> trans_lines;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& kw = line.tokens.front();
        if (kw == "state")
            states.declare(line);
        else if (kw == "trans")
            trans_lines.push_back(&line);
        else
            throw ParseError(line.number, "unknown directive '" + kw + "'");
    }
    states.finish();

    const auto word = [](const std::string& tok) { return tok == "_" ? std::string{} : tok; };
    std::vector<TransducerTransition> transitions;
    for (const Line* line : trans_lines) {
        if (line->tokens.size() != 5)
            throw ParseError(line->number, "expected 'trans <src> <in-word> <out-word> <dst>'");
        std::string in = word(line->tokens[2]), out = word(line->tokens[3]);
        if (!input.admits(in))
            throw ParseError(line->number, "input word '" + in + "' leaves the input alphabet");
        if (!output.admits(out))
            throw ParseError(line->number, "output word '" + out + "' leaves the output alphabet");
        transitions.push_back({states.lookup(line->tokens[1], line->number), std::move(in),
                               std::move(out), states.lookup(line->tokens[4], line->number)});
    }
    return BuchiTransducer(states.names, input, output, std::move(transitions), *states.initial,
                           states.accepting);
}

std::string write_transducer(const BuchiTransducer& t) {
    std::ostringstream out;
    write_letters(out, "input-alphabet", t.input_alphabet());
    write_letters(out, "output-alphabet", t.output_alphabet());
    write_states(out, t.states(), t.initial(), t.accepting());
    const auto word = [](const std::string& w) { return w.empty() ? std::string("_") : w; };
    for (const auto& tr : t.transitions())
        out << "trans " << t.states()[tr.source] << ' ' << word(tr.input) << ' ' << word(tr.output)
            << ' ' << t.states()[tr.target] << '\n';
    return out.str();
}

RegularTree parse_tree(std::string_view text) {
    const auto lines = tokenize(text);
    std::optional<std::pair<std::string, std::size_t>> root;
    struct Pending {
        std::size_t line;
        std::string name;
        char label;
        std::string left, right;
    };
    std::vector<Pending> nodes;
    std::map<std::string, std::size_t> index;
    for (const Line& line : lines) {
        const std::string& kw = line.tokens.front();
        if (kw == "root") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "expected 'root <id>'");
            if (root)
                throw ParseError(line.number, "root declared twice");
            root.emplace(line.tokens[1], line.number);
        } else if (kw == "node") {
            if (line.tokens.size() != 5)
                throw ParseError(line.number, "expected 'node <id> <label> <left-id> <right-id>'");
            const std::string& label = line.tokens[2];
            if (label.size() != 1 || !Alphabet::is_valid_letter(label[0]))
                throw ParseError(line.number, "label '" + label + "' must be a single letter");
            if (!index.try_emplace(line.tokens[1], nodes.size()).second)
                throw ParseError(line.number, "node '" + line.tokens[1] + "' declared twice");
            nodes.push_back({line.number, line.tokens[1], label[0], line.tokens[3], line.tokens[4]});
        } else {
            throw ParseError(line.number, "unknown directive '" + kw + "'");
        }
    }
    if (!root)
        throw ParseError(0, "no root declared");
    const auto lookup = [&index](const std::string& name, std::size_t line) {
        const auto it = index.find(name);
        if (it == index.end())
            throw ParseError(line, "undeclared node '" + name + "'");
        return it->second;
    };
    std::vector<TreeVertex> vertices;
    for (const auto& p : nodes)
        vertices.push_back({p.name, p.label, lookup(p.left, p.line), lookup(p.right, p.line)});
    const std::size_t root_index = lookup(root->first, root->second);
    return RegularTree(std::move(vertices), root_index);
}

std::string write_tree(const RegularTree& t) {
    std::ostringstream out;
    out << "root " << t.vertices()[t.root()].name << '\n';
    for (const auto& v : t.vertices())
        out << "node " << v.name << ' ' << v.label << ' ' << t.vertices()[v.left].name << ' '
            << t.vertices()[v.right].name << '\n';
    return out.str();
}

} // namespace ratrel
