#pragma once

#include <string>
#include <string_view>

#include "ratrel/buchi.hpp"
#include "ratrel/transducer.hpp"
#include "ratrel/tree.hpp"

namespace ratrel {

// Line-oriented formats; '#' starts a comment, tokens are separated by
// whitespace. Errors are reported as ParseError carrying the line number.
//
// Automaton:
//     alphabet <letter>...
//     state <name> [initial] [accepting]
//     trans <src> <letter> <dst>
//
// Transducer (`_` is the empty word):
//     input-alphabet <letter>...
//     output-alphabet <letter>...
//     state <name> [initial] [accepting]
//     trans <src> <in-word> <out-word> <dst>
//
// Regular tree:
//     root <id>
//     node <id> <label> <left-id> <right-id>

BuchiAutomaton parse_automaton(std::string_view text);
std::string write_automaton(const BuchiAutomaton& aut);

BuchiTransducer parse_transducer(std::string_view text);
std::string write_transducer(const BuchiTransducer& t);

RegularTree parse_tree(std::string_view text);
std::string write_tree(const RegularTree& t);

} // namespace ratrel
