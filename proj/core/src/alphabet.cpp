#include "ratrel/alphabet.hpp"

#include <cctype>

#include "ratrel/error.hpp"

namespace ratrel {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
    index_.fill(kAbsent);
    if (letters_.empty())
        throw MalformedStructure("alphabet must contain at least one letter");
    if (letters_.size() >= kAbsent)
        throw MalformedStructure("alphabet too large");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const char c = letters_[i];
        if (!is_valid_letter(c))
            throw MalformedStructure(std::string("invalid letter '") + c + "' in alphabet");
        if (contains(c))
            throw MalformedStructure(std::string("duplicate letter '") + c + "' in alphabet");
        index_[static_cast<unsigned char>(c)] = static_cast<unsigned char>(i);
    }
}

bool Alphabet::is_valid_letter(char c) noexcept {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x80 || !std::isgraph(u))
        return false;
    return c != '(' && c != ')' && c != '#' && c != '_';
}

bool Alphabet::admits(std::string_view word) const noexcept {
    for (char c : word)
        if (!contains(c))
            return false;
    return true;
}

} // namespace ratrel
