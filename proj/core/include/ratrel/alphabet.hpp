#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace ratrel {

/// Ordered finite set of single-character letters.
///
/// Letters keep their declaration order, which fixes the lexicographic order
/// used by witness search. A letter is any printable, non-space character
/// except the reserved punctuation `(`, `)`, `#` and `_`.
class Alphabet {
public:
    /// Throws MalformedStructure if @p letters is empty, repeats a letter, or
    /// contains a reserved character.
    explicit Alphabet(std::string_view letters);

    static bool is_valid_letter(char c) noexcept;

    bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] != kAbsent; }

    /// Position of @p c in declaration order. Precondition: contains(c).
    std::size_t index_of(char c) const noexcept { return index_[static_cast<unsigned char>(c)]; }

    std::size_t size() const noexcept { return letters_.size(); }
    const std::string& letters() const noexcept { return letters_; }
    char operator[](std::size_t i) const noexcept { return letters_[i]; }

    /// True iff every character of @p word belongs to the alphabet.
    bool admits(std::string_view word) const noexcept;

    bool operator==(const Alphabet& other) const noexcept { return letters_ == other.letters_; }

private:
    static constexpr unsigned char kAbsent = 0xff;

    std::string letters_;
    std::array<unsigned char, 256> index_{};
};

} // namespace ratrel
