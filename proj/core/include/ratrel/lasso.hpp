#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ratrel/alphabet.hpp"

namespace ratrel {

/// An ultimately periodic omega-word `prefix . period^omega`.
///
/// Positions inside the finite presentation are addressed by a *position
/// class*: classes `0 .. |prefix|-1` are prefix letters, classes
/// `|prefix| .. |prefix|+|period|-1` are period letters, and advancing past
/// the last class wraps back to `|prefix|`. Every decision procedure walks
/// this finite cycle instead of the infinite word.
class Lasso {
public:
    /// Throws MalformedWord on an empty period or a letter outside @p alphabet.
    Lasso(std::string prefix, std::string period, Alphabet alphabet);

    const std::string& prefix() const noexcept { return prefix_; }
    const std::string& period() const noexcept { return period_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }

    std::size_t class_count() const noexcept { return prefix_.size() + period_.size(); }

    std::size_t next_class(std::size_t c) const noexcept {
        return c + 1 < class_count() ? c + 1 : prefix_.size();
    }

    char letter_of_class(std::size_t c) const noexcept {
        return c < prefix_.size() ? prefix_[c] : period_[c - prefix_.size()];
    }

    bool is_periodic_class(std::size_t c) const noexcept { return c >= prefix_.size(); }

    /// First @p n letters of the denoted omega-word.
    std::string unroll(std::size_t n) const;

    /// Literal syntax `prefix(period)`.
    std::string to_string() const;

    /// Structural equality; use canonicalize() first to compare denotations.
    bool operator==(const Lasso& other) const = default;

private:
    std::string prefix_;
    std::string period_;
    Alphabet alphabet_;
};

/// Unique presentation of the same omega-word: primitive period and a prefix
/// whose last letter differs from the last letter of the period.
Lasso canonicalize(const Lasso& w);

/// 1-based letter access. Throws IndexError for i == 0.
char letter_at(const Lasso& w, std::size_t i);

/// True iff both lassos denote the same omega-word.
bool same_word(const Lasso& a, const Lasso& b);

/// Parses `prefix(period)` against @p alphabet. Throws ParseError on syntax
/// errors and MalformedWord on letters outside the alphabet.
Lasso parse_lasso(std::string_view text, const Alphabet& alphabet);

} // namespace ratrel
