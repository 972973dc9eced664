#include "ratrel/lasso.hpp"

#include <utility>

#include "ratrel/error.hpp"

namespace ratrel {

Lasso::Lasso(std::string prefix, std::string period, Alphabet alphabet)
    : prefix_(std::move(prefix)), period_(std::move(period)), alphabet_(std::move(alphabet)) {
    if (period_.empty())
        throw MalformedWord("lasso period must be non-empty");
    for (const std::string* part : {&prefix_, &period_})
        for (char c : *part)
            if (!alphabet_.contains(c))
                throw MalformedWord(std::string("letter '") + c + "' is not in alphabet {" +
                                    alphabet_.letters() + "}");
}

std::string Lasso::unroll(std::size_t n) const {
    std::string out;
    out.reserve(n);
    for (std::size_t c = 0; out.size() < n; c = next_class(c))
        out.push_back(letter_of_class(c));
    return out;
}

std::string Lasso::to_string() const { return prefix_ + "(" + period_ + ")"; }

namespace {

// Length of the shortest root r with period == r^(n/|r|).
std::size_t primitive_root_length(const std::string& period) {
    const std::size_t n = period.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i)
            ok = period[i] == period[i - d];
        if (ok)
            return d;
    }
    return n;
}

} // namespace

Lasso canonicalize(const Lasso& w) {
    std::string period = w.period().substr(0, primitive_root_length(w.period()));
    std::string prefix = w.prefix();
    // Absorb trailing prefix letters into the period by rotating it right.
    while (!prefix.empty() && prefix.back() == period.back()) {
        prefix.pop_back();
        period.insert(period.begin(), period.back());
        period.pop_back();
    }
    return Lasso(std::move(prefix), std::move(period), w.alphabet());
}

char letter_at(const Lasso& w, std::size_t i) {
    if (i == 0)
        throw IndexError("omega-word positions are 1-based");
    const auto& p = w.prefix();
    if (i <= p.size())
        return p[i - 1];
    return w.period()[(i - p.size() - 1) % w.period().size()];
}

bool same_word(const Lasso& a, const Lasso& b) {
    const Lasso ca = canonicalize(a);
    const Lasso cb = canonicalize(b);
    return ca.prefix() == cb.prefix() && ca.period() == cb.period();
}

Lasso parse_lasso(std::string_view text, const Alphabet& alphabet) {
    const auto open = text.find('(');
    if (open == std::string_view::npos)
        throw ParseError(0, "lasso literal '" + std::string(text) + "' lacks '(' period ')'");
    if (text.empty() || text.back() != ')')
        throw ParseError(0, "lasso literal '" + std::string(text) + "' must end with ')'");
    const auto prefix = text.substr(0, open);
    const auto period = text.substr(open + 1, text.size() - open - 2);
    for (std::string_view part : {prefix, period})
        if (part.find_first_of("()") != std::string_view::npos)
            throw ParseError(0, "unbalanced parentheses in lasso literal '" + std::string(text) + "'");
    if (period.empty())
        throw ParseError(0, "empty period in lasso literal '" + std::string(text) + "'");
    return Lasso(std::string(prefix), std::string(period), alphabet);
}

} // namespace ratrel
