#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gkm {

/// Exact arbitrary-precision rational. Every coefficient in the library is one of these.
using Rational = mpq_class;

/// A point of g (or any vector of rationals), e.g. a polarizing vector xi.
using RationalVector = std::vector<Rational>;

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Parses "p/q", "p", "-p/q" (surrounding blanks allowed). Throws Error on malformed input.
inline Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t')
            s.push_back(ch);
    if (s.empty())
        throw Error("empty rational literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '/') {
            if (seen_slash || !digit_before)
                throw Error("malformed rational literal '" + s + "'");
            seen_slash = true;
        } else if (ch >= '0' && ch <= '9') {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw Error("malformed rational literal '" + s + "'");
        }
    }
    if (!digit_before || (seen_slash && !digit_after))
        throw Error("malformed rational literal '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw Error("malformed rational literal '" + s + "'");
    if (q.get_den() == 0)
        throw Error("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

/// Canonical text: "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

inline RationalVector parse_rational_list(std::string_view text)
{
    RationalVector out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        out.push_back(parse_rational(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

inline int sign(const Rational& q) { return sgn(q); }

} // namespace gkm
