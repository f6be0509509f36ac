#pragma once

#include "gkmthom/polynomial.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace gkm {

namespace detail {

// expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ; factor := unary ('^' int)?
// unary := '-' unary | atom ; atom := rational | var | '(' expr ')'
class PolynomialParser {
public:
    PolynomialParser(std::string_view text, std::size_t nvars, std::string prefix)
        : s_(text), n_(nvars), prefix_(std::move(prefix))
    {
    }

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error("polynomial '" + std::string(s_) + "', column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    Polynomial expr()
    {
        Polynomial p = term();
        for (;;) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    Polynomial term()
    {
        Polynomial p = factor();
        while (accept('*'))
            p *= factor();
        return p;
    }

    Polynomial factor()
    {
        Polynomial base = unary();
        if (accept('^')) {
            skip();
            std::string d = digits();
            if (d.empty())
                fail("exponent expected");
            base = base.pow(static_cast<unsigned>(std::stoul(d)));
        }
        return base;
    }

    Polynomial unary()
    {
        if (accept('-'))
            return -unary();
        return atom();
    }

    Polynomial atom()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        if (accept('(')) {
            Polynomial p = expr();
            if (!accept(')'))
                fail("')' expected");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::string num = digits();
            // a '/' directly followed by a digit belongs to the literal
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                num += "/" + digits();
            }
            return Polynomial::constant(n_, parse_rational(num));
        }
        if (s_.substr(pos_, prefix_.size()) == prefix_) {
            pos_ += prefix_.size();
            std::string d = digits();
            if (d.empty())
                fail("variable index expected");
            std::size_t i = std::stoul(d);
            if (i < 1 || i > n_)
                fail("variable " + prefix_ + d + " out of range 1.." + std::to_string(n_));
            return Polynomial::variable(n_, i - 1);
        }
        fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }

    std::string_view s_;
    std::size_t n_;
    std::string prefix_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses text such as "-x1^2 + 2/3*x1*(x2 - x3)" in variables prefix1..prefixn.
inline Polynomial parse_polynomial(std::string_view text, std::size_t nvars, const std::string& prefix = "x")
{
    return detail::PolynomialParser(text, nvars, prefix).parse();
}

} // namespace gkm
