#pragma once

#include "gkmthom/linear_form.hpp"
#include "gkmthom/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gkm {

/// Exponent multi-index of length n.
using Monomial = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Monomial& m)
{
    std::uint32_t d = 0;
    for (auto e : m)
        d += e;
    return d;
}

/// Graded-lex order with x_1 > x_2 > ... > x_n; comparator sorts the larger monomial first.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        auto da = total_degree(a);
        auto db = total_degree(b);
        if (da != db)
            return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Terms are kept in graded-lex order, leading term first, with no stored zeros.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c)
    {
        Polynomial p(nvars);
        if (c != 0)
            p.terms_.emplace(Monomial(nvars, 0), c);
        return p;
    }

    static Polynomial monomial(Monomial m, const Rational& c)
    {
        Polynomial p(m.size());
        if (c != 0)
            p.terms_.emplace(std::move(m), c);
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i)
    {
        Polynomial p(nvars);
        Monomial m(nvars, 0);
        m.at(i) = 1;
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    static Polynomial from_linear(const LinearForm& f)
    {
        Polynomial p(f.dimension());
        for (std::size_t i = 0; i < f.dimension(); ++i) {
            if (f[i] != 0) {
                Monomial m(f.dimension(), 0);
                m[i] = 1;
                p.terms_.emplace(std::move(m), f[i]);
            }
        }
        return p;
    }

    /// Product of the given linear forms (1 for an empty list).
    static Polynomial product_of(std::size_t nvars, const std::vector<LinearForm>& factors)
    {
        Polynomial p = constant(nvars, 1);
        for (const auto& f : factors)
            p *= from_linear(f);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    Rational constant_term() const
    {
        auto it = terms_.find(Monomial(nvars_, 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.begin()->first)); }

    /// True if every term has total degree k (the zero polynomial is homogeneous of every degree).
    bool is_homogeneous_of(int k) const
    {
        for (const auto& [m, c] : terms_)
            if (static_cast<int>(total_degree(m)) != k)
                return false;
        return true;
    }

    /// The degree when homogeneous and nonzero.
    std::optional<int> homogeneous_degree() const
    {
        if (terms_.empty())
            return std::nullopt;
        int d = degree();
        return is_homogeneous_of(d) ? std::optional<int>(d) : std::nullopt;
    }

    Polynomial operator-() const
    {
        Polynomial p(*this);
        for (auto& [m, c] : p.terms_)
            c = -c;
        return p;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        check_vars(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        check_vars(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        a.check_vars(b);
        Polynomial r(a.nvars_);
        Monomial m(a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                for (std::size_t i = 0; i < m.size(); ++i)
                    m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Polynomial pow(unsigned k) const
    {
        Polynomial r = constant(nvars_, 1);
        Polynomial base = *this;
        while (k) {
            if (k & 1u)
                r *= base;
            k >>= 1u;
            if (k)
                base *= base;
        }
        return r;
    }

    Rational evaluate(const RationalVector& point) const
    {
        if (point.size() != nvars_)
            throw DimensionMismatch("evaluation point has wrong length");
        Rational s = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (std::uint32_t e = 0; e < m[i]; ++e)
                    t *= point[i];
            s += t;
        }
        return s;
    }

    /// Ring homomorphism determined by x_i -> images[i].
    Polynomial substitute(const std::vector<LinearForm>& images) const
    {
        if (images.size() != nvars_)
            throw DimensionMismatch("substitution needs one image per variable");
        std::size_t target = images.empty() ? 0 : images.front().dimension();
        std::vector<std::vector<Polynomial>> powers(nvars_);
        Polynomial r(target);
        for (const auto& [m, c] : terms_) {
            Polynomial t = constant(target, c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (m[i] == 0)
                    continue;
                auto& pw = powers[i];
                if (pw.empty())
                    pw.push_back(constant(target, 1));
                while (pw.size() <= m[i])
                    pw.push_back(pw.back() * from_linear(images[i]));
                t *= pw[m[i]];
            }
            r += t;
        }
        return r;
    }

    struct LinearDivision;

    /// Division by a nonzero linear form: *this == quotient * form + remainder, with
    /// no remainder term divisible by the leading variable of form. The remainder is
    /// zero exactly when form divides *this.
    LinearDivision divide_linear(const LinearForm& form) const;

    /// Exact quotient by a linear form, or nullopt when it does not divide.
    std::optional<Polynomial> divided_by(const LinearForm& form) const;

    /// Canonical rendering: graded-lex order, coefficients as p/q, variables prefix1..prefixn.
    std::string to_string(const std::string& prefix = "x") const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += prefix + std::to_string(i + 1);
                if (m[i] > 1)
                    mono += "^" + std::to_string(m[i]);
            }
            if (mono.empty())
                out += gkm::to_string(a);
            else if (a == 1)
                out += mono;
            else
                out += gkm::to_string(a) + "*" + mono;
        }
        return out;
    }

private:
    void add_term(const Monomial& m, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void check_vars(const Polynomial& o) const
    {
        if (o.nvars_ != nvars_)
            throw DimensionMismatch("polynomials in " + std::to_string(nvars_) + " and " +
                                    std::to_string(o.nvars_) + " variables");
    }

    std::size_t nvars_ = 0;
    TermMap terms_;
};

struct Polynomial::LinearDivision {
    Polynomial quotient;
    Polynomial remainder;
};

inline Polynomial::LinearDivision Polynomial::divide_linear(const LinearForm& form) const
{
    if (form.dimension() != nvars_)
        throw DimensionMismatch("dividing by a linear form of another dimension");
    auto lead = form.leading_index();
    if (!lead)
        throw Error("division by the zero linear form");
    const std::size_t v = *lead;
    const Rational lc = form[v];
    Polynomial work(*this);
    LinearDivision out{Polynomial(nvars_), Polynomial(nvars_)};
    while (!work.terms_.empty()) {
        auto it = work.terms_.begin();
        Monomial m = it->first;
        Rational c = it->second;
        if (m[v] == 0) {
            out.remainder.terms_.emplace_hint(out.remainder.terms_.end(), m, c);
            work.terms_.erase(it);
            continue;
        }
        Monomial qm = m;
        qm[v] -= 1;
        Rational qc = c / lc;
        out.quotient.add_term(qm, qc);
        // work -= qc * x^qm * form
        for (std::size_t j = 0; j < nvars_; ++j) {
            if (form[j] == 0)
                continue;
            Monomial t = qm;
            t[j] += 1;
            work.add_term(t, -qc * form[j]);
        }
    }
    return out;
}

inline std::optional<Polynomial> Polynomial::divided_by(const LinearForm& form) const
{
    auto d = divide_linear(form);
    if (!d.remainder.is_zero())
        return std::nullopt;
    return std::move(d.quotient);
}

/// Exact quotient of p by a linear form, if the form divides p.
inline std::optional<Polynomial> divides_linear(const LinearForm& form, const Polynomial& p)
{
    return p.divided_by(form);
}

/// rho_e extended multiplicatively to S(g*): each variable x_j is sent to rho_e(x_j).
inline Polynomial rho(const LinearForm& edge_weight, const RationalVector& xi, const Polynomial& p)
{
    const std::size_t n = edge_weight.dimension();
    if (p.nvars() != n)
        throw DimensionMismatch("rho: polynomial and weight dimensions differ");
    std::vector<LinearForm> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        images.push_back(rho(edge_weight, xi, LinearForm::coordinate(n, j)));
    return p.substitute(images);
}

/// Derivative of p in the direction xi; zero exactly when p lies in S(annihilator of xi).
inline Polynomial directional_derivative(const Polynomial& p, const RationalVector& xi)
{
    if (xi.size() != p.nvars())
        throw DimensionMismatch("direction has wrong length");
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0 || xi[i] == 0)
                continue;
            Monomial d = m;
            d[i] -= 1;
            r += Polynomial::monomial(std::move(d), c * m[i] * xi[i]);
        }
    }
    return r;
}

} // namespace gkm
