#pragma once

#include "gkmthom/linear_form.hpp"
#include "gkmthom/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

/// A polynomial divided by a product of linear forms: an element of the fraction field
/// whose denominator splits into linear factors. Denominator factors are stored
/// normalized (leading coordinate 1) with positive multiplicities; scalars live in the
/// numerator.
class RationalExpr {
public:
    using Denominator = std::map<LinearForm, int>;

    RationalExpr() = default;
    explicit RationalExpr(std::size_t nvars) : num_(nvars) {}
    RationalExpr(Polynomial numerator) : num_(std::move(numerator)) {} // NOLINT(google-explicit-constructor)

    static RationalExpr constant(std::size_t nvars, const Rational& c) { return RationalExpr(Polynomial::constant(nvars, c)); }

    /// numerator / prod(factors). Throws on a zero factor.
    static RationalExpr quotient(Polynomial numerator, const std::vector<LinearForm>& factors)
    {
        RationalExpr r(std::move(numerator));
        for (const auto& f : factors)
            r.divide_in_place(f);
        return r;
    }

    /// prod(top) / prod(bottom), kept factored until reduce().
    static RationalExpr of_products(std::size_t nvars, const std::vector<LinearForm>& top,
                                    const std::vector<LinearForm>& bottom)
    {
        return quotient(Polynomial::product_of(nvars, top), bottom);
    }

    std::size_t nvars() const { return num_.nvars(); }
    const Polynomial& numerator() const { return num_; }
    const Denominator& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    /// Product of the denominator factors as a polynomial.
    Polynomial denominator_polynomial() const
    {
        Polynomial p = Polynomial::constant(nvars(), 1);
        for (const auto& [f, k] : den_)
            p *= Polynomial::from_linear(f).pow(static_cast<unsigned>(k));
        return p;
    }

    int denominator_degree() const
    {
        int d = 0;
        for (const auto& [f, k] : den_)
            d += k;
        return d;
    }

    /// Cancels every denominator factor that divides the numerator. Idempotent.
    RationalExpr& reduce()
    {
        if (num_.is_zero()) {
            den_.clear();
            return *this;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            while (it->second > 0) {
                auto q = num_.divided_by(it->first);
                if (!q)
                    break;
                num_ = std::move(*q);
                --it->second;
            }
            if (it->second == 0)
                it = den_.erase(it);
            else
                ++it;
        }
        return *this;
    }

    RationalExpr reduced() const
    {
        RationalExpr r(*this);
        r.reduce();
        return r;
    }

    /// The value as a polynomial, if after reduction the denominator is empty.
    std::optional<Polynomial> as_polynomial() const
    {
        RationalExpr r = reduced();
        if (!r.is_polynomial())
            return std::nullopt;
        return r.num_;
    }

    RationalExpr& divide_in_place(const LinearForm& f)
    {
        auto [c, nf] = f.normalized();
        if (c == 0)
            throw Error("division by the zero linear form");
        if (nf.dimension() != nvars())
            throw DimensionMismatch("denominator factor has wrong dimension");
        num_ *= Rational(1) / c;
        ++den_[nf];
        return *this;
    }

    RationalExpr& multiply_in_place(const LinearForm& f)
    {
        auto [c, nf] = f.normalized();
        if (c == 0) {
            num_ = Polynomial(nvars());
            den_.clear();
            return *this;
        }
        auto it = den_.find(nf);
        if (it != den_.end()) {
            num_ *= c;
            if (--it->second == 0)
                den_.erase(it);
        } else {
            num_ *= Polynomial::from_linear(f);
        }
        return *this;
    }

    RationalExpr operator-() const
    {
        RationalExpr r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) { return combine(a, b, false); }
    friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return combine(a, b, true); }
    RationalExpr& operator+=(const RationalExpr& b) { return *this = combine(*this, b, false); }
    RationalExpr& operator-=(const RationalExpr& b) { return *this = combine(*this, b, true); }

    friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b)
    {
        RationalExpr r(a.num_ * b.num_);
        r.den_ = a.den_;
        for (const auto& [f, k] : b.den_)
            r.den_[f] += k;
        if (r.num_.is_zero())
            r.den_.clear();
        return r;
    }
    RationalExpr& operator*=(const RationalExpr& b) { return *this = *this * b; }

    friend RationalExpr operator*(RationalExpr a, const Rational& s)
    {
        a.num_ *= s;
        if (s == 0)
            a.den_.clear();
        return a;
    }
    friend RationalExpr operator*(const Rational& s, RationalExpr a) { return std::move(a) * s; }

    friend RationalExpr operator/(RationalExpr a, const Rational& s)
    {
        if (s == 0)
            throw Error("division of a rational expression by zero");
        a.num_ *= Rational(1) / s;
        return a;
    }
    friend RationalExpr operator/(RationalExpr a, const LinearForm& f) { return a.divide_in_place(f); }
    friend RationalExpr operator*(RationalExpr a, const LinearForm& f) { return a.multiply_in_place(f); }

    /// Equality of the represented field elements, tested by cross-multiplication.
    friend bool operator==(const RationalExpr& a, const RationalExpr& b)
    {
        if (a.nvars() != b.nvars())
            return false;
        if (a.den_ == b.den_)
            return a.num_ == b.num_;
        return a.num_ * b.denominator_polynomial() == b.num_ * a.denominator_polynomial();
    }

    /// Value at a point where no denominator factor vanishes.
    Rational evaluate(const RationalVector& point) const
    {
        Rational d = 1;
        for (const auto& [f, k] : den_) {
            Rational v = f.pair(point);
            if (v == 0)
                throw Error("evaluating a rational expression on its polar locus");
            for (int i = 0; i < k; ++i)
                d *= v;
        }
        return num_.evaluate(point) / d;
    }

    /// "num" for polynomials, otherwise "(num)/((f1)^k*(f2))".
    std::string to_string(const std::string& prefix = "x") const
    {
        std::string n = num_.to_string(prefix);
        if (den_.empty())
            return n;
        std::string d;
        for (const auto& [f, k] : den_) {
            if (!d.empty())
                d += "*";
            d += "(" + Polynomial::from_linear(f).to_string(prefix) + ")";
            if (k > 1)
                d += "^" + std::to_string(k);
        }
        return "(" + n + ")/(" + d + ")";
    }

private:
    static RationalExpr combine(const RationalExpr& a, const RationalExpr& b, bool subtract)
    {
        if (a.nvars() != b.nvars())
            throw DimensionMismatch("rational expressions in different numbers of variables");
        if (b.num_.is_zero())
            return a;
        if (a.num_.is_zero())
            return subtract ? -b : b;
        Denominator lcm = a.den_;
        for (const auto& [f, k] : b.den_) {
            auto& slot = lcm[f];
            slot = std::max(slot, k);
        }
        auto lift = [&](const RationalExpr& x) {
            Polynomial p = x.num_;
            for (const auto& [f, k] : lcm) {
                auto it = x.den_.find(f);
                int have = it == x.den_.end() ? 0 : it->second;
                if (k > have)
                    p *= Polynomial::from_linear(f).pow(static_cast<unsigned>(k - have));
            }
            return p;
        };
        RationalExpr r(subtract ? lift(a) - lift(b) : lift(a) + lift(b));
        if (!r.num_.is_zero())
            r.den_ = std::move(lcm);
        return r;
    }

    Polynomial num_;
    Denominator den_;
};

} // namespace gkm
