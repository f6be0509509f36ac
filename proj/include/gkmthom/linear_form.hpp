#pragma once

#include "gkmthom/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace gkm {

/// An element of g*, stored by its coordinates in the basis x_1..x_n.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(std::size_t dimension) : coeffs_(dimension) {}
    explicit LinearForm(RationalVector coeffs) : coeffs_(std::move(coeffs)) {}
    LinearForm(std::initializer_list<int> coeffs)
    {
        coeffs_.reserve(coeffs.size());
        for (int c : coeffs)
            coeffs_.emplace_back(c);
    }

    /// The coordinate form x_i (0-based index).
    static LinearForm coordinate(std::size_t dimension, std::size_t i)
    {
        LinearForm f(dimension);
        f.coeffs_.at(i) = 1;
        return f;
    }

    std::size_t dimension() const { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    const RationalVector& coefficients() const { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    /// Index of the first nonzero coordinate, if any.
    std::optional<std::size_t> leading_index() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                return i;
        return std::nullopt;
    }

    /// Dual pairing with a vector of g.
    Rational pair(const RationalVector& xi) const
    {
        if (xi.size() != coeffs_.size())
            throw DimensionMismatch("pairing a form of dimension " + std::to_string(coeffs_.size()) +
                                    " with a vector of length " + std::to_string(xi.size()));
        Rational s = 0;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            s += coeffs_[i] * xi[i];
        return s;
    }

    /// Scalar c and form f with *this == c * f and the leading coordinate of f equal to 1.
    /// The zero form normalizes to (0, zero).
    std::pair<Rational, LinearForm> normalized() const
    {
        auto lead = leading_index();
        if (!lead)
            return {Rational(0), *this};
        Rational c = coeffs_[*lead];
        LinearForm f(dimension());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            f.coeffs_[i] = coeffs_[i] / c;
        return {c, std::move(f)};
    }

    /// True when the two forms are nonzero rational multiples of each other.
    bool parallel_to(const LinearForm& other) const
    {
        auto [ca, a] = normalized();
        auto [cb, b] = other.normalized();
        return ca != 0 && cb != 0 && a == b;
    }

    /// Returns c with *this == c * other, if such c exists and other is nonzero.
    std::optional<Rational> ratio_to(const LinearForm& other) const
    {
        auto lead = other.leading_index();
        if (!lead)
            return std::nullopt;
        Rational c = coeffs_[*lead] / other.coeffs_[*lead];
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != c * other.coeffs_[i])
                return std::nullopt;
        return c;
    }

    LinearForm operator-() const
    {
        LinearForm f(*this);
        for (auto& c : f.coeffs_)
            c = -c;
        return f;
    }

    LinearForm& operator+=(const LinearForm& o)
    {
        check_dim(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    LinearForm& operator-=(const LinearForm& o)
    {
        check_dim(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    LinearForm& operator*=(const Rational& s)
    {
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }

    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
    friend LinearForm operator*(const Rational& s, LinearForm a) { return a *= s; }
    friend LinearForm operator/(LinearForm a, const Rational& s)
    {
        if (s == 0)
            throw Error("division of a linear form by zero");
        for (auto& c : a.coeffs_)
            c /= s;
        return a;
    }

    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator<(const LinearForm& a, const LinearForm& b)
    {
        if (a.coeffs_.size() != b.coeffs_.size())
            return a.coeffs_.size() < b.coeffs_.size();
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] != b.coeffs_[i])
                return a.coeffs_[i] < b.coeffs_[i];
        }
        return false;
    }

private:
    void check_dim(const LinearForm& o) const
    {
        if (o.dimension() != dimension())
            throw DimensionMismatch("linear forms of different dimensions");
    }

    RationalVector coeffs_;
};

/// rho_e: the projection g* -> annihilator of xi along the weight alpha_e,
///   rho_e(a) = a - (a(xi) / alpha_e(xi)) alpha_e.
inline LinearForm rho(const LinearForm& edge_weight, const RationalVector& xi, const LinearForm& a)
{
    Rational w = edge_weight.pair(xi);
    if (w == 0)
        throw Error("rho: the edge weight vanishes on xi");
    return a - (a.pair(xi) / w) * edge_weight;
}

/// alpha / alpha(xi).
inline LinearForm hat(const LinearForm& alpha, const RationalVector& xi)
{
    Rational w = alpha.pair(xi);
    if (w == 0)
        throw Error("hat: the weight vanishes on xi");
    return alpha / w;
}

} // namespace gkm
