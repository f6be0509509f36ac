#pragma once

// Lagrange interpolation at linear-form nodes and the Vandermonde inversion toolkit.

#include "gkmthom/rational_expr.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace gkm {

using RationalMatrix = std::vector<std::vector<RationalExpr>>;

namespace detail {

inline std::size_t common_dimension(const std::vector<LinearForm>& nodes)
{
    if (nodes.empty())
        throw Error("interpolation needs at least one node");
    std::size_t n = nodes.front().dimension();
    for (const auto& x : nodes)
        if (x.dimension() != n)
            throw DimensionMismatch("interpolation nodes of different dimensions");
    return n;
}

inline void require_distinct(const std::vector<LinearForm>& nodes)
{
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j])
                throw Error("repeated interpolation node (#" + std::to_string(i + 1) + " and #" +
                            std::to_string(j + 1) + ")");
}

/// 1 / prod_{l != j} (x_j - x_l)
inline RationalExpr inverse_node_product(const std::vector<LinearForm>& nodes, std::size_t j)
{
    std::size_t n = nodes.front().dimension();
    RationalExpr r = RationalExpr::constant(n, 1);
    for (std::size_t l = 0; l < nodes.size(); ++l)
        if (l != j)
            r.divide_in_place(nodes[j] - nodes[l]);
    return r;
}

inline std::vector<LinearForm> without(const std::vector<LinearForm>& nodes, std::size_t j)
{
    std::vector<LinearForm> out;
    out.reserve(nodes.size() - 1);
    for (std::size_t l = 0; l < nodes.size(); ++l)
        if (l != j)
            out.push_back(nodes[l]);
    return out;
}

} // namespace detail

/// All elementary symmetric polynomials sigma_0..sigma_m of the given linear forms.
inline std::vector<Polynomial> elementary_symmetric_all(std::size_t nvars, const std::vector<LinearForm>& nodes)
{
    std::vector<Polynomial> e(nodes.size() + 1, Polynomial(nvars));
    e[0] = Polynomial::constant(nvars, 1);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        Polynomial x = Polynomial::from_linear(nodes[k]);
        for (std::size_t r = k + 1; r >= 1; --r)
            e[r] += e[r - 1] * x;
    }
    return e;
}

/// r-th elementary symmetric polynomial in the nodes; 0 <= r <= #nodes.
inline Polynomial elementary_symmetric(const std::vector<LinearForm>& nodes, int r)
{
    std::size_t n = detail::common_dimension(nodes);
    if (r < 0 || static_cast<std::size_t>(r) > nodes.size())
        throw Error("elementary_symmetric: r = " + std::to_string(r) + " out of range 0.." +
                    std::to_string(nodes.size()));
    return elementary_symmetric_all(n, nodes)[static_cast<std::size_t>(r)];
}

/// Inverse B of the Vandermonde matrix a_ij = x_i^{j-1}, by the formula
///   b_ij = (-1)^{n-i} sigma^j_{n-i} / prod_{l != j}(x_j - x_l),
/// sigma^j being elementary symmetric in the nodes other than x_j.
inline RationalMatrix vandermonde_inverse_by_omitted(const std::vector<LinearForm>& nodes)
{
    std::size_t dim = detail::common_dimension(nodes);
    detail::require_distinct(nodes);
    const std::size_t n = nodes.size();
    RationalMatrix b(n, std::vector<RationalExpr>(n, RationalExpr(dim)));
    for (std::size_t j = 0; j < n; ++j) {
        auto sigma_j = elementary_symmetric_all(dim, detail::without(nodes, j));
        RationalExpr inv = detail::inverse_node_product(nodes, j);
        for (std::size_t i = 1; i <= n; ++i) {
            const std::size_t r = n - i;
            Polynomial s = sigma_j[r];
            if (r % 2 == 1)
                s = -s;
            b[i - 1][j] = (RationalExpr(s) * inv).reduce();
        }
    }
    return b;
}

/// The same inverse written through the elementary symmetric functions of all nodes:
///   b_ij = sum_{r=0}^{n-i} (-1)^{n-i-r} sigma_{n-i-r} x_j^r / prod_{l != j}(x_j - x_l).
inline RationalMatrix vandermonde_inverse_by_full(const std::vector<LinearForm>& nodes)
{
    std::size_t dim = detail::common_dimension(nodes);
    detail::require_distinct(nodes);
    const std::size_t n = nodes.size();
    auto sigma = elementary_symmetric_all(dim, nodes);
    RationalMatrix b(n, std::vector<RationalExpr>(n, RationalExpr(dim)));
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial xj = Polynomial::from_linear(nodes[j]);
        RationalExpr inv = detail::inverse_node_product(nodes, j);
        for (std::size_t i = 1; i <= n; ++i) {
            Polynomial s(dim);
            Polynomial xpow = Polynomial::constant(dim, 1);
            for (std::size_t r = 0; r <= n - i; ++r) {
                Polynomial term = sigma[n - i - r] * xpow;
                if ((n - i - r) % 2 == 1)
                    s -= term;
                else
                    s += term;
                xpow *= xj;
            }
            b[i - 1][j] = (RationalExpr(s) * inv).reduce();
        }
    }
    return b;
}

/// Vandermonde inverse; both closed forms are evaluated and must agree entrywise.
inline RationalMatrix vandermonde_inverse(const std::vector<LinearForm>& nodes)
{
    auto b = vandermonde_inverse_by_omitted(nodes);
    auto b_alt = vandermonde_inverse_by_full(nodes);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!(b[i][j] == b_alt[i][j]))
                throw Error("vandermonde_inverse: closed forms disagree at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
    return b;
}

/// The Vandermonde matrix a_ij = x_i^{j-1}.
inline RationalMatrix vandermonde(const std::vector<LinearForm>& nodes)
{
    std::size_t dim = detail::common_dimension(nodes);
    const std::size_t n = nodes.size();
    RationalMatrix a(n, std::vector<RationalExpr>(n, RationalExpr(dim)));
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial xpow = Polynomial::constant(dim, 1);
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = RationalExpr(xpow);
            xpow *= Polynomial::from_linear(nodes[i]);
        }
    }
    return a;
}

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.empty())
        return {};
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = b.front().size();
    const std::size_t dim = a.front().front().nvars();
    RationalMatrix c(rows, std::vector<RationalExpr>(cols, RationalExpr(dim)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            RationalExpr s(dim);
            for (std::size_t k = 0; k < inner; ++k)
                s += a[i][k] * b[k][j];
            c[i][j] = s.reduce();
        }
    return c;
}

/// Coefficients g_1..g_n of the unique p(x) = sum g_i x^{i-1} of degree < n with
/// p(x_i) = f_i. Each g_i is reduced; it is a polynomial whenever x_i - x_j divides
/// f_i - f_j for all pairs.
inline std::vector<RationalExpr> lagrange_interpolate(const std::vector<std::pair<LinearForm, Polynomial>>& points)
{
    std::vector<LinearForm> nodes;
    nodes.reserve(points.size());
    for (const auto& pt : points)
        nodes.push_back(pt.first);
    std::size_t dim = detail::common_dimension(nodes);
    detail::require_distinct(nodes);
    for (const auto& pt : points)
        if (pt.second.nvars() != dim)
            throw DimensionMismatch("interpolation value has wrong number of variables");
    const std::size_t n = nodes.size();
    std::vector<RationalExpr> g(n, RationalExpr(dim));
    for (std::size_t j = 0; j < n; ++j) {
        auto sigma_j = elementary_symmetric_all(dim, detail::without(nodes, j));
        RationalExpr weight = detail::inverse_node_product(nodes, j) * RationalExpr(points[j].second);
        for (std::size_t i = 1; i <= n; ++i) {
            const std::size_t r = n - i;
            Polynomial s = sigma_j[r];
            if (r % 2 == 1)
                s = -s;
            g[i - 1] += RationalExpr(s) * weight;
        }
    }
    for (auto& gi : g)
        gi.reduce();
    return g;
}

/// Evaluates p(x) = sum g_i x^{i-1} at a linear form x.
inline RationalExpr interpolant_at(const std::vector<RationalExpr>& g, const LinearForm& x)
{
    RationalExpr s(x.dimension());
    Polynomial xpow = Polynomial::constant(x.dimension(), 1);
    for (const auto& gi : g) {
        s += gi * RationalExpr(xpow);
        xpow *= Polynomial::from_linear(x);
    }
    return s.reduce();
}

} // namespace gkm
