#pragma once

#include "gkmthom/polarization.hpp"
#include "gkmthom/rational_expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkm {

/// A map V -> S(g*), optionally tagged with a degree.
struct CohomologyClass {
    const GkmGraph* graph = nullptr;
    std::vector<Polynomial> values;
    std::optional<int> degree;

    CohomologyClass() = default;
    CohomologyClass(const GkmGraph& g, std::vector<Polynomial> v, std::optional<int> deg = std::nullopt)
        : graph(&g), values(std::move(v)), degree(deg)
    {
        if (values.size() != g.vertex_count())
            throw Error("class has " + std::to_string(values.size()) + " values for " +
                        std::to_string(g.vertex_count()) + " vertices");
        for (const auto& p : values)
            if (p.nvars() != g.dimension())
                throw DimensionMismatch("class value in the wrong number of variables");
        if (degree)
            for (std::size_t v = 0; v < values.size(); ++v)
                if (!values[v].is_homogeneous_of(*degree))
                    throw Error("value at '" + g.name(v) + "' is not homogeneous of degree " + std::to_string(*degree));
    }

    static CohomologyClass constant(const GkmGraph& g, const Rational& c)
    {
        return CohomologyClass(g, std::vector<Polynomial>(g.vertex_count(), Polynomial::constant(g.dimension(), c)),
                               c == 0 ? std::nullopt : std::optional<int>(0));
    }

    const Polynomial& operator[](std::size_t v) const { return values.at(v); }

    /// Vertices with a nonzero value.
    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> s;
        for (std::size_t v = 0; v < values.size(); ++v)
            if (!values[v].is_zero())
                s.push_back(v);
        return s;
    }

    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) { return a.values == b.values; }
};

struct CocycleCheck {
    bool ok = true;
    std::size_t edge = npos;
    Polynomial remainder;
    explicit operator bool() const { return ok; }
};

/// alpha_e | f(i(e)) - f(t(e)) on every edge; the first failing edge is returned with
/// the division remainder.
inline CocycleCheck is_cocycle(const GkmGraph& g, const std::vector<Polynomial>& f)
{
    if (f.size() != g.vertex_count())
        throw Error("is_cocycle: one value per vertex required");
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (ed.reverse < e)
            continue;
        auto d = (f[ed.from] - f[ed.to]).divide_linear(ed.weight);
        if (!d.remainder.is_zero())
            return {false, e, d.remainder};
    }
    return {};
}

inline CocycleCheck is_cocycle(const CohomologyClass& f) { return is_cocycle(*f.graph, f.values); }

/// Sum over p of f(p) / prod_{i(e)=p} alpha_e, reduced; the localization sum before reduction.
inline RationalExpr localization_sum(const GkmGraph& g, const std::vector<Polynomial>& f)
{
    RationalExpr s(g.dimension());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (f.at(v).is_zero())
            continue;
        std::vector<LinearForm> den;
        for (auto e : g.out_edges(v))
            den.push_back(g.weight(e));
        s += RationalExpr::quotient(f[v], den);
    }
    return s.reduce();
}

/// Localization integral. Throws if the sum is not a polynomial.
inline Polynomial integrate(const GkmGraph& g, const std::vector<Polynomial>& f)
{
    auto s = localization_sum(g, f);
    if (!s.is_polynomial())
        throw Error("integral does not reduce to a polynomial (input is not a cocycle): " + s.to_string());
    return s.numerator();
}

inline Polynomial integrate(const CohomologyClass& f) { return integrate(*f.graph, f.values); }

inline CohomologyClass product(const CohomologyClass& a, const CohomologyClass& b)
{
    if (a.graph != b.graph)
        throw Error("product of classes on different graphs");
    std::vector<Polynomial> v;
    v.reserve(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i)
        v.push_back(a.values[i] * b.values[i]);
    std::optional<int> deg;
    if (a.degree && b.degree)
        deg = *a.degree + *b.degree;
    bool zero = true;
    for (const auto& p : v)
        zero = zero && p.is_zero();
    return CohomologyClass(*a.graph, std::move(v), zero ? std::optional<int>() : deg);
}

/// Thom class of the edge e = p -> q: the other weights at p, resp. at q, and zero
/// elsewhere.
inline CohomologyClass edge_class(const GkmGraph& g, std::size_t e)
{
    const auto& ed = g.edge(e);
    std::vector<Polynomial> v(g.vertex_count(), Polynomial(g.dimension()));
    std::vector<std::size_t> at_p, at_q;
    for (auto x : g.out_edges(ed.from))
        if (x != e)
            at_p.push_back(x);
    for (auto x : g.out_edges(ed.to))
        if (x != ed.reverse)
            at_q.push_back(x);
    v[ed.from] = g.weight_product(at_p);
    v[ed.to] = g.weight_product(at_q);
    return CohomologyClass(g, std::move(v), static_cast<int>(at_p.size()));
}

/// Values of a class on the cut edges of a level c.
struct CrossSectionClass {
    Rational level;
    std::vector<std::size_t> edges;
    std::vector<Polynomial> values;

    std::optional<std::size_t> index_of(std::size_t e) const
    {
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i] == e)
                return i;
        return std::nullopt;
    }
};

/// Ascending edges e with phi(i(e)) < c < phi(t(e)), by edge id. Throws if c is critical.
inline std::vector<std::size_t> cut_edges(const Polarization& pol, const Rational& c)
{
    const auto& g = pol.graph();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (pol.phi(v) == c)
            throw Error("level " + to_string(c) + " is the critical value of '" + g.name(v) + "'");
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (pol.ascending(e) && pol.phi(g.edge(e).from) < c && c < pol.phi(g.edge(e).to))
            out.push_back(e);
    return out;
}

/// K_c(f)(v_e) = rho_e f(i(e)) = rho_e f(t(e)); both sides are computed and must agree.
inline CrossSectionClass kirwan(const Polarization& pol, const CohomologyClass& f, const Rational& c)
{
    const auto& g = pol.graph();
    CrossSectionClass out{c, cut_edges(pol, c), {}};
    for (auto e : out.edges) {
        const auto& ed = g.edge(e);
        Polynomial a = rho(ed.weight, pol.xi(), f[ed.from]);
        Polynomial b = rho(ed.weight, pol.xi(), f[ed.to]);
        if (!(a == b))
            throw Error("kirwan: rho_e disagrees on the endpoints of " + g.edge_name(e) + " (not a cocycle)");
        out.values.push_back(std::move(a));
    }
    return out;
}

/// rho_e of the product of the other weights at i(e), as linear factors.
inline std::vector<LinearForm> cross_section_euler_factors(const Polarization& pol, std::size_t e)
{
    const auto& g = pol.graph();
    std::vector<LinearForm> f;
    for (auto x : g.out_edges(g.edge(e).from))
        if (x != e)
            f.push_back(rho(g.weight(e), pol.xi(), g.weight(x)));
    return f;
}

/// Sum over cut edges of F(v_e) / K_c(tau_e)(v_e). Throws if it is not a polynomial.
inline Polynomial integrate_cross_section(const Polarization& pol, const CrossSectionClass& F)
{
    RationalExpr s(pol.graph().dimension());
    for (std::size_t i = 0; i < F.edges.size(); ++i)
        if (!F.values[i].is_zero())
            s += RationalExpr::quotient(F.values[i], cross_section_euler_factors(pol, F.edges[i]));
    s.reduce();
    if (!s.is_polynomial())
        throw Error("cross-section integral does not reduce to a polynomial: " + s.to_string());
    return s.numerator();
}

inline CrossSectionClass product(const CrossSectionClass& a, const CrossSectionClass& b)
{
    if (a.edges != b.edges)
        throw Error("product of cross-section classes at different levels");
    CrossSectionClass r{a.level, a.edges, {}};
    for (std::size_t i = 0; i < a.values.size(); ++i)
        r.values.push_back(a.values[i] * b.values[i]);
    return r;
}

} // namespace gkm
