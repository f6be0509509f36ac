#pragma once

#include "gkmthom/cohomology.hpp"
#include "gkmthom/thom.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

struct CrossSection {
    Rational level;
    std::vector<std::size_t> edges;

    std::optional<std::size_t> index_of(std::size_t e) const
    {
        auto it = std::find(edges.begin(), edges.end(), e);
        if (it == edges.end())
            return std::nullopt;
        return static_cast<std::size_t>(it - edges.begin());
    }
};

inline CrossSection cross_section(const Polarization& pol, const Rational& c) { return {c, cut_edges(pol, c)}; }

/// Regular values: one below the minimum, midpoints between consecutive critical
/// values, one above the maximum.
inline std::vector<Rational> regular_values(const Polarization& pol)
{
    std::vector<Rational> crit;
    for (auto v : pol.order())
        crit.push_back(pol.phi(v));
    std::vector<Rational> out;
    if (crit.empty())
        return out;
    out.push_back(crit.front() - 1);
    for (std::size_t i = 1; i < crit.size(); ++i)
        out.push_back((crit[i - 1] + crit[i]) / 2);
    out.push_back(crit.back() + 1);
    return out;
}

/// Matrix T(v, w), v in the source section (rows), w in the target section (columns).
struct TransferMatrix {
    CrossSection source;
    CrossSection target;
    std::vector<std::vector<RationalExpr>> entries;
    /// The genericity condition held at every crossed vertex.
    bool generic = true;

    const RationalExpr& operator()(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }

    /// Sum of column j over the source.
    RationalExpr column_sum(std::size_t j, std::size_t nvars) const
    {
        RationalExpr s(nvars);
        for (const auto& row : entries)
            s += row.at(j);
        return s.reduce();
    }

    /// Columns whose sum is not exactly 1.
    std::vector<std::size_t> markov_defects(std::size_t nvars) const
    {
        std::vector<std::size_t> bad;
        for (std::size_t j = 0; j < target.edges.size(); ++j)
            if (!(column_sum(j, nvars) == RationalExpr::constant(nvars, 1)))
                bad.push_back(j);
        return bad;
    }
};

inline TransferMatrix identity_transfer(const Polarization& pol, const CrossSection& s, const CrossSection& t)
{
    const std::size_t n = pol.graph().dimension();
    TransferMatrix m{s, t, {}, true};
    m.entries.assign(s.edges.size(), std::vector<RationalExpr>(t.edges.size(), RationalExpr(n)));
    for (std::size_t i = 0; i < s.edges.size(); ++i)
        if (auto j = t.index_of(s.edges[i]))
            m.entries[i][*j] = RationalExpr::constant(n, 1);
    return m;
}

/// T_{c,c'} across the single critical vertex p with c < phi(p) < c': the identity on
/// persisting edges and, for j descending and a ascending at p,
///   T(j, a) = rho_a(prod_{k!=j} alpha_k) / rho_j(prod_{k!=j} alpha_k).
inline TransferMatrix single_step_transfer(const Polarization& pol, const Rational& c, const Rational& c_prime)
{
    const auto& g = pol.graph();
    if (!(c < c_prime))
        throw Error("single_step_transfer needs c < c'");
    std::vector<std::size_t> crossed;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (c < pol.phi(v) && pol.phi(v) < c_prime)
            crossed.push_back(v);
    if (crossed.size() != 1)
        throw Error("single_step_transfer: " + std::to_string(crossed.size()) +
                    " critical values between the levels, exactly one required");
    const std::size_t p = crossed.front();
    TransferMatrix m = identity_transfer(pol, cross_section(pol, c), cross_section(pol, c_prime));
    m.generic = check_generic(g, pol.xi(), p);
    const auto& down = pol.descending(p);
    for (std::size_t j = 0; j < down.size(); ++j) {
        std::size_t in = g.reverse(down[j]);
        auto row = m.source.index_of(in);
        if (!row)
            throw Error("internal consistency failure: edge " + g.edge_name(in) + " missing from the cut");
        std::vector<std::size_t> others;
        for (std::size_t k = 0; k < down.size(); ++k)
            if (k != j)
                others.push_back(down[k]);
        for (auto a : pol.ascending_edges(p)) {
            auto col = m.target.index_of(a);
            m.entries[*row][*col] = RationalExpr::quotient(
                Polynomial::product_of(g.dimension(), detail::rho_weights(pol, a, others)),
                detail::rho_weights(pol, down[j], others));
        }
    }
    return m;
}

inline TransferMatrix multiply(const TransferMatrix& a, const TransferMatrix& b, std::size_t nvars)
{
    if (a.target.edges != b.source.edges)
        throw Error("composing transfer matrices with mismatched sections");
    TransferMatrix m{a.source, b.target, {}, a.generic && b.generic};
    m.entries.assign(a.source.edges.size(), std::vector<RationalExpr>(b.target.edges.size(), RationalExpr(nvars)));
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        for (std::size_t j = 0; j < m.target.edges.size(); ++j) {
            RationalExpr s(nvars);
            for (std::size_t k = 0; k < b.entries.size(); ++k)
                if (!a.entries[i][k].is_zero() && !b.entries[k][j].is_zero())
                    s += a.entries[i][k] * b.entries[k][j];
            m.entries[i][j] = s.reduce();
        }
    return m;
}

/// Critical values strictly between c and c', increasing.
inline std::vector<Rational> critical_values_between(const Polarization& pol, const Rational& c, const Rational& c_prime)
{
    std::vector<Rational> out;
    for (auto v : pol.order())
        if (c < pol.phi(v) && pol.phi(v) < c_prime)
            out.push_back(pol.phi(v));
    return out;
}

/// T_{c,c'} as the product of single steps, one per crossed vertex.
inline TransferMatrix compose_transfer_steps(const Polarization& pol, const Rational& c, const Rational& c_prime)
{
    if (c_prime < c)
        throw Error("compose_transfer needs c <= c'");
    const std::size_t n = pol.graph().dimension();
    auto crit = critical_values_between(pol, c, c_prime);
    if (crit.empty())
        return identity_transfer(pol, cross_section(pol, c), cross_section(pol, c_prime));
    std::vector<Rational> cuts{c};
    for (std::size_t i = 1; i < crit.size(); ++i)
        cuts.push_back((crit[i - 1] + crit[i]) / 2);
    cuts.push_back(c_prime);
    TransferMatrix m = single_step_transfer(pol, cuts[0], cuts[1]);
    for (std::size_t i = 1; i + 1 < cuts.size(); ++i)
        m = multiply(m, single_step_transfer(pol, cuts[i], cuts[i + 1]), n);
    return m;
}

/// T_{c,c'}(v, w) = sum over ascending edge paths gamma from the cut edge v to the cut
/// edge w of Q(gamma).
inline TransferMatrix compose_transfer_paths(const Polarization& pol, const Rational& c, const Rational& c_prime)
{
    const auto& g = pol.graph();
    const std::size_t n = g.dimension();
    TransferMatrix m = identity_transfer(pol, cross_section(pol, c), cross_section(pol, c_prime));
    m.generic = true;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (c < pol.phi(v) && pol.phi(v) < c_prime)
            m.generic = m.generic && check_generic(g, pol.xi(), v);
    for (std::size_t i = 0; i < m.source.edges.size(); ++i) {
        std::size_t start = m.source.edges[i];
        if (m.target.index_of(start))
            continue;
        std::vector<RationalExpr> acc(m.target.edges.size(), RationalExpr(n));
        auto dfs = [&](auto&& self, std::size_t e, const RationalExpr& weight) -> void {
            std::size_t v = g.edge(e).to;
            for (auto x : pol.ascending_edges(v)) {
                RationalExpr w = (weight * transfer_weight(pol, e, x)).reduce();
                if (auto j = m.target.index_of(x))
                    acc[*j] += w;
                else
                    self(self, x, w);
            }
        };
        dfs(dfs, start, RationalExpr::constant(n, 1));
        for (std::size_t j = 0; j < acc.size(); ++j)
            m.entries[i][j] = acc[j].reduce();
    }
    return m;
}

/// Both forms of T_{c,c'}; throws if they differ anywhere.
inline TransferMatrix compose_transfer(const Polarization& pol, const Rational& c, const Rational& c_prime)
{
    TransferMatrix a = compose_transfer_steps(pol, c, c_prime);
    TransferMatrix b = compose_transfer_paths(pol, c, c_prime);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        for (std::size_t j = 0; j < a.entries[i].size(); ++j)
            if (!(a.entries[i][j] == b.entries[i][j]))
                throw Error("internal consistency failure: transfer product and path sum differ at (" +
                            pol.graph().edge_name(a.source.edges[i]) + ", " +
                            pol.graph().edge_name(a.target.edges[j]) + ")");
    return a;
}

/// F'(w) = sum_v T(v, w) F(v). Every value must reduce to a polynomial.
inline CrossSectionClass transport_class(const Polarization& pol, const CrossSectionClass& F, const Rational& c_prime)
{
    const std::size_t n = pol.graph().dimension();
    TransferMatrix t = compose_transfer(pol, F.level, c_prime);
    if (t.source.edges != F.edges)
        throw Error("transport_class: class is not defined on the cut at its level");
    CrossSectionClass out{c_prime, t.target.edges, {}};
    for (std::size_t j = 0; j < t.target.edges.size(); ++j) {
        RationalExpr s(n);
        for (std::size_t i = 0; i < F.edges.size(); ++i)
            if (!F.values[i].is_zero() && !t.entries[i][j].is_zero())
                s += t.entries[i][j] * RationalExpr(F.values[i]);
        auto v = s.as_polynomial();
        if (!v)
            throw Error("transported value on " + pol.graph().edge_name(t.target.edges[j]) +
                        " is not a polynomial: " + s.reduced().to_string());
        out.values.push_back(std::move(*v));
    }
    return out;
}

/// The seed K_c(tau^+_{p0}) just above p0: rho_e(nu^+_{p0}) on the edges leaving p0,
/// zero on the other cut edges.
inline CrossSectionClass thom_seed(const Polarization& pol, std::size_t p0, const Rational& c)
{
    const auto& g = pol.graph();
    CrossSectionClass F{c, cut_edges(pol, c), {}};
    Polynomial nu = pol.nu_plus(p0);
    for (auto e : F.edges)
        F.values.push_back(g.edge(e).from == p0 ? rho(g.weight(e), pol.xi(), nu) : Polynomial(g.dimension()));
    return F;
}

} // namespace gkm
