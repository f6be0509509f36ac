#pragma once

#include "gkmthom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

/// A vector xi pairing nonzero with every weight, with the orientation it induces,
/// indices sigma_p and the longest-path Morse function phi.
///
/// phi(p) = L(p) + rank(p)/(|V|+1), L(p) the length of the longest ascending path
/// ending at p and rank(p) the vertex index. Holds a pointer to the graph, which must
/// outlive it.
class Polarization {
public:
    const GkmGraph& graph() const { return *graph_; }
    const RationalVector& xi() const { return xi_; }

    /// alpha_e(xi)
    const Rational& pairing(std::size_t e) const { return pairing_.at(e); }
    bool ascending(std::size_t e) const { return pairing_.at(e) > 0; }

    int sigma(std::size_t v) const { return sigma_.at(v); }
    const std::vector<int>& sigmas() const { return sigma_; }
    int level(std::size_t v) const { return level_.at(v); }
    const Rational& phi(std::size_t v) const { return phi_.at(v); }
    bool self_indexing() const { return level_ == sigma_; }

    /// Vertices by increasing phi.
    const std::vector<std::size_t>& order() const { return order_; }

    /// Position of a vertex in order().
    std::size_t position(std::size_t v) const { return position_.at(v); }

    const std::vector<std::size_t>& descending(std::size_t v) const { return down_.at(v); }
    const std::vector<std::size_t>& ascending_edges(std::size_t v) const { return up_.at(v); }

    /// nu_p^+ : product of the descending weights at p.
    Polynomial nu_plus(std::size_t v) const { return graph_->weight_product(down_.at(v)); }
    /// nu_p^- : product of the ascending weights at p.
    Polynomial nu_minus(std::size_t v) const { return graph_->weight_product(up_.at(v)); }

    std::vector<std::size_t> index_zero_vertices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < sigma_.size(); ++v)
            if (sigma_[v] == 0)
                out.push_back(v);
        return out;
    }

    /// The polarization by -xi.
    Polarization reversed() const;

    friend Polarization orient(const GkmGraph& g, const RationalVector& xi);

private:
    const GkmGraph* graph_ = nullptr;
    RationalVector xi_;
    std::vector<Rational> pairing_;
    std::vector<int> sigma_;
    std::vector<int> level_;
    std::vector<Rational> phi_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> position_;
    std::vector<std::vector<std::size_t>> down_;
    std::vector<std::vector<std::size_t>> up_;
};

/// Orients g by xi. Throws if some weight vanishes on xi or the ascending edges
/// contain a directed cycle.
inline Polarization orient(const GkmGraph& g, const RationalVector& xi)
{
    if (xi.size() != g.dimension())
        throw DimensionMismatch("xi has length " + std::to_string(xi.size()) + ", graph dimension is " +
                                std::to_string(g.dimension()));
    Polarization p;
    p.graph_ = &g;
    p.xi_ = xi;
    const std::size_t nv = g.vertex_count();
    p.pairing_.resize(g.edge_count());
    p.down_.assign(nv, {});
    p.up_.assign(nv, {});
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        p.pairing_[e] = g.weight(e).pair(xi);
        if (p.pairing_[e] == 0)
            throw Error("not a polarization: weight of " + g.edge_name(e) + " vanishes on xi");
        (p.pairing_[e] > 0 ? p.up_ : p.down_)[g.edge(e).from].push_back(e);
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if ((p.pairing_[e] > 0) == (p.pairing_[g.reverse(e)] > 0))
            throw Error("not a polarization: " + g.edge_name(e) + " and its reversal have the same orientation");

    p.sigma_.resize(nv);
    for (std::size_t v = 0; v < nv; ++v)
        p.sigma_[v] = static_cast<int>(p.down_[v].size());

    // Kahn's algorithm on the ascending DAG; longest path levels along the way
    std::vector<int> indeg(nv, 0);
    for (std::size_t v = 0; v < nv; ++v)
        for (auto e : p.up_[v])
            ++indeg[g.edge(e).to];
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < nv; ++v)
        if (indeg[v] == 0)
            queue.push_back(v);
    p.level_.assign(nv, 0);
    std::size_t seen = 0;
    while (seen < queue.size()) {
        std::size_t v = queue[seen++];
        for (auto e : p.up_[v]) {
            std::size_t w = g.edge(e).to;
            p.level_[w] = std::max(p.level_[w], p.level_[v] + 1);
            if (--indeg[w] == 0)
                queue.push_back(w);
        }
    }
    if (seen != nv) {
        std::string cyc;
        for (std::size_t v = 0; v < nv; ++v)
            if (indeg[v] > 0)
                cyc += (cyc.empty() ? "" : ", ") + g.name(v);
        throw Error("ascending edges form a directed cycle through {" + cyc + "}; no Morse function exists");
    }

    p.phi_.resize(nv);
    for (std::size_t v = 0; v < nv; ++v)
        p.phi_[v] = Rational(p.level_[v]) + Rational(static_cast<long>(v), static_cast<long>(nv + 1));
    p.order_.resize(nv);
    std::iota(p.order_.begin(), p.order_.end(), std::size_t{0});
    std::sort(p.order_.begin(), p.order_.end(), [&](auto a, auto b) { return p.phi_[a] < p.phi_[b]; });
    p.position_.resize(nv);
    for (std::size_t i = 0; i < nv; ++i)
        p.position_[p.order_[i]] = i;
    return p;
}

inline Polarization Polarization::reversed() const
{
    RationalVector neg = xi_;
    for (auto& c : neg)
        c = -c;
    return orient(*graph_, neg);
}

/// Betti numbers b_0..b_d: b_k = number of vertices of index k.
inline std::vector<int> betti(const Polarization& pol)
{
    const auto& g = pol.graph();
    std::size_t d = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        d = std::max(d, g.degree(v));
    std::vector<int> b(d + 1, 0);
    for (auto s : pol.sigmas())
        ++b[static_cast<std::size_t>(s)];
    return b;
}

inline std::vector<int> betti(const GkmGraph& g, const RationalVector& xi) { return betti(orient(g, xi)); }

/// Connected components of the underlying graph.
inline std::vector<std::size_t> components(const GkmGraph& g)
{
    std::vector<std::size_t> comp(g.vertex_count(), npos);
    std::size_t next = 0;
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != npos)
            continue;
        std::vector<std::size_t> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (auto e : g.out_edges(v)) {
                std::size_t w = g.edge(e).to;
                if (comp[w] == npos) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

/// orient() plus the requirement of one index-0 vertex per connected component.
inline Polarization longest_path_morse(const GkmGraph& g, const RationalVector& xi)
{
    Polarization p = orient(g, xi);
    auto comp = components(g);
    std::vector<int> minima(g.vertex_count(), 0);
    for (auto v : p.index_zero_vertices())
        if (++minima[comp[v]] > 1)
            throw Error("more than one vertex of index 0 in the component of '" + g.name(v) + "'");
    return p;
}

/// Genericity at p: (1/a1(xi)) rho_{e2}(a1) != (1/a3(xi)) rho_{e4}(a3) for all
/// quadruples of edges at p except the forced coincidences.
inline bool check_generic(const GkmGraph& g, const RationalVector& xi, std::size_t p)
{
    const auto& out = g.out_edges(p);
    const std::size_t d = out.size();
    std::vector<std::vector<LinearForm>> val(d, std::vector<LinearForm>(d));
    for (std::size_t a = 0; a < d; ++a) {
        Rational w = g.weight(out[a]).pair(xi);
        if (w == 0)
            return false;
        for (std::size_t b = 0; b < d; ++b)
            val[a][b] = rho(g.weight(out[b]), xi, g.weight(out[a])) / w;
    }
    for (std::size_t e1 = 0; e1 < d; ++e1)
        for (std::size_t e2 = 0; e2 < d; ++e2)
            for (std::size_t e3 = 0; e3 < d; ++e3)
                for (std::size_t e4 = 0; e4 < d; ++e4) {
                    if ((e1 == e2 && e3 == e4) || (e1 == e3 && e2 == e4))
                        continue;
                    if (val[e1][e2] == val[e3][e4])
                        return false;
                }
    return true;
}

inline bool check_generic(const GkmGraph& g, const RationalVector& xi)
{
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!check_generic(g, xi, v))
            return false;
    return true;
}

/// First integer vector, by increasing max-norm and lexicographically within a norm,
/// that polarizes g without ascending cycles (and is generic everywhere when asked).
inline std::optional<RationalVector> find_polarization(const GkmGraph& g, bool require_generic = true,
                                                       int max_norm = 6)
{
    const std::size_t n = g.dimension();
    if (n == 0)
        return std::nullopt;
    for (int norm = 1; norm <= max_norm; ++norm) {
        std::vector<int> v(n, -norm);
        for (;;) {
            bool on_shell = std::any_of(v.begin(), v.end(), [&](int c) { return c == norm || c == -norm; });
            if (on_shell) {
                RationalVector xi(v.begin(), v.end());
                bool ok = true;
                for (std::size_t e = 0; e < g.edge_count() && ok; ++e)
                    ok = g.weight(e).pair(xi) != 0;
                if (ok) {
                    try {
                        orient(g, xi);
                    } catch (const Error&) {
                        ok = false;
                    }
                }
                if (ok && (!require_generic || check_generic(g, xi)))
                    return xi;
            }
            std::size_t i = n;
            while (i > 0 && v[i - 1] == norm)
                v[--i] = -norm;
            if (i == 0)
                break;
            ++v[i - 1];
        }
    }
    return std::nullopt;
}

/// Number of ascending paths from p to q, counting the empty path when p == q.
inline std::size_t count_ascending_paths(const Polarization& pol, std::size_t p, std::size_t q)
{
    const auto& order = pol.order();
    std::vector<std::size_t> count(pol.graph().vertex_count(), 0);
    count[p] = 1;
    for (std::size_t i = pol.position(p); i < order.size(); ++i) {
        std::size_t v = order[i];
        if (count[v] == 0)
            continue;
        for (auto e : pol.ascending_edges(v))
            count[pol.graph().edge(e).to] += count[v];
    }
    return count[q];
}

} // namespace gkm
