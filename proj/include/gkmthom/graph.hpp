#pragma once

#include "gkmthom/linear_form.hpp"
#include "gkmthom/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gkm {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// An oriented edge. Every edge is stored together with its reversal.
struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    LinearForm weight;
    std::size_t reverse = npos;
};

/// A finite graph with an axial function and (optionally) a connection.
///
/// Vertices are addressed by index; names are unique, aliases are display labels.
/// The connection is stored per oriented edge e as theta(e)[k] = image of out(i(e))[k],
/// an edge id at t(e).
class GkmGraph {
public:
    GkmGraph() = default;
    GkmGraph(std::size_t dimension, std::vector<std::string> names)
        : dimension_(dimension), names_(std::move(names)), aliases_(names_.size()), out_(names_.size())
    {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw Error("empty vertex name");
            if (!index_.emplace(names_[i], i).second)
                throw Error("duplicate vertex name '" + names_[i] + "'");
        }
    }

    std::size_t dimension() const { return dimension_; }
    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::string& name(std::size_t v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }

    /// Display label: the alias when one is set, otherwise the name.
    const std::string& label(std::size_t v) const { return aliases_.at(v).empty() ? names_.at(v) : aliases_[v]; }
    const std::string& alias(std::size_t v) const { return aliases_.at(v); }

    void set_alias(std::size_t v, std::string alias)
    {
        if (!alias.empty()) {
            auto it = index_.find(alias);
            if (it != index_.end() && it->second != v)
                throw Error("alias '" + alias + "' clashes with another vertex");
            index_[alias] = v;
        }
        aliases_.at(v) = std::move(alias);
    }

    /// Vertex by name or alias.
    std::optional<std::size_t> find_vertex(const std::string& key) const
    {
        auto it = index_.find(key);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    std::size_t vertex(const std::string& key) const
    {
        auto v = find_vertex(key);
        if (!v)
            throw Error("unknown vertex '" + key + "'");
        return *v;
    }

    const Edge& edge(std::size_t e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }
    std::size_t degree(std::size_t v) const { return out_.at(v).size(); }
    std::size_t reverse(std::size_t e) const { return edges_.at(e).reverse; }
    const LinearForm& weight(std::size_t e) const { return edges_.at(e).weight; }

    /// Common valence, or nullopt if the vertex degrees differ.
    std::optional<std::size_t> valence() const
    {
        if (names_.empty())
            return 0;
        std::size_t d = out_[0].size();
        for (const auto& o : out_)
            if (o.size() != d)
                return std::nullopt;
        return d;
    }

    std::optional<std::size_t> find_edge(std::size_t from, std::size_t to) const
    {
        for (auto e : out_.at(from))
            if (edges_[e].to == to)
                return e;
        return std::nullopt;
    }

    /// "from->to" using vertex names.
    std::string edge_name(std::size_t e) const { return names_[edges_.at(e).from] + "->" + names_[edges_[e].to]; }
    std::string edge_label(std::size_t e) const { return label(edges_.at(e).from) + "->" + label(edges_[e].to); }

    /// Adds the edge from -> to with the given weight, and its reversal with the negated
    /// weight. Returns the id of from -> to.
    std::size_t add_edge(std::size_t from, std::size_t to, const LinearForm& weight)
    {
        return add_edge(from, to, weight, -weight);
    }

    std::size_t add_edge(std::size_t from, std::size_t to, const LinearForm& weight, const LinearForm& reverse_weight)
    {
        if (from >= names_.size() || to >= names_.size())
            throw Error("edge endpoint out of range");
        if (from == to)
            throw Error("self-loop at vertex '" + names_[from] + "'");
        if (weight.dimension() != dimension_ || reverse_weight.dimension() != dimension_)
            throw DimensionMismatch("edge weight of dimension " + std::to_string(weight.dimension()) +
                                    " in a graph of dimension " + std::to_string(dimension_));
        if (find_edge(from, to))
            throw Error("multiple edges between '" + names_[from] + "' and '" + names_[to] + "'");
        std::size_t e = edges_.size();
        edges_.push_back({from, to, weight, e + 1});
        edges_.push_back({to, from, reverse_weight, e});
        out_[from].push_back(e);
        out_[to].push_back(e + 1);
        theta_.clear();
        return e;
    }

    /// Overwrites the weight of one oriented edge, leaving its reversal untouched.
    void set_weight(std::size_t e, const LinearForm& w)
    {
        if (w.dimension() != dimension_)
            throw DimensionMismatch("edge weight of wrong dimension");
        edges_.at(e).weight = w;
    }

    bool has_connection() const { return !theta_.empty(); }

    /// Position of edge e within out(i(e)).
    std::size_t slot(std::size_t e) const
    {
        const auto& o = out_[edges_.at(e).from];
        return static_cast<std::size_t>(std::find(o.begin(), o.end(), e) - o.begin());
    }

    /// theta_e(e'), for e' an edge at i(e); npos when unset.
    std::size_t theta(std::size_t e, std::size_t e_prime) const
    {
        if (theta_.empty())
            throw Error("graph has no connection");
        if (edges_.at(e_prime).from != edges_.at(e).from)
            throw Error("theta: edge " + edge_name(e_prime) + " does not start at the source of " + edge_name(e));
        return theta_[e][slot(e_prime)];
    }

    /// Starts an empty connection (every entry unset).
    void clear_connection()
    {
        theta_.assign(edges_.size(), {});
        for (std::size_t e = 0; e < edges_.size(); ++e)
            theta_[e].assign(out_[edges_[e].from].size(), npos);
    }

    /// Sets theta_e(e') = e''.
    void set_theta(std::size_t e, std::size_t e_prime, std::size_t e_second)
    {
        if (theta_.empty())
            clear_connection();
        if (edges_.at(e_prime).from != edges_.at(e).from || edges_.at(e_second).from != edges_[e].to)
            throw Error("connection entry " + edge_name(e) + "|" + edge_name(e_prime) + " -> " +
                        edge_name(e_second) + " does not map E_i(e) to E_t(e)");
        theta_[e][slot(e_prime)] = e_second;
    }

    /// Fills theta on reversed edges by inversion and theta_e(e) = reverse(e), where unset.
    void complete_connection()
    {
        if (theta_.empty())
            clear_connection();
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            auto& row = theta_[e];
            std::size_t s = slot(e);
            if (row[s] == npos)
                row[s] = edges_[e].reverse;
            std::size_t r = edges_[e].reverse;
            for (std::size_t k = 0; k < row.size(); ++k) {
                std::size_t img = row[k];
                if (img == npos)
                    continue;
                auto& back = theta_[r][slot(img)];
                if (back == npos)
                    back = out_[edges_[e].from][k];
            }
        }
    }

    /// Product of the weights of the given edges.
    Polynomial weight_product(const std::vector<std::size_t>& edge_ids) const
    {
        Polynomial p = Polynomial::constant(dimension_, 1);
        for (auto e : edge_ids)
            p *= Polynomial::from_linear(edges_.at(e).weight);
        return p;
    }

    /// Product of all weights at v, the inverse of the localization factor at v.
    Polynomial euler(std::size_t v) const { return weight_product(out_.at(v)); }

private:
    std::size_t dimension_ = 0;
    std::vector<std::string> names_;
    std::vector<std::string> aliases_;
    std::map<std::string, std::size_t> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> theta_;
};

struct ValidationIssue {
    std::string kind;
    std::string where;
    std::string detail;
};

/// c_k in alpha_{theta_e(e_k)} = alpha_{e_k} + c_k alpha_e.
struct ConnectionConstant {
    std::size_t edge;
    std::size_t from_edge;
    std::size_t to_edge;
    Rational c;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    std::vector<ConnectionConstant> constants;

    bool ok() const { return issues.empty(); }

    bool has(const std::string& kind) const
    {
        return std::any_of(issues.begin(), issues.end(), [&](const auto& i) { return i.kind == kind; });
    }

    bool integral_constants() const
    {
        return std::all_of(constants.begin(), constants.end(), [](const auto& k) { return k.c.get_den() == 1; });
    }
};

/// Checks the GKM axioms and the connection; never throws on a malformed structure.
inline ValidationReport validate(const GkmGraph& g)
{
    ValidationReport r;
    auto issue = [&](std::string kind, std::string where, std::string detail) {
        r.issues.push_back({std::move(kind), std::move(where), std::move(detail)});
    };

    if (!g.valence()) {
        std::string degrees;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            degrees += (v ? ", " : "") + g.name(v) + ":" + std::to_string(g.degree(v));
        issue("valence", "graph", "vertex degrees differ (" + degrees + ")");
    }

    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (ed.weight.is_zero())
            issue("zero-weight", g.edge_name(e), "weight is zero");
        if (e < ed.reverse && !(g.weight(ed.reverse) == -ed.weight))
            issue("reversal", g.edge_name(e), "alpha of the reversed edge is not -alpha");
    }

    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& out = g.out_edges(v);
        for (std::size_t a = 0; a < out.size(); ++a)
            for (std::size_t b = a + 1; b < out.size(); ++b)
                if (g.weight(out[a]).parallel_to(g.weight(out[b])))
                    issue("gkm", g.name(v),
                          "weights of " + g.edge_name(out[a]) + " and " + g.edge_name(out[b]) +
                              " are linearly dependent");
    }

    if (!g.has_connection()) {
        if (g.edge_count() > 0)
            issue("connection", "graph", "no connection");
        return r;
    }

    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        const auto& src = g.out_edges(ed.from);
        std::vector<bool> hit(g.degree(ed.to), false);
        bool complete = true;
        for (auto ep : src) {
            std::size_t img = g.theta(e, ep);
            if (img == npos) {
                issue("connection", g.edge_name(e), "theta undefined on " + g.edge_name(ep));
                complete = false;
                continue;
            }
            std::size_t s = g.slot(img);
            if (hit[s])
                issue("connection", g.edge_name(e), "theta is not injective (" + g.edge_name(img) + " repeated)");
            hit[s] = true;
            if (ep == e && img != ed.reverse)
                issue("connection", g.edge_name(e), "theta_e(e) is not the reversed edge");
            LinearForm diff = g.weight(img) - g.weight(ep);
            if (diff.is_zero()) {
                r.constants.push_back({e, ep, img, Rational(0)});
            } else if (auto c = diff.ratio_to(ed.weight)) {
                r.constants.push_back({e, ep, img, *c});
            } else {
                issue("compatibility", g.edge_name(e),
                      "alpha(" + g.edge_name(img) + ") - alpha(" + g.edge_name(ep) + ") is not a multiple of alpha_e");
            }
        }
        if (!complete || g.degree(ed.from) != g.degree(ed.to))
            continue;
        for (auto ep : src) {
            std::size_t img = g.theta(e, ep);
            if (img != npos && g.theta(ed.reverse, img) != ep)
                issue("connection", g.edge_name(e), "theta of the reversed edge is not the inverse");
        }
    }
    return r;
}

namespace detail {

inline void enumerate_matchings(const std::vector<std::vector<std::size_t>>& candidates, std::size_t k,
                                std::vector<bool>& used, std::vector<std::size_t>& current,
                                std::vector<std::vector<std::size_t>>& out, std::size_t limit)
{
    if (out.size() >= limit)
        return;
    if (k == candidates.size()) {
        out.push_back(current);
        return;
    }
    for (auto c : candidates[k]) {
        if (used[c])
            continue;
        used[c] = true;
        current.push_back(c);
        enumerate_matchings(candidates, k + 1, used, current, out, limit);
        current.pop_back();
        used[c] = false;
    }
}

} // namespace detail

/// Derives a compatible connection from the weights alone. Among the compatible
/// bijections for each edge, the one with the most nonzero constants c_k is chosen;
/// a remaining tie, or no compatible bijection, is an error listing the choices.
inline void derive_connection(GkmGraph& g)
{
    g.clear_connection();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (ed.reverse < e)
            continue;
        const auto& src = g.out_edges(ed.from);
        const auto& dst = g.out_edges(ed.to);
        if (src.size() != dst.size())
            throw Error("cannot derive a connection along " + g.edge_name(e) + ": endpoint degrees differ");
        std::vector<std::vector<std::size_t>> candidates(src.size());
        for (std::size_t k = 0; k < src.size(); ++k) {
            for (std::size_t l = 0; l < dst.size(); ++l) {
                if (src[k] == e) {
                    if (dst[l] == ed.reverse)
                        candidates[k].push_back(l);
                    continue;
                }
                if (dst[l] == ed.reverse)
                    continue;
                LinearForm diff = g.weight(dst[l]) - g.weight(src[k]);
                if (diff.is_zero() || diff.ratio_to(ed.weight))
                    candidates[k].push_back(l);
            }
        }
        std::vector<std::vector<std::size_t>> matchings;
        std::vector<bool> used(dst.size(), false);
        std::vector<std::size_t> current;
        detail::enumerate_matchings(candidates, 0, used, current, matchings, 10000);
        if (matchings.empty())
            throw Error("cannot derive a connection along " + g.edge_name(e) + ": no compatible bijection");
        auto nonzero = [&](const std::vector<std::size_t>& m) {
            int n = 0;
            for (std::size_t k = 0; k < m.size(); ++k)
                n += !(g.weight(dst[m[k]]) == g.weight(src[k]));
            return n;
        };
        int best = -1;
        std::vector<const std::vector<std::size_t>*> winners;
        for (const auto& m : matchings) {
            int s = nonzero(m);
            if (s > best) {
                best = s;
                winners.clear();
            }
            if (s == best)
                winners.push_back(&m);
        }
        if (winners.size() > 1) {
            std::string msg = "ambiguous connection along " + g.edge_name(e) + ":";
            for (const auto* m : winners) {
                msg += " {";
                for (std::size_t k = 0; k < m->size(); ++k)
                    msg += (k ? ", " : "") + g.edge_name(src[k]) + "|" + g.edge_name(dst[(*m)[k]]);
                msg += "}";
            }
            throw Error(msg);
        }
        for (std::size_t k = 0; k < src.size(); ++k)
            g.set_theta(e, src[k], dst[(*winners.front())[k]]);
    }
    g.complete_connection();
}

/// Subgraph of the edges whose weights lie in the span of the given forms, on the
/// vertices they touch, with the restricted connection.
inline GkmGraph totally_geodesic_subgraph(const GkmGraph& g, const std::vector<LinearForm>& subspace)
{
    // row-reduce the spanning set once, then test membership by elimination
    std::vector<LinearForm> basis;
    std::vector<std::size_t> pivots;
    auto reduce = [&](LinearForm f) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (f[pivots[i]] != 0)
                f = f - f[pivots[i]] * basis[i];
        return f;
    };
    for (const auto& s : subspace) {
        if (s.dimension() != g.dimension())
            throw DimensionMismatch("subspace form of wrong dimension");
        LinearForm f = reduce(s);
        auto lead = f.leading_index();
        if (!lead)
            continue;
        f = f / f[*lead];
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i][*lead] != 0)
                basis[i] = basis[i] - basis[i][*lead] * f;
        basis.push_back(f);
        pivots.push_back(*lead);
    }

    std::vector<std::size_t> kept;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).reverse > e && reduce(g.weight(e)).is_zero())
            kept.push_back(e);
    std::vector<std::size_t> vid(g.vertex_count(), npos);
    std::vector<std::string> names;
    for (auto e : kept)
        for (auto v : {g.edge(e).from, g.edge(e).to})
            vid[v] = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (vid[v] == 0) {
            vid[v] = names.size();
            names.push_back(g.name(v));
        }
    GkmGraph sub(g.dimension(), names);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (vid[v] != npos)
            sub.set_alias(vid[v], g.alias(v));
    std::map<std::size_t, std::size_t> id;
    for (auto e : kept) {
        const auto& ed = g.edge(e);
        std::size_t ne = sub.add_edge(vid[ed.from], vid[ed.to], ed.weight, g.weight(ed.reverse));
        id[e] = ne;
        id[ed.reverse] = ne + 1;
    }
    if (g.has_connection() && sub.edge_count() > 0) {
        sub.clear_connection();
        for (const auto& [e, ne] : id)
            for (auto ep : g.out_edges(g.edge(e).from)) {
                auto it = id.find(ep);
                if (it == id.end())
                    continue;
                auto img = id.find(g.theta(e, ep));
                if (img != id.end())
                    sub.set_theta(ne, it->second, img->second);
            }
    }
    return sub;
}

} // namespace gkm
