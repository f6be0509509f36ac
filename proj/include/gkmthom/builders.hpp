#pragma once

#include "gkmthom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace gkm {

/// Complete graph on p1..pn; the edge pi -> pj has weight x_i - x_j and the
/// connection along it sends pi->pk to pj->pk.
inline GkmGraph complete_graph(std::size_t n)
{
    if (n < 1)
        throw Error("complete_graph needs n >= 1");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("p" + std::to_string(i));
    GkmGraph g(n, names);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.add_edge(i, j, LinearForm::coordinate(n, i) - LinearForm::coordinate(n, j));
    if (g.edge_count() == 0)
        return g;
    g.clear_connection();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        for (auto ep : g.out_edges(ed.from)) {
            std::size_t k = g.edge(ep).to;
            g.set_theta(e, ep, k == ed.to ? ed.reverse : *g.find_edge(ed.to, k));
        }
    }
    return g;
}

/// (n, n-1, ..., 1)
inline RationalVector complete_graph_default_xi(std::size_t n)
{
    RationalVector xi;
    for (std::size_t i = n; i >= 1; --i)
        xi.emplace_back(static_cast<long>(i));
    return xi;
}

using Permutation = std::vector<int>;

inline int inversions(const Permutation& p)
{
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            c += p[i] > p[j];
    return c;
}

/// One-line notation, e.g. "231".
inline std::string one_line(const Permutation& p)
{
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i && p.size() > 9)
            s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

namespace detail {

inline std::vector<Permutation> permutations_by_length(std::size_t n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> all;
    do
        all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    if (n == 3) {
        // 1, (12), (23), (231), (312), (13)
        return {{1, 2, 3}, {2, 1, 3}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return inversions(a) < inversions(b); });
    return all;
}

} // namespace detail

/// Cayley graph of S_n for the transpositions acting on the right. The edge
/// pi -> pi*t_ij (i < j) has weight e_j - e_i if pi(j) > pi(i), else e_i - e_j; the
/// connection along it sends pi -> pi*t' to pi*t -> pi*t*t'*t. Vertices are named in
/// one-line notation, ordered by length; for n = 3 they carry cycle aliases.
inline GkmGraph permutahedron(std::size_t n)
{
    if (n < 2)
        throw Error("permutahedron needs n >= 2");
    auto perms = detail::permutations_by_length(n);
    std::vector<std::string> names;
    for (const auto& p : perms)
        names.push_back(one_line(p));
    GkmGraph g(n, names);
    if (n == 3) {
        const char* aliases[] = {"1", "(12)", "(23)", "(231)", "(312)", "(13)"};
        for (std::size_t v = 0; v < 6; ++v)
            g.set_alias(v, aliases[v]);
    }

    // transposition ids in a fixed order
    std::vector<std::pair<std::size_t, std::size_t>> transpositions;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            transpositions.emplace_back(i, j);
    auto apply = [](Permutation p, std::pair<std::size_t, std::size_t> t) {
        std::swap(p[t.first], p[t.second]);
        return p;
    };
    auto weight = [&](const Permutation& p, std::pair<std::size_t, std::size_t> t) {
        auto [i, j] = t;
        LinearForm d = LinearForm::coordinate(n, j) - LinearForm::coordinate(n, i);
        return p[j] > p[i] ? d : -d;
    };

    // edge[v][t] = oriented edge from v along transposition t
    std::vector<std::vector<std::size_t>> edge_of(perms.size(), std::vector<std::size_t>(transpositions.size(), npos));
    for (std::size_t v = 0; v < perms.size(); ++v)
        for (std::size_t t = 0; t < transpositions.size(); ++t) {
            if (edge_of[v][t] != npos)
                continue;
            std::size_t w = g.vertex(one_line(apply(perms[v], transpositions[t])));
            std::size_t e = g.add_edge(v, w, weight(perms[v], transpositions[t]), weight(perms[w], transpositions[t]));
            edge_of[v][t] = e;
            edge_of[w][t] = e + 1;
        }

    // conjugation t' -> t t' t on transposition ids
    auto conj = [&](std::size_t t, std::size_t tp) {
        Permutation id(n);
        std::iota(id.begin(), id.end(), 0);
        Permutation x = apply(apply(apply(id, transpositions[t]), transpositions[tp]), transpositions[t]);
        std::vector<std::size_t> moved;
        for (std::size_t k = 0; k < n; ++k)
            if (x[k] != static_cast<int>(k))
                moved.push_back(k);
        return static_cast<std::size_t>(
            std::find(transpositions.begin(), transpositions.end(), std::make_pair(moved[0], moved[1])) -
            transpositions.begin());
    };

    g.clear_connection();
    for (std::size_t v = 0; v < perms.size(); ++v)
        for (std::size_t t = 0; t < transpositions.size(); ++t) {
            std::size_t e = edge_of[v][t];
            std::size_t w = g.edge(e).to;
            for (std::size_t tp = 0; tp < transpositions.size(); ++tp)
                g.set_theta(e, edge_of[v][tp], edge_of[w][conj(t, tp)]);
        }
    return g;
}

/// (1, 2, ..., n)
inline RationalVector permutahedron_default_xi(std::size_t n)
{
    RationalVector xi;
    for (std::size_t i = 1; i <= n; ++i)
        xi.emplace_back(static_cast<long>(i));
    return xi;
}

/// Simple-root rendering map for the permutahedron: x_k -> a_1 + ... + a_{k-1},
/// so that e_{k+1} - e_k becomes a_k.
inline std::vector<LinearForm> simple_root_substitution(std::size_t n)
{
    std::vector<LinearForm> images;
    const std::size_t m = n > 0 ? n - 1 : 0;
    for (std::size_t k = 0; k < n; ++k) {
        LinearForm f(m);
        for (std::size_t i = 0; i < k; ++i)
            f = f + LinearForm::coordinate(m, i);
        images.push_back(f);
    }
    return images;
}

} // namespace gkm
