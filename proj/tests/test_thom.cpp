#include "gkmthom/builders.hpp"
#include "gkmthom/graph_io.hpp"
#include "gkmthom/thom.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace gkm;

namespace {

const LinearForm a1{-1, 1, 0};
const LinearForm a2{0, -1, 1};

std::vector<std::string> vertex_labels(const GkmGraph& g, std::size_t start, const Path& path)
{
    std::vector<std::string> out{g.label(start)};
    for (auto e : path)
        out.push_back(g.label(g.edge(e).to));
    return out;
}

RationalExpr form(const LinearForm& f) { return RationalExpr(Polynomial::from_linear(f)); }

// r / nu^+_v, one descending weight at a time
RationalExpr over_nu_plus(RationalExpr r, const Polarization& pol, std::size_t v)
{
    for (auto e : pol.descending(v))
        r.divide_in_place(pol.graph().weight(e));
    return r;
}

// xi with xi1 < xi2 < xi3
const std::vector<RationalVector> chamber_samples{{1, 2, 3}, {0, 1, 3}, {Rational(-2), Rational(1, 2), Rational(5)}, {1, 5, 6}};

std::vector<std::pair<std::string, GkmGraph>> small_graphs()
{
    std::vector<std::pair<std::string, GkmGraph>> out;
    for (std::size_t n = 2; n <= 6; ++n)
        out.emplace_back("complete" + std::to_string(n), complete_graph(n));
    for (std::size_t n = 2; n <= 3; ++n)
        out.emplace_back("permutahedron" + std::to_string(n), permutahedron(n));
    return out;
}

RationalVector default_xi(const GkmGraph& g)
{
    if (g.names().front() == "p1")
        return complete_graph_default_xi(g.vertex_count());
    return permutahedron_default_xi(g.dimension());
}

} // namespace

TEST(Paths, PermutahedronTwoPaths)
{
    auto g = permutahedron(3);
    auto pol = orient(g, {1, 2, 3});
    auto paths = ascending_paths(pol, g.vertex("(12)"), g.vertex("(13)"));
    ASSERT_EQ(paths.size(), 2u);
    std::set<std::vector<std::string>> seen;
    for (const auto& p : paths)
        seen.insert(vertex_labels(g, g.vertex("(12)"), p));
    EXPECT_TRUE(seen.count({"(12)", "(231)", "(13)"}));
    EXPECT_TRUE(seen.count({"(12)", "(312)", "(13)"}));
}

TEST(Paths, TrivialAndComplete)
{
    auto g = complete_graph(4);
    auto pol = orient(g, complete_graph_default_xi(4));
    auto self = ascending_paths(pol, 2, 2);
    ASSERT_EQ(self.size(), 1u);
    EXPECT_TRUE(self.front().empty());
    EXPECT_EQ(ascending_paths(pol, 0, 3).size(), 4u);
    EXPECT_TRUE(ascending_paths(pol, 3, 0).empty());
}

TEST(Paths, EnumerationMatchesCountingOracle)
{
    auto g = permutahedron(4);
    auto pol = orient(g, {0, 1, 3, 7});
    for (std::size_t p = 0; p < g.vertex_count(); p += 5)
        for (std::size_t q = 0; q < g.vertex_count(); ++q) {
            auto paths = ascending_paths(pol, p, q);
            EXPECT_EQ(paths.size(), count_ascending_paths(pol, p, q));
            std::set<Path> unique(paths.begin(), paths.end());
            EXPECT_EQ(unique.size(), paths.size());
            for (const auto& path : paths) {
                std::set<std::size_t> visited{p};
                std::size_t at = p;
                for (auto e : path) {
                    EXPECT_EQ(g.edge(e).from, at);
                    EXPECT_TRUE(pol.ascending(e));
                    at = g.edge(e).to;
                    EXPECT_TRUE(visited.insert(at).second);
                }
                EXPECT_EQ(at, q);
            }
        }
}

TEST(Theta, PermutahedronValues)
{
    auto g = permutahedron(3);
    std::size_t id = g.vertex("1"), w0 = g.vertex("(13)");
    for (const auto& xi : chamber_samples) {
        auto pol = orient(g, xi);
        Rational a = a1.pair(xi), b = a2.pair(xi);
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (!pol.ascending(e))
                continue;
            auto t = theta(pol, e);
            if (g.edge(e).from == id && g.edge(e).to == w0) {
                // -(a+b)^2 / (b a1 - a a2)^2
                LinearForm d = b * a1 - a * a2;
                auto expected = RationalExpr::constant(3, -(a + b) * (a + b)) / d / d;
                EXPECT_EQ(t, expected);
            } else {
                EXPECT_EQ(t, RationalExpr::constant(3, 1)) << g.edge_name(e);
            }
        }
    }
}

TEST(Theta, CancelledEqualsUncancelled)
{
    std::vector<std::pair<GkmGraph, RationalVector>> cases{
        {permutahedron(3), {1, 2, 3}}, {permutahedron(3), {0, 1, 3}}, {complete_graph(5), {5, 4, 3, 2, 1}}, {complete_graph(5), {7, 3, 2, 0, -4}}};
    for (const auto& [g, xi] : cases) {
        auto pol = orient(g, xi);
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            if (pol.ascending(e))
                EXPECT_EQ(theta(pol, e), theta_uncancelled(pol, e).reduce()) << g.edge_name(e);
    }
}

TEST(Theta, SymmetricUnderReversal)
{
    for (const auto& [name, g] : small_graphs()) {
        auto pol = orient(g, default_xi(g));
        auto rev = pol.reversed();
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            if (pol.ascending(e))
                EXPECT_EQ(theta(pol, e), theta(rev, g.reverse(e))) << name << " " << g.edge_name(e);
    }
}

TEST(Iota, TrivialThetaGivesReciprocalPairing)
{
    auto g = permutahedron(3);
    auto pol = orient(g, {0, 1, 3});
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (!pol.ascending(e))
            continue;
        auto io = iota(pol, e);
        if (theta(pol, e) == RationalExpr::constant(3, 1))
            EXPECT_EQ(io.value, RationalExpr::constant(3, 1 / pol.pairing(e)));
        EXPECT_EQ(io.global, count_ascending_paths(pol, g.edge(e).from, g.edge(e).to) == 1);
    }
    std::size_t long_edge = *g.find_edge(g.vertex("1"), g.vertex("(13)"));
    EXPECT_FALSE(iota(pol, long_edge).global);
}

TEST(Iota, LongestPathEdgesAreGlobalConstants)
{
    for (const auto& g : {permutahedron(3), permutahedron(4), complete_graph(5)}) {
        auto pol = longest_path_morse(g, default_xi(g));
        ASSERT_TRUE(pol.self_indexing());
        // a longest path from the minimum to the maximum raises sigma by one per edge
        std::size_t lo = pol.order().front(), hi = pol.order().back();
        for (const auto& path : ascending_paths(pol, lo, hi)) {
            if (static_cast<int>(path.size()) != pol.sigma(hi))
                continue;
            for (auto e : path) {
                auto io = iota(pol, e);
                EXPECT_TRUE(io.global);
                ASSERT_TRUE(io.value.is_polynomial());
                EXPECT_TRUE(io.value.numerator().is_constant());
            }
        }
    }
}

TEST(PathWeight, PermutahedronClosedForms)
{
    auto g = permutahedron(3);
    std::size_t from = g.vertex("(12)"), to = g.vertex("(13)");
    for (const auto& xi : chamber_samples) {
        auto pol = orient(g, xi);
        Rational a = a1.pair(xi), b = a2.pair(xi);
        LinearForm d = b * a1 - a * a2;
        // E(gamma_1) = a a2 (a1+a2)/d, E(gamma_2) = -b a1 (a1+a2)/d
        RationalExpr e1 = (form(a * a2) * form(a1 + a2)) / d;
        RationalExpr e2 = (form(-b * a1) * form(a1 + a2)) / d;
        RationalExpr sum(3);
        for (const auto& path : ascending_paths(pol, from, to)) {
            auto w = path_weight(pol, path);
            sum += w;
            if (g.label(g.edge(path.front()).to) == "(231)")
                EXPECT_EQ(w, e1.reduced());
            else
                EXPECT_EQ(w, e2.reduced());
        }
        EXPECT_EQ(sum.reduce(), form(-(a1 + a2)));
    }
}

TEST(PathWeight, SingleEdge)
{
    for (const auto& [name, g] : small_graphs()) {
        auto pol = orient(g, default_xi(g));
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (!pol.ascending(e))
                continue;
            // E = nu_q / (-alpha_e) * Theta
            auto expected = (RationalExpr(pol.nu_plus(g.edge(e).to)) / (-g.weight(e)) * theta(pol, e)).reduce();
            EXPECT_EQ(path_weight(pol, {e}), expected) << name << " " << g.edge_name(e);
        }
    }
}

TEST(PathWeight, ProductOfThetasForm)
{
    // E = nu_q prod Theta (-1)^m / (alpha_{e_m} prod_{k<m} rho_{e_{k+1}}(alpha_{e_k}))
    for (const auto& [g, xi] : std::vector<std::pair<GkmGraph, RationalVector>>{{permutahedron(3), {0, 1, 3}}, {complete_graph(5), {5, 4, 3, 2, 1}}}) {
        auto pol = orient(g, xi);
        for (std::size_t p = 0; p < g.vertex_count(); ++p)
            for (std::size_t q = 0; q < g.vertex_count(); ++q)
                for (const auto& path : ascending_paths(pol, p, q)) {
                    if (path.empty())
                        continue;
                    RationalExpr r(pol.nu_plus(q));
                    for (auto e : path)
                        r *= theta(pol, e);
                    if (path.size() % 2 == 1)
                        r = -r;
                    r.divide_in_place(g.weight(path.back()));
                    for (std::size_t k = 0; k + 1 < path.size(); ++k)
                        r.divide_in_place(rho(g.weight(path[k + 1]), xi, g.weight(path[k])));
                    EXPECT_EQ(path_weight(pol, path), r.reduce());
                }
    }
}

TEST(PathWeight, SplittingIdentity)
{
    std::mt19937 rng(11);
    for (const auto& [g, xi] : std::vector<std::pair<GkmGraph, RationalVector>>{{permutahedron(3), {0, 1, 3}}, {permutahedron(4), {0, 1, 3, 7}}, {complete_graph(5), {5, 4, 3, 2, 1}}}) {
        auto pol = orient(g, xi);
        std::vector<Path> sample;
        for (std::size_t p = 0; p < g.vertex_count(); ++p)
            for (std::size_t q = 0; q < g.vertex_count(); ++q)
                for (auto& path : ascending_paths(pol, p, q))
                    if (path.size() >= 2)
                        sample.push_back(std::move(path));
        std::shuffle(sample.begin(), sample.end(), rng);
        if (sample.size() > 60)
            sample.resize(60);
        ASSERT_FALSE(sample.empty());
        for (const auto& path : sample) {
            std::size_t p = g.edge(path.front()).from;
            auto whole = path_weight(pol, path);
            for (std::size_t split = 1; split < path.size(); ++split) {
                Path head(path.begin(), path.begin() + static_cast<long>(split));
                Path tail(path.begin() + static_cast<long>(split), path.end());
                std::size_t mid = g.edge(tail.front()).from;
                std::size_t ei = head.back(), ea = tail.front();
                RationalExpr rhs = over_nu_plus(path_weight(pol, head), pol, p) * over_nu_plus(path_weight(pol, tail), pol, mid) *
                                   form(g.weight(ei)) / rho(g.weight(ea), xi, g.weight(ei));
                EXPECT_EQ(over_nu_plus(whole, pol, p).reduce(), rhs.reduce());
            }
        }
    }
}

TEST(PathWeight, ReversalRelation)
{
    // E(reversed) = -(hat_m / hat_1) (nu_p^- / nu_q^+) E(gamma) for every length m
    auto check = [](const GkmGraph& g, const RationalVector& xi) {
        auto pol = orient(g, xi);
        auto rev = pol.reversed();
        int odd = 0, even = 0;
        for (std::size_t p = 0; p < g.vertex_count(); ++p)
            for (std::size_t q = 0; q < g.vertex_count(); ++q)
                for (const auto& path : ascending_paths(pol, p, q)) {
                    if (path.empty())
                        continue;
                    Path back;
                    for (auto it = path.rbegin(); it != path.rend(); ++it)
                        back.push_back(g.reverse(*it));
                    LinearForm h1 = hat(g.weight(path.front()), xi), hm = hat(g.weight(path.back()), xi);
                    RationalExpr rhs = -over_nu_plus(path_weight(pol, path) * form(hm) / h1 * RationalExpr(pol.nu_minus(p)), pol, q);
                    auto lhs = path_weight(rev, back);
                    EXPECT_EQ(lhs, rhs.reduce());
                    // the (-1)^m variant coincides exactly for odd m
                    if (path.size() % 2 == 1) {
                        ++odd;
                    } else {
                        ++even;
                        EXPECT_FALSE(lhs == (-rhs).reduce());
                    }
                }
        EXPECT_GT(odd, 0);
        EXPECT_GT(even, 0);
    };
    for (const auto& xi : chamber_samples)
        check(permutahedron(3), xi);
    check(complete_graph(5), {5, 4, 3, 2, 1});
}

TEST(ThomClass, GoldenPermutahedronTable)
{
    auto g = permutahedron(3);
    const LinearForm s = a1 + a2;
    auto P = [](const LinearForm& f) { return Polynomial::from_linear(f); };
    const Polynomial z(3);
    // rows: class tau_c; columns: vertices in the order 1, (12), (23), (231), (312), (13)
    std::map<std::string, std::vector<Polynomial>> expected{
        {"1", std::vector<Polynomial>(6, Polynomial::constant(3, 1))},
        {"(12)", {z, -P(a1), z, -P(s), -P(a1), -P(s)}},
        {"(23)", {z, z, -P(a2), -P(a2), -P(s), -P(s)}},
        {"(231)", {z, z, z, P(a2) * P(s), z, P(a2) * P(s)}},
        {"(312)", {z, z, z, z, P(a1) * P(s), P(a1) * P(s)}},
        {"(13)", {z, z, z, z, z, -P(a1) * P(a2) * P(s)}},
    };
    for (const auto& xi : chamber_samples) {
        auto pol = orient(g, xi);
        for (const auto& [label, values] : expected)
            EXPECT_EQ(thom_plus_paths(pol, g.vertex(label)).values, values) << label;
    }
}

TEST(ThomClass, MinimumVertexIsOne)
{
    for (const auto& [name, g] : small_graphs()) {
        auto pol = orient(g, default_xi(g));
        auto t = thom_plus_paths(pol, pol.order().front());
        EXPECT_EQ(t, CohomologyClass::constant(g, 1)) << name;
        auto m = thom_minus(pol, pol.order().back());
        EXPECT_EQ(m, CohomologyClass::constant(g, 1)) << name;
    }
}

TEST(ThomClass, CompleteGraphClosedForm)
{
    for (std::size_t n = 2; n <= 6; ++n) {
        auto g = complete_graph(n);
        auto pol = orient(g, complete_graph_default_xi(n));
        for (std::size_t i = 0; i < n; ++i) {
            auto t = thom_plus_paths(pol, i);
            for (std::size_t j = 0; j < n; ++j) {
                Polynomial expected(n);
                if (j >= i) {
                    expected = Polynomial::constant(n, 1);
                    for (std::size_t k = 0; k < i; ++k)
                        expected *= Polynomial::from_linear(g.weight(*g.find_edge(j, k)));
                }
                EXPECT_EQ(t[j], expected) << "n=" << n << " i=" << i << " j=" << j;
            }
        }
    }
}

TEST(ThomClass, AlgorithmsAgree)
{
    auto graphs = small_graphs();
    graphs.emplace_back("permutahedron4", permutahedron(4));
    for (const auto& [name, g] : graphs) {
        auto pol = orient(g, default_xi(g));
        for (std::size_t p = 0; p < g.vertex_count(); ++p)
            EXPECT_EQ(thom_plus_paths(pol, p), thom_plus_inductive(pol, p)) << name << " " << g.name(p);
    }
}

TEST(ThomClass, SupportLeadingValueAndDegree)
{
    auto graphs = small_graphs();
    graphs.emplace_back("permutahedron4", permutahedron(4));
    for (const auto& [name, g] : graphs) {
        ThomBasis basis(orient(g, default_xi(g)));
        const auto& pol = basis.polarization();
        for (std::size_t p = 0; p < g.vertex_count(); ++p) {
            for (int sign : {1, -1}) {
                const auto& P = sign > 0 ? pol : basis.reversed();
                const auto& t = sign > 0 ? basis.plus(p) : basis.minus(p);
                auto up = flow_up(P, p);
                std::vector<std::size_t> expected_support;
                for (std::size_t v = 0; v < g.vertex_count(); ++v)
                    if (up[v])
                        expected_support.push_back(v);
                EXPECT_EQ(t.support(), expected_support) << name << " " << g.name(p);
                EXPECT_EQ(t[p], sign > 0 ? pol.nu_plus(p) : pol.nu_minus(p));
                EXPECT_EQ(t.degree, P.sigma(p));
                EXPECT_TRUE(is_cocycle(t));
            }
        }
    }
}

TEST(ThomClass, MinusIsPlusForReversedPolarization)
{
    auto g = permutahedron(3);
    auto pol = orient(g, {0, 1, 3});
    auto neg = orient(g, {0, -1, -3});
    for (std::size_t p = 0; p < 6; ++p)
        EXPECT_EQ(thom_minus(pol, p), thom_plus_paths(neg, p));
}

TEST(Pairing, IdentityMatrix)
{
    for (const auto& g : {permutahedron(3), complete_graph(5)}) {
        ThomBasis basis(orient(g, default_xi(g)));
        for (std::size_t p = 0; p < g.vertex_count(); ++p)
            for (std::size_t q = 0; q < g.vertex_count(); ++q)
                EXPECT_EQ(pairing(basis, p, q), Polynomial::constant(g.dimension(), p == q ? 1 : 0));
        for (std::size_t p = 0; p < g.vertex_count(); ++p)
            EXPECT_EQ(product(basis.plus(p), basis.minus(p)).support(), std::vector<std::size_t>{p});
    }
}

TEST(StructureConstants, PathSumsMatchClassSums)
{
    auto g = permutahedron(3);
    ThomBasis basis(orient(g, {1, 2, 3}));
    const auto& pol = basis.polarization();
    for (std::size_t p = 0; p < 6; ++p)
        for (std::size_t q = p; q < 6; ++q)
            for (std::size_t r = 0; r < 6; ++r) {
                auto c = structure_constant(basis, p, q, r);
                EXPECT_EQ(c, structure_constant_paths(pol, p, q, r));
                EXPECT_EQ(c, RationalExpr(integrate(product(product(basis.plus(p), basis.plus(q)), basis.minus(r)))));
            }
}

TEST(StructureConstants, Examples)
{
    auto g = permutahedron(3);
    ThomBasis basis(orient(g, {1, 2, 3}));
    std::size_t lo = g.vertex("1");
    for (std::size_t p = 0; p < 6; ++p)
        EXPECT_EQ(structure_constant(basis, p, lo, p), RationalExpr::constant(3, 1));
    // (231) and (312) have disjoint flow-ups below (13); nothing reaches (23) from above
    EXPECT_TRUE(structure_constant(basis, g.vertex("(13)"), g.vertex("(13)"), g.vertex("(23)")).is_zero());

    auto coef = expand_in_thom_basis(basis, product(basis.plus(g.vertex("(12)")), basis.plus(g.vertex("(23)"))));
    for (std::size_t r = 0; r < 6; ++r)
        EXPECT_EQ(RationalExpr(coef[r]), structure_constant(basis, g.vertex("(12)"), g.vertex("(23)"), r)) << g.label(r);
}

TEST(Expansion, IndicatorsAndProducts)
{
    auto g = permutahedron(3);
    ThomBasis basis(orient(g, {0, 1, 3}));
    const auto& pol = basis.polarization();
    for (std::size_t s = 0; s < 6; ++s) {
        auto c = expand_in_thom_basis(basis, basis.plus(s));
        for (std::size_t r = 0; r < 6; ++r)
            EXPECT_EQ(c[r], Polynomial::constant(3, r == s ? 1 : 0));
    }
    auto one = expand_in_thom_basis(basis, CohomologyClass::constant(g, 1));
    for (std::size_t r = 0; r < 6; ++r)
        EXPECT_EQ(one[r], Polynomial::constant(3, r == pol.order().front() ? 1 : 0));

    for (std::size_t p = 0; p < 6; ++p)
        for (std::size_t q = 0; q < 6; ++q) {
            auto prod = product(basis.plus(p), basis.plus(q));
            auto c = expand_in_thom_basis(basis, prod);
            CohomologyClass rebuilt = CohomologyClass::constant(g, 0);
            std::vector<Polynomial> acc(6, Polynomial(3));
            for (std::size_t r = 0; r < 6; ++r) {
                if (c[r].is_zero())
                    continue;
                EXPECT_TRUE(c[r].is_homogeneous_of(pol.sigma(p) + pol.sigma(q) - pol.sigma(r)));
                for (std::size_t v = 0; v < 6; ++v)
                    acc[v] += c[r] * basis.plus(r)[v];
            }
            EXPECT_EQ(acc, prod.values);
        }

    std::vector<Polynomial> not_cocycle(6, Polynomial(3));
    not_cocycle[g.vertex("(12)")] = Polynomial::constant(3, 1);
    EXPECT_THROW(expand_in_thom_basis(basis, CohomologyClass(g, not_cocycle)), Error);
}

TEST(Cancellation, TriangleWithDiagonal)
{
    // p -> r -> q with the diagonal e = p -> q inside a totally geodesic triangle
    auto check = [](const GkmGraph& g, const RationalVector& xi, std::size_t p, std::size_t r, std::size_t q) {
        auto pol = orient(g, xi);
        std::size_t e = *g.find_edge(p, q), e1 = *g.find_edge(p, r), e2 = *g.find_edge(r, q);
        ASSERT_TRUE(pol.ascending(e) && pol.ascending(e1) && pol.ascending(e2));
        ASSERT_EQ(g.weight(e), g.weight(e1) + g.weight(e2));
        ASSERT_EQ(pol.sigma(q), pol.sigma(p) + 2);
        auto tri = totally_geodesic_subgraph(g, {g.weight(e1), g.weight(e2)});
        ASSERT_EQ(tri.vertex_count(), 3u);
        auto lhs = (path_weight(pol, {e}) + path_weight(pol, {e1, e2})).reduce();
        auto rhs = (RationalExpr(pol.nu_plus(q)) / g.weight(e) / g.weight(e2)).reduce();
        EXPECT_EQ(lhs, rhs) << g.name(p) << " " << g.name(r) << " " << g.name(q);
    };
    for (std::size_t n = 3; n <= 5; ++n) {
        auto g = complete_graph(n);
        for (std::size_t i = 0; i + 2 < n; ++i)
            check(g, complete_graph_default_xi(n), i, i + 1, i + 2);
    }
    auto loaded = load_graph(std::string(GKMTHOM_SOURCE_DIR) + "/examples_graphs/nearby_paths.json");
    const auto& g = loaded.graph;
    check(g, *loaded.xi, g.vertex("p"), g.vertex("r"), g.vertex("q"));
}

TEST(Polynomiality, NonGenericPolarizationsStillPolynomial)
{
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> d(-9, 9);
    auto g = permutahedron(3);
    int done = 0;
    while (done < 8) {
        RationalVector xi{d(rng), d(rng), d(rng)};
        try {
            auto pol = orient(g, xi);
            for (std::size_t p = 0; p < 6; ++p)
                EXPECT_NO_THROW(thom_plus_paths(pol, p));
            ++done;
        } catch (const Error&) {
        }
    }
}

TEST(StructureConstants, AgreeWithoutSelfIndexing)
{
    // hexagon with vertices at lattice points; a chain vertex of index 1 can sit at level 2
    std::vector<LinearForm> pts{{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}};
    GkmGraph g(2, {"v0", "v1", "v2", "v3", "v4", "v5"});
    for (std::size_t i = 0; i < 6; ++i)
        g.add_edge(i, (i + 1) % 6, pts[(i + 1) % 6] - pts[i]);
    derive_connection(g);
    ASSERT_TRUE(validate(g).ok());
    for (const RationalVector& xi : {RationalVector{1, 3}, RationalVector{-2, 5}, RationalVector{7, -1}}) {
        ThomBasis basis(orient(g, xi));
        const auto& pol = basis.polarization();
        ASSERT_FALSE(pol.self_indexing());
        for (std::size_t p = 0; p < 6; ++p)
            for (std::size_t q = 0; q < 6; ++q) {
                auto coef = expand_in_thom_basis(basis, product(basis.plus(p), basis.plus(q)));
                for (std::size_t r = 0; r < 6; ++r)
                    EXPECT_EQ(RationalExpr(coef[r]), structure_constant_paths(pol, p, q, r));
            }
    }
}
