#include "gkmthom/builders.hpp"
#include "gkmthom/cohomology.hpp"
#include "gkmthom/cross_section.hpp"
#include "gkmthom/interpolation.hpp"
#include "gkmthom/thom.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace gkm;

namespace {

// tau(p_i) = x_i on the complete graph
CohomologyClass coordinate_class(const GkmGraph& g)
{
    std::vector<Polynomial> v;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        v.push_back(Polynomial::variable(g.dimension(), i));
    return CohomologyClass(g, v, 1);
}

CohomologyClass power(const CohomologyClass& f, unsigned k)
{
    CohomologyClass r = CohomologyClass::constant(*f.graph, 1);
    for (unsigned i = 0; i < k; ++i)
        r = product(r, f);
    return r;
}

CohomologyClass scale(const CohomologyClass& f, const Polynomial& a)
{
    std::vector<Polynomial> v;
    for (const auto& x : f.values)
        v.push_back(a * x);
    return CohomologyClass(*f.graph, v);
}

CohomologyClass add(const CohomologyClass& f, const CohomologyClass& g)
{
    std::vector<Polynomial> v;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        v.push_back(f.values[i] + g.values[i]);
    return CohomologyClass(*f.graph, v);
}

std::vector<LinearForm> coordinates(std::size_t n)
{
    std::vector<LinearForm> x;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector c(n);
        c[i] = 1;
        x.emplace_back(c);
    }
    return x;
}

} // namespace

TEST(Cocycle, Examples)
{
    auto g = complete_graph(4);
    EXPECT_TRUE(is_cocycle(CohomologyClass::constant(g, 1)));
    EXPECT_TRUE(is_cocycle(coordinate_class(g)));

    std::vector<Polynomial> bad(4, Polynomial(4));
    bad[0] = Polynomial::variable(4, 0);
    auto r = is_cocycle(g, bad);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(g.edge_name(r.edge), "p1->p2");
    EXPECT_FALSE(r.remainder.is_zero());
}

TEST(Cocycle, EdgeClasses)
{
    auto g = complete_graph(3);
    auto t = edge_class(g, *g.find_edge(0, 1));
    EXPECT_EQ(t[0], Polynomial::from_linear(LinearForm{1, 0, -1}));
    EXPECT_EQ(t[1], Polynomial::from_linear(LinearForm{0, 1, -1}));
    EXPECT_TRUE(t[2].is_zero());
    EXPECT_EQ(t.degree, 1);

    auto p = permutahedron(3);
    for (std::size_t e = 0; e < p.edge_count(); ++e) {
        auto c = edge_class(p, e);
        EXPECT_TRUE(is_cocycle(c)) << p.edge_name(e);
        EXPECT_EQ(c.support().size(), 2u);
    }

    auto single = complete_graph(2);
    auto one = edge_class(single, 0);
    EXPECT_EQ(one[0], Polynomial::constant(2, 1));
    EXPECT_EQ(one[1], Polynomial::constant(2, 1));
}

TEST(Integrate, CompleteGraphDualBasis)
{
    for (std::size_t n = 2; n <= 5; ++n) {
        auto g = complete_graph(n);
        auto tau = coordinate_class(g);
        auto sigma = elementary_symmetric_all(n, coordinates(n));
        for (std::size_t i = 1; i <= n; ++i) {
            // nu_i = sum_r (-1)^{n-i-r} sigma_{n-i-r} tau^r
            CohomologyClass nu = CohomologyClass::constant(g, 0);
            for (std::size_t r = 0; r <= n - i; ++r) {
                Polynomial c = sigma[n - i - r];
                if ((n - i - r) % 2 == 1)
                    c = -c;
                nu = add(nu, scale(power(tau, static_cast<unsigned>(r)), c));
            }
            ASSERT_TRUE(is_cocycle(nu));
            for (std::size_t j = 1; j <= n; ++j) {
                auto v = integrate(product(nu, power(tau, static_cast<unsigned>(j - 1))));
                EXPECT_EQ(v, Polynomial::constant(n, i == j ? 1 : 0)) << "n=" << n << " i=" << i << " j=" << j;
            }
        }
    }
}

TEST(Integrate, LowDegreeVanishes)
{
    for (const auto& g : {complete_graph(4), permutahedron(3)}) {
        EXPECT_TRUE(integrate(CohomologyClass::constant(g, 1)).is_zero());
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            EXPECT_TRUE(integrate(edge_class(g, e)).is_zero());
    }
}

TEST(Integrate, CoordinateClassOnSingleEdge)
{
    auto g = complete_graph(2);
    auto tau = coordinate_class(g);
    EXPECT_EQ(integrate(tau), Polynomial::constant(2, 1));
}

TEST(Integrate, IsLinearOverPolynomials)
{
    auto g = complete_graph(4);
    gkm::testing::RandomSource rnd(5);
    auto tau = coordinate_class(g);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial a = rnd.polynomial(4, 2, 3), b = rnd.polynomial(4, 2, 3);
        auto f = power(tau, 4);
        auto h = power(tau, 5);
        auto lhs = integrate(add(scale(f, a), scale(h, b)));
        EXPECT_EQ(lhs, a * integrate(f) + b * integrate(h));
    }
}

TEST(Integrate, RejectsNonCocycle)
{
    auto g = complete_graph(3);
    std::vector<Polynomial> bad(3, Polynomial(3));
    bad[0] = Polynomial::constant(3, 1);
    EXPECT_THROW(integrate(g, bad), Error);
}

TEST(Product, Examples)
{
    auto g = permutahedron(3);
    auto pol = orient(g, {1, 2, 3});
    auto one = CohomologyClass::constant(g, 1);
    auto t12 = thom_plus_paths(pol, g.vertex("(12)"));
    auto t23 = thom_plus_paths(pol, g.vertex("(23)"));
    EXPECT_EQ(product(t12, one), t12);
    auto p = product(t12, t23);
    EXPECT_EQ(p.degree, 2);
    EXPECT_TRUE(is_cocycle(p));
    auto s = Polynomial::from_linear(LinearForm{-1, 0, 1});
    EXPECT_EQ(p[g.vertex("(13)")], s * s); // (-a1-a2)^2 in roots
    EXPECT_THROW(product(t12, CohomologyClass::constant(complete_graph(3), 1)), Error);
}

TEST(Degree0, OnlyConstants)
{
    // solve for degree-0 cocycles: values are constants c_v, differences must vanish
    for (const auto& g : {complete_graph(4), permutahedron(3)}) {
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            std::vector<Polynomial> f(g.vertex_count(), Polynomial(g.dimension()));
            f[v] = Polynomial::constant(g.dimension(), 1);
            EXPECT_EQ(static_cast<bool>(is_cocycle(g, f)), g.vertex_count() == 1);
        }
    }
}

TEST(Kirwan, ConstantAndAnnihilator)
{
    auto g = permutahedron(3);
    auto pol = orient(g, {0, 1, 3});
    for (const auto& c : regular_values(pol)) {
        auto k = kirwan(pol, CohomologyClass::constant(g, 1), c);
        for (const auto& v : k.values)
            EXPECT_EQ(v, Polynomial::constant(3, 1));
    }
    ThomBasis basis(pol);
    for (std::size_t p = 0; p < g.vertex_count(); ++p)
        for (const auto& c : regular_values(pol)) {
            auto k = kirwan(pol, basis.plus(p), c);
            for (const auto& v : k.values)
                EXPECT_TRUE(directional_derivative(v, pol.xi()).is_zero());
        }
    EXPECT_THROW(kirwan(pol, CohomologyClass::constant(g, 1), pol.phi(0)), Error);
}

TEST(Kirwan, RingMap)
{
    auto g = permutahedron(3);
    auto pol = orient(g, {0, 1, 3});
    ThomBasis basis(pol);
    for (const auto& c : regular_values(pol))
        for (std::size_t p = 0; p < 6; ++p)
            for (std::size_t q = 0; q < 6; ++q) {
                auto lhs = kirwan(pol, product(basis.plus(p), basis.plus(q)), c);
                auto rhs = product(kirwan(pol, basis.plus(p), c), kirwan(pol, basis.plus(q), c));
                EXPECT_EQ(lhs.values, rhs.values);
            }
}

TEST(Kirwan, ThomClassJustAboveBase)
{
    for (const auto& g : {permutahedron(3), complete_graph(5)}) {
        auto xi = g.vertex_count() == 6 ? RationalVector{0, 1, 3} : complete_graph_default_xi(5);
        auto pol = orient(g, xi);
        for (std::size_t p0 = 0; p0 < g.vertex_count(); ++p0) {
            // the regular value immediately above phi(p0)
            Rational c = pol.phi(p0) + Rational(1, 2 * static_cast<long>(g.vertex_count() + 1));
            auto k = kirwan(pol, thom_plus_paths(pol, p0), c);
            auto seed = thom_seed(pol, p0, c);
            EXPECT_EQ(k.values, seed.values) << g.name(p0);
        }
    }
}

TEST(Kirwan, RejectsNonCocycle)
{
    auto g = complete_graph(3);
    auto pol = orient(g, complete_graph_default_xi(3));
    std::vector<Polynomial> bad(3, Polynomial(3));
    bad[0] = Polynomial::constant(3, 1);
    EXPECT_THROW(kirwan(pol, CohomologyClass(g, bad), Rational(1, 2)), Error);
}

TEST(CrossSectionIntegral, EdgeClassGivesOne)
{
    auto g = complete_graph(3);
    auto pol = orient(g, complete_graph_default_xi(3));
    Rational c(1, 2);
    auto cut = cut_edges(pol, c);
    ASSERT_EQ(cut.size(), 2u);
    for (auto e : cut) {
        // the edge class restricted to a single cut vertex
        auto k = kirwan(pol, edge_class(g, e), c);
        CrossSectionClass single{c, k.edges, {}};
        for (std::size_t i = 0; i < k.edges.size(); ++i)
            single.values.push_back(k.edges[i] == e ? k.values[i] : Polynomial(3));
        EXPECT_EQ(integrate_cross_section(pol, single), Polynomial::constant(3, 1));
    }
}

TEST(CrossSectionIntegral, UniquePathEdgeGivesIota)
{
    auto g = permutahedron(3);
    for (const RationalVector& xi : {RationalVector{1, 2, 3}, RationalVector{0, 1, 3}, RationalVector{-1, 2, 7}}) {
        auto pol = orient(g, xi);
        ThomBasis basis(pol);
        int checked = 0;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (!pol.ascending(e))
                continue;
            std::size_t p = g.edge(e).from, q = g.edge(e).to;
            auto io = iota(pol, e);
            if (!io.global)
                continue;
            Rational c = (pol.phi(p) + pol.phi(q)) / 2;
            auto v = integrate_cross_section(pol, product(kirwan(pol, basis.plus(p), c), kirwan(pol, basis.minus(q), c)));
            // with delta_v = 1/K_c(tau_e)(v_e) the integral is Theta = alpha_e(xi) * iota_e
            EXPECT_EQ(RationalExpr(v), theta(pol, e)) << g.edge_name(e);
            EXPECT_EQ(RationalExpr(v) / pol.pairing(e), io.value) << g.edge_name(e);
            EXPECT_TRUE(io.value.is_polynomial());
            ++checked;
        }
        EXPECT_EQ(checked, 8);
    }
}

TEST(CrossSectionIntegral, SelfIndexingGivesConstant)
{
    auto g = permutahedron(3);
    auto pol = longest_path_morse(g, {1, 2, 3});
    ASSERT_TRUE(pol.self_indexing());
    ThomBasis basis(pol);
    std::size_t p = g.vertex("(12)"), q = g.vertex("(231)");
    Rational c = (pol.phi(p) + pol.phi(q)) / 2;
    auto v = integrate_cross_section(pol, product(kirwan(pol, basis.plus(p), c), kirwan(pol, basis.minus(q), c)));
    EXPECT_TRUE(v.is_constant());
    EXPECT_FALSE(v.is_zero());
}
