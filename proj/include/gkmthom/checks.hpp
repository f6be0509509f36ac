#pragma once

// The worked-example suite behind `gkmthom demo` and the acceptance binary.

#include "gkmthom/builders.hpp"
#include "gkmthom/cross_section.hpp"
#include "gkmthom/interpolation.hpp"
#include "gkmthom/thom.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace gkm {

struct CheckResult {
    int id = 0;
    std::string title;
    bool ok = true;
    std::size_t assertions = 0;
    std::vector<std::string> failures;
    double seconds = 0;
    double budget = 0; // seconds; 0 means no limit
};

/// Records assertion outcomes; keeps the first few failure messages.
class Checker {
public:
    explicit Checker(CheckResult& r) : r_(r) {}

    bool expect(bool cond, const std::function<std::string()>& what)
    {
        ++r_.assertions;
        if (!cond) {
            r_.ok = false;
            if (r_.failures.size() < 5)
                r_.failures.push_back(what());
        }
        return cond;
    }

    template <class A, class B>
    bool equal(const A& a, const B& b, const std::string& where)
    {
        return expect(a == b, [&] { return where + ": " + text(a) + " != " + text(b); });
    }

private:
    template <class T>
    static std::string text(const T& v)
    {
        if constexpr (requires { v.to_string(); })
            return v.to_string();
        else {
            std::ostringstream s;
            s << v;
            return s.str();
        }
    }

    CheckResult& r_;
};

namespace checks {

inline const LinearForm& root1()
{
    static const LinearForm a{-1, 1, 0};
    return a;
}

inline const LinearForm& root2()
{
    static const LinearForm a{0, -1, 1};
    return a;
}

inline RationalExpr lin(const LinearForm& f) { return RationalExpr(Polynomial::from_linear(f)); }

/// xi with xi1 < xi2 < xi3.
inline std::vector<RationalVector> chamber_samples()
{
    return {{1, 2, 3}, {0, 1, 3}, {Rational(-2), Rational(1, 2), Rational(5)}, {1, 5, 6}};
}

struct NamedGraph {
    std::string name;
    GkmGraph graph;
    RationalVector xi;
};

inline std::vector<NamedGraph> builtin_graphs(std::size_t max_perm = 3)
{
    std::vector<NamedGraph> out;
    for (std::size_t n = 2; n <= 6; ++n)
        out.push_back({"complete_graph(" + std::to_string(n) + ")", complete_graph(n), complete_graph_default_xi(n)});
    for (std::size_t n = 2; n <= max_perm; ++n)
        out.push_back({"permutahedron(" + std::to_string(n) + ")", permutahedron(n), permutahedron_default_xi(n)});
    return out;
}

/// K4 on p, r, q, s with weights u_a - u_b: the triangle p, r, q is totally geodesic and
/// p -> r -> q is a longest path with sigma_q = sigma_p + 2.
inline std::pair<GkmGraph, RationalVector> nearby_paths_graph()
{
    std::vector<LinearForm> u{{0, 0, 0}, {1, 0, 0}, {1, 2, 0}, {0, 1, 3}};
    GkmGraph g(3, {"p", "r", "q", "s"});
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            g.add_edge(a, b, u[a] - u[b]);
    derive_connection(g);
    return {std::move(g), RationalVector{-1, -1, -2}};
}

inline std::vector<LinearForm> random_distinct_forms(std::mt19937& rng, std::size_t count, std::size_t dim)
{
    std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
    std::vector<LinearForm> out;
    while (out.size() < count) {
        RationalVector c;
        for (std::size_t i = 0; i < dim; ++i) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            c.push_back(q);
        }
        LinearForm f(c);
        bool fresh = true;
        for (const auto& h : out)
            fresh = fresh && !(h == f);
        if (fresh)
            out.push_back(f);
    }
    return out;
}

inline void golden_table(Checker& ck)
{
    auto g = permutahedron(3);
    const LinearForm s = root1() + root2();
    auto P = [](const LinearForm& f) { return Polynomial::from_linear(f); };
    const Polynomial z(3);
    const Polynomial one = Polynomial::constant(3, 1);
    // columns tau_c; rows in the order 1, (12), (23), (231), (312), (13)
    const std::vector<std::pair<std::string, std::vector<Polynomial>>> expected{
        {"1", {one, one, one, one, one, one}},
        {"(12)", {z, -P(root1()), z, -P(s), -P(root1()), -P(s)}},
        {"(23)", {z, z, -P(root2()), -P(root2()), -P(s), -P(s)}},
        {"(231)", {z, z, z, P(root2()) * P(s), z, P(root2()) * P(s)}},
        {"(312)", {z, z, z, z, P(root1()) * P(s), P(root1()) * P(s)}},
        {"(13)", {z, z, z, z, z, -P(root1()) * P(root2()) * P(s)}},
    };
    auto pol = orient(g, permutahedron_default_xi(3));
    for (const auto& [label, values] : expected) {
        auto t = thom_plus_paths(pol, g.vertex(label));
        for (std::size_t v = 0; v < 6; ++v)
            ck.equal(t[v], values[v], "tau_" + label + "(" + g.label(v) + ")");
    }
}

inline void flag_path_weights(Checker& ck)
{
    auto g = permutahedron(3);
    std::size_t from = g.vertex("(12)"), to = g.vertex("(13)");
    const auto &a1 = root1(), &a2 = root2();
    for (const auto& xi : chamber_samples()) {
        auto pol = orient(g, xi);
        Rational a = a1.pair(xi), b = a2.pair(xi);
        LinearForm d = b * a1 - a * a2;
        RationalExpr e1 = ((lin(a * a2) * lin(a1 + a2)) / d).reduce();
        RationalExpr e2 = ((lin(-b * a1) * lin(a1 + a2)) / d).reduce();
        auto paths = ascending_paths(pol, from, to);
        ck.equal(paths.size(), std::size_t{2}, "number of paths (12) to (13)");
        RationalExpr sum(3);
        for (const auto& path : paths) {
            auto w = path_weight(pol, path);
            sum += w;
            bool first = g.label(g.edge(path.front()).to) == "(231)";
            ck.equal(w, first ? e1 : e2, std::string(first ? "E(gamma_1)" : "E(gamma_2)"));
        }
        ck.equal(sum.reduce(), lin(-(a1 + a2)), "E(gamma_1) + E(gamma_2)");
    }
}

inline void minimum_class(Checker& ck)
{
    for (const auto& [name, g, xi] : builtin_graphs(4)) {
        auto pol = orient(g, xi);
        auto t = thom_plus_paths(pol, pol.order().front());
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            ck.equal(t[v], Polynomial::constant(g.dimension(), 1), name + " at " + g.label(v));
    }
}

inline void complete_closed_form(Checker& ck)
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
                ck.equal(t[j], expected, "n=" + std::to_string(n) + " tau_" + g.name(i) + "(" + g.name(j) + ")");
            }
        }
    }
}

inline void algorithms_agree(Checker& ck)
{
    for (const auto& [name, g, xi] : builtin_graphs(3)) {
        auto pol = orient(g, xi);
        for (std::size_t p = 0; p < g.vertex_count(); ++p)
            ck.expect(thom_plus_paths(pol, p) == thom_plus_inductive(pol, p),
                      [&] { return name + ": algorithms differ at base " + g.label(p); });
    }
}

inline void pairing_identity(Checker& ck)
{
    for (const auto& g : {permutahedron(3), complete_graph(5)}) {
        RationalVector xi = g.names().front() == "p1" ? complete_graph_default_xi(5) : permutahedron_default_xi(3);
        ThomBasis basis(orient(g, xi));
        for (std::size_t p = 0; p < g.vertex_count(); ++p)
            for (std::size_t q = 0; q < g.vertex_count(); ++q)
                ck.equal(pairing(basis, p, q), Polynomial::constant(g.dimension(), p == q ? 1 : 0),
                         "pairing " + g.label(p) + ", " + g.label(q));
    }
}

inline void structure_constants(Checker& ck)
{
    auto g = permutahedron(3);
    ThomBasis basis(orient(g, permutahedron_default_xi(3)));
    const auto& pol = basis.polarization();
    for (std::size_t p = 0; p < 6; ++p)
        for (std::size_t q = 0; q < 6; ++q) {
            auto coef = expand_in_thom_basis(basis, product(basis.plus(p), basis.plus(q)));
            for (std::size_t r = 0; r < 6; ++r)
                ck.equal(RationalExpr(coef[r]), structure_constant_paths(pol, p, q, r),
                         "c^" + g.label(r) + "_" + g.label(p) + g.label(q));
        }
}

inline void markov(Checker& ck)
{
    const std::vector<NamedGraph> graphs{{"permutahedron(3)", permutahedron(3), permutahedron_default_xi(3)},
                                         {"permutahedron(3) xi=(0,1,3)", permutahedron(3), {0, 1, 3}},
                                         {"complete_graph(4)", complete_graph(4), complete_graph_default_xi(4)}};
    for (const auto& [name, g, xi] : graphs) {
        auto pol = orient(g, xi);
        auto values = regular_values(pol);
        const std::size_t n = g.dimension();
        // sources start above the minimum so that the source section is nonempty
        for (std::size_t i = 1; i + 1 < values.size(); ++i) {
            auto step = single_step_transfer(pol, values[i], values[i + 1]);
            ck.expect(step.markov_defects(n).empty(), [&] { return name + ": single step " + std::to_string(i); });
            for (std::size_t j = i + 1; j < values.size(); ++j) {
                auto t = compose_transfer(pol, values[i], values[j]);
                ck.expect(t.markov_defects(n).empty(),
                          [&] { return name + ": composed " + std::to_string(i) + ".." + std::to_string(j); });
            }
        }
    }
}

inline void interpolation(Checker& ck)
{
    std::mt19937 rng(20240611);
    const std::size_t dim = 3;
    for (std::size_t n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 50; ++trial) {
            auto x = random_distinct_forms(rng, n, dim);
            const std::string where = "size " + std::to_string(n) + " set " + std::to_string(trial);
            // sum_j prod_{l != j} (-x_l) / (x_j - x_l) = 1
            RationalExpr unit(dim);
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<LinearForm> top;
                for (std::size_t l = 0; l < n; ++l)
                    if (l != j)
                        top.push_back(-x[l]);
                unit += RationalExpr::of_products(dim, top, {}) * detail::inverse_node_product(x, j);
            }
            ck.equal(unit.reduce(), RationalExpr::constant(dim, 1), where + " unit sum");
            // sum_j x_j^k / prod_{l != j} (x_j - x_l) = 0 for k < n - 1, 1 for k = n - 1
            for (std::size_t k = 0; k < n; ++k) {
                RationalExpr s(dim);
                for (std::size_t j = 0; j < n; ++j)
                    s += RationalExpr(Polynomial::from_linear(x[j]).pow(static_cast<unsigned>(k))) *
                         detail::inverse_node_product(x, j);
                ck.equal(s.reduce(), RationalExpr::constant(dim, k + 1 == n ? 1 : 0),
                         where + " power " + std::to_string(k));
            }
        }
    for (std::size_t n = 1; n <= 6; ++n) {
        auto x = random_distinct_forms(rng, n, dim);
        auto prod = multiply(vandermonde_inverse(x), vandermonde(x));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                ck.equal(prod[i][j], RationalExpr::constant(dim, i == j ? 1 : 0),
                         "vandermonde size " + std::to_string(n));
    }
}

inline void nearby_paths(Checker& ck, const std::optional<std::pair<GkmGraph, RationalVector>>& extra = std::nullopt)
{
    auto check = [&](const std::string& name, const GkmGraph& g, const RationalVector& xi, std::size_t p,
                     std::size_t r, std::size_t q) {
        auto pol = orient(g, xi);
        std::size_t e = *g.find_edge(p, q), e1 = *g.find_edge(p, r), e2 = *g.find_edge(r, q);
        const std::string where = name + " " + g.label(p) + "," + g.label(r) + "," + g.label(q);
        bool hyp = ck.expect(pol.ascending(e) && pol.ascending(e1) && pol.ascending(e2),
                             [&] { return where + ": edges not ascending"; });
        hyp = hyp && ck.equal(pol.sigma(q), pol.sigma(p) + 2, where + " index gap");
        hyp = hyp && ck.equal(totally_geodesic_subgraph(g, {g.weight(e1), g.weight(e2)}).vertex_count(),
                              std::size_t{3}, where + " geodesic triangle");
        if (!hyp)
            return;
        auto lhs = (path_weight(pol, {e}) + path_weight(pol, {e1, e2})).reduce();
        auto rhs = (RationalExpr(pol.nu_plus(q)) / g.weight(e) / g.weight(e2)).reduce();
        ck.equal(lhs, rhs, where);
    };
    auto [g, xi] = nearby_paths_graph();
    check("K4", g, xi, g.vertex("p"), g.vertex("r"), g.vertex("q"));
    if (extra)
        check("file", extra->first, extra->second, extra->first.vertex("p"), extra->first.vertex("r"),
              extra->first.vertex("q"));
    for (std::size_t n = 3; n <= 5; ++n) {
        auto k = complete_graph(n);
        for (std::size_t i = 0; i + 2 < n; ++i)
            check("complete_graph(" + std::to_string(n) + ")", k, complete_graph_default_xi(n), i, i + 1, i + 2);
    }
}

inline void property_suite(Checker& ck)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (const auto& [name, g, xi0] : builtin_graphs(4)) {
        // Betti numbers under random polarizations
        auto reference = betti(g, xi0);
        int tried = 0;
        for (int attempt = 0; tried < 6 && attempt < 1000; ++attempt) {
            RationalVector xi;
            for (std::size_t i = 0; i < g.dimension(); ++i)
                xi.push_back(d(rng));
            try {
                auto pol = orient(g, xi);
                ++tried;
                ck.expect(betti(pol) == reference, [&] { return name + ": Betti numbers change"; });
                for (std::size_t e = 0; e < g.edge_count(); ++e) {
                    const auto& E = g.edge(e);
                    if (pol.ascending(e) && count_ascending_paths(pol, E.from, E.to) == 1)
                        ck.expect(pol.sigma(E.to) <= pol.sigma(E.from) + 1,
                                  [&] { return name + ": index jump along " + g.edge_label(e); });
                }
            } catch (const Error&) {
            }
        }
        ck.expect(tried >= 5, [&] { return name + ": fewer than five polarizations"; });

        // support, leading value, degree and polynomiality of every class
        ThomBasis basis(orient(g, xi0));
        const auto& pol = basis.polarization();
        for (std::size_t p = 0; p < g.vertex_count(); ++p)
            for (int sign : {1, -1}) {
                const auto& P = sign > 0 ? pol : basis.reversed();
                const CohomologyClass* t = nullptr;
                try {
                    t = sign > 0 ? &basis.plus(p) : &basis.minus(p);
                } catch (const Error& err) {
                    ck.expect(false, [&] { return name + ": " + err.what(); });
                    continue;
                }
                auto up = flow_up(P, p);
                std::vector<std::size_t> support;
                for (std::size_t v = 0; v < g.vertex_count(); ++v)
                    if (up[v])
                        support.push_back(v);
                const std::string where = name + (sign > 0 ? " tau+_" : " tau-_") + g.label(p);
                ck.expect(t->support() == support, [&] { return where + ": support is not the flow-up"; });
                ck.equal((*t)[p], sign > 0 ? pol.nu_plus(p) : pol.nu_minus(p), where + " leading value");
                ck.expect(t->degree == P.sigma(p), [&] { return where + ": degree"; });
                ck.expect(static_cast<bool>(is_cocycle(*t)), [&] { return where + ": not a cocycle"; });
            }
    }
}

} // namespace checks

struct CheckSpec {
    int id;
    std::string title;
    double budget;
    std::function<void(Checker&)> run;
};

inline std::vector<CheckSpec> acceptance_checks(std::optional<std::pair<GkmGraph, RationalVector>> nearby_file = std::nullopt)
{
    return {
        {1, "permutahedron(3) Thom class table", 1, checks::golden_table},
        {2, "path weights (12) to (13) on permutahedron(3)", 0, checks::flag_path_weights},
        {3, "minimum-vertex class is 1", 60, checks::minimum_class},
        {4, "complete graph closed form", 0, checks::complete_closed_form},
        {5, "path sum equals inductive construction", 0, checks::algorithms_agree},
        {6, "pairing matrix is the identity", 0, checks::pairing_identity},
        {7, "structure constants: expansion equals path formula", 30, checks::structure_constants},
        {8, "transfer matrices have column sums 1", 0, checks::markov},
        {9, "interpolation and Vandermonde identities", 0, checks::interpolation},
        {10, "nearby-path cancellation", 0, [f = std::move(nearby_file)](Checker& ck) { checks::nearby_paths(ck, f); }},
        {11, "property suite", 0, checks::property_suite},
    };
}

/// Runs one check; an escaping exception counts as a failure.
inline CheckResult run_check(const CheckSpec& entry)
{
    CheckResult r;
    r.id = entry.id;
    r.title = entry.title;
    r.budget = entry.budget;
    Checker ck(r);
    auto start = std::chrono::steady_clock::now();
    try {
        entry.run(ck);
    } catch (const std::exception& e) {
        ck.expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.budget > 0 && r.seconds > r.budget)
        ck.expect(false, [&] { return "time budget exceeded"; });
    return r;
}

} // namespace gkm
