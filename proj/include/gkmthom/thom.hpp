#pragma once

#include "gkmthom/cohomology.hpp"
#include "gkmthom/parallel.hpp"
#include "gkmthom/polarization.hpp"
#include "gkmthom/rational_expr.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

/// Edge ids e_1..e_m with t(e_{k-1}) = i(e_k).
using Path = std::vector<std::size_t>;

/// Vertices reachable from p by ascending paths, p included.
inline std::vector<bool> flow_up(const Polarization& pol, std::size_t p)
{
    const auto& g = pol.graph();
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::size_t> stack{p};
    seen[p] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (auto e : pol.ascending_edges(v)) {
            std::size_t w = g.edge(e).to;
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

/// Vertices from which q is reachable by an ascending path, q included.
inline std::vector<bool> flow_down(const Polarization& pol, std::size_t q)
{
    const auto& g = pol.graph();
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::size_t> stack{q};
    seen[q] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (auto e : pol.descending(v)) {
            std::size_t w = g.edge(e).to;
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

/// All ascending paths from p to q by depth-first search; the empty path when p == q.
inline std::vector<Path> ascending_paths(const Polarization& pol, std::size_t p, std::size_t q)
{
    const auto& g = pol.graph();
    std::vector<Path> out;
    Path current;
    auto dfs = [&](auto&& self, std::size_t v) -> void {
        if (v == q) {
            out.push_back(current);
            return;
        }
        for (auto e : pol.ascending_edges(v)) {
            current.push_back(e);
            self(self, g.edge(e).to);
            current.pop_back();
        }
    };
    dfs(dfs, p);
    return out;
}

namespace detail {

/// Descending edges at t(e) other than the reversal of e.
inline std::vector<std::size_t> other_descending(const Polarization& pol, std::size_t e)
{
    const auto& g = pol.graph();
    std::vector<std::size_t> r;
    for (auto x : pol.descending(g.edge(e).to))
        if (x != g.reverse(e))
            r.push_back(x);
    return r;
}

/// rho_e applied to each weight of the given edges.
inline std::vector<LinearForm> rho_weights(const Polarization& pol, std::size_t e, const std::vector<std::size_t>& edges)
{
    const auto& g = pol.graph();
    std::vector<LinearForm> out;
    out.reserve(edges.size());
    for (auto x : edges)
        out.push_back(rho(g.weight(e), pol.xi(), g.weight(x)));
    return out;
}

inline void require_ascending(const Polarization& pol, std::size_t e, const char* what)
{
    if (!pol.ascending(e))
        throw Error(std::string(what) + ": edge " + pol.graph().edge_name(e) + " is not ascending");
}

} // namespace detail

/// Q(e) = prod' alpha / rho_e(prod' alpha), over the descending edges at t(e) other than
/// the reversal of e.
inline RationalExpr transfer_weight(const Polarization& pol, std::size_t e)
{
    const auto& g = pol.graph();
    auto rest = detail::other_descending(pol, e);
    return RationalExpr::quotient(g.weight_product(rest), detail::rho_weights(pol, e, rest));
}

/// Q(e, e') = rho_{e'}(prod' alpha) / rho_e(prod' alpha), at t(e) = i(e').
inline RationalExpr transfer_weight(const Polarization& pol, std::size_t e, std::size_t e_next)
{
    const auto& g = pol.graph();
    if (g.edge(e).to != g.edge(e_next).from)
        throw Error("transfer_weight: edges " + g.edge_name(e) + " and " + g.edge_name(e_next) + " are not consecutive");
    auto rest = detail::other_descending(pol, e);
    return RationalExpr::quotient(Polynomial::product_of(g.dimension(), detail::rho_weights(pol, e_next, rest)),
                                  detail::rho_weights(pol, e, rest));
}

/// Q(gamma): product of Q(e_{k-1}, e_k) over consecutive pairs.
inline RationalExpr transfer_weight(const Polarization& pol, const Path& path)
{
    RationalExpr q = RationalExpr::constant(pol.graph().dimension(), 1);
    for (std::size_t k = 1; k < path.size(); ++k)
        q *= transfer_weight(pol, path[k - 1], path[k]);
    return q;
}

/// Theta_pq for the ascending edge e: p -> q, as the full quotient
/// prod_{E_p^-} rho_e(alpha) / prod_{E_q^- - {reverse e}} rho_e(alpha).
inline RationalExpr theta_uncancelled(const Polarization& pol, std::size_t e)
{
    detail::require_ascending(pol, e, "theta");
    const auto& g = pol.graph();
    auto top = detail::rho_weights(pol, e, pol.descending(g.edge(e).from));
    return RationalExpr::quotient(Polynomial::product_of(g.dimension(), top),
                                  detail::rho_weights(pol, e, detail::other_descending(pol, e)));
}

/// Theta_pq after cancelling the pairs matched by the connection: rho_e(Z_pq) / rho_e(Z_qp).
inline RationalExpr theta(const Polarization& pol, std::size_t e)
{
    detail::require_ascending(pol, e, "theta");
    const auto& g = pol.graph();
    const auto& ed = g.edge(e);
    auto is_down = [&](std::size_t x) { return !pol.ascending(x); };
    std::vector<std::size_t> zpq, zqp;
    for (auto x : pol.descending(ed.from))
        if (!is_down(g.theta(e, x)))
            zpq.push_back(x);
    for (auto x : pol.descending(ed.to))
        if (x != ed.reverse && !is_down(g.theta(ed.reverse, x)))
            zqp.push_back(x);
    return RationalExpr::quotient(Polynomial::product_of(g.dimension(), detail::rho_weights(pol, e, zpq)),
                                  detail::rho_weights(pol, e, zqp))
        .reduce();
}

struct Iota {
    RationalExpr value;
    /// e is the only ascending path from i(e) to t(e).
    bool global = false;
};

/// iota_e = Theta / alpha_e(xi).
inline Iota iota(const Polarization& pol, std::size_t e)
{
    const auto& ed = pol.graph().edge(e);
    Iota r{theta(pol, e) / pol.pairing(e), count_ascending_paths(pol, ed.from, ed.to) == 1};
    r.value.reduce();
    return r;
}

/// E(gamma) = Q(e_m) Q(gamma) rho_{e_1}(nu^+_{p0}).
inline RationalExpr path_weight_transfer(const Polarization& pol, const Path& path)
{
    if (path.empty())
        throw Error("path_weight: empty path");
    const auto& g = pol.graph();
    Polynomial seed = rho(g.weight(path.front()), pol.xi(), pol.nu_plus(g.edge(path.front()).from));
    return transfer_weight(pol, path.back()) * transfer_weight(pol, path) * RationalExpr(seed);
}

/// E(gamma) = (-1)^m nu_q^+ (iota_1 / hat_m) prod_{k>=2} iota_k / (hat_{k-1} - hat_k).
inline RationalExpr path_weight_iota(const Polarization& pol, const Path& path)
{
    if (path.empty())
        throw Error("path_weight: empty path");
    const auto& g = pol.graph();
    const std::size_t m = path.size();
    std::vector<LinearForm> hats;
    for (auto e : path)
        hats.push_back(hat(g.weight(e), pol.xi()));
    RationalExpr r(pol.nu_plus(g.edge(path.back()).to));
    if (m % 2 == 1)
        r = -r;
    r *= iota(pol, path[0]).value;
    r.divide_in_place(hats[m - 1]);
    for (std::size_t k = 1; k < m; ++k) {
        r *= iota(pol, path[k]).value;
        r.divide_in_place(hats[k - 1] - hats[k]);
    }
    return r;
}

/// E(gamma) by both closed forms; throws if they disagree.
inline RationalExpr path_weight(const Polarization& pol, const Path& path)
{
    RationalExpr a = path_weight_transfer(pol, path).reduce();
    RationalExpr b = path_weight_iota(pol, path);
    if (!(a == b))
        throw Error("internal consistency failure: path weight formulas disagree on a path of length " +
                    std::to_string(path.size()) + ": " + a.to_string() + " vs " + b.to_string());
    return a;
}

/// tau^+_{p0}(q) as the sum of E(gamma) over ascending paths p0 ~> q, with nu^+_{p0}
/// for the empty path. Each vertex sum must reduce to a polynomial.
inline CohomologyClass thom_plus_paths(const Polarization& pol, std::size_t p0)
{
    const auto& g = pol.graph();
    const std::size_t nv = g.vertex_count();
    const auto up = flow_up(pol, p0);
    std::vector<Polynomial> values(nv, Polynomial(g.dimension()));
    const Polynomial nu = pol.nu_plus(p0);
    values[p0] = nu;

    std::vector<std::size_t> targets;
    for (std::size_t q = 0; q < nv; ++q)
        if (up[q] && q != p0)
            targets.push_back(q);

    parallel_for(targets.size(), [&](std::size_t i) {
        const std::size_t q = targets[i];
        const auto reach = flow_down(pol, q);
        RationalExpr sum(g.dimension());
        // prefix = Q(e_1..e_k) rho_{e_1}(nu), extended edge by edge
        auto dfs = [&](auto&& self, std::size_t e, const RationalExpr& prefix) -> void {
            std::size_t v = g.edge(e).to;
            if (v == q) {
                sum += (transfer_weight(pol, e) * prefix).reduce();
                sum.reduce();
                return;
            }
            for (auto x : pol.ascending_edges(v))
                if (reach[g.edge(x).to])
                    self(self, x, (prefix * transfer_weight(pol, e, x)).reduce());
        };
        for (auto e : pol.ascending_edges(p0))
            if (reach[g.edge(e).to])
                dfs(dfs, e, RationalExpr(rho(g.weight(e), pol.xi(), nu)));
        auto value = sum.as_polynomial();
        if (!value)
            throw Error("Thom class of '" + g.name(p0) + "' is not polynomial at '" + g.name(q) + "': " +
                        sum.reduced().to_string());
        values[q] = std::move(*value);
    });
    return CohomologyClass(g, std::move(values), pol.sigma(p0));
}

/// tau^+_{p0} vertex by vertex in increasing phi: nu^+_{p0} at p0, zero at the other
/// vertices below or outside the flow-up, and elsewhere
///   psi = sum_j [prod_{k!=j} alpha_k / rho_j(prod_{k!=j} alpha_k)] rho_j(tau(q_j))
/// over the descending edges p -> q_j. Every congruence alpha_j | psi - tau(q_j) is checked.
inline CohomologyClass thom_plus_inductive(const Polarization& pol, std::size_t p0)
{
    const auto& g = pol.graph();
    std::vector<Polynomial> values(g.vertex_count(), Polynomial(g.dimension()));
    for (auto p : pol.order()) {
        if (pol.phi(p) < pol.phi(p0))
            continue;
        if (p == p0) {
            values[p] = pol.nu_plus(p0);
            continue;
        }
        const auto& down = pol.descending(p);
        RationalExpr psi(g.dimension());
        for (std::size_t j = 0; j < down.size(); ++j) {
            const Polynomial& target = values[g.edge(down[j]).to];
            if (target.is_zero())
                continue;
            std::vector<std::size_t> others;
            for (std::size_t k = 0; k < down.size(); ++k)
                if (k != j)
                    others.push_back(down[k]);
            RationalExpr coef =
                RationalExpr::quotient(g.weight_product(others), detail::rho_weights(pol, down[j], others));
            psi += coef * RationalExpr(rho(g.weight(down[j]), pol.xi(), target));
        }
        auto value = psi.as_polynomial();
        if (!value)
            throw Error("inductive Thom class of '" + g.name(p0) + "' is not polynomial at '" + g.name(p) + "'");
        for (auto e : down)
            if (!(*value - values[g.edge(e).to]).divided_by(g.weight(e)))
                throw Error("internal consistency failure: congruence along " + g.edge_name(e) +
                            " fails for the Thom class of '" + g.name(p0) + "'");
        values[p] = std::move(*value);
    }
    return CohomologyClass(g, std::move(values), pol.sigma(p0));
}

/// tau^-_{p0}: the path-sum Thom class for -xi.
inline CohomologyClass thom_minus(const Polarization& pol, std::size_t p0)
{
    Polarization rev = pol.reversed();
    return thom_plus_paths(rev, p0);
}

/// Thom classes for one polarization, computed on demand and cached.
class ThomBasis {
public:
    explicit ThomBasis(const Polarization& pol)
        : pol_(pol), rev_(pol.reversed()), plus_(pol.graph().vertex_count()), minus_(pol.graph().vertex_count())
    {
    }

    const Polarization& polarization() const { return pol_; }
    const Polarization& reversed() const { return rev_; }
    const GkmGraph& graph() const { return pol_.graph(); }

    const CohomologyClass& plus(std::size_t p)
    {
        if (!plus_.at(p))
            plus_[p] = thom_plus_paths(pol_, p);
        return *plus_[p];
    }

    const CohomologyClass& minus(std::size_t p)
    {
        if (!minus_.at(p))
            minus_[p] = thom_plus_paths(rev_, p);
        return *minus_[p];
    }

    /// Computes every class (each class's vertex sums run in parallel).
    void compute_all()
    {
        for (std::size_t p = 0; p < plus_.size(); ++p) {
            plus(p);
            minus(p);
        }
    }

private:
    Polarization pol_;
    Polarization rev_;
    std::vector<std::optional<CohomologyClass>> plus_;
    std::vector<std::optional<CohomologyClass>> minus_;
};

/// Integral of tau^+_p tau^-_q.
inline Polynomial pairing(ThomBasis& basis, std::size_t p, std::size_t q)
{
    return integrate(product(basis.plus(p), basis.minus(q)));
}

/// c_pqr = sum_t delta_t sum E(gamma_1) E(gamma_2) E(gamma_3), gamma_1: p ~> t and
/// gamma_2: q ~> t ascending, gamma_3: r ~> t descending, delta_t the inverse product of
/// the weights at t. The path sums at each t are the Thom class values.
inline RationalExpr structure_constant(ThomBasis& basis, std::size_t p, std::size_t q, std::size_t r)
{
    const auto& g = basis.graph();
    const auto& tp = basis.plus(p);
    const auto& tq = basis.plus(q);
    const auto& tr = basis.minus(r);
    RationalExpr c(g.dimension());
    for (std::size_t t = 0; t < g.vertex_count(); ++t) {
        if (tp[t].is_zero() || tq[t].is_zero() || tr[t].is_zero())
            continue;
        std::vector<LinearForm> den;
        for (auto e : g.out_edges(t))
            den.push_back(g.weight(e));
        c += RationalExpr::quotient(tp[t] * tq[t] * tr[t], den);
    }
    return c.reduce();
}

/// The same constant, summing products of individual path weights without first
/// collapsing each path sum.
inline RationalExpr structure_constant_paths(const Polarization& pol, std::size_t p, std::size_t q, std::size_t r)
{
    const auto& g = pol.graph();
    Polarization rev = pol.reversed();
    auto weights = [&](const Polarization& P, std::size_t from, std::size_t t) {
        std::vector<RationalExpr> w;
        for (const auto& path : ascending_paths(P, from, t))
            w.push_back(path.empty() ? RationalExpr(P.nu_plus(from)) : path_weight_transfer(P, path));
        return w;
    };
    RationalExpr c(g.dimension());
    for (std::size_t t = 0; t < g.vertex_count(); ++t) {
        auto w1 = weights(pol, p, t);
        auto w2 = weights(pol, q, t);
        auto w3 = weights(rev, r, t);
        if (w1.empty() || w2.empty() || w3.empty())
            continue;
        std::vector<LinearForm> den;
        for (auto e : g.out_edges(t))
            den.push_back(g.weight(e));
        RationalExpr delta = RationalExpr::quotient(Polynomial::constant(g.dimension(), 1), den);
        for (const auto& a : w1)
            for (const auto& b : w2)
                for (const auto& d : w3)
                    c += (delta * a * b * d).reduce();
        c.reduce();
    }
    return c.reduce();
}

/// Coefficients c_r with f = sum_r c_r tau^+_r, peeled in increasing phi. Throws when a
/// leading value is not divisible by nu^+_p.
inline std::vector<Polynomial> expand_in_thom_basis(ThomBasis& basis, const CohomologyClass& f)
{
    const auto& g = basis.graph();
    const auto& pol = basis.polarization();
    std::vector<Polynomial> residual = f.values;
    std::vector<Polynomial> coef(g.vertex_count(), Polynomial(g.dimension()));
    for (auto p : pol.order()) {
        if (residual[p].is_zero())
            continue;
        Polynomial c = residual[p];
        for (auto e : pol.descending(p)) {
            auto q = c.divided_by(g.weight(e));
            if (!q)
                throw Error("class is not in the span of the Thom classes: value at '" + g.name(p) +
                            "' is not divisible by nu^+");
            c = std::move(*q);
        }
        const auto& tau = basis.plus(p);
        for (std::size_t v = 0; v < residual.size(); ++v)
            if (!tau[v].is_zero())
                residual[v] -= c * tau[v];
        coef[p] = std::move(c);
    }
    for (std::size_t v = 0; v < residual.size(); ++v)
        if (!residual[v].is_zero())
            throw Error("class is not in the span of the Thom classes: residual at '" + g.name(v) + "'");
    return coef;
}

} // namespace gkm
