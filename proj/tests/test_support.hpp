#pragma once

#include "gkmthom/rational.hpp"
#include "gkmthom/linear_form.hpp"
#include "gkmthom/polynomial.hpp"
#include "gkmthom/rational_expr.hpp"

#include <ostream>
#include <random>
#include <vector>

namespace gkm {

inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const RationalExpr& r, std::ostream* os) { *os << r.to_string(); }
inline void PrintTo(const LinearForm& f, std::ostream* os) { *os << Polynomial::from_linear(f).to_string(); }

} // namespace gkm

namespace gkm::testing {

/// Seeded source of small random rationals, linear forms and polynomials.
class RandomSource {
public:
    explicit RandomSource(unsigned seed) : rng_(seed) {}

    Rational rational(int max_num = 7, int max_den = 4)
    {
        std::uniform_int_distribution<int> num(-max_num, max_num);
        std::uniform_int_distribution<int> den(1, max_den);
        Rational q(num(rng_), den(rng_));
        q.canonicalize();
        return q;
    }

    RationalVector vector(std::size_t n)
    {
        RationalVector v;
        for (std::size_t i = 0; i < n; ++i)
            v.push_back(rational());
        return v;
    }

    LinearForm form(std::size_t n) { return LinearForm(vector(n)); }

    LinearForm nonzero_form(std::size_t n)
    {
        for (;;) {
            auto f = form(n);
            if (!f.is_zero())
                return f;
        }
    }

    /// Pairwise distinct linear forms.
    std::vector<LinearForm> distinct_forms(std::size_t count, std::size_t n)
    {
        std::vector<LinearForm> out;
        while (out.size() < count) {
            auto f = form(n);
            bool fresh = true;
            for (const auto& g : out)
                fresh = fresh && !(g == f);
            if (fresh)
                out.push_back(f);
        }
        return out;
    }

    Polynomial polynomial(std::size_t n, int max_degree, int terms)
    {
        std::uniform_int_distribution<int> deg(0, max_degree);
        std::uniform_int_distribution<std::size_t> var(0, n - 1);
        Polynomial p(n);
        for (int t = 0; t < terms; ++t) {
            Monomial m(n, 0);
            int d = deg(rng_);
            for (int k = 0; k < d; ++k)
                m[var(rng_)] += 1;
            p += Polynomial::monomial(m, rational());
        }
        return p;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

/// Solves a square linear system over Q by Gaussian elimination; returns empty on singularity.
inline RationalVector solve_linear(std::vector<RationalVector> a, RationalVector b)
{
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            return {};
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        b[i] /= a[i][i];
    return b;
}

} // namespace gkm::testing
