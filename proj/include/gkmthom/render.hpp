#pragma once

#include "gkmthom/builders.hpp"
#include "gkmthom/rational_expr.hpp"
#include "gkmthom/thom.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace gkm {

/// x: coordinates x1..xn. roots: simple roots a1..a_{n-1} via x_k -> a_1 + ... + a_{k-1}.
enum class Basis { x, roots };

inline LinearForm to_roots(const LinearForm& f)
{
    auto images = simple_root_substitution(f.dimension());
    LinearForm r(f.dimension() > 0 ? f.dimension() - 1 : 0);
    for (std::size_t k = 0; k < f.dimension(); ++k)
        if (f[k] != 0)
            r = r + f[k] * images[k];
    return r;
}

inline std::string render(const Polynomial& p, Basis b)
{
    if (b == Basis::x)
        return p.to_string("x");
    return p.substitute(simple_root_substitution(p.nvars())).to_string("a");
}

inline std::string render(const RationalExpr& r, Basis b)
{
    if (b == Basis::x)
        return r.to_string("x");
    const std::size_t n = r.nvars();
    RationalExpr out(r.numerator().substitute(simple_root_substitution(n)));
    for (const auto& [f, k] : r.denominator()) {
        LinearForm g = to_roots(f);
        if (g.is_zero())
            throw Error("denominator factor " + Polynomial::from_linear(f).to_string() +
                        " has no simple-root expression");
        for (int i = 0; i < k; ++i)
            out.divide_in_place(g);
    }
    return out.to_string("a");
}

/// Left-aligned columns separated by " | ", a dashed rule under the header, no
/// trailing blanks.
inline std::string render_table(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c)
                width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                s += " | ";
            s += row[c];
            if (c + 1 < row.size())
                s += std::string(width[c] - row[c].size(), ' ');
        }
        return s + "\n";
    };
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out += line(rows[r]);
        if (r == 0) {
            std::string rule;
            for (std::size_t c = 0; c < width.size(); ++c) {
                if (c)
                    rule += "-+-";
                rule += std::string(width[c], '-');
            }
            out += rule + "\n";
        }
    }
    return out;
}

/// Rows are evaluation vertices, columns are the classes tau_p^+ in vertex order.
inline std::vector<std::vector<std::string>> thom_table_rows(ThomBasis& basis, Basis b)
{
    const GkmGraph& g = basis.graph();
    std::vector<std::vector<std::string>> rows(1, std::vector<std::string>{""});
    for (std::size_t p = 0; p < g.vertex_count(); ++p)
        rows[0].push_back("tau_" + g.label(p));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::string> row{g.label(v)};
        for (std::size_t p = 0; p < g.vertex_count(); ++p)
            row.push_back(render(basis.plus(p).values[v], b));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace gkm
