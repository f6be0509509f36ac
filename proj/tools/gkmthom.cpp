#include "gkmthom/checks.hpp"
#include "gkmthom/graph_io.hpp"
#include "gkmthom/render.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace gkm;
using nlohmann::json;

enum Exit { ok = 0, check_failed = 1, computation_error = 2, usage = 64 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string graph;
    std::string file;
    std::string xi;
    std::string basis = "auto";
    std::string format = "text";
    std::vector<std::string> vertices;
    std::string class_file;
    std::string from, to;
    bool minus = false;
};

struct Context {
    GkmGraph graph;
    RationalVector xi;
    Basis basis;
};

RationalVector parse_xi(const std::string& text, std::size_t dim)
{
    RationalVector xi;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ','))
        xi.push_back(parse_rational(item));
    if (xi.size() != dim)
        throw UsageError("--xi has " + std::to_string(xi.size()) + " entries, graph dimension is " + std::to_string(dim));
    return xi;
}

std::size_t parse_size(const std::string& text, const std::string& what)
{
    try {
        std::size_t used = 0;
        long n = std::stol(text, &used);
        if (used == text.size() && n > 0)
            return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
    throw UsageError("bad " + what + ": '" + text + "'");
}

/// Loads the graph without validating it (validate reports the problems itself).
LoadedGraph load_source(const Options& o, bool& permutahedron_like)
{
    if (o.graph.empty() == o.file.empty())
        throw UsageError("give exactly one of --graph and --file");
    permutahedron_like = false;
    if (!o.file.empty())
        return parse_graph(read_file(o.file));
    auto colon = o.graph.find(':');
    if (colon == std::string::npos)
        throw UsageError("--graph expects complete:N or permutahedron:N");
    std::string kind = o.graph.substr(0, colon);
    std::size_t n = parse_size(o.graph.substr(colon + 1), "graph size");
    if (kind == "complete")
        return {complete_graph(n), complete_graph_default_xi(n), false, {}};
    if (kind == "permutahedron") {
        permutahedron_like = true;
        return {permutahedron(n), permutahedron_default_xi(n), false, {}};
    }
    throw UsageError("unknown graph family '" + kind + "'");
}

Context make_context(const Options& o)
{
    bool perm = false;
    auto loaded = load_source(o, perm);
    if (!o.file.empty()) {
        auto report = validate(loaded.graph);
        if (!report.ok() || !loaded.graph.has_connection()) {
            std::string msg = "graph failed validation";
            for (const auto& i : report.issues)
                msg += "\n  [" + i.kind + "] " + i.where + ": " + i.detail;
            if (!loaded.connection_error.empty())
                msg += "\n  [connection] " + loaded.connection_error;
            throw Error(msg);
        }
    }
    Context c{loaded.graph, {}, Basis::x};
    if (!o.xi.empty())
        c.xi = parse_xi(o.xi, c.graph.dimension());
    else if (loaded.xi)
        c.xi = *loaded.xi;
    else if (auto found = find_polarization(c.graph, false))
        c.xi = *found;
    else
        throw Error("no polarizing vector found; pass --xi");
    if (o.basis == "roots")
        c.basis = Basis::roots;
    else if (o.basis == "auto")
        c.basis = perm ? Basis::roots : Basis::x;
    return c;
}

std::size_t vertex_arg(const GkmGraph& g, const std::string& key)
{
    if (auto v = g.find_vertex(key))
        return *v;
    throw UsageError("unknown vertex '" + key + "'");
}

/// Text and structured renderings of the same content.
struct Output {
    std::string text;
    json data = json::object();
};

void add_line(Output& out, const std::string& line) { out.text += line + "\n"; }

Output cmd_validate(const Options& o)
{
    bool perm = false;
    auto loaded = load_source(o, perm);
    auto report = validate(loaded.graph);
    Output out;
    json issues = json::array();
    for (const auto& i : report.issues) {
        add_line(out, "[" + i.kind + "] " + i.where + ": " + i.detail);
        issues.push_back({{"kind", i.kind}, {"where", i.where}, {"detail", i.detail}});
    }
    if (!loaded.connection_error.empty()) {
        add_line(out, "[connection] " + loaded.connection_error);
        issues.push_back({{"kind", "connection"}, {"where", ""}, {"detail", loaded.connection_error}});
    }
    bool good = issues.empty();
    if (good) {
        add_line(out, "valid: " + std::to_string(loaded.graph.vertex_count()) + " vertices, " +
                          std::to_string(loaded.graph.edge_count() / 2) + " edges" +
                          (loaded.connection_derived ? ", connection derived" : ""));
        add_line(out, std::string("connection constants ") + (report.integral_constants() ? "integral" : "not all integral"));
    }
    out.data = {{"valid", good},
                {"issues", issues},
                {"connection_derived", loaded.connection_derived},
                {"integral_constants", report.integral_constants()}};
    return out;
}

Output cmd_betti(const Options& o)
{
    auto c = make_context(o);
    auto b = betti(orient(c.graph, c.xi));
    Output out;
    std::string line;
    for (std::size_t k = 0; k < b.size(); ++k)
        line += (k ? " " : "") + std::to_string(b[k]);
    add_line(out, line);
    out.data = {{"betti", b}};
    return out;
}

Output cmd_thom(const Options& o)
{
    auto c = make_context(o);
    if (o.vertices.size() != 1)
        throw UsageError("thom needs exactly one --vertex");
    auto pol = orient(c.graph, c.xi);
    std::size_t p = vertex_arg(c.graph, o.vertices[0]);
    auto t = o.minus ? thom_minus(pol, p) : thom_plus_paths(pol, p);
    Output out;
    for (std::size_t v = 0; v < c.graph.vertex_count(); ++v) {
        std::string value = render(t[v], c.basis);
        add_line(out, c.graph.label(v) + ": " + value);
        out.data[c.graph.label(v)] = value;
    }
    return out;
}

Output cmd_table(const Options& o)
{
    auto c = make_context(o);
    ThomBasis basis(orient(c.graph, c.xi));
    auto rows = thom_table_rows(basis, c.basis);
    Output out;
    out.text = render_table(rows);
    out.data = {{"header", rows.front()}, {"rows", std::vector<std::vector<std::string>>(rows.begin() + 1, rows.end())}};
    return out;
}

Output cmd_pair(const Options& o)
{
    auto c = make_context(o);
    ThomBasis basis(orient(c.graph, c.xi));
    const auto& g = c.graph;
    std::vector<std::vector<std::string>> rows(1, std::vector<std::string>{""});
    for (std::size_t q = 0; q < g.vertex_count(); ++q)
        rows[0].push_back("tau-_" + g.label(q));
    bool identity = true;
    for (std::size_t p = 0; p < g.vertex_count(); ++p) {
        std::vector<std::string> row{"tau+_" + g.label(p)};
        for (std::size_t q = 0; q < g.vertex_count(); ++q) {
            auto v = pairing(basis, p, q);
            identity = identity && v == Polynomial::constant(g.dimension(), p == q ? 1 : 0);
            row.push_back(render(v, c.basis));
        }
        rows.push_back(std::move(row));
    }
    Output out;
    out.text = render_table(rows) + (identity ? "identity\n" : "NOT the identity\n");
    out.data = {{"header", rows.front()},
                {"rows", std::vector<std::vector<std::string>>(rows.begin() + 1, rows.end())},
                {"identity", identity}};
    return out;
}

Output cmd_structconst(const Options& o)
{
    auto c = make_context(o);
    if (o.vertices.size() != 2)
        throw UsageError("structconst needs two --vertex options (p and q)");
    ThomBasis basis(orient(c.graph, c.xi));
    const auto& g = c.graph;
    std::size_t p = vertex_arg(g, o.vertices[0]), q = vertex_arg(g, o.vertices[1]);
    auto coef = expand_in_thom_basis(basis, product(basis.plus(p), basis.plus(q)));
    Output out;
    bool agree = true;
    for (std::size_t r = 0; r < g.vertex_count(); ++r) {
        agree = agree && RationalExpr(coef[r]) == structure_constant_paths(basis.polarization(), p, q, r);
        std::string value = render(coef[r], c.basis);
        add_line(out, g.label(r) + ": " + value);
        out.data["coefficients"][g.label(r)] = value;
    }
    add_line(out, agree ? "path formula agrees" : "path formula DISAGREES");
    out.data["path_formula_agrees"] = agree;
    return out;
}

Output cmd_transfer(const Options& o)
{
    auto c = make_context(o);
    auto pol = orient(c.graph, c.xi);
    const auto& g = c.graph;
    auto levels = regular_values(pol);
    auto level = [&](const std::string& s, const Rational& fallback) { return s.empty() ? fallback : parse_rational(s); };
    Rational from = level(o.from, levels[1]), to = level(o.to, levels[levels.size() - 2]);
    auto t = compose_transfer(pol, from, to);
    std::vector<std::vector<std::string>> rows(1, std::vector<std::string>{""});
    for (auto e : t.target.edges)
        rows[0].push_back(g.edge_label(e));
    for (std::size_t i = 0; i < t.source.edges.size(); ++i) {
        std::vector<std::string> row{g.edge_label(t.source.edges[i])};
        for (std::size_t j = 0; j < t.target.edges.size(); ++j)
            row.push_back(render(t(i, j), c.basis));
        rows.push_back(std::move(row));
    }
    auto defects = t.markov_defects(g.dimension());
    Output out;
    out.text = "levels " + to_string(from) + " -> " + to_string(to) + (t.generic ? "" : " (non-generic crossing)") + "\n";
    out.text += render_table(rows);
    out.text += defects.empty() ? "column sums 1\n" : std::to_string(defects.size()) + " columns do not sum to 1\n";
    out.data = {{"from", to_string(from)},
                {"to", to_string(to)},
                {"generic", t.generic},
                {"header", rows.front()},
                {"rows", std::vector<std::vector<std::string>>(rows.begin() + 1, rows.end())},
                {"markov", defects.empty()}};
    return out;
}

Output cmd_integrate(const Options& o)
{
    auto c = make_context(o);
    const auto& g = c.graph;
    CohomologyClass f = CohomologyClass::constant(g, 1);
    if (!o.class_file.empty())
        f = class_from_json(g, json::parse(read_file(o.class_file)));
    else if (!o.vertices.empty()) {
        ThomBasis basis(orient(g, c.xi));
        for (const auto& v : o.vertices)
            f = product(f, basis.plus(vertex_arg(g, v)));
    } else
        throw UsageError("integrate needs --class FILE or one or more --vertex");
    auto value = render(integrate(f), c.basis);
    Output out;
    add_line(out, value);
    out.data = {{"integral", value}};
    return out;
}

Output cmd_demo(const Options&)
{
    Output out;
    json results = json::array();
    bool all = true;
    for (const auto& entry : acceptance_checks()) {
        auto r = run_check(entry);
        all = all && r.ok;
        add_line(out, std::string(r.ok ? "PASS" : "FAIL") + " " + std::to_string(r.id) + ". " + r.title);
        for (const auto& f : r.failures)
            add_line(out, "    " + f);
        results.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.ok}, {"failures", r.failures}});
    }
    out.data = {{"checks", results}, {"pass", all}};
    return out;
}

bool succeeded(const std::string& name, const Output& out)
{
    if (name == "validate")
        return out.data.value("valid", false);
    if (name == "demo" || name == "pair" || name == "structconst" || name == "transfer") {
        for (const char* key : {"pass", "identity", "path_formula_agrees", "markov"})
            if (out.data.contains(key) && !out.data[key].get<bool>())
                return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Equivariant cohomology of GKM graphs: Thom classes, integrals, transfer matrices"};
    app.require_subcommand(1, 1);
    Options o;

    auto common = [&](CLI::App* sub, bool needs_graph = true) {
        if (!needs_graph)
            return sub;
        sub->add_option("--graph", o.graph, "builder: complete:N or permutahedron:N");
        sub->add_option("--file", o.file, "graph file (JSON)");
        sub->add_option("--xi", o.xi, "polarizing vector, comma-separated rationals");
        sub->add_option("--basis", o.basis, "rendering: x, roots or auto")->check(CLI::IsMember({"x", "roots", "auto"}));
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        return sub;
    };

    std::vector<std::pair<CLI::App*, Output (*)(const Options&)>> commands;
    auto add = [&](const char* name, const char* help, Output (*fn)(const Options&), bool graph = true) {
        auto* sub = common(app.add_subcommand(name, help), graph);
        commands.emplace_back(sub, fn);
        return sub;
    };
    add("validate", "check the GKM axioms and the connection", cmd_validate);
    add("betti", "Betti numbers from vertex indices", cmd_betti);
    add("thom", "Thom class of one vertex", cmd_thom)
        ->add_option("--vertex", o.vertices, "base vertex (name or label)");
    commands.back().first->add_flag("--minus", o.minus, "descending class instead of ascending");
    add("table", "table of all ascending Thom classes", cmd_table);
    add("pair", "pairing matrix of ascending and descending classes", cmd_pair);
    add("structconst", "structure constants c^r_pq for every r", cmd_structconst)
        ->add_option("--vertex", o.vertices, "p then q");
    add("transfer", "composed transfer matrix between two levels", cmd_transfer);
    commands.back().first->add_option("--from", o.from, "source level (default: just above the minimum)");
    commands.back().first->add_option("--to", o.to, "target level (default: just below the maximum)");
    add("integrate", "integral of a class over the graph", cmd_integrate)
        ->add_option("--vertex", o.vertices, "integrate the product of these Thom classes");
    commands.back().first->add_option("--class", o.class_file, "class file: {vertex: polynomial}");
    auto* demo = app.add_subcommand("demo", "run the worked-example check suite");
    demo->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    commands.emplace_back(demo, cmd_demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    for (const auto& [sub, fn] : commands) {
        if (!sub->parsed())
            continue;
        try {
            Output out = fn(o);
            if (o.format == "json")
                std::cout << out.data.dump(2) << "\n";
            else
                std::cout << out.text;
            return succeeded(sub->get_name(), out) ? ok : check_failed;
        } catch (const UsageError& e) {
            std::cerr << "usage error: " << e.what() << "\n" << sub->help();
            return usage;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return computation_error;
        }
    }
    return usage;
}
