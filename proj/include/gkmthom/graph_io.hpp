#pragma once

#include "gkmthom/cohomology.hpp"
#include "gkmthom/graph.hpp"
#include "gkmthom/parse.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace gkm {

/// A graph read from a file, with its optional polarizing vector.
struct LoadedGraph {
    GkmGraph graph;
    std::optional<RationalVector> xi;
    bool connection_derived = false;
    std::string connection_error; // set when derivation failed
};

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object() || !j.contains(key))
        throw Error("graph file: missing field '" + path + key + "'");
    return j.at(key);
}

inline RationalVector rational_array(const nlohmann::json& j, const std::string& path)
{
    if (!j.is_array())
        throw Error("graph file: '" + path + "' must be an array of rationals");
    RationalVector v;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& x = j[i];
        std::string where = path + "[" + std::to_string(i) + "]";
        try {
            if (x.is_string())
                v.push_back(parse_rational(x.get<std::string>()));
            else if (x.is_number_integer())
                v.emplace_back(x.get<long>());
            else
                throw Error("not a rational");
        } catch (const Error& e) {
            throw Error("graph file: '" + where + "': " + e.what());
        }
    }
    return v;
}

inline std::size_t edge_by_id(const GkmGraph& g, const std::string& id, const std::string& path)
{
    auto arrow = id.find("->");
    if (arrow == std::string::npos)
        throw Error("graph file: '" + path + "': edge id '" + id + "' is not of the form from->to");
    auto from = g.find_vertex(id.substr(0, arrow));
    auto to = g.find_vertex(id.substr(arrow + 2));
    if (!from || !to)
        throw Error("graph file: '" + path + "': unknown vertex in edge id '" + id + "'");
    auto e = g.find_edge(*from, *to);
    if (!e)
        throw Error("graph file: '" + path + "': no edge '" + id + "'");
    return *e;
}

} // namespace detail

/// Reads the JSON graph format. Reversed edges are implicit unless listed; an omitted
/// connection is derived, and a failed derivation is recorded rather than thrown.
/// No validation is done here (see load_graph).
inline LoadedGraph parse_graph(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("graph file: ") + e.what());
    }
    const auto& dim = detail::field(j, "dimension", "");
    if (!dim.is_number_unsigned())
        throw Error("graph file: 'dimension' must be a nonnegative integer");
    const std::size_t n = dim.get<std::size_t>();
    const auto& vs = detail::field(j, "vertices", "");
    if (!vs.is_array())
        throw Error("graph file: 'vertices' must be an array of names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!vs[i].is_string())
            throw Error("graph file: 'vertices[" + std::to_string(i) + "]' must be a string");
        names.push_back(vs[i].get<std::string>());
    }
    LoadedGraph out{GkmGraph(n, names), std::nullopt, false, {}};
    GkmGraph& g = out.graph;

    if (j.contains("aliases")) {
        const auto& a = j.at("aliases");
        if (!a.is_object())
            throw Error("graph file: 'aliases' must map vertex names to labels");
        for (const auto& [k, v] : a.items()) {
            if (!v.is_string())
                throw Error("graph file: 'aliases." + k + "' must be a string");
            g.set_alias(g.vertex(k), v.get<std::string>());
        }
    }

    const auto& es = detail::field(j, "edges", "");
    if (!es.is_array())
        throw Error("graph file: 'edges' must be an array");
    struct Raw {
        std::size_t from, to;
        LinearForm w;
    };
    std::vector<Raw> raw;
    for (std::size_t i = 0; i < es.size(); ++i) {
        std::string path = "edges[" + std::to_string(i) + "]";
        const auto& e = es[i];
        auto endpoint = [&](const char* key) {
            const auto& x = detail::field(e, key, path + ".");
            if (!x.is_string())
                throw Error("graph file: '" + path + "." + key + "' must be a vertex name");
            auto v = g.find_vertex(x.get<std::string>());
            if (!v)
                throw Error("graph file: '" + path + "." + key + "': unknown vertex '" + x.get<std::string>() + "'");
            return *v;
        };
        Raw r{endpoint("from"), endpoint("to"),
              LinearForm(detail::rational_array(detail::field(e, "weight", path + "."), path + ".weight"))};
        if (r.w.dimension() != n)
            throw Error("graph file: '" + path + ".weight' has " + std::to_string(r.w.dimension()) +
                        " entries, dimension is " + std::to_string(n));
        raw.push_back(std::move(r));
    }
    // an explicitly listed reversal overrides the implicit negated weight
    std::vector<bool> used(raw.size(), false);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (used[i])
            continue;
        used[i] = true;
        LinearForm back = -raw[i].w;
        for (std::size_t k = i + 1; k < raw.size(); ++k)
            if (!used[k] && raw[k].from == raw[i].to && raw[k].to == raw[i].from) {
                back = raw[k].w;
                used[k] = true;
                break;
            }
        try {
            g.add_edge(raw[i].from, raw[i].to, raw[i].w, back);
        } catch (const Error& e) {
            throw Error("graph file: 'edges[" + std::to_string(i) + "]': " + e.what());
        }
    }

    if (j.contains("valence")) {
        const auto& d = j.at("valence");
        if (!d.is_number_unsigned())
            throw Error("graph file: 'valence' must be a nonnegative integer");
        auto actual = g.valence();
        if (!actual || *actual != d.get<std::size_t>())
            throw Error("graph file: declared valence " + std::to_string(d.get<std::size_t>()) +
                        " does not match the edges");
    }

    if (j.contains("connection")) {
        const auto& c = j.at("connection");
        if (!c.is_object())
            throw Error("graph file: 'connection' must map \"e|e'\" to an edge id");
        g.clear_connection();
        for (const auto& [key, val] : c.items()) {
            std::string path = "connection." + key;
            auto bar = key.find('|');
            if (bar == std::string::npos || !val.is_string())
                throw Error("graph file: '" + path + "': expected \"e|e'\": \"e''\"");
            std::size_t e = detail::edge_by_id(g, key.substr(0, bar), path);
            std::size_t ep = detail::edge_by_id(g, key.substr(bar + 1), path);
            std::size_t es2 = detail::edge_by_id(g, val.get<std::string>(), path);
            try {
                g.set_theta(e, ep, es2);
            } catch (const Error& err) {
                throw Error("graph file: '" + path + "': " + err.what());
            }
        }
        g.complete_connection();
    } else if (g.edge_count() > 0) {
        try {
            derive_connection(g);
            out.connection_derived = true;
        } catch (const Error& e) {
            g.clear_connection();
            out.connection_error = e.what();
        }
    }

    if (j.contains("xi"))
        out.xi = detail::rational_array(j.at("xi"), "xi");
    return out;
}

/// parse_graph plus validation; throws with the full report if the graph is not GKM.
inline LoadedGraph load_graph_text(const std::string& text)
{
    LoadedGraph lg = parse_graph(text);
    auto report = validate(lg.graph);
    if (!report.ok()) {
        std::string msg = "graph file fails validation:";
        for (const auto& i : report.issues)
            msg += "\n  [" + i.kind + "] " + i.where + ": " + i.detail;
        if (!lg.connection_error.empty())
            msg += "\n  " + lg.connection_error;
        throw Error(msg);
    }
    return lg;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline LoadedGraph load_graph(const std::string& path) { return load_graph_text(read_file(path)); }

/// Canonical JSON: each edge once (the direction listed first in the edge table) plus an
/// explicit reversal when its weight is not the negation; the complete connection.
inline nlohmann::json to_json(const GkmGraph& g, const std::optional<RationalVector>& xi = std::nullopt)
{
    using nlohmann::json;
    json j;
    j["dimension"] = g.dimension();
    if (auto d = g.valence())
        j["valence"] = *d;
    j["vertices"] = g.names();
    json aliases = json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!g.alias(v).empty())
            aliases[g.name(v)] = g.alias(v);
    if (!aliases.empty())
        j["aliases"] = aliases;
    auto weight = [](const LinearForm& w) {
        json a = json::array();
        for (const auto& c : w.coefficients())
            a.push_back(to_string(c));
        return a;
    };
    json edges = json::array();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (ed.reverse < e)
            continue;
        edges.push_back({{"from", g.name(ed.from)}, {"to", g.name(ed.to)}, {"weight", weight(ed.weight)}});
        if (!(g.weight(ed.reverse) == -ed.weight))
            edges.push_back({{"from", g.name(ed.to)}, {"to", g.name(ed.from)}, {"weight", weight(g.weight(ed.reverse))}});
    }
    j["edges"] = edges;
    if (g.has_connection()) {
        json c = json::object();
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            for (auto ep : g.out_edges(g.edge(e).from)) {
                std::size_t img = g.theta(e, ep);
                if (img != npos)
                    c[g.edge_name(e) + "|" + g.edge_name(ep)] = g.edge_name(img);
            }
        j["connection"] = c;
    }
    if (xi) {
        json a = json::array();
        for (const auto& c : *xi)
            a.push_back(to_string(c));
        j["xi"] = a;
    }
    return j;
}

inline std::string save(const GkmGraph& g, const std::optional<RationalVector>& xi = std::nullopt)
{
    return to_json(g, xi).dump(2) + "\n";
}

/// A class as {vertex name: canonical polynomial}.
inline nlohmann::json class_to_json(const CohomologyClass& f, const std::string& prefix = "x")
{
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t v = 0; v < f.values.size(); ++v)
        j[f.graph->name(v)] = f.values[v].to_string(prefix);
    return j;
}

/// Reads {vertex name or alias: polynomial}; vertices not listed get 0.
inline CohomologyClass class_from_json(const GkmGraph& g, const nlohmann::json& j, const std::string& prefix = "x")
{
    if (!j.is_object())
        throw Error("class file: expected an object mapping vertices to polynomials");
    std::vector<Polynomial> values(g.vertex_count(), Polynomial(g.dimension()));
    for (const auto& [k, v] : j.items()) {
        if (!v.is_string())
            throw Error("class file: value for '" + k + "' must be a polynomial string");
        values[g.vertex(k)] = parse_polynomial(v.get<std::string>(), g.dimension(), prefix);
    }
    return CohomologyClass(g, std::move(values));
}

} // namespace gkm
