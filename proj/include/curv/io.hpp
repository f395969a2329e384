#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "curv/curvature.hpp"
#include "curv/graph.hpp"
#include "curv/morse.hpp"
#include "curv/rational.hpp"

namespace curv {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// JSON parse failure with 1-based line/column of the offending byte.
struct json_parse_error : std::runtime_error {
    int line;
    int column;
    json_parse_error(const std::string& what, int line_, int col_)
        : std::runtime_error(what), line(line_), column(col_) {}
};

inline Json parse_json(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        int line = 1, col = 1;
        for (size_t i = 0; i < byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw json_parse_error("malformed JSON in " + origin + " at line " +
                                   std::to_string(line) + ", column " + std::to_string(col),
                               line, col);
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

// Rationals serialize as bare integers when integral and machine-sized,
// otherwise as reduced "p/q" strings with q > 0.
inline Json rational_to_json(const Rational& r) {
    if (is_integer(r) && numerator(r) >= std::numeric_limits<int64_t>::min() &&
        numerator(r) <= std::numeric_limits<int64_t>::max())
        return static_cast<int64_t>(numerator(r));
    return to_fraction_string(r);
}

inline Rational json_to_rational(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(j.get<int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument(what + ": expected an integer or a \"p/q\" string");
}

/// A graph together with the external labels of its normalized vertices.
struct GraphDocument {
    Graph graph;
    std::vector<std::string> labels;            // by dense id
    std::map<std::string, int> label_to_id;

    int id_of(const std::string& label) const {
        auto it = label_to_id.find(label);
        if (it == label_to_id.end())
            throw std::invalid_argument("unknown vertex '" + label + "'");
        return it->second;
    }
};

inline std::string json_id_to_label(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<int64_t>());
    throw std::invalid_argument("vertex ids must be strings or integers");
}

/// Loads {"vertices":[...], "edges":[[u,v],...]}; ids may be strings or
/// integers and are normalized to 0..n-1 in array order.
inline GraphDocument load_graph(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs 'vertices' and 'edges'");
    GraphDocument doc;
    for (const Json& v : j.at("vertices")) {
        std::string label = json_id_to_label(v);
        if (!doc.label_to_id.emplace(label, static_cast<int>(doc.labels.size())).second)
            throw std::invalid_argument("duplicate vertex id '" + label + "'");
        doc.labels.push_back(std::move(label));
    }
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (const Json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("each edge must be a [u,v] pair");
        std::string lu = json_id_to_label(e[0]);
        std::string lv = json_id_to_label(e[1]);
        int u = doc.id_of(lu);
        int v = doc.id_of(lv);
        if (u == v) throw std::invalid_argument("self-loop at vertex '" + lu + "'");
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            throw std::invalid_argument("duplicate edge ('" + lu + "','" + lv + "')");
        edges.push_back({u, v});
    }
    doc.graph = Graph::on_vertices(static_cast<int>(doc.labels.size()), edges);
    return doc;
}

inline Json label_to_json_id(const std::string& label) {
    // Round-trip integer ids as numbers.
    if (!label.empty() &&
        label.find_first_not_of("0123456789") == std::string::npos &&
        (label.size() == 1 || label[0] != '0')) {
        try {
            return Json(std::stoll(label));
        } catch (...) {
        }
    }
    return Json(label);
}

inline Json save_graph(const GraphDocument& doc) {
    Json j;
    j["vertices"] = Json::array();
    for (const std::string& label : doc.labels) j["vertices"].push_back(label_to_json_id(label));
    j["edges"] = Json::array();
    const Graph& g = doc.graph;
    for (int p = 0; p < g.order(); ++p) {
        const Bits& row = g.neighbors_at(p);
        for (int q = row.find_next(p); q != Bits::npos; q = row.find_next(q))
            j["edges"].push_back({label_to_json_id(doc.labels[p]), label_to_json_id(doc.labels[q])});
    }
    return j;
}

inline GraphDocument identity_document(Graph g) {
    GraphDocument doc;
    for (int v : g.vertices()) {
        doc.labels.push_back(std::to_string(v));
        doc.label_to_id[doc.labels.back()] = static_cast<int>(doc.labels.size()) - 1;
    }
    doc.graph = std::move(g);
    return doc;
}

/// Coloring JSON: {"values": {"<vertex>": value, ...}}.
inline Coloring load_coloring(const Json& j, const GraphDocument& doc) {
    if (!j.is_object() || !j.contains("values"))
        throw std::invalid_argument("coloring JSON needs a 'values' object");
    Coloring f;
    for (const auto& [key, val] : j.at("values").items())
        f.values[doc.id_of(key)] = json_to_rational(val, "coloring value of '" + key + "'");
    return f;
}

inline Json save_coloring(const Coloring& f, const GraphDocument& doc) {
    Json values = Json::object();
    for (const auto& [v, x] : f.values) values[doc.labels[v]] = rational_to_json(x);
    return Json{{"values", values}};
}

inline Json save_index_vector(const IndexVector& iv, const GraphDocument& doc) {
    Json values = Json::object();
    for (const auto& [v, i] : iv.indices) values[doc.labels[v]] = i;
    return Json{{"indices", values}};
}

inline Json save_curvature(const CurvatureVector& k, const GraphDocument& doc) {
    Json values = Json::object();
    for (const auto& [v, x] : k.values) values[doc.labels[v]] = rational_to_json(x);
    return Json{{"values", values}};
}

/// Measure JSON: {"weights":[...], "colorings":[{...}, ...]}.
inline Measure load_measure(const Json& j, const GraphDocument& doc) {
    if (!j.is_object() || !j.contains("weights") || !j.contains("colorings"))
        throw std::invalid_argument("measure JSON needs 'weights' and 'colorings'");
    Measure m;
    for (const Json& w : j.at("weights")) m.weights.push_back(json_to_rational(w, "weight"));
    for (const Json& f : j.at("colorings")) m.support.push_back(load_coloring(f, doc));
    return m;
}

inline Json save_measure(const Measure& m, const GraphDocument& doc) {
    Json j;
    j["weights"] = Json::array();
    for (const Rational& w : m.weights) j["weights"].push_back(rational_to_json(w));
    j["colorings"] = Json::array();
    for (const Coloring& f : m.support) j["colorings"].push_back(save_coloring(f, doc));
    return j;
}

}  // namespace curv
