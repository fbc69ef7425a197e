#ifndef SPANSEP_IO_HPP
#define SPANSEP_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "spansep/graph.hpp"
#include "spansep/metric.hpp"
#include "spansep/oracle.hpp"
#include "spansep/separator.hpp"

namespace spansep {

using json = nlohmann::json;

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

// --- point sets and matrices ---------------------------------------------

/// CSV rows of coordinates -> Euclidean input (raw; caller normalizes).
inline MetricInput points_from_csv(const std::string& text) {
    MetricInput m;
    m.kind = MetricKind::Euclidean;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> p;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) p.push_back(std::stod(cell));
        if (!m.points.empty() && p.size() != m.points.front().size())
            throw std::runtime_error("points csv: inconsistent row width");
        m.points.push_back(std::move(p));
    }
    if (m.points.empty()) throw std::runtime_error("points csv: no rows");
    m.dim = static_cast<int>(m.points.front().size());
    return m;
}

inline std::string points_to_csv(const MetricInput& m) {
    std::ostringstream out;
    out.precision(17);
    for (const auto& p : m.points) {
        for (std::size_t k = 0; k < p.size(); ++k) out << (k ? "," : "") << p[k];
        out << "\n";
    }
    return out.str();
}

/// Square CSV of pairwise distances -> matrix input (raw; caller normalizes).
inline MetricInput matrix_from_csv(const std::string& text) {
    MetricInput m;
    m.kind = MetricKind::Matrix;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::istringstream r(line);
        std::string cell;
        while (std::getline(r, cell, ',')) row.push_back(std::stod(cell));
        m.matrix.push_back(std::move(row));
    }
    if (m.matrix.empty()) throw std::runtime_error("matrix csv: no rows");
    return m;
}

inline std::string matrix_to_csv(const MetricInput& m) {
    std::ostringstream out;
    out.precision(17);
    for (const auto& row : m.matrix) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << row[k];
        out << "\n";
    }
    return out.str();
}

inline json metric_to_json(const MetricInput& m) {
    json j;
    switch (m.kind) {
        case MetricKind::Euclidean: j["kind"] = "euclidean"; break;
        case MetricKind::UnitBall: j["kind"] = "unit-ball"; break;
        case MetricKind::Matrix: j["kind"] = "matrix"; break;
    }
    if (m.kind == MetricKind::Matrix) {
        j["matrix"] = m.matrix;
    } else {
        j["dim"] = m.dim;
        j["points"] = m.points;
        if (m.kind == MetricKind::UnitBall) j["mu"] = m.mu;
    }
    return j;
}

inline MetricInput metric_from_json(const json& j) {
    MetricInput m;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "matrix") {
        m.kind = MetricKind::Matrix;
        m.matrix = j.at("matrix").get<std::vector<std::vector<double>>>();
    } else {
        m.kind = kind == "unit-ball" ? MetricKind::UnitBall : MetricKind::Euclidean;
        m.points = j.at("points").get<std::vector<std::vector<double>>>();
        m.dim = j.at("dim").get<int>();
        if (m.kind == MetricKind::UnitBall) m.mu = j.at("mu").get<double>();
    }
    return m;
}

// --- graphs ---------------------------------------------------------------

inline json graph_to_json(const WeightedGraph& g) {
    json j;
    j["n"] = g.n();
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.w});
    j["edges"] = std::move(edges);
    return j;
}

inline WeightedGraph graph_from_json(const json& j) {
    WeightedGraph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges"))
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>());
    return g;
}

// --- separators and decompositions ----------------------------------------

inline json separator_to_json(const SeparatorResult& r) {
    json j;
    j["center"] = r.center;
    j["r"] = r.base_radius;
    j["r_star"] = r.final_radius;
    j["separator"] = r.s;
    j["inside_count"] = r.inside_count;
    j["components"] = r.components;
    json cut = json::array();
    for (const Edge& e : r.cut_edges) cut.push_back({e.u, e.v, e.w});
    j["cut_edges"] = std::move(cut);
    json short_cut = json::array();
    for (const Edge& e : r.short_cut_edges) short_cut.push_back({e.u, e.v, e.w});
    j["short_cut_edges"] = std::move(short_cut);
    return j;
}

inline json decomposition_to_json(const DecompositionNode& node) {
    json j;
    j["vertices"] = node.vertices;
    if (node.sep) j["separator"] = separator_to_json(*node.sep);
    json kids = json::array();
    for (const auto& c : node.children) kids.push_back(decomposition_to_json(c));
    j["children"] = std::move(kids);
    return j;
}

// --- check reports ---------------------------------------------------------

inline json check_to_json(const CheckReport& r) {
    json j;
    j["check"] = r.check_name;
    j["passed"] = r.passed;
    if (std::isfinite(r.measured))
        j["measured"] = r.measured;
    else
        j["measured"] = nullptr;
    if (r.bound) j["bound"] = *r.bound;
    if (r.witness) {
        json w;
        if (r.witness->center) w["center"] = *r.witness->center;
        if (r.witness->radius) w["radius"] = *r.witness->radius;
        if (!r.witness->vertices.empty()) w["vertices"] = r.witness->vertices;
        if (!r.witness->edges.empty()) {
            json es = json::array();
            for (const Edge& e : r.witness->edges) es.push_back({e.u, e.v, e.w});
            w["edges"] = std::move(es);
        }
        if (!r.witness->note.empty()) w["note"] = r.witness->note;
        j["witness"] = std::move(w);
    }
    return j;
}

}  // namespace spansep

#endif  // SPANSEP_IO_HPP
