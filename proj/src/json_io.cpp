#include "povp/json_io.hpp"

#include <sstream>

namespace povp {

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected array");
    return Partition(j.get<std::vector<int>>());
}

namespace {

json cell_to_json(int v, bool o) { return json{{"v", v}, {"o", o}}; }

std::pair<int, bool> cell_from_json(const json& j) {
    return {j.at("v").get<int>(), j.at("o").get<bool>()};
}

}  // namespace

json to_json(const Overpartition& p) {
    json a = json::array();
    for (const auto& e : p.entries()) a.push_back(cell_to_json(e.value, e.overlined));
    return a;
}

Overpartition overpartition_from_json(const json& j) {
    std::vector<OverpartEntry> es;
    for (const auto& e : j) {
        auto [v, o] = cell_from_json(e);
        es.push_back({v, o});
    }
    return Overpartition(std::move(es));
}

json to_json(const PlanePartition& p) { return json{{"rows", p.rows()}}; }

PlanePartition plane_partition_from_json(const json& j) {
    return PlanePartition(j.at("rows").get<std::vector<std::vector<int>>>());
}

json to_json(const PlaneOverpartition& p) {
    json rows = json::array();
    for (const auto& r : p.rows()) {
        json row = json::array();
        for (const auto& c : r) row.push_back(cell_to_json(c.value, c.overlined));
        rows.push_back(row);
    }
    return json{{"rows", rows}};
}

PlaneOverpartition pop_from_json(const json& j) {
    std::vector<std::vector<Cell>> rows;
    for (const auto& r : j.at("rows")) {
        std::vector<Cell> row;
        for (const auto& e : r) {
            auto [v, o] = cell_from_json(e);
            row.push_back({v, o});
        }
        rows.push_back(std::move(row));
    }
    return PlaneOverpartition(std::move(rows));
}

json to_json(const ReversePlaneOverpartition& p) {
    json rows = json::array();
    for (const auto& r : p.cells()) {
        json row = json::array();
        for (const auto& c : r) row.push_back(cell_to_json(c.value, c.overlined));
        rows.push_back(row);
    }
    return json{{"shape", to_json(p.shape())}, {"cells", rows}};
}

ReversePlaneOverpartition reverse_pop_from_json(const json& j) {
    Partition shape = partition_from_json(j.at("shape"));
    std::vector<std::vector<Cell>> rows;
    for (const auto& r : j.at("cells")) {
        std::vector<Cell> row;
        for (const auto& e : r) {
            auto [v, o] = cell_from_json(e);
            row.push_back({v, o});
        }
        rows.push_back(std::move(row));
    }
    return ReversePlaneOverpartition(std::move(shape), std::move(rows));
}

json to_json(const BlockMatrix& m) {
    return json{{"n", m.n}, {"A", m.a}, {"B", m.b}, {"C", m.c}, {"D", m.d}};
}

BlockMatrix block_matrix_from_json(const json& j) {
    BlockMatrix m;
    m.n = j.at("n").get<int>();
    m.a = j.at("A").get<std::vector<std::vector<int>>>();
    m.b = j.at("B").get<std::vector<std::vector<int>>>();
    m.c = j.at("C").get<std::vector<std::vector<int>>>();
    m.d = j.at("D").get<std::vector<std::vector<int>>>();
    ValidationResult v = m.validate();
    if (!v.ok()) throw std::invalid_argument("block matrix: " + v.violations.front());
    return m;
}

json to_json(const InterlacingSequence& s) {
    json parts = json::array();
    for (const auto& p : s.partitions) parts.push_back(to_json(p));
    return json{{"partitions", parts},
                {"profile", s.profile.bits},
                {"topology", s.topology == Topology::Cylindric ? "cylindric" : "planar"}};
}

InterlacingSequence interlacing_from_json(const json& j) {
    InterlacingSequence s;
    for (const auto& p : j.at("partitions")) s.partitions.push_back(partition_from_json(p));
    s.profile.bits = j.at("profile").get<std::vector<int>>();
    s.topology = j.at("topology").get<std::string>() == "cylindric" ? Topology::Cylindric
                                                                    : Topology::Planar;
    return s;
}

json to_json(const TruncSeries& s) {
    json terms = json::array();
    for (const auto& [q, poly] : s.terms()) {
        json monos = json::array();
        for (const auto& [key, c] : poly.terms()) {
            std::ostringstream os;
            os << c;
            monos.push_back(json::array({key.first, key.second, os.str()}));
        }
        terms.push_back(json::array({q, monos}));
    }
    return json{{"trunc", s.trunc()}, {"terms", terms}};
}

}  // namespace povp
