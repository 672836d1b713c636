#include "topoctl/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "topoctl/error.hpp"

namespace topo::io {

namespace {

void check_schema(const json& doc) {
    if (!doc.is_object()) throw DomainError("expected a JSON object");
    if (doc.contains("schema") && doc.at("schema") != kSchema)
        throw DomainError("unsupported schema '" + doc.at("schema").dump() + "', expected " + std::string(kSchema));
}

json header() { return json{{"schema", kSchema}}; }

}  // namespace

json to_json(const Instance& instance) {
    json doc = header();
    doc["dim"] = instance.dim();
    doc["points"] = instance.points();
    return doc;
}

Instance instance_from_json(const json& doc) {
    check_schema(doc);
    try {
        return Instance(doc.at("dim").get<std::size_t>(), doc.at("points").get<std::vector<Point>>());
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed instance: ") + e.what());
    }
}

json to_json(const RadiiAssignment& r, std::optional<Model> model) {
    json doc = header();
    doc["radii"] = r.radii;
    if (model) doc["model"] = to_string(*model);
    return doc;
}

json to_json(const LnnResult& result, Model model) {
    json doc = to_json(result.assignment, model);
    doc["levels"] = result.level;
    doc["rounds"] = result.rounds;
    return doc;
}

RadiiAssignment assignment_from_json(const json& doc) {
    check_schema(doc);
    RadiiAssignment r;
    try {
        r.radii = doc.at("radii").get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed assignment: ") + e.what());
    }
    for (double x : r.radii)
        if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("radii must be finite and non-negative");
    return r;
}

std::optional<Model> model_from_json(const json& doc) {
    if (!doc.contains("model")) return std::nullopt;
    if (!doc.at("model").is_string()) throw DomainError("model must be a string");
    return parse_model(doc.at("model").get<std::string>());
}

json to_json(const InterferenceReport& report) {
    json doc = header();
    doc["value"] = report.value;
    doc["witness_point"] = report.witness_point;
    doc["mode"] = to_string(report.mode);
    doc["candidates_evaluated"] = report.candidates_evaluated;
    return doc;
}

json to_json(const ClusterDecomposition& dec) {
    json doc = header();
    doc["grid"] = {{"cell_side", dec.grid.cell_side}, {"origin", dec.grid.origin}};
    json clusters = json::array();
    for (std::size_t c = 0; c < dec.clusters.size(); ++c) {
        clusters.push_back({{"id", c},
                            {"bucket", dec.clusters[c].bucket},
                            {"members", dec.clusters[c].members},
                            {"leaders", dec.leaders[c]}});
    }
    doc["clusters"] = std::move(clusters);
    json pairs = json::array();
    for (const auto& w : dec.witness_pairs)
        pairs.push_back({{"u", w.u}, {"v", w.v}, {"cluster_u", w.cluster_u}, {"cluster_v", w.cluster_v}});
    doc["witness_pairs"] = std::move(pairs);
    doc["neighbor_pairs"] = dec.neighbor_pairs;
    return doc;
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw IoError("cannot parse " + path.string() + ": " + e.what());
    }
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << text;
        out.flush();
        if (!out) throw IoError("cannot write " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot write " + path.string());
    }
}

void write_json_atomic(const std::filesystem::path& path, const json& doc) {
    write_text_atomic(path, doc.dump(2) + "\n");
}

}  // namespace topo::io
