#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topoctl/bounded.hpp"
#include "topoctl/error.hpp"
#include "topoctl/io.hpp"
#include "topoctl/lab.hpp"
#include "topoctl/lnn.hpp"

using namespace topo;
using nlohmann::json;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

// Shortest text that reads back to the same double.
std::string exact(double x) { return json(x).dump(); }

void emit(const std::string& out, const json& doc) {
    if (out.empty() || out == "-")
        std::cout << doc.dump(2) << "\n";
    else
        io::write_json_atomic(out, doc);
}

void emit_text(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-")
        std::cout << text;
    else
        io::write_text_atomic(out, text);
}

struct GenOptions {
    std::string kind;
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t dim = 2;
    std::uint64_t seed = 0;
    double extent = 100.0;
    double spread = 1.0;
    double separation = 100.0;
    std::string out;
};

int run_gen(const GenOptions& o) {
    Instance inst = [&] {
        if (o.kind == "lower-bound") return gen_lower_bound(o.k);
        if (o.kind == "uniform-random") return gen_uniform_random(o.n, o.dim, o.seed, o.extent);
        return gen_clustered_plus_outlier(o.n, o.dim, o.seed, o.spread, o.separation);
    }();
    emit(o.out, io::to_json(inst));
    std::cerr << "n=" << inst.size() << " d=" << inst.dim()
              << " r_min=" << (inst.size() >= 2 ? exact(r_min(inst)) : "undefined") << "\n";
    return 0;
}

struct ModelOption {
    std::string name;
    Model resolve(std::optional<Model> recorded = std::nullopt) const {
        if (!name.empty()) return parse_model(name);
        return recorded.value_or(Model::symmetric);
    }
};

struct BuildOptions {
    std::string instance;
    std::string method = "lnn";
    std::optional<double> radius;
    std::string input;
    ModelOption model;
    std::string out;
};

struct Built {
    RadiiAssignment assignment;
    json document;
    std::string summary;
};

double cap_or_threshold(const Instance& inst, std::optional<double> radius) {
    if (radius) return *radius;
    return inst.size() >= 2 ? r_min(inst) : 1.0;
}

Built build(const Instance& inst, const std::string& method, std::optional<double> radius,
            const std::optional<RadiiAssignment>& input, Model model) {
    if (method == "uniform") {
        const double R = cap_or_threshold(inst, radius);
        auto r = uniform_assignment(inst, R);
        json doc = io::to_json(r, model);
        doc["method"] = method;
        doc["radius"] = R;
        return {r, doc, "uniform radius " + exact(R)};
    }
    if (method == "lnn") {
        auto result = lnn(inst, model);
        json doc = io::to_json(result, model);
        doc["method"] = method;
        return {result.assignment, doc, "lnn rounds=" + std::to_string(result.rounds)};
    }
    if (method == "bounded") {
        const double R = cap_or_threshold(inst, radius);
        auto r_in = input ? *input : lnn(inst, model).assignment;
        auto result = transform(inst, r_in, R, model);
        const auto& dec = result.decomposition;
        std::size_t leader_count = 0;
        for (const auto& group : dec.leaders) leader_count += group.size();
        const auto raised = raised_sensors(dec);
        json doc = io::to_json(result.assignment, model);
        doc["method"] = method;
        doc["radius"] = R;
        doc["input"] = input ? "file" : "lnn";
        doc["clusters"] = dec.clusters.size();
        doc["leaders"] = leader_count;
        doc["witness_pairs"] = dec.witness_pairs.size();
        doc["raised"] = raised.size();
        std::ostringstream summary;
        summary << "bounded R=" << exact(R) << " clusters=" << dec.clusters.size() << " leaders=" << leader_count
                << " witness_pairs=" << dec.witness_pairs.size();
        return {result.assignment, doc, summary.str()};
    }
    throw DomainError("unknown method '" + method + "'");
}

int run_build(const BuildOptions& o) {
    const auto inst = io::instance_from_json(io::read_json(o.instance));
    std::optional<RadiiAssignment> input;
    std::optional<Model> recorded;
    if (!o.input.empty()) {
        const auto doc = io::read_json(o.input);
        input = io::assignment_from_json(doc);
        recorded = io::model_from_json(doc);
    }
    auto built = build(inst, o.method, o.radius, input, o.model.resolve(recorded));
    emit(o.out, built.document);
    std::cerr << built.summary << "\n";
    return 0;
}

struct MeasureOptions {
    std::string mode;
    std::size_t samples = 10000;
    std::optional<std::uint64_t> seed;

    MeasureMode resolve(const Instance& inst) const {
        return mode.empty() ? default_measure_mode(inst.dim()) : parse_measure_mode(mode);
    }
    SamplingOptions sampling() const { return {samples, seed}; }
};

json radii_histogram(const RadiiAssignment& r) {
    constexpr std::size_t kBins = 10;
    const double top = r.max_radius();
    std::vector<std::size_t> counts(kBins, 0);
    std::vector<double> edges(kBins + 1);
    for (std::size_t b = 0; b <= kBins; ++b) edges[b] = top * static_cast<double>(b) / kBins;
    for (double x : r.radii) {
        auto bin = top > 0.0 ? static_cast<std::size_t>(x / top * kBins) : 0;
        ++counts[std::min(bin, kBins - 1)];
    }
    return {{"edges", edges}, {"counts", counts}};
}

struct AnalyzeOptions {
    std::string instance;
    std::string assignment;
    MeasureOptions measure;
    ModelOption model;
    std::string out;
};

int run_analyze(const AnalyzeOptions& o) {
    const auto inst = io::instance_from_json(io::read_json(o.instance));
    const auto doc = io::read_json(o.assignment);
    const auto r = io::assignment_from_json(doc);
    const Model model = o.model.resolve(io::model_from_json(doc));
    check_assignment(inst, r);

    const auto report = network_interference(inst, r, o.measure.resolve(inst), o.measure.sampling());
    const bool valid = is_valid(inst, r, model);
    json out = io::to_json(report);
    out["model"] = to_string(model);
    out["valid"] = valid;
    out["max_radius"] = r.max_radius();
    out["histogram"] = radii_histogram(r);
    emit(o.out, out);
    std::cerr << "interference=" << report.value << " (" << to_string(report.mode) << ") valid=" << std::boolalpha
              << valid << "\n";
    return 0;
}

struct CompareOptions {
    std::string instance;
    std::vector<std::string> methods{"uniform", "lnn", "bounded"};
    std::optional<double> radius;
    MeasureOptions measure;
    ModelOption model;
    std::string out;
    std::string records;
};

int run_compare(const CompareOptions& o) {
    const auto inst = io::instance_from_json(io::read_json(o.instance));
    const Model model = o.model.resolve();
    const MeasureMode mode = o.measure.resolve(inst);

    std::ostringstream csv;
    csv << "method,max_radius,interference,valid,runtime_ms\n";
    json records = json::array();
    for (const auto& method : o.methods) {
        const auto start = std::chrono::steady_clock::now();
        auto built = build(inst, method, o.radius, std::nullopt, model);
        const auto report = network_interference(inst, built.assignment, mode, o.measure.sampling());
        const bool valid = is_valid(inst, built.assignment, model);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        csv << method << "," << exact(built.assignment.max_radius()) << "," << report.value << ","
            << (valid ? "true" : "false") << "," << exact(std::round(ms * 1000) / 1000) << "\n";

        json metrics = {{"max_radius", built.assignment.max_radius()},
                        {"interference", report.value},
                        {"mode", to_string(mode)},
                        {"valid", valid}};
        if (inst.size() >= 2) metrics["r_min"] = r_min(inst);
        for (const char* key : {"rounds", "clusters", "leaders", "witness_pairs", "raised"})
            if (built.document.contains(key)) metrics[key] = built.document[key];
        json parameters = {{"model", to_string(model)}, {"mode", to_string(mode)}};
        if (built.document.contains("radius")) parameters["R"] = built.document["radius"];
        if (o.measure.seed) parameters["seed"] = *o.measure.seed;
        records.push_back({{"instance", o.instance},
                           {"method", method},
                           {"parameters", parameters},
                           {"metrics", metrics},
                           {"wall_time_ms", ms}});
    }
    emit_text(o.out, csv.str());
    if (!o.records.empty()) io::write_json_atomic(o.records, json{{"schema", io::kSchema}, {"records", records}});
    return 0;
}

struct OracleOptions {
    std::string instance;
    std::string what = "min-interference";
    std::string assignment;
    std::optional<double> pitch;
    MeasureOptions measure;
    ModelOption model;
    std::string out;
};

int run_oracle(const OracleOptions& o) {
    const auto inst = io::instance_from_json(io::read_json(o.instance));
    json out = {{"schema", io::kSchema}, {"what", o.what}};
    if (o.what == "min-interference") {
        const Model model = o.model.resolve();
        const MeasureMode mode = o.measure.resolve(inst);
        const auto best = oracle_min_interference(inst, mode, model);
        out["model"] = to_string(model);
        out["mode"] = to_string(mode);
        out["value"] = best.value;
        out["assignment"] = best.assignment.radii;
        if (mode != MeasureMode::at_sensors)
            out["at_sensors_value"] = oracle_min_interference(inst, MeasureMode::at_sensors, model).value;
        std::cerr << "min interference=" << best.value << " (" << to_string(mode) << ")\n";
    } else if (o.what == "max-depth") {
        if (o.assignment.empty()) throw DomainError("max-depth needs --assignment");
        const auto r = io::assignment_from_json(io::read_json(o.assignment));
        check_assignment(inst, r);
        double pitch = 0.0;
        if (o.pitch) {
            pitch = *o.pitch;
        } else {
            pitch = std::numeric_limits<double>::infinity();
            for (SensorId u = 0; u < inst.size(); ++u)
                for (SensorId v = u + 1; v < inst.size(); ++v)
                    if (distance(inst, u, v) > 0.0) pitch = std::min(pitch, distance(inst, u, v) / 8);
            if (!std::isfinite(pitch)) pitch = std::max(r.max_radius(), 1.0) / 8;
        }
        const auto depth = oracle_max_depth(inst, r, pitch);
        out["pitch"] = pitch;
        out["value"] = depth.value;
        out["witness_point"] = depth.witness_point;
        out["rows"] = depth.rows;
        std::cerr << "max depth=" << depth.value << " at pitch " << exact(pitch) << "\n";
    } else {
        throw DomainError("unknown oracle '" + o.what + "'");
    }
    emit(o.out, out);
    return 0;
}

struct ExplainOptions {
    std::string instance;
    std::optional<double> radius;
    std::string out;
};

int run_explain(const ExplainOptions& o) {
    const auto inst = io::instance_from_json(io::read_json(o.instance));
    const double R = cap_or_threshold(inst, o.radius);
    const auto dec = full_decomposition(inst, R, default_grid(inst, R));
    json doc = io::to_json(dec);
    doc["radius"] = R;
    doc["raised"] = raised_sensors(dec);
    emit(o.out, doc);
    std::cerr << "clusters=" << dec.clusters.size() << " witness_pairs=" << dec.witness_pairs.size() << "\n";
    return 0;
}

void add_measure_flags(CLI::App* cmd, MeasureOptions& m) {
    cmd->add_option("--mode", m.mode, "exact1d | exact2d | at_sensors | sampled (default by dimension)");
    cmd->add_option("--samples", m.samples, "Sample count for sampled mode")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", m.seed, "Seed for sampled mode");
}

void add_model_flag(CLI::App* cmd, ModelOption& m) {
    cmd->add_option("--model", m.name, "symmetric | asymmetric")
        ->check(CLI::IsMember({"symmetric", "asymmetric"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topology control experiments for sensor networks"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
    gen_cmd->add_option("--kind", gen.kind, "lower-bound | uniform-random | clustered-plus-outlier")
        ->required()
        ->check(CLI::IsMember({"lower-bound", "uniform-random", "clustered-plus-outlier"}));
    gen_cmd->add_option("--k", gen.k, "Level of the lower-bound family");
    gen_cmd->add_option("--n", gen.n, "Number of sensors");
    gen_cmd->add_option("--dim", gen.dim, "Dimension");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--extent", gen.extent, "Side of the sampling cube");
    gen_cmd->add_option("--spread", gen.spread, "Cluster radius");
    gen_cmd->add_option("--separation", gen.separation, "Distance of the far sensor");
    gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

    BuildOptions bld;
    auto* build_cmd = app.add_subcommand("build", "Compute a radii assignment");
    build_cmd->add_option("instance", bld.instance, "Instance file")->required();
    build_cmd->add_option("--method", bld.method, "uniform | lnn | bounded")
        ->check(CLI::IsMember({"uniform", "lnn", "bounded"}));
    build_cmd->add_option("--radius", bld.radius, "Radius (default r_min)");
    build_cmd->add_option("--input", bld.input, "Input assignment for bounded (default lnn)");
    add_model_flag(build_cmd, bld.model);
    build_cmd->add_option("--out", bld.out, "Output file (default stdout)");

    AnalyzeOptions an;
    auto* analyze_cmd = app.add_subcommand("analyze", "Measure interference and validity");
    analyze_cmd->add_option("instance", an.instance, "Instance file")->required();
    analyze_cmd->add_option("assignment", an.assignment, "Assignment file")->required();
    add_measure_flags(analyze_cmd, an.measure);
    add_model_flag(analyze_cmd, an.model);
    analyze_cmd->add_option("--out", an.out, "Output file (default stdout)");

    CompareOptions cmp;
    auto* compare_cmd = app.add_subcommand("compare", "Tabulate several methods as CSV");
    compare_cmd->add_option("instance", cmp.instance, "Instance file")->required();
    compare_cmd->add_option("--methods", cmp.methods, "Methods to run")
        ->delimiter(',')
        ->check(CLI::IsMember({"uniform", "lnn", "bounded"}));
    compare_cmd->add_option("--radius", cmp.radius, "Radius for uniform and bounded (default r_min)");
    add_measure_flags(compare_cmd, cmp.measure);
    add_model_flag(compare_cmd, cmp.model);
    compare_cmd->add_option("--out", cmp.out, "CSV file (default stdout)");
    compare_cmd->add_option("--records", cmp.records, "Also write one JSON record per method");

    OracleOptions orc;
    auto* oracle_cmd = app.add_subcommand("oracle", "Run a brute-force oracle");
    oracle_cmd->add_option("instance", orc.instance, "Instance file")->required();
    oracle_cmd->add_option("--what", orc.what, "min-interference | max-depth")
        ->check(CLI::IsMember({"min-interference", "max-depth"}));
    oracle_cmd->add_option("--assignment", orc.assignment, "Assignment file for max-depth");
    oracle_cmd->add_option("--pitch", orc.pitch, "Grid pitch for max-depth (default min distance / 8)");
    add_measure_flags(oracle_cmd, orc.measure);
    add_model_flag(oracle_cmd, orc.model);
    oracle_cmd->add_option("--out", orc.out, "Output file (default stdout)");

    ExplainOptions exp;
    auto* explain_cmd = app.add_subcommand("explain", "Dump the cluster decomposition");
    explain_cmd->add_option("instance", exp.instance, "Instance file")->required();
    explain_cmd->add_option("--radius", exp.radius, "Radius cap (default r_min)");
    explain_cmd->add_option("--out", exp.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*build_cmd) return run_build(bld);
        if (*analyze_cmd) return run_analyze(an);
        if (*compare_cmd) return run_compare(cmp);
        if (*oracle_cmd) return run_oracle(orc);
        if (*explain_cmd) return run_explain(exp);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
