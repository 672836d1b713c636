#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "topoctl/bounded.hpp"
#include "topoctl/geometry.hpp"
#include "topoctl/lnn.hpp"
#include "topoctl/network.hpp"

namespace topo::io {

using nlohmann::json;

inline constexpr std::string_view kSchema = "topoctl/1";

json to_json(const Instance& instance);
Instance instance_from_json(const json& doc);

/// {"schema", "radii"} plus "model" when given.
json to_json(const RadiiAssignment& r, std::optional<Model> model = std::nullopt);
json to_json(const LnnResult& result, Model model);
RadiiAssignment assignment_from_json(const json& doc);
/// The "model" recorded in an assignment document, if any.
std::optional<Model> model_from_json(const json& doc);

json to_json(const InterferenceReport& report);
json to_json(const ClusterDecomposition& decomposition);

json read_json(const std::filesystem::path& path);
/// Writes to a sibling temporary file and renames it over `path`.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
void write_json_atomic(const std::filesystem::path& path, const json& doc);

}  // namespace topo::io
