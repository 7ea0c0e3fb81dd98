#pragma once

#include "mmw/model.hpp"

#include <json.hpp>

#include <filesystem>

namespace mmw {

inline constexpr int kManifestSchemaVersion = 1;

// Instance manifest layout (ids are 1-based):
//
//   {
//     "schema_version": 1,
//     "name": "...",
//     "cycle_time": 1000,
//     "max_workplaces": 3,
//     "tasks": [{"id": 1, "time": 12.5, "zone": 3}, ...],
//     "edges": [[1, 2], ...],
//     "displacement": [[...9 values...] x 9],
//     "generation": {...}            // optional, written by the generator
//   }
[[nodiscard]] nlohmann::json instance_to_json(const Instance& instance);

// Throws InvalidInstance on schema or invariant violations.
[[nodiscard]] Instance instance_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

[[nodiscard]] Instance read_instance_file(const std::filesystem::path& path);

}  // namespace mmw
