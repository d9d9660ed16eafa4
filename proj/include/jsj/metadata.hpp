#pragma once

#include <json.hpp>

#include "jsj/assembler.hpp"
#include "jsj/block.hpp"

namespace jsj {

// Matrix entries and positions are written as decimal strings since they
// routinely exceed 64 bits.
nlohmann::json to_json(const AssemblyMetadata& meta);
// Throws StructureError on missing or ill-typed fields.
AssemblyMetadata metadata_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Block& block);

nlohmann::json to_json(const TorusMap& m);
TorusMap torus_map_from_json(const nlohmann::json& j);

}  // namespace jsj
