#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "znp/quotient_graph.hpp"

namespace znp {

/// Strict reader for the model document
///   {"rank": n, "base": "v0", "vertices": [...],
///    "edges": [{"from", "to", "length": "p/q", "voltage": [..]}]}.
/// Unknown keys, decimal lengths and type mismatches raise InvalidModel.
QuotientGraph parse_model(const nlohmann::json& doc);
QuotientGraph load_model(const std::filesystem::path& path);

nlohmann::json model_to_json(const QuotientGraph& g);

/// Writes `contents` to a sibling temporary file and renames it into place.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace znp
