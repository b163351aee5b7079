#pragma once

#include <filesystem>
#include <string>

#include "hodgelef/instances.hpp"
#include "json.hpp"

namespace hodgelef {

using Json = nlohmann::json;

/// Parse an instance document. Either {"free": {"m": M, "primitive":
/// {"p,q": dim}}} or the explicit form {"m", "hodge", "L_blocks",
/// "gram_blocks", "conj_blocks"}; both may carry "filtration":
/// {"t": {"k": [vector, ...]}}. Without a filtration every level is the
/// largest one the bound |p - q| <= 2t - k allows.
/// All malformed input raises StructuralError.
Instance parse_instance(const Json& doc);
Instance load_instance(const std::filesystem::path& path);

// Always the explicit form, with every stored filtration level.
Json emit_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::filesystem::path& path);

Json scalar_json(const GaussRational& z);
Json matrix_json(const GMatrix& m);
Json vector_json(const GVector& v);
GVector parse_vector(const Json& j);
Bigrade parse_bigrade_key(const std::string& key);
std::string bigrade_key(Bigrade b);

}  // namespace hodgelef
