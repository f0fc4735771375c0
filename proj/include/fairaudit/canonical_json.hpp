#pragma once

#include <string>

#include "json.hpp"

namespace fairaudit {

/// Deterministic JSON text: object keys sorted, floats printed with 17
/// significant digits, 2-space indentation. Equal documents always produce
/// equal bytes, which is what the byte-identity guarantees of the CLI rest
/// on.
std::string canonical_dump(const nlohmann::json& j);

/// Same determinism, no whitespace; used for single-line error objects.
std::string canonical_dump_compact(const nlohmann::json& j);

} // namespace fairaudit
