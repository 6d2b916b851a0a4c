/**
 * @file datum_json.hpp
 * @brief JSON interchange for root data.
 *
 * {"name": "...", "rank": n, "simple_roots": [[...], ...], "simple_coroots": [[...], ...]}
 */
#pragma once

#include <string>

#include <json.hpp>

#include "langdual/rootdatum.hpp"

namespace langdual {

/// Parses and validates a document. Malformed JSON, shape errors and datum
/// axiom violations all throw ValidationError; syntax errors carry line:column.
RootDatum parse_datum(const std::string& text);

nlohmann::json datum_to_json(const RootDatum& d);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string emit_datum(const RootDatum& d);

}  // namespace langdual
