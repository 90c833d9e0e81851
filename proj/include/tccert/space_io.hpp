#pragma once

#include "tccert/builders.hpp"

#include "json.hpp"

namespace tccert {

/// Malformed input document; the message names the JSON path at fault.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpaceDocument {
    std::string name;
    Space space;
    FieldSpec field;  // document default; CLI --char overrides
};

/// Parses a space document:
///   { "schema_version": 1, "name": ..., "space": {...},
///     "field": {"characteristic": c},           (optional, default 0)
///     "assertions": {...},                      (optional)
///     "marked_classes": [{"name","degree","coordinates"}] }  (optional)
/// space is a tagged union: {"type":"presentation","generators","relators"},
/// {"type":"simplicial","vertices","facets"}, {"type":"bundled","name"},
/// or {"type":"product","factors":[<nested documents>]}.
SpaceDocument parse_space_document(const nlohmann::json& doc);

SpaceDocument load_space_document(const std::string& path);

}  // namespace tccert
