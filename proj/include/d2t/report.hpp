#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "d2t/partition.hpp"

namespace d2t {

enum class OutputFormat { json, text };

std::optional<OutputFormat> format_from_string(const std::string& name);

// Reports keep their field order as written, so identical runs emit
// byte-identical output (the timing field aside).
using Report = nlohmann::ordered_json;

Report witness_to_json(const OrderedPartition& p);

// json: pretty-printed; text: "key: value" lines, nested keys dotted,
// witness-style arrays one part per line
std::string emit_report(const Report& r, OutputFormat f);

}  // namespace d2t
