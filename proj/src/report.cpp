#include "d2t/report.hpp"

#include <sstream>

namespace d2t {

std::optional<OutputFormat> format_from_string(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "text") return OutputFormat::text;
  return std::nullopt;
}

Report witness_to_json(const OrderedPartition& p) {
  Report parts = Report::array();
  for (const auto& part : p.parts) parts.push_back(part.to_vector());
  return parts;
}

namespace {

bool is_nested_array(const Report& v) {
  return v.is_array() && !v.empty() && v.front().is_array();
}

void render(std::ostream& out, const std::string& key, const Report& v) {
  if (v.is_object()) {
    for (const auto& [k, sub] : v.items())
      render(out, key.empty() ? k : key + "." + k, sub);
  } else if (is_nested_array(v)) {
    out << key << ":\n";
    for (const auto& row : v) {
      bool first = true;
      for (const auto& x : row) {
        if (!first) out << " ";
        out << x.dump();
        first = false;
      }
      out << "\n";
    }
  } else if (v.is_array()) {
    out << key << ":";
    for (const auto& x : v) out << " " << x.dump();
    out << "\n";
  } else if (v.is_string()) {
    out << key << ": " << v.get<std::string>() << "\n";
  } else {
    out << key << ": " << v.dump() << "\n";
  }
}

}  // namespace

std::string emit_report(const Report& r, OutputFormat f) {
  if (f == OutputFormat::json) return r.dump(2) + "\n";
  std::ostringstream out;
  render(out, "", r);
  return out.str();
}

}  // namespace d2t
