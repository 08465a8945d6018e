#pragma once

#include <string>

#include "json.hpp"

namespace tfym {

using ojson = nlohmann::ordered_json;

// Two-space indentation, but arrays of scalars stay on one line so matrices and
// tensor entries read as rows.
inline void pretty_json(const ojson& j, std::string& out, int indent = 0) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + ojson(it.key()).dump() + ": ";
      pretty_json(it.value(), out, indent + 2);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    auto scalars = [](const ojson& a) {
      for (const auto& e : a)
        if (e.is_structured()) return false;
      return true;
    };
    if (j.empty() || scalars(j)) {
      out += j.dump();
      return;
    }
    bool rows = true;
    for (const auto& e : j) rows = rows && e.is_array() && scalars(e);
    out += "[\n";
    for (size_t i = 0; i < j.size(); ++i) {
      out += inner;
      if (rows)
        out += j[i].dump();
      else
        pretty_json(j[i], out, indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

inline std::string pretty_json(const ojson& j) {
  std::string out;
  pretty_json(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace tfym
