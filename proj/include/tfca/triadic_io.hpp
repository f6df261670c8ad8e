#pragma once

#include <string>
#include <string_view>

#include "tfca/triadic.hpp"

namespace tfca {

inline constexpr std::string_view kTriadicSchema = "triadic-context/1";

struct tri_document {
  std::string name;
  triadic_context context;
};

// JSON document: schema marker, optional name, the three rosters and the
// triple list by name. Unknown schema versions, duplicate or reserved
// names, unknown references and duplicate triples are all rejected.
tri_document parse_triadic(std::string_view text);

// rosters in order, triples sorted by (object, attribute, condition)
std::string serialize_triadic(const tri_document& doc);

}  // namespace tfca
