#pragma once

#include <string>
#include <string_view>

#include "tfca/context.hpp"

namespace tfca {

struct cxt_document {
  std::string name;
  formal_context context;
};

// Burmeister text layout, line-exact: "B", the context name (possibly
// empty), |G|, |M|, the object names, the attribute names, then one
// '.'/'X' row per object. LF line ends; blank lines after the last row are
// tolerated. Reserved padding names are rejected in user rosters.
cxt_document parse_cxt(std::string_view text);

std::string serialize_cxt(const cxt_document& doc);

}  // namespace tfca
