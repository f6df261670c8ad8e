#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tfca/bitset.hpp"
#include "tfca/context.hpp"
#include "tfca/implications.hpp"
#include "tfca/meta_model.hpp"
#include "tfca/triadic.hpp"

namespace tfca {

// One row of a conditional stem-base table. Composed runs key the cache on
// the attribute set the conditions select; a hit stores a back reference
// instead of a second copy of the base. Generic runs have no second table
// to derive the attribute set from, so it stays empty there.
struct base_table_entry {
  bitset conditions;
  std::optional<bitset> attribute_set;
  std::optional<stem_base> own_base;
  std::optional<std::size_t> reused_from;
};

struct conditional_base_table {
  std::size_t attribute_count = 0;
  std::vector<base_table_entry> entries;
  const stem_base& base_of(std::size_t idx) const;
};

// Composed pipeline over every condition subset, walked in ascending lectic
// order. Entry 0 is the seed: the empty condition set keeps k1 as it is, so
// its base is k1's own stem base and its attribute set the full roster. Each
// later entry either reuses an earlier one with the same selected attribute
// set or runs the reuse-aware enumeration seeded by the transfer rules.
conditional_base_table triadic_base_composed(const meta_model& mm);

// Same table from the bare triadic context: direct conditional tables and
// plain enumerations, no seed entry, no cache.
conditional_base_table triadic_base_generic(const triadic_context& k);

// Single conditions only (descending roster order), plus the seed entry on
// the composed route; same cache discipline as the full walk.
conditional_base_table conditional_base_composed(const meta_model& mm);

conditional_base_table conditional_base_generic(const triadic_context& k);

// Rebuilds the conditional table behind every reused entry and its source
// and demands identical incidence; returns how many reuses were checked.
std::size_t verify_reuse(const meta_model& mm, const conditional_base_table& table);

// R → S under the conditions C, read directly off the ternary incidence:
// the objects related to all of R × C are related to all of S × C.
bool triadic_implication_holds(const triadic_context& k, const bitset& premise,
                               const bitset& conclusion, const bitset& conditions);

// R → S separately under each single condition in C (vacuously true for ∅).
bool conditional_implication_holds(const triadic_context& k, const bitset& premise,
                                   const bitset& conclusion, const bitset& conditions);

// Cross table of the per-condition stem-base members: one object per
// distinct implication, one attribute per condition, incidence = "holds
// under that condition alone".
struct implication_aggregate {
  formal_context table;
  std::vector<implication> implications;  // row i of the table
};

implication_aggregate build_implication_aggregate(const triadic_context& k,
                                                  const conditional_base_table& per_condition);

}  // namespace tfca
