#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tfca/bitset.hpp"
#include "tfca/context.hpp"
#include "tfca/triadic.hpp"

namespace tfca {

// Two stacked dyadic tables: k1 = objects x attributes, k2 = the same
// attributes x meta-attributes. k2's object roster must equal k1's
// attribute roster name for name.
struct meta_model {
  formal_context k1;
  formal_context k2;
};

meta_model make_meta_model(formal_context k1, formal_context k2);

// (g,m,b) present iff (g,m) in k1 and (m,b) in k2
triadic_context compose(const meta_model& mm);

// Names injected by the padding operations; user rosters may not use them.
inline constexpr std::string_view kPadEmptyAttribute = "__E_m__";
inline constexpr std::string_view kPadUniversalMeta = "__b_univ__";
inline constexpr std::string_view kPadUniversalObject = "__g_univ__";
inline constexpr std::string_view kPadEmptyMetaRow = "__b_empty__";

bool is_reserved_name(std::string_view name);

struct padding_report {
  std::optional<std::string> added_object;          // into k1's object roster
  std::optional<std::string> added_attribute;       // into the shared attribute roster
  std::optional<std::string> added_meta_attribute;  // into k2's attribute roster
  std::vector<std::string> reasons;
  bool empty() const {
    return !added_object && !added_attribute && !added_meta_attribute;
  }
};

// Make the extent comparison sound: some meta-attribute must hold for every
// attribute, and no object may carry the full attribute row. Adds only the
// missing pieces ( __b_univ__ / __E_m__ ), so the operation is idempotent.
std::pair<meta_model, padding_report> pad_for_extent_iso(const meta_model& mm);

// Dual direction for the modus comparison: some object must carry every
// attribute, and no meta-attribute may hold for all attributes. The second
// half is repaired by a fresh attribute __b_empty__ with a full k1 column
// and an empty k2 row (adding a meta-attribute with an empty column cannot
// empty the shared intent, so the fix lives on the attribute roster).
std::pair<meta_model, padding_report> pad_for_modus_iso(const meta_model& mm);

// Composition route to a conditional table: keep the incidences of the
// attributes that carry every condition in c; empty c leaves k1 unchanged.
formal_context conditional_from_composition(const meta_model& mm, const bitset& c);

// Drop the chosen attribute columns entirely (roster shrinks, survivors
// keep their relative order).
formal_context delete_attributes(const formal_context& ctx, const bitset& m_remove);

// Keep the roster, erase the chosen columns' incidences.
formal_context remove_incidences(const formal_context& ctx, const bitset& m_remove);

// Concept set of delete_attributes(ctx, m_remove) computed from the
// concepts of ctx alone: intents untouched by the cut survive as they are,
// cut intents either collapse onto an existing intent's concept or keep
// their extent. Results are reindexed to the reduced roster. With verify
// set, the output is checked against a fresh enumeration.
std::vector<formal_concept> transfer_concepts_delete(
    const formal_context& ctx, const bitset& m_remove,
    const std::vector<formal_concept>& concepts, bool verify = false);

// Intent set of remove_incidences(ctx, m_remove) from the intents of ctx:
// cut the removed attributes out of every intent, add the full roster, and
// drop it from the cut pass only when (∅, M) was already a concept.
std::vector<bitset> transfer_intents_remove(const formal_context& ctx,
                                            const bitset& m_remove,
                                            const std::vector<bitset>& intents,
                                            bool has_bottom_full);

struct iso_check {
  enum class status { verified, precondition_failed, mismatch };
  status result = status::verified;
  std::optional<bitset> witness;  // lectic-least offending set on a mismatch
  std::string detail;
};

// Extent agreement: the extents of k1 equal the extents of the composed
// triadic context. k must be compose(mm).
iso_check verify_extent_iso(const meta_model& mm, const triadic_context& k);

// Modus agreement: the intents of k2 equal the modi of the composition.
iso_check verify_modus_iso(const meta_model& mm, const triadic_context& k);

}  // namespace tfca
