#pragma once

#include <cstddef>
#include <vector>

#include "tfca/bitset.hpp"
#include "tfca/context.hpp"
#include "tfca/implications.hpp"

namespace tfca {

// Stem-base implications of delete_attributes(ctx, m_remove) recovered from
// the base of ctx without re-running the enumeration: implications whose
// premise meets the cut are dropped; untouched ones survive; cut conclusions
// shrink unless that collapses the implication onto its own premise.
// Reindexed to the reduced roster. Every output belongs to the reduced base;
// the reduced base may hold more (see pairing_extra_candidates).
stem_base transfer_base_delete(const formal_context& ctx, const bitset& m_remove,
                               const stem_base& base);

// Same filter for remove_incidences(ctx, m_remove) (roster kept), plus
// {m} → M for each removed m when {m} really is a pseudo-intent of the
// reduced table: that needs the reduced closure of ∅ to be empty and
// {m} ≠ M. Emitting it unconditionally would smuggle non-members into the
// base whenever a surviving column is universal.
stem_base transfer_base_remove(const formal_context& ctx, const bitset& m_remove,
                               const stem_base& base);

// Single-attribute deletion only: candidate implications built from pairs
// of base members, one whose premise holds m and one that introduces m in
// its conclusion (the second conclusion lying inside the first). Premises
// already closed in the reduced table are dropped. The candidates all hold
// in the reduced table but need not be stem-base members there.
std::vector<implication> pairing_extra_candidates(const formal_context& ctx, std::size_t m,
                                                 const stem_base& base);

}  // namespace tfca
