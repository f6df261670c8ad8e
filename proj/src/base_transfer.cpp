#include "tfca/base_transfer.hpp"

#include <algorithm>
#include <unordered_set>

#include "tfca/errors.hpp"
#include "tfca/lectic.hpp"
#include "tfca/meta_model.hpp"
#include "tfca/next_closure.hpp"

namespace tfca {

namespace {

void check_inputs(const formal_context& ctx, const bitset& m_remove, const stem_base& base) {
  if (m_remove.universe() != ctx.attribute_count())
    throw invalid_input_error("removal set universe does not match the roster");
  if (base.attribute_count != ctx.attribute_count())
    throw invalid_input_error("stem base universe does not match the roster");
}

// Shared filter of the two transfer directions, over the original roster.
// `occurrence_ctx` is set on the occurrence-removal route only: a premise
// with empty support closes to the full roster there, because the emptied
// columns still contain every object of the empty extent, so its conclusion
// must stay M instead of shrinking. Column deletion has no such case: the
// full reduced roster is exactly the shrunk conclusion.
std::vector<implication> filtered(const stem_base& base, const bitset& m_remove,
                                  const formal_context* occurrence_ctx) {
  std::vector<implication> out;
  for (const implication& imp : base.implications) {
    if ((imp.premise & m_remove).any()) continue;
    if (occurrence_ctx && occurrence_ctx->common_objects(imp.premise).none()) {
      out.push_back({imp.premise, bitset::full(imp.conclusion.universe())});
      continue;
    }
    bitset cut_conclusion = imp.conclusion - m_remove;
    if (cut_conclusion == imp.conclusion) {
      out.push_back(imp);
    } else if (imp.premise != cut_conclusion) {
      out.push_back({imp.premise, std::move(cut_conclusion)});
    }
  }
  return out;
}

bitset reindex_after_delete(const bitset& s, const bitset& m_remove,
                            std::size_t reduced_size) {
  bitset out(reduced_size);
  std::size_t next = 0;
  for (std::size_t m = 0; m < s.universe(); ++m) {
    if (m_remove.test(m)) continue;
    if (s.test(m)) out.set(next);
    ++next;
  }
  return out;
}

}  // namespace

stem_base transfer_base_delete(const formal_context& ctx, const bitset& m_remove,
                               const stem_base& base) {
  check_inputs(ctx, m_remove, base);
  const std::size_t reduced = ctx.attribute_count() - m_remove.count();
  stem_base out;
  out.attribute_count = reduced;
  for (const implication& imp : filtered(base, m_remove, nullptr))
    out.implications.push_back({reindex_after_delete(imp.premise, m_remove, reduced),
                                reindex_after_delete(imp.conclusion, m_remove, reduced)});
  return out;
}

stem_base transfer_base_remove(const formal_context& ctx, const bitset& m_remove,
                               const stem_base& base) {
  check_inputs(ctx, m_remove, base);
  stem_base out;
  out.attribute_count = ctx.attribute_count();
  out.implications = filtered(base, m_remove, &ctx);

  // {m} is a pseudo-intent of the reduced table iff no surviving column is
  // universal (∅ stays closed) and {m} is not the whole roster
  const bitset reduced_empty_closure =
      ctx.common_attributes(bitset::full(ctx.object_count())) - m_remove;
  if (reduced_empty_closure.none() && ctx.attribute_count() > 1) {
    const bitset full = bitset::full(ctx.attribute_count());
    m_remove.for_each([&](std::size_t m) {
      out.implications.push_back({bitset::of(ctx.attribute_count(), {m}), full});
    });
  }
  std::sort(out.implications.begin(), out.implications.end(), implication_less);
  return out;
}

std::vector<implication> pairing_extra_candidates(const formal_context& ctx, std::size_t m,
                                                 const stem_base& base) {
  if (m >= ctx.attribute_count())
    throw invalid_input_error("attribute index out of range");
  if (base.attribute_count != ctx.attribute_count())
    throw invalid_input_error("stem base universe does not match the roster");

  const bitset cut = bitset::of(ctx.attribute_count(), {m});
  const std::size_t reduced = ctx.attribute_count() - 1;

  formal_context cut_ctx = delete_attributes(ctx, cut);
  std::unordered_set<bitset, bitset_hash> reduced_intents;
  for (const bitset& intent : next_closure(cut_ctx).intents) reduced_intents.insert(intent);

  std::vector<implication> out;
  for (const implication& with_m : base.implications) {
    if (!with_m.premise.test(m)) continue;
    for (const implication& adds_m : base.implications) {
      if (adds_m.premise.test(m) || !adds_m.conclusion.test(m)) continue;
      if (!adds_m.conclusion.is_subset_of(with_m.conclusion)) continue;
      bitset premise =
          reindex_after_delete(with_m.premise | adds_m.premise, cut, reduced);
      if (reduced_intents.contains(premise)) continue;
      out.push_back({std::move(premise),
                     reindex_after_delete(with_m.conclusion, cut, reduced)});
    }
  }
  std::sort(out.begin(), out.end(), implication_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tfca
