#include "tfca/implications.hpp"

#include "tfca/errors.hpp"
#include "tfca/lectic.hpp"

namespace tfca {

bool implication_less(const implication& a, const implication& b) {
  if (a.premise != b.premise) return lectic_less(a.premise, b.premise);
  if (a.conclusion != b.conclusion) return lectic_less(a.conclusion, b.conclusion);
  return false;
}

bitset l_closure(const bitset& start, std::span<const implication> implications) {
  bitset x = start;
  std::vector<bool> fired(implications.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < implications.size(); ++k) {
      if (fired[k]) continue;
      const implication& imp = implications[k];
      if (!imp.premise.is_subset_of(x)) continue;
      fired[k] = true;  // x only grows, so the premise test stays true
      if (!imp.conclusion.is_subset_of(x)) {
        x |= imp.conclusion;
        changed = true;
      }
    }
  }
  return x;
}

bool implication_holds(const formal_context& ctx, const bitset& premise,
                       const bitset& conclusion) {
  return ctx.common_objects(premise).is_subset_of(ctx.common_objects(conclusion));
}

}  // namespace tfca
