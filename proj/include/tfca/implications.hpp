#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tfca/bitset.hpp"
#include "tfca/context.hpp"

namespace tfca {

struct implication {
  bitset premise;
  bitset conclusion;
  bool operator==(const implication& o) const = default;
};

// premise lectic order first, conclusion as tie break
bool implication_less(const implication& a, const implication& b);

struct stem_base {
  std::size_t attribute_count = 0;
  std::vector<implication> implications;
  bool operator==(const stem_base& o) const = default;
};

// Least superset of start closed under "premise inside, add conclusion".
bitset l_closure(const bitset& start, std::span<const implication> implications);

// R → S holds in ctx iff the objects of R all carry S, i.e. R′ ⊆ S′.
bool implication_holds(const formal_context& ctx, const bitset& premise,
                       const bitset& conclusion);

}  // namespace tfca
