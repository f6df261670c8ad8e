#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "tfca/bitset.hpp"
#include "tfca/context.hpp"
#include "tfca/implications.hpp"
#include "tfca/lectic.hpp"

namespace tfca {

// Walks the closed sets of a (possibly evolving) closure operator in lectic
// order, starting from the closure of the empty set. The operator is handed
// in per advance because the stem-base run extends it while walking.
class lectic_cursor {
 public:
  explicit lectic_cursor(std::size_t universe) : current_(universe) {}

  const bitset& current() const { return current_; }
  bool at_top() const { return current_.count() == current_.universe(); }

  // Move to the lectically next closed set; false once the full set is
  // reached. `close` must be a closure operator on the universe.
  template <typename Close>
  bool advance(Close&& close) {
    if (at_top()) return false;
    for (int i = static_cast<int>(current_.universe()) - 1; i >= 0; --i) {
      std::size_t idx = static_cast<std::size_t>(i);
      if (current_.test(idx)) continue;
      bitset cand = close(lectic_plus(current_, idx));
      if (lectic_less_at(current_, cand, idx)) {
        current_ = cand;
        return true;
      }
    }
    return false;  // unreachable for a genuine closure operator
  }

 private:
  bitset current_;
};

struct next_closure_result {
  std::vector<bitset> intents;  // lectic ascending; contains ∅ when closed
  stem_base base;
};

// Full stem-base + intent enumeration of ctx. The empty set is classified
// up front: when ∅ ≠ ∅″ the base opens with ∅ → ∅″.
next_closure_result next_closure(const formal_context& ctx);

struct reuse_options {
  // re-derive every consumed conclusion and flag leftovers; off by default
  // because trusted inputs come from the transfer rules
  bool validate = false;
};

// Same walk as next_closure, but known intents are skipped without closure
// computation and implications whose premise is hit are taken from
// `partial` instead of being re-derived.
stem_base modified_next_closure(const formal_context& ctx,
                                const std::vector<bitset>& known_intents,
                                const std::vector<implication>& partial,
                                reuse_options opts = {});

// Recursive definition, memoized over subsets of the candidate; independent
// of the enumeration above so the two can check each other.
bool is_pseudo_intent(const formal_context& ctx, const bitset& candidate,
                      std::size_t max_candidate_bits = 20);

}  // namespace tfca
