#include "tfca/next_closure.hpp"

#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "tfca/errors.hpp"

namespace tfca {

next_closure_result next_closure(const formal_context& ctx) {
  const std::size_t n = ctx.attribute_count();
  next_closure_result out;
  out.base.attribute_count = n;

  auto classify = [&](const bitset& a) {
    bitset closed = ctx.intent_closure(a);
    if (closed == a)
      out.intents.push_back(a);
    else
      out.base.implications.push_back({a, closed});
  };

  lectic_cursor cursor(n);
  classify(cursor.current());
  auto close = [&](bitset x) { return l_closure(x, out.base.implications); };
  while (cursor.advance(close)) classify(cursor.current());
  return out;
}

stem_base modified_next_closure(const formal_context& ctx,
                                const std::vector<bitset>& known_intents,
                                const std::vector<implication>& partial,
                                reuse_options opts) {
  const std::size_t n = ctx.attribute_count();
  for (const bitset& b : known_intents)
    if (b.universe() != n)
      throw invalid_input_error("known intent universe does not match the roster");

  std::unordered_set<bitset, bitset_hash> intents(known_intents.begin(), known_intents.end());
  std::unordered_map<bitset, bitset, bitset_hash> pending;
  for (const implication& imp : partial) {
    if (imp.premise.universe() != n || imp.conclusion.universe() != n)
      throw invalid_input_error("partial implication universe does not match the roster");
    pending.emplace(imp.premise, imp.conclusion);
  }

  stem_base base;
  base.attribute_count = n;

  auto classify = [&](const bitset& a) {
    if (auto it = pending.find(a); it != pending.end()) {
      if (opts.validate && ctx.intent_closure(a) != it->second)
        throw inconsistent_input_error(
            "partial base stores a conclusion that is not the premise's closure");
      base.implications.push_back({a, it->second});
      pending.erase(it);
      return;
    }
    if (intents.contains(a)) return;
    bitset closed = ctx.intent_closure(a);
    if (closed == a) {
      intents.insert(a);  // intent the seed list did not know about
      return;
    }
    base.implications.push_back({a, std::move(closed)});
  };

  lectic_cursor cursor(n);
  classify(cursor.current());
  auto close = [&](bitset x) { return l_closure(x, base.implications); };
  while (cursor.advance(close)) classify(cursor.current());

  if (opts.validate && !pending.empty())
    throw inconsistent_input_error("partial base contains premises that are not "
                                   "pseudo-intents of the context");
  return base;
}

bool is_pseudo_intent(const formal_context& ctx, const bitset& candidate,
                      std::size_t max_candidate_bits) {
  if (candidate.universe() != ctx.attribute_count())
    throw invalid_input_error("candidate universe does not match the roster");
  const std::vector<std::size_t> idx = candidate.indices();
  if (idx.size() > max_candidate_bits)
    throw capacity_error("pseudo-intent check over " + std::to_string(idx.size()) +
                         " members exceeds the bound of " +
                         std::to_string(max_candidate_bits));

  auto unpack = [&](std::uint64_t mask) {
    bitset s(ctx.attribute_count());
    for (std::size_t i = 0; i < idx.size(); ++i)
      if ((mask >> i) & 1) s.set(idx[i]);
    return s;
  };

  struct entry {
    bool pseudo;
    bitset closure;
  };
  std::unordered_map<std::uint64_t, entry> memo;

  std::function<const entry&(std::uint64_t)> eval = [&](std::uint64_t mask) -> const entry& {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    bitset s = unpack(mask);
    bitset closed = ctx.intent_closure(s);
    bool pseudo = false;
    if (closed != s) {
      pseudo = true;
      // every strictly smaller pseudo-intent must close inside s
      if (mask != 0) {
        for (std::uint64_t sub = (mask - 1) & mask; pseudo; sub = (sub - 1) & mask) {
          const entry& e = eval(sub);
          if (e.pseudo && !e.closure.is_subset_of(s)) pseudo = false;
          if (sub == 0) break;
        }
      }
    }
    return memo.emplace(mask, entry{pseudo, std::move(closed)}).first->second;
  };

  const std::uint64_t top =
      idx.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << idx.size()) - 1;
  return eval(top).pseudo;
}

}  // namespace tfca
