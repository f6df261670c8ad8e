#include "tfca/base_tables.hpp"

#include <algorithm>
#include <string>

#include "tfca/base_transfer.hpp"
#include "tfca/errors.hpp"
#include "tfca/lectic.hpp"
#include "tfca/next_closure.hpp"

namespace tfca {

const stem_base& conditional_base_table::base_of(std::size_t idx) const {
  if (idx >= entries.size()) throw invalid_input_error("base table index out of range");
  std::size_t hops = 0;
  while (entries[idx].reused_from) {
    idx = *entries[idx].reused_from;
    if (idx >= entries.size() || ++hops > entries.size())
      throw inconsistent_input_error("reuse links in the base table do not resolve");
  }
  if (!entries[idx].own_base)
    throw inconsistent_input_error("base table entry has neither base nor reuse link");
  return *entries[idx].own_base;
}

namespace {

// successor in the subset walk: C + max(B \ C)
bitset next_condition_set(const bitset& c) {
  bitset missing = c.complement();
  int i = missing.last_set();
  return lectic_plus(c, static_cast<std::size_t>(i));
}

struct composed_seed {
  next_closure_result k1_run;
  bool bottom_full;  // (∅, M) ∈ 𝔅(k1)
};

composed_seed seed_of(const meta_model& mm) {
  composed_seed s{next_closure(mm.k1),
                  mm.k1.common_objects(bitset::full(mm.k1.attribute_count())).none()};
  return s;
}

base_table_entry composed_entry(const meta_model& mm, const composed_seed& seed,
                                const bitset& c,
                                const std::vector<base_table_entry>& entries) {
  base_table_entry e;
  e.conditions = c;
  bitset cj = mm.k2.common_objects(c);
  for (std::size_t j = 0; j < entries.size(); ++j)
    if (entries[j].attribute_set && *entries[j].attribute_set == cj) {
      e.attribute_set = std::move(cj);
      e.reused_from = j;
      return e;
    }
  bitset m_remove = cj.complement();
  std::vector<bitset> known =
      transfer_intents_remove(mm.k1, m_remove, seed.k1_run.intents, seed.bottom_full);
  stem_base partial = transfer_base_remove(mm.k1, m_remove, seed.k1_run.base);
  formal_context table = remove_incidences(mm.k1, m_remove);
  e.own_base = modified_next_closure(table, known, partial.implications);
  e.attribute_set = std::move(cj);
  return e;
}

}  // namespace

conditional_base_table triadic_base_composed(const meta_model& mm) {
  const composed_seed seed = seed_of(mm);
  conditional_base_table out;
  out.attribute_count = mm.k1.attribute_count();

  base_table_entry top;
  top.conditions = bitset(mm.k2.attribute_count());
  top.attribute_set = bitset::full(mm.k1.attribute_count());
  top.own_base = seed.k1_run.base;
  out.entries.push_back(std::move(top));

  bitset c(mm.k2.attribute_count());
  while (!c.is_full()) {
    c = next_condition_set(c);
    out.entries.push_back(composed_entry(mm, seed, c, out.entries));
  }
  return out;
}

conditional_base_table triadic_base_generic(const triadic_context& k) {
  conditional_base_table out;
  out.attribute_count = k.attribute_count();
  bitset c(k.condition_count());
  while (!c.is_full()) {
    c = next_condition_set(c);
    base_table_entry e;
    e.conditions = c;
    e.own_base = next_closure(conditional_context(k, c)).base;
    out.entries.push_back(std::move(e));
  }
  return out;
}

conditional_base_table conditional_base_composed(const meta_model& mm) {
  const composed_seed seed = seed_of(mm);
  conditional_base_table out;
  out.attribute_count = mm.k1.attribute_count();

  base_table_entry top;
  top.conditions = bitset(mm.k2.attribute_count());
  top.attribute_set = bitset::full(mm.k1.attribute_count());
  top.own_base = seed.k1_run.base;
  out.entries.push_back(std::move(top));

  for (std::size_t b = mm.k2.attribute_count(); b-- > 0;)
    out.entries.push_back(composed_entry(
        mm, seed, bitset::of(mm.k2.attribute_count(), {b}), out.entries));
  return out;
}

conditional_base_table conditional_base_generic(const triadic_context& k) {
  conditional_base_table out;
  out.attribute_count = k.attribute_count();
  for (std::size_t b = k.condition_count(); b-- > 0;) {
    base_table_entry e;
    e.conditions = bitset::of(k.condition_count(), {b});
    e.own_base = next_closure(conditional_context(k, e.conditions)).base;
    out.entries.push_back(std::move(e));
  }
  return out;
}

std::size_t verify_reuse(const meta_model& mm, const conditional_base_table& table) {
  std::size_t checked = 0;
  for (const base_table_entry& e : table.entries) {
    if (!e.reused_from) continue;
    const base_table_entry& src = table.entries.at(*e.reused_from);
    formal_context mine = conditional_from_composition(mm, e.conditions);
    formal_context theirs = conditional_from_composition(mm, src.conditions);
    if (!mine.same_table_as(theirs))
      throw inconsistent_input_error(
          "cache reuse joined two condition sets with different conditional tables");
    ++checked;
  }
  return checked;
}

bool triadic_implication_holds(const triadic_context& k, const bitset& premise,
                               const bitset& conclusion, const bitset& conditions) {
  bitset lhs = k.derive_pairs(axis::objects, k.box_pairs(axis::objects, premise, conditions));
  bitset rhs =
      k.derive_pairs(axis::objects, k.box_pairs(axis::objects, conclusion, conditions));
  return lhs.is_subset_of(rhs);
}

bool conditional_implication_holds(const triadic_context& k, const bitset& premise,
                                   const bitset& conclusion, const bitset& conditions) {
  if (conditions.universe() != k.condition_count())
    throw invalid_input_error("condition set universe does not match the roster");
  bool ok = true;
  conditions.for_each([&](std::size_t b) {
    if (!triadic_implication_holds(k, premise, conclusion,
                                   bitset::of(k.condition_count(), {b})))
      ok = false;
  });
  return ok;
}

implication_aggregate build_implication_aggregate(const triadic_context& k,
                                                  const conditional_base_table& per_condition) {
  std::vector<implication> rows;
  for (std::size_t idx = 0; idx < per_condition.entries.size(); ++idx) {
    if (per_condition.entries[idx].conditions.count() != 1) continue;  // skip the seed
    for (const implication& imp : per_condition.base_of(idx).implications) {
      if (imp.premise.universe() != k.attribute_count())
        throw invalid_input_error("base table universe does not match the context");
      if (imp.conclusion.is_subset_of(imp.premise)) continue;  // trivial
      rows.push_back(imp);
    }
  }
  std::sort(rows.begin(), rows.end(), implication_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  auto render = [&](const bitset& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t m) {
      if (!first) out += ",";
      out += k.attribute_names()[m];
      first = false;
    });
    return out + "}";
  };

  std::vector<std::string> object_names;
  for (const implication& imp : rows)
    object_names.push_back(render(imp.premise) + " -> " + render(imp.conclusion));

  std::vector<formal_context> layers;
  for (std::size_t b = 0; b < k.condition_count(); ++b)
    layers.push_back(conditional_context(k, bitset::of(k.condition_count(), {b})));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t b = 0; b < k.condition_count(); ++b)
      if (implication_holds(layers[b], rows[i].premise, rows[i].conclusion))
        pairs.emplace_back(i, b);
  implication_aggregate out{
      formal_context(std::move(object_names), k.condition_names(), pairs), std::move(rows)};
  return out;
}

}  // namespace tfca
