#include "tfca/meta_model.hpp"

#include <algorithm>
#include <unordered_set>

#include "tfca/errors.hpp"
#include "tfca/lectic.hpp"
#include "tfca/next_closure.hpp"

namespace tfca {

meta_model make_meta_model(formal_context k1, formal_context k2) {
  if (k1.attribute_names() != k2.object_names())
    throw invalid_input_error(
        "k2's object roster must equal k1's attribute roster (same names, same order)");
  return {std::move(k1), std::move(k2)};
}

triadic_context compose(const meta_model& mm) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
  for (std::size_t m = 0; m < mm.k1.attribute_count(); ++m) {
    const bitset& gs = mm.k1.column(m);
    const bitset& bs = mm.k2.row(m);
    gs.for_each([&](std::size_t g) {
      bs.for_each([&](std::size_t b) { triples.emplace_back(g, m, b); });
    });
  }
  return triadic_context(mm.k1.object_names(), mm.k1.attribute_names(),
                         mm.k2.attribute_names(), triples);
}

bool is_reserved_name(std::string_view name) {
  return name == kPadEmptyAttribute || name == kPadUniversalMeta ||
         name == kPadUniversalObject || name == kPadEmptyMetaRow;
}

namespace {

bool has_universal_column(const formal_context& ctx) {
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
    if (ctx.column(m).is_full()) return true;
  return false;
}

bool has_universal_row(const formal_context& ctx) {
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    if (ctx.row(g).is_full()) return true;
  return false;
}

formal_context with_extra(const formal_context& ctx, bool add_object,
                          const std::string& object_name, bool full_object_row,
                          bool add_attribute, const std::string& attribute_name,
                          bool full_attribute_col) {
  auto objects = ctx.object_names();
  auto attributes = ctx.attribute_names();
  auto pairs = ctx.incidence_pairs();
  if (add_object) {
    objects.push_back(object_name);
    if (full_object_row)
      for (std::size_t m = 0; m < attributes.size(); ++m)
        pairs.emplace_back(objects.size() - 1, m);
  }
  if (add_attribute) {
    attributes.push_back(attribute_name);
    if (full_attribute_col)
      for (std::size_t g = 0; g < objects.size(); ++g)
        pairs.emplace_back(g, attributes.size() - 1);
  }
  return formal_context(std::move(objects), std::move(attributes), pairs);
}

}  // namespace

std::pair<meta_model, padding_report> pad_for_extent_iso(const meta_model& mm) {
  padding_report report;
  // no object may already carry the whole row, else (∅, M) is not a concept
  const bool need_empty_attribute = has_universal_row(mm.k1);
  const bool need_universal_meta = !has_universal_column(mm.k2);

  if (need_empty_attribute) {
    report.added_attribute = std::string(kPadEmptyAttribute);
    report.reasons.push_back(
        "an object carries every attribute; added an attribute held by no object");
  }
  if (need_universal_meta) {
    report.added_meta_attribute = std::string(kPadUniversalMeta);
    report.reasons.push_back(
        "no meta-attribute holds for every attribute; added a universal one");
  }
  if (report.empty()) return {mm, report};

  // the new attribute has an empty k1 column and a full k2 row, and the new
  // meta-attribute covers the whole (possibly grown) attribute roster
  formal_context k1 = with_extra(mm.k1, false, "", false, need_empty_attribute,
                                 std::string(kPadEmptyAttribute), false);
  formal_context k2 = with_extra(mm.k2, need_empty_attribute,
                                 std::string(kPadEmptyAttribute), true,
                                 need_universal_meta, std::string(kPadUniversalMeta), true);
  return {make_meta_model(std::move(k1), std::move(k2)), report};
}

std::pair<meta_model, padding_report> pad_for_modus_iso(const meta_model& mm) {
  padding_report report;
  const bool need_universal_object = !has_universal_row(mm.k1);
  // shared intent of all k2 objects must be empty, else (M, ∅) is no concept
  const bool need_empty_meta_row =
      mm.k2.common_attributes(bitset::full(mm.k2.object_count())).any();

  if (need_universal_object) {
    report.added_object = std::string(kPadUniversalObject);
    report.reasons.push_back(
        "no object carries every attribute; added a universal one");
  }
  if (need_empty_meta_row) {
    report.added_attribute = std::string(kPadEmptyMetaRow);
    report.reasons.push_back(
        "a meta-attribute holds for every attribute; added an attribute with "
        "no meta-attributes (full k1 column)");
  }
  if (report.empty()) return {mm, report};

  formal_context k1 = with_extra(mm.k1, need_universal_object,
                                 std::string(kPadUniversalObject), true,
                                 need_empty_meta_row, std::string(kPadEmptyMetaRow), true);
  formal_context k2 = with_extra(mm.k2, need_empty_meta_row,
                                 std::string(kPadEmptyMetaRow), false, false, "", false);
  return {make_meta_model(std::move(k1), std::move(k2)), report};
}

formal_context conditional_from_composition(const meta_model& mm, const bitset& c) {
  if (c.universe() != mm.k2.attribute_count())
    throw invalid_input_error("condition set universe does not match k2's attributes");
  if (c.none()) return mm.k1;
  bitset kept_attributes = mm.k2.common_objects(c);  // attributes carrying all of c
  return remove_incidences(mm.k1, kept_attributes.complement());
}

formal_context delete_attributes(const formal_context& ctx, const bitset& m_remove) {
  if (m_remove.universe() != ctx.attribute_count())
    throw invalid_input_error("removal set universe does not match the roster");
  std::vector<std::string> attributes;
  std::vector<std::size_t> keep;
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
    if (!m_remove.test(m)) {
      keep.push_back(m);
      attributes.push_back(ctx.attribute_names()[m]);
    }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    for (std::size_t new_m = 0; new_m < keep.size(); ++new_m)
      if (ctx.row(g).test(keep[new_m])) pairs.emplace_back(g, new_m);
  return formal_context(ctx.object_names(), std::move(attributes), pairs);
}

formal_context remove_incidences(const formal_context& ctx, const bitset& m_remove) {
  if (m_remove.universe() != ctx.attribute_count())
    throw invalid_input_error("removal set universe does not match the roster");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    bitset kept = ctx.row(g) - m_remove;
    kept.for_each([&](std::size_t m) { pairs.emplace_back(g, m); });
  }
  return formal_context(ctx.object_names(), ctx.attribute_names(), pairs);
}

namespace {

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

std::vector<formal_concept> transfer_concepts_delete(
    const formal_context& ctx, const bitset& m_remove,
    const std::vector<formal_concept>& concepts, bool verify) {
  if (m_remove.universe() != ctx.attribute_count())
    throw invalid_input_error("removal set universe does not match the roster");
  const std::size_t reduced = ctx.attribute_count() - m_remove.count();

  // One column per pass: the collapse test must ask whether the trimmed
  // intent is an intent of the table the pass starts from, so later passes
  // work on the survivors of earlier ones. Intents stay on the full-roster
  // universe until the final reindex; distinct intents stay distinct within
  // a pass, so only the collapse case can drop a concept.
  std::vector<formal_concept> work = concepts;
  m_remove.for_each([&](std::size_t m) {
    std::unordered_set<bitset, bitset_hash> current;
    for (const formal_concept& c : work) current.insert(c.intent);
    std::vector<formal_concept> next;
    next.reserve(work.size());
    for (formal_concept& c : work) {
      if (!c.intent.test(m)) {
        next.push_back(std::move(c));
        continue;
      }
      bitset rest = c.intent;
      rest.reset(m);
      if (current.contains(rest)) continue;  // merges into rest's own concept
      next.push_back({std::move(c.extent), std::move(rest)});
    }
    work = std::move(next);
  });

  std::vector<formal_concept> out;
  out.reserve(work.size());
  for (formal_concept& c : work)
    out.push_back({std::move(c.extent), reindex_after_delete(c.intent, m_remove, reduced)});
  sort_concepts(out);

  if (verify) {
    formal_context cut_ctx = delete_attributes(ctx, m_remove);
    std::vector<formal_concept> expect;
    for (const bitset& intent : next_closure(cut_ctx).intents)
      expect.push_back({cut_ctx.common_objects(intent), intent});
    sort_concepts(expect);
    if (expect != out)
      throw inconsistent_input_error(
          "transferred concepts disagree with a fresh enumeration; the input "
          "concept set was not the full lattice of the context");
  }
  return out;
}

std::vector<bitset> transfer_intents_remove(const formal_context& ctx,
                                            const bitset& m_remove,
                                            const std::vector<bitset>& intents,
                                            bool has_bottom_full) {
  if (m_remove.universe() != ctx.attribute_count())
    throw invalid_input_error("removal set universe does not match the roster");
  const bitset full = bitset::full(ctx.attribute_count());
  std::unordered_set<bitset, bitset_hash> seen;
  std::vector<bitset> out;
  auto push = [&](bitset s) {
    if (seen.insert(s).second) out.push_back(std::move(s));
  };
  for (const bitset& intent : intents) {
    if (intent.universe() != ctx.attribute_count())
      throw invalid_input_error("intent universe does not match the roster");
    if (has_bottom_full && intent == full) continue;
    push(intent - m_remove);
  }
  push(full);
  std::sort(out.begin(), out.end(),
            [](const bitset& a, const bitset& b) { return lectic_less(a, b); });
  return out;
}

namespace {

std::vector<bitset> sorted_unique(std::vector<bitset> sets) {
  std::sort(sets.begin(), sets.end(),
            [](const bitset& a, const bitset& b) { return lectic_less(a, b); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

// first set in lectic order present in exactly one of the two sorted lists
std::optional<bitset> first_difference(const std::vector<bitset>& a,
                                       const std::vector<bitset>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && a[i] == b[j]) {
      ++i, ++j;
      continue;
    }
    if (j == b.size() || (i < a.size() && lectic_less(a[i], b[j]))) return a[i];
    return b[j];
  }
  return std::nullopt;
}

}  // namespace

iso_check verify_extent_iso(const meta_model& mm, const triadic_context& k) {
  if (!compose(mm).same_table_as(k))
    throw invalid_input_error("triadic context is not the composition of the model");

  iso_check out;
  std::vector<std::string> missing;
  if (!has_universal_column(mm.k2))
    missing.push_back("no meta-attribute holds for every attribute");
  if (has_universal_row(mm.k1))
    missing.push_back("an object carries every attribute, so (empty, M) is no concept");
  if (!missing.empty()) {
    out.result = iso_check::status::precondition_failed;
    out.detail = missing[0];
    for (std::size_t i = 1; i < missing.size(); ++i) out.detail += "; " + missing[i];
    return out;
  }

  std::vector<bitset> side1;
  for (const bitset& intent : next_closure(mm.k1).intents)
    side1.push_back(mm.k1.common_objects(intent));
  side1 = sorted_unique(std::move(side1));

  std::vector<bitset> side2;
  for (const tri_concept& c : all_tri_concepts(k)) side2.push_back(c.extent);
  side2 = sorted_unique(std::move(side2));

  if (side1 == side2) return out;
  out.result = iso_check::status::mismatch;
  out.witness = first_difference(side1, side2);
  out.detail = "extents of k1 and of the composition differ";
  return out;
}

iso_check verify_modus_iso(const meta_model& mm, const triadic_context& k) {
  if (!compose(mm).same_table_as(k))
    throw invalid_input_error("triadic context is not the composition of the model");

  iso_check out;
  std::vector<std::string> missing;
  if (!has_universal_row(mm.k1))
    missing.push_back("no object carries every attribute");
  if (mm.k2.common_attributes(bitset::full(mm.k2.object_count())).any())
    missing.push_back(
        "a meta-attribute holds for every attribute, so (M, empty) is no concept");
  if (!missing.empty()) {
    out.result = iso_check::status::precondition_failed;
    out.detail = missing[0];
    for (std::size_t i = 1; i < missing.size(); ++i) out.detail += "; " + missing[i];
    return out;
  }

  std::vector<bitset> side1 = next_closure(mm.k2).intents;
  side1 = sorted_unique(std::move(side1));

  std::vector<bitset> side2;
  for (const tri_concept& c : all_tri_concepts(k)) side2.push_back(c.modus);
  side2 = sorted_unique(std::move(side2));

  if (side1 == side2) return out;
  out.result = iso_check::status::mismatch;
  out.witness = first_difference(side1, side2);
  out.detail = "intents of k2 and modi of the composition differ";
  return out;
}

}  // namespace tfca
