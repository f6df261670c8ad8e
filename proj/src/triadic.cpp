#include "tfca/triadic.hpp"

#include <algorithm>
#include <unordered_set>

#include "tfca/errors.hpp"
#include "tfca/next_closure.hpp"

namespace tfca {

namespace {

void check_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw invalid_input_error(std::string("duplicate ") + what + " name: " + n);
}

struct tri_concept_hash {
  std::size_t operator()(const tri_concept& c) const {
    return c.extent.hash() * 31 + c.intent.hash() * 7 + c.modus.hash();
  }
};

}  // namespace

axis axis_from_int(int i) {
  if (i < 1 || i > 3)
    throw invalid_input_error("axis must be 1, 2 or 3, got " + std::to_string(i));
  return static_cast<axis>(i);
}

triadic_context::triadic_context(
    std::vector<std::string> objects, std::vector<std::string> attributes,
    std::vector<std::string> conditions,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& triples)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      conditions_(std::move(conditions)) {
  check_unique(objects_, "object");
  check_unique(attributes_, "attribute");
  check_unique(conditions_, "condition");
  const std::size_t ng = objects_.size(), nm = attributes_.size(), nb = conditions_.size();
  g_slices_.assign(ng, bitset(nm * nb));
  m_slices_.assign(nm, bitset(ng * nb));
  b_slices_.assign(nb, bitset(ng * nm));
  for (auto [g, m, b] : triples) {
    if (g >= ng || m >= nm || b >= nb)
      throw invalid_input_error("triple (" + std::to_string(g) + "," + std::to_string(m) +
                                "," + std::to_string(b) + ") outside the rosters");
    g_slices_[g].set(m * nb + b);
    m_slices_[m].set(g * nb + b);
    b_slices_[b].set(g * nm + m);
  }
}

std::size_t triadic_context::roster_size(axis i) const {
  switch (i) {
    case axis::objects: return objects_.size();
    case axis::attributes: return attributes_.size();
    case axis::conditions: return conditions_.size();
  }
  throw invalid_input_error("bad axis");
}

const std::vector<std::string>& triadic_context::roster_names(axis i) const {
  switch (i) {
    case axis::objects: return objects_;
    case axis::attributes: return attributes_;
    case axis::conditions: return conditions_;
  }
  throw invalid_input_error("bad axis");
}

bool triadic_context::contains(std::size_t g, std::size_t m, std::size_t b) const {
  if (g >= objects_.size() || m >= attributes_.size() || b >= conditions_.size())
    throw invalid_input_error("triple query outside the rosters");
  return b_slices_[b].test(g * attributes_.size() + m);
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triadic_context::triples()
    const {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  const std::size_t nb = conditions_.size();
  for (std::size_t g = 0; g < g_slices_.size(); ++g)
    g_slices_[g].for_each([&](std::size_t mb) {
      out.emplace_back(g, mb / nb, mb % nb);
    });
  return out;
}

std::size_t triadic_context::triple_count() const {
  std::size_t n = 0;
  for (const auto& s : g_slices_) n += s.count();
  return n;
}

std::size_t triadic_context::pair_universe(axis i) const {
  switch (i) {
    case axis::objects: return attributes_.size() * conditions_.size();
    case axis::attributes: return objects_.size() * conditions_.size();
    case axis::conditions: return objects_.size() * attributes_.size();
  }
  throw invalid_input_error("bad axis");
}

std::size_t triadic_context::pair_index(axis i, std::size_t j_elem, std::size_t k_elem) const {
  switch (i) {
    case axis::objects:
      if (j_elem >= attributes_.size() || k_elem >= conditions_.size())
        throw invalid_input_error("pair index outside the rosters");
      return j_elem * conditions_.size() + k_elem;
    case axis::attributes:
      if (j_elem >= objects_.size() || k_elem >= conditions_.size())
        throw invalid_input_error("pair index outside the rosters");
      return j_elem * conditions_.size() + k_elem;
    case axis::conditions:
      if (j_elem >= objects_.size() || k_elem >= attributes_.size())
        throw invalid_input_error("pair index outside the rosters");
      return j_elem * attributes_.size() + k_elem;
  }
  throw invalid_input_error("bad axis");
}

const std::vector<bitset>& triadic_context::slices(axis i) const {
  switch (i) {
    case axis::objects: return g_slices_;
    case axis::attributes: return m_slices_;
    case axis::conditions: return b_slices_;
  }
  throw invalid_input_error("bad axis");
}

bitset triadic_context::derive_set(axis i, const bitset& x) const {
  if (x.universe() != roster_size(i))
    throw invalid_input_error("set universe does not match the axis roster");
  bitset out = bitset::full(pair_universe(i));
  const auto& sl = slices(i);
  x.for_each([&](std::size_t e) { out &= sl[e]; });
  return out;
}

bitset triadic_context::derive_pairs(axis i, const bitset& z) const {
  if (z.universe() != pair_universe(i))
    throw invalid_input_error("pair set universe does not match the axis");
  bitset out(roster_size(i));
  const auto& sl = slices(i);
  for (std::size_t e = 0; e < sl.size(); ++e)
    if (z.is_subset_of(sl[e])) out.set(e);
  return out;
}

bitset triadic_context::box_pairs(axis i, const bitset& j_set, const bitset& k_set) const {
  bitset out(pair_universe(i));
  j_set.for_each([&](std::size_t j) {
    k_set.for_each([&](std::size_t k) { out.set(pair_index(i, j, k)); });
  });
  return out;
}

formal_context triadic_context::condition_layer(std::size_t b) const {
  if (b >= conditions_.size()) throw invalid_input_error("condition index out of range");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t nm = attributes_.size();
  b_slices_[b].for_each([&](std::size_t gm) { pairs.emplace_back(gm / nm, gm % nm); });
  return formal_context(objects_, attributes_, pairs);
}

bool triadic_context::same_table_as(const triadic_context& o) const {
  return objects_ == o.objects_ && attributes_ == o.attributes_ &&
         conditions_ == o.conditions_ && g_slices_ == o.g_slices_;
}

namespace {

// the two non-pivot axes in ascending order, matching the pair layout
std::pair<axis, axis> other_axes(axis i) {
  switch (i) {
    case axis::objects: return {axis::attributes, axis::conditions};
    case axis::attributes: return {axis::objects, axis::conditions};
    case axis::conditions: return {axis::objects, axis::attributes};
  }
  throw invalid_input_error("bad axis");
}

void place(tri_concept& c, axis i, bitset value) {
  switch (i) {
    case axis::objects: c.extent = std::move(value); return;
    case axis::attributes: c.intent = std::move(value); return;
    case axis::conditions: c.modus = std::move(value); return;
  }
}

bool is_tri_concept(const triadic_context& k, const tri_concept& c) {
  for (axis i : {axis::objects, axis::attributes, axis::conditions}) {
    auto [j, kx] = other_axes(i);
    bitset box = k.box_pairs(i, component_of(c, j), component_of(c, kx));
    if (k.derive_pairs(i, box) != component_of(c, i)) return false;
  }
  return true;
}

}  // namespace

std::vector<tri_concept> all_tri_concepts(const triadic_context& k,
                                          std::size_t max_pivot_subsets) {
  axis pivot = axis::objects;
  for (axis i : {axis::attributes, axis::conditions})
    if (k.roster_size(i) < k.roster_size(pivot)) pivot = i;
  const std::size_t n = k.roster_size(pivot);
  if (n >= 63 || (std::size_t{1} << n) > max_pivot_subsets)
    throw capacity_error("2^" + std::to_string(n) +
                         " pivot subsets exceed the bound of " +
                         std::to_string(max_pivot_subsets));

  auto [aj, ak] = other_axes(pivot);
  const std::size_t nk = k.roster_size(ak);

  std::unordered_set<bitset, bitset_hash> seen_pair_sets;
  std::unordered_set<tri_concept, tri_concept_hash> found;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bitset s(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.set(i);
    bitset z = k.derive_set(pivot, s);
    if (!seen_pair_sets.insert(z).second) continue;

    // dyadic table of the surviving pairs over the two remaining axes
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    z.for_each([&](std::size_t p) { pairs.emplace_back(p / nk, p % nk); });
    formal_context pair_table(k.roster_names(aj), k.roster_names(ak), pairs);

    for (const bitset& intent : next_closure(pair_table).intents) {
      tri_concept cand;
      place(cand, aj, pair_table.common_objects(intent));
      place(cand, ak, intent);
      place(cand, pivot,
            k.derive_pairs(pivot, k.box_pairs(pivot, component_of(cand, aj),
                                              component_of(cand, ak))));
      if (is_tri_concept(k, cand)) found.insert(std::move(cand));
    }
  }

  std::vector<tri_concept> out(found.begin(), found.end());
  sort_tri_concepts(out);
  return out;
}

std::vector<tri_concept> all_tri_concepts_bruteforce(const triadic_context& k,
                                                     std::size_t max_candidates) {
  const std::size_t ng = k.object_count(), nm = k.attribute_count();
  if (ng + nm >= 63 ||
      (std::size_t{1} << ng) * (std::size_t{1} << nm) > max_candidates)
    throw capacity_error("brute-force candidate count exceeds the bound");
  std::unordered_set<tri_concept, tri_concept_hash> found;
  for (std::uint64_t gm = 0; gm < (std::uint64_t{1} << ng); ++gm) {
    bitset x1(ng);
    for (std::size_t i = 0; i < ng; ++i)
      if ((gm >> i) & 1) x1.set(i);
    for (std::uint64_t mm = 0; mm < (std::uint64_t{1} << nm); ++mm) {
      bitset x2(nm);
      for (std::size_t i = 0; i < nm; ++i)
        if ((mm >> i) & 1) x2.set(i);
      tri_concept cand{x1, x2,
                       k.derive_pairs(axis::conditions,
                                      k.box_pairs(axis::conditions, x1, x2))};
      if (is_tri_concept(k, cand)) found.insert(std::move(cand));
    }
  }
  std::vector<tri_concept> out(found.begin(), found.end());
  sort_tri_concepts(out);
  return out;
}

void sort_tri_concepts(std::vector<tri_concept>& concepts) {
  std::sort(concepts.begin(), concepts.end(), [](const tri_concept& a, const tri_concept& b) {
    if (a.extent != b.extent) return bitset::index_less(a.extent, b.extent);
    if (a.intent != b.intent) return bitset::index_less(a.intent, b.intent);
    if (a.modus != b.modus) return bitset::index_less(a.modus, b.modus);
    return false;
  });
}

const bitset& component_of(const tri_concept& c, axis i) {
  switch (i) {
    case axis::objects: return c.extent;
    case axis::attributes: return c.intent;
    case axis::conditions: return c.modus;
  }
  throw invalid_input_error("bad axis");
}

quotient_order quotient_along(const std::vector<tri_concept>& concepts, axis i) {
  quotient_order out;
  out.along = i;
  for (std::size_t id = 0; id < concepts.size(); ++id) {
    const bitset& comp = component_of(concepts[id], i);
    auto it = std::find_if(out.classes.begin(), out.classes.end(),
                           [&](const component_class& c) { return c.component == comp; });
    if (it == out.classes.end())
      out.classes.push_back({comp, {id}});
    else
      it->members.push_back(id);
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const component_class& a, const component_class& b) {
              if (a.component != b.component)
                return bitset::index_less(a.component, b.component);
              return false;
            });

  const std::size_t n = out.classes.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && out.classes[a].component != out.classes[b].component &&
          out.classes[a].component.is_subset_of(out.classes[b].component))
        less[a][b] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less[a][b]) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c)
        if (less[a][c] && less[c][b]) direct = false;
      if (direct) out.covers.emplace_back(a, b);
    }
  return out;
}

geometric_structure geometric_of(const std::vector<tri_concept>& concepts) {
  geometric_structure out;
  for (axis i : {axis::objects, axis::attributes, axis::conditions})
    out.partitions[static_cast<int>(i) - 1] = quotient_along(concepts, i).classes;
  return out;
}

formal_context conditional_context(const triadic_context& k, const bitset& c) {
  if (c.universe() != k.condition_count())
    throw invalid_input_error("condition set universe does not match the roster");
  const std::size_t ng = k.object_count(), nm = k.attribute_count();
  bitset kept = bitset::full(ng * nm);
  c.for_each([&](std::size_t b) { kept &= k.derive_set(axis::conditions, bitset::of(k.condition_count(), {b})); });
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  kept.for_each([&](std::size_t gm) { pairs.emplace_back(gm / nm, gm % nm); });
  return formal_context(k.object_names(), k.attribute_names(), pairs);
}

}  // namespace tfca
