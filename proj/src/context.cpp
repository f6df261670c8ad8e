#include "tfca/context.hpp"

#include <algorithm>
#include <unordered_set>

#include "tfca/errors.hpp"

namespace tfca {

namespace {

void check_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw invalid_input_error(std::string("duplicate ") + what + " name: " + n);
}

}  // namespace

formal_context::formal_context(std::vector<std::string> objects,
                               std::vector<std::string> attributes,
                               const std::vector<std::pair<std::size_t, std::size_t>>& incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)) {
  check_unique(objects_, "object");
  check_unique(attributes_, "attribute");
  rows_.assign(objects_.size(), bitset(attributes_.size()));
  cols_.assign(attributes_.size(), bitset(objects_.size()));
  for (auto [g, m] : incidence) {
    if (g >= objects_.size() || m >= attributes_.size())
      throw invalid_input_error("incidence pair (" + std::to_string(g) + "," +
                                std::to_string(m) + ") outside the rosters");
    rows_[g].set(m);
    cols_[m].set(g);
  }
}

std::size_t formal_context::object_index(std::string_view name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  throw invalid_input_error("unknown object name: " + std::string(name));
}

std::size_t formal_context::attribute_index(std::string_view name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i)
    if (attributes_[i] == name) return i;
  throw invalid_input_error("unknown attribute name: " + std::string(name));
}

bool formal_context::incident(std::size_t g, std::size_t m) const {
  if (g >= objects_.size() || m >= attributes_.size())
    throw invalid_input_error("incidence query outside the rosters");
  return rows_[g].test(m);
}

const bitset& formal_context::row(std::size_t g) const {
  if (g >= rows_.size()) throw invalid_input_error("object index out of range");
  return rows_[g];
}

const bitset& formal_context::column(std::size_t m) const {
  if (m >= cols_.size()) throw invalid_input_error("attribute index out of range");
  return cols_[m];
}

bitset formal_context::common_attributes(const bitset& object_set) const {
  if (object_set.universe() != objects_.size())
    throw invalid_input_error("object set universe does not match the roster");
  bitset out = bitset::full(attributes_.size());
  object_set.for_each([&](std::size_t g) { out &= rows_[g]; });
  return out;
}

bitset formal_context::common_objects(const bitset& attribute_set) const {
  if (attribute_set.universe() != attributes_.size())
    throw invalid_input_error("attribute set universe does not match the roster");
  bitset out = bitset::full(objects_.size());
  attribute_set.for_each([&](std::size_t m) { out &= cols_[m]; });
  return out;
}

bitset formal_context::intent_closure(const bitset& attribute_set) const {
  return common_attributes(common_objects(attribute_set));
}

bitset formal_context::extent_closure(const bitset& object_set) const {
  return common_objects(common_attributes(object_set));
}

formal_context formal_context::transpose() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t g = 0; g < rows_.size(); ++g)
    rows_[g].for_each([&](std::size_t m) { pairs.emplace_back(m, g); });
  return formal_context(attributes_, objects_, pairs);
}

std::vector<std::pair<std::size_t, std::size_t>> formal_context::incidence_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t g = 0; g < rows_.size(); ++g)
    rows_[g].for_each([&](std::size_t m) { pairs.emplace_back(g, m); });
  return pairs;
}

std::size_t formal_context::incidence_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

bool formal_context::same_table_as(const formal_context& o) const {
  return objects_ == o.objects_ && attributes_ == o.attributes_ && rows_ == o.rows_;
}

std::vector<formal_concept> all_concepts_bruteforce(const formal_context& ctx,
                                                    std::size_t max_attributes) {
  const std::size_t m = ctx.attribute_count();
  if (m > max_attributes)
    throw capacity_error("brute-force enumeration over " + std::to_string(m) +
                         " attributes exceeds the bound of " + std::to_string(max_attributes));
  std::unordered_set<bitset, bitset_hash> intents;
  std::vector<formal_concept> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    bitset attrs(m);
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1) attrs.set(i);
    bitset intent = ctx.intent_closure(attrs);
    if (intents.insert(intent).second)
      out.push_back({ctx.common_objects(intent), intent});
  }
  sort_concepts(out);
  return out;
}

bool concept_leq(const formal_concept& a, const formal_concept& b) {
  if (a.extent.universe() != b.extent.universe() ||
      a.intent.universe() != b.intent.universe())
    throw invalid_input_error("comparing concepts from different contexts");
  return a.extent.is_subset_of(b.extent);
}

std::vector<std::pair<std::size_t, std::size_t>> cover_relation(
    const std::vector<formal_concept>& concepts) {
  const std::size_t n = concepts.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && concept_leq(concepts[i], concepts[j]) &&
          concepts[i].extent != concepts[j].extent)
        less[i][j] = true;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!less[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (less[i][k] && less[k][j]) direct = false;
      if (direct) covers.emplace_back(i, j);
    }
  return covers;
}

void sort_concepts(std::vector<formal_concept>& concepts) {
  std::sort(concepts.begin(), concepts.end(),
            [](const formal_concept& a, const formal_concept& b) {
              if (a.extent != b.extent) return bitset::index_less(a.extent, b.extent);
              return bitset::index_less(a.intent, b.intent);
            });
}

}  // namespace tfca
