#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tfca/bitset.hpp"
#include "tfca/context.hpp"

namespace tfca {

enum class axis : int { objects = 1, attributes = 2, conditions = 3 };

axis axis_from_int(int i);  // invalid_input_error outside 1..3

// Ternary incidence over three rosters. Stored as one slice per element of
// each axis, so derivation from any side is a bitset intersection; the pair
// universe of axis i is the row-major product of the other two rosters in
// ascending axis order (objects: m*|B|+b, attributes: g*|B|+b,
// conditions: g*|M|+m).
class triadic_context {
 public:
  triadic_context() = default;
  triadic_context(std::vector<std::string> objects, std::vector<std::string> attributes,
                  std::vector<std::string> conditions,
                  const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& triples);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  std::size_t condition_count() const { return conditions_.size(); }
  const std::vector<std::string>& object_names() const { return objects_; }
  const std::vector<std::string>& attribute_names() const { return attributes_; }
  const std::vector<std::string>& condition_names() const { return conditions_; }

  std::size_t roster_size(axis i) const;
  const std::vector<std::string>& roster_names(axis i) const;

  bool contains(std::size_t g, std::size_t m, std::size_t b) const;
  // ascending (g, m, b) order
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples() const;
  std::size_t triple_count() const;

  std::size_t pair_universe(axis i) const;
  std::size_t pair_index(axis i, std::size_t j_elem, std::size_t k_elem) const;

  // pairs present in every slice of x (full pair universe when x is empty)
  bitset derive_set(axis i, const bitset& x) const;
  // axis-i elements whose slice covers all of z
  bitset derive_pairs(axis i, const bitset& z) const;
  // flattened rectangle j_set × k_set in the pair universe of axis i
  bitset box_pairs(axis i, const bitset& j_set, const bitset& k_set) const;

  // one condition as a dyadic object x attribute table
  formal_context condition_layer(std::size_t b) const;

  bool same_table_as(const triadic_context& o) const;

 private:
  const std::vector<bitset>& slices(axis i) const;

  std::vector<std::string> objects_, attributes_, conditions_;
  std::vector<bitset> g_slices_, m_slices_, b_slices_;
};

struct tri_concept {
  bitset extent;
  bitset intent;
  bitset modus;
  bool operator==(const tri_concept& o) const = default;
};

// All maximal boxes. Walks the subsets of the smallest axis, reads the
// dyadic concepts of each induced pair table, completes the third
// component, and keeps the candidates that pass the three maximality
// conditions. The guard bounds the subset walk.
std::vector<tri_concept> all_tri_concepts(const triadic_context& k,
                                          std::size_t max_pivot_subsets = std::size_t{1} << 18);

// independent reference: every (extent candidate, intent candidate) pair
std::vector<tri_concept> all_tri_concepts_bruteforce(const triadic_context& k,
                                                     std::size_t max_candidates = std::size_t{1}
                                                                                  << 18);

void sort_tri_concepts(std::vector<tri_concept>& concepts);

const bitset& component_of(const tri_concept& c, axis i);

struct component_class {
  bitset component;
  std::vector<std::size_t> members;  // indices into the concept vector
  bool operator==(const component_class& o) const = default;
};

// Concepts grouped by one component; classes ordered by component
// inclusion, covers = transitive reduction of that order.
struct quotient_order {
  axis along = axis::objects;
  std::vector<component_class> classes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
};

quotient_order quotient_along(const std::vector<tri_concept>& concepts, axis i);

// the three partitions of one concept set, shared ids across them
struct geometric_structure {
  std::array<std::vector<component_class>, 3> partitions;
};

geometric_structure geometric_of(const std::vector<tri_concept>& concepts);

// Direct conditional table: (g,m) kept iff the pair holds under every
// condition in c. An empty c yields the full table by vacuity.
formal_context conditional_context(const triadic_context& k, const bitset& c);

}  // namespace tfca
