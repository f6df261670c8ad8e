#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tfca/bitset.hpp"

namespace tfca {

// Binary object x attribute table. Immutable after construction; rows and
// columns are both materialized so derivation in either direction is a
// straight bitset intersection.
class formal_context {
 public:
  formal_context() = default;
  formal_context(std::vector<std::string> objects, std::vector<std::string> attributes,
                 const std::vector<std::pair<std::size_t, std::size_t>>& incidence);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<std::string>& object_names() const { return objects_; }
  const std::vector<std::string>& attribute_names() const { return attributes_; }

  // throws invalid_input_error when the name is unknown
  std::size_t object_index(std::string_view name) const;
  std::size_t attribute_index(std::string_view name) const;

  bool incident(std::size_t g, std::size_t m) const;
  const bitset& row(std::size_t g) const;     // attributes of one object
  const bitset& column(std::size_t m) const;  // objects of one attribute

  // attributes shared by every object in the set (full roster when empty)
  bitset common_attributes(const bitset& object_set) const;
  // objects carrying every attribute in the set
  bitset common_objects(const bitset& attribute_set) const;

  bitset intent_closure(const bitset& attribute_set) const;
  bitset extent_closure(const bitset& object_set) const;

  formal_context transpose() const;

  std::vector<std::pair<std::size_t, std::size_t>> incidence_pairs() const;
  std::size_t incidence_count() const;

  bool same_table_as(const formal_context& o) const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<bitset> rows_;
  std::vector<bitset> cols_;
};

struct formal_concept {
  bitset extent;
  bitset intent;
  bool operator==(const formal_concept& o) const = default;
};

// Closure of every attribute subset, deduplicated; the independent check
// the fast paths are held against. Guard bounds 2^attribute_count.
std::vector<formal_concept> all_concepts_bruteforce(const formal_context& ctx,
                                                    std::size_t max_attributes = 20);

// Subconcept order (extent inclusion). Universe sizes must match on both
// components; that is the only cross-context guard a value pair can carry.
bool concept_leq(const formal_concept& a, const formal_concept& b);

// Transitive reduction of concept_leq over the given (complete) concept set;
// pairs are (lower index, upper index) into the input vector.
std::vector<std::pair<std::size_t, std::size_t>> cover_relation(
    const std::vector<formal_concept>& concepts);

// canonical presentation order: extent index sequence, then intent
void sort_concepts(std::vector<formal_concept>& concepts);

}  // namespace tfca
