#pragma once

#include "tfca/bitset.hpp"

namespace tfca {

// Order on attribute sets used by the closure enumeration: roster index 0 is
// the smallest element. a < b when the smallest index where they differ
// belongs to b.

// restricted comparison: i ∈ b \ a and a, b agree strictly below i
bool lectic_less_at(const bitset& a, const bitset& b, std::size_t i);

bool lectic_less(const bitset& a, const bitset& b);

// candidate successor seed: (a ∩ {0..i-1}) ∪ {i}
bitset lectic_plus(const bitset& a, std::size_t i);

bool prefix_equal(const bitset& a, const bitset& b, std::size_t below);

}  // namespace tfca
