#include "tfca/lectic.hpp"

#include "tfca/errors.hpp"

namespace tfca {

namespace {
constexpr std::size_t kWordBits = 64;
}

bool prefix_equal(const bitset& a, const bitset& b, std::size_t below) {
  if (a.universe() != b.universe())
    throw invalid_input_error("universe mismatch in lectic comparison");
  auto wa = a.words(), wb = b.words();
  std::size_t full = below / kWordBits;
  if (full > wa.size()) full = wa.size();
  for (std::size_t w = 0; w < full; ++w)
    if (wa[w] != wb[w]) return false;
  std::size_t rem = below % kWordBits;
  if (rem != 0 && full < wa.size()) {
    std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
    if ((wa[full] & mask) != (wb[full] & mask)) return false;
  }
  return true;
}

bool lectic_less_at(const bitset& a, const bitset& b, std::size_t i) {
  return b.test(i) && !a.test(i) && prefix_equal(a, b, i);
}

bool lectic_less(const bitset& a, const bitset& b) {
  if (a.universe() != b.universe())
    throw invalid_input_error("universe mismatch in lectic comparison");
  bitset diff = (a | b);
  diff.remove(a & b);
  int i = diff.first_set();
  return i >= 0 && b.test(static_cast<std::size_t>(i));
}

bitset lectic_plus(const bitset& a, std::size_t i) {
  bitset out = a;
  out.keep_below(i);
  out.set(i);
  return out;
}

}  // namespace tfca
