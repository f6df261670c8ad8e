#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tfca/bitset.hpp"
#include "tfca/context.hpp"
#include "tfca/errors.hpp"
#include "tfca/triadic.hpp"

namespace tfca::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(TFCA_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("fixture missing: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// rows spelled as "X.X" strings, one per object
inline formal_context make_context(std::vector<std::string> objects,
                                   std::vector<std::string> attributes,
                                   const std::vector<std::string>& rows) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t g = 0; g < rows.size(); ++g)
    for (std::size_t m = 0; m < rows[g].size(); ++m)
      if (rows[g][m] == 'X') pairs.emplace_back(g, m);
  return formal_context(std::move(objects), std::move(attributes), pairs);
}

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

inline formal_context random_context(std::mt19937& rng, std::size_t ng, std::size_t nm,
                                     double density = 0.45) {
  std::bernoulli_distribution cross(density);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t m = 0; m < nm; ++m)
      if (cross(rng)) pairs.emplace_back(g, m);
  return formal_context(numbered("g", ng), numbered("m", nm), pairs);
}

inline triadic_context random_tri(std::mt19937& rng, std::size_t ng, std::size_t nm,
                                  std::size_t nb, double density = 0.3) {
  std::bernoulli_distribution cross(density);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t m = 0; m < nm; ++m)
      for (std::size_t b = 0; b < nb; ++b)
        if (cross(rng)) triples.emplace_back(g, m, b);
  return triadic_context(numbered("g", ng), numbered("m", nm), numbered("b", nb), triples);
}

template <typename F>
inline void for_all_subsets(std::size_t n, F&& f) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bitset x(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) x.set(i);
    f(x);
  }
}

inline bitset bits(std::size_t universe, std::initializer_list<std::size_t> indices) {
  return bitset::of(universe, indices);
}

inline bitset attrs_named(const formal_context& ctx,
                          std::initializer_list<const char*> names) {
  bitset s(ctx.attribute_count());
  for (const char* n : names) s.set(ctx.attribute_index(n));
  return s;
}

inline bitset objs_named(const formal_context& ctx,
                         std::initializer_list<const char*> names) {
  bitset s(ctx.object_count());
  for (const char* n : names) s.set(ctx.object_index(n));
  return s;
}

}  // namespace tfca::test
