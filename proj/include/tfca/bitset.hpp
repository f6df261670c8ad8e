#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace tfca {

// Fixed-universe bit vector. Every set in the library (extents, intents,
// modi, flattened pair sets) is one of these; binary operations demand
// identical universes and throw invalid_input_error otherwise, which is
// what catches cross-roster mixups at runtime. Word-level work goes
// through the active kernel table.
class bitset {
 public:
  bitset() = default;
  explicit bitset(std::size_t universe);

  static bitset full(std::size_t universe);
  static bitset of(std::size_t universe, std::initializer_list<std::size_t> bits);

  std::size_t universe() const { return nbits_; }

  bool test(std::size_t i) const;
  void set(std::size_t i);
  void reset(std::size_t i);
  void clear();

  bool none() const;
  bool any() const { return !none(); }
  std::size_t count() const;
  bool is_full() const { return count() == nbits_; }

  bool is_subset_of(const bitset& o) const;
  bool operator==(const bitset& o) const;
  bool operator!=(const bitset& o) const { return !(*this == o); }

  bitset& operator&=(const bitset& o);
  bitset& operator|=(const bitset& o);
  bitset& remove(const bitset& o);  // this \ o

  friend bitset operator&(bitset a, const bitset& b) { return a &= b; }
  friend bitset operator|(bitset a, const bitset& b) { return a |= b; }
  friend bitset operator-(bitset a, const bitset& b) { return a.remove(b); }

  bitset complement() const;

  // -1 when absent
  int first_set() const;
  int next_set(std::size_t after) const;  // first set index > after
  int last_set() const;

  // drop all bits at positions >= i
  void keep_below(std::size_t i);

  template <typename F>
  void for_each(F&& f) const {
    for (int i = first_set(); i >= 0; i = next_set(static_cast<std::size_t>(i)))
      f(static_cast<std::size_t>(i));
  }

  std::vector<std::size_t> indices() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  std::size_t hash() const;

  // lexicographic on the index sequence; total order for canonical sorting
  static bool index_less(const bitset& a, const bitset& b);

 private:
  void check_index(std::size_t i) const;
  void check_universe(const bitset& o) const;

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct bitset_hash {
  std::size_t operator()(const bitset& b) const { return b.hash(); }
};

}  // namespace tfca
