#include "tfca/bitset.hpp"

#include <bit>
#include <string>

#include "tfca/errors.hpp"
#include "tfca/kernels.hpp"

namespace tfca {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace

bitset::bitset(std::size_t universe) : nbits_(universe), words_(words_for(universe), 0) {}

bitset bitset::full(std::size_t universe) {
  bitset b(universe);
  for (auto& w : b.words_) w = ~std::uint64_t{0};
  if (universe % kWordBits != 0 && !b.words_.empty())
    b.words_.back() >>= kWordBits - universe % kWordBits;
  return b;
}

bitset bitset::of(std::size_t universe, std::initializer_list<std::size_t> bits) {
  bitset b(universe);
  for (std::size_t i : bits) b.set(i);
  return b;
}

void bitset::check_index(std::size_t i) const {
  if (i >= nbits_)
    throw invalid_input_error("bit index " + std::to_string(i) + " outside universe of " +
                              std::to_string(nbits_));
}

void bitset::check_universe(const bitset& o) const {
  if (nbits_ != o.nbits_)
    throw invalid_input_error("universe mismatch: " + std::to_string(nbits_) + " vs " +
                              std::to_string(o.nbits_));
}

bool bitset::test(std::size_t i) const {
  check_index(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
}

void bitset::set(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

void bitset::reset(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

void bitset::clear() {
  for (auto& w : words_) w = 0;
}

bool bitset::none() const { return !kern::active().any(words_.data(), words_.size()); }

std::size_t bitset::count() const {
  return kern::active().popcount(words_.data(), words_.size());
}

bool bitset::is_subset_of(const bitset& o) const {
  check_universe(o);
  return kern::active().is_subset(words_.data(), o.words_.data(), words_.size());
}

bool bitset::operator==(const bitset& o) const {
  if (nbits_ != o.nbits_) return false;
  return kern::active().equals(words_.data(), o.words_.data(), words_.size());
}

bitset& bitset::operator&=(const bitset& o) {
  check_universe(o);
  kern::active().and_into(words_.data(), o.words_.data(), words_.size());
  return *this;
}

bitset& bitset::operator|=(const bitset& o) {
  check_universe(o);
  kern::active().or_into(words_.data(), o.words_.data(), words_.size());
  return *this;
}

bitset& bitset::remove(const bitset& o) {
  check_universe(o);
  kern::active().andnot_into(words_.data(), o.words_.data(), words_.size());
  return *this;
}

bitset bitset::complement() const {
  bitset out = full(nbits_);
  out.remove(*this);
  return out;
}

int bitset::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w * kWordBits + std::countr_zero(words_[w]));
  return -1;
}

int bitset::next_set(std::size_t after) const {
  std::size_t i = after + 1;
  if (i >= nbits_) return -1;
  std::size_t w = i / kWordBits;
  std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i % kWordBits));
  while (true) {
    if (cur) return static_cast<int>(w * kWordBits + std::countr_zero(cur));
    if (++w >= words_.size()) return -1;
    cur = words_[w];
  }
}

int bitset::last_set() const {
  for (std::size_t w = words_.size(); w-- > 0;)
    if (words_[w])
      return static_cast<int>(w * kWordBits + (kWordBits - 1 - std::countl_zero(words_[w])));
  return -1;
}

void bitset::keep_below(std::size_t i) {
  if (i >= nbits_) return;
  std::size_t w = i / kWordBits;
  words_[w] &= (std::uint64_t{1} << (i % kWordBits)) - 1;
  for (std::size_t k = w + 1; k < words_.size(); ++k) words_[k] = 0;
}

std::vector<std::size_t> bitset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t bitset::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ nbits_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool bitset::index_less(const bitset& a, const bitset& b) {
  int ia = a.first_set(), ib = b.first_set();
  while (ia >= 0 && ib >= 0) {
    if (ia != ib) return ia < ib;
    ia = a.next_set(static_cast<std::size_t>(ia));
    ib = b.next_set(static_cast<std::size_t>(ib));
  }
  return ia < 0 && ib >= 0;
}

}  // namespace tfca
