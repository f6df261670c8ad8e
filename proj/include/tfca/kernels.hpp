#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tfca::kern {

// Word-level primitives behind every set operation. One table per lane;
// the active table is picked once at startup (cpu detection, overridable
// with the TFCA_KERNELS environment variable or force()).
struct kernels {
  const char* name;
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  void (*andnot_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  // a ⊆ b, i.e. a & ~b == 0
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  bool (*equals)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  bool (*any)(const std::uint64_t* a, std::size_t n);
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t n);
};

const kernels& scalar();

// Null when the lane is not compiled in or the cpu lacks it.
const kernels* avx2_if_supported();
const kernels* neon_if_supported();

std::vector<const kernels*> available();

const kernels& active();
void force(const kernels& k);  // test hook; also resets env selection

}  // namespace tfca::kern
