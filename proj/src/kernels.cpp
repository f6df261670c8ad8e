#include "tfca/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>

namespace tfca::kern {

namespace {

void s_and(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void s_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void s_andnot(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

bool s_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool s_equals(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  return n == 0 || std::memcmp(a, b, n * sizeof(std::uint64_t)) == 0;
}

bool s_any(const std::uint64_t* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i]) return true;
  return false;
}

std::size_t s_popcount(const std::uint64_t* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

constexpr kernels scalar_table{"scalar", s_and,    s_or,  s_andnot,
                               s_subset, s_equals, s_any, s_popcount};

const kernels* pick_initial() {
  if (const char* env = std::getenv("TFCA_KERNELS")) {
    std::string want(env);
    if (want == "scalar") return &scalar_table;
    if (want == "avx2" && avx2_if_supported()) return avx2_if_supported();
    if (want == "neon" && neon_if_supported()) return neon_if_supported();
    return &scalar_table;  // unknown or unavailable: fall back quietly
  }
  if (const kernels* k = avx2_if_supported()) return k;
  if (const kernels* k = neon_if_supported()) return k;
  return &scalar_table;
}

std::atomic<const kernels*> g_active{nullptr};

}  // namespace

const kernels& scalar() { return scalar_table; }

std::vector<const kernels*> available() {
  std::vector<const kernels*> out{&scalar_table};
  if (const kernels* k = avx2_if_supported()) out.push_back(k);
  if (const kernels* k = neon_if_supported()) out.push_back(k);
  return out;
}

const kernels& active() {
  const kernels* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    k = pick_initial();
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

void force(const kernels& k) { g_active.store(&k, std::memory_order_release); }

}  // namespace tfca::kern
