// NEON lane for aarch64 (baseline there, no runtime probe needed).
#include "tfca/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <bit>

namespace tfca::kern {

namespace {

constexpr std::size_t kLane = 2;  // u64 per 128-bit vector

void v_and(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLane <= n; i += kLane)
    vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] &= src[i];
}

void v_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLane <= n; i += kLane)
    vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

void v_andnot(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLane <= n; i += kLane)
    // bic(a, b) = a & ~b
    vst1q_u64(dst + i, vbicq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] &= ~src[i];
}

inline bool lanes_zero(uint64x2_t v) {
  return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) == 0;
}

bool v_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLane <= n; i += kLane)
    if (!lanes_zero(vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)))) return false;
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool v_equals(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLane <= n; i += kLane)
    if (!lanes_zero(veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)))) return false;
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool v_any(const std::uint64_t* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLane <= n; i += kLane)
    if (!lanes_zero(vld1q_u64(a + i))) return true;
  for (; i < n; ++i)
    if (a[i]) return true;
  return false;
}

std::size_t v_popcount(const std::uint64_t* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

constexpr kernels neon_table{"neon", v_and,    v_or,  v_andnot,
                             v_subset, v_equals, v_any, v_popcount};

}  // namespace

const kernels* neon_if_supported() { return &neon_table; }

}  // namespace tfca::kern

#else

namespace tfca::kern {
const kernels* neon_if_supported() { return nullptr; }
}  // namespace tfca::kern

#endif
