// AVX2 lane. Compiled with -mavx2 and only ever called behind the runtime
// cpu check below, so plain builds stay safe on older x86-64.
#include "tfca/kernels.hpp"

#if (defined(__x86_64__) || defined(_M_X64)) && defined(__AVX2__)

#include <immintrin.h>

#include <bit>

namespace tfca::kern {

namespace {

constexpr std::size_t kLane = 4;  // u64 per 256-bit vector

void v_and(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLane <= n; i += kLane) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(a, b));
  }
  for (; i < n; ++i) dst[i] &= src[i];
}

void v_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLane <= n; i += kLane) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(a, b));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

void v_andnot(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLane <= n; i += kLane) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    // andnot(b, a) = a & ~b
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(b, a));
  }
  for (; i < n; ++i) dst[i] &= ~src[i];
}

bool v_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLane <= n; i += kLane) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i stray = _mm256_andnot_si256(vb, va);
    if (!_mm256_testz_si256(stray, stray)) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool v_equals(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLane <= n; i += kLane) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i diff = _mm256_xor_si256(va, vb);
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool v_any(const std::uint64_t* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLane <= n; i += kLane) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    if (!_mm256_testz_si256(va, va)) return true;
  }
  for (; i < n; ++i)
    if (a[i]) return true;
  return false;
}

std::size_t v_popcount(const std::uint64_t* a, std::size_t n) {
  // popcount is never the hot edge here; scalar per-word is fine.
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

constexpr kernels avx2_table{"avx2", v_and,    v_or,  v_andnot,
                             v_subset, v_equals, v_any, v_popcount};

}  // namespace

const kernels* avx2_if_supported() {
  return __builtin_cpu_supports("avx2") ? &avx2_table : nullptr;
}

}  // namespace tfca::kern

#else

namespace tfca::kern {
const kernels* avx2_if_supported() { return nullptr; }
}  // namespace tfca::kern

#endif
