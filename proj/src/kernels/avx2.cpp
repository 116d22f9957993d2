// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace clusternet::kernels::detail {
namespace {

inline __m256i load4(const Coord* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store4(Coord* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

bool leq_avx2(const Coord* a, const Coord* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i gt = _mm256_cmpgt_epi64(load4(a + i), load4(b + i));
    if (!_mm256_testz_si256(gt, gt)) return false;
  }
  for (; i < n; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool equal_avx2(const Coord* a, const Coord* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i eq = _mm256_cmpeq_epi64(load4(a + i), load4(b + i));
    if (_mm256_movemask_epi8(eq) != -1) return false;
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

void max_avx2(const Coord* a, const Coord* b, Coord* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = load4(a + i);
    __m256i vb = load4(b + i);
    __m256i b_gt = _mm256_cmpgt_epi64(vb, va);
    store4(out + i, _mm256_blendv_epi8(va, vb, b_gt));
  }
  for (; i < n; ++i) out[i] = a[i] < b[i] ? b[i] : a[i];
}

AddStatus add_avx2(const Coord* a, const Coord* b, Coord* out,
                   std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i overflow = zero;
  __m256i negative = zero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = load4(a + i);
    __m256i vb = load4(b + i);
    __m256i s = _mm256_add_epi64(va, vb);
    // Signed overflow: operands share a sign that the sum does not.
    __m256i ovf = _mm256_andnot_si256(_mm256_xor_si256(va, vb),
                                      _mm256_xor_si256(va, s));
    overflow = _mm256_or_si256(overflow, ovf);
    negative = _mm256_or_si256(negative, s);
    store4(out + i, s);
  }
  bool any_overflow = _mm256_movemask_pd(_mm256_castsi256_pd(overflow)) != 0;
  bool any_negative = _mm256_movemask_pd(_mm256_castsi256_pd(negative)) != 0;
  for (; i < n; ++i) {
    Coord s;
    if (__builtin_add_overflow(a[i], b[i], &s)) {
      any_overflow = true;
      break;
    }
    out[i] = s;
    if (s < 0) any_negative = true;
  }
  if (any_overflow) return AddStatus::Overflow;
  return any_negative ? AddStatus::Negative : AddStatus::Ok;
}

AddStatus sub_avx2(const Coord* a, const Coord* b, Coord* out,
                   std::size_t n) {
  __m256i negative = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i d = _mm256_sub_epi64(load4(a + i), load4(b + i));
    negative = _mm256_or_si256(negative, d);
    store4(out + i, d);
  }
  bool any_negative = _mm256_movemask_pd(_mm256_castsi256_pd(negative)) != 0;
  for (; i < n; ++i) {
    out[i] = a[i] - b[i];
    if (out[i] < 0) any_negative = true;
  }
  return any_negative ? AddStatus::Negative : AddStatus::Ok;
}

std::size_t find_last_divisor_avx2(const Coord* heads,
                                   const std::uint64_t* masks,
                                   std::size_t count, std::size_t stride,
                                   const Coord* m, std::uint64_t m_mask,
                                   std::size_t n) {
  for (std::size_t r = count; r-- > 0;) {
    if (masks[r] & ~m_mask) continue;
    if (leq_avx2(heads + r * stride, m, n)) return r;
  }
  return count;
}

}  // namespace

const KernelTable& avx2_table_impl() noexcept {
  static const KernelTable table{Isa::Avx2, leq_avx2, equal_avx2, max_avx2,
                                 add_avx2,  sub_avx2, find_last_divisor_avx2};
  return table;
}

}  // namespace clusternet::kernels::detail
