#include "kernels_internal.hpp"

namespace clusternet::kernels {
namespace {

bool leq_scalar(const Coord* a, const Coord* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool equal_scalar(const Coord* a, const Coord* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

void max_scalar(const Coord* a, const Coord* b, Coord* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] < b[i] ? b[i] : a[i];
}

AddStatus add_scalar(const Coord* a, const Coord* b, Coord* out,
                     std::size_t n) {
  AddStatus status = AddStatus::Ok;
  for (std::size_t i = 0; i < n; ++i) {
    Coord s;
    if (__builtin_add_overflow(a[i], b[i], &s)) return AddStatus::Overflow;
    out[i] = s;
    if (s < 0) status = AddStatus::Negative;
  }
  return status;
}

AddStatus sub_scalar(const Coord* a, const Coord* b, Coord* out,
                     std::size_t n) {
  AddStatus status = AddStatus::Ok;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = a[i] - b[i];
    if (out[i] < 0) status = AddStatus::Negative;
  }
  return status;
}

std::size_t find_last_divisor_scalar(const Coord* heads,
                                     const std::uint64_t* masks,
                                     std::size_t count, std::size_t stride,
                                     const Coord* m, std::uint64_t m_mask,
                                     std::size_t n) {
  for (std::size_t r = count; r-- > 0;) {
    if (masks[r] & ~m_mask) continue;
    if (leq_scalar(heads + r * stride, m, n)) return r;
  }
  return count;
}

}  // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{Isa::Scalar,     leq_scalar,
                                 equal_scalar,    max_scalar,
                                 add_scalar,      sub_scalar,
                                 find_last_divisor_scalar};
  return table;
}

}  // namespace clusternet::kernels
