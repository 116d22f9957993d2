#pragma once

// Data-parallel kernels over int64 exponent vectors.
//
// Every kernel has a scalar reference implementation. When the build
// compiles an AVX2 variant and the host CPU supports it, the AVX2 table is
// selected at startup. Set CLUSTERNET_ISA=scalar to force the reference
// path, or call kernels::select() from code.

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "clusternet/exponent.hpp"

namespace clusternet::kernels {

enum class Isa { Scalar, Avx2 };

enum class AddStatus : std::uint8_t { Ok, Negative, Overflow };

/// Support bitmask: bit (i mod 64) is set when entry i is positive. A head
/// can only divide m if mask(head) & ~mask(m) == 0.
std::uint64_t support_mask(const Coord* a, std::size_t n) noexcept;

struct KernelTable {
  Isa isa;
  /// a <= b componentwise.
  bool (*leq)(const Coord* a, const Coord* b, std::size_t n);
  bool (*equal)(const Coord* a, const Coord* b, std::size_t n);
  /// out = max(a, b).
  void (*max)(const Coord* a, const Coord* b, Coord* out, std::size_t n);
  /// out = a + b for a >= 0 and signed b. Negative if some entry of the
  /// result is < 0, Overflow if some entry exceeds the int64 range.
  AddStatus (*add)(const Coord* a, const Coord* b, Coord* out, std::size_t n);
  /// out = a - b for a, b >= 0. Negative if some entry of the result is < 0.
  AddStatus (*sub)(const Coord* a, const Coord* b, Coord* out, std::size_t n);
  /// Scans rows count-1 .. 0 of a row-major head matrix (row stride
  /// `stride`) and returns the first row that divides m, or count if none.
  /// Rows whose mask has bits outside m_mask are skipped without a load.
  std::size_t (*find_last_divisor)(const Coord* heads,
                                   const std::uint64_t* masks,
                                   std::size_t count, std::size_t stride,
                                   const Coord* m, std::uint64_t m_mask,
                                   std::size_t n);
};

const KernelTable& scalar_table() noexcept;
/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_table() noexcept;

bool supported(Isa isa) noexcept;
/// Throws InvalidArgument if the ISA is not supported on this host.
void select(Isa isa);
const KernelTable& active() noexcept;

std::string_view name(Isa isa) noexcept;

}  // namespace clusternet::kernels
