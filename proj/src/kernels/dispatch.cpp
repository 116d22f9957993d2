#include <atomic>
#include <cstdlib>
#include <string>

#include "clusternet/error.hpp"
#include "kernels_internal.hpp"

namespace clusternet::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(CLUSTERNET_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* initial_table() noexcept {
  const char* forced = std::getenv("CLUSTERNET_ISA");
  if (forced != nullptr && std::string(forced) == "scalar") {
    return &scalar_table();
  }
  if (const KernelTable* t = avx2_table()) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::uint64_t support_mask(const Coord* a, std::size_t n) noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] > 0) mask |= std::uint64_t{1} << (i & 63);
  }
  return mask;
}

const KernelTable* avx2_table() noexcept {
#if defined(CLUSTERNET_HAVE_AVX2)
  if (cpu_has_avx2()) return &detail::avx2_table_impl();
#endif
  return nullptr;
}

bool supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return avx2_table() != nullptr;
  }
  return false;
}

void select(Isa isa) {
  if (!supported(isa)) {
    throw InvalidArgument("kernel ISA '" + std::string(name(isa)) +
                          "' is not available on this host");
  }
  current().store(isa == Isa::Avx2 ? avx2_table() : &scalar_table());
}

const KernelTable& active() noexcept { return *current().load(); }

std::string_view name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace clusternet::kernels
