#pragma once

#include "clusternet/kernels.hpp"

namespace clusternet::kernels::detail {

#if defined(CLUSTERNET_HAVE_AVX2)
const KernelTable& avx2_table_impl() noexcept;
#endif

}  // namespace clusternet::kernels::detail
