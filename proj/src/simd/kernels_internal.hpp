#pragma once

#include "hcost/simd.hpp"

namespace hcost::simd::detail {

extern const KernelTable kScalarTable;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable kAvx2Table;
#endif
#if defined(__aarch64__)
extern const KernelTable kNeonTable;
#endif

}  // namespace hcost::simd::detail
