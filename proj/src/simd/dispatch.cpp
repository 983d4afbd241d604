#include <atomic>
#include <stdexcept>

#include "kernels_internal.hpp"

namespace hcost::simd {

const KernelTable* table_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return &detail::kScalarTable;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (__builtin_cpu_supports("avx2")) return &detail::kAvx2Table;
#endif
      return nullptr;
    case Isa::neon:
#if defined(__aarch64__)
      return &detail::kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

Isa best_available() noexcept {
  if (table_for(Isa::avx2)) return Isa::avx2;
  if (table_for(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

namespace {

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{table_for(best_available())};
  return table;
}

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("simd kernel: length mismatch");
}

}  // namespace

const KernelTable& active() noexcept { return *current().load(std::memory_order_acquire); }

void select(Isa isa) {
  const auto* t = table_for(isa);
  if (!t) throw std::invalid_argument("requested SIMD variant is not available");
  current().store(t, std::memory_order_release);
}

double dot(std::span<const double> x, std::span<const double> y) {
  check_sizes(x.size(), y.size());
  return active().dot(x.data(), y.data(), x.size());
}

double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }

void axpy(double a, std::span<const double> x, std::span<double> y) {
  check_sizes(x.size(), y.size());
  active().axpy(a, x.data(), y.data(), x.size());
}

void scale(double a, std::span<double> x) { active().scale(a, x.data(), x.size()); }

void shift(double a, std::span<double> x) { active().shift(a, x.data(), x.size()); }

}  // namespace hcost::simd
