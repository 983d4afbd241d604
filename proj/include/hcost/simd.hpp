#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Dense double-precision vector kernels used by the spectral cut solver.
//
// Each kernel has a scalar reference and, where the build and CPU allow, an
// AVX2 or NEON variant chosen at runtime. Reductions in every variant use the
// same four-lane accumulation order and no fused multiply-add, so all
// variants return bit-identical results.

namespace hcost::simd {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  std::string_view name;
  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  void (*axpy)(double a, const double* x, double* y, std::size_t n);  // y += a x
  void (*scale)(double a, double* x, std::size_t n);                  // x *= a
  void (*shift)(double a, double* x, std::size_t n);                  // x += a
};

/// Table for `isa`, or nullptr when it was not compiled in or the CPU lacks it.
const KernelTable* table_for(Isa isa) noexcept;
Isa best_available() noexcept;

const KernelTable& active() noexcept;
/// Forces a variant (tests, benchmarking). Throws std::invalid_argument when
/// unavailable.
void select(Isa isa);

double dot(std::span<const double> x, std::span<const double> y);
double sum(std::span<const double> x);
void axpy(double a, std::span<const double> x, std::span<double> y);
void scale(double a, std::span<double> x);
void shift(double a, std::span<double> x);

}  // namespace hcost::simd
