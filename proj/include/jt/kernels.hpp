#pragma once
// Data-parallel inner loops used by the matrix core and the closure engine.
//
// Every kernel has a scalar reference implementation. When the library is
// built with JT_ENABLE_AVX2 and the running CPU reports AVX2+FMA, the
// dispatch table points at the vectorized variants instead. Results agree
// with the scalar path up to floating-point reassociation.

#include <complex>
#include <cstddef>
#include <string_view>

namespace jt::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;
  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // y[i] += a * x[i] over complex numbers
  void (*caxpy)(cplx a, const cplx* x, cplx* y, std::size_t n);
};

const KernelTable& scalar_table();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_table();

// Table used by the rest of the library.
const KernelTable& active();

enum class Backend { Auto, Scalar, Avx2 };

// Overrides the runtime choice. Selecting Avx2 on a machine without support
// falls back to Scalar. Returns the name of the table now active.
std::string_view select_backend(Backend backend);

inline double dot(const double* x, const double* y, std::size_t n) { return active().dot(x, y, n); }
inline void axpy(double a, const double* x, double* y, std::size_t n) { active().axpy(a, x, y, n); }
inline void caxpy(cplx a, const cplx* x, cplx* y, std::size_t n) { active().caxpy(a, x, y, n); }

}  // namespace jt::kernels
