#include "jt/kernels.hpp"

namespace jt::kernels {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void caxpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const double ar = a.real();
  const double ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", &dot_scalar, &axpy_scalar, &caxpy_scalar};
  return table;
}

}  // namespace jt::kernels
