#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "jt/matrix.hpp"
#include "jt/models.hpp"

// Independent oracles: plain Gaussian elimination and explicit index loops,
// nothing from the library's span or closure code.
namespace oracle {

using jt::ComplexMatrix;
using jt::cplx;

inline std::vector<double> realvec(const ComplexMatrix& m) {
  std::vector<double> v;
  v.reserve(2 * m.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      v.push_back(m(i, j).real());
      v.push_back(m(i, j).imag());
    }
  return v;
}

template <class T>
std::size_t gauss_rank(std::vector<std::vector<T>> rows, double rel_tol = 1e-9) {
  if (rows.empty()) return 0;
  double scale = 0.0;
  for (const auto& r : rows)
    for (const auto& x : r) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0;
  const double cut = rel_tol * scale;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (std::abs(rows[r][c]) > std::abs(rows[piv][c])) piv = r;
    if (std::abs(rows[piv][c]) <= cut) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const T f = rows[r][c] / rows[rank][c];
      if (f == T(0)) continue;
      for (std::size_t k = c; k < ncols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// real rank of a list of matrices under the real vectorization
inline std::size_t real_rank(const std::vector<ComplexMatrix>& ms, double rel_tol = 1e-9) {
  std::vector<std::vector<double>> rows;
  for (const auto& m : ms) rows.push_back(realvec(m));
  return gauss_rank(std::move(rows), rel_tol);
}

inline std::size_t complex_rank(const std::vector<ComplexMatrix>& ms, double rel_tol = 1e-9) {
  std::vector<std::vector<cplx>> rows;
  for (const auto& m : ms) rows.emplace_back(m.data(), m.data() + m.size());
  return gauss_rank(std::move(rows), rel_tol);
}

// dim(span A + span B) == dim A == dim B
inline bool same_real_span(const std::vector<ComplexMatrix>& a, const std::vector<ComplexMatrix>& b) {
  std::vector<ComplexMatrix> u = a;
  u.insert(u.end(), b.begin(), b.end());
  const std::size_t ra = real_rank(a), rb = real_rank(b), ru = real_rank(u);
  return ra == rb && rb == ru;
}

// H_F index ((chir·4 + colour)·2 + weak)·N + gen, chirality order R, L, Rbar, Lbar
inline std::size_t idx(int chir, int colour, int weak, int gen, int n) {
  return static_cast<std::size_t>(((chir * 4 + colour) * 2 + weak) * n + gen);
}

// Sector-level operator (weak ⊗ colour ⊗ generation) from a function of indices.
template <class F>
ComplexMatrix sector_op(int n, F f) {
  ComplexMatrix out(8 * n, 8 * n);
  for (int c1 = 0; c1 < 4; ++c1)
    for (int w1 = 0; w1 < 2; ++w1)
      for (int g1 = 0; g1 < n; ++g1)
        for (int c2 = 0; c2 < 4; ++c2)
          for (int w2 = 0; w2 < 2; ++w2)
            for (int g2 = 0; g2 < n; ++g2)
              out(idx(0, c1, w1, g1, n), idx(0, c2, w2, g2, n)) = f(c1, w1, g1, c2, w2, g2);
  return out;
}

inline ComplexMatrix place(int n, int row_chir, int col_chir, const ComplexMatrix& sector) {
  const std::size_t d = 8 * n;
  ComplexMatrix out(4 * d, 4 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(row_chir * d + i, col_chir * d + j) = sector(i, j);
  return out;
}

inline ComplexMatrix sector_of(const ComplexMatrix& h, int n, int row_chir, int col_chir) {
  const std::size_t d = 8 * n;
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i, j) = h(row_chir * d + i, col_chir * d + j);
  return out;
}

// Y: R → L, colour-diagonal, weak-diagonal (up, down), lepton colour 0.
inline ComplexMatrix yukawa(const jt::ModelParams& p) {
  return sector_op(p.N, [&](int c1, int w1, int g1, int c2, int w2, int g2) -> cplx {
    if (c1 != c2 || w1 != w2) return 0.0;
    const ComplexMatrix& y = c1 == 0 ? (w1 == 0 ? p.Y_nu : p.Y_e) : (w1 == 0 ? p.Y_u : p.Y_d);
    return y(g1, g2);
  });
}

inline ComplexMatrix hermitian_conj(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

inline ComplexMatrix entry_conj(const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = std::conj(m(i, j));
  return out;
}

inline ComplexMatrix plain_transpose(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

// Operator with (L,R) block y, (R,L) block y†, (Lbar,Rbar) y*, (Rbar,Lbar) yᵀ.
inline ComplexMatrix phi_shape(int n, const ComplexMatrix& y) {
  return place(n, 1, 0, y) + place(n, 0, 1, hermitian_conj(y)) + place(n, 3, 2, entry_conj(y)) +
         place(n, 2, 3, plain_transpose(y));
}

// q acting on the weak index of a sector
inline ComplexMatrix weak_left(int n, const ComplexMatrix& q2) {
  return sector_op(n, [&](int c1, int w1, int g1, int c2, int w2, int g2) -> cplx {
    return (c1 == c2 && g1 == g2) ? q2(w1, w2) : cplx(0.0);
  });
}

inline std::vector<ComplexMatrix> quaternion_units() {
  const cplx I(0, 1);
  return {ComplexMatrix::from_rows({{1, 0}, {0, 1}}), ComplexMatrix::from_rows({{I, 0}, {0, -I}}),
          ComplexMatrix::from_rows({{0, 1}, {-1, 0}}), ComplexMatrix::from_rows({{0, I}, {I, 0}})};
}

inline ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

// Φ(q): Y ↦ qY on the weak index.
inline ComplexMatrix phi(const jt::ModelParams& p, const ComplexMatrix& q2) {
  return phi_shape(p.N, mat_mul(weak_left(p.N, q2), yukawa(p)));
}

// Φ̃(q): Ỹ = Y·σ_x on the weak index.
inline ComplexMatrix phi_tilde(const jt::ModelParams& p, const ComplexMatrix& q2) {
  const ComplexMatrix sx = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
  return phi_shape(p.N, mat_mul(mat_mul(weak_left(p.N, q2), yukawa(p)), weak_left(p.N, sx)));
}

// Majorana directions: (Rbar,R) block c·M with M = m_nu on (lepton, up), plus conjugate partner.
inline ComplexMatrix majorana_direction(const jt::ModelParams& p, cplx c) {
  const int n = p.N;
  const ComplexMatrix m = sector_op(n, [&](int c1, int w1, int g1, int c2, int w2, int g2) -> cplx {
    return (c1 == 0 && c2 == 0 && w1 == 0 && w2 == 0) ? c * p.m_nu(g1, g2) : cplx(0.0);
  });
  return place(n, 2, 0, m) + place(n, 0, 2, hermitian_conj(m));
}

// Y-shaped block rank inside the (L,R) sector of each element.
inline std::vector<ComplexMatrix> lr_blocks(const std::vector<ComplexMatrix>& ms, int n) {
  std::vector<ComplexMatrix> out;
  for (const auto& m : ms) out.push_back(sector_of(m, n, 1, 0));
  return out;
}

inline jt::ModelParams degenerate_params(int n, std::uint64_t seed) {
  jt::ModelParams p = jt::ModelParams::generic(n, seed);
  p.without_majorana();
  p.Y_e = p.Y_nu;
  p.Y_d = p.Y_u;
  return p;
}

// Υ(u) for u = π(e^{iθ}, q, e^{−iθ/3}g), block by block.
inline ComplexMatrix upsilon_blocks(double theta, const ComplexMatrix& q, const ComplexMatrix& g, int n) {
  const cplx I(0, 1);
  const cplx up_r = std::exp(4.0 * I * theta / 3.0), down_r = std::exp(-2.0 * I * theta / 3.0);
  const ComplexMatrix r = sector_op(n, [&](int c1, int w1, int g1, int c2, int w2, int g2) -> cplx {
    if (g1 != g2 || w1 != w2) return 0.0;
    if (c1 == 0 || c2 == 0) {
      if (c1 != c2) return 0.0;
      return w1 == 0 ? cplx(1.0) : std::exp(-2.0 * I * theta);
    }
    return std::conj(g(c1 - 1, c2 - 1)) * (w1 == 0 ? up_r : down_r);
  });
  const ComplexMatrix l = sector_op(n, [&](int c1, int w1, int g1, int c2, int w2, int g2) -> cplx {
    if (g1 != g2) return 0.0;
    if (c1 == 0 || c2 == 0) {
      if (c1 != c2) return 0.0;
      return q(w1, w2) * std::exp(-I * theta);
    }
    return std::conj(g(c1 - 1, c2 - 1)) * q(w1, w2) * std::exp(I * theta / 3.0);
  });
  return place(n, 0, 0, r) + place(n, 1, 1, l) + place(n, 2, 2, entry_conj(r)) + place(n, 3, 3, entry_conj(l));
}

// Haar-ish samples via exp of random traceless anti-Hermitian matrices
inline ComplexMatrix random_special_unitary(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  ComplexMatrix h(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const cplx z = i == j ? cplx(nd(rng), 0.0) : cplx(nd(rng), nd(rng));
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  cplx tr = 0.0;
  for (std::size_t i = 0; i < d; ++i) tr += h(i, i);
  for (std::size_t i = 0; i < d; ++i) h(i, i) -= tr / static_cast<double>(d);
  return jt::matrix_exp(cplx(0, 1) * h);
}

}  // namespace oracle
