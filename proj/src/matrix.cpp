#include "jt/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "eigen_bridge.hpp"
#include "jt/kernels.hpp"

namespace jt {

std::size_t label_dim(const SpaceLabel& label) {
  std::size_t d = 1;
  for (const auto& f : label) d *= f.dim;
  return d;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DimensionMismatch("entry count does not match rows x cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  std::vector<std::vector<cplx>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<cplx>>& rows) {
  if (rows.empty()) return {};
  const std::size_t nc = rows.front().size();
  ComplexMatrix m(rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw DimensionMismatch("ragged matrix rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i));
  }
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t i, std::size_t j, cplx value) {
  ComplexMatrix m(n, n);
  m(i, j) = value;
  return m;
}

void ComplexMatrix::set_space_label(SpaceLabel label) {
  if (rows_ != cols_ || label_dim(label) != rows_)
    throw DimensionMismatch("space label dimension " + std::to_string(label_dim(label)) + " vs matrix " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  label_ = std::move(label);
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  ComplexMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) std::copy(row(r0 + i) + c0, row(r0 + i) + c0 + nc, b.row(i));
  return b;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionMismatch("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i) std::copy(b.row(i), b.row(i) + b.cols(), row(r0 + i) + c0);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) { return add_scaled(1.0, other); }
ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) { return add_scaled(-1.0, other); }

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ComplexMatrix& ComplexMatrix::add_scaled(cplx s, const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  kernels::caxpy(s, other.data(), data(), size());
  return *this;
}

ComplexMatrix& ComplexMatrix::add_scaled(double s, const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  kernels::axpy(s, reinterpret_cast<const double*>(other.data()), reinterpret_cast<double*>(data()), 2 * size());
  return *this;
}

double ComplexMatrix::norm() const {
  const double* d = reinterpret_cast<const double*>(data());
  return std::sqrt(kernels::dot(d, d, 2 * size()));
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(where) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

void require_square(const ComplexMatrix& a, const char* where) {
  if (!a.is_square()) throw DimensionMismatch(std::string(where) + ": matrix is not square");
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("product " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  ComplexMatrix c(a.rows(), b.cols());
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const cplx* ai = a.row(i);
    cplx* ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ai[k] == cplx(0.0, 0.0)) continue;
      kernels::caxpy(ai[k], b.row(k), ci, n);
    }
  }
  if (a.space_label() && a.space_label() == b.space_label()) c.set_space_label(*a.space_label());
  return c;
}

ComplexMatrix dagger(const ComplexMatrix& t) {
  ComplexMatrix r(t.cols(), t.rows());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) r(j, i) = std::conj(t(i, j));
  if (t.space_label()) r.set_space_label(*t.space_label());
  return r;
}

ComplexMatrix transpose(const ComplexMatrix& t) {
  ComplexMatrix r(t.cols(), t.rows());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) r(j, i) = t(i, j);
  if (t.space_label()) r.set_space_label(*t.space_label());
  return r;
}

ComplexMatrix conj(const ComplexMatrix& t) {
  ComplexMatrix r = t;
  for (std::size_t k = 0; k < r.size(); ++k) r.data()[k] = std::conj(r.data()[k]);
  return r;
}

cplx trace(const ComplexMatrix& t) {
  require_square(t, "trace");
  cplx s = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i) s += t(i, i);
  return s;
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_shape(x, y, "commutator");
  ComplexMatrix r = x * y;
  r -= y * x;
  return r;
}

ComplexMatrix anticommutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_shape(x, y, "anticommutator");
  ComplexMatrix r = x * y;
  r += y * x;
  return r;
}

ComplexMatrix jordan_circ(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_square(x, "jordan_circ");
  ComplexMatrix r = anticommutator(x, y);
  r *= 0.5;
  return r;
}

ComplexMatrix tensor(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix r(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const cplx s = x(i, j);
      if (s == cplx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < y.rows(); ++k)
        kernels::caxpy(s, y.row(k), r.row(i * y.rows() + k) + j * y.cols(), y.cols());
    }
  if (x.space_label() && y.space_label()) {
    SpaceLabel l = *x.space_label();
    l.insert(l.end(), y.space_label()->begin(), y.space_label()->end());
    r.set_space_label(std::move(l));
  }
  return r;
}

ComplexMatrix dirsum(const ComplexMatrix& x, const ComplexMatrix& y) { return dirsum(std::vector{x, y}); }

ComplexMatrix dirsum(const std::vector<ComplexMatrix>& blocks) {
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    nr += b.rows();
    nc += b.cols();
  }
  ComplexMatrix r(nr, nc);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    r.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  // k copies of one labeled space: C^k ⊗ label
  bool same = !blocks.empty() && blocks.front().space_label().has_value();
  for (const auto& b : blocks) same = same && b.space_label() == blocks.front().space_label();
  if (same) {
    SpaceLabel l{{"summand", blocks.size()}};
    l.insert(l.end(), blocks.front().space_label()->begin(), blocks.front().space_label()->end());
    r.set_space_label(std::move(l));
  }
  return r;
}

double re_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_shape(x, y, "re_inner");
  return kernels::dot(reinterpret_cast<const double*>(x.data()), reinterpret_cast<const double*>(y.data()),
                      2 * x.size());
}

double frobenius(const ComplexMatrix& t) { return t.norm(); }

ComplexMatrix matrix_exp(const ComplexMatrix& t) {
  require_square(t, "matrix_exp");
  if (t.empty()) return t;
  const Eigen::MatrixXcd e = detail::to_eigen(t).exp();
  ComplexMatrix r = detail::from_eigen(e);
  if (t.space_label()) r.set_space_label(*t.space_label());
  return r;
}

double hermitian_residual(const ComplexMatrix& t) { return (t - dagger(t)).norm(); }
double antihermitian_residual(const ComplexMatrix& t) { return (t + dagger(t)).norm(); }

double unitary_residual(const ComplexMatrix& t) {
  require_square(t, "unitary_residual");
  return (t * dagger(t) - ComplexMatrix::identity(t.rows())).norm();
}

namespace pauli {
ComplexMatrix x() { return ComplexMatrix::from_rows({{0, 1}, {1, 0}}); }
ComplexMatrix y() { return ComplexMatrix::from_rows({{0, cplx(0, -1)}, {cplx(0, 1), 0}}); }
ComplexMatrix z() { return ComplexMatrix::from_rows({{1, 0}, {0, -1}}); }
}  // namespace pauli

AntilinearOp::AntilinearOp(ComplexMatrix k, double tol) : k_(std::move(k)) {
  require_square(k_, "AntilinearOp");
  const double res = unitary_residual(k_);
  if (res > tol * std::max(1.0, std::sqrt(static_cast<double>(k_.rows()))))
    throw std::invalid_argument("AntilinearOp: K is not unitary (residual " + std::to_string(res) + ")");
}

std::vector<cplx> AntilinearOp::apply(const std::vector<cplx>& v) const {
  if (v.size() != dim()) throw DimensionMismatch("AntilinearOp::apply");
  std::vector<cplx> out(dim(), 0.0);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out[i] += k_(i, j) * std::conj(v[j]);
  return out;
}

ComplexMatrix AntilinearOp::conjugate_by(const ComplexMatrix& t) const {
  require_same_shape(k_, t, "J T J^-1");
  return k_ * conj(t) * dagger(k_);
}

ComplexMatrix AntilinearOp::opposite(const ComplexMatrix& t) const {
  require_same_shape(k_, t, "opposite");
  return k_ * transpose(t) * dagger(k_);
}

ComplexMatrix AntilinearOp::square() const { return k_ * conj(k_); }

std::optional<int> AntilinearOp::square_sign(double tol) const {
  const ComplexMatrix sq = square();
  const ComplexMatrix one = ComplexMatrix::identity(dim());
  if ((sq - one).norm() <= tol * std::sqrt(static_cast<double>(dim()))) return 1;
  if ((sq + one).norm() <= tol * std::sqrt(static_cast<double>(dim()))) return -1;
  return std::nullopt;
}

double AntilinearOp::commutation_residual(const ComplexMatrix& t) const { return (t - conjugate_by(t)).norm(); }

AntilinearOp tensor(const AntilinearOp& a, const AntilinearOp& b) { return AntilinearOp(tensor(a.K(), b.K())); }
AntilinearOp dirsum(const AntilinearOp& a, const AntilinearOp& b) { return AntilinearOp(dirsum(a.K(), b.K())); }
ComplexMatrix opposite(const ComplexMatrix& t, const AntilinearOp& j) { return j.opposite(t); }

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {a * o.a - b * o.b - c * o.c - d * o.d, a * o.b + b * o.a + c * o.d - d * o.c,
          a * o.c - b * o.d + c * o.a + d * o.b, a * o.d + b * o.c - c * o.b + d * o.a};
}

double Quaternion::norm() const { return std::sqrt(a * a + b * b + c * c + d * d); }

ComplexMatrix embed(const Quaternion& q) {
  return ComplexMatrix::from_rows({{cplx(q.a, q.b), cplx(q.c, q.d)}, {cplx(-q.c, q.d), cplx(q.a, -q.b)}});
}

RealSubspace::RealSubspace(std::size_t rows, std::size_t cols, double tol) : rows_(rows), cols_(cols), tol_(tol) {}

bool RealSubspace::insert(const ComplexMatrix& t, double scale) {
  if (basis_.empty() && rows_ == 0 && cols_ == 0) {
    rows_ = t.rows();
    cols_ = t.cols();
  }
  if (t.rows() != rows_ || t.cols() != cols_) throw DimensionMismatch("RealSubspace::insert");
  const double n0 = t.norm();
  if (n0 == 0.0 || n0 <= tol_ * scale) return false;
  if (basis_.size() >= 2 * rows_ * cols_) return false;
  ComplexMatrix v = t;
  v *= 1.0 / n0;
  double* vd = reinterpret_cast<double*>(v.data());
  const std::size_t len = 2 * v.size();
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis_) {
      const double* bd = reinterpret_cast<const double*>(b.data());
      const double c = kernels::dot(bd, vd, len);
      kernels::axpy(-c, bd, vd, len);
    }
  }
  const double r = v.norm();
  if (r <= tol_) return false;
  v *= 1.0 / r;
  basis_.push_back(std::move(v));
  return true;
}

std::vector<double> RealSubspace::coordinates(const ComplexMatrix& t) const {
  std::vector<double> c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = re_inner(basis_[i], t);
  return c;
}

ComplexMatrix RealSubspace::project(const ComplexMatrix& t) const {
  ComplexMatrix p(t.rows(), t.cols());
  const auto c = coordinates(t);
  for (std::size_t i = 0; i < basis_.size(); ++i) p.add_scaled(c[i], basis_[i]);
  return p;
}

double RealSubspace::distance(const ComplexMatrix& t) const {
  if (basis_.empty()) return t.norm();
  ComplexMatrix r = t;
  const auto c = coordinates(t);
  for (std::size_t i = 0; i < basis_.size(); ++i) r.add_scaled(-c[i], basis_[i]);
  return r.norm();
}

double RealSubspace::relative_distance(const ComplexMatrix& t) const {
  const double n = t.norm();
  return n == 0.0 ? 0.0 : distance(t) / n;
}

bool RealSubspace::contains(const ComplexMatrix& t) const { return distance(t) <= tol_ * t.norm(); }

bool RealSubspace::contains(const RealSubspace& other) const {
  for (const auto& b : other.basis()) {
    if (!contains(b)) return false;
  }
  return true;
}

double RealSubspace::gram_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i; j < basis_.size(); ++j)
      worst = std::max(worst, std::abs(re_inner(basis_[i], basis_[j]) - (i == j ? 1.0 : 0.0)));
  return worst;
}

RealSubspace real_span(const std::vector<ComplexMatrix>& generators, double tol) {
  if (generators.empty()) return RealSubspace(0, 0, tol);
  RealSubspace s(generators.front().rows(), generators.front().cols(), tol);
  double scale = 0.0;
  for (const auto& g : generators) scale = std::max(scale, g.norm());
  for (const auto& g : generators) s.insert(g, scale);
  return s;
}

bool span_contains(const RealSubspace& s, const ComplexMatrix& t) { return s.contains(t); }

bool span_equal(const RealSubspace& a, const RealSubspace& b) {
  return a.dim() == b.dim() && a.contains(b) && b.contains(a);
}

}  // namespace jt
