#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jt {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument("dimension mismatch: " + what) {}
};

struct SpaceFactor {
  std::string name;
  std::size_t dim = 0;
  bool operator==(const SpaceFactor&) const = default;
};

using SpaceLabel = std::vector<SpaceFactor>;

std::size_t label_dim(const SpaceLabel& label);

// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }
  static ComplexMatrix zeros(std::size_t n) { return ComplexMatrix(n, n); }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<cplx>& d);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
  static ComplexMatrix from_rows(const std::vector<std::vector<cplx>>& rows);
  // Single nonzero entry.
  static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j, cplx value = 1.0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  cplx* data() { return entries_.data(); }
  const cplx* data() const { return entries_.data(); }
  cplx* row(std::size_t i) { return entries_.data() + i * cols_; }
  const cplx* row(std::size_t i) const { return entries_.data() + i * cols_; }
  const std::vector<cplx>& entries() const { return entries_; }

  const std::optional<SpaceLabel>& space_label() const { return label_; }
  void set_space_label(SpaceLabel label);
  void clear_space_label() { label_.reset(); }

  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);
  ComplexMatrix& operator*=(double s);
  // this += s * other
  ComplexMatrix& add_scaled(cplx s, const ComplexMatrix& other);
  ComplexMatrix& add_scaled(double s, const ComplexMatrix& other);

  double norm() const;
  double max_abs() const;

  bool operator==(const ComplexMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
  std::optional<SpaceLabel> label_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(double s, ComplexMatrix a);

ComplexMatrix dagger(const ComplexMatrix& t);
ComplexMatrix transpose(const ComplexMatrix& t);
ComplexMatrix conj(const ComplexMatrix& t);
cplx trace(const ComplexMatrix& t);
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix anticommutator(const ComplexMatrix& x, const ComplexMatrix& y);
// x∘y = (xy + yx)/2
ComplexMatrix jordan_circ(const ComplexMatrix& x, const ComplexMatrix& y);
// Kronecker product; labels concatenate with x's factors outermost.
ComplexMatrix tensor(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix dirsum(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix dirsum(const std::vector<ComplexMatrix>& blocks);
// Re tr(x†y)
double re_inner(const ComplexMatrix& x, const ComplexMatrix& y);
double frobenius(const ComplexMatrix& t);
ComplexMatrix matrix_exp(const ComplexMatrix& t);

// ‖t − t†‖, ‖t + t†‖
double hermitian_residual(const ComplexMatrix& t);
double antihermitian_residual(const ComplexMatrix& t);
double unitary_residual(const ComplexMatrix& t);

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* where);
void require_square(const ComplexMatrix& a, const char* where);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

// J acting as v ↦ K·conj(v).
class AntilinearOp {
 public:
  AntilinearOp() = default;
  explicit AntilinearOp(ComplexMatrix k, double tol = kDefaultTol);

  static AntilinearOp conjugation(std::size_t n) { return AntilinearOp(ComplexMatrix::identity(n)); }

  const ComplexMatrix& K() const { return k_; }
  std::size_t dim() const { return k_.rows(); }

  std::vector<cplx> apply(const std::vector<cplx>& v) const;
  // J T J⁻¹ = K conj(T) K†
  ComplexMatrix conjugate_by(const ComplexMatrix& t) const;
  // J T† J⁻¹
  ComplexMatrix opposite(const ComplexMatrix& t) const;
  // matrix of J² = K conj(K)
  ComplexMatrix square() const;
  // ±1 when J² = ±1 within tol
  std::optional<int> square_sign(double tol = kDefaultTol) const;
  // ‖T − J T J⁻¹‖, zero iff T commutes with J
  double commutation_residual(const ComplexMatrix& t) const;

 private:
  ComplexMatrix k_;
};

AntilinearOp tensor(const AntilinearOp& a, const AntilinearOp& b);
AntilinearOp dirsum(const AntilinearOp& a, const AntilinearOp& b);
ComplexMatrix opposite(const ComplexMatrix& t, const AntilinearOp& j);

struct Quaternion {
  double a = 0, b = 0, c = 0, d = 0;

  Quaternion operator*(const Quaternion& o) const;
  Quaternion operator+(const Quaternion& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Quaternion conjugate() const { return {a, -b, -c, -d}; }
  double norm() const;
  bool operator==(const Quaternion&) const = default;
};

// q ↦ [[a+ib, c+id], [−c+id, a−ib]]
ComplexMatrix embed(const Quaternion& q);

// ℝ-linear span under Re tr(X†Y), kept orthonormal.
class RealSubspace {
 public:
  RealSubspace() = default;
  RealSubspace(std::size_t rows, std::size_t cols, double tol = kDefaultTol);

  std::size_t dim() const { return basis_.size(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t ambient_dim() const { return rows_; }
  double tol() const { return tol_; }
  const std::vector<ComplexMatrix>& basis() const { return basis_; }
  const ComplexMatrix& operator[](std::size_t i) const { return basis_[i]; }

  // Adds the direction of t when it leaves the span. t is ignored when
  // ‖t‖ ≤ tol·scale (scale defaults to ‖t‖ itself, i.e. never ignored unless zero).
  bool insert(const ComplexMatrix& t, double scale = 0.0);
  ComplexMatrix project(const ComplexMatrix& t) const;
  std::vector<double> coordinates(const ComplexMatrix& t) const;
  // ‖t − P t‖
  double distance(const ComplexMatrix& t) const;
  // distance relative to ‖t‖ (0 for t = 0)
  double relative_distance(const ComplexMatrix& t) const;
  bool contains(const ComplexMatrix& t) const;
  bool contains(const RealSubspace& other) const;
  double gram_residual() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  double tol_ = kDefaultTol;
  std::vector<ComplexMatrix> basis_;
};

RealSubspace real_span(const std::vector<ComplexMatrix>& generators, double tol = kDefaultTol);
bool span_contains(const RealSubspace& s, const ComplexMatrix& t);
bool span_equal(const RealSubspace& a, const RealSubspace& b);

}  // namespace jt
