#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "jt/matrix.hpp"

namespace jt {

class UnsupportedSummand : public std::invalid_argument {
 public:
  explicit UnsupportedSummand(const std::string& what) : std::invalid_argument(what) {}
};

class NotJordanClosed : public std::invalid_argument {
 public:
  explicit NotJordanClosed(const std::string& what) : std::invalid_argument(what) {}
};

enum class Field { Real, Complex, Quaternion };

struct SummandTag {
  enum class Kind { Reals, Herm, JSpin };
  Kind kind = Kind::Reals;
  int n = 1;
  Field field = Field::Real;

  static SummandTag reals() { return {Kind::Reals, 1, Field::Real}; }
  static SummandTag herm(int n, Field f) { return {Kind::Herm, n, f}; }
  static SummandTag jspin(int n) { return {Kind::JSpin, n, Field::Real}; }

  // H(n,R) | H(n,C) | H(n,H) | JSpin(n) | R. H(n,O) throws UnsupportedSummand.
  static SummandTag parse(const std::string& text);
  std::string to_string() const;
  std::size_t real_dim() const;

  bool operator==(const SummandTag&) const = default;
};

std::vector<SummandTag> parse_summands(const std::string& text);

struct CheckResult {
  bool pass = true;
  double residual = 0.0;
  explicit operator bool() const { return pass; }
};

class FiniteJordanAlgebra {
 public:
  FiniteJordanAlgebra() = default;
  // Validates hermiticity, independence, closure under ∘ and the unit.
  FiniteJordanAlgebra(std::vector<ComplexMatrix> basis, std::vector<SummandTag> summands, ComplexMatrix unit,
                      double tol = kDefaultTol);

  std::size_t dim() const { return basis_.size(); }
  std::size_t matrix_size() const { return unit_.rows(); }
  const std::vector<ComplexMatrix>& basis() const { return basis_; }
  const ComplexMatrix& operator[](std::size_t i) const { return basis_[i]; }
  const std::vector<SummandTag>& summands() const { return summands_; }
  const ComplexMatrix& unit() const { return unit_; }
  std::string summary() const;

  ComplexMatrix element(const std::vector<double>& coeffs) const;
  // Coordinates of a member of the span (least squares otherwise).
  std::vector<double> coordinates(const ComplexMatrix& x) const;
  ComplexMatrix random_element(std::mt19937_64& rng) const;
  // Offsets of each summand inside the basis.
  std::vector<std::size_t> summand_offsets() const;

  // max over basis pairs of the distance from b_i∘b_j to the span
  double closure_residual() const;

 private:
  std::vector<ComplexMatrix> basis_;
  std::vector<SummandTag> summands_;
  ComplexMatrix unit_;
  std::vector<double> gram_inverse_;
};

FiniteJordanAlgebra herm_jordan(int n, Field field);
FiniteJordanAlgebra jspin(int n);
// JSpin(2) as the matrices [[x, z*], [z, x]], basis (1, σx, σy).
FiniteJordanAlgebra jspin2_offdiag();
FiniteJordanAlgebra reals();
FiniteJordanAlgebra direct_sum(const std::vector<FiniteJordanAlgebra>& as);
FiniteJordanAlgebra algebra_from_tag(const SummandTag& tag);
FiniteJordanAlgebra algebra_from_tags(const std::vector<SummandTag>& tags);

// Standard Hermitian basis of n×n complex matrices: E_ii, E_ij+E_ji, i(E_ji−E_ij).
std::vector<ComplexMatrix> hermitian_basis(std::size_t n);
// Anticommuting Hermitian generators of JSpin(n).
std::vector<ComplexMatrix> gamma_tower(int n);

CheckResult check_jordan_identity(const FiniteJordanAlgebra& a, int trials, std::uint64_t seed,
                                  double tol = kDefaultTol);
CheckResult check_formally_real(const FiniteJordanAlgebra& a, int trials, std::uint64_t seed,
                                double tol = kDefaultTol);
CheckResult check_power_associative(const FiniteJordanAlgebra& a, int trials, std::uint64_t seed,
                                    double tol = kDefaultTol);

}  // namespace jt
