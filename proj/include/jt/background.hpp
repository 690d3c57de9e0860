#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jt/jordan.hpp"
#include "jt/matrix.hpp"
#include "jt/report.hpp"

namespace jt {

class C0Violation : public std::runtime_error {
 public:
  explicit C0Violation(const std::string& what) : std::runtime_error("C0 violation: " + what) {}
};

class NonUnitary : public std::invalid_argument {
 public:
  explicit NonUnitary(const std::string& what) : std::invalid_argument("non-unitary: " + what) {}
};

class NotAntiHermitian : public std::invalid_argument {
 public:
  explicit NotAntiHermitian(const std::string& what) : std::invalid_argument("not anti-Hermitian: " + what) {}
};

struct Signs {
  int epsilon = 1;         // J² = ε
  int epsilon_chi = 1;     // Jχ = ε″χJ
};

struct BiRepresentation {
  std::string name;
  FiniteJordanAlgebra algebra;
  std::vector<ComplexMatrix> pi;  // π(basis_i)
  AntilinearOp J;
  ComplexMatrix chi;
  Signs signs;
  double tol = kDefaultTol;
  // Real basis of the associative algebra when the model is associative.
  std::optional<std::vector<ComplexMatrix>> associative_images;
  // Consecutive named diagonal blocks of H (e.g. R, L, Rbar, Lbar).
  std::vector<SpaceFactor> chiral_blocks;

  std::size_t hilbert_dim() const { return chi.rows(); }
  bool is_associative() const { return associative_images.has_value(); }
  ComplexMatrix pi_of(const std::vector<double>& coeffs) const;
  ComplexMatrix pi_of(const ComplexMatrix& algebra_element) const;
};

struct FiniteBackground {
  BiRepresentation birep;
  RealSubspace omega1;
};

std::vector<ComplexMatrix> opposite_rep(const BiRepresentation& r);
CheckResult check_C0(const BiRepresentation& r);
// ½(π + π°); throws C0Violation when C0 fails.
std::vector<ComplexMatrix> symmetrized(const BiRepresentation& r);

// Linearized multiplicative identities and [[S_x,S_y],S_z] = S_{[y,z,x]}
// over all basis triples.
struct MultiplicativeCheck {
  CheckResult identity1;
  CheckResult identity2;
  CheckResult associator;
  bool pass() const { return identity1.pass && identity2.pass && associator.pass; }
};
MultiplicativeCheck check_multiplicative(const std::vector<ComplexMatrix>& s_images, const FiniteJordanAlgebra& a,
                                         double tol = kDefaultTol);
// Same identities on seeded random elements instead of basis triples.
MultiplicativeCheck check_multiplicative_sampled(const std::vector<ComplexMatrix>& s_images,
                                                 const FiniteJordanAlgebra& a, int samples, std::uint64_t seed,
                                                 double tol = kDefaultTol);

// Linear extension of a basis-indexed map.
ComplexMatrix apply_linear(const std::vector<ComplexMatrix>& images, const std::vector<double>& coeffs);
// [x,y,z] = (x∘y)∘z − x∘(y∘z)
ComplexMatrix associator(const ComplexMatrix& x, const ComplexMatrix& y, const ComplexMatrix& z);

// Υ(u) = u J u J⁻¹
ComplexMatrix upsilon(const BiRepresentation& r, const ComplexMatrix& u);
// a − a°
ComplexMatrix d_upsilon(const BiRepresentation& r, const ComplexMatrix& a);

// Relative residual ‖[x,y]‖ / (‖x‖‖y‖), 0 when either vanishes.
double commutator_residual(const ComplexMatrix& x, const ComplexMatrix& y);
double anticommutator_residual(const ComplexMatrix& x, const ComplexMatrix& y);

AxiomReport check_birep(const BiRepresentation& r);
AxiomReport check_background(const FiniteBackground& b);

}  // namespace jt
