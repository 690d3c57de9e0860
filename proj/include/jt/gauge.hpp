#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jt/background.hpp"
#include "jt/matrix.hpp"
#include "jt/report.hpp"

namespace jt {

class DecompositionFailure : public std::runtime_error {
 public:
  explicit DecompositionFailure(const std::string& what) : std::runtime_error("decomposition failure: " + what) {}
};

class NotInLiePi : public std::invalid_argument {
 public:
  explicit NotInLiePi(const std::string& what) : std::invalid_argument("ad* leaves pi(A): " + what) {}
};

class GaugePropertyViolation : public std::runtime_error {
 public:
  explicit GaugePropertyViolation(const std::string& what) : std::runtime_error("gauge property violated: " + what) {}
};

struct MatrixLieAlgebra {
  RealSubspace span;
  bool closed = false;

  std::size_t dim() const { return span.dim(); }
  const std::vector<ComplexMatrix>& basis() const { return span.basis(); }
};

// Real square matrix acting on coordinates in the algebra basis.
struct DerivationOperator {
  std::size_t dim = 0;
  std::vector<double> m;  // row-major

  double operator()(std::size_t i, std::size_t j) const { return m[i * dim + j]; }
  double& operator()(std::size_t i, std::size_t j) { return m[i * dim + j]; }
  double norm() const;
};

DerivationOperator operator-(const DerivationOperator& a, const DerivationOperator& b);
DerivationOperator operator*(double s, const DerivationOperator& a);
DerivationOperator commutator(const DerivationOperator& a, const DerivationOperator& b);

std::size_t default_max_passes(std::size_t hilbert_dim);

MatrixLieAlgebra lie_closure(const std::vector<ComplexMatrix>& generators, double tol = kDefaultTol);

struct LiePiDecomposition {
  MatrixLieAlgebra lie_pi;
  MatrixLieAlgebra brackets;  // [π(A), π(A)]
  std::size_t pi_dim = 0;
};
LiePiDecomposition lie_pi(const BiRepresentation& r);

// [S(A), S(A)] by Lie closure; verifies the four unimodularity properties.
MatrixLieAlgebra gauge_algebra(const BiRepresentation& r);
AxiomReport gauge_properties(const MatrixLieAlgebra& g, const BiRepresentation& r);

// x ↦ a x + x a† on π(A), in the algebra basis.
DerivationOperator ad_star(const ComplexMatrix& a, const BiRepresentation& r);
// L_x : y ↦ x∘y on π(A), in the algebra basis.
DerivationOperator left_mult(const ComplexMatrix& x, const BiRepresentation& r);

// dim ker(a ↦ ad*_a) on [π(A),π(A)] plus any extra generators.
std::size_t kernel_ad(const BiRepresentation& r, const std::vector<ComplexMatrix>& extra_generators = {});

struct LieClassification {
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  std::size_t derived_dim = 0;
  bool perfect = false;
  bool traceless = true;
  std::vector<std::size_t> ideal_dims;
};
LieClassification classify(const MatrixLieAlgebra& g, std::uint64_t seed = 7);
bool is_perfect(const MatrixLieAlgebra& g);
nlohmann::ordered_json to_json(const LieClassification& c);

}  // namespace jt
