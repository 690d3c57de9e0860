#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jt/background.hpp"
#include "jt/gauge.hpp"
#include "jt/matrix.hpp"
#include "jt/report.hpp"

namespace jt {

class DepthExceeded : public std::runtime_error {
 public:
  explicit DepthExceeded(const std::string& what) : std::runtime_error("depth exceeded: " + what) {}
};

class C1Violation : public std::runtime_error {
 public:
  explicit C1Violation(const std::string& what) : std::runtime_error("C1 violation: " + what) {}
};

class NotAssociative : public std::invalid_argument {
 public:
  explicit NotAssociative(const std::string& what) : std::invalid_argument("not associative: " + what) {}
};

class ConfigurationViolation : public std::runtime_error {
 public:
  ConfigurationViolation(std::string axiom, const std::string& detail)
      : std::runtime_error("configuration violation (" + axiom + "): " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

struct DiracOperator {
  ComplexMatrix matrix;
  std::map<std::string, ComplexMatrix> named_blocks;
};

struct FiniteTriple {
  FiniteBackground background;
  DiracOperator dirac;

  const BiRepresentation& birep() const { return background.birep; }
  const ComplexMatrix& D() const { return dirac.matrix; }
};

enum class FluctuationKind { Minimal, General, AssociativeComparison };
std::string to_string(FluctuationKind k);

struct FluctuationSpace {
  RealSubspace span;
  FluctuationKind kind = FluctuationKind::Minimal;
  bool complete = true;
  std::size_t passes = 0;

  std::size_t dim() const { return span.dim(); }
};

// [D, π(a_i)] over the algebra basis.
std::vector<ComplexMatrix> exact_forms(const FiniteTriple& t);
// Ω¹_D: exact forms closed under X ↦ π(a)∘X.
RealSubspace one_form_module(const BiRepresentation& r, const ComplexMatrix& d);
RealSubspace one_form_module(const FiniteTriple& t);
// Triple whose background carries Ω¹ = Ω¹_D.
FiniteTriple make_triple(BiRepresentation r, DiracOperator d);

// S on anti-Hermitian forms: ½(ω − ω°)
ComplexMatrix s_form(const ComplexMatrix& omega, const AntilinearOp& j);

CheckResult check_C1(const FiniteTriple& t);
CheckResult check_weak_C1(const FiniteTriple& t);
AxiomReport check_dirac(const FiniteTriple& t);

FluctuationSpace minimal_fluctuations(const FiniteTriple& t, std::size_t max_depth = 0);
FluctuationSpace minimal_fluctuations(const FiniteTriple& t, const MatrixLieAlgebra& gauge, std::size_t max_depth = 0);
FluctuationSpace general_fluctuations(const FiniteTriple& t);
FluctuationSpace associative_fluctuations(const FiniteTriple& t);

AxiomReport check_postulates(const FiniteTriple& t, const FluctuationSpace& f, int samples, std::uint64_t seed);
AxiomReport check_postulates(const FiniteTriple& t, const FluctuationSpace& f, const MatrixLieAlgebra& gauge,
                             int samples, std::uint64_t seed);

FiniteTriple fluctuated_dirac(const FiniteTriple& t, const ComplexMatrix& f_element,
                              const FluctuationSpace* space = nullptr);

struct AlmostAssociativeSplit {
  MatrixLieAlgebra gauge;
  FluctuationSpace higgs;
  bool perfect = false;
  std::string gauge_tag = "Omega1_M (x) [S(A_F),S(A_F)]";
  std::string higgs_tag = "C^inf(M, F_{D_F})";
};
AlmostAssociativeSplit almost_associative_fluctuations(const FiniteTriple& t);

struct BlockSupport {
  std::string rows;
  std::string cols;
  std::size_t real_dim = 0;
  std::size_t complex_dim = 0;
};
// Per chiral block pair: dims of the span of that block over ℝ and ℂ.
std::vector<BlockSupport> block_profile(const RealSubspace& s, const std::vector<SpaceFactor>& blocks);
std::size_t complex_block_dim(const RealSubspace& s, const std::vector<SpaceFactor>& blocks, const std::string& rows,
                              const std::string& cols);
nlohmann::ordered_json to_json(const FluctuationSpace& f, const std::vector<SpaceFactor>& blocks);

}  // namespace jt
