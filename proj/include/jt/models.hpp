#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "jt/background.hpp"
#include "jt/forms.hpp"
#include "jt/jordan.hpp"
#include "jt/matrix.hpp"

namespace jt {

struct ModelParams {
  int N = 3;
  ComplexMatrix Y_nu, Y_e, Y_u, Y_d, m_nu;
  std::uint64_t seed = 0;

  static ModelParams zero(int n);
  // Seeded complex Gaussian blocks of unit scale; m_nu symmetric.
  static ModelParams generic(int n, std::uint64_t seed);
  ModelParams& without_majorana();

  // Throws ValidationError-style std::invalid_argument on bad shapes or a
  // non-symmetric m_nu.
  void validate() const;
};

// H_F = C²_weak ⊗ C⁴_colour ⊗ C⁴_χ ⊗ C^N, index ((χ·4 + colour)·2 + weak)·N + generation,
// chirality order R, L, Rbar, Lbar and colour 0 the lepton.
namespace layout {

enum Chirality { R = 0, L = 1, Rbar = 2, Lbar = 3 };

std::size_t sector_dim(int n);
std::size_t hilbert_dim(int n);
SpaceLabel space_label(int n);
std::vector<SpaceFactor> chiral_blocks(int n);

// weak ⊗ colour operator on the 8-dim sector, weak index inner
ComplexMatrix wc(const ComplexMatrix& weak, const ComplexMatrix& colour);
ComplexMatrix lepton_projector();                   // E_ll on colour
ComplexMatrix quark_embed(const ComplexMatrix& m3);  // 0 ⊕ m on colour
ComplexMatrix generations(const ComplexMatrix& sector8, int n);
ComplexMatrix chiral(const std::array<ComplexMatrix, 4>& sectors);
ComplexMatrix sector_block(const ComplexMatrix& h, int n, Chirality row, Chirality col);

AntilinearOp real_structure(int n);
ComplexMatrix grading(int n);

// Y = diag over colours of diag(Y_up, Y_down) in weak (8N×8N)
ComplexMatrix yukawa(const ModelParams& p);
ComplexMatrix majorana(const ModelParams& p);

}  // namespace layout

DiracOperator model_dirac(const ModelParams& p);

// π_F(λ, q, m) of the associative SM algebra C ⊕ H ⊕ M3(C).
ComplexMatrix sm_pi(cplx lambda, const ComplexMatrix& q, const ComplexMatrix& m, int n);
// 24 real basis elements: C{1,i}, H{1, iσz, iσy, iσx}, M3(C){E_kl, iE_kl}.
std::vector<ComplexMatrix> sm_associative_basis(int n);
// Anti-Hermitian part: u(1) ⊕ su(2) ⊕ u(3), 13 elements.
std::vector<ComplexMatrix> sm_skew_basis(int n);

FiniteTriple sm_associative(const ModelParams& p);
FiniteTriple bf_jordan(const ModelParams& p);
FiniteTriple ps_jordan(const ModelParams& p);

// π(a) = [a, a, 0, 0] on four copies of the defining space, J swapping 0↔2, 1↔3.
BiRepresentation doubled_defining(const FiniteJordanAlgebra& a, const std::string& name = "doubled");
FiniteTriple doubled_triple(const FiniteJordanAlgebra& a, const std::string& name = "doubled");

// ad-trivial su(2) on an extra 2-dim summand: π ⊕ 0₂ and the three iσ/2 on the summand.
struct DecoupledControl {
  BiRepresentation rep;
  std::vector<ComplexMatrix> extra;
};
DecoupledControl decoupled_su2_control(const FiniteJordanAlgebra& a);

}  // namespace jt
