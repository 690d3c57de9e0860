#include <random>

#include "doctest.h"
#include "jt/gauge.hpp"
#include "jt/models.hpp"
#include "support.hpp"

using namespace jt;

namespace {

// i · traceless Hermitian n×n
std::vector<ComplexMatrix> su(std::size_t n) {
  std::vector<ComplexMatrix> out;
  for (const auto& h : hermitian_basis(n))
    if (std::abs(trace(h)) < 1e-12) out.push_back(cplx(0, 1) * h);
  for (std::size_t k = 1; k < n; ++k)
    out.push_back(cplx(0, 1) * (ComplexMatrix::unit(n, 0, 0) - ComplexMatrix::unit(n, k, k)));
  return out;
}

std::vector<ComplexMatrix> so(std::size_t n) {
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(ComplexMatrix::unit(n, i, j) - ComplexMatrix::unit(n, j, i));
  return out;
}

}  // namespace

TEST_CASE("lie_closure examples") {
  const MatrixLieAlgebra su2 = lie_closure({cplx(0, 1) * pauli::x(), cplx(0, 1) * pauli::y()});
  CHECK(su2.dim() == 3);
  CHECK(su2.closed);
  CHECK(lie_closure(su(3)).dim() == 8);
  CHECK(lie_closure(so(4)).dim() == 6);
  // two generic elements of su(3) generate all of it
  CHECK(lie_closure({su(3)[0] + su(3)[4], su(3)[1] + 0.3 * su(3)[7]}).dim() == 8);
  CHECK(lie_closure({ComplexMatrix::identity(2)}).dim() == 1);
}

TEST_CASE("classify: su(3), so(3), sp(2), su(2)+u(1)") {
  const LieClassification a = classify(lie_closure(su(3)));
  CHECK(a.dim == 8);
  CHECK(a.center_dim == 0);
  CHECK(a.perfect);
  CHECK(a.ideal_dims == std::vector<std::size_t>{8});

  const LieClassification b = classify(lie_closure(so(3)));
  CHECK(b.ideal_dims == std::vector<std::size_t>{3});

  const BiRepresentation r = doubled_defining(herm_jordan(2, Field::Quaternion));
  const LieClassification c = classify(gauge_algebra(r));
  CHECK(c.dim == 10);
  CHECK(c.ideal_dims == std::vector<std::size_t>{10});

  std::vector<ComplexMatrix> gens;
  for (const auto& x : su(2)) gens.push_back(dirsum(x, ComplexMatrix::zeros(1)));
  gens.push_back(dirsum(ComplexMatrix::zeros(2), cplx(0, 1) * ComplexMatrix::identity(1)));
  const MatrixLieAlgebra u2 = lie_closure(gens);
  const LieClassification d = classify(u2);
  CHECK(d.dim == 4);
  CHECK(d.center_dim == 1);
  CHECK(d.derived_dim == 3);
  CHECK_FALSE(d.perfect);
  CHECK_FALSE(is_perfect(u2));
  CHECK(d.ideal_dims == std::vector<std::size_t>{1, 3});
}

TEST_CASE("gauge dims of defining reps") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(gauge_algebra(doubled_defining(herm_jordan(n, Field::Real))).dim() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(gauge_algebra(doubled_defining(herm_jordan(n, Field::Complex))).dim() == static_cast<std::size_t>(n * n - 1));
    CHECK(gauge_algebra(doubled_defining(herm_jordan(n, Field::Quaternion))).dim() ==
          static_cast<std::size_t>(n * (2 * n + 1)));
  }
  for (int n = 2; n <= 5; ++n)
    CHECK(gauge_algebra(doubled_defining(jspin(n))).dim() == static_cast<std::size_t>(n * (n - 1) / 2));
}

TEST_CASE("gauge algebra of the models") {
  const ModelParams p = ModelParams::generic(1, 8);
  const FiniteTriple bf = bf_jordan(p);
  const MatrixLieAlgebra g = gauge_algebra(bf.birep());
  CHECK(g.dim() == 12);
  CHECK(classify(g).ideal_dims == std::vector<std::size_t>{1, 3, 8});
  CHECK(gauge_properties(g, bf.birep()).all_pass());
  const FiniteTriple ps = ps_jordan(p);
  const MatrixLieAlgebra h = gauge_algebra(ps.birep());
  CHECK(h.dim() == 21);
  CHECK(is_perfect(h));
  CHECK(classify(h).ideal_dims == std::vector<std::size_t>{3, 3, 15});
}

TEST_CASE("lie_pi contains the gauge algebra's brackets") {
  const BiRepresentation r = bf_jordan(ModelParams::generic(1, 1)).birep();
  const LiePiDecomposition d = lie_pi(r);
  CHECK(d.pi_dim == 17);
  CHECK(d.lie_pi.span.contains(d.brackets.span));
  CHECK(d.brackets.dim() >= 1);
}

TEST_CASE("ad_star is a derivation of the Jordan product and [L_x,L_y] = ¼ad_[x,y]") {
  const ModelParams p = ModelParams::generic(1, 6);
  for (const BiRepresentation& r : {bf_jordan(p).birep(), ps_jordan(p).birep(), doubled_defining(herm_jordan(3, Field::Quaternion))}) {
    CAPTURE(r.name);
    std::mt19937_64 rng(11);
    for (int s = 0; s < 10; ++s) {
      const ComplexMatrix x = r.pi_of(r.algebra.random_element(rng));
      const ComplexMatrix y = r.pi_of(r.algebra.random_element(rng));
      const DerivationOperator lhs = commutator(left_mult(x, r), left_mult(y, r));
      const DerivationOperator rhs = 0.25 * ad_star(commutator(x, y), r);
      CHECK((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
      // ad* of an anti-Hermitian element acts as the matrix commutator
      const ComplexMatrix a = commutator(x, y);
      const ComplexMatrix za = r.algebra.random_element(rng);
      const ComplexMatrix z = r.pi_of(za);
      const DerivationOperator d = ad_star(a, r);
      const auto zc = r.algebra.coordinates(za);
      std::vector<double> out(r.algebra.dim(), 0.0);
      for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[i] += d(i, j) * zc[j];
      const ComplexMatrix dz = r.pi_of(out);
      CHECK((dz - commutator(a, z)).norm() < 1e-9 * (1.0 + a.norm() * z.norm()));
    }
  }
}

TEST_CASE("ad_star leaving π(A) throws") {
  const BiRepresentation r = doubled_defining(herm_jordan(2, Field::Real));
  // i·σy-type rotation inside one copy only is not in [π(A), π(A)]-compatible form
  ComplexMatrix a = ComplexMatrix::zeros(r.hilbert_dim());
  a(0, 1) = cplx(0, 1);
  a(1, 0) = cplx(0, 1);
  CHECK_THROWS_AS(ad_star(a, r), NotInLiePi);
}

TEST_CASE("kernel_ad") {
  const ModelParams p = ModelParams::generic(1, 2);
  CHECK(kernel_ad(bf_jordan(p).birep()) == 0);
  CHECK(kernel_ad(ps_jordan(p).birep()) == 0);
  for (int n = 2; n <= 3; ++n)
    for (Field f : {Field::Real, Field::Complex, Field::Quaternion})
      CHECK(kernel_ad(doubled_defining(herm_jordan(n, f))) == 0);
  const DecoupledControl ctrl = decoupled_su2_control(herm_jordan(2, Field::Complex));
  CHECK(kernel_ad(ctrl.rep, ctrl.extra) >= 1);
}

TEST_CASE("default_max_passes grows with the Hilbert dimension") {
  CHECK(default_max_passes(96) >= default_max_passes(32));
  CHECK(default_max_passes(1) >= 1);
}

TEST_CASE("classification json") {
  const auto j = to_json(classify(lie_closure(su(2))));
  CHECK(j["dim"] == 3);
  CHECK(j["perfect"] == true);
}
