#include <cmath>
#include <random>

#include "doctest.h"
#include "jt/models.hpp"
#include "support.hpp"

using namespace jt;

TEST_CASE("layout indices") {
  for (int n : {1, 3}) {
    CHECK(layout::sector_dim(n) == static_cast<std::size_t>(8 * n));
    CHECK(layout::hilbert_dim(n) == static_cast<std::size_t>(32 * n));
    CHECK(label_dim(layout::space_label(n)) == layout::hilbert_dim(n));
    const auto blocks = layout::chiral_blocks(n);
    REQUIRE(blocks.size() == 4);
    CHECK(blocks[0].name == "R");
    CHECK(blocks[3].name == "Lbar");
  }
  // wc(weak, colour) places weak inner
  const ComplexMatrix w = pauli::x();
  const ComplexMatrix c = ComplexMatrix::unit(4, 1, 2);
  const ComplexMatrix m = layout::wc(w, c);
  CHECK(m(1 * 2 + 0, 2 * 2 + 1) == cplx(1.0));
  CHECK(m.norm() == doctest::Approx(std::sqrt(2.0)));
  CHECK(layout::lepton_projector() == ComplexMatrix::unit(4, 0, 0));
}

TEST_CASE("grading and real structure") {
  const int n = 2;
  const ComplexMatrix chi = layout::grading(n);
  const int signs[4] = {1, -1, -1, 1};
  for (int ch = 0; ch < 4; ++ch)
    for (int col = 0; col < 4; ++col)
      for (int w = 0; w < 2; ++w)
        for (int g = 0; g < n; ++g) {
          const std::size_t i = oracle::idx(ch, col, w, g, n);
          CHECK(chi(i, i) == cplx(signs[ch]));
        }
  const AntilinearOp j = layout::real_structure(n);
  CHECK(j.square_sign() == std::optional<int>(1));
  // J swaps R ↔ Rbar and L ↔ Lbar index by index
  const std::size_t a = oracle::idx(0, 2, 1, 1, n), b = oracle::idx(2, 2, 1, 1, n);
  CHECK(j.K()(b, a) == cplx(1.0));
  CHECK(j.K()(a, b) == cplx(1.0));
  // Jχ = −χJ
  CHECK((j.K() * conj(chi) + chi * j.K()).norm() < 1e-14);
}

TEST_CASE("ModelParams") {
  const ModelParams p = ModelParams::generic(3, 42);
  CHECK_NOTHROW(p.validate());
  CHECK((p.m_nu - transpose(p.m_nu)).norm() < 1e-15);
  CHECK(p.m_nu.norm() > 0.1);
  const ModelParams q = ModelParams::generic(3, 42);
  CHECK(q.Y_u == p.Y_u);
  CHECK_FALSE(ModelParams::generic(3, 43).Y_u == p.Y_u);
  ModelParams bad = p;
  bad.m_nu(0, 1) += 1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = p;
  bad.Y_e = ComplexMatrix::zeros(2);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(ModelParams::zero(2).Y_nu.norm() == 0.0);
}

TEST_CASE("Dirac operator blocks") {
  for (int n : {1, 3}) {
    const ModelParams p = ModelParams::generic(n, 7);
    const DiracOperator d = model_dirac(p);
    const ComplexMatrix y = oracle::yukawa(p);
    using namespace layout;
    CHECK((sector_block(d.matrix, n, L, R) - y).norm() < 1e-14);
    CHECK((sector_block(d.matrix, n, R, L) - oracle::hermitian_conj(y)).norm() < 1e-14);
    CHECK((sector_block(d.matrix, n, Lbar, Rbar) - oracle::entry_conj(y)).norm() < 1e-14);
    CHECK((sector_block(d.matrix, n, Rbar, Lbar) - oracle::plain_transpose(y)).norm() < 1e-14);
    const ComplexMatrix mm = oracle::majorana_direction(p, 1.0);
    CHECK((sector_block(d.matrix, n, Rbar, R) - oracle::sector_of(mm, n, 2, 0)).norm() < 1e-14);
    CHECK(sector_block(d.matrix, n, L, Lbar).norm() == 0.0);
    CHECK(hermitian_residual(d.matrix) < 1e-14);
    CHECK((d.matrix * grading(n) + grading(n) * d.matrix).norm() < 1e-13);
    CHECK(real_structure(n).commutation_residual(d.matrix) < 1e-13);
    CHECK(d.named_blocks.count("Y_nu") == 1);
    CHECK(d.named_blocks.at("Y_u") == p.Y_u);
  }
}

TEST_CASE("SM associative basis") {
  const auto b = sm_associative_basis(1);
  CHECK(b.size() == 24);
  CHECK(oracle::real_rank(b) == 24);
  const auto s = sm_skew_basis(1);
  CHECK(s.size() == 13);
  CHECK(oracle::real_rank(s) == 13);
  for (const auto& x : s) CHECK(antihermitian_residual(x) < 1e-15);
  // products stay in the algebra
  const RealSubspace alg = real_span(b);
  for (std::size_t i = 0; i < b.size(); i += 5)
    for (std::size_t j = 0; j < b.size(); j += 3) CHECK(alg.contains(b[i] * b[j]));
}

TEST_CASE("Υ on the unimodular SM unitary matches the block formula") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> th(-M_PI, M_PI);
  for (int n : {1, 3}) {
    const FiniteTriple sm = sm_associative(ModelParams::generic(n, 5));
    for (int s = 0; s < 5; ++s) {
      const double theta = th(rng);
      const ComplexMatrix q = oracle::random_special_unitary(2, rng);
      const ComplexMatrix g = oracle::random_special_unitary(3, rng);
      const ComplexMatrix u = sm_pi(std::exp(cplx(0, theta)), q, std::exp(cplx(0, -theta / 3.0)) * g, n);
      const ComplexMatrix got = upsilon(sm.birep(), u);
      const ComplexMatrix want = oracle::upsilon_blocks(theta, q, g, n);
      CHECK((got - want).max_abs() < 1e-10);
    }
  }
}

TEST_CASE("model triples") {
  const ModelParams p = ModelParams::generic(1, 1);
  const FiniteTriple bf = bf_jordan(p);
  CHECK(bf.birep().algebra.dim() == 17);
  CHECK(bf.birep().hilbert_dim() == 32);
  CHECK(real_span(bf.birep().pi).dim() == 17);
  const FiniteTriple ps = ps_jordan(p);
  CHECK(ps.birep().algebra.dim() == 24);
  const FiniteTriple sm = sm_associative(p);
  CHECK(sm.birep().is_associative());
  CHECK(sm.birep().associative_images->size() == 24);
  CHECK_FALSE(bf.birep().is_associative());
  ModelParams bad = p;
  bad.m_nu(0, 0) = std::nan("");
  bad.Y_u = ComplexMatrix::zeros(3);
  CHECK_THROWS(bf_jordan(bad));
}

TEST_CASE("doubled defining and the decoupled control") {
  const BiRepresentation r = doubled_defining(herm_jordan(3, Field::Complex));
  CHECK(r.hilbert_dim() == 12);
  CHECK(check_birep(r).all_pass());
  const FiniteTriple t = doubled_triple(jspin(3));
  CHECK(t.D().norm() == 0.0);
  const DecoupledControl c = decoupled_su2_control(herm_jordan(2, Field::Complex));
  CHECK(c.extra.size() == 3);
  CHECK(c.rep.hilbert_dim() == r.hilbert_dim() / 3 * 2 + 2);
}
