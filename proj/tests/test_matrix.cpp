#include <random>

#include "doctest.h"
#include "jt/matrix.hpp"
#include "jt/models.hpp"
#include "support.hpp"

using namespace jt;

namespace {

const cplx I(0, 1);

ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  return m;
}

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  ComplexMatrix h = random_matrix(n, rng);
  return matrix_exp(0.5 * (h - dagger(h)));
}

}  // namespace

TEST_CASE("dagger examples") {
  CHECK(dagger(ComplexMatrix::identity(3)) == ComplexMatrix::identity(3));
  CHECK(dagger(ComplexMatrix::from_rows({{0, 1}, {0, 0}})) == ComplexMatrix::from_rows({{0, 0}, {1, 0}}));
  CHECK(dagger(embed({0, 1, 0, 0})) == embed({0, -1, 0, 0}));
  std::mt19937_64 rng(1);
  const ComplexMatrix t = random_matrix(5, rng);
  CHECK(dagger(dagger(t)) == t);
}

TEST_CASE("jordan_circ examples") {
  std::mt19937_64 rng(2);
  const ComplexMatrix y = random_matrix(2, rng);
  CHECK((jordan_circ(ComplexMatrix::identity(2), y) - y).norm() < 1e-15);
  CHECK(jordan_circ(pauli::x(), pauli::y()).norm() < 1e-15);
  CHECK((jordan_circ(pauli::x(), pauli::x()) - ComplexMatrix::identity(2)).norm() < 1e-15);
  CHECK((jordan_circ(y, y) - y * y).norm() < 1e-13);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(ComplexMatrix(2, 2) + ComplexMatrix(3, 3), DimensionMismatch);
  CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), DimensionMismatch);
  CHECK_THROWS_AS(commutator(ComplexMatrix(2, 2), ComplexMatrix(3, 3)), DimensionMismatch);
  CHECK_THROWS_AS(AntilinearOp(ComplexMatrix::identity(2)).opposite(ComplexMatrix(3, 3)), DimensionMismatch);
  ComplexMatrix m(4, 4);
  CHECK_THROWS_AS(m.set_space_label({{"weak", 2}, {"colour", 4}}), DimensionMismatch);
}

TEST_CASE("space labels propagate through tensor and dirsum") {
  ComplexMatrix a = ComplexMatrix::identity(2);
  a.set_space_label({{"weak", 2}});
  ComplexMatrix b = ComplexMatrix::identity(4);
  b.set_space_label({{"colour", 4}});
  const ComplexMatrix t = tensor(a, b);
  REQUIRE(t.space_label());
  CHECK(*t.space_label() == SpaceLabel{{"weak", 2}, {"colour", 4}});
  const ComplexMatrix s = dirsum(a, a);
  REQUIRE(s.space_label());
  CHECK(label_dim(*s.space_label()) == 4);
  CHECK((a * a).space_label() == a.space_label());
}

TEST_CASE("opposite examples") {
  const AntilinearOp conj2 = AntilinearOp::conjugation(2);
  CHECK(opposite(ComplexMatrix::identity(2), conj2) == ComplexMatrix::identity(2));
  // J = conjugation: T° = (T†)* = Tᵀ
  const ComplexMatrix t = I * pauli::y() + I * pauli::z() + pauli::x();
  CHECK((opposite(t, conj2) - transpose(t)).norm() < 1e-15);
  CHECK((opposite(t, conj2) - t).norm() > 1.0);

  // SM real structure: [A,B,C,D] ↦ [C*,D*,A*,B*]
  std::mt19937_64 rng(5);
  const int n = 1;
  std::array<ComplexMatrix, 4> blocks;
  for (auto& b : blocks) {
    const ComplexMatrix h = random_matrix(8, rng);
    b = h + dagger(h);
  }
  const ComplexMatrix x = layout::chiral(blocks);
  const ComplexMatrix expect = layout::chiral({conj(blocks[2]), conj(blocks[3]), conj(blocks[0]), conj(blocks[1])});
  CHECK((layout::real_structure(n).opposite(x) - expect).norm() < 1e-13);
}

TEST_CASE("opposite properties on random real structures") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 5;
    // J² = +1: K = U Uᵀ; J² = −1: K = U Ω Uᵀ, Ω symplectic (even n only)
    const ComplexMatrix u = random_unitary(n, rng);
    ComplexMatrix k = u * transpose(u);
    int eps = 1;
    if (trial % 2 == 1 && n % 2 == 0) {
      ComplexMatrix om(n, n);
      for (std::size_t i = 0; i < n; i += 2) {
        om(i, i + 1) = 1.0;
        om(i + 1, i) = -1.0;
      }
      k = u * om * transpose(u);
      eps = -1;
    }
    const AntilinearOp j(k);
    REQUIRE(j.square_sign().has_value());
    CHECK(*j.square_sign() == eps);
    const ComplexMatrix t = random_matrix(n, rng);
    CHECK((j.opposite(j.opposite(t)) - t).norm() < 1e-11 * t.norm());
    CHECK(std::abs(trace(t - j.opposite(t))) < 1e-11 * t.norm());
  }
}

TEST_CASE("antilinear op rejects non-unitary K") {
  CHECK_THROWS(AntilinearOp(2.0 * ComplexMatrix::identity(2)));
}

TEST_CASE("quaternion embedding is multiplicative") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  for (int t = 0; t < 50; ++t) {
    const Quaternion p{g(rng), g(rng), g(rng), g(rng)}, q{g(rng), g(rng), g(rng), g(rng)};
    CHECK((embed(p * q) - embed(p) * embed(q)).norm() < 1e-12);
    CHECK((embed(p.conjugate()) - dagger(embed(p))).norm() < 1e-14);
  }
  CHECK(embed({1, 2, 3, 4}) == ComplexMatrix::from_rows({{cplx(1, 2), cplx(3, 4)}, {cplx(-3, 4), cplx(1, -2)}}));
}

TEST_CASE("real_span examples") {
  const ComplexMatrix one = ComplexMatrix::identity(2);
  CHECK(real_span({one, 2.0 * one}).dim() == 1);
  CHECK(real_span({pauli::x(), pauli::y(), I * pauli::x()}).dim() == 3);
  CHECK(real_span({}).dim() == 0);

  // JSpin(2)⊕H₂(ℂ)⊕H₃(ℂ)⊕ℝ: 3+4+9+1
  const FiniteTriple bf = bf_jordan(ModelParams::generic(1, 1));
  const std::size_t oracle_rank = oracle::real_rank(bf.birep().pi);
  CHECK(oracle_rank == 17);
  CHECK(real_span(bf.birep().pi).dim() == oracle_rank);
}

TEST_CASE("span_contains and matrix_exp examples") {
  const RealSubspace s1 = real_span({ComplexMatrix::identity(2)});
  CHECK(span_contains(s1, ComplexMatrix::identity(2)));
  CHECK_FALSE(span_contains(real_span({pauli::x()}), pauli::y()));
  CHECK(matrix_exp(ComplexMatrix::zeros(3)) == ComplexMatrix::identity(3));
  const ComplexMatrix r = matrix_exp(cplx(0, M_PI / 2) * pauli::z());
  CHECK((r - cplx(0, 1) * pauli::z()).norm() < 1e-12);
}

TEST_CASE("real_span invariants") {
  std::mt19937_64 rng(13);
  std::vector<ComplexMatrix> gens;
  for (int k = 0; k < 9; ++k) gens.push_back(random_matrix(3, rng));
  gens.push_back(gens[0] - 3.0 * gens[4]);
  gens.push_back(I * gens[2]);
  const RealSubspace s = real_span(gens);
  CHECK(s.dim() == oracle::real_rank(gens));
  CHECK(s.gram_residual() < 1e-12);
  const RealSubspace again = real_span(s.basis());
  CHECK(again.dim() == s.dim());
  CHECK(span_equal(s, again));
  for (const auto& g : gens) CHECK(s.distance(s.project(g)) < 1e-10 * g.norm());
  for (const auto& b : s.basis()) CHECK(re_inner(b, b) > 0.0);
  CHECK(re_inner(gens[1], gens[2]) == doctest::Approx(re_inner(gens[2], gens[1])));
}

TEST_CASE("real_span dimension is bounded by the real ambient dimension") {
  std::mt19937_64 rng(17);
  std::vector<ComplexMatrix> gens;
  for (int k = 0; k < 12; ++k) gens.push_back(random_matrix(2, rng));
  CHECK(real_span(gens).dim() == 8);
}
