#include "jt/models.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "eigen_bridge.hpp"

namespace jt {

namespace {

ComplexMatrix gaussian_block(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0 / std::sqrt(2.0));
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

bool full_rank(const ComplexMatrix& m) {
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(detail::to_eigen(m));
  lu.setThreshold(1e-8);
  return lu.rank() == static_cast<Eigen::Index>(m.rows());
}

void check_block(const ComplexMatrix& b, int n, const char* name) {
  if (b.rows() != static_cast<std::size_t>(n) || b.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument(std::string("ModelParams: ") + name + " must be " + std::to_string(n) + "x" +
                                std::to_string(n));
}

}  // namespace

ModelParams ModelParams::zero(int n) {
  if (n < 1) throw std::invalid_argument("ModelParams: N must be positive");
  ModelParams p;
  p.N = n;
  p.Y_nu = p.Y_e = p.Y_u = p.Y_d = p.m_nu = ComplexMatrix::zeros(n);
  return p;
}

ModelParams ModelParams::generic(int n, std::uint64_t seed) {
  ModelParams p = zero(n);
  p.seed = seed;
  std::mt19937_64 rng(seed);
  for (ComplexMatrix* b : {&p.Y_nu, &p.Y_e, &p.Y_u, &p.Y_d}) *b = gaussian_block(n, rng);
  const ComplexMatrix a = gaussian_block(n, rng);
  p.m_nu = 0.5 * (a + transpose(a));
  for (const ComplexMatrix* b : {&p.Y_nu, &p.Y_e, &p.Y_u, &p.Y_d, &p.m_nu})
    if (!full_rank(*b)) throw std::runtime_error("ModelParams::generic: rank-deficient block for seed " + std::to_string(seed));
  return p;
}

ModelParams& ModelParams::without_majorana() {
  m_nu = ComplexMatrix::zeros(N);
  return *this;
}

void ModelParams::validate() const {
  if (N < 1) throw std::invalid_argument("ModelParams: N must be positive");
  check_block(Y_nu, N, "Y_nu");
  check_block(Y_e, N, "Y_e");
  check_block(Y_u, N, "Y_u");
  check_block(Y_d, N, "Y_d");
  check_block(m_nu, N, "m_nu");
  const double asym = (m_nu - transpose(m_nu)).norm();
  if (asym > kDefaultTol * std::max(1.0, m_nu.norm()))
    throw std::invalid_argument("ModelParams: m_nu must be symmetric (residual " + std::to_string(asym) + ")");
}

namespace layout {

std::size_t sector_dim(int n) { return 8 * static_cast<std::size_t>(n); }
std::size_t hilbert_dim(int n) { return 32 * static_cast<std::size_t>(n); }

SpaceLabel space_label(int n) {
  return {{"chirality", 4}, {"colour", 4}, {"weak", 2}, {"generation", static_cast<std::size_t>(n)}};
}

std::vector<SpaceFactor> chiral_blocks(int n) {
  const std::size_t d = sector_dim(n);
  return {{"R", d}, {"L", d}, {"Rbar", d}, {"Lbar", d}};
}

ComplexMatrix wc(const ComplexMatrix& weak, const ComplexMatrix& colour) { return tensor(colour, weak); }

ComplexMatrix lepton_projector() { return ComplexMatrix::unit(4, 0, 0); }

ComplexMatrix quark_embed(const ComplexMatrix& m3) {
  if (m3.rows() != 3 || m3.cols() != 3) throw DimensionMismatch("quark_embed: expected 3x3");
  ComplexMatrix out(4, 4);
  out.set_block(1, 1, m3);
  return out;
}

ComplexMatrix generations(const ComplexMatrix& sector8, int n) {
  return tensor(sector8, ComplexMatrix::identity(static_cast<std::size_t>(n)));
}

ComplexMatrix chiral(const std::array<ComplexMatrix, 4>& sectors) {
  ComplexMatrix out = dirsum(std::vector<ComplexMatrix>(sectors.begin(), sectors.end()));
  return out;
}

ComplexMatrix sector_block(const ComplexMatrix& h, int n, Chirality row, Chirality col) {
  const std::size_t d = sector_dim(n);
  return h.block(row * d, col * d, d, d);
}

AntilinearOp real_structure(int n) {
  const std::size_t d = sector_dim(n);
  ComplexMatrix k(4 * d, 4 * d);
  const ComplexMatrix one = ComplexMatrix::identity(d);
  k.set_block(Rbar * d, R * d, one);
  k.set_block(R * d, Rbar * d, one);
  k.set_block(Lbar * d, L * d, one);
  k.set_block(L * d, Lbar * d, one);
  return AntilinearOp(std::move(k));
}

ComplexMatrix grading(int n) {
  const std::size_t d = sector_dim(n);
  const ComplexMatrix one = ComplexMatrix::identity(d);
  return chiral({one, -one, -one, one});
}

ComplexMatrix yukawa(const ModelParams& p) {
  const std::size_t n = p.N;
  ComplexMatrix y(sector_dim(p.N), sector_dim(p.N));
  for (std::size_t colour = 0; colour < 4; ++colour) {
    const ComplexMatrix& up = colour == 0 ? p.Y_nu : p.Y_u;
    const ComplexMatrix& down = colour == 0 ? p.Y_e : p.Y_d;
    y.set_block((colour * 2 + 0) * n, (colour * 2 + 0) * n, up);
    y.set_block((colour * 2 + 1) * n, (colour * 2 + 1) * n, down);
  }
  return y;
}

ComplexMatrix majorana(const ModelParams& p) {
  ComplexMatrix m(sector_dim(p.N), sector_dim(p.N));
  m.set_block(0, 0, p.m_nu);
  return m;
}

}  // namespace layout

DiracOperator model_dirac(const ModelParams& p) {
  using namespace layout;
  p.validate();
  const std::size_t d = sector_dim(p.N);
  const ComplexMatrix y = yukawa(p);
  const ComplexMatrix m = majorana(p);
  ComplexMatrix dm(4 * d, 4 * d);
  dm.set_block(R * d, L * d, dagger(y));
  dm.set_block(L * d, R * d, y);
  dm.set_block(R * d, Rbar * d, dagger(m));
  dm.set_block(Rbar * d, R * d, m);
  dm.set_block(Rbar * d, Lbar * d, transpose(y));
  dm.set_block(Lbar * d, Rbar * d, conj(y));
  DiracOperator out;
  out.matrix = std::move(dm);
  out.named_blocks = {{"Y_nu", p.Y_nu}, {"Y_e", p.Y_e}, {"Y_u", p.Y_u}, {"Y_d", p.Y_d}, {"m_nu", p.m_nu}};
  return out;
}

namespace {

using namespace layout;

ComplexMatrix on_sectors(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                         const ComplexMatrix& d, int n) {
  return chiral({generations(a, n), generations(b, n), generations(c, n), generations(d, n)});
}

BiRepresentation model_birep(std::string name, FiniteJordanAlgebra algebra, std::vector<ComplexMatrix> pi, int n) {
  BiRepresentation r;
  r.name = std::move(name);
  r.algebra = std::move(algebra);
  r.pi = std::move(pi);
  for (auto& p : r.pi) p.set_space_label(space_label(n));
  r.J = real_structure(n);
  r.chi = grading(n);
  r.signs = {1, -1};
  r.chiral_blocks = chiral_blocks(n);
  return r;
}

const ComplexMatrix& i4() {
  static const ComplexMatrix one = ComplexMatrix::identity(4);
  return one;
}

}  // namespace

ComplexMatrix sm_pi(cplx lambda, const ComplexMatrix& q, const ComplexMatrix& m, int n) {
  if (q.rows() != 2 || q.cols() != 2) throw DimensionMismatch("sm_pi: q must be 2x2");
  const ComplexMatrix lam = ComplexMatrix::diagonal({lambda, std::conj(lambda)});
  const ComplexMatrix ext = lambda * wc(ComplexMatrix::identity(2), lepton_projector()) +
                            wc(ComplexMatrix::identity(2), quark_embed(m));
  return on_sectors(wc(lam, i4()), wc(q, i4()), ext, ext, n);
}

std::vector<ComplexMatrix> sm_associative_basis(int n) {
  const ComplexMatrix q0 = ComplexMatrix::zeros(2), m0 = ComplexMatrix::zeros(3);
  const cplx I(0, 1);
  std::vector<ComplexMatrix> out;
  out.push_back(sm_pi(1.0, q0, m0, n));
  out.push_back(sm_pi(I, q0, m0, n));
  for (const Quaternion& u : {Quaternion{1, 0, 0, 0}, Quaternion{0, 1, 0, 0}, Quaternion{0, 0, 1, 0},
                              Quaternion{0, 0, 0, 1}})
    out.push_back(sm_pi(0.0, embed(u), m0, n));
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) {
      out.push_back(sm_pi(0.0, q0, ComplexMatrix::unit(3, k, l), n));
      out.push_back(sm_pi(0.0, q0, ComplexMatrix::unit(3, k, l, I), n));
    }
  return out;
}

std::vector<ComplexMatrix> sm_skew_basis(int n) {
  const ComplexMatrix q0 = ComplexMatrix::zeros(2), m0 = ComplexMatrix::zeros(3);
  const cplx I(0, 1);
  std::vector<ComplexMatrix> out;
  out.push_back(sm_pi(I, q0, m0, n));
  for (const Quaternion& u : {Quaternion{0, 1, 0, 0}, Quaternion{0, 0, 1, 0}, Quaternion{0, 0, 0, 1}})
    out.push_back(sm_pi(0.0, embed(u), m0, n));
  for (std::size_t k = 0; k < 3; ++k) {
    out.push_back(sm_pi(0.0, q0, ComplexMatrix::unit(3, k, k, I), n));
    for (std::size_t l = k + 1; l < 3; ++l) {
      out.push_back(sm_pi(0.0, q0, ComplexMatrix::unit(3, k, l, I) + ComplexMatrix::unit(3, l, k, I), n));
      out.push_back(sm_pi(0.0, q0, ComplexMatrix::unit(3, k, l) - ComplexMatrix::unit(3, l, k), n));
    }
  }
  return out;
}

FiniteTriple sm_associative(const ModelParams& p) {
  p.validate();
  // Jordan part: R ⊕ R ⊕ H(3,C), i.e. real λ, real multiples of 1 in H, Hermitian m.
  FiniteJordanAlgebra a = direct_sum({reals(), reals(), herm_jordan(3, Field::Complex)});
  std::vector<ComplexMatrix> pi;
  for (const auto& b : a.basis())
    pi.push_back(sm_pi(b(0, 0), b(1, 1) * ComplexMatrix::identity(2), b.block(2, 2, 3, 3), p.N));
  BiRepresentation r = model_birep("sm", std::move(a), std::move(pi), p.N);
  r.associative_images = sm_associative_basis(p.N);
  return make_triple(std::move(r), model_dirac(p));
}

FiniteTriple bf_jordan(const ModelParams& p) {
  p.validate();
  FiniteJordanAlgebra a =
      direct_sum({jspin2_offdiag(), herm_jordan(2, Field::Complex), herm_jordan(3, Field::Complex), reals()});
  std::vector<ComplexMatrix> pi;
  const ComplexMatrix one2 = ComplexMatrix::identity(2);
  for (const auto& b : a.basis()) {
    const ComplexMatrix lam = b.block(0, 0, 2, 2);
    const ComplexMatrix h = b.block(2, 2, 2, 2);
    const ComplexMatrix ext = b(7, 7) * wc(one2, lepton_projector()) + wc(one2, quark_embed(b.block(4, 4, 3, 3)));
    pi.push_back(on_sectors(wc(lam, i4()), wc(h, i4()), ext, ext, p.N));
  }
  return make_triple(model_birep("bf", std::move(a), std::move(pi), p.N), model_dirac(p));
}

FiniteTriple ps_jordan(const ModelParams& p) {
  p.validate();
  FiniteJordanAlgebra a = direct_sum(
      {herm_jordan(2, Field::Complex), herm_jordan(2, Field::Complex), herm_jordan(4, Field::Complex)});
  std::vector<ComplexMatrix> pi;
  const ComplexMatrix one2 = ComplexMatrix::identity(2);
  for (const auto& b : a.basis()) {
    const ComplexMatrix ext = wc(one2, b.block(4, 4, 4, 4));
    pi.push_back(on_sectors(wc(b.block(0, 0, 2, 2), i4()), wc(b.block(2, 2, 2, 2), i4()), ext, ext, p.N));
  }
  return make_triple(model_birep("ps", std::move(a), std::move(pi), p.N), model_dirac(p));
}

namespace {

ComplexMatrix swap_halves(std::size_t d) {
  ComplexMatrix k(4 * d, 4 * d);
  const ComplexMatrix one = ComplexMatrix::identity(d);
  k.set_block(2 * d, 0, one);
  k.set_block(0, 2 * d, one);
  k.set_block(3 * d, d, one);
  k.set_block(d, 3 * d, one);
  return k;
}

}  // namespace

BiRepresentation doubled_defining(const FiniteJordanAlgebra& a, const std::string& name) {
  const std::size_t d = a.matrix_size();
  const ComplexMatrix zero = ComplexMatrix::zeros(d);
  const ComplexMatrix one = ComplexMatrix::identity(d);
  BiRepresentation r;
  r.name = name;
  r.algebra = a;
  for (const auto& b : a.basis()) r.pi.push_back(dirsum({b, b, zero, zero}));
  r.J = AntilinearOp(swap_halves(d));
  r.chi = dirsum({one, -one, -one, one});
  r.signs = {1, -1};
  r.chiral_blocks = {{"R", d}, {"L", d}, {"Rbar", d}, {"Lbar", d}};
  return r;
}

FiniteTriple doubled_triple(const FiniteJordanAlgebra& a, const std::string& name) {
  BiRepresentation r = doubled_defining(a, name);
  DiracOperator d;
  d.matrix = ComplexMatrix::zeros(r.hilbert_dim());
  return make_triple(std::move(r), std::move(d));
}

DecoupledControl decoupled_su2_control(const FiniteJordanAlgebra& a) {
  BiRepresentation base = doubled_defining(a, "decoupled_control");
  const std::size_t n = base.hilbert_dim();
  const ComplexMatrix z2 = ComplexMatrix::zeros(2);
  DecoupledControl out;
  out.rep = base;
  for (auto& p : out.rep.pi) p = dirsum(p, z2);
  out.rep.J = dirsum(base.J, AntilinearOp::conjugation(2));
  out.rep.chi = dirsum(base.chi, pauli::y());
  out.rep.chiral_blocks.push_back({"extra", 2});
  const cplx half_i(0, 0.5);
  for (const ComplexMatrix& s : {pauli::x(), pauli::y(), pauli::z()})
    out.extra.push_back(dirsum(ComplexMatrix::zeros(n), half_i * s));
  return out;
}

}  // namespace jt
