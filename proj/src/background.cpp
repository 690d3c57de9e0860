#include "jt/background.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace jt {

namespace {

double rel(double num, double scale) { return scale > 0.0 ? num / scale : num; }

}  // namespace

ComplexMatrix apply_linear(const std::vector<ComplexMatrix>& images, const std::vector<double>& coeffs) {
  if (images.size() != coeffs.size()) throw DimensionMismatch("apply_linear: coefficient count");
  if (images.empty()) return {};
  ComplexMatrix out(images.front().rows(), images.front().cols());
  for (std::size_t i = 0; i < images.size(); ++i)
    if (coeffs[i] != 0.0) out.add_scaled(coeffs[i], images[i]);
  return out;
}

ComplexMatrix associator(const ComplexMatrix& x, const ComplexMatrix& y, const ComplexMatrix& z) {
  return jordan_circ(jordan_circ(x, y), z) - jordan_circ(x, jordan_circ(y, z));
}

ComplexMatrix BiRepresentation::pi_of(const std::vector<double>& coeffs) const { return apply_linear(pi, coeffs); }

ComplexMatrix BiRepresentation::pi_of(const ComplexMatrix& algebra_element) const {
  return apply_linear(pi, algebra.coordinates(algebra_element));
}

double commutator_residual(const ComplexMatrix& x, const ComplexMatrix& y) {
  return rel(commutator(x, y).norm(), x.norm() * y.norm());
}

double anticommutator_residual(const ComplexMatrix& x, const ComplexMatrix& y) {
  return rel(anticommutator(x, y).norm(), x.norm() * y.norm());
}

std::vector<ComplexMatrix> opposite_rep(const BiRepresentation& r) {
  std::vector<ComplexMatrix> out;
  out.reserve(r.pi.size());
  for (const auto& p : r.pi) out.push_back(r.J.opposite(p));
  return out;
}

CheckResult check_C0(const BiRepresentation& r) {
  const auto opp = opposite_rep(r);
  CheckResult res;
  for (const auto& a : r.pi)
    for (const auto& b : opp) res.residual = std::max(res.residual, commutator_residual(a, b));
  res.pass = res.residual <= r.tol;
  return res;
}

std::vector<ComplexMatrix> symmetrized(const BiRepresentation& r) {
  const CheckResult c0 = check_C0(r);
  if (!c0.pass) throw C0Violation("[pi(a), pi(b)°] residual " + std::to_string(c0.residual));
  const auto opp = opposite_rep(r);
  std::vector<ComplexMatrix> s;
  s.reserve(r.pi.size());
  for (std::size_t i = 0; i < r.pi.size(); ++i) s.push_back(0.5 * (r.pi[i] + opp[i]));
  return s;
}

namespace {

struct TripleProbe {
  const std::vector<ComplexMatrix>& s;
  const FiniteJordanAlgebra& a;
  MultiplicativeCheck out;

  ComplexMatrix S(const ComplexMatrix& x) const { return apply_linear(s, a.coordinates(x)); }

  void run(const ComplexMatrix& x, const ComplexMatrix& y, const ComplexMatrix& z, const ComplexMatrix& sx,
           const ComplexMatrix& sy, const ComplexMatrix& sz) {
    const double scale = sx.norm() * sy.norm() * sz.norm();
    const ComplexMatrix s_yz = S(jordan_circ(y, z));
    const ComplexMatrix s_xy = S(jordan_circ(x, y));
    const ComplexMatrix s_zx = S(jordan_circ(z, x));

    const ComplexMatrix id1 = commutator(sx, s_yz) + commutator(sz, s_xy) + commutator(sy, s_zx);
    out.identity1.residual = std::max(out.identity1.residual, rel(id1.norm(), scale));

    const ComplexMatrix lhs = sx * sy * sz + sz * sy * sx + S(jordan_circ(jordan_circ(x, z), y));
    const ComplexMatrix rhs = sx * s_yz + sy * s_zx + sz * s_xy;
    out.identity2.residual = std::max(out.identity2.residual, rel((lhs - rhs).norm(), scale));

    const ComplexMatrix assoc = commutator(commutator(sx, sy), sz) - S(associator(y, z, x));
    out.associator.residual = std::max(out.associator.residual, rel(assoc.norm(), scale));
  }

  void finish(double tol) {
    out.identity1.pass = out.identity1.residual <= tol;
    out.identity2.pass = out.identity2.residual <= tol;
    out.associator.pass = out.associator.residual <= tol;
  }
};

}  // namespace

MultiplicativeCheck check_multiplicative(const std::vector<ComplexMatrix>& s_images, const FiniteJordanAlgebra& a,
                                         double tol) {
  if (s_images.size() != a.dim()) throw DimensionMismatch("check_multiplicative: images vs algebra basis");
  TripleProbe probe{s_images, a, {}};
  const auto& b = a.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) probe.run(b[i], b[j], b[k], s_images[i], s_images[j], s_images[k]);
  probe.finish(tol);
  return probe.out;
}

MultiplicativeCheck check_multiplicative_sampled(const std::vector<ComplexMatrix>& s_images,
                                                 const FiniteJordanAlgebra& a, int samples, std::uint64_t seed,
                                                 double tol) {
  if (s_images.size() != a.dim()) throw DimensionMismatch("check_multiplicative: images vs algebra basis");
  TripleProbe probe{s_images, a, {}};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < samples; ++t) {
    const ComplexMatrix x = a.random_element(rng);
    const ComplexMatrix y = a.random_element(rng);
    const ComplexMatrix z = a.random_element(rng);
    probe.run(x, y, z, probe.S(x), probe.S(y), probe.S(z));
  }
  probe.finish(tol);
  return probe.out;
}

ComplexMatrix upsilon(const BiRepresentation& r, const ComplexMatrix& u) {
  require_same_shape(u, r.chi, "upsilon");
  const double res = unitary_residual(u);
  if (res > r.tol * std::sqrt(static_cast<double>(u.rows())))
    throw NonUnitary("upsilon argument, residual " + std::to_string(res));
  return u * r.J.conjugate_by(u);
}

ComplexMatrix d_upsilon(const BiRepresentation& r, const ComplexMatrix& a) {
  require_same_shape(a, r.chi, "d_upsilon");
  const double res = antihermitian_residual(a);
  if (res > r.tol * std::max(1.0, a.norm())) throw NotAntiHermitian("d_upsilon argument, residual " + std::to_string(res));
  return a - r.J.opposite(a);
}

AxiomReport check_birep(const BiRepresentation& r) {
  AxiomReport rep;
  const double tol = r.tol;
  const std::size_t n = r.hilbert_dim();
  const ComplexMatrix one = ComplexMatrix::identity(n);

  const std::size_t rank = real_span(r.pi, tol).dim();
  rep.add("pi_injective", rank == r.algebra.dim(), static_cast<double>(r.algebra.dim() - std::min(rank, r.algebra.dim())));

  const auto opp = opposite_rep(r);
  double assoc = 0.0, assoc_opp = 0.0;
  for (std::size_t i = 0; i < r.pi.size(); ++i)
    for (std::size_t j = i; j < r.pi.size(); ++j) {
      const auto coords = r.algebra.coordinates(jordan_circ(r.algebra[i], r.algebra[j]));
      const double scale = r.pi[i].norm() * r.pi[j].norm();
      assoc = std::max(assoc, rel((apply_linear(r.pi, coords) - jordan_circ(r.pi[i], r.pi[j])).norm(), scale));
      assoc_opp = std::max(assoc_opp, rel((apply_linear(opp, coords) - jordan_circ(opp[i], opp[j])).norm(), scale));
    }
  rep.add("pi_associative_specialization", assoc <= tol, assoc);
  rep.add("opposite_associative_specialization", assoc_opp <= tol, assoc_opp);

  const double chi_sq = std::max((r.chi * r.chi - one).norm(), hermitian_residual(r.chi)) / std::sqrt(double(n));
  rep.add("chi_involution", chi_sq <= tol, chi_sq);
  double chi_pi = 0.0;
  for (const auto& p : r.pi) chi_pi = std::max(chi_pi, rel(commutator(r.chi, p).norm(), p.norm()));
  rep.add("chi_commutes_pi", chi_pi <= tol, chi_pi);

  const double j_sq = (r.J.square() - static_cast<double>(r.signs.epsilon) * one).norm() / std::sqrt(double(n));
  rep.add("J_square_epsilon", j_sq <= tol, j_sq);
  const double j_chi =
      (r.J.K() * conj(r.chi) - static_cast<double>(r.signs.epsilon_chi) * (r.chi * r.J.K())).norm() / std::sqrt(double(n));
  rep.add("J_chi_epsilon_pp", j_chi <= tol, j_chi);

  const CheckResult c0 = check_C0(r);
  rep.add("C0", c0.pass, c0.residual);
  return rep;
}

AxiomReport check_background(const FiniteBackground& b) {
  AxiomReport rep = check_birep(b.birep);
  const double tol = b.birep.tol;
  double odd = 0.0, module = 0.0;
  for (const auto& w : b.omega1.basis()) {
    odd = std::max(odd, rel(anticommutator(b.birep.chi, w).norm(), w.norm()));
    for (const auto& p : b.birep.pi) module = std::max(module, rel(b.omega1.distance(jordan_circ(p, w)), p.norm() * w.norm()));
  }
  rep.add("omega1_odd", odd <= tol, odd);
  rep.add("omega1_module", module <= tol, module);
  return rep;
}

}  // namespace jt
