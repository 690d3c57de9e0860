#include "jt/forms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "jt/closure.hpp"

namespace jt {

namespace {

double rel(double num, double scale) { return scale > 0.0 ? num / scale : num; }

std::vector<ComplexMatrix> bracket_basis(const BiRepresentation& r) {
  const RealSubspace pi_span = real_span(r.pi, r.tol);
  return scaled_span(r.hilbert_dim(), r.hilbert_dim(), pairwise_brackets(pi_span.basis()), r.tol).basis();
}

ComplexMatrix random_member(const RealSubspace& s, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  ComplexMatrix x(s.rows(), s.cols());
  for (const auto& b : s.basis()) x.add_scaled(nd(rng), b);
  return x;
}

}  // namespace

std::string to_string(FluctuationKind k) {
  switch (k) {
    case FluctuationKind::Minimal:
      return "minimal";
    case FluctuationKind::General:
      return "general";
    case FluctuationKind::AssociativeComparison:
      return "associative_comparison";
  }
  return "?";
}

std::vector<ComplexMatrix> exact_forms(const FiniteTriple& t) {
  std::vector<ComplexMatrix> out;
  for (const auto& p : t.birep().pi) out.push_back(commutator(t.D(), p));
  return out;
}

RealSubspace one_form_module(const BiRepresentation& r, const ComplexMatrix& d) {
  std::vector<ScaledGenerator> seeds;
  for (const auto& p : r.pi) seeds.push_back({commutator(d, p), 2.0 * d.norm() * p.norm()});
  RealSubspace s = scaled_span(r.hilbert_dim(), r.hilbert_dim(), seeds, r.tol);
  const ClosureStats st = close_under_actions(s, jordan_actions(r.pi), default_max_passes(r.hilbert_dim()));
  if (!st.complete) throw DepthExceeded("one-form module did not stabilize");
  return s;
}

RealSubspace one_form_module(const FiniteTriple& t) { return one_form_module(t.birep(), t.D()); }

FiniteTriple make_triple(BiRepresentation r, DiracOperator d) {
  RealSubspace omega = one_form_module(r, d.matrix);
  return FiniteTriple{FiniteBackground{std::move(r), std::move(omega)}, std::move(d)};
}

ComplexMatrix s_form(const ComplexMatrix& omega, const AntilinearOp& j) { return 0.5 * (omega - j.opposite(omega)); }

CheckResult check_C1(const FiniteTriple& t) {
  const BiRepresentation& r = t.birep();
  const RealSubspace omega = one_form_module(t);
  CheckResult res;
  for (const auto& w : omega.basis()) {
    const ComplexMatrix wo = r.J.opposite(w);
    for (const auto& p : r.pi) res.residual = std::max(res.residual, rel(commutator(p, wo).norm(), p.norm() * w.norm()));
  }
  res.pass = res.residual <= r.tol;
  return res;
}

CheckResult check_weak_C1(const FiniteTriple& t) {
  const BiRepresentation& r = t.birep();
  const RealSubspace& omega = t.background.omega1;
  CheckResult res;
  for (const auto& g : bracket_basis(r)) {
    const ComplexMatrix go = r.J.opposite(g);
    for (const auto& w : omega.basis())
      res.residual = std::max(res.residual, rel(omega.distance(commutator(go, w)), go.norm() * w.norm()));
  }
  res.pass = res.residual <= r.tol;
  return res;
}

AxiomReport check_dirac(const FiniteTriple& t) {
  const BiRepresentation& r = t.birep();
  const ComplexMatrix& d = t.D();
  const double dn = std::max(d.norm(), 1e-300);
  AxiomReport rep;
  const double herm = rel(hermitian_residual(d), dn);
  rep.add("dirac_hermitian", herm <= r.tol, herm);
  const double odd = rel(anticommutator(r.chi, d).norm(), dn);
  rep.add("dirac_odd", odd <= r.tol, odd);
  const double jc = rel(r.J.commutation_residual(d), dn);
  rep.add("dirac_commutes_J", jc <= r.tol, jc);
  double incl = 0.0;
  for (const auto& p : r.pi) {
    const ComplexMatrix w = commutator(d, p);
    incl = std::max(incl, rel(t.background.omega1.distance(w), 2.0 * dn * p.norm()));
  }
  rep.add("omega1_D_in_omega1", incl <= r.tol, incl);
  return rep;
}

FluctuationSpace minimal_fluctuations(const FiniteTriple& t, std::size_t max_depth) {
  return minimal_fluctuations(t, gauge_algebra(t.birep()), max_depth);
}

FluctuationSpace minimal_fluctuations(const FiniteTriple& t, const MatrixLieAlgebra& gauge, std::size_t max_depth) {
  const BiRepresentation& r = t.birep();
  if (max_depth == 0) max_depth = default_max_passes(r.hilbert_dim());
  std::vector<ScaledGenerator> seeds;
  for (const auto& g : gauge.basis()) seeds.push_back({commutator(g, t.D()), 2.0 * g.norm() * t.D().norm()});
  FluctuationSpace f{scaled_span(r.hilbert_dim(), r.hilbert_dim(), seeds, r.tol), FluctuationKind::Minimal};
  const ClosureStats st = close_under_actions(f.span, adjoint_actions(gauge.basis()), max_depth);
  f.complete = st.complete;
  f.passes = st.passes;
  if (!f.complete)
    throw DepthExceeded("minimal fluctuation closure still growing after " + std::to_string(max_depth) + " passes (dim " +
                        std::to_string(f.dim()) + ")");
  return f;
}

FluctuationSpace general_fluctuations(const FiniteTriple& t) {
  const CheckResult c1 = check_C1(t);
  if (!c1.pass) throw C1Violation("residual " + std::to_string(c1.residual));
  const BiRepresentation& r = t.birep();
  const RealSubspace omega = one_form_module(t);
  std::vector<ScaledGenerator> gens;
  for (const auto& p : r.pi)
    for (const auto& w : omega.basis()) {
      const ComplexMatrix x = commutator(p, w);
      gens.push_back({x + r.J.conjugate_by(x), 4.0 * p.norm() * w.norm()});
    }
  return FluctuationSpace{scaled_span(r.hilbert_dim(), r.hilbert_dim(), gens, r.tol), FluctuationKind::General};
}

FluctuationSpace associative_fluctuations(const FiniteTriple& t) {
  const BiRepresentation& r = t.birep();
  if (!r.is_associative()) throw NotAssociative("triple '" + r.name + "' has no associative algebra image");
  const auto& alg = *r.associative_images;
  const ComplexMatrix& d = t.D();
  std::vector<ScaledGenerator> seeds;
  for (const auto& a : alg) seeds.push_back({commutator(d, a), 2.0 * d.norm() * a.norm()});
  RealSubspace omega = scaled_span(r.hilbert_dim(), r.hilbert_dim(), seeds, r.tol);
  std::vector<LinearAction> acts;
  for (const auto& a : alg) {
    acts.push_back({[a](const ComplexMatrix& x) { return a * x; }, a.norm()});
    acts.push_back({[a](const ComplexMatrix& x) { return x * a; }, a.norm()});
  }
  close_under_actions(omega, acts, default_max_passes(r.hilbert_dim()));
  std::vector<ScaledGenerator> gens;
  for (const auto& w : omega.basis()) {
    const ComplexMatrix h = 0.5 * (w + dagger(w));
    gens.push_back({h + r.J.opposite(h), 2.0 * w.norm()});
  }
  return FluctuationSpace{scaled_span(r.hilbert_dim(), r.hilbert_dim(), gens, r.tol),
                          FluctuationKind::AssociativeComparison};
}

AxiomReport check_postulates(const FiniteTriple& t, const FluctuationSpace& f, int samples, std::uint64_t seed) {
  return check_postulates(t, f, gauge_algebra(t.birep()), samples, seed);
}

AxiomReport check_postulates(const FiniteTriple& t, const FluctuationSpace& f, const MatrixLieAlgebra& gauge,
                             int samples, std::uint64_t seed) {
  const BiRepresentation& r = t.birep();
  const double tol = 1e-8;
  std::mt19937_64 rng(seed);
  double vec = 0.0, odd = 0.0, jres = 0.0, herm = 0.0, pure = 0.0, adinv = 0.0;
  for (const auto& b : f.span.basis()) {
    odd = std::max(odd, anticommutator(r.chi, b).norm());
    jres = std::max(jres, r.J.commutation_residual(b));
    herm = std::max(herm, hermitian_residual(b));
  }
  const double dn = std::max(t.D().norm(), 1e-300);
  const double gscale = gauge.dim() > 0 ? 1.0 / std::sqrt(static_cast<double>(gauge.dim())) : 0.0;
  for (int s = 0; s < samples; ++s) {
    const ComplexMatrix x = random_member(f.span, rng);
    const ComplexMatrix y = random_member(f.span, rng);
    vec = std::max(vec, f.span.relative_distance(x + 0.37 * y));
    if (gauge.dim() == 0) continue;
    const ComplexMatrix g = gscale * random_member(gauge.span, rng);
    const ComplexMatrix u = matrix_exp(g);
    const ComplexMatrix uinv = matrix_exp(-g);
    pure = std::max(pure, rel(f.span.distance(u * t.D() * uinv - t.D()), dn));
    for (const auto& b : f.span.basis()) adinv = std::max(adinv, f.span.distance(u * b * uinv));
  }
  AxiomReport rep;
  rep.add("vector_space", vec <= tol, vec);
  rep.add("odd", odd <= tol, odd);
  rep.add("commutes_J", jres <= tol, jres);
  rep.add("hermitian", herm <= tol, herm);
  rep.add("pure_gauge_membership", pure <= tol, pure);
  rep.add("ad_invariance", adinv <= tol, adinv);
  return rep;
}

FiniteTriple fluctuated_dirac(const FiniteTriple& t, const ComplexMatrix& f_element, const FluctuationSpace* space) {
  require_same_shape(f_element, t.D(), "fluctuated_dirac");
  const double fn = f_element.norm();
  if (space != nullptr && fn > 0.0 && space->span.distance(f_element) > t.birep().tol * fn)
    throw ConfigurationViolation("fluctuation_membership",
                                 "distance " + std::to_string(space->span.distance(f_element)) + " from the space");
  const CheckResult weak = check_weak_C1(t);
  if (!weak.pass) throw ConfigurationViolation("weak_C1", "residual " + std::to_string(weak.residual));
  FiniteTriple out = t;
  out.dirac.matrix += f_element;
  const AxiomReport rep = check_dirac(out);
  for (const auto& e : rep.entries)
    if (!e.pass) throw ConfigurationViolation(e.axiom, "residual " + std::to_string(e.residual));
  return out;
}

AlmostAssociativeSplit almost_associative_fluctuations(const FiniteTriple& t) {
  AlmostAssociativeSplit out;
  out.gauge = gauge_algebra(t.birep());
  out.higgs = minimal_fluctuations(t, out.gauge);
  out.perfect = is_perfect(out.gauge);
  return out;
}

namespace {

std::pair<std::size_t, std::size_t> locate(const std::vector<SpaceFactor>& blocks, const std::string& name) {
  std::size_t off = 0;
  for (const auto& b : blocks) {
    if (b.name == name) return {off, b.dim};
    off += b.dim;
  }
  throw std::invalid_argument("unknown block '" + name + "'");
}

std::pair<std::size_t, std::size_t> block_dims(const RealSubspace& s, std::size_t r0, std::size_t nr, std::size_t c0,
                                               std::size_t nc) {
  std::vector<ScaledGenerator> re, cx;
  for (const auto& b : s.basis()) {
    ComplexMatrix blk = b.block(r0, c0, nr, nc);
    re.push_back({blk, 1.0});
    cx.push_back({blk, 1.0});
    cx.push_back({cplx(0.0, 1.0) * blk, 1.0});
  }
  const std::size_t rd = scaled_span(nr, nc, re, s.tol()).dim();
  const std::size_t cd = scaled_span(nr, nc, cx, s.tol()).dim() / 2;
  return {rd, cd};
}

}  // namespace

std::vector<BlockSupport> block_profile(const RealSubspace& s, const std::vector<SpaceFactor>& blocks) {
  std::vector<BlockSupport> out;
  std::size_t r0 = 0;
  for (const auto& rb : blocks) {
    std::size_t c0 = 0;
    for (const auto& cb : blocks) {
      const auto [rd, cd] = block_dims(s, r0, rb.dim, c0, cb.dim);
      if (rd > 0) out.push_back({rb.name, cb.name, rd, cd});
      c0 += cb.dim;
    }
    r0 += rb.dim;
  }
  return out;
}

std::size_t complex_block_dim(const RealSubspace& s, const std::vector<SpaceFactor>& blocks, const std::string& rows,
                              const std::string& cols) {
  const auto [r0, nr] = locate(blocks, rows);
  const auto [c0, nc] = locate(blocks, cols);
  return block_dims(s, r0, nr, c0, nc).second;
}

nlohmann::ordered_json to_json(const FluctuationSpace& f, const std::vector<SpaceFactor>& blocks) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(f.kind);
  j["dim"] = f.dim();
  j["complete"] = f.complete;
  nlohmann::ordered_json prof = nlohmann::ordered_json::array();
  for (const auto& b : block_profile(f.span, blocks)) {
    nlohmann::ordered_json e;
    e["block"] = b.rows + "," + b.cols;
    e["real_dim"] = b.real_dim;
    e["complex_dim"] = b.complex_dim;
    prof.push_back(e);
  }
  j["block_profile"] = prof;
  return j;
}

}  // namespace jt
