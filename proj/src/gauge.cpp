#include "jt/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "eigen_bridge.hpp"
#include "jt/closure.hpp"

namespace jt {

double DerivationOperator::norm() const {
  double s = 0.0;
  for (double x : m) s += x * x;
  return std::sqrt(s);
}

DerivationOperator operator-(const DerivationOperator& a, const DerivationOperator& b) {
  DerivationOperator r = a;
  for (std::size_t i = 0; i < r.m.size(); ++i) r.m[i] -= b.m[i];
  return r;
}

DerivationOperator operator*(double s, const DerivationOperator& a) {
  DerivationOperator r = a;
  for (auto& x : r.m) x *= s;
  return r;
}

DerivationOperator commutator(const DerivationOperator& a, const DerivationOperator& b) {
  DerivationOperator r{a.dim, std::vector<double>(a.m.size(), 0.0)};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k)
      for (std::size_t j = 0; j < a.dim; ++j) r(i, j) += a(i, k) * b(k, j) - b(i, k) * a(k, j);
  return r;
}

std::size_t default_max_passes(std::size_t hilbert_dim) { return 2 * hilbert_dim * hilbert_dim + 1; }

MatrixLieAlgebra lie_closure(const std::vector<ComplexMatrix>& generators, double tol) {
  MatrixLieAlgebra g{real_span(generators, tol), false};
  const std::size_t n = generators.empty() ? 0 : generators.front().rows();
  g.closed = close_under_brackets(g.span, default_max_passes(n)).complete;
  return g;
}

namespace {

MatrixLieAlgebra closure_of(std::size_t n, const std::vector<ScaledGenerator>& gens, double tol) {
  MatrixLieAlgebra g{scaled_span(n, n, gens, tol), false};
  g.closed = close_under_brackets(g.span, default_max_passes(n)).complete;
  return g;
}

// Coordinates of y in the (non-orthonormal) π basis via the Gram system.
class PiCoordinates {
 public:
  explicit PiCoordinates(const BiRepresentation& r) : pi_(r.pi), span_(real_span(r.pi, r.tol)) {
    const std::size_t d = pi_.size();
    Eigen::MatrixXd g(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) g(i, j) = re_inner(pi_[i], pi_[j]);
    ldlt_.compute(g);
  }

  std::vector<double> operator()(const ComplexMatrix& y) const {
    const std::size_t d = pi_.size();
    Eigen::VectorXd rhs(d);
    for (std::size_t i = 0; i < d; ++i) rhs(i) = re_inner(pi_[i], y);
    const Eigen::VectorXd c = ldlt_.solve(rhs);
    return {c.data(), c.data() + d};
  }

  const RealSubspace& span() const { return span_; }

 private:
  const std::vector<ComplexMatrix>& pi_;
  RealSubspace span_;
  Eigen::LDLT<Eigen::MatrixXd> ldlt_;
};

DerivationOperator restrict_to_pi(const BiRepresentation& r, const PiCoordinates& coords,
                                  const std::function<ComplexMatrix(const ComplexMatrix&)>& f, bool check) {
  const std::size_t d = r.pi.size();
  DerivationOperator op{d, std::vector<double>(d * d, 0.0)};
  for (std::size_t j = 0; j < d; ++j) {
    const ComplexMatrix y = f(r.pi[j]);
    if (check) {
      const double dist = coords.span().distance(y);
      if (dist > r.tol * std::max(1.0, y.norm())) throw NotInLiePi("residual " + std::to_string(dist));
    }
    const auto c = coords(y);
    for (std::size_t i = 0; i < d; ++i) op(i, j) = c[i];
  }
  return op;
}

std::size_t nullity(const Eigen::MatrixXd& a, double tol) {
  if (a.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  const double top = s.size() > 0 ? s(0) : 0.0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * std::max(1.0, top)) ++rank;
  return static_cast<std::size_t>(a.cols()) - rank;
}

}  // namespace

LiePiDecomposition lie_pi(const BiRepresentation& r) {
  LiePiDecomposition out;
  const RealSubspace pi_span = real_span(r.pi, r.tol);
  out.pi_dim = pi_span.dim();
  const std::size_t n = r.hilbert_dim();
  out.brackets = closure_of(n, pairwise_brackets(pi_span.basis()), r.tol);
  std::vector<ComplexMatrix> all = pi_span.basis();
  all.insert(all.end(), out.brackets.basis().begin(), out.brackets.basis().end());
  out.lie_pi = lie_closure(all, r.tol);

  if (out.lie_pi.dim() != out.pi_dim + out.brackets.dim())
    throw DecompositionFailure("dim Lie_pi = " + std::to_string(out.lie_pi.dim()) + " but dim pi(A) + dim [pi,pi] = " +
                               std::to_string(out.pi_dim + out.brackets.dim()));
  const RealSubspace bracket_span = scaled_span(n, n, pairwise_brackets(pi_span.basis()), r.tol);
  if (bracket_span.dim() != out.brackets.dim()) throw DecompositionFailure("[pi(A), pi(A)] is not a Lie subalgebra");
  for (const auto& x : pi_span.basis())
    for (const auto& t : out.brackets.basis()) {
      const ComplexMatrix y = commutator(x, t);
      if (pi_span.distance(y) > r.tol * std::max(1.0, y.norm()))
        throw DecompositionFailure("[pi(A), [pi(A), pi(A)]] leaves pi(A)");
    }
  return out;
}

AxiomReport gauge_properties(const MatrixLieAlgebra& g, const BiRepresentation& r) {
  double herm = 0.0, tr = 0.0, jres = 0.0, chires = 0.0;
  for (const auto& x : g.basis()) {
    herm = std::max(herm, antihermitian_residual(x) / x.norm());
    tr = std::max(tr, std::abs(trace(x)));
    jres = std::max(jres, r.J.commutation_residual(x) / x.norm());
    chires = std::max(chires, commutator(r.chi, x).norm() / x.norm());
  }
  AxiomReport rep;
  rep.add("anti_hermitian", herm <= r.tol, herm);
  rep.add("traceless", tr <= r.tol, tr);
  rep.add("commutes_J", jres <= r.tol, jres);
  rep.add("commutes_chi", chires <= r.tol, chires);
  return rep;
}

MatrixLieAlgebra gauge_algebra(const BiRepresentation& r) {
  const auto s = symmetrized(r);
  const MatrixLieAlgebra g = closure_of(r.hilbert_dim(), pairwise_brackets(s), r.tol);
  const AxiomReport props = gauge_properties(g, r);
  for (const auto& e : props.entries)
    if (!e.pass) throw GaugePropertyViolation(e.axiom + " residual " + std::to_string(e.residual));
  return g;
}

DerivationOperator ad_star(const ComplexMatrix& a, const BiRepresentation& r) {
  const PiCoordinates coords(r);
  const ComplexMatrix ad = dagger(a);
  return restrict_to_pi(r, coords, [&](const ComplexMatrix& x) { return a * x + x * ad; }, true);
}

DerivationOperator left_mult(const ComplexMatrix& x, const BiRepresentation& r) {
  const PiCoordinates coords(r);
  return restrict_to_pi(r, coords, [&](const ComplexMatrix& y) { return jordan_circ(x, y); }, true);
}

std::size_t kernel_ad(const BiRepresentation& r, const std::vector<ComplexMatrix>& extra_generators) {
  const RealSubspace pi_span = real_span(r.pi, r.tol);
  std::vector<ScaledGenerator> gens = pairwise_brackets(pi_span.basis());
  for (const auto& x : extra_generators) gens.push_back({x, x.norm()});
  const RealSubspace l = scaled_span(r.hilbert_dim(), r.hilbert_dim(), gens, r.tol);
  const std::size_t d = r.pi.size();
  Eigen::MatrixXd a(d * d, l.dim());
  const PiCoordinates coords(r);
  for (std::size_t k = 0; k < l.dim(); ++k) {
    const ComplexMatrix& g = l[k];
    const ComplexMatrix gd = dagger(g);
    const DerivationOperator op = restrict_to_pi(r, coords, [&](const ComplexMatrix& x) { return g * x + x * gd; }, true);
    for (std::size_t i = 0; i < d * d; ++i) a(i, k) = op.m[i];
  }
  return nullity(a, r.tol);
}

bool is_perfect(const MatrixLieAlgebra& g) {
  if (g.dim() == 0) return false;
  return scaled_span(g.span.rows(), g.span.cols(), pairwise_brackets(g.basis()), g.span.tol()).dim() == g.dim();
}

LieClassification classify(const MatrixLieAlgebra& g, std::uint64_t seed) {
  LieClassification c;
  c.dim = g.dim();
  const double tol = g.span.tol();
  for (const auto& x : g.basis()) c.traceless = c.traceless && std::abs(trace(x)) <= tol;
  if (c.dim == 0) return c;
  const std::size_t d = c.dim;

  std::vector<Eigen::MatrixXd> ad(d, Eigen::MatrixXd::Zero(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto coeff = g.span.coordinates(commutator(g.basis()[i], g.basis()[j]));
      for (std::size_t k = 0; k < d; ++k) ad[i](k, j) = coeff[k];
    }

  Eigen::MatrixXd stacked(d * d, d);
  for (std::size_t i = 0; i < d; ++i) stacked.col(i) = Eigen::Map<const Eigen::VectorXd>(ad[i].data(), d * d);
  c.center_dim = nullity(stacked, tol);
  c.derived_dim = scaled_span(g.span.rows(), g.span.cols(), pairwise_brackets(g.basis()), tol).dim();
  c.perfect = c.derived_dim == c.dim;

  // Simple ideals: a root vector of a generic element lies in one simple
  // ideal and generates it.
  Eigen::MatrixXd z_basis;
  {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
    z_basis = svd.matrixV().rightCols(static_cast<Eigen::Index>(c.center_dim));
  }
  for (std::size_t k = 0; k < c.center_dim; ++k) c.ideal_dims.push_back(1);

  auto orthonormalize = [&](std::vector<Eigen::VectorXd>& basis, Eigen::VectorXd v) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) v -= b.dot(v) * b;
    const double n = v.norm();
    if (n <= 1e-8) return false;
    basis.push_back(v / n);
    return true;
  };

  std::vector<Eigen::VectorXd> taken;
  for (Eigen::Index k = 0; k < z_basis.cols(); ++k) orthonormalize(taken, z_basis.col(k));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  while (taken.size() < d) {
    std::vector<Eigen::VectorXd> rest = taken;
    for (std::size_t k = 0; k < d; ++k) orthonormalize(rest, Eigen::VectorXd::Unit(d, k));
    const std::size_t s = d - taken.size();
    Eigen::MatrixXd q(d, s);
    for (std::size_t k = 0; k < s; ++k) q.col(k) = rest[taken.size() + k];

    Eigen::VectorXd r(s);
    for (std::size_t k = 0; k < s; ++k) r(k) = nd(rng);
    const Eigen::VectorXd x = q * r;
    Eigen::MatrixXd adx = Eigen::MatrixXd::Zero(d, d);
    for (std::size_t i = 0; i < d; ++i) adx += x(i) * ad[i];
    const Eigen::MatrixXd b = q.transpose() * adx * adx * q;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (b + b.transpose()));
    if (es.eigenvalues()(0) > -1e-10) {
      for (std::size_t k = 0; k < s; ++k) c.ideal_dims.push_back(1);
      break;
    }
    std::vector<Eigen::VectorXd> ideal;
    orthonormalize(ideal, q * es.eigenvectors().col(0));
    for (std::size_t head = 0; head < ideal.size(); ++head)
      for (std::size_t i = 0; i < d; ++i) orthonormalize(ideal, ad[i] * ideal[head]);
    c.ideal_dims.push_back(ideal.size());
    for (const auto& v : ideal) orthonormalize(taken, v);
  }
  std::sort(c.ideal_dims.begin(), c.ideal_dims.end());
  return c;
}

nlohmann::ordered_json to_json(const LieClassification& c) {
  nlohmann::ordered_json j;
  j["dim"] = c.dim;
  j["center_dim"] = c.center_dim;
  j["derived_dim"] = c.derived_dim;
  j["perfect"] = c.perfect;
  j["traceless"] = c.traceless;
  j["ideal_dims"] = c.ideal_dims;
  return j;
}

}  // namespace jt
