#include "jt/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

#include "eigen_bridge.hpp"

namespace jt {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

SummandTag SummandTag::parse(const std::string& text) {
  const std::string t = trim(text);
  static const std::regex herm_re(R"(H\(\s*(\d+)\s*,\s*([RCHO])\s*\))");
  static const std::regex spin_re(R"(JSpin\(\s*(\d+)\s*\))");
  std::smatch m;
  if (t == "R") return reals();
  if (std::regex_match(t, m, herm_re)) {
    const int n = std::stoi(m[1]);
    if (n < 1) throw std::invalid_argument("summand size must be positive: " + t);
    const char f = m[2].str()[0];
    if (f == 'O') throw UnsupportedSummand("exceptional summand unsupported: " + t);
    return herm(n, f == 'R' ? Field::Real : f == 'C' ? Field::Complex : Field::Quaternion);
  }
  if (std::regex_match(t, m, spin_re)) {
    const int n = std::stoi(m[1]);
    if (n < 1) throw std::invalid_argument("summand size must be positive: " + t);
    return jspin(n);
  }
  throw std::invalid_argument("unknown summand '" + t + "' (expected H(n,R|C|H), JSpin(n) or R)");
}

std::string SummandTag::to_string() const {
  switch (kind) {
    case Kind::Reals:
      return "R";
    case Kind::JSpin:
      return "JSpin(" + std::to_string(n) + ")";
    case Kind::Herm: {
      const char f = field == Field::Real ? 'R' : field == Field::Complex ? 'C' : 'H';
      return "H(" + std::to_string(n) + "," + f + ")";
    }
  }
  return "?";
}

std::size_t SummandTag::real_dim() const {
  const std::size_t m = static_cast<std::size_t>(n);
  switch (kind) {
    case Kind::Reals:
      return 1;
    case Kind::JSpin:
      return m + 1;
    case Kind::Herm:
      if (field == Field::Real) return m * (m + 1) / 2;
      if (field == Field::Complex) return m * m;
      return m * (2 * m - 1);
  }
  return 0;
}

std::vector<SummandTag> parse_summands(const std::string& text) {
  // split on '+' or '⊕' at nesting depth zero
  std::vector<SummandTag> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    if (!trim(cur).empty()) out.push_back(SummandTag::parse(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == ',')) {
      flush();
      continue;
    }
    if (depth == 0 && text.compare(i, 3, "⊕") == 0) {
      flush();
      i += 2;
      continue;
    }
    cur += c;
  }
  flush();
  return out;
}

FiniteJordanAlgebra::FiniteJordanAlgebra(std::vector<ComplexMatrix> basis, std::vector<SummandTag> summands,
                                         ComplexMatrix unit, double tol)
    : basis_(std::move(basis)), summands_(std::move(summands)), unit_(std::move(unit)) {
  require_square(unit_, "FiniteJordanAlgebra unit");
  for (const auto& b : basis_) {
    require_same_shape(b, unit_, "FiniteJordanAlgebra basis");
    if (hermitian_residual(b) > tol * std::max(1.0, b.norm()))
      throw NotJordanClosed("basis element is not Hermitian");
  }
  const RealSubspace span = real_span(basis_, tol);
  if (span.dim() != basis_.size()) throw NotJordanClosed("basis is not linearly independent over R");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if ((jordan_circ(unit_, basis_[i]) - basis_[i]).norm() > tol * std::max(1.0, basis_[i].norm()))
      throw NotJordanClosed("unit does not act as identity");
    for (std::size_t j = i; j < basis_.size(); ++j) {
      const ComplexMatrix p = jordan_circ(basis_[i], basis_[j]);
      if (span.distance(p) > tol * std::max(1.0, p.norm()))
        throw NotJordanClosed("span is not closed under the Jordan product");
    }
  }
  std::size_t expected = 0;
  for (const auto& s : summands_) expected += s.real_dim();
  if (!summands_.empty() && expected != basis_.size())
    throw NotJordanClosed("summand dimensions do not match the basis size");

  const std::size_t d = basis_.size();
  Eigen::MatrixXd g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = re_inner(basis_[i], basis_[j]);
  const Eigen::MatrixXd ginv = d == 0 ? Eigen::MatrixXd() : Eigen::MatrixXd(g.ldlt().solve(Eigen::MatrixXd::Identity(d, d)));
  gram_inverse_.assign(ginv.data(), ginv.data() + ginv.size());
}

std::string FiniteJordanAlgebra::summary() const {
  std::string s;
  for (std::size_t i = 0; i < summands_.size(); ++i) s += (i ? "+" : "") + summands_[i].to_string();
  return s;
}

ComplexMatrix FiniteJordanAlgebra::element(const std::vector<double>& coeffs) const {
  if (coeffs.size() != basis_.size()) throw DimensionMismatch("coefficient count vs algebra dimension");
  ComplexMatrix x(matrix_size(), matrix_size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) x.add_scaled(coeffs[i], basis_[i]);
  return x;
}

std::vector<double> FiniteJordanAlgebra::coordinates(const ComplexMatrix& x) const {
  const std::size_t d = basis_.size();
  std::vector<double> rhs(d), out(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) rhs[i] = re_inner(basis_[i], x);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out[i] += gram_inverse_[i + j * d] * rhs[j];
  return out;
}

ComplexMatrix FiniteJordanAlgebra::random_element(std::mt19937_64& rng) const {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<double> c(dim());
  for (auto& x : c) x = nd(rng);
  return element(c);
}

std::vector<std::size_t> FiniteJordanAlgebra::summand_offsets() const {
  std::vector<std::size_t> off;
  std::size_t o = 0;
  for (const auto& s : summands_) {
    off.push_back(o);
    o += s.real_dim();
  }
  return off;
}

double FiniteJordanAlgebra::closure_residual() const {
  const RealSubspace span = real_span(basis_);
  double worst = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i; j < basis_.size(); ++j)
      worst = std::max(worst, span.distance(jordan_circ(basis_[i], basis_[j])));
  return worst;
}

std::vector<ComplexMatrix> hermitian_basis(std::size_t n) {
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(ComplexMatrix::unit(n, i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ComplexMatrix s = ComplexMatrix::unit(n, i, j);
      s(j, i) = 1.0;
      out.push_back(s);
      ComplexMatrix a = ComplexMatrix::unit(n, i, j, cplx(0, -1));
      a(j, i) = cplx(0, 1);
      out.push_back(a);
    }
  return out;
}

FiniteJordanAlgebra herm_jordan(int n, Field field) {
  if (n < 1) throw std::invalid_argument("herm_jordan: n must be positive");
  const std::size_t m = static_cast<std::size_t>(n);
  std::vector<ComplexMatrix> basis;
  if (field == Field::Quaternion) {
    const std::size_t s = 2 * m;
    const Quaternion units[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (std::size_t i = 0; i < m; ++i) {
      ComplexMatrix e(s, s);
      e.set_block(2 * i, 2 * i, ComplexMatrix::identity(2));
      basis.push_back(e);
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (const auto& u : units) {
          ComplexMatrix e(s, s);
          e.set_block(2 * i, 2 * j, embed(u));
          e.set_block(2 * j, 2 * i, embed(u.conjugate()));
          basis.push_back(e);
        }
    return FiniteJordanAlgebra(std::move(basis), {SummandTag::herm(n, field)}, ComplexMatrix::identity(s));
  }
  for (std::size_t i = 0; i < m; ++i) basis.push_back(ComplexMatrix::unit(m, i, i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      ComplexMatrix sym = ComplexMatrix::unit(m, i, j);
      sym(j, i) = 1.0;
      basis.push_back(sym);
      if (field == Field::Complex) {
        ComplexMatrix a = ComplexMatrix::unit(m, i, j, cplx(0, -1));
        a(j, i) = cplx(0, 1);
        basis.push_back(a);
      }
    }
  return FiniteJordanAlgebra(std::move(basis), {SummandTag::herm(n, field)}, ComplexMatrix::identity(m));
}

std::vector<ComplexMatrix> gamma_tower(int n) {
  if (n < 1) throw std::invalid_argument("gamma_tower: n must be positive");
  const int pairs = n / 2;
  const int factors = std::max(1, pairs);
  auto chain = [&](int k, const ComplexMatrix& middle) {
    // σz^{⊗k} ⊗ middle ⊗ 1^{⊗(factors-k-1)}
    ComplexMatrix m = ComplexMatrix::identity(1);
    for (int f = 0; f < factors; ++f) {
      if (f < k)
        m = tensor(m, pauli::z());
      else if (f == k)
        m = tensor(m, middle);
      else
        m = tensor(m, ComplexMatrix::identity(2));
    }
    return m;
  };
  std::vector<ComplexMatrix> out;
  for (int k = 0; k < pairs; ++k) {
    out.push_back(chain(k, pauli::x()));
    out.push_back(chain(k, pauli::y()));
  }
  if (n % 2 == 1) {
    if (n == 1) {
      out.push_back(pauli::x());
    } else {
      ComplexMatrix m = ComplexMatrix::identity(1);
      for (int f = 0; f < factors; ++f) m = tensor(m, pauli::z());
      out.push_back(m);
    }
  }
  return out;
}

FiniteJordanAlgebra jspin(int n) {
  std::vector<ComplexMatrix> gens = gamma_tower(n);
  const std::size_t s = gens.front().rows();
  std::vector<ComplexMatrix> basis{ComplexMatrix::identity(s)};
  basis.insert(basis.end(), gens.begin(), gens.end());
  return FiniteJordanAlgebra(std::move(basis), {SummandTag::jspin(n)}, ComplexMatrix::identity(s));
}

FiniteJordanAlgebra jspin2_offdiag() {
  return FiniteJordanAlgebra({ComplexMatrix::identity(2), pauli::x(), pauli::y()}, {SummandTag::jspin(2)},
                             ComplexMatrix::identity(2));
}

FiniteJordanAlgebra reals() {
  return FiniteJordanAlgebra({ComplexMatrix::identity(1)}, {SummandTag::reals()}, ComplexMatrix::identity(1));
}

FiniteJordanAlgebra direct_sum(const std::vector<FiniteJordanAlgebra>& as) {
  if (as.empty()) throw std::invalid_argument("direct_sum: empty list");
  std::size_t total = 0;
  for (const auto& a : as) total += a.matrix_size();
  std::vector<ComplexMatrix> basis;
  std::vector<SummandTag> tags;
  std::vector<ComplexMatrix> units;
  std::size_t offset = 0;
  for (const auto& a : as) {
    for (const auto& b : a.basis()) {
      ComplexMatrix e(total, total);
      e.set_block(offset, offset, b);
      basis.push_back(std::move(e));
    }
    tags.insert(tags.end(), a.summands().begin(), a.summands().end());
    units.push_back(a.unit());
    offset += a.matrix_size();
  }
  return FiniteJordanAlgebra(std::move(basis), std::move(tags), dirsum(units));
}

FiniteJordanAlgebra algebra_from_tag(const SummandTag& tag) {
  switch (tag.kind) {
    case SummandTag::Kind::Reals:
      return reals();
    case SummandTag::Kind::JSpin:
      return jspin(tag.n);
    case SummandTag::Kind::Herm:
      return herm_jordan(tag.n, tag.field);
  }
  throw std::logic_error("unreachable");
}

FiniteJordanAlgebra algebra_from_tags(const std::vector<SummandTag>& tags) {
  std::vector<FiniteJordanAlgebra> parts;
  for (const auto& t : tags) parts.push_back(algebra_from_tag(t));
  return parts.size() == 1 ? parts.front() : direct_sum(parts);
}

CheckResult check_jordan_identity(const FiniteJordanAlgebra& a, int trials, std::uint64_t seed, double tol) {
  CheckResult r;
  auto probe = [&](const ComplexMatrix& x, const ComplexMatrix& y) {
    const ComplexMatrix x2 = jordan_circ(x, x);
    const ComplexMatrix lhs = jordan_circ(jordan_circ(x2, y), x);
    const ComplexMatrix rhs = jordan_circ(x2, jordan_circ(y, x));
    const double scale = std::max(1.0, std::pow(x.norm(), 3) * y.norm());
    r.residual = std::max(r.residual, (lhs - rhs).norm() / scale);
  };
  for (const auto& x : a.basis())
    for (const auto& y : a.basis()) probe(x, y);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const ComplexMatrix x = a.random_element(rng);
    const ComplexMatrix y = a.random_element(rng);
    probe(x, y);
  }
  r.pass = r.residual <= tol;
  return r;
}

CheckResult check_formally_real(const FiniteJordanAlgebra& a, int trials, std::uint64_t seed, double tol) {
  CheckResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count(1, 4);
  for (int t = 0; t < trials; ++t) {
    const int k = count(rng);
    ComplexMatrix sum(a.matrix_size(), a.matrix_size());
    double norms = 0.0;
    for (int i = 0; i < k; ++i) {
      const ComplexMatrix x = a.random_element(rng);
      sum += x * x;
      norms += x.norm() * x.norm();
    }
    const double tr_err = std::abs(trace(sum) - cplx(norms, 0.0)) / std::max(1.0, norms);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(detail::to_eigen(sum), Eigen::EigenvaluesOnly);
    const double neg = std::max(0.0, -es.eigenvalues().minCoeff()) / std::max(1.0, norms);
    r.residual = std::max({r.residual, tr_err, neg, hermitian_residual(sum) / std::max(1.0, norms)});
  }
  r.pass = r.residual <= tol;
  return r;
}

CheckResult check_power_associative(const FiniteJordanAlgebra& a, int trials, std::uint64_t seed, double tol) {
  CheckResult r;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const ComplexMatrix x = a.random_element(rng);
    const ComplexMatrix x2 = jordan_circ(x, x);
    const ComplexMatrix lhs = jordan_circ(jordan_circ(x2, x), x);
    const ComplexMatrix rhs = jordan_circ(x2, x2);
    r.residual = std::max(r.residual, (lhs - rhs).norm() / std::max(1.0, std::pow(x.norm(), 4)));
  }
  r.pass = r.residual <= tol;
  return r;
}

}  // namespace jt
