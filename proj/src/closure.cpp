#include "jt/closure.hpp"

#include <algorithm>

namespace jt {

ClosureStats close_under_actions(RealSubspace& s, const std::vector<LinearAction>& actions, std::size_t max_passes) {
  ClosureStats stats;
  std::size_t begin = 0;
  while (begin < s.dim()) {
    if (stats.passes == max_passes) {
      stats.complete = false;
      return stats;
    }
    const std::size_t end = s.dim();
    for (std::size_t i = begin; i < end; ++i) {
      const ComplexMatrix x = s[i];
      for (const auto& act : actions) s.insert(act.apply(x), act.norm_bound);
    }
    begin = end;
    ++stats.passes;
  }
  return stats;
}

ClosureStats close_under_brackets(RealSubspace& s, std::size_t max_passes) {
  ClosureStats stats;
  std::size_t begin = 0;
  while (begin < s.dim()) {
    if (stats.passes == max_passes) {
      stats.complete = false;
      return stats;
    }
    const std::size_t end = s.dim();
    for (std::size_t i = begin; i < end; ++i) {
      const ComplexMatrix x = s[i];
      for (std::size_t j = 0; j < i; ++j) s.insert(commutator(x, s[j]), 2.0);
    }
    begin = end;
    ++stats.passes;
  }
  return stats;
}

RealSubspace scaled_span(std::size_t rows, std::size_t cols, const std::vector<ScaledGenerator>& gens, double tol) {
  RealSubspace s(rows, cols, tol);
  for (const auto& g : gens) s.insert(g.m, g.scale);
  return s;
}

std::vector<ScaledGenerator> pairwise_brackets(const std::vector<ComplexMatrix>& xs) {
  std::vector<ScaledGenerator> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      out.push_back({commutator(xs[i], xs[j]), 2.0 * xs[i].norm() * xs[j].norm()});
  return out;
}

std::vector<LinearAction> jordan_actions(const std::vector<ComplexMatrix>& ops) {
  std::vector<LinearAction> out;
  for (const auto& a : ops) out.push_back({[a](const ComplexMatrix& x) { return jordan_circ(a, x); }, a.norm()});
  return out;
}

std::vector<LinearAction> adjoint_actions(const std::vector<ComplexMatrix>& ops) {
  std::vector<LinearAction> out;
  for (const auto& g : ops) out.push_back({[g](const ComplexMatrix& x) { return commutator(g, x); }, 2.0 * g.norm()});
  return out;
}

}  // namespace jt
