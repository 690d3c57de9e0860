#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "jt/matrix.hpp"

namespace jt {

struct LinearAction {
  std::function<ComplexMatrix(const ComplexMatrix&)> apply;
  // upper bound on the operator norm, used to scale the zero cutoff
  double norm_bound = 1.0;
};

struct ClosureStats {
  std::size_t passes = 0;
  bool complete = true;
};

// Smallest subspace containing s and stable under every action.
ClosureStats close_under_actions(RealSubspace& s, const std::vector<LinearAction>& actions, std::size_t max_passes);

// Smallest subspace containing s and closed under the commutator.
ClosureStats close_under_brackets(RealSubspace& s, std::size_t max_passes);

struct ScaledGenerator {
  ComplexMatrix m;
  // magnitude m would have without cancellation; m is dropped below tol·scale
  double scale = 1.0;
};

RealSubspace scaled_span(std::size_t rows, std::size_t cols, const std::vector<ScaledGenerator>& gens,
                         double tol = kDefaultTol);
// [x_i, x_j] for i < j, each scaled by 2‖x_i‖‖x_j‖.
std::vector<ScaledGenerator> pairwise_brackets(const std::vector<ComplexMatrix>& xs);

// Actions X ↦ a∘X and X ↦ [g, X] for each operator in the list.
std::vector<LinearAction> jordan_actions(const std::vector<ComplexMatrix>& ops);
std::vector<LinearAction> adjoint_actions(const std::vector<ComplexMatrix>& ops);

}  // namespace jt
