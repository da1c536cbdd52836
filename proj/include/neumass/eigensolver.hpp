#pragma once

#include <Eigen/Dense>

#include "neumass/assembly.hpp"

namespace neumass {

struct EigenPair {
  double lambda = 0.0;
  double h = 0.0;  // lambda^{-1/2}
  Eigen::VectorXd coefficients;  // over free dofs, M-normalized
  int index = 0;   // ordinal in the computed spectrum
};

// The `count` smallest eigenpairs of K x = lambda M x by blocked inverse
// iteration with Rayleigh-Ritz extraction. Deterministic: fixed seed, and
// signs fixed so the largest-magnitude coefficient is positive.
std::vector<EigenPair> solve_lowest_eigenpairs(const SpMat& K, const SpMat& M,
                                               int count, double tol = 1e-9);

// Rescale to unit discrete L2 norm and apply the sign convention.
EigenPair normalize(const EigenPair& e, const SpMat& M);

}  // namespace neumass
