#include "neumass/eigensolver.hpp"

#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "neumass/errors.hpp"

namespace neumass {

namespace {

void fix_sign(Eigen::VectorXd& v) {
  int imax = 0;
  double amax = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > amax) {
      amax = std::abs(v[i]);
      imax = i;
    }
  }
  if (v[imax] < 0.0) v = -v;
}

}  // namespace

std::vector<EigenPair> solve_lowest_eigenpairs(const SpMat& K, const SpMat& M,
                                               int count, double tol) {
  const int n = static_cast<int>(K.rows());
  if (count < 1 || count > n)
    throw std::invalid_argument("solve_lowest_eigenpairs: bad count");

  Eigen::SimplicialLDLT<SpMat> solver(K);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("solve_lowest_eigenpairs: factorization failed");

  const int block = std::min(n, count + std::max(6, count));
  std::mt19937 rng(0x5eed5eedU);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd X(n, block);
  for (int j = 0; j < block; ++j)
    for (int i = 0; i < n; ++i) X(i, j) = gauss(rng);

  Eigen::VectorXd lambdas;
  const int max_iter = 400;
  double worst = 0.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    Eigen::MatrixXd Y = solver.solve(M * X);
    // Rayleigh-Ritz on span(Y).
    Eigen::MatrixXd A = Y.transpose() * (K * Y).eval();
    Eigen::MatrixXd B = Y.transpose() * (M * Y).eval();
    A = 0.5 * (A + A.transpose()).eval();
    B = 0.5 * (B + B.transpose()).eval();
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(A, B);
    if (es.info() != Eigen::Success)
      throw ConvergenceFailure("solve_lowest_eigenpairs: Rayleigh-Ritz failed");
    X = Y * es.eigenvectors();  // M-orthonormal, eigenvalues ascending
    lambdas = es.eigenvalues();

    worst = 0.0;
    for (int i = 0; i < count; ++i) {
      Eigen::VectorXd r = K * X.col(i) - lambdas[i] * (M * X.col(i));
      double denom = lambdas[i] * (M * X.col(i)).norm();
      worst = std::max(worst, r.norm() / denom);
    }
    if (worst <= tol) break;
    if (iter == max_iter - 1) {
      std::ostringstream msg;
      msg << "solve_lowest_eigenpairs: residual " << worst << " > tol " << tol
          << " after " << max_iter << " iterations (n=" << n
          << ", block=" << block << ")";
      throw ConvergenceFailure(msg.str());
    }
  }

  std::vector<EigenPair> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    EigenPair e;
    e.lambda = lambdas[i];
    e.h = 1.0 / std::sqrt(e.lambda);
    e.coefficients = X.col(i);
    e.index = i;
    fix_sign(e.coefficients);
    out.push_back(std::move(e));
  }
  return out;
}

EigenPair normalize(const EigenPair& e, const SpMat& M) {
  double nrm2 = e.coefficients.dot(M * e.coefficients);
  if (!(nrm2 > 0.0)) throw ZeroVector("normalize: zero coefficient vector");
  EigenPair out = e;
  out.coefficients /= std::sqrt(nrm2);
  fix_sign(out.coefficients);
  return out;
}

}  // namespace neumass
