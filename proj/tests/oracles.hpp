// oracles.hpp — independent reference implementations used only by tests.
// Deliberately naive (explicit loops, path enumeration, SVD norms) so a bug
// in the library cannot hide in a shared code path.

#pragma once

#include "qpaths/numerics.hpp"

#include <Eigen/SVD>

#include <map>
#include <utility>
#include <vector>

namespace oracles {

using qpaths::Complex;
using qpaths::Index;
using qpaths::Matrix;
using qpaths::Vector;

inline Matrix naive_kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index r1 = 0; r1 < a.rows(); ++r1)
    for (Index c1 = 0; c1 < a.cols(); ++c1)
      for (Index r2 = 0; r2 < b.rows(); ++r2)
        for (Index c2 = 0; c2 < b.cols(); ++c2)
          out(r1 * b.rows() + r2, c1 * b.cols() + c2) = a(r1, c1) * b(r2, c2);
  return out;
}

inline Matrix naive_apply(const std::vector<Matrix>& kraus, const Matrix& rho) {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const Matrix& k : kraus) out += k * rho * k.adjoint();
  return out;
}

inline Matrix naive_trace_out_second(const Matrix& joint, Index dim_a, Index dim_b) {
  Matrix out = Matrix::Zero(dim_a, dim_a);
  for (Index i = 0; i < dim_a; ++i)
    for (Index j = 0; j < dim_a; ++j)
      for (Index k = 0; k < dim_b; ++k) out(i, j) += joint(i * dim_b + k, j * dim_b + k);
  return out;
}

inline Matrix naive_trace_out_first(const Matrix& joint, Index dim_a, Index dim_b) {
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (Index i = 0; i < dim_b; ++i)
    for (Index j = 0; j < dim_b; ++j)
      for (Index k = 0; k < dim_a; ++k) out(i, j) += joint(k * dim_b + i, k * dim_b + j);
  return out;
}

// Half the sum of singular values of the difference (nuclear-norm route,
// independent of the eigenvalue route).
inline double svd_trace_distance(const Matrix& a, const Matrix& b) {
  Eigen::JacobiSVD<Matrix> svd(a - b);
  return 0.5 * svd.singularValues().sum();
}

// Brute-force walk by enumerating all 2^steps coin histories. A history's
// amplitude is the product of coin-matrix elements along it; coin outcome 0
// moves +1, outcome 1 moves -1.
inline std::map<std::pair<int, int>, Complex> path_sum_amplitudes(int steps, const Vector& start,
                                                                  const Matrix& coin) {
  std::map<std::pair<int, int>, Complex> amps;
  for (int c0 = 0; c0 < 2; ++c0) {
    if (std::abs(start[c0]) == 0.0) continue;
    for (unsigned long history = 0; history < (1UL << steps); ++history) {
      Complex amp = start[c0];
      int coin_state = c0;
      int pos = 0;
      for (int s = 0; s < steps; ++s) {
        const int outcome = static_cast<int>((history >> s) & 1UL);
        amp *= coin(outcome, coin_state);
        pos += outcome == 0 ? 1 : -1;
        coin_state = outcome;
      }
      amps[{pos, coin_state}] += amp;
    }
  }
  return amps;
}

inline std::map<int, double> path_sum_distribution(int steps, const Vector& start,
                                                   const Matrix& coin) {
  std::map<int, double> dist;
  for (const auto& [key, amp] : path_sum_amplitudes(steps, start, coin))
    dist[key.first] += std::norm(amp);
  return dist;
}

}  // namespace oracles
