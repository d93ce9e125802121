// dtqw.hpp — 1-D discrete-time quantum walk: coin toss on an internal qubit
// followed by a coin-conditioned shift on a finite centered lattice.
//
// A lattice sized 2*steps + 1 emulates the infinite line exactly: n steps
// from the origin cannot reach the boundary. No wraparound; a step whose
// support would leave the lattice throws instead.

#pragma once

#include "qpaths/walk_hybrid.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace qpaths {

// Pure walker state over (position, coin) pairs, position in [-n_max, n_max].
// Flat index: (position + n_max) * 2 + coin. Norm must be 1 within 1e-10.
class WalkState {
 public:
  WalkState(int n_max, Vector amplitudes) : n_max_(n_max), amps_(std::move(amplitudes)) {
    if (n_max_ < 0) throw ValidationError("WalkState: n_max must be >= 0");
    if (amps_.size() != static_cast<Index>(2 * n_max_ + 1) * 2)
      throw ValidationError("WalkState: amplitude vector must have (2*n_max + 1) * 2 entries");
    if (!amps_.allFinite()) throw ValidationError("WalkState: amplitudes must be finite");
    if (std::abs(amps_.squaredNorm() - 1.0) > tol::amplitude_norm)
      throw ValidationError("WalkState: amplitudes must have unit norm");
  }

  // Walker at position 0 with the given (normalized) coin state.
  static WalkState at_origin(int n_max, const Vector& coin_state) {
    if (coin_state.size() != 2) throw ValidationError("WalkState: coin state must be a 2-vector");
    const double norm = coin_state.norm();
    if (norm < 1e-12) throw ValidationError("WalkState: coin state must be nonzero");
    Vector amps = Vector::Zero(static_cast<Index>(2 * n_max + 1) * 2);
    amps[static_cast<Index>(n_max) * 2 + 0] = coin_state[0] / norm;
    amps[static_cast<Index>(n_max) * 2 + 1] = coin_state[1] / norm;
    return WalkState(n_max, std::move(amps));
  }

  int n_max() const { return n_max_; }
  const Vector& amplitudes() const { return amps_; }

  Complex amplitude(int position, int coin) const {
    if (position < -n_max_ || position > n_max_)
      throw ValidationError("WalkState: position outside the lattice");
    if (coin != 0 && coin != 1) throw ValidationError("WalkState: coin index must be 0 or 1");
    return amps_[static_cast<Index>(position + n_max_) * 2 + coin];
  }

 private:
  int n_max_;
  Vector amps_;
};

// Symmetric coin start (|0> + i|1>)/sqrt(2).
inline Vector balanced_coin_state() {
  Vector v(2);
  v << Complex(1.0 / std::numbers::sqrt2, 0.0), Complex(0.0, 1.0 / std::numbers::sqrt2);
  return v;
}

// One step: coin on every position's coin pair, then coin-0 amplitude shifts
// +1 and coin-1 shifts -1. Throws if support sits on the boundary.
inline WalkState walk_step(const WalkState& s, const CoinOperator& coin) {
  const int n = s.n_max();
  for (int c = 0; c < 2; ++c) {
    const bool support_low = n > 0 && std::abs(s.amplitude(-n, c)) > tol::zero_probability;
    const bool support_high = std::abs(s.amplitude(n, c)) > tol::zero_probability;
    if (support_low || support_high)
      throw ValidationError("walk_step: support would leave the lattice");
  }
  const Matrix& cm = coin.matrix();
  Vector out = Vector::Zero(s.amplitudes().size());
  for (int x = -n + 1; x <= n - 1; ++x) {
    const Complex tossed0 = cm(0, 0) * s.amplitude(x, 0) + cm(0, 1) * s.amplitude(x, 1);
    const Complex tossed1 = cm(1, 0) * s.amplitude(x, 0) + cm(1, 1) * s.amplitude(x, 1);
    out[static_cast<Index>(x + 1 + n) * 2 + 0] += tossed0;
    out[static_cast<Index>(x - 1 + n) * 2 + 1] += tossed1;
  }
  return WalkState(n, std::move(out));
}

// Position probabilities over the full lattice, coin traced out.
inline std::map<int, double> position_distribution(const WalkState& s) {
  std::map<int, double> dist;
  for (int x = -s.n_max(); x <= s.n_max(); ++x)
    dist[x] = std::norm(s.amplitude(x, 0)) + std::norm(s.amplitude(x, 1));
  return dist;
}

// Walk `steps` times from the origin on a lattice sized 2*steps + 1 and
// return the distribution over the reachable positions (x with the parity of
// `steps`, |x| <= steps).
inline std::map<int, double> run_walk(int steps, const Vector& initial_coin,
                                      const CoinOperator& coin) {
  if (steps < 0) throw ValidationError("run_walk: steps must be >= 0");
  WalkState s = WalkState::at_origin(steps, initial_coin);
  for (int k = 0; k < steps; ++k) s = walk_step(s, coin);
  std::map<int, double> dist;
  for (int x = -steps; x <= steps; x += 2)
    dist[x] = std::norm(s.amplitude(x, 0)) + std::norm(s.amplitude(x, 1));
  return dist;
}

// Expected position sum(x * P(x)); requires a genuine distribution.
inline double mean_displacement(const std::map<int, double>& dist) {
  double total = 0.0;
  double mean = 0.0;
  for (const auto& [x, p] : dist) {
    if (p < -tol::zero_probability)
      throw ValidationError("mean_displacement: negative probability");
    total += p;
    mean += x * p;
  }
  if (std::abs(total - 1.0) > tol::amplitude_norm)
    throw ValidationError("mean_displacement: probabilities must sum to 1");
  return mean;
}

}  // namespace qpaths
