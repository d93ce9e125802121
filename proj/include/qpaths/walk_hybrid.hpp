// walk_hybrid.hpp — the hybrid walk construction: hop channel W = S∘(I⊗C),
// n-hop evolution, the numerical equivalence check against the quantum
// switch, and the vacuum-amplitude cross-term predicate.

#pragma once

#include "qpaths/supermaps.hpp"

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace qpaths {

// 2x2 unitary acting on the control qubit each hop; the quantum coin toss.
class CoinOperator {
 public:
  explicit CoinOperator(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != 2 || m_.cols() != 2)
      throw ValidationError("CoinOperator: matrix must be 2x2");
    if (!is_unitary(m_, tol::unitary))
      throw ValidationError("CoinOperator: matrix is not unitary");
  }

  static CoinOperator identity_coin() { return CoinOperator(identity(2)); }
  static CoinOperator pauli_x_coin() { return CoinOperator(pauli_x()); }
  static CoinOperator hadamard_coin() { return CoinOperator(hadamard()); }

  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

struct EquivalenceReport {
  double distance = 0.0;
  double tolerance = tol::equivalence;
  bool equivalent = false;
  int hop_count = 2;
};

// Amplitude-side check on the off-diagonal control terms: a tuple (s, j, l, m)
// with s != l or j != m violates the condition when |a_s b_j a_l b_m| exceeds
// tolerance (a = E's amplitudes, b = D's).
struct CrossTermReport {
  bool holds = true;
  std::vector<std::array<std::size_t, 4>> violating_tuples;
};

// One walk step: coin on the control, then the superposition map.
// Kraus list {S_ij * (I ⊗ C)}.
inline KrausChannel hop_channel(const KrausChannel& superposition, const CoinOperator& coin) {
  if (superposition.dim() % 2 != 0)
    throw ValidationError("hop_channel: superposition map must act on carrier_dim * 2");
  const Matrix ic = tensor(identity(superposition.dim() / 2), coin.matrix());
  std::vector<Matrix> ks;
  ks.reserve(superposition.kraus_count());
  for (const Matrix& s : superposition.kraus()) ks.push_back(s * ic);
  return KrausChannel(std::move(ks));
}

// Apply `w` hops times to carrier ⊗ control.
inline JointState evolve(const KrausChannel& w, int hops, const DensityMatrix& carrier,
                         const DensityMatrix& control) {
  if (hops < 0) throw ValidationError("evolve: hops must be >= 0");
  if (control.dim() != 2) throw ValidationError("evolve: control must be a qubit");
  if (w.dim() != carrier.dim() * 2)
    throw ValidationError("evolve: map does not act on carrier_dim * 2");
  DensityMatrix state(tensor(carrier.matrix(), control.matrix()));
  for (int h = 0; h < hops; ++h) state = apply(w, state);
  return JointState(carrier.dim(), std::move(state));
}

// Two hops of the coin-augmented spatial superposition versus the quantum
// switch of the underlying channels, both from control |+><+|, compared by
// trace distance on the joint output.
inline EquivalenceReport switch_equivalence(const VacuumExtendedChannel& e,
                                            const VacuumExtendedChannel& d,
                                            const CoinOperator& coin,
                                            const DensityMatrix& carrier,
                                            double tolerance = tol::equivalence) {
  const DensityMatrix plus = DensityMatrix::pure(ket_plus());
  const KrausChannel w = hop_channel(spatial_superposition(e, d), coin);
  const JointState walked = evolve(w, 2, carrier, plus);
  const JointState switched = apply_joint(quantum_switch(e.channel(), d.channel()), carrier, plus);
  EquivalenceReport report;
  report.distance = trace_distance(walked.joint(), switched.joint());
  report.tolerance = tolerance;
  report.equivalent = report.distance <= tolerance;
  report.hop_count = 2;
  return report;
}

inline CrossTermReport cross_term_condition(const VacuumExtendedChannel& e,
                                            const VacuumExtendedChannel& d) {
  const std::vector<Complex>& a = e.amplitudes();
  const std::vector<Complex>& b = d.amplitudes();
  CrossTermReport report;
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t l = 0; l < a.size(); ++l)
        for (std::size_t m = 0; m < b.size(); ++m) {
          if (s == l && j == m) continue;
          const double modulus =
              std::abs(a[s]) * std::abs(b[j]) * std::abs(a[l]) * std::abs(b[m]);
          if (modulus > tol::cross_term) report.violating_tuples.push_back({s, j, l, m});
        }
  report.holds = report.violating_tuples.empty();
  return report;
}

}  // namespace qpaths
