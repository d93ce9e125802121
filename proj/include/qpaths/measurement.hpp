// measurement.hpp — projective measurement of the control qubit and the
// heralded-correction check: does measuring the control and applying an
// outcome-conditioned unitary recover a target carrier state?

#pragma once

#include "qpaths/supermaps.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qpaths {

// One measurement branch. post_state is the carrier marginal of the
// projected, renormalized state; absent when the branch probability is
// negligible (<= 1e-12) rather than a renormalized 0/0 artifact.
struct MeasurementOutcome {
  std::string label;
  double probability = 0.0;
  std::optional<DensityMatrix> post_state;
};

// Orthonormal measurement basis for the control qubit, with outcome labels.
class ControlBasis {
 public:
  ControlBasis(std::string label_a, Vector a, std::string label_b, Vector b)
      : labels_{std::move(label_a), std::move(label_b)}, vectors_{std::move(a), std::move(b)} {
    for (const Vector& v : vectors_) {
      if (v.size() != 2) throw ValidationError("ControlBasis: basis vectors must be 2-vectors");
      if (std::abs(v.norm() - 1.0) > tol::orthonormal)
        throw ValidationError("ControlBasis: basis vectors must be normalized");
    }
    if (std::abs(vectors_[0].dot(vectors_[1])) > tol::orthonormal)
      throw ValidationError("ControlBasis: basis vectors must be orthogonal");
  }

  static ControlBasis plus_minus() { return ControlBasis("+", ket_plus(), "-", ket_minus()); }
  static ControlBasis computational() { return ControlBasis("0", ket0(), "1", ket1()); }

  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const Vector& vector(int i) const { return vectors_.at(static_cast<std::size_t>(i)); }

 private:
  std::array<std::string, 2> labels_;
  std::array<Vector, 2> vectors_;
};

// Measure the control of a joint state. For each basis vector |b>:
// probability = tr((I ⊗ |b><b|) rho), post state = carrier marginal of the
// projected state divided by that probability.
inline std::vector<MeasurementOutcome> measure_control(const JointState& js,
                                                       const ControlBasis& basis) {
  const Index d = js.carrier_dim();
  std::vector<MeasurementOutcome> outcomes;
  outcomes.reserve(2);
  for (int i = 0; i < 2; ++i) {
    const Matrix proj = tensor(identity(d), projector(basis.vector(i)));
    const Matrix projected = proj * js.joint().matrix() * proj;
    double p = projected.trace().real();
    if (p < -tol::zero_probability)
      throw ValidationError("measure_control: negative outcome probability");
    p = std::min(std::max(p, 0.0), 1.0);
    MeasurementOutcome outcome;
    outcome.label = basis.label(i);
    outcome.probability = p;
    if (p > tol::zero_probability) {
      const Matrix carrier = partial_trace(projected / p, d, 2, Keep::first);
      outcome.post_state = DensityMatrix(carrier);
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

struct CorrectionReport {
  // (outcome label, trace distance to target after correction), for every
  // positive-probability outcome.
  std::vector<std::pair<std::string, double>> distances;
  double worst_case = 0.0;
};

// Apply the label-matched unitary to each positive-probability post state and
// report the trace distance to `target`. A positive-probability outcome with
// no matching correction is an error.
inline CorrectionReport heralded_correction_check(
    const std::vector<MeasurementOutcome>& outcomes, const DensityMatrix& target,
    const std::vector<std::pair<std::string, Matrix>>& corrections) {
  CorrectionReport report;
  for (const MeasurementOutcome& outcome : outcomes) {
    if (!outcome.post_state) continue;
    const Matrix* correction = nullptr;
    for (const auto& [label, u] : corrections)
      if (label == outcome.label) {
        correction = &u;
        break;
      }
    if (correction == nullptr)
      throw ValidationError("heralded_correction_check: no correction for outcome '" +
                            outcome.label + "'");
    if (correction->rows() != target.dim() || !is_unitary(*correction, tol::unitary))
      throw ValidationError("heralded_correction_check: correction for outcome '" +
                            outcome.label + "' is not a carrier-dim unitary");
    const Matrix corrected = (*correction) * outcome.post_state->matrix() * correction->adjoint();
    const double distance = trace_distance(corrected, target.matrix());
    report.distances.emplace_back(outcome.label, distance);
    report.worst_case = std::max(report.worst_case, distance);
  }
  return report;
}

// Convenience search: for qubit carriers, pick for each outcome the first
// Pauli {I, X, Y, Z} whose correction lands within `tolerance` of the target.
// Returns nullopt if any positive-probability outcome has no Pauli fix;
// zero-probability outcomes get the identity.
inline std::optional<std::vector<std::pair<std::string, Matrix>>> search_pauli_corrections(
    const std::vector<MeasurementOutcome>& outcomes, const DensityMatrix& target,
    double tolerance = tol::equivalence) {
  if (target.dim() != 2)
    throw ValidationError("search_pauli_corrections: carrier must be a qubit");
  const std::array<std::pair<std::string, Matrix>, 4> paulis = {
      std::pair<std::string, Matrix>{"I", identity(2)},
      std::pair<std::string, Matrix>{"X", pauli_x()},
      std::pair<std::string, Matrix>{"Y", pauli_y()},
      std::pair<std::string, Matrix>{"Z", pauli_z()}};
  std::vector<std::pair<std::string, Matrix>> corrections;
  for (const MeasurementOutcome& outcome : outcomes) {
    if (!outcome.post_state) {
      corrections.emplace_back(outcome.label, identity(2));
      continue;
    }
    bool found = false;
    for (const auto& [name, p] : paulis) {
      const Matrix corrected = p * outcome.post_state->matrix() * p.adjoint();
      if (trace_distance(corrected, target.matrix()) <= tolerance) {
        corrections.emplace_back(outcome.label, p);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return corrections;
}

// Input-independent variant: each case pairs the outcomes of measuring one
// probe with the probe itself, and the chosen Pauli must correct every case
// at once — the correction a receiver can apply without knowing which state
// was sent. Labels with no positive-probability branch anywhere get the
// identity. Returns nullopt if some label has no Pauli that works for all
// cases.
inline std::optional<std::vector<std::pair<std::string, Matrix>>> search_pauli_corrections(
    const std::vector<std::pair<std::vector<MeasurementOutcome>, DensityMatrix>>& cases,
    double tolerance = tol::equivalence) {
  std::vector<std::string> labels;
  for (const auto& [outcomes, target] : cases) {
    if (target.dim() != 2)
      throw ValidationError("search_pauli_corrections: carrier must be a qubit");
    for (const MeasurementOutcome& outcome : outcomes)
      if (std::find(labels.begin(), labels.end(), outcome.label) == labels.end())
        labels.push_back(outcome.label);
  }
  const std::array<std::pair<std::string, Matrix>, 4> paulis = {
      std::pair<std::string, Matrix>{"I", identity(2)},
      std::pair<std::string, Matrix>{"X", pauli_x()},
      std::pair<std::string, Matrix>{"Y", pauli_y()},
      std::pair<std::string, Matrix>{"Z", pauli_z()}};
  std::vector<std::pair<std::string, Matrix>> corrections;
  for (const std::string& label : labels) {
    bool found = false;
    for (const auto& [name, p] : paulis) {
      bool works = true;
      for (const auto& [outcomes, target] : cases) {
        for (const MeasurementOutcome& outcome : outcomes) {
          if (outcome.label != label || !outcome.post_state) continue;
          const Matrix corrected = p * outcome.post_state->matrix() * p.adjoint();
          if (trace_distance(corrected, target.matrix()) > tolerance) {
            works = false;
            break;
          }
        }
        if (!works) break;
      }
      if (works) {
        corrections.emplace_back(label, p);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return corrections;
}

}  // namespace qpaths
