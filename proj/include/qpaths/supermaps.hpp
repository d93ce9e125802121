// supermaps.hpp — the two quantum-path supermaps, materialized as ordinary
// Kraus channels on the joint carrier⊗control space (carrier is the first
// tensor factor, control the second):
//
//   spatial superposition   S_ij = E_i β_j ⊗ |0><0| + α_i D_j ⊗ |1><1|
//   quantum switch          S_ij = E_i D_j ⊗ |0><0| + D_j E_i ⊗ |1><1|
//
// Kraus index ordering in both product lists is i-major, j-minor.

#pragma once

#include "qpaths/vacuum.hpp"

#include <utility>

namespace qpaths {

// Joint carrier⊗control state; control is a qubit.
class JointState {
 public:
  JointState(Index carrier_dim, DensityMatrix joint)
      : carrier_dim_(carrier_dim), joint_(std::move(joint)) {
    if (carrier_dim_ < 1 || joint_.dim() != carrier_dim_ * 2)
      throw ValidationError("JointState: dimension must be carrier_dim * 2");
  }

  Index carrier_dim() const { return carrier_dim_; }
  const DensityMatrix& joint() const { return joint_; }

  DensityMatrix carrier_marginal() const {
    return DensityMatrix(partial_trace(joint_.matrix(), carrier_dim_, 2, Keep::first));
  }

  DensityMatrix control_marginal() const {
    return DensityMatrix(partial_trace(joint_.matrix(), carrier_dim_, 2, Keep::second));
  }

 private:
  Index carrier_dim_;
  DensityMatrix joint_;
};

// The carrier operator multiplying |bra><ket| on the control side.
inline Matrix control_block(const JointState& js, int bra, int ket) {
  if (bra < 0 || bra > 1 || ket < 0 || ket > 1)
    throw ValidationError("control_block: bra/ket must be 0 or 1");
  const Index d = js.carrier_dim();
  const Matrix& m = js.joint().matrix();
  Matrix out(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) out(i, j) = m(i * 2 + bra, j * 2 + ket);
  return out;
}

// Spatial superposition of two vacuum-extended channels. Closure follows from
// the channels' CPTP property plus amplitude normalization.
inline KrausChannel spatial_superposition(const VacuumExtendedChannel& e,
                                          const VacuumExtendedChannel& d) {
  if (e.dim() != d.dim()) throw ValidationError("spatial_superposition: dimension mismatch");
  const Matrix p0 = projector(ket0());
  const Matrix p1 = projector(ket1());
  std::vector<Matrix> ks;
  ks.reserve(e.channel().kraus_count() * d.channel().kraus_count());
  for (std::size_t i = 0; i < e.channel().kraus_count(); ++i)
    for (std::size_t j = 0; j < d.channel().kraus_count(); ++j)
      ks.push_back(tensor(e.channel().kraus()[i] * d.amplitudes()[j], p0) +
                   tensor(d.channel().kraus()[j] * e.amplitudes()[i], p1));
  return KrausChannel(std::move(ks));
}

// Coherent superposition of the two causal orders E∘D and D∘E.
inline KrausChannel quantum_switch(const KrausChannel& e, const KrausChannel& d) {
  if (e.dim() != d.dim()) throw ValidationError("quantum_switch: dimension mismatch");
  const Matrix p0 = projector(ket0());
  const Matrix p1 = projector(ket1());
  std::vector<Matrix> ks;
  ks.reserve(e.kraus_count() * d.kraus_count());
  for (const Matrix& ei : e.kraus())
    for (const Matrix& dj : d.kraus())
      ks.push_back(tensor(ei * dj, p0) + tensor(dj * ei, p1));
  return KrausChannel(std::move(ks));
}

// Apply a joint-space map to carrier ⊗ control.
inline JointState apply_joint(const KrausChannel& map, const DensityMatrix& carrier,
                              const DensityMatrix& control) {
  if (control.dim() != 2) throw ValidationError("apply_joint: control must be a qubit");
  if (map.dim() != carrier.dim() * 2)
    throw ValidationError("apply_joint: map does not act on carrier_dim * 2");
  const DensityMatrix joint_in(tensor(carrier.matrix(), control.matrix()));
  return JointState(carrier.dim(), apply(map, joint_in));
}

}  // namespace qpaths
