// channels.hpp — density matrices, Kraus channels with CPTP validation, the
// standard channel library, Choi matrices, and the qubit entanglement-breaking
// test.

#pragma once

#include "qpaths/numerics.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qpaths {

// --------------------------- DensityMatrix ----------------------------------

// Hermitian, positive-semidefinite, unit-trace complex matrix. Validated on
// construction; immutable afterwards.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1)
      throw ValidationError("DensityMatrix: matrix must be square and non-empty");
    if (!m_.allFinite()) throw ValidationError("DensityMatrix: non-finite entries");
    if (!is_hermitian(m_, tol::density))
      throw ValidationError("DensityMatrix: not Hermitian within tolerance");
    if (std::abs(m_.trace() - Complex(1.0)) > tol::density)
      throw ValidationError("DensityMatrix: trace is not 1 within tolerance");
    if (min_eigenvalue(m_) < -tol::density)
      throw ValidationError("DensityMatrix: negative eigenvalue beyond tolerance");
  }

  static DensityMatrix pure(const Vector& state) {
    const double n = state.norm();
    if (n <= 0.0) throw ValidationError("DensityMatrix::pure: zero vector");
    const Vector v = state / n;
    return DensityMatrix(projector(v));
  }

  static DensityMatrix maximally_mixed(Index dim) {
    return DensityMatrix(identity(dim) / static_cast<double>(dim));
  }

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance(a.matrix(), b.matrix());
}

// --------------------------- KrausChannel -----------------------------------

// Residual of the trace-preservation closure: max |sum_i K_i†K_i - I|.
inline double closure_residual(const std::vector<Matrix>& kraus) {
  if (kraus.empty()) throw ValidationError("closure_residual: empty Kraus list");
  const Index d = kraus.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& k : kraus) sum += k.adjoint() * k;
  return max_abs(sum - identity(d));
}

// A CPTP map as a non-empty list of equal-dimension square Kraus operators
// with sum_i K_i†K_i = I within tolerance.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> kraus) : ks_(std::move(kraus)) {
    if (ks_.empty()) throw ValidationError("KrausChannel: empty Kraus list");
    const Index d = ks_.front().rows();
    if (d < 1) throw ValidationError("KrausChannel: empty operators");
    for (const Matrix& k : ks_) {
      if (k.rows() != d || k.cols() != d)
        throw ValidationError("KrausChannel: operators must be square with equal dimensions");
      if (!k.allFinite()) throw ValidationError("KrausChannel: non-finite entries");
    }
    if (closure_residual(ks_) > tol::cptp_closure)
      throw ValidationError("KrausChannel: CPTP closure violated (sum K†K != I)");
  }

  Index dim() const { return ks_.front().rows(); }
  std::size_t kraus_count() const { return ks_.size(); }
  const std::vector<Matrix>& kraus() const { return ks_; }

 private:
  std::vector<Matrix> ks_;
};

inline KrausChannel make_channel(std::vector<Matrix> kraus) {
  return KrausChannel(std::move(kraus));
}

namespace detail {

// sum_i K_i m K_i† on an arbitrary operator (no density validation).
inline Matrix apply_kraus(const std::vector<Matrix>& kraus, const Matrix& m) {
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (const Matrix& k : kraus) out += k * m * k.adjoint();
  return out;
}

}  // namespace detail

inline DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim()) throw ValidationError("apply: channel/state dimension mismatch");
  return DensityMatrix(detail::apply_kraus(ch.kraus(), rho.matrix()));
}

// Kraus list {outer_i * inner_j}, outer index major.
inline KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  if (outer.dim() != inner.dim()) throw ValidationError("compose: dimension mismatch");
  std::vector<Matrix> ks;
  ks.reserve(outer.kraus_count() * inner.kraus_count());
  for (const Matrix& o : outer.kraus())
    for (const Matrix& i : inner.kraus()) ks.push_back(o * i);
  return KrausChannel(std::move(ks));
}

// --------------------------- standard channels -------------------------------

inline KrausChannel unitary_channel(const Matrix& u) {
  if (!is_unitary(u)) throw ValidationError("unitary_channel: matrix is not unitary");
  return KrausChannel({u});
}

namespace detail {

inline void check_probability(double p, const char* who) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError(std::string(who) + ": p must be in [0, 1]");
}

}  // namespace detail

inline KrausChannel depolarizing(double p) {
  detail::check_probability(p, "depolarizing");
  return KrausChannel({std::sqrt(1.0 - 3.0 * p / 4.0) * identity(2),
                       std::sqrt(p / 4.0) * pauli_x(),
                       std::sqrt(p / 4.0) * pauli_y(),
                       std::sqrt(p / 4.0) * pauli_z()});
}

inline KrausChannel dephasing(double p) {
  detail::check_probability(p, "dephasing");
  return KrausChannel({std::sqrt(1.0 - p) * identity(2), std::sqrt(p) * pauli_z()});
}

inline KrausChannel bit_flip(double p) {
  detail::check_probability(p, "bit_flip");
  return KrausChannel({std::sqrt(1.0 - p) * identity(2), std::sqrt(p) * pauli_x()});
}

// rho -> (X rho X + Z rho Z)/2; the canonical entanglement-breaking qubit
// channel the switch protocol defeats.
inline KrausChannel eb_xz() {
  return KrausChannel({pauli_x() / std::sqrt(2.0), pauli_z() / std::sqrt(2.0)});
}

// --------------------------- Choi matrix and EB test -------------------------

// (I ⊗ ch) applied to the unnormalized maximally entangled state:
// C = sum_ij |i><j| ⊗ ch(|i><j|). PSD; partial trace over the output is I.
inline Matrix choi(const KrausChannel& ch) {
  const Index d = ch.dim();
  Matrix c = Matrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Matrix eij = Matrix::Zero(d, d);
      eij(i, j) = 1.0;
      c += tensor(eij, detail::apply_kraus(ch.kraus(), eij));
    }
  return c;
}

namespace detail {

// Transpose the second tensor factor of a (d*d)-dimensional matrix.
inline Matrix partial_transpose_second(const Matrix& m, Index d) {
  Matrix out(m.rows(), m.cols());
  for (Index ia = 0; ia < d; ++ia)
    for (Index ja = 0; ja < d; ++ja)
      for (Index ib = 0; ib < d; ++ib)
        for (Index jb = 0; jb < d; ++jb)
          out(ia * d + jb, ja * d + ib) = m(ia * d + ib, ja * d + jb);
  return out;
}

}  // namespace detail

// Qubit channels only: PPT of the Choi matrix decides entanglement breaking
// (PPT ⇔ separable in 2x2). nullopt for any other dimension: undecided.
inline std::optional<bool> is_entanglement_breaking(const KrausChannel& ch) {
  if (ch.dim() != 2) return std::nullopt;
  const Matrix pt = detail::partial_transpose_second(choi(ch), 2);
  return min_eigenvalue(pt) >= -tol::density;
}

// --------------------------- random states and channels ----------------------

// Ginibre construction: G G† normalized to unit trace.
inline DensityMatrix random_density_matrix(Index dim, Rng& rng) {
  const Matrix g = detail::ginibre(dim, dim, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(0.5 * (m + m.adjoint()));
}

// Random CPTP channel with `kraus_count` operators: slice the first dim
// columns of a Haar unitary on dim*kraus_count into row blocks (a random
// Stinespring isometry).
inline KrausChannel random_kraus_channel(Index dim, Index kraus_count, Rng& rng) {
  if (dim < 1 || kraus_count < 1)
    throw ValidationError("random_kraus_channel: dim and kraus_count must be >= 1");
  const Matrix u = haar_random_unitary(dim * kraus_count, rng);
  std::vector<Matrix> ks;
  ks.reserve(static_cast<std::size_t>(kraus_count));
  for (Index i = 0; i < kraus_count; ++i) ks.push_back(u.block(i * dim, 0, dim, dim));
  return KrausChannel(std::move(ks));
}

// --------------------------- map comparison ----------------------------------

// d² pure probe states spanning the Hermitian operators on C^d: the basis
// projectors plus, for each pair i<j, the (|i>+|j>)/√2 and (|i>+i|j>)/√2
// projectors. Two CPTP maps agreeing on all of them agree everywhere.
inline std::vector<DensityMatrix> probe_states(Index dim) {
  std::vector<DensityMatrix> probes;
  probes.reserve(static_cast<std::size_t>(dim * dim));
  for (Index i = 0; i < dim; ++i) probes.push_back(DensityMatrix::pure(ket(dim, i)));
  for (Index i = 0; i < dim; ++i)
    for (Index j = i + 1; j < dim; ++j) {
      probes.push_back(DensityMatrix::pure(ket(dim, i) + ket(dim, j)));
      probes.push_back(DensityMatrix::pure(ket(dim, i) + Complex(0, 1) * ket(dim, j)));
    }
  return probes;
}

// Channels are compared as maps, never by Kraus-list equality: max trace
// distance of the two outputs over the probe set.
inline double map_distance(const KrausChannel& a, const KrausChannel& b) {
  if (a.dim() != b.dim()) throw ValidationError("map_distance: dimension mismatch");
  double worst = 0.0;
  for (const DensityMatrix& probe : probe_states(a.dim()))
    worst = std::max(worst, trace_distance(apply(a, probe), apply(b, probe)));
  return worst;
}

}  // namespace qpaths
