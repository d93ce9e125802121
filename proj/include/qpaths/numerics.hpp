// numerics.hpp — dense complex-matrix primitives: tensor products, partial
// traces, trace distance, Haar-random unitaries, and the fixed basis operators
// every other module builds on.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace qpaths {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;
using Rng = std::mt19937_64;

// Thrown when a domain invariant fails (shape mismatch, CPTP closure,
// normalization, non-unitarity, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tolerances used across the library. Entrywise unless noted.
namespace tol {
inline constexpr double unitary = 1e-12;
inline constexpr double cptp_closure = 1e-10;
inline constexpr double density = 1e-10;          // Hermiticity, trace, eigenvalue floor
inline constexpr double amplitude_norm = 1e-10;   // vacuum amplitudes
inline constexpr double cross_term = 1e-12;       // amplitude-product modulus
inline constexpr double orthonormal = 1e-12;      // measurement bases
inline constexpr double zero_probability = 1e-12;
inline constexpr double equivalence = 1e-9;       // default verdict tolerance
}  // namespace tol

// --------------------------- basic helpers ---------------------------------

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const Matrix& m, double tolerance = tol::density) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tolerance;
}

inline bool is_unitary(const Matrix& m, double tolerance = tol::unitary) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())) <= tolerance;
}

inline double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// --------------------------- fixed operators -------------------------------

inline Matrix identity(Index dim) { return Matrix::Identity(dim, dim); }

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

inline Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Matrix hadamard() {
  Matrix m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

inline Vector ket(Index dim, Index i) {
  if (i < 0 || i >= dim) throw ValidationError("ket: index out of range");
  Vector v = Vector::Zero(dim);
  v(i) = 1.0;
  return v;
}

inline Vector ket0() { return ket(2, 0); }
inline Vector ket1() { return ket(2, 1); }
inline Vector ket_plus() { return (ket0() + ket1()) / std::sqrt(2.0); }
inline Vector ket_minus() { return (ket0() - ket1()) / std::sqrt(2.0); }

// |v><v|
inline Matrix projector(const Vector& v) { return v * v.adjoint(); }

// --------------------------- tensor product --------------------------------

// Kronecker product with the first factor as the slow index:
// out(ia*b.rows + ib, ja*b.cols + jb) = a(ia, ja) * b(ib, jb).
// Every module relies on this one convention.
inline Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index ia = 0; ia < a.rows(); ++ia)
    for (Index ja = 0; ja < a.cols(); ++ja)
      out.block(ia * b.rows(), ja * b.cols(), b.rows(), b.cols()) = a(ia, ja) * b;
  return out;
}

// Vector Kronecker product under the same convention:
// out[ia*b.size + ib] = a[ia] * b[ib].
inline Vector tensor_vec(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Index ia = 0; ia < a.size(); ++ia) out.segment(ia * b.size(), b.size()) = a[ia] * b;
  return out;
}

// --------------------------- partial trace ----------------------------------

enum class Keep { first, second };

// Trace over the discarded factor of a (dim_a*dim_b)-dimensional square
// matrix, under the tensor convention above.
inline Matrix partial_trace(const Matrix& m, Index dim_a, Index dim_b, Keep keep) {
  if (dim_a < 1 || dim_b < 1 || m.rows() != m.cols() || m.rows() != dim_a * dim_b)
    throw ValidationError("partial_trace: matrix is not square of dimension dim_a*dim_b");
  if (keep == Keep::first) {
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (Index i = 0; i < dim_a; ++i)
      for (Index j = 0; j < dim_a; ++j)
        for (Index b = 0; b < dim_b; ++b) out(i, j) += m(i * dim_b + b, j * dim_b + b);
    return out;
  }
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (Index i = 0; i < dim_b; ++i)
    for (Index j = 0; j < dim_b; ++j)
      for (Index a = 0; a < dim_a; ++a) out(i, j) += m(a * dim_b + i, a * dim_b + j);
  return out;
}

// --------------------------- trace distance ---------------------------------

// (1/2) * sum |eigenvalues of (a - b)| for Hermitian a, b.
inline double trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("trace_distance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

// --------------------------- random sampling --------------------------------

namespace detail {

inline double uniform01(Rng& rng) {
  // 53-bit mantissa in [0, 1)
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box–Muller over the raw mt19937_64 stream; hand-rolled so the sequence does
// not depend on standard-library distribution internals.
inline double standard_normal(Rng& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline Matrix ginibre(Index rows, Index cols, Rng& rng) {
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      g(i, j) = Complex(standard_normal(rng), standard_normal(rng));
  return g;
}

}  // namespace detail

// Haar-distributed unitary: QR-decompose a complex Ginibre matrix (i.i.d.
// standard complex Gaussian entries), then multiply each column of Q by the
// phase of the matching diagonal entry of R. The phase fix removes the
// sign/phase ambiguity of QR, which would otherwise bias the distribution
// away from Haar measure.
inline Matrix haar_random_unitary(Index dim, Rng& rng) {
  if (dim < 1) throw ValidationError("haar_random_unitary: dim must be >= 1");
  const Matrix g = detail::ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < dim; ++k) {
    const Complex rkk = r(k, k);
    q.col(k) *= std::abs(rkk) > 0.0 ? rkk / std::abs(rkk) : 1.0;
  }
  return q;
}

inline Matrix haar_random_unitary(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(dim, rng);
}

}  // namespace qpaths
