#include "qpaths/numerics.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qpaths;

namespace {

Matrix random_complex_matrix(Index rows, Index cols, Rng& rng) {
  return detail::ginibre(rows, cols, rng);
}

}  // namespace

TEST_CASE("fixed operators have the expected entries", "[numerics]") {
  CHECK(max_abs(pauli_x() * pauli_x() - identity(2)) < 1e-15);
  CHECK(max_abs(pauli_y() * pauli_y() - identity(2)) < 1e-15);
  CHECK(max_abs(pauli_z() * pauli_z() - identity(2)) < 1e-15);
  CHECK(max_abs(pauli_x() * pauli_y() - Complex(0, 1) * pauli_z()) < 1e-15);
  CHECK(max_abs(hadamard() * hadamard() - identity(2)) < 1e-15);
  CHECK(max_abs(hadamard() * ket0() - ket_plus()) < 1e-15);
  CHECK(max_abs(hadamard() * ket1() - ket_minus()) < 1e-15);
  CHECK(is_unitary(pauli_y(), 1e-15));
  CHECK(is_hermitian(pauli_y(), 1e-15));
}

TEST_CASE("ket and projector", "[numerics]") {
  const Vector v = ket(4, 2);
  CHECK(v.size() == 4);
  CHECK(std::abs(v[2] - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(v.norm() - 1.0) < 1e-15);
  CHECK_THROWS_AS(ket(3, 3), ValidationError);
  CHECK_THROWS_AS(ket(0, 0), ValidationError);

  const Matrix p = projector(ket_plus());
  CHECK(max_abs(p * p - p) < 1e-15);
  CHECK(std::abs(p.trace() - Complex(1, 0)) < 1e-15);
}

TEST_CASE("tensor product matches the naive Kronecker product", "[numerics]") {
  Rng rng(7);
  for (const auto& [ra, ca, rb, cb] :
       {std::array<Index, 4>{2, 2, 2, 2}, {3, 2, 2, 4}, {1, 3, 3, 1}, {4, 4, 3, 3}}) {
    const Matrix a = random_complex_matrix(ra, ca, rng);
    const Matrix b = random_complex_matrix(rb, cb, rng);
    CHECK(max_abs(tensor(a, b) - oracles::naive_kron(a, b)) < 1e-12);
  }
}

TEST_CASE("tensor product of vectors follows the first-factor-slow convention", "[numerics]") {
  const Vector t = tensor_vec(ket(2, 1), ket(3, 2));
  CHECK(t.size() == 6);
  CHECK(std::abs(t[1 * 3 + 2] - Complex(1, 0)) < 1e-15);
}

TEST_CASE("partial trace recovers marginals of product states", "[numerics]") {
  Rng rng(11);
  const Matrix a = random_complex_matrix(3, 3, rng);
  const Matrix b = random_complex_matrix(2, 2, rng);
  const Matrix joint = tensor(a, b);
  CHECK(max_abs(partial_trace(joint, 3, 2, Keep::first) - a * b.trace()) < 1e-12);
  CHECK(max_abs(partial_trace(joint, 3, 2, Keep::second) - b * a.trace()) < 1e-12);
  CHECK(max_abs(partial_trace(joint, 3, 2, Keep::first) -
                oracles::naive_trace_out_second(joint, 3, 2)) < 1e-12);
  CHECK(max_abs(partial_trace(joint, 3, 2, Keep::second) -
                oracles::naive_trace_out_first(joint, 3, 2)) < 1e-12);
  CHECK_THROWS_AS(partial_trace(joint, 4, 2, Keep::first), ValidationError);
}

TEST_CASE("partial trace of an entangled state is mixed", "[numerics]") {
  Vector bell = (tensor_vec(ket0(), ket0()) + tensor_vec(ket1(), ket1())) / std::numbers::sqrt2;
  const Matrix rho = projector(bell);
  const Matrix reduced = partial_trace(rho, 2, 2, Keep::first);
  CHECK(max_abs(reduced - identity(2) / 2.0) < 1e-12);
}

TEST_CASE("trace distance agrees with the singular-value oracle", "[numerics]") {
  Rng rng(13);
  for (int i = 0; i < 5; ++i) {
    Matrix g = random_complex_matrix(3, 3, rng);
    Matrix h = random_complex_matrix(3, 3, rng);
    const Matrix a = (g * g.adjoint()) / (g * g.adjoint()).trace().real();
    const Matrix b = (h * h.adjoint()) / (h * h.adjoint()).trace().real();
    CHECK(std::abs(trace_distance(a, b) - oracles::svd_trace_distance(a, b)) < 1e-10);
  }
}

TEST_CASE("trace distance known values", "[numerics]") {
  const Matrix p0 = projector(ket0());
  const Matrix p1 = projector(ket1());
  const Matrix pp = projector(ket_plus());
  CHECK(trace_distance(p0, p0) < 1e-15);
  CHECK(std::abs(trace_distance(p0, p1) - 1.0) < 1e-12);
  CHECK(std::abs(trace_distance(p0, pp) - 1.0 / std::numbers::sqrt2) < 1e-12);
  CHECK_THROWS_AS(trace_distance(p0, identity(3)), ValidationError);
}

TEST_CASE("Haar random unitaries are unitary and seed-deterministic", "[numerics]") {
  for (const Index dim : {2, 3, 4, 5}) {
    const Matrix u = haar_random_unitary(dim, 42);
    CHECK(is_unitary(u, 1e-12));
    CHECK(max_abs(u - haar_random_unitary(dim, 42)) == 0.0);
    CHECK(max_abs(u - haar_random_unitary(dim, 43)) > 1e-3);
  }
  CHECK_THROWS_AS(haar_random_unitary(0, 1), ValidationError);
}

TEST_CASE("Haar sampling covers the group rather than a fixed corner", "[numerics]") {
  // The mean of |tr U|^2 over Haar measure is 1 for every dimension; a crude
  // 200-sample estimate lands well inside [0.5, 1.5].
  Rng rng(99);
  double acc = 0.0;
  const int samples = 200;
  for (int i = 0; i < samples; ++i) acc += std::norm(haar_random_unitary(3, rng).trace());
  const double mean = acc / samples;
  CHECK(mean > 0.5);
  CHECK(mean < 1.5);
}

TEST_CASE("hermiticity and unitarity predicates reject near-misses", "[numerics]") {
  Matrix m = pauli_x();
  m(0, 1) += Complex(1e-6, 0);
  CHECK(!is_unitary(m, 1e-9));
  Matrix h = pauli_z();
  h(0, 1) = Complex(0, 1e-6);
  CHECK(!is_hermitian(h, 1e-9));
  CHECK(is_hermitian(h, 1e-3));
}
