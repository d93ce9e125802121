#include "qpaths/vacuum.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qpaths;

TEST_CASE("vacuum extension pairs one amplitude with each Kraus operator", "[vacuum]") {
  const VacuumExtendedChannel ext =
      make_vacuum_extension(eb_xz(), {Complex(0.6, 0.0), Complex(0.0, 0.8)});
  CHECK(ext.dim() == 2);
  CHECK(ext.amplitudes().size() == 2);
  CHECK(std::abs(ext.amplitudes()[1] - Complex(0.0, 0.8)) < 1e-15);

  // wrong count
  CHECK_THROWS_AS(make_vacuum_extension(eb_xz(), {Complex(1.0, 0.0)}), ValidationError);
  // not normalized
  CHECK_THROWS_AS(make_vacuum_extension(eb_xz(), {Complex(0.6, 0.0), Complex(0.7, 0.0)}),
                  ValidationError);
}

TEST_CASE("uniform extension puts 1/sqrt(n) on every operator", "[vacuum]") {
  const VacuumExtendedChannel one = uniform_extension(unitary_channel(pauli_x()));
  REQUIRE(one.amplitudes().size() == 1);
  CHECK(std::abs(one.amplitudes()[0] - Complex(1.0, 0.0)) < 1e-15);

  const VacuumExtendedChannel four = uniform_extension(depolarizing(0.5));
  REQUIRE(four.amplitudes().size() == 4);
  for (const Complex& a : four.amplitudes()) CHECK(std::abs(a - Complex(0.5, 0.0)) < 1e-15);
}

TEST_CASE("concentrated extension is an indicator", "[vacuum]") {
  const VacuumExtendedChannel ext = concentrated_extension(eb_xz(), 1);
  REQUIRE(ext.amplitudes().size() == 2);
  CHECK(std::abs(ext.amplitudes()[0]) < 1e-15);
  CHECK(std::abs(ext.amplitudes()[1] - Complex(1.0, 0.0)) < 1e-15);
  CHECK_THROWS_AS(concentrated_extension(eb_xz(), 2), ValidationError);
}
