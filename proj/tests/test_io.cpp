#include "qpaths/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace qpaths;
using qpaths::io::json;

namespace {

json parse(const char* text) { return json::parse(text); }

}  // namespace

TEST_CASE("complex entries round-trip as [re, im]", "[io]") {
  CHECK(io::parse_complex(parse("[1.5, -2.0]")) == Complex(1.5, -2.0));
  CHECK_THROWS_AS(io::parse_complex(parse("[1.5]")), SpecError);
  CHECK_THROWS_AS(io::parse_complex(parse("[1, \"i\"]")), SpecError);
  CHECK_THROWS_AS(io::parse_complex(parse("1.5")), SpecError);
  CHECK(io::complex_to_json(Complex(0.25, -1.0)).dump() == "[0.25,-1.0]");
}

TEST_CASE("matrices round-trip", "[io]") {
  const Matrix h = hadamard();
  const Matrix back = io::parse_matrix(json::parse(io::matrix_to_json(h).dump()));
  CHECK(max_abs(back - h) < 1e-15);

  CHECK_THROWS_AS(io::parse_matrix(parse("[]")), SpecError);
  CHECK_THROWS_AS(io::parse_matrix(parse("[[[1,0]],[[1,0],[0,0]]]")), SpecError);  // ragged
  CHECK_THROWS_AS(io::parse_matrix(parse("[[1,0]]")), SpecError);  // entries not pairs

  // object payload with a "matrix" field
  const Matrix wrapped = io::parse_matrix_payload(parse("{\"matrix\": [[[0,0],[1,0]],[[1,0],[0,0]]]}"));
  CHECK(max_abs(wrapped - pauli_x()) < 1e-15);
  CHECK_THROWS_AS(io::parse_matrix_payload(parse("{\"rows\": 2}")), SpecError);
}

TEST_CASE("channel specs parse and serialize", "[io]") {
  const char* spec = R"({
    "name": "bit-flip-half",
    "dim": 2,
    "kraus": [
      [[[0.7071067811865476, 0], [0, 0]], [[0, 0], [0.7071067811865476, 0]]],
      [[[0, 0], [0.7071067811865476, 0]], [[0.7071067811865476, 0], [0, 0]]]
    ]
  })";
  const json j = parse(spec);
  const KrausChannel ch = io::parse_channel(j);
  CHECK(ch.dim() == 2);
  CHECK(ch.kraus_count() == 2);
  CHECK(io::spec_name(j).value() == "bit-flip-half");
  CHECK(max_abs(ch.kraus()[1] - pauli_x() / std::sqrt(2.0)) < 1e-12);

  // round-trip through serialization
  const KrausChannel again = io::parse_channel(json::parse(io::channel_to_json(ch).dump()));
  for (std::size_t i = 0; i < ch.kraus_count(); ++i)
    CHECK(max_abs(again.kraus()[i] - ch.kraus()[i]) < 1e-15);
}

TEST_CASE("channel spec structural errors are SpecError", "[io]") {
  CHECK_THROWS_AS(io::parse_channel(parse("[]")), SpecError);
  CHECK_THROWS_AS(io::parse_channel(parse("{\"kraus\": []}")), SpecError);
  CHECK_THROWS_AS(io::parse_channel(parse("{\"dim\": 2}")), SpecError);
  CHECK_THROWS_AS(io::parse_channel(parse("{\"dim\": 2, \"kraus\": []}")), SpecError);
  CHECK_THROWS_AS(io::parse_channel(parse("{\"dim\": 0, \"kraus\": [[[[1,0]]]]}")), SpecError);
  // declared dim disagrees with the matrices
  CHECK_THROWS_AS(io::parse_channel(parse("{\"dim\": 3, \"kraus\": [[[[1,0],[0,0]],[[0,0],[1,0]]]]}")),
                  SpecError);
}

TEST_CASE("semantically invalid channel specs are ValidationError", "[io]") {
  // structurally fine, but sum K†K = 4I
  const char* bad = R"({"dim": 2, "kraus": [[[[2, 0], [0, 0]], [[0, 0], [2, 0]]]]})";
  CHECK_THROWS_AS(io::parse_channel(parse(bad)), ValidationError);
}

TEST_CASE("extension specs parse amplitudes or default to uniform", "[io]") {
  const char* with_amps = R"({
    "dim": 2,
    "kraus": [
      [[[0.7071067811865476, 0], [0, 0]], [[0, 0], [0.7071067811865476, 0]]],
      [[[0, 0], [0.7071067811865476, 0]], [[0.7071067811865476, 0], [0, 0]]]
    ],
    "vacuum_amplitudes": [[1, 0], [0, 0]]
  })";
  const VacuumExtendedChannel concentrated = io::parse_extension(parse(with_amps));
  CHECK(std::abs(concentrated.amplitudes()[0] - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(concentrated.amplitudes()[1]) < 1e-15);

  const char* plain = R"({
    "dim": 2,
    "kraus": [
      [[[0.7071067811865476, 0], [0, 0]], [[0, 0], [0.7071067811865476, 0]]],
      [[[0, 0], [0.7071067811865476, 0]], [[0.7071067811865476, 0], [0, 0]]]
    ]
  })";
  const VacuumExtendedChannel uniform = io::parse_extension(parse(plain));
  for (const Complex& a : uniform.amplitudes())
    CHECK(std::abs(a - Complex(1.0 / std::numbers::sqrt2, 0)) < 1e-12);

  // unnormalized amplitudes are a domain failure
  json bad = parse(with_amps);
  bad["vacuum_amplitudes"] = json::array({json::array({1.0, 0.0}), json::array({1.0, 0.0})});
  CHECK_THROWS_AS(io::parse_extension(bad), ValidationError);
  // count mismatch likewise
  bad["vacuum_amplitudes"] = json::array({json::array({1.0, 0.0})});
  CHECK_THROWS_AS(io::parse_extension(bad), ValidationError);

  // extension serialization round-trips
  const auto round = io::parse_extension(
      json::parse(io::extension_to_json(concentrated, "conc").dump()));
  CHECK(std::abs(round.amplitudes()[0] - Complex(1, 0)) < 1e-15);
}

TEST_CASE("load_json distinguishes missing files from malformed ones", "[io]") {
  CHECK_THROWS_AS(io::load_json("/nonexistent/qpaths-spec.json"), SpecError);

  const std::filesystem::path tmp =
      std::filesystem::temp_directory_path() / "qpaths_io_test_malformed.json";
  std::ofstream(tmp) << "{ not json";
  CHECK_THROWS_AS(io::load_json(tmp.string()), SpecError);

  std::ofstream(tmp) << "{\"dim\": 2}";
  CHECK(io::load_json(tmp.string()).at("dim") == 2);
  std::filesystem::remove(tmp);
}

TEST_CASE("distribution CSV has a header and shortest round-trip numbers", "[io]") {
  const std::map<int, double> dist = {{-1, 0.125}, {1, 0.625}, {3, 0.25}};
  CHECK(io::distribution_csv(dist) ==
        "position,probability\n-1,0.125\n1,0.625\n3,0.25\n");
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(1.0 / 3.0) == "0.3333333333333333");
}
