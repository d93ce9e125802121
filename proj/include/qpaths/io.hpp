// io.hpp — file formats: JSON channel/extension specs, matrix payloads,
// CSV distributions. Complex numbers are [re, im] pairs of decimals
// everywhere.
//
// Error split: SpecError means the file or its structure is wrong (missing
// field, wrong type, ragged matrix); ValidationError propagates from the
// domain types when a structurally sound spec describes an invalid object
// (closure failure, non-unitary coin). The CLI maps them to different exit
// codes.

#pragma once

#include "qpaths/channels.hpp"
#include "qpaths/vacuum.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qpaths {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace io {

using nlohmann::json;
using nlohmann::ordered_json;

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw SpecError("malformed JSON in file: " + path);
  return j;
}

inline void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw SpecError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw SpecError("failed to write file: " + path);
}

// ---------------------------------------------------------------------------
// Complex / matrix payloads
// ---------------------------------------------------------------------------

inline Complex parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SpecError("complex entry must be a [re, im] pair of numbers");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

inline ordered_json complex_to_json(const Complex& z) {
  return ordered_json::array({z.real(), z.imag()});
}

inline Matrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw SpecError("matrix must be a non-empty list of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty())
    throw SpecError("matrix rows must be non-empty lists of [re, im] pairs");
  const std::size_t cols = j[0].size();
  Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw SpecError("matrix rows must all have the same length");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) = parse_complex(j[r][c]);
  }
  return m;
}

inline ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<Complex> parse_complex_list(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty())
    throw SpecError(what + " must be a non-empty list of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const json& entry : j) out.push_back(parse_complex(entry));
  return out;
}

// A field holding a matrix: either the bare row list, or an object wrapping
// it under "matrix" (handy for annotated coin/carrier files).
inline Matrix parse_matrix_payload(const json& j) {
  if (j.is_object()) {
    if (!j.contains("matrix")) throw SpecError("matrix object must contain a 'matrix' field");
    return parse_matrix(j.at("matrix"));
  }
  return parse_matrix(j);
}

// ---------------------------------------------------------------------------
// Channel and extension specs
// ---------------------------------------------------------------------------
// Channel spec: { "dim": d, "kraus": [matrix, ...], "name": optional }.
// Extension spec: a channel spec plus "vacuum_amplitudes": [[re, im], ...].

inline std::optional<std::string> spec_name(const json& j) {
  if (!j.is_object() || !j.contains("name")) return std::nullopt;
  if (!j.at("name").is_string()) throw SpecError("channel spec 'name' must be a string");
  return j.at("name").get<std::string>();
}

inline KrausChannel parse_channel(const json& j) {
  if (!j.is_object()) throw SpecError("channel spec must be an object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer())
    throw SpecError("channel spec must contain an integer 'dim'");
  const long long dim = j.at("dim").get<long long>();
  if (dim < 1) throw SpecError("channel spec 'dim' must be >= 1");
  if (!j.contains("kraus") || !j.at("kraus").is_array() || j.at("kraus").empty())
    throw SpecError("channel spec must contain a non-empty 'kraus' list");
  std::vector<Matrix> ks;
  ks.reserve(j.at("kraus").size());
  for (const json& entry : j.at("kraus")) {
    Matrix k = parse_matrix(entry);
    if (k.rows() != dim || k.cols() != dim)
      throw SpecError("channel spec Kraus operators must be dim x dim");
    ks.push_back(std::move(k));
  }
  return KrausChannel(std::move(ks));
}

// Parse an extension spec; a plain channel spec (no "vacuum_amplitudes")
// gets the uniform extension.
inline VacuumExtendedChannel parse_extension(const json& j) {
  KrausChannel ch = parse_channel(j);
  if (!j.contains("vacuum_amplitudes")) return uniform_extension(std::move(ch));
  std::vector<Complex> amps = parse_complex_list(j.at("vacuum_amplitudes"), "vacuum_amplitudes");
  return VacuumExtendedChannel(std::move(ch), std::move(amps));
}

inline ordered_json channel_to_json(const KrausChannel& ch,
                                    const std::optional<std::string>& name = std::nullopt) {
  ordered_json j = ordered_json::object();
  if (name) j["name"] = *name;
  j["dim"] = ch.dim();
  ordered_json ks = ordered_json::array();
  for (const Matrix& k : ch.kraus()) ks.push_back(matrix_to_json(k));
  j["kraus"] = std::move(ks);
  return j;
}

inline ordered_json extension_to_json(const VacuumExtendedChannel& ext,
                                      const std::optional<std::string>& name = std::nullopt) {
  ordered_json j = channel_to_json(ext.channel(), name);
  ordered_json amps = ordered_json::array();
  for (const Complex& a : ext.amplitudes()) amps.push_back(complex_to_json(a));
  j["vacuum_amplitudes"] = std::move(amps);
  return j;
}

// ---------------------------------------------------------------------------
// CSV distributions
// ---------------------------------------------------------------------------

// Shortest round-trip decimal form (what the JSON serializer emits).
inline std::string format_double(double v) { return ordered_json(v).dump(); }

inline std::string distribution_csv(const std::map<int, double>& dist) {
  std::ostringstream out;
  out << "position,probability\n";
  for (const auto& [x, p] : dist) out << x << ',' << format_double(p) << '\n';
  return out.str();
}

}  // namespace io
}  // namespace qpaths
