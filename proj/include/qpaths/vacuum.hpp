// vacuum.hpp — vacuum-extended channels: a Kraus channel paired with one
// normalized vacuum amplitude per Kraus operator. The vacuum sector never
// appears as an explicit Hilbert-space dimension; the amplitudes enter the
// simulation only through the spatial-superposition Kraus operators.

#pragma once

#include "qpaths/channels.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace qpaths {

class VacuumExtendedChannel {
 public:
  VacuumExtendedChannel(KrausChannel channel, std::vector<Complex> amplitudes)
      : ch_(std::move(channel)), amps_(std::move(amplitudes)) {
    if (amps_.size() != ch_.kraus_count())
      throw ValidationError("VacuumExtendedChannel: one amplitude per Kraus operator required");
    double norm2 = 0.0;
    for (const Complex& a : amps_) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > tol::amplitude_norm)
      throw ValidationError("VacuumExtendedChannel: amplitudes must satisfy sum |a|^2 = 1");
  }

  const KrausChannel& channel() const { return ch_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Index dim() const { return ch_.dim(); }

 private:
  KrausChannel ch_;
  std::vector<Complex> amps_;
};

inline VacuumExtendedChannel make_vacuum_extension(KrausChannel ch, std::vector<Complex> amplitudes) {
  return VacuumExtendedChannel(std::move(ch), std::move(amplitudes));
}

// All amplitudes 1/sqrt(n); the default when no physical model fixes them.
inline VacuumExtendedChannel uniform_extension(KrausChannel ch) {
  const std::size_t n = ch.kraus_count();
  std::vector<Complex> amps(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
  return VacuumExtendedChannel(std::move(ch), std::move(amps));
}

// Indicator amplitudes: 1 on `index`, 0 elsewhere. Probe extension for the
// cross-term condition.
inline VacuumExtendedChannel concentrated_extension(KrausChannel ch, std::size_t index) {
  const std::size_t n = ch.kraus_count();
  if (index >= n) throw ValidationError("concentrated_extension: index out of range");
  std::vector<Complex> amps(n, Complex(0.0, 0.0));
  amps[index] = 1.0;
  return VacuumExtendedChannel(std::move(ch), std::move(amps));
}

}  // namespace qpaths
