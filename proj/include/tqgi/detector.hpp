#pragma once
#include <stdexcept>

namespace tqgi {

/// Single-photon detector plus its slice of the time recorder.
struct DetectorModel {
  double efficiency = 1.0;          // 0..1
  double jitter_fwhm = 0.0;         // s, Gaussian
  double dark_rate = 0.0;           // counts/s
  double dead_time = 0.0;           // s, 0 = off
  double recorder_bin = 164.61e-12; // s

  void validate() const {
    if (!(efficiency >= 0.0 && efficiency <= 1.0))
      throw std::invalid_argument("detector efficiency must be in [0,1]");
    if (!(recorder_bin > 0)) throw std::invalid_argument("recorder bin width must be positive");
    if (jitter_fwhm < 0 || dark_rate < 0 || dead_time < 0)
      throw std::invalid_argument("detector jitter/dark rate/dead time must be >= 0");
  }
};

/// ID220-like preset: free-running InGaAs SPD.
inline DetectorModel id220_preset() {
  DetectorModel d;
  d.efficiency = 0.20;
  d.jitter_fwhm = 250e-12;
  d.dark_rate = 2000.0;
  d.dead_time = 10e-6;
  return d;
}

}  // namespace tqgi
