#pragma once
#include <Eigen/Core>
#include <complex>
#include <optional>
#include <random>
#include <string>

namespace tqgi {

enum class SpectralShape { Gaussian, FlatTop, Tabulated };

/// Biphoton spectral amplitude f(Omega) on a uniform detuning grid.
///
/// Omega is the detuning from the pump: the signal photon sits at
/// omega_pump + Omega, the idler at omega_pump - Omega (anticorrelated by
/// construction; the two frequencies are never stored separately).
/// Normalization: sum_k |f_k|^2 * grid_step = 1.
struct SpectralAmplitude {
  double omega_pump = 0;       // rad/s
  double center_detuning = 0;  // rad/s, Omega_0
  double grid_start = 0;       // rad/s, detuning of sample 0
  double grid_step = 0;        // rad/s
  Eigen::ArrayXcd values;      // f(Omega_k), dimensionless
  double band_width = 0;       // rad/s, amplitude FWHM of the band
  SpectralShape shape = SpectralShape::Gaussian;
  int flattop_order = 8;
  Eigen::ArrayXd cdf;          // cumulative |f|^2*step over samples, for sampling

  int size() const { return static_cast<int>(values.size()); }
  double detuning_at(int k) const { return grid_start + k * grid_step; }
  double grid_end() const { return detuning_at(size() - 1); }
  Eigen::ArrayXd detunings() const;
  Eigen::ArrayXd intensity() const;  // |f_k|^2

  /// |f|^2 linearly interpolated at an arbitrary detuning; 0 outside the grid.
  double intensity_at(double omega_detuning) const;

  double signal_center_wavelength() const;
  double idler_center_wavelength() const;
};

/// Builds a normalized amplitude with the band centered between the two
/// carrier wavelengths. `bandwidth_m` is the wavelength span of the signal
/// band; it fixes the amplitude FWHM of f. If `pump_wavelength_m` is given
/// it must match the frequency midpoint of the two centers.
SpectralAmplitude make_spectral_amplitude(SpectralShape shape,
                                          double lambda_signal_m,
                                          double lambda_idler_m,
                                          double bandwidth_m,
                                          int grid_points,
                                          int flattop_order = 8,
                                          std::optional<double> pump_wavelength_m = {});

/// Wraps externally supplied samples (uniform grid) as a normalized amplitude.
SpectralAmplitude make_tabulated_amplitude(double omega_pump, double grid_start,
                                           double grid_step,
                                           const Eigen::ArrayXcd& values);

/// Draws a detuning distributed as |f|^2: inverse CDF over grid samples with
/// linear interpolation inside each bin of width grid_step centered on the
/// sample. Deterministic given the generator state.
double sample_detuning(const SpectralAmplitude& f, std::mt19937_64& rng);

/// CSV with header detuning_rad_s,re,im.
void write_spectrum_csv(const SpectralAmplitude& f, const std::string& path);
SpectralAmplitude read_spectrum_csv(const std::string& path, double omega_pump);

}  // namespace tqgi
