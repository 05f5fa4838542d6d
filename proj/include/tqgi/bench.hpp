#pragma once
#include <optional>

#include "tqgi/fiber.hpp"

namespace tqgi {

enum class SpotPsf { None, Gaussian };

struct BenchParams {
  double grating_period = 0;             // m
  std::optional<double> theta_incident;  // rad; exactly one of the two angles
  std::optional<double> theta_center;    // rad, diffraction angle at lambda_signal
  double grooves = 0;                    // N, illuminated groove count
  double focal_length = 0;               // m
  double lambda_signal = 0;              // m
  double lambda_idler = 0;               // m
  double band_width_m = 0;               // declared signal wavelength span
  double beam_diameter = 0;              // m, informational only
  bool exact_mapping = false;            // arcsin/tan map instead of the linearization
  SpotPsf spot_psf = SpotPsf::Gaussian;
};

/// Grating + lens geometry of the object arm. Positions x are measured along
/// the illuminating line relative to the landing point of the band center.
struct OpticalBench {
  double grating_period = 0;
  double theta_incident = 0;
  double theta_center = 0;     // diffraction angle of the signal center
  double grooves = 0;
  double focal_length = 0;
  double lambda_signal = 0;
  double lambda_idler = 0;
  double band_width_m = 0;
  double beam_diameter = 0;
  bool exact_mapping = false;
  SpotPsf spot_psf = SpotPsf::Gaussian;
  double omega_pump = 0;       // rad/s, derived
  double center_detuning = 0;  // rad/s, derived
};

/// Resolves the missing angle from the grating equation and validates that
/// the first order exists across the declared band.
OpticalBench make_bench(const BenchParams& params);

/// First-order diffraction angle, theta = asin(lambda/p + sin theta_i).
double diffraction_angle(const OpticalBench& bench, double lambda_m);

/// Landing position of detuning Omega relative to the band center.
/// Linearized by default; exact arcsin/tan mapping behind the bench flag.
double position_of_detuning(const OpticalBench& bench, double omega_detuning);

/// Inverse of position_of_detuning.
double detuning_of_position(const OpticalBench& bench, double x_m);

/// True when x lies on the illuminated line of the declared band.
bool position_in_band(const OpticalBench& bench, double x_m);

/// Length of the illuminated line for the declared band.
double line_length(const OpticalBench& bench);

/// Position-to-time increment between two coincidence peaks on the idler
/// arrival axis: dtau = -(li0^2/ls0^2) * p * d * cos(theta0) * dx / l.
/// The coincidence axis tau = t_s - t_i carries the opposite sign; see
/// tau_per_meter.
double delay_of_position(const OpticalBench& bench, const FiberChannel& idler_fiber, double dx_m);

/// Slope dtau/dx of the measured tau = t_s - t_i axis (positive for
/// anomalous-dispersion idler fiber).
double tau_per_meter(const OpticalBench& bench, const FiberChannel& idler_fiber);

/// Grating-limited spectral point spread, delta_lambda = lambda_s0 / N.
double resolving_power(const OpticalBench& bench);

/// Size (intensity FWHM) of the single-frequency spot on the object,
/// l * delta_lambda / (p cos theta0).
double spot_fwhm(const OpticalBench& bench);

struct ResolutionBudget {
  double delta_lambda = 0;  // m
  double delta_tau1 = 0;    // s, grating term mapped through the dispersion
  double delta_tau2 = 0;    // s, detection-system term (pass-through)
  double delta_x = 0;       // m
};

/// Two-term resolution budget:
/// delta_x = l/(p cos theta0) * sqrt(lambda_s0^2/N^2 + delta_tau2^2/d^2).
ResolutionBudget spatial_resolution(const OpticalBench& bench, double dispersion_total_s_per_m,
                                    double delta_tau2_s);

}  // namespace tqgi
