#include "tqgi/bench.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tqgi/constants.hpp"

namespace tqgi {

namespace {

double dispersion_scale(const OpticalBench& b) {
  // dx/dOmega magnitude of the linearized map: 2 pi c l / (omega_s0^2 p cos theta0).
  const double omega_s0 = b.omega_pump + b.center_detuning;
  return 2.0 * k_pi * k_speed_of_light * b.focal_length /
         (omega_s0 * omega_s0 * b.grating_period * std::cos(b.theta_center));
}

}  // namespace

OpticalBench make_bench(const BenchParams& p) {
  if (!(p.grating_period > 0)) throw std::invalid_argument("grating period must be positive");
  if (!(p.focal_length > 0)) throw std::invalid_argument("focal length must be positive");
  if (!(p.grooves >= 1)) throw std::invalid_argument("groove count must be >= 1");
  if (!(p.lambda_signal > 0) || !(p.lambda_signal < p.lambda_idler))
    throw std::invalid_argument("need 0 < signal wavelength < idler wavelength");
  if (p.theta_incident.has_value() == p.theta_center.has_value())
    throw std::invalid_argument("specify exactly one of incident angle / center diffraction angle");

  OpticalBench b;
  b.grating_period = p.grating_period;
  b.grooves = p.grooves;
  b.focal_length = p.focal_length;
  b.lambda_signal = p.lambda_signal;
  b.lambda_idler = p.lambda_idler;
  b.band_width_m = p.band_width_m;
  b.beam_diameter = p.beam_diameter;
  b.exact_mapping = p.exact_mapping;
  b.spot_psf = p.spot_psf;

  const double omega_s = omega_from_wavelength(p.lambda_signal);
  const double omega_i = omega_from_wavelength(p.lambda_idler);
  b.omega_pump = 0.5 * (omega_s + omega_i);
  b.center_detuning = 0.5 * (omega_s - omega_i);

  if (p.theta_incident) {
    b.theta_incident = *p.theta_incident;
    const double s = p.lambda_signal / p.grating_period + std::sin(b.theta_incident);
    if (std::abs(s) > 1.0)
      throw std::invalid_argument("no first diffraction order at the signal center");
    b.theta_center = std::asin(s);
  } else {
    b.theta_center = *p.theta_center;
    const double s = std::sin(b.theta_center) - p.lambda_signal / p.grating_period;
    if (std::abs(s) > 1.0)
      throw std::invalid_argument("center diffraction angle incompatible with the grating period");
    b.theta_incident = std::asin(s);
  }

  const double residual = b.grating_period * (std::sin(b.theta_center) - std::sin(b.theta_incident)) -
                          b.lambda_signal;
  if (std::abs(residual) > 1e-12)
    throw std::invalid_argument("grating equation residual exceeds 1e-12 m");

  if (b.band_width_m > 0) {
    for (const double lam : {b.lambda_signal - 0.5 * b.band_width_m,
                             b.lambda_signal + 0.5 * b.band_width_m})
      diffraction_angle(b, lam);  // throws on an evanescent order
  }
  return b;
}

double diffraction_angle(const OpticalBench& bench, double lambda_m) {
  const double s = lambda_m / bench.grating_period + std::sin(bench.theta_incident);
  if (std::abs(s) > 1.0)
    throw std::invalid_argument("evanescent order: |lambda/p + sin theta_i| > 1 at lambda = " +
                                std::to_string(lambda_m * 1e9) + " nm");
  return std::asin(s);
}

double position_of_detuning(const OpticalBench& bench, double omega_detuning) {
  if (bench.exact_mapping) {
    const double lambda = wavelength_from_omega(bench.omega_pump + omega_detuning);
    return bench.focal_length * std::tan(diffraction_angle(bench, lambda) - bench.theta_center);
  }
  return -dispersion_scale(bench) * (omega_detuning - bench.center_detuning);
}

double detuning_of_position(const OpticalBench& bench, double x_m) {
  if (bench.exact_mapping) {
    const double theta = std::atan(x_m / bench.focal_length) + bench.theta_center;
    const double lambda = bench.grating_period * (std::sin(theta) - std::sin(bench.theta_incident));
    if (!(lambda > 0)) throw std::invalid_argument("position maps to a non-physical wavelength");
    return omega_from_wavelength(lambda) - bench.omega_pump;
  }
  return bench.center_detuning - x_m / dispersion_scale(bench);
}

bool position_in_band(const OpticalBench& bench, double x_m) {
  return std::abs(x_m) <= 0.5 * line_length(bench);
}

double line_length(const OpticalBench& bench) {
  const double half = 0.5 * 2.0 * k_pi * k_speed_of_light * bench.band_width_m /
                      (bench.lambda_signal * bench.lambda_signal);
  return std::abs(position_of_detuning(bench, bench.center_detuning - half) -
                  position_of_detuning(bench, bench.center_detuning + half));
}

double delay_of_position(const OpticalBench& bench, const FiberChannel& idler_fiber, double dx_m) {
  const double d = dispersion_total(idler_fiber);
  const double r = bench.lambda_idler / bench.lambda_signal;
  return -r * r * bench.grating_period * d * std::cos(bench.theta_center) * dx_m /
         bench.focal_length;
}

double tau_per_meter(const OpticalBench& bench, const FiberChannel& idler_fiber) {
  return -idler_fiber.beta2 * idler_fiber.length / dispersion_scale(bench);
}

double resolving_power(const OpticalBench& bench) { return bench.lambda_signal / bench.grooves; }

double spot_fwhm(const OpticalBench& bench) {
  return bench.focal_length * resolving_power(bench) /
         (bench.grating_period * std::cos(bench.theta_center));
}

ResolutionBudget spatial_resolution(const OpticalBench& bench, double dispersion_total_s_per_m,
                                    double delta_tau2_s) {
  if (!(dispersion_total_s_per_m > 0))
    throw std::invalid_argument("resolution budget undefined for zero dispersion");
  ResolutionBudget r;
  r.delta_lambda = resolving_power(bench);
  r.delta_tau1 = r.delta_lambda * dispersion_total_s_per_m;
  r.delta_tau2 = delta_tau2_s;
  const double dl_jitter = delta_tau2_s / dispersion_total_s_per_m;
  r.delta_x = bench.focal_length /
              (bench.grating_period * std::cos(bench.theta_center)) *
              std::sqrt(r.delta_lambda * r.delta_lambda + dl_jitter * dl_jitter);
  return r;
}

}  // namespace tqgi
