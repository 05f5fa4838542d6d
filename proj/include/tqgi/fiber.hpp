#pragma once

namespace tqgi {

enum class FiberRole { SignalArm, IdlerArm };

/// Single fiber span with the phase coefficient expanded to second order
/// around the arm's carrier. beta0 is a global phase and never enters any
/// intensity; it is carried only for completeness.
struct FiberChannel {
  double length = 0;               // m
  double beta0 = 0;                // rad/m, unobservable global phase
  double beta1 = 0;                // s/m
  double beta2 = 0;                // s^2/m
  double attenuation_db_per_km = 0;
  double carrier_wavelength = 0;   // m, vacuum wavelength of the arm's center
  FiberRole role = FiberRole::IdlerArm;
};

/// beta2 from a total dispersion d (s per meter of wavelength, over the whole
/// span): beta2 = -d * lambda0^2 / (2 pi c * L).
double beta2_from_dispersion(double dispersion_total_s_per_m, double lambda0_m, double length_m);

/// Total dispersion of the span, d = -(2 pi c / lambda0^2) * beta2 * L.
double dispersion_total(const FiberChannel& fiber);

/// Power transmission 10^(-att_dB_per_km * L_km / 10).
double loss_fraction(const FiberChannel& fiber);

/// Arrival delay of an idler photon of detuning Omega (idler frequency
/// omega_pump - Omega): t = beta1*L + beta2*L*(Omega0 - Omega).
double idler_group_delay(const FiberChannel& fiber, double omega_detuning, double center_detuning);

/// Arrival delay of a signal photon of detuning Omega (signal frequency
/// omega_pump + Omega): t = beta1*L + beta2*L*(Omega - Omega0).
double signal_group_delay(const FiberChannel& fiber, double omega_detuning, double center_detuning);

}  // namespace tqgi
