#pragma once
#include <cmath>

namespace tqgi {

inline constexpr double k_speed_of_light = 299792458.0;  // m/s, vacuum
inline constexpr double k_pi = 3.14159265358979323846;
inline constexpr double k_fwhm_per_sigma = 2.3548200450309493;  // 2*sqrt(2 ln 2)

inline double omega_from_wavelength(double lambda_m) {
  return 2.0 * k_pi * k_speed_of_light / lambda_m;
}

inline double wavelength_from_omega(double omega_rad_s) {
  return 2.0 * k_pi * k_speed_of_light / omega_rad_s;
}

}  // namespace tqgi
