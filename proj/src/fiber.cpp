#include "tqgi/fiber.hpp"

#include <cmath>
#include <stdexcept>

#include "tqgi/constants.hpp"

namespace tqgi {

double beta2_from_dispersion(double dispersion_total_s_per_m, double lambda0_m, double length_m) {
  if (!(lambda0_m > 0)) throw std::invalid_argument("carrier wavelength must be positive");
  if (!(length_m > 0)) throw std::invalid_argument("fiber length must be positive");
  return -dispersion_total_s_per_m * lambda0_m * lambda0_m /
         (2.0 * k_pi * k_speed_of_light * length_m);
}

double dispersion_total(const FiberChannel& fiber) {
  if (!(fiber.carrier_wavelength > 0))
    throw std::invalid_argument("fiber carrier wavelength not set");
  return -2.0 * k_pi * k_speed_of_light * fiber.beta2 * fiber.length /
         (fiber.carrier_wavelength * fiber.carrier_wavelength);
}

double loss_fraction(const FiberChannel& fiber) {
  return std::pow(10.0, -fiber.attenuation_db_per_km * (fiber.length / 1000.0) / 10.0);
}

double idler_group_delay(const FiberChannel& fiber, double omega_detuning,
                         double center_detuning) {
  if (fiber.role != FiberRole::IdlerArm)
    throw std::invalid_argument("idler_group_delay needs an idler-arm fiber");
  return fiber.beta1 * fiber.length +
         fiber.beta2 * fiber.length * (center_detuning - omega_detuning);
}

double signal_group_delay(const FiberChannel& fiber, double omega_detuning,
                          double center_detuning) {
  return fiber.beta1 * fiber.length +
         fiber.beta2 * fiber.length * (omega_detuning - center_detuning);
}

}  // namespace tqgi
