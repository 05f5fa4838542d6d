#pragma once
#include <Eigen/Core>
#include <functional>
#include <string>

#include "tqgi/bench.hpp"
#include "tqgi/fiber.hpp"
#include "tqgi/spectrum.hpp"

namespace tqgi {

/// Amplitude reflectivity along the illuminating line, r(x) in [0,1],
/// x relative to the line center.
using LineReflectivity = std::function<double(double)>;

enum class G2Provenance { Analytic, Quadrature };

/// Coincidence profile G2(tau). tau is relative to the arrival of a
/// center-band pair: a pair of detuning Omega appears at
/// tau = beta_i2 * L_i * (Omega - Omega0) on the tau = t_s - t_i axis.
struct G2Profile {
  Eigen::ArrayXd tau;     // s, strictly increasing
  Eigen::ArrayXd values;  // arbitrary units, >= 0
  G2Provenance provenance = G2Provenance::Analytic;
};

/// Ratio of the dispersion-induced spread to the transform-limited
/// correlation width, |beta2 L| * B^2 / (2 pi) for band width B.
double dispersion_regime_ratio(const SpectralAmplitude& f, const FiberChannel& idler_fiber);

/// Stationary-phase profile G2(tau) = |f(Omega) r(x_Omega)|^2 at
/// Omega = Omega0 + tau / (beta_i2 L_i). Requires the dispersion spread to
/// exceed 10x the transform-limited width unless enforce_regime is false.
G2Profile g2_analytic(const SpectralAmplitude& f, const LineReflectivity& reflectivity,
                      const OpticalBench& bench, const FiberChannel& idler_fiber,
                      const Eigen::ArrayXd& tau, bool enforce_regime = true);

/// Smallest quadrature point count resolving the chirp phase (< pi advance
/// per step over the whole tau grid), and at least 4x the f grid.
int required_quadrature_points(const SpectralAmplitude& f, const FiberChannel& idler_fiber,
                               const Eigen::ArrayXd& tau);

/// Direct quadrature of |integral dOmega f r exp(j Omega tau - j beta2 L
/// Omega^2 / 2)|^2 with no stationary-phase assumption. Rejects point counts
/// below required_quadrature_points. tau chunks run on parallel workers.
G2Profile g2_bruteforce(const SpectralAmplitude& f, const LineReflectivity& reflectivity,
                        const OpticalBench& bench, const FiberChannel& idler_fiber,
                        const Eigen::ArrayXd& tau, int quadrature_points, int workers = 0);

/// Symmetric tau grid covering the dispersed band with some margin.
Eigen::ArrayXd default_tau_grid(const SpectralAmplitude& f, const FiberChannel& idler_fiber,
                                int points, double margin = 1.3);

/// CSV with header tau_ps,value.
void write_g2_csv(const G2Profile& g2, const std::string& path);

struct OracleComparison {
  std::vector<double> scale_factors;  // dispersion multipliers
  std::vector<double> linf;           // peak-normalized L-infinity deviations
  std::vector<int> points;            // quadrature points used
  bool monotone = false;              // deviations strictly decrease
};

/// Runs g2_bruteforce against g2_analytic at scaled dispersions and reports
/// the peak-normalized deviations.
OracleComparison stationary_phase_oracle(const SpectralAmplitude& f,
                                         const LineReflectivity& reflectivity,
                                         const OpticalBench& bench,
                                         const FiberChannel& idler_fiber,
                                         const std::vector<double>& scale_factors,
                                         int tau_points = 601, int workers = 0);

}  // namespace tqgi
