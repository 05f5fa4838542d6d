#include "tqgi/g2.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tqgi/constants.hpp"

namespace tqgi {

namespace {

void check_tau_grid(const Eigen::ArrayXd& tau) {
  if (tau.size() < 2) throw std::invalid_argument("tau grid needs >= 2 points");
  for (int i = 1; i < tau.size(); ++i)
    if (!(tau[i] > tau[i - 1])) throw std::invalid_argument("tau grid must be strictly increasing");
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

double dispersion_regime_ratio(const SpectralAmplitude& f, const FiberChannel& idler_fiber) {
  const double s = std::abs(idler_fiber.beta2 * idler_fiber.length);
  return s * f.band_width * f.band_width / (2.0 * k_pi);
}

G2Profile g2_analytic(const SpectralAmplitude& f, const LineReflectivity& reflectivity,
                      const OpticalBench& bench, const FiberChannel& idler_fiber,
                      const Eigen::ArrayXd& tau, bool enforce_regime) {
  check_tau_grid(tau);
  const double s = idler_fiber.beta2 * idler_fiber.length;
  if (s == 0.0)
    throw std::invalid_argument("stationary-phase profile undefined for zero dispersion; "
                                "use g2_bruteforce");
  if (enforce_regime) {
    const double ratio = dispersion_regime_ratio(f, idler_fiber);
    if (ratio < 10.0)
      throw std::invalid_argument(
          "dispersion spread is only " + std::to_string(ratio) +
          "x the transform-limited width (< 10x); the stationary-phase form does not apply, "
          "use g2_bruteforce");
  }

  G2Profile g2;
  g2.provenance = G2Provenance::Analytic;
  g2.tau = tau;
  g2.values.resize(tau.size());
  for (int i = 0; i < tau.size(); ++i) {
    const double omega = f.center_detuning + tau[i] / s;
    const double r = reflectivity(position_of_detuning(bench, omega));
    g2.values[i] = f.intensity_at(omega) * r * r;
  }
  return g2;
}

int required_quadrature_points(const SpectralAmplitude& f, const FiberChannel& idler_fiber,
                               const Eigen::ArrayXd& tau) {
  const double s = idler_fiber.beta2 * idler_fiber.length;
  const double span = f.grid_end() - f.grid_start;
  const double u_lo = f.grid_start - f.center_detuning;
  const double u_hi = f.grid_end() - f.center_detuning;
  double rate = 0.0;  // max |d phase / du| = max |tau - s u| over grid corners
  for (const double t : {tau[0], tau[tau.size() - 1]})
    for (const double u : {u_lo, u_hi}) rate = std::max(rate, std::abs(t - s * u));
  const double nyquist = std::ceil(rate * span / k_pi) + 1;
  return static_cast<int>(std::max<double>(nyquist, 4.0 * f.size()));
}

G2Profile g2_bruteforce(const SpectralAmplitude& f, const LineReflectivity& reflectivity,
                        const OpticalBench& bench, const FiberChannel& idler_fiber,
                        const Eigen::ArrayXd& tau, int quadrature_points, int workers) {
  check_tau_grid(tau);
  const int needed = required_quadrature_points(f, idler_fiber, tau);
  if (quadrature_points < needed)
    throw std::invalid_argument("chirp phase advances more than pi per quadrature step: need >= " +
                                std::to_string(needed) + " points, got " +
                                std::to_string(quadrature_points));

  const double s = idler_fiber.beta2 * idler_fiber.length;
  const int n = quadrature_points;
  const double u_lo = f.grid_start - f.center_detuning;
  const double du = (f.grid_end() - f.grid_start) / (n - 1);

  // tau-independent part of the integrand: f(Omega) r(x_Omega) e^{-j s u^2/2}.
  Eigen::ArrayXcd g(n);
  for (int k = 0; k < n; ++k) {
    const double u = u_lo + k * du;
    const double omega = f.center_detuning + u;
    const double pos = (omega - f.grid_start) / f.grid_step;
    std::complex<double> fv = 0.0;
    if (pos >= 0 && pos <= f.size() - 1) {
      const int j = std::min(static_cast<int>(pos), f.size() - 2);
      const double t = pos - j;
      fv = f.values[j] + t * (f.values[j + 1] - f.values[j]);
    }
    const double r = reflectivity(position_of_detuning(bench, omega));
    const double phase = -0.5 * s * u * u;
    g[k] = fv * r * std::polar(1.0, phase);
  }
  g[0] *= 0.5;  // trapezoid end weights
  g[n - 1] *= 0.5;

  G2Profile out;
  out.provenance = G2Provenance::Quadrature;
  out.tau = tau;
  out.values.resize(tau.size());

  // Per tau: |sum_k g_k e^{j u_k tau}|^2 via a phasor recurrence, renormalized
  // periodically to bound the accumulated rounding drift.
  auto run = [&](int i0, int i1) {
    for (int i = i0; i < i1; ++i) {
      const double t = tau[i];
      const std::complex<double> step = std::polar(1.0, du * t);
      std::complex<double> ph = std::polar(1.0, u_lo * t);
      std::complex<double> acc = 0.0;
      for (int k = 0; k < n; ++k) {
        acc += g[k] * ph;
        ph *= step;
        if ((k & 0xfff) == 0xfff) ph = std::polar(1.0, (u_lo + (k + 1) * du) * t);
      }
      out.values[i] = std::norm(acc) * du * du;
    }
  };

  const int nw = std::min<int>(resolve_workers(workers), static_cast<int>(tau.size()));
  if (nw <= 1) {
    run(0, static_cast<int>(tau.size()));
  } else {
    std::vector<std::future<void>> jobs;
    const int chunk = (static_cast<int>(tau.size()) + nw - 1) / nw;
    for (int w = 0; w < nw; ++w) {
      const int i0 = w * chunk;
      const int i1 = std::min<int>(i0 + chunk, static_cast<int>(tau.size()));
      if (i0 >= i1) break;
      jobs.push_back(std::async(std::launch::async, run, i0, i1));
    }
    for (auto& j : jobs) j.get();
  }
  return out;
}

Eigen::ArrayXd default_tau_grid(const SpectralAmplitude& f, const FiberChannel& idler_fiber,
                                int points, double margin) {
  const double s = std::abs(idler_fiber.beta2 * idler_fiber.length);
  const double half = 0.5 * margin * s * (f.grid_end() - f.grid_start);
  return Eigen::ArrayXd::LinSpaced(points, -half, half);
}

void write_g2_csv(const G2Profile& g2, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "tau_ps,value\n";
  out.precision(12);
  for (int i = 0; i < g2.tau.size(); ++i)
    out << g2.tau[i] * 1e12 << ',' << g2.values[i] << '\n';
}

OracleComparison stationary_phase_oracle(const SpectralAmplitude& f,
                                         const LineReflectivity& reflectivity,
                                         const OpticalBench& bench,
                                         const FiberChannel& idler_fiber,
                                         const std::vector<double>& scale_factors,
                                         int tau_points, int workers) {
  OracleComparison cmp;
  cmp.scale_factors = scale_factors;
  for (const double scale : scale_factors) {
    FiberChannel fiber = idler_fiber;
    fiber.beta2 *= scale;
    const Eigen::ArrayXd tau = default_tau_grid(f, fiber, tau_points);
    const int points = required_quadrature_points(f, fiber, tau);
    const G2Profile a = g2_analytic(f, reflectivity, bench, fiber, tau, false);
    const G2Profile b = g2_bruteforce(f, reflectivity, bench, fiber, tau, points, workers);
    const double pa = a.values.maxCoeff();
    const double pb = b.values.maxCoeff();
    double linf = 0.0;
    if (pa > 0 && pb > 0)
      linf = ((a.values / pa) - (b.values / pb)).abs().maxCoeff();
    else if (pa != pb)
      linf = 1.0;
    cmp.linf.push_back(linf);
    cmp.points.push_back(points);
  }
  cmp.monotone = true;
  for (size_t i = 1; i < cmp.linf.size(); ++i)
    if (!(cmp.linf[i] < cmp.linf[i - 1])) cmp.monotone = false;
  return cmp;
}

}  // namespace tqgi
