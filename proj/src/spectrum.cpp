#include "tqgi/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tqgi/constants.hpp"

namespace tqgi {

namespace {

void finalize(SpectralAmplitude& f) {
  const double total = (f.values.abs2().sum()) * f.grid_step;
  if (!(total > 0)) throw std::invalid_argument("spectral amplitude has zero norm");
  f.values /= std::sqrt(total);

  // Guard against a grid that truncates the band: edge intensity must be
  // negligible relative to the peak (delta-like tabulated data has exact zeros
  // at the edges and passes trivially).
  const Eigen::ArrayXd inten = f.values.abs2();
  const double peak = inten.maxCoeff();
  const int n = f.size();
  if (inten[0] > 1e-6 * peak || inten[n - 1] > 1e-6 * peak)
    throw std::invalid_argument("detuning grid too narrow: |f|^2 at edges exceeds 1e-6 of peak");

  f.cdf.resize(n);
  double acc = 0;
  for (int k = 0; k < n; ++k) {
    acc += inten[k] * f.grid_step;
    f.cdf[k] = acc;
  }
}

double measure_band_width(const SpectralAmplitude& f) {
  // Amplitude FWHM from half-maximum crossings of |f|.
  const Eigen::ArrayXd amp = f.values.abs();
  int peak = 0;
  amp.maxCoeff(&peak);
  const double half = amp[peak] / 2.0;
  int lo = peak, hi = peak;
  while (lo > 0 && amp[lo] > half) --lo;
  while (hi < f.size() - 1 && amp[hi] > half) ++hi;
  auto cross = [&](int a, int b) {
    if (amp[a] == amp[b]) return f.detuning_at(a);
    const double t = (half - amp[a]) / (amp[b] - amp[a]);
    return f.detuning_at(a) + t * (f.detuning_at(b) - f.detuning_at(a));
  };
  return cross(hi, hi - 1) - cross(lo, lo + 1);
}

}  // namespace

Eigen::ArrayXd SpectralAmplitude::detunings() const {
  return grid_start + grid_step * Eigen::ArrayXd::LinSpaced(size(), 0, size() - 1);
}

Eigen::ArrayXd SpectralAmplitude::intensity() const { return values.abs2(); }

double SpectralAmplitude::intensity_at(double omega_detuning) const {
  const double pos = (omega_detuning - grid_start) / grid_step;
  if (pos < 0 || pos > size() - 1) return 0.0;
  const int k = std::min(static_cast<int>(pos), size() - 2);
  const double t = pos - k;
  const double a = std::norm(values[k]);
  const double b = std::norm(values[k + 1]);
  return a + t * (b - a);
}

double SpectralAmplitude::signal_center_wavelength() const {
  return wavelength_from_omega(omega_pump + center_detuning);
}

double SpectralAmplitude::idler_center_wavelength() const {
  return wavelength_from_omega(omega_pump - center_detuning);
}

SpectralAmplitude make_spectral_amplitude(SpectralShape shape, double lambda_signal_m,
                                          double lambda_idler_m, double bandwidth_m,
                                          int grid_points, int flattop_order,
                                          std::optional<double> pump_wavelength_m) {
  if (!(bandwidth_m > 0)) throw std::invalid_argument("bandwidth must be positive");
  if (grid_points < 64) throw std::invalid_argument("grid_points must be at least 64");
  if (!(lambda_signal_m > 0) || !(lambda_signal_m < lambda_idler_m))
    throw std::invalid_argument("need 0 < signal wavelength < idler wavelength");
  if (shape == SpectralShape::Tabulated)
    throw std::invalid_argument("use read_spectrum_csv / make_tabulated_amplitude for tabulated shapes");
  if (flattop_order < 1) throw std::invalid_argument("flattop order must be >= 1");

  const double omega_s = omega_from_wavelength(lambda_signal_m);
  const double omega_i = omega_from_wavelength(lambda_idler_m);
  const double omega_pump = 0.5 * (omega_s + omega_i);
  if (pump_wavelength_m) {
    const double given = omega_from_wavelength(*pump_wavelength_m);
    if (std::abs(given - omega_pump) > 1e-9 * omega_pump)
      throw std::invalid_argument(
          "pump wavelength is not the frequency midpoint of the signal/idler centers");
  }

  SpectralAmplitude f;
  f.shape = shape;
  f.flattop_order = (shape == SpectralShape::Gaussian) ? 1 : flattop_order;
  f.omega_pump = omega_pump;
  f.center_detuning = 0.5 * (omega_s - omega_i);
  // Signal-side wavelength span -> detuning span.
  f.band_width = 2.0 * k_pi * k_speed_of_light * bandwidth_m / (lambda_signal_m * lambda_signal_m);

  // Half-span where |f|^2 has fallen to 1e-8 of the peak, so the edge
  // invariant holds with margin.
  const double p2m = 2.0 * f.flattop_order;
  const double edge = std::pow(std::log(1e8) / (2.0 * std::log(2.0)), 1.0 / p2m);
  const double half_span = 0.5 * f.band_width * std::max(edge, 1.05);

  f.grid_step = 2.0 * half_span / (grid_points - 1);
  f.grid_start = f.center_detuning - half_span;
  f.values.resize(grid_points);
  const double ln2 = std::log(2.0);
  for (int k = 0; k < grid_points; ++k) {
    const double u = 2.0 * (f.detuning_at(k) - f.center_detuning) / f.band_width;
    f.values[k] = std::exp(-ln2 * std::pow(std::abs(u), p2m));
  }
  finalize(f);
  return f;
}

SpectralAmplitude make_tabulated_amplitude(double omega_pump, double grid_start,
                                           double grid_step, const Eigen::ArrayXcd& values) {
  if (values.size() < 2) throw std::invalid_argument("tabulated amplitude needs >= 2 samples");
  if (!(grid_step > 0)) throw std::invalid_argument("grid step must be positive");
  SpectralAmplitude f;
  f.shape = SpectralShape::Tabulated;
  f.omega_pump = omega_pump;
  f.grid_start = grid_start;
  f.grid_step = grid_step;
  f.values = values;
  f.center_detuning = grid_start + 0.5 * grid_step * (values.size() - 1);
  finalize(f);
  f.band_width = measure_band_width(f);
  return f;
}

double sample_detuning(const SpectralAmplitude& f, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double u = uni(rng) * f.cdf[f.size() - 1];
  const double* begin = f.cdf.data();
  const double* end = begin + f.size();
  const int k = static_cast<int>(std::upper_bound(begin, end, u) - begin);
  const int bin = std::min(k, f.size() - 1);
  const double lo = bin > 0 ? f.cdf[bin - 1] : 0.0;
  const double w = f.cdf[bin] - lo;
  const double frac = w > 0 ? (u - lo) / w : 0.5;
  return f.detuning_at(bin) + (frac - 0.5) * f.grid_step;
}

void write_spectrum_csv(const SpectralAmplitude& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "detuning_rad_s,re,im\n";
  out.precision(17);
  for (int k = 0; k < f.size(); ++k)
    out << f.detuning_at(k) << ',' << f.values[k].real() << ',' << f.values[k].imag() << '\n';
}

SpectralAmplitude read_spectrum_csv(const std::string& path, double omega_pump) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("detuning_rad_s,re,im", 0) != 0)
    throw std::runtime_error(path + ": expected header detuning_rad_s,re,im");
  std::vector<double> om, re, im;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    double a, b, c;
    char c1, c2;
    if (!(ss >> a >> c1 >> b >> c2 >> c) || c1 != ',' || c2 != ',')
      throw std::runtime_error(path + ": malformed row '" + line + "'");
    om.push_back(a);
    re.push_back(b);
    im.push_back(c);
  }
  if (om.size() < 2) throw std::runtime_error(path + ": too few samples");
  const double step = om[1] - om[0];
  for (size_t k = 1; k < om.size(); ++k)
    if (std::abs(om[k] - om[k - 1] - step) > 1e-6 * std::abs(step))
      throw std::runtime_error(path + ": detuning grid is not uniform");
  Eigen::ArrayXcd values(om.size());
  for (size_t k = 0; k < om.size(); ++k) values[k] = {re[k], im[k]};
  return make_tabulated_amplitude(omega_pump, om[0], step, values);
}

}  // namespace tqgi
