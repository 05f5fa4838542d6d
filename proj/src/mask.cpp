#include "tqgi/mask.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tqgi/constants.hpp"

namespace tqgi {

namespace {

ObjectMask blank(double width_m, double height_m, double pitch_m) {
  if (!(pitch_m > 0)) throw std::invalid_argument("mask pitch must be positive");
  const int cols = std::max(1, static_cast<int>(std::lround(width_m / pitch_m)));
  const int rows = std::max(1, static_cast<int>(std::lround(height_m / pitch_m)));
  ObjectMask m;
  m.reflectivity = Eigen::ArrayXXd::Zero(rows, cols);
  m.pitch_x = m.pitch_y = pitch_m;
  m.origin_x = -0.5 * (cols - 1) * pitch_m;  // centered on x = 0
  m.origin_y = 0.5 * pitch_m;
  return m;
}

void fill_x_range(ObjectMask& m, double x0, double x1, double value) {
  for (int c = 0; c < m.cols(); ++c) {
    const double x = m.origin_x + c * m.pitch_x;
    if (x >= x0 && x <= x1) m.reflectivity.col(c).setConstant(value);
  }
}

int read_pgm_token(std::istream& in) {
  // Skips whitespace and # comments.
  while (true) {
    int c = in.peek();
    if (c == '#') {
      std::string dummy;
      std::getline(in, dummy);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      break;
    }
  }
  int v;
  if (!(in >> v)) throw std::runtime_error("malformed PGM header");
  return v;
}

}  // namespace

double sample_reflectivity(const ObjectMask& mask, double x_m, double y_m) {
  const long c = std::lround((x_m - mask.origin_x) / mask.pitch_x);
  const long r = std::lround((y_m - mask.origin_y) / mask.pitch_y);
  if (c < 0 || c >= mask.cols() || r < 0 || r >= mask.rows()) return 0.0;
  return mask.reflectivity(r, c);
}

ObjectMask load_mask(const std::string& path, double pitch_m) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string magic;
  in >> magic;
  if (magic != "P2" && magic != "P5") throw std::runtime_error(path + ": not a P2/P5 PGM");
  const int cols = read_pgm_token(in);
  const int rows = read_pgm_token(in);
  const int maxval = read_pgm_token(in);
  if (cols <= 0 || rows <= 0) throw std::runtime_error(path + ": zero-sized PGM");
  if (maxval != 255) throw std::runtime_error(path + ": PGM maxval must be 255");

  ObjectMask m = blank(cols * pitch_m, rows * pitch_m, pitch_m);
  if (magic == "P2") {
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        int v;
        if (!(in >> v)) throw std::runtime_error(path + ": truncated P2 data");
        if (v < 0 || v > 255) throw std::runtime_error(path + ": pixel out of range");
        m.reflectivity(r, c) = v / 255.0;
      }
  } else {
    in.get();  // single whitespace after maxval
    std::vector<unsigned char> buf(static_cast<size_t>(rows) * cols);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() != static_cast<std::streamsize>(buf.size()))
      throw std::runtime_error(path + ": truncated P5 data");
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        m.reflectivity(r, c) = buf[static_cast<size_t>(r) * cols + c] / 255.0;
  }
  return m;
}

void write_mask_pgm(const ObjectMask& mask, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "P2\n" << mask.cols() << ' ' << mask.rows() << "\n255\n";
  for (int r = 0; r < mask.rows(); ++r) {
    for (int c = 0; c < mask.cols(); ++c) {
      out << static_cast<int>(std::lround(mask.reflectivity(r, c) * 255.0));
      out << (c + 1 == mask.cols() ? '\n' : ' ');
    }
  }
}

ObjectMask make_mirror(double width_m, double height_m, double pitch_m) {
  ObjectMask m = blank(width_m, height_m, pitch_m);
  m.reflectivity.setConstant(1.0);
  return m;
}

ObjectMask make_bars(double pattern_width, double height_m, double gap, double canvas_width,
                     double pitch_m) {
  if (!(gap >= 0 && gap < pattern_width))
    throw std::invalid_argument("bars: need 0 <= gap < pattern width");
  ObjectMask m = blank(std::max(canvas_width, pattern_width), height_m, pitch_m);
  const double bar = 0.5 * (pattern_width - gap);
  fill_x_range(m, -0.5 * pattern_width, -0.5 * pattern_width + bar, 1.0);
  fill_x_range(m, 0.5 * pattern_width - bar, 0.5 * pattern_width, 1.0);
  return m;
}

ObjectMask make_narrow_line(double line_width, double canvas_width, double height_m,
                            double pitch_m) {
  ObjectMask m = blank(canvas_width, height_m, pitch_m);
  fill_x_range(m, -0.5 * line_width, 0.5 * line_width, 1.0);
  return m;
}

ObjectMask make_checker(double period, double width_m, double height_m, double pitch_m) {
  if (!(period > 0)) throw std::invalid_argument("checker period must be positive");
  ObjectMask m = blank(width_m, height_m, pitch_m);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const double x = m.origin_x + c * m.pitch_x;
      const double y = m.origin_y + r * m.pitch_y;
      const long ix = static_cast<long>(std::floor(x / period + 1e4));
      const long iy = static_cast<long>(std::floor(y / period));
      m.reflectivity(r, c) = ((ix + iy) & 1) ? 0.0 : 1.0;
    }
  return m;
}

ObjectMask make_two_slits(double separation, double slit_width, double canvas_width,
                          double height_m, double pitch_m) {
  ObjectMask m = blank(canvas_width, height_m, pitch_m);
  for (const double center : {-0.5 * separation, 0.5 * separation})
    fill_x_range(m, center - 0.5 * slit_width, center + 0.5 * slit_width, 1.0);
  return m;
}

LineReflectivity reflectivity_along_line(const ObjectMask& mask, double row_offset_y,
                                         const OpticalBench& bench) {
  (void)bench;  // geometry is centered; the bench fixes only the line extent
  return [mask, row_offset_y](double x) { return sample_reflectivity(mask, x, row_offset_y); };
}

LineReflectivity smoothed_reflectivity(const LineReflectivity& r, double intensity_fwhm,
                                       double extent) {
  if (!(intensity_fwhm > 0)) return r;
  // Amplitude kernel whose squared magnitude has the requested FWHM.
  const double sigma = intensity_fwhm / (2.0 * std::sqrt(std::log(2.0)));
  const double pitch = sigma / 4.0;
  const double pad = 5.0 * sigma;
  const int n = static_cast<int>(std::ceil((extent + 2 * pad) / pitch)) + 1;
  const double x0 = -0.5 * extent - pad;
  const int half = static_cast<int>(std::ceil(4.0 * sigma / pitch));

  std::vector<double> kernel(2 * half + 1);
  double norm = 0;
  for (int k = -half; k <= half; ++k) {
    kernel[k + half] = std::exp(-0.5 * (k * pitch) * (k * pitch) / (sigma * sigma));
    norm += kernel[k + half];
  }
  for (double& v : kernel) v /= norm;

  std::vector<double> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = r(x0 + i * pitch);
  auto smooth = std::make_shared<std::vector<double>>(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0;
    for (int k = -half; k <= half; ++k) {
      const int j = i + k;
      if (j >= 0 && j < n) acc += kernel[k + half] * raw[j];
    }
    (*smooth)[i] = acc;
  }

  return [smooth, x0, pitch, n](double x) {
    const double pos = (x - x0) / pitch;
    if (pos < 0 || pos > n - 1) return 0.0;
    const int i = std::min(static_cast<int>(pos), n - 2);
    const double t = pos - i;
    return (*smooth)[i] + t * ((*smooth)[i + 1] - (*smooth)[i]);
  };
}

ScanPlan make_scan_plan(const ObjectMask& mask, const OpticalBench& bench, double step,
                        double sample_pitch) {
  if (!(step > 0)) throw std::invalid_argument("scan step must be positive");
  ScanPlan plan;
  plan.step = step;
  plan.line_length = line_length(bench);
  plan.sample_pitch = sample_pitch > 0 ? sample_pitch : mask.pitch_x;
  if (step > mask.height()) {
    std::cerr << "warning: scan step " << step * 1e6 << " um exceeds mask height "
              << mask.height() * 1e6 << " um; single-row plan\n";
    plan.rows = 1;
  } else {
    plan.rows = static_cast<int>(std::ceil(mask.height() / step - 1e-9));
  }
  plan.y_start = mask.origin_y - 0.5 * mask.pitch_y + 0.5 * step;
  return plan;
}

}  // namespace tqgi
