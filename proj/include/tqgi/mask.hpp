#pragma once
#include <Eigen/Core>
#include <string>

#include "tqgi/bench.hpp"
#include "tqgi/g2.hpp"

namespace tqgi {

/// Amplitude-reflectivity raster. Pixel (row, col) is centered at
/// (origin_y + row*pitch_y, origin_x + col*pitch_x); the generators center
/// the pattern on the illuminating line (x = 0).
struct ObjectMask {
  Eigen::ArrayXXd reflectivity;  // rows x cols, values in [0,1]
  double pitch_x = 0;            // m/pixel
  double pitch_y = 0;            // m/pixel
  double origin_x = 0;           // m, center of column 0
  double origin_y = 0;           // m, center of row 0

  int rows() const { return static_cast<int>(reflectivity.rows()); }
  int cols() const { return static_cast<int>(reflectivity.cols()); }
  double width() const { return cols() * pitch_x; }
  double height() const { return rows() * pitch_y; }
};

/// Nearest-neighbor amplitude at a physical point; 0 outside the raster.
double sample_reflectivity(const ObjectMask& mask, double x_m, double y_m);

/// PGM P2/P5, maxval 255; gray/255 is the amplitude reflectivity.
ObjectMask load_mask(const std::string& path, double pitch_m);
void write_mask_pgm(const ObjectMask& mask, const std::string& path);

// Built-in patterns (all centered on x = 0, y spanning [0, height)).
ObjectMask make_mirror(double width_m, double height_m, double pitch_m);
/// Two full-height rectangles; the pair spans `pattern_width` with `gap`
/// between them, centered in a wider canvas.
ObjectMask make_bars(double pattern_width, double height_m, double gap,
                     double canvas_width, double pitch_m);
ObjectMask make_narrow_line(double line_width, double canvas_width, double height_m,
                            double pitch_m);
ObjectMask make_checker(double period, double width_m, double height_m, double pitch_m);
ObjectMask make_two_slits(double separation, double slit_width, double canvas_width,
                          double height_m, double pitch_m);

/// Nearest-neighbor cut through the mask at scan height y; x is relative to
/// the line center. 0 outside the raster.
LineReflectivity reflectivity_along_line(const ObjectMask& mask, double row_offset_y,
                                         const OpticalBench& bench);

/// Gaussian amplitude smoothing of a line cut, kernel sized so that a point
/// reflector images with intensity FWHM `intensity_fwhm`. Used where the
/// illumination spot, not the mask artwork, sets the finest feature.
LineReflectivity smoothed_reflectivity(const LineReflectivity& r, double intensity_fwhm,
                                       double extent);

struct ScanPlan {
  double step = 0;          // m, row pitch
  int rows = 0;
  double line_length = 0;   // m
  double sample_pitch = 0;  // m, x binning of extracted profiles
  double y_start = 0;       // m, center of the first scanned row
};

/// Rows covering the mask height at the given step; the line length comes
/// from the bench's declared band.
ScanPlan make_scan_plan(const ObjectMask& mask, const OpticalBench& bench, double step,
                        double sample_pitch);

}  // namespace tqgi
