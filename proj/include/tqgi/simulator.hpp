#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "tqgi/bench.hpp"
#include "tqgi/detector.hpp"
#include "tqgi/fiber.hpp"
#include "tqgi/g2.hpp"
#include "tqgi/mask.hpp"
#include "tqgi/spectrum.hpp"

namespace tqgi {

/// Piecewise-linear temperature vs run time, clamped at the ends.
struct TemperatureProfile {
  std::vector<std::pair<double, double>> points;  // (t_s, deg C), t increasing

  double at(double t) const;
  bool constant() const;
};

struct SimConfig {
  double rep_rate = 40e6;             // Hz
  double mean_pairs_per_pulse = 0.0;  // mu
  double duration = 0.0;              // s, per scan row
  std::uint64_t seed = 0;
  double pulse_width = 3.7e-12;       // s, FWHM of the pair emission time
  FiberChannel signal_fiber;
  FiberChannel idler_fiber;
  double drift_coefficient = 4e-14;   // s per (deg C * m), idler-arm length drift
  TemperatureProfile temperature;     // default: constant 0
  int workers = 0;                    // 0 = hardware concurrency
  bool record_truth = false;
};

/// Sorted, recorder-quantized detection times of one channel.
struct TimestampStream {
  int channel = 0;  // 0 = signal, 1 = idler
  double bin_width = 164.61e-12;
  std::vector<std::int64_t> bins;
};

struct TruthRecord {
  std::int64_t pulse = 0;
  double detuning = 0;  // rad/s
  bool signal_detected = false;
  bool idler_detected = false;
};

struct RowResult {
  TimestampStream signal;
  TimestampStream idler;
  std::vector<TruthRecord> truth;
};

/// Deterministic per-(row, block) generator seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t row, std::uint64_t block);

/// Monte Carlo forward model for one scan row. Pulse blocks of fixed size are
/// generated on independent, deterministically seeded streams, so the result
/// is identical for any worker count.
RowResult simulate_row(const SimConfig& config, const SpectralAmplitude& f,
                       const OpticalBench& bench, const LineReflectivity& reflectivity,
                       const DetectorModel& signal_detector, const DetectorModel& idler_detector,
                       std::uint64_t row_index = 0);

/// simulate_row per plan row, with row-specific line cuts and derived seeds.
std::vector<RowResult> simulate_scan(const SimConfig& config, const SpectralAmplitude& f,
                                     const OpticalBench& bench, const ObjectMask& mask,
                                     const ScanPlan& plan, const DetectorModel& signal_detector,
                                     const DetectorModel& idler_detector);

}  // namespace tqgi
