#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finrel/types.hpp"

namespace finrel {

struct IntRange {
  Count first = 0;
  Count last = 0;  // inclusive
};

// Assurance in percent for zero-or-more failures, one row per n and one column
// per m, with an optional trailing column for an unbounded population.
struct AssuranceTable {
  Count f = 0;
  std::vector<Count> n_values;
  std::vector<Count> m_values;
  bool has_infinite = false;
  std::vector<double> cells;  // row-major, percent, unrounded

  [[nodiscard]] std::size_t columns() const noexcept { return m_values.size() + (has_infinite ? 1 : 0); }
  [[nodiscard]] double at(std::size_t row, std::size_t col) const { return cells.at(row * columns() + col); }
  // The unbounded-population column of a row. Requires has_infinite.
  [[nodiscard]] double infinite_at(std::size_t row) const { return at(row, m_values.size()); }
};

inline constexpr IntRange kDefaultTableRows{3, 22};
inline constexpr IntRange kDefaultTableColumns{1, 10};

// Cell (n, m) = 100 * assurance_finite(n, f, m); the infinite column uses
// assurance_infinite. Throws DomainError naming the first infeasible cell.
AssuranceTable assurance_table(IntRange n_range = kDefaultTableRows, IntRange m_range = kDefaultTableColumns,
                               bool include_infinite = true, Count f = 0);

// One decimal, e.g. 0.75 -> "75.0". Ties on the binary value of 100*fraction
// round to even, as printf does: 0.8125 -> "81.2", 0.9375 -> "93.8".
std::string format_percent(double fraction);
std::string format_percent_value(double percent);

// CSV header `n,<m...>,inf`, cells with one decimal.
std::string to_csv(const AssuranceTable& table);
// {"n_values", "m_values", "cells", "percent": true}; "inf" closes m_values.
std::string to_json(const AssuranceTable& table, int indent = -1);

enum class SeriesKind { kFiniteStep, kInfiniteCurve };
std::string_view to_string(SeriesKind kind);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct PlotSeries {
  std::string label;
  SeriesKind kind = SeriesKind::kInfiniteCurve;
  std::vector<Point> points;
};

// Which reliability a finite step is plotted against.
enum class StepAxis {
  kStep,     // reliability required of the additional samples (1 - d/m)
  kOverall,  // failure-free fraction of the whole population
};

// Confidence against reliability. One finite-step series per m from
// step_grid (x descending) and, when include_infinite, confidence_infinite
// sampled at r = i/resolution. With f > 0 the finite points cross the
// infinite curve at 1 - f/n only on the kOverall axis; on kStep they lie on it.
std::vector<PlotSeries> confidence_series(const TestEvidence& ev, std::span<const Count> m_values,
                                          bool include_infinite, int resolution = 100,
                                          StepAxis axis = StepAxis::kStep);

// Reliability against confidence on the grid c = i/resolution, 0 < i < resolution.
std::vector<PlotSeries> reliability_series(const TestEvidence& ev, std::span<const Count> m_values,
                                           bool include_infinite, int resolution = 100);

// Reliability line, confidence curve and their pointwise minimum over the
// failure-probability grid p = i/resolution (x = p, reliability = 1 - p).
// Requires f < n.
std::vector<PlotSeries> assurance_crossing_series(const TestEvidence& ev, int resolution = 1000);

// Where two series sharing x values cross, by linear interpolation of their
// difference between neighbouring samples.
std::optional<Point> find_crossing(const PlotSeries& a, const PlotSeries& b);

// `series,kind,x,y`
std::string to_csv(std::span<const PlotSeries> series);
std::string to_json(std::span<const PlotSeries> series, int indent = -1);

// `d,step_reliability,overall_reliability,confidence`
std::string to_csv(std::span<const ReliabilityStep> steps);
std::string to_json(const FinitePlan& plan, std::span<const ReliabilityStep> steps, int indent = -1);

}  // namespace finrel
