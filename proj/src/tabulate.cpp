#include "finrel/tabulate.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "finrel/binomial.hpp"
#include "finrel/errors.hpp"
#include "finrel/finite.hpp"
#include "finrel/infinite.hpp"

namespace finrel {
namespace {

using nlohmann::json;

std::vector<Count> expand(IntRange range, const char* name) {
  if (range.last < range.first) {
    throw DomainError(std::string(name) + " range is empty: " + std::to_string(range.first) + ".." +
                      std::to_string(range.last));
  }
  std::vector<Count> values;
  for (Count v = range.first; v <= range.last; ++v) values.push_back(v);
  return values;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void require_resolution(int resolution) {
  if (resolution < 2) throw DomainError("grid resolution must be at least 2");
}

}  // namespace

AssuranceTable assurance_table(IntRange n_range, IntRange m_range, bool include_infinite, Count f) {
  AssuranceTable table;
  table.f = f;
  table.n_values = expand(n_range, "n");
  table.m_values = expand(m_range, "m");
  table.has_infinite = include_infinite;
  if (table.m_values.front() < 1) throw DomainError("table columns need m >= 1");

  table.cells.reserve(table.n_values.size() * table.columns());
  for (Count n : table.n_values) {
    const TestEvidence ev{n, f};
    auto cell_error = [&](const std::string& col, const std::exception& e) {
      return DomainError("infeasible table cell (n=" + std::to_string(n) + ", m=" + col + "): " + e.what());
    };
    for (Count m : table.m_values) {
      try {
        table.cells.push_back(100.0 * assurance_finite({ev, m}).assurance);
      } catch (const Error& e) {
        throw cell_error(std::to_string(m), e);
      }
    }
    if (include_infinite) {
      try {
        table.cells.push_back(100.0 * assurance_infinite(ev).value());
      } catch (const Error& e) {
        throw cell_error("inf", e);
      }
    }
  }
  return table;
}

std::string format_percent_value(double percent) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", percent);
  return buf;
}

std::string format_percent(double fraction) { return format_percent_value(100.0 * fraction); }

std::string to_csv(const AssuranceTable& table) {
  std::string out = "n";
  for (Count m : table.m_values) out += "," + std::to_string(m);
  if (table.has_infinite) out += ",inf";
  out += '\n';
  for (std::size_t row = 0; row < table.n_values.size(); ++row) {
    out += std::to_string(table.n_values[row]);
    for (std::size_t col = 0; col < table.columns(); ++col) out += "," + format_percent_value(table.at(row, col));
    out += '\n';
  }
  return out;
}

std::string to_json(const AssuranceTable& table, int indent) {
  json m_values = json::array();
  for (Count m : table.m_values) m_values.push_back(m);
  if (table.has_infinite) m_values.push_back("inf");
  json doc{
      {"f", table.f},
      {"n_values", table.n_values},
      {"m_values", m_values},
      {"cells", table.cells},
      {"percent", true},
  };
  return doc.dump(indent);
}

std::string_view to_string(SeriesKind kind) {
  return kind == SeriesKind::kFiniteStep ? "finite-step" : "infinite-curve";
}

std::vector<PlotSeries> confidence_series(const TestEvidence& ev, std::span<const Count> m_values,
                                          bool include_infinite, int resolution, StepAxis axis) {
  ev.validate();
  std::vector<PlotSeries> out;
  for (Count m : m_values) {
    PlotSeries s{"m=" + std::to_string(m), SeriesKind::kFiniteStep, {}};
    for (const auto& step : step_grid({ev, m})) {
      const double x = axis == StepAxis::kStep ? step.step_reliability : step.overall_reliability;
      s.points.push_back({x, step.confidence});
    }
    out.push_back(std::move(s));
  }
  if (include_infinite) {
    require_resolution(resolution);
    PlotSeries s{"inf", SeriesKind::kInfiniteCurve, {}};
    for (int i = 0; i <= resolution; ++i) {
      const double r = static_cast<double>(i) / resolution;
      s.points.push_back({r, confidence_infinite(ev, Probability(r)).value()});
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<PlotSeries> reliability_series(const TestEvidence& ev, std::span<const Count> m_values,
                                           bool include_infinite, int resolution) {
  ev.validate();
  require_resolution(resolution);
  std::vector<PlotSeries> out;
  for (Count m : m_values) {
    PlotSeries s{"m=" + std::to_string(m), SeriesKind::kFiniteStep, {}};
    for (int i = 1; i < resolution; ++i) {
      const double c = static_cast<double>(i) / resolution;
      s.points.push_back({c, reliability_finite({ev, m}, Probability(c)).value()});
    }
    out.push_back(std::move(s));
  }
  if (include_infinite && !ev.all_failed()) {
    PlotSeries s{"inf", SeriesKind::kInfiniteCurve, {}};
    for (int i = 1; i < resolution; ++i) {
      const double c = static_cast<double>(i) / resolution;
      s.points.push_back({c, reliability_infinite(ev, Probability(c)).value()});
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<PlotSeries> assurance_crossing_series(const TestEvidence& ev, int resolution) {
  ev.validate();
  require_resolution(resolution);
  if (ev.all_failed()) throw NoSolutionError("no crossing when every sample failed (" + describe(ev) + ")");

  PlotSeries reliability{"reliability", SeriesKind::kInfiniteCurve, {}};
  PlotSeries confidence{"confidence", SeriesKind::kInfiniteCurve, {}};
  PlotSeries assurance{"assurance", SeriesKind::kInfiniteCurve, {}};
  for (int i = 0; i <= resolution; ++i) {
    const double p = static_cast<double>(i) / resolution;
    const double r = static_cast<double>(resolution - i) / resolution;
    const double c = confidence_infinite(ev, Probability(r)).value();
    reliability.points.push_back({p, r});
    confidence.points.push_back({p, c});
    assurance.points.push_back({p, std::min(r, c)});
  }
  return {std::move(reliability), std::move(confidence), std::move(assurance)};
}

std::optional<Point> find_crossing(const PlotSeries& a, const PlotSeries& b) {
  const std::size_t count = std::min(a.points.size(), b.points.size());
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const double d0 = a.points[i].y - b.points[i].y;
    const double d1 = a.points[i + 1].y - b.points[i + 1].y;
    if (d0 == 0.0) return a.points[i];
    if ((d0 < 0.0) != (d1 < 0.0) || d1 == 0.0) {
      const double t = d0 / (d0 - d1);
      const Point& p0 = a.points[i];
      const Point& p1 = a.points[i + 1];
      return Point{p0.x + t * (p1.x - p0.x), p0.y + t * (p1.y - p0.y)};
    }
  }
  return std::nullopt;
}

std::string to_csv(std::span<const PlotSeries> series) {
  std::string out = "series,kind,x,y\n";
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      out += s.label + ',' + std::string(to_string(s.kind)) + ',' + format_number(p.x) + ',' + format_number(p.y) +
             '\n';
    }
  }
  return out;
}

std::string to_json(std::span<const PlotSeries> series, int indent) {
  json doc = json::array();
  for (const auto& s : series) {
    json xs = json::array();
    json ys = json::array();
    for (const auto& p : s.points) {
      xs.push_back(p.x);
      ys.push_back(p.y);
    }
    doc.push_back({{"label", s.label}, {"kind", to_string(s.kind)}, {"x", xs}, {"y", ys}});
  }
  return json{{"series", doc}}.dump(indent);
}

std::string to_csv(std::span<const ReliabilityStep> steps) {
  std::string out = "d,step_reliability,overall_reliability,confidence\n";
  for (const auto& s : steps) {
    out += std::to_string(s.d) + ',' + format_number(s.step_reliability) + ',' + format_number(s.overall_reliability) +
           ',' + format_number(s.confidence) + '\n';
  }
  return out;
}

std::string to_json(const FinitePlan& plan, std::span<const ReliabilityStep> steps, int indent) {
  json rows = json::array();
  for (const auto& s : steps) {
    rows.push_back({{"d", s.d},
                    {"step_reliability", s.step_reliability},
                    {"overall_reliability", s.overall_reliability},
                    {"confidence", s.confidence}});
  }
  return json{{"n", plan.evidence.n}, {"f", plan.evidence.f}, {"m", plan.m}, {"steps", rows}}.dump(indent);
}

}  // namespace finrel
