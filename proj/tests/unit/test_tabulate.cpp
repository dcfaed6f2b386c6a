#include <gtest/gtest.h>

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "finrel/binomial.hpp"
#include "finrel/errors.hpp"
#include "finrel/finite.hpp"
#include "finrel/infinite.hpp"
#include "finrel/tabulate.hpp"
#include "golden_table.hpp"

namespace finrel {
namespace {

std::size_t col_of(const AssuranceTable& t, Count m) {
  return static_cast<std::size_t>(std::find(t.m_values.begin(), t.m_values.end(), m) - t.m_values.begin());
}

TEST(AssuranceTable, DefaultCellsFromExamples) {
  const auto t = assurance_table();
  ASSERT_EQ(t.n_values.size(), 20u);
  ASSERT_EQ(t.columns(), 11u);
  EXPECT_EQ(format_percent_value(t.at(0, col_of(t, 5))), "75.0");
  EXPECT_EQ(format_percent_value(t.infinite_at(0)), "68.2");
  EXPECT_EQ(format_percent_value(t.infinite_at(7)), "83.5");
}

TEST(AssuranceTable, SingleCellHandEnumerated) {
  // d = 0: min(1 - 1/3, 1 - 1/2) = 0.5; d = 1: min(1 - 1/2, 1) = 0.5.
  const auto t = assurance_table({1, 1}, {1, 1}, false, 0);
  ASSERT_EQ(t.cells.size(), 1u);
  EXPECT_DOUBLE_EQ(t.cells[0], 50.0);
}

TEST(AssuranceTable, InfiniteColumnUsesFixedPoint) {
  const auto t = assurance_table();
  for (std::size_t row = 0; row < t.n_values.size(); ++row) {
    EXPECT_EQ(t.infinite_at(row), 100.0 * assurance_infinite({t.n_values[row], 0}).value());
  }
}

TEST(AssuranceTable, CellsArePercentages) {
  const auto t = assurance_table({1, 30}, {1, 30}, true, 0);
  for (double c : t.cells) {
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 100.0);
  }
}

TEST(AssuranceTable, InfeasibleCellIsNamed) {
  try {
    assurance_table({3, 5}, {1, 2}, true, 3);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("n=3, m=inf"), std::string::npos) << e.what();
  }
  EXPECT_THROW(assurance_table({3, 5}, {0, 2}, false, 0), DomainError);
  EXPECT_THROW(assurance_table({5, 3}, {1, 2}, false, 0), DomainError);
  EXPECT_NO_THROW(assurance_table({3, 5}, {1, 2}, false, 3));
}

TEST(AssuranceTable, FiniteColumnsMatchPublishedTable) {
  std::istringstream golden{std::string(testing::kPublishedAssuranceTable)};
  std::istringstream ours{to_csv(assurance_table())};
  std::string want;
  std::string got;
  std::getline(golden, want);
  std::getline(ours, got);
  EXPECT_EQ(got, want);
  while (std::getline(golden, want)) {
    ASSERT_TRUE(std::getline(ours, got));
    // Compare everything up to the unbounded column.
    EXPECT_EQ(got.substr(0, got.rfind(',')), want.substr(0, want.rfind(',')));
  }
}

TEST(FormatPercent, OneDecimalTiesToEven) {
  EXPECT_EQ(format_percent(0.75), "75.0");
  EXPECT_EQ(format_percent(0.8125), "81.2");
  EXPECT_EQ(format_percent(0.9375), "93.8");
  EXPECT_EQ(format_percent(0.0), "0.0");
  EXPECT_EQ(format_percent(1.0), "100.0");
  EXPECT_EQ(format_percent(5.0 / 7.0), "71.4");
}

TEST(AssuranceTable, CsvAndJsonLayout) {
  const auto t = assurance_table({3, 4}, {1, 3}, true, 0);
  EXPECT_EQ(to_csv(t), "n,1,2,3,inf\n3,80.0,80.0,70.4,68.2\n4,83.3,83.3,80.2,72.4\n");
  const auto j = nlohmann::json::parse(to_json(t));
  EXPECT_EQ(j["n_values"], nlohmann::json({3, 4}));
  EXPECT_EQ(j["m_values"], nlohmann::json({1, 2, 3, "inf"}));
  EXPECT_EQ(j["percent"], true);
  ASSERT_EQ(j["cells"].size(), 8u);
  EXPECT_EQ(j["cells"][3].get<double>(), t.at(0, 3));
}

TEST(ConfidenceSeries, TopStepsForTenAdditional) {
  const std::vector<Count> ms{10};
  const auto series = confidence_series({10, 0}, ms, true, 100);
  ASSERT_EQ(series.size(), 2u);
  const auto& finite = series[0];
  EXPECT_EQ(finite.kind, SeriesKind::kFiniteStep);
  EXPECT_EQ(finite.points[0].x, 10.0 / 11.0);
  EXPECT_EQ(finite.points[1].x, 0.9);
  const auto& inf = series[1];
  EXPECT_EQ(inf.kind, SeriesKind::kInfiniteCurve);
  EXPECT_NEAR(inf.points[80].x, 0.8, 1e-15);
  EXPECT_NEAR(inf.points[80].y, 1.0 - std::pow(0.8, 10), 1e-12);
}

TEST(ConfidenceSeries, XStrictlyMonotone) {
  const std::vector<Count> ms{1, 10, 20, 30};
  for (const auto& s : confidence_series({10, 2}, ms, true, 50)) {
    ASSERT_GE(s.points.size(), 2u);
    const bool ascending = s.points[1].x > s.points[0].x;
    for (std::size_t i = 1; i < s.points.size(); ++i) {
      if (ascending) {
        EXPECT_GT(s.points[i].x, s.points[i - 1].x) << s.label;
      } else {
        EXPECT_LT(s.points[i].x, s.points[i - 1].x) << s.label;
      }
    }
  }
}

TEST(ConfidenceSeries, TwoFailuresCrossNearEightyPercent) {
  const std::vector<Count> ms{10, 20, 30};
  const auto series = confidence_series({10, 2}, ms, false, 100, StepAxis::kOverall);
  for (const auto& s : series) {
    int above = 0;
    int below = 0;
    for (const auto& p : s.points) {
      const double inf = confidence_infinite({10, 2}, Probability(p.x)).value();
      if (p.x < 0.8 - 1e-12) {
        EXPECT_GE(p.y, inf) << s.label << " x=" << p.x;
        above += p.y > inf ? 1 : 0;
      } else if (p.x > 0.8 + 1e-12) {
        EXPECT_LE(p.y, inf) << s.label << " x=" << p.x;
        below += p.y < inf ? 1 : 0;
      }
    }
    EXPECT_GT(above, 0) << s.label;
    EXPECT_GT(below, 0) << s.label;
  }
}

TEST(ConfidenceSeries, StepAxisPointsLieOnInfiniteCurve) {
  const std::vector<Count> ms{10};
  const auto series = confidence_series({10, 2}, ms, false, 100, StepAxis::kStep);
  for (const auto& p : series[0].points) EXPECT_EQ(p.y, confidence_infinite({10, 2}, Probability(p.x)).value());
}

TEST(ReliabilitySeries, ShapeAndAnchors) {
  const std::vector<Count> ms{10, 30};
  const auto series = reliability_series({10, 0}, ms, true, 100);
  ASSERT_EQ(series.size(), 3u);
  for (const auto& s : series) {
    ASSERT_EQ(s.points.size(), 99u);
    for (std::size_t i = 1; i < s.points.size(); ++i) {
      EXPECT_GT(s.points[i].x, s.points[i - 1].x);
      EXPECT_LE(s.points[i].y, s.points[i - 1].y) << s.label;
    }
  }
  // c = 0.89 sits at index 88.
  EXPECT_NEAR(series[0].points[88].y, 0.90, 1e-12);
  EXPECT_NEAR(series[1].points[88].y, 0.85, 1e-12);
  EXPECT_NEAR(series[2].points[88].y, 0.802, 5e-4);
}

TEST(AssuranceCrossing, RecoversFixedPoint) {
  const int resolution = 1000;
  for (auto [n, f, expected] : {std::tuple{3, 0, 0.682}, std::tuple{3, 2, 0.318}, std::tuple{1, 0, 0.5}}) {
    const auto series = assurance_crossing_series({n, f}, resolution);
    ASSERT_EQ(series.size(), 3u);
    const auto crossing = find_crossing(series[0], series[1]);
    ASSERT_TRUE(crossing.has_value());
    EXPECT_NEAR(crossing->y, assurance_infinite({n, f}).value(), 1.0 / resolution);
    EXPECT_NEAR(crossing->y, expected, 5e-4);
    double peak = 0.0;
    for (const auto& p : series[2].points) peak = std::max(peak, p.y);
    EXPECT_NEAR(peak, expected, 1.0 / resolution);
  }
  EXPECT_THROW(assurance_crossing_series({2, 2}), NoSolutionError);
}

TEST(PlotSeries, CsvHeader) {
  const std::vector<Count> ms{2};
  const auto csv = to_csv(confidence_series({3, 0}, ms, false));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "series,kind,x,y");
  EXPECT_NE(csv.find("m=2,finite-step,0.666666666667,0.703703703704"), std::string::npos) << csv;
}

TEST(GridExport, CsvAndJson) {
  const FinitePlan plan{{3, 0}, 4};
  const auto steps = step_grid(plan);
  const auto csv = to_csv(steps);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "d,step_reliability,overall_reliability,confidence");
  const auto j = nlohmann::json::parse(to_json(plan, steps));
  ASSERT_EQ(j["steps"].size(), 5u);
  EXPECT_EQ(j["steps"][2]["confidence"].get<double>(), 0.875);
}

}  // namespace
}  // namespace finrel
