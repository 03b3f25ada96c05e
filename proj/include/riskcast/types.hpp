#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riskcast/errors.hpp"

namespace riskcast {

// Feature-block widths. The temporal block is hour-of-day (24) +
// day-of-week (7) + holiday flag (1); the spatial block is POI
// distribution (7) + temperature (1) + weather one-hot (5) + risk (1) +
// inflow (1) + outflow (1).
inline constexpr int kTemporalDim = 32;
inline constexpr int kPoiCategories = 7;
inline constexpr int kWeatherKinds = 5;
inline constexpr int kRoadKinds = 5;
inline constexpr int kSpatialDim = kPoiCategories + 1 + kWeatherKinds + 3;  // 16
inline constexpr int kStDim = kTemporalDim + kSpatialDim;                   // 48

// Column offsets within one ST row (before RS enhancement channels).
inline constexpr int kColHour = 0;
inline constexpr int kColDow = 24;
inline constexpr int kColHoliday = 31;
inline constexpr int kColPoi = 32;
inline constexpr int kColTemperature = 39;
inline constexpr int kColWeather = 40;
inline constexpr int kColRisk = 45;
inline constexpr int kColInflow = 46;
inline constexpr int kColOutflow = 47;

// Rectangular city grid. Region index i maps to (row, col) = (i / cols, i % cols).
struct GridSpec {
  int rows = 0;
  int cols = 0;
  double cell_width_m = 0.0;
  double cell_height_m = 0.0;
  double origin_lat = 0.0;
  double origin_lon = 0.0;

  int cells() const { return rows * cols; }
  int index(int row, int col) const { return row * cols + col; }
  int row_of(int region) const { return region / cols; }
  int col_of(int region) const { return region % cols; }

  // Fixed local projection: metres east/north of the origin corner.
  // Returns -1 for coordinates outside the grid.
  int region_at(double lat, double lon) const;

  // Centre of a cell in (lat, lon), inverse of region_at up to the cell.
  void cell_center(int region, double* lat, double* lon) const;
};

// Per-granularity risk vector for one interval.
struct RiskMap {
  int level = 1;          // granularity index, 1 = finest
  std::int64_t interval = 0;
  std::vector<float> values;
};

// Order of window indices: the q long-term (weekly) lags oldest-first,
// then the p short-term lags oldest-first, ending at target-1.
struct HistoricalWindow {
  std::int64_t target = 0;
  int p = 0;
  int q = 0;
  std::vector<std::int64_t> indices;  // length p+q
};

HistoricalWindow build_window(std::int64_t target, int p, int q, int intervals_per_week);

// Binary fine-to-coarse membership matrix, stored as the parent map.
// Each row is one-hot by construction.
struct TransformMatrix {
  int fine = 0;
  int coarse = 0;
  std::vector<int> parent;  // parent[i] = coarse region of fine region i

  // (fine vector)^T * M: sums fine values into their coarse parents.
  std::vector<double> aggregate_sum(const std::vector<double>& fine_values) const;
  std::vector<float> aggregate_sum(const std::vector<float>& fine_values) const;
  // Dense form for tests and serialization.
  std::vector<std::vector<std::uint8_t>> dense() const;
};

TransformMatrix build_transform_matrix(const std::vector<int>& partition);

// The aggregation relation across granularity levels. partitions[i] maps
// level i+1 (1-based finest = level 1) nodes to level i+2 nodes.
struct GranularityHierarchy {
  int levels = 1;
  std::vector<int> node_counts;               // size levels, strictly decreasing
  std::vector<std::vector<int>> partitions;   // size levels-1
  std::vector<TransformMatrix> transforms;    // size levels-1

  void check() const;  // throws DataError on a malformed hierarchy
};

// Temporal feature row (identical for every region of an interval).
std::vector<float> temporal_features(std::int64_t interval, int interval_hours,
                                     const std::vector<std::uint8_t>& holiday_by_day);

int hour_of_interval(std::int64_t interval, int interval_hours);
int day_of_interval(std::int64_t interval, int interval_hours);

// Risk level 1..4 from the three strictly increasing thresholds:
// level 1 <=> value <= t0, then (t0,t1], (t1,t2], > t2.
int risk_level(double value, const std::vector<double>& thresholds);

}  // namespace riskcast
