#include "riskcast/types.hpp"

#include <algorithm>
#include <cmath>

namespace riskcast {

namespace {
constexpr double kMetersPerDegLat = 111320.0;

double meters_per_deg_lon(double lat) {
  return kMetersPerDegLat * std::cos(lat * 3.14159265358979323846 / 180.0);
}
}  // namespace

int GridSpec::region_at(double lat, double lon) const {
  double y = (lat - origin_lat) * kMetersPerDegLat;
  double x = (lon - origin_lon) * meters_per_deg_lon(origin_lat);
  if (x < 0 || y < 0) return -1;
  int col = static_cast<int>(x / cell_width_m);
  int row = static_cast<int>(y / cell_height_m);
  if (row >= rows || col >= cols) return -1;
  return index(row, col);
}

void GridSpec::cell_center(int region, double* lat, double* lon) const {
  double y = (row_of(region) + 0.5) * cell_height_m;
  double x = (col_of(region) + 0.5) * cell_width_m;
  *lat = origin_lat + y / kMetersPerDegLat;
  *lon = origin_lon + x / meters_per_deg_lon(origin_lat);
}

HistoricalWindow build_window(std::int64_t target, int p, int q, int intervals_per_week) {
  if (p < 0 || q < 0 || p + q < 1) throw DataError("window needs p+q >= 1 with p,q >= 0");
  if (target - static_cast<std::int64_t>(q) * intervals_per_week < 0 || target - p < 0)
    throw DataError("insufficient history for target interval " + std::to_string(target));

  HistoricalWindow w;
  w.target = target;
  w.p = p;
  w.q = q;
  w.indices.reserve(p + q);
  for (int k = q; k >= 1; --k) w.indices.push_back(target - static_cast<std::int64_t>(k) * intervals_per_week);
  for (int k = p; k >= 1; --k) w.indices.push_back(target - k);
  return w;
}

std::vector<double> TransformMatrix::aggregate_sum(const std::vector<double>& fine_values) const {
  if (static_cast<int>(fine_values.size()) != fine)
    throw DataError("aggregate_sum: fine vector length mismatch");
  std::vector<double> out(coarse, 0.0);
  for (int i = 0; i < fine; ++i) out[parent[i]] += fine_values[i];
  return out;
}

std::vector<float> TransformMatrix::aggregate_sum(const std::vector<float>& fine_values) const {
  if (static_cast<int>(fine_values.size()) != fine)
    throw DataError("aggregate_sum: fine vector length mismatch");
  std::vector<float> out(coarse, 0.0f);
  for (int i = 0; i < fine; ++i) out[parent[i]] += fine_values[i];
  return out;
}

std::vector<std::vector<std::uint8_t>> TransformMatrix::dense() const {
  std::vector<std::vector<std::uint8_t>> m(fine, std::vector<std::uint8_t>(coarse, 0));
  for (int i = 0; i < fine; ++i) m[i][parent[i]] = 1;
  return m;
}

TransformMatrix build_transform_matrix(const std::vector<int>& partition) {
  TransformMatrix m;
  m.fine = static_cast<int>(partition.size());
  m.parent = partition;
  int max_part = -1;
  for (int p : partition) {
    if (p < 0) throw DataError("partition map has a negative part id");
    max_part = std::max(max_part, p);
  }
  m.coarse = max_part + 1;
  // Every column must have at least one member.
  std::vector<int> count(m.coarse, 0);
  for (int p : partition) ++count[p];
  for (int c = 0; c < m.coarse; ++c)
    if (count[c] == 0) throw DataError("partition map leaves coarse region " + std::to_string(c) + " empty");
  return m;
}

void GranularityHierarchy::check() const {
  if (levels < 1) throw DataError("hierarchy needs at least one level");
  if (static_cast<int>(node_counts.size()) != levels) throw DataError("hierarchy node_counts size mismatch");
  if (static_cast<int>(partitions.size()) != levels - 1) throw DataError("hierarchy partitions size mismatch");
  if (static_cast<int>(transforms.size()) != levels - 1) throw DataError("hierarchy transforms size mismatch");
  for (int i = 0; i + 1 < levels; ++i) {
    if (node_counts[i + 1] >= node_counts[i])
      throw DataError("hierarchy node counts must strictly decrease");
    if (static_cast<int>(partitions[i].size()) != node_counts[i])
      throw DataError("hierarchy partition size mismatch at level " + std::to_string(i + 1));
    if (transforms[i].fine != node_counts[i] || transforms[i].coarse != node_counts[i + 1])
      throw DataError("hierarchy transform shape mismatch at level " + std::to_string(i + 1));
  }
}

int hour_of_interval(std::int64_t interval, int interval_hours) {
  return static_cast<int>((interval * interval_hours) % 24);
}

int day_of_interval(std::int64_t interval, int interval_hours) {
  return static_cast<int>((interval * interval_hours) / 24);
}

std::vector<float> temporal_features(std::int64_t interval, int interval_hours,
                                     const std::vector<std::uint8_t>& holiday_by_day) {
  std::vector<float> f(kTemporalDim, 0.0f);
  int hour = hour_of_interval(interval, interval_hours);
  int day = day_of_interval(interval, interval_hours);
  f[kColHour + hour] = 1.0f;
  f[kColDow + day % 7] = 1.0f;
  bool holiday = day < static_cast<int>(holiday_by_day.size()) && holiday_by_day[day] != 0;
  f[kColHoliday] = holiday ? 1.0f : 0.0f;
  return f;
}

int risk_level(double value, const std::vector<double>& thresholds) {
  if (value <= thresholds[0]) return 1;
  if (value <= thresholds[1]) return 2;
  if (value <= thresholds[2]) return 3;
  return 4;
}

}  // namespace riskcast
