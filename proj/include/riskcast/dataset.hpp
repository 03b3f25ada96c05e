#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riskcast/config.hpp"
#include "riskcast/types.hpp"

namespace riskcast {

enum class Severity : int { kMinor = 1, kInjured = 2, kFatal = 3 };

struct AccidentRecord {
  std::int64_t t_sec = 0;  // seconds since dataset start
  double lat = 0.0;
  double lon = 0.0;
  Severity severity = Severity::kMinor;
};

struct TripRecord {
  std::int64_t pickup_sec = 0;
  double pickup_lat = 0.0;
  double pickup_lon = 0.0;
  std::int64_t dropoff_sec = 0;
  double dropoff_lat = 0.0;
  double dropoff_lon = 0.0;
};

// One tile per region, values in [0,1], fixed W x H x depth.
struct RSImageSet {
  int width = 0;
  int height = 0;
  int depth = 0;
  int regions = 0;
  std::vector<float> data;  // [region][h][w][c]

  std::size_t tile_size() const {
    return static_cast<std::size_t>(width) * height * depth;
  }
  const float* tile(int region) const { return data.data() + tile_size() * region; }
  float* tile(int region) { return data.data() + tile_size() * region; }
};

// Chronological target split plus the normalization constants that must
// come from the training portion only.
struct SplitInfo {
  std::int64_t first_target = 0;  // earliest interval with a full window
  std::int64_t train_end = 0;     // exclusive
  std::int64_t val_end = 0;       // exclusive
  std::int64_t test_end = 0;      // exclusive
  float temp_min = 0.0f;
  float temp_max = 1.0f;
};

struct Dataset {
  GridSpec grid;
  int interval_hours = 1;
  std::int64_t intervals = 0;

  // Per-interval tensors, row-major [interval][region].
  std::vector<float> risk;
  std::vector<float> inflow;
  std::vector<float> outflow;

  // City-global per interval.
  std::vector<float> temperature;       // raw degrees
  std::vector<std::uint8_t> weather;    // 0..4
  std::vector<std::uint8_t> holiday;    // per day

  // Static per region.
  std::vector<float> poi;   // [region][7], each row a distribution or all-zero
  std::vector<float> road;  // [region][5], road-type distribution

  RSImageSet rs;
  SplitInfo split;

  int regions() const { return grid.cells(); }
  const float* risk_row(std::int64_t t) const { return risk.data() + t * regions(); }
  const float* inflow_row(std::int64_t t) const { return inflow.data() + t * regions(); }
  const float* outflow_row(std::int64_t t) const { return outflow.data() + t * regions(); }
  float normalized_temperature(std::int64_t t) const;
};

// Sum of severity risk values per region for one interval. Records outside
// the grid are dropped and counted in *dropped_out.
RiskMap build_risk_map(const std::vector<AccidentRecord>& records, const GridSpec& grid,
                       std::int64_t interval, int interval_hours, int* dropped_out = nullptr);

// Pickups increment outflow at the pickup interval, dropoffs increment
// inflow at the dropoff interval. Out-of-bounds endpoints are skipped and
// counted individually.
void build_flows(const std::vector<TripRecord>& trips, const GridSpec& grid,
                 std::int64_t interval, int interval_hours, std::vector<float>* inflow,
                 std::vector<float>* outflow, int* skipped_out = nullptr);

// Row i = [temporal | poi_i | temperature | weather | risk_i | in_i | out_i].
// The temporal block repeats across rows. Widths: kTemporalDim + kSpatialDim.
std::vector<float> assemble_st_features(const std::vector<float>& risk_values,
                                        const std::vector<float>& inflow,
                                        const std::vector<float>& outflow,
                                        const std::vector<float>& poi, float temperature_norm,
                                        int weather_kind, const std::vector<float>& temporal);

// Chronological 6:2:2 split over target intervals (those with a full
// p/q window available); remainder goes to train. Also freezes the
// temperature min/max over the training portion.
SplitInfo split_dataset(const Dataset& d, int p, int q, int intervals_per_week);

enum class SplitPart { kTrain, kVal, kTest };
std::vector<std::int64_t> split_targets(const SplitInfo& s, SplitPart part);

// Directory round trip for the full dataset (columnar f32 + meta.json).
void save_dataset(const Dataset& d, const std::string& dir);
Dataset load_dataset(const std::string& dir);

// CSV ingestion. Column formats are documented in the README; all files
// live in one directory: accidents.csv, trips.csv, poi.csv, roads.csv,
// weather.csv, holidays.csv, plus rs_tiles.bin/rs_tiles.json (optional).
Dataset load_csv_dataset(const std::string& dir, const GridSpec& grid, const HyperParams& h);

std::vector<AccidentRecord> read_accidents_csv(const std::string& path);
std::vector<TripRecord> read_trips_csv(const std::string& path);

}  // namespace riskcast
