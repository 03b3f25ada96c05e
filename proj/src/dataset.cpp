#include "riskcast/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "riskcast/io.hpp"

namespace riskcast {

namespace fs = std::filesystem;

float Dataset::normalized_temperature(std::int64_t t) const {
  float lo = split.temp_min, hi = split.temp_max;
  if (hi <= lo) return 0.5f;
  float v = (temperature[t] - lo) / (hi - lo);
  return std::clamp(v, 0.0f, 1.0f);
}

RiskMap build_risk_map(const std::vector<AccidentRecord>& records, const GridSpec& grid,
                       std::int64_t interval, int interval_hours, int* dropped_out) {
  RiskMap map;
  map.level = 1;
  map.interval = interval;
  map.values.assign(grid.cells(), 0.0f);
  const std::int64_t isec = static_cast<std::int64_t>(interval_hours) * 3600;
  int dropped = 0;
  for (const auto& r : records) {
    if (r.t_sec / isec != interval) continue;
    int region = grid.region_at(r.lat, r.lon);
    if (region < 0) {
      ++dropped;
      continue;
    }
    map.values[region] += static_cast<float>(static_cast<int>(r.severity));
  }
  if (dropped_out) *dropped_out = dropped;
  return map;
}

void build_flows(const std::vector<TripRecord>& trips, const GridSpec& grid,
                 std::int64_t interval, int interval_hours, std::vector<float>* inflow,
                 std::vector<float>* outflow, int* skipped_out) {
  inflow->assign(grid.cells(), 0.0f);
  outflow->assign(grid.cells(), 0.0f);
  const std::int64_t isec = static_cast<std::int64_t>(interval_hours) * 3600;
  int skipped = 0;
  for (const auto& t : trips) {
    if (t.pickup_sec / isec == interval) {
      int region = grid.region_at(t.pickup_lat, t.pickup_lon);
      if (region >= 0)
        (*outflow)[region] += 1.0f;
      else
        ++skipped;
    }
    if (t.dropoff_sec / isec == interval) {
      int region = grid.region_at(t.dropoff_lat, t.dropoff_lon);
      if (region >= 0)
        (*inflow)[region] += 1.0f;
      else
        ++skipped;
    }
  }
  if (skipped_out) *skipped_out = skipped;
}

std::vector<float> assemble_st_features(const std::vector<float>& risk_values,
                                        const std::vector<float>& inflow,
                                        const std::vector<float>& outflow,
                                        const std::vector<float>& poi, float temperature_norm,
                                        int weather_kind, const std::vector<float>& temporal) {
  const std::size_t n = risk_values.size();
  if (inflow.size() != n || outflow.size() != n || poi.size() != n * kPoiCategories)
    throw DataError("assemble_st_features: per-region input lengths disagree");
  if (temporal.size() != kTemporalDim)
    throw DataError("assemble_st_features: temporal block must have width 32");
  if (weather_kind < 0 || weather_kind >= kWeatherKinds)
    throw DataError("assemble_st_features: weather kind out of range");

  std::vector<float> st(n * kStDim, 0.0f);
  for (std::size_t i = 0; i < n; ++i) {
    float* row = st.data() + i * kStDim;
    std::copy(temporal.begin(), temporal.end(), row);
    std::copy(poi.begin() + i * kPoiCategories, poi.begin() + (i + 1) * kPoiCategories,
              row + kColPoi);
    row[kColTemperature] = temperature_norm;
    row[kColWeather + weather_kind] = 1.0f;
    row[kColRisk] = risk_values[i];
    row[kColInflow] = inflow[i];
    row[kColOutflow] = outflow[i];
  }
  return st;
}

SplitInfo split_dataset(const Dataset& d, int p, int q, int intervals_per_week) {
  const std::int64_t first =
      std::max<std::int64_t>(p, static_cast<std::int64_t>(q) * intervals_per_week);
  if (first >= d.intervals)
    throw DataError("dataset too small: no interval has a full history window");
  const std::int64_t targets = d.intervals - first;
  const std::int64_t n_val = targets * 2 / 10;
  const std::int64_t n_test = targets * 2 / 10;
  const std::int64_t n_train = targets - n_val - n_test;  // remainder stays in train
  if (n_train < 1) throw DataError("dataset too small for a 6:2:2 split");

  SplitInfo s;
  s.first_target = first;
  s.train_end = first + n_train;
  s.val_end = s.train_end + n_val;
  s.test_end = s.val_end + n_test;

  // Temperature range from the training portion only.
  float lo = std::numeric_limits<float>::infinity();
  float hi = -std::numeric_limits<float>::infinity();
  for (std::int64_t t = 0; t < s.train_end; ++t) {
    lo = std::min(lo, d.temperature[t]);
    hi = std::max(hi, d.temperature[t]);
  }
  s.temp_min = lo;
  s.temp_max = hi;
  return s;
}

std::vector<std::int64_t> split_targets(const SplitInfo& s, SplitPart part) {
  std::int64_t lo = 0, hi = 0;
  switch (part) {
    case SplitPart::kTrain: lo = s.first_target; hi = s.train_end; break;
    case SplitPart::kVal: lo = s.train_end; hi = s.val_end; break;
    case SplitPart::kTest: lo = s.val_end; hi = s.test_end; break;
  }
  std::vector<std::int64_t> out;
  out.reserve(hi - lo);
  for (std::int64_t t = lo; t < hi; ++t) out.push_back(t);
  return out;
}

void save_dataset(const Dataset& d, const std::string& dir) {
  fs::create_directories(dir);
  auto base = [&](const char* name) { return (fs::path(dir) / name).string(); };

  const std::int64_t T = d.intervals, N = d.regions();
  write_f32_tensor(base("risk_g1"), d.risk, {T, N});
  write_f32_tensor(base("inflow_g1"), d.inflow, {T, N});
  write_f32_tensor(base("outflow_g1"), d.outflow, {T, N});
  write_f32_tensor(base("temperature"), d.temperature, {T});
  write_f32_tensor(base("poi"), d.poi, {N, kPoiCategories});
  write_f32_tensor(base("road"), d.road, {N, kRoadKinds});
  write_f32_tensor(base("rs_tiles"), d.rs.data,
                   {d.rs.regions, d.rs.height, d.rs.width, d.rs.depth});

  nlohmann::json meta;
  meta["grid"] = {{"rows", d.grid.rows},
                  {"cols", d.grid.cols},
                  {"cell_width_m", d.grid.cell_width_m},
                  {"cell_height_m", d.grid.cell_height_m},
                  {"origin_lat", d.grid.origin_lat},
                  {"origin_lon", d.grid.origin_lon}};
  meta["interval_hours"] = d.interval_hours;
  meta["intervals"] = d.intervals;
  meta["weather"] = d.weather;
  meta["holiday"] = d.holiday;
  meta["split"] = {{"first_target", d.split.first_target}, {"train_end", d.split.train_end},
                   {"val_end", d.split.val_end},           {"test_end", d.split.test_end},
                   {"temp_min", d.split.temp_min},         {"temp_max", d.split.temp_max}};
  write_text_file(base("meta.json"), meta.dump(2) + "\n");
}

Dataset load_dataset(const std::string& dir) {
  auto base = [&](const char* name) { return (fs::path(dir) / name).string(); };
  Dataset d;
  auto meta = nlohmann::json::parse(read_text_file(base("meta.json")));
  d.grid.rows = meta["grid"]["rows"];
  d.grid.cols = meta["grid"]["cols"];
  d.grid.cell_width_m = meta["grid"]["cell_width_m"];
  d.grid.cell_height_m = meta["grid"]["cell_height_m"];
  d.grid.origin_lat = meta["grid"]["origin_lat"];
  d.grid.origin_lon = meta["grid"]["origin_lon"];
  d.interval_hours = meta["interval_hours"];
  d.intervals = meta["intervals"];
  d.weather = meta["weather"].get<std::vector<std::uint8_t>>();
  d.holiday = meta["holiday"].get<std::vector<std::uint8_t>>();
  d.split.first_target = meta["split"]["first_target"];
  d.split.train_end = meta["split"]["train_end"];
  d.split.val_end = meta["split"]["val_end"];
  d.split.test_end = meta["split"]["test_end"];
  d.split.temp_min = meta["split"]["temp_min"];
  d.split.temp_max = meta["split"]["temp_max"];

  std::vector<std::int64_t> shape;
  d.risk = read_f32_tensor(base("risk_g1"), &shape);
  d.inflow = read_f32_tensor(base("inflow_g1"), nullptr);
  d.outflow = read_f32_tensor(base("outflow_g1"), nullptr);
  d.temperature = read_f32_tensor(base("temperature"), nullptr);
  d.poi = read_f32_tensor(base("poi"), nullptr);
  d.road = read_f32_tensor(base("road"), nullptr);
  d.rs.data = read_f32_tensor(base("rs_tiles"), &shape);
  d.rs.regions = static_cast<int>(shape[0]);
  d.rs.height = static_cast<int>(shape[1]);
  d.rs.width = static_cast<int>(shape[2]);
  d.rs.depth = static_cast<int>(shape[3]);
  return d;
}

namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                               const std::vector<std::string>& expect_header) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open CSV: " + path);
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty CSV: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> header;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
    if (header != expect_header) throw DataError("unexpected CSV header in " + path);
  }
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> row;
    while (std::getline(ss, cell, ',')) row.push_back(cell);
    if (row.size() != expect_header.size())
      throw DataError("bad CSV row in " + path + ": " + line);
    rows.push_back(std::move(row));
  }
  return rows;
}

Severity severity_from(const std::string& s) {
  if (s == "minor") return Severity::kMinor;
  if (s == "injured") return Severity::kInjured;
  if (s == "fatal") return Severity::kFatal;
  throw DataError("unknown severity: " + s);
}

int weather_from(const std::string& s) {
  static const char* kinds[] = {"sunny", "rainy", "cloudy", "snowy", "foggy"};
  for (int i = 0; i < kWeatherKinds; ++i)
    if (s == kinds[i]) return i;
  throw DataError("unknown weather condition: " + s);
}

int poi_category_from(const std::string& s) {
  static const char* cats[] = {"residence", "school",    "culture",   "recreation",
                               "social",    "transport", "commercial"};
  for (int i = 0; i < kPoiCategories; ++i)
    if (s == cats[i]) return i;
  throw DataError("unknown POI category: " + s);
}

}  // namespace

std::vector<AccidentRecord> read_accidents_csv(const std::string& path) {
  auto rows = read_csv(path, {"t_sec", "lat", "lon", "severity"});
  std::vector<AccidentRecord> out;
  out.reserve(rows.size());
  for (const auto& r : rows)
    out.push_back({std::stoll(r[0]), std::stod(r[1]), std::stod(r[2]), severity_from(r[3])});
  return out;
}

std::vector<TripRecord> read_trips_csv(const std::string& path) {
  auto rows = read_csv(path, {"pickup_sec", "pickup_lat", "pickup_lon", "dropoff_sec",
                              "dropoff_lat", "dropoff_lon"});
  std::vector<TripRecord> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    TripRecord t{std::stoll(r[0]), std::stod(r[1]), std::stod(r[2]),
                 std::stoll(r[3]), std::stod(r[4]), std::stod(r[5])};
    if (t.dropoff_sec < t.pickup_sec)
      throw DataError("trip with dropoff before pickup in " + path);
    out.push_back(t);
  }
  return out;
}

Dataset load_csv_dataset(const std::string& dir, const GridSpec& grid, const HyperParams& h) {
  auto path = [&](const char* name) { return (fs::path(dir) / name).string(); };
  Dataset d;
  d.grid = grid;
  d.interval_hours = h.interval_hours;
  const int N = grid.cells();

  auto weather_rows = read_csv(path("weather.csv"), {"interval", "temperature", "condition"});
  d.intervals = static_cast<std::int64_t>(weather_rows.size());
  if (d.intervals == 0) throw DataError("weather.csv has no rows");
  d.temperature.resize(d.intervals);
  d.weather.resize(d.intervals);
  for (const auto& r : weather_rows) {
    std::int64_t t = std::stoll(r[0]);
    if (t < 0 || t >= d.intervals) throw DataError("weather.csv interval out of range");
    d.temperature[t] = std::stof(r[1]);
    d.weather[t] = static_cast<std::uint8_t>(weather_from(r[2]));
  }

  int days = static_cast<int>((d.intervals * h.interval_hours + 23) / 24);
  d.holiday.assign(days, 0);
  if (fs::exists(path("holidays.csv"))) {
    for (const auto& r : read_csv(path("holidays.csv"), {"day"})) {
      int day = std::stoi(r[0]);
      if (day >= 0 && day < days) d.holiday[day] = 1;
    }
  }

  auto accidents = read_accidents_csv(path("accidents.csv"));
  auto trips = read_trips_csv(path("trips.csv"));
  d.risk.assign(d.intervals * N, 0.0f);
  d.inflow.assign(d.intervals * N, 0.0f);
  d.outflow.assign(d.intervals * N, 0.0f);
  const std::int64_t isec = static_cast<std::int64_t>(h.interval_hours) * 3600;
  for (const auto& a : accidents) {
    std::int64_t t = a.t_sec / isec;
    if (t < 0 || t >= d.intervals) continue;
    int region = grid.region_at(a.lat, a.lon);
    if (region >= 0) d.risk[t * N + region] += static_cast<float>(static_cast<int>(a.severity));
  }
  for (const auto& tr : trips) {
    std::int64_t tp = tr.pickup_sec / isec;
    std::int64_t td = tr.dropoff_sec / isec;
    if (tp >= 0 && tp < d.intervals) {
      int region = grid.region_at(tr.pickup_lat, tr.pickup_lon);
      if (region >= 0) d.outflow[tp * N + region] += 1.0f;
    }
    if (td >= 0 && td < d.intervals) {
      int region = grid.region_at(tr.dropoff_lat, tr.dropoff_lon);
      if (region >= 0) d.inflow[td * N + region] += 1.0f;
    }
  }

  // POI rows are individual points; aggregate to per-region distributions.
  d.poi.assign(N * kPoiCategories, 0.0f);
  for (const auto& r : read_csv(path("poi.csv"), {"lat", "lon", "category"})) {
    int region = grid.region_at(std::stod(r[0]), std::stod(r[1]));
    if (region >= 0) d.poi[region * kPoiCategories + poi_category_from(r[2])] += 1.0f;
  }
  for (int i = 0; i < N; ++i) {
    float total = 0.0f;
    for (int c = 0; c < kPoiCategories; ++c) total += d.poi[i * kPoiCategories + c];
    if (total > 0)
      for (int c = 0; c < kPoiCategories; ++c) d.poi[i * kPoiCategories + c] /= total;
  }

  d.road.assign(N * kRoadKinds, 0.0f);
  if (fs::exists(path("roads.csv"))) {
    for (const auto& r : read_csv(path("roads.csv"), {"region", "type", "count"})) {
      int region = std::stoi(r[0]);
      int type = std::stoi(r[1]);
      if (region < 0 || region >= N || type < 0 || type >= kRoadKinds)
        throw DataError("roads.csv entry out of range");
      d.road[region * kRoadKinds + type] += std::stof(r[2]);
    }
    for (int i = 0; i < N; ++i) {
      float total = 0.0f;
      for (int c = 0; c < kRoadKinds; ++c) total += d.road[i * kRoadKinds + c];
      if (total > 0)
        for (int c = 0; c < kRoadKinds; ++c) d.road[i * kRoadKinds + c] /= total;
    }
  }

  if (fs::exists(path("rs_tiles.f32"))) {
    std::vector<std::int64_t> shape;
    d.rs.data = read_f32_tensor(path("rs_tiles"), &shape);
    d.rs.regions = static_cast<int>(shape[0]);
    d.rs.height = static_cast<int>(shape[1]);
    d.rs.width = static_cast<int>(shape[2]);
    d.rs.depth = static_cast<int>(shape[3]);
    if (d.rs.regions != N) throw DataError("rs_tiles region count does not match the grid");
  } else {
    d.rs.width = h.rs_width;
    d.rs.height = h.rs_height;
    d.rs.depth = h.rs_depth;
    d.rs.regions = N;
    d.rs.data.assign(d.rs.tile_size() * N, 0.0f);
  }

  d.split = split_dataset(d, h.p, h.q, h.intervals_per_week());
  return d;
}

}  // namespace riskcast
