#include "riskcast/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "riskcast/rng.hpp"

namespace riskcast {

double rush_hour_multiplier(int hour) {
  if (hour >= 7 && hour < 9) return 3.0;
  if (hour >= 16 && hour < 19) return 3.4;
  if (hour >= 1 && hour < 5) return 0.25;
  return 1.0;
}

namespace {

// Smooth density field with two busy centres plus noise, normalized to
// mean 1 so the base accident rate keeps its meaning.
std::vector<double> poi_density_field(const GridSpec& grid, Rng& rng) {
  const int N = grid.cells();
  std::vector<double> density(N);
  const double cx1 = grid.cols * 0.3, cy1 = grid.rows * 0.35;
  const double cx2 = grid.cols * 0.75, cy2 = grid.rows * 0.7;
  const double s1 = std::max(2.0, grid.cols * 0.22);
  const double s2 = std::max(2.0, grid.cols * 0.16);
  double total = 0.0;
  for (int i = 0; i < N; ++i) {
    double x = grid.col_of(i), y = grid.row_of(i);
    double d1 = ((x - cx1) * (x - cx1) + (y - cy1) * (y - cy1)) / (2 * s1 * s1);
    double d2 = ((x - cx2) * (x - cx2) + (y - cy2) * (y - cy2)) / (2 * s2 * s2);
    double v = 1.6 * std::exp(-d1) + 1.2 * std::exp(-d2) + 0.08 + 0.1 * rng.uniform();
    density[i] = v;
    total += v;
  }
  for (auto& v : density) v *= N / total;
  return density;
}

}  // namespace

Dataset generate_synthetic_city(std::uint64_t seed, const GridSpec& grid, int weeks,
                                const HyperParams& h) {
  if (weeks < h.q + 1) throw DataError("generator needs weeks >= q+1 for full windows");

  Dataset d;
  d.grid = grid;
  d.interval_hours = h.interval_hours;
  const int N = grid.cells();
  const int ipw = h.intervals_per_week();
  d.intervals = static_cast<std::int64_t>(weeks) * ipw;
  const int days = weeks * 7;

  Rng rng(Rng::mix(seed, 0xA11));
  std::vector<double> density = poi_density_field(grid, rng);

  // POI distributions: category mix shifts with density (dense areas lean
  // commercial/transport, sparse areas residential).
  d.poi.assign(N * kPoiCategories, 0.0f);
  Rng poi_rng(Rng::mix(seed, 0xB01));
  for (int i = 0; i < N; ++i) {
    double urban = std::clamp(density[i] / 2.5, 0.05, 0.95);
    double w[kPoiCategories] = {
        1.6 * (1.0 - urban) + 0.2,  // residence
        0.3,                        // school
        0.15 + 0.3 * urban,         // culture
        0.25 + 0.2 * urban,         // recreation
        0.2,                        // social
        0.2 + 0.8 * urban,          // transport
        0.2 + 1.4 * urban           // commercial
    };
    // A small fraction of cells carry no POIs at all.
    if (poi_rng.uniform() < 0.04) continue;
    double total = 0.0;
    double jitter[kPoiCategories];
    for (int c = 0; c < kPoiCategories; ++c) {
      jitter[c] = w[c] * (0.7 + 0.6 * poi_rng.uniform());
      total += jitter[c];
    }
    for (int c = 0; c < kPoiCategories; ++c)
      d.poi[i * kPoiCategories + c] = static_cast<float>(jitter[c] / total);
  }

  // Road-type distributions, loosely tied to density (more arterials and
  // signals downtown).
  d.road.assign(N * kRoadKinds, 0.0f);
  Rng road_rng(Rng::mix(seed, 0xD0D));
  for (int i = 0; i < N; ++i) {
    double urban = std::clamp(density[i] / 2.5, 0.05, 0.95);
    double w[kRoadKinds] = {0.8 + 0.9 * (1 - urban), 0.5, 0.3 + 0.7 * urban, 0.2 + 0.5 * urban,
                            0.15 + 0.25 * urban};
    double total = 0.0;
    double jitter[kRoadKinds];
    for (int c = 0; c < kRoadKinds; ++c) {
      jitter[c] = w[c] * (0.7 + 0.6 * road_rng.uniform());
      total += jitter[c];
    }
    for (int c = 0; c < kRoadKinds; ++c)
      d.road[i * kRoadKinds + c] = static_cast<float>(jitter[c] / total);
  }

  // Holidays: one fixed day each week plus day 0.
  d.holiday.assign(days, 0);
  for (int day = 0; day < days; ++day)
    if (day == 0 || day % 7 == 6) d.holiday[day] = 1;

  // Weather: seasonal temperature with daily cycle; condition sampled from
  // density-independent weights with mild persistence.
  d.temperature.resize(d.intervals);
  d.weather.resize(d.intervals);
  Rng wx_rng(Rng::mix(seed, 0x3A7));
  int cond = 0;
  for (std::int64_t t = 0; t < d.intervals; ++t) {
    double day_frac = static_cast<double>(t % ipw) / ipw;
    double season = std::sin(2 * 3.14159265358979 * t / (d.intervals + 1.0));
    double daily = std::sin(2 * 3.14159265358979 * day_frac * 7.0);
    d.temperature[t] =
        static_cast<float>(12.0 + 9.0 * season + 4.0 * daily + wx_rng.normal(0.0, 1.0));
    if (t % 6 == 0 || wx_rng.uniform() < 0.15)
      cond = wx_rng.categorical({0.45, 0.2, 0.25, 0.05, 0.05});
    d.weather[t] = static_cast<std::uint8_t>(cond);
  }

  // Accidents: per-region Poisson with rush-hour peaks, weekday factor,
  // and a weather bump. base_rate is tuned so that well over 70% of
  // region-intervals stay at zero.
  const double base_rate = 0.035;
  d.risk.assign(d.intervals * N, 0.0f);
  Rng acc_rng(Rng::mix(seed, 0xACC));
  for (std::int64_t t = 0; t < d.intervals; ++t) {
    int hour = hour_of_interval(t, h.interval_hours);
    int day = day_of_interval(t, h.interval_hours);
    double hour_f = rush_hour_multiplier(hour);
    double dow_f = (day % 7 >= 5) ? 0.75 : 1.0;
    double wx_f = (d.weather[t] == 1 || d.weather[t] == 3) ? 1.5 : 1.0;  // rain/snow
    for (int i = 0; i < N; ++i) {
      double lambda = base_rate * density[i] * hour_f * dow_f * wx_f;
      int count = acc_rng.poisson(lambda);
      float risk = 0.0f;
      for (int c = 0; c < count; ++c) {
        int sev = acc_rng.categorical({0.70, 0.22, 0.08});  // minor/injured/fatal
        risk += static_cast<float>(sev + 1);
      }
      d.risk[t * N + i] = risk;
    }
  }

  // Trips: pickups and dropoffs drawn from the density field, with the
  // same rush structure. Self-loops allowed.
  d.inflow.assign(d.intervals * N, 0.0f);
  d.outflow.assign(d.intervals * N, 0.0f);
  Rng trip_rng(Rng::mix(seed, 0x791));
  const double trips_per_hour = 0.9 * N;
  std::vector<double> pick_w(density.begin(), density.end());
  for (std::int64_t t = 0; t < d.intervals; ++t) {
    int hour = hour_of_interval(t, h.interval_hours);
    double hour_f = rush_hour_multiplier(hour);
    int trips = trip_rng.poisson(trips_per_hour * hour_f * 0.5);
    for (int k = 0; k < trips; ++k) {
      int a = trip_rng.categorical(pick_w);
      int b = trip_rng.categorical(pick_w);
      d.outflow[t * N + a] += 1.0f;
      d.inflow[t * N + b] += 1.0f;
    }
  }

  // RS tiles: low-frequency ground colour plus block texture whose
  // amount and contrast grow with POI density, so texture statistics
  // separate dense regions from sparse ones.
  d.rs.width = h.rs_width;
  d.rs.height = h.rs_height;
  d.rs.depth = h.rs_depth;
  d.rs.regions = N;
  d.rs.data.assign(d.rs.tile_size() * N, 0.0f);
  Rng rs_rng(Rng::mix(seed, 0x125));
  const int W = d.rs.width, H = d.rs.height, C = d.rs.depth;
  for (int i = 0; i < N; ++i) {
    double urban = std::clamp(density[i] / 2.5, 0.02, 0.98);
    float* tile = d.rs.tile(i);
    double ground[3] = {0.20 + 0.15 * rs_rng.uniform(), 0.35 + 0.2 * (1 - urban),
                        0.15 + 0.1 * rs_rng.uniform()};
    int blocks = static_cast<int>(2 + urban * 22);
    // Base field.
    for (int y = 0; y < H; ++y)
      for (int x = 0; x < W; ++x)
        for (int c = 0; c < C; ++c) {
          double v = ground[c % 3] + 0.04 * rs_rng.uniform();
          tile[(y * W + x) * C + c] = static_cast<float>(v);
        }
    // Rectangular "built" patches with high-contrast borders.
    for (int b = 0; b < blocks; ++b) {
      int bw = 2 + rs_rng.uniform_int(0, 4);
      int bh = 2 + rs_rng.uniform_int(0, 4);
      int x0 = rs_rng.uniform_int(0, std::max(0, W - bw - 1));
      int y0 = rs_rng.uniform_int(0, std::max(0, H - bh - 1));
      double bright = 0.55 + 0.4 * rs_rng.uniform();
      for (int y = y0; y < y0 + bh; ++y)
        for (int x = x0; x < x0 + bw; ++x)
          for (int c = 0; c < C; ++c) {
            bool border = (y == y0 || y == y0 + bh - 1 || x == x0 || x == x0 + bw - 1);
            double v = border ? bright : bright * 0.8;
            tile[(y * W + x) * C + c] = static_cast<float>(std::clamp(v, 0.0, 1.0));
          }
    }
  }

  d.split = split_dataset(d, h.p, h.q, ipw);
  return d;
}

}  // namespace riskcast
