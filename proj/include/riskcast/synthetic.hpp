#pragma once

#include <cstdint>

#include "riskcast/config.hpp"
#include "riskcast/dataset.hpp"

namespace riskcast {

// Deterministic synthetic city. Accident intensity has morning (7-9) and
// evening (16-19) rush peaks and per-region Poisson rates tied to a
// synthetic POI density field; at least 70% of region-intervals carry
// zero risk at the default scale. RS tiles are procedural textures whose
// statistics track the POI density. The split is frozen into the result.
Dataset generate_synthetic_city(std::uint64_t seed, const GridSpec& grid, int weeks,
                                const HyperParams& h);

// Hourly intensity multiplier used by the generator; exposed so tests can
// check the generated data against the generator's own intent.
double rush_hour_multiplier(int hour);

}  // namespace riskcast
