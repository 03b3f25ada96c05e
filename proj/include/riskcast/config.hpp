#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace riskcast {

// All tunables in one place. Defaults follow the reference setting:
// p=3, q=4, 4 granularity levels, fusion coefficients 0.8/0.2, WMSE
// level weights (0.05, 0.2, 0.25, 0.5), Adam with batch 32 and lr 1e-4
// for 70 epochs. Loss weights default to the NYC-style setting.
struct HyperParams {
  int p = 3;                     // short-term window length
  int q = 4;                     // long-term (weekly) window length
  int levels = 4;                // granularity levels, finest included
  int top_k = 20;                // neighbors kept per node in each view
  int conv_layers = 2;           // region-branch conv depth (K_st)
  int attention_blocks = 2;      // self-attention blocks per stack (K_ta)
  int d_model = 32;              // encoder output width (must be even)
  int d_ta = 32;                 // feed-forward width; must equal d_model
  int d_a = 8;                   // remote-sensing enhancement channels
  bool use_rs = true;            // concatenate RS features onto ST

  std::vector<double> risk_level_weights{0.05, 0.2, 0.25, 0.5};
  std::vector<double> risk_level_thresholds{0.0, 2.0, 4.0};  // level boundaries

  double lambda_f = 0.8;  // fine-side fusion coefficient
  double lambda_c = 0.2;  // coarse-side fusion coefficient

  std::vector<double> lambda_w;  // per-level WMSE weights; empty -> all 1
  std::vector<double> lambda_b;  // per-level BCE weights; empty -> 3e-4 for two finest, 1e-5 after
  double lambda_hc = 1.0;

  double learning_rate = 1e-4;
  int batch_size = 32;
  int epochs = 70;

  int interval_hours = 1;
  std::vector<int> part_numbers;  // levels-1 entries; empty -> derived from N at build time
  std::vector<int> graph_sizes;   // accepted for compatibility; clustering ignores it
  std::vector<std::string> views{"road", "risk", "poi"};

  int rs_width = 32;
  int rs_height = 32;
  int rs_depth = 3;

  int pretrain_epochs = 30;
  double pretrain_lr = 0.05;

  int intervals_per_week() const { return 7 * 24 / interval_hours; }
  int sequence_length() const { return p + q; }
  bool view_enabled(const std::string& v) const;
};

// Normalizes and checks a config. Throws ConfigError naming the first
// violated constraint. Fills per-level loss-weight defaults.
HyperParams validate_config(HyperParams h);

// Key-value config file ("key = value", '#' comments, comma lists).
HyperParams parse_config(const std::string& text);
HyperParams load_config(const std::string& path);
std::string config_to_string(const HyperParams& h);
void save_config(const HyperParams& h, const std::string& path);

// Stable hash of the canonical serialization; checkpoints refuse to load
// when it does not match.
std::uint64_t config_hash(const HyperParams& h);

}  // namespace riskcast
