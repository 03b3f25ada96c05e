#include "riskcast/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "riskcast/errors.hpp"

namespace riskcast {

bool HyperParams::view_enabled(const std::string& v) const {
  return std::find(views.begin(), views.end(), v) != views.end();
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& s) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw ConfigError(key + ": not a number: '" + s + "'");
  }
}

int to_int(const std::string& key, const std::string& s) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (...) {
    throw ConfigError(key + ": not an integer: '" + s + "'");
  }
}

bool to_bool(const std::string& key, const std::string& s) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw ConfigError(key + ": not a boolean: '" + s + "'");
}

std::vector<double> to_dlist(const std::string& key, const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split_list(s)) out.push_back(to_double(key, item));
  return out;
}

std::vector<int> to_ilist(const std::string& key, const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) out.push_back(to_int(key, item));
  return out;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join_d(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += fmt(v[i]);
  }
  return s;
}

std::string join_i(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_s(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i];
  }
  return s;
}

}  // namespace

HyperParams validate_config(HyperParams h) {
  if (h.p < 1) throw ConfigError("p must be >= 1");
  if (h.q < 1) throw ConfigError("q must be >= 1");
  if (h.levels < 1) throw ConfigError("levels must be >= 1");
  if (h.top_k < 1) throw ConfigError("top_k must be >= 1");
  if (h.conv_layers < 1) throw ConfigError("conv_layers must be >= 1");
  if (h.attention_blocks < 1) throw ConfigError("attention_blocks must be >= 1");
  if (h.d_model < 2 || h.d_model % 2 != 0)
    throw ConfigError("d_model must be even and >= 2 (positional encoding pairs dims)");
  if (h.d_ta != h.d_model)
    throw ConfigError("d_ta must equal d_model (the feed-forward output is added residually)");
  if (h.use_rs && h.d_a < 1) throw ConfigError("d_a must be >= 1 when use_rs is enabled");

  if (h.risk_level_weights.size() != 4) throw ConfigError("risk_level_weights must have 4 entries");
  for (double w : h.risk_level_weights)
    if (w < 0) throw ConfigError("risk_level_weights must be >= 0");
  if (h.risk_level_thresholds.size() != 3)
    throw ConfigError("risk_level_thresholds must have 3 entries");
  for (std::size_t i = 1; i < h.risk_level_thresholds.size(); ++i)
    if (h.risk_level_thresholds[i] <= h.risk_level_thresholds[i - 1])
      throw ConfigError("risk_level_thresholds must be strictly increasing");

  if (h.lambda_f < 0) throw ConfigError("lambda_f must be >= 0");
  if (h.lambda_c < 0) throw ConfigError("lambda_c must be >= 0");

  if (h.lambda_w.empty()) h.lambda_w.assign(h.levels, 1.0);
  if (h.lambda_b.empty()) {
    h.lambda_b.resize(h.levels);
    for (int i = 0; i < h.levels; ++i) h.lambda_b[i] = i < 2 ? 3e-4 : 1e-5;
  }
  if (static_cast<int>(h.lambda_w.size()) != h.levels)
    throw ConfigError("lambda_w must have one entry per level");
  if (static_cast<int>(h.lambda_b.size()) != h.levels)
    throw ConfigError("lambda_b must have one entry per level");
  for (double w : h.lambda_w)
    if (w < 0) throw ConfigError("lambda_w entries must be >= 0");
  for (double w : h.lambda_b)
    if (w < 0) throw ConfigError("lambda_b entries must be >= 0");
  if (h.lambda_hc < 0) throw ConfigError("lambda_hc must be >= 0");

  if (h.learning_rate <= 0) throw ConfigError("learning_rate must be > 0");
  if (h.batch_size < 1) throw ConfigError("batch_size must be >= 1");
  if (h.epochs < 0) throw ConfigError("epochs must be >= 0");
  if (h.interval_hours < 1 || 24 % h.interval_hours != 0)
    throw ConfigError("interval_hours must divide 24");

  if (!h.part_numbers.empty()) {
    if (static_cast<int>(h.part_numbers.size()) != h.levels - 1)
      throw ConfigError("part_numbers must have levels-1 entries");
    for (std::size_t i = 0; i < h.part_numbers.size(); ++i) {
      if (h.part_numbers[i] < 1) throw ConfigError("part_numbers entries must be >= 1");
      if (i > 0 && h.part_numbers[i] >= h.part_numbers[i - 1])
        throw ConfigError("part_numbers must be strictly decreasing");
    }
  }

  if (h.views.empty()) throw ConfigError("views must not be empty");
  for (const auto& v : h.views) {
    if (v != "road" && v != "risk" && v != "poi")
      throw ConfigError("views entries must be one of road, risk, poi");
    if (std::count(h.views.begin(), h.views.end(), v) != 1)
      throw ConfigError("views entries must be unique");
  }

  if (h.rs_width < 4 || h.rs_height < 4)
    throw ConfigError("rs_width/rs_height must be >= 4 (two pooling stages)");
  if (h.rs_width % 4 != 0 || h.rs_height % 4 != 0)
    throw ConfigError("rs_width/rs_height must be multiples of 4 (two pooling stages)");
  if (h.rs_depth < 1) throw ConfigError("rs_depth must be >= 1");
  if (h.pretrain_epochs < 0) throw ConfigError("pretrain_epochs must be >= 0");
  if (h.pretrain_lr <= 0) throw ConfigError("pretrain_lr must be > 0");

  return h;
}

HyperParams parse_config(const std::string& text) {
  HyperParams h;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));

    if (key == "p") h.p = to_int(key, val);
    else if (key == "q") h.q = to_int(key, val);
    else if (key == "levels") h.levels = to_int(key, val);
    else if (key == "top_k") h.top_k = to_int(key, val);
    else if (key == "conv_layers") h.conv_layers = to_int(key, val);
    else if (key == "attention_blocks") h.attention_blocks = to_int(key, val);
    else if (key == "d_model") h.d_model = to_int(key, val);
    else if (key == "d_ta") h.d_ta = to_int(key, val);
    else if (key == "d_a") h.d_a = to_int(key, val);
    else if (key == "use_rs") h.use_rs = to_bool(key, val);
    else if (key == "risk_level_weights") h.risk_level_weights = to_dlist(key, val);
    else if (key == "risk_level_thresholds") h.risk_level_thresholds = to_dlist(key, val);
    else if (key == "lambda_f") h.lambda_f = to_double(key, val);
    else if (key == "lambda_c") h.lambda_c = to_double(key, val);
    else if (key == "lambda_w") h.lambda_w = to_dlist(key, val);
    else if (key == "lambda_b") h.lambda_b = to_dlist(key, val);
    else if (key == "lambda_hc") h.lambda_hc = to_double(key, val);
    else if (key == "learning_rate") h.learning_rate = to_double(key, val);
    else if (key == "batch_size") h.batch_size = to_int(key, val);
    else if (key == "epochs") h.epochs = to_int(key, val);
    else if (key == "interval_hours") h.interval_hours = to_int(key, val);
    else if (key == "part_numbers") h.part_numbers = to_ilist(key, val);
    else if (key == "graph_sizes") h.graph_sizes = to_ilist(key, val);
    else if (key == "views") h.views = split_list(val);
    else if (key == "rs_width") h.rs_width = to_int(key, val);
    else if (key == "rs_height") h.rs_height = to_int(key, val);
    else if (key == "rs_depth") h.rs_depth = to_int(key, val);
    else if (key == "pretrain_epochs") h.pretrain_epochs = to_int(key, val);
    else if (key == "pretrain_lr") h.pretrain_lr = to_double(key, val);
    else throw ConfigError("unknown config key '" + key + "'");
  }
  return validate_config(h);
}

HyperParams load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string config_to_string(const HyperParams& h) {
  std::ostringstream out;
  out << "p = " << h.p << "\n";
  out << "q = " << h.q << "\n";
  out << "levels = " << h.levels << "\n";
  out << "top_k = " << h.top_k << "\n";
  out << "conv_layers = " << h.conv_layers << "\n";
  out << "attention_blocks = " << h.attention_blocks << "\n";
  out << "d_model = " << h.d_model << "\n";
  out << "d_ta = " << h.d_ta << "\n";
  out << "d_a = " << h.d_a << "\n";
  out << "use_rs = " << (h.use_rs ? "true" : "false") << "\n";
  out << "risk_level_weights = " << join_d(h.risk_level_weights) << "\n";
  out << "risk_level_thresholds = " << join_d(h.risk_level_thresholds) << "\n";
  out << "lambda_f = " << fmt(h.lambda_f) << "\n";
  out << "lambda_c = " << fmt(h.lambda_c) << "\n";
  out << "lambda_w = " << join_d(h.lambda_w) << "\n";
  out << "lambda_b = " << join_d(h.lambda_b) << "\n";
  out << "lambda_hc = " << fmt(h.lambda_hc) << "\n";
  out << "learning_rate = " << fmt(h.learning_rate) << "\n";
  out << "batch_size = " << h.batch_size << "\n";
  out << "epochs = " << h.epochs << "\n";
  out << "interval_hours = " << h.interval_hours << "\n";
  if (!h.part_numbers.empty()) out << "part_numbers = " << join_i(h.part_numbers) << "\n";
  if (!h.graph_sizes.empty()) out << "graph_sizes = " << join_i(h.graph_sizes) << "\n";
  out << "views = " << join_s(h.views) << "\n";
  out << "rs_width = " << h.rs_width << "\n";
  out << "rs_height = " << h.rs_height << "\n";
  out << "rs_depth = " << h.rs_depth << "\n";
  out << "pretrain_epochs = " << h.pretrain_epochs << "\n";
  out << "pretrain_lr = " << fmt(h.pretrain_lr) << "\n";
  return out.str();
}

void save_config(const HyperParams& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write config file: " + path);
  out << config_to_string(h);
}

std::uint64_t config_hash(const HyperParams& h) {
  std::string s = config_to_string(h);
  std::uint64_t hash = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : s) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

}  // namespace riskcast
