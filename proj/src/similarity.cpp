#include "riskcast/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace riskcast {

double jsd(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw DataError("jsd: length mismatch");
  const double kLog2 = 0.6931471805599453094;
  double sum_p = 0.0, sum_q = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || q[i] < 0) throw DataError("jsd: negative entry");
    sum_p += p[i];
    sum_q += q[i];
  }
  if (std::abs(sum_p - 1.0) > 1e-6 || std::abs(sum_q - 1.0) > 1e-6)
    throw DataError("jsd: inputs must sum to 1");

  // KL(P || M) + KL(Q || M) halves, term by term, with 0*log(0/x) = 0.
  double a = 0.0, b = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double m = p[i] + q[i];
    if (p[i] > 0) a += p[i] * std::log(2.0 * p[i] / m);
    if (q[i] > 0) b += q[i] * std::log(2.0 * q[i] / m);
  }
  double v = 0.5 * (a + b) / kLog2;
  if (v < 0.0) v = 0.0;
  if (v > 1.0) v = 1.0;
  return v;
}

double view_similarity(const std::vector<double>& a, const std::vector<double>& b) {
  auto all_zero = [](const std::vector<double>& v) {
    for (double x : v)
      if (x != 0.0) return false;
    return true;
  };
  if (all_zero(a) || all_zero(b)) return 0.0;
  return 1.0 - jsd(a, b);
}

ViewAdjacency build_view_adjacency(const std::vector<std::vector<double>>& descriptors, int k,
                                   const std::string& view) {
  const int n = static_cast<int>(descriptors.size());
  if (n < 2) throw DataError("build_view_adjacency needs at least 2 regions");
  if (k < 1) throw DataError("build_view_adjacency needs k >= 1");

  ViewAdjacency adj;
  adj.view = view;
  adj.nodes = n;
  adj.rows.resize(n);
  const int keep = std::min(k, n - 1);
  std::vector<std::pair<int, double>> cand;
  for (int i = 0; i < n; ++i) {
    cand.clear();
    cand.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      cand.emplace_back(j, view_similarity(descriptors[i], descriptors[j]));
    }
    std::stable_sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    cand.resize(keep);
    std::sort(cand.begin(), cand.end());  // column order within the row
    adj.rows[i] = cand;
  }
  return adj;
}

std::vector<double> compose_graph_signal(const ViewAdjacency& adj,
                                         const std::vector<double>& node_feats, int width) {
  if (node_feats.size() != static_cast<std::size_t>(adj.nodes) * width)
    throw DataError("compose_graph_signal: node feature shape mismatch");
  std::vector<double> out(static_cast<std::size_t>(adj.nodes) * width, 0.0);
  for (int i = 0; i < adj.nodes; ++i) {
    double* dst = out.data() + static_cast<std::size_t>(i) * width;
    for (const auto& [j, w] : adj.rows[i]) {
      const double* src = node_feats.data() + static_cast<std::size_t>(j) * width;
      for (int c = 0; c < width; ++c) dst[c] += w * src[c];
    }
  }
  return out;
}

std::string adjacency_to_coo(const ViewAdjacency& adj) {
  std::ostringstream out;
  out << "view " << adj.view << "\n";
  out << "nodes " << adj.nodes << "\n";
  char buf[64];
  for (int i = 0; i < adj.nodes; ++i)
    for (const auto& [j, w] : adj.rows[i]) {
      std::snprintf(buf, sizeof buf, "%d %d %.17g\n", i, j, w);
      out << buf;
    }
  return out.str();
}

ViewAdjacency adjacency_from_coo(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  ViewAdjacency adj;
  in >> tag >> adj.view;
  if (tag != "view") throw DataError("adjacency file: expected 'view' header");
  in >> tag >> adj.nodes;
  if (tag != "nodes" || adj.nodes < 1) throw DataError("adjacency file: bad 'nodes' header");
  adj.rows.resize(adj.nodes);
  int i, j;
  double w;
  while (in >> i >> j >> w) {
    if (i < 0 || i >= adj.nodes || j < 0 || j >= adj.nodes)
      throw DataError("adjacency file: index out of range");
    adj.rows[i].emplace_back(j, w);
  }
  return adj;
}

}  // namespace riskcast
