#pragma once

#include <string>
#include <vector>

#include "riskcast/errors.hpp"

namespace riskcast {

// One similarity view over the regions, kept as sparse rows: each row
// holds the retained neighbors (column index, weight in [0,1]). Rows are
// top-K sparsified and intentionally not symmetrized.
struct ViewAdjacency {
  std::string view;  // "road", "risk" or "poi"
  int nodes = 0;
  std::vector<std::vector<std::pair<int, double>>> rows;

  int row_nonzeros(int i) const { return static_cast<int>(rows[i].size()); }
};

// Jensen-Shannon divergence with base-2 logarithms; 0 iff P=Q, 1 iff the
// supports are disjoint. Inputs must be same-length distributions.
double jsd(const std::vector<double>& p, const std::vector<double>& q);

// 1 - jsd of the two per-region descriptors. All-zero descriptors carry
// no signal: their similarity to anything is 0.
double view_similarity(const std::vector<double>& a, const std::vector<double>& b);

// Top-K most similar neighbors per row, weights = similarities, ties
// broken toward the smaller region index.
ViewAdjacency build_view_adjacency(const std::vector<std::vector<double>>& descriptors, int k,
                                   const std::string& view);

// M_A * M_n for one view: node_feats is row-major [nodes][width].
std::vector<double> compose_graph_signal(const ViewAdjacency& adj,
                                         const std::vector<double>& node_feats, int width);

// Coordinate-list serialization with a view tag.
std::string adjacency_to_coo(const ViewAdjacency& adj);
ViewAdjacency adjacency_from_coo(const std::string& text);

}  // namespace riskcast
