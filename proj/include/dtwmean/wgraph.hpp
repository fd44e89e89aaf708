#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtwmean/dtw.hpp"

namespace dtwmean {

/// An edge (v, w) of a bipartite chain graph, 1-based in both partitions.
struct GraphEdge {
  int v = 0;
  int w = 0;
  auto operator<=>(const GraphEdge&) const = default;
};

/// A warping graph of size m x n: the bipartite chain-graph view of an
/// alignment. Partitions are the index chains 1..m and 1..n; the edge list is
/// kept in warping-chain order, so (1,1) is first, (m,n) is last, and each
/// edge is a successor of the previous one.
struct WarpingGraph {
  int m = 0;
  int n = 0;
  std::vector<GraphEdge> edges;

  bool operator==(const WarpingGraph&) const = default;
};

enum class Partition { V, W };

struct NodeRef {
  Partition part = Partition::V;
  int index = 0;  // 1-based
  auto operator<=>(const NodeRef&) const = default;
};

/// A connected component of a compact warping graph. Components are always
/// complete stars: K_{1,r} has its center in V, K_{r,1} in W. A K_{1,1}
/// component is reported as K_{1,r} with one leaf.
struct StarComponent {
  enum class Form { K1R, KR1 };
  Form form = Form::K1R;
  NodeRef center;
  std::vector<NodeRef> leaves;

  int v_count() const;
  int w_count() const;
};

std::optional<std::string> warping_graph_violation(const WarpingGraph& g);
void require_valid_graph(const WarpingGraph& g);

WarpingGraph path_to_graph(const WarpingPath& p);
WarpingPath graph_to_path(const WarpingGraph& g);

/// True iff no single edge can be deleted while keeping a valid warping
/// graph; equivalently edge l+2 is never a successor of edge l.
bool is_compact(const WarpingGraph& g);

/// Deletes removable edges front to back until the graph is compact.
/// Idempotent and deterministic.
WarpingGraph compactify(const WarpingGraph& g);

/// Star decomposition of a compact warping graph. Rejects non-compact input.
std::vector<StarComponent> star_components(const WarpingGraph& g);

/// Neighbor indices of a node, ascending. For a valid warping graph this is
/// always a contiguous interval of the opposite partition.
std::vector<int> neighborhood(const WarpingGraph& g, Partition part, int index);

/// Nodes of the chosen partition all of whose neighbors have degree >= 2,
/// ascending. Requires a compact graph.
std::vector<int> redundant_nodes(const WarpingGraph& g, Partition part);

/// Removes a redundant V-node and its incident edges, reindexing the V chain.
/// The result is again a compact warping graph of size (m-1) x n. Deleting a
/// non-redundant node is rejected.
WarpingGraph delete_node(const WarpingGraph& g, int v_index);

}  // namespace dtwmean
