#include "dtwmean/wgraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dtwmean {

namespace {

bool is_successor(const GraphEdge& a, const GraphEdge& b) {
  const int dv = b.v - a.v;
  const int dw = b.w - a.w;
  return (dv == 1 && dw == 0) || (dv == 0 && dw == 1) || (dv == 1 && dw == 1);
}

struct Adjacency {
  std::vector<std::vector<int>> of_v;  // 1-based, [0] unused
  std::vector<std::vector<int>> of_w;
};

Adjacency adjacency(const WarpingGraph& g) {
  Adjacency adj;
  adj.of_v.resize(static_cast<std::size_t>(g.m) + 1);
  adj.of_w.resize(static_cast<std::size_t>(g.n) + 1);
  for (const auto& e : g.edges) {
    adj.of_v[e.v].push_back(e.w);
    adj.of_w[e.w].push_back(e.v);
  }
  return adj;
}

}  // namespace

int StarComponent::v_count() const {
  int c = center.part == Partition::V ? 1 : 0;
  for (const auto& leaf : leaves)
    if (leaf.part == Partition::V) ++c;
  return c;
}

int StarComponent::w_count() const {
  int c = center.part == Partition::W ? 1 : 0;
  for (const auto& leaf : leaves)
    if (leaf.part == Partition::W) ++c;
  return c;
}

std::optional<std::string> warping_graph_violation(const WarpingGraph& g) {
  if (g.m < 1 || g.n < 1) return "size: partitions must be non-empty";
  if (g.edges.empty()) return "boundary: graph has no edges";
  for (const auto& e : g.edges) {
    if (e.v < 1 || e.v > g.m || e.w < 1 || e.w > g.n) {
      std::ostringstream msg;
      msg << "range: edge (" << e.v << "," << e.w << ") outside [1.." << g.m
          << "]x[1.." << g.n << "]";
      return msg.str();
    }
  }
  if (g.edges.front() != GraphEdge{1, 1})
    return "boundary: first edge must be (1,1)";
  if (g.edges.back() != GraphEdge{g.m, g.n}) {
    std::ostringstream msg;
    msg << "boundary: last edge must be (" << g.m << "," << g.n << ")";
    return msg.str();
  }
  for (std::size_t l = 0; l + 1 < g.edges.size(); ++l) {
    if (!is_successor(g.edges[l], g.edges[l + 1])) {
      std::ostringstream msg;
      msg << "step: edge (" << g.edges[l + 1].v << "," << g.edges[l + 1].w
          << ") is not a successor of (" << g.edges[l].v << "," << g.edges[l].w << ")";
      return msg.str();
    }
  }
  return std::nullopt;
}

void require_valid_graph(const WarpingGraph& g) {
  if (auto why = warping_graph_violation(g))
    throw std::invalid_argument("invalid warping graph: " + *why);
}

WarpingGraph path_to_graph(const WarpingPath& p) {
  require_valid_path(p);
  WarpingGraph g;
  g.m = p.m;
  g.n = p.n;
  g.edges.reserve(p.points.size());
  for (const auto& pt : p.points) g.edges.push_back({pt.i, pt.j});
  return g;
}

WarpingPath graph_to_path(const WarpingGraph& g) {
  require_valid_graph(g);
  WarpingPath p;
  p.m = g.m;
  p.n = g.n;
  p.points.reserve(g.edges.size());
  for (const auto& e : g.edges) p.points.push_back({e.v, e.w});
  return p;
}

bool is_compact(const WarpingGraph& g) {
  require_valid_graph(g);
  for (std::size_t l = 0; l + 2 < g.edges.size(); ++l)
    if (is_successor(g.edges[l], g.edges[l + 2])) return false;
  return true;
}

WarpingGraph compactify(const WarpingGraph& g) {
  require_valid_graph(g);
  WarpingGraph out = g;
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t l = 0; l + 2 < out.edges.size(); ++l) {
      if (is_successor(out.edges[l], out.edges[l + 2])) {
        out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(l) + 1);
        removed = true;
        break;
      }
    }
  }
  return out;
}

std::vector<StarComponent> star_components(const WarpingGraph& g) {
  if (!is_compact(g))
    throw std::invalid_argument("star decomposition requires a compact warping graph");
  const auto adj = adjacency(g);

  std::vector<bool> seen_v(static_cast<std::size_t>(g.m) + 1, false);
  std::vector<bool> seen_w(static_cast<std::size_t>(g.n) + 1, false);
  std::vector<StarComponent> components;

  for (int start = 1; start <= g.m; ++start) {
    if (seen_v[start]) continue;
    std::vector<int> vs;
    std::vector<int> ws;
    std::vector<NodeRef> stack{{Partition::V, start}};
    seen_v[start] = true;
    while (!stack.empty()) {
      const NodeRef node = stack.back();
      stack.pop_back();
      if (node.part == Partition::V) {
        vs.push_back(node.index);
        for (int w : adj.of_v[node.index]) {
          if (!seen_w[w]) {
            seen_w[w] = true;
            stack.push_back({Partition::W, w});
          }
        }
      } else {
        ws.push_back(node.index);
        for (int v : adj.of_w[node.index]) {
          if (!seen_v[v]) {
            seen_v[v] = true;
            stack.push_back({Partition::V, v});
          }
        }
      }
    }
    std::sort(vs.begin(), vs.end());
    std::sort(ws.begin(), ws.end());

    StarComponent comp;
    if (vs.size() == 1) {
      comp.form = StarComponent::Form::K1R;
      comp.center = {Partition::V, vs.front()};
      for (int w : ws) comp.leaves.push_back({Partition::W, w});
    } else if (ws.size() == 1) {
      comp.form = StarComponent::Form::KR1;
      comp.center = {Partition::W, ws.front()};
      for (int v : vs) comp.leaves.push_back({Partition::V, v});
    } else {
      throw std::logic_error("compact warping graph has a non-star component");
    }
    components.push_back(std::move(comp));
  }
  return components;
}

std::vector<int> neighborhood(const WarpingGraph& g, Partition part, int index) {
  require_valid_graph(g);
  const int limit = part == Partition::V ? g.m : g.n;
  if (index < 1 || index > limit)
    throw std::invalid_argument("node index out of range");
  const auto adj = adjacency(g);
  auto nbrs = part == Partition::V ? adj.of_v[index] : adj.of_w[index];
  std::sort(nbrs.begin(), nbrs.end());
  return nbrs;
}

std::vector<int> redundant_nodes(const WarpingGraph& g, Partition part) {
  if (!is_compact(g))
    throw std::invalid_argument("redundancy is only defined on compact warping graphs");
  const auto adj = adjacency(g);
  const auto& own = part == Partition::V ? adj.of_v : adj.of_w;
  const auto& other = part == Partition::V ? adj.of_w : adj.of_v;
  const int count = part == Partition::V ? g.m : g.n;

  std::vector<int> result;
  for (int i = 1; i <= count; ++i) {
    bool all_shared = true;
    for (int j : own[i]) {
      if (other[j].size() < 2) {
        all_shared = false;
        break;
      }
    }
    if (all_shared) result.push_back(i);
  }
  return result;
}

WarpingGraph delete_node(const WarpingGraph& g, int v_index) {
  if (!is_compact(g))
    throw std::invalid_argument("node deletion requires a compact warping graph");
  if (v_index < 1 || v_index > g.m)
    throw std::invalid_argument("node index out of range");
  const auto adj = adjacency(g);
  for (int w : adj.of_v[v_index]) {
    if (adj.of_w[w].size() < 2) {
      std::ostringstream msg;
      msg << "node " << v_index << " is not redundant: neighbor " << w
          << " has no other alignment";
      throw std::invalid_argument(msg.str());
    }
  }

  WarpingGraph out;
  out.m = g.m - 1;
  out.n = g.n;
  for (const auto& e : g.edges) {
    if (e.v == v_index) continue;
    out.edges.push_back({e.v > v_index ? e.v - 1 : e.v, e.w});
  }
  require_valid_graph(out);
  if (!is_compact(out))
    throw std::logic_error("deleting a redundant node produced a non-compact graph");
  return out;
}

}  // namespace dtwmean
