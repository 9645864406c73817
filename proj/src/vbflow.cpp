#include "profsm/vbflow.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

namespace profsm {

namespace {

Polarity polarity_of(const Profile& p) {
  const int s = p.lex_sign();
  return s > 0 ? Polarity::kPositive : (s < 0 ? Polarity::kNegative : Polarity::kZero);
}

// Incidence lists: for each node, (edge index, true if the node is the tail).
std::vector<std::vector<std::pair<int, bool>>> incidence(const VbNetwork& net) {
  std::vector<std::vector<std::pair<int, bool>>> inc(net.num_nodes());
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    inc[net.edges[e].from].emplace_back(static_cast<int>(e), true);
    inc[net.edges[e].to].emplace_back(static_cast<int>(e), false);
  }
  return inc;
}

bool forward_open(const VbEdge& e, const Profile& f) { return e.cap.infinite || f < e.cap.vec; }
bool backward_open(const Profile& f) { return f.lex_sign() > 0; }

// BFS over the residual graph. parent[v] = (edge, forward?) used to reach v.
struct Search {
  std::vector<bool> seen;
  std::vector<std::pair<int, bool>> parent;
};

Search residual_bfs(const VbNetwork& net, const std::vector<std::vector<std::pair<int, bool>>>& inc,
                    const std::vector<Profile>& flow) {
  Search s{std::vector<bool>(net.num_nodes(), false), std::vector<std::pair<int, bool>>(net.num_nodes(), {-1, true})};
  std::deque<int> queue{VbNetwork::kSource};
  s.seen[VbNetwork::kSource] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (auto [e, tail] : inc[u]) {
      const VbEdge& edge = net.edges[e];
      const int v = tail ? edge.to : edge.from;
      if (s.seen[v]) continue;
      if (tail ? !forward_open(edge, flow[e]) : !backward_open(flow[e])) continue;
      s.seen[v] = true;
      s.parent[v] = {e, tail};
      if (v == VbNetwork::kSink) return s;
      queue.push_back(v);
    }
  }
  return s;
}

}  // namespace

VbNetwork build_vb_network(std::span<const Profile> profiles, const RotationDigraph& digraph, std::size_t dim) {
  if (static_cast<int>(profiles.size()) != digraph.size()) {
    throw std::invalid_argument("profile count does not match the digraph");
  }
  VbNetwork net;
  net.dim = dim;
  for (const auto& p : profiles) net.polarity.push_back(polarity_of(p));
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (net.polarity[i] == Polarity::kNegative) {
      net.edges.push_back({VbNetwork::kSource, VbNetwork::node_of(static_cast<int>(i)),
                           VbCapacity::finite(profile_abs(profiles[i]).resized(dim))});
    }
  }
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (net.polarity[i] == Polarity::kPositive) {
      net.edges.push_back({VbNetwork::node_of(static_cast<int>(i)), VbNetwork::kSink,
                           VbCapacity::finite(profiles[i].resized(dim))});
    }
  }
  for (const auto& e : digraph.edges()) {
    net.edges.push_back({VbNetwork::node_of(e.from), VbNetwork::node_of(e.to), VbCapacity::unbounded()});
  }
  return net;
}

VbNetwork build_vb_network(std::span<const Rotation> rotations, const RotationDigraph& digraph, std::size_t dim) {
  std::vector<Profile> profiles;
  profiles.reserve(rotations.size());
  for (const auto& r : rotations) profiles.push_back(r.profile);
  return build_vb_network(profiles, digraph, dim);
}

VbFlow max_vb_flow(const VbNetwork& net) {
  const auto inc = incidence(net);
  VbFlow out;
  out.edge_flow.assign(net.edges.size(), Profile(net.dim));
  out.value = Profile(net.dim);

  for (;;) {
    const Search s = residual_bfs(net, inc, out.edge_flow);
    if (!s.seen[VbNetwork::kSink]) break;

    std::optional<Profile> bottleneck;
    for (int v = VbNetwork::kSink; v != VbNetwork::kSource;) {
      const auto [e, fwd] = s.parent[v];
      const VbEdge& edge = net.edges[e];
      if (fwd) {
        if (!edge.cap.infinite) {
          Profile r = edge.cap.vec - out.edge_flow[e];
          if (!bottleneck || r < *bottleneck) bottleneck = std::move(r);
        }
        v = edge.from;
      } else {
        if (!bottleneck || out.edge_flow[e] < *bottleneck) bottleneck = out.edge_flow[e];
        v = edge.to;
      }
    }
    // Every s-t path leaves s on a finite edge, so a bottleneck exists.
    if (!bottleneck) throw std::logic_error("augmenting path without a finite edge");

    for (int v = VbNetwork::kSink; v != VbNetwork::kSource;) {
      const auto [e, fwd] = s.parent[v];
      if (fwd) {
        out.edge_flow[e] += *bottleneck;
        v = net.edges[e].from;
      } else {
        out.edge_flow[e] -= *bottleneck;
        v = net.edges[e].to;
      }
    }
    out.value += *bottleneck;
  }
  return out;
}

void validate_flow(const VbNetwork& net, const VbFlow& flow) {
  if (flow.edge_flow.size() != net.edges.size()) throw std::logic_error("flow has the wrong number of edges");
  std::vector<Profile> balance(net.num_nodes(), Profile(net.dim));
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    const auto& f = flow.edge_flow[e];
    const auto& edge = net.edges[e];
    if (f.lex_sign() < 0) throw std::logic_error("negative flow on edge " + std::to_string(e));
    if (!edge.cap.infinite && f > edge.cap.vec) throw std::logic_error("flow exceeds capacity on edge " + std::to_string(e));
    balance[edge.from] -= f;
    balance[edge.to] += f;
  }
  for (int v = 2; v < net.num_nodes(); ++v) {
    if (!balance[v].is_zero()) throw std::logic_error("flow not conserved at rotation " + std::to_string(v - 2));
  }
  if (balance[VbNetwork::kSink] != flow.value) throw std::logic_error("flow value does not match sink inflow");
}

Cut min_cut(const VbNetwork& net, const VbFlow& flow) {
  const auto inc = incidence(net);
  const Search s = residual_bfs(net, inc, flow.edge_flow);
  if (s.seen[VbNetwork::kSink]) throw std::logic_error("flow is not maximum: the sink is residual-reachable");
  Cut cut;
  cut.source_side = s.seen;
  cut.capacity = Profile(net.dim);
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    const auto& edge = net.edges[e];
    if (s.seen[edge.from] && !s.seen[edge.to]) {
      if (edge.cap.infinite) throw std::logic_error("infinite edge crosses the residual cut");
      cut.edges.push_back(static_cast<int>(e));
      cut.capacity += edge.cap.vec;
    }
  }
  return cut;
}

std::vector<int> max_profile_closed_subset(const VbNetwork& net, const RotationDigraph& digraph, const Cut& cut) {
  std::vector<bool> cut_edge(net.edges.size(), false);
  for (int e : cut.edges) cut_edge[e] = true;
  std::vector<int> seeds;
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    if (net.edges[e].to == VbNetwork::kSink && !cut_edge[e]) seeds.push_back(VbNetwork::rotation_of(net.edges[e].from));
  }
  return digraph.with_ancestors(seeds);
}

std::string dump_network(const VbNetwork& net, const VbFlow* flow) {
  auto name = [](int v) -> std::string {
    if (v == VbNetwork::kSource) return "s";
    if (v == VbNetwork::kSink) return "t";
    return std::to_string(VbNetwork::rotation_of(v));
  };
  std::string out;
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    const auto& edge = net.edges[e];
    out += name(edge.from) + " -> " + name(edge.to) + " : ";
    out += edge.cap.infinite ? "INF" : edge.cap.vec.to_string();
    out += " | ";
    out += flow ? flow->edge_flow[e].to_string() : "0";
    out += '\n';
  }
  return out;
}

}  // namespace profsm
