#pragma once

#include <span>
#include <string>
#include <vector>

#include "profsm/profile.hpp"
#include "profsm/rotations.hpp"

namespace profsm {

/// Edge capacity: a finite vector or the symbolic infinite marker.
struct VbCapacity {
  bool infinite = false;
  Profile vec;  // meaningful only when !infinite

  static VbCapacity finite(Profile p) { return {false, std::move(p)}; }
  static VbCapacity unbounded() { return {true, {}}; }
};

enum class Polarity { kPositive, kNegative, kZero };

struct VbEdge {
  int from = 0;
  int to = 0;
  VbCapacity cap;
};

/// Node 0 is the source, node 1 the sink, rotation i is node i + 2.
struct VbNetwork {
  static constexpr int kSource = 0;
  static constexpr int kSink = 1;
  static int node_of(int rotation) { return rotation + 2; }
  static int rotation_of(int node) { return node - 2; }

  std::size_t dim = 0;  // vector length of every capacity and flow
  std::vector<Polarity> polarity;
  std::vector<VbEdge> edges;

  int num_nodes() const { return static_cast<int>(polarity.size()) + 2; }
};

/// `profiles[i]` is the weight of rotation i. Negative rotations hang off
/// the source with capacity |p|, positive ones feed the sink with capacity
/// p, zero rotations get no terminal edge, and every digraph edge becomes
/// an infinite edge.
VbNetwork build_vb_network(std::span<const Profile> profiles, const RotationDigraph& digraph, std::size_t dim);
VbNetwork build_vb_network(std::span<const Rotation> rotations, const RotationDigraph& digraph, std::size_t dim);

struct VbFlow {
  std::vector<Profile> edge_flow;  // parallel to VbNetwork::edges
  Profile value;
};

/// Shortest-augmenting-path maximum flow under lexicographic vector order.
VbFlow max_vb_flow(const VbNetwork& net);

/// Throws std::logic_error if `flow` breaks a capacity bound or
/// conservation at a rotation node.
void validate_flow(const VbNetwork& net, const VbFlow& flow);

struct Cut {
  std::vector<int> edges;  // indices into VbNetwork::edges, ascending
  Profile capacity;
  std::vector<bool> source_side;  // per node
};

/// Cut induced by the residual-reachable set of a maximum flow. Throws
/// std::logic_error when the sink is still reachable.
Cut min_cut(const VbNetwork& net, const VbFlow& flow);

/// Positive rotations whose sink edge survives the cut, plus all of their
/// digraph ancestors. Sorted ascending.
std::vector<int> max_profile_closed_subset(const VbNetwork& net, const RotationDigraph& digraph, const Cut& cut);

/// One line per edge: `u -> v : cap | flow`, with `INF` for infinite
/// capacity and `s`, `t`, or the rotation id as node names.
std::string dump_network(const VbNetwork& net, const VbFlow* flow = nullptr);

}  // namespace profsm
