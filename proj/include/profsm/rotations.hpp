#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "profsm/instance.hpp"
#include "profsm/profile.hpp"

namespace profsm {

/// Cyclic exchange: man pairs[i].first moves from pairs[i].second to
/// pairs[i+1].second (indices modulo the cycle length).
struct Rotation {
  int id = 0;
  std::vector<std::pair<int, int>> pairs;
  Profile profile;
};

enum EdgeLabel : unsigned { kType1 = 1u, kType2 = 2u };

struct DigraphEdge {
  int from = 0;
  int to = 0;
  unsigned labels = 0;  // bitwise-or of EdgeLabel
  friend bool operator==(const DigraphEdge&, const DigraphEdge&) = default;
};

/// Precedence digraph over rotation ids 0..size()-1. Parallel edges are
/// merged into one edge carrying a label set.
class RotationDigraph {
 public:
  RotationDigraph() = default;
  explicit RotationDigraph(int num_rotations);

  int size() const { return static_cast<int>(preds_.size()); }
  const std::vector<DigraphEdge>& edges() const { return edges_; }
  const std::vector<int>& predecessors(int v) const { return preds_[v]; }
  const std::vector<int>& successors(int v) const { return succs_[v]; }

  void add_edge(int from, int to, EdgeLabel label);

  /// Kahn order; throws std::logic_error on a cycle.
  std::vector<int> topological_order() const;
  bool is_closed(std::span<const int> subset) const;
  /// `seeds` plus all of their ancestors, sorted ascending.
  std::vector<int> with_ancestors(std::span<const int> seeds) const;

 private:
  std::vector<DigraphEdge> edges_;
  std::unordered_map<long long, std::size_t> edge_index_;
  std::vector<std::vector<int>> preds_;
  std::vector<std::vector<int>> succs_;
};

/// All rotations of a preprocessed instance, found by eliminating exposed
/// rotations along one maximal chain from the man-optimal matching. Ids
/// follow discovery order.
std::vector<Rotation> find_rotations(const Instance& inst);

/// Net profile change of eliminating `rot`, length num_men.
Profile rotation_profile(const Instance& inst, const Rotation& rot);

RotationDigraph build_digraph(const Instance& inst, std::span<const Rotation> rotations);

/// Eliminates `subset` (any order) from `m0` following the digraph's
/// topological order. Throws std::invalid_argument when `subset` is not
/// closed under predecessors, std::logic_error when a rotation is not exposed.
Matching eliminate_closed_subset(const Instance& inst, const Matching& m0, std::span<const Rotation> rotations,
                                 const RotationDigraph& digraph, std::span<const int> subset);

/// One line per rotation: `id: (i,j) (i,j) ... | profile` (1-based agents).
std::string dump_rotations(std::span<const Rotation> rotations);

}  // namespace profsm
