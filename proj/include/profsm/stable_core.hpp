#pragma once

#include <optional>
#include <utility>

#include "profsm/instance.hpp"

namespace profsm {

/// Men-proposing extended Gale-Shapley. Proposals are processed from a
/// stack seeded in ascending man order, so the run is deterministic.
Matching man_optimal(const Instance& inst);
/// Women-proposing counterpart.
Matching woman_optimal(const Instance& inst);

struct StabilityResult {
  bool stable = false;
  /// A blocking (man, woman) pair when `stable` is false.
  std::optional<std::pair<int, int>> blocking_pair;

  explicit operator bool() const { return stable; }
};

StabilityResult is_stable(const Instance& inst, const Matching& m);

/// Smallest d for which truncating every list at rank d keeps a perfect
/// stable matching. 0 for the empty instance.
int min_regret_degree(const Instance& inst);

/// Lists cut after rank `cutoff` on both sides, then re-filtered for mutuality.
struct TruncatedInstance {
  int cutoff = 0;
  Instance instance;
};

/// Throws std::invalid_argument when cutoff < min_regret_degree(inst).
TruncatedInstance truncate(const Instance& inst, int cutoff);

}  // namespace profsm
