#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "profsm/instance.hpp"
#include "profsm/profile.hpp"
#include "profsm/rotations.hpp"
#include "profsm/vbflow.hpp"

namespace profsm {

enum class Criterion {
  kRankMaximal,
  kGenerous,
  kEgalitarian,
  kSexEqual,
  kMedian,
  kMinRegret,
  kManOptimal,
  kWomanOptimal,
};

std::span<const Criterion> all_criteria();
std::string_view criterion_token(Criterion c);
std::optional<Criterion> parse_criterion(std::string_view token);
/// True for criteria answered by enumerating every stable matching.
bool needs_enumeration(Criterion c);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

class EnumerationCapExceeded : public std::runtime_error {
 public:
  explicit EnumerationCapExceeded(std::size_t cap)
      : std::runtime_error("more than " + std::to_string(cap) + " stable matchings"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

enum class FlowMode { kRankMaximal, kGenerous };

/// Every intermediate of the flow pipeline, kept for inspection and tests.
struct FlowSolution {
  FlowMode mode = FlowMode::kRankMaximal;
  /// Profile window: n for rank-maximal, the minimum-regret degree for
  /// generous.
  int window = 0;
  /// Instance the rotations belong to (lists cut at `window` for generous).
  Instance instance;
  Matching m0;
  std::vector<Rotation> rotations;
  RotationDigraph digraph;
  /// Per-rotation weights fed to the network.
  std::vector<Profile> weights;
  VbNetwork network;
  VbFlow flow;
  Cut cut;
  std::vector<int> closed_subset;
  Matching matching;
};

FlowSolution solve_profile_flow(const Instance& inst, FlowMode mode);
Matching solve_rank_maximal(const Instance& inst);
Matching solve_generous(const Instance& inst);

/// Every stable matching exactly once, man-optimal first. Throws
/// EnumerationCapExceeded once more than `cap` matchings exist.
std::vector<Matching> enumerate_stable_matchings(const Instance& inst, std::size_t cap = kDefaultEnumerationCap);

struct Costs {
  long long man = 0;
  long long woman = 0;
  long long total() const { return man + woman; }
  long long sex_equal() const { return man > woman ? man - woman : woman - man; }
};

Costs matching_costs(const Instance& inst, const Matching& m);
/// Worst partner rank over both sides (0 for the empty matching).
int matching_degree(const Instance& inst, const Matching& m);
/// <p_n, ..., p_1> of a matching profile over window n.
Profile reverse_profile(const Profile& p, std::size_t n);

Matching select_median(std::span<const Matching> matchings, const Instance& inst);
Matching select_egalitarian(std::span<const Matching> matchings, const Instance& inst);
Matching select_sex_equal(std::span<const Matching> matchings, const Instance& inst);
Matching select_min_regret(std::span<const Matching> matchings, const Instance& inst);

struct OracleResult {
  BigWeight value;
  std::vector<int> closed_subset;
};

/// Scalar max-flow over the same network with capacities mapped through
/// high_weight at base 2n+1. In generous mode each rotation profile is first
/// replaced by profile_negate_reverse(p, window).
OracleResult oracle_exponential_flow(std::span<const Profile> profiles, const RotationDigraph& digraph, std::size_t n,
                                     FlowMode mode, std::size_t window = 0);

/// Dispatches on `c`. `inst` must be preprocessed.
Matching solve(const Instance& inst, Criterion c, std::size_t cap = kDefaultEnumerationCap);

/// Runs both flow pipelines, the exponential oracle and enumeration on a
/// preprocessed instance. Returns a description of the first disagreement.
std::optional<std::string> cross_check(const Instance& inst, std::size_t cap = kDefaultEnumerationCap);

}  // namespace profsm
