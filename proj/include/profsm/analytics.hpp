#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "profsm/instance.hpp"
#include "profsm/profile.hpp"
#include "profsm/solvers.hpp"

namespace profsm {

struct MatchingStats {
  long long cost = 0;
  long long man_cost = 0;
  long long woman_cost = 0;
  long long sex_equal = 0;
  int degree = 0;
  int man_degree = 0;
  int woman_degree = 0;
  long long first_choices = 0;
  /// (a, agents whose partner rank is at least last_pct_threshold(n, a)).
  std::vector<std::pair<int, long long>> last_pct_counts;
};

/// b = floor((100 - a) * n / 100) + 1. Requires 0 < a <= 100.
int last_pct_threshold(int n, int a);

/// Throws std::invalid_argument if `m` is not perfect or some a is outside (0, 100].
MatchingStats matching_stats(const Instance& inst, const Matching& m, std::span<const int> pcts);

struct SpaceReport {
  std::size_t n = 0;
  std::size_t d_t = 0;
  std::vector<std::uint64_t> exponential_bits;
  std::vector<std::uint64_t> vector_bits;
  std::uint64_t exponential_total = 0;
  std::uint64_t vector_total = 0;  // includes the two global 32-bit words
};

/// Smallest k with 2^k >= x, for x >= 1.
unsigned ceil_log2(std::uint64_t x);

SpaceReport space_report(std::span<const SparseProfile> profiles, std::size_t n);
SpaceReport space_report(std::span<const Profile> profiles, std::size_t n);

/// Bernoulli(density) acceptable pairs, then each list shuffled
/// independently. Deterministic in (arguments, seed).
Instance generate_uniform(int num_men, int num_women, double density, std::uint64_t seed);

/// The two-rotations-per-block family; n must be even and at least 4.
Instance generate_i1(int n);
/// n/2 copies of <0,-2,0,...,0,2> (length and degree n) without building the instance.
std::vector<SparseProfile> i1_rotation_profiles(int n);

struct BatchInput {
  std::string id;
  Instance instance;
};

inline const std::vector<int> kDefaultPcts = {10, 20, 50};

/// CSV with one row per (instance, criterion). Enumeration-backed cells
/// read TIMEOUT when the stable-matching count exceeds `cap`.
std::string batch_stats(std::span<const BatchInput> instances, std::span<const Criterion> criteria,
                        std::span<const int> pcts = kDefaultPcts, std::size_t cap = kDefaultEnumerationCap);

}  // namespace profsm
