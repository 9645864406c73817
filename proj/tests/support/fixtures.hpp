#pragma once

#include <array>
#include <string>
#include <vector>

#include "profsm/instance.hpp"

namespace profsm::testing {

inline const std::string kI0Text =
    "8 8\n"
    "5 7 1 2 6 8 4 3\n"
    "2 3 7 5 4 1 8 6\n"
    "8 5 1 4 6 2 3 7\n"
    "3 2 7 4 1 6 8 5\n"
    "7 2 5 1 3 6 8 4\n"
    "1 6 7 5 8 4 2 3\n"
    "2 5 7 6 3 4 8 1\n"
    "3 8 4 5 7 2 6 1\n"
    "5 3 7 6 1 2 8 4\n"
    "8 6 3 5 7 2 1 4\n"
    "1 5 6 2 4 8 7 3\n"
    "8 7 3 2 4 1 5 6\n"
    "6 4 7 3 8 1 2 5\n"
    "2 8 5 3 4 6 7 1\n"
    "7 5 2 1 8 6 4 3\n"
    "7 4 1 5 2 3 6 8\n";

inline Instance i0() { return parse_instance(kI0Text); }

/// The eight stable matchings of I0 as 1-based woman per man, M0..M7.
inline const std::array<std::array<int, 8>, 8> kI0Stable = {{
    {5, 3, 8, 6, 7, 1, 2, 4},
    {8, 3, 5, 6, 7, 1, 2, 4},
    {3, 6, 5, 8, 7, 1, 2, 4},
    {8, 3, 1, 6, 7, 5, 2, 4},
    {3, 6, 1, 8, 7, 5, 2, 4},
    {8, 3, 1, 6, 2, 5, 7, 4},
    {3, 6, 1, 8, 2, 5, 7, 4},
    {3, 6, 2, 8, 1, 5, 7, 4},
}};

inline Matching i0_matching(int k) {
  Matching m(8, 8);
  for (int man = 0; man < 8; ++man) m.assign(man, kI0Stable[k][man] - 1);
  return m;
}

/// Pairs of a matching written 1-based, e.g. {{1,5},{3,8}}.
inline std::vector<std::pair<int, int>> zero_based(std::vector<std::pair<int, int>> pairs) {
  for (auto& [a, b] : pairs) {
    --a;
    --b;
  }
  return pairs;
}

}  // namespace profsm::testing
