#include "profsm/stable_core.hpp"

#include <algorithm>
#include <vector>

namespace profsm {

namespace {

// Generic proposer-optimal Gale-Shapley. `proposer_lists[p]` is p's list,
// `receiver_rank(r, p)` the receiver's 1-based rank of p.
template <typename RankFn>
std::vector<int> gale_shapley(const std::vector<std::vector<int>>& proposer_lists, int num_receivers,
                              RankFn receiver_rank) {
  const int np = static_cast<int>(proposer_lists.size());
  std::vector<int> holds(num_receivers, -1);  // receiver -> proposer
  std::vector<std::size_t> next(np, 0);
  std::vector<int> free;
  free.reserve(np);
  for (int p = np - 1; p >= 0; --p) free.push_back(p);

  while (!free.empty()) {
    int p = free.back();
    free.pop_back();
    while (next[p] < proposer_lists[p].size()) {
      int r = proposer_lists[p][next[p]++];
      int cur = holds[r];
      if (cur == -1) {
        holds[r] = p;
        p = -1;
        break;
      }
      if (receiver_rank(r, p) < receiver_rank(r, cur)) {
        holds[r] = p;
        p = cur;
      }
    }
    // p is either -1 (absorbed) or exhausted its list and stays single.
  }

  std::vector<int> partner(np, -1);
  for (int r = 0; r < num_receivers; ++r)
    if (holds[r] != -1) partner[holds[r]] = r;
  return partner;
}

}  // namespace

Matching man_optimal(const Instance& inst) {
  auto partner = gale_shapley(inst.men_lists(), inst.num_women(),
                              [&](int w, int m) { return inst.woman_rank(w, m); });
  Matching out(inst.num_men(), inst.num_women());
  for (int m = 0; m < inst.num_men(); ++m)
    if (partner[m] != -1) out.assign(m, partner[m]);
  return out;
}

Matching woman_optimal(const Instance& inst) {
  auto partner = gale_shapley(inst.women_lists(), inst.num_men(),
                              [&](int m, int w) { return inst.man_rank(m, w); });
  Matching out(inst.num_men(), inst.num_women());
  for (int w = 0; w < inst.num_women(); ++w)
    if (partner[w] != -1) out.assign(partner[w], w);
  return out;
}

StabilityResult is_stable(const Instance& inst, const Matching& m) {
  validate_matching(inst, m);
  for (int man = 0; man < inst.num_men(); ++man) {
    const int cur = m.man_partner(man);
    for (int w : inst.man_list(man)) {
      if (w == cur) break;  // the rest of his list is worse than his partner
      const int her = m.woman_partner(w);
      if (her == -1 || inst.woman_rank(w, man) < inst.woman_rank(w, her)) {
        return {false, std::make_pair(man, w)};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

Instance truncated_lists(const Instance& inst, int cutoff) {
  auto cut = [cutoff](const std::vector<std::vector<int>>& lists) {
    std::vector<std::vector<int>> out(lists.size());
    for (std::size_t a = 0; a < lists.size(); ++a) {
      const auto len = std::min<std::size_t>(lists[a].size(), static_cast<std::size_t>(std::max(cutoff, 0)));
      out[a].assign(lists[a].begin(), lists[a].begin() + static_cast<std::ptrdiff_t>(len));
    }
    return out;
  };
  Instance out(cut(inst.men_lists()), cut(inst.women_lists()));
  return out;
}

bool admits_perfect_stable(const Instance& inst, int cutoff) {
  const Instance t = truncated_lists(inst, cutoff);
  const Matching m0 = man_optimal(t);
  return static_cast<int>(m0.size()) == inst.num_men() && inst.num_men() == inst.num_women();
}

}  // namespace

int min_regret_degree(const Instance& inst) {
  if (inst.num_men() == 0 && inst.num_women() == 0) return 0;
  int lo = 1, hi = std::max(inst.max_list_length(), 1);
  if (!admits_perfect_stable(inst, hi)) {
    throw std::invalid_argument("min_regret_degree requires a preprocessed instance");
  }
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (admits_perfect_stable(inst, mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

TruncatedInstance truncate(const Instance& inst, int cutoff) {
  if (cutoff < min_regret_degree(inst)) {
    throw std::invalid_argument("cutoff " + std::to_string(cutoff) +
                                " is below the minimum-regret degree; no stable matching would survive");
  }
  TruncatedInstance out;
  out.cutoff = cutoff;
  out.instance = truncated_lists(inst, cutoff);
  return out;
}

}  // namespace profsm
