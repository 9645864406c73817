// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "profsm/analytics.hpp"
#include "profsm/rotations.hpp"
#include "profsm/solvers.hpp"
#include "profsm/stable_core.hpp"
#include "profsm/vbflow.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace profsm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void report(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) out.require(false, "took " + std::to_string(secs) + " s");
  if (!out.ok) ++failures;
  std::printf("%s %d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.detail.empty() ? "" : ": ",
              out.detail.c_str());
  std::fflush(stdout);
}

using PairSet = std::set<std::pair<int, int>>;

PairSet pair_set(const std::vector<std::pair<int, int>>& v) { return {v.begin(), v.end()}; }

int rotation_id(const std::vector<Rotation>& rots, const std::vector<std::pair<int, int>>& one_based) {
  const PairSet want = pair_set(testing::zero_based(one_based));
  for (const auto& r : rots)
    if (pair_set(r.pairs) == want) return r.id;
  return -1;
}

struct Case {
  std::string label;
  Instance inst;
};

std::vector<Case> property_instances() {
  std::vector<Case> out;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const int n = 4 + static_cast<int>(i % 5);
    out.push_back({"complete seed " + std::to_string(i),
                   preprocess(generate_uniform(n, n, 1.0, 0xC0FFEE + i)).instance});
  }
  for (std::uint64_t i = 0; i < 200; ++i) {
    const int n = 4 + static_cast<int>(i % 5);
    out.push_back({"density-0.5 seed " + std::to_string(i),
                   preprocess(generate_uniform(n, n, 0.5, 0xBEEF + i)).instance});
  }
  return out;
}

Outcome golden_pipeline() {
  Outcome o;
  const Instance inst = testing::i0();
  const auto rots = find_rotations(inst);
  o.require(rots.size() == 5, "expected 5 rotations");
  const int r0 = rotation_id(rots, {{1, 5}, {3, 8}});
  const int r1 = rotation_id(rots, {{1, 8}, {2, 3}, {4, 6}});
  const int r2 = rotation_id(rots, {{3, 5}, {6, 1}});
  const int r3 = rotation_id(rots, {{7, 2}, {5, 7}});
  const int r4 = rotation_id(rots, {{3, 1}, {5, 2}});
  o.require(r0 >= 0 && r1 >= 0 && r2 >= 0 && r3 >= 0 && r4 >= 0, "rotation pair lists differ");
  if (!o.ok) return o;
  o.require(rots[r0].profile == Profile{-2, 1, 1, 1, 0, -1}, "profile of rho0");
  o.require(rots[r1].profile == Profile{2, 0, -1, -1, -1, -2, 1, 2}, "profile of rho1");
  o.require(rots[r2].profile == Profile{0, 0, 1, -1}, "profile of rho2");
  o.require(rots[r3].profile == Profile{-1, 0, 1, 1, -1}, "profile of rho3");
  o.require(rots[r4].profile == Profile{1, -2, 0, 0, 0, 1}, "profile of rho4");

  const auto g = build_digraph(inst, rots);
  std::set<std::tuple<int, int, unsigned>> edges;
  for (const auto& e : g.edges()) edges.emplace(e.from, e.to, e.labels);
  const std::set<std::tuple<int, int, unsigned>> want = {
      {r0, r1, kType1 | kType2}, {r0, r2, kType1}, {r2, r3, kType2},
      {r3, r4, kType1},          {r1, r4, kType2}, {r2, r4, kType1},
  };
  o.require(edges == want, "digraph edges differ");

  const auto net = build_vb_network(rots, g, 8);
  const auto flow = max_vb_flow(net);
  validate_flow(net, flow);
  auto edge = [&](int from, int to) {
    for (std::size_t e = 0; e < net.edges.size(); ++e)
      if (net.edges[e].from == from && net.edges[e].to == to) return static_cast<int>(e);
    return -1;
  };
  const int s0 = edge(VbNetwork::kSource, VbNetwork::node_of(r0));
  const int t4 = edge(VbNetwork::node_of(r4), VbNetwork::kSink);
  o.require(s0 >= 0 && t4 >= 0, "terminal edges missing");
  if (!o.ok) return o;
  o.require(flow.edge_flow[s0] == net.edges[s0].cap.vec, "(s,rho0) not saturated");
  o.require(flow.edge_flow[t4] == net.edges[t4].cap.vec, "(rho4,t) not saturated");
  const auto cut = min_cut(net, flow);
  o.require(std::set<int>(cut.edges.begin(), cut.edges.end()) == std::set<int>{s0, t4},
            "min cut differs");
  o.require(high_weight(flow.value, 8).to_string() == "1157100512", "w(val) = " + high_weight(flow.value, 8).to_string());
  const auto subset = max_profile_closed_subset(net, g, cut);
  o.require(std::set<int>(subset.begin(), subset.end()) == std::set<int>{r0, r1, r2}, "closed subset differs");
  o.require(solve_rank_maximal(inst) == testing::i0_matching(4), "rank-maximal matching differs");
  return o;
}

Outcome i0_enumeration() {
  Outcome o;
  const Instance inst = testing::i0();
  const auto all = enumerate_stable_matchings(inst);
  std::set<std::vector<std::pair<int, int>>> got, want;
  for (const auto& m : all) got.insert(m.pairs());
  for (int k = 0; k < 8; ++k) want.insert(testing::i0_matching(k).pairs());
  o.require(all.size() == 8, "count " + std::to_string(all.size()));
  o.require(got == want, "matching sets differ");
  return o;
}

struct PropertyResults {
  Outcome equivalence, degree_law, mfmc, measures;
};

PropertyResults run_properties(const std::vector<Case>& cases) {
  PropertyResults r;
  for (const auto& c : cases) {
    const Instance& inst = c.inst;
    const std::size_t n = static_cast<std::size_t>(inst.num_men());
    const auto all = enumerate_stable_matchings(inst);

    Profile best, best_rev;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Profile p = profile_of(inst, all[i]);
      if (i == 0 || p > best) best = p;
      if (i == 0 || reverse_profile(p, n) < best_rev) best_rev = reverse_profile(p, n);
    }

    const auto rm = solve_profile_flow(inst, FlowMode::kRankMaximal);
    r.equivalence.require(profile_of(inst, rm.matching) == best, c.label + ": (a) rank-maximal profile");
    const auto gen = solve_profile_flow(inst, FlowMode::kGenerous);
    r.equivalence.require(reverse_profile(profile_of(inst, gen.matching), n) == best_rev,
                          c.label + ": (b) generous reverse profile");
    const auto oracle = oracle_exponential_flow(rm.weights, rm.digraph, n, FlowMode::kRankMaximal);
    r.equivalence.require(oracle.value == high_weight(rm.flow.value, n), c.label + ": (c) oracle value");
    if (n <= 7) {
      r.equivalence.require(testing::brute_force_stable(inst).size() == all.size(),
                            c.label + ": (d) enumeration count");
    }

    r.degree_law.require(matching_degree(inst, gen.matching) == min_regret_degree(inst), c.label);
    r.mfmc.require(rm.cut.capacity == rm.flow.value, c.label + " (rank-maximal)");
    r.mfmc.require(gen.cut.capacity == gen.flow.value, c.label + " (generous)");

    for (const auto& m : all) {
      const auto s = matching_stats(inst, m, kDefaultPcts);
      const auto costs = matching_costs(inst, m);
      r.measures.require(s.cost == s.man_cost + s.woman_cost, c.label + ": cost identity");
      r.measures.require(s.man_cost == costs.man && s.woman_cost == costs.woman, c.label + ": rank sums");
      r.measures.require(s.sex_equal == (s.man_cost > s.woman_cost ? s.man_cost - s.woman_cost
                                                                    : s.woman_cost - s.man_cost),
                         c.label + ": sex-equal identity");
      r.measures.require(s.degree == std::max(s.man_degree, s.woman_degree), c.label + ": degree identity");
      r.measures.require(s.degree == matching_degree(inst, m), c.label + ": degree value");
    }
  }
  return r;
}

Outcome space_claims() {
  Outcome o;
  const auto profiles = i1_rotation_profiles(100000);
  const auto rep = space_report(std::span<const SparseProfile>(profiles), 100000);
  o.require(rep.exponential_total > 80'000'000'000ULL, "exponential total " + std::to_string(rep.exponential_total));
  const double v = static_cast<double>(rep.vector_total);
  o.require(v >= 0.8 * 5.4e6 && v <= 1.2 * 5.4e6, "vector total " + std::to_string(rep.vector_total));
  for (int n : {4, 6, 8}) {
    std::multiset<Profile> extracted, analytic;
    for (const auto& r : find_rotations(generate_i1(n))) extracted.insert(r.profile);
    for (const auto& p : i1_rotation_profiles(n)) analytic.insert(to_dense(p));
    o.require(extracted == analytic, "I1 profiles differ at n=" + std::to_string(n));
  }
  return o;
}

Outcome space_trend() {
  Outcome o;
  double exp_sum = 0, vec_sum = 0;
  const int count = 50;
  for (int i = 0; i < count; ++i) {
    const Instance inst = preprocess(generate_uniform(1000, 1000, 1.0, 0x5EED + static_cast<std::uint64_t>(i))).instance;
    std::vector<Profile> ps;
    for (const auto& r : find_rotations(inst)) ps.push_back(r.profile);
    const auto rep = space_report(std::span<const Profile>(ps), static_cast<std::size_t>(inst.num_men()));
    exp_sum += static_cast<double>(rep.exponential_total);
    vec_sum += static_cast<double>(rep.vector_total);
  }
  const double e = exp_sum / count, v = vec_sum / count;
  o.detail = "mean exponential " + std::to_string(e) + ", mean vector " + std::to_string(v);
  o.detail += ", ratio " + std::to_string(e / v);
  o.require(v <= e / 5, o.detail);
  return o;
}

}  // namespace

int main() {
  report(1, "I0 golden pipeline", 1.0, golden_pipeline);
  report(2, "I0 enumeration", 0, i0_enumeration);

  std::vector<Case> cases;
  PropertyResults props;
  report(3, "oracle equivalence over 700 seeded instances", 120.0, [&] {
    cases = property_instances();
    props = run_properties(cases);
    return props.equivalence;
  });
  report(4, "generous degree equals minimum-regret degree", 0, [&] { return props.degree_law; });
  report(5, "vb max-flow equals min-cut capacity", 0, [&] { return props.mfmc; });
  report(6, "space claims for I1", 1.0, space_claims);
  report(7, "space trend at n=1000", 600.0, space_trend);
  report(8, "measure sanity", 0, [&] {
    Outcome o = props.measures;
    o.require(last_pct_threshold(200, 50) == 101, "b for n=200, a=50");
    return o;
  });

  return failures == 0 ? 0 : 1;
}
