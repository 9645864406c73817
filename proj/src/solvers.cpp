#include "profsm/solvers.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>

#include "profsm/stable_core.hpp"

namespace profsm {

namespace {

constexpr std::array kCriteria = {
    Criterion::kRankMaximal, Criterion::kGenerous,  Criterion::kEgalitarian, Criterion::kSexEqual,
    Criterion::kMedian,      Criterion::kMinRegret, Criterion::kManOptimal,  Criterion::kWomanOptimal,
};

}  // namespace

std::span<const Criterion> all_criteria() { return kCriteria; }

std::string_view criterion_token(Criterion c) {
  switch (c) {
    case Criterion::kRankMaximal: return "rank-maximal";
    case Criterion::kGenerous: return "generous";
    case Criterion::kEgalitarian: return "egalitarian";
    case Criterion::kSexEqual: return "sex-equal";
    case Criterion::kMedian: return "median";
    case Criterion::kMinRegret: return "min-regret";
    case Criterion::kManOptimal: return "man-optimal";
    case Criterion::kWomanOptimal: return "woman-optimal";
  }
  return "?";
}

std::optional<Criterion> parse_criterion(std::string_view token) {
  for (Criterion c : kCriteria)
    if (criterion_token(c) == token) return c;
  return std::nullopt;
}

bool needs_enumeration(Criterion c) {
  return c == Criterion::kEgalitarian || c == Criterion::kSexEqual || c == Criterion::kMedian ||
         c == Criterion::kMinRegret;
}

FlowSolution solve_profile_flow(const Instance& inst, FlowMode mode) {
  FlowSolution s;
  s.mode = mode;
  const int n = inst.num_men();
  if (mode == FlowMode::kRankMaximal) {
    s.window = n;
    s.instance = inst;
  } else {
    s.window = min_regret_degree(inst);
    s.instance = truncate(inst, s.window).instance;
  }
  s.m0 = man_optimal(s.instance);
  s.rotations = find_rotations(s.instance);
  s.digraph = build_digraph(s.instance, s.rotations);

  for (auto& rot : s.rotations) {
    // Truncation can shift list positions, so weights use the input ranks.
    if (mode == FlowMode::kGenerous) rot.profile = rotation_profile(inst, rot);
    s.weights.push_back(mode == FlowMode::kRankMaximal
                            ? rot.profile
                            : profile_negate_reverse(rot.profile, static_cast<std::size_t>(s.window)));
  }
  s.network = build_vb_network(s.weights, s.digraph, static_cast<std::size_t>(s.window));
  s.flow = max_vb_flow(s.network);
  s.cut = min_cut(s.network, s.flow);
  s.closed_subset = max_profile_closed_subset(s.network, s.digraph, s.cut);
  s.matching = eliminate_closed_subset(s.instance, s.m0, s.rotations, s.digraph, s.closed_subset);
  return s;
}

Matching solve_rank_maximal(const Instance& inst) { return solve_profile_flow(inst, FlowMode::kRankMaximal).matching; }
Matching solve_generous(const Instance& inst) { return solve_profile_flow(inst, FlowMode::kGenerous).matching; }

std::vector<Matching> enumerate_stable_matchings(const Instance& inst, std::size_t cap) {
  const auto rotations = find_rotations(inst);
  const auto digraph = build_digraph(inst, rotations);
  const auto order = digraph.topological_order();

  std::vector<Matching> out;
  std::vector<bool> in(rotations.size(), false);
  Matching cur = man_optimal(inst);

  // Branch on each rotation in topological order; excluding first keeps the
  // man-optimal matching at the front.
  std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
    if (idx == order.size()) {
      if (out.size() == cap) throw EnumerationCapExceeded(cap);
      out.push_back(cur);
      return;
    }
    const int v = order[idx];
    dfs(idx + 1);
    for (int p : digraph.predecessors(v))
      if (!in[p]) return;
    const auto& pairs = rotations[v].pairs;
    const std::size_t k = pairs.size();
    for (std::size_t i = 0; i < k; ++i) cur.assign(pairs[i].first, pairs[(i + 1) % k].second);
    in[v] = true;
    dfs(idx + 1);
    in[v] = false;
    for (auto [m, w] : pairs) cur.assign(m, w);
  };
  dfs(0);
  return out;
}

Costs matching_costs(const Instance& inst, const Matching& m) {
  Costs c;
  for (auto [man, woman] : m.pairs()) {
    c.man += inst.man_rank(man, woman);
    c.woman += inst.woman_rank(woman, man);
  }
  return c;
}

int matching_degree(const Instance& inst, const Matching& m) {
  int d = 0;
  for (auto [man, woman] : m.pairs()) d = std::max({d, inst.man_rank(man, woman), inst.woman_rank(woman, man)});
  return d;
}

Profile reverse_profile(const Profile& p, std::size_t n) {
  Profile out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = p.at(n - 1 - i);
  return out;
}

Matching select_median(std::span<const Matching> matchings, const Instance& inst) {
  if (matchings.empty()) throw std::invalid_argument("select_median needs at least one matching");
  const std::size_t j = (matchings.size() + 1) / 2;
  Matching out(inst.num_men(), inst.num_women());
  std::vector<int> partners;
  for (int m = 0; m < inst.num_men(); ++m) {
    partners.clear();
    for (const auto& mt : matchings)
      if (mt.man_partner(m) != -1) partners.push_back(mt.man_partner(m));
    if (partners.empty()) continue;
    std::sort(partners.begin(), partners.end(),
              [&](int a, int b) { return inst.man_rank(m, a) < inst.man_rank(m, b); });
    const int w = partners[std::min(j, partners.size()) - 1];
    if (out.woman_partner(w) != -1) throw std::logic_error("median assembly assigned a woman twice");
    out.assign(m, w);
  }
  if (!is_stable(inst, out)) throw std::logic_error("assembled median matching is not stable");
  return out;
}

namespace {

template <typename Key>
Matching argmin(std::span<const Matching> matchings, const char* what, Key key) {
  if (matchings.empty()) throw std::invalid_argument(std::string(what) + " needs at least one matching");
  std::size_t best = 0;
  auto best_key = key(matchings[0]);
  for (std::size_t i = 1; i < matchings.size(); ++i) {
    auto k = key(matchings[i]);
    if (k < best_key) {
      best = i;
      best_key = k;
    }
  }
  return matchings[best];
}

}  // namespace

Matching select_egalitarian(std::span<const Matching> matchings, const Instance& inst) {
  return argmin(matchings, "select_egalitarian", [&](const Matching& m) { return matching_costs(inst, m).total(); });
}

Matching select_sex_equal(std::span<const Matching> matchings, const Instance& inst) {
  return argmin(matchings, "select_sex_equal", [&](const Matching& m) { return matching_costs(inst, m).sex_equal(); });
}

Matching select_min_regret(std::span<const Matching> matchings, const Instance& inst) {
  return argmin(matchings, "select_min_regret", [&](const Matching& m) { return matching_degree(inst, m); });
}

OracleResult oracle_exponential_flow(std::span<const Profile> profiles, const RotationDigraph& digraph, std::size_t n,
                                     FlowMode mode, std::size_t window) {
  std::vector<Profile> weights;
  weights.reserve(profiles.size());
  for (const auto& p : profiles)
    weights.push_back(mode == FlowMode::kRankMaximal ? p : profile_negate_reverse(p, window));

  // Same topology as the vector network; only the capacities change.
  const VbNetwork net = build_vb_network(weights, digraph, n);
  const std::size_t ne = net.edges.size();
  std::vector<mpz_class> cap(ne), flow(ne);
  for (std::size_t e = 0; e < ne; ++e)
    if (!net.edges[e].cap.infinite) cap[e] = high_weight(net.edges[e].cap.vec, n).value();

  std::vector<std::vector<std::pair<int, bool>>> inc(net.num_nodes());
  for (std::size_t e = 0; e < ne; ++e) {
    inc[net.edges[e].from].emplace_back(static_cast<int>(e), true);
    inc[net.edges[e].to].emplace_back(static_cast<int>(e), false);
  }

  auto bfs = [&](std::vector<std::pair<int, bool>>& parent) {
    std::vector<bool> seen(net.num_nodes(), false);
    parent.assign(net.num_nodes(), {-1, true});
    std::deque<int> q{VbNetwork::kSource};
    seen[VbNetwork::kSource] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (auto [e, tail] : inc[u]) {
        const auto& edge = net.edges[e];
        const int v = tail ? edge.to : edge.from;
        if (seen[v]) continue;
        const bool open = tail ? (edge.cap.infinite || flow[e] < cap[e]) : flow[e] > 0;
        if (!open) continue;
        seen[v] = true;
        parent[v] = {e, tail};
        q.push_back(v);
      }
    }
    return seen;
  };

  mpz_class value = 0;
  std::vector<std::pair<int, bool>> parent;
  for (;;) {
    auto seen = bfs(parent);
    if (!seen[VbNetwork::kSink]) {
      std::vector<int> seeds;
      for (std::size_t e = 0; e < ne; ++e) {
        const auto& edge = net.edges[e];
        if (edge.to == VbNetwork::kSink && !seen[edge.from]) seeds.push_back(VbNetwork::rotation_of(edge.from));
      }
      return {BigWeight(value), digraph.with_ancestors(seeds)};
    }
    std::optional<mpz_class> b;
    for (int v = VbNetwork::kSink; v != VbNetwork::kSource;) {
      auto [e, fwd] = parent[v];
      const auto& edge = net.edges[e];
      if (fwd) {
        if (!edge.cap.infinite) {
          mpz_class r = cap[e] - flow[e];
          if (!b || r < *b) b = r;
        }
        v = edge.from;
      } else {
        if (!b || flow[e] < *b) b = flow[e];
        v = edge.to;
      }
    }
    for (int v = VbNetwork::kSink; v != VbNetwork::kSource;) {
      auto [e, fwd] = parent[v];
      if (fwd) {
        flow[e] += *b;
        v = net.edges[e].from;
      } else {
        flow[e] -= *b;
        v = net.edges[e].to;
      }
    }
    value += *b;
  }
}

Matching solve(const Instance& inst, Criterion c, std::size_t cap) {
  switch (c) {
    case Criterion::kRankMaximal: return solve_rank_maximal(inst);
    case Criterion::kGenerous: return solve_generous(inst);
    case Criterion::kManOptimal: return man_optimal(inst);
    case Criterion::kWomanOptimal: return woman_optimal(inst);
    default: break;
  }
  const auto all = enumerate_stable_matchings(inst, cap);
  switch (c) {
    case Criterion::kEgalitarian: return select_egalitarian(all, inst);
    case Criterion::kSexEqual: return select_sex_equal(all, inst);
    case Criterion::kMedian: return select_median(all, inst);
    case Criterion::kMinRegret: return select_min_regret(all, inst);
    default: break;
  }
  throw std::logic_error("unhandled criterion");
}

std::optional<std::string> cross_check(const Instance& inst, std::size_t cap) {
  const std::size_t n = static_cast<std::size_t>(inst.num_men());
  const auto all = enumerate_stable_matchings(inst, cap);

  Profile best_rank, best_reverse;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Profile p = profile_of(inst, all[i]);
    const Profile r = reverse_profile(p, n);
    if (i == 0 || p > best_rank) best_rank = p;
    if (i == 0 || r < best_reverse) best_reverse = r;
  }

  for (FlowMode mode : {FlowMode::kRankMaximal, FlowMode::kGenerous}) {
    const char* name = mode == FlowMode::kRankMaximal ? "rank-maximal" : "generous";
    const auto sol = solve_profile_flow(inst, mode);
    try {
      validate_flow(sol.network, sol.flow);
    } catch (const std::logic_error& e) {
      return std::string(name) + ": invalid flow: " + e.what();
    }
    if (sol.cut.capacity != sol.flow.value) return std::string(name) + ": cut capacity differs from flow value";
    if (!is_stable(inst, sol.matching) || !sol.matching.is_perfect()) {
      return std::string(name) + ": result is not a perfect stable matching";
    }
    const Profile p = profile_of(inst, sol.matching);
    if (mode == FlowMode::kRankMaximal && p != best_rank) {
      return "rank-maximal profile " + p.to_string() + " but enumeration maximum is " + best_rank.to_string();
    }
    if (mode == FlowMode::kGenerous) {
      if (reverse_profile(p, n) != best_reverse) {
        return "generous reverse profile " + reverse_profile(p, n).to_string() + " but enumeration minimum is " +
               best_reverse.to_string();
      }
      if (matching_degree(inst, sol.matching) != sol.window) return "generous degree differs from minimum regret";
    }

    std::vector<Profile> profiles;
    for (const auto& r : sol.rotations) profiles.push_back(r.profile);
    const auto oracle =
        oracle_exponential_flow(profiles, sol.digraph, n, mode, static_cast<std::size_t>(sol.window));
    if (oracle.value != high_weight(sol.flow.value, n)) {
      return std::string(name) + ": oracle value " + oracle.value.to_string() + " differs from w(val) " +
             high_weight(sol.flow.value, n).to_string();
    }
    const Matching via_oracle =
        eliminate_closed_subset(sol.instance, sol.m0, sol.rotations, sol.digraph, oracle.closed_subset);
    if (profile_of(inst, via_oracle) != p) return std::string(name) + ": oracle subset yields a different profile";
  }

  if (!all.empty() && matching_degree(inst, select_min_regret(all, inst)) != min_regret_degree(inst)) {
    return "minimum-regret degree differs from enumeration";
  }
  return std::nullopt;
}

}  // namespace profsm
