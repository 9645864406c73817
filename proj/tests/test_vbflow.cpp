#include <doctest.h>

#include <algorithm>

#include "profsm/analytics.hpp"
#include "profsm/rotations.hpp"
#include "profsm/solvers.hpp"
#include "profsm/vbflow.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace profsm;

namespace {

struct I0Net {
  Instance inst = testing::i0();
  std::vector<Rotation> rots = find_rotations(inst);
  RotationDigraph g = build_digraph(inst, rots);
  VbNetwork net = build_vb_network(rots, g, 8);

  // Each pair lies in at most one rotation.
  int rotation_with(int man, int woman) const {
    for (const auto& r : rots)
      if (std::find(r.pairs.begin(), r.pairs.end(), std::pair{man - 1, woman - 1}) != r.pairs.end()) return r.id;
    return -1;
  }
  int edge(int from, int to) const {
    for (std::size_t e = 0; e < net.edges.size(); ++e)
      if (net.edges[e].from == from && net.edges[e].to == to) return static_cast<int>(e);
    return -1;
  }
};

}  // namespace

TEST_CASE("I0 network construction") {
  I0Net f;
  const int r0 = f.rotation_with(1, 5), r1 = f.rotation_with(1, 8), r2 = f.rotation_with(3, 5),
            r3 = f.rotation_with(7, 2), r4 = f.rotation_with(3, 1);
  const int s = VbNetwork::kSource, t = VbNetwork::kSink;
  auto cap = [&](int from, int to) {
    const int e = f.edge(from, to);
    REQUIRE(e >= 0);
    return f.net.edges[e].cap;
  };
  CHECK(cap(s, VbNetwork::node_of(r0)).vec == Profile{2, -1, -1, -1, 0, 1});
  CHECK(cap(s, VbNetwork::node_of(r3)).vec == Profile{1, 0, -1, -1, 1});
  CHECK(cap(VbNetwork::node_of(r1), t).vec == Profile{2, 0, -1, -1, -1, -2, 1, 2});
  CHECK(cap(VbNetwork::node_of(r2), t).vec == Profile{0, 0, 1, -1});
  CHECK(cap(VbNetwork::node_of(r4), t).vec == Profile{1, -2, 0, 0, 0, 1});
  int infinite = 0;
  for (const auto& e : f.net.edges) infinite += e.cap.infinite;
  CHECK(infinite == 6);
  CHECK(f.net.edges.size() == 11);
  CHECK(high_weight(cap(s, VbNetwork::node_of(r3)).vec, 8).to_string() == "408840208");
  CHECK(high_weight(cap(VbNetwork::node_of(r1), t).vec, 8).to_string() == "819168496");
  CHECK(high_weight(cap(VbNetwork::node_of(r4), t).vec, 8).to_string() == "362063824");
}

TEST_CASE("I0 max flow, min cut and closed subset") {
  I0Net f;
  const int r0 = f.rotation_with(1, 5), r1 = f.rotation_with(1, 8), r2 = f.rotation_with(3, 5),
            r4 = f.rotation_with(3, 1);
  const VbFlow flow = max_vb_flow(f.net);
  validate_flow(f.net, flow);
  CHECK(high_weight(flow.value, 8).to_string() == "1157100512");
  CHECK(flow.value == Profile{3, -3, -1, -1, 0, 2});

  const int e_s0 = f.edge(VbNetwork::kSource, VbNetwork::node_of(r0));
  const int e_4t = f.edge(VbNetwork::node_of(r4), VbNetwork::kSink);
  CHECK(flow.edge_flow[e_s0] == f.net.edges[e_s0].cap.vec);
  CHECK(flow.edge_flow[e_4t] == f.net.edges[e_4t].cap.vec);

  const Cut cut = min_cut(f.net, flow);
  CHECK(cut.edges == std::vector<int>{std::min(e_s0, e_4t), std::max(e_s0, e_4t)});
  CHECK(cut.capacity == flow.value);

  std::vector<int> want = {r0, r1, r2};
  std::sort(want.begin(), want.end());
  CHECK(max_profile_closed_subset(f.net, f.g, cut) == want);

  const std::string dump = dump_network(f.net, &flow);
  CHECK(dump.find(" : INF | ") != std::string::npos);
  CHECK(dump.rfind("s -> ", 0) == 0);
}

TEST_CASE("degenerate networks") {
  SUBCASE("no rotations") {
    const RotationDigraph g(0);
    const VbNetwork net = build_vb_network(std::vector<Profile>{}, g, 3);
    CHECK(net.num_nodes() == 2);
    CHECK(net.edges.empty());
    const VbFlow flow = max_vb_flow(net);
    CHECK(flow.value.is_zero());
    const Cut cut = min_cut(net, flow);
    CHECK(cut.edges.empty());
    CHECK(cut.capacity.is_zero());
    CHECK(max_profile_closed_subset(net, g, cut).empty());
  }
  SUBCASE("only positive rotations") {
    RotationDigraph g(2);
    g.add_edge(0, 1, kType1);
    const std::vector<Profile> ps = {Profile{0, 1, -1}, Profile{1, -1}};
    const VbNetwork net = build_vb_network(ps, g, 3);
    const VbFlow flow = max_vb_flow(net);
    CHECK(flow.value.is_zero());
    const Cut cut = min_cut(net, flow);
    CHECK(cut.edges.empty());
    CHECK(max_profile_closed_subset(net, g, cut) == std::vector<int>{0, 1});
  }
  SUBCASE("zero rotations get no terminal edge") {
    const RotationDigraph g(1);
    const std::vector<Profile> ps = {Profile{0, 0}};
    const VbNetwork net = build_vb_network(ps, g, 2);
    CHECK(net.polarity[0] == Polarity::kZero);
    CHECK(net.edges.empty());
  }
}

TEST_CASE("min_cut refuses a non-maximum flow") {
  RotationDigraph g(2);
  g.add_edge(0, 1, kType1);
  const std::vector<Profile> ps = {Profile{-1, 1}, Profile{1, 0}};
  const VbNetwork net = build_vb_network(ps, g, 2);
  VbFlow zero{std::vector<Profile>(net.edges.size(), Profile(2)), Profile(2)};
  CHECK_THROWS_AS(min_cut(net, zero), std::logic_error);
  const VbFlow best = max_vb_flow(net);
  CHECK(best.value == Profile{1, -1});
}

TEST_CASE("property: vb flow matches brute-force closure and the scalar oracle") {
  int checked = 0;
  for (std::uint64_t seed = 1000; seed < 1300; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const double density = seed % 2 ? 1.0 : 0.5;
    const Instance inst = preprocess(generate_uniform(n, n, density, seed)).instance;
    const std::size_t dim = static_cast<std::size_t>(inst.num_men());
    const auto rots = find_rotations(inst);
    if (rots.size() > 16) continue;
    ++checked;
    const auto g = build_digraph(inst, rots);
    const auto net = build_vb_network(rots, g, dim);
    for (const auto& e : net.edges) {
      if (e.from != VbNetwork::kSource && e.to != VbNetwork::kSink) CHECK(e.cap.infinite);
      if (!e.cap.infinite) CHECK(e.cap.vec.lex_sign() > 0);
    }
    const VbFlow flow = max_vb_flow(net);
    CHECK_NOTHROW(validate_flow(net, flow));
    const Cut cut = min_cut(net, flow);
    CHECK(cut.capacity == flow.value);
    const auto subset = max_profile_closed_subset(net, g, cut);
    CHECK(g.is_closed(subset));

    std::vector<Profile> ps;
    for (const auto& r : rots) ps.push_back(r.profile);
    Profile got;
    for (int v : subset) got += ps[v];
    CHECK(got == testing::best_closed_subset_sum(g, ps));

    Profile positive;
    for (const auto& p : ps)
      if (p.lex_sign() > 0) positive += p;
    CHECK(positive - flow.value == got);

    const auto oracle = oracle_exponential_flow(ps, g, dim, FlowMode::kRankMaximal);
    CHECK(oracle.value == high_weight(flow.value, dim));
  }
  CHECK(checked > 250);
}
