#include "profsm/rotations.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "profsm/stable_core.hpp"

namespace profsm {

RotationDigraph::RotationDigraph(int num_rotations) : preds_(num_rotations), succs_(num_rotations) {}

void RotationDigraph::add_edge(int from, int to, EdgeLabel label) {
  const long long key = static_cast<long long>(from) * size() + to;
  if (auto it = edge_index_.find(key); it != edge_index_.end()) {
    edges_[it->second].labels |= label;
    return;
  }
  edge_index_.emplace(key, edges_.size());
  edges_.push_back({from, to, static_cast<unsigned>(label)});
  preds_[to].push_back(from);
  succs_[from].push_back(to);
}

std::vector<int> RotationDigraph::topological_order() const {
  std::vector<int> indeg(size(), 0);
  for (const auto& e : edges_) ++indeg[e.to];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < size(); ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(size());
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int s : succs_[v])
      if (--indeg[s] == 0) ready.push(s);
  }
  if (static_cast<int>(order.size()) != size()) throw std::logic_error("rotation digraph has a cycle");
  return order;
}

bool RotationDigraph::is_closed(std::span<const int> subset) const {
  std::vector<bool> in(size(), false);
  for (int v : subset) in[v] = true;
  for (const auto& e : edges_)
    if (in[e.to] && !in[e.from]) return false;
  return true;
}

std::vector<int> RotationDigraph::with_ancestors(std::span<const int> seeds) const {
  std::vector<bool> in(size(), false);
  std::vector<int> work(seeds.begin(), seeds.end());
  for (int v : seeds) in[v] = true;
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    for (int p : preds_[v]) {
      if (!in[p]) {
        in[p] = true;
        work.push_back(p);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

Profile rotation_profile(const Instance& inst, const Rotation& rot) {
  Profile p(static_cast<std::size_t>(inst.num_men()));
  const std::size_t k = rot.pairs.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto [m, w_old] = rot.pairs[i];
    const int w_new = rot.pairs[(i + 1) % k].second;
    // Man m moves w_old -> w_new; woman w_new moves from her old man to m.
    const int her_old = rot.pairs[(i + 1) % k].first;
    p[inst.man_rank(m, w_old) - 1] -= 1;
    p[inst.man_rank(m, w_new) - 1] += 1;
    p[inst.woman_rank(w_new, her_old) - 1] -= 1;
    p[inst.woman_rank(w_new, m) - 1] += 1;
  }
  return p;
}

std::vector<Rotation> find_rotations(const Instance& inst) {
  const int n = inst.num_men();
  Matching cur = man_optimal(inst);
  if (!cur.is_perfect()) throw std::invalid_argument("find_rotations requires a preprocessed instance");

  const Matching last = woman_optimal(inst);

  // Pointer into each man's list at the first woman who may still accept
  // him. Women only trade up along the chain, so rejections are permanent.
  // A man never moves past his woman-optimal partner.
  std::vector<std::size_t> ptr(n), end(n);
  for (int m = 0; m < n; ++m) {
    ptr[m] = static_cast<std::size_t>(inst.man_rank(m, cur.man_partner(m)));
    end[m] = static_cast<std::size_t>(inst.man_rank(m, last.man_partner(m)));
  }

  auto s_of = [&](int m) -> int {
    const auto list = inst.man_list(m);
    while (ptr[m] < end[m]) {
      const int w = list[ptr[m]];
      if (inst.woman_rank(w, m) < inst.woman_rank(w, cur.woman_partner(w))) return w;
      ++ptr[m];
    }
    return -1;
  };

  std::vector<Rotation> rotations;
  std::vector<int> stack;
  std::vector<int> stack_pos(n, -1);
  int cursor = 0;

  for (;;) {
    if (stack.empty()) {
      while (cursor < n && s_of(cursor) == -1) ++cursor;
      if (cursor == n) break;
      stack_pos[cursor] = 0;
      stack.push_back(cursor);
    }
    const int top = stack.back();
    const int w = s_of(top);
    if (w == -1) throw std::logic_error("rotation walk reached a man with no successor; instance not preprocessed?");
    const int next = cur.woman_partner(w);
    if (stack_pos[next] == -1) {
      stack_pos[next] = static_cast<int>(stack.size());
      stack.push_back(next);
      continue;
    }

    const auto first = static_cast<std::size_t>(stack_pos[next]);
    Rotation rot;
    rot.id = static_cast<int>(rotations.size());
    std::vector<int> targets;
    for (std::size_t i = first; i < stack.size(); ++i) {
      const int m = stack[i];
      rot.pairs.emplace_back(m, cur.man_partner(m));
      targets.push_back(s_of(m));
    }
    for (std::size_t i = 0; i < rot.pairs.size(); ++i) {
      const int m = rot.pairs[i].first;
      cur.assign(m, targets[i]);
      ++ptr[m];
    }
    rot.profile = rotation_profile(inst, rot);
    rotations.push_back(std::move(rot));

    for (std::size_t i = first; i < stack.size(); ++i) stack_pos[stack[i]] = -1;
    stack.resize(first);
  }
  return rotations;
}

RotationDigraph build_digraph(const Instance& inst, std::span<const Rotation> rotations) {
  const int nw = inst.num_women();
  RotationDigraph g(static_cast<int>(rotations.size()));

  // produced_by[(m,w)]: rotation whose elimination gives m the partner w.
  std::unordered_map<long long, int> produced_by;
  auto key = [nw](int m, int w) { return static_cast<long long>(m) * nw + w; };
  // above[w][r]: rotation that moves w from below to above her rank-r man.
  std::vector<std::vector<int>> above(nw);
  for (int w = 0; w < nw; ++w) above[w].assign(inst.woman_list(w).size() + 1, -1);

  for (const auto& rot : rotations) {
    const std::size_t k = rot.pairs.size();
    for (std::size_t i = 0; i < k; ++i) {
      const int m = rot.pairs[i].first;
      const auto [her_old, w_new] = rot.pairs[(i + 1) % k];
      produced_by[key(m, w_new)] = rot.id;
      const int lo = inst.woman_rank(w_new, m), hi = inst.woman_rank(w_new, her_old);
      for (int r = lo + 1; r < hi; ++r) above[w_new][r] = rot.id;
    }
  }

  for (const auto& rot : rotations) {
    const std::size_t k = rot.pairs.size();
    for (std::size_t i = 0; i < k; ++i) {
      const auto [m, w_old] = rot.pairs[i];
      if (auto it = produced_by.find(key(m, w_old)); it != produced_by.end()) {
        g.add_edge(it->second, rot.id, kType1);
      }
      const int w_new = rot.pairs[(i + 1) % k].second;
      const auto list = inst.man_list(m);
      const int from = inst.man_rank(m, w_old), to = inst.man_rank(m, w_new);
      // Women strictly between his old and new partner (1-based ranks).
      for (int r = from + 1; r < to; ++r) {
        const int w = list[r - 1];
        const int mover = above[w][inst.woman_rank(w, m)];
        if (mover != -1 && mover != rot.id) g.add_edge(mover, rot.id, kType2);
      }
    }
  }
  return g;
}

Matching eliminate_closed_subset(const Instance& inst, const Matching& m0, std::span<const Rotation> rotations,
                                 const RotationDigraph& digraph, std::span<const int> subset) {
  for (int v : subset) {
    if (v < 0 || v >= digraph.size()) throw std::invalid_argument("rotation id out of range");
  }
  if (!digraph.is_closed(subset)) throw std::invalid_argument("rotation subset is not closed under predecessors");
  std::vector<bool> in(digraph.size(), false);
  for (int v : subset) in[v] = true;

  Matching cur = m0;
  for (int v : digraph.topological_order()) {
    if (!in[v]) continue;
    const auto& rot = rotations[v];
    const std::size_t k = rot.pairs.size();
    for (auto [m, w] : rot.pairs) {
      if (cur.man_partner(m) != w) {
        throw std::logic_error("rotation " + std::to_string(v) + " is not exposed during elimination");
      }
    }
    std::vector<int> targets(k);
    for (std::size_t i = 0; i < k; ++i) targets[i] = rot.pairs[(i + 1) % k].second;
    for (std::size_t i = 0; i < k; ++i) cur.assign(rot.pairs[i].first, targets[i]);
  }
  (void)inst;
  return cur;
}

std::string dump_rotations(std::span<const Rotation> rotations) {
  std::string out;
  for (const auto& rot : rotations) {
    out += std::to_string(rot.id) + ":";
    for (auto [m, w] : rot.pairs) out += " (" + std::to_string(m + 1) + "," + std::to_string(w + 1) + ")";
    out += " | " + rot.profile.to_string() + "\n";
  }
  return out;
}

}  // namespace profsm
