#include "profsm/analytics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "profsm/rotations.hpp"
#include "profsm/stable_core.hpp"

namespace profsm {

int last_pct_threshold(int n, int a) {
  if (a <= 0 || a > 100) throw std::invalid_argument("percentage must lie in (0, 100]");
  return static_cast<int>((static_cast<long long>(100 - a) * n) / 100) + 1;
}

MatchingStats matching_stats(const Instance& inst, const Matching& m, std::span<const int> pcts) {
  validate_matching(inst, m);
  if (!m.is_perfect()) throw std::invalid_argument("matching statistics require a perfect matching");
  const int n = inst.num_men();
  MatchingStats s;
  std::vector<int> ranks;
  ranks.reserve(2 * static_cast<std::size_t>(n));
  for (auto [man, woman] : m.pairs()) {
    const int rm = inst.man_rank(man, woman), rw = inst.woman_rank(woman, man);
    s.man_cost += rm;
    s.woman_cost += rw;
    s.man_degree = std::max(s.man_degree, rm);
    s.woman_degree = std::max(s.woman_degree, rw);
    s.first_choices += (rm == 1) + (rw == 1);
    ranks.push_back(rm);
    ranks.push_back(rw);
  }
  s.cost = s.man_cost + s.woman_cost;
  s.sex_equal = s.man_cost > s.woman_cost ? s.man_cost - s.woman_cost : s.woman_cost - s.man_cost;
  s.degree = std::max(s.man_degree, s.woman_degree);
  for (int a : pcts) {
    const int b = last_pct_threshold(n, a);
    s.last_pct_counts.emplace_back(a, std::count_if(ranks.begin(), ranks.end(), [b](int r) { return r >= b; }));
  }
  return s;
}

unsigned ceil_log2(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("ceil_log2 of zero");
  return x == 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

namespace {

std::uint64_t ceil_log2(const mpz_class& x) {
  const std::size_t len = mpz_sizeinbase(x.get_mpz_t(), 2);
  const bool power_of_two = mpz_scan1(x.get_mpz_t(), 0) == len - 1;
  return power_of_two ? len - 1 : len;
}

}  // namespace

SpaceReport space_report(std::span<const SparseProfile> profiles, std::size_t n) {
  SpaceReport r;
  r.n = n;
  for (const auto& p : profiles) r.d_t = std::max(r.d_t, p.degree());

  const std::uint64_t index_bits = n > 0 ? ceil_log2(static_cast<std::uint64_t>(n)) : 0;
  const std::uint64_t value_bits = n > 0 ? ceil_log2(2 * static_cast<std::uint64_t>(n)) + 1 : 0;

  std::unordered_map<std::size_t, mpz_class> powers;
  auto power = [&](std::size_t e) -> const mpz_class& {
    auto it = powers.find(e);
    if (it == powers.end()) {
      mpz_class v;
      mpz_ui_pow_ui(v.get_mpz_t(), r.d_t, e);
      it = powers.emplace(e, std::move(v)).first;
    }
    return it->second;
  };
  std::map<std::vector<std::pair<std::size_t, Profile::value_type>>, std::uint64_t> memo;

  for (const auto& p : profiles) {
    std::uint64_t exp_bits = 32;
    if (r.d_t > 0) {
      auto it = memo.find(p.entries);
      if (it == memo.end()) {
        mpz_class w = 0;
        for (auto [rank, v] : p.entries) w += mpz_class(static_cast<long>(v)) * power(r.d_t - rank);
        w = abs(w);
        it = memo.emplace(p.entries, (w == 0 ? 1 : ceil_log2(w)) + 32).first;
      }
      exp_bits = it->second;
    }
    const std::uint64_t z = p.entries.size();
    const std::uint64_t vec_bits = 32 + z * index_bits + z * value_bits;
    r.exponential_bits.push_back(exp_bits);
    r.vector_bits.push_back(vec_bits);
    r.exponential_total += exp_bits;
    r.vector_total += vec_bits;
  }
  r.vector_total += 64;
  return r;
}

SpaceReport space_report(std::span<const Profile> profiles, std::size_t n) {
  std::vector<SparseProfile> sparse;
  sparse.reserve(profiles.size());
  for (const auto& p : profiles) sparse.push_back(to_sparse(p));
  return space_report(std::span<const SparseProfile>(sparse), n);
}

namespace {

// Uniform draw from [0, bound) by rejection, free of modulo bias.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
  std::uint64_t x;
  do x = rng();
  while (x > limit);
  return x % bound;
}

void shuffle(std::vector<int>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[bounded(rng, i)]);
}

}  // namespace

Instance generate_uniform(int num_men, int num_women, double density, std::uint64_t seed) {
  if (num_men < 0 || num_women < 0) throw std::invalid_argument("agent counts must be non-negative");
  if (!(density > 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> men(num_men), women(num_women);
  for (int m = 0; m < num_men; ++m) {
    for (int w = 0; w < num_women; ++w) {
      if (density < 1.0 && static_cast<double>(rng() >> 11) * 0x1.0p-53 >= density) continue;
      men[m].push_back(w);
      women[w].push_back(m);
    }
  }
  for (auto& l : men) shuffle(l, rng);
  for (auto& l : women) shuffle(l, rng);
  return Instance(std::move(men), std::move(women));
}

Instance generate_i1(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("I1 needs an even n of at least 4");
  std::vector<std::vector<int>> men(n), women(n);
  for (int a = 0; a < n; ++a) {
    const int mate = a ^ 1;  // the other member of a's block
    men[a].push_back(a);
    for (int w = 0; w < n; ++w)
      if (w != a && w != mate) men[a].push_back(w);
    men[a].push_back(mate);

    women[a].push_back(mate);
    women[a].push_back(a);
    for (int m = 0; m < n; ++m)
      if (m != a && m != mate) women[a].push_back(m);
  }
  return Instance(std::move(men), std::move(women));
}

std::vector<SparseProfile> i1_rotation_profiles(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("I1 needs an even n of at least 4");
  SparseProfile p;
  p.length = static_cast<std::size_t>(n);
  p.entries = {{2, -2}, {static_cast<std::size_t>(n), 2}};
  return std::vector<SparseProfile>(static_cast<std::size_t>(n / 2), p);
}

std::string batch_stats(std::span<const BatchInput> instances, std::span<const Criterion> criteria,
                        std::span<const int> pcts, std::size_t cap) {
  std::string out =
      "instance_id,criterion,n,m,num_rotations,num_stable,cost,man_cost,woman_cost,sex_equal,degree,first_choices";
  for (int a : pcts) out += ",last" + std::to_string(a);
  out += '\n';

  for (const auto& in : instances) {
    const Instance inst = preprocess(in.instance).instance;
    const std::size_t rotations = find_rotations(inst).size();
    std::optional<std::vector<Matching>> all;
    try {
      all = enumerate_stable_matchings(inst, cap);
    } catch (const EnumerationCapExceeded&) {
    }

    for (Criterion c : criteria) {
      std::string row = in.id + "," + std::string(criterion_token(c)) + "," + std::to_string(inst.num_men()) + "," +
                        std::to_string(inst.total_length()) + "," + std::to_string(rotations) + "," +
                        (all ? std::to_string(all->size()) : "TIMEOUT");
      std::optional<Matching> m;
      if (!needs_enumeration(c)) {
        m = solve(inst, c, cap);
      } else if (all) {
        switch (c) {
          case Criterion::kEgalitarian: m = select_egalitarian(*all, inst); break;
          case Criterion::kSexEqual: m = select_sex_equal(*all, inst); break;
          case Criterion::kMedian: m = select_median(*all, inst); break;
          default: m = select_min_regret(*all, inst); break;
        }
      }
      if (m) {
        const auto s = matching_stats(inst, *m, pcts);
        for (long long v : {s.cost, s.man_cost, s.woman_cost, s.sex_equal, static_cast<long long>(s.degree),
                            s.first_choices})
          row += "," + std::to_string(v);
        for (const auto& [a, count] : s.last_pct_counts) row += "," + std::to_string(count);
      } else {
        for (std::size_t i = 0; i < 6 + pcts.size(); ++i) row += ",TIMEOUT";
      }
      out += row + '\n';
    }
  }
  return out;
}

}  // namespace profsm
