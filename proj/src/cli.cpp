#include "profsm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "profsm/analytics.hpp"
#include "profsm/instance.hpp"
#include "profsm/rotations.hpp"
#include "profsm/solvers.hpp"
#include "profsm/stable_core.hpp"
#include "profsm/vbflow.hpp"

namespace profsm {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

Instance load(const std::string& path, std::ostream& err) {
  Instance inst = read_instance_file(path);
  for (const auto& w : inst.warnings()) err << path << ": warning: " << w << '\n';
  return inst;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string stem(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Profile-based optimal stable matchings"};
  app.name("profsm");
  app.require_subcommand(1);

  std::string out_path;
  std::string in_path;
  std::size_t cap = kDefaultEnumerationCap;

  auto* gen = app.add_subcommand("generate", "Write a random or I1 instance");
  int men = 0, women = -1, i1_n = 0;
  double density = 1.0;
  std::uint64_t seed = 0;
  gen->add_option("--men", men, "Number of men");
  gen->add_option("--women", women, "Number of women (default: --men)");
  gen->add_option("--density", density, "Probability that a pair is acceptable")->capture_default_str();
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("--i1", i1_n, "Emit the I1 family instance of this even size instead");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* sol = app.add_subcommand("solve", "Compute one optimal stable matching");
  std::string criterion;
  bool debug = false;
  sol->add_option("--in", in_path, "Instance file")->required();
  sol->add_option("--criterion", criterion, "rank-maximal, generous, egalitarian, sex-equal, median, min-regret, "
                                            "man-optimal or woman-optimal")
      ->required();
  sol->add_option("--out", out_path, "Output file (default stdout)");
  sol->add_option("--cap", cap, "Enumeration cap")->capture_default_str();
  sol->add_flag("--debug", debug, "Dump rotations and the flow network to stderr");

  auto* en = app.add_subcommand("enumerate", "List every stable matching");
  en->add_option("--in", in_path, "Instance file")->required();
  en->add_option("--cap", cap, "Enumeration cap")->capture_default_str();
  en->add_option("--out", out_path, "Output file (default stdout)");

  auto* st = app.add_subcommand("stats", "Per-criterion statistics as CSV");
  std::vector<std::string> in_paths;
  std::string criteria_list, pct_list = "10,20,50";
  st->add_option("--in", in_paths, "Instance files")->required();
  st->add_option("--criteria", criteria_list, "Comma-separated criteria (default all)");
  st->add_option("--pct", pct_list, "Comma-separated a values for the last-a% columns")->capture_default_str();
  st->add_option("--cap", cap, "Enumeration cap")->capture_default_str();
  st->add_option("--out", out_path, "Output file (default stdout)");

  auto* sp = app.add_subcommand("space-report", "Bits needed for exponential vs vector weights");
  sp->alias("space");
  bool detail = false;
  auto* sp_in = sp->add_option("--in", in_path, "Instance file");
  sp->add_option("--i1", i1_n, "Use the analytic I1 rotation profiles of this size")->excludes(sp_in);
  sp->add_flag("--detail", detail, "One row per rotation");
  sp->add_option("--out", out_path, "Output file (default stdout)");

  auto* oc = app.add_subcommand("oracle-check", "Cross-check solvers on random instances");
  int check_n = 6, trials = 100;
  oc->add_option("--n", check_n, "Agents per side")->capture_default_str();
  oc->add_option("--trials", trials, "Number of instances")->capture_default_str();
  oc->add_option("--seed", seed, "Random seed")->capture_default_str();
  oc->add_option("--density", density, "Acceptable-pair density")->capture_default_str();
  oc->add_option("--cap", cap, "Enumeration cap")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      Instance inst;
      if (i1_n != 0) {
        inst = generate_i1(i1_n);
      } else {
        if (women < 0) women = men;
        if (men < 1 || women < 1) throw UsageError("--men and --women must be at least 1");
        if (!(density > 0.0 && density <= 1.0)) throw UsageError("--density must lie in (0, 1]");
        inst = generate_uniform(men, women, density, seed);
      }
      emit(serialize_instance(inst), out_path, out);
      return kExitOk;
    }

    if (sol->parsed()) {
      const auto c = parse_criterion(criterion);
      if (!c) {
        err << "unknown criterion '" << criterion << "'\n" << sol->help();
        return kExitUsage;
      }
      const Instance inst = load(in_path, err);
      const Preprocessed pre = preprocess(inst);
      if (debug && (*c == Criterion::kRankMaximal || *c == Criterion::kGenerous)) {
        const auto fs = solve_profile_flow(
            pre.instance, *c == Criterion::kRankMaximal ? FlowMode::kRankMaximal : FlowMode::kGenerous);
        err << dump_rotations(fs.rotations) << dump_network(fs.network, &fs.flow);
      }
      const Matching m = solve(pre.instance, *c, cap);
      std::string text = format_matching(pre.to_original(m, inst.num_men(), inst.num_women()));
      text += "profile: " + profile_of(pre.instance, m).to_string() + "\n";
      emit(text, out_path, out);
      return kExitOk;
    }

    if (en->parsed()) {
      const Instance inst = load(in_path, err);
      const Preprocessed pre = preprocess(inst);
      const auto all = enumerate_stable_matchings(pre.instance, cap);
      std::string text = std::to_string(all.size()) + "\n";
      for (const auto& m : all) text += "\n" + format_matching(pre.to_original(m, inst.num_men(), inst.num_women()));
      emit(text, out_path, out);
      return kExitOk;
    }

    if (st->parsed()) {
      std::vector<Criterion> criteria;
      if (criteria_list.empty()) {
        criteria.assign(all_criteria().begin(), all_criteria().end());
      } else {
        for (const auto& tok : split_commas(criteria_list)) {
          const auto c = parse_criterion(tok);
          if (!c) throw UsageError("unknown criterion '" + tok + "'");
          criteria.push_back(*c);
        }
      }
      std::vector<int> pcts;
      for (const auto& tok : split_commas(pct_list)) {
        int a = 0;
        try {
          a = std::stoi(tok);
        } catch (const std::exception&) {
          throw UsageError("malformed --pct value '" + tok + "'");
        }
        if (a <= 0 || a > 100) throw UsageError("--pct values must lie in (0, 100]");
        pcts.push_back(a);
      }
      std::vector<BatchInput> batch;
      for (const auto& p : in_paths) batch.push_back({stem(p), load(p, err)});
      emit(batch_stats(batch, criteria, pcts, cap), out_path, out);
      return kExitOk;
    }

    if (sp->parsed()) {
      SpaceReport r;
      if (i1_n != 0) {
        const auto profiles = i1_rotation_profiles(i1_n);
        r = space_report(std::span<const SparseProfile>(profiles), static_cast<std::size_t>(i1_n));
      } else if (!in_path.empty()) {
        const Instance inst = preprocess(load(in_path, err)).instance;
        std::vector<Profile> profiles;
        for (const auto& rot : find_rotations(inst)) profiles.push_back(rot.profile);
        r = space_report(std::span<const Profile>(profiles), static_cast<std::size_t>(inst.num_men()));
      } else {
        throw UsageError("space-report needs --in or --i1");
      }
      std::string text;
      if (detail) {
        text = "rotation,exponential_bits,vector_bits\n";
        for (std::size_t i = 0; i < r.exponential_bits.size(); ++i)
          text += std::to_string(i) + "," + std::to_string(r.exponential_bits[i]) + "," +
                  std::to_string(r.vector_bits[i]) + "\n";
      } else {
        text = "n,d_t,rotations,exponential_bits,vector_bits\n" + std::to_string(r.n) + "," + std::to_string(r.d_t) +
               "," + std::to_string(r.exponential_bits.size()) + "," + std::to_string(r.exponential_total) + "," +
               std::to_string(r.vector_total) + "\n";
      }
      emit(text, out_path, out);
      return kExitOk;
    }

    if (oc->parsed()) {
      if (check_n < 1 || trials < 0) throw UsageError("--n must be positive and --trials non-negative");
      if (!(density > 0.0 && density <= 1.0)) throw UsageError("--density must lie in (0, 1]");
      std::mt19937_64 seeds(seed);
      for (int t = 0; t < trials; ++t) {
        const Instance inst = preprocess(generate_uniform(check_n, check_n, density, seeds())).instance;
        if (auto failure = cross_check(inst, cap)) {
          err << "trial " << t << ": " << *failure << '\n';
          out << serialize_instance(inst);
          return kExitCheckFailed;
        }
      }
      out << "ok: " << trials << " trials agree\n";
      return kExitOk;
    }
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << " (raise --cap)\n";
    return kExitCapExceeded;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace profsm
