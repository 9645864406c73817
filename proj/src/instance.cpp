#include "profsm/instance.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "profsm/stable_core.hpp"

namespace profsm {

namespace {

void check_lists(const std::vector<std::vector<int>>& lists, int other_size, const char* side) {
  std::vector<int> seen(other_size, -1);
  for (std::size_t a = 0; a < lists.size(); ++a) {
    for (int b : lists[a]) {
      if (b < 0 || b >= other_size) {
        throw std::invalid_argument(std::string(side) + " " + std::to_string(a + 1) + " lists out-of-range index " +
                                    std::to_string(b + 1));
      }
      if (seen[b] == static_cast<int>(a)) {
        throw std::invalid_argument(std::string(side) + " " + std::to_string(a + 1) + " lists " +
                                    std::to_string(b + 1) + " twice");
      }
      seen[b] = static_cast<int>(a);
    }
  }
}

}  // namespace

Instance::Instance(std::vector<std::vector<int>> men_lists, std::vector<std::vector<int>> women_lists)
    : men_(std::move(men_lists)), women_(std::move(women_lists)) {
  const int nm = num_men(), nw = num_women();
  check_lists(men_, nw, "man");
  check_lists(women_, nm, "woman");

  // Provisional ranks to test mutuality before filtering.
  man_rank_.assign(static_cast<std::size_t>(nm) * nw, 0);
  woman_rank_.assign(static_cast<std::size_t>(nw) * nm, 0);
  for (int m = 0; m < nm; ++m)
    for (std::size_t k = 0; k < men_[m].size(); ++k) man_rank_[static_cast<std::size_t>(m) * nw + men_[m][k]] = 1;
  for (int w = 0; w < nw; ++w)
    for (std::size_t k = 0; k < women_[w].size(); ++k) woman_rank_[static_cast<std::size_t>(w) * nm + women_[w][k]] = 1;

  for (int m = 0; m < nm; ++m) {
    std::erase_if(men_[m], [&](int w) {
      if (woman_rank_[static_cast<std::size_t>(w) * nm + m]) return false;
      warnings_.push_back("dropped non-mutual entry: man " + std::to_string(m + 1) + " lists woman " +
                          std::to_string(w + 1));
      return true;
    });
  }
  for (int w = 0; w < nw; ++w) {
    std::erase_if(women_[w], [&](int m) {
      if (man_rank_[static_cast<std::size_t>(m) * nw + w]) return false;
      warnings_.push_back("dropped non-mutual entry: woman " + std::to_string(w + 1) + " lists man " +
                          std::to_string(m + 1));
      return true;
    });
  }

  std::fill(man_rank_.begin(), man_rank_.end(), 0);
  std::fill(woman_rank_.begin(), woman_rank_.end(), 0);
  for (int m = 0; m < nm; ++m) {
    for (std::size_t k = 0; k < men_[m].size(); ++k)
      man_rank_[static_cast<std::size_t>(m) * nw + men_[m][k]] = static_cast<int>(k) + 1;
    total_length_ += men_[m].size();
  }
  for (int w = 0; w < nw; ++w)
    for (std::size_t k = 0; k < women_[w].size(); ++k)
      woman_rank_[static_cast<std::size_t>(w) * nm + women_[w][k]] = static_cast<int>(k) + 1;
}

int Instance::max_list_length() const {
  std::size_t len = 0;
  for (const auto& l : men_) len = std::max(len, l.size());
  for (const auto& l : women_) len = std::max(len, l.size());
  return static_cast<int>(len);
}

namespace {

std::vector<int> parse_ints(const std::string& line, int line_no) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    int v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, v);
    if (ec != std::errc{} || ptr != line.data() + end) {
      throw ParseError(line_no, "malformed integer '" + line.substr(pos, end - pos) + "'");
    }
    out.push_back(v);
    pos = end;
  }
  return out;
}

std::vector<int> parse_list(const std::string& line, int line_no, int other_size) {
  auto raw = parse_ints(line, line_no);
  std::vector<bool> seen(other_size, false);
  std::vector<int> out;
  out.reserve(raw.size());
  for (int v : raw) {
    if (v < 1 || v > other_size) {
      throw ParseError(line_no, "index " + std::to_string(v) + " out of range [1, " + std::to_string(other_size) + "]");
    }
    if (seen[v - 1]) throw ParseError(line_no, "duplicate entry " + std::to_string(v));
    seen[v - 1] = true;
    out.push_back(v - 1);
  }
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur)) lines.push_back(cur);
  }
  if (lines.empty()) throw ParseError(1, "missing header '<n_men> <n_women>'");
  auto header = parse_ints(lines[0], 1);
  if (header.size() != 2) throw ParseError(1, "header must hold exactly two integers");
  const int nm = header[0], nw = header[1];
  if (nm < 0 || nw < 0) throw ParseError(1, "negative agent count");

  const std::size_t needed = 1 + static_cast<std::size_t>(nm) + static_cast<std::size_t>(nw);
  for (std::size_t i = needed; i < lines.size(); ++i) {
    if (!parse_ints(lines[i], static_cast<int>(i) + 1).empty()) {
      throw ParseError(static_cast<int>(i) + 1, "unexpected content after the last preference list");
    }
  }
  lines.resize(std::max(lines.size(), needed));

  std::vector<std::vector<int>> men(nm), women(nw);
  for (int m = 0; m < nm; ++m) men[m] = parse_list(lines[1 + m], 2 + m, nw);
  for (int w = 0; w < nw; ++w) women[w] = parse_list(lines[1 + nm + w], 2 + nm + w, nm);
  return Instance(std::move(men), std::move(women));
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst) {
  std::string out = std::to_string(inst.num_men()) + " " + std::to_string(inst.num_women()) + "\n";
  auto emit = [&out](std::span<const int> list) {
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(list[k] + 1);
    }
    out += '\n';
  };
  for (int m = 0; m < inst.num_men(); ++m) emit(inst.man_list(m));
  for (int w = 0; w < inst.num_women(); ++w) emit(inst.woman_list(w));
  return out;
}

Matching::Matching(int num_men, int num_women, std::span<const std::pair<int, int>> pairs)
    : Matching(num_men, num_women) {
  for (auto [m, w] : pairs) {
    if (m < 0 || m >= num_men || w < 0 || w >= num_women) throw std::invalid_argument("pair index out of range");
    if (man_partner_[m] != -1 || woman_partner_[w] != -1) throw std::invalid_argument("agent matched twice");
    assign(m, w);
  }
}

void Matching::assign(int m, int w) {
  if (man_partner_[m] != -1) woman_partner_[man_partner_[m]] = -1;
  if (woman_partner_[w] != -1) man_partner_[woman_partner_[w]] = -1;
  man_partner_[m] = w;
  woman_partner_[w] = m;
}

void Matching::unassign_man(int m) {
  if (man_partner_[m] == -1) return;
  woman_partner_[man_partner_[m]] = -1;
  man_partner_[m] = -1;
}

std::size_t Matching::size() const {
  return static_cast<std::size_t>(std::count_if(man_partner_.begin(), man_partner_.end(), [](int w) { return w != -1; }));
}

bool Matching::is_perfect() const {
  return num_men() == num_women() && size() == man_partner_.size();
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m < num_men(); ++m)
    if (man_partner_[m] != -1) out.emplace_back(m, man_partner_[m]);
  return out;
}

void validate_matching(const Instance& inst, const Matching& m) {
  if (m.num_men() != inst.num_men() || m.num_women() != inst.num_women()) {
    throw std::logic_error("matching dimensions do not match the instance");
  }
  for (auto [man, woman] : m.pairs()) {
    if (!inst.acceptable(man, woman)) {
      throw std::logic_error("pair (" + std::to_string(man + 1) + "," + std::to_string(woman + 1) +
                             ") is not mutually acceptable");
    }
  }
}

Profile profile_of(const Instance& inst, const Matching& m) {
  validate_matching(inst, m);
  Profile p(static_cast<std::size_t>(inst.num_men()));
  for (auto [man, woman] : m.pairs()) {
    p[inst.man_rank(man, woman) - 1] += 1;
    p[inst.woman_rank(woman, man) - 1] += 1;
  }
  return p;
}

std::string format_matching(const Matching& m) {
  std::string out;
  for (auto [man, woman] : m.pairs()) out += std::to_string(man + 1) + " " + std::to_string(woman + 1) + "\n";
  return out;
}

Matching parse_matching(const std::string& text, int num_men, int num_women) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> pairs;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto vals = parse_ints(line, line_no);
    if (vals.empty()) continue;
    if (vals.size() != 2) throw ParseError(line_no, "expected 'man woman'");
    pairs.emplace_back(vals[0] - 1, vals[1] - 1);
  }
  return Matching(num_men, num_women, pairs);
}

Matching Preprocessed::to_original(const Matching& m, int original_men, int original_women) const {
  Matching out(original_men, original_women);
  for (auto [man, woman] : m.pairs()) out.assign(man_origin[man], woman_origin[woman]);
  return out;
}

Preprocessed preprocess(const Instance& inst) {
  const Matching m0 = man_optimal(inst);
  Preprocessed out;
  std::vector<int> man_new(inst.num_men(), -1), woman_new(inst.num_women(), -1);
  for (int m = 0; m < inst.num_men(); ++m) {
    if (m0.man_partner(m) != -1) {
      man_new[m] = static_cast<int>(out.man_origin.size());
      out.man_origin.push_back(m);
    }
  }
  for (int w = 0; w < inst.num_women(); ++w) {
    if (m0.woman_partner(w) != -1) {
      woman_new[w] = static_cast<int>(out.woman_origin.size());
      out.woman_origin.push_back(w);
    }
  }
  std::vector<std::vector<int>> men(out.man_origin.size()), women(out.woman_origin.size());
  for (std::size_t i = 0; i < out.man_origin.size(); ++i)
    for (int w : inst.man_list(out.man_origin[i]))
      if (woman_new[w] != -1) men[i].push_back(woman_new[w]);
  for (std::size_t j = 0; j < out.woman_origin.size(); ++j)
    for (int m : inst.woman_list(out.woman_origin[j]))
      if (man_new[m] != -1) women[j].push_back(man_new[m]);
  out.instance = Instance(std::move(men), std::move(women));
  return out;
}

}  // namespace profsm
