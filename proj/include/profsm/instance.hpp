#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "profsm/profile.hpp"

namespace profsm {

enum class Side { man, woman };

/// An agent on one side of the market. `index` is 0-based in memory; the
/// text formats print it 1-based.
struct AgentRef {
  Side side;
  int index;
  friend bool operator==(const AgentRef&, const AgentRef&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Stable Marriage instance with incomplete lists.
///
/// Lists hold 0-based indices of the opposite side in preference order.
/// Construction validates indices and duplicates (std::invalid_argument)
/// and drops entries that are not mutual, recording one warning per drop.
class Instance {
 public:
  Instance() = default;
  Instance(std::vector<std::vector<int>> men_lists, std::vector<std::vector<int>> women_lists);

  int num_men() const { return static_cast<int>(men_.size()); }
  int num_women() const { return static_cast<int>(women_.size()); }

  std::span<const int> man_list(int m) const { return men_[m]; }
  std::span<const int> woman_list(int w) const { return women_[w]; }
  std::span<const int> list(AgentRef a) const { return a.side == Side::man ? man_list(a.index) : woman_list(a.index); }

  /// 1-based rank of w on m's list, 0 if unacceptable.
  int man_rank(int m, int w) const { return man_rank_[static_cast<std::size_t>(m) * women_.size() + w]; }
  /// 1-based rank of m on w's list, 0 if unacceptable.
  int woman_rank(int w, int m) const { return woman_rank_[static_cast<std::size_t>(w) * men_.size() + m]; }
  bool acceptable(int m, int w) const { return man_rank(m, w) != 0; }

  /// Total number of acceptable pairs (sum of men's list lengths).
  std::size_t total_length() const { return total_length_; }
  /// Longest list on either side.
  int max_list_length() const;

  const std::vector<std::string>& warnings() const { return warnings_; }

  const std::vector<std::vector<int>>& men_lists() const { return men_; }
  const std::vector<std::vector<int>>& women_lists() const { return women_; }

 private:
  std::vector<std::vector<int>> men_;
  std::vector<std::vector<int>> women_;
  std::vector<int> man_rank_;
  std::vector<int> woman_rank_;
  std::size_t total_length_ = 0;
  std::vector<std::string> warnings_;
};

/// Parses the whitespace/line instance format (1-based indices).
Instance parse_instance(const std::string& text);
Instance read_instance_file(const std::string& path);
std::string serialize_instance(const Instance& inst);

/// A set of disjoint (man, woman) pairs.
class Matching {
 public:
  Matching() = default;
  Matching(int num_men, int num_women) : man_partner_(num_men, -1), woman_partner_(num_women, -1) {}
  /// Throws std::invalid_argument when an agent appears twice or an index is out of range.
  Matching(int num_men, int num_women, std::span<const std::pair<int, int>> pairs);

  int num_men() const { return static_cast<int>(man_partner_.size()); }
  int num_women() const { return static_cast<int>(woman_partner_.size()); }

  /// Partner or -1.
  int man_partner(int m) const { return man_partner_[m]; }
  int woman_partner(int w) const { return woman_partner_[w]; }

  void assign(int m, int w);
  void unassign_man(int m);

  std::size_t size() const;
  bool is_perfect() const;
  /// Pairs sorted by man index.
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.man_partner_ == b.man_partner_ && a.woman_partner_ == b.woman_partner_;
  }

 private:
  std::vector<int> man_partner_;
  std::vector<int> woman_partner_;
};

/// Throws std::logic_error if some pair is not mutually acceptable in `inst`
/// or the matching dimensions differ from the instance.
void validate_matching(const Instance& inst, const Matching& m);

/// Profile of length num_men: element k counts men plus women matched to
/// their (k+1)-th choice.
Profile profile_of(const Instance& inst, const Matching& m);

/// One "i j" line per pair (1-based), sorted by man.
std::string format_matching(const Matching& m);
Matching parse_matching(const std::string& text, int num_men, int num_women);

/// Instance restricted to agents matched in stable matchings, plus the
/// mapping back to the original indices.
struct Preprocessed {
  Instance instance;
  std::vector<int> man_origin;
  std::vector<int> woman_origin;

  /// Maps a matching of `instance` to the original index space.
  Matching to_original(const Matching& m, int original_men, int original_women) const;
};

Preprocessed preprocess(const Instance& inst);

}  // namespace profsm
