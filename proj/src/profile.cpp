#include "profsm/profile.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace profsm {

std::size_t Profile::degree() const {
  for (std::size_t k = elems_.size(); k > 0; --k) {
    if (elems_[k - 1] != 0) return k;
  }
  return 0;
}

int Profile::lex_sign() const {
  for (auto v : elems_) {
    if (v != 0) return v > 0 ? 1 : -1;
  }
  return 0;
}

Profile::value_type Profile::abs_sum() const {
  value_type s = 0;
  for (auto v : elems_) s += v < 0 ? -v : v;
  return s;
}

std::size_t Profile::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(elems_.begin(), elems_.end(), [](auto v) { return v != 0; }));
}

Profile Profile::resized(std::size_t length) const {
  Profile out(*this);
  out.elems_.resize(length, 0);
  return out;
}

Profile& Profile::operator+=(const Profile& other) {
  if (other.elems_.size() > elems_.size()) elems_.resize(other.elems_.size(), 0);
  for (std::size_t k = 0; k < other.elems_.size(); ++k) elems_[k] += other.elems_[k];
  return *this;
}

Profile& Profile::operator-=(const Profile& other) {
  if (other.elems_.size() > elems_.size()) elems_.resize(other.elems_.size(), 0);
  for (std::size_t k = 0; k < other.elems_.size(); ++k) elems_[k] -= other.elems_[k];
  return *this;
}

Profile operator-(const Profile& p) {
  Profile out(p);
  for (auto& v : out.elems_) v = -v;
  return out;
}

std::strong_ordering operator<=>(const Profile& a, const Profile& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < len; ++k) {
    auto x = a.at(k), y = b.at(k);
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Profile::to_string() const {
  std::size_t len = std::max<std::size_t>(degree(), 1);
  std::string out;
  for (std::size_t k = 0; k < len; ++k) {
    if (k) out += ',';
    out += std::to_string(at(k));
  }
  return out;
}

std::strong_ordering lex_compare(const Profile& p, const Profile& q) { return p <=> q; }

Profile profile_add(const Profile& p, const Profile& q) { return p + q; }

Profile profile_negate_reverse(const Profile& p, std::size_t k) {
  if (p.degree() > k) {
    throw std::invalid_argument("negate_reverse window " + std::to_string(k) +
                                " shorter than profile degree " + std::to_string(p.degree()));
  }
  Profile out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = -p.at(k - 1 - i);
  return out;
}

Profile profile_abs(const Profile& p) { return p.lex_sign() < 0 ? -p : p; }

Profile parse_profile(const std::string& text) {
  std::vector<Profile::value_type> elems;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    Profile::value_type v{};
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw std::invalid_argument("malformed profile: '" + text + "'");
    elems.push_back(v);
    pos = comma + 1;
  }
  return Profile(std::move(elems));
}

SparseProfile to_sparse(const Profile& p) {
  SparseProfile out;
  out.length = p.size();
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != 0) out.entries.emplace_back(k + 1, p[k]);
  }
  return out;
}

Profile to_dense(const SparseProfile& p) {
  Profile out(std::max(p.length, p.degree()));
  for (auto [rank, v] : p.entries) out[rank - 1] = v;
  return out;
}

BigWeight high_weight(const Profile& p, std::size_t n) {
  if (p.degree() > n) {
    throw std::invalid_argument("profile degree " + std::to_string(p.degree()) + " exceeds n = " +
                                std::to_string(n));
  }
  // Horner over ranks 1..n with base 2n+1.
  const unsigned long base = 2 * n + 1;
  mpz_class acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc *= base;
    acc += static_cast<long>(p.at(i));
  }
  return BigWeight(std::move(acc));
}

}  // namespace profsm
