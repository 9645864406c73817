#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace profsm {

/// Integer vector indexed by rank: element k (0-based) counts agents with
/// their (k+1)-th choice, or the change in that count for a rotation.
///
/// Comparison is lexicographic with implicit zero padding, so profiles of
/// different stored lengths compare as if both were extended with zeros.
class Profile {
 public:
  using value_type = std::int64_t;

  Profile() = default;
  explicit Profile(std::size_t length) : elems_(length, 0) {}
  Profile(std::initializer_list<value_type> elems) : elems_(elems) {}
  explicit Profile(std::vector<value_type> elems) : elems_(std::move(elems)) {}

  std::size_t size() const { return elems_.size(); }
  const std::vector<value_type>& elems() const { return elems_; }

  /// Element at 0-based position `k`; zero beyond the stored length.
  value_type at(std::size_t k) const { return k < elems_.size() ? elems_[k] : 0; }
  value_type& operator[](std::size_t k) { return elems_[k]; }
  value_type operator[](std::size_t k) const { return elems_[k]; }

  /// Largest 1-based rank with a nonzero element; 0 for the zero vector.
  std::size_t degree() const;
  bool is_zero() const { return degree() == 0; }
  /// Sign of the first nonzero element (-1, 0 or +1).
  int lex_sign() const;
  /// Sum of |elems|.
  value_type abs_sum() const;
  /// Number of nonzero elements.
  std::size_t nonzeros() const;

  /// Resized copy (truncating or zero-extending).
  Profile resized(std::size_t length) const;

  Profile& operator+=(const Profile& other);
  Profile& operator-=(const Profile& other);

  friend Profile operator+(Profile a, const Profile& b) { return a += b; }
  friend Profile operator-(Profile a, const Profile& b) { return a -= b; }
  friend Profile operator-(const Profile& p);

  friend std::strong_ordering operator<=>(const Profile& a, const Profile& b);
  friend bool operator==(const Profile& a, const Profile& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// Comma-separated elements, trailing zeros dropped (at least one element).
  std::string to_string() const;

 private:
  std::vector<value_type> elems_;
};

std::strong_ordering lex_compare(const Profile& p, const Profile& q);
Profile profile_add(const Profile& p, const Profile& q);

/// <-p_k, ..., -p_1> over a window of length k. Requires k >= degree(p).
Profile profile_negate_reverse(const Profile& p, std::size_t k);

/// Flips every sign iff the first nonzero element is negative.
Profile profile_abs(const Profile& p);

/// Parses the comma-separated form produced by Profile::to_string().
Profile parse_profile(const std::string& text);

/// Compressed profile: nonzero (rank, value) pairs with ascending 1-based
/// rank, plus the logical length.
struct SparseProfile {
  std::size_t length = 0;
  std::vector<std::pair<std::size_t, Profile::value_type>> entries;

  std::size_t degree() const { return entries.empty() ? 0 : entries.back().first; }
  friend bool operator==(const SparseProfile&, const SparseProfile&) = default;
  friend auto operator<=>(const SparseProfile&, const SparseProfile&) = default;
};

SparseProfile to_sparse(const Profile& p);
Profile to_dense(const SparseProfile& p);

/// Exact signed integer used for exponential-weight scalarisations.
class BigWeight {
 public:
  BigWeight() = default;
  explicit BigWeight(mpz_class value) : value_(std::move(value)) {}
  explicit BigWeight(long value) : value_(value) {}

  const mpz_class& value() const { return value_; }
  int sign() const { return sgn(value_); }
  std::string to_string() const { return value_.get_str(); }

  BigWeight& operator+=(const BigWeight& o) { value_ += o.value_; return *this; }
  BigWeight& operator-=(const BigWeight& o) { value_ -= o.value_; return *this; }
  friend BigWeight operator+(BigWeight a, const BigWeight& b) { return a += b; }
  friend BigWeight operator-(BigWeight a, const BigWeight& b) { return a -= b; }

  friend std::strong_ordering operator<=>(const BigWeight& a, const BigWeight& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const BigWeight& a, const BigWeight& b) { return a.value_ == b.value_; }

 private:
  mpz_class value_;
};

/// Sum of p_i * (2n+1)^(n-i) over 1-based ranks i. Throws
/// std::invalid_argument if degree(p) > n.
BigWeight high_weight(const Profile& p, std::size_t n);

}  // namespace profsm
