#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "planarity/errors.hpp"

namespace planarity {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

ExactInt factorial(long n);

/// Binomial coefficient; zero outside 0 <= k <= n.
ExactInt binomial(long n, long k);

/// Mathematical ceiling of a/b; throws DomainError when b <= 0.
long ceil_div(long a, long b);

/// base^exp for a possibly negative exponent (base != 0 when exp < 0).
ExactRat rat_pow(const ExactInt& base, long exp);

std::string to_string(const ExactInt& v);
std::string to_string(const ExactRat& v);

/// Weakly decreasing sequence of positive integers.
///
/// The default-constructed partition is the empty partition of 0; it only
/// appears inside recursions. Everything user-facing requires size() >= 1.
class Partition {
 public:
  Partition() = default;

  /// Parts must already be weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  /// Sorts the parts; still rejects non-positive entries.
  static Partition from_unsorted(std::vector<int> parts);

  /// The all-simple profile (1^d).
  static Partition ones(int d);

  /// Parses "2,1,1" (whitespace tolerated). Throws ParseError.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// multiplicities()[i] = number of parts equal to i, for 0 <= i <= size().
  std::vector<int> multiplicities() const;

  /// Sum of (mu_i - 1) = size - length.
  int ramification() const { return size_ - length(); }

  /// Canonical text form, "2,1,1".
  std::string str() const;

  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of d in reverse-lexicographic order: (d), (d-1,1), ..., (1^d).
std::vector<Partition> partitions_of(int d);

/// prod_i m_i! where m_i counts the parts equal to i.
ExactInt aut_factor(const Partition& mu);

/// Centralizer order z_mu = prod_i i^{m_i} m_i!.
ExactInt z_factor(const Partition& mu);

}  // namespace planarity
