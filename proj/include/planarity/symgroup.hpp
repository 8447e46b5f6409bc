#pragma once

#include <map>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

#include "planarity/core_math.hpp"

namespace planarity {

/// Bijection of {0, ..., d-1}.
///
/// Products compose right-to-left: (p * q)(x) = p(q(x)), so in
/// tau_r * ... * tau_1 * sigma the permutation sigma acts first.
class Permutation {
 public:
  static Permutation identity(int d);
  static Permutation transposition(int d, int a, int b);

  /// Throws DomainError unless images is a bijection of {0, ..., d-1}.
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  Partition cycle_type() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// |C_mu| = d! / z_mu.
ExactInt class_size(const Partition& mu);

/// Irreducible characters of S_d by the Murnaghan-Nakayama rule.
///
/// Values are memoized on (lambda, rho). The table is guarded by a
/// shared_mutex; concurrent inserts of the same key store the same value.
class CharacterEvaluator {
 public:
  ExactInt operator()(const Partition& lambda, const Partition& rho) const;

  std::size_t memo_size() const;

 private:
  ExactInt evaluate(const std::vector<int>& lambda, std::span<const int> rho) const;

  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<std::vector<int>, std::vector<int>>, ExactInt> memo_;
};

/// chi_lambda(rho) via a process-wide evaluator.
ExactInt mn_character(const Partition& lambda, const Partition& rho);

/// Number of tuples (tau_1..tau_r, sigma), tau_i transpositions and sigma in
/// class mu, with tau_r...tau_1 sigma = id. No transitivity requirement.
ExactInt frobenius_total(int d, int r, const Partition& mu);

}  // namespace planarity
