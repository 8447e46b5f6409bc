#include "planarity/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace planarity {

Permutation Permutation::identity(int d) {
  if (d < 0) throw DomainError("negative permutation degree");
  std::vector<int> images(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) images[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int d, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= d || b >= d)
    throw DomainError("transposition needs two distinct points in range");
  Permutation p = identity(d);
  std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int x : images) {
    if (x < 0 || static_cast<std::size_t>(x) >= images.size() || seen[static_cast<std::size_t>(x)])
      throw DomainError("images do not form a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.degree() != rhs.degree()) throw DomainError("composing permutations of different degree");
  std::vector<int> out(rhs.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = lhs.images_[static_cast<std::size_t>(rhs.images_[i])];
  return Permutation(std::move(out));
}

ExactInt class_size(const Partition& mu) {
  ExactInt out = factorial(mu.size());
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), z_factor(mu).get_mpz_t());
  return out;
}

namespace {

// Beta-set (first-column hook lengths) of lambda with exactly lambda.size() beads.
std::vector<int> beta_set(const std::vector<int>& lambda) {
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
  return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> lambda;
  for (int i = 0; i < len; ++i) {
    int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) lambda.push_back(part);
  }
  return lambda;
}

CharacterEvaluator& shared_evaluator() {
  static CharacterEvaluator evaluator;
  return evaluator;
}

}  // namespace

ExactInt CharacterEvaluator::operator()(const Partition& lambda, const Partition& rho) const {
  if (lambda.size() != rho.size())
    throw DomainError("character arguments are partitions of different sizes");
  return evaluate(lambda.parts(), rho.parts());
}

std::size_t CharacterEvaluator::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

ExactInt CharacterEvaluator::evaluate(const std::vector<int>& lambda, std::span<const int> rho) const {
  if (rho.empty()) return lambda.empty() ? 1 : 0;

  auto key = std::make_pair(lambda, std::vector<int>(rho.begin(), rho.end()));
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  // Removing a border strip of length k moves one bead from b to b - k;
  // the strip height is the number of beads jumped over.
  const int k = rho.front();
  const auto rest = rho.subspan(1);
  std::vector<int> beta = beta_set(lambda);
  ExactInt total = 0;
  for (std::size_t row = beta.size(); row-- > 0;) {
    const int from = beta[row];
    const int to = from - k;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > to && b < from) ++height;
    std::vector<int> moved = beta;
    moved[row] = to;
    ExactInt sub = evaluate(from_beta_set(std::move(moved)), rest);
    if (height % 2) total -= sub;
    else total += sub;
  }

  std::unique_lock lock(mutex_);
  memo_.insert_or_assign(std::move(key), total);
  return total;
}

ExactInt mn_character(const Partition& lambda, const Partition& rho) {
  return shared_evaluator()(lambda, rho);
}

ExactInt frobenius_total(int d, int r, const Partition& mu) {
  if (d < 1) throw DomainError("frobenius_total: degree must be >= 1");
  if (r < 0) throw DomainError("frobenius_total: negative transposition count");
  if (mu.size() != d) throw DomainError("frobenius_total: profile is not a partition of d");
  if (d == 1) return r == 0 ? 1 : 0;

  std::vector<int> tparts(static_cast<std::size_t>(d - 1), 1);
  tparts[0] = 2;
  const Partition transposition_type(std::move(tparts));
  const Partition identity_type = Partition::ones(d);

  ExactRat sum = 0;
  for (const Partition& lambda : partitions_of(d)) {
    const ExactInt dim = mn_character(lambda, identity_type);
    const ExactInt chi_mu = mn_character(lambda, mu);
    if (chi_mu == 0) continue;
    const ExactInt chi_t = mn_character(lambda, transposition_type);
    ExactRat term = rat_pow(chi_t, r) * chi_mu;
    term *= rat_pow(dim, -(static_cast<long>(r) - 1));
    sum += term;
  }
  ExactRat total = sum * rat_pow(class_size(transposition_type), r) * class_size(mu) / factorial(d);
  total.canonicalize();
  if (total.get_den() != 1 || total < 0)
    throw InternalError("Frobenius character sum is not a non-negative integer: " + to_string(total));
  return total.get_num();
}

}  // namespace planarity
