#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "planarity/hurwitz.hpp"

namespace planarity {

namespace {

// A(g, mu): number of transitive r-tuples of transpositions whose product is
// one fixed permutation of type mu. The recursion looks at tau_1 only:
//  - tau_1 joins cycles i and j (mu_i * mu_j choices); the rest is again
//    transitive for the joined profile;
//  - tau_1 cuts cycle i into alpha + beta; the rest is either transitive
//    (genus drops by one) or has exactly two orbits, one per cut piece, whose
//    slots interleave in binom(r-1, r1) ways.
// Summing over ordered (alpha, beta) counts each cutting transposition twice
// per point of the cycle, hence the factor mu_i / 2.
class CutJoin {
 public:
  ExactInt fixed_sigma_count(int g, const std::vector<int>& mu) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find({g, mu}); it != memo_.end()) return it->second;
    }
    ExactInt value = compute(g, mu);
    std::unique_lock lock(mutex_);
    memo_.insert_or_assign({g, mu}, value);
    return value;
  }

 private:
  static long branch_count(int g, const std::vector<int>& mu) {
    long d = 0;
    for (int p : mu) d += p;
    return d + static_cast<long>(mu.size()) + 2L * g - 2;
  }

  static std::vector<int> sorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
  }

  ExactInt compute(int g, const std::vector<int>& mu) {
    const long r = branch_count(g, mu);
    if (r < 0 || g < 0) throw InternalError("cut-and-join reached a state with r < 0");
    if (r == 0) return (mu.size() == 1 && mu[0] == 1) ? 1 : 0;

    const std::size_t n = mu.size();
    ExactInt joins = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<int> joined;
        for (std::size_t k = 0; k < n; ++k)
          if (k != i && k != j) joined.push_back(mu[k]);
        joined.push_back(mu[i] + mu[j]);
        joins += ExactInt(mu[i]) * mu[j] * fixed_sigma_count(g, sorted(std::move(joined)));
      }
    }

    ExactInt cuts_twice = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int m = mu[i];
      std::vector<int> others;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) others.push_back(mu[k]);

      for (int alpha = 1; alpha < m; ++alpha) {
        const int beta = m - alpha;
        ExactInt bracket = 0;

        if (g >= 1) {
          std::vector<int> cut = others;
          cut.push_back(alpha);
          cut.push_back(beta);
          bracket += fixed_sigma_count(g - 1, sorted(std::move(cut)));
        }

        const std::size_t subsets = std::size_t{1} << others.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
          std::vector<int> first{alpha};
          std::vector<int> second{beta};
          for (std::size_t k = 0; k < others.size(); ++k)
            ((mask >> k) & 1 ? first : second).push_back(others[k]);
          first = sorted(std::move(first));
          second = sorted(std::move(second));
          for (int g1 = 0; g1 <= g; ++g1) {
            const long r1 = branch_count(g1, first);
            const long r2 = branch_count(g - g1, second);
            if (r1 + r2 != r - 1) throw InternalError("cut-and-join slot bookkeeping mismatch");
            const ExactInt a = fixed_sigma_count(g1, first);
            if (a == 0) continue;
            const ExactInt b = fixed_sigma_count(g - g1, second);
            if (b == 0) continue;
            bracket += binomial(r - 1, r1) * a * b;
          }
        }
        cuts_twice += ExactInt(m) * bracket;
      }
    }

    if (!mpz_divisible_ui_p(cuts_twice.get_mpz_t(), 2))
      throw InternalError("cut-and-join cut term is not even");
    ExactInt cuts;
    mpz_divexact_ui(cuts.get_mpz_t(), cuts_twice.get_mpz_t(), 2);
    return joins + cuts;
  }

  std::shared_mutex mutex_;
  std::map<std::pair<int, std::vector<int>>, ExactInt> memo_;
};

CutJoin& engine() {
  static CutJoin instance;
  return instance;
}

}  // namespace

ExactRat cut_and_join(int genus, const Partition& mu) {
  if (genus < 0) throw DomainError("genus must be >= 0");
  if (mu.empty()) throw DomainError("profile must be a partition of d >= 1");
  if (simple_branch_count(genus, mu) < 0) return 0;
  ExactInt product = 1;
  for (int p : mu.parts()) product *= p;
  ExactRat h(engine().fixed_sigma_count(genus, mu.parts()), product);
  h.canonicalize();
  return h;
}

}  // namespace planarity
