#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "planarity/hurwitz.hpp"
#include "planarity/symgroup.hpp"

namespace planarity {

namespace {

using CountKey = std::tuple<int, int, std::vector<int>>;

class CountMemo {
 public:
  template <class Compute>
  ExactInt get_or_compute(const CountKey& key, Compute compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    ExactInt value = compute();
    std::unique_lock lock(mutex_);
    table_.insert_or_assign(key, value);
    return value;
  }

 private:
  std::shared_mutex mutex_;
  std::map<CountKey, ExactInt> table_;
};

CountMemo& total_memo() {
  static CountMemo memo;
  return memo;
}

CountMemo& transitive_memo() {
  static CountMemo memo;
  return memo;
}

// Frobenius total extended by N_total(0, 0, ()) = 1.
ExactInt total_count(int d, int r, const Partition& mu) {
  if (d == 0) return r == 0 ? 1 : 0;
  return total_memo().get_or_compute({d, r, mu.parts()}, [&] { return frobenius_total(d, r, mu); });
}

// Calls f(sub, complement) for every sub-multiset of mu, including the empty
// one and mu itself. Each distinct sub-multiset is visited once.
template <class F>
void for_each_submultiset(const Partition& mu, F&& f) {
  std::vector<std::pair<int, int>> groups;  // (part value, multiplicity), decreasing values
  for (int p : mu.parts()) {
    if (!groups.empty() && groups.back().first == p) ++groups.back().second;
    else groups.emplace_back(p, 1);
  }
  std::vector<int> take(groups.size(), 0);
  while (true) {
    std::vector<int> sub, rest;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      sub.insert(sub.end(), static_cast<std::size_t>(take[i]), groups[i].first);
      rest.insert(rest.end(), static_cast<std::size_t>(groups[i].second - take[i]), groups[i].first);
    }
    f(Partition(std::move(sub)), Partition(std::move(rest)));
    std::size_t i = 0;
    while (i < groups.size() && take[i] == groups[i].second) take[i++] = 0;
    if (i == groups.size()) return;
    ++take[i];
  }
}

ExactInt transitive_count(int d, int r, const Partition& mu) {
  if (d == 1) return r == 0 ? 1 : 0;
  if ((r + d - mu.length()) % 2 != 0 || r < d - 1) return 0;
  return transitive_memo().get_or_compute({d, r, mu.parts()}, [&] {
    // Every tuple splits uniquely by the orbit of point 0: choose the other
    // points of that orbit, the cycles of sigma inside it, and which slots
    // hold the transpositions acting there.
    ExactInt disconnected = 0;
    for_each_submultiset(mu, [&](const Partition& inner, const Partition& outer) {
      const int s = inner.size();
      if (s == 0 || s == d) return;
      const ExactInt placements = binomial(d - 1, s - 1);
      for (int inner_r = s - 1; inner_r <= r; ++inner_r) {
        const ExactInt connected = transitive_count(s, inner_r, inner);
        if (connected == 0) continue;
        const ExactInt rest = total_count(d - s, r - inner_r, outer);
        if (rest == 0) continue;
        disconnected += placements * binomial(r, inner_r) * connected * rest;
      }
    });
    ExactInt value = total_count(d, r, mu) - disconnected;
    if (value < 0) throw InternalError("negative connected count for mu = " + mu.str());
    return value;
  });
}

}  // namespace

ExactInt count_transitive_character(int d, int r, const Partition& mu) {
  if (d < 1) throw DomainError("degree must be >= 1");
  if (r < 0) throw DomainError("negative number of transposition slots");
  if (mu.size() != d) throw DomainError("profile is not a partition of the degree");
  return transitive_count(d, r, mu);
}

}  // namespace planarity
