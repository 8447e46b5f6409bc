#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <utility>
#include <vector>

#include "planarity/hurwitz.hpp"

namespace planarity {

namespace {

constexpr std::uint64_t kFlushInterval = 1u << 14;

struct SharedState {
  std::uint64_t budget;
  std::atomic<std::uint64_t> visited{0};
  std::atomic<bool> aborted{false};
};

// One DFS worker. The running product pi = tau_1 * ... * tau_k is kept as an
// image array; right-multiplying by (a b) swaps pi[a] and pi[b]. Orbits of
// <tau_1, ..., tau_k> live in a union-find without path compression so that
// every union can be undone in O(1).
class Search {
 public:
  Search(int d, int r, const Partition& mu, const std::vector<std::pair<int, int>>& transpositions,
         SharedState& shared)
      : d_(d),
        r_(r),
        target_cycles_(mu.length()),
        target_(mu.parts()),
        transpositions_(transpositions),
        shared_(shared),
        perm_(static_cast<std::size_t>(d)),
        parent_(static_cast<std::size_t>(d)),
        rank_size_(static_cast<std::size_t>(d), 1),
        cycle_scratch_(static_cast<std::size_t>(d)) {
    for (int i = 0; i < d; ++i) {
      perm_[static_cast<std::size_t>(i)] = i;
      parent_[static_cast<std::size_t>(i)] = i;
    }
    cycles_ = d;
    components_ = d;
    undo_.reserve(static_cast<std::size_t>(r) + 1);
  }

  // Applies the slot-0 transposition (if feasible) and searches the rest.
  void run_from_first(std::size_t first) {
    if (!try_step(0, transpositions_[first])) return;
    dfs(1);
    undo_step(transpositions_[first]);
  }

  std::uint64_t count() const { return count_; }

  void flush() {
    shared_.visited.fetch_add(local_visited_, std::memory_order_relaxed);
    local_visited_ = 0;
  }

 private:
  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  bool same_cycle(int a, int b) const {
    for (int x = perm_[static_cast<std::size_t>(a)]; x != a; x = perm_[static_cast<std::size_t>(x)])
      if (x == b) return true;
    return false;
  }

  // Attempts to place transposition t in slot k; returns false when pruned.
  bool try_step(int k, std::pair<int, int> t) {
    const int remaining_after = r_ - k - 1;
    const auto [a, b] = t;
    const int new_cycles = cycles_ + (same_cycle(a, b) ? 1 : -1);
    if (std::abs(new_cycles - target_cycles_) > remaining_after) return false;
    int ra = find(a);
    int rb = find(b);
    const int new_components = components_ - (ra != rb ? 1 : 0);
    if (new_components - 1 > remaining_after) return false;

    std::swap(perm_[static_cast<std::size_t>(a)], perm_[static_cast<std::size_t>(b)]);
    int merged_child = -1;
    if (ra != rb) {
      if (rank_size_[static_cast<std::size_t>(ra)] < rank_size_[static_cast<std::size_t>(rb)]) std::swap(ra, rb);
      parent_[static_cast<std::size_t>(rb)] = ra;
      rank_size_[static_cast<std::size_t>(ra)] += rank_size_[static_cast<std::size_t>(rb)];
      merged_child = rb;
    }
    undo_.emplace_back(merged_child, cycles_);
    cycles_ = new_cycles;
    components_ = new_components;
    return true;
  }

  void undo_step(std::pair<int, int> t) {
    const auto [child, old_cycles] = undo_.back();
    undo_.pop_back();
    if (child >= 0) {
      const int root = parent_[static_cast<std::size_t>(child)];
      rank_size_[static_cast<std::size_t>(root)] -= rank_size_[static_cast<std::size_t>(child)];
      parent_[static_cast<std::size_t>(child)] = child;
      ++components_;
    }
    std::swap(perm_[static_cast<std::size_t>(t.first)], perm_[static_cast<std::size_t>(t.second)]);
    cycles_ = old_cycles;
  }

  bool leaf_matches() {
    if (components_ != 1 || cycles_ != target_cycles_) return false;
    std::fill(cycle_scratch_.begin(), cycle_scratch_.end(), 0);
    std::vector<int>& lengths = lengths_;
    lengths.clear();
    for (int start = 0; start < d_; ++start) {
      if (cycle_scratch_[static_cast<std::size_t>(start)]) continue;
      int len = 0;
      for (int x = start; !cycle_scratch_[static_cast<std::size_t>(x)]; x = perm_[static_cast<std::size_t>(x)]) {
        cycle_scratch_[static_cast<std::size_t>(x)] = 1;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths == target_;
  }

  void dfs(int k) {
    if (++local_visited_ >= kFlushInterval) {
      const std::uint64_t total =
          shared_.visited.fetch_add(local_visited_, std::memory_order_relaxed) + local_visited_;
      local_visited_ = 0;
      if (total > shared_.budget) shared_.aborted.store(true, std::memory_order_relaxed);
    }
    if (shared_.aborted.load(std::memory_order_relaxed)) return;

    if (k == r_) {
      if (leaf_matches()) ++count_;
      return;
    }
    for (const auto& t : transpositions_) {
      if (!try_step(k, t)) continue;
      dfs(k + 1);
      undo_step(t);
    }
  }

  int d_;
  int r_;
  int target_cycles_;
  std::vector<int> target_;
  const std::vector<std::pair<int, int>>& transpositions_;
  SharedState& shared_;

  std::vector<int> perm_;
  std::vector<int> parent_;
  std::vector<int> rank_size_;
  std::vector<std::pair<int, int>> undo_;  // (merged child or -1, cycle count before)
  std::vector<char> cycle_scratch_;
  std::vector<int> lengths_;
  int cycles_ = 0;
  int components_ = 0;

  std::uint64_t count_ = 0;
  std::uint64_t local_visited_ = 0;
};

}  // namespace

ExactInt count_transitive_brute(int d, int r, const Partition& mu, const BruteOptions& options) {
  if (d < 1) throw DomainError("degree must be >= 1");
  if (r < 0) throw DomainError("negative number of transposition slots");
  if (mu.size() != d) throw DomainError("profile is not a partition of the degree");
  if ((r + d - mu.length()) % 2 != 0) return 0;
  if (r < d - 1) return 0;
  if (d == 1) return r == 0 ? 1 : 0;

  std::vector<std::pair<int, int>> transpositions;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) transpositions.emplace_back(a, b);

  SharedState shared;
  shared.budget = options.budget;

  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(transpositions.size()));

  std::atomic<std::size_t> next_first{0};
  std::vector<std::uint64_t> counts(workers, 0);
  auto work = [&](unsigned id) {
    Search search(d, r, mu, transpositions, shared);
    while (!shared.aborted.load(std::memory_order_relaxed)) {
      const std::size_t first = next_first.fetch_add(1);
      if (first >= transpositions.size()) break;
      search.run_from_first(first);
    }
    search.flush();
    counts[id] = search.count();
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }

  const std::uint64_t visited = shared.visited.load();
  if (shared.aborted.load() || visited > shared.budget) throw BudgetExceeded(visited, shared.budget);

  ExactInt total = 0;
  for (std::uint64_t c : counts) total += ExactInt(std::to_string(c));
  return total;
}

}  // namespace planarity
