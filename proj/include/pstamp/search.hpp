#pragma once
// Pruned exhaustive enumeration of compact symmetric bases for a given k,
// and the extremal (largest final element) subset.
//
// Elements are chosen left to right. A compact base extending a prefix
// cannot place its next element above N(k, prefix): the value N(k, prefix)
// itself would then be unreachable, since only prefix elements fit under it.
// That exact bound, the counting cap on a_m, and theorem-level acceptance of
// ratio-3 candidates keep the tree small enough that k = 8 finishes in
// seconds. The tree may be partitioned at the a_2 level across worker
// threads; results merge by lexicographic sort, so output is deterministic
// whatever the schedule.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <future>
#include <thread>
#include <utility>
#include <vector>

#include "pstamp/base.hpp"
#include "pstamp/bounds.hpp"
#include "pstamp/common.hpp"
#include "pstamp/reach.hpp"

namespace pstamp {

struct SearchOptions {
  std::uint64_t node_budget = 100'000'000;  // prefixes visited before BudgetExceeded
  unsigned threads = 1;                     // worker count for the a_2 partition
};

struct SearchResult {
  std::size_t k = 0;
  Value max_a_k = 0;
  std::vector<SymmetricBase> extremal_bases;  // all achievers, lexicographic
  std::uint64_t nodes_explored = 0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t theorem_accepts = 0;   // candidates accepted by the ratio-3 test alone
  std::uint64_t counting_rejects = 0;  // candidate values cut by the counting cap
};

// N(k, prefix): any compact base extending prefix picks its next element in
// (prefix.back(), N(k, prefix)].
inline Value next_element_bound(const std::vector<Value>& prefix, std::size_t k) {
  if (k < prefix.size()) fail(Errc::precondition_violated, "k smaller than the prefix");
  return n_range(prefix, k);
}

namespace detail {

struct SearchTally {
  std::uint64_t nodes = 0;
  std::uint64_t oracle = 0;
  std::uint64_t theorem = 0;
  std::uint64_t counting = 0;
};

class SearchDriver {
 public:
  SearchDriver(std::size_t k, std::uint64_t budget, std::atomic<std::uint64_t>& counter)
      : k_(k), budget_(budget), counter_(counter) {
    parity_ = k % 2 == 0 ? Parity::even : Parity::odd;
    m_ = parity_ == Parity::even ? k / 2 : (k - 1) / 2;
    if (m_ >= 1) cap_ = counting_limit(m_, parity_);
  }

  // Explores the subtree below a fixed left prefix (possibly just {1}).
  void run(std::vector<Value> prefix, std::vector<SymmetricBase>& found, SearchTally& tally) {
    descend(prefix, found, tally);
  }

  // Range for the element following `prefix`, pruned by both bounds.
  std::pair<Value, Value> level_range(const std::vector<Value>& prefix, SearchTally& tally) const {
    const Value reach = n_range(prefix, k_);
    Value hi = reach;
    if (hi > cap_) {
      tally.counting += hi - cap_;
      hi = cap_;
    }
    return {prefix.back() + 1, hi};
  }

  void leaf(const SymmetricBase& base, std::vector<SymmetricBase>& found, SearchTally& tally) const {
    if (base.m() >= 1 && growth_condition_pass(base)) {
      tally.theorem += 1;
      found.push_back(base);
      return;
    }
    tally.oracle += 1;
    if (is_compact(base.elements()).compact()) found.push_back(base);
  }

  std::size_t m() const { return m_; }
  Parity parity() const { return parity_; }

  void count_node(SearchTally& tally) const {
    tally.nodes += 1;
    if (counter_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_)
      fail(Errc::budget_exceeded, "search node budget exhausted");
  }

 private:
  static bool growth_condition_pass(const SymmetricBase& b) {
    if (!left_ratios_at_most(b, ThresholdSet::ratio_cap)) return false;
    if (b.parity() == Parity::odd &&
        *b.x() > checked_mul(ThresholdSet::odd_x_cap, b.left().back()))
      return false;
    return true;
  }

  void descend(std::vector<Value>& prefix, std::vector<SymmetricBase>& found, SearchTally& tally) {
    count_node(tally);
    if (prefix.size() == m_) {
      if (parity_ == Parity::even) {
        leaf(build_even(prefix), found, tally);
        return;
      }
      const Value reach = n_range(prefix, k_);  // bounds the middle element a_m + x
      const Value am = prefix.back();
      for (Value mid = am + 1; mid <= reach; ++mid) {
        count_node(tally);
        leaf(build_odd(prefix, mid - am), found, tally);
      }
      return;
    }
    const auto [lo, hi] = level_range(prefix, tally);
    for (Value a = lo; a <= hi; ++a) {
      prefix.push_back(a);
      descend(prefix, found, tally);
      prefix.pop_back();
    }
  }

  std::size_t k_;
  std::size_t m_ = 0;
  Parity parity_ = Parity::even;
  Value cap_ = 0;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& counter_;
};

inline std::pair<std::vector<SymmetricBase>, SearchTally> enumerate_with_stats(
    std::size_t k, const SearchOptions& options) {
  if (k < 1) fail(Errc::precondition_violated, "k must be positive");
  std::atomic<std::uint64_t> counter{0};
  std::vector<SymmetricBase> found;
  SearchTally tally;
  if (k == 1) {
    SearchDriver driver(k, options.node_budget, counter);
    driver.count_node(tally);
    driver.leaf(singleton_base(), found, tally);
  } else {
    SearchDriver driver(k, options.node_budget, counter);
    if (driver.m() == 1 || options.threads <= 1) {
      std::vector<Value> prefix{1};
      driver.run(std::move(prefix), found, tally);
    } else {
      // Partition at the a_2 level; workers share nothing but the counter.
      driver.count_node(tally);
      std::vector<Value> root{1};
      const auto [lo, hi] = driver.level_range(root, tally);
      std::vector<Value> tops;
      for (Value a = lo; a <= hi; ++a) tops.push_back(a);
      const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, tops.size()));
      std::vector<std::future<std::pair<std::vector<SymmetricBase>, SearchTally>>> futures;
      for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
          std::vector<SymmetricBase> local_found;
          SearchTally local_tally;
          SearchDriver local(k, options.node_budget, counter);
          for (std::size_t idx = w; idx < tops.size(); idx += workers)
            local.run({1, tops[idx]}, local_found, local_tally);
          return std::make_pair(std::move(local_found), local_tally);
        }));
      }
      for (auto& f : futures) {
        auto [part, part_tally] = f.get();
        found.insert(found.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
        tally.nodes += part_tally.nodes;
        tally.oracle += part_tally.oracle;
        tally.theorem += part_tally.theorem;
        tally.counting += part_tally.counting;
      }
    }
  }
  std::sort(found.begin(), found.end());
  return {std::move(found), tally};
}

}  // namespace detail

// Every compact symmetric base for this k, lexicographically sorted.
inline std::vector<SymmetricBase> enumerate_compact_symmetric(std::size_t k,
                                                              const SearchOptions& options = {}) {
  return detail::enumerate_with_stats(k, options).first;
}

// The achievers of the largest final element. Nonempty for every k >= 1,
// since the ratio-3 family always supplies at least one compact base.
inline SearchResult search_extremal(std::size_t k, const SearchOptions& options = {}) {
  auto [bases, tally] = detail::enumerate_with_stats(k, options);
  SearchResult result;
  result.k = k;
  result.nodes_explored = tally.nodes;
  result.oracle_calls = tally.oracle;
  result.theorem_accepts = tally.theorem;
  result.counting_rejects = tally.counting;
  for (const SymmetricBase& b : bases) result.max_a_k = std::max(result.max_a_k, b.largest());
  for (SymmetricBase& b : bases)
    if (b.largest() == result.max_a_k) result.extremal_bases.push_back(std::move(b));
  return result;
}

}  // namespace pstamp
