#pragma once
// The ground-truth oracle: a dense dynamic-programming table of minimum stamp
// counts. min_count[n] is the least number of elements (with repetition)
// summing to n; the reach set S(h, A) is then { n : min_count[n] <= h }, the
// h-range N(h, A) is the least n outside it, and compactness of A (|A| = k)
// means N(k, A) = k * max(A) + 1.
//
// Tables accept arbitrary ascending element sets containing 1; nothing here
// assumes symmetry.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pstamp/common.hpp"
#include "pstamp/representation.hpp"

namespace pstamp {

enum class VerdictStatus { proven_compact, proven_not_compact, checked_compact, checked_not_compact };
enum class Provenance { ratio_theorem_lower, ratio_theorem_upper, counting_bound, oracle_dp };

// A compactness judgment with its provenance. Theorem-based verdicts come
// from the classifier in bounds.hpp; checked verdicts come straight from the
// table. For any not-compact verdict produced with oracle access, `witness`
// is the least n <= k * a_k that needs more than k stamps; that n is also
// N(k, A), so it doubles as `n_range_value`.
struct Verdict {
  VerdictStatus status = VerdictStatus::checked_compact;
  Provenance provenance = Provenance::oracle_dp;
  std::optional<Value> witness;
  std::optional<Value> n_range_value;

  bool compact() const {
    return status == VerdictStatus::proven_compact || status == VerdictStatus::checked_compact;
  }
};

// Dense min-stamp table over 0..limit. Immutable once built.
class ReachTable {
 public:
  const std::vector<Value>& elements() const { return elements_; }
  Value limit() const { return limit_; }
  Count min_count(Value n) const {
    if (n > limit_) fail(Errc::out_of_range, "index beyond table limit");
    return counts_[static_cast<std::size_t>(n)];
  }

 private:
  friend ReachTable min_stamps_table(const std::vector<Value>&, Value);
  ReachTable() = default;
  std::vector<Value> elements_;
  Value limit_ = 0;
  std::vector<Count> counts_;
};

namespace detail {

// Any bigger table would not fit desk-scale memory; refuse instead of thrash.
inline constexpr Value kMaxTableCells = 200'000'000;

inline void validate_elements(const std::vector<Value>& elements) {
  if (elements.empty()) fail(Errc::empty_input, "element set is empty");
  if (elements.front() != 1) fail(Errc::missing_one, "element set must contain 1");
  for (std::size_t i = 1; i < elements.size(); ++i)
    if (elements[i] <= elements[i - 1]) fail(Errc::not_strictly_increasing, "elements must strictly increase");
}

}  // namespace detail

inline ReachTable min_stamps_table(const std::vector<Value>& elements, Value limit) {
  detail::validate_elements(elements);
  if (limit >= detail::kMaxTableCells) fail(Errc::limit_overflow, "table limit too large");
  ReachTable t;
  t.elements_ = elements;
  t.limit_ = limit;
  t.counts_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (Value n = 1; n <= limit; ++n) {
    Count best = static_cast<Count>(std::min<Value>(n, ~Count{0}));  // all ones
    for (Value a : elements) {
      if (a > n) break;
      const Count c = t.counts_[static_cast<std::size_t>(n - a)] + 1;
      if (c < best) best = c;
    }
    t.counts_[static_cast<std::size_t>(n)] = best;
  }
  return t;
}

// The h-range: least n >= 1 needing more than h stamps. Always at most
// h * max(A) + 1, so a table that long is guaranteed to contain the answer.
inline Value n_range(const std::vector<Value>& elements, Value h) {
  detail::validate_elements(elements);
  if (h == 0) fail(Errc::precondition_violated, "h must be positive");
  Value limit;
  if (__builtin_mul_overflow(h, elements.back(), &limit) || __builtin_add_overflow(limit, Value{1}, &limit))
    fail(Errc::limit_overflow, "h * max element overflows");
  const ReachTable t = min_stamps_table(elements, limit);
  for (Value n = 1; n <= limit; ++n)
    if (t.min_count(n) > h) return n;
  fail(Errc::internal_invariant_broken, "h-range bound violated");
}

// Oracle compactness check with h = k = |elements|.
inline Verdict is_compact(const std::vector<Value>& elements) {
  detail::validate_elements(elements);
  const Value k = elements.size();
  Value limit;
  if (__builtin_mul_overflow(k, elements.back(), &limit)) fail(Errc::limit_overflow, "k * max element overflows");
  const ReachTable t = min_stamps_table(elements, limit);
  Verdict v;
  v.provenance = Provenance::oracle_dp;
  for (Value n = 0; n <= limit; ++n) {
    if (t.min_count(n) > k) {
      v.status = VerdictStatus::checked_not_compact;
      v.witness = n;
      v.n_range_value = n;  // least unreachable with k stamps is N(k, A)
      return v;
    }
  }
  v.status = VerdictStatus::checked_compact;
  v.n_range_value = limit + 1;
  return v;
}

// Backtracks one optimal multiset out of the table. Ties between minimal
// predecessors are broken toward the largest element, which keeps output
// deterministic and short.
inline Representation representation_from_table(const ReachTable& table, Value n) {
  if (n > table.limit()) fail(Errc::out_of_range, "target beyond table limit");
  std::vector<Value> summands;
  Value cur = n;
  while (cur > 0) {
    bool stepped = false;
    for (auto it = table.elements().rbegin(); it != table.elements().rend(); ++it) {
      const Value a = *it;
      if (a <= cur && table.min_count(cur - a) + 1 == table.min_count(cur)) {
        summands.push_back(a);
        cur -= a;
        stepped = true;
        break;
      }
    }
    if (!stepped) fail(Errc::internal_invariant_broken, "table recurrence has no predecessor");
  }
  return make_representation(std::move(summands));
}

}  // namespace pstamp
