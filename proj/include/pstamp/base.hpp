#pragma once
// Symmetric stamp bases in even (k = 2m) and odd (k = 2m + 1) form.
//
// An even base is determined by its left half 1 = a_1 < ... < a_m:
//     a_{m+i} = 2 a_m - a_{m-i}   (1 <= i <= m-1),   a_{2m} = 2 a_m.
// An odd base adds a middle element a_m + x (x > 0) and mirrors about the
// pair (a_m, a_m + x) instead. Either way the largest element M satisfies
// the complement closure M - a in {0} union elements for every element a,
// which is what the reflection step of the representation algorithms uses.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pstamp/common.hpp"
#include "pstamp/rational.hpp"

namespace pstamp {

enum class Parity { even, odd };

// Immutable after construction; safe to share across threads. Build through
// build_even / build_odd / recognize, never directly.
//
// The singleton {1} is accepted as a degenerate symmetric base (m = 0,
// nominally odd since k = 1) so that every k >= 1 has at least one base.
class SymmetricBase {
 public:
  Parity parity() const { return parity_; }
  std::size_t m() const { return m_; }
  std::size_t k() const { return elements_.size(); }
  const std::vector<Value>& left() const { return left_; }
  std::optional<Value> x() const { return x_; }
  const std::vector<Value>& elements() const { return elements_; }
  Value largest() const { return elements_.back(); }  // M
  // a_m + x, the extra middle element of an odd base.
  Value middle() const {
    if (parity_ != Parity::odd || m_ == 0) fail(Errc::precondition_violated, "middle(): not an odd base");
    return elements_[m_];
  }
  bool is_singleton() const { return m_ == 0; }

  bool contains(Value a) const { return std::binary_search(elements_.begin(), elements_.end(), a); }

  friend bool operator==(const SymmetricBase&, const SymmetricBase&) = default;
  friend bool operator<(const SymmetricBase& a, const SymmetricBase& b) {
    return a.elements_ < b.elements_;
  }

 private:
  SymmetricBase() = default;
  friend SymmetricBase build_even(const std::vector<Value>&);
  friend SymmetricBase build_odd(const std::vector<Value>&, Value);
  friend SymmetricBase singleton_base();

  Parity parity_ = Parity::even;
  std::size_t m_ = 0;
  std::vector<Value> left_;
  std::optional<Value> x_;
  std::vector<Value> elements_;
};

namespace detail {

inline void validate_left(const std::vector<Value>& left) {
  if (left.empty()) fail(Errc::empty_input, "left half is empty");
  if (left.front() != 1) fail(Errc::first_element_not_one, "first element must be 1");
  for (std::size_t i = 1; i < left.size(); ++i)
    if (left[i] <= left[i - 1]) fail(Errc::not_strictly_increasing, "elements must strictly increase");
}

}  // namespace detail

inline SymmetricBase build_even(const std::vector<Value>& left) {
  detail::validate_left(left);
  const std::size_t m = left.size();
  const Value am = left.back();
  SymmetricBase b;
  b.parity_ = Parity::even;
  b.m_ = m;
  b.left_ = left;
  b.elements_ = left;
  const Value big = checked_mul(2, am);
  for (std::size_t i = 1; i <= m - 1; ++i) b.elements_.push_back(big - left[m - 1 - i]);
  b.elements_.push_back(big);
  return b;
}

inline SymmetricBase build_odd(const std::vector<Value>& left, Value x) {
  detail::validate_left(left);
  if (x == 0) fail(Errc::non_positive_x, "x must be positive");
  const std::size_t m = left.size();
  const Value am = left.back();
  const Value middle = checked_add(am, x);
  const Value big = checked_add(middle, am);
  SymmetricBase b;
  b.parity_ = Parity::odd;
  b.m_ = m;
  b.left_ = left;
  b.x_ = x;
  b.elements_ = left;
  b.elements_.push_back(middle);
  for (std::size_t i = 1; i <= m - 1; ++i) b.elements_.push_back(big - left[m - 1 - i]);
  b.elements_.push_back(big);
  return b;
}

inline SymmetricBase singleton_base() {
  SymmetricBase b;
  b.parity_ = Parity::odd;
  b.m_ = 0;
  b.elements_ = {1};
  return b;
}

// Inverse of the builders: if seq is the element sequence of some symmetric
// base, recover it (m, parity and x included); otherwise nullopt. Throws on
// sequences that are not even well formed.
inline std::optional<SymmetricBase> recognize(const std::vector<Value>& seq) {
  if (seq.empty()) fail(Errc::empty_input, "empty sequence");
  if (seq.front() != 1) fail(Errc::first_element_not_one, "first element must be 1");
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] <= seq[i - 1]) fail(Errc::not_strictly_increasing, "elements must strictly increase");
  const std::size_t k = seq.size();
  if (k == 1) return singleton_base();
  try {
    if (k % 2 == 0) {
      const std::size_t m = k / 2;
      std::vector<Value> left(seq.begin(), seq.begin() + m);
      SymmetricBase b = build_even(left);
      if (b.elements() == seq) return b;
      return std::nullopt;
    }
    const std::size_t m = (k - 1) / 2;
    std::vector<Value> left(seq.begin(), seq.begin() + m);
    const Value x = seq[m] - left.back();
    SymmetricBase b = build_odd(left, x);
    if (b.elements() == seq) return b;
    return std::nullopt;
  } catch (const Error& e) {
    // mirrored completion would overflow, so it cannot equal seq anyway
    if (e.code() == Errc::arithmetic_overflow) return std::nullopt;
    throw;
  }
}

// M - a: the mirror image of a base element; 0 exactly when a = M.
inline Value complement(const SymmetricBase& base, Value a) {
  if (!base.contains(a)) fail(Errc::not_an_element, "not a base element: " + std::to_string(a));
  return base.largest() - a;
}

// The consecutive ratios a_i / a_{i-1} for 2 <= i <= m, plus x / a_m for odd
// bases. Defined for m >= 2, or m >= 1 when odd.
inline std::vector<Rational> growth_ratios(const SymmetricBase& base) {
  const std::size_t m = base.m();
  const bool odd = base.parity() == Parity::odd;
  if (!(m >= 2 || (m >= 1 && odd))) fail(Errc::no_ratios, "base has no growth ratios");
  std::vector<Rational> out;
  for (std::size_t i = 1; i < m; ++i) out.push_back(Rational::of(base.left()[i], base.left()[i - 1]));
  if (odd) out.push_back(Rational::of(*base.x(), base.left().back()));
  return out;
}

// a_i <= cap * a_{i-1} for all 2 <= i <= m (vacuously true for m < 2).
inline bool left_ratios_at_most(const SymmetricBase& base, Value cap) {
  for (std::size_t i = 1; i < base.m(); ++i)
    if (base.left()[i] > checked_mul(cap, base.left()[i - 1])) return false;
  return true;
}

// a_i >= floor * a_{i-1} for all 2 <= i <= m (vacuously true for m < 2).
inline bool left_ratios_at_least(const SymmetricBase& base, Value floor) {
  for (std::size_t i = 1; i < base.m(); ++i)
    if (base.left()[i] < checked_mul(floor, base.left()[i - 1])) return false;
  return true;
}

}  // namespace pstamp
