#pragma once
// Shared scalar types, checked arithmetic, and the library-wide error taxonomy.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pstamp {

using Value = std::uint64_t;  // base elements, targets, table limits
using Count = std::uint32_t;  // stamp counts inside DP tables
using u128 = unsigned __int128;

enum class Errc {
  parse_error,
  empty_input,
  not_strictly_increasing,
  first_element_not_one,
  non_positive_x,
  arithmetic_overflow,
  not_an_element,
  no_ratios,
  not_symmetric,
  missing_one,
  limit_overflow,
  out_of_range,
  growth_condition_violated,
  precondition_violated,
  internal_invariant_broken,
  count_exceeds_k,
  budget_exceeded,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline Value checked_add(Value a, Value b) {
  Value r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::arithmetic_overflow, "integer overflow in addition");
  return r;
}

inline Value checked_mul(Value a, Value b) {
  Value r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::arithmetic_overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace pstamp
