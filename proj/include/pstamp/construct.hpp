#pragma once
// Constructive representation of every n in 0..k*a_k as a sum of at most k
// base elements, for symmetric bases whose left-half ratios stay at or below
// 3 (odd bases also need x <= 2*a_m).
//
// The machinery is a recursion over levels r = m-1, ..., 1. At level r the
// residual n splits as n = i*M + s with i <= r and s < a_{r+1}; writing
// j = floor(s / a_r), one of three moves applies:
//   (1) j <= 1:        take j copies of a_r and (if i >= 1) one copy of M;
//   (2) j = 2, i = 0:  take two copies of a_r;
//   (3) j = 2, i >= 1: take M - a_r (a base element, by symmetry) and a_{r+1}.
// Each move costs at most two elements and re-establishes the level-(r-1)
// entry conditions, so level r contributes at most 2r elements in total. The
// level-1 residuals are exactly 0, 1, 2, M, M+1, M+2 and are written out
// directly (M+2 only arises when a_2 = 3, as (M-1) + a_2).
//
// On top of that, even bases reduce any n below 2m*a_m to the recursion by
// parity of floor(n / a_m); n = 2m*a_m is m copies of M; larger n reflect
// through the complement map. Odd bases first balance n = qh*(a_m + x) +
// q*a_m + rem with |qh - q| <= 2, peel off the unbalanced coefficients plus
// at most one copy of M, and recurse on the rest; larger n reflect as well.
//
// Bases with m <= 1 (k <= 3) have no recursion levels; those fall back to
// the exact table route, which is cheap at that size.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pstamp/base.hpp"
#include "pstamp/common.hpp"
#include "pstamp/reach.hpp"
#include "pstamp/representation.hpp"

namespace pstamp {

struct BalanceSplit {
  Value q_hat = 0;  // coefficient of a_m + x
  Value q = 0;      // coefficient of a_m
  Value rem = 0;    // remainder, 0 <= rem < a_m
};

struct TraceStep {
  enum class Kind { case1, case2, case3, base_case };
  std::size_t r = 0;
  Value i = 0;  // floor(n / M)
  Value j = 0;  // floor((n - i*M) / a_r)
  Kind kind = Kind::base_case;
  Value next_n = 0;  // residual handed to level r-1 (0 at the base case)
};

struct DecompositionTrace {
  std::optional<BalanceSplit> balance;  // odd bases, direct branch only
  std::vector<TraceStep> steps;         // strictly decreasing r, ends at r = 1
};

// The hypotheses under which the construction is guaranteed to work.
inline bool growth_conditions_hold(const SymmetricBase& base) {
  if (base.is_singleton()) return true;
  if (!left_ratios_at_most(base, 3)) return false;
  if (base.parity() == Parity::odd && *base.x() > checked_mul(2, base.left().back())) return false;
  return true;
}

namespace detail {

inline void require_growth(const SymmetricBase& base) {
  if (!growth_conditions_hold(base))
    fail(Errc::growth_condition_violated, "base violates the ratio-3 growth conditions");
}

// Level-r step of the recursion; appends summands, returns the residual for
// level r-1. Entry conditions (i <= r, n - i*M < a_{r+1}) must already hold.
inline Value lemma_step(const SymmetricBase& base, std::size_t r, Value n, std::vector<Value>& out,
                        DecompositionTrace& trace) {
  const Value big = base.largest();
  const Value i = n / big;
  const Value s = n - i * big;
  const Value ar = base.left()[r - 1];

  if (r == 1) {
    const Value a2 = base.left()[1];  // present: r = 1 <= m-1 forces m >= 2
    trace.steps.push_back({1, i, s / ar, TraceStep::Kind::base_case, 0});
    if (n == 0) return 0;
    if (n == 1) out.push_back(1);
    else if (n == 2) { out.push_back(1); out.push_back(1); }
    else if (n == big) out.push_back(big);
    else if (n == big + 1) { out.push_back(big); out.push_back(1); }
    else if (n == big + 2 && a2 == 3) {
      if (!base.contains(big - 1)) fail(Errc::internal_invariant_broken, "M-1 not an element");
      out.push_back(big - 1);  // = a_{k-1}
      out.push_back(a2);
    }
    else fail(Errc::internal_invariant_broken, "level-1 residual out of shape");
    return 0;
  }

  const Value ar1 = base.left()[r];
  const Value j = s / ar;
  if (j > 2) fail(Errc::internal_invariant_broken, "ratio gap at level " + std::to_string(r));

  Value next = 0;
  TraceStep::Kind kind;
  if (j <= 1) {
    kind = TraceStep::Kind::case1;
    for (Value c = 0; c < j; ++c) out.push_back(ar);
    if (i >= 1) out.push_back(big);
    next = n - j * ar - (i >= 1 ? big : 0);
  } else if (i == 0) {
    kind = TraceStep::Kind::case2;
    out.push_back(ar);
    out.push_back(ar);
    next = n - 2 * ar;
  } else {
    kind = TraceStep::Kind::case3;
    const Value mirrored = big - ar;  // = a_{2m-r}, by complement closure
    if (!base.contains(mirrored)) fail(Errc::internal_invariant_broken, "complement closure broken");
    out.push_back(mirrored);
    out.push_back(ar1);
    next = n - mirrored - ar1;
  }
  trace.steps.push_back({r, i, j, kind, next});

  const Value i2 = next / big;
  if (!(i2 <= r - 1 && next - i2 * big < ar))
    fail(Errc::internal_invariant_broken, "re-entry conditions failed at level " + std::to_string(r));
  return next;
}

inline void lemma_run(const SymmetricBase& base, std::size_t r, Value n, std::vector<Value>& out,
                      DecompositionTrace& trace) {
  const Value big = base.largest();
  if (n / big > r || n - (n / big) * big >= base.left()[r])
    fail(Errc::internal_invariant_broken, "level entry conditions failed");
  for (std::size_t level = r; level >= 1; --level) n = lemma_step(base, level, n, out, trace);
}

}  // namespace detail

// The level-r decomposition on its own: at most 2r summands for any n with
// floor(n/M) <= r and n - floor(n/M)*M < a_{r+1}.
inline std::pair<Representation, DecompositionTrace> lemma_decompose(const SymmetricBase& base,
                                                                     std::size_t r, Value n) {
  detail::require_growth(base);
  if (base.m() < 2 || r < 1 || r > base.m() - 1)
    fail(Errc::precondition_violated, "level r must satisfy 1 <= r <= m-1");
  const Value big = base.largest();
  const Value i = n / big;
  if (i > r || n - i * big >= base.left()[r])
    fail(Errc::precondition_violated, "n out of range for level r");
  std::vector<Value> out;
  DecompositionTrace trace;
  detail::lemma_run(base, r, n, out, trace);
  return {make_representation(std::move(out)), std::move(trace)};
}

// Writes n = q_hat*(a_m + x) + q*a_m + rem with 0 <= rem < a_m, picking the
// feasible pair with |q_hat - q| minimal (ties toward smaller q_hat). Under
// the growth conditions the minimum never exceeds 2.
inline BalanceSplit balance_coefficients(const SymmetricBase& base, Value n) {
  detail::require_growth(base);
  if (base.parity() != Parity::odd || base.m() < 1)
    fail(Errc::precondition_violated, "balance_coefficients needs an odd base");
  const Value am = base.left().back();
  const Value mid = base.middle();
  const Value big = base.largest();
  if (u128(2) * n > u128(2 * base.m() + 1) * big)
    fail(Errc::precondition_violated, "n beyond (m + 1/2) * M");
  BalanceSplit best;
  bool have = false;
  for (Value qh = 0; qh <= n / mid; ++qh) {
    const Value rest = n - qh * mid;
    const Value q = rest / am;
    const Value diff = qh > q ? qh - q : q - qh;
    if (!have || diff < (best.q_hat > best.q ? best.q_hat - best.q : best.q - best.q_hat)) {
      best = {qh, q, rest - q * am};
      have = true;
    }
  }
  const Value d = best.q_hat > best.q ? best.q_hat - best.q : best.q - best.q_hat;
  if (!have || d > 2) fail(Errc::internal_invariant_broken, "no balanced split within distance 2");
  return best;
}

// Reflection through the complement map: a representation of n becomes one of
// k*a_k - n by replacing every part with M - part (dropping zeros) and
// padding with copies of a_k.
inline Representation reflect_representation(const SymmetricBase& base, const Representation& rep) {
  const Value k = base.k();
  if (rep.count > k) fail(Errc::count_exceeds_k, "representation uses more than k elements");
  const Value big = base.largest();
  std::vector<Value> out;
  for (const auto& [elem, mult] : rep.parts) {
    if (!base.contains(elem)) fail(Errc::not_an_element, "part is not a base element");
    const Value c = big - elem;
    if (c != 0)
      for (Value t = 0; t < mult; ++t) out.push_back(c);
  }
  for (Value t = rep.count; t < k; ++t) out.push_back(big);
  return make_representation(std::move(out));
}

// Full representation of any n in 0..k*a_k with at most k summands.
inline std::pair<Representation, DecompositionTrace> represent(const SymmetricBase& base, Value n) {
  detail::require_growth(base);
  const Value k = base.k();
  const Value big = base.largest();
  const Value kak = checked_mul(k, big);
  if (n > kak) fail(Errc::out_of_range, "target beyond k * a_k");

  if (base.m() < 2) {
    // k <= 3: no recursion levels exist; the exact table is authoritative.
    const ReachTable t = min_stamps_table(base.elements(), n);
    return {representation_from_table(t, n), DecompositionTrace{}};
  }

  const std::size_t m = base.m();
  const Value am = base.left().back();
  std::vector<Value> out;
  DecompositionTrace trace;

  if (base.parity() == Parity::even) {
    const Value half = 2 * Value(m) * am;  // = m * M
    if (n < half) {
      Value rest = n;
      if ((n / am) % 2 == 1) {
        out.push_back(am);
        rest = n - am;
      }
      detail::lemma_run(base, m - 1, rest, out, trace);
      return {make_representation(std::move(out)), std::move(trace)};
    }
    if (n == half) {
      out.assign(m, big);
      return {make_representation(std::move(out)), std::move(trace)};
    }
    auto [inner, inner_trace] = represent(base, kak - n);
    return {reflect_representation(base, inner), std::move(inner_trace)};
  }

  // odd
  if (u128(2) * n <= u128(k) * big) {  // n <= (m + 1/2) * M
    const BalanceSplit split = balance_coefficients(base, n);
    trace.balance = split;
    const Value mid = base.middle();
    Value rest;
    if (split.q_hat > split.q) {
      for (Value t = split.q; t < split.q_hat; ++t) out.push_back(mid);
      if (split.q >= 1) out.push_back(big);
      rest = n - (split.q_hat - split.q) * mid - (split.q >= 1 ? big : 0);
    } else if (split.q > split.q_hat) {
      for (Value t = split.q_hat; t < split.q; ++t) out.push_back(am);
      if (split.q_hat >= 1) out.push_back(big);
      rest = n - (split.q - split.q_hat) * am - (split.q_hat >= 1 ? big : 0);
    } else {
      if (split.q_hat >= 1) out.push_back(big);
      rest = n - (split.q_hat >= 1 ? big : 0);
    }
    detail::lemma_run(base, m - 1, rest, out, trace);
    return {make_representation(std::move(out)), std::move(trace)};
  }
  auto [inner, inner_trace] = represent(base, kak - n);
  return {reflect_representation(base, inner), std::move(inner_trace)};
}

}  // namespace pstamp
