#pragma once
// A multiset of base elements together with its target sum. Canonical order
// is descending by element, which keeps CLI output and test comparisons
// deterministic.

#include <algorithm>
#include <utility>
#include <vector>

#include "pstamp/common.hpp"

namespace pstamp {

struct Representation {
  Value target = 0;
  std::vector<std::pair<Value, Value>> parts;  // (element, multiplicity), descending by element
  Value count = 0;                             // total multiplicity
};

// Normalizes a flat list of summands (with repetition) into a Representation.
inline Representation make_representation(std::vector<Value> summands) {
  std::sort(summands.begin(), summands.end(), std::greater<>());
  Representation rep;
  for (Value a : summands) {
    if (!rep.parts.empty() && rep.parts.back().first == a)
      rep.parts.back().second += 1;
    else
      rep.parts.emplace_back(a, 1);
    rep.target = checked_add(rep.target, a);
    rep.count += 1;
  }
  return rep;
}

// Descending flat list of summands.
inline std::vector<Value> expanded(const Representation& rep) {
  std::vector<Value> out;
  out.reserve(rep.count);
  for (const auto& [elem, mult] : rep.parts)
    for (Value i = 0; i < mult; ++i) out.push_back(elem);
  return out;
}

}  // namespace pstamp
