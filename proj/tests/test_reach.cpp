#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "pstamp/reach.hpp"

using namespace pstamp;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::internal_invariant_broken;
}

std::vector<Value> random_elements(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick_k(1, 6);
  std::uniform_int_distribution<Value> step(1, 17);
  std::vector<Value> out{1};
  const std::size_t k = pick_k(rng);
  while (out.size() < k) out.push_back(out.back() + step(rng));
  return out;
}

}  // namespace

TEST_CASE("table examples") {
  const ReachTable unit = min_stamps_table({1}, 3);
  CHECK(unit.min_count(0) == 0);
  CHECK(unit.min_count(1) == 1);
  CHECK(unit.min_count(2) == 2);
  CHECK(unit.min_count(3) == 3);

  CHECK(min_stamps_table({1, 3, 5, 6}, 23).min_count(23) == 4);  // e.g. 6+6+6+5
  CHECK(min_stamps_table({1, 8, 15, 16}, 5).min_count(5) == 5);  // five forced 1s

  const ReachTable empty_range = min_stamps_table({1, 4}, 0);
  CHECK(empty_range.limit() == 0);
  CHECK(empty_range.min_count(0) == 0);
}

TEST_CASE("table error paths") {
  CHECK(code_of([] { min_stamps_table({}, 5); }) == Errc::empty_input);
  CHECK(code_of([] { min_stamps_table({2, 3}, 5); }) == Errc::missing_one);
  CHECK(code_of([] { min_stamps_table({1, 3, 3}, 5); }) == Errc::not_strictly_increasing);
  CHECK(code_of([] { min_stamps_table({1, 2}, Value{1} << 40); }) == Errc::limit_overflow);
  CHECK(code_of([] { n_range({1, ~Value{0} - 1}, 100); }) == Errc::limit_overflow);
  CHECK(code_of([] { n_range({1, 2}, 0); }) == Errc::precondition_violated);
}

TEST_CASE("table recurrence holds") {
  std::mt19937 rng{7};
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<Value> elements = random_elements(rng);
    const Value limit = 250;
    const ReachTable t = min_stamps_table(elements, limit);
    for (Value n = 1; n <= limit; ++n) {
      Count best = ~Count{0};
      for (Value a : elements)
        if (a <= n) best = std::min(best, Count(t.min_count(n - a) + 1));
      CHECK(t.min_count(n) == best);
      CHECK(t.min_count(n) <= n);
    }
  }
}

TEST_CASE("table agrees with multiset enumeration") {
  std::mt19937 rng{11};
  constexpr unsigned kSizeCap = 8;
  for (int trial = 0; trial < 25; ++trial) {
    const std::vector<Value> elements = random_elements(rng);
    const Value limit = 200;
    const ReachTable t = min_stamps_table(elements, limit);
    const auto brute = oracle::brute_force_min_counts(elements, limit, kSizeCap);
    for (Value n = 0; n <= limit; ++n) {
      const auto it = brute.find(n);
      if (t.min_count(n) <= kSizeCap) {
        REQUIRE(it != brute.end());
        CHECK(it->second == t.min_count(n));
      } else {
        CHECK(it == brute.end());
      }
    }
  }
}

TEST_CASE("n_range examples and bound") {
  CHECK(n_range({1}, 3) == 4);
  CHECK(n_range({1, 2}, 2) == 5);
  CHECK(n_range({1, 8, 15, 16}, 4) == 5);
  for (Value h = 1; h <= 50; ++h) CHECK(n_range({1}, h) == h + 1);

  std::mt19937 rng{13};
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<Value> elements = random_elements(rng);
    std::uniform_int_distribution<Value> pick_h(1, 9);
    const Value h = pick_h(rng);
    CHECK(n_range(elements, h) <= h * elements.back() + 1);
  }
}

TEST_CASE("is_compact verdicts") {
  const Verdict yes = is_compact({1, 3, 5, 6});
  CHECK(yes.status == VerdictStatus::checked_compact);
  CHECK(yes.provenance == Provenance::oracle_dp);
  CHECK(yes.n_range_value == Value{25});
  CHECK_FALSE(yes.witness.has_value());
  CHECK(yes.compact());

  const Verdict no = is_compact({1, 8, 15, 16});
  CHECK(no.status == VerdictStatus::checked_not_compact);
  CHECK(no.witness == Value{5});
  CHECK(no.n_range_value == Value{5});
  CHECK_FALSE(no.compact());

  CHECK(is_compact({1, 5, 9, 10}).n_range_value == Value{41});
  CHECK(is_compact({1, 2}).n_range_value == Value{5});

  // checked compact <=> N(k, A) = k*a_k + 1
  std::mt19937 rng{17};
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<Value> elements = random_elements(rng);
    const Value k = elements.size();
    const Verdict v = is_compact(elements);
    const Value n = n_range(elements, k);
    CHECK(v.compact() == (n == k * elements.back() + 1));
    if (!v.compact()) {
      CHECK(v.witness == n);
      CHECK(*v.witness <= k * elements.back());
      const ReachTable t = min_stamps_table(elements, *v.witness);
      CHECK(t.min_count(*v.witness) > k);
    }
  }
}

TEST_CASE("is_compact agrees with layered reachability") {
  std::mt19937 rng{19};
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Value> elements = random_elements(rng);
    while (elements.back() > 40) elements.pop_back();  // keep the layer oracle cheap
    CHECK(is_compact(elements).compact() == oracle::compact_by_layers(elements));
  }
}

TEST_CASE("representation_from_table") {
  const ReachTable t = min_stamps_table({1, 3, 5, 6}, 24);
  const Representation zero = representation_from_table(t, 0);
  CHECK(zero.count == 0);
  CHECK(zero.target == 0);
  CHECK(zero.parts.empty());

  const Representation r23 = representation_from_table(t, 23);
  CHECK(r23.count == 4);
  CHECK(r23.target == 23);
  CHECK(expanded(r23) == std::vector<Value>{6, 6, 6, 5});  // largest-first tie break

  const ReachTable t2 = min_stamps_table({1, 8, 15, 16}, 5);
  CHECK(expanded(representation_from_table(t2, 5)) == std::vector<Value>{1, 1, 1, 1, 1});

  CHECK(code_of([&] { representation_from_table(t, 25); }) == Errc::out_of_range);

  std::mt19937 rng{23};
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<Value> elements = random_elements(rng);
    const Value limit = 300;
    const ReachTable table = min_stamps_table(elements, limit);
    std::uniform_int_distribution<Value> pick_n(0, limit);
    for (int i = 0; i < 20; ++i) {
      const Value n = pick_n(rng);
      const Representation rep = representation_from_table(table, n);
      CHECK(rep.target == n);
      CHECK(rep.count == table.min_count(n));
      Value sum = 0;
      for (const auto& [elem, mult] : rep.parts) sum += elem * mult;
      CHECK(sum == n);
    }
  }
}
