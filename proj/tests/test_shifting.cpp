#include "doctest.h"

#include <random>

#include "emc/claim.hpp"
#include "emc/json_io.hpp"
#include "emc/matching.hpp"
#include "emc/oracle.hpp"
#include "emc/shifting.hpp"
#include "emc/suites.hpp"

using namespace emc;

namespace {

SetFamily fam(unsigned n, unsigned k, unsigned s, std::initializer_list<std::initializer_list<Element>> sets) {
  std::vector<Mask> masks;
  for (auto& lst : sets) masks.push_back(mask_of(std::vector<Element>(lst)));
  return SetFamily(Params(n, k, s), std::move(masks));
}

// Repeated C_ij for all i < j until stable; test utility only.
SetFamily left_compress(SetFamily f) {
  for (;;) {
    bool moved = false;
    for (Element i = 1; i <= f.params().n && !moved; ++i)
      for (Element j = i + 1; j <= f.params().n && !moved; ++j) {
        SetFamily g = shift_family(f, ShiftStep(i, j));
        if (!(g == f)) {
          f = std::move(g);
          moved = true;
        }
      }
    if (!moved) return f;
  }
}

}  // namespace

TEST_CASE("shift_set follows the three-condition rule") {
  const SetFamily lone = fam(3, 2, 2, {{2, 3}});
  CHECK(shift_set(lone, ShiftStep(1, 2), KSet(mask_of({2, 3}))).mask() == mask_of({1, 3}));

  const SetFamily blocked = fam(3, 2, 2, {{2, 3}, {1, 3}});
  CHECK(shift_set(blocked, ShiftStep(1, 2), KSet(mask_of({2, 3}))).mask() == mask_of({2, 3}));

  const SetFamily has_i = fam(3, 2, 2, {{1, 2}});
  CHECK(shift_set(has_i, ShiftStep(1, 2), KSet(mask_of({1, 2}))).mask() == mask_of({1, 2}));

  CHECK_THROWS_AS(shift_set(lone, ShiftStep(1, 2), KSet(mask_of({1, 3}))), InputError);
}

TEST_CASE("shift_family examples") {
  const SetFamily star2 = fam(5, 2, 2, {{1, 2}, {2, 3}, {2, 4}, {2, 5}});
  const SetFamily star1 = fam(5, 2, 2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  CHECK(shift_family(star2, ShiftStep(1, 2)) == star1);

  const SetFamily no_j = fam(5, 2, 2, {{1, 3}, {3, 4}});
  CHECK(shift_family(no_j, ShiftStep(1, 2)) == no_j);
}

TEST_CASE("shift step and sequence validation") {
  CHECK_THROWS_AS(ShiftStep(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(ShiftStep(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(ShiftSequence({ShiftStep(1, 2), ShiftStep(1, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(ShiftSequence({ShiftStep(1, 2), ShiftStep(3, 2)}), std::invalid_argument);
  const ShiftSequence seq({ShiftStep(1, 2), ShiftStep(3, 4)});
  CHECK(shift_sequence_from_json(json_of(seq)) == seq);
}

TEST_CASE("cardinality and idempotence over random families") {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 300; ++t) {
    const unsigned n = 2 + rng() % 8;
    const unsigned k = 1 + rng() % std::min(3u, n);
    const Params p(n, k, 1 + rng() % 3);
    const SetFamily f = random_family(p, rng(), rng() % 14);
    const Element i = 1 + rng() % n;
    Element j = 1 + rng() % n;
    if (i == j) j = (j % n) + 1;
    const ShiftStep st(i, j);
    const SetFamily g = shift_family(f, st);
    CHECK(g.size() == f.size());
    CHECK(shift_family(g, st) == g);  // one pass exhausts the operator
  }
}

TEST_CASE("apply_shift_sequence") {
  const SetFamily f = fam(5, 2, 2, {{1, 2}, {2, 3}, {2, 4}, {2, 5}});
  SUBCASE("empty sequence") {
    const auto app = apply_shift_sequence(f, ShiftSequence(std::vector<ShiftStep>{}));
    CHECK(app.result == f);
    CHECK(app.intermediates.size() == 1);
  }
  SUBCASE("single step equals shift_family") {
    const auto app = apply_shift_sequence(f, ShiftSequence({ShiftStep(1, 2)}));
    CHECK(app.result == shift_family(f, ShiftStep(1, 2)));
    CHECK(app.intermediates.size() == 2);
  }
  SUBCASE("descending position order") {
    const ShiftSequence seq({ShiftStep(1, 2), ShiftStep(3, 4)});
    const auto app = apply_shift_sequence(f, seq);
    // position 2 (3,4) first, then position 1 (1,2)
    const SetFamily mid = shift_family(f, ShiftStep(3, 4));
    CHECK(app.intermediates[1] == mid);
    CHECK(app.result == shift_family(mid, ShiftStep(1, 2)));
  }
}

TEST_CASE("trivial families stay trivial under every shift") {
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 300; ++t) {
    const unsigned n = 2 + rng() % 8;
    const unsigned k = 1 + rng() % std::min(3u, n - 1);
    const Element x = 1 + rng() % n;
    std::vector<Mask> pool;
    for_each_ksubset(n, k, [&](Mask m) {
      if (!mask_contains(m, x)) pool.push_back(m);
      return true;
    });
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng() % i]);
    pool.resize(rng() % (pool.size() + 1));
    const SetFamily f(Params(n, k, 1 + rng() % 3), std::move(pool));

    for (Element i = 1; i <= n; ++i) {
      for (Element j = 1; j <= n; ++j) {
        if (i == j) continue;
        const SetFamily g = shift_family(f, ShiftStep(i, j));
        const auto unc = uncovered_elements(g);
        REQUIRE_FALSE(unc.empty());
        auto has = [&](Element e) {
          return std::find(unc.begin(), unc.end(), e) != unc.end();
        };
        if (x == j) {
          CHECK(g == f);  // j never occurs, so no shift fires
        } else if (x == i) {
          CHECK(has(j));  // the family ends up missing j instead
        } else {
          CHECK(has(x));
        }
      }
    }
  }
}

TEST_CASE("apply_shift_sequence keeps triviality monotone") {
  std::mt19937_64 rng(606);
  for (int t = 0; t < 100; ++t) {
    const unsigned n = 3 + rng() % 6;
    const unsigned k = 1 + rng() % std::min(3u, n - 1);
    const Element x = 1 + rng() % n;
    std::vector<Mask> pool;
    for_each_ksubset(n, k, [&](Mask m) {
      if (!mask_contains(m, x)) pool.push_back(m);
      return true;
    });
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng() % i]);
    pool.resize(rng() % (pool.size() + 1));
    const SetFamily f(Params(n, k, 2), std::move(pool));

    // any sequence with distinct I and distinct J entries
    std::vector<ShiftStep> steps;
    const Element a = 1 + rng() % n;
    const Element b = (a % n) + 1;
    steps.emplace_back(a, b);
    if (n >= 4) {
      Element c = (b % n) + 1, d = (c % n) + 1;
      if (c != a && d != b && c != d) steps.emplace_back(c, d);
    }
    const auto app = apply_shift_sequence(f, ShiftSequence(std::move(steps)));
    CHECK(app.trivial.front());
    for (std::size_t i = 0; i + 1 < app.trivial.size(); ++i)
      CHECK((!app.trivial[i] || app.trivial[i + 1]));
  }
}

TEST_CASE("left compression stabilizes with cardinality intact") {
  const SetFamily f = fam(5, 2, 2, {{2, 5}, {3, 4}, {1, 5}});
  const SetFamily c = left_compress(f);
  CHECK(c.size() == f.size());
  for (Element i = 1; i <= 5; ++i)
    for (Element j = i + 1; j <= 5; ++j) CHECK(shift_family(c, ShiftStep(i, j)) == c);
}

TEST_CASE("a deliberately broken shift trips the suite's cardinality check") {
  // Flips the blocking rule: shifts even when the target is present, so the
  // image collapses {2,3} onto {1,3}. Dedup hides the loss; the suite's
  // size comparison must expose it.
  const SetFamily f = fam(3, 2, 2, {{2, 3}, {1, 3}});
  std::vector<Mask> buggy;
  for (Mask m : f.masks()) {
    const Mask moved = (m & ~bit_of(2)) | bit_of(1);
    if (!mask_contains(m, 1) && mask_contains(m, 2)) buggy.push_back(moved);
    else buggy.push_back(m);
  }
  std::sort(buggy.begin(), buggy.end());
  buggy.erase(std::unique(buggy.begin(), buggy.end()), buggy.end());
  const SetFamily broken(f.params(), std::move(buggy));
  REQUIRE(broken.size() == 1);

  const auto v = suites::check_shift_case(f, ShiftStep(1, 2), broken, matching_number(f));
  REQUIRE(v.has_value());
  CHECK((*v)["claim"] == "cardinality-preserved");

  // the honest operator sails through the same check
  CHECK_FALSE(suites::check_shift_case(f, ShiftStep(1, 2), shift_family(f, ShiftStep(1, 2)),
                                       matching_number(f))
                  .has_value());
}
