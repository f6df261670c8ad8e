#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "tfca/bitset.hpp"
#include "tfca/context.hpp"
#include "tfca/cxt_io.hpp"
#include "tfca/errors.hpp"
#include "tfca/implications.hpp"
#include "tfca/lectic.hpp"
#include "tfca/next_closure.hpp"

#include "helpers.hpp"

using namespace tfca;
using test::bits;

namespace {

formal_context load_fixture(const std::string& name) {
  return parse_cxt(test::read_file(test::fixture_path(name))).context;
}

implication imp(std::size_t n, std::initializer_list<std::size_t> p,
                std::initializer_list<std::size_t> c) {
  return {bits(n, p), bits(n, c)};
}

}  // namespace

TEST_CASE("lectic order basics") {
  // the empty set precedes everything; the full set is last
  CHECK(lectic_less(bits(4, {}), bits(4, {3})));
  CHECK(lectic_less(bits(4, {3}), bits(4, {2})));       // smaller max index wins late
  CHECK(lectic_less(bits(4, {1, 3}), bits(4, {0})));    // index 0 dominates
  CHECK(lectic_less(bits(4, {0}), bits(4, {0, 3})));    // extension grows
  CHECK(!lectic_less(bits(4, {2}), bits(4, {2})));      // irreflexive

  // A +_i drops everything at or above i and adds i
  CHECK(lectic_plus(bits(5, {1, 3, 4}), 2) == bits(5, {1, 2}));
  CHECK(lectic_plus(bits(5, {}), 4) == bits(5, {4}));

  // A <_i B demands agreement below i and i itself new in B
  CHECK(lectic_less_at(bits(4, {1}), bits(4, {1, 2}), 2));
  CHECK(!lectic_less_at(bits(4, {1}), bits(4, {0, 2}), 2));
  CHECK(!lectic_less_at(bits(4, {1, 2}), bits(4, {1, 2}), 2));
}

TEST_CASE("lectic order is total on distinct sets") {
  test::for_all_subsets(5, [&](const bitset& a) {
    test::for_all_subsets(5, [&](const bitset& b) {
      if (a == b) {
        CHECK(!lectic_less(a, b));
      } else {
        CHECK(lectic_less(a, b) != lectic_less(b, a));
      }
    });
  });
}

TEST_CASE("implication closure saturates") {
  const std::vector<implication> base = {imp(4, {0}, {0, 1}), imp(4, {1, 2}, {0, 1, 2, 3})};
  CHECK(l_closure(bits(4, {0}), base) == bits(4, {0, 1}));
  CHECK(l_closure(bits(4, {0, 2}), base) == bits(4, {0, 1, 2, 3}));  // two passes needed
  CHECK(l_closure(bits(4, {3}), base) == bits(4, {3}));
  CHECK(l_closure(bits(4, {}), base) == bits(4, {}));
}

TEST_CASE("six by six worked example: the minimal base, implication by implication") {
  const formal_context ctx = load_fixture("six_by_six.cxt");
  const auto r = next_closure(ctx);

  const std::vector<implication> expected = {
      imp(6, {4}, {4, 5}),        imp(6, {3}, {0, 1, 3}),
      imp(6, {2}, {1, 2}),        imp(6, {1, 5}, {0, 1, 2, 3, 4, 5}),
      imp(6, {0, 5}, {0, 1, 2, 3, 4, 5}), imp(6, {0, 1}, {0, 1, 3}),
      imp(6, {0, 1, 2, 3}, {0, 1, 2, 3, 4, 5}),
  };
  CHECK(r.base.implications == expected);

  // eight intents including the empty one, in ascending lectic order
  REQUIRE(r.intents.size() == 8);
  CHECK(r.intents.front() == bits(6, {}));
  CHECK(r.intents.back().is_full());
  CHECK(std::is_sorted(r.intents.begin(), r.intents.end(),
                       [](const bitset& a, const bitset& b) { return lectic_less(a, b); }));
}

TEST_CASE("a non-closed empty set opens the base") {
  const formal_context ctx = load_fixture("triangular.cxt");
  const auto r = next_closure(ctx);
  REQUIRE(!r.base.implications.empty());
  CHECK(r.base.implications.front() == imp(3, {}, {2}));
  CHECK(r.base.implications == std::vector<implication>{imp(3, {}, {2}), imp(3, {0, 2}, {0, 1, 2})});
  // ∅ is not an intent here
  for (const bitset& intent : r.intents) CHECK(intent.any());
}

TEST_CASE("base premises are exactly the pseudo-intents") {
  std::mt19937 rng(201);
  for (int trial = 0; trial < 30; ++trial) {
    const formal_context ctx = test::random_context(rng, 5, 6);
    const auto r = next_closure(ctx);
    test::for_all_subsets(ctx.attribute_count(), [&](const bitset& x) {
      const bool in_base =
          std::any_of(r.base.implications.begin(), r.base.implications.end(),
                      [&](const implication& i) { return i.premise == x; });
      CHECK(in_base == is_pseudo_intent(ctx, x));
    });
  }
}

TEST_CASE("the base is sound and complete for the derivation closure") {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    const formal_context ctx = test::random_context(rng, 6, 6);
    const auto r = next_closure(ctx);
    test::for_all_subsets(ctx.attribute_count(), [&](const bitset& x) {
      CHECK(l_closure(x, r.base.implications) == ctx.intent_closure(x));
    });
  }
}

TEST_CASE("no implication of the base is redundant") {
  std::mt19937 rng(203);
  for (int trial = 0; trial < 15; ++trial) {
    const formal_context ctx = test::random_context(rng, 6, 6);
    const auto r = next_closure(ctx);
    for (std::size_t skip = 0; skip < r.base.implications.size(); ++skip) {
      std::vector<implication> reduced;
      for (std::size_t i = 0; i < r.base.implications.size(); ++i)
        if (i != skip) reduced.push_back(r.base.implications[i]);
      bool lost_something = false;
      test::for_all_subsets(ctx.attribute_count(), [&](const bitset& x) {
        if (l_closure(x, reduced) != ctx.intent_closure(x)) lost_something = true;
      });
      CHECK(lost_something);
    }
  }
}

TEST_CASE("reuse-aware walk equals the plain walk when fed its own results") {
  std::mt19937 rng(204);
  for (int trial = 0; trial < 30; ++trial) {
    const formal_context ctx = test::random_context(rng, 6, 6);
    const auto r = next_closure(ctx);

    // nothing known: degenerates to the plain walk
    CHECK(modified_next_closure(ctx, {}, {}) == r.base);
    // everything known: all closures are skipped, the base still comes out
    CHECK(modified_next_closure(ctx, r.intents, r.base.implications) == r.base);
    // half-known inputs
    std::vector<bitset> some_intents(r.intents.begin(),
                                     r.intents.begin() + r.intents.size() / 2);
    std::vector<implication> some_imps(
        r.base.implications.begin(),
        r.base.implications.begin() + r.base.implications.size() / 2);
    CHECK(modified_next_closure(ctx, some_intents, some_imps) == r.base);
  }
}

TEST_CASE("validation mode flags corrupted partial inputs") {
  const formal_context ctx = load_fixture("six_by_six.cxt");
  const auto r = next_closure(ctx);

  // a premise that really occurs, with a trimmed conclusion
  std::vector<implication> bad = {imp(6, {4}, {4})};
  reuse_options strict{true};
  CHECK_THROWS_AS(modified_next_closure(ctx, {}, bad, strict), inconsistent_input_error);

  // a premise that never occurs is left over at the end: no visited set has
  // {2} as its prefix below 4, so {2,4} is never generated as a candidate
  std::vector<implication> stray = {imp(6, {2, 4}, {0, 1, 2, 3, 4, 5})};
  CHECK_THROWS_AS(modified_next_closure(ctx, {}, stray, strict), inconsistent_input_error);
  // without validation the stray entry is ignored
  CHECK(modified_next_closure(ctx, {}, stray) == r.base);
}

TEST_CASE("pseudo-intent checker matches the recursive definition") {
  const formal_context ctx = load_fixture("six_by_six.cxt");
  // {5} is a pseudo-intent, {5,6} is an intent, {1,6} is a pseudo-intent
  CHECK(is_pseudo_intent(ctx, bits(6, {4})));
  CHECK(!is_pseudo_intent(ctx, bits(6, {4, 5})));
  CHECK(is_pseudo_intent(ctx, bits(6, {0, 5})));
  CHECK(!is_pseudo_intent(ctx, bits(6, {})));  // ∅'' = ∅ here, so ∅ is closed, not pseudo
  const formal_context tri = load_fixture("triangular.cxt");
  CHECK(is_pseudo_intent(tri, bits(3, {})));  // ∅'' = {3} there

  const formal_context wide(test::numbered("g", 2), test::numbered("m", 25), {});
  CHECK_THROWS_AS(is_pseudo_intent(wide, bitset::full(25), 20), capacity_error);
}

TEST_CASE("degenerate contexts") {
  // no attributes at all
  const formal_context none({"g0", "g1"}, {}, {});
  const auto r = next_closure(none);
  CHECK(r.base.implications.empty());
  REQUIRE(r.intents.size() == 1);
  CHECK(r.intents[0].universe() == 0);

  // full incidence: single intent M, single implication ∅ → M
  const formal_context full = test::make_context({"g"}, {"m0", "m1"}, {"XX"});
  const auto rf = next_closure(full);
  CHECK(rf.intents == std::vector<bitset>{bits(2, {0, 1})});
  CHECK(rf.base.implications == std::vector<implication>{imp(2, {}, {0, 1})});
}
