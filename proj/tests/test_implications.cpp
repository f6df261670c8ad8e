#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "tfca/base_tables.hpp"
#include "tfca/base_transfer.hpp"
#include "tfca/bitset.hpp"
#include "tfca/context.hpp"
#include "tfca/cxt_io.hpp"
#include "tfca/errors.hpp"
#include "tfca/implications.hpp"
#include "tfca/meta_model.hpp"
#include "tfca/next_closure.hpp"
#include "tfca/triadic.hpp"
#include "tfca/triadic_io.hpp"

#include "helpers.hpp"

using namespace tfca;
using test::bits;

namespace {

formal_context load_cxt_fixture(const std::string& name) {
  return parse_cxt(test::read_file(test::fixture_path(name))).context;
}

triadic_context load_tri_fixture(const std::string& name) {
  return parse_triadic(test::read_file(test::fixture_path(name))).context;
}

implication imp(std::size_t n, std::initializer_list<std::size_t> p,
                std::initializer_list<std::size_t> c) {
  return {bits(n, p), bits(n, c)};
}

bool contains(const std::vector<implication>& set, const implication& i) {
  return std::find(set.begin(), set.end(), i) != set.end();
}

meta_model random_stack(std::mt19937& rng) {
  const formal_context k1 = test::random_context(rng, 4, 3);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::bernoulli_distribution cross(0.45);
  for (std::size_t m = 0; m < 3; ++m)
    for (std::size_t b = 0; b < 3; ++b)
      if (cross(rng)) pairs.emplace_back(m, b);
  return make_meta_model(k1, formal_context(k1.attribute_names(), test::numbered("b", 3), pairs));
}

}  // namespace

TEST_CASE("an implication under conditions is its statement in the conditional table") {
  std::mt19937 rng(501);
  for (int trial = 0; trial < 25; ++trial) {
    const triadic_context k = test::random_tri(rng, 3, 3, 3);
    test::for_all_subsets(3, [&](const bitset& c) {
      const formal_context layer = conditional_context(k, c);
      test::for_all_subsets(3, [&](const bitset& r) {
        test::for_all_subsets(3, [&](const bitset& s) {
          CHECK(triadic_implication_holds(k, r, s, c) == implication_holds(layer, r, s));
        });
      });
    });
  }
}

TEST_CASE("conditional validity means validity under every single condition") {
  std::mt19937 rng(502);
  for (int trial = 0; trial < 25; ++trial) {
    const triadic_context k = test::random_tri(rng, 3, 3, 3);
    test::for_all_subsets(3, [&](const bitset& c) {
      test::for_all_subsets(3, [&](const bitset& r) {
        test::for_all_subsets(3, [&](const bitset& s) {
          bool all = true;
          c.for_each([&](std::size_t b) {
            all = all && triadic_implication_holds(k, r, s, bits(3, {b}));
          });
          CHECK(conditional_implication_holds(k, r, s, c) == all);
        });
      });
    });
  }
}

TEST_CASE("the two wirings disagree on one conditional implication") {
  const triadic_context case1 = load_tri_fixture("composed_case1.tri.json");
  const triadic_context case2 = load_tri_fixture("composed_case2.tri.json");
  const bitset r = bits(3, {0}), s = bits(3, {1}), beta = bits(3, {1});
  CHECK(!triadic_implication_holds(case1, r, s, beta));
  CHECK(triadic_implication_holds(case2, r, s, beta));
  // under gamma neither has an object carrying attribute 1, so both pass
  CHECK(triadic_implication_holds(case1, r, s, bits(3, {2})));
  CHECK(triadic_implication_holds(case2, r, s, bits(3, {2})));
}

TEST_CASE("column deletion transfers the surviving base statements, reindexed") {
  const formal_context ctx = load_cxt_fixture("six_by_six.cxt");
  const stem_base base = next_closure(ctx).base;
  const std::vector<implication> moved = transfer_base_delete(ctx, bits(6, {1}), base).implications;

  // surviving roster is 1,3,4,5,6 -> indices 0..4
  const std::vector<implication> expected = {
      imp(5, {3}, {3, 4}),            // {5} -> {5,6}
      imp(5, {2}, {0, 2}),            // {4} -> {1,4}
      imp(5, {0, 4}, {0, 1, 2, 3, 4}) // {1,6} -> all survivors
  };
  CHECK(moved == expected);

  // each one is a full member of the reduced table's own minimal base
  const formal_context reduced = delete_attributes(ctx, bits(6, {1}));
  const stem_base reduced_base = next_closure(reduced).base;
  for (const implication& i : moved)
    CHECK(std::find(reduced_base.implications.begin(), reduced_base.implications.end(), i) !=
          reduced_base.implications.end());
}

TEST_CASE("occurrence removal transfers statements and may add single-attribute rules") {
  const formal_context ctx = load_cxt_fixture("six_by_six.cxt");
  const stem_base base = next_closure(ctx).base;
  const std::vector<implication> moved = transfer_base_remove(ctx, bits(6, {1}), base).implications;

  const std::vector<implication> expected = {
      imp(6, {4}, {4, 5}),                  // {5} -> {5,6}
      imp(6, {3}, {0, 3}),                  // {4} -> {1,4}
      imp(6, {1}, {0, 1, 2, 3, 4, 5}),      // {2} -> everything, its column is empty now
      imp(6, {0, 5}, {0, 2, 3, 4, 5}),      // {1,6} -> all survivors
  };
  CHECK(moved == expected);

  // sound in the reduced table, and every one is a member of its minimal base
  const formal_context reduced = remove_incidences(ctx, bits(6, {1}));
  const stem_base reduced_base = next_closure(reduced).base;
  for (const implication& i : moved) {
    CHECK(implication_holds(reduced, i.premise, i.conclusion));
    CHECK(std::find(reduced_base.implications.begin(), reduced_base.implications.end(), i) !=
          reduced_base.implications.end());
  }
}

TEST_CASE("no single-attribute rule is added when a shared attribute survives the cut") {
  // one object carrying both attributes: after cutting the second column the
  // first one still belongs to the closure of the empty set, so {2} is not a
  // minimal premise and no {2} -> M rule may appear
  const formal_context ctx = test::make_context({"g"}, {"1", "2"}, {"XX"});
  const stem_base base = next_closure(ctx).base;
  REQUIRE(base.implications == std::vector<implication>{imp(2, {}, {0, 1})});

  const std::vector<implication> moved = transfer_base_remove(ctx, bits(2, {1}), base).implications;
  CHECK(moved == std::vector<implication>{imp(2, {}, {0})});
  // and that already is the whole minimal base of the reduced table
  CHECK(moved == next_closure(remove_incidences(ctx, bits(2, {1}))).base.implications);
}

TEST_CASE("pairing rule: premises that lose the cut attribute through another statement") {
  const formal_context ctx = load_cxt_fixture("six_by_six.cxt");
  const stem_base base = next_closure(ctx).base;
  // candidates live on the column-deleted roster 1,3,4,5,6
  const std::vector<implication> extras = pairing_extra_candidates(ctx, 1, base);

  const bitset full5 = bitset::full(5);
  const std::vector<implication> expected = {
      {bits(5, {2, 4}), full5},        // {4,6}
      {bits(5, {1, 4}), full5},        // {3,6}
      {bits(5, {0, 4}), full5},        // {1,6}
      {bits(5, {0, 1, 2}), full5},     // {1,3,4}
      {bits(5, {0, 1, 2, 4}), full5},  // {1,3,4,6}
  };
  CHECK(extras == expected);

  // every candidate holds in the column-deleted table, but only some are
  // members of its minimal base
  const formal_context reduced = delete_attributes(ctx, bits(6, {1}));
  for (const implication& i : extras) CHECK(implication_holds(reduced, i.premise, i.conclusion));
  const stem_base reduced_base = next_closure(reduced).base;
  CHECK(contains(reduced_base.implications, implication{bits(5, {1, 4}), full5}));
  CHECK(!contains(reduced_base.implications, implication{bits(5, {0, 1, 2}), full5}));
  CHECK(!contains(reduced_base.implications, implication{bits(5, {2, 4}), full5}));

  // one member of the reduced base is reachable neither by transfer nor by
  // pairing: {1,3} -> everything; the walk must still find it on its own
  const implication unreachable{bits(5, {0, 1}), full5};
  CHECK(contains(reduced_base.implications, unreachable));
  const std::vector<implication> moved =
      transfer_base_delete(ctx, bits(6, {1}), base).implications;
  CHECK(!contains(moved, unreachable));
  CHECK(!contains(extras, unreachable));
}

TEST_CASE("transferred intents and statements seed the reuse-aware walk correctly everywhere") {
  // every 4x3 table, every cut: the pipeline the drivers run must land on
  // exactly the minimal base of the reduced table, with validation on
  for (std::uint64_t table = 0; table < (1u << 12); ++table) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t g = 0; g < 4; ++g)
      for (std::size_t m = 0; m < 3; ++m)
        if ((table >> (g * 3 + m)) & 1u) pairs.emplace_back(g, m);
    const formal_context ctx(test::numbered("g", 4), test::numbered("m", 3), pairs);
    const auto run = next_closure(ctx);
    const bool bottom_full = ctx.common_objects(bitset::full(3)).none();
    test::for_all_subsets(3, [&](const bitset& cut) {
      if (cut.none()) return;
      const formal_context reduced = remove_incidences(ctx, cut);
      const auto seeds = transfer_intents_remove(ctx, cut, run.intents, bottom_full);
      const auto partial = transfer_base_remove(ctx, cut, run.base).implications;
      const stem_base via_reuse =
          modified_next_closure(reduced, seeds, partial, reuse_options{true});
      CHECK(via_reuse == next_closure(reduced).base);
    });
  }
}

TEST_CASE("full-walk tables agree between the composed and the direct route") {
  std::mt19937 rng(503);
  auto check_routes = [](const meta_model& mm) {
    const conditional_base_table composed = triadic_base_composed(mm);
    const conditional_base_table generic = triadic_base_generic(compose(mm));
    // the composed table carries one extra entry: the seed at the empty set
    REQUIRE(composed.entries.size() == generic.entries.size() + 1);
    CHECK(composed.entries.front().conditions.none());
    for (std::size_t gi = 0; gi < generic.entries.size(); ++gi) {
      const bitset& c = generic.entries[gi].conditions;
      bool matched = false;
      for (std::size_t ci = 0; ci < composed.entries.size(); ++ci)
        if (composed.entries[ci].conditions == c) {
          CHECK(composed.base_of(ci) == generic.base_of(gi));
          matched = true;
          break;
        }
      CHECK(matched);
    }
  };
  check_routes(make_meta_model(load_cxt_fixture("banded_k1.cxt"),
                               load_cxt_fixture("meta_case1.cxt")));
  check_routes(make_meta_model(load_cxt_fixture("banded_k1.cxt"),
                               load_cxt_fixture("meta_case2.cxt")));
  check_routes(make_meta_model(load_cxt_fixture("reuse_k1.cxt"),
                               load_cxt_fixture("reuse_k2.cxt")));
  for (int trial = 0; trial < 25; ++trial) check_routes(random_stack(rng));
}

TEST_CASE("single-condition tables agree between the composed and the direct route") {
  std::mt19937 rng(504);
  for (int trial = 0; trial < 25; ++trial) {
    const meta_model mm = random_stack(rng);
    const conditional_base_table composed = conditional_base_composed(mm);
    const conditional_base_table generic = conditional_base_generic(compose(mm));
    REQUIRE(composed.entries.size() == generic.entries.size() + 1);
    for (std::size_t gi = 0; gi < generic.entries.size(); ++gi) {
      REQUIRE(composed.entries[gi + 1].conditions == generic.entries[gi].conditions);
      CHECK(composed.base_of(gi + 1) == generic.base_of(gi));
    }
  }
}

TEST_CASE("the attribute-set cache fires on the built-for-it fixture and is audited") {
  const meta_model mm = make_meta_model(load_cxt_fixture("reuse_k1.cxt"),
                                        load_cxt_fixture("reuse_k2.cxt"));
  const conditional_base_table full = triadic_base_composed(mm);
  std::size_t reused = 0;
  for (const base_table_entry& e : full.entries) reused += e.reused_from.has_value();
  CHECK(reused == 6);  // seven nonempty condition sets, one computed, six links
  CHECK(verify_reuse(mm, full) == 6);

  const conditional_base_table singles = conditional_base_composed(mm);
  reused = 0;
  for (const base_table_entry& e : singles.entries) reused += e.reused_from.has_value();
  CHECK(reused == 2);
  CHECK(verify_reuse(mm, singles) == 2);
}

TEST_CASE("the stacked example tables share no condition-selected attribute sets") {
  const meta_model mm = make_meta_model(load_cxt_fixture("people_roles.cxt"),
                                        load_cxt_fixture("roles_rooms.cxt"));
  const conditional_base_table full = triadic_base_composed(mm);
  for (const base_table_entry& e : full.entries) CHECK(!e.reused_from);
  CHECK(verify_reuse(mm, full) == 0);
}

TEST_CASE("reuse links may not form cycles") {
  conditional_base_table broken;
  broken.attribute_count = 2;
  base_table_entry a, b;
  a.conditions = bits(2, {0});
  a.reused_from = 1;
  b.conditions = bits(2, {1});
  b.reused_from = 0;
  broken.entries = {a, b};
  CHECK_THROWS_AS(broken.base_of(0), inconsistent_input_error);
}

TEST_CASE("implication cross table for the second wiring") {
  const triadic_context k = load_tri_fixture("composed_case2.tri.json");
  const implication_aggregate agg = build_implication_aggregate(k, conditional_base_generic(k));

  REQUIRE(agg.implications.size() == 4);
  CHECK(agg.table.object_names() ==
        std::vector<std::string>{"{3} -> {1,2,3}", "{2} -> {1,2,3}", "{1} -> {1,2}",
                                 "{1} -> {1,2,3}"});
  CHECK(agg.table.attribute_names() == std::vector<std::string>{"alpha", "beta", "gamma"});

  auto row_string = [&](std::size_t g) {
    std::string s;
    for (std::size_t b = 0; b < 3; ++b) s += agg.table.incident(g, b) ? 'X' : '.';
    return s;
  };
  CHECK(row_string(0) == "XX.");
  CHECK(row_string(1) == "X.X");
  CHECK(row_string(2) == ".XX");  // attribute 1 forces 2 under beta and gamma only
  CHECK(row_string(3) == "..X");

  // cross table incidence is exactly single-condition validity
  for (std::size_t g = 0; g < agg.implications.size(); ++g)
    for (std::size_t b = 0; b < 3; ++b)
      CHECK(agg.table.incident(g, b) ==
            triadic_implication_holds(k, agg.implications[g].premise,
                                      agg.implications[g].conclusion, bits(3, {b})));
}
