#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "betti/ferrers.hpp"
#include "generators.hpp"

#include <numeric>

using namespace betti;
using testgen::make_table;

namespace {

FerrersHypergraph stacking_fixture() {
  return from_cells(3, {{1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 1}, {1, 2, 2}, {2, 1, 1}});
}

FerrersHypergraph grid_2x2() {
  return from_cells(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
}

long sum_of(const Cell& cell) { return std::accumulate(cell.begin(), cell.end(), 0L); }

}  // namespace

TEST_CASE("cell validation") {
  CHECK(stacking_fixture().size() == 6);
  CHECK(from_cells(1, {{1}, {2}, {3}}).size() == 3);
  CHECK(from_cells(2, {}).size() == 0);

  try {
    from_cells(2, {{1, 2}});
    FAIL("expected NotOrderIdeal");
  } catch (const NotOrderIdeal& e) {
    CHECK(e.witness() == Cell{1, 2});
  }

  CHECK_THROWS_AS(from_cells(2, {{1, 1, 1}}), InvalidInput);  // wrong arity
  CHECK_THROWS_AS(from_cells(2, {{0, 1}}), InvalidInput);     // coordinates start at 1
  CHECK_THROWS_AS(from_cells(0, {}), InvalidInput);
}

TEST_CASE("alpha sequences") {
  CHECK(alpha_sequence(stacking_fixture()) == std::vector<long>{1, 3, 2});
  CHECK(alpha_sequence(from_cells(4, {{1, 1, 1, 1}})) == std::vector<long>{1});
  CHECK(alpha_sequence(from_cells(1, {{1}, {2}, {3}})) == std::vector<long>{1, 1, 1});
}

TEST_CASE("ideal betti tables") {
  CHECK(ideal_betti(stacking_fixture()) ==
        make_table({{0, 3, Rat(6)}, {1, 4, Rat(7)}, {2, 5, Rat(2)}}));
  CHECK(ideal_betti(from_cells(4, {{1, 1, 1, 1}})) == make_table({{0, 4, Rat(1)}}));
  CHECK(ideal_betti(grid_2x2()) ==
        make_table({{0, 2, Rat(4)}, {1, 3, Rat(4)}, {2, 4, Rat(1)}}));
  CHECK_THROWS_AS(ideal_betti(from_cells(2, {})), InvalidInput);
}

TEST_CASE("ideal decompositions") {
  CHECK(ideal_decomposition(stacking_fixture()) ==
        Decomposition{{{Rat(4), {3, 4, 5}}, {Rat(3), {3, 4}}, {Rat(1), {3}}}});
  CHECK(ideal_decomposition(from_cells(4, {{1, 1, 1, 1}})) ==
        Decomposition{{{Rat(1), {4}}}});
  CHECK(ideal_decomposition(grid_2x2()) ==
        Decomposition{{{Rat(2), {2, 3, 4}}, {Rat(2), {2, 3}}, {Rat(1), {2}}}});
}

TEST_CASE("quotient betti tables") {
  auto table = quotient_betti(stacking_fixture());
  CHECK(table == make_table({{0, 0, Rat(1)}, {1, 3, Rat(6)}, {2, 4, Rat(7)}, {3, 5, Rat(2)}}));

  CHECK(quotient_betti(from_cells(3, {{1, 1, 1}})) ==
        make_table({{0, 0, Rat(1)}, {1, 3, Rat(1)}}));

  // 1-uniform case: variables generate, so the quotient carries the full
  // Koszul strand
  CHECK(quotient_betti(from_cells(1, {{1}, {2}, {3}})) ==
        make_table({{0, 0, Rat(1)}, {1, 1, Rat(3)}, {2, 2, Rat(3)}, {3, 3, Rat(1)}}));

  // minimal free resolutions are exact: alternating total sum vanishes
  Rat alternating = 0;
  for (const auto& [key, value] : table.cells()) {
    alternating += (key.first % 2 == 0 ? value : -value);
  }
  CHECK(alternating == 0);
}

TEST_CASE("quotient summand data matches the worked 3-uniform example") {
  auto summands = quotient_summands(stacking_fixture());
  REQUIRE(summands.size() == 12);

  auto find = [&](int axis, const Cell& projection) {
    for (const auto& summand : summands) {
      if (summand.axis == axis && summand.projection == projection) return summand;
    }
    FAIL("missing summand");
    return summands.front();
  };

  CHECK(find(1, {1, 1}).n == 2);
  CHECK(find(1, {1, 1}).k == 1);
  CHECK(find(1, {1, 2}).n == 1);
  CHECK(find(1, {1, 2}).k == 1);
  CHECK(find(1, {1, 3}).n == 1);
  CHECK(find(1, {1, 3}).k == 2);
  CHECK(find(1, {2, 1}).n == 1);
  CHECK(find(1, {2, 1}).k == 1);
  CHECK(find(1, {2, 2}).n == 1);
  CHECK(find(1, {2, 2}).k == 2);

  CHECK(find(2, {1, 1}).n == 2);
  CHECK(find(2, {1, 1}).k == 1);
  CHECK(find(2, {1, 2}).n == 2);
  CHECK(find(2, {1, 2}).k == 2);
  CHECK(find(2, {1, 3}).n == 1);
  CHECK(find(2, {1, 3}).k == 2);
  CHECK(find(2, {2, 1}).n == 1);
  CHECK(find(2, {2, 1}).k == 1);

  CHECK(find(3, {1, 1}).n == 3);
  CHECK(find(3, {1, 1}).k == 2);
  CHECK(find(3, {1, 2}).n == 2);
  CHECK(find(3, {1, 2}).k == 2);
  CHECK(find(3, {2, 1}).n == 1);
  CHECK(find(3, {2, 1}).k == 1);

  CHECK_THROWS_AS(quotient_summands(from_cells(1, {{1}})), InvalidInput);
}

TEST_CASE("quotient decompositions") {
  CHECK(quotient_decomposition(stacking_fixture()) ==
        Decomposition{{{Rat(20), {0, 3, 4, 5}}, {Rat(8), {0, 3, 4}}}});

  // aggregation across axes on the degenerate single cell
  auto single = from_cells(2, {{1, 1}});
  CHECK(quotient_decomposition(single) == Decomposition{{{Rat(2), {0, 2}}}});
  CHECK(quotient_decomposition(single) == greedy_decompose(quotient_betti(single)));

  CHECK(quotient_decomposition(grid_2x2()) == greedy_decompose(quotient_betti(grid_2x2())));
}

TEST_CASE("projection identity evaluates to the uniformity") {
  CHECK(ferrers_identity(stacking_fixture()) == 3);
  CHECK(ferrers_identity(from_cells(2, {{1, 1}})) == 2);
}

TEST_CASE("order ideals from O-sequences") {
  CHECK(ferrers_from_o_sequence({1}, 4) == from_cells(4, {{1, 1, 1, 1}}));

  auto f = ferrers_from_o_sequence({1, 3, 2}, 3);
  CHECK(f.size() == 6);
  CHECK(alpha_sequence(f) == std::vector<long>{1, 3, 2});
  CHECK(ideal_betti(f) == make_table({{0, 3, Rat(6)}, {1, 4, Rat(7)}, {2, 5, Rat(2)}}));

  auto g = ferrers_from_o_sequence({1, 2, 3}, 2);
  CHECK(g.size() == 6);
  CHECK(g.uniformity() == 2);
  CHECK(alpha_sequence(g) == std::vector<long>{1, 2, 3});

  CHECK_THROWS_AS(ferrers_from_o_sequence({1, 3}, 2), InvalidInput);   // h_1 > d
  CHECK_THROWS_AS(ferrers_from_o_sequence({1, 2, 4}, 2), InvalidInput);
}

TEST_CASE("randomized cross-validation of the closed forms") {
  testgen::Rng rng(41);
  for (int round = 0; round < 60; ++round) {
    int d = 2 + static_cast<int>(rng() % 3);
    auto f = testgen::random_ferrers(rng, d);

    auto ideal_table = ideal_betti(f);
    CHECK(greedy_decompose(ideal_table) == ideal_decomposition(f));
    CHECK(recompose(ideal_decomposition(f)) == ideal_table);

    auto quotient_table = quotient_betti(f);
    CHECK(greedy_decompose(quotient_table) == quotient_decomposition(f));
    CHECK(recompose(quotient_decomposition(f)) == quotient_table);

    Rat alternating = 0;
    for (const auto& [key, value] : quotient_table.cells()) {
      alternating += (key.first % 2 == 0 ? value : -value);
    }
    CHECK(alternating == 0);

    CHECK(ferrers_identity(f) == d);

    auto alpha = alpha_sequence(f);
    CHECK(is_o_sequence(alpha));
    if (alpha.size() > 1) CHECK(alpha[1] <= d);
    CHECK(alpha_sequence(ferrers_from_o_sequence(alpha, d)) == alpha);
  }
}

TEST_CASE("projection identity per homological degree") {
  // (d+i-1) * sum_cells C(sum-d, i-1) = sum_summands n * C(k, i-1)
  testgen::Rng rng(42);
  for (int round = 0; round < 40; ++round) {
    int d = 2 + static_cast<int>(rng() % 3);
    auto f = testgen::random_ferrers(rng, d);
    auto summands = quotient_summands(f);
    int top = quotient_betti(f).projdim();
    for (int i = 1; i <= top; ++i) {
      Int lhs = 0;
      for (const Cell& cell : f.cells()) lhs += binomial(sum_of(cell) - d, i - 1);
      lhs *= d + i - 1;
      Int rhs = 0;
      for (const auto& summand : summands) rhs += summand.n * binomial(summand.k, i - 1);
      CHECK(lhs == rhs);
    }
  }
}
