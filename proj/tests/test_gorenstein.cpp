#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "betti/gorenstein.hpp"

#include "betti/combinatorics.hpp"
#include "generators.hpp"

using namespace betti;
using testgen::make_table;

namespace {

std::vector<GorensteinParams> sweep(int max_s, int max_t, int max_c) {
  std::vector<GorensteinParams> params;
  for (int t = 1; t <= max_t; ++t) {
    for (int s = 2 * t; s <= max_s; ++s) {
      for (int c = 2; c <= max_c; ++c) params.emplace_back(s, t, c);
    }
  }
  return params;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(GorensteinParams(1, 1, 2), InvalidInput);  // s < 2t
  CHECK_THROWS_AS(GorensteinParams(2, 0, 2), InvalidInput);
  CHECK_THROWS_AS(GorensteinParams(2, 1, 1), InvalidInput);  // single strand
  CHECK_THROWS_AS(stacked_decomposition(2, 1), InvalidInput);
  CHECK_THROWS_AS(stacked_decomposition(1, 3), InvalidInput);
}

TEST_CASE("closed-form table of the stacked fixture") {
  CHECK(gorenstein_betti(GorensteinParams(3, 1, 4)) == make_table({{0, 0, Rat(1)},
                                                                   {1, 2, Rat(6)},
                                                                   {1, 3, Rat(3)},
                                                                   {2, 3, Rat(8)},
                                                                   {2, 4, Rat(8)},
                                                                   {3, 4, Rat(3)},
                                                                   {3, 5, Rat(6)},
                                                                   {4, 7, Rat(1)}}));
}

TEST_CASE("colliding strands at s = 2t") {
  // complete intersection of two quadrics (independent Koszul route)
  CHECK(gorenstein_betti(GorensteinParams(2, 1, 2)) ==
        make_table({{0, 0, Rat(1)}, {1, 2, Rat(2)}, {2, 4, Rat(1)}}));

  for (int t = 1; t <= 3; ++t) {
    for (int c = 2; c <= 5; ++c) {
      GorensteinParams p(2 * t, t, c);
      auto table = gorenstein_betti(p);
      for (const auto& [key, value] : table.cells()) {
        CHECK(value == table.get(p.c - key.first, p.s + p.c - key.second));
      }
    }
  }
}

TEST_CASE("h-vectors") {
  auto h = gorenstein_h_vector(GorensteinParams(3, 1, 4));
  CHECK(h == std::vector<Int>{1, 4, 4, 1});
  CHECK(gorenstein_h_vector(GorensteinParams(2, 1, 2)) == std::vector<Int>{1, 2, 1});

  for (const auto& p : sweep(9, 4, 6)) {
    auto values = gorenstein_h_vector(p);
    REQUIRE(values.size() == static_cast<std::size_t>(p.s) + 1);
    CHECK(values[0] == 1);
    CHECK(values[1] == p.c);
    for (std::size_t i = 0; i < values.size(); ++i) {
      CHECK(values[i] == values[values.size() - 1 - i]);
    }
  }
}

TEST_CASE("closed-form decomposition of the stacked fixture") {
  Decomposition expected{{{Rat(72), {0, 2, 3, 4, 7}},
                          {Rat(48), {0, 2, 3, 5, 7}},
                          {Rat(48), {0, 2, 4, 5, 7}},
                          {Rat(72), {0, 3, 4, 5, 7}}}};
  CHECK(gorenstein_decomposition(GorensteinParams(3, 1, 4)) == expected);
  CHECK(stacked_decomposition(4, 3) == expected);

  // lead entries 1/168, 1/210, 1/280, 1/420
  std::vector<long> denominators{168, 210, 280, 420};
  for (std::size_t k = 0; k < expected.terms.size(); ++k) {
    CHECK(pure_diagram(expected.terms[k].sequence).table.get(0, 0) ==
          make_rat(1, denominators[k]));
  }
}

TEST_CASE("collapsed chain at s = 2t") {
  // all sigma_j coincide, so the closed form merges into one pure diagram
  auto merged = gorenstein_decomposition(GorensteinParams(2, 1, 2));
  CHECK(merged == Decomposition{{{Rat(8), {0, 2, 4}}}});
  CHECK(merged == greedy_decompose(gorenstein_betti(GorensteinParams(2, 1, 2))));
  CHECK(stacked_decomposition(2, 2) == merged);
}

TEST_CASE("stacked coefficients read back the polytope data") {
  for (int c = 2; c <= 6; ++c) {
    for (int d = 3; d <= 6; ++d) {
      auto dec = stacked_decomposition(c, d);
      REQUIRE(static_cast<int>(dec.terms.size()) == c);
      Int edge = Int(d) * factorial(c);
      CHECK(dec.terms.front().coeff == Rat(edge));
      CHECK(dec.terms.back().coeff == Rat(edge));
      for (int j = 1; j + 1 < c; ++j) {
        CHECK(dec.terms[j].coeff == Rat(Int(d - 1) * factorial(c)));
      }
    }
  }
}

TEST_CASE("sweep: greedy agrees with the closed form") {
  for (const auto& p : sweep(10, 4, 7)) {
    auto table = gorenstein_betti(p);
    auto closed = gorenstein_decomposition(p);
    CHECK(greedy_decompose(table) == closed);
    CHECK(recompose(closed) == table);
    CHECK(check_integrality(closed));

    auto pairing = self_dual_pairing(closed, p.s + p.c);
    CHECK(pairing.shift == p.s + p.c);

    Rat alternating = 0;
    for (const auto& [key, value] : table.cells()) {
      alternating += (key.first % 2 == 0 ? value : -value);
    }
    CHECK(alternating == 0);
  }
}

TEST_CASE("telescoping identity") {
  auto [lhs1, rhs1] = telescoping_identity(2, 1, 2);
  CHECK(lhs1 == 1);
  CHECK(rhs1 == 1);

  for (long b = 1; b <= 8; ++b) {
    auto [lhs, rhs] = telescoping_identity(1, b, 1);
    CHECK(lhs == make_rat(1, 1 + b));
    CHECK(rhs == lhs);
  }

  auto [lhs2, rhs2] = telescoping_identity(30, 17, 30);
  CHECK(lhs2 == rhs2);

  CHECK_THROWS_AS(telescoping_identity(0, 1, 1), InvalidInput);
  CHECK_THROWS_AS(telescoping_identity(3, 0, 1), InvalidInput);
  CHECK_THROWS_AS(telescoping_identity(3, 1, 4), InvalidInput);  // m > a
}
