#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "petersch/errors.hpp"
#include "petersch/rootsys.hpp"

using namespace petersch;

namespace {

Root R(std::vector<int> c) { return Root{std::move(c)}; }

// Independent generator: builds Phi+ height by height with root strings.
// For beta positive and alpha_i, beta + alpha_i is a root iff q > 0 where
// p = max{k : beta - k alpha_i in Phi} and q = p - <beta, alpha_i^vee>.
std::set<Root> root_string_positives(const LieType& type) {
  const CartanMatrix a(type);
  const int n = type.rank();
  std::set<Root> all;
  std::vector<Root> layer;
  for (int i = 1; i <= n; ++i) layer.push_back(Root::simple(n, i));
  all.insert(layer.begin(), layer.end());
  while (!layer.empty()) {
    std::vector<Root> next;
    for (const Root& beta : layer) {
      for (int i = 1; i <= n; ++i) {
        int p = 0;
        for (Root down = beta;;) {
          --down.coeffs[i - 1];
          if (!all.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 1; j <= n; ++j) pairing += a(i, j) * beta.coeffs[j - 1];
        if (p - pairing > 0) {
          Root up = beta;
          ++up.coeffs[i - 1];
          if (all.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  return all;
}

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "A8", "B2", "B3", "B4", "C2", "C3", "C4",
                                         "D3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"};

}  // namespace

TEST_CASE("LieType validation") {
  CHECK(LieType::parse("E8").rank() == 8);
  CHECK(LieType::parse("b3").family() == Family::B);
  CHECK(LieType::parse("A12").str() == "A12");

  CHECK_THROWS_AS(LieType(Family::E, 5), PreconditionError);
  CHECK_THROWS_AS(LieType(Family::E, 9), PreconditionError);
  CHECK_THROWS_AS(LieType(Family::B, 1), PreconditionError);
  CHECK_THROWS_AS(LieType(Family::D, 2), PreconditionError);
  CHECK_THROWS_AS(LieType(Family::F, 3), PreconditionError);
  CHECK_THROWS_AS(LieType(Family::G, 3), PreconditionError);
  CHECK_THROWS_AS(LieType(Family::A, 0), PreconditionError);
  CHECK_THROWS_AS(LieType::parse("X3"), PreconditionError);
  CHECK_THROWS_AS(LieType::parse("E"), PreconditionError);
  CHECK_THROWS_AS(LieType::parse("E8x"), PreconditionError);
  CHECK_THROWS_WITH_AS(LieType::parse("E5"), doctest::Contains("rank 6, 7 or 8"), PreconditionError);
}

TEST_CASE("Cartan conventions") {
  SUBCASE("E8 branches at node 4") {
    const CartanMatrix a(LieType::parse("E8"));
    CHECK(a(1, 3) == -1);
    CHECK(a(2, 4) == -1);
    CHECK(a(2, 3) == 0);
    CHECK(a(7, 8) == -1);
    CHECK(a(1, 2) == 0);
  }
  SUBCASE("B_n has alpha_n short, C_n has alpha_n long") {
    const CartanMatrix b(LieType::parse("B3"));
    CHECK(b(3, 2) == -2);
    CHECK(b(2, 3) == -1);
    const CartanMatrix c(LieType::parse("C3"));
    CHECK(c(3, 2) == -1);
    CHECK(c(2, 3) == -2);
  }
  SUBCASE("G2 alpha_1 short") {
    const CartanMatrix g(LieType::parse("G2"));
    CHECK(g(1, 2) == -3);
    CHECK(g(2, 1) == -1);
  }
  SUBCASE("diagonal 2, off-diagonal nonpositive") {
    for (const auto& label : kTypes) {
      const CartanMatrix a(LieType::parse(label));
      for (int i = 1; i <= a.rank(); ++i) {
        for (int j = 1; j <= a.rank(); ++j) {
          if (i == j) CHECK(a(i, j) == 2);
          else CHECK(a(i, j) <= 0);
        }
      }
    }
  }
}

TEST_CASE("build_root_system examples") {
  CHECK(RootSystem(LieType::parse("A1")).positives() == std::vector<Root>{R({1})});
  CHECK(RootSystem(LieType::parse("A2")).positives() == std::vector<Root>{R({0, 1}), R({1, 0}), R({1, 1})});

  const RootSystem e8(LieType::parse("E8"));
  CHECK(e8.positives().size() == 120);
  CHECK(height(e8.positives().back()) == 29);

  const RootSystem g2(LieType::parse("G2"));
  std::vector<int> heights;
  for (const Root& r : g2.positives()) heights.push_back(height(r));
  CHECK(heights == std::vector<int>{1, 1, 2, 3, 4, 5});
}

TEST_CASE("reflection closure agrees with the root-string generator") {
  for (const auto& label : kTypes) {
    CAPTURE(label);
    const LieType type = LieType::parse(label);
    const RootSystem rs(type);
    const std::set<Root> oracle = root_string_positives(type);
    CHECK(std::set<Root>(rs.positives().begin(), rs.positives().end()) == oracle);
    CHECK(rs.positives().size() == expected_positive_count(type));
  }
}

TEST_CASE("canonical order is by height then coefficients") {
  const RootSystem rs(LieType::parse("D4"));
  const auto& pos = rs.positives();
  for (std::size_t k = 1; k < pos.size(); ++k) {
    const bool ordered = height(pos[k - 1]) < height(pos[k]) ||
                         (height(pos[k - 1]) == height(pos[k]) && pos[k - 1] < pos[k]);
    CHECK(ordered);
  }
}

TEST_CASE("height") {
  const RootSystem a2(LieType::parse("A2"));
  CHECK(height(a2, R({1, 0})) == 1);
  CHECK(height(a2, R({1, 1})) == 2);
  CHECK_THROWS_AS(height(a2, R({-1, 0})), PreconditionError);
  CHECK_THROWS_AS(height(a2, R({1, -1})), PreconditionError);
  CHECK_THROWS_AS(height(a2, R({2, 0})), PreconditionError);

  const RootSystem e8(LieType::parse("E8"));
  CHECK(height(e8, highest_root(e8)) == 29);
  int total = 0;
  for (const Root& r : e8.positives()) total += height(r);
  CHECK(total == 1240);
}

TEST_CASE("reflect") {
  const RootSystem a2(LieType::parse("A2"));
  CHECK(a2.reflect(1, R({1, 0})) == R({-1, 0}));
  CHECK(a2.reflect(1, R({0, 1})) == R({1, 1}));
  const RootSystem b2(LieType::parse("B2"));
  CHECK(b2.reflect(2, R({1, 0})) == R({1, 2}));
  CHECK_THROWS_AS(a2.reflect(0, R({1, 0})), PreconditionError);
  CHECK_THROWS_AS(a2.reflect(3, R({1, 0})), PreconditionError);

  for (const auto& label : kTypes) {
    const RootSystem rs(LieType::parse(label));
    for (int i = 1; i <= rs.rank(); ++i) {
      for (const Root& beta : rs.positives()) {
        CHECK(rs.reflect(i, rs.reflect(i, beta)) == beta);
        const Root image = rs.reflect(i, beta);
        if (beta == Root::simple(rs.rank(), i)) CHECK(image.is_negative());
        else CHECK(rs.index_of(image) >= 0);
      }
    }
  }
}

TEST_CASE("root_poset_covers") {
  CHECK(root_poset_covers(RootSystem(LieType::parse("A1"))).empty());
  const auto a2 = root_poset_covers(RootSystem(LieType::parse("A2")));
  const std::set<std::pair<Root, Root>> got(a2.begin(), a2.end());
  const std::set<std::pair<Root, Root>> want = {{R({1, 0}), R({1, 1})}, {R({0, 1}), R({1, 1})}};
  CHECK(got == want);

  for (const auto& label : kTypes) {
    CAPTURE(label);
    const RootSystem rs(LieType::parse(label));
    for (const auto& [lo, hi] : root_poset_covers(rs)) CHECK(height(hi) == height(lo) + 1);
    const auto ranks = poset_ranks(rs);
    for (std::size_t k = 0; k < rs.positives().size(); ++k) CHECK(ranks[k] == height(rs.positives()[k]) - 1);
  }
}

TEST_CASE("highest_root") {
  CHECK(highest_root(RootSystem(LieType::parse("A2"))) == R({1, 1}));
  CHECK(height(highest_root(RootSystem(LieType::parse("G2")))) == 5);
  CHECK(highest_root(RootSystem(LieType::parse("A1"))) == R({1}));
  CHECK(highest_root(RootSystem(LieType::parse("E8"))) == R({2, 3, 4, 6, 5, 4, 3, 2}));
}

TEST_CASE("height histogram is weakly decreasing and matches the exponents") {
  // Heights of E8 positive roots: #roots of height k minus #roots of height
  // k+1 counts the exponents equal to k.
  const std::map<std::string, std::vector<int>> exponents = {
      {"E6", {1, 4, 5, 7, 8, 11}}, {"E7", {1, 5, 7, 9, 11, 13, 17}}, {"E8", {1, 7, 11, 13, 17, 19, 23, 29}},
      {"F4", {1, 5, 7, 11}},       {"G2", {1, 5}},                   {"B3", {1, 3, 5}},
      {"D4", {1, 3, 3, 5}}};
  for (const auto& [label, exps] : exponents) {
    CAPTURE(label);
    const RootSystem rs(LieType::parse(label));
    std::map<int, int> hist;
    for (const Root& r : rs.positives()) ++hist[height(r)];
    const int top = hist.rbegin()->first;
    std::vector<int> derived;
    for (int h = 1; h <= top; ++h) {
      const int here = hist.count(h) ? hist[h] : 0;
      const int above = hist.count(h + 1) ? hist[h + 1] : 0;
      CHECK(here >= above);
      for (int k = 0; k < here - above; ++k) derived.push_back(h);
    }
    CHECK(derived == exps);
  }
}
