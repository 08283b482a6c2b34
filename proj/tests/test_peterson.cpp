#include <numeric>
#include <vector>

#include "doctest.h"
#include "petersch/errors.hpp"
#include "petersch/peterson.hpp"

using namespace petersch;

namespace {

Word W(std::vector<int> letters) { return Word{std::move(letters)}; }

}  // namespace

TEST_CASE("coxeter_word") {
  CHECK(coxeter_word(SimpleSubset{3}) == W({3}));
  CHECK(coxeter_word(SimpleSubset::full(8)) == W({1, 2, 3, 4, 5, 6, 7, 8}));
  CHECK(coxeter_word(SimpleSubset{3, 1}) == W({1, 3}));
  CHECK_THROWS_AS(coxeter_word(SimpleSubset{}), PreconditionError);
}

TEST_CASE("monk_eval") {
  const RootSystem a2(LieType::parse("A2"));
  CHECK(monk_eval(a2, 1, SimpleSubset{1, 2}) == LocalizationValue{2, 1});
  CHECK(monk_eval(a2, 2, SimpleSubset{1}).is_zero());
  CHECK(monk_eval(a2, 2, SimpleSubset{1}).degree == 1);
  CHECK_THROWS_AS(monk_eval(a2, 3, SimpleSubset{1}), PreconditionError);

  const RootSystem e8(LieType::parse("E8"));
  const auto full = SimpleSubset::full(8);
  BigInt total = 0;
  for (int i = 1; i <= 8; ++i) {
    const auto value = monk_eval(e8, i, full);
    CHECK(value == billey_eval_dp(e8, W({i}), longest_element_word(e8, full)));
    total += value.coeff;
  }
  CHECK(total == 1240);
}

TEST_CASE("giambelli_eval and ratio") {
  const RootSystem a2(LieType::parse("A2"));
  CHECK(giambelli_eval(a2, SimpleSubset{1}) == LocalizationValue{1, 1});
  CHECK(giambelli_eval(a2, SimpleSubset{1, 2}) == LocalizationValue{2, 2});
  CHECK(giambelli_ratio(a2, SimpleSubset{2}) == 1);
  CHECK(giambelli_ratio(a2, SimpleSubset{1, 2}) == 2);
  CHECK(giambelli_ratio(RootSystem(LieType::parse("A3")), SimpleSubset{1, 3}) == 1);
  CHECK_THROWS_AS(giambelli_eval(a2, SimpleSubset{}), PreconditionError);

  SUBCASE("E types agree with the backtracking oracle") {
    for (const char* label : {"E6", "E7"}) {
      const RootSystem rs(LieType::parse(label));
      const auto K = SimpleSubset::full(rs.rank());
      const Word v = coxeter_word(K);
      const Word w = longest_element_word(rs, K);
      CHECK(giambelli_eval(rs, K) == billey_eval_bruteforce(rs, v, w, earliest_sound_window(rs, v, w)));
      CHECK(reduced_words(rs, v).size() == 3);
    }
  }
}

TEST_CASE("consecutive K in type A has ratio |K|!") {
  const RootSystem a5(LieType::parse("A5"));
  for (int lo = 1; lo <= 5; ++lo) {
    for (int size = 1; size <= 4 && lo + size - 1 <= 5; ++size) {
      std::vector<int> idx(size);
      std::iota(idx.begin(), idx.end(), lo);
      long long fact = 1;
      for (int k = 2; k <= size; ++k) fact *= k;
      CHECK(giambelli_ratio(a5, SimpleSubset(idx)) == fact);
    }
  }
}

TEST_CASE("Giambelli identity at fixed points inside K") {
  for (const char* label : {"A3", "B3", "C3", "G2", "D4"}) {
    CAPTURE(label);
    const RootSystem rs(LieType::parse(label));
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << rs.rank()); ++k) {
      const auto K = SimpleSubset::from_mask(k);
      const Rational ratio = giambelli_ratio(rs, K);
      for (std::uint64_t j = k;; j = (j - 1) & k) {
        const Word wj = longest_element_word(rs, SimpleSubset::from_mask(j));
        BigInt product = 1;
        for (int i : K.indices()) product *= monk_eval_on(rs, i, wj).coeff;
        CHECK(Rational(product) == ratio * Rational(class_eval(rs, K, wj).coeff));
        if (j == 0) break;
      }
    }
  }
}

TEST_CASE("word independence end to end") {
  for (const char* label : {"A3", "E6"}) {
    const RootSystem rs(LieType::parse(label));
    const auto K = SimpleSubset::full(rs.rank());
    const Word w = longest_element_word(rs, K);
    const Word alt = w.reversed();
    CHECK_NOTHROW(require_same_element(rs, alt, w));
    CHECK(giambelli_eval_on(rs, K, alt) == giambelli_eval_on(rs, K, w));
    for (int i = 1; i <= rs.rank(); ++i) CHECK(monk_eval_on(rs, i, alt) == monk_eval_on(rs, i, w));
  }
  const RootSystem a3(LieType::parse("A3"));
  CHECK_THROWS_AS(require_same_element(a3, W({1, 2}), W({2, 1})), PreconditionError);
  CHECK_THROWS_AS(require_same_element(a3, W({1, 1}), Word{}), PreconditionError);
}

TEST_CASE("evaluation table is inclusion-triangular") {
  for (const char* label : {"A3", "B3", "G2"}) {
    const RootSystem rs(LieType::parse(label));
    const auto table = EvaluationTable::build(rs);
    CHECK(table.size() == (std::size_t{1} << (2 * rs.rank())));
    CHECK_NOTHROW(table.check_triangular());
    CHECK(table.at(SimpleSubset{}, SimpleSubset{}) == LocalizationValue{1, 0});
  }
}

TEST_CASE("monk_structure_constants hand-solved examples") {
  SUBCASE("A1: p_s1^2 = t p_s1") {
    const auto c = monk_structure_constants(RootSystem(LieType::parse("A1")), 1, SimpleSubset{1});
    CHECK(c == MonkExpansion{{SimpleSubset{1}, {1, 1}}});
  }
  SUBCASE("A2: p_s1^2 = t p_s1 + p_v{1,2}") {
    const auto c = monk_structure_constants(RootSystem(LieType::parse("A2")), 1, SimpleSubset{1});
    CHECK(c == MonkExpansion{{SimpleSubset{1}, {1, 1}}, {SimpleSubset{1, 2}, {1, 0}}});
  }
  SUBCASE("A2: p_s1 p_s2 = 2 p_v{1,2}") {
    const auto c = monk_structure_constants(RootSystem(LieType::parse("A2")), 1, SimpleSubset{2});
    CHECK(c == MonkExpansion{{SimpleSubset{1, 2}, {2, 0}}});
  }
  SUBCASE("multiplying the unit class") {
    const auto c = monk_structure_constants(RootSystem(LieType::parse("A3")), 2, SimpleSubset{});
    CHECK(c == MonkExpansion{{SimpleSubset{2}, {1, 0}}});
  }
  CHECK_THROWS_AS(monk_structure_constants(RootSystem(LieType::parse("A2")), 3, SimpleSubset{1}), PreconditionError);
  CHECK_THROWS_AS(monk_structure_constants(RootSystem(LieType::parse("A2")), 1, SimpleSubset{3}), PreconditionError);
}

TEST_CASE("Monk expansions reproduce products at every fixed point") {
  for (const char* label : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"}) {
    CAPTURE(label);
    const RootSystem rs(LieType::parse(label));
    for (int i = 1; i <= rs.rank(); ++i) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << rs.rank()); ++m) {
        const auto K = SimpleSubset::from_mask(m);
        const auto expansion = monk_structure_constants(rs, i, K);
        for (const auto& [point, r] : monk_residuals(rs, i, K, expansion)) CHECK(r == 0);
        for (const auto& [cls, c] : expansion) CHECK(c.coeff != 0);
      }
    }
  }
  SUBCASE("E6 spot check") {
    const RootSystem e6(LieType::parse("E6"));
    const SimpleSubset K{1, 3, 4};
    const auto expansion = monk_structure_constants(e6, 2, K);
    CHECK_FALSE(expansion.empty());
    for (const auto& [point, r] : monk_residuals(e6, 2, K, expansion)) CHECK(r == 0);
  }
}

TEST_CASE("residuals detect a wrong expansion") {
  const RootSystem a2(LieType::parse("A2"));
  MonkExpansion wrong{{SimpleSubset{1, 2}, {1, 0}}};  // true coefficient is 2
  const auto residuals = monk_residuals(a2, 1, SimpleSubset{2}, wrong);
  CHECK(residuals.at(SimpleSubset{1, 2}) == 2);
}
