#include "petersch/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "petersch/billey.hpp"
#include "petersch/errors.hpp"
#include "petersch/peterson.hpp"

namespace petersch {

namespace {

using Check = std::function<std::string()>;  // returns "" on success, else a reason

void run_check(std::vector<CheckResult>& out, const RootSystem& rs, const std::string& name, const Check& check) {
  CheckResult result{rs.type().str() + ": " + name, false, {}};
  try {
    result.detail = check();
    result.passed = result.detail.empty();
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(result));
}

std::vector<Root> sorted_roots(std::vector<Root> roots) {
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Subsets used for per-J checks: all of them in small rank, otherwise the
// full set, singletons and complements of singletons.
std::vector<SimpleSubset> sample_subsets(int rank) {
  std::vector<SimpleSubset> out;
  if (rank <= 6) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << rank); ++m) out.push_back(SimpleSubset::from_mask(m));
    return out;
  }
  const auto full = SimpleSubset::full(rank);
  out.push_back(SimpleSubset{});
  out.push_back(full);
  for (int i = 1; i <= rank; ++i) {
    out.push_back(SimpleSubset{i});
    out.push_back(SimpleSubset::from_mask(full.mask() & ~(std::uint64_t{1} << (i - 1))));
  }
  return out;
}

std::size_t group_order(const LieType& type) {
  const std::size_t n = static_cast<std::size_t>(type.rank());
  std::size_t fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= k;
  switch (type.family()) {
    case Family::A:
      return fact * (n + 1);
    case Family::B:
    case Family::C:
      return fact << n;
    case Family::D:
      return fact << (n - 1);
    case Family::E:
      return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F:
      return 1152;
    case Family::G:
      return 12;
  }
  return 0;
}

}  // namespace

BruhatOracle::BruhatOracle(const RootSystem& rs) : words_(element_words(rs)) {
  elements_.reserve(words_.size());
  for (const Word& u : words_) elements_.push_back(element_of(rs, u));

  std::set<Element> reflections;
  for (const Word& u : words_) {
    for (int i = 1; i <= rs.rank(); ++i) reflections.insert(element_of(rs, u + Word{{i}} + u.reversed()));
  }

  const std::size_t n = words_.size();
  below_.assign(n, std::vector<bool>(n, false));
  // words_ is in shortlex order, so every element comes after anything shorter.
  for (std::size_t w = 0; w < n; ++w) {
    below_[w][w] = true;
    const std::size_t len = words_[w].length();
    for (const Element& t : reflections) {
      // w t, computed as the element of word(w) followed by a reduced word of t
      Element wt = elements_[w];
      const std::size_t t_idx = index_of(t);
      for (int j : words_[t_idx].letters) wt = wt.times_simple(rs, j);
      const std::size_t u = index_of(wt);
      if (words_[u].length() >= len) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (below_[u][k]) below_[w][k] = true;
      }
    }
  }
}

std::size_t BruhatOracle::index_of(const Element& x) const {
  auto it = std::find(elements_.begin(), elements_.end(), x);
  if (it == elements_.end()) throw InvariantError("element missing from enumeration");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<CheckResult> check_type_invariants(const RootSystem& rs) {
  std::vector<CheckResult> out;
  const auto& pos = rs.positives();
  const int n = rs.rank();

  run_check(out, rs, "positive root count", [&]() -> std::string {
    const auto want = expected_positive_count(rs.type());
    if (pos.size() != want) return "got " + std::to_string(pos.size()) + ", want " + std::to_string(want);
    return {};
  });

  run_check(out, rs, "poset rank equals height - 1", [&]() -> std::string {
    for (const auto& [lo, hi] : root_poset_covers(rs)) {
      if (height(hi) != height(lo) + 1) return "cover " + to_string(lo) + " < " + to_string(hi) + " skips a height";
    }
    const auto ranks = poset_ranks(rs);
    for (std::size_t k = 0; k < pos.size(); ++k) {
      if (ranks[k] != height(pos[k]) - 1) return "root " + to_string(pos[k]) + " has poset rank " + std::to_string(ranks[k]);
    }
    return {};
  });

  run_check(out, rs, "simple reflections permute positives minus alpha_i", [&]() -> std::string {
    for (int i = 1; i <= n; ++i) {
      const Root alpha = Root::simple(n, i);
      if (rs.reflect(i, alpha) != -alpha) return "s_" + std::to_string(i) + " does not negate alpha_" + std::to_string(i);
      std::set<Root> images;
      for (const Root& beta : pos) {
        if (beta == alpha) continue;
        Root image = rs.reflect(i, beta);
        if (rs.index_of(image) < 0 || image == alpha) return "s_" + std::to_string(i) + " maps " + to_string(beta) + " outside";
        if (rs.reflect(i, image) != beta) return "s_" + std::to_string(i) + " is not an involution";
        images.insert(std::move(image));
      }
      if (images.size() + 1 != pos.size()) return "s_" + std::to_string(i) + " is not injective";
    }
    return {};
  });

  run_check(out, rs, "height histogram weakly decreasing", [&]() -> std::string {
    std::map<int, int> hist;
    for (const Root& beta : pos) ++hist[height(beta)];
    int prev = hist.begin()->second;
    for (const auto& [h, count] : hist) {
      if (count > prev) return "height " + std::to_string(h) + " has " + std::to_string(count) + " roots";
      prev = count;
    }
    return {};
  });

  run_check(out, rs, "longest word is reduced and inverts every positive root", [&]() -> std::string {
    const Word w0 = longest_element_word(rs, SimpleSubset::full(n));
    if (w0.length() != pos.size()) return "length " + std::to_string(w0.length());
    if (!is_reduced(rs, w0)) return "not reduced";
    if (sorted_roots(inversion_roots(rs, w0)) != sorted_roots(pos)) return "inversion roots differ from positives";
    for (int j = 1; j <= n; ++j) {
      if (is_reduced(rs, w0 + Word{{j}})) return "s_" + std::to_string(j) + " is not a descent";
    }
    return {};
  });

  run_check(out, rs, "parabolic longest words invert exactly the roots supported on J", [&]() -> std::string {
    for (const SimpleSubset& J : sample_subsets(n)) {
      const Word wj = longest_element_word(rs, J);
      if (sorted_roots(inversion_roots(rs, wj)) != sorted_roots(positives_supported_on(rs, J))) {
        return "mismatch for J = " + J.str();
      }
      for (int j : J.indices()) {
        if (is_reduced(rs, wj + Word{{j}})) return "J = " + J.str() + ": s_" + std::to_string(j) + " not a descent";
      }
    }
    return {};
  });

  run_check(out, rs, "act respects concatenation", [&]() -> std::string {
    std::mt19937 gen(12345);
    std::uniform_int_distribution<int> letter(1, n);
    std::uniform_int_distribution<std::size_t> pick(0, pos.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      Word a, b;
      for (int k = 0; k < trial % 7; ++k) a.letters.push_back(letter(gen));
      for (int k = 0; k < trial % 5; ++k) b.letters.push_back(letter(gen));
      const Root beta = pos[pick(gen)];
      if (act(rs, a + b, beta) != act(rs, a, act(rs, b, beta))) {
        return "fails for " + to_string(a) + " + " + to_string(b);
      }
    }
    return {};
  });

  run_check(out, rs, "Monk values at w_0 sum to the total height", [&]() -> std::string {
    const auto full = SimpleSubset::full(n);
    BigInt monk_total = 0;
    for (int i = 1; i <= n; ++i) monk_total += monk_eval(rs, i, full).coeff;
    long long heights = 0;
    for (const Root& beta : pos) heights += height(beta);
    if (monk_total != heights) return "Monk sum " + monk_total.str() + " vs " + std::to_string(heights);
    return {};
  });

  if (rs.type().family() == Family::E) {
    run_check(out, rs, "Coxeter element of the full set has 3 reduced words", [&]() -> std::string {
      const auto words = reduced_words(rs, coxeter_word(SimpleSubset::full(n)));
      if (words.size() != 3) return "got " + std::to_string(words.size());
      return {};
    });
  }
  return out;
}

std::vector<CheckResult> check_group_exhaustive(const RootSystem& rs) {
  std::vector<CheckResult> out;
  const BruhatOracle bruhat(rs);
  const auto& words = bruhat.words();

  run_check(out, rs, "reduced word sets are consistent", [&]() -> std::string {
    for (const Word& w : words) {
      const Element x = element_of(rs, w);
      const auto all = reduced_words(rs, w);
      if (std::adjacent_find(all.begin(), all.end()) != all.end()) return "duplicate words for " + to_string(w);
      for (const Word& u : all) {
        if (!is_reduced(rs, u) || element_of(rs, u) != x) return to_string(u) + " is not a reduced word of " + to_string(w);
      }
    }
    return {};
  });

  run_check(out, rs, "DP equals backtracking oracle on all pairs with l(w) <= 12", [&]() -> std::string {
    for (const Word& w : words) {
      if (w.length() > 12) continue;
      for (const Word& v : words) {
        const auto dp = billey_eval_dp(rs, v, w);
        if (dp != billey_eval_bruteforce(rs, v, w)) return "v = " + to_string(v) + ", w = " + to_string(w);
        if (v.length() <= w.length() && !v.empty()) {
          const auto window = std::max(earliest_sound_window(rs, v, w), v.length());
          if (dp != billey_eval_bruteforce(rs, v, w, window)) return "windowed, v = " + to_string(v);
        }
      }
    }
    return {};
  });

  run_check(out, rs, "DP support equals Bruhat order", [&]() -> std::string {
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      for (std::size_t vi = 0; vi < words.size(); ++vi) {
        const bool nonzero = !billey_eval_dp(rs, words[vi], words[wi]).is_zero();
        if (nonzero != bruhat.leq(vi, wi)) return "v = " + to_string(words[vi]) + ", w = " + to_string(words[wi]);
      }
    }
    return {};
  });

  run_check(out, rs, "evaluations independent of the reduced word of w", [&]() -> std::string {
    const std::size_t per_element = rs.rank() <= 3 ? kReducedWordLimit : 8;
    for (const Word& w : words) {
      const auto alternatives = reduced_words(rs, w);
      for (std::size_t k = 0; k < alternatives.size() && k < per_element; ++k) {
        const Word& alt = alternatives[alternatives.size() - 1 - k];
        for (const Word& v : words) {
          if (billey_eval_dp(rs, v, alt) != billey_eval_dp(rs, v, w)) {
            return "v = " + to_string(v) + " differs on " + to_string(w) + " vs " + to_string(alt);
          }
        }
      }
    }
    return {};
  });
  return out;
}

std::vector<CheckResult> check_peterson_identities(const RootSystem& rs, bool all_structure_constants) {
  std::vector<CheckResult> out;
  const int n = rs.rank();
  std::vector<SimpleSubset> classes;
  for (const SimpleSubset& K : sample_subsets(n)) {
    if (!K.empty()) classes.push_back(K);
  }

  run_check(out, rs, "Giambelli product identity at fixed points J inside K", [&]() -> std::string {
    for (const SimpleSubset& K : classes) {
      const Rational ratio = giambelli_ratio(rs, K);
      for (std::uint64_t m = K.mask();; m = (m - 1) & K.mask()) {
        const SimpleSubset J = SimpleSubset::from_mask(m);
        const Word wj = longest_element_word(rs, J);
        BigInt product = 1;
        for (int i : K.indices()) product *= monk_eval_on(rs, i, wj).coeff;
        const BigInt p = class_eval(rs, K, wj).coeff;
        if (Rational(product) != ratio * Rational(p)) return "K = " + K.str() + ", J = " + J.str();
        if (J != K && product != 0) return "product nonzero at proper J = " + J.str();
        if (m == 0) break;
      }
    }
    return {};
  });

  if (rs.type().family() == Family::A) {
    run_check(out, rs, "type A consecutive ratio is |K|!", [&]() -> std::string {
      for (int lo = 1; lo <= n; ++lo) {
        for (int hi = lo; hi <= n && hi - lo < 4; ++hi) {
          std::vector<int> idx(hi - lo + 1);
          std::iota(idx.begin(), idx.end(), lo);
          long long fact = 1;
          for (int k = 2; k <= hi - lo + 1; ++k) fact *= k;
          const SimpleSubset K(idx);
          if (giambelli_ratio(rs, K) != Rational(fact)) return "K = " + K.str();
        }
      }
      return {};
    });
  }

  if (n <= 4) {
    run_check(out, rs, "evaluation table is inclusion-triangular", [&]() -> std::string {
      EvaluationTable::build(rs).check_triangular();
      return {};
    });
  }

  run_check(out, rs, "Monk expansions reproduce products at every fixed point", [&]() -> std::string {
    std::vector<std::pair<int, SimpleSubset>> cases;
    if (all_structure_constants) {
      for (int i = 1; i <= n; ++i) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) cases.emplace_back(i, SimpleSubset::from_mask(m));
      }
    } else {
      cases.emplace_back(2, SimpleSubset{1, 3, 4});
      cases.emplace_back(n, SimpleSubset{2, 4});
    }
    for (const auto& [i, K] : cases) {
      const auto expansion = monk_structure_constants(rs, i, K);
      for (const auto& [point, r] : monk_residuals(rs, i, K, expansion)) {
        if (r != 0) return "i = " + std::to_string(i) + ", K = " + K.str() + " residual at " + point.str();
      }
    }
    return {};
  });
  return out;
}

std::vector<CheckResult> run_verification(VerifyLevel level, std::ostream* progress) {
  std::vector<std::string> labels = {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "E6"};
  std::size_t exhaustive_limit = 48;
  int all_constants_rank = 3;
  if (level == VerifyLevel::full) {
    labels.insert(labels.end(), {"A4", "B4", "C4", "D4", "F4", "A5", "D5", "A8", "E7", "E8"});
    exhaustive_limit = 200;
    all_constants_rank = 4;
  }

  std::vector<CheckResult> results;
  auto append = [&](std::vector<CheckResult> more) {
    for (auto& r : more) {
      if (progress) *progress << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
      results.push_back(std::move(r));
    }
  };
  for (const auto& label : labels) {
    const RootSystem rs(LieType::parse(label));
    append(check_type_invariants(rs));
    if (group_order(rs.type()) <= exhaustive_limit) append(check_group_exhaustive(rs));
    if (rs.rank() <= 8) append(check_peterson_identities(rs, rs.rank() <= all_constants_rank));
  }
  return results;
}

}  // namespace petersch
