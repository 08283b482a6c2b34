#include "petersch/billey.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "petersch/errors.hpp"

namespace petersch {

std::string to_string(const LocalizationValue& value) {
  return value.coeff.str() + "*t^" + std::to_string(value.degree);
}

std::vector<int> inversion_heights(const RootSystem& rs, const Word& word) {
  std::vector<int> out;
  out.reserve(word.length());
  for (const Root& r : inversion_roots(rs, word)) out.push_back(height(r));
  return out;
}

BigInt weighted_subsequence_sum(const Word& pattern, const Word& word, std::span<const int> weights) {
  const std::size_t m = pattern.length();
  // partial[k]: weighted count of embeddings of pattern[0..k) into the scanned prefix of word.
  std::vector<BigInt> partial(m + 1);
  partial[0] = 1;
  for (std::size_t p = 0; p < word.length(); ++p) {
    for (std::size_t k = m; k >= 1; --k) {
      if (pattern[k - 1] == word[p] && partial[k - 1] != 0) partial[k] += partial[k - 1] * weights[p];
    }
  }
  return partial[m];
}

LocalizationValue billey_eval_dp(const RootSystem& rs, const Word& v, const Word& w) {
  require_reduced(rs, v, "v");
  const std::vector<int> heights = inversion_heights(rs, w);
  LocalizationValue out{0, static_cast<int>(v.length())};
  if (v.length() > w.length()) return out;
  // Index subsets determine their letter sequence, so distinct patterns
  // never share a subset and the per-pattern sums add up exactly.
  for (const Word& u : reduced_words(rs, v)) out.coeff += weighted_subsequence_sum(u, w, heights);
  return out;
}

std::size_t earliest_sound_window(const RootSystem& rs, const Word& v, const Word& w) {
  if (v.empty()) return 0;
  std::set<int> final_letters;
  for (const Word& u : reduced_words(rs, v)) final_letters.insert(u.letters.back());
  std::size_t window = 0;
  for (std::size_t p = 0; p < w.length(); ++p) {
    if (final_letters.count(w[p])) window = p + 1;
  }
  return window;
}

BigInt subset_scan_cost(std::size_t window, std::size_t length) {
  if (length > window) return 0;
  BigInt c = 1;
  for (std::size_t k = 0; k < length; ++k) c = c * (window - k) / (k + 1);
  return c;
}

namespace {

LocalizationValue backtrack(const RootSystem& rs, const Word& v, const Word& w, std::size_t window,
                            const std::vector<int>& heights) {
  const std::size_t m = v.length();
  // Left inversion set N(v) = { beta > 0 : v^{-1}(beta) < 0 }. A reduced word
  // is a prefix of some reduced word of v iff all its inversion roots lie in N(v).
  const Element v_inverse = element_of(rs, v.reversed());
  std::vector<bool> in_inversion_set(rs.positives().size(), false);
  for (std::size_t k = 0; k < rs.positives().size(); ++k) {
    in_inversion_set[k] = v_inverse.apply(rs.positives()[k]).is_negative();
  }

  BigInt total = 0;
  auto extend = [&](auto&& self, std::size_t start, std::size_t depth, const Element& x,
                    const BigInt& product) -> void {
    if (depth == m) {
      total += product;
      return;
    }
    for (std::size_t p = start; p + (m - depth) <= window; ++p) {
      const int idx = rs.index_of(x.column(w[p]));
      if (idx < 0 || !in_inversion_set[idx]) continue;
      self(self, p + 1, depth + 1, x.times_simple(rs, w[p]), product * heights[p]);
    }
  };
  extend(extend, 0, 0, Element::identity(rs.rank()), BigInt(1));
  return {total, static_cast<int>(m)};
}

LocalizationValue scan_subsets(const RootSystem& rs, const Word& v, const Word& w, std::size_t window,
                               const std::vector<int>& heights) {
  const std::size_t m = v.length();
  const auto patterns = reduced_words(rs, v);
  const std::set<Word> accepted(patterns.begin(), patterns.end());

  BigInt total = 0;
  std::vector<std::size_t> chosen(m);
  std::iota(chosen.begin(), chosen.end(), std::size_t{0});
  Word letters{std::vector<int>(m)};
  for (;;) {
    for (std::size_t k = 0; k < m; ++k) letters.letters[k] = w[chosen[k]];
    if (accepted.count(letters)) {
      BigInt product = 1;
      for (std::size_t p : chosen) product *= heights[p];
      total += product;
    }
    // next combination in lexicographic order
    std::size_t k = m;
    while (k > 0 && chosen[k - 1] == window - m + (k - 1)) --k;
    if (k == 0) break;
    ++chosen[k - 1];
    for (std::size_t l = k; l < m; ++l) chosen[l] = chosen[l - 1] + 1;
  }
  return {total, static_cast<int>(m)};
}

}  // namespace

LocalizationValue billey_eval_bruteforce(const RootSystem& rs, const Word& v, const Word& w,
                                         std::optional<std::size_t> window, OracleMode mode) {
  require_reduced(rs, v, "v");
  const std::vector<int> heights = inversion_heights(rs, w);
  const std::size_t m = v.length();

  std::size_t limit = w.length();
  if (window) {
    if (*window > w.length()) {
      throw PreconditionError("window " + std::to_string(*window) + " exceeds the length " +
                              std::to_string(w.length()) + " of w");
    }
    if (m > *window) {
      throw PreconditionError("window " + std::to_string(*window) + " is shorter than l(v) = " +
                              std::to_string(m));
    }
    const std::size_t sound = earliest_sound_window(rs, v, w);
    if (*window < sound) {
      throw PreconditionError("window " + std::to_string(*window) +
                              " is unsound: a final letter of some reduced word of v last occurs at position " +
                              std::to_string(sound) + "; earliest sound window is " + std::to_string(sound));
    }
    limit = *window;
  }
  if (m > limit) return {0, static_cast<int>(m)};
  if (m == 0) return {1, 0};
  return mode == OracleMode::backtrack ? backtrack(rs, v, w, limit, heights)
                                       : scan_subsets(rs, v, w, limit, heights);
}

}  // namespace petersch
