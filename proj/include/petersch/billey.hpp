#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "petersch/rootsys.hpp"
#include "petersch/weyl.hpp"

namespace petersch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// coeff * t^degree. Zero keeps the degree it would have had.
struct LocalizationValue {
  BigInt coeff;
  int degree = 0;

  bool is_zero() const { return coeff == 0; }
  friend bool operator==(const LocalizationValue&, const LocalizationValue&) = default;
};

std::string to_string(const LocalizationValue& value);

/// Heights of the inversion roots r(1, w), ..., r(l, w) of a reduced word.
std::vector<int> inversion_heights(const RootSystem& rs, const Word& word);

/// Sum over index sets i_1 < ... < i_m with word[i_k] == pattern[k] of
/// weights[i_1] * ... * weights[i_m].
BigInt weighted_subsequence_sum(const Word& pattern, const Word& word, std::span<const int> weights);

/// p_v(w) / t^l(v), summed over all reduced words u of v with one weighted
/// subsequence pass per u.
LocalizationValue billey_eval_dp(const RootSystem& rs, const Word& v, const Word& w);

enum class OracleMode {
  backtrack,  // prune partial subwords by inversion-set containment
  subsets,    // scan every index subset of the window; slow, for fidelity runs
};

/// Smallest window covering the last occurrence in w of the final letter of
/// every reduced word of v (0 when no such letter occurs).
std::size_t earliest_sound_window(const RootSystem& rs, const Word& v, const Word& w);

/// Independent enumeration of the subwords of w (restricted to positions
/// 1..window) that are reduced words of v. Without a window the whole word
/// is scanned. Rejects windows that could drop a contributing subword.
LocalizationValue billey_eval_bruteforce(const RootSystem& rs, const Word& v, const Word& w,
                                         std::optional<std::size_t> window = std::nullopt,
                                         OracleMode mode = OracleMode::backtrack);

/// Number of index subsets the subsets oracle would scan.
BigInt subset_scan_cost(std::size_t window, std::size_t length);

}  // namespace petersch
